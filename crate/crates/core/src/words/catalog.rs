//! The nine half-twists `T_1..T_9` on nine strands.
//!
//! `T_i` for `i != 4` is solved from the frame identity
//! `X_1=T_1, X_2=T_2, X_3=T_2^-1 T_3 T_2, X_4=T_5, X_5=T_9, X_6=T_9 T_8 T_9^-1, X_7=T_7, X_8=T_6`,
//! and `T_4 = T_2^-1 T_3 T_7^-1 T_8 T_5 T_8^-1 T_7 T_3^-1 T_2`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::words::braid::BraidWord;
use crate::words::halftwist::HalfTwist;

pub const STRANDS: usize = 9;

/// Catalog indices that are generators of the graph-form group (all but 4).
pub const GRAPH_INDICES: [usize; 8] = [1, 2, 3, 5, 6, 7, 8, 9];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub index: usize,
    pub halftwist: HalfTwist,
    /// `(origin, end)` with `origin < end`.
    pub endpoints: (usize, usize),
}

impl CatalogEntry {
    pub fn word(&self) -> BraidWord {
        self.halftwist.as_word()
    }
}

fn x(letters: &[i32]) -> BraidWord {
    BraidWord::from_letters_unchecked(STRANDS, letters.to_vec())
}

fn build(i: usize) -> HalfTwist {
    let (conj, base): (BraidWord, usize) = match i {
        1 => (x(&[]), 1),
        2 => (x(&[]), 2),
        3 => (x(&[-2]), 3),
        5 => (x(&[]), 4),
        6 => (x(&[]), 8),
        7 => (x(&[]), 7),
        8 => (x(&[5]), 6),
        9 => (x(&[]), 5),
        4 => {
            // T_4 = (T_5)_{T_8^-1 T_7 T_3^-1 T_2}
            let mut c = BraidWord::identity(STRANDS);
            for k in [-8, 7, -3, 2i32] {
                let w = build(k.unsigned_abs() as usize).as_word();
                c = c.mul_unchecked(&if k < 0 { w.inverse() } else { w });
            }
            (c, 4)
        }
        _ => unreachable!(),
    };
    HalfTwist::new(conj, base).expect("catalog entries are well formed")
}

fn table() -> &'static [CatalogEntry; 9] {
    static TABLE: OnceLock<[CatalogEntry; 9]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|k| {
            let halftwist = build(k + 1);
            let endpoints = halftwist.endpoints();
            CatalogEntry { index: k + 1, halftwist, endpoints }
        })
    })
}

/// The catalog entry `T_i`.
pub fn catalog_t(i: usize) -> Result<CatalogEntry> {
    if !(1..=9).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i as i64, bound: 9 });
    }
    Ok(table()[i - 1].clone())
}

/// Word of `T_i^{sign}` for a signed catalog index.
pub fn t_letter(k: i32) -> Result<BraidWord> {
    let i = k.unsigned_abs() as usize;
    if !(1..=9).contains(&i) {
        return Err(Error::IndexOutOfRange { index: k as i64, bound: 9 });
    }
    let w = table()[i - 1].word();
    Ok(if k < 0 { w.inverse() } else { w })
}

/// Word of a product of signed catalog letters, e.g. `[-2, 3, 2]` for `T_2^-1 T_3 T_2`.
pub fn t_letters(ks: &[i32]) -> Result<BraidWord> {
    let mut out = BraidWord::identity(STRANDS);
    for &k in ks {
        out = out.mul_unchecked(&t_letter(k)?);
    }
    Ok(out)
}

/// Signed catalog letters spelling the frame generator `X_k^{sign}`.
pub fn frame_in_t(k: i32) -> Vec<i32> {
    let s = k.signum();
    match k.unsigned_abs() {
        1 => vec![s],
        2 => vec![2 * s],
        3 => vec![-2, 3 * s, 2],
        4 => vec![5 * s],
        5 => vec![9 * s],
        6 => vec![9, 8 * s, -9],
        7 => vec![7 * s],
        8 => vec![6 * s],
        _ => panic!("frame index {k} out of range for nine strands"),
    }
}

/// Whether two catalog entries share exactly one endpoint.
pub fn shares_endpoint(i: usize, j: usize) -> bool {
    let (a, b) = table()[i - 1].endpoints;
    let (c, d) = table()[j - 1].endpoints;
    i != j && (a == c || a == d || b == c || b == d)
}

/// A defining relation `lhs = rhs` between words in signed catalog letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogRelation {
    pub name: String,
    pub lhs: Vec<i32>,
    pub rhs: Vec<i32>,
}

/// Signed catalog letters spelling `T_4` in the other entries.
pub const T4_WORD: [i32; 9] = [-2, 3, -7, 8, 5, -8, 7, -3, 2];

const ADJACENT_PAIRS: [(i32, i32); 9] = [(1, 2), (1, 3), (2, 3), (3, 5), (5, 8), (5, 9), (6, 7), (7, 8), (8, 9)];

/// The relations among `T_i`, `i != 4`: braid relations for the adjacent
/// pairs, commutation for the disjoint pairs and two extra commutations;
/// with `with_t4`, also the definition of `T_4`.
pub fn catalog_relations(with_t4: bool) -> Vec<CatalogRelation> {
    let mut out = Vec::new();
    for &(i, j) in &ADJACENT_PAIRS {
        out.push(CatalogRelation { name: format!("<t{i},t{j}>"), lhs: vec![i, j, i], rhs: vec![j, i, j] });
    }
    for (a, &i) in GRAPH_INDICES.iter().enumerate() {
        for &j in &GRAPH_INDICES[a + 1..] {
            let (i, j) = (i as i32, j as i32);
            if !ADJACENT_PAIRS.contains(&(i, j)) {
                out.push(CatalogRelation { name: format!("[t{i},t{j}]"), lhs: vec![i, j], rhs: vec![j, i] });
            }
        }
    }
    for (a, b, c) in [(1, 2, 3), (5, 8, 9)] {
        let conj = [-b, c, b];
        let mut lhs = vec![a];
        lhs.extend(conj);
        let mut rhs = conj.to_vec();
        rhs.push(a);
        out.push(CatalogRelation { name: format!("[t{a},t{b}^-1 t{c} t{b}]"), lhs, rhs });
    }
    if with_t4 {
        out.push(CatalogRelation { name: "t4 definition".into(), lhs: vec![4], rhs: T4_WORD.to_vec() });
    }
    out
}
