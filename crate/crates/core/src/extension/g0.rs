//! The graph-form group on generators `g_i`, `i` in `{1,2,3,5,6,7,8,9}`,
//! with central involution `t`: `[g_i, g_j] = t` when the catalog entries
//! `T_i`, `T_j` share an endpoint and `1` otherwise.
//!
//! Elements are kept in the normal form `t^eps g1^b1 g2^b2 g3^b3 g5^b5 ... g9^b9`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::gn::split_power;
use crate::words::catalog::{catalog_t, frame_in_t, shares_endpoint, GRAPH_INDICES, T4_WORD as T4_IN_T};
use crate::words::BraidWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct G0Element {
    eps: u8,
    /// Exponents indexed by catalog index minus one; slot 3 (for 4) stays zero.
    b: [i64; 9],
}

fn parity(x: i64) -> u8 {
    x.rem_euclid(2) as u8
}

fn adjacency() -> &'static [[bool; 9]; 9] {
    static ADJ: OnceLock<[[bool; 9]; 9]> = OnceLock::new();
    ADJ.get_or_init(|| {
        let mut m = [[false; 9]; 9];
        for &i in &GRAPH_INDICES {
            for &j in &GRAPH_INDICES {
                m[i - 1][j - 1] = shares_endpoint(i, j);
            }
        }
        m
    })
}

/// Whether `T_i` and `T_j` share an endpoint.
pub fn adjacent(i: usize, j: usize) -> bool {
    adjacency()[i - 1][j - 1]
}

fn check_index(i: usize) -> Result<()> {
    if GRAPH_INDICES.contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i as i64, bound: 9 })
    }
}

impl G0Element {
    pub fn identity() -> Self {
        G0Element { eps: 0, b: [0; 9] }
    }

    pub fn tau() -> Self {
        G0Element { eps: 1, b: [0; 9] }
    }

    /// The generator `g_i`; `i = 4` is rejected.
    pub fn g(i: usize) -> Result<Self> {
        check_index(i)?;
        let mut x = Self::identity();
        x.b[i - 1] = 1;
        Ok(x)
    }

    pub fn from_parts(eps: u8, b: [i64; 9]) -> Result<Self> {
        if b[3] != 0 {
            return Err(Error::Unsupported("g4 is not a generator".into()));
        }
        Ok(G0Element { eps: eps % 2, b })
    }

    pub fn eps(&self) -> u8 {
        self.eps
    }

    /// Exponent of `g_i`.
    pub fn exponent(&self, i: usize) -> i64 {
        self.b[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.eps == 0 && self.b.iter().all(|&x| x == 0)
    }

    pub fn is_central(&self) -> bool {
        self.b.iter().all(|&x| x == 0)
    }

    pub fn with_eps(&self, eps: u8) -> Self {
        G0Element { eps: eps % 2, b: self.b }
    }

    /// Parity of the swaps across adjacent pairs needed to normalize `x y`.
    pub fn cocycle(x: &G0Element, y: &G0Element) -> u8 {
        let mut c = 0;
        for &i in &GRAPH_INDICES {
            if parity(x.b[i - 1]) == 0 {
                continue;
            }
            for &j in GRAPH_INDICES.iter().filter(|&&j| j < i) {
                if adjacent(i, j) {
                    c ^= parity(y.b[j - 1]);
                }
            }
        }
        c
    }

    pub fn mul(&self, y: &G0Element) -> G0Element {
        let mut b = [0; 9];
        for k in 0..9 {
            b[k] = self.b[k] + y.b[k];
        }
        G0Element { eps: self.eps ^ y.eps ^ Self::cocycle(self, y), b }
    }

    pub fn pow(&self, k: i64) -> G0Element {
        let c = Self::cocycle(self, self) as i64;
        let mut b = [0; 9];
        for (dst, src) in b.iter_mut().zip(self.b) {
            *dst = src * k;
        }
        G0Element { eps: parity(self.eps as i64 * k + c * (k * (k - 1) / 2)), b }
    }

    pub fn inverse(&self) -> G0Element {
        self.pow(-1)
    }

    pub fn commutator(x: &G0Element, y: &G0Element) -> G0Element {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }
}

/// Normalized product.
pub fn g0g_mul(x: &G0Element, y: &G0Element) -> G0Element {
    x.mul(y)
}

/// How `T_i` sits relative to `T_k` under the min-to-max polarization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Same,
    /// No shared endpoint.
    Apart,
    /// The shared endpoint is the end of one and the origin of the other.
    Orderly,
    /// The shared endpoint is the origin of both or the end of both.
    AntiOrderly,
}

/// Relation of `T_i` to `T_k`, from endpoints and polarization.
pub fn relation(i: usize, k: usize) -> Relation {
    if i == k {
        return Relation::Same;
    }
    let (oi, ei) = catalog_t(i).expect("catalog index").endpoints;
    let (ok, ek) = catalog_t(k).expect("catalog index").endpoints;
    if ei == ok || ek == oi {
        Relation::Orderly
    } else if oi == ok || ei == ek {
        Relation::AntiOrderly
    } else {
        Relation::Apart
    }
}

/// Image of `g_i` under `T_k` (`inverse = false`) or `T_k^-1`, from the
/// four-case tables; `k != 4`.
pub fn table_image(i: usize, k: usize, inverse: bool) -> G0Element {
    let gi = G0Element::g(i).expect("generator index");
    match relation(i, k) {
        Relation::Same => gi.inverse().mul(&G0Element::tau()),
        Relation::Apart => gi,
        Relation::Orderly => {
            let gk = G0Element::g(k).expect("generator index");
            if inverse {
                gi.mul(&gk)
            } else {
                gk.mul(&gi)
            }
        }
        Relation::AntiOrderly => {
            let gk = G0Element::g(k).expect("generator index");
            if inverse {
                gk.inverse().mul(&gi)
            } else {
                gi.mul(&gk.inverse())
            }
        }
    }
}

fn images(k: usize, inverse: bool) -> &'static [G0Element; 9] {
    static TABLES: OnceLock<Vec<[G0Element; 9]>> = OnceLock::new();
    let t = TABLES.get_or_init(|| {
        let mut v = Vec::with_capacity(18);
        for k in 1..=9 {
            for inv in [false, true] {
                v.push(std::array::from_fn(|i| {
                    if i == 3 || k == 4 {
                        G0Element::identity()
                    } else {
                        table_image(i + 1, k, inv)
                    }
                }));
            }
        }
        v
    });
    &t[(k - 1) * 2 + inverse as usize]
}

fn apply_table(k: usize, inverse: bool, x: &G0Element) -> G0Element {
    let imgs = images(k, inverse);
    let mut out = G0Element { eps: x.eps, b: [0; 9] };
    for &i in &GRAPH_INDICES {
        let e = x.b[i - 1];
        if e != 0 {
            out = out.mul(&imgs[i - 1].pow(e));
        }
    }
    out
}


/// Image of `x` under `T_k^{sign}`; `T_4` acts through its defining word.
pub fn g0g_act_t(k: i32, x: &G0Element) -> Result<G0Element> {
    let idx = k.unsigned_abs() as usize;
    if !(1..=9).contains(&idx) {
        return Err(Error::IndexOutOfRange { index: k as i64, bound: 9 });
    }
    if idx == 4 {
        let mut out = x.clone();
        let letters: Vec<i32> = if k > 0 {
            T4_IN_T.to_vec()
        } else {
            T4_IN_T.iter().rev().map(|l| -l).collect()
        };
        for l in letters {
            out = apply_table(l.unsigned_abs() as usize, l < 0, &out);
        }
        return Ok(out);
    }
    Ok(apply_table(idx, k < 0, x))
}

/// Image of `x` under a sequence of signed catalog letters.
pub fn g0g_act_t_word(letters: &[i32], x: &G0Element) -> Result<G0Element> {
    let mut out = x.clone();
    for &l in letters {
        out = g0g_act_t(l, &out)?;
    }
    Ok(out)
}

/// Image of `x` under a nine-strand braid word in frame letters, each
/// translated into catalog letters.
pub fn g0g_act_braid(w: &BraidWord, x: &G0Element) -> Result<G0Element> {
    if w.strands() != 9 {
        return Err(Error::StrandMismatch(w.strands(), 9));
    }
    let mut out = x.clone();
    for &l in w.letters() {
        for t in frame_in_t(l) {
            out = apply_table(t.unsigned_abs() as usize, t < 0, &out);
        }
    }
    Ok(out)
}

impl fmt::Display for G0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}", self.eps)?;
        for &i in &GRAPH_INDICES {
            write!(f, " g{}^{}", i, self.b[i - 1])?;
        }
        Ok(())
    }
}

/// Parses a product of factors `t^e`, `g<i>^b` (exponent optional).
pub fn parse_g0(s: &str) -> Result<G0Element> {
    let mut out = G0Element::identity();
    let t = s.trim();
    if t.is_empty() || t == "1" {
        return Ok(out);
    }
    for tok in t.split_whitespace() {
        let (base, exp) = split_power(tok)?;
        let g = if base == "t" {
            G0Element::tau()
        } else {
            let idx = base
                .strip_prefix('g')
                .and_then(|d| if d.len() == 1 { d.parse::<usize>().ok() } else { None })
                .ok_or_else(|| Error::Parse(format!("bad factor `{tok}`")))?;
            G0Element::g(idx).map_err(|_| Error::Parse(format!("bad generator `{tok}`")))?
        };
        out = out.mul(&g.pow(exp));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: usize) -> G0Element {
        G0Element::g(i).unwrap()
    }

    #[test]
    fn adjacency_counts() {
        let mut adj = 0;
        let mut apart = 0;
        for (a, &i) in GRAPH_INDICES.iter().enumerate() {
            for &j in &GRAPH_INDICES[a + 1..] {
                if adjacent(i, j) {
                    adj += 1;
                } else {
                    apart += 1;
                }
            }
        }
        assert_eq!((adj, apart), (9, 19));
    }

    #[test]
    fn products() {
        assert_eq!(g(1).mul(&g(2)), g(2).mul(&g(1)).mul(&G0Element::tau()));
        assert_eq!(g(1).mul(&g(5)), g(5).mul(&g(1)));
        assert!(G0Element::tau().mul(&G0Element::tau()).is_identity());
        assert!(G0Element::g(4).is_err());
    }

    #[test]
    fn action_examples() {
        assert_eq!(g0g_act_t(2, &g(1)).unwrap(), g(2).mul(&g(1)));
        assert_eq!(g0g_act_t(2, &g(2)).unwrap(), g(2).inverse().mul(&G0Element::tau()));
        assert_eq!(g0g_act_t(7, &g(1)).unwrap(), g(1));
    }

    #[test]
    fn letters_round_trip() {
        for k in 1..=9i32 {
            for &i in &GRAPH_INDICES {
                let x = g(i);
                assert_eq!(g0g_act_t(-k, &g0g_act_t(k, &x).unwrap()).unwrap(), x, "T{k} on g{i}");
                assert_eq!(g0g_act_t(k, &g0g_act_t(-k, &x).unwrap()).unwrap(), x, "T{k}^-1 on g{i}");
            }
        }
    }

    #[test]
    fn frame_translation() {
        let x3 = BraidWord::from_letters(9, [3]).unwrap();
        for &i in &GRAPH_INDICES {
            let via_t = g0g_act_t_word(&[-2, 3, 2], &g(i)).unwrap();
            assert_eq!(g0g_act_braid(&x3, &g(i)).unwrap(), via_t);
            let x1 = BraidWord::from_letters(9, [1]).unwrap();
            assert_eq!(g0g_act_braid(&x1, &g(i)).unwrap(), g0g_act_t(1, &g(i)).unwrap());
        }
    }

    #[test]
    fn text_round_trip() {
        let x = g(3).mul(&g(2)).mul(&g(9).pow(-2));
        assert_eq!(parse_g0(&x.to_string()).unwrap(), x);
        assert!(parse_g0("g4").is_err());
        assert!(parse_g0("g10").is_err());
    }
}
