//! Combing pure braids into squares of the half-twists `Z_ij`.
//!
//! The last strand is peeled off repeatedly. For a pure word `w` on `n`
//! strands let `w'` be `w` with strand `n` deleted; then `f = w'^-1 w` only
//! moves strand `n`, and it is recovered from the loop it drags that strand
//! along: `(G_n) f = W G_n W^-1`, and `W` with every `G_n` erased is a word in
//! the images of the `Z_in^2`, which form a basis of the free group on
//! `G_1..G_{n-1}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{psi, signature, BraidWord, FreeWord};

/// One factor `Z_ij^{2 sign}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PureFactor {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

/// A pure braid written as a product of `Z_ij^{+-2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PureFactorList {
    pub n: usize,
    pub factors: Vec<PureFactor>,
}

/// The half-twist `Z_ij` as a word: `X_1` conjugated by
/// `X_2..X_{j-1}` and then, for `i >= 2`, by `X_1..X_{i-1}`.
pub fn z_word(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexOutOfRange { index: j as i64, bound: n });
    }
    let mut conj: Vec<i32> = (2..j as i32).collect();
    conj.extend(1..i as i32);
    let c = BraidWord::from_letters(n, conj)?;
    BraidWord::generator(n, 1)?.conj(&c)
}

impl PureFactorList {
    /// Product of the factors as a braid word.
    pub fn recompose(&self) -> Result<BraidWord> {
        let mut out = BraidWord::identity(self.n);
        for f in &self.factors {
            let z = z_word(f.i, f.j, self.n)?;
            out = out.mul(&z.pow(2 * f.sign as i64))?;
        }
        Ok(out)
    }
}

/// Deletes the strand that starts at position `n`; returns a word on `n-1` strands.
fn forget_last(w: &BraidWord) -> Vec<i32> {
    let n = w.strands();
    let mut p = n;
    let mut out = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize;
        if p == k {
            p = k + 1;
        } else if p == k + 1 {
            p = k;
        } else if p < k {
            out.push(l - l.signum());
        } else {
            out.push(l);
        }
    }
    out
}

/// The conjugating word `W` in `(G_n) f = W G_n W^-1`, with `G_n` erased.
fn dragged_loop(f: &BraidWord) -> FreeWord {
    let n = f.strands();
    let sig = signature(f);
    let (w, l) = sig.images()[n - 1]
        .as_conjugate_of_letter().expect("image of a generator is a conjugate of a generator");
    debug_assert_eq!(l, n as i32);
    w.kill(n, |j| j == n)
}

/// Expresses each `G_j`, `j < n`, in the basis `b_i` = loop of `Z_in^2`.
#[derive(Debug)]
struct LoopBasis {
    /// `gamma_in_b[j-1]` is `G_j` as a word in the `b_i` (free word of rank `n-1`).
    gamma_in_b: Vec<FreeWord>,
}

fn build_basis(n: usize) -> LoopBasis {
    let m = n - 1;
    let b: Vec<FreeWord> = (1..n)
        .map(|i| {
            let z = z_word(i, n, n).expect("valid pair");
            dragged_loop(&z.pow(2)).kill(m, |_| false)
        })
        .collect();
    // Each b_i is c_i G_{k_i} c_i^-1; solve triangularly.
    let mut solved: Vec<Option<FreeWord>> = vec![None; m];
    let parts: Vec<(FreeWord, usize)> = b
        .iter()
        .map(|bi| {
            let (c, l) = bi.as_conjugate_of_letter().expect("loop of a squared half-twist is a conjugate of a generator");
            assert!(l > 0, "loop orientation");
            (c, l as usize)
        })
        .collect();
    let mut remaining: Vec<usize> = (0..m).collect();
    while !remaining.is_empty() {
        let pos = remaining
            .iter()
            .position(|&i| {
                let (c, _) = &parts[i];
                c.letters().iter().all(|l| solved[l.unsigned_abs() as usize - 1].is_some())
            })
            .expect("loop basis is triangular");
        let i = remaining.remove(pos);
        let (c, k) = &parts[i];
        let subs: Vec<FreeWord> = solved.iter().map(|s| s.clone().unwrap_or_else(|| FreeWord::identity(m))).collect();
        let c_in_b = c.substitute(&subs);
        let bi = FreeWord::generator(m, i + 1).expect("index in range");
        // G_k = c^-1 b_i c
        solved[*k - 1] = Some(c_in_b.inverse().mul_unchecked(&bi).mul_unchecked(&c_in_b));
    }
    LoopBasis { gamma_in_b: solved.into_iter().map(|s| s.expect("all solved")).collect() }
}

fn basis(n: usize) -> Arc<LoopBasis> {
    static CACHE: RwLock<Option<HashMap<usize, Arc<LoopBasis>>>> = RwLock::new(None);
    if let Some(b) = CACHE.read().expect("cache lock").as_ref().and_then(|m| m.get(&n)) {
        return b.clone();
    }
    let b = Arc::new(build_basis(n));
    let mut guard = CACHE.write().expect("cache lock");
    guard.get_or_insert_with(HashMap::new).entry(n).or_insert(b).clone()
}

/// Combs a pure braid word into `Z_ij^{+-2}` factors.
pub fn comb(w: &BraidWord) -> Result<PureFactorList> {
    if !psi(w).is_identity() {
        return Err(Error::NotPure);
    }
    let n = w.strands();
    let mut blocks: Vec<Vec<PureFactor>> = Vec::new();
    let mut cur = w.free_reduced();
    for m in (2..=n).rev() {
        if cur.is_empty() {
            break;
        }
        let rest = forget_last(&cur);
        let f = BraidWord::from_letters_unchecked(m, rest.clone()).inverse().mul_unchecked(&cur);
        let lp = dragged_loop(&f).kill(m - 1, |_| false);
        let word_in_b = if m == 2 {
            lp
        } else {
            lp.substitute(&basis(m).gamma_in_b)
        };
        blocks.push(
            word_in_b
                .letters()
                .iter()
                .map(|&l| PureFactor { i: l.unsigned_abs() as usize, j: m, sign: l.signum() as i8 })
                .collect(),
        );
        if m == 2 {
            break;
        }
        cur = BraidWord::from_letters_unchecked(m - 1, rest).free_reduced();
    }
    let factors = blocks.into_iter().rev().flatten().collect();
    Ok(PureFactorList { n, factors })
}

impl fmt::Display for PureFactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, x) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "z{}_{}^{}", x.i, x.j, 2 * x.sign as i32)?;
        }
        Ok(())
    }
}

/// Parses factors `z<i>_<j>^2` and `z<i>_<j>^-2`; `1` is the empty list.
pub fn parse_pure_factors(s: &str, n: usize) -> Result<PureFactorList> {
    let mut factors = Vec::new();
    let t = s.trim();
    if !(t.is_empty() || t == "1") {
        for tok in t.split_whitespace() {
            let bad = || Error::Parse(format!("bad factor `{tok}`"));
            let body = tok.strip_prefix('z').ok_or_else(bad)?;
            let (pair, exp) = body.split_once('^').ok_or_else(bad)?;
            let (i, j) = pair.split_once('_').ok_or_else(bad)?;
            let num = |x: &str| if x.len() <= 6 { x.parse::<usize>().map_err(|_| bad()) } else { Err(bad()) };
            let (i, j) = (num(i)?, num(j)?);
            let sign = match exp {
                "2" => 1,
                "-2" => -1,
                _ => return Err(bad()),
            };
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::IndexOutOfRange { index: j as i64, bound: n });
            }
            factors.push(PureFactor { i, j, sign });
        }
    }
    Ok(PureFactorList { n, factors })
}
