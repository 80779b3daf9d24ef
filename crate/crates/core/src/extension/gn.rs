//! The chain-form central extension `G(n)` with generators `s1, u1..u_{n-1}`
//! and central involution `v`.
//!
//! Elements are kept in the normal form `v^eps s1^a u1^b1 ... u_{n-1}^b_{n-1}`.
//! The commutator form is `Q(S1, V2) = Q(Vi, Vi+1) = 1`, all other basis pairs 0.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::BraidWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GnElement {
    n: usize,
    eps: u8,
    a: i64,
    b: Vec<i64>,
}

fn parity(x: i64) -> u8 {
    x.rem_euclid(2) as u8
}

impl GnElement {
    pub fn identity(n: usize) -> Self {
        GnElement { n, eps: 0, a: 0, b: vec![0; n.saturating_sub(1)] }
    }

    pub fn from_parts(n: usize, eps: u8, a: i64, b: Vec<i64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Size(format!("G(n) needs n >= 2, got {n}")));
        }
        if b.len() != n - 1 {
            return Err(Error::Size(format!("expected {} u-exponents, got {}", n - 1, b.len())));
        }
        Ok(GnElement { n, eps: eps % 2, a, b })
    }

    /// The central involution `v`.
    pub fn nu(n: usize) -> Self {
        GnElement { eps: 1, ..Self::identity(n) }
    }

    pub fn s1(n: usize) -> Self {
        GnElement { a: 1, ..Self::identity(n) }
    }

    /// The generator `u_i`, `1 <= i <= n-1`.
    pub fn u(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i as i64, bound: n - 1 });
        }
        let mut g = Self::identity(n);
        g.b[i - 1] = 1;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eps(&self) -> u8 {
        self.eps
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        self.eps == 0 && self.is_central()
    }

    /// Central elements are exactly those with trivial linear part.
    pub fn is_central(&self) -> bool {
        self.a == 0 && self.b.iter().all(|&x| x == 0)
    }

    /// Same element with the `v` bit cleared.
    pub fn without_nu(&self) -> Self {
        GnElement { eps: 0, ..self.clone() }
    }

    fn b_at(&self, i: usize) -> i64 {
        // 1-based, zero outside range
        if i >= 1 && i <= self.b.len() {
            self.b[i - 1]
        } else {
            0
        }
    }

    /// Parity of the correction `c(x, y)` collected when normalizing `x y`.
    pub fn cocycle(x: &GnElement, y: &GnElement) -> u8 {
        let mut c = parity(y.a) & parity(x.b_at(2));
        for i in 1..y.b.len() {
            c ^= parity(y.b[i - 1]) & parity(x.b[i]);
        }
        c
    }

    fn check(&self, other: &GnElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn mul(&self, other: &GnElement) -> Result<GnElement> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, y: &GnElement) -> GnElement {
        GnElement {
            n: self.n,
            eps: self.eps ^ y.eps ^ Self::cocycle(self, y),
            a: self.a + y.a,
            b: self.b.iter().zip(&y.b).map(|(p, q)| p + q).collect(),
        }
    }

    pub fn inverse(&self) -> GnElement {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> GnElement {
        let c = Self::cocycle(self, self) as i64;
        let tri = k * (k - 1) / 2;
        GnElement {
            n: self.n,
            eps: parity(self.eps as i64 * k + c * tri),
            a: self.a * k,
            b: self.b.iter().map(|x| x * k).collect(),
        }
    }

    /// The chain form `Q` on linear parts, mod 2.
    pub fn form(x: &GnElement, y: &GnElement) -> u8 {
        Self::cocycle(x, y) ^ Self::cocycle(y, x)
    }
}

/// `x y`, normalized.
pub fn gn_mul(x: &GnElement, y: &GnElement) -> Result<GnElement> {
    x.mul(y)
}

/// `x y x^-1 y^-1`; always central.
pub fn gn_commutator(x: &GnElement, y: &GnElement) -> Result<GnElement> {
    x.check(y)?;
    Ok(x.mul_unchecked(y).mul_unchecked(&x.inverse()).mul_unchecked(&y.inverse()))
}

/// The elements `s_ij`, `1 <= i < j <= n`.
pub fn gn_s_ij(i: usize, j: usize, n: usize) -> Result<GnElement> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexOutOfRange { index: j as i64, bound: n });
    }
    let s1 = GnElement::s1(n);
    let u = |k: usize| GnElement::u(n, k).expect("index checked");
    let mut out = GnElement::identity(n);
    if i >= 2 {
        out = GnElement::nu(n);
    }
    let upper_stop = if i == 1 { 2 } else { 1 };
    // u_{j-1} ... u_{upper_stop}
    for k in (upper_stop..j).rev() {
        out = out.mul_unchecked(&u(k));
    }
    if i >= 3 {
        for k in (2..i).rev() {
            out = out.mul_unchecked(&u(k));
        }
    }
    Ok(out.mul_unchecked(&s1))
}

/// Images of `s1, u1..u_{n-1}` under the action of one signed frame letter.
#[derive(Debug)]
struct ActTables {
    forward: Vec<Vec<GnElement>>,
    backward: Vec<Vec<GnElement>>,
}

fn forward_images(n: usize, k: usize) -> Vec<GnElement> {
    let s1 = GnElement::s1(n);
    let nu = GnElement::nu(n);
    let u = |i: usize| GnElement::u(n, i).expect("index in range");
    let mut imgs = Vec::with_capacity(n);
    imgs.push(if k == 2 { u(2).mul_unchecked(&s1) } else { s1 });
    for i in 1..n {
        let img = if i == k {
            u(k).inverse().mul_unchecked(&nu)
        } else if i + 1 == k || i == k + 1 {
            u(k).mul_unchecked(&u(i))
        } else {
            u(i)
        };
        imgs.push(img);
    }
    imgs
}

fn apply_images(imgs: &[GnElement], x: &GnElement) -> GnElement {
    let mut out = GnElement { eps: x.eps, ..GnElement::identity(x.n) };
    if x.a != 0 {
        out = out.mul_unchecked(&imgs[0].pow(x.a));
    }
    for (i, &e) in x.b.iter().enumerate() {
        if e != 0 {
            out = out.mul_unchecked(&imgs[i + 1].pow(e));
        }
    }
    out
}

fn generators(n: usize) -> Vec<GnElement> {
    let mut g = vec![GnElement::s1(n)];
    g.extend((1..n).map(|i| GnElement::u(n, i).expect("index in range")));
    g
}

fn tables(n: usize) -> Arc<ActTables> {
    static CACHE: RwLock<Option<HashMap<usize, Arc<ActTables>>>> = RwLock::new(None);
    if let Some(t) = CACHE.read().expect("cache lock").as_ref().and_then(|m| m.get(&n)) {
        return t.clone();
    }
    let forward: Vec<Vec<GnElement>> = (1..n).map(|k| forward_images(n, k)).collect();
    // The action of a letter has order 4, so its inverse is its cube.
    let backward = forward
        .iter()
        .map(|imgs| {
            generators(n)
                .iter()
                .map(|g| apply_images(imgs, &apply_images(imgs, &apply_images(imgs, g))))
                .collect()
        })
        .collect();
    let t = Arc::new(ActTables { forward, backward });
    let mut guard = CACHE.write().expect("cache lock");
    guard.get_or_insert_with(HashMap::new).entry(n).or_insert(t).clone()
}

/// Image of `x` under one signed frame letter.
pub fn gn_act(k: i32, x: &GnElement) -> Result<GnElement> {
    let idx = k.unsigned_abs() as usize;
    if k == 0 || idx >= x.n {
        return Err(Error::IndexOutOfRange { index: k as i64, bound: x.n - 1 });
    }
    let t = tables(x.n);
    let imgs = if k > 0 { &t.forward[idx - 1] } else { &t.backward[idx - 1] };
    Ok(apply_images(imgs, x))
}

/// Image of `x` under a braid word, letters applied left to right.
pub fn gn_act_word(w: &BraidWord, x: &GnElement) -> Result<GnElement> {
    if w.strands() != x.n {
        return Err(Error::StrandMismatch(w.strands(), x.n));
    }
    let t = tables(x.n);
    let mut out = x.clone();
    for &k in w.letters() {
        let idx = k.unsigned_abs() as usize - 1;
        let imgs = if k > 0 { &t.forward[idx] } else { &t.backward[idx] };
        out = apply_images(imgs, &out);
    }
    Ok(out)
}

impl fmt::Display for GnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^{} s1^{}", self.eps, self.a)?;
        for (i, e) in self.b.iter().enumerate() {
            write!(f, " u{}^{}", i + 1, e)?;
        }
        Ok(())
    }
}

/// Parses a product of factors `v^e`, `s1^a`, `u<i>^b` (exponent optional),
/// multiplied in the order written. `1` is the identity.
pub fn parse_gn(s: &str, n: usize) -> Result<GnElement> {
    if n < 2 {
        return Err(Error::Size(format!("G(n) needs n >= 2, got {n}")));
    }
    crate::words::check_text_size(n)?;
    let mut out = GnElement::identity(n);
    let t = s.trim();
    if t.is_empty() || t == "1" {
        return Ok(out);
    }
    for tok in t.split_whitespace() {
        let (base, exp) = split_power(tok)?;
        let g = match base {
            "v" => GnElement::nu(n),
            "s1" => GnElement::s1(n),
            _ => {
                let idx = base
                    .strip_prefix('u')
                    .and_then(|d| if d.bytes().all(|c| c.is_ascii_digit()) && d.len() <= 6 { d.parse::<usize>().ok() } else { None })
                    .ok_or_else(|| Error::Parse(format!("bad factor `{tok}`")))?;
                GnElement::u(n, idx)?
            }
        };
        out = out.mul_unchecked(&g.pow(exp));
    }
    Ok(out)
}

/// Splits `base^exp` into its parts; a missing exponent means 1.
pub(crate) fn split_power(tok: &str) -> Result<(&str, i64)> {
    match tok.split_once('^') {
        None => Ok((tok, 1)),
        Some((b, e)) => {
            let digits = e.strip_prefix('-').unwrap_or(e);
            if b.is_empty() || digits.is_empty() || digits.len() > 12 || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(Error::Parse(format!("bad exponent in `{tok}`")));
            }
            let exp = e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
            Ok((b, exp))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, eps: u8, a: i64, b: &[i64]) -> GnElement {
        GnElement::from_parts(n, eps, a, b.to_vec()).unwrap()
    }

    fn u(i: usize) -> GnElement {
        GnElement::u(9, i).unwrap()
    }

    fn unit(i: usize) -> Vec<i64> {
        let mut v = vec![0; 8];
        v[i - 1] = 1;
        v
    }

    #[test]
    fn ordered_products() {
        let mut b = vec![0; 8];
        b[0] = 1;
        b[1] = 1;
        assert_eq!(gn_mul(&u(1), &u(2)).unwrap(), e(9, 0, 0, &b));
        assert_eq!(gn_mul(&u(2), &u(1)).unwrap(), e(9, 1, 0, &b));
        let s1 = GnElement::s1(9);
        let x = s1.mul(&u(3)).unwrap().mul(&s1.inverse()).unwrap().mul(&u(3).inverse()).unwrap();
        assert!(x.is_identity());
    }

    #[test]
    fn commutators() {
        let s1 = GnElement::s1(9);
        assert_eq!(gn_commutator(&s1, &u(2)).unwrap(), GnElement::nu(9));
        assert_eq!(gn_commutator(&u(2), &u(3)).unwrap(), GnElement::nu(9));
        assert!(gn_commutator(&u(1), &u(3)).unwrap().is_identity());
        assert!(gn_commutator(&s1, &u(1)).unwrap().is_identity());
    }

    #[test]
    fn s_ij_values() {
        assert_eq!(gn_s_ij(1, 2, 9).unwrap(), e(9, 0, 1, &[0; 8]));
        // u2 s1 = v s1 u2 in the s1-first normal form
        assert_eq!(gn_s_ij(1, 3, 9).unwrap(), e(9, 1, 1, &unit(2)));
        let mut b = unit(1);
        b[1] = 1;
        assert_eq!(gn_s_ij(2, 3, 9).unwrap(), e(9, 1, 1, &b));
        assert!(gn_s_ij(3, 3, 9).is_err());
        assert!(gn_s_ij(1, 10, 9).is_err());
    }

    #[test]
    fn action_examples() {
        assert_eq!(gn_act(1, &u(1)).unwrap(), u(1).inverse().mul(&GnElement::nu(9)).unwrap());
        assert_eq!(gn_act(1, &u(1)).unwrap(), e(9, 1, 0, &[-1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(gn_act(2, &GnElement::s1(9)).unwrap(), u(2).mul(&GnElement::s1(9)).unwrap());
        assert_eq!(gn_act(1, &u(3)).unwrap(), u(3));
        assert!(gn_act(9, &u(3)).is_err());
    }

    #[test]
    fn inverse_letters_round_trip() {
        for k in 1..9i32 {
            for g in generators(9) {
                assert_eq!(gn_act(-k, &gn_act(k, &g).unwrap()).unwrap(), g);
                assert_eq!(gn_act(k, &gn_act(-k, &g).unwrap()).unwrap(), g);
            }
        }
    }

    #[test]
    fn square_of_first_letter_is_conjugation_by_s1() {
        let s1 = GnElement::s1(9);
        for g in generators(9) {
            let lhs = gn_act(1, &gn_act(1, &g).unwrap()).unwrap();
            let rhs = s1.inverse().mul(&g).unwrap().mul(&s1).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn text_round_trip() {
        let x = e(4, 1, -2, &[3, 0, -1]);
        assert_eq!(x.to_string(), "v^1 s1^-2 u1^3 u2^0 u3^-1");
        assert_eq!(parse_gn(&x.to_string(), 4).unwrap(), x);
        assert_eq!(parse_gn("u2 u1", 4).unwrap(), gn_mul(&GnElement::u(4, 2).unwrap(), &GnElement::u(4, 1).unwrap()).unwrap());
        assert!(parse_gn("u4", 4).is_err());
        assert!(parse_gn("w1", 4).is_err());
    }
}
