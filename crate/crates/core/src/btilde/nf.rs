use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::btilde::comb::comb;
use crate::error::{Error, Result};
use crate::extension::gn::{gn_act_word, gn_s_ij, parse_gn, GnElement};
use crate::words::{psi, BraidWord, Permutation};

fn s_table(n: usize) -> Arc<Vec<Vec<GnElement>>> {
    static CACHE: RwLock<Option<HashMap<usize, Arc<Vec<Vec<GnElement>>>>>> = RwLock::new(None);
    if let Some(t) = CACHE.read().expect("cache lock").as_ref().and_then(|m| m.get(&n)) {
        return t.clone();
    }
    // t[j][i] = (s_ij, s_ij^-1) flattened as [s, s^-1]
    let mut t = vec![Vec::new(); n + 1];
    for j in 2..=n {
        let mut row = Vec::with_capacity(2 * j);
        row.push(GnElement::identity(n));
        row.push(GnElement::identity(n));
        for i in 1..j {
            let s = gn_s_ij(i, j, n).expect("valid pair");
            row.push(s.inverse());
            row.push(s);
        }
        t[j] = row;
    }
    let t = Arc::new(t);
    let mut guard = CACHE.write().expect("cache lock");
    guard.get_or_insert_with(HashMap::new).entry(n).or_insert(t).clone()
}

/// Coordinates of a pure braid in `G(n)`: the product of `s_ij^{+-1}` over its combing.
pub fn lambda_hat(w: &BraidWord) -> Result<GnElement> {
    let n = w.strands();
    let list = comb(w)?;
    let t = s_table(n);
    let mut out = GnElement::identity(n);
    for f in &list.factors {
        let s = &t[f.j][2 * f.i + (f.sign > 0) as usize];
        out = out.mul_unchecked(s);
    }
    Ok(out)
}

/// A fixed positive word over each permutation, built by repeatedly
/// removing the smallest adjacent inversion.
pub fn canonical_lift(sigma: &Permutation) -> BraidWord {
    let n = sigma.degree();
    // pos[v-1] = position holding value v in the image list
    let mut imgs = sigma.images().to_vec();
    let mut letters = Vec::new();
    loop {
        let mut pos = vec![0; n];
        for (p, &v) in imgs.iter().enumerate() {
            pos[v - 1] = p;
        }
        match (1..n).find(|&k| pos[k] < pos[k - 1]) {
            Some(k) => {
                // sigma = (sigma then s_k) then s_k
                for v in imgs.iter_mut() {
                    if *v == k {
                        *v = k + 1;
                    } else if *v == k + 1 {
                        *v = k;
                    }
                }
                letters.push(k as i32);
            }
            None => break,
        }
    }
    letters.reverse();
    BraidWord::from_letters(n.max(2), letters).expect("letters in range")
}

/// Normal form in the quotient: the permutation and the coordinates of the
/// pure part `w lift(psi(w))^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BTildeNF {
    pub perm: Permutation,
    pub coords: GnElement,
}

pub fn btilde_nf(w: &BraidWord) -> Result<BTildeNF> {
    let perm = psi(w);
    let lift = canonical_lift(&perm);
    let coords = lambda_hat(&w.mul(&lift.inverse())?)?;
    Ok(BTildeNF { perm, coords })
}

/// Equality in the quotient.
pub fn btilde_eq(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch(w1.strands(), w2.strands()));
    }
    Ok(btilde_nf(w1)? == btilde_nf(w2)?)
}

impl BTildeNF {
    pub fn identity(n: usize) -> Self {
        BTildeNF { perm: Permutation::identity(n), coords: GnElement::identity(n) }
    }

    pub fn strands(&self) -> usize {
        self.perm.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.coords.is_identity()
    }

    /// A word representing this element: a pure word for the coordinates
    /// followed by the canonical lift.
    pub fn lift_word(&self) -> BraidWord {
        canonical_lift(&self.perm)
    }

    /// Product, using equivariance to move the second pure part across the
    /// first lift: `(p1 L1)(p2 L2) = p1 (p2)_{L1^-1} (L1 L2 L12^-1) L12`.
    pub fn mul(&self, other: &BTildeNF) -> Result<BTildeNF> {
        if self.strands() != other.strands() {
            return Err(Error::StrandMismatch(self.strands(), other.strands()));
        }
        let l1 = self.lift_word();
        let l2 = other.lift_word();
        let perm = self.perm.then(&other.perm);
        let l12 = canonical_lift(&perm);
        let moved = gn_act_word(&l1.inverse(), &other.coords)?;
        let rest = lambda_hat(&l1.mul(&l2)?.mul(&l12.inverse())?)?;
        let coords = self.coords.mul(&moved)?.mul(&rest)?;
        Ok(BTildeNF { perm, coords })
    }

    /// `(p L)^-1 = (p^-1)_L (L^-1 Linv^-1) Linv`.
    pub fn inverse(&self) -> Result<BTildeNF> {
        let l = self.lift_word();
        let perm = self.perm.inverse();
        let linv = canonical_lift(&perm);
        let moved = gn_act_word(&l, &self.coords.inverse())?;
        let rest = lambda_hat(&l.inverse().mul(&linv.inverse())?)?;
        Ok(BTildeNF { perm, coords: moved.mul(&rest)? })
    }
}

impl fmt::Display for BTildeNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm={} coords={}", self.perm, self.coords)
    }
}

/// Parses `perm=[...] coords=<element text>`.
pub fn parse_nf(s: &str, n: usize) -> Result<BTildeNF> {
    let s = s.trim();
    let rest = s.strip_prefix("perm=[").ok_or_else(|| Error::Parse("expected `perm=[`".into()))?;
    let (list, rest) = rest.split_once(']').ok_or_else(|| Error::Parse("unterminated permutation".into()))?;
    let images = list
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad image `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    let perm = Permutation::from_images(images)?;
    if perm.degree() != n {
        return Err(Error::StrandMismatch(perm.degree(), n));
    }
    let coords_text = rest.trim().strip_prefix("coords=").ok_or_else(|| Error::Parse("expected `coords=`".into()))?;
    Ok(BTildeNF { perm, coords: parse_gn(coords_text, n)? })
}


#[cfg(test)]
mod equivariance {
    use super::*;
    use proptest::prelude::*;

    fn letters(n: usize) -> impl Strategy<Value = Vec<i32>> {
        let m = n as i32 - 1;
        prop::collection::vec((1..=m, any::<bool>()).prop_map(|(k, s)| if s { k } else { -k }), 0..12)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn coordinates_follow_the_action(l in letters(5), h in letters(5)) {
            let w = BraidWord::from_letters(5, l).unwrap();
            let p = w.mul(&canonical_lift(&psi(&w)).inverse()).unwrap();
            let h = BraidWord::from_letters(5, h).unwrap();
            let moved = lambda_hat(&p.conj(&h).unwrap()).unwrap();
            prop_assert_eq!(moved, gn_act_word(&h, &lambda_hat(&p).unwrap()).unwrap());
        }

        #[test]
        fn coordinates_are_a_homomorphism(l1 in letters(4), l2 in letters(4)) {
            let w1 = BraidWord::from_letters(4, l1).unwrap();
            let w2 = BraidWord::from_letters(4, l2).unwrap();
            let p1 = w1.mul(&canonical_lift(&psi(&w1)).inverse()).unwrap();
            let p2 = w2.mul(&canonical_lift(&psi(&w2)).inverse()).unwrap();
            let lhs = lambda_hat(&p1.mul(&p2).unwrap()).unwrap();
            prop_assert_eq!(lhs, lambda_hat(&p1).unwrap().mul(&lambda_hat(&p2).unwrap()).unwrap());
        }
    }
}
