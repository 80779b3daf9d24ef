use std::fmt;

use crate::error::{Error, Result};
use crate::words::free::{write_letters, FreeWord};
use crate::words::perm::Permutation;

/// A word in the Artin generators `X_1..X_{n-1}` of the braid group on
/// `strands` strands. Letters are signed indices.
///
/// Braids act on the right, letters applied left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn generator(strands: usize, k: i32) -> Result<Self> {
        Self::from_letters(strands, [k])
    }

    pub fn from_letters(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Size(format!("braid groups need at least 2 strands, got {strands}")));
        }
        let letters: Vec<i32> = letters.into_iter().collect();
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange { index: l as i64, bound: strands - 1 });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        Ok(())
    }

    /// Concatenation.
    pub fn mul(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// Concatenation of many words on the same strand count.
    pub fn product<'a>(strands: usize, words: impl IntoIterator<Item = &'a BraidWord>) -> Result<BraidWord> {
        let mut out = BraidWord::identity(strands);
        for w in words {
            out.check(w)?;
            out.letters.extend_from_slice(&w.letters);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// `(self)_by = by^-1 self by`.
    pub fn conj(&self, by: &BraidWord) -> Result<BraidWord> {
        self.check(by)?;
        Ok(by.inverse().mul_unchecked(self).mul_unchecked(by))
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
        a.check(b)?;
        Ok(a.mul_unchecked(b).mul_unchecked(&a.inverse()).mul_unchecked(&b.inverse()))
    }

    /// `<a, b> = a b a b^-1 a^-1 b^-1`.
    pub fn triple(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
        a.check(b)?;
        let aba = a.mul_unchecked(b).mul_unchecked(a);
        let bab = b.mul_unchecked(a).mul_unchecked(b);
        Ok(aba.mul_unchecked(&bab.inverse()))
    }

    /// Cancels adjacent `X_k X_k^-1` pairs; the braid is unchanged.
    pub fn free_reduced(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Reinterprets the word on more strands.
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        if strands < self.strands {
            return Err(Error::StrandMismatch(self.strands, strands));
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, 'x', &self.letters)
    }
}

/// Images of the free generators under the automorphism induced by a braid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinSignature {
    images: Vec<FreeWord>,
}

impl ArtinSignature {
    pub fn identity(n: usize) -> Self {
        ArtinSignature {
            images: (1..=n as i32).map(|j| FreeWord::from_reduced_unchecked(n, vec![j])).collect(),
        }
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Signature of `self` followed by `then`.
    pub fn then(&self, then: &ArtinSignature) -> ArtinSignature {
        ArtinSignature { images: self.images.iter().map(|w| w.substitute(&then.images)).collect() }
    }

    /// Image of a free word under the automorphism.
    pub fn apply(&self, x: &FreeWord) -> FreeWord {
        x.substitute(&self.images)
    }
}

/// Computes the signature by prepending letters from the right end, so each
/// step touches only two images.
pub fn signature(w: &BraidWord) -> ArtinSignature {
    let mut sig = ArtinSignature::identity(w.strands);
    for &l in w.letters.iter().rev() {
        let i = l.unsigned_abs() as usize - 1;
        let a = sig.images[i].clone();
        let b = sig.images[i + 1].clone();
        if l > 0 {
            // (G_i)X_i = G_i G_{i+1} G_i^-1, (G_{i+1})X_i = G_i
            sig.images[i] = a.mul_unchecked(&b).mul_unchecked(&a.inverse());
            sig.images[i + 1] = a;
        } else {
            // (G_i)X_i^-1 = G_{i+1}, (G_{i+1})X_i^-1 = G_{i+1}^-1 G_i G_{i+1}
            sig.images[i + 1] = b.inverse().mul_unchecked(&a).mul_unchecked(&b);
            sig.images[i] = b;
        }
    }
    sig
}

/// Right Artin action of a braid word on a free word.
pub fn artin_act(w: &BraidWord, x: &FreeWord) -> Result<FreeWord> {
    if x.rank() != w.strands {
        return Err(Error::RankMismatch(x.rank(), w.strands));
    }
    Ok(signature(w).apply(x))
}

/// Equality in the braid group, decided by the faithful Artin action.
pub fn braid_eq(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    w1.check(w2)?;
    Ok(signature(w1) == signature(w2))
}

/// Whether a word represents the identity braid.
pub fn is_trivial(w: &BraidWord) -> bool {
    signature(w) == ArtinSignature::identity(w.strands)
}

/// Image in the symmetric group.
pub fn psi(w: &BraidWord) -> Permutation {
    let mut images: Vec<usize> = (1..=w.strands).collect();
    // images[x-1] tracks where point x has moved; X_k swaps positions k, k+1.
    for &l in &w.letters {
        let k = l.unsigned_abs() as usize;
        for p in images.iter_mut() {
            if *p == k {
                *p = k + 1;
            } else if *p == k + 1 {
                *p = k;
            }
        }
    }
    Permutation::from_images(images).expect("psi builds a bijection")
}

/// Exponent sum.
pub fn degree(w: &BraidWord) -> i64 {
    w.letters.iter().map(|l| l.signum() as i64).sum()
}

/// The full twist `(X_1 ... X_{n-1})^n`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    let row = BraidWord::from_letters(n, 1..n as i32)?;
    Ok(row.pow(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::from_letters(n, l.iter().copied()).unwrap()
    }

    fn g(n: usize, l: &[i32]) -> FreeWord {
        FreeWord::from_letters(n, l.iter().copied()).unwrap()
    }

    #[test]
    fn generator_rules() {
        assert_eq!(artin_act(&b(3, &[1]), &g(3, &[2])).unwrap(), g(3, &[1]));
        assert_eq!(artin_act(&b(3, &[1]), &g(3, &[1])).unwrap(), g(3, &[1, 2, -1]));
        assert_eq!(artin_act(&b(3, &[1]), &g(3, &[3])).unwrap(), g(3, &[3]));
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&BraidWord::identity(3)), ArtinSignature::identity(3));
        assert_eq!(signature(&b(2, &[1])).images(), &[g(2, &[1, 2, -1]), g(2, &[1])]);
        assert_eq!(signature(&b(2, &[1, -1])), ArtinSignature::identity(2));
    }

    #[test]
    fn letters_apply_left_to_right() {
        // (G_2)X_1 X_2 = (G_1)X_2 = G_1; via the signature and via step-by-step action.
        let x = g(3, &[2]);
        let step = artin_act(&b(3, &[2]), &artin_act(&b(3, &[1]), &x).unwrap()).unwrap();
        assert_eq!(artin_act(&b(3, &[1, 2]), &x).unwrap(), step);
    }

    #[test]
    fn word_problem_examples() {
        assert!(braid_eq(&b(3, &[1, 2, 1]), &b(3, &[2, 1, 2])).unwrap());
        assert!(braid_eq(&b(4, &[1, 3]), &b(4, &[3, 1])).unwrap());
        assert!(!braid_eq(&b(3, &[1, 2]), &b(3, &[2, 1])).unwrap());
        assert!(braid_eq(&b(3, &[1]), &b(4, &[1])).is_err());
    }

    #[test]
    fn permutation_and_degree() {
        assert_eq!(psi(&b(3, &[1])).as_transposition(), Some((1, 2)));
        assert_eq!(psi(&b(3, &[1, 2, 1])).as_transposition(), Some((1, 3)));
        assert!(psi(&b(3, &[1, 1])).is_identity());
        assert_eq!(degree(&b(3, &[1, -2])), 0);
        assert_eq!(degree(&b(3, &[1, 1])), 2);
        assert_eq!(degree(&full_twist(3).unwrap()), 6);
    }

    #[test]
    fn full_twist_is_central() {
        assert_eq!(full_twist(2).unwrap(), b(2, &[1, 1]));
        for n in 2..=9 {
            let d = full_twist(n).unwrap();
            for k in 1..n as i32 {
                let x = b(n, &[k]);
                assert!(braid_eq(&d.mul(&x).unwrap(), &x.mul(&d).unwrap()).unwrap());
            }
        }
    }
}
