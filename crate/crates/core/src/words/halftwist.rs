use std::fmt;

use crate::error::{Error, Result};
use crate::words::braid::{psi, BraidWord};

/// The half-twist `(X_base)_conjugator = w^-1 X_base w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfTwist {
    conjugator: BraidWord,
    base: usize,
}

impl HalfTwist {
    pub fn new(conjugator: BraidWord, base: usize) -> Result<Self> {
        if base == 0 || base >= conjugator.strands() {
            return Err(Error::IndexOutOfRange { index: base as i64, bound: conjugator.strands() - 1 });
        }
        Ok(HalfTwist { conjugator, base })
    }

    /// A frame generator `X_base` with empty conjugator.
    pub fn frame(strands: usize, base: usize) -> Result<Self> {
        Self::new(BraidWord::identity(strands), base)
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// `w^-1 X_i w` as a concrete word.
    pub fn as_word(&self) -> BraidWord {
        let x = BraidWord::from_letters_unchecked(self.strands(), vec![self.base as i32]);
        self.conjugator.inverse().mul_unchecked(&x).mul_unchecked(&self.conjugator)
    }

    /// The half-twist conjugated further by `h`.
    pub fn conj(&self, h: &BraidWord) -> Result<HalfTwist> {
        Ok(HalfTwist { conjugator: self.conjugator.mul(h)?.free_reduced(), base: self.base })
    }

    /// Endpoints `(origin, end)` with `origin < end`.
    pub fn endpoints(&self) -> (usize, usize) {
        // base endpoints moved by the conjugator's permutation
        let p = psi(&self.conjugator);
        let (a, b) = (p.apply(self.base), p.apply(self.base + 1));
        (a.min(b), a.max(b))
    }
}

impl fmt::Display for HalfTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x{})_[{}]", self.base, self.conjugator)
    }
}

/// The two-point support of the permutation of a word claimed to be a half-twist.
pub fn ht_endpoints(h: &HalfTwist) -> Result<(usize, usize)> {
    word_endpoints(&h.as_word())
}

/// Support of `psi(w)` when it is a transposition.
pub fn word_endpoints(w: &BraidWord) -> Result<(usize, usize)> {
    psi(w).as_transposition().ok_or(Error::NotHalfTwist)
}

/// Unfolds a half-twist into a word.
pub fn halftwist_as_word(h: &HalfTwist) -> BraidWord {
    h.as_word()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unfolding() {
        let h = HalfTwist::frame(3, 1).unwrap();
        assert_eq!(h.as_word().letters(), &[1]);
        let h = HalfTwist::new(BraidWord::from_letters(3, [2]).unwrap(), 1).unwrap();
        assert_eq!(h.as_word().letters(), &[-2, 1, 2]);
        assert_eq!(ht_endpoints(&h).unwrap(), (1, 3));
        assert_eq!(h.endpoints(), (1, 3));
    }

    #[test]
    fn not_a_half_twist() {
        let w = BraidWord::from_letters(3, [1, 2]).unwrap();
        assert_eq!(word_endpoints(&w), Err(Error::NotHalfTwist));
        assert!(HalfTwist::frame(3, 3).is_err());
    }
}
