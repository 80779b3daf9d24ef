use std::fmt;

use crate::error::{Error, Result};

/// A freely reduced word in the free group on `rank` generators.
///
/// Letters are signed generator indices: `j` is the j-th generator and `-j`
/// its inverse, with `1 <= j <= rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, j: usize) -> Result<Self> {
        Self::from_letters(rank, [j as i32])
    }

    /// Builds a word from signed letters, validating indices and reducing.
    pub fn from_letters(rank: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut w = FreeWord::identity(rank);
        for l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::IndexOutOfRange { index: l as i64, bound: rank });
            }
            w.push(l);
        }
        Ok(w)
    }

    pub(crate) fn from_reduced_unchecked(rank: usize, letters: Vec<i32>) -> Self {
        FreeWord { rank, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends one letter, cancelling against the last letter if possible.
    pub(crate) fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    fn extend_from(&mut self, other: &[i32]) {
        for &l in other {
            self.push(l);
        }
    }

    fn extend_inverse_from(&mut self, other: &[i32]) {
        for &l in other.iter().rev() {
            self.push(-l);
        }
    }

    fn check_rank(&self, other: &FreeWord) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord> {
        self.check_rank(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        w.extend_from(&other.letters);
        w
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = FreeWord::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            w.extend_from(&base.letters);
        }
        w
    }

    /// `(self)_by = by^-1 self by`.
    pub fn conj(&self, by: &FreeWord) -> Result<FreeWord> {
        self.check_rank(by)?;
        let mut w = FreeWord::identity(self.rank);
        w.extend_inverse_from(&by.letters);
        w.extend_from(&self.letters);
        w.extend_from(&by.letters);
        Ok(w)
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> Result<FreeWord> {
        a.check_rank(b)?;
        let mut w = a.clone();
        w.extend_from(&b.letters);
        w.extend_inverse_from(&a.letters);
        w.extend_inverse_from(&b.letters);
        Ok(w)
    }

    /// `<a, b> = a b a b^-1 a^-1 b^-1`.
    pub fn triple(a: &FreeWord, b: &FreeWord) -> Result<FreeWord> {
        a.check_rank(b)?;
        let mut w = a.clone();
        w.extend_from(&b.letters);
        w.extend_from(&a.letters);
        w.extend_inverse_from(&b.letters);
        w.extend_inverse_from(&a.letters);
        w.extend_inverse_from(&b.letters);
        Ok(w)
    }

    /// Replaces every generator `j` by `images[j-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut w = FreeWord::identity(rank);
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1].letters;
            if l > 0 {
                w.extend_from(img);
            } else {
                w.extend_inverse_from(img);
            }
        }
        w
    }

    /// Deletes every occurrence of the generators selected by `kill`.
    pub fn kill(&self, new_rank: usize, kill: impl Fn(usize) -> bool) -> FreeWord {
        let mut w = FreeWord::identity(new_rank);
        for &l in &self.letters {
            if !kill(l.unsigned_abs() as usize) {
                w.push(l);
            }
        }
        w
    }

    /// Writes the word as `c x c^-1` with `x` a single letter, if possible.
    pub fn as_conjugate_of_letter(&self) -> Option<(FreeWord, i32)> {
        let n = self.letters.len();
        if n % 2 == 0 {
            return None;
        }
        let m = n / 2;
        let (head, rest) = self.letters.split_at(m);
        let tail = &rest[1..];
        if head.iter().rev().zip(tail).all(|(a, b)| *a == -*b) {
            Some((FreeWord::from_reduced_unchecked(self.rank, head.to_vec()), rest[0]))
        } else {
            None
        }
    }

    /// Cyclic reduction: strips matching inverse letters from both ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi > lo + 1 && self.letters[lo] == -self.letters[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        FreeWord::from_reduced_unchecked(self.rank, self.letters[lo..hi].to_vec())
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }
}

/// Reduced product of two free words of the same rank.
pub fn fw_mul(x: &FreeWord, y: &FreeWord) -> Result<FreeWord> {
    x.mul(y)
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, 'g', &self.letters)
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, prefix: char, letters: &[i32]) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    for (k, l) in letters.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        if *l > 0 {
            write!(f, "{prefix}{l}")?;
        } else {
            write!(f, "{prefix}{}^-1", -l)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, l: &[i32]) -> FreeWord {
        FreeWord::from_letters(rank, l.iter().copied()).unwrap()
    }

    #[test]
    fn cancellation() {
        assert!(fw_mul(&w(3, &[1]), &w(3, &[-1])).unwrap().is_identity());
        assert_eq!(fw_mul(&w(3, &[1]), &w(3, &[2])).unwrap().letters(), &[1, 2]);
        assert_eq!(fw_mul(&w(3, &[1, 2]), &w(3, &[-2, 3])).unwrap().letters(), &[1, 3]);
    }

    #[test]
    fn rank_checks() {
        assert_eq!(fw_mul(&w(2, &[1]), &w(3, &[1])), Err(Error::RankMismatch(2, 3)));
        assert!(FreeWord::from_letters(2, [3]).is_err());
        assert!(FreeWord::from_letters(2, [0]).is_err());
    }

    #[test]
    fn conjugate_shape() {
        let x = w(3, &[2, 1, -2]);
        let (c, l) = x.as_conjugate_of_letter().unwrap();
        assert_eq!(c.letters(), &[2]);
        assert_eq!(l, 1);
        assert!(w(3, &[1, 2]).as_conjugate_of_letter().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(w(3, &[1, -3]).to_string(), "g1 g3^-1");
        assert_eq!(FreeWord::identity(2).to_string(), "1");
    }
}
