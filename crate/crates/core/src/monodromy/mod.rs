//! Factorized expressions in the braid group and Hurwitz moves on them.

pub mod file;
pub mod hurwitz;

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{braid_eq, full_twist, BraidWord, HalfTwist};

pub use file::{parse_factorization, render_factorization, FactorFile, FactorRecord};
pub use hurwitz::{
    apply_moves, factorwise_eq, hurwitz_equivalent, hurwitz_move, invariance_check, Budget, HurwitzOutcome, Move,
};

/// Largest factor power accepted.
pub const MAX_POWER: u32 = 1024;

/// A half-twist raised to a positive power.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub halftwist: HalfTwist,
    power: u32,
}

impl Factor {
    pub fn new(halftwist: HalfTwist, power: u32) -> Result<Self> {
        if power == 0 || power > MAX_POWER {
            return Err(Error::Power(power));
        }
        Ok(Factor { halftwist, power })
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn word(&self) -> BraidWord {
        self.halftwist.as_word().pow(self.power as i64)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.halftwist, self.power)
    }
}

/// An ordered product of factors on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorizedExpr {
    strands: usize,
    factors: Vec<Factor>,
}

impl FactorizedExpr {
    pub fn new(strands: usize, factors: Vec<Factor>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Size(format!("need at least 2 strands, got {strands}")));
        }
        if let Some(f) = factors.iter().find(|f| f.halftwist.strands() != strands) {
            return Err(Error::StrandMismatch(f.halftwist.strands(), strands));
        }
        Ok(FactorizedExpr { strands, factors })
    }

    /// Factors `X_b` with empty conjugators and power one.
    pub fn from_frame_letters(strands: usize, bases: &[usize]) -> Result<Self> {
        let factors = bases
            .iter()
            .map(|&b| Factor::new(HalfTwist::frame(strands, b)?, 1))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Each factor `V^k` replaced by `k` copies of `V`.
    pub fn expanded(&self) -> FactorizedExpr {
        let factors = self
            .factors
            .iter()
            .flat_map(|f| std::iter::repeat(Factor { halftwist: f.halftwist.clone(), power: 1 }).take(f.power as usize))
            .collect();
        FactorizedExpr { strands: self.strands, factors }
    }

    pub(crate) fn with_factors(&self, factors: Vec<Factor>) -> FactorizedExpr {
        FactorizedExpr { strands: self.strands, factors }
    }
}

impl fmt::Display for FactorizedExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The product of all factors with powers expanded.
pub fn product(e: &FactorizedExpr) -> BraidWord {
    let mut out = BraidWord::identity(e.strands);
    for f in &e.factors {
        out = out.mul_unchecked(&f.word());
    }
    out
}

/// Whether the expression multiplies out to the full twist.
pub fn validate_full_twist(e: &FactorizedExpr) -> Result<bool> {
    braid_eq(&product(e), &full_twist(e.strands)?)
}

/// Every factor conjugated by `h`.
pub fn conjugate_expr(e: &FactorizedExpr, h: &BraidWord) -> Result<FactorizedExpr> {
    if h.strands() != e.strands {
        return Err(Error::StrandMismatch(h.strands(), e.strands));
    }
    let factors = e
        .factors
        .iter()
        .map(|f| Ok(Factor { halftwist: f.halftwist.conj(h)?, power: f.power }))
        .collect::<Result<Vec<_>>>()?;
    Ok(e.with_factors(factors))
}
