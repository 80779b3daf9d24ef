//! Group presentations read off from factorized expressions.
//!
//! The fiber group is free on `G_1..G_m`. A factor `(X_i)_w` with power `k`
//! gives the pair `A = (G_i) w`, `B = (G_{i+1}) w` under the Artin action, and
//! the relator `A B^-1`, `[A, B]` or `A B A B^-1 A^-1 B^-1` for `k = 1, 2, 3`.

pub mod smith;
pub mod tietze;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monodromy::{conjugate_expr, Factor, FactorizedExpr};
use crate::words::text::parse_free;
use crate::words::{artin_act, BraidWord, FreeWord};

pub use smith::{abelian_group, smith_diagonal, AbelianGroup};
pub use tietze::{tietze_simplify, Simplified};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: usize,
    relators: Vec<FreeWord>,
}

/// Which relators a factor contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// One relator per factor of power 1, 2 or 3.
    Cuspidal,
    /// `(G_j) V G_j^-1` for every generator and every factor word `V`.
    General,
}

/// Largest generator count a presentation may have.
pub const MAX_GENERATORS: usize = crate::words::MAX_RANK;

impl Presentation {
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Result<Self> {
        if generators > MAX_GENERATORS {
            return Err(Error::Size(format!("{generators} generators exceed the limit of {MAX_GENERATORS}")));
        }
        if let Some(r) = relators.iter().find(|r| r.rank() != generators) {
            return Err(Error::RankMismatch(r.rank(), generators));
        }
        Ok(Presentation { generators, relators })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn abelianization(&self) -> AbelianGroup {
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_sums()).collect();
        abelian_group(self.generators, &rows)
    }

    pub fn to_doc(&self) -> PresentationDoc {
        PresentationDoc { generators: self.generators, relators: self.relators.iter().map(|r| r.to_string()).collect() }
    }
}

/// Text form: a `gens: m` line followed by one `rel: <word>` line per relator.
impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators)?;
        for r in &self.relators {
            writeln!(f, "rel: {r}")?;
        }
        Ok(())
    }
}

/// Structured form mirroring the text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDoc {
    pub generators: usize,
    pub relators: Vec<String>,
}

impl PresentationDoc {
    pub fn to_presentation(&self) -> Result<Presentation> {
        let rels = self.relators.iter().map(|r| parse_free(r, self.generators)).collect::<Result<Vec<_>>>()?;
        Presentation::new(self.generators, rels)
    }
}

/// Parses the text form; blank lines and `#` comments are ignored.
pub fn parse_presentation(s: &str) -> Result<Presentation> {
    let mut gens = None;
    let mut rels = Vec::new();
    for line in s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        if let Some(v) = line.strip_prefix("gens:") {
            if gens.is_some() {
                return Err(Error::Parse("repeated `gens:` line".into()));
            }
            gens = Some(v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad generator count `{v}`")))?);
        } else if let Some(v) = line.strip_prefix("rel:") {
            let m = gens.ok_or_else(|| Error::Parse("`rel:` before `gens:`".into()))?;
            rels.push(parse_free(v, m)?);
        } else {
            return Err(Error::Parse(format!("unexpected line `{line}`")));
        }
    }
    let m = gens.ok_or_else(|| Error::Parse("missing `gens:` line".into()))?;
    Presentation::new(m, rels)
}

/// Parses the structured form.
pub fn parse_presentation_json(s: &str) -> Result<Presentation> {
    let doc: PresentationDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_presentation()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbPair {
    pub a: FreeWord,
    pub b: FreeWord,
}

/// The images of `G_i` and `G_{i+1}` under the conjugator of the factor.
pub fn ab_pair(f: &Factor) -> Result<AbPair> {
    let n = f.halftwist.strands();
    let i = f.halftwist.base();
    let w = f.halftwist.conjugator();
    Ok(AbPair {
        a: artin_act(w, &FreeWord::generator(n, i)?)?,
        b: artin_act(w, &FreeWord::generator(n, i + 1)?)?,
    })
}

pub fn relator_from_factor(f: &Factor) -> Result<FreeWord> {
    let AbPair { a, b } = ab_pair(f)?;
    match f.power() {
        1 => a.mul(&b.inverse()),
        2 => FreeWord::commutator(&a, &b),
        3 => FreeWord::triple(&a, &b),
        p => Err(Error::Power(p)),
    }
}

fn general_relators_of_word(v: &BraidWord, out: &mut Vec<FreeWord>) -> Result<()> {
    let m = v.strands();
    for j in 1..=m {
        let g = FreeWord::generator(m, j)?;
        let r = artin_act(v, &g)?.mul(&g.inverse())?;
        if !r.is_identity() {
            out.push(r);
        }
    }
    Ok(())
}

/// `(G_j) V G_j^-1` for every factor word `V` and every `j`, trivial ones dropped.
pub fn relators_general(e: &FactorizedExpr) -> Result<Vec<FreeWord>> {
    let mut out = Vec::new();
    for f in e.factors() {
        general_relators_of_word(&f.word(), &mut out)?;
    }
    Ok(out)
}

fn relators(e: &FactorizedExpr, mode: Mode) -> Result<Vec<FreeWord>> {
    match mode {
        Mode::Cuspidal => e.factors().iter().map(relator_from_factor).collect(),
        Mode::General => relators_general(e),
    }
}

pub fn presentation(e: &FactorizedExpr, mode: Mode) -> Result<Presentation> {
    Presentation::new(e.strands(), relators(e, mode)?)
}

/// Appends the product `G_1 G_2 ... G_m`.
pub fn projectivize(p: &Presentation) -> Presentation {
    let m = p.generators;
    let prod = FreeWord::from_letters(m, 1..=m as i32).expect("letters in range");
    let mut relators = p.relators.clone();
    relators.push(prod);
    Presentation { generators: m, relators }
}

/// Appends the relators of the expression conjugated by `h`.
pub fn add_invariance_relations(p: &Presentation, e: &FactorizedExpr, h: &BraidWord, mode: Mode) -> Result<Presentation> {
    if e.strands() != p.generators {
        return Err(Error::StrandMismatch(e.strands(), p.generators));
    }
    let mut relators = p.relators.clone();
    relators.extend(relators_of_conjugate(e, h, mode)?);
    Ok(Presentation { generators: p.generators, relators })
}

fn relators_of_conjugate(e: &FactorizedExpr, h: &BraidWord, mode: Mode) -> Result<Vec<FreeWord>> {
    relators(&conjugate_expr(e, h)?, mode)
}
