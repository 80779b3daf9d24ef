//! Checkers for prime elements of groups acted on by the braid quotient.
//!
//! An element `g` supported on a half-twist `X` with central involution `t`
//! is prime when `g_{X^-1} = g^-1 t`, and for every `Y` adjacent to `X`:
//! `g_{X Y^-1 X^-1} = (g_X)^-1 g_{X Y^-1}` and `g_{Y^-1 X^-1} = g^-1 g_{Y^-1}`,
//! and `g_Z = g` for every `Z` disjoint from `X`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::{g0g_act_braid, G0Element, GnElement, gn_act_word};
use crate::words::{BraidWord, HalfTwist};

/// A group with decidable equality on which braid words act on the right.
pub trait BraidModule: Sync {
    type Elem: Clone + PartialEq + fmt::Display;
    fn strands(&self) -> usize;
    fn identity(&self) -> Self::Elem;
    /// The central involution.
    fn tau(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn act(&self, w: &BraidWord, x: &Self::Elem) -> Result<Self::Elem>;
}

/// `G(n)` with the coordinate action.
#[derive(Clone, Copy, Debug)]
pub struct GnModule {
    pub n: usize,
}

impl BraidModule for GnModule {
    type Elem = GnElement;
    fn strands(&self) -> usize {
        self.n
    }
    fn identity(&self) -> GnElement {
        GnElement::identity(self.n)
    }
    fn tau(&self) -> GnElement {
        GnElement::nu(self.n)
    }
    fn mul(&self, a: &GnElement, b: &GnElement) -> GnElement {
        a.mul_unchecked(b)
    }
    fn inverse(&self, a: &GnElement) -> GnElement {
        a.inverse()
    }
    fn act(&self, w: &BraidWord, x: &GnElement) -> Result<GnElement> {
        gn_act_word(w, x)
    }
}

/// The graph-form group on nine strands.
#[derive(Clone, Copy, Debug)]
pub struct G0Module;

impl BraidModule for G0Module {
    type Elem = G0Element;
    fn strands(&self) -> usize {
        9
    }
    fn identity(&self) -> G0Element {
        G0Element::identity()
    }
    fn tau(&self) -> G0Element {
        G0Element::tau()
    }
    fn mul(&self, a: &G0Element, b: &G0Element) -> G0Element {
        a.mul(b)
    }
    fn inverse(&self, a: &G0Element) -> G0Element {
        a.inverse()
    }
    fn act(&self, w: &BraidWord, x: &G0Element) -> Result<G0Element> {
        g0g_act_braid(w, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotChecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub status: CheckStatus,
    /// Both sides of the compared identity, filled on failure.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    fn record<E: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, lhs: &E, rhs: &E) {
        let pass = lhs == rhs;
        self.items.push(CheckItem {
            name: name.into(),
            status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: if pass { String::new() } else { format!("{lhs} != {rhs}") },
        });
    }

    /// Whether no item failed.
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.status != CheckStatus::Fail)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.items.iter().find(|i| i.name == name).map(|i| i.status)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| i.status == CheckStatus::Fail)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.items {
            let s = match i.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::NotChecked => "not checked",
            };
            write!(f, "{}: {s}", i.name)?;
            if !i.detail.is_empty() {
                write!(f, " ({})", i.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_strands<M: BraidModule>(m: &M, hs: &[&HalfTwist]) -> Result<()> {
    for h in hs {
        if h.strands() != m.strands() {
            return Err(Error::StrandMismatch(h.strands(), m.strands()));
        }
    }
    Ok(())
}

fn word(n: usize, letters: &[i32]) -> Result<BraidWord> {
    BraidWord::from_letters(n, letters.iter().copied())
}

/// Checks the prime-element axioms for `g` supported on `x`, the consequences
/// for adjacent half-twists, and that the centralizer of `x` fixes `g`.
pub fn prime_axioms_check<M: BraidModule>(
    m: &M,
    g: &M::Elem,
    x: &HalfTwist,
    adjacent: &[HalfTwist],
    disjoint: &[HalfTwist],
) -> Result<CheckReport> {
    check_strands(m, &[x])?;
    check_strands(m, &adjacent.iter().collect::<Vec<_>>())?;
    check_strands(m, &disjoint.iter().collect::<Vec<_>>())?;
    let n = m.strands();
    let tau = m.tau();
    let g_inv = m.inverse(g);
    let xw = x.as_word();
    let xi = xw.inverse();
    let mut r = CheckReport::default();

    let g_x = m.act(&xw, g)?;
    r.record("(1) inverse action", &m.act(&xi, g)?, &m.mul(&g_inv, &tau));
    r.record("action by X", &g_x, &m.mul(&g_inv, &tau));
    r.record("X^2 fixes g", &m.act(&xw.pow(2), g)?, g);

    for y in adjacent {
        let yw = y.as_word();
        let yi = yw.inverse();
        let lhs = m.act(&xw.mul(&yi)?.mul(&xi)?, g)?;
        let rhs = m.mul(&m.inverse(&g_x), &m.act(&xw.mul(&yi)?, g)?);
        r.record(format!("(2a) Y={y}"), &lhs, &rhs);
        let g_yi = m.act(&yi, g)?;
        let lhs = m.act(&yi.mul(&xi)?, g)?;
        r.record(format!("(2b) Y={y}"), &lhs, &m.mul(&g_inv, &g_yi));
        r.record(format!("Y^-2 Y={y}"), &m.act(&yi.pow(2), g)?, &m.mul(g, &tau));
        let comm = m.mul(&m.mul(g, &g_yi), &m.mul(&g_inv, &m.inverse(&g_yi)));
        r.record(format!("[g, g_Y^-1] Y={y}"), &comm, &tau);
    }
    for z in disjoint {
        r.record(format!("(3) Z={z}"), &m.act(&z.as_word(), g)?, g);
    }

    // Centralizer of X_b in the frame, transported along the conjugator of x.
    let b = x.base() as i32;
    let c = x.conjugator();
    let neighbour = if (b as usize) + 1 < n { b + 1 } else { b - 1 };
    let mut centralizer = vec![
        ("sigma".to_string(), word(n, &[neighbour, b, b, neighbour])?),
    ];
    for j in 1..n as i32 {
        if (j - b).abs() >= 2 {
            centralizer.push((format!("x{j}"), word(n, &[j])?));
        }
    }
    for (name, w) in centralizer {
        r.record(format!("centralizer {name}"), &m.act(&w.conj(c)?, g)?, g);
    }
    Ok(r)
}

/// Checks the sufficient conditions for `s` to be prime with respect to the
/// frame `X_1..X_{n-1}`; the orbit-generation condition is not checked.
pub fn prime_criterion_check<M: BraidModule>(m: &M, s: &M::Elem) -> Result<CheckReport> {
    let n = m.strands();
    if n < 3 {
        return Err(Error::Size(format!("need at least 3 strands, got {n}")));
    }
    let act = |l: &[i32], e: &M::Elem| -> Result<M::Elem> { m.act(&word(n, l)?, e) };
    let mut r = CheckReport::default();
    r.items.push(CheckItem { name: "(0)".into(), status: CheckStatus::NotChecked, detail: String::new() });

    let s_inv = m.inverse(s);
    let s_x2i = act(&[-2], s)?;
    r.record("(1a)", &act(&[-2, -1], s)?, &m.mul(&s_inv, &s_x2i));
    let s_x1 = act(&[1], s)?;
    r.record("(1b)", &act(&[1, -2, -1], s)?, &m.mul(&m.inverse(&s_x1), &act(&[1, -2], s)?));

    let tau = m.mul(s, &act(&[-1], s)?);
    r.record("(2a)", &act(&[1, 1], &tau)?, &tau);
    let t = s_x2i;
    let lhs = m.mul(&m.mul(&m.inverse(&t), &tau), &t);
    r.record("(2b)", &lhs, &m.inverse(&act(&[1], &tau)?));

    for j in 3..n as i32 {
        r.record(format!("(3) x{j}"), &act(&[j], s)?, s);
    }
    r.record("(4)", &act(&[1, 1, 2, 2, -1, -1, -2, -2], s)?, s);
    Ok(r)
}
