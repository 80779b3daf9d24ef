//! The semidirect product of the nine-strand quotient with the graph-form
//! group, modulo the identification of the two central involutions.
//!
//! Elements are pairs `(b, g)` with product `(b1, g1)(b2, g2) = (b1 b2, (g1)_{b2} g2)`.
//! The central bit of `b` is moved into `g`, so `b` always has `eps = 0`.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::btilde::comb::z_word;
use crate::btilde::nf::{btilde_nf, BTildeNF};
use crate::error::{Error, Result};
use crate::extension::{g0g_act_braid, G0Element, GnElement};
use crate::words::catalog::{GRAPH_INDICES, STRANDS};
use crate::words::{degree, BraidWord, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QElement {
    pub braid: BTildeNF,
    pub g0: G0Element,
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {})", self.braid, self.g0)
    }
}

/// Bits `chi[i-1]` with `(g_i)_p = g_i t^{chi}` for a pure element `p`.
type Chi = [u8; 9];

fn chi_of_word(w: &BraidWord) -> Result<Chi> {
    let mut out = [0u8; 9];
    for &i in &GRAPH_INDICES {
        let g = G0Element::g(i)?;
        let img = g0g_act_braid(w, &g)?;
        out[i - 1] = if img == g {
            0
        } else if img == g.mul(&G0Element::tau()) {
            1
        } else {
            return Err(Error::Unsupported(format!("pure braid {w} sends g{i} to {img}")));
        };
    }
    Ok(out)
}

fn add(a: Chi, b: Chi) -> Chi {
    std::array::from_fn(|k| a[k] ^ b[k])
}

/// Characters of `s_1` and `u_1..u_8` on the graph-form generators.
struct ChiBasis {
    s1: Chi,
    u: [Chi; 8],
}

fn chi_basis() -> &'static ChiBasis {
    static BASIS: OnceLock<ChiBasis> = OnceLock::new();
    BASIS.get_or_init(|| {
        let z = |i, j| chi_of_word(&z_word(i, j, STRANDS).expect("valid pair").pow(2)).expect("pure braids act centrally");
        // linear parts: s_12 = s1, s_1j = u_{j-1}..u_2 s1, s_23 = u_2 u_1 s1
        let mut u = [[0u8; 9]; 8];
        u[0] = add(z(2, 3), z(1, 3));
        for (k, slot) in u.iter_mut().enumerate().skip(1) {
            *slot = add(z(1, k + 2), z(1, k + 1));
        }
        ChiBasis { s1: z(1, 2), u }
    })
}

fn chi_of_coords(c: &GnElement) -> Chi {
    let basis = chi_basis();
    let mut out = [0u8; 9];
    let mut acc = |ch: &Chi, e: i64| {
        if e.rem_euclid(2) == 1 {
            out = add(out, *ch);
        }
    };
    acc(&basis.s1, c.a());
    for (k, &e) in c.b().iter().enumerate() {
        acc(&basis.u[k], e);
    }
    out
}

/// Action of a pure element with the given coordinates.
fn act_pure(c: &GnElement, g: &G0Element) -> G0Element {
    let chi = chi_of_coords(c);
    let flip: i64 = GRAPH_INDICES.iter().map(|&i| g.exponent(i) * chi[i - 1] as i64).sum();
    if flip.rem_euclid(2) == 1 {
        g.mul(&G0Element::tau())
    } else {
        g.clone()
    }
}

/// Action of a quotient element on the graph-form group.
pub fn act_nf(b: &BTildeNF, g: &G0Element) -> Result<G0Element> {
    if b.strands() != STRANDS {
        return Err(Error::StrandMismatch(b.strands(), STRANDS));
    }
    g0g_act_braid(&b.lift_word(), &act_pure(&b.coords, g))
}

fn fold(braid: BTildeNF, g0: G0Element) -> QElement {
    let bit = braid.coords.eps();
    let braid = BTildeNF { perm: braid.perm, coords: braid.coords.without_nu() };
    let g0 = if bit == 1 { g0.mul(&G0Element::tau()) } else { g0 };
    QElement { braid, g0 }
}

impl QElement {
    pub fn identity() -> Self {
        QElement { braid: BTildeNF::identity(STRANDS), g0: G0Element::identity() }
    }

    pub fn is_identity(&self) -> bool {
        self.braid.is_identity() && self.g0.is_identity()
    }

    pub fn tau() -> Self {
        Self::from_g0(G0Element::tau())
    }

    pub fn from_braid(w: &BraidWord) -> Result<Self> {
        if w.strands() != STRANDS {
            return Err(Error::StrandMismatch(w.strands(), STRANDS));
        }
        Ok(fold(btilde_nf(w)?, G0Element::identity()))
    }

    pub fn from_g0(g: G0Element) -> Self {
        QElement { braid: BTildeNF::identity(STRANDS), g0: g }
    }

    pub fn from_parts(braid: BTildeNF, g0: G0Element) -> Result<Self> {
        if braid.strands() != STRANDS {
            return Err(Error::StrandMismatch(braid.strands(), STRANDS));
        }
        Ok(fold(braid, g0))
    }

    pub fn mul(&self, y: &QElement) -> QElement {
        let braid = self.braid.mul(&y.braid).expect("nine strands on both sides");
        let moved = act_nf(&y.braid, &self.g0).expect("nine strands");
        fold(braid, moved.mul(&y.g0))
    }

    pub fn inverse(&self) -> QElement {
        let braid = self.braid.inverse().expect("nine strands");
        let g0 = act_nf(&braid, &self.g0.inverse()).expect("nine strands");
        fold(braid, g0)
    }

    pub fn pow(&self, k: i64) -> QElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(QElement::identity(), |acc, _| acc.mul(&base))
    }

    /// `(self)_by = by^-1 self by`.
    pub fn conj(&self, by: &QElement) -> QElement {
        by.inverse().mul(self).mul(by)
    }

    pub fn commutator(x: &QElement, y: &QElement) -> QElement {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }
}

pub fn q_mul(x: &QElement, y: &QElement) -> QElement {
    x.mul(y)
}

pub fn q_inv(x: &QElement) -> QElement {
    x.inverse()
}

pub fn q_eq(x: &QElement, y: &QElement) -> bool {
    x == y
}

/// Permutation of the braid component.
pub fn psi9(x: &QElement) -> Permutation {
    x.braid.perm.clone()
}

/// Exponent sum of the braid component: each `Z_ij^2` has degree two and
/// each `s_ij` has `s_1`-exponent one.
pub fn ab9(x: &QElement) -> i64 {
    2 * x.braid.coords.a() + degree(&x.braid.lift_word())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::t_letter;
    use proptest::prelude::*;

    fn letters() -> impl Strategy<Value = Vec<i32>> {
        prop::collection::vec((1..=8i32, any::<bool>()).prop_map(|(k, s)| if s { k } else { -k }), 0..10)
    }

    fn g0() -> impl Strategy<Value = G0Element> {
        (0..2u8, prop::collection::vec(-2i64..=2, 8)).prop_map(|(e, v)| {
            let mut b = [0i64; 9];
            for (k, &i) in GRAPH_INDICES.iter().enumerate() {
                b[i - 1] = v[k];
            }
            G0Element::from_parts(e, b).unwrap()
        })
    }

    fn q() -> impl Strategy<Value = QElement> {
        (letters(), g0()).prop_map(|(l, g)| {
            let b = QElement::from_braid(&BraidWord::from_letters(9, l).unwrap()).unwrap();
            b.mul(&QElement::from_g0(g))
        })
    }

    #[test]
    fn squares_act_centrally() {
        for j in 2..=9 {
            for i in 1..j {
                chi_of_word(&z_word(i, j, 9).unwrap().pow(2)).unwrap();
            }
        }
    }

    #[test]
    fn examples() {
        let g1 = QElement::from_g0(G0Element::g(1).unwrap());
        let g2g1 = QElement::from_g0(G0Element::g(2).unwrap().mul(&G0Element::g(1).unwrap()));
        let t2 = QElement::from_braid(&t_letter(2).unwrap()).unwrap();
        assert_eq!(g1.mul(&t2), t2.mul(&g2g1));
        let c = BraidWord::from_letters(9, [1, 1, 2, 2, -1, -1, -2, -2]).unwrap();
        assert_eq!(QElement::from_braid(&c).unwrap(), QElement::tau());
        assert_ne!(g1, g2g1);
        assert!(g1.mul(&g1.inverse()).is_identity());
        let t1 = QElement::from_braid(&t_letter(1).unwrap()).unwrap();
        assert_eq!(psi9(&t1), Permutation::transposition(9, 1, 2));
        assert_eq!(ab9(&t1), 1);
        assert_eq!(ab9(&g1), 0);
        assert!(psi9(&g1).is_identity());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn nf_action_matches_word_action(l in letters(), g in g0()) {
            let w = BraidWord::from_letters(9, l).unwrap();
            prop_assert_eq!(act_nf(&btilde_nf(&w).unwrap(), &g).unwrap(), g0g_act_braid(&w, &g).unwrap());
        }

        #[test]
        fn group_laws(x in q(), y in q(), z in q()) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert!(x.mul(&x.inverse()).is_identity());
            prop_assert!(x.inverse().mul(&x).is_identity());
        }

        #[test]
        fn embeddings_are_homomorphisms(l1 in letters(), l2 in letters(), g in g0(), h in g0()) {
            let w1 = BraidWord::from_letters(9, l1).unwrap();
            let w2 = BraidWord::from_letters(9, l2).unwrap();
            let lhs = QElement::from_braid(&w1.mul(&w2).unwrap()).unwrap();
            prop_assert_eq!(lhs, QElement::from_braid(&w1).unwrap().mul(&QElement::from_braid(&w2).unwrap()));
            prop_assert_eq!(QElement::from_g0(g.mul(&h)), QElement::from_g0(g.clone()).mul(&QElement::from_g0(h)));
            let b = QElement::from_braid(&w1).unwrap();
            prop_assert_eq!(QElement::from_g0(g.clone()).conj(&b), QElement::from_g0(g0g_act_braid(&w1, &g).unwrap()));
            prop_assert_eq!(ab9(&b), degree(&w1));
            prop_assert_eq!(psi9(&b), crate::words::psi(&w1));
        }
    }
}
