//! Images of the generators under the dictionary map into `Q`, and the
//! conjugation identities they satisfy.

use serde::Serialize;

use crate::btilde::xi::{render_t, xi};
use crate::error::{Error, Result};
use crate::extension::G0Element;
use crate::g9tower::q::QElement;
use crate::words::catalog::{t_letter, GRAPH_INDICES, STRANDS};
use crate::words::BraidWord;

/// `t_i`, the embedded catalog half-twist.
pub fn t_elem(i: usize) -> Result<QElement> {
    if !(1..=9).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i as i64, bound: 9 });
    }
    QElement::from_braid(&t_letter(i as i32)?)
}

/// `xi_i`, embedded.
pub fn xi_elem(i: usize) -> Result<QElement> {
    QElement::from_braid(&xi(i)?.expression)
}

fn g_elem(i: usize) -> Result<QElement> {
    Ok(QElement::from_g0(G0Element::g(i)?))
}

/// Image of the generator `A_i`. Index 4 is unsupported: it would need a
/// `g_4`, which is not a generator of the graph-form group.
pub fn a_elem(i: usize) -> Result<QElement> {
    let g = || g_elem(i);
    let x = || xi_elem(i);
    Ok(match i {
        1 | 6 => g()?,
        2 | 5 | 8 => g()?.inverse().mul(&x()?),
        3 | 7 => g()?.mul(&x()?.inverse()),
        9 => QElement::tau().mul(&g()?.inverse()),
        4 => return Err(Error::Unsupported("a4 needs g4, which is not a generator of G0(9)".into())),
        _ => return Err(Error::IndexOutOfRange { index: i as i64, bound: 9 }),
    })
}

/// `v_1 = (X_2 X_1 X_2^-1)^2 X_2^-2`, embedded.
pub fn v1_elem() -> QElement {
    let w = BraidWord::from_letters(STRANDS, [2, 1, -2, 2, 1, -2, -2, -2]).expect("valid letters");
    QElement::from_braid(&w).expect("nine strands")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DictEntry {
    pub index: usize,
    pub t: QElement,
    /// `None` where the image is unsupported.
    pub a: Option<QElement>,
    pub xi: QElement,
    pub xi_word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dictionary {
    pub entries: Vec<DictEntry>,
    pub v1: QElement,
}

pub fn dictionary() -> Result<Dictionary> {
    let entries = (1..=9)
        .map(|i| {
            Ok(DictEntry {
                index: i,
                t: t_elem(i)?,
                a: a_elem(i).ok(),
                xi: xi_elem(i)?,
                xi_word: render_t(&xi(i)?.spelling),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Dictionary { entries, v1: v1_elem() })
}

/// One conjugation identity `(a_i)_{t_i^{sign}} = expected`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationCheck {
    pub index: usize,
    pub sign: i8,
    pub pass: bool,
    pub computed: String,
    pub expected: String,
}

/// Expected value of both conjugates of `a_i` by `t_i^{+-1}`.
pub fn expected_conjugate(i: usize) -> Result<QElement> {
    let inv = a_elem(i)?.inverse();
    Ok(if matches!(i, 1 | 6 | 9) { QElement::tau().mul(&inv) } else { inv })
}

/// Checks `(a_i)_{t_i} = (a_i)_{t_i^-1} = expected_conjugate(i)` for every
/// supported index.
pub fn verify_a_conjugations() -> Result<Vec<ConjugationCheck>> {
    let mut out = Vec::new();
    for &i in &GRAPH_INDICES {
        let a = a_elem(i)?;
        let t = t_elem(i)?;
        let want = expected_conjugate(i)?;
        for (sign, by) in [(1i8, t.clone()), (-1, t.inverse())] {
            let got = a.conj(&by);
            out.push(ConjugationCheck {
                index: i,
                sign,
                pass: got == want,
                computed: got.to_string(),
                expected: want.to_string(),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g9tower::q::{ab9, psi9};
    use crate::words::catalog::catalog_t;
    use crate::words::Permutation;

    #[test]
    fn dictionary_shapes() {
        assert_eq!(a_elem(1).unwrap(), g_elem(1).unwrap());
        assert_eq!(a_elem(9).unwrap(), QElement::tau().mul(&g_elem(9).unwrap().inverse()));
        assert!(matches!(a_elem(4), Err(Error::Unsupported(_))));
        assert!(a_elem(10).is_err());
        let d = dictionary().unwrap();
        assert_eq!(d.entries.len(), 9);
        assert!(d.entries[3].a.is_none());
        for e in &d.entries {
            let (p, q) = catalog_t(e.index).unwrap().endpoints;
            assert_eq!(psi9(&e.t), Permutation::transposition(9, p, q));
            assert_eq!(ab9(&e.t), 1);
            assert!(psi9(&e.xi).is_identity());
        }
    }

    #[test]
    fn conjugation_identities() {
        for c in verify_a_conjugations().unwrap() {
            assert!(c.pass, "{c:?}");
        }
    }
}
