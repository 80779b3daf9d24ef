//! The elements `xi_1..xi_9`, one pure element per catalog half-twist.
//!
//! Each `xi_i` is a quotient of squares over a triangle having `T_i` as an
//! edge. It is stored as a word in catalog letters, its braid word and its
//! coordinates.

use serde::Serialize;

use crate::btilde::nf::lambda_hat;
use crate::error::{Error, Result};
use crate::extension::GnElement;
use crate::words::catalog::STRANDS;
use crate::words::{t_letters, BraidWord};

/// One spelling of `xi_i` as a product of signed catalog letters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XiSpelling {
    pub t_letters: Vec<i32>,
    /// The spelling denotes `c * word` rather than `word`.
    pub times_c: bool,
    /// The spelling denotes the inverse of `xi_i`.
    pub inverted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XiEntry {
    pub index: usize,
    pub spelling: Vec<i32>,
    #[serde(skip)]
    pub expression: BraidWord,
    pub coords: GnElement,
}

/// `Y^-2 (Y^2)_{Z^-1}` spelled in catalog letters: `Y^-2 Z Y^2 Z^-1`.
fn square_quotient(y: i32, z: i32, y_first_negative: bool) -> Vec<i32> {
    let s = if y_first_negative { -1 } else { 1 };
    vec![s * y, s * y, z, -s * y, -s * y, -z]
}

/// `((A)_B)^2 A^-2` with `(A)_B = B^-1 A B`.
fn conj_square_then_inverse_square(a: i32, b: i32) -> Vec<i32> {
    vec![-b, a, a, b, -a, -a]
}

fn plain(t: Vec<i32>) -> XiSpelling {
    XiSpelling { t_letters: t, times_c: false, inverted: false }
}

/// Every listed spelling of `xi_i`; the first one is the definition.
pub fn xi_spellings(i: usize) -> Result<Vec<XiSpelling>> {
    Ok(match i {
        1 => vec![plain(vec![1, 2, 2, -1, -2, -2])],
        2 => vec![
            plain(square_quotient(1, 2, true)),
            plain(square_quotient(4, 2, false)),
            plain(square_quotient(3, 2, true)),
        ],
        3 => vec![plain(square_quotient(1, 3, false))],
        4 => vec![plain(vec![6, 4, 4, -6, -6, -6])],
        // The triangle with edges T_8, (T_8)_{T_5} and T_5.
        5 => vec![plain(conj_square_then_inverse_square(8, 5))],
        6 => vec![
            plain(square_quotient(4, 6, true)),
            plain(square_quotient(7, 6, true)),
            XiSpelling { t_letters: square_quotient(7, 6, false), times_c: true, inverted: true },
        ],
        7 => vec![plain(square_quotient(8, 7, true))],
        8 => vec![plain(square_quotient(9, 8, true))],
        9 => vec![plain(square_quotient(5, 9, false))],
        _ => return Err(Error::IndexOutOfRange { index: i as i64, bound: 9 }),
    })
}

/// Coordinates of `xi_i` according to one spelling.
pub fn spelling_coords(s: &XiSpelling) -> Result<GnElement> {
    let mut g = lambda_hat(&t_letters(&s.t_letters)?)?;
    if s.times_c {
        g = GnElement::nu(STRANDS).mul(&g)?;
    }
    Ok(if s.inverted { g.inverse() } else { g })
}

pub fn xi(i: usize) -> Result<XiEntry> {
    let spelling = xi_spellings(i)?.swap_remove(0).t_letters;
    let expression = t_letters(&spelling)?;
    let coords = lambda_hat(&expression)?;
    Ok(XiEntry { index: i, spelling, expression, coords })
}

/// Transports `(xi_from)_{word} = xi_to`, the word in catalog letters.
pub const XI_TRANSPORTS: [(usize, [i32; 4], usize); 3] = [(4, [-2, 3, -7, 8], 5), (2, [4, 3, -5, -7], 8), (3, [-2, 4, -5, 8], 7)];

/// Renders catalog letters as `t1 t2^-1 ...`.
pub fn render_t(letters: &[i32]) -> String {
    if letters.is_empty() {
        return "1".into();
    }
    letters
        .iter()
        .map(|&l| if l > 0 { format!("t{l}") } else { format!("t{}^-1", -l) })
        .collect::<Vec<_>>()
        .join(" ")
}
