//! Classification of pairs of half-twists.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::btilde::nf::btilde_eq;
use crate::error::Result;
use crate::words::catalog::STRANDS;
use crate::words::{braid_eq, catalog_t, BraidWord, HalfTwist};

/// How two half-twists sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairClass {
    Equal,
    OrderlyAdjacent,
    AntiOrderlyAdjacent,
    Disjoint,
    Transversal,
    Indeterminate,
}

impl PairClass {
    pub fn is_adjacent(self) -> bool {
        matches!(self, PairClass::OrderlyAdjacent | PairClass::AntiOrderlyAdjacent)
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PairClass::Equal => "equal",
            PairClass::OrderlyAdjacent => "orderly-adjacent",
            PairClass::AntiOrderlyAdjacent => "anti-orderly-adjacent",
            PairClass::Disjoint => "disjoint",
            PairClass::Transversal => "transversal",
            PairClass::Indeterminate => "indeterminate",
        };
        f.write_str(s)
    }
}

/// Classifies a pair using endpoints polarized from the smaller to the larger
/// point, and commutation in the braid group and in the quotient.
pub fn classify_pair(h1: &HalfTwist, h2: &HalfTwist) -> Result<PairClass> {
    let (o1, e1) = h1.endpoints();
    let (o2, e2) = h2.endpoints();
    let w1 = h1.as_word();
    let w2 = h2.as_word();
    let shared = [o1 == o2, o1 == e2, e1 == o2, e1 == e2].iter().filter(|&&b| b).count();
    Ok(match shared {
        2 if braid_eq(&w1, &w2)? => PairClass::Equal,
        2 => PairClass::Indeterminate,
        1 if e1 == o2 || e2 == o1 => PairClass::OrderlyAdjacent,
        1 => PairClass::AntiOrderlyAdjacent,
        _ => {
            let comm = BraidWord::commutator(&w1, &w2)?;
            let id = BraidWord::identity(w1.strands());
            if braid_eq(&comm, &id)? {
                PairClass::Disjoint
            } else if btilde_eq(&comm, &id)? {
                PairClass::Transversal
            } else {
                PairClass::Indeterminate
            }
        }
    })
}

/// Class of the catalog pair `(T_i, T_j)`, `1 <= i, j <= 9`.
pub fn catalog_class(i: usize, j: usize) -> Result<PairClass> {
    static TABLE: OnceLock<Vec<Vec<PairClass>>> = OnceLock::new();
    catalog_t(i)?;
    catalog_t(j)?;
    let t = TABLE.get_or_init(|| {
        (1..=STRANDS)
            .map(|a| {
                (1..=STRANDS)
                    .map(|b| {
                        let ha = catalog_t(a).expect("index in range").halftwist;
                        let hb = catalog_t(b).expect("index in range").halftwist;
                        classify_pair(&ha, &hb).expect("catalog words share strands")
                    })
                    .collect()
            })
            .collect()
    });
    Ok(t[i - 1][j - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::catalog::GRAPH_INDICES;

    #[test]
    fn catalog_examples() {
        assert_eq!(catalog_class(1, 2).unwrap(), PairClass::OrderlyAdjacent);
        assert_eq!(catalog_class(1, 7).unwrap(), PairClass::Disjoint);
        assert_eq!(catalog_class(4, 3).unwrap(), PairClass::Transversal);
        assert_eq!(catalog_class(3, 3).unwrap(), PairClass::Equal);
        assert!(catalog_class(0, 3).is_err());
    }

    #[test]
    fn catalog_table_matches_listed_adjacency() {
        let adjacent = [(1, 2), (1, 3), (2, 3), (3, 5), (5, 8), (5, 9), (6, 7), (7, 8), (8, 9)];
        for &i in &GRAPH_INDICES {
            for &j in &GRAPH_INDICES {
                if i >= j {
                    continue;
                }
                let c = catalog_class(i, j).unwrap();
                if adjacent.contains(&(i, j)) {
                    assert!(c.is_adjacent(), "({i},{j}) {c}");
                } else {
                    assert_eq!(c, PairClass::Disjoint, "({i},{j})");
                }
                assert_eq!(c, catalog_class(j, i).unwrap());
            }
        }
    }

    #[test]
    fn t4_row() {
        for i in [2, 6, 7] {
            assert!(catalog_class(4, i).unwrap().is_adjacent(), "{i}");
        }
        for i in [1, 9] {
            assert_eq!(catalog_class(4, i).unwrap(), PairClass::Disjoint, "{i}");
        }
        for i in [3, 5, 8] {
            assert_eq!(catalog_class(4, i).unwrap(), PairClass::Transversal, "{i}");
        }
    }
}
