//! Abelianization through the Smith normal form of the relator exponent matrix.

use std::fmt;

use serde::Serialize;

/// A finitely generated abelian group `Z^free_rank + Z/t_1 + ... + Z/t_k`
/// with `1 < t_1 | t_2 | ... | t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Diagonal entries of the Smith normal form of an integer matrix given as rows.
pub fn smith_diagonal(rows: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let m = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let pivot = (t..m)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // divisibility: fold a non-multiple into the pivot row
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                    }
                    None => break,
                }
            } else {
                // move the smallest remainder into the pivot position
                let (bi, bj) = (t..m)
                    .map(|i| (i, t))
                    .chain((t..cols).map(|j| (t, j)))
                    .filter(|&(i, j)| a[i][j] != 0)
                    .min_by_key(|&(i, j)| a[i][j].abs())
                    .expect("pivot is nonzero");
                a.swap(t, bi);
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
            }
        }
        diag.push(a[t][t].unsigned_abs() as u64);
        t += 1;
    }
    diag
}

/// Abelianization of `generators` generators modulo relators with the given exponent sums.
pub fn abelian_group(generators: usize, exponent_rows: &[Vec<i64>]) -> AbelianGroup {
    let diag = smith_diagonal(exponent_rows, generators);
    let nonzero = diag.iter().filter(|&&d| d != 0).count();
    let mut torsion: Vec<u64> = diag.into_iter().filter(|&d| d > 1).collect();
    torsion.sort_unstable();
    AbelianGroup { free_rank: generators - nonzero, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(abelian_group(2, &[vec![0, 0]]).to_string(), "Z^2");
        assert_eq!(abelian_group(2, &[vec![1, -1]]).to_string(), "Z");
        assert_eq!(abelian_group(2, &[vec![1, -1], vec![1, 1]]).to_string(), "Z/2");
        assert_eq!(abelian_group(1, &[vec![1]]).to_string(), "0");
        assert_eq!(abelian_group(2, &[vec![2, 0], vec![0, 3]]).torsion, vec![6]);
        assert_eq!(abelian_group(3, &[vec![4, 6, 0], vec![6, 4, 0]]).to_string(), "Z + Z/2 + Z/10");
    }

    fn det2(a: i64, b: i64, c: i64, d: i64) -> u64 {
        (a * d - b * c).unsigned_abs()
    }

    proptest! {
        #[test]
        fn square_two_by_two_order_is_determinant(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9) {
            let g = abelian_group(2, &[vec![a, b], vec![c, d]]);
            let det = det2(a, b, c, d);
            if det == 0 {
                prop_assert!(g.free_rank >= 1);
            } else {
                prop_assert_eq!(g.free_rank, 0);
                prop_assert_eq!(g.torsion.iter().product::<u64>(), det);
                prop_assert!(g.torsion.windows(2).all(|w| w[1] % w[0] == 0));
            }
        }
    }
}
