//! Light Tietze simplification with a log of every applied move.

use std::collections::HashSet;

use serde::Serialize;

use crate::vankampen::Presentation;
use crate::words::FreeWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Simplified {
    #[serde(skip)]
    pub presentation: Presentation,
    pub log: Vec<String>,
}

/// Smallest letter sequence among all cyclic rotations of `r` and `r^-1`.
fn cyclic_key(r: &FreeWord) -> Vec<i32> {
    let mut best: Option<Vec<i32>> = None;
    for w in [r.letters().to_vec(), r.inverse().letters().to_vec()] {
        for k in 0..w.len().max(1) {
            let rot: Vec<i32> = w[k..].iter().chain(&w[..k]).copied().collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

fn reduce_and_dedup(p: &Presentation, log: &mut Vec<String>) -> (Presentation, bool) {
    let mut changed = false;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in &p.relators {
        let c = r.cyclically_reduced();
        if c != *r {
            log.push(format!("cyclically reduce {r} to {c}"));
            changed = true;
        }
        if c.is_identity() {
            log.push("drop trivial relator".into());
            changed = true;
            continue;
        }
        if !seen.insert(cyclic_key(&c)) {
            log.push(format!("drop repeated relator {c}"));
            changed = true;
            continue;
        }
        out.push(c);
    }
    (Presentation { generators: p.generators, relators: out }, changed)
}

/// Finds a relator `g_a^e` or `g_a^e1 g_b^e2` (`a != b`) and eliminates the
/// larger-index generator.
fn eliminate_one(p: &Presentation, log: &mut Vec<String>) -> Option<Presentation> {
    let m = p.generators;
    let (pos, gone, image) = p.relators.iter().enumerate().find_map(|(k, r)| match *r.letters() {
        [x] => Some((k, x.unsigned_abs() as usize, Vec::new())),
        [x, y] if x.abs() != y.abs() => {
            // g_x g_y = 1 gives each generator as a power of the other
            let (keep, gone) = if x.abs() > y.abs() { (y, x) } else { (x, y) };
            // gone^s = keep^-1 (up to rotation) so gone = keep^(-s*sign(keep))
            let s = gone.signum();
            let img = vec![-keep * s];
            Some((k, gone.unsigned_abs() as usize, img))
        }
        _ => None,
    })?;
    let new_rank = m - 1;
    let renumber = |j: usize| if j > gone { j - 1 } else { j };
    let images: Vec<FreeWord> = (1..=m)
        .map(|j| {
            let letters: Vec<i32> = if j == gone {
                image.iter().map(|&l| l.signum() * renumber(l.unsigned_abs() as usize) as i32).collect()
            } else {
                vec![renumber(j) as i32]
            };
            FreeWord::from_letters(new_rank, letters).expect("letters in range")
        })
        .collect();
    let image_text = if image.is_empty() {
        "1".to_string()
    } else {
        FreeWord::from_letters(m, image.clone()).expect("letters in range").to_string()
    };
    log.push(format!("eliminate g{gone} = {image_text} using relator {}", p.relators[pos]));
    if gone < m {
        log.push(format!("renumber g{}..g{m} down by one", gone + 1));
    }
    let relators = p
        .relators
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != pos)
        .map(|(_, r)| if new_rank == 0 { FreeWord::identity(0) } else { r.substitute(&images) })
        .collect();
    Some(Presentation { generators: new_rank, relators })
}

/// Applies up to `passes` rounds of reduction, deduplication and elimination.
pub fn tietze_simplify(p: &Presentation, passes: usize) -> Simplified {
    let mut log = Vec::new();
    let mut cur = p.clone();
    for _ in 0..passes {
        let (next, mut changed) = reduce_and_dedup(&cur, &mut log);
        cur = next;
        if let Some(next) = eliminate_one(&cur, &mut log) {
            cur = next;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    Simplified { presentation: cur, log }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vankampen::parse_presentation;
    use proptest::prelude::*;

    #[test]
    fn eliminates_a_generator() {
        let p = parse_presentation("gens: 2\nrel: g1 g2^-1").unwrap();
        let s = tietze_simplify(&p, 10);
        assert_eq!(s.presentation.to_string(), "gens: 1\n");
        assert!(s.log[0].starts_with("eliminate g2 = g1"));
    }

    #[test]
    fn collapses_duplicates() {
        let p = parse_presentation("gens: 3\nrel: g1 g2 g1^-1 g2^-1\nrel: g2 g1 g2^-1 g1^-1\nrel: g2 g1^-1 g2^-1 g1\nrel: g3 g3^-1").unwrap();
        let s = tietze_simplify(&p, 10);
        assert_eq!(s.presentation.relators().len(), 1);
        assert_eq!(s.presentation.generators(), 3);
    }

    #[test]
    fn single_letter_relator() {
        let p = parse_presentation("gens: 2\nrel: g1 g2\nrel: g2^-1").unwrap();
        let s = tietze_simplify(&p, 10);
        assert_eq!(s.presentation.generators(), 0);
        assert!(s.presentation.abelianization().is_trivial());
        let p = parse_presentation("gens: 2\nrel: g1 g2 g1\nrel: g2^-1").unwrap();
        let s = tietze_simplify(&p, 10);
        assert_eq!(s.presentation.to_string(), "gens: 1\nrel: g1 g1\n");
    }

    fn pres() -> impl Strategy<Value = Presentation> {
        let letter = (1..=4i32, any::<bool>()).prop_map(|(k, s)| if s { k } else { -k });
        prop::collection::vec(prop::collection::vec(letter, 0..6), 0..6).prop_map(|rels| {
            let rels = rels.into_iter().map(|l| FreeWord::from_letters(4, l).unwrap()).collect();
            Presentation::new(4, rels).unwrap()
        })
    }

    proptest! {
        #[test]
        fn preserves_abelianization(p in pres()) {
            let s = tietze_simplify(&p, 20);
            prop_assert_eq!(s.presentation.abelianization(), p.abelianization());
        }
    }
}
