//! Hurwitz moves and a bounded search for Hurwitz equivalence.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monodromy::{conjugate_expr, product, Factor, FactorizedExpr};
use crate::words::{braid_eq, signature, ArtinSignature, BraidWord};

/// A move at `position` (1-based, acting on factors `position` and
/// `position + 1`); `dir = 1` sends `(a, b)` to `(a b a^-1, a)` and
/// `dir = -1` sends `(a, b)` to `(b, b^-1 a b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub position: usize,
    pub dir: i8,
}

impl Move {
    pub fn inverse(self) -> Move {
        Move { position: self.position, dir: -self.dir }
    }
}

/// Search limits: total stored states and total move depth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_states: usize,
    pub max_depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_states: 10_000, max_depth: 24 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum HurwitzOutcome {
    /// A replayable path; `expanded` tells whether powers were expanded first.
    Equivalent { path: Vec<Move>, expanded: bool },
    NotFoundWithinBudget { states: usize, depth: usize },
    NotEquivalent { reason: String },
}

impl HurwitzOutcome {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, HurwitzOutcome::Equivalent { .. })
    }
}

pub fn hurwitz_move(e: &FactorizedExpr, position: usize, dir: i8) -> Result<FactorizedExpr> {
    if position == 0 || position >= e.len() {
        return Err(Error::Position(position));
    }
    let (a, b) = (&e.factors()[position - 1], &e.factors()[position]);
    let (first, second) = match dir {
        1 => {
            let moved = b.halftwist.conj(&a.word().inverse())?;
            (Factor { halftwist: moved, power: b.power() }, a.clone())
        }
        -1 => {
            let moved = a.halftwist.conj(&b.word())?;
            (b.clone(), Factor { halftwist: moved, power: a.power() })
        }
        _ => return Err(Error::Unsupported(format!("move direction {dir}"))),
    };
    let mut factors = e.factors().to_vec();
    factors[position - 1] = first;
    factors[position] = second;
    Ok(e.with_factors(factors))
}

/// Replays a path of moves.
pub fn apply_moves(e: &FactorizedExpr, path: &[Move]) -> Result<FactorizedExpr> {
    path.iter().try_fold(e.clone(), |acc, m| hurwitz_move(&acc, m.position, m.dir))
}

type Key = Vec<ArtinSignature>;

struct Node {
    expr: FactorizedExpr,
    key: Key,
    parent: Option<(usize, Move)>,
}

struct Side {
    nodes: Vec<Node>,
    index: HashMap<Key, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn new(e: FactorizedExpr) -> Self {
        let key: Key = e.factors().iter().map(|f| signature(&f.word())).collect();
        let mut index = HashMap::new();
        index.insert(key.clone(), 0);
        Side { nodes: vec![Node { expr: e, key, parent: None }], index, frontier: vec![0], depth: 0 }
    }

    fn path_to(&self, mut i: usize) -> Vec<Move> {
        let mut out = Vec::new();
        while let Some((p, m)) = self.nodes[i].parent {
            out.push(m);
            i = p;
        }
        out.reverse();
        out
    }
}

fn child(node: &Node, m: Move) -> Result<Node> {
    let expr = hurwitz_move(&node.expr, m.position, m.dir)?;
    let mut key = node.key.clone();
    let p = m.position;
    key[p - 1] = signature(&expr.factors()[p - 1].word());
    key[p] = signature(&expr.factors()[p].word());
    Ok(Node { expr, key, parent: None })
}

/// Bidirectional breadth-first search for a move sequence from `e1` to `e2`.
/// Factors are compared as braids; powers are expanded before searching.
pub fn hurwitz_equivalent(e1: &FactorizedExpr, e2: &FactorizedExpr, budget: Budget) -> Result<HurwitzOutcome> {
    if e1.strands() != e2.strands() {
        return Err(Error::StrandMismatch(e1.strands(), e2.strands()));
    }
    let expanded = e1.factors().iter().chain(e2.factors()).any(|f| f.power() > 1);
    let (a, b) = (e1.expanded(), e2.expanded());
    if a.len() != b.len() {
        return Ok(HurwitzOutcome::NotEquivalent { reason: "factor counts differ".into() });
    }
    if !braid_eq(&product(&a), &product(&b))? {
        return Ok(HurwitzOutcome::NotEquivalent { reason: "products differ".into() });
    }
    let mut sides = [Side::new(a), Side::new(b)];
    if sides[0].nodes[0].key == sides[1].nodes[0].key {
        return Ok(HurwitzOutcome::Equivalent { path: vec![], expanded });
    }
    let t = sides[0].nodes[0].expr.len();
    let moves: Vec<Move> =
        (1..t).flat_map(|p| [Move { position: p, dir: 1 }, Move { position: p, dir: -1 }]).collect();
    loop {
        let states = sides[0].nodes.len() + sides[1].nodes.len();
        let depth = sides[0].depth + sides[1].depth;
        if depth >= budget.max_depth || moves.is_empty() {
            return Ok(HurwitzOutcome::NotFoundWithinBudget { states, depth });
        }
        let s = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        if sides[s].frontier.is_empty() {
            return Ok(HurwitzOutcome::NotFoundWithinBudget { states, depth });
        }
        let frontier = std::mem::take(&mut sides[s].frontier);
        let mut next = Vec::new();
        for i in frontier {
            for &m in &moves {
                let mut c = child(&sides[s].nodes[i], m)?;
                if sides[s].index.contains_key(&c.key) {
                    continue;
                }
                c.parent = Some((i, m));
                let idx = sides[s].nodes.len();
                sides[s].index.insert(c.key.clone(), idx);
                let meet = sides[1 - s].index.get(&c.key).copied();
                sides[s].nodes.push(c);
                next.push(idx);
                if let Some(j) = meet {
                    let (fi, bi) = if s == 0 { (idx, j) } else { (j, idx) };
                    let mut path = sides[0].path_to(fi);
                    path.extend(sides[1].path_to(bi).into_iter().rev().map(Move::inverse));
                    return Ok(HurwitzOutcome::Equivalent { path, expanded });
                }
                if sides[0].nodes.len() + sides[1].nodes.len() >= budget.max_states {
                    let states = sides[0].nodes.len() + sides[1].nodes.len();
                    return Ok(HurwitzOutcome::NotFoundWithinBudget { states, depth: depth + 1 });
                }
            }
        }
        sides[s].frontier = next;
        sides[s].depth += 1;
    }
}

/// Whether conjugating every factor by `h` gives a Hurwitz-equivalent expression.
pub fn invariance_check(e: &FactorizedExpr, h: &BraidWord, budget: Budget) -> Result<HurwitzOutcome> {
    hurwitz_equivalent(e, &conjugate_expr(e, h)?, budget)
}

/// Whether two expressions agree factor by factor as braids.
pub fn factorwise_eq(e1: &FactorizedExpr, e2: &FactorizedExpr) -> Result<bool> {
    if e1.len() != e2.len() {
        return Ok(false);
    }
    for (a, b) in e1.factors().iter().zip(e2.factors()) {
        if !braid_eq(&a.word(), &b.word())? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{full_twist, HalfTwist};
    use proptest::prelude::*;

    fn delta3() -> FactorizedExpr {
        FactorizedExpr::from_frame_letters(3, &[1, 2, 1, 2, 1, 2]).unwrap()
    }

    #[test]
    fn defining_move() {
        let e = FactorizedExpr::from_frame_letters(3, &[1, 2]).unwrap();
        let m = hurwitz_move(&e, 1, 1).unwrap();
        let a = BraidWord::from_letters(3, [1]).unwrap();
        let b = BraidWord::from_letters(3, [2]).unwrap();
        assert!(braid_eq(&m.factors()[0].word(), &b.conj(&a.inverse()).unwrap()).unwrap());
        assert_eq!(m.factors()[1], e.factors()[0]);
        assert_eq!(hurwitz_move(&m, 1, -1).unwrap(), e);
        assert!(hurwitz_move(&e, 2, 1).is_err());
        assert!(hurwitz_move(&e, 1, 0).is_err());
        let out = hurwitz_equivalent(&e, &m, Budget::default()).unwrap();
        assert_eq!(out, HurwitzOutcome::Equivalent { path: vec![Move { position: 1, dir: 1 }], expanded: false });
    }

    #[test]
    fn swapped_pair_has_a_different_product() {
        let e = FactorizedExpr::from_frame_letters(3, &[1, 2]).unwrap();
        let f = FactorizedExpr::from_frame_letters(3, &[2, 1]).unwrap();
        let tiny = Budget { max_states: 4, max_depth: 2 };
        assert!(matches!(hurwitz_equivalent(&e, &f, tiny).unwrap(), HurwitzOutcome::NotEquivalent { .. }));
    }

    #[test]
    fn tiny_budget_is_reported() {
        let e = delta3();
        let target = conjugate_expr(&e, &BraidWord::from_letters(3, [1]).unwrap()).unwrap();
        let tiny = Budget { max_states: 5, max_depth: 24 };
        assert!(matches!(
            hurwitz_equivalent(&e, &target, tiny).unwrap(),
            HurwitzOutcome::NotFoundWithinBudget { .. }
        ));
    }

    #[test]
    fn invariance_under_a_generator() {
        let e = delta3();
        let h = BraidWord::from_letters(3, [1]).unwrap();
        match invariance_check(&e, &h, Budget::default()).unwrap() {
            HurwitzOutcome::Equivalent { path, .. } => {
                let end = apply_moves(&e, &path).unwrap();
                assert!(factorwise_eq(&end, &conjugate_expr(&e, &h).unwrap()).unwrap());
            }
            other => panic!("{other:?}"),
        }
        let central = invariance_check(&e, &full_twist(3).unwrap(), Budget::default()).unwrap();
        assert_eq!(central, HurwitzOutcome::Equivalent { path: vec![], expanded: false });
    }

    #[test]
    fn powers_are_expanded() {
        let f = Factor::new(HalfTwist::frame(3, 1).unwrap(), 2).unwrap();
        let e = FactorizedExpr::new(3, vec![f]).unwrap();
        let out = hurwitz_equivalent(&e, &e, Budget::default()).unwrap();
        assert_eq!(out, HurwitzOutcome::Equivalent { path: vec![], expanded: true });
    }

    fn expr_strategy() -> impl Strategy<Value = (FactorizedExpr, Vec<(usize, bool)>)> {
        let factor = (prop::collection::vec((1..=3i32, any::<bool>()), 0..3), 1..=3usize, 1..=2u32);
        (prop::collection::vec(factor, 2..5), prop::collection::vec((1..4usize, any::<bool>()), 1..4)).prop_map(
            |(fs, moves)| {
                let factors = fs
                    .into_iter()
                    .map(|(c, b, p)| {
                        let w = BraidWord::from_letters(4, c.into_iter().map(|(k, s)| if s { k } else { -k })).unwrap();
                        Factor::new(HalfTwist::new(w, b).unwrap(), p).unwrap()
                    })
                    .collect();
                (FactorizedExpr::new(4, factors).unwrap(), moves)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn moves_preserve_product_and_invert((e, moves) in expr_strategy()) {
            let mut cur = e.clone();
            for (p, d) in moves {
                let p = 1 + (p - 1) % (cur.len() - 1);
                let dir = if d { 1 } else { -1 };
                let next = hurwitz_move(&cur, p, dir).unwrap();
                prop_assert!(braid_eq(&product(&next), &product(&e)).unwrap());
                prop_assert_eq!(&hurwitz_move(&next, p, -dir).unwrap().factors().len(), &cur.len());
                prop_assert!(factorwise_eq(&hurwitz_move(&next, p, -dir).unwrap(), &cur).unwrap());
                cur = next;
            }
        }

        #[test]
        fn conjugation_commutes_with_moves((e, moves) in expr_strategy()) {
            let h = BraidWord::from_letters(4, [1, -3, 2]).unwrap();
            let (p, d) = moves[0];
            let p = 1 + (p - 1) % (e.len() - 1);
            let dir = if d { 1 } else { -1 };
            let a = conjugate_expr(&hurwitz_move(&e, p, dir).unwrap(), &h).unwrap();
            let b = hurwitz_move(&conjugate_expr(&e, &h).unwrap(), p, dir).unwrap();
            prop_assert!(factorwise_eq(&a, &b).unwrap());
        }
    }
}
