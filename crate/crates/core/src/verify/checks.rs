//! The individual checks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::btilde::{
    btilde_eq, catalog_class, comb, lambda_hat, prime_axioms_check, prime_criterion_check, render_t, spelling_coords,
    xi, xi_spellings, z_word, G0Module, GnModule, PairClass, XI_TRANSPORTS,
};
use crate::error::Result;
use crate::extension::{g0g_act_t, gn_act_word, gn_commutator, gn_s_ij, G0Element, GnElement};
use crate::g9tower::{verify_a_conjugations, verify_action_well_defined};
use crate::monodromy::{
    apply_moves, factorwise_eq, hurwitz_equivalent, hurwitz_move, product, validate_full_twist, Budget, Factor,
    FactorizedExpr, HurwitzOutcome,
};
use crate::vankampen::{presentation, projectivize, Mode, Presentation};
use crate::verify::{gen, run_checks, CheckSpec, Outcome};
use crate::words::catalog::{catalog_relations, GRAPH_INDICES, STRANDS};
use crate::words::{braid_eq, catalog_t, is_trivial, signature, t_letter, t_letters, BraidWord, FreeWord, HalfTwist};

pub const CHECKS: [CheckSpec; 18] = [
    CheckSpec { id: "artin-soundness", anchor: "Artin action respects the braid relations", run: artin_soundness },
    CheckSpec { id: "b9-word-problem", anchor: "word problem on nine strands and catalog relations", run: b9_word_problem },
    CheckSpec { id: "comb-roundtrip", anchor: "combing recomposes to the input", run: comb_roundtrip },
    CheckSpec { id: "gn-relations", anchor: "chain-form extension relations", run: gn_relations },
    CheckSpec { id: "sij-table", anchor: "coordinates of squared half-twists and their commutators", run: sij_table },
    CheckSpec { id: "lambda-equivariance", anchor: "coordinates follow the braid action", run: lambda_equivariance },
    CheckSpec { id: "good-quadrangle", anchor: "squares around a good quadrangle", run: good_quadrangle },
    CheckSpec { id: "btilde-discriminator", anchor: "transversal commutators vanish only in the quotient", run: btilde_discriminator },
    CheckSpec { id: "t4-conjugations", anchor: "catalog conjugations through the extra half-twist", run: t4_conjugations },
    CheckSpec { id: "xi-catalog", anchor: "alternate spellings and transports of xi", run: xi_catalog },
    CheckSpec { id: "xi-commutators", anchor: "commutators of xi follow adjacency", run: xi_commutators },
    CheckSpec { id: "prime-elements", anchor: "prime-element axioms and criterion", run: prime_elements },
    CheckSpec { id: "g0-action-well-defined", anchor: "graph-form action respects the catalog relations", run: g0_action_well_defined },
    CheckSpec { id: "g0-action-table", anchor: "graph-form action matches the four-case table", run: g0_action_table },
    CheckSpec { id: "hurwitz", anchor: "Hurwitz moves and bounded equivalence search", run: hurwitz },
    CheckSpec { id: "van-kampen-goldens", anchor: "single-node presentations and abelianizations", run: van_kampen_goldens },
    CheckSpec { id: "a-conjugations", anchor: "dictionary generators conjugated by their half-twists", run: a_conjugations },
    CheckSpec { id: "determinism", anchor: "identical reports across runs and thread counts", run: determinism },
];

/// Collects failure messages.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn done(self, summary: impl Into<String>) -> Result<Outcome> {
        Ok(Outcome { summary: summary.into(), failures: self.0 })
    }
}

fn w(n: usize, l: &[i32]) -> Result<BraidWord> {
    BraidWord::from_letters(n, l.iter().copied())
}

fn artin_soundness(rng: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let mut relations = 0;
    for n in 2..=9usize {
        for i in 1..n as i32 {
            for j in i + 1..n as i32 {
                let (lhs, rhs) = if j == i + 1 { (w(n, &[i, j, i])?, w(n, &[j, i, j])?) } else { (w(n, &[i, j])?, w(n, &[j, i])?) };
                relations += 1;
                f.expect(signature(&lhs) == signature(&rhs), || format!("n={n}: {lhs} vs {rhs}"));
            }
        }
    }
    for _ in 0..500 {
        let n = rng.gen_range(2..=9);
        let x = gen::word(rng, n, 20);
        f.expect(is_trivial(&x.mul(&x.inverse())?), || format!("n={n}: {x} times its inverse"));
    }
    f.done(format!("{relations} defining relations, 500 random words"))
}

fn b9_word_problem(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    f.expect(braid_eq(&w(9, &[1, 2, 1])?, &w(9, &[2, 1, 2])?)?, || "x1 x2 x1 = x2 x1 x2 rejected".into());
    f.expect(!braid_eq(&w(9, &[1, 2])?, &w(9, &[2, 1])?)?, || "x1 x2 = x2 x1 accepted".into());
    let rels = catalog_relations(true);
    for r in &rels {
        f.expect(braid_eq(&t_letters(&r.lhs)?, &t_letters(&r.rhs)?)?, || format!("{} fails", r.name));
    }
    f.done(format!("2 spot checks, {} catalog relations", rels.len()))
}

fn comb_roundtrip(rng: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    for _ in 0..500 {
        let n = rng.gen_range(2..=9);
        let p = gen::pure_word(rng, n, 40);
        let back = comb(&p)?.recompose()?;
        f.expect(braid_eq(&back, &p)?, || format!("n={n}: {p} recomposes to {back}"));
    }
    f.done("500 pure words")
}

fn gn_relations(rng: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let n = 9;
    let mut f = Failures::default();
    let nu = GnElement::nu(n);
    let mut gens = vec![("s1".to_string(), GnElement::s1(n))];
    for i in 1..n {
        gens.push((format!("u{i}"), GnElement::u(n, i)?));
    }
    // [s1, u2] = v and [u_i, u_{i+1}] = v; every other pair commutes.
    let linked = |a: usize, b: usize| (a == 0 && b == 2) || (a >= 1 && b == a + 1);
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            let c = gn_commutator(&gens[a].1, &gens[b].1)?;
            let want = if linked(a, b) { nu.clone() } else { GnElement::identity(n) };
            f.expect(c == want, || format!("[{}, {}] = {c}", gens[a].0, gens[b].0));
        }
        f.expect(gn_commutator(&nu, &gens[a].1)?.is_identity(), || format!("v does not commute with {}", gens[a].0));
    }
    f.expect(!nu.is_identity() && nu.mul(&nu)?.is_identity(), || "v is not an involution".into());
    for _ in 0..1000 {
        let (x, y, z) = (gen::gn(rng, n), gen::gn(rng, n), gen::gn(rng, n));
        let l = x.mul(&y)?.mul(&z)?;
        let r = x.mul(&y.mul(&z)?)?;
        f.expect(l == r, || format!("associativity: ({x})({y})({z})"));
        f.expect(x.mul(&x.inverse())?.is_identity(), || format!("inverse of {x}"));
    }
    f.done("generator commutators, central involution, 1000 triples")
}

fn sij_table(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let n = 9;
    let mut f = Failures::default();
    let mut pairs = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            let s = gn_s_ij(i, j, n)?;
            let l = lambda_hat(&z_word(i, j, n)?.pow(2))?;
            f.expect(l == s, || format!("pair ({i},{j}): {l} vs {s}"));
            pairs.push(((i, j), s));
        }
    }
    let mut count = 0;
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let ((i, j), (k, l)) = (pairs[a].0, pairs[b].0);
            let shared = [i, j].iter().filter(|x| **x == k || **x == l).count();
            let want = if shared == 1 { GnElement::nu(n) } else { GnElement::identity(n) };
            let c = gn_commutator(&pairs[a].1, &pairs[b].1)?;
            count += 1;
            f.expect(c == want, || format!("[s{i}{j}, s{k}{l}] = {c}"));
        }
    }
    f.done(format!("{} pairs, {count} commutators", pairs.len()))
}

fn lambda_equivariance(rng: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    for _ in 0..200 {
        let p = gen::pure_word(rng, 9, 30);
        let x = gen::word(rng, 9, 12);
        let lhs = lambda_hat(&p.conj(&x)?)?;
        let rhs = gn_act_word(&x, &lambda_hat(&p)?)?;
        f.expect(lhs == rhs, || format!("p = {p}, w = {x}: {lhs} vs {rhs}"));
    }
    f.done("200 pairs on nine strands")
}

fn squares_identity(y: [&BraidWord; 4]) -> Result<bool> {
    let lhs = y[0].pow(2).mul(&y[2].pow(2))?;
    let rhs = y[1].pow(2).mul(&y[3].pow(2))?;
    btilde_eq(&lhs, &rhs)
}

fn good_quadrangle(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    for n in [4usize, 9] {
        let x = |k: i32| w(n, &[k]);
        let (x1, x2, x3) = (x(1)?, x(2)?, x(3)?);
        let outer = x1.conj(&w(n, &[2, 3])?)?;
        f.expect(squares_identity([&x1, &x2, &x3, &outer])?, || format!("n={n}: x1, x2, x3, (x1)_(x2 x3)"));
        let inner3 = x3.conj(&w(n, &[-2])?)?;
        let inner1 = x1.conj(&w(n, &[-2])?)?;
        f.expect(squares_identity([&x1, &inner3, &x3, &inner1])?, || format!("n={n}: x1, (x3)_(x2^-1), x3, (x1)_(x2^-1)"));
        f.expect(!braid_eq(&x1.pow(2).mul(&x3.pow(2))?, &x2.pow(2).mul(&outer.pow(2))?)?, || {
            format!("n={n}: the identity already holds in the braid group")
        });
    }
    f.done("two quadrangles on 4 and 9 strands")
}

fn commutator_t(i: i32, j: i32) -> Result<BraidWord> {
    BraidWord::commutator(&t_letter(i)?, &t_letter(j)?)
}

fn btilde_discriminator(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let id = BraidWord::identity(STRANDS);
    for i in [1, 3, 5, 9, 8] {
        f.expect(btilde_eq(&commutator_t(4, i)?, &id)?, || format!("[t4, t{i}] is not trivial in the quotient"));
    }
    f.expect(!braid_eq(&commutator_t(4, 3)?, &id)?, || "[t4, t3] is trivial in the braid group".into());
    f.done("5 quotient commutators, 1 proper")
}

/// `(T_k)_{word} = T_target` in the braid group.
pub const T4_CONJUGATIONS: [(i32, [i32; 4], i32); 3] = [(4, [-2, 3, -7, 8], 5), (2, [4, 3, -5, -7], 8), (3, [-2, 4, -5, 8], 7)];

fn t4_conjugations(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    for (k, by, target) in T4_CONJUGATIONS {
        let lhs = t_letter(k)?.conj(&t_letters(&by)?)?;
        let rhs = t_letter(target)?;
        if !braid_eq(&lhs, &rhs)? {
            let quotient = if btilde_eq(&lhs, &rhs)? { "holds" } else { "fails" };
            f.0.push(format!("(t{k})_({}) != t{target} in the braid group; it {quotient} in the quotient", render_t(&by)));
        }
    }
    f.done("3 identities")
}

fn xi_catalog(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let mut spellings = 0;
    for i in 1..=9 {
        let all = xi_spellings(i)?;
        let first = spelling_coords(&all[0])?;
        for s in &all[1..] {
            spellings += 1;
            let c = spelling_coords(s)?;
            f.expect(c == first, || format!("xi{i}: {} gives {c}, expected {first}", render_t(&s.t_letters)));
        }
    }
    for (from, by, to) in XI_TRANSPORTS {
        let moved = gn_act_word(&t_letters(&by)?, &xi(from)?.coords)?;
        let want = xi(to)?.coords;
        f.expect(moved == want, || format!("(xi{from})_({}) = {moved}, expected {want}", render_t(&by)));
    }
    f.done(format!("{spellings} alternate spellings, {} transports", XI_TRANSPORTS.len()))
}

fn xi_commutators(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let c = GnElement::nu(STRANDS);
    let mut adjacent = 0;
    for i in 1..=9 {
        for j in i + 1..=9 {
            let class = catalog_class(i, j)?;
            let comm = gn_commutator(&xi(i)?.coords, &xi(j)?.coords)?;
            let want = if class.is_adjacent() { c.clone() } else { GnElement::identity(STRANDS) };
            adjacent += class.is_adjacent() as usize;
            f.expect(comm == want, || format!("[xi{i}, xi{j}] = {comm} for {class} pair"));
        }
    }
    f.done(format!("36 pairs, {adjacent} adjacent"))
}

fn prime_elements(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let frame = |b| HalfTwist::frame(9, b);
    let gm = GnModule { n: 9 };
    let u = lambda_hat(&w(9, &[2, 1, 1, -2, -2, -2])?)?;
    let adj = vec![frame(2)?];
    let dis = (3..9).map(frame).collect::<Result<Vec<_>>>()?;
    let mut report = |name: &str, r: crate::btilde::CheckReport| {
        for item in r.failures() {
            f.0.push(format!("{name}: {} ({})", item.name, item.detail));
        }
    };
    report("u axioms", prime_axioms_check(&gm, &u, &frame(1)?, &adj, &dis)?);
    report("u criterion", prime_criterion_check(&gm, &u)?);
    let t = |i| catalog_t(i).map(|e| e.halftwist);
    let g1 = G0Element::g(1)?;
    let g_adj = vec![t(2)?, t(3)?];
    let g_dis = [4, 5, 6, 7, 8, 9].into_iter().map(t).collect::<Result<Vec<_>>>()?;
    report("g1 axioms", prime_axioms_check(&G0Module, &g1, &t(1)?, &g_adj, &g_dis)?);
    report("g1 criterion", prime_criterion_check(&G0Module, &g1)?);
    let probe = prime_axioms_check(&gm, &GnElement::s1(9), &frame(1)?, &adj, &dis)?;
    f.expect(probe.status("(1) inverse action") == Some(crate::btilde::CheckStatus::Fail), || {
        "s1 probe passes axiom (1)".into()
    });
    f.done("u and g1 pass, s1 probe rejected")
}

fn g0_action_well_defined(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let checks = verify_action_well_defined()?;
    for c in &checks {
        f.expect(c.pass, || format!("{}: {}", c.relation, c.mismatches.join("; ")));
    }
    f.done(format!("{} relations on 8 generators", checks.len()))
}

/// Image of `g_i` under `T_k^{sign}` predicted by the pair class, given `g_k`.
fn predicted(class: PairClass, gi: &G0Element, gk: &G0Element, inverse: bool) -> Option<G0Element> {
    Some(match class {
        PairClass::Equal => G0Element::tau().mul(&gi.inverse()),
        PairClass::Disjoint | PairClass::Transversal => gi.clone(),
        PairClass::OrderlyAdjacent if inverse => gi.mul(gk),
        PairClass::OrderlyAdjacent => gk.mul(gi),
        PairClass::AntiOrderlyAdjacent if inverse => gk.inverse().mul(gi),
        PairClass::AntiOrderlyAdjacent => gi.mul(&gk.inverse()),
        PairClass::Indeterminate => return None,
    })
}

fn g0_action_table(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let mut entries = 0;
    for &i in &GRAPH_INDICES {
        let gi = G0Element::g(i)?;
        for k in GRAPH_INDICES {
            let class = catalog_class(i, k)?;
            for inverse in [false, true] {
                let sign = if inverse { -1 } else { 1 };
                let got = g0g_act_t(sign * k as i32, &gi)?;
                let want = predicted(class, &gi, &G0Element::g(k)?, inverse);
                entries += 1;
                f.expect(want.as_ref() == Some(&got), || format!("(g{i})_t{k}^{sign} = {got} for {class} pair"));
                f.expect(g0g_act_t(-sign * k as i32, &got)? == gi, || format!("t{k}^{sign} does not invert on g{i}"));
            }
        }
    }
    // T_4 acts through its defining word; the adjacent rows must agree with
    // one element g4 read off from the first of them.
    let mut g4: Option<G0Element> = None;
    for &i in &GRAPH_INDICES {
        let gi = G0Element::g(i)?;
        let class = catalog_class(i, 4)?;
        let plus = g0g_act_t(4, &gi)?;
        if g4.is_none() && class.is_adjacent() {
            g4 = Some(match class {
                PairClass::OrderlyAdjacent => plus.mul(&gi.inverse()),
                _ => plus.inverse().mul(&gi),
            });
        }
        let gk = g4.clone().unwrap_or_else(G0Element::identity);
        for inverse in [false, true] {
            let got = if inverse { g0g_act_t(-4, &gi)? } else { plus.clone() };
            let want = predicted(class, &gi, &gk, inverse);
            entries += 1;
            f.expect(want.as_ref() == Some(&got), || format!("(g{i})_t4{} = {got} for {class} pair", if inverse { "^-1" } else { "" }));
        }
    }
    let g4 = g4.map_or("none".to_string(), |g| g.to_string());
    f.done(format!("{entries} table entries, derived g4 = {g4}"))
}

fn random_expr(rng: &mut ChaCha8Rng) -> Result<FactorizedExpr> {
    let n = rng.gen_range(3..=5);
    let len = rng.gen_range(2..=5);
    let factors = (0..len)
        .map(|_| {
            let c = gen::word(rng, n, 2);
            Factor::new(HalfTwist::new(c, rng.gen_range(1..n))?, 1)
        })
        .collect::<Result<Vec<_>>>()?;
    FactorizedExpr::new(n, factors)
}

fn hurwitz(rng: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    for _ in 0..1000 {
        let e = random_expr(rng)?;
        let pos = rng.gen_range(1..e.len());
        let dir = if rng.gen_bool(0.5) { 1 } else { -1 };
        let moved = hurwitz_move(&e, pos, dir)?;
        f.expect(braid_eq(&product(&moved), &product(&e))?, || format!("move ({pos},{dir}) changes the product of {e}"));
        let back = hurwitz_move(&moved, pos, -dir)?;
        f.expect(factorwise_eq(&back, &e)?, || format!("move ({pos},{dir}) does not invert on {e}"));
    }
    let delta = FactorizedExpr::from_frame_letters(3, &[1, 2, 1, 2, 1, 2])?;
    f.expect(validate_full_twist(&delta)?, || "x1 x2 x1 x2 x1 x2 is not the full twist".into());
    let pos = rng.gen_range(1..delta.len());
    let dir = if rng.gen_bool(0.5) { 1 } else { -1 };
    let variant = hurwitz_move(&delta, pos, dir)?;
    let mut states = String::new();
    match hurwitz_equivalent(&delta, &variant, Budget::default())? {
        HurwitzOutcome::Equivalent { path, .. } => {
            states = format!("path of {} moves", path.len());
            f.expect(factorwise_eq(&apply_moves(&delta, &path)?, &variant)?, || "returned path does not replay".into());
        }
        other => f.0.push(format!("full twist vs move ({pos},{dir}): {other:?}")),
    }
    f.done(format!("1000 random moves, full twist search found a {states}"))
}

/// Abelian invariants of a presentation on two generators from the gcds of
/// the entries and of the 2x2 minors: `(free rank, torsion)`.
fn two_generator_invariants(p: &Presentation) -> (usize, Vec<u64>) {
    let rows: Vec<Vec<i64>> = p.relators().iter().map(FreeWord::exponent_sums).collect();
    let gcd = |a: i64, b: i64| -> i64 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let d1 = rows.iter().flatten().fold(0, |g, &x| gcd(g, x));
    let mut d2 = 0;
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            d2 = gcd(d2, rows[a][0] * rows[b][1] - rows[a][1] * rows[b][0]);
        }
    }
    match (d1, d2) {
        (0, _) => (2, vec![]),
        (_, 0) => (1, if d1 > 1 { vec![d1 as u64] } else { vec![] }),
        _ => (0, [d1, d2 / d1].into_iter().filter(|&d| d > 1).map(|d| d as u64).collect()),
    }
}

fn van_kampen_goldens(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let goldens: [(u32, &[i32]); 3] = [(1, &[1, -2]), (2, &[1, 2, -1, -2]), (3, &[1, 2, 1, -2, -1, -2])];
    let mut seen = Vec::new();
    for (power, rel) in goldens {
        let e = FactorizedExpr::new(2, vec![Factor::new(HalfTwist::frame(2, 1)?, power)?])?;
        let p = presentation(&e, Mode::Cuspidal)?;
        let want = FreeWord::from_letters(2, rel.iter().copied())?;
        f.expect(p.relators() == [want.clone()], || format!("power {power}: relators {:?}, expected {want}", p.relators()));
        for q in [p.clone(), projectivize(&p)] {
            let smith = q.abelianization();
            let oracle = two_generator_invariants(&q);
            f.expect((smith.free_rank, smith.torsion.clone()) == oracle, || {
                format!("power {power}: Smith form {smith} vs minors {oracle:?}")
            });
        }
        let projective = projectivize(&p).abelianization();
        // The stated expectation is Z for every power.
        f.expect(projective.to_string() == "Z", || format!("power {power}: projective abelianization is {projective}, expected Z"));
        seen.push(format!("{}/{projective}", p.abelianization()));
    }
    f.done(format!("affine/projective abelianizations {}", seen.join(", ")))
}

fn a_conjugations(_: &mut ChaCha8Rng, _: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let checks = verify_a_conjugations()?;
    for c in &checks {
        f.expect(c.pass, || format!("(a{})_t{}^{}: {} vs {}", c.index, c.index, c.sign, c.computed, c.expected));
    }
    f.done(format!("{} conjugates for i in 1,2,3,5,6,7,8,9", checks.len()))
}

fn determinism(_: &mut ChaCha8Rng, seed: u64) -> Result<Outcome> {
    let mut f = Failures::default();
    let others = |id: &str| id != "determinism";
    let pool = |n| rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| crate::Error::Unsupported(e.to_string()));
    let single = pool(1)?.install(|| run_checks(seed, others));
    let many = pool(4)?.install(|| run_checks(seed, others));
    let a = serde_json::to_string(&single).expect("results serialize");
    let b = serde_json::to_string(&many).expect("results serialize");
    f.expect(a == b, || {
        let diff = single.iter().zip(&many).find(|(x, y)| x != y).map(|(x, _)| x.id.clone());
        format!("1-thread and 4-thread reports differ at {}", diff.unwrap_or_else(|| "length".into()))
    });
    f.done(format!("{} checks, {} bytes, 1 vs 4 threads", single.len(), a.len()))
}
