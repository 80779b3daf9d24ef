//! The symbolic presentation of the nine-strand tower group, the extra
//! relators of its defining quotient, and the consistency of the action.

use std::fmt;

use serde::Serialize;

use crate::btilde::xi::xi;
use crate::error::Result;
use crate::extension::g0::{adjacent, g0g_act_t_word, table_image};
use crate::extension::{g0g_act_braid, G0Element};
use crate::g9tower::dict::{t_elem, v1_elem, xi_elem};
use crate::g9tower::q::{ab9, psi9, QElement};
use crate::vankampen::{AbelianGroup, Presentation};
use crate::words::catalog::{catalog_relations, t_letters, GRAPH_INDICES};
use crate::words::FreeWord;

/// Generators: `t1..t9` are 1..=9, `g_i` (i != 4) are 10..=17, `tau` is 18.
pub const G9_GENERATORS: usize = 18;
const TAU: i32 = 18;

fn t_gen(k: i32) -> i32 {
    k
}

fn g_gen(i: usize) -> i32 {
    10 + GRAPH_INDICES.iter().position(|&j| j == i).expect("graph index") as i32
}

/// Name of a generator of the tower presentation.
pub fn generator_name(j: usize) -> String {
    match j {
        1..=9 => format!("t{j}"),
        10..=17 => format!("g{}", GRAPH_INDICES[j - 10]),
        18 => "tau".into(),
        _ => format!("?{j}"),
    }
}

fn word(letters: impl IntoIterator<Item = i32>) -> FreeWord {
    FreeWord::from_letters(G9_GENERATORS, letters).expect("tower generator indices")
}

fn g0_word(x: &G0Element) -> FreeWord {
    let mut letters = Vec::new();
    if x.eps() == 1 {
        letters.push(TAU);
    }
    for &i in &GRAPH_INDICES {
        let e = x.exponent(i);
        letters.extend(std::iter::repeat_n(g_gen(i) * e.signum() as i32, e.unsigned_abs() as usize));
    }
    word(letters)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelatorClass {
    Braid,
    GraphForm,
    Action,
    Central,
    Quotient,
}

impl fmt::Display for RelatorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelatorClass::Braid => "braid",
            RelatorClass::GraphForm => "graph-form",
            RelatorClass::Action => "action",
            RelatorClass::Central => "central",
            RelatorClass::Quotient => "quotient",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedRelator {
    pub class: RelatorClass,
    pub name: String,
    #[serde(skip)]
    pub word: FreeWord,
    pub text: String,
}

/// Renders a word over the tower generators by name.
pub fn render_named(w: &FreeWord) -> String {
    if w.is_identity() {
        return "1".into();
    }
    w.letters()
        .iter()
        .map(|&l| {
            let n = generator_name(l.unsigned_abs() as usize);
            if l > 0 { n } else { format!("{n}^-1") }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct G9Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<NamedRelator>,
}

impl G9Presentation {
    pub fn class(&self, c: RelatorClass) -> impl Iterator<Item = &NamedRelator> {
        self.relators.iter().filter(move |r| r.class == c)
    }

    /// The same presentation over numbered generators.
    pub fn to_presentation(&self) -> Presentation {
        Presentation::new(G9_GENERATORS, self.relators.iter().map(|r| r.word.clone()).collect())
            .expect("ranks agree")
    }

    pub fn abelianization(&self) -> AbelianGroup {
        self.to_presentation().abelianization()
    }
}

impl fmt::Display for G9Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "rel[{}] {}: {}", r.class, r.name, r.text)?;
        }
        Ok(())
    }
}

fn push(out: &mut Vec<NamedRelator>, class: RelatorClass, name: String, w: FreeWord) {
    let text = render_named(&w);
    out.push(NamedRelator { class, name, word: w, text });
}

fn commutator(a: &FreeWord, b: &FreeWord) -> FreeWord {
    FreeWord::commutator(a, b).expect("same rank")
}

fn t_word(letters: &[i32]) -> FreeWord {
    word(letters.iter().map(|&k| t_gen(k)))
}

/// The relators `(g_i xi_i^-1)^3`, `i != 4`, with `xi_i` spelled in `t` letters.
fn quotient_cubes() -> Result<Vec<(usize, FreeWord)>> {
    GRAPH_INDICES
        .iter()
        .map(|&i| {
            let x = t_word(&xi(i)?.spelling);
            Ok((i, word([g_gen(i)]).mul_unchecked(&x.inverse()).pow(3)))
        })
        .collect()
}

/// The full symbolic presentation. It is emitted only, never used to decide equality.
pub fn g9_presentation() -> Result<G9Presentation> {
    let mut rels = Vec::new();
    for r in catalog_relations(true) {
        let w = t_word(&r.lhs).mul_unchecked(&t_word(&r.rhs).inverse());
        push(&mut rels, RelatorClass::Braid, r.name, w);
    }
    for (a, &i) in GRAPH_INDICES.iter().enumerate() {
        for &j in &GRAPH_INDICES[a + 1..] {
            let mut w = commutator(&word([g_gen(i)]), &word([g_gen(j)]));
            if adjacent(i, j) {
                w = w.mul_unchecked(&word([-TAU]));
            }
            push(&mut rels, RelatorClass::GraphForm, format!("[g{i},g{j}]"), w);
        }
    }
    push(&mut rels, RelatorClass::GraphForm, "tau^2".into(), word([TAU, TAU]));
    for &i in &GRAPH_INDICES {
        push(&mut rels, RelatorClass::GraphForm, format!("[tau,g{i}]"), commutator(&word([TAU]), &word([g_gen(i)])));
    }
    for k in (1..=9).filter(|&k| k != 4) {
        for &i in &GRAPH_INDICES {
            let lhs = word([-t_gen(k), g_gen(i), t_gen(k)]);
            let w = lhs.mul_unchecked(&g0_word(&table_image(i, k as usize, false)).inverse());
            push(&mut rels, RelatorClass::Action, format!("(g{i})_t{k}"), w);
        }
    }
    for k in 1..=9 {
        push(&mut rels, RelatorClass::Central, format!("[tau,t{k}]"), commutator(&word([TAU]), &word([t_gen(k)])));
    }
    let c = t_word(&[1, 1, 2, 2, -1, -1, -2, -2]);
    push(&mut rels, RelatorClass::Quotient, "tau c^-1".into(), word([TAU]).mul_unchecked(&c.inverse()));
    for (i, w) in quotient_cubes()? {
        push(&mut rels, RelatorClass::Quotient, format!("(g{i} xi{i}^-1)^3"), w);
    }
    Ok(G9Presentation { generators: (1..=G9_GENERATORS).map(generator_name).collect(), relators: rels })
}

/// A relator of the defining quotient, evaluated in the working model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientRelator {
    pub name: String,
    pub value: QElement,
    pub is_identity: bool,
}

/// `tau c^-1` (identity by construction) followed by `(g_i xi_i^-1)^3` for `i != 4`.
pub fn n9_relators() -> Result<Vec<QuotientRelator>> {
    let c = QElement::from_braid(&t_letters(&[1, 1, 2, 2, -1, -1, -2, -2])?)?;
    let mut out = vec![relator("tau c^-1", QElement::tau().mul(&c.inverse()))];
    for &i in &GRAPH_INDICES {
        let g = QElement::from_g0(G0Element::g(i)?);
        out.push(relator(&format!("(g{i} xi{i}^-1)^3"), g.mul(&xi_elem(i)?.inverse()).pow(3)));
    }
    Ok(out)
}

fn relator(name: &str, value: QElement) -> QuotientRelator {
    QuotientRelator { name: name.into(), is_identity: value.is_identity(), value }
}

/// The two-generator form of the quotient: `c tau^-1` and `(u_1 v_1^-1)^3`,
/// with `u_1 = g_1`. Emitted only.
pub fn n9_chain_variant() -> Result<Vec<QuotientRelator>> {
    let c = QElement::from_braid(&t_letters(&[1, 1, 2, 2, -1, -1, -2, -2])?)?;
    let u1 = QElement::from_g0(G0Element::g(1)?);
    Ok(vec![
        relator("c tau^-1", c.mul(&QElement::tau().inverse())),
        relator("(u1 v1^-1)^3", u1.mul(&v1_elem().inverse()).pow(3)),
    ])
}

/// Whether both sides of one defining braid relation act alike on every `g_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionCheck {
    pub relation: String,
    pub pass: bool,
    /// Generators on which the two sides disagree.
    pub mismatches: Vec<String>,
}

/// Both sides of every catalog relation, acting through the tables on the
/// catalog letters and through the frame-letter translation, must agree.
pub fn verify_action_well_defined() -> Result<Vec<ActionCheck>> {
    let mut out = Vec::new();
    for r in catalog_relations(true) {
        let (wl, wr) = (t_letters(&r.lhs)?, t_letters(&r.rhs)?);
        let mut mismatches = Vec::new();
        for &i in &GRAPH_INDICES {
            let g = G0Element::g(i)?;
            let via_t = (g0g_act_t_word(&r.lhs, &g)?, g0g_act_t_word(&r.rhs, &g)?);
            let via_x = (g0g_act_braid(&wl, &g)?, g0g_act_braid(&wr, &g)?);
            if via_t.0 != via_t.1 || via_x.0 != via_x.1 || via_t.0 != via_x.0 {
                mismatches.push(format!("g{i}: {} vs {}", via_t.0, via_t.1));
            }
        }
        out.push(ActionCheck { relation: r.name, pass: mismatches.is_empty(), mismatches });
    }
    Ok(out)
}

/// Commutator `[xi_j, g_i]` in the working model.
pub fn xi_g_commutator(j: usize, i: usize) -> Result<QElement> {
    Ok(QElement::commutator(&xi_elem(j)?, &QElement::from_g0(G0Element::g(i)?)))
}

/// Trivial under both projections, for every quotient relator.
pub fn relators_project_trivially(rels: &[QuotientRelator]) -> bool {
    rels.iter().all(|r| psi9(&r.value).is_identity() && ab9(&r.value) == 0)
}

/// `t_i` and `t_j` commute in the model iff they commute in the quotient braid group.
pub fn t_commute(i: usize, j: usize) -> Result<bool> {
    let (a, b) = (t_elem(i)?, t_elem(j)?);
    Ok(QElement::commutator(&a, &b).is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::btilde::classify::catalog_class;

    #[test]
    fn presentation_classes() {
        let p = g9_presentation().unwrap();
        for c in [RelatorClass::Braid, RelatorClass::GraphForm, RelatorClass::Action, RelatorClass::Central, RelatorClass::Quotient] {
            assert!(p.class(c).next().is_some(), "{c}");
        }
        let texts: Vec<&str> = p.relators.iter().map(|r| r.text.as_str()).collect();
        assert!(texts.contains(&"t4 t2^-1 t3 t7^-1 t8 t5^-1 t8^-1 t7 t3^-1 t2"));
        assert!(texts.contains(&"g1 g5 g1^-1 g5^-1"));
        assert_eq!(p.class(RelatorClass::Quotient).count(), 9);
        let cube1 = p.relators.iter().find(|r| r.name == "(g1 xi1^-1)^3").unwrap();
        assert!(cube1.text.starts_with("g1 t2 t2 t1 t2^-1 t2^-1 t1^-1 g1"));
        assert!(p.to_string().starts_with("gens: t1 t2 t3 t4 t5 t6 t7 t8 t9 g1 g2 g3 g5"));
    }

    #[test]
    fn quotient_relators() {
        let rels = n9_relators().unwrap();
        assert_eq!(rels.len(), 9);
        assert!(rels[0].is_identity);
        assert!(relators_project_trivially(&rels));
        let chain = n9_chain_variant().unwrap();
        assert!(chain[0].is_identity);
    }

    #[test]
    fn action_is_well_defined() {
        let checks = verify_action_well_defined().unwrap();
        assert_eq!(checks.len(), 31);
        for c in checks {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn xi_commutes_with_g_up_to_tau() {
        for j in 1..=9 {
            for &i in &GRAPH_INDICES {
                let c = xi_g_commutator(j, i).unwrap();
                let want = if i != j && catalog_class(i, j).unwrap().is_adjacent() { QElement::tau() } else { QElement::identity() };
                assert_eq!(c, want, "[xi{j}, g{i}]");
            }
        }
    }
}
