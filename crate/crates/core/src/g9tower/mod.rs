//! The nine-strand tower: the decidable model `Q`, the generator dictionary
//! and the emitted presentation.

pub mod dict;
pub mod presentation;
pub mod q;

pub use q::{ab9, act_nf, psi9, q_eq, q_inv, q_mul, QElement};
pub use dict::{a_elem, dictionary, expected_conjugate, t_elem, v1_elem, verify_a_conjugations, xi_elem, ConjugationCheck, DictEntry, Dictionary};
pub use presentation::{
    g9_presentation, generator_name, n9_chain_variant, n9_relators, render_named, verify_action_well_defined, xi_g_commutator,
    ActionCheck, G9Presentation, NamedRelator, QuotientRelator, RelatorClass, G9_GENERATORS,
};
