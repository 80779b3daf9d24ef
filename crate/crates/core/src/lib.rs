//! Braid groups, the quotient by commutators of transversal half-twists, and
//! the groups built on top of it.
//!
//! - [`words`]: free words, braid words, the Artin action and the nine-strand catalog
//! - [`extension`]: the chain-form extension `G(n)` and the graph-form group on `g_i`
//! - [`btilde`]: combing, coordinates and normal forms in the quotient
//! - [`monodromy`]: factorized expressions and Hurwitz moves
//! - [`vankampen`]: presentations from factorizations
//! - [`g9tower`]: the semidirect product model and its dictionary
//! - [`verify`]: the identity suite

pub mod btilde;
pub mod error;
pub mod extension;
pub mod g9tower;
pub mod monodromy;
pub mod vankampen;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
