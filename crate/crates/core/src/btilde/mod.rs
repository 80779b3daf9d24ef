//! The quotient of the braid group by the commutators of squared half-twists.

pub mod classify;
pub mod comb;
pub mod nf;
pub mod prime;
pub mod xi;

pub use comb::{comb, parse_pure_factors, z_word, PureFactor, PureFactorList};
pub use nf::{btilde_eq, btilde_nf, canonical_lift, lambda_hat, parse_nf, BTildeNF};
pub use classify::{catalog_class, classify_pair, PairClass};
pub use xi::{render_t, spelling_coords, xi, xi_spellings, XiEntry, XiSpelling, XI_TRANSPORTS};
pub use prime::{prime_axioms_check, prime_criterion_check, BraidModule, CheckItem, CheckReport, CheckStatus, G0Module, GnModule};
