//! Free words, braid words, the Artin action and the nine-strand catalog.

pub mod braid;
pub mod catalog;
pub mod free;
pub mod halftwist;
pub mod perm;
pub mod text;

pub use braid::{artin_act, braid_eq, degree, full_twist, is_trivial, psi, signature, ArtinSignature, BraidWord};
pub use catalog::{catalog_t, t_letter, t_letters, CatalogEntry};
pub use free::{fw_mul, FreeWord};
pub use halftwist::{halftwist_as_word, ht_endpoints, HalfTwist};
pub use perm::Permutation;
pub use text::{check_text_size, parse_braid, parse_free, MAX_RANK, MAX_STRANDS};
