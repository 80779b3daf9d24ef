//! Central extensions by `Z/2` and their braid actions.

pub mod g0;
pub mod gn;

pub use g0::{g0g_act_braid, g0g_act_t, g0g_mul, parse_g0, G0Element};
pub use gn::{gn_act, gn_act_word, gn_commutator, gn_mul, gn_s_ij, parse_gn, GnElement};
