//! Critical bases `p_m` for the alphabets `{0, 1, m}` and the Cantor set of
//! values where they reach the upper bound `P_m`.

pub mod component;
pub mod context;
pub mod eval;
pub mod result;
pub mod roots;
pub mod search;

pub use component::{component_interval, prefix_bracket, ComponentInterval};
pub use context::{big_p, MContext};
pub use eval::{eval_form, sign_vs, Base, DigitMap};
pub use result::{curve, in_cantor, p_m, table, ternary_g, CriticalResult, Membership, Settings, Status};
pub use roots::{compare_roots, p_double_prime, p_prime};
pub use search::{maximize_h, sequence_for_m, DEFAULT_SEARCH_DEPTH};
