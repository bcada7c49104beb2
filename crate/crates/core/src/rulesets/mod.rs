//! Concrete rulesets, each with a direct move generator and a reduction to
//! expressions or chain formulas.

pub mod boxrow;
pub mod poset;
pub mod retro;
pub mod tokens;

pub use boxrow::BoxRowState;
pub use poset::{Poset, PosetGame};
pub use retro::{retrograde_grundy, DEFAULT_STATE_CAP};
pub use tokens::TokenRowState;
