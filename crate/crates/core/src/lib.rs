//! Impartial games under normal play: explicit game DAGs, compound
//! constructions, set-level formulas for variation sets, a brute-force
//! oracle relating the two, and a few concrete rulesets.
//!
//! ```
//! use ordsum::{parse, grundy_of, vset_of, NatSet};
//!
//! let e = parse("*1 :[*3] *2").unwrap();
//! assert_eq!(vset_of(&e).unwrap(), NatSet::from([0, 1, 3]));
//! assert_eq!(grundy_of(&e).unwrap(), 2);
//! ```

pub mod arena;
pub mod compound;
pub mod error;
pub mod expr;
pub mod natset;
pub mod oracle;
pub mod parser;
pub mod rulesets;

pub use arena::{GameArena, GameId, Outcome, DEFAULT_NODE_CAP};
pub use compound::CompoundKind;
pub use error::{Error, Result};
pub use expr::{chain_grundy, chain_p, grundy_of, outcome_of, vset_of, ChainSpec, Evaluator, Expr};
pub use natset::NatSet;
pub use parser::{parse, render, ParseError};
