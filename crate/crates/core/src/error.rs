use thiserror::Error;

use crate::parser::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid game handle #{0}")]
    InvalidHandle(u32),

    #[error("arena node cap of {cap} nodes exceeded")]
    NodeCapExceeded { cap: usize },

    #[error(
        "expansion refused: up to {positions} positions (birthday bound {birthday}) \
         against a node cap of {cap}"
    )]
    ExpansionRefused {
        positions: u128,
        birthday: u128,
        cap: usize,
    },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("set with {0} elements exceeds the evaluation limit")]
    SetTooLarge(u64),

    #[error("expression has a game leaf but no arena was supplied")]
    UnresolvedLeaf,

    #[error("explicit game leaves have no text form")]
    ExplicitLeaf,

    #[error("length mismatch: {games} games need {expected} substitutions, got {substs}")]
    LengthMismatch {
        games: usize,
        expected: usize,
        substs: usize,
    },

    #[error("a chain needs at least one game")]
    EmptyChain,

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("position {position} out of range 1..={len}")]
    IndexOutOfRange { position: usize, len: usize },

    #[error("state space exceeds cap of {0} states")]
    StateCapExceeded(usize),

    #[error("line {line}: {message}")]
    PosetLoad { line: usize, message: String },

    #[error(transparent)]
    Parse(#[from] ParseError),
}
