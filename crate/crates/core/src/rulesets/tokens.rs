//! A row of tokens numbered `0..n-1`. A token is a record when no larger
//! token sits to its left. A move takes a non-record token to the left end.
//!
//! With `b_i = 1` exactly when token `i` is a non-record, a move picks
//! some `i` with `b_i = 1`, clears `b_i` and sets `b_0..b_{i-1}` to 1. That
//! makes a position the chain `∗b_{n-1} :_∗1 ∗b_{n-2} :_∗1 ... :_∗1 ∗b_0`,
//! whose value is the smallest `i` such that token `i` is a record.

use crate::error::{Error, Result};
use crate::expr::ChainSpec;
use crate::rulesets::retro::retrograde_grundy;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TokenRowState {
    perm: Vec<usize>,
}

impl TokenRowState {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::NotAPermutation(n));
            }
            seen[p] = true;
        }
        Ok(TokenRowState { perm })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// Whether the token at 1-based `position` is a record.
    pub fn is_record(&self, position: usize) -> Result<bool> {
        if position == 0 || position > self.perm.len() {
            return Err(Error::IndexOutOfRange {
                position,
                len: self.perm.len(),
            });
        }
        let here = self.perm[position - 1];
        Ok(self.perm[..position - 1].iter().all(|&p| p < here))
    }

    /// Record flags in row order.
    pub fn records(&self) -> Vec<bool> {
        let mut best = None;
        self.perm
            .iter()
            .map(|&p| {
                let rec = best.is_none_or(|b| p > b);
                if rec {
                    best = Some(p);
                }
                rec
            })
            .collect()
    }

    /// `b_i` for token `i`: 1 if non-record, else 0.
    pub fn b_sequence(&self) -> Vec<u64> {
        let mut b = vec![0; self.perm.len()];
        for (&p, rec) in self.perm.iter().zip(self.records()) {
            b[p] = u64::from(!rec);
        }
        b
    }

    pub fn moves(&self) -> Vec<TokenRowState> {
        self.records()
            .into_iter()
            .enumerate()
            .filter(|&(_, rec)| !rec)
            .map(|(idx, _)| {
                let mut perm = Vec::with_capacity(self.perm.len());
                perm.push(self.perm[idx]);
                perm.extend(
                    self.perm
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != idx)
                        .map(|(_, &p)| p),
                );
                TokenRowState { perm }
            })
            .collect()
    }

    /// Smallest token number that is a record; 0 for the empty row.
    pub fn grundy(&self) -> u64 {
        self.b_sequence().iter().position(|&b| b == 0).unwrap_or(0) as u64
    }

    /// Smallest token number that is a non-record, or `n` when every token
    /// is a record. This disagrees with the move graph: the sorted row has
    /// no moves yet scores `n`.
    pub fn claimed_grundy(&self) -> u64 {
        self.b_sequence()
            .iter()
            .position(|&b| b == 1)
            .unwrap_or(self.perm.len()) as u64
    }

    /// The chain `∗b_{n-1} :_∗1 ... :_∗1 ∗b_0`, or `None` for the empty row.
    pub fn chain_spec(&self) -> Option<ChainSpec> {
        if self.perm.is_empty() {
            return None;
        }
        let mut a = self.b_sequence();
        a.reverse();
        let ahat = vec![1; a.len() - 1];
        Some(ChainSpec::new(a, ahat).expect("lengths match"))
    }

    pub fn chain_grundy(&self) -> Result<u64> {
        self.chain_spec().map_or(Ok(0), |c| c.grundy())
    }

    pub fn retrograde_grundy(&self, state_cap: usize) -> Result<u64> {
        retrograde_grundy(self.clone(), |s| Ok(s.moves()), state_cap)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}
