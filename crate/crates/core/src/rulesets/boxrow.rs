//! A row of boxes holding stones. Taking stones from box `i` refills
//! every later box `j` to its label `â_j`, so a position is the chain
//! `∗a0 :_∗â1 ∗a1 :_∗â2 ... :_∗ân ∗an`.

use crate::error::{Error, Result};
use crate::expr::ChainSpec;
use crate::rulesets::retro::retrograde_grundy;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxRowState {
    stones: Vec<u64>,
    labels: Vec<u64>,
}

impl BoxRowState {
    /// `stones` are `a0..an`; `labels` are `â1..ân`.
    pub fn new(stones: Vec<u64>, labels: Vec<u64>) -> Result<Self> {
        if stones.len() != labels.len() + 1 {
            return Err(Error::LengthMismatch {
                games: stones.len(),
                expected: stones.len().saturating_sub(1),
                substs: labels.len(),
            });
        }
        Ok(BoxRowState { stones, labels })
    }

    pub fn stones(&self) -> &[u64] {
        &self.stones
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn moves(&self) -> Vec<BoxRowState> {
        let mut out = Vec::new();
        for (i, &count) in self.stones.iter().enumerate() {
            for k in 1..=count {
                let mut next = self.stones.clone();
                next[i] = count - k;
                next[i + 1..].copy_from_slice(&self.labels[i..]);
                out.push(BoxRowState {
                    stones: next,
                    labels: self.labels.clone(),
                });
            }
        }
        out
    }

    pub fn chain_spec(&self) -> ChainSpec {
        ChainSpec::new(self.stones.clone(), self.labels.clone()).expect("lengths checked")
    }

    /// Grundy value by the chain formula.
    pub fn grundy(&self) -> Result<u64> {
        self.chain_spec().grundy()
    }

    /// Grundy value by exhaustive search over the position graph.
    pub fn retrograde_grundy(&self, state_cap: usize) -> Result<u64> {
        let labels = self.labels.clone();
        retrograde_grundy(
            self.stones.clone(),
            |stones: &Vec<u64>| {
                let s = BoxRowState {
                    stones: stones.clone(),
                    labels: labels.clone(),
                };
                Ok(s.moves().into_iter().map(|m| m.stones).collect())
            },
            state_cap,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rulesets::DEFAULT_STATE_CAP;

    fn state(stones: &[u64], labels: &[u64]) -> BoxRowState {
        BoxRowState::new(stones.to_vec(), labels.to_vec()).unwrap()
    }

    #[test]
    fn moves_examples() {
        assert!(state(&[0, 0, 0], &[3, 1]).moves().is_empty());
        let m = state(&[1, 0], &[2]).moves();
        assert_eq!(m, vec![state(&[0, 2], &[2])]);
        let m = state(&[0, 2], &[2]).moves();
        assert_eq!(m, vec![state(&[0, 1], &[2]), state(&[0, 0], &[2])]);
    }

    #[test]
    fn worked_example() {
        let s = state(&[6, 3, 9, 2, 1, 2, 5], &[10, 1, 5, 5, 0, 3]);
        assert_eq!(s.grundy().unwrap(), 10);
        assert_eq!(state(&[0, 0], &[4]).grundy().unwrap(), 0);
    }

    #[test]
    fn formula_matches_search_on_small_rows() {
        for stones in [[2u64, 1, 3], [0, 3, 1], [3, 0, 0], [1, 1, 1]] {
            for labels in [[0u64, 0], [3, 1], [1, 3], [2, 2]] {
                let s = state(&stones, &labels);
                assert_eq!(
                    s.grundy().unwrap(),
                    s.retrograde_grundy(DEFAULT_STATE_CAP).unwrap(),
                    "{s:?}"
                );
            }
        }
    }

    #[test]
    fn length_mismatch() {
        assert!(BoxRowState::new(vec![1, 2], vec![1, 2]).is_err());
    }
}
