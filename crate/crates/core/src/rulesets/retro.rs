//! Retrograde Grundy labelling over an explicit state graph.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::natset::NatSet;

pub const DEFAULT_STATE_CAP: usize = 5_000_000;

/// Grundy value of `root` by mex labelling of every reachable state.
/// `moves` must describe a finite acyclic graph.
pub fn retrograde_grundy<S, F>(root: S, mut moves: F, state_cap: usize) -> Result<u64>
where
    S: Clone + Eq + Hash,
    F: FnMut(&S) -> Result<Vec<S>>,
{
    let mut memo: HashMap<S, u64> = HashMap::new();
    let mut succ: HashMap<S, Vec<S>> = HashMap::new();
    let mut stack = vec![root.clone()];
    while let Some(s) = stack.pop() {
        if memo.contains_key(&s) {
            continue;
        }
        if !succ.contains_key(&s) {
            if succ.len() + memo.len() >= state_cap {
                return Err(Error::StateCapExceeded(state_cap));
            }
            let next = moves(&s)?;
            stack.push(s.clone());
            stack.extend(next.iter().filter(|t| !memo.contains_key(*t)).cloned());
            succ.insert(s, next);
            continue;
        }
        // Every child was pushed above `s`, so all are labelled by now
        // unless the graph has a cycle.
        let next = succ.remove(&s).expect("expanded state");
        let value = next
            .iter()
            .map(|t| *memo.get(t).expect("state graph must be acyclic"))
            .collect::<NatSet>()
            .mex();
        memo.insert(s, value);
    }
    Ok(memo[&root])
}
