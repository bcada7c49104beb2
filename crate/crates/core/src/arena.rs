//! Hash-consed storage for impartial games.
//!
//! A game is the set of its options. Every game is interned once, so two
//! handles from the same arena are equal exactly when the games are equal
//! as sets. Options are always interned before the games that contain
//! them, which makes the arena a DAG in topological order.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::compound::CompoundKey;
use crate::error::{Error, Result};
use crate::natset::NatSet;

pub const DEFAULT_NODE_CAP: usize = 10_000_000;

/// Handle to a game interned in a [`GameArena`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameId(u32);

impl GameId {
    /// The end position ∅ (also ∗0).
    pub const EMPTY: GameId = GameId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn raw(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Normal-play outcome class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// The previous player (second to move) wins.
    P,
    /// The next player (first to move) wins.
    N,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

pub struct GameArena {
    nodes: Vec<Box<[GameId]>>,
    intern: HashMap<Box<[GameId]>, GameId>,
    cap: usize,
    nimbers: Vec<GameId>,
    birthday: Vec<Option<u64>>,
    grundy: Vec<Option<u64>>,
    // 0 = P, 1 = N
    outcome: Vec<Option<u64>>,
    vsets: HashMap<GameId, NatSet>,
    pub(crate) compound: HashMap<CompoundKey, GameId>,
}

impl Default for GameArena {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Debug for GameArena {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GameArena")
            .field("nodes", &self.nodes.len())
            .field("cap", &self.cap)
            .finish()
    }
}

impl GameArena {
    pub fn new() -> Self {
        Self::with_node_cap(DEFAULT_NODE_CAP)
    }

    pub fn with_node_cap(cap: usize) -> Self {
        let empty: Box<[GameId]> = Box::new([]);
        let mut intern = HashMap::new();
        intern.insert(empty.clone(), GameId::EMPTY);
        GameArena {
            nodes: vec![empty],
            intern,
            cap: cap.max(1),
            nimbers: vec![GameId::EMPTY],
            birthday: Vec::new(),
            grundy: Vec::new(),
            outcome: Vec::new(),
            vsets: HashMap::new(),
            compound: HashMap::new(),
        }
    }

    pub fn node_cap(&self) -> usize {
        self.cap
    }

    /// Number of interned games.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn check(&self, g: GameId) -> Result<()> {
        if g.index() < self.nodes.len() {
            Ok(())
        } else {
            Err(Error::InvalidHandle(g.0))
        }
    }

    /// Interns the game whose options are `options` (duplicates ignored).
    pub fn make_game(&mut self, options: impl IntoIterator<Item = GameId>) -> Result<GameId> {
        let mut opts: Vec<GameId> = options.into_iter().collect();
        for &o in &opts {
            self.check(o)?;
        }
        opts.sort_unstable();
        opts.dedup();
        self.intern_sorted(opts)
    }

    /// Interns an option list known to hold valid handles.
    pub(crate) fn intern_sorted(&mut self, opts: Vec<GameId>) -> Result<GameId> {
        if let Some(&id) = self.intern.get(opts.as_slice()) {
            return Ok(id);
        }
        if self.nodes.len() >= self.cap {
            return Err(Error::NodeCapExceeded { cap: self.cap });
        }
        let id = GameId(
            u32::try_from(self.nodes.len())
                .map_err(|_| Error::NodeCapExceeded { cap: self.cap })?,
        );
        let opts: Box<[GameId]> = opts.into_boxed_slice();
        self.nodes.push(opts.clone());
        self.intern.insert(opts, id);
        Ok(id)
    }

    /// The nimber ∗n = {∗0, ..., ∗(n-1)}.
    pub fn nimber(&mut self, n: u64) -> Result<GameId> {
        let needed = n.saturating_add(1);
        if needed > self.cap as u64 {
            return Err(Error::NodeCapExceeded { cap: self.cap });
        }
        while (self.nimbers.len() as u64) <= n {
            let next = self.intern_sorted(self.nimbers.clone())?;
            self.nimbers.push(next);
        }
        Ok(self.nimbers[n as usize])
    }

    pub fn options(&self, g: GameId) -> Result<&[GameId]> {
        self.check(g)?;
        Ok(&self.nodes[g.index()])
    }

    pub(crate) fn options_unchecked(&self, g: GameId) -> &[GameId] {
        &self.nodes[g.index()]
    }

    pub fn birthday(&mut self, g: GameId) -> Result<u64> {
        self.check(g)?;
        Ok(fill(&self.nodes, &mut self.birthday, g, |opts| {
            opts.iter().map(|v| v + 1).max().unwrap_or(0)
        }))
    }

    pub fn grundy(&mut self, g: GameId) -> Result<u64> {
        self.check(g)?;
        Ok(fill(&self.nodes, &mut self.grundy, g, |opts| {
            opts.iter().copied().collect::<NatSet>().mex()
        }))
    }

    /// Outcome by the recursive win/lose definition (independent of the
    /// Grundy memo).
    pub fn outcome(&mut self, g: GameId) -> Result<Outcome> {
        self.check(g)?;
        let v = fill(&self.nodes, &mut self.outcome, g, |opts| {
            u64::from(opts.contains(&0))
        });
        Ok(if v == 0 { Outcome::P } else { Outcome::N })
    }

    /// Variation set: the Grundy numbers of all options.
    pub fn vset(&mut self, g: GameId) -> Result<NatSet> {
        self.check(g)?;
        if let Some(v) = self.vsets.get(&g) {
            return Ok(v.clone());
        }
        self.grundy(g)?;
        let v: NatSet = self.nodes[g.index()]
            .iter()
            .map(|o| self.grundy[o.index()].expect("options evaluated before parent"))
            .collect();
        self.vsets.insert(g, v.clone());
        Ok(v)
    }

    /// Number of distinct games reachable from `g`, including `g`.
    pub fn reachable_count(&self, g: GameId) -> Result<usize> {
        self.check(g)?;
        let mut seen = HashSet::from([g]);
        let mut stack = vec![g];
        while let Some(x) = stack.pop() {
            for &o in self.nodes[x.index()].iter() {
                if seen.insert(o) {
                    stack.push(o);
                }
            }
        }
        Ok(seen.len())
    }
}

/// Post-order evaluation over the option DAG with an explicit stack.
/// `combine` receives the values of the options.
fn fill(
    nodes: &[Box<[GameId]>],
    memo: &mut Vec<Option<u64>>,
    root: GameId,
    combine: impl Fn(&[u64]) -> u64,
) -> u64 {
    if memo.len() < nodes.len() {
        memo.resize(nodes.len(), None);
    }
    if let Some(v) = memo[root.index()] {
        return v;
    }
    let mut stack = vec![(root, false)];
    let mut scratch = Vec::new();
    while let Some((g, ready)) = stack.pop() {
        if memo[g.index()].is_some() {
            continue;
        }
        let opts = &nodes[g.index()];
        if ready {
            scratch.clear();
            scratch.extend(
                opts.iter()
                    .map(|o| memo[o.index()].expect("child evaluated")),
            );
            memo[g.index()] = Some(combine(&scratch));
        } else {
            stack.push((g, true));
            stack.extend(
                opts.iter()
                    .filter(|o| memo[o.index()].is_none())
                    .map(|&o| (o, false)),
            );
        }
    }
    memo[root.index()].expect("root evaluated")
}
