//! Compound games built literally from their recursive definitions:
//! disjunctive sum, ordinal sum and ordinal sum with substitution.
//!
//! Results are memoised per operand tuple, and construction runs on an
//! explicit stack so long chains do not exhaust the call stack.

use crate::arena::{GameArena, GameId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum CompoundKey {
    Sum(GameId, GameId),
    Ordinal(GameId, GameId),
    /// `(left, right, subst)`
    Subst(GameId, GameId, GameId),
}

enum Part {
    Ready(GameId),
    Build(CompoundKey),
}

impl GameArena {
    /// `G + H`: move in exactly one component.
    pub fn disjunctive_sum(&mut self, g: GameId, h: GameId) -> Result<GameId> {
        self.check(g)?;
        self.check(h)?;
        self.build(CompoundKey::Sum(g, h))
    }

    /// `G : H`: a move in `G` discards `H`.
    pub fn ordinal_sum(&mut self, g: GameId, h: GameId) -> Result<GameId> {
        self.check(g)?;
        self.check(h)?;
        self.build(CompoundKey::Ordinal(g, h))
    }

    /// `G :_Ĥ H`: a move in `G` replaces the current right game by `hhat`.
    pub fn osws(&mut self, g: GameId, h: GameId, hhat: GameId) -> Result<GameId> {
        self.check(g)?;
        self.check(h)?;
        self.check(hhat)?;
        self.build(CompoundKey::Subst(g, h, hhat))
    }

    /// Left fold `(((G0 :_Ŝ1 G1) :_Ŝ2 G2) ...) :_Ŝn Gn`.
    pub fn chain(&mut self, games: &[GameId], substs: &[GameId]) -> Result<GameId> {
        let (&first, rest) = games.split_first().ok_or(Error::EmptyChain)?;
        if rest.len() != substs.len() {
            return Err(Error::LengthMismatch {
                games: games.len(),
                expected: rest.len(),
                substs: substs.len(),
            });
        }
        rest.iter()
            .zip(substs)
            .try_fold(first, |acc, (&g, &s)| self.osws(acc, g, s))
    }

    /// Upper bound on the number of positions of a compound, from the
    /// reachable counts of its operands.
    pub fn compound_position_bound(
        &self,
        key_kind: CompoundKind,
        operands: &[GameId],
    ) -> Result<u128> {
        let counts = operands
            .iter()
            .map(|&g| self.reachable_count(g).map(|c| c as u128))
            .collect::<Result<Vec<_>>>()?;
        Ok(key_kind.position_bound(&counts))
    }

    fn build(&mut self, root: CompoundKey) -> Result<GameId> {
        if let Some(&id) = self.compound.get(&root) {
            return Ok(id);
        }
        self.refuse_if_infeasible(root)?;

        let mut stack = vec![(root, false)];
        while let Some((key, ready)) = stack.pop() {
            if self.compound.contains_key(&key) {
                continue;
            }
            let parts = self.parts(key);
            if ready {
                let opts = parts
                    .into_iter()
                    .map(|p| match p {
                        Part::Ready(g) => g,
                        Part::Build(k) => self.compound[&k],
                    })
                    .collect::<Vec<_>>();
                let mut opts = opts;
                opts.sort_unstable();
                opts.dedup();
                let id = self.intern_sorted(opts)?;
                self.compound.insert(key, id);
            } else {
                stack.push((key, true));
                for p in parts {
                    if let Part::Build(k) = p {
                        if !self.compound.contains_key(&k) {
                            stack.push((k, false));
                        }
                    }
                }
            }
        }
        Ok(self.compound[&root])
    }

    fn parts(&self, key: CompoundKey) -> Vec<Part> {
        match key {
            CompoundKey::Sum(g, h) => {
                let left = self
                    .options_unchecked(g)
                    .iter()
                    .map(|&g2| Part::Build(CompoundKey::Sum(g2, h)));
                let right = self
                    .options_unchecked(h)
                    .iter()
                    .map(|&h2| Part::Build(CompoundKey::Sum(g, h2)));
                left.chain(right).collect()
            }
            CompoundKey::Ordinal(g, h) => {
                let left = self.options_unchecked(g).iter().map(|&g2| Part::Ready(g2));
                let right = self
                    .options_unchecked(h)
                    .iter()
                    .map(|&h2| Part::Build(CompoundKey::Ordinal(g, h2)));
                left.chain(right).collect()
            }
            CompoundKey::Subst(g, h, s) => {
                let left = self
                    .options_unchecked(g)
                    .iter()
                    .map(|&g2| Part::Build(CompoundKey::Subst(g2, s, s)));
                let right = self
                    .options_unchecked(h)
                    .iter()
                    .map(|&h2| Part::Build(CompoundKey::Subst(g, h2, s)));
                left.chain(right).collect()
            }
        }
    }

    fn refuse_if_infeasible(&mut self, key: CompoundKey) -> Result<()> {
        let (kind, operands): (CompoundKind, Vec<GameId>) = match key {
            CompoundKey::Sum(g, h) => (CompoundKind::Sum, vec![g, h]),
            CompoundKey::Ordinal(g, h) => (CompoundKind::Ordinal, vec![g, h]),
            CompoundKey::Subst(g, h, s) => (CompoundKind::Subst, vec![g, h, s]),
        };
        let positions = self.compound_position_bound(kind, &operands)?;
        if positions > self.node_cap() as u128 {
            let births = operands
                .iter()
                .map(|&g| self.birthday(g).map(u128::from))
                .collect::<Result<Vec<_>>>()?;
            return Err(Error::ExpansionRefused {
                positions,
                birthday: kind.birthday_bound(&births),
                cap: self.node_cap(),
            });
        }
        Ok(())
    }
}

/// The three compound constructions, used for a-priori size estimates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompoundKind {
    Sum,
    Ordinal,
    Subst,
}

impl CompoundKind {
    /// Bound on reachable positions given per-operand reachable counts
    /// (`[g, h]` or `[g, h, hhat]`).
    pub fn position_bound(self, counts: &[u128]) -> u128 {
        match self {
            CompoundKind::Sum => counts[0].saturating_mul(counts[1]),
            // G : H' for each H', plus the proper subpositions of G.
            CompoundKind::Ordinal => counts[0].saturating_add(counts[1]),
            // (G, H') for each H', then (G', Ĥ') once G has moved.
            CompoundKind::Subst => {
                counts[1].saturating_add(counts[0].saturating_sub(1).saturating_mul(counts[2]))
            }
        }
    }

    /// Birthday bound from operand birthdays: `b(G) + b(H)` for the sums
    /// and `b(G)(b(Ĥ) + 1) + b(H)` with substitution.
    pub fn birthday_bound(self, births: &[u128]) -> u128 {
        match self {
            CompoundKind::Sum | CompoundKind::Ordinal => births[0].saturating_add(births[1]),
            CompoundKind::Subst => births[0]
                .saturating_mul(births[2].saturating_add(1))
                .saturating_add(births[1]),
        }
    }
}
