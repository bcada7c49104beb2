//! Game expressions and their evaluation through variation sets.
//!
//! Nothing here expands game trees: every node is evaluated from the
//! variation sets of its children.
//!
//! | node        | variation set                                     |
//! |-------------|---------------------------------------------------|
//! | `∗n`        | `{0, ..., n-1}`                                   |
//! | `G + H`     | `(V(G) ⊕ mex V(H)) ∪ (V(H) ⊕ mex V(G))`           |
//! | `G : H`     | `V(G) : V(H)`                                     |
//! | `G :_Ĥ H`   | `(V(G) + mex V(Ĥ)) : V(H)`                        |

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::arena::{GameArena, GameId, Outcome};
use crate::error::{Error, Result};
use crate::natset::NatSet;

/// Largest set the evaluator will materialise.
pub const MAX_SET_LEN: u64 = 1 << 24;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Nimber(u64),
    Explicit(GameId),
    Sum(Arc<Expr>, Arc<Expr>),
    OrdinalSum(Arc<Expr>, Arc<Expr>),
    /// `(left, right, subst)`: a move in `left` resets `right` to `subst`.
    OrdinalSumSub(Arc<Expr>, Arc<Expr>, Arc<Expr>),
}

impl Expr {
    pub fn nim(n: u64) -> Expr {
        Expr::Nimber(n)
    }

    pub fn sum(a: Expr, b: Expr) -> Expr {
        Expr::Sum(Arc::new(a), Arc::new(b))
    }

    pub fn ordinal(a: Expr, b: Expr) -> Expr {
        Expr::OrdinalSum(Arc::new(a), Arc::new(b))
    }

    pub fn subst(left: Expr, right: Expr, subst: Expr) -> Expr {
        Expr::OrdinalSumSub(Arc::new(left), Arc::new(right), Arc::new(subst))
    }

    /// Left-associated chain `G0 :_Ŝ1 G1 :_Ŝ2 ... :_Ŝn Gn`.
    pub fn chain(games: Vec<Expr>, substs: Vec<Expr>) -> Result<Expr> {
        let mut games = games.into_iter();
        let first = games.next().ok_or(Error::EmptyChain)?;
        if games.len() != substs.len() {
            return Err(Error::LengthMismatch {
                games: games.len() + 1,
                expected: games.len(),
                substs: substs.len(),
            });
        }
        Ok(games
            .zip(substs)
            .fold(first, |acc, (g, s)| Expr::subst(acc, g, s)))
    }

    pub fn has_explicit(&self) -> bool {
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                Expr::Nimber(_) => {}
                Expr::Explicit(_) => return true,
                Expr::Sum(a, b) | Expr::OrdinalSum(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
                Expr::OrdinalSumSub(a, b, c) => {
                    stack.push(a);
                    stack.push(b);
                    stack.push(c);
                }
            }
        }
        false
    }

    /// Depth of the tree; a leaf has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Expr::Nimber(_) | Expr::Explicit(_) => 0,
            Expr::Sum(a, b) | Expr::OrdinalSum(a, b) => 1 + a.depth().max(b.depth()),
            Expr::OrdinalSumSub(a, b, c) => 1 + a.depth().max(b.depth()).max(c.depth()),
        }
    }

    fn children(&self) -> Vec<&Expr> {
        match self {
            Expr::Nimber(_) | Expr::Explicit(_) => Vec::new(),
            Expr::Sum(a, b) | Expr::OrdinalSum(a, b) => vec![a, b],
            Expr::OrdinalSumSub(a, b, c) => vec![a, b, c],
        }
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render_lossy(self))
    }
}

/// Evaluates expressions, memoising variation sets of shared subtrees.
pub struct Evaluator<'a> {
    arena: Option<&'a mut GameArena>,
    memo: HashMap<*const Expr, NatSet>,
}

impl Default for Evaluator<'_> {
    fn default() -> Self {
        Self::new()
    }
}

impl<'a> Evaluator<'a> {
    /// An evaluator for expressions without explicit game leaves.
    pub fn new() -> Self {
        Evaluator {
            arena: None,
            memo: HashMap::new(),
        }
    }

    pub fn with_arena(arena: &'a mut GameArena) -> Self {
        Evaluator {
            arena: Some(arena),
            memo: HashMap::new(),
        }
    }

    pub fn vset(&mut self, root: &Expr) -> Result<NatSet> {
        // The memo is keyed by node address, so it must not outlive the
        // tree it was filled from.
        self.memo.clear();
        let mut stack = vec![(root, false)];
        while let Some((e, ready)) = stack.pop() {
            let key = e as *const Expr;
            if self.memo.contains_key(&key) {
                continue;
            }
            if !ready {
                stack.push((e, true));
                stack.extend(e.children().into_iter().map(|c| (c, false)));
                continue;
            }
            let v = match e {
                Expr::Nimber(n) => {
                    if *n > MAX_SET_LEN {
                        return Err(Error::SetTooLarge(*n));
                    }
                    NatSet::range(*n)
                }
                Expr::Explicit(g) => self
                    .arena
                    .as_deref_mut()
                    .ok_or(Error::UnresolvedLeaf)?
                    .vset(*g)?,
                Expr::Sum(a, b) => sum_rule(self.get(a), self.get(b)),
                Expr::OrdinalSum(a, b) => self.get(a).colon(self.get(b)),
                Expr::OrdinalSumSub(g, h, s) => subst_rule(self.get(g), self.get(h), self.get(s))?,
            };
            if v.len() as u64 > MAX_SET_LEN {
                return Err(Error::SetTooLarge(v.len() as u64));
            }
            self.memo.insert(key, v);
        }
        Ok(self.memo[&(root as *const Expr)].clone())
    }

    pub fn grundy(&mut self, e: &Expr) -> Result<u64> {
        Ok(self.vset(e)?.mex())
    }

    /// Outcome of `e`. At an ordinal-sum root the outcome is read off the
    /// component outcomes; otherwise from whether `0 ∈ V(e)`.
    pub fn outcome(&mut self, e: &Expr) -> Result<Outcome> {
        match e {
            Expr::OrdinalSumSub(g, h, s) => {
                let og = self.outcome_by_vset(g)?;
                let oh = self.outcome_by_vset(h)?;
                let os = self.outcome_by_vset(s)?;
                Ok(subst_outcome(og, oh, os))
            }
            Expr::OrdinalSum(g, h) => {
                let og = self.outcome_by_vset(g)?;
                let oh = self.outcome_by_vset(h)?;
                Ok(ordinal_outcome(og, oh))
            }
            _ => self.outcome_by_vset(e),
        }
    }

    pub fn outcome_by_vset(&mut self, e: &Expr) -> Result<Outcome> {
        Ok(outcome_of_vset(&self.vset(e)?))
    }

    fn get(&self, e: &Expr) -> &NatSet {
        &self.memo[&(e as *const Expr)]
    }
}

/// `V(G + H)` from the component variation sets.
pub fn sum_rule(g: &NatSet, h: &NatSet) -> NatSet {
    g.xor_translate(h.mex()).union(&h.xor_translate(g.mex()))
}

/// `V(G :_Ĥ H) = (V(G) + mex V(Ĥ)) : V(H)`.
pub fn subst_rule(g: &NatSet, h: &NatSet, subst: &NatSet) -> Result<NatSet> {
    Ok(g.add_translate(subst.mex())?.colon(h))
}

pub fn outcome_of_vset(v: &NatSet) -> Outcome {
    if v.contains(0) {
        Outcome::N
    } else {
        Outcome::P
    }
}

/// Outcome of `G : H` from the component outcomes.
pub fn ordinal_outcome(g: Outcome, h: Outcome) -> Outcome {
    if g == Outcome::P && h == Outcome::P {
        Outcome::P
    } else {
        Outcome::N
    }
}

/// Outcome of `G :_Ĥ H`: P exactly when `o(H) = P` and either `o(G) = P`
/// or `o(Ĥ) = N`.
pub fn subst_outcome(g: Outcome, h: Outcome, subst: Outcome) -> Outcome {
    if h == Outcome::P && (g == Outcome::P || subst == Outcome::N) {
        Outcome::P
    } else {
        Outcome::N
    }
}

/// Variation set of an expression without explicit leaves.
pub fn vset_of(e: &Expr) -> Result<NatSet> {
    Evaluator::new().vset(e)
}

pub fn grundy_of(e: &Expr) -> Result<u64> {
    Evaluator::new().grundy(e)
}

pub fn outcome_of(e: &Expr) -> Result<Outcome> {
    Evaluator::new().outcome(e)
}

/// A chain of nimbers `∗a0 :_∗â1 ∗a1 :_∗â2 ... :_∗ân ∗an`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    a: Vec<u64>,
    ahat: Vec<u64>,
}

impl ChainSpec {
    pub fn new(a: Vec<u64>, ahat: Vec<u64>) -> Result<ChainSpec> {
        if a.is_empty() {
            return Err(Error::EmptyChain);
        }
        if a.len() != ahat.len() + 1 {
            return Err(Error::LengthMismatch {
                games: a.len(),
                expected: a.len() - 1,
                substs: ahat.len(),
            });
        }
        Ok(ChainSpec { a, ahat })
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// Substitution values `â1..ân`.
    pub fn ahat(&self) -> &[u64] {
        &self.ahat
    }

    /// Number of substitution steps `n`.
    pub fn n(&self) -> usize {
        self.ahat.len()
    }

    /// Suffix sums `σ_i = Σ_{j ≥ i} (a_j − â_j)` for `i = 0..=n`, with
    /// `â_0` taken as 0.
    pub fn suffix_sums(&self) -> Vec<i128> {
        let n = self.n();
        let mut sigma = vec![0i128; n + 1];
        let mut acc = 0i128;
        for i in (0..=n).rev() {
            let hat = if i == 0 { 0 } else { self.ahat[i - 1] };
            acc += self.a[i] as i128 - hat as i128;
            sigma[i] = acc;
        }
        sigma
    }

    /// The largest `p` in `1..=n` with a negative suffix sum, or 0.
    pub fn pivot(&self) -> usize {
        let sigma = self.suffix_sums();
        (1..=self.n()).rev().find(|&p| sigma[p] < 0).unwrap_or(0)
    }

    /// Grundy value `a_p + a_{p+1} + ... + a_n`.
    pub fn grundy(&self) -> Result<u64> {
        self.a[self.pivot()..]
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("chain Grundy sum"))
    }

    pub fn to_expr(&self) -> Expr {
        let games = self.a.iter().map(|&x| Expr::Nimber(x)).collect();
        let substs = self.ahat.iter().map(|&x| Expr::Nimber(x)).collect();
        Expr::chain(games, substs).expect("lengths checked at construction")
    }
}

pub fn chain_grundy(c: &ChainSpec) -> Result<u64> {
    c.grundy()
}

pub fn chain_p(c: &ChainSpec) -> usize {
    c.pivot()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Expr {
        Expr::nim(x)
    }

    /// H and Ĥ of the six-element poset example.
    fn h_and_hhat() -> (Expr, Expr) {
        let h = Expr::sum(
            Expr::subst(Expr::sum(n(2), n(3)), n(5), n(2)),
            Expr::subst(n(4), n(6), n(1)),
        );
        let hhat = Expr::sum(
            Expr::subst(Expr::sum(n(5), n(4)), n(2), n(2)),
            Expr::subst(n(3), n(1), n(1)),
        );
        (h, hhat)
    }

    #[test]
    fn worked_example_sets() {
        assert_eq!(
            vset_of(&Expr::sum(n(2), n(3))).unwrap(),
            NatSet::from([0, 2, 3])
        );
        assert_eq!(
            vset_of(&Expr::subst(Expr::sum(n(2), n(3)), n(5), n(2))).unwrap(),
            NatSet::range(8)
        );
        assert_eq!(
            vset_of(&Expr::subst(n(4), n(6), n(1))).unwrap(),
            NatSet::range(10)
        );
        let (h, hhat) = h_and_hhat();
        assert_eq!(
            vset_of(&h).unwrap(),
            NatSet::from([0, 1, 8, 9, 10, 11, 12, 13, 14, 15])
        );
        assert_eq!(grundy_of(&hhat).unwrap(), 7);
        let whole = Expr::subst(n(1), h, hhat);
        assert_eq!(
            vset_of(&whole).unwrap(),
            NatSet::from([0, 1, 7, 9, 10, 11, 12, 13, 14, 15, 16])
        );
        assert_eq!(grundy_of(&whole).unwrap(), 2);
        assert_eq!(outcome_of(&whole).unwrap(), Outcome::N);
    }

    #[test]
    fn simple_values() {
        for k in 0..6 {
            assert_eq!(grundy_of(&n(k)).unwrap(), k);
        }
        assert_eq!(outcome_of(&n(0)).unwrap(), Outcome::P);
    }

    #[test]
    fn outcome_case_table() {
        use Outcome::*;
        assert_eq!(subst_outcome(N, P, P), N);
        assert_eq!(subst_outcome(P, P, P), P);
        assert_eq!(subst_outcome(N, P, N), P);
        assert_eq!(subst_outcome(P, N, N), N);
        // G = ∗1 (N), H = ∗0 (P), Ĥ = ∗0 (P) through the expression route.
        let e = Expr::subst(n(1), n(0), n(0));
        assert_eq!(outcome_of(&e).unwrap(), N);
        assert_eq!(Evaluator::new().outcome_by_vset(&e).unwrap(), N);
    }

    #[test]
    fn chain_example() {
        let c = ChainSpec::new(vec![6, 3, 9, 2, 1, 2, 5], vec![10, 1, 5, 5, 0, 3]).unwrap();
        assert_eq!(c.suffix_sums(), vec![4, -2, 5, -3, 0, 4, 2]);
        assert_eq!(chain_p(&c), 3);
        assert_eq!(chain_grundy(&c).unwrap(), 10);
        assert_eq!(grundy_of(&c.to_expr()).unwrap(), 10);
    }

    #[test]
    fn chain_edge_cases() {
        let single = ChainSpec::new(vec![7], vec![]).unwrap();
        assert_eq!(chain_grundy(&single).unwrap(), 7);
        assert_eq!(chain_p(&single), 0);
        let c = ChainSpec::new(vec![0, 0], vec![1]).unwrap();
        assert_eq!(chain_p(&c), 1);
        let c = ChainSpec::new(vec![3, 4, 5], vec![1, 2]).unwrap();
        assert_eq!(chain_p(&c), 0);
        assert_eq!(chain_grundy(&c).unwrap(), 12);
        assert!(ChainSpec::new(vec![], vec![]).is_err());
        assert!(ChainSpec::new(vec![1, 2], vec![]).is_err());
        let big = ChainSpec::new(vec![u64::MAX, 1], vec![0]).unwrap();
        assert_eq!(big.grundy(), Err(Error::Overflow("chain Grundy sum")));
    }

    #[test]
    fn explicit_leaf_needs_arena() {
        let e = Expr::sum(n(1), Expr::Explicit(GameId::EMPTY));
        assert_eq!(vset_of(&e), Err(Error::UnresolvedLeaf));
        let mut arena = GameArena::new();
        let one = arena.nimber(1).unwrap();
        let g = arena.make_game([one]).unwrap();
        let e = Expr::ordinal(Expr::Explicit(g), n(2));
        assert_eq!(Evaluator::with_arena(&mut arena).grundy(&e).unwrap(), 3);
    }

    #[test]
    fn shared_subtrees_are_evaluated_once() {
        let shared = Arc::new(Expr::sum(n(3), n(5)));
        let e = Expr::Sum(shared.clone(), shared);
        let unshared = Expr::sum(Expr::sum(n(3), n(5)), Expr::sum(n(3), n(5)));
        assert_eq!(vset_of(&e).unwrap(), vset_of(&unshared).unwrap());
        assert_eq!(
            vset_of(&e).unwrap(),
            NatSet::from([0, 1, 2, 3, 4, 5, 7]).xor_translate(6)
        );
    }

    #[test]
    fn oversized_nimber_is_rejected() {
        assert!(matches!(vset_of(&n(1 << 40)), Err(Error::SetTooLarge(_))));
    }

    #[test]
    fn deep_chain_evaluates_without_recursion() {
        let c = ChainSpec::new(vec![1; 5_001], vec![1; 5_000]).unwrap();
        assert_eq!(grundy_of(&c.to_expr()).unwrap(), c.grundy().unwrap());
    }
}
