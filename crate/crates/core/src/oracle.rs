//! Brute-force ground truth: expression expansion into explicit games, and
//! seeded generators of small games and expressions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arena::{GameArena, GameId};
use crate::compound::CompoundKind;
use crate::error::{Error, Result};
use crate::expr::{Evaluator, Expr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub max_birthday: u32,
    pub max_options: usize,
    pub max_expr_depth: usize,
    pub max_nimber: u64,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_birthday: 4,
            max_options: 3,
            max_expr_depth: 4,
            max_nimber: 4,
            seed: 0,
        }
    }
}

impl GenConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A-priori size estimate of an expression's game tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeEstimate {
    /// Upper bound on distinct positions.
    pub positions: u128,
    /// Upper bound on the birthday.
    pub birthday: u128,
}

pub fn estimate(arena: &mut GameArena, e: &Expr) -> Result<SizeEstimate> {
    Ok(match e {
        Expr::Nimber(n) => SizeEstimate {
            positions: *n as u128 + 1,
            birthday: *n as u128,
        },
        Expr::Explicit(g) => SizeEstimate {
            positions: arena.reachable_count(*g)? as u128,
            birthday: arena.birthday(*g)? as u128,
        },
        Expr::Sum(a, b) => combine(
            CompoundKind::Sum,
            &[estimate(arena, a)?, estimate(arena, b)?],
        ),
        Expr::OrdinalSum(a, b) => combine(
            CompoundKind::Ordinal,
            &[estimate(arena, a)?, estimate(arena, b)?],
        ),
        Expr::OrdinalSumSub(g, h, s) => combine(
            CompoundKind::Subst,
            &[
                estimate(arena, g)?,
                estimate(arena, h)?,
                estimate(arena, s)?,
            ],
        ),
    })
}

fn combine(kind: CompoundKind, parts: &[SizeEstimate]) -> SizeEstimate {
    let positions: Vec<u128> = parts.iter().map(|p| p.positions).collect();
    let births: Vec<u128> = parts.iter().map(|p| p.birthday).collect();
    SizeEstimate {
        positions: kind.position_bound(&positions),
        birthday: kind.birthday_bound(&births),
    }
}

/// Builds the explicit game denoted by `e` from the recursive definitions.
/// Refuses up front when the position estimate exceeds the arena cap.
pub fn expand(arena: &mut GameArena, e: &Expr) -> Result<GameId> {
    let est = estimate(arena, e)?;
    if est.positions > arena.node_cap() as u128 {
        return Err(Error::ExpansionRefused {
            positions: est.positions,
            birthday: est.birthday,
            cap: arena.node_cap(),
        });
    }
    expand_unchecked(arena, e)
}

fn expand_unchecked(arena: &mut GameArena, e: &Expr) -> Result<GameId> {
    match e {
        Expr::Nimber(n) => arena.nimber(*n),
        Expr::Explicit(g) => {
            arena.check(*g)?;
            Ok(*g)
        }
        Expr::Sum(a, b) => {
            let (a, b) = (expand_unchecked(arena, a)?, expand_unchecked(arena, b)?);
            arena.disjunctive_sum(a, b)
        }
        Expr::OrdinalSum(a, b) => {
            let (a, b) = (expand_unchecked(arena, a)?, expand_unchecked(arena, b)?);
            arena.ordinal_sum(a, b)
        }
        Expr::OrdinalSumSub(g, h, s) => {
            let g = expand_unchecked(arena, g)?;
            let h = expand_unchecked(arena, h)?;
            let s = expand_unchecked(arena, s)?;
            arena.osws(g, h, s)
        }
    }
}

/// Random game with birthday at most `cfg.max_birthday` and at most
/// `cfg.max_options` options per position.
pub fn random_game<R: Rng>(arena: &mut GameArena, cfg: &GenConfig, rng: &mut R) -> Result<GameId> {
    let mut pool: Vec<(GameId, u32)> = vec![(GameId::EMPTY, 0)];
    gen_game(arena, cfg, cfg.max_birthday, &mut pool, rng)
}

fn gen_game<R: Rng>(
    arena: &mut GameArena,
    cfg: &GenConfig,
    max_birthday: u32,
    pool: &mut Vec<(GameId, u32)>,
    rng: &mut R,
) -> Result<GameId> {
    if max_birthday == 0 {
        return Ok(GameId::EMPTY);
    }
    let k = rng.gen_range(0..=cfg.max_options);
    let mut options = Vec::with_capacity(k);
    for _ in 0..k {
        let reusable: Vec<GameId> = pool
            .iter()
            .filter(|&&(_, b)| b < max_birthday)
            .map(|&(g, _)| g)
            .collect();
        let option = if !reusable.is_empty() && rng.gen_bool(0.4) {
            *reusable.choose(rng).expect("non-empty")
        } else {
            let b = rng.gen_range(0..max_birthday);
            gen_game(arena, cfg, b, pool, rng)?
        };
        options.push(option);
    }
    let g = arena.make_game(options)?;
    let b = arena.birthday(g)? as u32;
    debug_assert!(b <= max_birthday);
    pool.push((g, b));
    Ok(g)
}

/// Random expression over nimber leaves `∗0..=∗max_nimber`, of depth at
/// most `cfg.max_expr_depth`.
pub fn random_expr<R: Rng>(cfg: &GenConfig, rng: &mut R) -> Expr {
    gen_expr(cfg, cfg.max_expr_depth, rng)
}

fn gen_expr<R: Rng>(cfg: &GenConfig, depth: usize, rng: &mut R) -> Expr {
    // Early leaves keep most trees small enough to expand.
    if depth == 0 || rng.gen_bool(0.4) {
        return Expr::Nimber(rng.gen_range(0..=cfg.max_nimber));
    }
    match rng.gen_range(0..3) {
        0 => Expr::sum(gen_expr(cfg, depth - 1, rng), gen_expr(cfg, depth - 1, rng)),
        1 => Expr::ordinal(gen_expr(cfg, depth - 1, rng), gen_expr(cfg, depth - 1, rng)),
        _ => Expr::subst(
            gen_expr(cfg, depth - 1, rng),
            gen_expr(cfg, depth - 1, rng),
            gen_expr(cfg, depth - 1, rng),
        ),
    }
}

/// Every game of birthday at most `max_birthday`, in interning order.
/// There are 1, 2, 4, 16, 65536 games at birthdays 0 to 4.
pub fn all_games(arena: &mut GameArena, max_birthday: u32) -> Result<Vec<GameId>> {
    let mut level = vec![GameId::EMPTY];
    for _ in 0..max_birthday {
        if level.len() > 20 {
            return Err(Error::NodeCapExceeded {
                cap: arena.node_cap(),
            });
        }
        let mut next = Vec::with_capacity(1 << level.len());
        for mask in 0u64..(1u64 << level.len()) {
            let opts = level
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &g)| g);
            next.push(arena.make_game(opts)?);
        }
        level = next;
    }
    Ok(level)
}

/// Outcome of a single oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Trial {
    Passed,
    Failed(String),
    Skipped(Error),
}

/// Compares variation set, Grundy number and outcome of `formula` against
/// the expansion of `e`. `formula` is normally `e` itself.
pub fn compare(arena: &mut GameArena, e: &Expr, formula: &Expr) -> Result<Trial> {
    let g = match expand(arena, e) {
        Ok(g) => g,
        Err(err @ (Error::ExpansionRefused { .. } | Error::NodeCapExceeded { .. })) => {
            return Ok(Trial::Skipped(err))
        }
        Err(err) => return Err(err),
    };
    let (v, gr, o) = (arena.vset(g)?, arena.grundy(g)?, arena.outcome(g)?);
    let mut ev = Evaluator::new();
    let (fv, fg, fo) = (ev.vset(formula)?, ev.grundy(formula)?, ev.outcome(formula)?);
    if v == fv && gr == fg && o == fo {
        Ok(Trial::Passed)
    } else {
        Ok(Trial::Failed(format!(
            "{e}: expanded V={v} G={gr} o={o}, formula V={fv} G={fg} o={fo}"
        )))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub counterexamples: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Runs `count` seeded oracle trials over random expressions. With
/// `mutate`, every substitution node has its right operand and
/// substitution swapped on the formula side only, which must be caught.
pub fn check_random_exprs(
    arena: &mut GameArena,
    cfg: &GenConfig,
    count: usize,
    mutate: bool,
) -> Result<CheckReport> {
    let mut rng = cfg.rng();
    let mut report = CheckReport::default();
    for _ in 0..count {
        let e = random_expr(cfg, &mut rng);
        let formula = if mutate {
            swap_substitutions(&e)
        } else {
            e.clone()
        };
        match compare(arena, &e, &formula)? {
            Trial::Passed => report.passed += 1,
            Trial::Failed(msg) => {
                report.failed += 1;
                report.counterexamples.push(msg);
            }
            Trial::Skipped(_) => report.skipped += 1,
        }
    }
    Ok(report)
}

fn swap_substitutions(e: &Expr) -> Expr {
    match e {
        Expr::Nimber(_) | Expr::Explicit(_) => e.clone(),
        Expr::Sum(a, b) => Expr::sum(swap_substitutions(a), swap_substitutions(b)),
        Expr::OrdinalSum(a, b) => Expr::ordinal(swap_substitutions(a), swap_substitutions(b)),
        Expr::OrdinalSumSub(g, h, s) => Expr::subst(
            swap_substitutions(g),
            swap_substitutions(s),
            swap_substitutions(h),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_examples() {
        let mut a = GameArena::new();
        let g = expand(&mut a, &Expr::nim(3)).unwrap();
        assert_eq!(g, a.nimber(3).unwrap());
        let e = Expr::subst(Expr::nim(6), Expr::nim(3), Expr::nim(10));
        let g = expand(&mut a, &e).unwrap();
        assert_eq!(a.grundy(g).unwrap(), 3);
        let e = Expr::subst(Expr::nim(2), Expr::nim(3), Expr::nim(1));
        let g = expand(&mut a, &e).unwrap();
        assert_eq!(a.grundy(g).unwrap(), 5);
    }

    #[test]
    fn expand_refuses_with_estimate() {
        let mut a = GameArena::with_node_cap(100);
        let e = Expr::sum(Expr::nim(20), Expr::nim(20));
        match expand(&mut a, &e) {
            Err(Error::ExpansionRefused {
                positions,
                birthday,
                cap,
            }) => {
                assert_eq!(positions, 441);
                assert_eq!(birthday, 40);
                assert_eq!(cap, 100);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn random_game_respects_bounds() {
        let mut a = GameArena::new();
        let cfg = GenConfig::default();
        let mut rng = cfg.rng();
        for _ in 0..1000 {
            let g = random_game(&mut a, &cfg, &mut rng).unwrap();
            assert!(a.birthday(g).unwrap() <= 4);
            assert!(a.options(g).unwrap().len() <= 3);
        }
        let zero = GenConfig {
            max_birthday: 0,
            ..GenConfig::default()
        };
        let mut rng = zero.rng();
        for _ in 0..20 {
            assert_eq!(random_game(&mut a, &zero, &mut rng).unwrap(), GameId::EMPTY);
        }
    }

    #[test]
    fn generators_are_deterministic() {
        let cfg = GenConfig {
            seed: 42,
            ..GenConfig::default()
        };
        let mut a = GameArena::new();
        let g1 = random_game(&mut a, &cfg, &mut cfg.rng()).unwrap();
        let g2 = random_game(&mut a, &cfg, &mut cfg.rng()).unwrap();
        assert_eq!(g1, g2);
        let e1 = random_expr(&cfg, &mut cfg.rng());
        let e2 = random_expr(&cfg, &mut cfg.rng());
        assert_eq!(e1, e2);
        let flat = GenConfig {
            max_expr_depth: 0,
            ..cfg
        };
        assert!(matches!(
            random_expr(&flat, &mut flat.rng()),
            Expr::Nimber(_)
        ));
    }

    #[test]
    fn all_games_counts() {
        let mut a = GameArena::new();
        assert_eq!(all_games(&mut a, 0).unwrap().len(), 1);
        assert_eq!(all_games(&mut a, 2).unwrap().len(), 4);
        let g3 = all_games(&mut a, 3).unwrap();
        assert_eq!(g3.len(), 16);
        let mut sorted = g3.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 16);
    }

    #[test]
    fn mutated_formula_is_caught() {
        let mut a = GameArena::new();
        let cfg = GenConfig {
            seed: 7,
            ..GenConfig::default()
        };
        let report = check_random_exprs(&mut a, &cfg, 200, true).unwrap();
        assert!(report.failed > 0);
        assert!(!report.ok());
    }
}
