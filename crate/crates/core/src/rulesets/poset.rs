//! Games played on a finite poset. Each element `x` carries a current game
//! `G_x` and a substitution game `Ĝ_x`. A move picks some `x`, moves in
//! `G_x`, and resets every `y` strictly below `x` to `Ĝ_y`.
//!
//! Text format, one directive per line, `#` starts a comment:
//!
//! ```text
//! elem x1
//! elem x2
//! le x2 x1          # x2 ≼ x1
//! game x1 *1
//! subst x1 *6
//! game x2 *2 + *3
//! subst x2 0
//! ```

use std::collections::HashMap;

use crate::arena::{GameArena, GameId, Outcome};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::oracle::expand;
use crate::parser::{parse, render};
use crate::rulesets::retro::retrograde_grundy;

/// A partial order on elements `0..len`, stored as its reflexive closure.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    le: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Adds an element and returns its index, or `None` if the name is taken.
    pub fn add_element(&mut self, name: &str) -> Option<usize> {
        if self.index_of(name).is_some() {
            return None;
        }
        for row in &mut self.le {
            row.push(false);
        }
        let n = self.names.len();
        self.names.push(name.to_string());
        let mut row = vec![false; n + 1];
        row[n] = true;
        self.le.push(row);
        Some(n)
    }

    /// Records `a ≼ b` and closes transitively. Fails if `b ≼ a` already
    /// holds for distinct `a` and `b`.
    pub fn add_le(&mut self, a: usize, b: usize) -> std::result::Result<(), String> {
        if a != b && self.le[b][a] {
            return Err(format!(
                "{} ≼ {} would make the order cyclic",
                self.names[a], self.names[b]
            ));
        }
        let n = self.len();
        let lower: Vec<usize> = (0..n).filter(|&u| self.le[u][a]).collect();
        let upper: Vec<usize> = (0..n).filter(|&v| self.le[b][v]).collect();
        for &u in &lower {
            for &v in &upper {
                self.le[u][v] = true;
            }
        }
        Ok(())
    }

    /// Whether `a ≼ b`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    /// Elements strictly below `x`.
    pub fn strictly_below(&self, x: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| y != x && self.le[y][x])
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetGame {
    poset: Poset,
    current: Vec<Expr>,
    subst: Vec<Expr>,
}

impl PosetGame {
    pub fn new(poset: Poset, current: Vec<Expr>, subst: Vec<Expr>) -> Result<Self> {
        if current.len() != poset.len() || subst.len() != poset.len() {
            return Err(Error::LengthMismatch {
                games: current.len(),
                expected: poset.len(),
                substs: subst.len(),
            });
        }
        Ok(PosetGame {
            poset,
            current,
            subst,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::PosetLoad { line, message };
        let mut poset = Poset::new();
        let mut declared_at = Vec::new();
        let mut current: HashMap<usize, Expr> = HashMap::new();
        let mut subst: HashMap<usize, Expr> = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (keyword, rest) = body
                .split_once(char::is_whitespace)
                .map_or((body, ""), |(k, r)| (k, r.trim()));
            let lookup = |poset: &Poset, name: &str| {
                poset
                    .index_of(name)
                    .ok_or_else(|| err(line, format!("unknown element `{name}`")))
            };
            match keyword {
                "elem" => {
                    let mut words = rest.split_whitespace();
                    let (Some(name), None) = (words.next(), words.next()) else {
                        return Err(err(line, "expected `elem <id>`".into()));
                    };
                    if poset.add_element(name).is_none() {
                        return Err(err(line, format!("element `{name}` declared twice")));
                    }
                    declared_at.push(line);
                }
                "le" => {
                    let words: Vec<&str> = rest.split_whitespace().collect();
                    let [a, b] = words[..] else {
                        return Err(err(line, "expected `le <a> <b>`".into()));
                    };
                    let (a, b) = (lookup(&poset, a)?, lookup(&poset, b)?);
                    poset.add_le(a, b).map_err(|m| err(line, m))?;
                }
                "game" | "subst" => {
                    let Some((name, text)) = rest.split_once(char::is_whitespace) else {
                        return Err(err(line, format!("expected `{keyword} <id> <expression>`")));
                    };
                    let x = lookup(&poset, name)?;
                    let e = parse(text).map_err(|e| err(line, e.to_string()))?;
                    let map = if keyword == "game" {
                        &mut current
                    } else {
                        &mut subst
                    };
                    if map.insert(x, e).is_some() {
                        return Err(err(line, format!("`{keyword}` for `{name}` given twice")));
                    }
                }
                other => return Err(err(line, format!("unknown directive `{other}`"))),
            }
        }
        let mut cur = Vec::with_capacity(poset.len());
        let mut sub = Vec::with_capacity(poset.len());
        for (x, &line) in declared_at.iter().enumerate() {
            let missing = |what: &str| {
                err(
                    line,
                    format!("element `{}` has no `{what}` line", poset.name(x)),
                )
            };
            cur.push(current.remove(&x).ok_or_else(|| missing("game"))?);
            sub.push(subst.remove(&x).ok_or_else(|| missing("subst"))?);
        }
        PosetGame::new(poset, cur, sub)
    }

    /// Writes the game in the text format. Fails on explicit game leaves.
    pub fn to_text(&self) -> Result<String> {
        let p = &self.poset;
        let mut out = String::new();
        for x in 0..p.len() {
            out.push_str(&format!("elem {}\n", p.name(x)));
        }
        for a in 0..p.len() {
            for b in 0..p.len() {
                if a != b && p.le(a, b) {
                    out.push_str(&format!("le {} {}\n", p.name(a), p.name(b)));
                }
            }
        }
        for x in 0..p.len() {
            out.push_str(&format!(
                "game {} {}\n",
                p.name(x),
                render(&self.current[x])?
            ));
            out.push_str(&format!(
                "subst {} {}\n",
                p.name(x),
                render(&self.subst[x])?
            ));
        }
        Ok(out)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn current(&self) -> &[Expr] {
        &self.current
    }

    pub fn subst(&self) -> &[Expr] {
        &self.subst
    }

    fn expand_all(&self, arena: &mut GameArena) -> Result<(Vec<GameId>, Vec<GameId>)> {
        let cur = self
            .current
            .iter()
            .map(|e| expand(arena, e))
            .collect::<Result<Vec<_>>>()?;
        let sub = self
            .subst
            .iter()
            .map(|e| expand(arena, e))
            .collect::<Result<Vec<_>>>()?;
        Ok((cur, sub))
    }

    /// Successor positions, with the changed games as explicit leaves.
    pub fn moves(&self, arena: &mut GameArena) -> Result<Vec<PosetGame>> {
        let (cur, sub) = self.expand_all(arena)?;
        let below = self.below_table();
        let succ = state_moves(arena, &below, &sub, &cur)?;
        Ok(succ
            .into_iter()
            .map(|state| PosetGame {
                poset: self.poset.clone(),
                current: state.into_iter().map(Expr::Explicit).collect(),
                subst: self.subst.clone(),
            })
            .collect())
    }

    /// Grundy value of the position by retrograde search. States are
    /// tuples of game handles, so transpositions merge.
    pub fn grundy(&self, arena: &mut GameArena, state_cap: usize) -> Result<u64> {
        let (cur, sub) = self.expand_all(arena)?;
        let below = self.below_table();
        let arena = &*arena;
        retrograde_grundy(cur, |s| state_moves(arena, &below, &sub, s), state_cap)
    }

    pub fn outcome(&self, arena: &mut GameArena, state_cap: usize) -> Result<Outcome> {
        Ok(if self.grundy(arena, state_cap)? == 0 {
            Outcome::P
        } else {
            Outcome::N
        })
    }

    fn below_table(&self) -> Vec<Vec<usize>> {
        (0..self.poset.len())
            .map(|x| self.poset.strictly_below(x))
            .collect()
    }
}

fn state_moves(
    arena: &GameArena,
    below: &[Vec<usize>],
    sub: &[GameId],
    state: &[GameId],
) -> Result<Vec<Vec<GameId>>> {
    let mut out = Vec::new();
    for (x, &g) in state.iter().enumerate() {
        for &opt in arena.options(g)? {
            let mut next = state.to_vec();
            next[x] = opt;
            for &y in &below[x] {
                next[y] = sub[y];
            }
            out.push(next);
        }
    }
    Ok(out)
}

/// Poset shapes with a known sum and ordinal-sum decomposition. Elements
/// are named `x1`, `x2`, ... and `games[i]`, `substs[i]` belong to `x{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `x1 > x2 > x3`.
    Chain3,
    /// `x1` above `x2` and `x3`, which are incomparable.
    Fork3,
    /// Eight elements: `x1` above all, `x2, x3` above `x5`, `x4` above `x6, x7`,
    /// and everything above `x8`.
    Tree8,
    /// Six elements: `x1` above all, `x2, x3` above `x5`, `x4` above `x6`.
    Tree6,
}

impl Shape {
    pub const ALL: [Shape; 4] = [Shape::Chain3, Shape::Fork3, Shape::Tree8, Shape::Tree6];

    /// Number of elements.
    pub fn size(self) -> usize {
        match self {
            Shape::Chain3 | Shape::Fork3 => 3,
            Shape::Tree8 => 8,
            Shape::Tree6 => 6,
        }
    }

    /// Cover relations as `(lower, upper)` pairs, 1-based.
    fn covers(self) -> &'static [(usize, usize)] {
        match self {
            Shape::Chain3 => &[(2, 1), (3, 2)],
            Shape::Fork3 => &[(2, 1), (3, 1)],
            Shape::Tree8 => &[
                (2, 1),
                (3, 1),
                (4, 1),
                (5, 2),
                (5, 3),
                (6, 4),
                (7, 4),
                (8, 5),
                (8, 6),
                (8, 7),
            ],
            Shape::Tree6 => &[(2, 1), (3, 1), (4, 1), (5, 2), (5, 3), (6, 4)],
        }
    }

    pub fn poset(self) -> Poset {
        let mut p = Poset::new();
        for i in 1..=self.size() {
            p.add_element(&format!("x{i}"));
        }
        for &(lo, hi) in self.covers() {
            p.add_le(lo - 1, hi - 1).expect("shape is a partial order");
        }
        p
    }

    pub fn game(self, games: &[Expr], substs: &[Expr]) -> Result<PosetGame> {
        PosetGame::new(self.poset(), games.to_vec(), substs.to_vec())
    }

    /// The expression equivalent to the poset game.
    pub fn expression(self, games: &[Expr], substs: &[Expr]) -> Result<Expr> {
        let n = self.size();
        if games.len() != n || substs.len() != n {
            return Err(Error::LengthMismatch {
                games: games.len(),
                expected: n,
                substs: substs.len(),
            });
        }
        let g = |i: usize| games[i - 1].clone();
        let s = |i: usize| substs[i - 1].clone();
        // The middle layer of both trees, built from either side.
        let middle = |f: &dyn Fn(usize) -> Expr, x4_right: Expr, x4_sub: Expr| {
            Expr::sum(
                Expr::subst(Expr::sum(f(2), f(3)), f(5), s(5)),
                Expr::subst(f(4), x4_right, x4_sub),
            )
        };
        Ok(match self {
            Shape::Chain3 => Expr::chain(vec![g(1), g(2), g(3)], vec![s(2), s(3)])?,
            Shape::Fork3 => Expr::subst(g(1), Expr::sum(g(2), g(3)), Expr::sum(s(2), s(3))),
            Shape::Tree8 => {
                let sub67 = Expr::sum(s(6), s(7));
                let h = middle(&g, Expr::sum(g(6), g(7)), sub67.clone());
                let hhat = middle(&s, sub67.clone(), sub67);
                Expr::chain(vec![g(1), h, g(8)], vec![hhat, s(8)])?
            }
            Shape::Tree6 => {
                let h = middle(&g, g(6), s(6));
                let hhat = middle(&s, s(6), s(6));
                Expr::subst(g(1), h, hhat)
            }
        })
    }
}
