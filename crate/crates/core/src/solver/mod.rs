//! Exact game values for small goal pairs.

pub mod canon;
pub mod dense;
mod search;
pub mod tree;

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::board::{BoardError, Color, ColoredGraph, TargetSpec, Verdict};
use crate::strategy::{Builder, StrategyError};

pub use canon::{canonical_form, canonical_key, CanonKey, CanonicalState};
pub use dense::{DenseBoard, DenseRed, DenseTarget};
pub use tree::StrategyTree;

use search::Search;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Board(#[from] BoardError),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("no solution within the budget")]
    NotSolved,
    #[error("strategy tree rejected: {0}")]
    Certificate(String),
    #[error("strategy tree parse error: {0}")]
    Parse(String),
}

pub const STATE_CAP_ENV: &str = "RAMSEY_ARENA_STATE_CAP";

#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Transposition table entries before giving up.
    pub state_cap: usize,
    pub time_cap: Option<Duration>,
    /// Remaining depth from which sibling moves are searched in parallel.
    pub parallel_depth: u8,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            state_cap: 40_000_000,
            time_cap: None,
            parallel_depth: 5,
        }
    }
}

impl SolverConfig {
    /// Defaults, with the state cap taken from the environment when set.
    pub fn from_env() -> Self {
        let mut cfg = SolverConfig::default();
        if let Some(cap) = std::env::var(STATE_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            cfg.state_cap = cap;
        }
        cfg
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveValue {
    Rounds(u32),
    AboveBudget,
}

impl fmt::Display for SolveValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveValue::Rounds(v) => write!(f, "{v}"),
            SolveValue::AboveBudget => f.write_str("above budget"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub expanded: u64,
    pub table_hits: u64,
    pub table_size: usize,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub target: TargetSpec,
    pub budget: u32,
    pub board: Option<usize>,
    pub value: SolveValue,
    pub tree: Option<StrategyTree>,
    pub stats: SolveStats,
}

/// A solver for one goal pair; keeps its table between calls.
pub struct Solver {
    spec: TargetSpec,
    board: Option<usize>,
    search: Search,
}

impl Solver {
    pub fn new(t: &TargetSpec, board: Option<usize>, cfg: SolverConfig) -> Result<Self, SolverError> {
        t.validate()?;
        if let Some(b) = board {
            if b < 2 {
                return Err(SolverError::InvalidTarget(format!("board needs at least 2 vertices, got {b}")));
            }
        }
        let target = DenseTarget::from_spec(t)?;
        Ok(Solver {
            spec: *t,
            board,
            search: Search::new(target, board, cfg),
        })
    }

    pub fn stats(&self) -> SolveStats {
        SolveStats {
            expanded: self.search.expanded(),
            table_hits: self.search.hits(),
            table_size: self.search.table_len(),
        }
    }

    /// Whether Builder can force a goal within `d` rounds from `b`.
    pub fn wins_within(&self, b: &DenseBoard, d: u32) -> Result<bool, SolverError> {
        if b.reached(&self.search.target).is_some() {
            return Ok(true);
        }
        self.search.win_within(b, None, clamp_budget(d))
    }

    /// Value of the empty board by iterative deepening, with a verified
    /// optimal decision tree when `with_tree` is set.
    pub fn solve(&self, budget: u32, with_tree: bool) -> Result<SolveResult, SolverError> {
        let root = DenseBoard::new();
        let value = self.search.value_within(&root, clamp_budget(budget))?;
        let tree = match value {
            Some(v) if with_tree => {
                let tree = self.search.extract(&root, 0, v)?;
                tree.verify(&self.spec, &ColoredGraph::new(), self.board, v as u32)?;
                Some(tree)
            }
            _ => None,
        };
        Ok(SolveResult {
            target: self.spec,
            budget,
            board: self.board,
            value: value.map_or(SolveValue::AboveBudget, |v| SolveValue::Rounds(v as u32)),
            tree,
            stats: self.stats(),
        })
    }
}

fn clamp_budget(b: u32) -> u8 {
    b.min(u8::MAX as u32 - 1) as u8
}

/// Exact value of `t` on the unbounded board, up to `budget` rounds.
pub fn solve(t: &TargetSpec, budget: u32) -> Result<SolveResult, SolverError> {
    Solver::new(t, None, SolverConfig::from_env())?.solve(budget, true)
}

/// As [`solve`], with Builder confined to vertices `0..board`.
pub fn solve_restricted(t: &TargetSpec, budget: u32, board: usize) -> Result<SolveResult, SolverError> {
    Solver::new(t, Some(board), SolverConfig::from_env())?.solve(budget, true)
}

/// The certificate tree of a solved result.
pub fn extract_strategy(r: &SolveResult) -> Result<StrategyTree, SolverError> {
    r.tree.clone().ok_or(SolverError::NotSolved)
}

/// Outcome of replaying a Builder against every Painter reply sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub holds: bool,
    /// Finished games seen.
    pub leaves: u64,
    /// Longest finished game.
    pub max_rounds: u32,
    /// Painter replies surviving `bound` rounds, when `holds` is false.
    pub counterexample: Option<Vec<Color>>,
}

pub const MAX_CHECK_BOUND: u32 = 30;

/// Plays `builder` against all `2^bound` Painter reply sequences,
/// depth-first with early termination at game over.
pub fn exhaustive_painter_check(
    builder: &dyn Builder,
    t: &TargetSpec,
    bound: u32,
) -> Result<CheckReport, SolverError> {
    if bound > MAX_CHECK_BOUND {
        return Err(SolverError::ResourceLimit(format!(
            "bound {bound} above {MAX_CHECK_BOUND} reply levels"
        )));
    }
    let board = ColoredGraph::new();
    if board.referee(t)?.is_over() {
        return Ok(CheckReport {
            holds: true,
            leaves: 1,
            max_rounds: 0,
            counterexample: None,
        });
    }
    let mut path = Vec::new();
    let r = check_rec(builder.box_clone(), board, t, bound, &mut path)?;
    Ok(r)
}

fn check_rec(
    mut builder: Box<dyn Builder>,
    board: ColoredGraph,
    t: &TargetSpec,
    bound: u32,
    path: &mut Vec<Color>,
) -> Result<CheckReport, SolverError> {
    let round = board.edge_count() as u32 + 1;
    let (u, v) = builder.propose(&board)?;
    if u == v || board.has_edge(u, v) {
        return Err(StrategyError::Invariant(format!("illegal proposal {u} {v} in round {round}")).into());
    }
    // split the top of the tree across threads
    let (red, blue) = if round <= 10 {
        let mut pr = path.clone();
        let mut pb = path.clone();
        let rb = builder.box_clone();
        let (r, b) = rayon::join(
            || branch(&board, (u, v), Color::Red, rb, t, bound, &mut pr),
            || branch(&board, (u, v), Color::Blue, builder, t, bound, &mut pb),
        );
        (r?, b?)
    } else {
        let red = branch(&board, (u, v), Color::Red, builder.box_clone(), t, bound, path)?;
        if !red.holds {
            return Ok(red);
        }
        (red, branch(&board, (u, v), Color::Blue, builder, t, bound, path)?)
    };
    if !red.holds {
        return Ok(red);
    }
    if !blue.holds {
        return Ok(blue);
    }
    Ok(CheckReport {
        holds: true,
        leaves: red.leaves + blue.leaves,
        max_rounds: red.max_rounds.max(blue.max_rounds),
        counterexample: None,
    })
}

fn branch(
    board: &ColoredGraph,
    (u, v): (u32, u32),
    c: Color,
    b: Box<dyn Builder>,
    t: &TargetSpec,
    bound: u32,
    path: &mut Vec<Color>,
) -> Result<CheckReport, SolverError> {
    let round = board.edge_count() as u32 + 1;
    let mut g = board.clone();
    g.add_edge(u, v, c)?;
    path.push(c);
    let out = if let Verdict::GameOver(_) = g.referee_after(t, u, v)? {
        Ok(CheckReport {
            holds: true,
            leaves: 1,
            max_rounds: round,
            counterexample: None,
        })
    } else if round >= bound {
        Ok(CheckReport {
            holds: false,
            leaves: 0,
            max_rounds: round,
            counterexample: Some(path.clone()),
        })
    } else {
        check_rec(b, g, t, bound, path)
    };
    path.pop();
    out
}

#[cfg(test)]
mod tests;
