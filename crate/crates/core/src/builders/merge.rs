//! Colored path records and the two-proposal merge of a record into a
//! growing blue path.

use std::collections::HashSet;

use crate::board::{Color, ColoredGraph, Vertex};
use crate::strategy::StrategyError;

/// `P(s,t)`: a blue part on `s` vertices and a blue part on `t <= s`
/// vertices joined end to end by one red edge. `t = 0` is a pure blue path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRecord {
    /// The larger part; for a brb-path its last vertex is on the red edge.
    big: Vec<Vertex>,
    /// The smaller part; its first vertex is on the red edge.
    small: Vec<Vertex>,
    /// Round in which the record became a brb-path (0 for pure paths).
    created: u32,
}

impl PathRecord {
    pub fn pure(path: Vec<Vertex>) -> Self {
        PathRecord {
            big: path,
            small: Vec::new(),
            created: 0,
        }
    }

    /// Joins blue paths `a` and `b` by a red edge from `a.last()` to
    /// `b[0]`; the larger side becomes `s`.
    pub fn brb(a: Vec<Vertex>, b: Vec<Vertex>, created: u32) -> Self {
        let (big, small) = if a.len() >= b.len() {
            (a, b)
        } else {
            let mut a = a;
            let mut b = b;
            a.reverse();
            b.reverse();
            (b, a)
        };
        PathRecord { big, small, created }
    }

    pub fn s(&self) -> usize {
        self.big.len()
    }

    pub fn t(&self) -> usize {
        self.small.len()
    }

    /// Imbalance `|s - t|`.
    pub fn u(&self) -> usize {
        self.s() - self.t()
    }

    pub fn is_pure(&self) -> bool {
        self.small.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        self.u() == 0
    }

    pub fn created(&self) -> u32 {
        self.created
    }

    pub fn vertex_count(&self) -> usize {
        self.s() + self.t()
    }

    /// Red edge endpoints `(x, y)`, `x` on the larger side.
    pub fn red_edge(&self) -> Option<(Vertex, Vertex)> {
        Some((*self.big.last()?, *self.small.first()?))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.big.iter().chain(&self.small).copied()
    }

    pub fn big(&self) -> &[Vertex] {
        &self.big
    }

    pub fn small(&self) -> &[Vertex] {
        &self.small
    }

    /// The record's edges are on the board with the claimed colors.
    pub fn check(&self, board: &ColoredGraph) -> Result<(), StrategyError> {
        let blue_ok = |p: &[Vertex]| p.windows(2).all(|w| board.color_of(w[0], w[1]) == Some(Color::Blue));
        let red_ok = self
            .red_edge()
            .is_none_or(|(x, y)| board.color_of(x, y) == Some(Color::Red));
        if self.big.is_empty() || !blue_ok(&self.big) || !blue_ok(&self.small) || !red_ok {
            return Err(StrategyError::Precondition(format!("{self:?} is not a colored path on the board")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Step {
    Idle,
    AskedLarge(PathRecord),
    AskedSmall(PathRecord),
}

/// Grows a blue path by absorbing records one at a time, last record
/// first. Each absorption costs at most two proposals and adds at least
/// the smaller part of the record, unless Painter closes a red triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase2Merge {
    /// Current blue path; its free end is the last vertex.
    head: Vec<Vertex>,
    queue: Vec<PathRecord>,
    step: Step,
    proposals: usize,
}

impl Phase2Merge {
    /// `records[0]` supplies the starting path (its larger part); the rest
    /// are absorbed from the back.
    pub fn new(records: Vec<PathRecord>, board: &ColoredGraph) -> Result<Self, StrategyError> {
        let mut seen = HashSet::new();
        for r in &records {
            r.check(board)?;
            if !r.vertices().all(|v| seen.insert(v)) {
                return Err(StrategyError::Precondition("merge records are not vertex-disjoint".into()));
            }
        }
        let mut it = records.into_iter();
        let first = it
            .next()
            .ok_or_else(|| StrategyError::Precondition("merge needs at least one record".into()))?;
        let mut head = first.big;
        head.reverse();
        Ok(Phase2Merge {
            head,
            queue: it.collect(),
            step: Step::Idle,
            proposals: 0,
        })
    }

    pub fn head(&self) -> &[Vertex] {
        &self.head
    }

    pub fn proposals(&self) -> usize {
        self.proposals
    }

    pub fn remaining(&self) -> usize {
        self.queue.len()
    }

    /// Next proposal, or `None` once every record has been absorbed.
    pub fn next(&mut self, board: &ColoredGraph) -> Result<Option<(Vertex, Vertex)>, StrategyError> {
        let w = *self.head.last().expect("head is never empty");
        match std::mem::replace(&mut self.step, Step::Idle) {
            Step::Idle => {}
            Step::AskedLarge(r) => {
                let (x, y) = r.red_edge().expect("brb record");
                match reply(board, w, x)? {
                    Color::Blue => self.head.extend(r.big.iter().rev()),
                    Color::Red => {
                        self.step = Step::AskedSmall(r);
                        self.proposals += 1;
                        return Ok(Some((w, y)));
                    }
                }
            }
            Step::AskedSmall(r) => {
                let (_, y) = r.red_edge().expect("brb record");
                match reply(board, w, y)? {
                    Color::Blue => self.head.extend(&r.small),
                    Color::Red => return Err(StrategyError::GameAlreadyOver),
                }
            }
        }
        let w = *self.head.last().expect("head is never empty");
        let Some(r) = self.queue.pop() else {
            return Ok(None);
        };
        match r.red_edge() {
            Some((x, _)) => {
                self.step = Step::AskedLarge(r);
                self.proposals += 1;
                Ok(Some((w, x)))
            }
            None => Err(StrategyError::Precondition("only the first merge record may be pure".into())),
        }
    }
}

pub(crate) fn reply(board: &ColoredGraph, u: Vertex, v: Vertex) -> Result<Color, StrategyError> {
    board
        .color_of(u, v)
        .ok_or_else(|| StrategyError::Stage(format!("proposal {u} {v} was not colored")))
}
