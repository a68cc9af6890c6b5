//! Iterative-deepening minimax with a shared transposition table.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use dashmap::DashMap;
use rayon::prelude::*;

use crate::board::Color;

use super::canon::{canonical_key, CanonKey, CANON_MAX};
use super::dense::{DenseBoard, DenseTarget, DENSE_MAX};
use super::tree::StrategyTree;
use super::{SolverConfig, SolverError};

/// Known range of a position's exact value.
#[derive(Debug, Clone, Copy)]
struct Bounds {
    lo: u8,
    hi: u8,
}

const TERMINAL: CanonKey = [u64::MAX; 4];

pub(crate) struct Search {
    pub target: DenseTarget,
    pub limit: usize,
    cfg: SolverConfig,
    table: DashMap<CanonKey, Bounds>,
    expanded: AtomicU64,
    hits: AtomicU64,
    start: Instant,
}

struct Cand {
    kids: [Option<(DenseBoard, Option<CanonKey>)>; 2],
    forced: bool,
}

impl Search {
    pub fn new(target: DenseTarget, board: Option<usize>, cfg: SolverConfig) -> Self {
        Search {
            target,
            limit: board.unwrap_or(DENSE_MAX).min(DENSE_MAX),
            cfg,
            table: DashMap::new(),
            expanded: AtomicU64::new(0),
            hits: AtomicU64::new(0),
            start: Instant::now(),
        }
    }

    pub fn expanded(&self) -> u64 {
        self.expanded.load(Ordering::Relaxed)
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn table_len(&self) -> usize {
        self.table.len()
    }

    fn tick(&self) -> Result<(), SolverError> {
        let n = self.expanded.fetch_add(1, Ordering::Relaxed);
        if n.is_multiple_of(4096) {
            if let Some(cap) = self.cfg.time_cap {
                if self.start.elapsed() > cap {
                    return Err(SolverError::ResourceLimit(format!("time cap {cap:?} exceeded")));
                }
            }
            if self.table.len() > self.cfg.state_cap {
                return Err(SolverError::ResourceLimit(format!(
                    "state cap {} exceeded",
                    self.cfg.state_cap
                )));
            }
        }
        Ok(())
    }

    /// Some move wins on the spot whatever the color.
    fn win1(&self, b: &DenseBoard) -> bool {
        b.moves(self.limit).into_iter().any(|(u, v)| {
            b.completes(&self.target, u, v, Color::Red) && b.completes(&self.target, u, v, Color::Blue)
        })
    }

    fn win2(&self, b: &DenseBoard) -> bool {
        b.moves(self.limit).into_iter().any(|(u, v)| {
            [Color::Red, Color::Blue].into_iter().all(|c| {
                b.completes(&self.target, u, v, c) || self.win1(&b.with_edge(u, v, c))
            })
        })
    }

    /// Can Builder force a goal within `d` more rounds from the unfinished
    /// position `b`?
    pub fn win_within(&self, b: &DenseBoard, key: Option<CanonKey>, d: u8) -> Result<bool, SolverError> {
        match d {
            0 => return Ok(false),
            1 => return Ok(self.win1(b)),
            2 => return Ok(self.win2(b)),
            _ => {}
        }
        let key = match key {
            Some(k) => k,
            None => canonical_key(b)?,
        };
        if let Some(bd) = self.table.get(&key) {
            if bd.hi <= d {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return Ok(true);
            }
            if bd.lo > d {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return Ok(false);
            }
        }
        self.tick()?;
        let res = self.expand(b, d)?;
        self.table
            .entry(key)
            .and_modify(|bd| {
                if res {
                    bd.hi = bd.hi.min(d);
                } else {
                    bd.lo = bd.lo.max(d + 1);
                }
            })
            .or_insert(if res {
                Bounds { lo: 0, hi: d }
            } else {
                Bounds { lo: d + 1, hi: u8::MAX }
            });
        Ok(res)
    }

    fn peek(&self, key: &CanonKey) -> Option<Bounds> {
        self.table.get(key).map(|b| *b)
    }

    fn expand(&self, b: &DenseBoard, d: u8) -> Result<bool, SolverError> {
        let moves = b.moves(self.limit);
        let mut seen: HashSet<(CanonKey, CanonKey)> = HashSet::with_capacity(moves.len());
        let mut cands: Vec<Cand> = Vec::with_capacity(moves.len());
        let need_key = d > 2;
        for (u, v) in moves {
            let mut kids = [None, None];
            let mut pair = [TERMINAL; 2];
            for (i, c) in [Color::Red, Color::Blue].into_iter().enumerate() {
                if b.completes(&self.target, u, v, c) {
                    continue;
                }
                let child = b.with_edge(u, v, c);
                let key = if need_key && child.vertex_count() <= CANON_MAX {
                    Some(canonical_key(&child)?)
                } else {
                    None
                };
                if let Some(k) = key {
                    pair[i] = k;
                } else {
                    // no key: disable deduplication for this move
                    pair = [[u as u64, v as u64, 0, 0], [0; 4]];
                }
                kids[i] = Some((child, key));
            }
            let live = kids.iter().filter(|k| k.is_some()).count();
            if live == 0 {
                return Ok(true);
            }
            pair.sort_unstable();
            if !seen.insert((pair[0], pair[1])) {
                continue;
            }
            // table cutoffs
            let mut all_win = true;
            let mut dead = false;
            for (_, key) in kids.iter().flatten() {
                match key.and_then(|k| self.peek(&k)) {
                    Some(bd) if bd.lo > d - 1 => dead = true,
                    Some(bd) if bd.hi < d => {}
                    _ => all_win = false,
                }
            }
            if dead {
                continue;
            }
            if all_win {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return Ok(true);
            }
            cands.push(Cand { kids, forced: live == 1 });
        }
        cands.sort_by_key(|c| !c.forced);

        let eval = |c: &Cand| -> Result<bool, SolverError> {
            for (child, key) in c.kids.iter().flatten() {
                if !self.win_within(child, *key, d - 1)? {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        if d >= self.cfg.parallel_depth && cands.len() > 1 {
            match cands.par_iter().map(eval).find_any(|r| !matches!(r, Ok(false))) {
                Some(r) => r,
                None => Ok(false),
            }
        } else {
            for c in &cands {
                if eval(c)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }

    /// Smallest `d <= cap` with a forced win from `b`, if any.
    pub fn value_within(&self, b: &DenseBoard, cap: u8) -> Result<Option<u8>, SolverError> {
        for d in 1..=cap {
            if self.win_within(b, None, d)? {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    /// Optimal decision tree from the unfinished position `b`, whose value
    /// is at most `cap`; `round` counts the edges already on the board.
    pub fn extract(&self, b: &DenseBoard, round: u32, cap: u8) -> Result<StrategyTree, SolverError> {
        let value = self.value_within(b, cap)?.ok_or(SolverError::NotSolved)?;
        'moves: for (u, v) in b.moves(self.limit) {
            for c in [Color::Red, Color::Blue] {
                if !b.completes(&self.target, u, v, c) && !self.win_within(&b.with_edge(u, v, c), None, value - 1)? {
                    continue 'moves;
                }
            }
            let sub = |c: Color| -> Result<Box<StrategyTree>, SolverError> {
                Ok(Box::new(if b.completes(&self.target, u, v, c) {
                    StrategyTree::Win { color: c, round: round + 1 }
                } else {
                    self.extract(&b.with_edge(u, v, c), round + 1, value - 1)?
                }))
            };
            let red = sub(Color::Red)?;
            let blue = sub(Color::Blue)?;
            return Ok(StrategyTree::Move {
                u: u as u32,
                v: v as u32,
                red,
                blue,
            });
        }
        Err(SolverError::NotSolved)
    }
}
