//! Builder forcing a red triangle or a blue `P_n` within `3n - 4` rounds.
//!
//! Plays on vertices `0..2n-1`. Stage 1 joins the two shortest pure blue
//! paths each round; Stage 2 merges the resulting paths. If Painter
//! reddens the first `n - 3` proposals, Builder instead forces a blue
//! `P_3` on the five untouched vertices and merges the red edges onto it.

use std::sync::OnceLock;

use crate::board::{Color, ColoredGraph, Vertex};
use crate::solver::StrategyTree;
use crate::strategy::{Builder, StrategyError};

use super::merge::{reply, PathRecord, Phase2Merge};

const K5_TREE_TEXT: &str = include_str!("k5_strategy.txt");

/// Decision tree forcing a red triangle or a blue `P_3` on `K_5`,
/// over labels `0..5`.
pub fn k5_tree() -> &'static StrategyTree {
    static TREE: OnceLock<StrategyTree> = OnceLock::new();
    TREE.get_or_init(|| K5_TREE_TEXT.parse().expect("embedded K5 tree parses"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Stage1,
    ExceptionK5,
    Stage2,
    Done,
}

/// Counters for the structural checks made during play.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Theorem3Report {
    pub exception: bool,
    pub stage1_rounds: Option<usize>,
    /// Imbalanced brb-paths other than the merge root.
    pub m: usize,
    /// Balanced brb-paths other than the merge root.
    pub l: usize,
    pub round_checks: u64,
    pub end_checks: u64,
}

#[derive(Debug, Clone)]
pub struct Theorem3Builder {
    n: usize,
    stage: Stage,
    pure: Vec<Vec<Vertex>>,
    brb: Vec<PathRecord>,
    /// Proposals made so far.
    round: u32,
    pending: Option<(Vertex, Vertex)>,
    all_red: bool,
    k5_node: Option<&'static StrategyTree>,
    k5_map: [Vertex; 5],
    merge: Option<Phase2Merge>,
    report: Theorem3Report,
}

impl Theorem3Builder {
    pub fn new(n: usize) -> Result<Self, StrategyError> {
        if n < 3 {
            return Err(StrategyError::Precondition(format!("needs n >= 3, got {n}")));
        }
        let mut b = Theorem3Builder {
            n,
            stage: Stage::Stage1,
            pure: (0..2 * n as Vertex - 1).map(|v| vec![v]).collect(),
            brb: Vec::new(),
            round: 0,
            pending: None,
            all_red: true,
            k5_node: None,
            k5_map: [0; 5],
            merge: None,
            report: Theorem3Report::default(),
        };
        if n == 3 {
            b.enter_k5();
        }
        Ok(b)
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn report(&self) -> Theorem3Report {
        self.report
    }

    /// Blue path built by the merge stage so far.
    pub fn blue_path(&self) -> Option<&[Vertex]> {
        self.merge.as_ref().map(|m| m.head())
    }

    fn enter_k5(&mut self) {
        let mut free: Vec<Vertex> = self.pure.iter().filter(|p| p.len() == 1).map(|p| p[0]).collect();
        free.sort_unstable();
        debug_assert_eq!(free.len(), 5);
        self.k5_map.copy_from_slice(&free[..5]);
        self.k5_node = Some(k5_tree());
        self.stage = Stage::ExceptionK5;
        self.report.exception = true;
    }

    /// Shortest pure path first; ties by smallest endpoint label.
    fn sorted_pure(&mut self) {
        let key = |p: &Vec<Vertex>| (p.len(), *p.first().unwrap().min(p.last().unwrap()));
        self.pure.sort_by_key(key);
    }

    fn absorb_stage1_reply(&mut self, board: &ColoredGraph, (u, v): (Vertex, Vertex)) -> Result<(), StrategyError> {
        let c = reply(board, u, v)?;
        self.sorted_pure();
        let mut p = self.pure.remove(0);
        let qi = self
            .pure
            .iter()
            .position(|q| q.first() == Some(&v) || q.last() == Some(&v))
            .ok_or_else(|| StrategyError::Stage("stage 1 bookkeeping lost a path".into()))?;
        let mut q = self.pure.remove(qi);
        // orient p to end at u and q to start at v
        if p.last() != Some(&u) {
            p.reverse();
        }
        if q.first() != Some(&v) {
            q.reverse();
        }
        match c {
            Color::Blue => {
                self.all_red = false;
                p.extend(q);
                self.pure.push(p);
            }
            Color::Red => self.brb.push(PathRecord::brb(p, q, self.round)),
        }
        self.check_round()
    }

    /// Pure path sizes stay within a factor two of each other, and at most
    /// one of them is not a power of two.
    fn check_round(&mut self) -> Result<(), StrategyError> {
        self.report.round_checks += 1;
        let sizes: Vec<usize> = self.pure.iter().map(Vec::len).collect();
        if let (Some(&lo), Some(&hi)) = (sizes.iter().min(), sizes.iter().max()) {
            if hi > 2 * lo {
                return Err(StrategyError::Invariant(format!(
                    "pure path sizes {lo} and {hi} differ by more than a factor two"
                )));
            }
        }
        if sizes.iter().filter(|s| !s.is_power_of_two()).count() > 1 {
            return Err(StrategyError::Invariant(format!(
                "more than one pure path size is not a power of two: {sizes:?}"
            )));
        }
        Ok(())
    }

    /// Stage-1 end: imbalance doubling, the imbalance sum bound, the
    /// component count and the round count; then set up the merge.
    fn finish_stage1(&mut self, board: &ColoredGraph) -> Result<(), StrategyError> {
        let inv = |msg: String| Err(StrategyError::Invariant(msg));
        self.report.end_checks += 1;
        let mut brb = std::mem::take(&mut self.brb);
        brb.sort_by_key(PathRecord::created);
        let imbalanced: Vec<&PathRecord> = brb.iter().filter(|r| !r.is_balanced()).collect();
        for w in imbalanced.windows(2) {
            if w[1].u() < 2 * w[0].u() {
                return inv(format!("imbalance {} follows {} without doubling", w[1].u(), w[0].u()));
            }
        }
        if let (Some(last), Some(p)) = (imbalanced.last(), self.pure.first()) {
            if p.len() < 2 * last.u() {
                return inv(format!("pure path of {} vertices below twice imbalance {}", p.len(), last.u()));
            }
        }
        if self.pure.len() > 1 {
            return inv("stage 1 ended with two pure paths".into());
        }
        if self.pure.iter().any(|p| p.len() < 2) {
            return inv("isolated vertex at the end of stage 1".into());
        }

        // root record: the pure path, else the last imbalanced brb-path,
        // else any balanced one
        let root = if let Some(p) = self.pure.pop() {
            PathRecord::pure(p)
        } else {
            let idx = brb
                .iter()
                .rposition(|r| !r.is_balanced())
                .unwrap_or(0);
            if brb.is_empty() {
                return inv("stage 1 ended with nothing on the board".into());
            }
            brb.remove(idx)
        };
        let (imb, bal): (Vec<PathRecord>, Vec<PathRecord>) = brb.into_iter().partition(|r| !r.is_balanced());
        let (m, l) = (imb.len(), bal.len());
        let u_sum: usize = imb.iter().map(PathRecord::u).sum();
        if u_sum > root.u() {
            return inv(format!("imbalance sum {u_sum} exceeds root imbalance {}", root.u()));
        }
        if m + l + 1 > self.n - 1 {
            return inv(format!("{} paths after stage 1 with n = {}", m + l + 1, self.n));
        }
        let rounds = board.edge_count();
        if rounds != 2 * self.n - 2 - m - l {
            return inv(format!("stage 1 took {rounds} rounds, expected {}", 2 * self.n - 2 - m - l));
        }
        self.report.stage1_rounds = Some(rounds);
        self.report.m = m;
        self.report.l = l;
        let mut records = vec![root];
        records.extend(imb);
        records.extend(bal);
        self.merge = Some(Phase2Merge::new(records, board)?);
        self.stage = Stage::Stage2;
        Ok(())
    }

    fn k5_step(&mut self, board: &ColoredGraph) -> Result<Option<(Vertex, Vertex)>, StrategyError> {
        let mut node = self.k5_node.expect("k5 stage has a node");
        if let Some((u, v)) = self.pending.take() {
            node = node.child(reply(board, u, v)?).expect("pending proposal came from a move node");
            self.k5_node = Some(node);
        }
        match node {
            StrategyTree::Move { u, v, .. } => Ok(Some((self.k5_map[*u as usize], self.k5_map[*v as usize]))),
            StrategyTree::Win { color: Color::Red, .. } => Err(StrategyError::GameAlreadyOver),
            StrategyTree::Win { color: Color::Blue, .. } => {
                let path = longest_blue_path_within(board, &self.k5_map);
                if path.len() < 3 {
                    return Err(StrategyError::Invariant("K5 stage ended without a blue P3".into()));
                }
                let mut records = vec![PathRecord::pure(path)];
                records.append(&mut self.brb);
                self.merge = Some(Phase2Merge::new(records, board)?);
                self.stage = Stage::Stage2;
                Ok(None)
            }
        }
    }

    fn merge_step(&mut self, board: &ColoredGraph) -> Result<(Vertex, Vertex), StrategyError> {
        let merge = self.merge.as_mut().expect("stage 2 has a merge");
        match merge.next(board)? {
            Some(e) => Ok(e),
            None => {
                self.stage = Stage::Done;
                if merge.head().len() < self.n {
                    Err(StrategyError::Invariant(format!(
                        "merging ended with a blue path on {} < {} vertices",
                        merge.head().len(),
                        self.n
                    )))
                } else {
                    Err(StrategyError::GameAlreadyOver)
                }
            }
        }
    }
}

/// Longest blue path using only the given vertices (brute force).
fn longest_blue_path_within(board: &ColoredGraph, verts: &[Vertex]) -> Vec<Vertex> {
    fn extend(board: &ColoredGraph, verts: &[Vertex], path: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
        if path.len() > best.len() {
            *best = path.clone();
        }
        let last = *path.last().unwrap();
        for &w in verts {
            if !path.contains(&w) && board.color_of(last, w) == Some(Color::Blue) {
                path.push(w);
                extend(board, verts, path, best);
                path.pop();
            }
        }
    }
    let mut best = Vec::new();
    for &s in verts {
        extend(board, verts, &mut vec![s], &mut best);
    }
    best
}

impl Builder for Theorem3Builder {
    fn name(&self) -> &str {
        "theorem3"
    }

    fn propose(&mut self, board: &ColoredGraph) -> Result<(Vertex, Vertex), StrategyError> {
        if board.edge_count() != self.round as usize {
            return Err(StrategyError::Stage(format!(
                "board has {} edges after {} proposals",
                board.edge_count(),
                self.round
            )));
        }
        if self.stage == Stage::Stage1 {
            if let Some(e) = self.pending.take() {
                self.absorb_stage1_reply(board, e)?;
                if self.all_red && self.round as usize == self.n - 3 {
                    self.enter_k5();
                } else if self.pure.len() <= 1 {
                    self.finish_stage1(board)?;
                }
            }
        }
        let e = match self.stage {
            Stage::Stage1 => {
                self.sorted_pure();
                let end = |p: &Vec<Vertex>| *p.first().unwrap().min(p.last().unwrap());
                (end(&self.pure[0]), end(&self.pure[1]))
            }
            Stage::ExceptionK5 => match self.k5_step(board)? {
                Some(e) => e,
                None => self.merge_step(board)?,
            },
            Stage::Stage2 => self.merge_step(board)?,
            Stage::Done => return Err(StrategyError::GameAlreadyOver),
        };
        self.pending = Some(e);
        self.round += 1;
        Ok(e)
    }

    fn box_clone(&self) -> Box<dyn Builder> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{TargetSpec, Verdict};

    /// Plays against a reply function; returns rounds and the final board.
    fn play(n: usize, mut reply: impl FnMut(&ColoredGraph, Vertex, Vertex) -> Color) -> (u32, ColoredGraph, Theorem3Builder) {
        let t = TargetSpec::triangle_path(n);
        let mut b = Theorem3Builder::new(n).unwrap();
        let mut g = ColoredGraph::new();
        for round in 1..=3 * n as u32 {
            let (u, v) = b.propose(&g).unwrap();
            let c = reply(&g, u, v);
            g.add_edge(u, v, c).unwrap();
            if let Verdict::GameOver(_) = g.referee_after(&t, u, v).unwrap() {
                return (round, g, b);
            }
        }
        panic!("no result within 3n rounds");
    }

    #[test]
    fn embedded_tree_is_sound() {
        let t = TargetSpec::triangle_path(3);
        let tree = k5_tree();
        assert!(tree.depth() <= 5);
        tree.verify(&t, &ColoredGraph::new(), Some(5), 5).unwrap();
    }

    #[test]
    fn first_proposal_and_shortest_rule() {
        let mut b = Theorem3Builder::new(5).unwrap();
        let g = ColoredGraph::new();
        assert_eq!(b.propose(&g).unwrap(), (0, 1));
        let mut g = g;
        g.add_edge(0, 1, Color::Blue).unwrap();
        // sizes {2,1,1,...}: the two singletons are joined next
        assert_eq!(b.propose(&g).unwrap(), (2, 3));
    }

    #[test]
    fn all_red_triggers_exception() {
        let mut b = Theorem3Builder::new(5).unwrap();
        let mut g = ColoredGraph::new();
        for _ in 0..2 {
            let (u, v) = b.propose(&g).unwrap();
            g.add_edge(u, v, Color::Red).unwrap();
        }
        let (u, v) = b.propose(&g).unwrap();
        assert_eq!(b.stage(), Stage::ExceptionK5);
        assert_eq!(g.vertex_count(), 4);
        assert!(!g.contains_vertex(u) && !g.contains_vertex(v));
    }

    #[test]
    fn blue_answers_give_blue_path() {
        for n in 3..=10 {
            let (rounds, g, _) = play(n, |_, _, _| Color::Blue);
            assert!(rounds as usize <= 3 * n - 4);
            assert!(g.longest_blue_path().unwrap() >= n);
        }
    }

    #[test]
    fn red_answers_follow_exception_route() {
        for n in 3..=10 {
            let (rounds, _, b) = play(n, |_, _, _| Color::Red);
            assert!(rounds as usize <= 3 * n - 4, "n={n} rounds={rounds}");
            assert!(b.report().exception);
        }
        assert_eq!(play(4, |_, _, _| Color::Red).0, 5);
    }

    #[test]
    fn double_proposal_without_reply_is_rejected() {
        let mut b = Theorem3Builder::new(4).unwrap();
        let g = ColoredGraph::new();
        b.propose(&g).unwrap();
        assert!(matches!(b.propose(&g), Err(StrategyError::Stage(_))));
    }

    #[test]
    fn random_replies_stay_within_bound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 3..=20 {
            for _ in 0..200 {
                let p = rng.gen_range(0.1..0.9);
                let (rounds, _, b) = play(n, |_, _, _| if rng.gen_bool(p) { Color::Red } else { Color::Blue });
                assert!(rounds as usize <= 3 * n - 4, "n={n} rounds={rounds}");
                assert!(b.report().round_checks > 0 || n == 3);
            }
        }
    }
}
