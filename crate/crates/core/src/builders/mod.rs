//! Builder strategies.

pub mod merge;
pub mod theorem3;
pub mod theorem5;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use merge::{PathRecord, Phase2Merge};
pub use theorem3::{k5_tree, Stage, Theorem3Builder, Theorem3Report};
pub use theorem5::{compute_k, theorem5_bound, Theorem5Builder};

use crate::board::{BlueTarget, ColoredGraph, RedTarget, Vertex};
use crate::strategy::{Builder, StrategyError, StrategyRegistry};

/// Uniform over uncolored pairs among the touched vertices and two fresh
/// ones.
#[derive(Debug, Clone)]
pub struct RandomBuilder {
    rng: ChaCha8Rng,
}

impl RandomBuilder {
    pub fn new(seed: u64) -> Self {
        RandomBuilder {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Builder for RandomBuilder {
    fn name(&self) -> &str {
        "random"
    }

    fn propose(&mut self, board: &ColoredGraph) -> Result<(Vertex, Vertex), StrategyError> {
        let mut pool: Vec<Vertex> = board.vertices().to_vec();
        let fresh = board.max_vertex().map_or(0, |m| m + 1);
        pool.extend([fresh, fresh + 1]);
        for _ in 0..64 {
            let a = *pool.choose(&mut self.rng).unwrap();
            let b = *pool.choose(&mut self.rng).unwrap();
            if a != b && !board.has_edge(a, b) {
                return Ok((a.min(b), a.max(b)));
            }
        }
        let mut free = Vec::new();
        for (i, &a) in pool.iter().enumerate() {
            for &b in &pool[i + 1..] {
                if !board.has_edge(a, b) {
                    free.push((a.min(b), a.max(b)));
                }
            }
        }
        let i = self.rng.gen_range(0..free.len());
        Ok(free[i])
    }

    fn box_clone(&self) -> Box<dyn Builder> {
        Box::new(self.clone())
    }
}

fn blue_order(b: BlueTarget) -> Option<usize> {
    match b {
        BlueTarget::Path(n) | BlueTarget::Connected { n, .. } => Some(n),
        BlueTarget::Auxiliary { .. } => None,
    }
}

pub(crate) fn register(r: &mut StrategyRegistry) {
    r.register_builder("theorem3", |cfg| {
        let t = cfg.target;
        match (t.red, blue_order(t.blue)) {
            (RedTarget::Triangle | RedTarget::OddCycle, Some(n)) => Ok(Box::new(Theorem3Builder::new(n)?)),
            _ => Err(StrategyError::Precondition(format!("theorem3 plays c3 or codd against a blue order, not {t}"))),
        }
    });
    r.register_builder("theorem5", |cfg| Ok(Box::new(Theorem5Builder::for_target(&cfg.target)?)));
    r.register_builder("random", |cfg| Ok(Box::new(RandomBuilder::new(cfg.seed))));
}
