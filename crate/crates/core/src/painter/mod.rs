//! Painter strategies.

pub mod potential;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use potential::{
    choose_color, component_potential, g_fun, greedy_color_oracle, lower_bound, potential_delta,
    total_potential, triangle_path_lower, Decision, PainterCase, PotentialPainter, MAX_STEP,
};

use crate::board::{Color, ColoredGraph, Vertex};
use crate::strategy::{Painter, StrategyError, StrategyRegistry};

/// Always answers with one color.
#[derive(Debug, Clone, Copy)]
pub struct ConstantPainter(pub Color);

impl Painter for ConstantPainter {
    fn name(&self) -> &str {
        match self.0 {
            Color::Red => "allred",
            Color::Blue => "allblue",
        }
    }

    fn color(&mut self, _: &ColoredGraph, _: Vertex, _: Vertex) -> Result<Color, StrategyError> {
        Ok(self.0)
    }

    fn box_clone(&self) -> Box<dyn Painter> {
        Box::new(*self)
    }
}

/// Seeded coin per edge; fair unless built with [`RandomPainter::biased`].
#[derive(Debug, Clone)]
pub struct RandomPainter {
    rng: ChaCha8Rng,
    p_red: f64,
}

impl RandomPainter {
    pub fn new(seed: u64) -> Self {
        Self::biased(seed, 0.5)
    }

    /// Answers Red with probability `p_red` (clamped to `[0, 1]`).
    pub fn biased(seed: u64, p_red: f64) -> Self {
        RandomPainter {
            rng: ChaCha8Rng::seed_from_u64(seed),
            p_red: p_red.clamp(0.0, 1.0),
        }
    }
}

impl Painter for RandomPainter {
    fn name(&self) -> &str {
        "random"
    }

    fn color(&mut self, _: &ColoredGraph, _: Vertex, _: Vertex) -> Result<Color, StrategyError> {
        Ok(if self.rng.gen_bool(self.p_red) { Color::Red } else { Color::Blue })
    }

    fn box_clone(&self) -> Box<dyn Painter> {
        Box::new(self.clone())
    }
}

/// Minimizes the potential step among red-bipartite-preserving colors.
#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyPainter;

impl Painter for GreedyPainter {
    fn name(&self) -> &str {
        "greedy"
    }

    fn color(&mut self, board: &ColoredGraph, u: Vertex, v: Vertex) -> Result<Color, StrategyError> {
        Ok(greedy_color_oracle(board, u, v)?.0)
    }

    fn box_clone(&self) -> Box<dyn Painter> {
        Box::new(*self)
    }
}

pub(crate) fn register(r: &mut StrategyRegistry) {
    r.register_painter("potential", |_| Ok(Box::new(PotentialPainter::new())));
    r.register_painter("greedy", |_| Ok(Box::new(GreedyPainter)));
    r.register_painter("random", |cfg| Ok(Box::new(RandomPainter::new(cfg.seed))));
    r.register_painter("allred", |_| Ok(Box::new(ConstantPainter(Color::Red))));
    r.register_painter("allblue", |_| Ok(Box::new(ConstantPainter(Color::Blue))));
}
