//! Builder and Painter interfaces and the name-keyed registry the arena and
//! CLI select strategies from.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::board::{BoardError, Color, ColoredGraph, TargetSpec, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error(transparent)]
    Board(#[from] BoardError),
    #[error("stage violation: {0}")]
    Stage(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("game is already over")]
    GameAlreadyOver,
    #[error("no legal move left")]
    NoMove,
    #[error("unknown strategy {0:?}")]
    Unknown(String),
}

/// Proposes the next uncolored edge, seeing the whole colored board.
///
/// A Builder learns Painter's previous answer by reading the color of its
/// last proposal off the board.
pub trait Builder: Send {
    fn name(&self) -> &str;
    fn propose(&mut self, board: &ColoredGraph) -> Result<(Vertex, Vertex), StrategyError>;
    fn box_clone(&self) -> Box<dyn Builder>;
}

/// Colors the edge Builder just proposed; `board` does not contain it yet.
pub trait Painter: Send {
    fn name(&self) -> &str;
    fn color(&mut self, board: &ColoredGraph, u: Vertex, v: Vertex) -> Result<Color, StrategyError>;
    fn box_clone(&self) -> Box<dyn Painter>;
}

impl Clone for Box<dyn Builder> {
    fn clone(&self) -> Self {
        self.box_clone()
    }
}

impl Clone for Box<dyn Painter> {
    fn clone(&self) -> Self {
        self.box_clone()
    }
}

/// Parameters handed to strategy factories.
#[derive(Debug, Clone, Copy)]
pub struct StrategyConfig {
    pub target: TargetSpec,
    pub seed: u64,
}

pub type BuilderFactory = fn(&StrategyConfig) -> Result<Box<dyn Builder>, StrategyError>;
pub type PainterFactory = fn(&StrategyConfig) -> Result<Box<dyn Painter>, StrategyError>;

pub struct StrategyRegistry {
    builders: BTreeMap<&'static str, BuilderFactory>,
    painters: BTreeMap<&'static str, PainterFactory>,
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        StrategyRegistry {
            builders: BTreeMap::new(),
            painters: BTreeMap::new(),
        }
    }

    pub fn register_builder(&mut self, name: &'static str, f: BuilderFactory) -> Option<BuilderFactory> {
        self.builders.insert(name, f)
    }

    pub fn register_painter(&mut self, name: &'static str, f: PainterFactory) -> Option<PainterFactory> {
        self.painters.insert(name, f)
    }

    pub fn builder(&self, name: &str, cfg: &StrategyConfig) -> Result<Box<dyn Builder>, StrategyError> {
        let f = self
            .builders
            .get(name)
            .ok_or_else(|| StrategyError::Unknown(name.to_string()))?;
        f(cfg)
    }

    pub fn painter(&self, name: &str, cfg: &StrategyConfig) -> Result<Box<dyn Painter>, StrategyError> {
        let f = self
            .painters
            .get(name)
            .ok_or_else(|| StrategyError::Unknown(name.to_string()))?;
        f(cfg)
    }

    pub fn builder_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.builders.keys().copied()
    }

    pub fn painter_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.painters.keys().copied()
    }
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        let mut r = StrategyRegistry::empty();
        crate::builders::register(&mut r);
        crate::painter::register(&mut r);
        r
    }
}

impl fmt::Debug for StrategyRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StrategyRegistry")
            .field("builders", &self.builders.keys().collect::<Vec<_>>())
            .field("painters", &self.painters.keys().collect::<Vec<_>>())
            .finish()
    }
}
