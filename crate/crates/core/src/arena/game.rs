use std::fmt;
use std::str::FromStr;

use crate::board::{edge_key, BoardError, Color, ColoredGraph, Hit, TargetSpec, Verdict, Vertex};
use crate::strategy::{Builder, Painter, StrategyConfig, StrategyRegistry};

use super::ArenaError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    RedFamilyHit,
    BlueFamilyHit,
    DoubleHit,
    /// `max_rounds` passed without either family appearing.
    Aborted,
}

impl Outcome {
    pub fn from_hit(h: Hit) -> Self {
        match h {
            Hit::Red => Outcome::RedFamilyHit,
            Hit::Blue => Outcome::BlueFamilyHit,
            Hit::Both => Outcome::DoubleHit,
        }
    }

    pub fn is_hit(self) -> bool {
        self != Outcome::Aborted
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::RedFamilyHit => "red",
            Outcome::BlueFamilyHit => "blue",
            Outcome::DoubleHit => "double",
            Outcome::Aborted => "aborted",
        })
    }
}

impl FromStr for Outcome {
    type Err = ArenaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "red" => Ok(Outcome::RedFamilyHit),
            "blue" => Ok(Outcome::BlueFamilyHit),
            "double" => Ok(Outcome::DoubleHit),
            "aborted" => Ok(Outcome::Aborted),
            _ => Err(ArenaError::Parse(format!("unknown outcome {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub round: u32,
    pub u: Vertex,
    pub v: Vertex,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameResult {
    pub target: TargetSpec,
    pub builder: String,
    pub painter: String,
    pub seed: u64,
    pub max_rounds: u32,
    pub rounds: u32,
    pub outcome: Outcome,
    pub moves: Vec<Move>,
}

impl GameResult {
    pub fn board(&self) -> Result<ColoredGraph, ArenaError> {
        let mut g = ColoredGraph::new();
        for m in &self.moves {
            g.add_edge(m.u, m.v, m.color)?;
        }
        Ok(g)
    }

    /// Re-referees the move list and checks it against the recorded
    /// outcome and round count.
    pub fn replay(&self) -> Result<(), ArenaError> {
        let mismatch = |msg: String| Err(ArenaError::ReplayMismatch(msg));
        if self.rounds as usize != self.moves.len() {
            return mismatch(format!("{} rounds recorded but {} moves listed", self.rounds, self.moves.len()));
        }
        if self.rounds > self.max_rounds {
            return mismatch(format!("{} rounds exceed max_rounds {}", self.rounds, self.max_rounds));
        }
        let mut g = ColoredGraph::new();
        let mut verdict = g.referee(&self.target)?;
        for (i, m) in self.moves.iter().enumerate() {
            if verdict.is_over() {
                return mismatch(format!("moves continue after the game ended at round {i}"));
            }
            if m.round as usize != i + 1 {
                return mismatch(format!("move {} is labeled round {}", i + 1, m.round));
            }
            g.add_edge(m.u, m.v, m.color)
                .map_err(|e| ArenaError::ReplayMismatch(format!("round {}: {e}", m.round)))?;
            verdict = g.referee_after(&self.target, m.u, m.v)?;
        }
        let actual = match verdict {
            Verdict::GameOver(h) => Outcome::from_hit(h),
            Verdict::Continue => Outcome::Aborted,
        };
        if actual != self.outcome {
            return mismatch(format!("recorded outcome {} but replay gives {actual}", self.outcome));
        }
        if actual == Outcome::Aborted && self.rounds != self.max_rounds && self.rounds != 0 {
            return mismatch(format!("aborted after {} of {} rounds", self.rounds, self.max_rounds));
        }
        Ok(())
    }
}

/// Runs Builder against Painter until a family appears or `max_rounds`
/// rounds have been played.
pub fn play_game(
    builder: &mut dyn Builder,
    painter: &mut dyn Painter,
    t: &TargetSpec,
    max_rounds: u32,
    seed: u64,
) -> Result<GameResult, ArenaError> {
    t.validate()?;
    let bname = builder.name().to_string();
    let pname = painter.name().to_string();
    let mut g = ColoredGraph::new();
    let mut moves = Vec::new();
    let mut outcome = match g.referee(t)? {
        Verdict::GameOver(h) => Some(Outcome::from_hit(h)),
        Verdict::Continue => None,
    };
    while outcome.is_none() && (moves.len() as u32) < max_rounds {
        let round = moves.len() as u32 + 1;
        let blame = |role, name: &str, source| ArenaError::Strategy {
            role,
            name: name.to_string(),
            round,
            source,
        };
        let (u, v) = builder.propose(&g).map_err(|e| blame("builder", &bname, e))?;
        if u == v {
            return Err(blame("builder", &bname, BoardError::LoopEdge(u).into()));
        }
        if g.has_edge(u, v) {
            let (a, b) = edge_key(u, v);
            return Err(blame("builder", &bname, BoardError::DuplicateEdge(a, b).into()));
        }
        let color = painter.color(&g, u, v).map_err(|e| blame("painter", &pname, e))?;
        g.add_edge(u, v, color)?;
        moves.push(Move { round, u, v, color });
        if let Verdict::GameOver(h) = g.referee_after(t, u, v)? {
            outcome = Some(Outcome::from_hit(h));
        }
    }
    Ok(GameResult {
        target: *t,
        builder: bname,
        painter: pname,
        seed,
        max_rounds,
        rounds: moves.len() as u32,
        outcome: outcome.unwrap_or(Outcome::Aborted),
        moves,
    })
}

/// Builds both strategies from the registry and plays them.
pub fn play_named(
    registry: &StrategyRegistry,
    builder: &str,
    painter: &str,
    t: &TargetSpec,
    max_rounds: u32,
    seed: u64,
) -> Result<GameResult, ArenaError> {
    let cfg = StrategyConfig { target: *t, seed };
    let mut b = registry.builder(builder, &cfg)?;
    // distinct stream for the painter so random-vs-random games are not mirrored
    let pcfg = StrategyConfig {
        target: *t,
        seed: seed ^ 0x9e37_79b9_7f4a_7c15,
    };
    let mut p = registry.painter(painter, &pcfg)?;
    play_game(b.as_mut(), p.as_mut(), t, max_rounds, seed)
}
