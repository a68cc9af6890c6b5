//! Game loop, transcripts, worker pool and verification suites.

mod game;
pub mod suites;
mod transcript;

use thiserror::Error;

pub use game::{play_game, play_named, GameResult, Move, Outcome};
pub use suites::{verify_suite, Check, Scale, SuiteReport, SUITES};
pub use transcript::{format_transcript, parse_transcript, read_transcript, write_transcript, TRANSCRIPT_VERSION};

use crate::board::BoardError;
use crate::solver::SolverError;
use crate::strategy::StrategyError;

pub const THREADS_ENV: &str = "RAMSEY_ARENA_THREADS";

#[derive(Debug, Error)]
pub enum ArenaError {
    #[error("{role} {name:?} failed in round {round}: {source}")]
    Strategy {
        role: &'static str,
        name: String,
        round: u32,
        #[source]
        source: StrategyError,
    },
    #[error(transparent)]
    Registry(#[from] StrategyError),
    #[error(transparent)]
    Board(#[from] BoardError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("transcript does not replay: {0}")]
    ReplayMismatch(String),
    #[error("transcript parse error: {0}")]
    Parse(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("worker pool: {0}")]
    Pool(String),
}

/// Thread pool sized by `RAMSEY_ARENA_THREADS`, or by rayon's default when
/// the variable is unset or zero.
pub fn worker_pool() -> Result<rayon::ThreadPool, ArenaError> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| ArenaError::Pool(format!("{THREADS_ENV}={s:?} is not a count")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| ArenaError::Pool(e.to_string()))
}

#[cfg(test)]
mod tests;
