//! Plain-text game records.
//!
//! ```text
//! # version 1
//! # red c3
//! # blue path:4
//! # builder theorem3
//! # painter potential
//! # seed 1
//! # max_rounds 18
//! # outcome blue
//! # rounds 8
//! 1 0 1 R
//! ...
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::board::{BlueTarget, Color, RedTarget, TargetSpec};

use super::game::{GameResult, Move, Outcome};
use super::ArenaError;

pub const TRANSCRIPT_VERSION: u32 = 1;

pub fn format_transcript(r: &GameResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# version {TRANSCRIPT_VERSION}");
    let _ = writeln!(s, "# red {}", r.target.red);
    let _ = writeln!(s, "# blue {}", r.target.blue);
    let _ = writeln!(s, "# builder {}", r.builder);
    let _ = writeln!(s, "# painter {}", r.painter);
    let _ = writeln!(s, "# seed {}", r.seed);
    let _ = writeln!(s, "# max_rounds {}", r.max_rounds);
    let _ = writeln!(s, "# outcome {}", r.outcome);
    let _ = writeln!(s, "# rounds {}", r.rounds);
    for m in &r.moves {
        let _ = writeln!(s, "{} {} {} {}", m.round, m.u, m.v, m.color.letter());
    }
    s
}

/// Parses and replays a transcript.
pub fn parse_transcript(text: &str) -> Result<GameResult, ArenaError> {
    let perr = |line: usize, msg: &str| ArenaError::Parse(format!("line {line}: {msg}"));
    let mut header = std::collections::HashMap::new();
    let mut moves = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut it = rest.trim().splitn(2, char::is_whitespace);
            let key = it.next().unwrap_or("");
            let value = it.next().unwrap_or("").trim();
            if header.insert(key.to_string(), value.to_string()).is_some() {
                return Err(perr(i + 1, &format!("duplicate header {key:?}")));
            }
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let [round, u, v, c] = f.as_slice() else {
            return Err(perr(i + 1, "expected `<round> <u> <v> <R|B>`"));
        };
        let num = |s: &str| s.parse::<u32>().map_err(|_| perr(i + 1, &format!("bad number {s:?}")));
        let color = match *c {
            "R" => Color::Red,
            "B" => Color::Blue,
            _ => return Err(perr(i + 1, "color must be R or B")),
        };
        moves.push(Move {
            round: num(round)?,
            u: num(u)?,
            v: num(v)?,
            color,
        });
    }
    let get = |k: &str| {
        header
            .get(k)
            .map(String::as_str)
            .ok_or_else(|| ArenaError::Parse(format!("missing header {k:?}")))
    };
    let version: u32 = get("version")?
        .parse()
        .map_err(|_| ArenaError::Parse("bad version".into()))?;
    if version != TRANSCRIPT_VERSION {
        return Err(ArenaError::Parse(format!("unsupported version {version}")));
    }
    let red: RedTarget = get("red")?.parse()?;
    let blue: BlueTarget = get("blue")?.parse()?;
    let number = |k: &str| -> Result<u64, ArenaError> {
        get(k)?
            .parse()
            .map_err(|_| ArenaError::Parse(format!("bad value for {k:?}")))
    };
    let r = GameResult {
        target: TargetSpec::new(red, blue)?,
        builder: get("builder")?.to_string(),
        painter: get("painter")?.to_string(),
        seed: number("seed")?,
        max_rounds: number("max_rounds")? as u32,
        rounds: number("rounds")? as u32,
        outcome: get("outcome")?.parse::<Outcome>()?,
        moves,
    };
    r.replay()?;
    Ok(r)
}

pub fn write_transcript(r: &GameResult, path: impl AsRef<Path>) -> Result<(), ArenaError> {
    std::fs::write(path, format_transcript(r))?;
    Ok(())
}

pub fn read_transcript(path: impl AsRef<Path>) -> Result<GameResult, ArenaError> {
    parse_transcript(&std::fs::read_to_string(path)?)
}
