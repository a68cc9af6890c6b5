//! Builder decision trees and their text form.
//!
//! ```text
//! edge 0 1 ?
//!   R -> edge 1 2 ?
//!     R -> WIN red round 2
//!     B -> WIN blue round 2
//!   B -> WIN blue round 1
//! ```

use std::fmt;
use std::str::FromStr;

use crate::board::{Color, ColoredGraph, Hit, TargetSpec, Verdict, Vertex};

use super::SolverError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrategyTree {
    /// The named color family is complete after `round` rounds.
    Win { color: Color, round: u32 },
    /// Builder proposes `uv`; the subtrees answer Painter's two replies.
    Move {
        u: Vertex,
        v: Vertex,
        red: Box<StrategyTree>,
        blue: Box<StrategyTree>,
    },
}

impl StrategyTree {
    pub fn depth(&self) -> u32 {
        match self {
            StrategyTree::Win { .. } => 0,
            StrategyTree::Move { red, blue, .. } => 1 + red.depth().max(blue.depth()),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            StrategyTree::Win { .. } => 1,
            StrategyTree::Move { red, blue, .. } => red.leaves() + blue.leaves(),
        }
    }

    pub fn child(&self, c: Color) -> Option<&StrategyTree> {
        match self {
            StrategyTree::Win { .. } => None,
            StrategyTree::Move { red, blue, .. } => Some(match c {
                Color::Red => red,
                Color::Blue => blue,
            }),
        }
    }

    fn write_to(&self, f: &mut fmt::Formatter<'_>, indent: usize, prefix: &str) -> fmt::Result {
        write!(f, "{:indent$}{prefix}", "")?;
        match self {
            StrategyTree::Win { color, round } => writeln!(f, "WIN {color} round {round}"),
            StrategyTree::Move { u, v, red, blue } => {
                writeln!(f, "edge {u} {v} ?")?;
                red.write_to(f, indent + 2, "R -> ")?;
                blue.write_to(f, indent + 2, "B -> ")
            }
        }
    }

    /// Replays the tree from `start` against every Painter reply sequence
    /// with the board referee. Leaves must be exactly where the game ends,
    /// carry the right color and round, and lie within `bound` rounds.
    pub fn verify(
        &self,
        t: &TargetSpec,
        start: &ColoredGraph,
        board: Option<usize>,
        bound: u32,
    ) -> Result<(), SolverError> {
        let start_verdict = start.referee(t)?;
        let base = start.edge_count() as u32;
        match (self, start_verdict) {
            (StrategyTree::Win { color, round }, Verdict::GameOver(h)) => {
                return if hit_matches(h, *color) && *round == base {
                    Ok(())
                } else {
                    Err(bad("leaf does not match the starting position"))
                };
            }
            (_, Verdict::GameOver(_)) => return Err(bad("tree continues a finished game")),
            (StrategyTree::Win { .. }, Verdict::Continue) => return Err(bad("leaf on an unfinished game")),
            _ => {}
        }
        fn walk(
            node: &StrategyTree,
            g: &mut ColoredGraph,
            t: &TargetSpec,
            board: Option<usize>,
            depth: u32,
            bound: u32,
            base: u32,
        ) -> Result<(), SolverError> {
            let StrategyTree::Move { u, v, red, blue } = node else {
                return Err(bad("leaf on an unfinished game"));
            };
            if depth >= bound {
                return Err(bad(&format!("tree deeper than {bound}")));
            }
            if u == v || g.has_edge(*u, *v) {
                return Err(bad(&format!("illegal proposal {u} {v}")));
            }
            if let Some(b) = board {
                if *u as usize >= b || *v as usize >= b {
                    return Err(bad(&format!("proposal {u} {v} leaves the board")));
                }
            }
            for (c, sub) in [(Color::Red, red), (Color::Blue, blue)] {
                let mut h = g.clone();
                h.add_edge(*u, *v, c)?;
                match (h.referee_after(t, *u, *v)?, sub.as_ref()) {
                    (Verdict::GameOver(hit), StrategyTree::Win { color, round }) => {
                        if !hit_matches(hit, *color) || *round != base + depth + 1 {
                            return Err(bad(&format!("wrong leaf after {u} {v} {c}")));
                        }
                    }
                    (Verdict::GameOver(_), _) => return Err(bad("tree continues a finished game")),
                    (Verdict::Continue, StrategyTree::Win { .. }) => {
                        return Err(bad(&format!("leaf after {u} {v} {c} but the game goes on")))
                    }
                    (Verdict::Continue, next) => walk(next, &mut h, t, board, depth + 1, bound, base)?,
                }
            }
            Ok(())
        }
        walk(self, &mut start.clone(), t, board, 0, bound, base)
    }
}

fn hit_matches(h: Hit, c: Color) -> bool {
    matches!((h, c), (Hit::Both, _) | (Hit::Red, Color::Red) | (Hit::Blue, Color::Blue))
}

fn bad(msg: &str) -> SolverError {
    SolverError::Certificate(msg.to_string())
}

impl fmt::Display for StrategyTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_to(f, 0, "")
    }
}

impl FromStr for StrategyTree {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lines: Vec<(usize, &str)> = s
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|l| {
                let body = l.trim_start();
                (l.len() - body.len(), body.trim_end())
            })
            .collect();
        let mut pos = 0;
        let tree = parse_node(&lines, &mut pos, 0, None)?;
        if pos != lines.len() {
            return Err(SolverError::Parse(format!("trailing line {}", pos + 1)));
        }
        Ok(tree)
    }
}

fn parse_node(
    lines: &[(usize, &str)],
    pos: &mut usize,
    indent: usize,
    branch: Option<&str>,
) -> Result<StrategyTree, SolverError> {
    let err = |msg: &str, at: usize| SolverError::Parse(format!("line {}: {msg}", at + 1));
    let at = *pos;
    let &(ind, body) = lines.get(at).ok_or_else(|| err("unexpected end of tree", at))?;
    if ind != indent {
        return Err(err("bad indentation", at));
    }
    let body = match branch {
        Some(p) => body.strip_prefix(p).ok_or_else(|| err(&format!("expected {p:?}"), at))?,
        None => body,
    };
    *pos += 1;
    let words: Vec<&str> = body.split_whitespace().collect();
    match words.as_slice() {
        ["WIN", c, "round", t] => {
            let color = match *c {
                "red" => Color::Red,
                "blue" => Color::Blue,
                _ => return Err(err("leaf color must be red or blue", at)),
            };
            let round = t.parse().map_err(|_| err("bad round", at))?;
            Ok(StrategyTree::Win { color, round })
        }
        ["edge", u, v, "?"] => {
            let u = u.parse().map_err(|_| err("bad vertex", at))?;
            let v = v.parse().map_err(|_| err("bad vertex", at))?;
            let red = parse_node(lines, pos, indent + 2, Some("R -> "))?;
            let blue = parse_node(lines, pos, indent + 2, Some("B -> "))?;
            Ok(StrategyTree::Move {
                u,
                v,
                red: Box::new(red),
                blue: Box::new(blue),
            })
        }
        _ => Err(err("expected `edge u v ?` or `WIN <color> round <t>`", at)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{BlueTarget, RedTarget};

    fn leaf(color: Color, round: u32) -> Box<StrategyTree> {
        Box::new(StrategyTree::Win { color, round })
    }

    #[test]
    fn text_round_trip() {
        let t = StrategyTree::Move {
            u: 0,
            v: 1,
            red: Box::new(StrategyTree::Move {
                u: 1,
                v: 2,
                red: leaf(Color::Red, 2),
                blue: leaf(Color::Blue, 2),
            }),
            blue: leaf(Color::Blue, 1),
        };
        let s = t.to_string();
        assert_eq!(
            s,
            "edge 0 1 ?\n  R -> edge 1 2 ?\n    R -> WIN red round 2\n    B -> WIN blue round 2\n  B -> WIN blue round 1\n"
        );
        assert_eq!(s.parse::<StrategyTree>().unwrap(), t);
        assert_eq!(t.depth(), 2);
        assert_eq!(t.leaves(), 3);
        assert!("edge 0 1 ?\n  R -> WIN red round 1\n".parse::<StrategyTree>().is_err());
        assert!("edge 0 1 ?\n R -> WIN red round 1\n B -> WIN red round 1".parse::<StrategyTree>().is_err());
    }

    #[test]
    fn verify_catches_bad_leaves() {
        let t = TargetSpec::new(RedTarget::Path(2), BlueTarget::Path(2)).unwrap();
        let good = StrategyTree::Move {
            u: 0,
            v: 1,
            red: leaf(Color::Red, 1),
            blue: leaf(Color::Blue, 1),
        };
        good.verify(&t, &ColoredGraph::new(), None, 1).unwrap();
        assert!(good.verify(&t, &ColoredGraph::new(), None, 0).is_err());
        let wrong = StrategyTree::Move {
            u: 0,
            v: 1,
            red: leaf(Color::Blue, 1),
            blue: leaf(Color::Blue, 1),
        };
        assert!(wrong.verify(&t, &ColoredGraph::new(), None, 1).is_err());
        assert!(good.verify(&t, &ColoredGraph::new(), Some(1), 1).is_err());
    }
}
