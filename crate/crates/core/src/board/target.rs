use std::fmt;
use std::str::FromStr;

use super::{BoardError, Color, ColoredGraph, Vertex};

/// What Painter must avoid in red.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RedTarget {
    /// A red `C_3`.
    Triangle,
    /// Any red odd cycle.
    OddCycle,
    /// A red path on the given number of vertices.
    Path(usize),
}

/// What Painter must avoid in blue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlueTarget {
    /// A blue path `P_n`.
    Path(usize),
    /// A connected blue graph on exactly `n` vertices with at least `m` edges.
    Connected { n: usize, m: usize },
    /// The auxiliary game end condition: a cycle with an odd number of red
    /// edges, or a side of some component's red-bipartition with at least
    /// `n` vertices and `m` inner edges.
    Auxiliary { n: usize, m: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TargetSpec {
    pub red: RedTarget,
    pub blue: BlueTarget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hit {
    Red,
    Blue,
    /// Both families appeared in the same round.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Continue,
    GameOver(Hit),
}

impl Verdict {
    pub fn is_over(self) -> bool {
        matches!(self, Verdict::GameOver(_))
    }

    fn from_flags(red: bool, blue: bool) -> Verdict {
        match (red, blue) {
            (false, false) => Verdict::Continue,
            (true, false) => Verdict::GameOver(Hit::Red),
            (false, true) => Verdict::GameOver(Hit::Blue),
            (true, true) => Verdict::GameOver(Hit::Both),
        }
    }
}

impl TargetSpec {
    pub fn new(red: RedTarget, blue: BlueTarget) -> Result<Self, BoardError> {
        let t = TargetSpec { red, blue };
        t.validate()?;
        Ok(t)
    }

    /// `C_3` versus `P_n`.
    pub fn triangle_path(n: usize) -> Self {
        TargetSpec {
            red: RedTarget::Triangle,
            blue: BlueTarget::Path(n),
        }
    }

    pub fn odd_connected(n: usize, m: usize) -> Self {
        TargetSpec {
            red: RedTarget::OddCycle,
            blue: BlueTarget::Connected { n, m },
        }
    }

    pub fn odd_auxiliary(n: usize, m: usize) -> Self {
        TargetSpec {
            red: RedTarget::OddCycle,
            blue: BlueTarget::Auxiliary { n, m },
        }
    }

    pub fn validate(&self) -> Result<(), BoardError> {
        if let RedTarget::Path(k) = self.red {
            if k < 2 {
                return Err(BoardError::InvalidTarget(format!("red path needs k >= 2, got {k}")));
            }
        }
        match self.blue {
            BlueTarget::Path(n) if n < 1 => Err(BoardError::InvalidTarget("path needs n >= 1".into())),
            BlueTarget::Connected { n, m } | BlueTarget::Auxiliary { n, m } => {
                if n < 1 || m + 1 < n || m > n * (n - 1) / 2 {
                    Err(BoardError::InvalidTarget(format!(
                        "need n >= 1 and n-1 <= m <= n(n-1)/2, got n={n} m={m}"
                    )))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Edge count of the single red goal graph, when there is one.
    pub fn red_edges(&self) -> Option<usize> {
        match self.red {
            RedTarget::Triangle => Some(3),
            RedTarget::Path(k) => Some(k - 1),
            RedTarget::OddCycle => None,
        }
    }

    pub fn blue_edges(&self) -> Option<usize> {
        match self.blue {
            BlueTarget::Path(n) => Some(n.saturating_sub(1)),
            _ => None,
        }
    }
}

impl ColoredGraph {
    pub fn red_target_reached(&self, red: RedTarget) -> Result<bool, BoardError> {
        Ok(match red {
            RedTarget::Triangle => self.has_red_triangle(),
            RedTarget::OddCycle => self.has_red_odd_cycle(),
            RedTarget::Path(k) => self.has_path_at_least(Color::Red, k)?,
        })
    }

    pub fn blue_target_reached(&self, blue: BlueTarget) -> Result<bool, BoardError> {
        Ok(match blue {
            BlueTarget::Path(n) => self.has_path_at_least(Color::Blue, n)?,
            BlueTarget::Connected { n, m } => self.has_connected_subgraph(Color::Blue, n, m)?,
            BlueTarget::Auxiliary { n, m } => self.aux_target_reached(n, m),
        })
    }

    /// Decides whether the game is over on the whole board.
    pub fn referee(&self, t: &TargetSpec) -> Result<Verdict, BoardError> {
        let red = self.red_target_reached(t.red)?;
        let blue = self.blue_target_reached(t.blue)?;
        Ok(Verdict::from_flags(red, blue))
    }

    /// Same as [`referee`](Self::referee), assuming the position before
    /// the most recent edge `uv` was not over; only structures through
    /// that edge are examined.
    pub fn referee_after(&self, t: &TargetSpec, u: Vertex, v: Vertex) -> Result<Verdict, BoardError> {
        let c = self
            .color_of(u, v)
            .ok_or(BoardError::UnknownVertex(u))?;
        let red = c == Color::Red
            && match t.red {
                RedTarget::Triangle => self.red_triangle_through(u, v),
                RedTarget::OddCycle => self.has_red_odd_cycle(),
                RedTarget::Path(k) => self.has_path_at_least_at(u, Color::Red, k)?,
            };
        let blue = match t.blue {
            BlueTarget::Path(n) => c == Color::Blue && self.has_path_at_least_at(u, Color::Blue, n)?,
            BlueTarget::Connected { n, m } => {
                c == Color::Blue && self.has_connected_subgraph_at(u, Color::Blue, n, m)?
            }
            BlueTarget::Auxiliary { n, m } => self.aux_target_reached_at(u, n, m),
        };
        Ok(Verdict::from_flags(red, blue))
    }
}

impl fmt::Display for RedTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RedTarget::Triangle => f.write_str("c3"),
            RedTarget::OddCycle => f.write_str("codd"),
            RedTarget::Path(k) => write!(f, "p{k}"),
        }
    }
}

impl FromStr for RedTarget {
    type Err = BoardError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "c3" => Ok(RedTarget::Triangle),
            "codd" => Ok(RedTarget::OddCycle),
            _ => s
                .strip_prefix('p')
                .and_then(|k| k.parse().ok())
                .map(RedTarget::Path)
                .ok_or_else(|| BoardError::InvalidTarget(format!("unknown red family {s:?}"))),
        }
    }
}

impl fmt::Display for BlueTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlueTarget::Path(n) => write!(f, "path:{n}"),
            BlueTarget::Connected { n, m } => write!(f, "con:{n}:{m}"),
            BlueTarget::Auxiliary { n, m } => write!(f, "aux:{n}:{m}"),
        }
    }
}

impl FromStr for BlueTarget {
    type Err = BoardError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BoardError::InvalidTarget(format!("unknown blue family {s:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            ["path", n] => Ok(BlueTarget::Path(num(n)?)),
            ["con", n, m] => Ok(BlueTarget::Connected { n: num(n)?, m: num(m)? }),
            ["aux", n, m] => Ok(BlueTarget::Auxiliary { n: num(n)?, m: num(m)? }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for TargetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.red, self.blue)
    }
}
