//! Small fixed-size colored graph used inside the search.
//!
//! Vertices `0..n` are exactly the touched vertices, in order of first
//! touch; the next fresh vertex is always `n`.

use crate::board::{BlueTarget, Color, ColoredGraph, RedTarget, TargetSpec, Vertex};

use super::SolverError;

pub const DENSE_MAX: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DenseBoard {
    n: u8,
    edges: u8,
    red: [u32; DENSE_MAX],
    blue: [u32; DENSE_MAX],
}

impl Default for DenseBoard {
    fn default() -> Self {
        Self::new()
    }
}

/// Goal pair the solver can search for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseTarget {
    pub red: DenseRed,
    pub blue_path: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DenseRed {
    Triangle,
    Path(usize),
}

impl DenseTarget {
    pub fn from_spec(t: &TargetSpec) -> Result<Self, SolverError> {
        let red = match t.red {
            RedTarget::Triangle => DenseRed::Triangle,
            RedTarget::Path(k) if k >= 2 => DenseRed::Path(k),
            other => return Err(SolverError::InvalidTarget(format!("solver cannot search red {other}"))),
        };
        let blue_path = match t.blue {
            BlueTarget::Path(n) if n >= 2 => n,
            other => return Err(SolverError::InvalidTarget(format!("solver cannot search blue {other}"))),
        };
        Ok(DenseTarget { red, blue_path })
    }
}

impl DenseBoard {
    pub const fn new() -> Self {
        DenseBoard {
            n: 0,
            edges: 0,
            red: [0; DENSE_MAX],
            blue: [0; DENSE_MAX],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.edges as usize
    }

    pub fn red(&self, v: usize) -> u32 {
        self.red[v]
    }

    pub fn blue(&self, v: usize) -> u32 {
        self.blue[v]
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        if u >= DENSE_MAX || v >= DENSE_MAX {
            None
        } else if self.red[u] >> v & 1 == 1 {
            Some(Color::Red)
        } else if self.blue[u] >> v & 1 == 1 {
            Some(Color::Blue)
        } else {
            None
        }
    }

    /// Adds `uv`; endpoints must be touched vertices or the next fresh ones.
    pub fn with_edge(&self, u: usize, v: usize, c: Color) -> DenseBoard {
        debug_assert!(u != v && self.color_of(u, v).is_none());
        let mut b = *self;
        let top = u.max(v) + 1;
        debug_assert!(top <= self.n as usize + 2 && top <= DENSE_MAX);
        b.n = b.n.max(top as u8);
        let masks = match c {
            Color::Red => &mut b.red,
            Color::Blue => &mut b.blue,
        };
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
        b.edges += 1;
        b
    }

    /// Candidate Builder moves: every uncolored pair of touched vertices,
    /// one edge from each touched vertex to a fresh vertex, and one edge
    /// between two fresh vertices. `limit` caps the vertex labels.
    pub fn moves(&self, limit: usize) -> Vec<(usize, usize)> {
        let n = self.n as usize;
        let limit = limit.min(DENSE_MAX);
        let mut out = Vec::with_capacity(n * (n + 1) / 2 + 1);
        for j in 1..n {
            let used = self.red[j] | self.blue[j];
            for i in 0..j {
                if used >> i & 1 == 0 {
                    out.push((i, j));
                }
            }
        }
        if n < limit {
            out.extend((0..n).map(|i| (i, n)));
        }
        if n + 2 <= limit {
            out.push((n, n + 1));
        }
        out
    }

    /// Whether coloring `uv` with `c` (already applied to `self`) completes
    /// one of the goals, given that none was complete before.
    pub fn completes(&self, t: &DenseTarget, u: usize, v: usize, c: Color) -> bool {
        match c {
            Color::Red => match t.red {
                DenseRed::Triangle => self.red[u] & self.red[v] != 0,
                DenseRed::Path(k) => path_through(&self.red, u, v, k),
            },
            Color::Blue => path_through(&self.blue, u, v, t.blue_path),
        }
    }

    /// Full check of both goals on the whole board.
    pub fn reached(&self, t: &DenseTarget) -> Option<crate::board::Hit> {
        let n = self.n as usize;
        let mut red = false;
        let mut blue = false;
        for u in 0..n {
            for v in u + 1..n {
                match self.color_of(u, v) {
                    Some(Color::Red) => red |= self.completes(t, u, v, Color::Red),
                    Some(Color::Blue) => blue |= self.completes(t, u, v, Color::Blue),
                    None => {}
                }
            }
        }
        match (red, blue) {
            (false, false) => None,
            (true, false) => Some(crate::board::Hit::Red),
            (false, true) => Some(crate::board::Hit::Blue),
            (true, true) => Some(crate::board::Hit::Both),
        }
    }

    /// Relabels a board's touched vertices to `0..n` in first-touch order.
    pub fn from_graph(g: &ColoredGraph) -> Result<(DenseBoard, Vec<Vertex>), SolverError> {
        let labels = g.vertices().to_vec();
        if labels.len() > DENSE_MAX {
            return Err(SolverError::ResourceLimit(format!(
                "{} touched vertices exceed the dense board size {DENSE_MAX}",
                labels.len()
            )));
        }
        let pos = |x: Vertex| labels.iter().position(|&y| y == x).unwrap();
        let mut b = DenseBoard::new();
        b.n = labels.len() as u8;
        for &(u, v, c) in g.history() {
            let (i, j) = (pos(u), pos(v));
            let masks = match c {
                Color::Red => &mut b.red,
                Color::Blue => &mut b.blue,
            };
            masks[i] |= 1 << j;
            masks[j] |= 1 << i;
            b.edges += 1;
        }
        Ok((b, labels))
    }
}

/// Is there a path on at least `k` vertices in `adj` that uses the edge
/// `uv`? Splits into a path ending at `u` and one starting at `v`.
fn path_through(adj: &[u32; DENSE_MAX], u: usize, v: usize, k: usize) -> bool {
    if k <= 2 {
        return true;
    }
    fn extend_from(adj: &[u32; DENSE_MAX], last: usize, visited: u32, len: usize, need: usize) -> bool {
        if len >= need {
            return true;
        }
        let mut nxt = adj[last] & !visited;
        while nxt != 0 {
            let w = nxt.trailing_zeros() as usize;
            nxt &= nxt - 1;
            if extend_from(adj, w, visited | 1 << w, len + 1, need) {
                return true;
            }
        }
        false
    }
    // enumerate paths from u avoiding v; for each, try to finish from v
    fn side(adj: &[u32; DENSE_MAX], last: usize, visited: u32, len: usize, v: usize, k: usize) -> bool {
        // len counts the u-side vertices; the v side contributes at least 1
        if extend_from(adj, v, visited | 1 << v, len + 1, k) {
            return true;
        }
        let mut nxt = adj[last] & !visited & !(1 << v);
        while nxt != 0 {
            let w = nxt.trailing_zeros() as usize;
            nxt &= nxt - 1;
            if side(adj, w, visited | 1 << w, len + 1, v, k) {
                return true;
            }
        }
        false
    }
    side(adj, u, 1 << u, 1, v, k)
}
