//! The game board: a finite colored graph inside the unbounded vertex pool.
//!
//! Vertices are arbitrary non-negative integers; a vertex exists on the board
//! once an edge touches it. Every edge carries a [`Color`]. Two parity
//! union-finds are maintained incrementally:
//!
//! * the *red-bipartition* structure, where a red edge forces its ends onto
//!   opposite sides and a blue edge onto the same side, so the board is
//!   red-bipartite exactly when no cycle has an odd number of red edges;
//! * a red-only structure that detects an all-red odd cycle.

mod parity;
mod paths;
mod subgraph;
mod target;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use parity::{ParityUnionFind, SideTally, Union};
pub use target::{BlueTarget, Hit, RedTarget, TargetSpec, Verdict};

use crate::golden::GoldenNumber;

pub type Vertex = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_letter(c: char) -> Option<Color> {
        match c {
            'R' => Some(Color::Red),
            'B' => Some(Color::Blue),
            _ => None,
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    fn parity(self) -> u8 {
        match self {
            Color::Red => 1,
            Color::Blue => 0,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("edge {0}-{1} was already selected")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {0} is not on the board")]
    UnknownVertex(Vertex),
    #[error("component of vertex {0} is not red-bipartite")]
    NotRedBipartite(Vertex),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("invalid target: {0}")]
    InvalidTarget(String),
}

/// Caps for the exact path and subgraph searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Cyclic components up to this size use the bitmask DP.
    pub dp_vertices: usize,
    /// Cyclic components above this size are refused.
    pub max_component: usize,
    /// Node budget for connected-subset enumeration.
    pub subgraph_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            dp_vertices: 24,
            max_component: 40,
            subgraph_nodes: 200_000_000,
        }
    }
}

/// Normalized unordered pair.
pub fn edge_key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, Default)]
pub struct ColoredGraph {
    index: HashMap<Vertex, usize>,
    labels: Vec<Vertex>,
    adj: Vec<Vec<(usize, Color)>>,
    edges: HashMap<(Vertex, Vertex), Color>,
    history: Vec<(Vertex, Vertex, Color)>,
    bip: ParityUnionFind,
    red_only: ParityUnionFind,
    red_bipartite: bool,
    red_odd_cycle: bool,
    limits: SearchLimits,
}

impl PartialEq for ColoredGraph {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges
    }
}

impl Eq for ColoredGraph {}

impl ColoredGraph {
    pub fn new() -> Self {
        ColoredGraph {
            red_bipartite: true,
            ..Default::default()
        }
    }

    pub fn with_limits(limits: SearchLimits) -> Self {
        ColoredGraph {
            limits,
            ..Self::new()
        }
    }

    pub fn from_edges<I>(edges: I) -> Result<Self, BoardError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Color)>,
    {
        let mut g = ColoredGraph::new();
        for (u, v, c) in edges {
            g.add_edge(u, v, c)?;
        }
        Ok(g)
    }

    pub fn limits(&self) -> SearchLimits {
        self.limits
    }

    pub fn set_limits(&mut self, limits: SearchLimits) {
        self.limits = limits;
    }

    fn intern(&mut self, v: Vertex) -> usize {
        if let Some(&i) = self.index.get(&v) {
            return i;
        }
        let i = self.labels.len();
        self.index.insert(v, i);
        self.labels.push(v);
        self.adj.push(Vec::new());
        self.bip.push();
        self.red_only.push();
        i
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, c: Color) -> Result<(), BoardError> {
        if u == v {
            return Err(BoardError::LoopEdge(u));
        }
        let key = edge_key(u, v);
        if self.edges.contains_key(&key) {
            return Err(BoardError::DuplicateEdge(key.0, key.1));
        }
        let iu = self.intern(u);
        let iv = self.intern(v);
        self.edges.insert(key, c);
        self.history.push((u, v, c));
        self.adj[iu].push((iv, c));
        self.adj[iv].push((iu, c));
        if self.bip.union(iu, iv, c.parity()) == Union::Contradiction {
            self.red_bipartite = false;
        }
        if c == Color::Red && self.red_only.union(iu, iv, 1) == Union::Contradiction {
            self.red_odd_cycle = true;
        }
        Ok(())
    }

    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.edges.get(&edge_key(u, v)).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains_key(&edge_key(u, v))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.index.contains_key(&v)
    }

    /// Touched vertices in first-touch order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.labels
    }

    /// Edges in the order they were colored.
    pub fn history(&self) -> &[(Vertex, Vertex, Color)] {
        &self.history
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.labels.iter().copied().max()
    }

    pub fn degree(&self, v: Vertex, c: Color) -> usize {
        self.index
            .get(&v)
            .map_or(0, |&i| self.adj[i].iter().filter(|&&(_, ec)| ec == c).count())
    }

    pub fn neighbors(&self, v: Vertex, c: Color) -> impl Iterator<Item = Vertex> + '_ {
        let list: &[(usize, Color)] = match self.index.get(&v) {
            Some(&i) => &self.adj[i],
            None => &[],
        };
        list.iter()
            .filter(move |&&(_, ec)| ec == c)
            .map(move |&(w, _)| self.labels[w])
    }

    pub fn is_red_bipartite(&self) -> bool {
        self.red_bipartite
    }

    /// True iff the red edges alone contain an odd cycle.
    pub fn has_red_odd_cycle(&self) -> bool {
        self.red_odd_cycle
    }

    pub fn has_red_triangle(&self) -> bool {
        self.history
            .iter()
            .any(|&(u, v, c)| c == Color::Red && self.red_triangle_through(u, v))
    }

    /// Whether the red edge `uv` lies on a red triangle.
    pub fn red_triangle_through(&self, u: Vertex, v: Vertex) -> bool {
        let (Some(&iu), Some(&iv)) = (self.index.get(&u), self.index.get(&v)) else {
            return false;
        };
        let (small, other) = if self.adj[iu].len() <= self.adj[iv].len() {
            (iu, self.labels[iv])
        } else {
            (iv, self.labels[iu])
        };
        self.adj[small].iter().any(|&(w, c)| {
            c == Color::Red && self.color_of(self.labels[w], other) == Some(Color::Red)
        })
    }

    /// Representative vertex of each component, in first-touch order.
    pub fn components(&self) -> Vec<Vertex> {
        (0..self.labels.len())
            .filter(|&i| self.bip.is_root(i))
            .map(|i| self.labels[i])
            .collect()
    }

    /// Component representative plus `v`'s side (0 or 1) in it.
    pub fn side_of(&self, v: Vertex) -> Option<(Vertex, u8)> {
        let &i = self.index.get(&v)?;
        let (r, p) = self.bip.find_const(i);
        Some((self.labels[r], p))
    }

    pub fn same_component(&self, u: Vertex, v: Vertex) -> bool {
        match (self.side_of(u), self.side_of(v)) {
            (Some((a, _)), Some((b, _))) => a == b,
            _ => false,
        }
    }

    /// Side tallies of the component containing `v`, oriented so that index
    /// 0 is the side returned by [`side_of`](Self::side_of) as parity 0.
    pub fn component_tally(&self, v: Vertex) -> Option<SideTally> {
        let &i = self.index.get(&v)?;
        let (r, _) = self.bip.find_const(i);
        Some(self.bip.tally(r))
    }

    pub fn component_is_red_bipartite(&self, v: Vertex) -> Option<bool> {
        let &i = self.index.get(&v)?;
        let (r, _) = self.bip.find_const(i);
        Some(!self.bip.has_conflict(r))
    }

    /// Side potentials `|V_i| phi + |E[V_i]|` of the component of `v`,
    /// indexed by parity side.
    pub fn side_potentials(&self, v: Vertex) -> Option<[GoldenNumber; 2]> {
        let t = self.component_tally(v)?;
        Some(side_potentials(t))
    }

    /// Tallies of the component that would contain `u` and `v` after
    /// coloring `uv` with `c`, without mutating the board. `None` if the
    /// result would not be red-bipartite.
    pub fn preview_tally(&self, u: Vertex, v: Vertex, c: Color) -> Option<SideTally> {
        let lone = SideTally {
            vertices: [1, 0],
            inner_edges: [0, 0],
        };
        let (tu, pu, ru) = match self.index.get(&u) {
            Some(&i) => {
                let (r, p) = self.bip.find_const(i);
                if self.bip.has_conflict(r) {
                    return None;
                }
                (self.bip.tally(r), p, Some(r))
            }
            None => (lone, 0, None),
        };
        let (tv, pv, rv) = match self.index.get(&v) {
            Some(&i) => {
                let (r, p) = self.bip.find_const(i);
                if self.bip.has_conflict(r) {
                    return None;
                }
                (self.bip.tally(r), p, Some(r))
            }
            None => (lone, 0, None),
        };
        let par = c.parity();
        if ru.is_some() && ru == rv {
            if pu ^ pv != par {
                return None;
            }
            let mut t = tu;
            if par == 0 {
                t.inner_edges[pu as usize] += 1;
            }
            return Some(t);
        }
        // express v's component in u's orientation
        let flip = (pu ^ pv ^ par) as usize;
        let mut t = tu;
        for s in 0..2 {
            t.vertices[s] += tv.vertices[s ^ flip];
            t.inner_edges[s] += tv.inner_edges[s ^ flip];
        }
        if par == 0 {
            t.inner_edges[pu as usize] += 1;
        }
        Some(t)
    }

    /// The red-bipartition of the component containing `v`; the side holding
    /// the smallest label comes first. Sides are sorted.
    pub fn red_bipartition(&self, v: Vertex) -> Result<(Vec<Vertex>, Vec<Vertex>), BoardError> {
        let &i = self.index.get(&v).ok_or(BoardError::UnknownVertex(v))?;
        let (root, _) = self.bip.find_const(i);
        if self.bip.has_conflict(root) {
            return Err(BoardError::NotRedBipartite(v));
        }
        let mut sides: [Vec<Vertex>; 2] = [Vec::new(), Vec::new()];
        for (j, &label) in self.labels.iter().enumerate() {
            let (r, p) = self.bip.find_const(j);
            if r == root {
                sides[p as usize].push(label);
            }
        }
        for s in sides.iter_mut() {
            s.sort_unstable();
        }
        let [a, b] = sides;
        if b.first().is_some_and(|&x| a.first().is_none_or(|&y| x < y)) {
            Ok((b, a))
        } else {
            Ok((a, b))
        }
    }

    /// Whether any red-bipartite component has a side with at least `n`
    /// vertices and `m` inner edges, or the board is not red-bipartite.
    pub fn aux_target_reached(&self, n: usize, m: usize) -> bool {
        if !self.red_bipartite {
            return true;
        }
        (0..self.labels.len())
            .filter(|&i| self.bip.is_root(i))
            .any(|r| tally_reaches(self.bip.tally(r), n, m))
    }

    /// [`aux_target_reached`](Self::aux_target_reached) restricted to the
    /// component of `v`; enough after an edge at `v` when the target was
    /// not reached before.
    pub fn aux_target_reached_at(&self, v: Vertex, n: usize, m: usize) -> bool {
        if !self.red_bipartite {
            return true;
        }
        self.component_tally(v).is_some_and(|t| tally_reaches(t, n, m))
    }

    pub(crate) fn index_of(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub(crate) fn label(&self, i: usize) -> Vertex {
        self.labels[i]
    }

    pub(crate) fn adjacency(&self) -> &[Vec<(usize, Color)>] {
        &self.adj
    }
}

fn tally_reaches(t: SideTally, n: usize, m: usize) -> bool {
    (0..2).any(|s| t.vertices[s] as usize >= n && t.inner_edges[s] as usize >= m)
}

pub fn side_potentials(t: SideTally) -> [GoldenNumber; 2] {
    [0, 1].map(|s| GoldenNumber::new(t.vertices[s] as i64, t.inner_edges[s] as i64))
}
