//! Densest connected monochromatic subgraph on exactly `n` vertices.
//!
//! Connected vertex sets are enumerated once each (anchored at their
//! smallest local index, grown through exclusive neighborhoods), scoring
//! induced edges. A branch is cut when even the most generous completion
//! cannot beat the incumbent.

use super::paths::MonoComponent;
use super::{BoardError, Color, ColoredGraph, Vertex};

type Mask = u128;
const MAX_LOCAL: usize = 128;

impl ColoredGraph {
    /// Maximum number of color-`c` edges in a connected color-`c` subgraph
    /// on exactly `n` vertices; `None` if no color-`c` component is that big.
    pub fn best_connected_subgraph(&self, c: Color, n: usize) -> Result<Option<usize>, BoardError> {
        let mut best = None;
        for comp in self.mono_components(c) {
            if comp.vertices.len() < n {
                continue;
            }
            let found = self.component_best(&comp, c, n, None)?;
            best = best.max(Some(found));
        }
        Ok(best)
    }

    pub fn best_connected_blue_subgraph(&self, n: usize) -> Result<Option<usize>, BoardError> {
        self.best_connected_subgraph(Color::Blue, n)
    }

    /// Whether some connected color-`c` subgraph has `n` vertices and at
    /// least `m` edges.
    pub fn has_connected_subgraph(&self, c: Color, n: usize, m: usize) -> Result<bool, BoardError> {
        for comp in self.mono_components(c) {
            if comp.vertices.len() >= n
                && comp.edges >= m
                && self.component_best(&comp, c, n, Some(m))? >= m
            {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// [`has_connected_subgraph`](Self::has_connected_subgraph) restricted
    /// to the color-`c` component of `v`.
    pub fn has_connected_subgraph_at(
        &self,
        v: Vertex,
        c: Color,
        n: usize,
        m: usize,
    ) -> Result<bool, BoardError> {
        let Some(i) = self.index_of(v) else {
            return Ok(false);
        };
        let mut seen = vec![false; self.vertex_count()];
        let comp = self.mono_component_of(i, c, &mut seen);
        Ok(comp.vertices.len() >= n && comp.edges >= m && self.component_best(&comp, c, n, Some(m))? >= m)
    }

    fn component_best(
        &self,
        comp: &MonoComponent,
        c: Color,
        n: usize,
        goal: Option<usize>,
    ) -> Result<usize, BoardError> {
        if n == 0 {
            return Ok(0);
        }
        // every connected n-subset of a tree spans exactly n - 1 edges
        if comp.is_tree() {
            return Ok(n - 1);
        }
        let k = comp.vertices.len();
        if k > MAX_LOCAL {
            return Err(BoardError::ResourceLimit(format!(
                "cyclic {c} component with {k} vertices is too large for subgraph search"
            )));
        }
        let pos: std::collections::HashMap<usize, usize> =
            comp.vertices.iter().enumerate().map(|(j, &i)| (i, j)).collect();
        let adj: Vec<Mask> = comp
            .vertices
            .iter()
            .map(|&i| self.mono_neighbors(i, c).fold(0, |m, w| m | 1 << pos[&w]))
            .collect();
        let max_deg = adj.iter().map(|a| a.count_ones() as usize).max().unwrap_or(0);
        let mut search = Enumerator {
            adj: &adj,
            n,
            gain_cap: max_deg.min(n - 1),
            best: 0,
            goal: goal.unwrap_or(usize::MAX),
            nodes: 0,
            node_cap: self.limits().subgraph_nodes,
            ceiling: (n * (n - 1) / 2).min(comp.edges),
        };
        for (anchor, &row) in adj.iter().enumerate().take(k) {
            let allowed: Mask = !((1 << anchor) - 1) & !(1 << anchor);
            let ext = row & allowed;
            search.extend(1 << anchor, 1, 0, ext, allowed)?;
            if search.done() {
                break;
            }
        }
        Ok(search.best)
    }
}

struct Enumerator<'a> {
    adj: &'a [Mask],
    n: usize,
    gain_cap: usize,
    best: usize,
    goal: usize,
    nodes: u64,
    node_cap: u64,
    ceiling: usize,
}

impl Enumerator<'_> {
    fn done(&self) -> bool {
        self.best >= self.goal || self.best >= self.ceiling
    }

    fn neighborhood(&self, set: Mask) -> Mask {
        let mut out = 0;
        let mut s = set;
        while s != 0 {
            let x = s.trailing_zeros() as usize;
            s &= s - 1;
            out |= self.adj[x];
        }
        out
    }

    fn extend(&mut self, set: Mask, size: usize, edges: usize, ext: Mask, allowed: Mask) -> Result<(), BoardError> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(BoardError::ResourceLimit(format!(
                "connected subgraph search exceeded {} nodes",
                self.node_cap
            )));
        }
        if size == self.n {
            self.best = self.best.max(edges);
            return Ok(());
        }
        // each later vertex adds at most gain_cap edges
        if edges + (self.n - size) * self.gain_cap <= self.best {
            return Ok(());
        }
        let mut ext = ext;
        let closed = set | self.neighborhood(set);
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let exclusive = self.adj[w] & allowed & !closed & !ext;
            let gained = (self.adj[w] & set).count_ones() as usize;
            self.extend(set | 1 << w, size + 1, edges + gained, ext | exclusive, allowed)?;
            if self.done() {
                return Ok(());
            }
        }
        Ok(())
    }
}
