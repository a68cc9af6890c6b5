//! Exact longest monochromatic paths.
//!
//! Acyclic components are handled by the two-sweep tree diameter. Cyclic
//! components use the bitmask DP up to `dp_vertices` vertices and a
//! branch-and-bound DFS up to `max_component`; larger cyclic components
//! are refused with [`BoardError::ResourceLimit`].

use std::collections::VecDeque;

use super::{BoardError, Color, ColoredGraph, Vertex};

/// One connected component of a single-color subgraph, in dense indices.
pub(crate) struct MonoComponent {
    pub vertices: Vec<usize>,
    pub edges: usize,
}

impl MonoComponent {
    pub fn is_tree(&self) -> bool {
        self.edges + 1 == self.vertices.len()
    }
}

impl ColoredGraph {
    pub(crate) fn mono_neighbors(&self, i: usize, c: Color) -> impl Iterator<Item = usize> + '_ {
        self.adjacency()[i]
            .iter()
            .filter(move |&&(_, ec)| ec == c)
            .map(|&(w, _)| w)
    }

    pub(crate) fn mono_component_of(&self, start: usize, c: Color, seen: &mut [bool]) -> MonoComponent {
        let mut vertices = vec![start];
        let mut degree_sum = 0;
        seen[start] = true;
        let mut k = 0;
        while k < vertices.len() {
            let x = vertices[k];
            k += 1;
            for w in self.mono_neighbors(x, c) {
                degree_sum += 1;
                if !seen[w] {
                    seen[w] = true;
                    vertices.push(w);
                }
            }
        }
        MonoComponent {
            vertices,
            edges: degree_sum / 2,
        }
    }

    pub(crate) fn mono_components(&self, c: Color) -> Vec<MonoComponent> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if !seen[i] {
                out.push(self.mono_component_of(i, c, &mut seen));
            }
        }
        out
    }

    /// Vertex count of a longest path using only edges of color `c`
    /// (0 on an empty board).
    pub fn longest_path(&self, c: Color) -> Result<usize, BoardError> {
        let mut best = 0;
        for comp in self.mono_components(c) {
            if comp.vertices.len() <= best {
                continue;
            }
            best = best.max(self.component_longest(&comp, c, None)?.len());
        }
        Ok(best)
    }

    pub fn longest_blue_path(&self) -> Result<usize, BoardError> {
        self.longest_path(Color::Blue)
    }

    /// Some longest path of color `c`, as a vertex sequence.
    pub fn longest_path_witness(&self, c: Color) -> Result<Vec<Vertex>, BoardError> {
        let mut best: Vec<usize> = Vec::new();
        for comp in self.mono_components(c) {
            if comp.vertices.len() <= best.len() {
                continue;
            }
            let p = self.component_longest(&comp, c, None)?;
            if p.len() > best.len() {
                best = p;
            }
        }
        Ok(best.into_iter().map(|i| self.label(i)).collect())
    }

    /// Whether a path of color `c` on at least `k` vertices exists.
    pub fn has_path_at_least(&self, c: Color, k: usize) -> Result<bool, BoardError> {
        if k <= 1 {
            return Ok(k == 0 || self.vertex_count() > 0);
        }
        for comp in self.mono_components(c) {
            if comp.vertices.len() >= k && self.component_longest(&comp, c, Some(k))?.len() >= k {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// As [`has_path_at_least`](Self::has_path_at_least), looking only at the
    /// color-`c` component containing `v`.
    pub fn has_path_at_least_at(&self, v: Vertex, c: Color, k: usize) -> Result<bool, BoardError> {
        let Some(i) = self.index_of(v) else {
            return Ok(k == 0);
        };
        let mut seen = vec![false; self.vertex_count()];
        let comp = self.mono_component_of(i, c, &mut seen);
        if comp.vertices.len() < k {
            return Ok(false);
        }
        Ok(self.component_longest(&comp, c, Some(k))?.len() >= k)
    }

    /// Longest path inside one component; with `target`, may stop early
    /// once a path of that many vertices is found.
    fn component_longest(
        &self,
        comp: &MonoComponent,
        c: Color,
        target: Option<usize>,
    ) -> Result<Vec<usize>, BoardError> {
        if comp.is_tree() {
            return Ok(self.tree_diameter(comp.vertices[0], c));
        }
        let k = comp.vertices.len();
        let limits = self.limits();
        if k > limits.max_component {
            return Err(BoardError::ResourceLimit(format!(
                "cyclic {} component with {k} vertices exceeds cap {}",
                c, limits.max_component
            )));
        }
        let local = LocalGraph::new(self, comp, c);
        if k <= limits.dp_vertices && target.is_none() {
            let len = local.bitmask_dp_longest();
            // DP yields only the length; recover a witness with the DFS,
            // which now has a tight target.
            let p = local.dfs_longest(Some(len));
            debug_assert_eq!(p.len(), len);
            return Ok(p.into_iter().map(|x| comp.vertices[x]).collect());
        }
        let p = local.dfs_longest(target);
        Ok(p.into_iter().map(|x| comp.vertices[x]).collect())
    }

    fn bfs_far(&self, start: usize, c: Color) -> (usize, Vec<usize>) {
        let mut prev = std::collections::HashMap::new();
        prev.insert(start, usize::MAX);
        let mut queue = VecDeque::from([start]);
        let mut last = start;
        while let Some(x) = queue.pop_front() {
            last = x;
            for w in self.mono_neighbors(x, c) {
                if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(w) {
                    e.insert(x);
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![last];
        let mut cur = last;
        while prev[&cur] != usize::MAX {
            cur = prev[&cur];
            path.push(cur);
        }
        (last, path)
    }

    fn tree_diameter(&self, start: usize, c: Color) -> Vec<usize> {
        let (a, _) = self.bfs_far(start, c);
        let (_, path) = self.bfs_far(a, c);
        path
    }
}

/// A component relabeled to `0..k` with bitmask adjacency.
struct LocalGraph {
    adj: Vec<u64>,
}

impl LocalGraph {
    fn new(g: &ColoredGraph, comp: &MonoComponent, c: Color) -> Self {
        let pos: std::collections::HashMap<usize, usize> =
            comp.vertices.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let adj = comp
            .vertices
            .iter()
            .map(|&i| {
                g.mono_neighbors(i, c)
                    .fold(0u64, |m, w| m | 1u64 << pos[&w])
            })
            .collect();
        LocalGraph { adj }
    }

    fn bitmask_dp_longest(&self) -> usize {
        let k = self.adj.len();
        // ends[mask]: vertices v such that some path visits exactly `mask`
        // and ends at v
        let mut ends = vec![0u32; 1usize << k];
        for v in 0..k {
            ends[1 << v] = 1 << v;
        }
        let mut best = 1;
        for mask in 1usize..(1 << k) {
            let e = ends[mask];
            if e == 0 {
                continue;
            }
            best = best.max(mask.count_ones() as usize);
            let mut rest = e;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut nxt = self.adj[v] & !(mask as u64);
                while nxt != 0 {
                    let w = nxt.trailing_zeros() as usize;
                    nxt &= nxt - 1;
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
        best
    }

    fn dfs_longest(&self, target: Option<usize>) -> Vec<usize> {
        let k = self.adj.len();
        let stop = target.unwrap_or(k).min(k);
        let mut best = Vec::new();
        let mut path = Vec::with_capacity(k);
        for s in 0..k {
            path.push(s);
            self.dfs(1u64 << s, &mut path, &mut best, stop);
            path.pop();
            if best.len() >= stop {
                break;
            }
        }
        best
    }

    fn dfs(&self, visited: u64, path: &mut Vec<usize>, best: &mut Vec<usize>, stop: usize) {
        if path.len() > best.len() {
            best.clear();
            best.extend_from_slice(path);
        }
        if best.len() >= stop {
            return;
        }
        let remaining = self.adj.len() - path.len();
        if path.len() + remaining <= best.len() {
            return;
        }
        let last = *path.last().unwrap();
        let mut nxt = self.adj[last] & !visited;
        while nxt != 0 {
            let w = nxt.trailing_zeros() as usize;
            nxt &= nxt - 1;
            path.push(w);
            self.dfs(visited | 1 << w, path, best, stop);
            path.pop();
            if best.len() >= stop {
                return;
            }
        }
    }
}
