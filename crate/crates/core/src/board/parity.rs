/// Union-find where every element carries a parity relative to its root.
///
/// Each root also keeps per-side tallies: how many vertices sit on parity
/// side 0 and side 1, and how many parity-0 edges (blue edges, in the
/// red-bipartite reading) lie inside each side.
#[derive(Debug, Clone, Default)]
pub struct ParityUnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    // parity relative to parent
    parity: Vec<u8>,
    sides: Vec<SideTally>,
    conflict: Vec<bool>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SideTally {
    pub vertices: [u32; 2],
    pub inner_edges: [u32; 2],
}

impl SideTally {
    fn flipped(self) -> SideTally {
        SideTally {
            vertices: [self.vertices[1], self.vertices[0]],
            inner_edges: [self.inner_edges[1], self.inner_edges[0]],
        }
    }
}

/// Outcome of adding a constraint `parity(x) ^ parity(y) = p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Union {
    Merged,
    Consistent,
    Contradiction,
}

impl ParityUnionFind {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn push(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        self.rank.push(0);
        self.parity.push(0);
        self.sides.push(SideTally {
            vertices: [1, 0],
            inner_edges: [0, 0],
        });
        self.conflict.push(false);
        id
    }

    /// Root of `x` and the parity of `x` relative to it.
    pub fn find(&mut self, x: usize) -> (usize, u8) {
        let p = self.parent[x];
        if p == x {
            return (x, 0);
        }
        let (root, pp) = self.find(p);
        self.parity[x] ^= pp;
        self.parent[x] = root;
        (root, self.parity[x])
    }

    /// Non-mutating find, for shared borrows.
    pub fn find_const(&self, mut x: usize) -> (usize, u8) {
        let mut par = 0;
        while self.parent[x] != x {
            par ^= self.parity[x];
            x = self.parent[x];
        }
        (x, par)
    }

    pub fn tally(&self, root: usize) -> SideTally {
        self.sides[root]
    }

    pub fn has_conflict(&self, root: usize) -> bool {
        self.conflict[root]
    }

    pub fn is_root(&self, x: usize) -> bool {
        self.parent[x] == x
    }

    /// Requires `parity(x) ^ parity(y) == p`. A parity-0 constraint is
    /// counted as an inner edge of the side holding both endpoints.
    pub fn union(&mut self, x: usize, y: usize, p: u8) -> Union {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            if px ^ py != p {
                self.conflict[rx] = true;
                return Union::Contradiction;
            }
            if p == 0 {
                self.sides[rx].inner_edges[px as usize] += 1;
            }
            return Union::Consistent;
        }
        // parity of ry relative to rx
        let rel = px ^ py ^ p;
        let (big, small, x_side) = if self.rank[rx] >= self.rank[ry] {
            (rx, ry, px)
        } else {
            (ry, rx, px ^ rel)
        };
        if self.rank[big] == self.rank[small] {
            self.rank[big] += 1;
        }
        self.parent[small] = big;
        self.parity[small] = rel;
        let moved = if rel == 1 {
            self.sides[small].flipped()
        } else {
            self.sides[small]
        };
        let t = &mut self.sides[big];
        for s in 0..2 {
            t.vertices[s] += moved.vertices[s];
            t.inner_edges[s] += moved.inner_edges[s];
        }
        if p == 0 {
            t.inner_edges[x_side as usize] += 1;
        }
        self.conflict[big] |= self.conflict[small];
        Union::Merged
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_contradicts() {
        let mut uf = ParityUnionFind::new();
        for _ in 0..3 {
            uf.push();
        }
        assert_eq!(uf.union(0, 1, 1), Union::Merged);
        assert_eq!(uf.union(1, 2, 1), Union::Merged);
        assert_eq!(uf.union(0, 2, 1), Union::Contradiction);
        let (r, _) = uf.find(0);
        assert!(uf.has_conflict(r));
    }

    #[test]
    fn tallies_follow_flips() {
        let mut uf = ParityUnionFind::new();
        for _ in 0..4 {
            uf.push();
        }
        uf.union(0, 1, 1);
        uf.union(2, 3, 0);
        // joining 1 and 2 with parity 1 splits {0,2,3} | {1}
        uf.union(1, 2, 1);
        let (r, p0) = uf.find(0);
        let t = uf.tally(r);
        let side0 = p0 as usize;
        assert_eq!(t.vertices[side0], 3);
        assert_eq!(t.vertices[1 - side0], 1);
        assert_eq!(t.inner_edges[side0], 1);
        assert_eq!(t.inner_edges[1 - side0], 0);
    }
}
