//! Canonical labeling of small two-colored graphs.
//!
//! Each connected component is labeled separately by color-aware
//! refinement followed by individualization, keeping the labeling with the
//! smallest adjacency code. Components are then laid out in sorted order.

use std::fmt;

use crate::board::ColoredGraph;

use super::dense::DenseBoard;
use super::SolverError;

pub const CANON_MAX: usize = 16;

/// Packed adjacency code: two bits per vertex pair (0 none, 1 red, 2 blue),
/// pairs in triangular order.
pub type CanonKey = [u64; 4];

/// Isomorphism-invariant certificate of a colored graph without isolated
/// vertices. Equal states mean color-preserving isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalState(pub CanonKey);

impl CanonicalState {
    pub fn as_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|w| w.to_le_bytes()).collect()
    }
}

impl fmt::Display for CanonicalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in self.0.iter().rev() {
            write!(f, "{w:016x}")?;
        }
        Ok(())
    }
}

pub fn canonical_form(g: &ColoredGraph) -> Result<CanonicalState, SolverError> {
    if g.vertex_count() > CANON_MAX {
        return Err(SolverError::ResourceLimit(format!(
            "{} non-isolated vertices exceed the canonical form limit {CANON_MAX}",
            g.vertex_count()
        )));
    }
    let (b, _) = DenseBoard::from_graph(g)?;
    canonical_key(&b).map(CanonicalState)
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

#[inline]
fn put(key: &mut CanonKey, idx: usize, code: u64) {
    let bit = idx * 2;
    key[bit / 64] |= code << (bit % 64);
}

/// Canonical key of a dense board. Every vertex below `vertex_count` is
/// assumed touched.
pub fn canonical_key(b: &DenseBoard) -> Result<CanonKey, SolverError> {
    let n = b.vertex_count();
    if n > CANON_MAX {
        return Err(SolverError::ResourceLimit(format!(
            "{n} non-isolated vertices exceed the canonical form limit {CANON_MAX}"
        )));
    }
    let mut seen = 0u32;
    let mut comps: Vec<(usize, CanonKey, Vec<usize>)> = Vec::new();
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        let mut comp = 1u32 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = (b.red(v) | b.blue(v)) & !comp;
            comp |= nb;
            frontier |= nb;
        }
        seen |= comp;
        let verts: Vec<usize> = (0..n).filter(|&v| comp >> v & 1 == 1).collect();
        let (code, order) = canonical_component(b, &verts);
        let labeled = order.into_iter().map(|p| verts[p]).collect();
        comps.push((verts.len(), code, labeled));
    }
    comps.sort_by_key(|a| (a.0, a.1));

    let mut pos = [0usize; CANON_MAX];
    let mut next = 0;
    for (_, _, labeled) in &comps {
        for &v in labeled {
            pos[v] = next;
            next += 1;
        }
    }
    let mut key = [0u64; 4];
    for u in 0..n {
        let mut nb = b.red(u) | b.blue(u);
        nb &= !((1u32 << (u + 1)) - 1);
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let (i, j) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            let code = if b.red(u) >> v & 1 == 1 { 1 } else { 2 };
            put(&mut key, pair_index(i, j), code);
        }
    }
    Ok(key)
}

struct Local {
    k: usize,
    red: [u16; CANON_MAX],
    blue: [u16; CANON_MAX],
}

impl Local {
    fn twins(&self, v: usize, w: usize) -> bool {
        let strip = !((1u16 << v) | (1u16 << w));
        self.red[v] & strip == self.red[w] & strip
            && self.blue[v] & strip == self.blue[w] & strip
            && (self.red[v] >> w & 1) == (self.red[w] >> v & 1)
    }

    fn encode(&self, order: &[usize]) -> CanonKey {
        let mut pos = [0usize; CANON_MAX];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let mut key = [0u64; 4];
        for u in 0..self.k {
            for v in u + 1..self.k {
                let code = if self.red[u] >> v & 1 == 1 {
                    1
                } else if self.blue[u] >> v & 1 == 1 {
                    2
                } else {
                    continue;
                };
                let (i, j) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
                put(&mut key, pair_index(i, j), code);
            }
        }
        key
    }

    fn refine(&self, mut cells: Vec<u16>) -> Vec<u16> {
        loop {
            let mut next = Vec::with_capacity(self.k);
            let mut changed = false;
            for &cell in &cells {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut sigs: Vec<(u128, usize)> = Vec::with_capacity(cell.count_ones() as usize);
                let mut bits = cell;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let mut sig = 0u128;
                    for (ci, &c) in cells.iter().enumerate() {
                        let r = (self.red[v] & c).count_ones() as u128;
                        let bl = (self.blue[v] & c).count_ones() as u128;
                        sig |= (r << 4 | bl) << (8 * ci);
                    }
                    sigs.push((sig, v));
                }
                sigs.sort_unstable();
                let mut cur = 0u16;
                let mut cur_sig = sigs[0].0;
                for &(s, v) in &sigs {
                    if s != cur_sig {
                        next.push(cur);
                        cur = 0;
                        cur_sig = s;
                        changed = true;
                    }
                    cur |= 1 << v;
                }
                next.push(cur);
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn search(&self, cells: Vec<u16>, best: &mut Option<(CanonKey, Vec<usize>)>) {
        let cells = self.refine(cells);
        if cells.len() == self.k {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let code = self.encode(&order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, order));
            }
            return;
        }
        let (ci, &cell) = cells
            .iter()
            .enumerate()
            .find(|(_, c)| c.count_ones() > 1)
            .expect("a non-singleton cell");
        let mut tried: Vec<usize> = Vec::new();
        let mut bits = cell;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if tried.iter().any(|&w| self.twins(v, w)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..ci]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[ci + 1..]);
            self.search(next, best);
        }
    }
}

/// Smallest code over canonical labelings of one component, and the
/// labeling as positions into `verts`.
fn canonical_component(b: &DenseBoard, verts: &[usize]) -> (CanonKey, Vec<usize>) {
    let k = verts.len();
    let mut local = Local {
        k,
        red: [0; CANON_MAX],
        blue: [0; CANON_MAX],
    };
    for (i, &u) in verts.iter().enumerate() {
        for (j, &v) in verts.iter().enumerate() {
            if b.red(u) >> v & 1 == 1 {
                local.red[i] |= 1 << j;
            }
            if b.blue(u) >> v & 1 == 1 {
                local.blue[i] |= 1 << j;
            }
        }
    }
    let all = if k == 16 { u16::MAX } else { (1u16 << k) - 1 };
    let mut best = None;
    local.search(vec![all], &mut best);
    best.expect("at least one labeling")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Color::{self, Blue, Red};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn g(edges: &[(u32, u32, Color)]) -> ColoredGraph {
        ColoredGraph::from_edges(edges.iter().copied()).unwrap()
    }

    #[test]
    fn relabeling_examples() {
        let a = canonical_form(&g(&[(0, 1, Red)])).unwrap();
        let b = canonical_form(&g(&[(5, 9, Red)])).unwrap();
        assert_eq!(a, b);
        let p = canonical_form(&g(&[(0, 1, Red), (1, 2, Blue)])).unwrap();
        let q = canonical_form(&g(&[(0, 1, Blue), (1, 2, Red)])).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn triangle_colorings_have_four_classes() {
        let mut keys = std::collections::BTreeSet::new();
        for mask in 0..8u32 {
            let c = |i: u32| if mask >> i & 1 == 1 { Red } else { Blue };
            keys.insert(canonical_form(&g(&[(0, 1, c(0)), (1, 2, c(1)), (0, 2, c(2))])).unwrap());
        }
        assert_eq!(keys.len(), 4);
    }

    #[test]
    fn too_many_vertices() {
        let edges: Vec<_> = (0..9).map(|i| (2 * i, 2 * i + 1, Red)).collect();
        assert!(matches!(canonical_form(&g(&edges)), Err(SolverError::ResourceLimit(_))));
        let edges: Vec<_> = (0..8).map(|i| (2 * i, 2 * i + 1, Red)).collect();
        assert!(canonical_form(&g(&edges)).is_ok());
    }

    /// Brute force over all vertex permutations.
    pub(crate) fn isomorphic(a: &DenseBoard, b: &DenseBoard) -> bool {
        let n = a.vertex_count();
        if n != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        fn rec(a: &DenseBoard, b: &DenseBoard, perm: &mut Vec<usize>, used: u32) -> bool {
            let i = perm.len();
            let n = a.vertex_count();
            if i == n {
                return true;
            }
            for t in 0..n {
                if used >> t & 1 == 1 {
                    continue;
                }
                let ok = (0..i).all(|j| a.color_of(i, j) == b.color_of(t, perm[j]));
                if ok {
                    perm.push(t);
                    if rec(a, b, perm, used | 1 << t) {
                        return true;
                    }
                    perm.pop();
                }
            }
            false
        }
        rec(a, b, &mut Vec::new(), 0)
    }

    pub(crate) fn random_dense(rng: &mut ChaCha8Rng, max_v: usize) -> DenseBoard {
        loop {
            let n = rng.gen_range(2..=max_v);
            let p = rng.gen_range(0.2..0.9);
            let mut b = DenseBoard::new();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v, if rng.gen_bool(0.5) { Red } else { Blue }));
                    }
                }
            }
            // relabel in first-touch order so the board has no gaps
            let mut label = vec![usize::MAX; n];
            let mut next = 0;
            for &(u, v, c) in &edges {
                for x in [u, v] {
                    if label[x] == usize::MAX {
                        label[x] = next;
                        next += 1;
                    }
                }
                let (a, bb) = (label[u], label[v]);
                b = b.with_edge(a.min(bb), a.max(bb), c);
            }
            if b.edge_count() > 0 {
                return b;
            }
        }
    }

    fn shuffled(b: &DenseBoard, rng: &mut ChaCha8Rng) -> DenseBoard {
        use rand::seq::SliceRandom;
        let n = b.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if let Some(c) = b.color_of(u, v) {
                    edges.push((perm[u], perm[v], c));
                }
            }
        }
        edges.shuffle(rng);
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = DenseBoard::new();
        for (u, v, c) in edges {
            for x in [u, v] {
                if label[x] == usize::MAX {
                    label[x] = next;
                    next += 1;
                }
            }
            out = out.with_edge(label[u], label[v], c);
        }
        out
    }

    #[test]
    fn keys_agree_with_brute_force_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let a = random_dense(&mut rng, 7);
            let b = if rng.gen_bool(0.5) {
                shuffled(&a, &mut rng)
            } else {
                random_dense(&mut rng, 7)
            };
            let same = canonical_key(&a).unwrap() == canonical_key(&b).unwrap();
            assert_eq!(same, isomorphic(&a, &b), "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn symmetric_graphs_are_stable() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        // blue cycle on 12 vertices with a red perfect matching of chords
        let mut b = DenseBoard::new();
        for i in 0..12 {
            let (u, v) = (i, (i + 1) % 12);
            b = b.with_edge(u.min(v), u.max(v), Blue);
        }
        for i in 0..6 {
            b = b.with_edge(i, i + 6, Red);
        }
        let k = canonical_key(&b).unwrap();
        for _ in 0..50 {
            assert_eq!(canonical_key(&shuffled(&b, &mut rng)).unwrap(), k);
        }
    }
}
