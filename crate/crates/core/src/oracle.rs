//! Brute-force reference implementations. Slow and obviously correct;
//! used by the verification suites and tests to cross-check the fast paths.

use rand::Rng;

use crate::board::{Color, ColoredGraph, Vertex};

/// Random board with up to `max_v` vertices and `max_e` attempted edges.
pub fn random_graph<R: Rng>(rng: &mut R, max_v: u32, max_e: usize) -> ColoredGraph {
    let nv = rng.gen_range(2..=max_v);
    let ne = rng.gen_range(0..=max_e);
    let mut g = ColoredGraph::new();
    for _ in 0..ne {
        let u = rng.gen_range(0..nv);
        let v = rng.gen_range(0..nv);
        if u != v && !g.has_edge(u, v) {
            let c = if rng.gen_bool(0.5) { Color::Red } else { Color::Blue };
            g.add_edge(u, v, c).expect("fresh edge");
        }
    }
    g
}

/// Tries every split of the touched vertices into two sides.
pub fn red_bipartite(g: &ColoredGraph) -> bool {
    let vs = g.vertices();
    assert!(vs.len() <= 20, "oracle limited to 20 vertices");
    let pos = |x: Vertex| vs.iter().position(|&y| y == x).expect("touched");
    (0u32..1 << vs.len()).any(|mask| {
        g.history().iter().all(|&(u, v, c)| {
            let su = mask >> pos(u) & 1;
            let sv = mask >> pos(v) & 1;
            (su != sv) == (c == Color::Red)
        })
    })
}

/// Vertex count of the longest simple path in color `c`, by DFS from every
/// start.
pub fn longest_path(g: &ColoredGraph, c: Color) -> usize {
    fn go(g: &ColoredGraph, c: Color, path: &mut Vec<Vertex>) -> usize {
        let last = *path.last().expect("nonempty");
        let mut best = path.len();
        let next: Vec<Vertex> = g.neighbors(last, c).collect();
        for w in next {
            if !path.contains(&w) {
                path.push(w);
                best = best.max(go(g, c, path));
                path.pop();
            }
        }
        best
    }
    g.vertices()
        .iter()
        .map(|&s| go(g, c, &mut vec![s]))
        .max()
        .unwrap_or(0)
}

/// Most `c` edges inside any `n`-vertex set connected in color `c`.
pub fn best_connected(g: &ColoredGraph, c: Color, n: usize) -> Option<usize> {
    let vs = g.vertices().to_vec();
    assert!(vs.len() <= 20, "oracle limited to 20 vertices");
    let mut best = None;
    for mask in 0u32..1 << vs.len() {
        if mask.count_ones() as usize != n || n == 0 {
            continue;
        }
        let set: Vec<Vertex> = (0..vs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
        let inside = |x: Vertex| set.contains(&x);
        let mut seen = vec![set[0]];
        let mut k = 0;
        while k < seen.len() {
            let x = seen[k];
            k += 1;
            for w in g.neighbors(x, c) {
                if inside(w) && !seen.contains(&w) {
                    seen.push(w);
                }
            }
        }
        if seen.len() != n {
            continue;
        }
        let edges = g
            .history()
            .iter()
            .filter(|&&(u, v, ec)| ec == c && inside(u) && inside(v))
            .count();
        best = best.max(Some(edges));
    }
    best
}

/// Color-preserving isomorphism by trying every bijection of touched
/// vertices (with partial-assignment pruning).
pub fn isomorphic(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    let va = a.vertices().to_vec();
    let vb = b.vertices().to_vec();
    if va.len() != vb.len() || a.edge_count() != b.edge_count() {
        return false;
    }
    fn rec(a: &ColoredGraph, b: &ColoredGraph, va: &[Vertex], vb: &[Vertex], perm: &mut Vec<usize>, used: u64) -> bool {
        let i = perm.len();
        if i == va.len() {
            return true;
        }
        for t in 0..vb.len() {
            if used >> t & 1 == 1 {
                continue;
            }
            if (0..i).all(|j| a.color_of(va[i], va[j]) == b.color_of(vb[t], vb[perm[j]])) {
                perm.push(t);
                if rec(a, b, va, vb, perm, used | 1 << t) {
                    return true;
                }
                perm.pop();
            }
        }
        false
    }
    rec(a, b, &va, &vb, &mut Vec::new(), 0)
}

/// `ceil(a phi + b)` using only integer arithmetic: writes the value as
/// `(a + 2b + a sqrt 5) / 2` and compares squares.
pub fn golden_ceil(a: i64, b: i64) -> i64 {
    // smallest z with 2z - a - 2b >= a sqrt5
    let ge = |z: i64| {
        let lhs = 2 * z as i128 - a as i128 - 2 * b as i128;
        let a = a as i128;
        match (lhs >= 0, a >= 0) {
            (true, true) => lhs * lhs >= 5 * a * a,
            (true, false) => true,
            (false, true) => false,
            (false, false) => lhs * lhs <= 5 * a * a,
        }
    };
    let guess = (a as f64 * 1.618_033_988_749_895 + b as f64).ceil() as i64;
    let mut z = guess - 2;
    while !ge(z) {
        z += 1;
    }
    while ge(z - 1) {
        z -= 1;
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ceil_small_values() {
        assert_eq!(golden_ceil(0, 3), 3);
        assert_eq!(golden_ceil(1, 0), 2);
        assert_eq!(golden_ceil(-1, 0), -1);
        assert_eq!(golden_ceil(2, 5), 9);
        assert_eq!(golden_ceil(3, 5), 10);
    }

    #[test]
    fn isomorphic_detects_relabeling() {
        use Color::*;
        let a = ColoredGraph::from_edges([(0, 1, Red), (1, 2, Blue)]).unwrap();
        let b = ColoredGraph::from_edges([(5, 7, Blue), (7, 9, Red)]).unwrap();
        let c = ColoredGraph::from_edges([(0, 1, Red), (1, 2, Red)]).unwrap();
        assert!(isomorphic(&a, &b));
        assert!(!isomorphic(&a, &c));
    }
}
