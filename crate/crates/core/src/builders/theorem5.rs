//! Builder for red odd cycles versus connected blue graphs with `n`
//! vertices and `m` edges: first a blue `P_n` (or a red triangle), then
//! every pair inside the first `k` path vertices.

use crate::board::{BlueTarget, Color, ColoredGraph, RedTarget, TargetSpec, Vertex};
use crate::strategy::{Builder, StrategyError};

use super::theorem3::Theorem3Builder;

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Smallest `k` in `1..=n` with `m <= n - k + C(floor(k/2), 2) + C(ceil(k/2), 2)`.
pub fn compute_k(n: usize, m: usize) -> Result<usize, StrategyError> {
    if n < 3 || m < n || 4 * m > (n - 1) * (n - 1) {
        return Err(StrategyError::Precondition(format!(
            "needs n >= 3 and n <= m <= (n-1)^2/4, got n={n} m={m}"
        )));
    }
    (1..=n)
        .find(|&k| m <= n - k + choose2(k / 2) + choose2(k.div_ceil(2)))
        .ok_or_else(|| StrategyError::Precondition(format!("no k fits n={n} m={m}")))
}

/// Round bound `3n + C(k,2) - k - 3`.
pub fn theorem5_bound(n: usize, m: usize) -> Result<usize, StrategyError> {
    let k = compute_k(n, m)?;
    Ok(3 * n + choose2(k) - k - 3)
}

#[derive(Debug, Clone)]
pub struct Theorem5Builder {
    n: usize,
    m: usize,
    k: Option<usize>,
    phase_a: Theorem3Builder,
    /// Pairs still to propose inside the chosen `k` vertices.
    clique: Option<Vec<(Vertex, Vertex)>>,
}

impl Theorem5Builder {
    pub fn new(n: usize, m: usize) -> Result<Self, StrategyError> {
        let k = if m + 1 == n {
            None
        } else {
            Some(compute_k(n, m)?)
        };
        Ok(Theorem5Builder {
            n,
            m,
            k,
            phase_a: Theorem3Builder::new(n)?,
            clique: None,
        })
    }

    pub fn for_target(t: &TargetSpec) -> Result<Self, StrategyError> {
        match (t.red, t.blue) {
            (RedTarget::OddCycle | RedTarget::Triangle, BlueTarget::Connected { n, m }) => Self::new(n, m),
            _ => Err(StrategyError::Precondition(format!("theorem5 plays odd cycles against con:N:M, not {t}"))),
        }
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Whether the Turán stage has started.
    pub fn in_clique_stage(&self) -> bool {
        self.clique.is_some()
    }
}

impl Builder for Theorem5Builder {
    fn name(&self) -> &str {
        "theorem5"
    }

    fn propose(&mut self, board: &ColoredGraph) -> Result<(Vertex, Vertex), StrategyError> {
        if self.clique.is_none() {
            let Some(k) = self.k else {
                return self.phase_a.propose(board);
            };
            if !board.has_path_at_least(Color::Blue, self.n)? {
                return self.phase_a.propose(board);
            }
            let path = board.longest_path_witness(Color::Blue)?;
            let mut verts: Vec<Vertex> = path[..k].to_vec();
            verts.sort_unstable();
            let mut pairs = Vec::new();
            for (i, &a) in verts.iter().enumerate() {
                for &b in &verts[i + 1..] {
                    if !board.has_edge(a, b) {
                        pairs.push((a, b));
                    }
                }
            }
            pairs.reverse();
            self.clique = Some(pairs);
        }
        let pairs = self.clique.as_mut().expect("clique stage");
        while let Some(e) = pairs.pop() {
            if !board.has_edge(e.0, e.1) {
                return Ok(e);
            }
        }
        Err(StrategyError::Invariant(format!(
            "every pair inside the chosen {} vertices is colored and the game goes on",
            self.k.unwrap_or(0)
        )))
    }

    fn box_clone(&self) -> Box<dyn Builder> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Verdict;

    #[test]
    fn compute_k_examples() {
        // direct evaluation: k=4 gives 5+1+1=7, k=5 gives 4+1+3=8, k=6 gives 3+3+3=9
        assert_eq!(compute_k(9, 9).unwrap(), 6);
        assert_eq!(compute_k(100, 100).unwrap(), 6);
        assert!(compute_k(5, 4).is_err());
        assert!(compute_k(4, 4).is_err());
        for n in 3..40 {
            for m in n..=(n - 1) * (n - 1) / 4 {
                let k = compute_k(n, m).unwrap();
                let fits = |k: usize| m <= n - k + choose2(k / 2) + choose2(k.div_ceil(2));
                assert!(fits(k) && (1..k).all(|j| !fits(j)));
            }
        }
    }

    fn play(n: usize, m: usize, mut reply: impl FnMut(Vertex, Vertex) -> Color) -> usize {
        let t = TargetSpec::odd_connected(n, m);
        let mut b = Theorem5Builder::new(n, m).unwrap();
        let mut g = ColoredGraph::new();
        for round in 1.. {
            let (u, v) = b.propose(&g).unwrap();
            g.add_edge(u, v, reply(u, v)).unwrap();
            if let Verdict::GameOver(_) = g.referee_after(&t, u, v).unwrap() {
                return round;
            }
        }
        unreachable!()
    }

    #[test]
    fn bounds_hold_for_simple_painters() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for (n, m) in [(9, 9), (9, 16), (12, 15)] {
            let bound = theorem5_bound(n, m).unwrap();
            assert!(play(n, m, |_, _| Color::Blue) <= bound);
            assert!(play(n, m, |_, _| Color::Red) <= bound);
            for _ in 0..50 {
                let rounds = play(n, m, |_, _| if rng.gen_bool(0.5) { Color::Red } else { Color::Blue });
                assert!(rounds <= bound, "({n},{m}) {rounds} > {bound}");
            }
        }
    }

    #[test]
    fn tree_case_delegates() {
        let b = Theorem5Builder::new(6, 5).unwrap();
        assert_eq!(b.k(), None);
        assert!(play(6, 5, |_, _| Color::Blue) <= 3 * 6 - 4);
    }
}
