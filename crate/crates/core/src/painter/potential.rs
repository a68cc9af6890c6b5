//! The golden-ratio potential Painter.
//!
//! Painter keeps the board red-bipartite. For a component `H` with
//! red-bipartition `(V1, V2)` the side weights are `p(Vi) = |Vi| phi + |E[Vi]|`
//! and the component potential is `g(p(V1), p(V2))` with
//!
//! ```text
//! g(x, y) = phi * max(x, y) - phi + max(max(x, y) - phi^3, min(x, y))
//! ```
//!
//! Untouched vertices contribute 0 and the board potential is the sum over
//! components. Each coloring decision below raises the board potential by at
//! most `phi + 1`, which is checked exactly after every decision.

use crate::board::{side_potentials, BoardError, Color, ColoredGraph, SideTally, Vertex};
use crate::golden::GoldenNumber;
use crate::strategy::{Painter, StrategyError};

const PHI: GoldenNumber = GoldenNumber::PHI;

/// Largest potential increase a single round may cause: `phi + 1`.
pub const MAX_STEP: GoldenNumber = GoldenNumber::PHI_SQ;

pub fn g_fun(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber {
    let hi = x.max(y);
    let lo = x.min(y);
    PHI * hi - PHI + (hi - GoldenNumber::PHI_CUBED).max(lo)
}

pub fn tally_potential(t: SideTally) -> GoldenNumber {
    let [p0, p1] = side_potentials(t);
    g_fun(p0, p1)
}

/// Potential of the component containing `v` (0 if `v` is untouched).
pub fn component_potential(board: &ColoredGraph, v: Vertex) -> Result<GoldenNumber, BoardError> {
    match board.component_is_red_bipartite(v) {
        None => Ok(GoldenNumber::ZERO),
        Some(false) => Err(BoardError::NotRedBipartite(v)),
        Some(true) => Ok(tally_potential(board.component_tally(v).unwrap())),
    }
}

/// Board potential recomputed from scratch.
pub fn total_potential(board: &ColoredGraph) -> Result<GoldenNumber, BoardError> {
    board
        .components()
        .into_iter()
        .map(|rep| component_potential(board, rep))
        .sum()
}

/// Change of the board potential if `uv` is colored `c`, or `None` when
/// that color would break red-bipartiteness.
pub fn potential_delta(board: &ColoredGraph, u: Vertex, v: Vertex, c: Color) -> Option<GoldenNumber> {
    let merged = tally_potential(board.preview_tally(u, v, c)?);
    let mut before = component_potential(board, u).ok()?;
    if !board.same_component(u, v) {
        before = before + component_potential(board, v).ok()?;
    }
    Some(merged - before)
}

/// Which branch of the case analysis produced a color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PainterCase {
    /// Same component, opposite sides.
    SameComponentAcross,
    /// Same component, same side.
    SameComponentInside,
    BothIsolated,
    /// One endpoint isolated and the far side outweighs the near side by
    /// more than `phi + 1`.
    OneIsolatedHeavyFarSide,
    OneIsolatedBalanced,
    /// Two components leaning in opposite directions, both by more than 1.
    JoinOppositeStrong,
    JoinOppositeWeak,
    JoinSameDirection,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub color: Color,
    pub case: PainterCase,
    pub delta: GoldenNumber,
}

fn check_edge(board: &ColoredGraph, u: Vertex, v: Vertex) -> Result<(), StrategyError> {
    if u == v {
        return Err(BoardError::LoopEdge(u).into());
    }
    if board.has_edge(u, v) {
        let (a, b) = crate::board::edge_key(u, v);
        return Err(BoardError::DuplicateEdge(a, b).into());
    }
    if !board.is_red_bipartite() {
        return Err(StrategyError::Precondition("board is not red-bipartite".into()));
    }
    Ok(())
}

/// Side weights of `w`'s component as (side holding `w`, other side).
fn oriented(board: &ColoredGraph, w: Vertex) -> (GoldenNumber, GoldenNumber) {
    let (_, s) = board.side_of(w).expect("vertex on board");
    let p = board.side_potentials(w).expect("vertex on board");
    (p[s as usize], p[1 - s as usize])
}

/// Picks the color by the case analysis and verifies the resulting
/// potential step.
pub fn choose_color(board: &ColoredGraph, u: Vertex, v: Vertex) -> Result<Decision, StrategyError> {
    use PainterCase::*;
    check_edge(board, u, v)?;
    let one = GoldenNumber::ONE;
    let (color, case) = match (board.side_of(u), board.side_of(v)) {
        (Some((ru, su)), Some((rv, sv))) if ru == rv => {
            if su != sv {
                (Color::Red, SameComponentAcross)
            } else {
                (Color::Blue, SameComponentInside)
            }
        }
        (None, None) => (Color::Red, BothIsolated),
        (Some(_), None) | (None, Some(_)) => {
            let w = if board.contains_vertex(u) { u } else { v };
            let (near, far) = oriented(board, w);
            if far > near + MAX_STEP {
                (Color::Blue, OneIsolatedHeavyFarSide)
            } else {
                (Color::Red, OneIsolatedBalanced)
            }
        }
        (Some(_), Some(_)) => {
            let (p1, p2) = oriented(board, u);
            let (q1, q2) = oriented(board, v);
            // u's component heavier on u's side and v's component heavier
            // away from v's side, or the same with u and v exchanged
            let opposite = |a1: GoldenNumber, a2: GoldenNumber, b1: GoldenNumber, b2: GoldenNumber| {
                (a1 > a2 && b1 < b2).then_some(a1 > a2 + one && b1 + one < b2)
            };
            match opposite(p1, p2, q1, q2).or_else(|| opposite(q1, q2, p1, p2)) {
                Some(true) => (Color::Blue, JoinOppositeStrong),
                Some(false) => (Color::Red, JoinOppositeWeak),
                None => (Color::Red, JoinSameDirection),
            }
        }
    };
    let delta = potential_delta(board, u, v, color).ok_or_else(|| {
        StrategyError::Invariant(format!("{case:?}: coloring {u}-{v} {color} breaks red-bipartiteness"))
    })?;
    if delta > MAX_STEP {
        return Err(StrategyError::Invariant(format!(
            "{case:?}: coloring {u}-{v} {color} raises the potential by {delta}"
        )));
    }
    Ok(Decision { color, case, delta })
}

/// Among the colors that keep the board red-bipartite, the one with the
/// smaller potential step (Red on ties). Independent of the case analysis.
pub fn greedy_color_oracle(board: &ColoredGraph, u: Vertex, v: Vertex) -> Result<(Color, GoldenNumber), StrategyError> {
    check_edge(board, u, v)?;
    let red = potential_delta(board, u, v, Color::Red);
    let blue = potential_delta(board, u, v, Color::Blue);
    match (red, blue) {
        (Some(r), Some(b)) if b < r => Ok((Color::Blue, b)),
        (Some(r), _) => Ok((Color::Red, r)),
        (None, Some(b)) => Ok((Color::Blue, b)),
        (None, None) => Err(StrategyError::Invariant(format!("no color of {u}-{v} keeps red-bipartiteness"))),
    }
}

/// `ceil(phi n + m - 2 phi + 1)`, the number of rounds the potential Painter
/// survives in the auxiliary game for `(n, m)`.
pub fn lower_bound(n: usize, m: usize) -> Result<i64, BoardError> {
    if n < 1 || m + 1 < n || m > n * (n - 1) / 2 {
        return Err(BoardError::InvalidTarget(format!(
            "lower bound needs n-1 <= m <= n(n-1)/2, got n={n} m={m}"
        )));
    }
    Ok(GoldenNumber::new(n as i64 - 2, m as i64 + 1).ceil())
}

/// `ceil((phi + 1) n - 2 phi)`: the lower end of the `C_3` versus `P_n` range.
pub fn triangle_path_lower(n: usize) -> Result<i64, BoardError> {
    lower_bound(n, n.saturating_sub(1))
}

/// Painter that plays [`choose_color`] and keeps a running board potential.
#[derive(Debug, Clone, Default)]
pub struct PotentialPainter {
    total: GoldenNumber,
    rounds: u64,
    max_delta: Option<GoldenNumber>,
    last: Option<Decision>,
}

impl PotentialPainter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn potential(&self) -> GoldenNumber {
        self.total
    }

    pub fn rounds(&self) -> u64 {
        self.rounds
    }

    pub fn max_delta(&self) -> Option<GoldenNumber> {
        self.max_delta
    }

    pub fn last_decision(&self) -> Option<Decision> {
        self.last
    }
}

impl Painter for PotentialPainter {
    fn name(&self) -> &str {
        "potential"
    }

    fn color(&mut self, board: &ColoredGraph, u: Vertex, v: Vertex) -> Result<Color, StrategyError> {
        if cfg!(debug_assertions) {
            let fresh = total_potential(board)?;
            if fresh != self.total {
                return Err(StrategyError::Invariant(format!(
                    "cached potential {} differs from recomputed {fresh}",
                    self.total
                )));
            }
        }
        let d = choose_color(board, u, v)?;
        self.total = self.total + d.delta;
        self.rounds += 1;
        self.max_delta = Some(self.max_delta.map_or(d.delta, |m| m.max(d.delta)));
        self.last = Some(d);
        Ok(d.color)
    }

    fn box_clone(&self) -> Box<dyn Painter> {
        Box::new(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::TargetSpec;
    use rand::{Rng, SeedableRng};
    use Color::{Blue, Red};

    fn g(a: i64, b: i64) -> GoldenNumber {
        GoldenNumber::new(a, b)
    }

    #[test]
    fn g_fun_examples() {
        assert_eq!(g_fun(PHI, PHI), g(1, 1));
        // single blue edge: sides 2 phi + 1 and 0
        assert_eq!(g_fun(g(2, 1), g(0, 0)), g(2, 2));
    }

    proptest::proptest! {
        #[test]
        fn g_is_symmetric(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            proptest::prop_assert_eq!(g_fun(g(a, b), g(c, d)), g_fun(g(c, d), g(a, b)));
        }

        #[test]
        fn g_shift_law(a in 0i64..50, b in 0i64..50, c in 0i64..50, d in 0i64..50, e in 0i64..50, f in 0i64..50) {
            let (x, y, z) = (g(a, b), g(c, d), g(e, f));
            proptest::prop_assert_eq!(g_fun(x + z, y + z) - g_fun(x, y), GoldenNumber::PHI_SQ * z);
        }
    }

    #[test]
    fn component_potential_examples() {
        let empty = ColoredGraph::new();
        assert_eq!(component_potential(&empty, 7).unwrap(), GoldenNumber::ZERO);
        let red = ColoredGraph::from_edges([(0, 1, Red)]).unwrap();
        assert_eq!(component_potential(&red, 0).unwrap(), g(1, 1));
        let blue = ColoredGraph::from_edges([(0, 1, Blue)]).unwrap();
        assert_eq!(component_potential(&blue, 1).unwrap(), g(2, 2));
        let tri = ColoredGraph::from_edges([(0, 1, Red), (1, 2, Red), (0, 2, Red)]).unwrap();
        assert_eq!(component_potential(&tri, 0), Err(BoardError::NotRedBipartite(0)));
    }

    #[test]
    fn choose_color_examples() {
        let empty = ColoredGraph::new();
        let d = choose_color(&empty, 0, 1).unwrap();
        assert_eq!((d.color, d.case, d.delta), (Red, PainterCase::BothIsolated, g(1, 1)));

        let path = ColoredGraph::from_edges([(0, 1, Red), (1, 2, Blue)]).unwrap();
        let d = choose_color(&path, 0, 2).unwrap();
        assert_eq!((d.color, d.delta), (Red, GoldenNumber::ZERO));

        // 0 alone on its side, far side {1,2,3} with 2 inner blue edges:
        // p = phi versus 3 phi + 2 > phi + phi + 1
        let heavy = ColoredGraph::from_edges([(0, 1, Red), (1, 2, Blue), (2, 3, Blue)]).unwrap();
        let d = choose_color(&heavy, 0, 9).unwrap();
        assert_eq!((d.color, d.case), (Blue, PainterCase::OneIsolatedHeavyFarSide));
        assert!(d.delta <= MAX_STEP);

        let d = choose_color(&path, 0, 1);
        assert!(matches!(d, Err(StrategyError::Board(BoardError::DuplicateEdge(0, 1)))));
    }

    #[test]
    fn greedy_oracle_examples() {
        let empty = ColoredGraph::new();
        assert_eq!(greedy_color_oracle(&empty, 0, 1).unwrap(), (Red, g(1, 1)));
        let p = ColoredGraph::from_edges([(0, 1, Red), (1, 2, Red)]).unwrap();
        assert_eq!(greedy_color_oracle(&p, 0, 2).unwrap().0, Blue);
        assert_eq!(greedy_color_oracle(&p, 0, 1).err(), Some(BoardError::DuplicateEdge(0, 1).into()));
        let q = ColoredGraph::from_edges([(0, 1, Red), (2, 3, Red), (1, 2, Blue)]).unwrap();
        assert_eq!(greedy_color_oracle(&q, 0, 2).unwrap(), (Red, GoldenNumber::ZERO));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(3, 2).unwrap(), 5);
        assert_eq!(lower_bound(4, 3).unwrap(), 8);
        assert_eq!(lower_bound(3, 3).unwrap(), 6);
        assert_eq!(lower_bound(4, 4).unwrap(), 9);
        assert!(lower_bound(4, 2).is_err());
        assert!(lower_bound(4, 7).is_err());
        assert_eq!(triangle_path_lower(5).unwrap(), 10);
    }

    // Random Builder moves over a small pool; every decision must keep the
    // board red-bipartite with step at most phi + 1, the cache must match a
    // recomputation, and components obey f(H) >= (phi+1) a(H) - phi - phi^3.
    #[test]
    fn random_play_keeps_invariants() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..300 {
            let mut board = ColoredGraph::new();
            let mut painter = PotentialPainter::new();
            let pool = rng.gen_range(4..16);
            for _ in 0..60 {
                let u = rng.gen_range(0..pool);
                let v = rng.gen_range(0..pool);
                if u == v || board.has_edge(u, v) {
                    continue;
                }
                let greedy = greedy_color_oracle(&board, u, v).unwrap();
                let c = painter.color(&board, u, v).unwrap();
                let d = painter.last_decision().unwrap();
                assert!(greedy.1 <= d.delta && d.delta <= MAX_STEP);
                board.add_edge(u, v, c).unwrap();
                assert!(board.is_red_bipartite());
                assert!(!board.has_red_odd_cycle());
                assert_eq!(total_potential(&board).unwrap(), painter.potential());
                for rep in board.components() {
                    let [p0, p1] = board.side_potentials(rep).unwrap();
                    let a = p0.max(p1);
                    let f = component_potential(&board, rep).unwrap();
                    assert!(f >= GoldenNumber::PHI_SQ * a - PHI - GoldenNumber::PHI_CUBED);
                }
            }
        }
    }

    #[test]
    fn aux_hits_respect_lower_bound() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(22);
        for (n, m) in [(3usize, 2usize), (4, 3), (4, 4), (5, 6)] {
            let t = TargetSpec::odd_auxiliary(n, m);
            let bound = lower_bound(n, m).unwrap();
            for _ in 0..200 {
                let mut board = ColoredGraph::new();
                let mut painter = PotentialPainter::new();
                let pool = rng.gen_range(n as u32..12);
                let mut round = 0;
                let full = (pool * (pool - 1) / 2) as usize;
                while round < 80 && board.edge_count() < full {
                    let u = rng.gen_range(0..pool);
                    let v = rng.gen_range(0..pool);
                    if u == v || board.has_edge(u, v) {
                        continue;
                    }
                    round += 1;
                    let c = painter.color(&board, u, v).unwrap();
                    board.add_edge(u, v, c).unwrap();
                    if board.referee(&t).unwrap().is_over() {
                        assert!(round as i64 >= bound, "(n,m)=({n},{m}) hit at {round} < {bound}");
                        break;
                    }
                }
            }
        }
    }
}
