use super::*;
use crate::board::{BlueTarget, RedTarget};

fn tp(red: RedTarget, n: usize) -> TargetSpec {
    TargetSpec::new(red, BlueTarget::Path(n)).unwrap()
}

fn value(r: &SolveResult) -> Option<u32> {
    match r.value {
        SolveValue::Rounds(v) => Some(v),
        SolveValue::AboveBudget => None,
    }
}

/// Plain minimax without table, canonical forms or move deduplication.
fn naive_wins(t: &DenseTarget, limit: usize, b: &DenseBoard, d: u32) -> bool {
    d > 0
        && b.moves(limit).into_iter().any(|(u, v)| {
            [Color::Red, Color::Blue]
                .into_iter()
                .all(|c| b.completes(t, u, v, c) || naive_wins(t, limit, &b.with_edge(u, v, c), d - 1))
        })
}

#[test]
fn small_exact_values() {
    let r = solve(&tp(RedTarget::Triangle, 3), 6).unwrap();
    assert_eq!(value(&r), Some(5));
    let r = solve(&tp(RedTarget::Path(3), 3), 4).unwrap();
    assert_eq!(value(&r), Some(3));
    assert_eq!(r.tree.as_ref().unwrap().depth(), 3);
    let r = solve(&tp(RedTarget::Path(3), 4), 6).unwrap();
    assert_eq!(value(&r), Some(4));
}

#[test]
fn values_respect_general_lower_bound() {
    for (t, budget) in [
        (tp(RedTarget::Triangle, 3), 6),
        (tp(RedTarget::Path(3), 3), 5),
        (tp(RedTarget::Path(3), 4), 5),
        (tp(RedTarget::Path(2), 3), 4),
        (tp(RedTarget::Path(3), 2), 4),
    ] {
        let v = value(&solve(&t, budget).unwrap()).unwrap();
        let lower = t.red_edges().unwrap() + t.blue_edges().unwrap() - 1;
        assert!(v as usize >= lower, "{t}: {v} < {lower}");
    }
}

#[test]
fn trivial_budgets_and_boards() {
    let t = tp(RedTarget::Triangle, 3);
    assert_eq!(solve(&t, 0).unwrap().value, SolveValue::AboveBudget);
    assert_eq!(solve_restricted(&t, 20, 2).unwrap().value, SolveValue::AboveBudget);
    assert!(matches!(solve(&t, 0).map(|r| extract_strategy(&r)), Ok(Err(SolverError::NotSolved))));
    assert!(Solver::new(&t, Some(1), SolverConfig::default()).is_err());
    let bad = TargetSpec::odd_connected(3, 2);
    assert!(matches!(solve(&bad, 3), Err(SolverError::InvalidTarget(_))));
}

#[test]
fn already_finished_board_wins_at_depth_zero() {
    let t = tp(RedTarget::Triangle, 3);
    let s = Solver::new(&t, None, SolverConfig::default()).unwrap();
    let b = DenseBoard::new().with_edge(0, 1, Color::Blue).with_edge(1, 2, Color::Blue);
    assert!(s.wins_within(&b, 0).unwrap());
}

#[test]
fn k5_restricted_tree_replays() {
    let t = tp(RedTarget::Triangle, 3);
    let r = solve_restricted(&t, 5, 5).unwrap();
    let v = value(&r).unwrap();
    assert!(v <= 5);
    let tree = extract_strategy(&r).unwrap();
    assert!(tree.depth() <= 5);
    tree.verify(&t, &ColoredGraph::new(), Some(5), 5).unwrap();
    let text = tree.to_string();
    assert_eq!(text.parse::<StrategyTree>().unwrap(), tree);
}

#[test]
fn restricted_board_matches_unbounded_for_p3() {
    let t = tp(RedTarget::Triangle, 3);
    let a = value(&solve(&t, 6).unwrap());
    let b = value(&solve_restricted(&t, 6, 5).unwrap());
    assert_eq!(a, b);
}

#[test]
fn memoized_matches_naive_minimax_near_the_root() {
    for t in [tp(RedTarget::Triangle, 3), tp(RedTarget::Path(3), 3), tp(RedTarget::Triangle, 4)] {
        let dt = DenseTarget::from_spec(&t).unwrap();
        let s = Solver::new(&t, None, SolverConfig::default()).unwrap();
        // all positions reachable in at most 4 rounds, each with the rest of the budget
        let mut layer = vec![DenseBoard::new()];
        let mut checked = 0;
        for depth in 0..=4u32 {
            let mut next = Vec::new();
            for b in &layer {
                for d in 0..=4 - depth {
                    assert_eq!(
                        s.wins_within(b, d).unwrap(),
                        naive_wins(&dt, usize::MAX, b, d),
                        "{t} {b:?} d={d}"
                    );
                    checked += 1;
                }
                for (u, v) in b.moves(usize::MAX) {
                    for c in [Color::Red, Color::Blue] {
                        if !b.completes(&dt, u, v, c) {
                            next.push(b.with_edge(u, v, c));
                        }
                    }
                }
            }
            layer = next;
        }
        assert!(checked > 500, "{checked}");
    }
}

#[test]
fn exhaustive_check_with_replayed_tree() {
    // a Builder that follows a solved tree
    #[derive(Clone)]
    struct TreeBuilder(StrategyTree);
    impl Builder for TreeBuilder {
        fn name(&self) -> &str {
            "tree"
        }
        fn propose(&mut self, board: &ColoredGraph) -> Result<(u32, u32), StrategyError> {
            let mut node = &self.0;
            for &(_, _, c) in board.history() {
                node = node.child(c).ok_or(StrategyError::NoMove)?;
            }
            match node {
                StrategyTree::Move { u, v, .. } => Ok((*u, *v)),
                StrategyTree::Win { .. } => Err(StrategyError::GameAlreadyOver),
            }
        }
        fn box_clone(&self) -> Box<dyn Builder> {
            Box::new(self.clone())
        }
    }
    let t = tp(RedTarget::Triangle, 3);
    let tree = solve(&t, 5).unwrap().tree.unwrap();
    let b = TreeBuilder(tree);
    let ok = exhaustive_painter_check(&b, &t, 5).unwrap();
    assert!(ok.holds);
    assert_eq!(ok.max_rounds, 5);
    let short = exhaustive_painter_check(&b, &t, 4).unwrap();
    assert!(!short.holds);
    assert_eq!(short.counterexample.unwrap().len(), 4);
    assert!(exhaustive_painter_check(&b, &t, 31).is_err());
}
