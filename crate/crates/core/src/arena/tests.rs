use super::*;
use crate::board::{Color, TargetSpec};
use crate::builders::{RandomBuilder, Theorem3Builder};
use crate::painter::{lower_bound, ConstantPainter, PotentialPainter};
use crate::strategy::{Builder, StrategyError, StrategyRegistry};

#[test]
fn theorem3_vs_potential_on_p5() {
    let t = TargetSpec::triangle_path(5);
    let r = play_game(&mut Theorem3Builder::new(5).unwrap(), &mut PotentialPainter::new(), &t, 20, 0).unwrap();
    assert!(r.outcome.is_hit());
    assert!((10..=11).contains(&r.rounds), "{}", r.rounds);
    r.replay().unwrap();
}

#[test]
fn theorem3_vs_all_blue() {
    let t = TargetSpec::triangle_path(6);
    let r = play_game(&mut Theorem3Builder::new(6).unwrap(), &mut ConstantPainter(Color::Blue), &t, 30, 0).unwrap();
    assert_eq!(r.outcome, Outcome::BlueFamilyHit);
    assert!(r.rounds <= 14);
}

#[test]
fn random_builder_never_gets_red_odd_cycle() {
    let t = TargetSpec::odd_auxiliary(4, 4);
    let lower = lower_bound(4, 4).unwrap();
    assert_eq!(lower, 9);
    for seed in 0..200 {
        let r = play_game(&mut RandomBuilder::new(seed), &mut PotentialPainter::new(), &t, 200, seed).unwrap();
        assert!(!matches!(r.outcome, Outcome::RedFamilyHit | Outcome::DoubleHit));
        if r.outcome.is_hit() {
            assert!(r.rounds as i64 >= lower, "seed {seed}: {}", r.rounds);
        }
    }
}

#[test]
fn max_rounds_aborts() {
    let t = TargetSpec::triangle_path(8);
    let r = play_game(&mut Theorem3Builder::new(8).unwrap(), &mut PotentialPainter::new(), &t, 3, 0).unwrap();
    assert_eq!((r.outcome, r.rounds), (Outcome::Aborted, 3));
    r.replay().unwrap();
}

#[derive(Clone)]
struct Repeater;

impl Builder for Repeater {
    fn name(&self) -> &str {
        "repeater"
    }
    fn propose(&mut self, _: &crate::board::ColoredGraph) -> Result<(u32, u32), StrategyError> {
        Ok((0, 1))
    }
    fn box_clone(&self) -> Box<dyn Builder> {
        Box::new(self.clone())
    }
}

#[test]
fn illegal_proposal_is_blamed_on_builder() {
    let t = TargetSpec::triangle_path(4);
    let e = play_game(&mut Repeater, &mut ConstantPainter(Color::Blue), &t, 10, 0).unwrap_err();
    match e {
        ArenaError::Strategy { role, name, round, .. } => {
            assert_eq!((role, name.as_str(), round), ("builder", "repeater", 2));
        }
        other => panic!("{other}"),
    }
}

#[test]
fn play_is_deterministic_and_transcripts_round_trip() {
    let reg = StrategyRegistry::default();
    let t = TargetSpec::odd_auxiliary(5, 6);
    let a = play_named(&reg, "random", "random", &t, 60, 42).unwrap();
    let b = play_named(&reg, "random", "random", &t, 60, 42).unwrap();
    let text = format_transcript(&a);
    assert_eq!(text, format_transcript(&b));
    assert_eq!(parse_transcript(&text).unwrap(), a);
}

#[test]
fn flipped_color_is_a_replay_mismatch() {
    let t = TargetSpec::triangle_path(4);
    let r = play_game(&mut Theorem3Builder::new(4).unwrap(), &mut PotentialPainter::new(), &t, 20, 0).unwrap();
    let text = format_transcript(&r);
    let last = text.lines().last().unwrap();
    let flipped = if last.ends_with('R') { last.replace(" R", " B") } else { last.replace(" B", " R") };
    let edited = text.replace(last, &flipped);
    assert!(matches!(parse_transcript(&edited), Err(ArenaError::ReplayMismatch(_))));
}

#[test]
fn empty_aborted_transcript_is_valid() {
    let t = TargetSpec::triangle_path(4);
    let r = GameResult {
        target: t,
        builder: "theorem3".into(),
        painter: "potential".into(),
        seed: 0,
        max_rounds: 0,
        rounds: 0,
        outcome: Outcome::Aborted,
        moves: vec![],
    };
    let text = format_transcript(&r);
    assert!(text.lines().all(|l| l.starts_with('#')));
    assert_eq!(parse_transcript(&text).unwrap(), r);
}

#[test]
fn malformed_transcripts_are_rejected() {
    assert!(matches!(parse_transcript("1 0 1 R\n"), Err(ArenaError::Parse(_))));
    assert!(matches!(parse_transcript("# version 9\n"), Err(ArenaError::Parse(_))));
}

#[test]
fn file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("game.txt");
    let reg = StrategyRegistry::default();
    let r = play_named(&reg, "theorem3", "potential", &TargetSpec::triangle_path(7), 27, 1).unwrap();
    write_transcript(&r, &path).unwrap();
    assert_eq!(read_transcript(&path).unwrap(), r);
    assert!(matches!(read_transcript(dir.path().join("missing")), Err(ArenaError::Io(_))));
}

#[test]
fn suites_pass_at_smoke_scale() {
    for name in SUITES {
        let r = verify_suite(name, &Scale::SMOKE).unwrap();
        let mut out = Vec::new();
        r.write_to(&mut out).unwrap();
        assert!(r.passed(), "{}", String::from_utf8_lossy(&out));
    }
    assert!(matches!(verify_suite("nope", &Scale::SMOKE), Err(ArenaError::UnknownSuite(_))));
}
