use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use online_ramsey::arena::{play_named, verify_suite, write_transcript, Scale, SUITES};
use online_ramsey::board::{BlueTarget, RedTarget, TargetSpec};
use online_ramsey::builders::{compute_k, theorem5_bound};
use online_ramsey::painter::{lower_bound, triangle_path_lower};
use online_ramsey::solver::{SolveValue, Solver, SolverConfig};
use online_ramsey::strategy::StrategyRegistry;

#[derive(Parser)]
#[command(name = "ramsey-arena", about = "Builder/Painter online Ramsey games", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Play one game between a Builder and a Painter.
    Play {
        #[arg(long, value_parser = ["c3", "codd"])]
        red: String,
        /// path:N, con:N:M or aux:N:M
        #[arg(long)]
        blue: String,
        #[arg(long, value_parser = ["theorem3", "theorem5", "random"])]
        builder: String,
        #[arg(long, value_parser = ["potential", "greedy", "random", "allred", "allblue"])]
        painter: String,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_rounds: u32,
        /// Write the game record here.
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
    /// Exact game value by minimax search.
    Solve {
        #[arg(long, value_parser = ["c3", "p3"])]
        red: String,
        /// path:N
        #[arg(long)]
        blue: String,
        #[arg(long)]
        budget: u32,
        /// Restrict play to vertices 0..V.
        #[arg(long)]
        board: Option<usize>,
        /// Write the winning decision tree here.
        #[arg(long)]
        emit_strategy: Option<PathBuf>,
    },
    /// Round bounds for the odd-cycle games.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = SUITES)]
        suite: String,
    },
}

fn target(red: &str, blue: &str) -> Result<TargetSpec> {
    let red: RedTarget = red.parse()?;
    let blue: BlueTarget = blue.parse()?;
    Ok(TargetSpec::new(red, blue)?)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Play {
            red,
            blue,
            builder,
            painter,
            seed,
            max_rounds,
            transcript,
        } => {
            if max_rounds < 1 {
                bail!("--max-rounds must be at least 1");
            }
            let t = target(&red, &blue)?;
            let r = play_named(&StrategyRegistry::default(), &builder, &painter, &t, max_rounds, seed)?;
            println!("target {t}");
            println!("builder {} painter {} seed {}", r.builder, r.painter, r.seed);
            println!("outcome {} after {} rounds", r.outcome, r.rounds);
            if let Some(path) = transcript {
                write_transcript(&r, &path).with_context(|| format!("writing {}", path.display()))?;
                println!("transcript {}", path.display());
            }
        }
        Cmd::Solve {
            red,
            blue,
            budget,
            board,
            emit_strategy,
        } => {
            let t = target(&red, &blue)?;
            if !matches!(t.blue, BlueTarget::Path(_)) {
                bail!("solve takes --blue path:N");
            }
            let start = Instant::now();
            let solver = Solver::new(&t, board, SolverConfig::from_env())?;
            let r = solver.solve(budget, emit_strategy.is_some())?;
            println!("target {t}");
            if let Some(b) = board {
                println!("board {b} vertices");
            }
            println!("value {}", r.value);
            println!(
                "expanded {} table {} hits {} time {:.3}s",
                r.stats.expanded,
                r.stats.table_size,
                r.stats.table_hits,
                start.elapsed().as_secs_f64()
            );
            if let Some(path) = emit_strategy {
                let Some(tree) = r.tree else {
                    bail!("no strategy within budget {budget}");
                };
                std::fs::write(&path, tree.to_string()).with_context(|| format!("writing {}", path.display()))?;
                println!("strategy {} ({} leaves, depth {})", path.display(), tree.leaves(), tree.depth());
            }
            if r.value == SolveValue::AboveBudget {
                return Ok(ExitCode::from(2));
            }
        }
        Cmd::Bound { n, m } => {
            println!("lower_bound({n},{m}) = {}", lower_bound(n, m)?);
            match (compute_k(n, m), theorem5_bound(n, m)) {
                (Ok(k), Ok(u)) => println!("upper 3n+C(k,2)-k-3 = {u} with k = {k}"),
                (Err(e), _) | (_, Err(e)) => println!("upper 3n+C(k,2)-k-3: not applicable ({e})"),
            }
            if n >= 3 {
                println!("C3/P{n}: {} <= r <= {}", triangle_path_lower(n)?, 3 * n - 4);
            } else {
                println!("C3/P{n}: endpoints need n >= 3");
            }
        }
        Cmd::Verify { suite } => {
            let r = verify_suite(&suite, &Scale::FULL)?;
            r.write_to(&mut std::io::stdout().lock())?;
            if !r.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
