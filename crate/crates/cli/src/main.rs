use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use aztec_core::coupling::{approx_decimal, CouplingEngine, Formula};
use aztec_core::heatmap::{heatmap, write_csv, HeatmapRequest};
use aztec_core::kasteleyn::{count_matchings_det, SignConvention};
use aztec_core::lattice::{build_diamond, DiamondCoord};
use aztec_core::pattern_file::parse_pattern_file;
use aztec_core::verify::{run_verification, VerifyLevel};
use aztec_core::{BigInt, BigRational};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "aztec", version, about = "Exact local statistics of random domino tilings of the Aztec diamond")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of domino tilings of the order-n diamond.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// One coupling value c(v, w), exact and approximate.
    Coupling {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// White square as X,Y.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        white: (i64, i64),
        /// Black square as X,Y.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        black: (i64, i64),
        /// Print the signed Kasteleyn inverse entry instead.
        #[arg(long)]
        signed: bool,
    },
    /// Probability that a random tiling contains every domino of a pattern file.
    Prob {
        #[arg(long)]
        pattern: PathBuf,
    },
    /// CSV of signed coupling values over all hole positions for fixed offsets.
    Heatmap {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        d0: i64,
        #[arg(long, allow_hyphen_values = true)]
        d1: i64,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Allow n above the size guard.
        #[arg(long)]
        force: bool,
        /// Worker threads; defaults to all cores.
        #[arg(long, env = "AZTEC_THREADS")]
        threads: Option<usize>,
    },
    /// Check the closed forms against the determinant and enumeration oracles.
    Verify {
        #[arg(long, value_enum, default_value_t = Level::Quick)]
        level: Level,
        /// Run against a deliberately broken formula.
        #[arg(long, value_enum, hide = true)]
        mutate: Option<Mutation>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mutation {
    Transposed,
    OffByOne,
    DroppedNegation,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected X,Y, got {s:?}"))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((p(a)?, p(b)?))
}

fn fraction(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `Some(e)` when `k = 2^e`.
fn power_of_two(k: &BigInt) -> Option<u64> {
    let e = k.trailing_zeros()?;
    (k == &(BigInt::from(1) << e as usize)).then_some(e)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cmd: Command) -> Result<u8, String> {
    let mut out = io::stdout().lock();
    match cmd {
        Command::Count { n } => {
            let b = build_diamond(n).map_err(|e| e.to_string())?;
            let k = count_matchings_det(&b, SignConvention::default()).map_err(|e| e.to_string())?;
            match power_of_two(&k) {
                Some(e) => writeln!(out, "{k} (= 2^{e})"),
                None => writeln!(out, "{k}"),
            }
            .map_err(|e| e.to_string())?;
        }
        Command::Coupling { n, white, black, signed } => {
            let eng = CouplingEngine::new(n).map_err(|e| e.to_string())?;
            let (v, w) = (DiamondCoord::white(white.0, white.1), DiamondCoord::black(black.0, black.1));
            let c =
                if signed { eng.coupling_signed(&v, &w) } else { eng.coupling(&v, &w) }.map_err(|e| e.to_string())?;
            let k = c.numerator_at_scale(n).expect("coupling scale is at most n");
            writeln!(out, "{k} / 2^{n}").map_err(|e| e.to_string())?;
            writeln!(out, "~ {}", approx_decimal(&c.to_rational(), 12)).map_err(|e| e.to_string())?;
        }
        Command::Prob { pattern } => {
            let text = std::fs::read_to_string(&pattern).map_err(|e| format!("{}: {e}", pattern.display()))?;
            let f = parse_pattern_file(&text).map_err(|e| format!("{}: {e}", pattern.display()))?;
            let p = aztec_core::coupling::pattern_probability(f.n, &f.pattern).map_err(|e| e.to_string())?;
            writeln!(out, "{}", fraction(&p)).map_err(|e| e.to_string())?;
            writeln!(out, "~ {}", approx_decimal(&p, 12)).map_err(|e| e.to_string())?;
        }
        Command::Heatmap { n, d0, d1, output, force, threads } => {
            let cells = heatmap(&HeatmapRequest { n, d0, d1 }, force, threads).map_err(|e| e.to_string())?;
            match output {
                Some(path) => {
                    let f = File::create(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                    let mut w = BufWriter::new(f);
                    write_csv(&cells, &mut w).and_then(|_| w.flush()).map_err(|e| e.to_string())?;
                }
                None => write_csv(&cells, BufWriter::new(&mut out)).map_err(|e| e.to_string())?,
            }
        }
        Command::Verify { level, mutate } => {
            let level = match level {
                Level::Quick => VerifyLevel::Quick,
                Level::Full => VerifyLevel::Full,
            };
            let formula = match mutate {
                None => Formula::Correct,
                Some(Mutation::Transposed) => Formula::Transposed,
                Some(Mutation::OffByOne) => Formula::OffByOne,
                Some(Mutation::DroppedNegation) => Formula::DroppedNegation,
            };
            let report = run_verification(level, formula);
            writeln!(out, "{report}").map_err(|e| e.to_string())?;
            if !report.all_passed() {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(0)
}
