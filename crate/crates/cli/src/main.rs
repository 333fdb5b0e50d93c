use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};

use gtg_core::repcheck::verify_all;
use gtg_core::search::{run_search, search_all, verify_table1, SearchError, DESK_MAX_ELL};
use gtg_core::smallcancel::{find_decomposition, verify_table2, Constraints};
use gtg_core::trace::{bound_constants, classify_elementary, figure_data, Curve};
use gtg_core::words::{BlockList, Interval, Word};
use gtg_core::{trace_poly, PieceIndex, ScreenMode, SearchParams};

#[derive(Parser)]
#[command(
    name = "gtg",
    version,
    about = "Trace polynomials, word search and small cancellation checks for (2,3,2) words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Trace polynomial of a word and its elementary factorisation.
    Trace {
        #[arg(long, conflicts_with = "blocks", required_unless_present = "blocks")]
        word: Option<String>,
        /// Block lengths `[b1,...,bt]`, first block `(xy)^b1`.
        #[arg(long)]
        blocks: Option<String>,
    },
    /// Dihedral canonical form of a block list.
    Canon {
        #[arg(long)]
        blocks: String,
    },
    /// Exhaustive search for words with trace `λ(λ²-2)^c(λ⁴-3λ²+1)^e`.
    Search {
        #[arg(long)]
        c: u32,
        #[arg(long)]
        e: u32,
        #[command(flatten)]
        opts: SearchOpts,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Resume from and periodically save to this file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Candidates between checkpoint writes.
        #[arg(long)]
        checkpoint_every: Option<u64>,
        /// Allow lengths beyond the desk-scale limit.
        #[arg(long)]
        huge: bool,
        /// Allow non-admissible (c, e).
        #[arg(long)]
        force: bool,
    },
    /// Search every admissible (c, e) up to a length.
    SearchAll {
        #[arg(long, default_value_t = DESK_MAX_ELL)]
        max_len: usize,
        #[command(flatten)]
        opts: SearchOpts,
    },
    /// Whether a cyclic syllable interval of a word is a piece.
    Pieces {
        #[arg(long)]
        word: String,
        /// Hexadecimal syllable indices, e.g. `A..1`.
        #[arg(long)]
        interval: String,
    },
    /// Look for a factorisation of a cyclic conjugate into non-pieces.
    Decompose {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 3)]
        factors: usize,
        /// Minimum free-product length of each factor.
        #[arg(long, default_value_t = 8)]
        min: usize,
        /// Require even free-product lengths.
        #[arg(long, default_value_t = true, action = ArgAction::Set, num_args = 0..=1, default_missing_value = "true")]
        even: bool,
    },
    /// Run a built-in verification suite.
    Verify {
        #[arg(value_enum)]
        what: Suite,
    },
    /// CSV samples of a curve from the bound argument.
    FigureData {
        #[arg(long)]
        which: String,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        step: f64,
    },
}

#[derive(clap::Args)]
struct SearchOpts {
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value = "exact")]
    screen: ScreenMode,
    /// Float-screen tolerance.
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    /// Omit the wall-time line so output is byte-stable.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Table1,
    Table2,
    Bounds,
    Repcheck,
    All,
}

/// Outcome of a subcommand: success, a failed check or missing result, or
/// bad input.
enum Failure {
    Check(String),
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn search_failure(e: SearchError) -> Failure {
    match e {
        SearchError::Checkpoint { .. } => Failure::Check(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    text.parse().map_err(usage)
}

fn trace(word: Option<String>, blocks: Option<String>) -> Outcome {
    let w = match (word, blocks) {
        (Some(w), _) => parse_word(&w)?,
        (None, Some(b)) => b
            .parse::<BlockList>()
            .and_then(|b| b.to_word())
            .map_err(usage)?,
        (None, None) => {
            return Err(Failure::Usage(
                "one of --word or --blocks is required".into(),
            ))
        }
    };
    let tau = trace_poly(&w).map_err(|e| Failure::Check(e.to_string()))?;
    println!("word: {w}");
    println!("ell: {}", w.len());
    println!("tau: {tau}");
    println!("coeffs: {}", tau.to_list_string());
    match classify_elementary(&tau).map_err(|e| Failure::Check(e.to_string()))? {
        Some(form) => println!("elementary: {form}"),
        None => println!("not elementary"),
    }
    Ok(())
}

fn canon(blocks: &str) -> Outcome {
    let b: BlockList = blocks.parse().map_err(usage)?;
    println!("{}", b.canonicalize());
    Ok(())
}

fn params(c: u32, e: u32, opts: &SearchOpts) -> SearchParams {
    let mut p = SearchParams::new(c, e)
        .workers(opts.workers)
        .screen(opts.screen);
    p.tolerance = opts.tolerance;
    p
}

#[allow(clippy::too_many_arguments)]
fn search(
    c: u32,
    e: u32,
    opts: &SearchOpts,
    out: Option<PathBuf>,
    checkpoint: Option<PathBuf>,
    checkpoint_every: Option<u64>,
    huge: bool,
    force: bool,
) -> Outcome {
    let mut p = params(c, e, opts);
    p.huge = huge;
    p.force = force;
    p.checkpoint = checkpoint;
    if let Some(n) = checkpoint_every {
        p.checkpoint_every = n;
    }
    let report = run_search(&p).map_err(search_failure)?;
    let text = report.to_text(!opts.no_timing);
    match out {
        Some(path) => {
            fs::write(&path, &text)
                .map_err(|err| Failure::Check(format!("{}: {err}", path.display())))?;
            println!("{}", report.header());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn search_all_cmd(max_len: usize, opts: &SearchOpts) -> Outcome {
    let reports = search_all(max_len, &params(0, 0, opts)).map_err(search_failure)?;
    for r in &reports {
        print!("{}", r.to_text(!opts.no_timing));
    }
    Ok(())
}

fn pieces(word: &str, interval: &str) -> Outcome {
    let w = parse_word(word)?;
    let iv: Interval = interval.parse().map_err(usage)?;
    let ell = w.len();
    if iv.start >= ell || iv.end >= ell {
        return Err(Failure::Usage(format!(
            "interval {iv} out of range for ℓ = {ell}"
        )));
    }
    let idx = PieceIndex::new(&w);
    let sub = w.subword(iv);
    let kind = if idx.is_piece(iv) {
        "piece"
    } else {
        "non-piece"
    };
    println!(
        "{iv} {sub}: {kind} ({} completions)",
        idx.completions(&sub.letters())
    );
    Ok(())
}

fn decompose(word: &str, factors: usize, min: usize, even: bool) -> Outcome {
    let w = parse_word(word)?;
    if factors == 0 {
        return Err(Failure::Usage("--factors must be positive".into()));
    }
    let cons = Constraints {
        factors,
        min_len: min,
        even,
    };
    match find_decomposition(&w, cons) {
        Some(d) => {
            println!("{}", d.text(&w));
            Ok(())
        }
        None => Err(Failure::Check(format!(
            "no decomposition of {w} into {factors} non-pieces"
        ))),
    }
}

fn report(name: &str, lines: Vec<(bool, String)>) -> bool {
    let ok = lines.iter().all(|(ok, _)| *ok);
    for (_, line) in &lines {
        println!("{line}");
    }
    println!("{name}: {}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn verify(what: Suite) -> Outcome {
    let all = matches!(what, Suite::All);
    let mut ok = true;
    if all || matches!(what, Suite::Table1) {
        let lines = verify_table1()
            .into_iter()
            .map(|r| {
                (
                    r.ok,
                    format!(
                        "row {}: {} {}",
                        r.n,
                        if r.ok { "PASS" } else { "FAIL" },
                        r.detail
                    ),
                )
            })
            .collect();
        ok &= report("table1", lines);
    }
    if all || matches!(what, Suite::Table2) {
        let lines = verify_table2()
            .into_iter()
            .map(|c| (c.ok, c.to_string()))
            .collect();
        ok &= report("table2", lines);
    }
    if all || matches!(what, Suite::Bounds) {
        let k = bound_constants();
        let mut lines = vec![(
            true,
            format!(
                "|f(0.1)|={:.4} |f(1.15)|={:.4} |g(0.1)|={:.4} |g(1.15)|={:.4} |sigma0|={:.4} |sigma1|={:.4}",
                k.f_at_l0, k.f_at_l1, k.g_at_l0, k.g_at_l1, k.sigma0, k.sigma1
            ),
        )];
        lines.extend(
            k.inequalities()
                .into_iter()
                .map(|(name, ok)| (ok, format!("{} {name}", if ok { "PASS" } else { "FAIL" }))),
        );
        ok &= report("bounds", lines);
    }
    if all || matches!(what, Suite::Repcheck) {
        let lines = verify_all()
            .into_iter()
            .map(|c| (c.ok, c.to_string()))
            .collect();
        ok &= report("repcheck", lines);
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Check("verification failed".into()))
    }
}

fn figure(which: &str, from: f64, to: f64, step: f64) -> Outcome {
    let curve: Curve = which.parse().map_err(Failure::Usage)?;
    let data = figure_data(curve, from, to, step).map_err(usage)?;
    println!("x,{which}");
    for (x, y) in data {
        println!("{x:.6},{y}");
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Trace { word, blocks } => trace(word, blocks),
        Command::Canon { blocks } => canon(&blocks),
        Command::Search {
            c,
            e,
            opts,
            out,
            checkpoint,
            checkpoint_every,
            huge,
            force,
        } => search(c, e, &opts, out, checkpoint, checkpoint_every, huge, force),
        Command::SearchAll { max_len, opts } => search_all_cmd(max_len, &opts),
        Command::Pieces { word, interval } => pieces(&word, &interval),
        Command::Decompose {
            word,
            factors,
            min,
            even,
        } => decompose(&word, factors, min, even),
        Command::Verify { what } => verify(what),
        Command::FigureData {
            which,
            from,
            to,
            step,
        } => figure(&which, from, to, step),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("gtg: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("gtg: {msg}");
            ExitCode::from(2)
        }
    }
}
