//! `coronal`: exact spectra of Dehn twist products and related tools.
//!
//! Subcommands: `word` (spectral report), `coronal` (stretch-factor
//! classification), `scan` and `recip` (seeded experiments), `farey`
//! (PSL(2,Z) word tools), `verify-identity` (height identity spot check).
//!
//! Exit codes: 0 success, 1 invalid input, 2 internal error or a result
//! that contradicts a certified property (a scan violation, a nonzero
//! identity residual, a failed round-trip verification). Errors go to
//! stderr as one JSON object per failure.

mod input;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use coronal_core::{
    coronal_verdict, lr_word_with_conjugator, reconstruct, run_identity_trials, run_recip,
    run_scan, spectral_report, CoreError, LRWord, PSL2ZElement, ScanConfig, ScanResult, TwistWord,
};

#[derive(Parser)]
#[command(name = "coronal", version, about = "Exact spectra of twist products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral report for one twist word over an intersection matrix.
    Word {
        /// Intersection matrix file, text ("n m" header plus rows) or JSON.
        #[arg(long, value_name = "FILE")]
        omega: PathBuf,
        /// Comma-separated 1-based twist indices, e.g. "1,2".
        #[arg(long, value_name = "CSV")]
        word: String,
        /// Width bound for the stretch-factor interval: "p/q", decimal,
        /// or scientific.
        #[arg(long, value_name = "RATIONAL", default_value = "1/1000000000000")]
        tol: String,
        /// Require a connected intersection graph.
        #[arg(long)]
        strict: bool,
    },
    /// Classifies a polynomial: does its largest root have a Galois
    /// conjugate on the unit circle?
    Coronal {
        /// Human form "x^4-x^3-x^2-x+1" or ascending coefficients
        /// "1,-1,-1,-1,1".
        poly: String,
        #[arg(long, value_name = "RATIONAL", default_value = "1/1000000000000")]
        tol: String,
    },
    /// Random certificate scan over seeded (Ω, word) draws.
    Scan {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Bound on the total curve count n+m.
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        #[arg(long, default_value_t = 12)]
        max_word_len: usize,
        /// Bound on intersection matrix entries.
        #[arg(long, default_value_t = 3)]
        max_intersection: u32,
        /// Sample only connected intersection graphs.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_name = "RATIONAL", default_value = "1/1000000000000")]
        tol: String,
        /// Write full records here as JSON, plus a per-trial CSV table
        /// next to it (same path with a .csv extension).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Stdout format when --out is not given.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Run trials on all cores; output is identical either way.
        #[arg(long)]
        parallel: bool,
    },
    /// Fraction of random palindromic polynomials with a unit-circle root.
    Recip {
        /// Even degree of the sampled polynomials.
        #[arg(long, default_value_t = 10)]
        degree: usize,
        /// Coefficients are uniform in -bound..=bound.
        #[arg(long, default_value_t = 3)]
        bound: u64,
        #[arg(long, default_value_t = 10000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the result here as JSON.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Stdout format when --out is not given.
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        parallel: bool,
    },
    /// PSL(2,Z) tools: classification, LR words, and realizability.
    Farey {
        #[command(subcommand)]
        cmd: FareyCommand,
    },
    /// Checks h(Q_i v) - h(v) = |Q_i v - v|^2 on random rational vectors.
    VerifyIdentity {
        #[arg(long, value_name = "FILE")]
        omega: PathBuf,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum FareyCommand {
    /// Prints elliptic, parabolic, or hyperbolic.
    Classify {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
        #[arg(allow_negative_numbers = true)]
        d: i64,
    },
    /// Prints the LR word of the matrix's conjugacy class.
    Word {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
        #[arg(allow_negative_numbers = true)]
        d: i64,
        /// Re-multiply the word with its conjugator and compare to the
        /// input; a mismatch is an internal error.
        #[arg(long)]
        verify: bool,
    },
    /// Prints the matrix of a positive LR word.
    Reconstruct { word: String },
    /// Prints whether the word splits into LL and RR blocks cyclically.
    Realizable { word: String },
}

/// Failure modes past input validation: the run worked but produced a
/// result that should be impossible.
enum Refutation {
    ScanViolations,
    IdentityResidual,
    RoundTripMismatch,
}

enum CommandError {
    Core(CoreError),
    Refuted(Refutation, String),
}

impl From<CoreError> for CommandError {
    fn from(e: CoreError) -> Self {
        CommandError::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CommandError::Core(e)) => {
            let json = serde_json::json!({
                "error": e.code(),
                "message": e.to_string(),
            });
            eprintln!("{json}");
            if matches!(e, CoreError::InternalInvariant(_)) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
        Err(CommandError::Refuted(kind, message)) => {
            let code = match kind {
                Refutation::ScanViolations => "certificate_violation",
                Refutation::IdentityResidual => "identity_residual",
                Refutation::RoundTripMismatch => "round_trip_mismatch",
            };
            let json = serde_json::json!({ "error": code, "message": message });
            eprintln!("{json}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CommandError> {
    match cli.command {
        Command::Word {
            omega,
            word,
            tol,
            strict,
        } => cmd_word(&omega, &word, &tol, strict),
        Command::Coronal { poly, tol } => cmd_coronal(&poly, &tol),
        Command::Scan {
            seed,
            trials,
            max_dim,
            max_word_len,
            max_intersection,
            strict,
            tol,
            out,
            format,
            parallel,
        } => {
            let config = ScanConfig {
                seed,
                trials,
                max_dim,
                max_word_len,
                max_intersection,
                strict_mode: strict,
                tolerance: input::parse_rational(&tol)?,
            };
            cmd_scan(&config, out.as_deref(), format, parallel)
        }
        Command::Recip {
            degree,
            bound,
            samples,
            seed,
            out,
            format,
            parallel,
        } => cmd_recip(
            degree,
            bound,
            samples,
            seed,
            out.as_deref(),
            format,
            parallel,
        ),
        Command::Farey { cmd } => cmd_farey(cmd),
        Command::VerifyIdentity {
            omega,
            trials,
            seed,
        } => cmd_verify_identity(&omega, trials, seed),
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn cmd_word(omega: &Path, word: &str, tol: &str, strict: bool) -> Result<(), CommandError> {
    let ix = input::load_omega(omega, strict)?;
    let word: TwistWord = word.parse()?;
    let tol = input::parse_rational(tol)?;
    let report = spectral_report(&ix, &word, &tol)?;
    if !report.admissible {
        let missing = word
            .missing_indices(ix.dim())
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        eprintln!("warning: word does not use every index (missing {missing})");
    }
    print!("{}", pretty(&report));
    Ok(())
}

fn cmd_coronal(poly: &str, tol: &str) -> Result<(), CommandError> {
    let p = input::parse_poly(poly)?;
    let tol = input::parse_rational(tol)?;
    let verdict = coronal_verdict(&p, &tol)?;
    print!("{}", pretty(&verdict));
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Result<(), CommandError> {
    std::fs::write(path, contents).map_err(|e| {
        CommandError::Core(CoreError::Parse(format!(
            "cannot write {}: {e}",
            path.display()
        )))
    })
}

fn scan_refutation(result: &ScanResult) -> Result<(), CommandError> {
    if result.failed() {
        let n = result.summary.violations_found;
        return Err(CommandError::Refuted(
            Refutation::ScanViolations,
            format!("{n} twist products had a unit-circle eigenvalue other than 1"),
        ));
    }
    Ok(())
}

fn cmd_scan(
    config: &ScanConfig,
    out: Option<&Path>,
    format: Format,
    parallel: bool,
) -> Result<(), CommandError> {
    let result = run_scan(config, parallel)?;
    match out {
        Some(path) => {
            write_file(path, &pretty(&result))?;
            write_file(&path.with_extension("csv"), &result.summary_csv())?;
            println!(
                "scan: status={} trials={} violations={} max_on_circle={}",
                result.status,
                result.summary.trials_run,
                result.summary.violations_found,
                result.summary.max_on_circle
            );
        }
        None => match format {
            Format::Json => print!("{}", pretty(&result)),
            Format::Csv => print!("{}", result.summary_csv()),
        },
    }
    scan_refutation(&result)
}

fn cmd_recip(
    degree: usize,
    bound: u64,
    samples: u64,
    seed: u64,
    out: Option<&Path>,
    format: Format,
    parallel: bool,
) -> Result<(), CommandError> {
    let result = run_recip(degree, bound, samples, seed, parallel)?;
    match out {
        Some(path) => {
            write_file(path, &pretty(&result))?;
            println!(
                "recip: degree={} samples={} fraction={}",
                result.degree, result.samples, result.fraction
            );
        }
        None => match format {
            Format::Json => print!("{}", pretty(&result)),
            Format::Csv => print!(
                "degree,coeff_bound,samples,with_circle_root,fraction,fraction_decimal\n\
                 {},{},{},{},{},{}\n",
                result.degree,
                result.coeff_bound,
                result.samples,
                result.with_circle_root,
                result.fraction,
                result.fraction_decimal
            ),
        },
    }
    Ok(())
}

fn cmd_farey(cmd: FareyCommand) -> Result<(), CommandError> {
    match cmd {
        FareyCommand::Classify { a, b, c, d } => {
            let g = PSL2ZElement::from_i64(a, b, c, d)?;
            println!("{}", g.classify());
        }
        FareyCommand::Word { a, b, c, d, verify } => {
            let g = PSL2ZElement::from_i64(a, b, c, d)?;
            let dec = lr_word_with_conjugator(&g)?;
            if verify {
                let rebuilt = dec
                    .conjugator
                    .mul(&dec.word.matrix())
                    .mul(&dec.conjugator.inverse());
                if rebuilt != g {
                    return Err(CommandError::Refuted(
                        Refutation::RoundTripMismatch,
                        format!(
                            "reconstructed {rebuilt} from word {} but expected {g}",
                            dec.word
                        ),
                    ));
                }
            }
            println!("{}", dec.word);
        }
        FareyCommand::Reconstruct { word } => {
            let w: LRWord = word.parse()?;
            println!("{}", reconstruct(&w));
        }
        FareyCommand::Realizable { word } => {
            let w: LRWord = word.parse()?;
            println!("{}", w.four_puncture_realizable());
        }
    }
    Ok(())
}

fn cmd_verify_identity(omega: &Path, trials: u64, seed: u64) -> Result<(), CommandError> {
    let ix = input::load_omega(omega, false)?;
    let result = run_identity_trials(&ix, trials, seed, 100)?;
    print!("{}", pretty(&result));
    if !result.passed {
        return Err(CommandError::Refuted(
            Refutation::IdentityResidual,
            "a height identity trial produced a nonzero residual".into(),
        ));
    }
    Ok(())
}
