//! `qfree`: runs one verification and prints a JSON report on stdout.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 on
//! usage or input errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qfree_core::pauli::Kind;

use commands::{CayleyCheck, MeasureSource, PointArgs};
use report::{real, Report};

#[derive(Parser, Debug)]
#[command(name = "qfree", version, about = "Verification runs for FO(J_2N) and FO_N computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Sym,
    Orth,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Sym => Kind::Symplectic,
            KindArg::Orth => Kind::Orthogonal,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckArg {
    Pentagon,
    Theta,
    BaajSkandalis,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct MeasureArgs {
    /// CSV spectral measure: `point,weight` rows or a `density,lo,hi` header
    #[arg(long, value_name = "FILE")]
    measure: Option<PathBuf>,
    /// Semicircle with this variance
    #[arg(long, value_name = "VAR")]
    semicircle: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact check of the compact derivative formulas
    #[command(name = "verify-lemma31")]
    VerifyLemma31 {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "sym")]
        kind: KindArg,
    },
    /// `∂F*∂F = 2 + 2 Re W` at sampled classical points
    ClassicalPoint {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value = "sym")]
        kind: KindArg,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, env = "QFREE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 1e-11)]
        relation_tol: f64,
    },
    /// Moments of the fundamental character by three methods
    CharMoments {
        #[arg(long)]
        max_k: usize,
    },
    /// Log-energy and free entropy of a spectral measure
    Entropy {
        #[command(flatten)]
        source: MeasureArgs,
        /// Grid cells for the semicircle
        #[arg(long, default_value_t = 4000)]
        cells: usize,
    },
    /// Fuglede–Kadison–Lück determinant of a spectral measure
    Fkl {
        #[command(flatten)]
        source: MeasureArgs,
        #[arg(long, default_value_t = 4000)]
        cells: usize,
    },
    /// Exact identities for a finite group
    Cayley {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        check: CheckArg,
        /// Comma-separated element indices (default: every non-identity element)
        #[arg(long, value_delimiter = ',')]
        gen_set: Option<Vec<usize>>,
    },
    /// Size of the semicircular perturbation of the character
    D2Bound {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        eps: f64,
    },
}

fn source(m: &MeasureArgs, cells: usize) -> MeasureSource<'_> {
    match (&m.measure, m.semicircle) {
        (Some(p), _) => MeasureSource::File(p),
        (None, Some(variance)) => MeasureSource::Semicircle { variance, cells },
        (None, None) => unreachable!("clap enforces one source"),
    }
}

fn run(cmd: &Command) -> qfree_core::Result<Report> {
    match cmd {
        Command::VerifyLemma31 { n, kind } => commands::verify_lemma31(*n as usize, (*kind).into()),
        Command::ClassicalPoint {
            n,
            kind,
            samples,
            seed,
            tol,
            relation_tol,
        } => commands::classical_point(&PointArgs {
            n: *n as usize,
            kind: (*kind).into(),
            samples: *samples,
            seed: *seed,
            tol: *tol,
            relation_tol: *relation_tol,
        }),
        Command::CharMoments { max_k } => commands::char_moments(*max_k),
        Command::Entropy { source: s, cells } => commands::entropy(&source(s, *cells)),
        Command::Fkl { source: s, cells } => commands::fkl(&source(s, *cells)),
        Command::Cayley {
            group,
            check,
            gen_set,
        } => {
            let check = match check {
                CheckArg::Pentagon => CayleyCheck::Pentagon,
                CheckArg::Theta => CayleyCheck::Theta,
                CheckArg::BaajSkandalis => CayleyCheck::BaajSkandalis,
            };
            commands::cayley(group, check, gen_set.as_deref())
        }
        Command::D2Bound { n, eps } => commands::d2_bound(*n as usize, *eps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    match run(&cli.command) {
        Ok(mut report) => {
            report.metric("wall_time_ms", real(start.elapsed().as_secs_f64() * 1e3));
            println!("{}", report.to_json());
            ExitCode::from(if report.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
