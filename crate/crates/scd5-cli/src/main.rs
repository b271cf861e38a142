//! `scd5` — generate, verify, and inspect symmetric chain decompositions
//! of L(5, n).
//!
//! Exit codes: 0 success, 1 verification or construction failure, 2 usage
//! error. Data goes to stdout, diagnostics to stderr.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use scd5::output::{self, Format, VerifyOptions};
use scd5::{FamilyId, Orientation, OrientationPolicy, MAX_N};

#[derive(Parser)]
#[command(name = "scd5", version, about = "Symmetric chain decompositions of L(5, n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the decomposition for one n, one chain per line.
    Generate {
        /// Box height n.
        #[arg(long)]
        n: u16,
        /// Output encoding.
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Which perimeter chain takes the rectangle corners.
        #[arg(long, value_enum, default_value_t = OrientationArg::Auto)]
        orientation: OrientationArg,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Verify the construction for every n in a range.
    Verify {
        /// First box height to check.
        #[arg(long)]
        n_lo: u16,
        /// Last box height to check (inclusive).
        #[arg(long)]
        n_hi: u16,
        /// Also check pre-peel weight coverage and peel conservation.
        #[arg(long)]
        deep: bool,
        #[arg(long, value_enum, default_value_t = OrientationArg::Auto)]
        orientation: OrientationArg,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Fault-injection hook: withhold one family (C1..C9) so the
        /// failure path can be exercised.
        #[arg(long, hide = true)]
        drop_family: Option<FamilyId>,
    },
    /// Print family, ladder, and chain statistics for one n.
    Stats {
        /// Box height n.
        #[arg(long)]
        n: u16,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(arg: FormatArg) -> Format {
        match arg {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    /// Left-bottom corners with per-ladder fallback.
    Auto,
    LeftBottom,
    TopRight,
}

impl From<OrientationArg> for OrientationPolicy {
    fn from(arg: OrientationArg) -> OrientationPolicy {
        match arg {
            OrientationArg::Auto => OrientationPolicy::Auto,
            OrientationArg::LeftBottom => OrientationPolicy::Fixed(Orientation::LeftBottom),
            OrientationArg::TopRight => OrientationPolicy::Fixed(Orientation::TopRight),
        }
    }
}

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn check_n(n: u16) -> Option<ExitCode> {
    if n > MAX_N {
        return Some(usage_error(&format!("n={n} exceeds the maximum {MAX_N}")));
    }
    None
}

fn with_pool<F: FnOnce() -> ExitCode + Send>(threads: usize, run: F) -> ExitCode {
    if threads == 0 {
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(run),
        Err(e) => usage_error(&format!("cannot build a {threads}-thread pool: {e}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Generate {
            n,
            format,
            orientation,
            threads,
        } => {
            if let Some(code) = check_n(n) {
                return code;
            }
            with_pool(threads, || {
                let stdout = std::io::stdout();
                let mut out = std::io::BufWriter::new(stdout.lock());
                match output::write_generate(&mut out, n, format.into(), orientation.into()) {
                    Ok(decomposition) => {
                        if out.flush().is_err() {
                            return ExitCode::from(EXIT_FAILURE);
                        }
                        for key in &decomposition.fallbacks {
                            eprintln!("note: fallback orientation for {key} at n={n}");
                        }
                        ExitCode::SUCCESS
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        ExitCode::from(EXIT_FAILURE)
                    }
                }
            })
        }
        Command::Verify {
            n_lo,
            n_hi,
            deep,
            orientation,
            threads,
            drop_family,
        } => {
            if let Some(code) = check_n(n_hi) {
                return code;
            }
            if n_lo > n_hi {
                return usage_error(&format!("empty range: --n-lo {n_lo} > --n-hi {n_hi}"));
            }
            with_pool(threads, || {
                let stdout = std::io::stdout();
                let mut out = std::io::BufWriter::new(stdout.lock());
                let mut diag = std::io::stderr();
                let options = VerifyOptions {
                    deep,
                    policy: orientation.into(),
                    skip_family: drop_family,
                };
                match output::write_verify(&mut out, &mut diag, n_lo, n_hi, &options) {
                    Ok(all_pass) => {
                        if out.flush().is_err() || !all_pass {
                            ExitCode::from(EXIT_FAILURE)
                        } else {
                            ExitCode::SUCCESS
                        }
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        ExitCode::from(EXIT_FAILURE)
                    }
                }
            })
        }
        Command::Stats { n } => {
            if let Some(code) = check_n(n) {
                return code;
            }
            let stdout = std::io::stdout();
            let mut out = std::io::BufWriter::new(stdout.lock());
            match output::write_stats(&mut out, n) {
                Ok(()) => {
                    if out.flush().is_err() {
                        ExitCode::from(EXIT_FAILURE)
                    } else {
                        ExitCode::SUCCESS
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_FAILURE)
                }
            }
        }
    }
}
