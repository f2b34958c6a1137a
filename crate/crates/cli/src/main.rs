use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use voss::sampling::MeasureKind;
use voss::volume::IntervalMethod;
use voss_cli::commands::{self, Center, Format, VolumeArgs};
use voss_cli::formats::emit;
use voss_cli::CliError;

#[derive(Parser)]
#[command(
    name = "voss",
    version,
    about = "Separability certificates and separable-volume bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every certificate on a state file.
    Certify {
        state: PathBuf,
        /// Reinterpret the subsystem split; the total dimension must match.
        #[arg(long, value_parser = parse_dims)]
        dims: Option<Dims>,
        /// Also write the full report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate thresholds, ball radii and volume bounds.
    Bounds {
        /// Total dimensions, as `a..b` or a single value.
        #[arg(long, default_value = "2..10", value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Local dimensions of two-qudit systems.
        #[arg(long, default_value = "2..6", value_parser = parse_range)]
        d: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo estimate of certified fractions.
    Volume {
        #[arg(long, value_parser = parse_dims, required_unless_present = "d", conflicts_with = "d")]
        dims: Option<Dims>,
        /// Shorthand for `--dims d,d`.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "natural")]
        measure: MeasureKind,
        /// Worker threads; results do not depend on this.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        workers: Option<u64>,
        #[arg(long, value_enum, default_value_t = IntervalArg::Wilson)]
        interval: IntervalArg,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print spin matrices as `[re, im]` grids.
    Basis {
        #[arg(long)]
        d: usize,
        #[arg(long, requires = "l")]
        j: Option<usize>,
        #[arg(long, requires = "j")]
        l: Option<usize>,
    },
    /// Mix a state toward `I/N` or the maximally entangled state.
    Mix {
        state: PathBuf,
        #[arg(long)]
        epsilon: f64,
        #[arg(long, value_enum, default_value_t = CenterArg::Mixed)]
        center: CenterArg,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum IntervalArg {
    Wilson,
    ClopperPearson,
}

#[derive(Clone, Copy, ValueEnum)]
enum CenterArg {
    Mixed,
    Entangled,
}

#[derive(Clone)]
struct Dims(Vec<usize>);

fn parse_dims(s: &str) -> Result<Dims, String> {
    let dims = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad dimension {p:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if dims.contains(&0) {
        return Err("dimensions must be >= 1".into());
    }
    Ok(Dims(dims))
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bound = |p: &str| {
        p.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad bound {p:?}: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (bound(a)?, bound(b.trim_start_matches('='))?),
        None => {
            let v = bound(s)?;
            (v, v)
        }
    };
    if lo < 2 || hi < lo {
        return Err(format!("range {s:?} must be non-empty with lower end >= 2"));
    }
    Ok(lo..=hi)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Certify { state, dims, out } => emit(
            None,
            &commands::certify(
                &state,
                dims.as_ref().map(|d| d.0.as_slice()),
                out.as_deref(),
            )?,
        ),
        Command::Bounds { n, d, format, out } => {
            let ns: Vec<usize> = n.collect();
            let ds: Vec<usize> = d.collect();
            emit(out.as_deref(), &commands::bounds(&ns, &ds, format.into())?)
        }
        Command::Volume {
            dims,
            d,
            samples,
            seed,
            measure,
            workers,
            interval,
            format,
            out,
        } => {
            let dims = dims
                .map(|d| d.0)
                .unwrap_or_else(|| vec![d.expect("clap enforces one of --dims/--d"); 2]);
            let workers = workers
                .map(|w| w as usize)
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let args = VolumeArgs {
                dims,
                samples,
                seed,
                measure,
                workers,
                interval: match interval {
                    IntervalArg::Wilson => IntervalMethod::Wilson,
                    IntervalArg::ClopperPearson => IntervalMethod::ClopperPearson,
                },
            };
            emit(out.as_deref(), &commands::volume(&args, format.into())?)
        }
        Command::Basis { d, j, l } => emit(None, &commands::basis(d, j.zip(l))?),
        Command::Mix {
            state,
            epsilon,
            center,
            out,
        } => {
            let center = match center {
                CenterArg::Mixed => Center::Mixed,
                CenterArg::Entangled => Center::Entangled,
            };
            emit(None, &commands::mix(&state, epsilon, center, &out)?)
        }
    }
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version exit 0, usage errors exit 2
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
