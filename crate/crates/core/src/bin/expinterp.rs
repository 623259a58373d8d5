use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use expinterp::cli::{self, Command, Format, Grid, RunConfig, Suite};

#[derive(Parser)]
#[command(name = "expinterp", version, about = "Rational interpolation of exp(z) at extended precision")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve one interpolation problem and emit coefficients, zeros and poles.
    Interpolate,
    /// Render one figure preset as CSV and SVG.
    Figure,
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Args)]
struct Opts {
    #[arg(long = "precision-bits", global = true, default_value_t = expinterp::DEFAULT_PRECISION)]
    precision_bits: u32,
    /// Scheme JSON file.
    #[arg(long, global = true)]
    scheme: Option<PathBuf>,
    /// Figure preset, e.g. circle-60.
    #[arg(long, global = true)]
    preset: Option<String>,
    /// Degree of the Padé scheme, or the single degree of a verification sweep.
    #[arg(long, global = true, conflicts_with = "n_sweep")]
    n: Option<usize>,
    /// Comma-separated increasing degrees.
    #[arg(long = "n-sweep", global = true, value_parser = parse_sweep)]
    n_sweep: Option<Sweep>,
    /// Error grid "re0:re1:steps,im0:im1:steps".
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_grid)]
    grid: Option<Grid>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone)]
struct Sweep(Vec<usize>);

fn parse_sweep(s: &str) -> Result<Sweep, String> {
    cli::parse_sweep(s).map(Sweep).map_err(|e| e.to_string())
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    s.parse().map_err(|e: expinterp::Error| e.to_string())
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let command = match args.command {
        Cmd::Interpolate => Command::Interpolate,
        Cmd::Figure => Command::Figure,
        Cmd::Verify { suite } => Command::Verify(suite),
    };
    let o = args.opts;
    let cfg = RunConfig {
        precision: o.precision_bits,
        n: o.n,
        sweep: o.n_sweep.map(|s| s.0),
        scheme: o.scheme,
        preset: o.preset,
        out: o.out,
        format: o.format,
        grid: o.grid,
        ..RunConfig::new(command)
    };
    match cli::run(&cfg) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
