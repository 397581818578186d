use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gwspectra::spectra::MatrixKind;
use gwspectra::verify::Suite;
use gwspectra::WheelParams;
use gwspectra_cli::{render, Method, Mode, Which};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "gwspectra",
    version,
    about = "Distance spectra and integrality of generalized wheels aK_m ∇ C_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixArg {
    Adj,
    Dist,
    Dl,
    Dq,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Numeric,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Dq,
    Dl,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumWhichArg {
    Dq,
    Dl,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Scan,
    Alpha,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    JoinDq,
    JoinDl,
    GwDq,
    GwDl,
    Classification,
    AlphaEquiv,
    Parity,
    Bounds,
}

#[derive(clap::Args)]
struct Triple {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Exact and/or numeric spectrum of one matrix of GW(a,m,n)
    Spectrum {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value = "dq")]
        matrix: MatrixArg,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// D^Q and D^L integrality verdicts with witnesses
    Classify {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value = "both")]
        which: WhichArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// All integral triples on a grid
    Enumerate {
        #[arg(long, value_enum, default_value = "dq")]
        which: EnumWhichArg,
        #[arg(long)]
        a_max: u64,
        #[arg(long)]
        m_max: u64,
        #[arg(long, value_delimiter = ',', default_value = "3,4,6")]
        n_values: Vec<u64>,
        #[arg(long, value_enum, default_value = "scan")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run a verification suite; exits 2 if any check fails
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 36)]
        max_order: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("records serialize");
    s.push('\n');
    s
}

fn params(t: &Triple) -> gwspectra::Result<WheelParams> {
    WheelParams::new(t.a, t.m, t.n)
}

/// Renders the command output and the exit code it should produce.
fn execute(cmd: Command) -> gwspectra::Result<(String, u8)> {
    match cmd {
        Command::Spectrum {
            triple,
            matrix,
            mode,
            format,
        } => {
            let kind = match matrix {
                MatrixArg::Adj => MatrixKind::Adjacency,
                MatrixArg::Dist => MatrixKind::Distance,
                MatrixArg::Dl => MatrixKind::DistanceLaplacian,
                MatrixArg::Dq => MatrixKind::DistanceSignlessLaplacian,
            };
            let mode = match mode {
                ModeArg::Exact => Mode::Exact,
                ModeArg::Numeric => Mode::Numeric,
                ModeArg::Both => Mode::Both,
            };
            let (rec, exact) = gwspectra_cli::spectrum(params(&triple)?, kind, mode)?;
            let out = match format {
                Format::Table => render::spectrum_table(&rec, exact.as_ref()),
                Format::Json => json(&rec),
                Format::Csv => render::spectrum_csv(&rec, exact.as_ref()),
            };
            Ok((out, 0))
        }
        Command::Classify {
            triple,
            which,
            format,
        } => {
            let which = match which {
                WhichArg::Dq => Which::Dq,
                WhichArg::Dl => Which::Dl,
                WhichArg::Both => Which::Both,
            };
            let rec = gwspectra_cli::classify_triple(params(&triple)?, which);
            let out = match format {
                Format::Table => render::classify_table(&rec),
                Format::Json => json(&rec),
                Format::Csv => render::classify_csv(&rec),
            };
            Ok((out, 0))
        }
        Command::Enumerate {
            which,
            a_max,
            m_max,
            n_values,
            method,
            format,
        } => {
            let which = match which {
                EnumWhichArg::Dq => Which::Dq,
                EnumWhichArg::Dl => Which::Dl,
            };
            let method = match method {
                MethodArg::Scan => Method::Scan,
                MethodArg::Alpha => Method::Alpha,
            };
            let rec = gwspectra_cli::enumerate(which, a_max, m_max, &n_values, method)?;
            let out = match format {
                Format::Table => render::enumerate_table(&rec),
                Format::Json => json(&rec),
                Format::Csv => render::enumerate_csv(&rec),
            };
            Ok((out, 0))
        }
        Command::Verify {
            suite,
            max_order,
            seed,
            format,
        } => {
            let suite = match suite {
                SuiteArg::JoinDq => Suite::JoinDq,
                SuiteArg::JoinDl => Suite::JoinDl,
                SuiteArg::GwDq => Suite::GwDq,
                SuiteArg::GwDl => Suite::GwDl,
                SuiteArg::Classification => Suite::Classification,
                SuiteArg::AlphaEquiv => Suite::AlphaEquiv,
                SuiteArg::Parity => Suite::Parity,
                SuiteArg::Bounds => Suite::Bounds,
            };
            let rec = gwspectra_cli::run_verify(suite, max_order, seed)?;
            let out = match format {
                Format::Table => render::verify_table(&rec),
                Format::Json => json(&rec),
                Format::Csv => render::verify_csv(&rec),
            };
            Ok((out, if rec.passed { 0 } else { 2 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(cli.command) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
