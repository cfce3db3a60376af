use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qrstirling::cli::{cmd_table, cmd_verify, parse_pspec, parse_q, OutputFormat, QMode, Suite, TableArgs, VerifyOptions};
use qrstirling::{FamilySpec, Kind, PSpec, QType};

#[derive(Parser)]
#[command(name = "qrstirling", version, about = "q,r-poly-Stirling triangles and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Second,
    FirstUnsigned,
    FirstSigned,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle as CSV or JSON.
    Table {
        #[arg(long, value_enum, default_value = "second")]
        kind: KindArg,
        #[arg(long, default_value = "2", value_parser = ["1", "2"])]
        qtype: String,
        #[arg(long, default_value = "x", value_parser = pspec)]
        p: PSpec,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value = "symbolic", value_parser = qmode)]
        q: QMode,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Run a verification suite; exits 1 if any case fails.
    Verify {
        #[arg(long, value_parser = suite)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_parser = pspec)]
        p: Option<PSpec>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value = "symbolic", value_parser = qmode)]
        q: QMode,
        #[arg(long)]
        oeis_bfile: Option<PathBuf>,
        /// Emit one JSON report per suite instead of text.
        #[arg(long)]
        json: bool,
    },
}

fn pspec(s: &str) -> Result<PSpec, String> {
    parse_pspec(s).map_err(|e| e.to_string())
}

fn qmode(s: &str) -> Result<QMode, String> {
    parse_q(s).map_err(|e| e.to_string())
}

fn suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Table { kind, qtype, p, r, n_max, q, format } => {
            let kind = match kind {
                KindArg::Second => Kind::SecondKind,
                KindArg::FirstUnsigned => Kind::FirstKindUnsigned,
                KindArg::FirstSigned => Kind::FirstKindSigned,
            };
            let q_type = if qtype == "1" { QType::TypeI } else { QType::TypeII };
            let format = match format {
                FormatArg::Csv => OutputFormat::Csv,
                FormatArg::Json => OutputFormat::Json,
            };
            let args = TableArgs { spec: FamilySpec::new(kind, q_type, p, r), n_max, q, format };
            match cmd_table(&args) {
                Ok(out) => {
                    print!("{out}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Verify { suite, n_max, p, r, q, oeis_bfile, json } => {
            let opts = VerifyOptions { n_max, p, r, q, oeis_bfile };
            let reports = match cmd_verify(suite, &opts) {
                Ok(reports) => reports,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            for report in &reports {
                if json {
                    println!("{}", report.to_json());
                } else {
                    print!("{report}");
                }
            }
            if reports.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
