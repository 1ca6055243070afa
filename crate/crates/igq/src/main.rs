use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use igq::dump::dump_presentations;
use igq::{run_dcat_suite, run_qh_suite, DcatCheck, Invocation, QhCheck, Report};
use igq_core::bbw::SpaceKind;
use igq_core::presentations::QMode;

#[derive(Parser)]
#[command(name = "igq", version, about = "Exact verification suites for IG(2,2n) and its derived category")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum QArg {
    #[value(name = "1")]
    One,
    Symbolic,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    Gr,
    Igr,
}

#[derive(Subcommand)]
enum Command {
    /// Presentations, spectrum, first-order deformation and unfolding.
    Qh {
        #[arg(long)]
        n: usize,
        /// Comma separated; all checks when omitted.
        #[arg(long, value_delimiter = ',')]
        check: Option<Vec<QhCheck>>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also write the presentations and their Gröbner bases here.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[arg(long = "q-mode", value_enum, default_value = "1")]
        q_mode: QArg,
        #[arg(long = "max-n", default_value_t = 5)]
        max_n: usize,
    },
    /// Borel–Weil–Bott checks of the exceptional collections.
    Dcat {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, value_delimiter = ',')]
        check: Option<Vec<DcatCheck>>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long = "max-k", default_value_t = 4)]
        max_k: usize,
    },
}

fn names<T: ValueEnum>(checks: &[T]) -> Vec<String> {
    checks.iter().filter_map(|c| c.to_possible_value()).map(|v| v.get_name().to_string()).collect()
}

fn run(cli: Cli) -> anyhow::Result<(Report, Format)> {
    match cli.command {
        Command::Qh { n, check, format, dump, q_mode, max_n } => {
            let checks = check.unwrap_or_else(|| QhCheck::ALL.to_vec());
            let (q_mode, q_name) = match q_mode {
                QArg::One => (QMode::Specialize1, "1"),
                QArg::Symbolic => (QMode::Symbolic, "symbolic"),
            };
            let rows = run_qh_suite(n, &checks, q_mode, max_n)?;
            if let Some(dir) = dump {
                let written = dump_presentations(&dir, n, q_mode).with_context(|| format!("dumping into {}", dir.display()))?;
                eprintln!("# wrote {} files to {}", written.len(), dir.display());
            }
            let invocation = Invocation {
                command: "qh".into(),
                n: Some(n),
                k: None,
                space: None,
                q_mode: Some(q_name.into()),
                checks: names(&checks),
            };
            Ok((Report::new(invocation, rows), format))
        }
        Command::Dcat { k, space, check, format, max_k } => {
            let checks = check.unwrap_or_else(|| DcatCheck::ALL.to_vec());
            let (kind, space_name) = match space {
                SpaceArg::Gr => (SpaceKind::Gr, "gr"),
                SpaceArg::Igr => (SpaceKind::Igr, "igr"),
            };
            let rows = run_dcat_suite(k, kind, &checks, max_k)?;
            let invocation = Invocation {
                command: "dcat".into(),
                n: None,
                k: Some(k),
                space: Some(space_name.into()),
                q_mode: None,
                checks: names(&checks),
            };
            Ok((Report::new(invocation, rows), format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, format)) => {
            match format {
                Format::Json => print!("{}", report.to_json()),
                Format::Md => print!("{}", report.to_markdown()),
            }
            eprint!("{}", report.timing_footer());
            if report.has_failures() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("igq: {e:#}");
            ExitCode::from(2)
        }
    }
}
