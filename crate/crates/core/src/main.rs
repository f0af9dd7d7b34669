use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sixops::battery::{run_battery, Battery, BatteryConfig};
use sixops::config::ContextSpec;
use sixops::hopf::{builtin_group, builtin_group_names, builtin_subgroups};
use sixops::report::{emit_report, CheckEntry, CheckReport, Format};
use sixops::Error;

#[derive(Parser)]
#[command(name = "sixops", version, about = "Exact checks of adjoint-functor calculus on module categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one battery against a context spec.
    Verify {
        /// Battery name; see `sixops list batteries`.
        battery: String,
        /// Context spec, TOML or JSON.
        #[arg(long)]
        spec: PathBuf,
        /// Seeded objects per battery.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List builtin groups or batteries.
    List { what: ListWhat },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListWhat {
    Groups,
    Batteries,
}

fn error_report(battery: &str, context: &str, err: &Error) -> CheckReport {
    let mut r = CheckReport::new(context, battery);
    r.push(CheckEntry::new("error", vec![err.kind().to_string()], false).with_details(err.to_string()));
    r.finalize();
    r
}

fn verify(battery: &str, spec: &Path, samples: usize, seed: u64, format: Format, out: Option<&Path>) -> ExitCode {
    let run = || -> Result<CheckReport, Error> {
        let battery: Battery = battery.parse()?;
        let spec = ContextSpec::load(spec)?;
        run_battery(&BatteryConfig { spec, battery, samples, seed })
    };
    let (report, code) = match run() {
        Ok(r) => {
            let code = if r.all_pass() { 0 } else { 1 };
            (r, code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            (error_report(battery, &spec.display().to_string(), &e), e.exit_code())
        }
    };
    if let Err(e) = emit_report(&report, format, out) {
        eprintln!("error: {e}");
        return ExitCode::from(6);
    }
    if code == 1 {
        eprintln!("{} of {} checks failed", report.summary.failed, report.summary.total);
    }
    ExitCode::from(code as u8)
}

fn list(what: ListWhat) -> ExitCode {
    let mut lines = Vec::new();
    match what {
        ListWhat::Groups => {
            for name in builtin_group_names() {
                let g = builtin_group(&name).expect("builtin");
                let subs: Vec<String> =
                    builtin_subgroups(&g).map(|s| s.into_iter().map(|(n, _)| n).collect()).unwrap_or_default();
                lines.push(format!("{name}\torder {}\tsubgroups: {}", g.order(), subs.join(", ")));
            }
        }
        ListWhat::Batteries => {
            for b in Battery::ALL {
                lines.push(format!("{b}\t{}", b.describe()));
            }
        }
    }
    let mut out = std::io::stdout().lock();
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    for line in lines {
        if writeln!(out, "{line}").is_err() {
            break;
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { battery, spec, samples, seed, format, out } => {
            let format = match format {
                OutFormat::Json => Format::Json,
                OutFormat::Md => Format::Markdown,
            };
            verify(&battery, &spec, samples, seed, format, out.as_deref())
        }
        Command::List { what } => list(what),
    }
}
