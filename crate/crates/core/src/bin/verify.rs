use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use singular_gt::error::{Error, Result};
use singular_gt::verify::export::{export_from_config, write_export};
use singular_gt::verify::{run_suite, Config, VerificationReport, SUITES};

/// Exact verification of Gelfand-Tsetlin module constructions.
#[derive(Parser)]
#[command(name = "verify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket relations on every window symbol
    Commutators(Common),
    /// Gelfand-Tsetlin subalgebra: eigenvalues, Jordan blocks, multiplicities
    Gamma(Common),
    /// Classical formulas against the permutation form
    Formulas(Common),
    /// Coefficient identities behind the singular action
    Appendix(Common),
    /// Nonvanishing generation coefficients and connectivity
    Witnesses(Common),
    /// The n = 3 decomposition into ten subquotients
    N3(Common),
    /// Finite-dimensional regression on gl(3)
    Finite(Common),
    /// Every suite listed in the config (all suites if none are listed)
    All(Common),
    /// Write windowed action matrices as JSON
    Export {
        #[command(flatten)]
        common: Common,
        /// Output directory; defaults to output_dir from the config
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    config: PathBuf,
    /// Override the window bound B
    #[arg(long)]
    window: Option<i64>,
    /// Override the RNG seed
    #[arg(long)]
    seed: Option<u64>,
    /// Write the report(s) as JSON to this file
    #[arg(long)]
    json: Option<PathBuf>,
    /// Omit wall-clock times so reports are reproducible byte for byte
    #[arg(long)]
    no_timing: bool,
}

impl Common {
    fn load(&self) -> Result<Config> {
        let mut cfg = Config::load(&self.config)?;
        if let Some(b) = self.window {
            if b < 0 {
                return Err(Error::Config(format!("window must be >= 0, got {b}")));
            }
            cfg.window = b;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        Ok(cfg)
    }
}

fn print_report(r: &VerificationReport) {
    println!("{}", r.summary_line());
    for note in &r.notes {
        println!("  note: {note}");
    }
    for e in &r.exemplars {
        println!("  failure: {}\n    lhs: {}\n    rhs: {}", e.input, e.lhs, e.rhs);
    }
}

fn run(cli: Cli) -> Result<bool> {
    let (common, suites): (&Common, Vec<String>) = match &cli.command {
        Command::Commutators(c) => (c, vec!["commutators".into()]),
        Command::Gamma(c) => (c, vec!["gamma".into()]),
        Command::Formulas(c) => (c, vec!["formulas".into()]),
        Command::Appendix(c) => (c, vec!["appendix".into()]),
        Command::Witnesses(c) => (c, vec!["witnesses".into()]),
        Command::N3(c) => (c, vec!["n3".into()]),
        Command::Finite(c) => (c, vec!["finite".into()]),
        Command::All(c) => (c, Vec::new()),
        Command::Export { common, out } => {
            let cfg = common.load()?;
            let dir = out
                .clone()
                .or_else(|| cfg.output_dir.clone())
                .ok_or_else(|| Error::Config("export needs --out or output_dir".into()))?;
            let exported = export_from_config(&cfg)?;
            let path = write_export(&exported, &dir)?;
            println!(
                "wrote {} matrices on {} basis symbols to {}",
                exported.matrices.len(),
                exported.basis.len(),
                path.display()
            );
            return Ok(true);
        }
    };
    let cfg = common.load()?;
    let suites = if matches!(cli.command, Command::All(_)) {
        if cfg.suites.is_empty() {
            SUITES.iter().map(|s| s.to_string()).collect()
        } else {
            cfg.suites.clone()
        }
    } else {
        suites
    };

    let mut reports = Vec::new();
    for name in &suites {
        let mut r = run_suite(name, &cfg)?;
        if common.no_timing {
            r = r.without_timing();
        }
        print_report(&r);
        reports.push(r);
    }
    if let Some(path) = &common.json {
        let text = if let [single] = reports.as_slice() {
            serde_json::to_string_pretty(single)
        } else {
            serde_json::to_string_pretty(&reports)
        }
        .map_err(|e| Error::Io(e.to_string()))?;
        std::fs::write(path, text + "\n")?;
    }
    Ok(reports.iter().all(VerificationReport::passes))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
