use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mgcm_core::cache::Cache;
use mgcm_core::corpus::{aggregate_exit_code, run_corpus, run_parsed};
use mgcm_core::report::{emit_reports, rows_to_csv, to_json, Format, Verdict, VerificationReport};
use mgcm_core::session::{parse_session, parse_window, RunOptions, Session, StmtKind, Thm};
use mgcm_core::cohomology::Window;

#[derive(Parser)]
#[command(name = "mgcm", version, about = "Multigraded Cohen-Macaulay verifier")]
struct Cli {
    /// Characteristic for every ring (0 for the rationals).
    #[arg(long = "char", global = true)]
    char: Option<u64>,
    /// Default window, e.g. `(-3,-3)..(3,3)` or `(0)..(4)@0..8`.
    #[arg(long, global = true, value_parser = window_arg, allow_hyphen_values = true)]
    window: Option<Window>,
    #[arg(long, global = true, default_value = "json", value_parser = format_arg)]
    format: Format,
    /// Cache directory; falls back to $MGCM_CACHE_DIR.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Extra Koszul exponents required before a colimit counts as stable.
    #[arg(long, global = true, default_value_t = 1)]
    margin: u32,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a session file and print it in canonical form.
    Parse { file: PathBuf },
    /// Evaluate every directive of a session file.
    Run { file: PathBuf },
    /// Verify one statement on the objects of a session file.
    Verify {
        #[arg(value_parser = thm_arg)]
        thm: Thm,
        file: PathBuf,
        /// Object to verify; defaults to the file's own `verify` directives.
        name: Option<String>,
    },
    /// Verify every entry of a corpus manifest.
    Corpus {
        #[arg(default_value = "corpus/manifest.json")]
        manifest: PathBuf,
    },
}

fn window_arg(s: &str) -> Result<Window, String> {
    parse_window(s).map_err(|e| e.to_string())
}

fn format_arg(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: mgcm_core::Error| e.to_string())
}

fn thm_arg(s: &str) -> Result<Thm, String> {
    s.parse().map_err(|e: mgcm_core::Error| e.to_string())
}

fn load(file: &Path) -> Result<Session, ExitCode> {
    let text = std::fs::read_to_string(file).map_err(|e| {
        eprintln!("{}: {e}", file.display());
        ExitCode::from(2)
    })?;
    parse_session(&text).map_err(|diags| {
        for d in diags {
            eprintln!("{}: {d}", file.display());
        }
        ExitCode::from(2)
    })
}

fn restrict(mut s: Session, thm: Thm, name: Option<&str>) -> Result<Session, String> {
    let keep = |k: &StmtKind| match k {
        StmtKind::Verify { thm: t, target, .. } => *t == thm && name.is_none_or(|n| n == target),
        StmtKind::Check { .. } | StmtKind::Table { .. } => false,
        _ => true,
    };
    let found = s.stmts.iter().any(|st| matches!(st.kind, StmtKind::Verify { .. }) && keep(&st.kind));
    s.stmts.retain(|st| keep(&st.kind));
    if !found {
        let Some(n) = name else {
            return Err(format!("no `verify {}` directive in the file; name an object", thm.as_str()));
        };
        let mut text = s.to_string();
        text.push_str(&format!("verify {} {n};\n", thm.as_str()));
        s = parse_session(&text).map_err(|d| d.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("\n"))?;
    }
    Ok(s)
}

fn emit(reports: &[VerificationReport], format: Format) -> Result<(), ExitCode> {
    match emit_reports(reports, format) {
        Ok(text) => {
            print!("{text}");
            if format == Format::Json {
                println!();
            }
            Ok(())
        }
        Err(e) => {
            eprintln!("{e}");
            Err(ExitCode::from(2))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    let opts = RunOptions { char: cli.char, window: cli.window.clone(), margin: cli.margin };
    let cache = Cache::resolve(cli.cache_dir.as_deref()).map_err(|e| {
        eprintln!("{e}");
        ExitCode::from(2)
    })?;
    let session = match &cli.cmd {
        Cmd::Parse { file } => {
            print!("{}", load(file)?);
            return Ok(ExitCode::SUCCESS);
        }
        Cmd::Corpus { manifest } => {
            let agg = run_corpus(manifest, &opts, cache.as_ref()).map_err(|e| {
                eprintln!("{}: {e}", manifest.display());
                ExitCode::from(2)
            })?;
            let text = match cli.format {
                Format::Json => to_json(&agg).map(|t| t + "\n"),
                Format::Csv => {
                    let reps: Vec<VerificationReport> = agg
                        .entries
                        .iter()
                        .flat_map(|e| serde_json::from_value::<Vec<VerificationReport>>(e.reports.clone()).unwrap_or_default())
                        .collect();
                    rows_to_csv(reps.iter().flat_map(|r| r.rows.iter()))
                }
            };
            print!("{}", text.map_err(|e| {
                eprintln!("{e}");
                ExitCode::from(2)
            })?);
            for e in &agg.entries {
                for d in &e.diagnostics {
                    eprintln!("{}: {d}", e.path);
                }
            }
            return Ok(ExitCode::from(aggregate_exit_code(&agg) as u8));
        }
        Cmd::Run { file } => load(file)?,
        Cmd::Verify { thm, file, name } => restrict(load(file)?, *thm, name.as_deref()).map_err(|e| {
            eprintln!("{}: {e}", file.display());
            ExitCode::from(2)
        })?,
    };
    let payload = run_parsed(&session, &opts, cache.as_ref());
    let verdict: Verdict = serde_json::from_value(payload["verdict"].clone()).unwrap_or(Verdict::InputError);
    for d in payload["diagnostics"].as_array().into_iter().flatten() {
        eprintln!("{}", d.as_str().unwrap_or_default());
    }
    let reports: Vec<VerificationReport> = serde_json::from_value(payload["reports"].clone()).unwrap_or_default();
    emit(&reports, cli.format)?;
    Ok(ExitCode::from(verdict.exit_code() as u8))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli).unwrap_or_else(|c| c)
}
