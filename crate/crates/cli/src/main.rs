mod config;
mod render;
mod verify;

use std::process::ExitCode;

use bggchar_core::json::{character_to_json, ledger_to_json, reciprocity_to_json, witness_to_json};
use bggchar_core::*;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use config::{parse_weight, Output, RunConfig};

#[derive(Parser)]
#[command(name = "bggchar", version, about = "Exact characters for modular and quantum BGG categories")]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Root datum label, e.g. A1, B3, G2
    #[arg(long = "type", global = true, default_value = "A1")]
    root_type: String,
    /// Characteristic
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Order of the root of unity; selects the mixed quantum setting
    #[arg(long, global = true)]
    ell: Option<u64>,
    /// Window depth below the top weight
    #[arg(long, global = true)]
    depth: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Restricted characters at modulus p: `sl2`, `weyl`, or a provider file
    #[arg(long, global = true, env = "BGGCHAR_PROVIDER")]
    provider: Option<String>,
    /// Restricted characters at modulus ℓ
    #[arg(long, global = true)]
    q_provider: Option<String>,
    #[arg(long, global = true, default_value_t = config::DEFAULT_DEPTH_CAP)]
    depth_cap: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a character on a truncation window
    Char {
        kind: CharKind,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Decide strong linkage μ ↑ λ and print a witness chain
    Linkage {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Run an identity-verification suite
    Verify {
        suite: verify::Suite,
        #[arg(long, allow_hyphen_values = true)]
        cutoff: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Rank-one composition factors of Δ(n) above a cutoff
    Ledger {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        cutoff: i64,
    },
    /// Rank-one reciprocity between tilting and baby Verma multiplicities
    Reciprocity {
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long, allow_hyphen_values = true)]
        mu: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CharKind {
    Verma,
    Simple,
    Baby,
    Weyl,
    Steinberg,
    Qminus,
}

fn emit(cfg: &RunConfig, value: &Value, pretty: String) {
    match cfg.output {
        Output::Json => println!("{}", serde_json::to_string(value).expect("JSON values serialize")),
        Output::Pretty => print!("{pretty}"),
    }
}

fn run_char(cfg: &RunConfig, kind: CharKind, lambda: Option<&str>) -> Result<ExitCode> {
    let rd = &cfg.rd;
    let lambda = || -> Result<Weight> {
        let raw = lambda.ok_or_else(|| Error::Argument("--lambda is required".into()))?;
        let w = parse_weight(raw)?;
        rd.check_rank(&w)?;
        Ok(w)
    };
    let ch = match kind {
        CharKind::Verma => {
            let l = lambda()?;
            verma_character(&l, rd, &cfg.window(l.clone())?)?
        }
        CharKind::Qminus => q_minus(rd, &cfg.window(-rd.rho())?)?,
        CharKind::Weyl => weyl_character(&lambda()?, rd)?,
        CharKind::Baby => baby_verma_character(&lambda()?, cfg.modulus()?, rd)?,
        CharKind::Steinberg => steinberg_character(cfg.modulus()?, rd)?,
        CharKind::Simple => {
            let l = lambda()?;
            let window = cfg.window(l.clone())?;
            let regime = cfg.regime()?;
            let p_provider = cfg.provider(regime.p(), cfg.provider_spec.as_deref())?;
            let q_provider = match regime {
                Regime::Quantum { ell, .. } => Some(cfg.provider(ell, cfg.q_provider_spec.as_deref())?),
                Regime::Modular { .. } => None,
            };
            for prov in std::iter::once(&p_provider).chain(q_provider.as_ref()) {
                if prov.provenance() == steinberg::WEYL_PROVENANCE {
                    eprintln!(
                        "note: modulus-{} restricted characters are Weyl characters ({})",
                        prov.modulus(),
                        prov.provenance()
                    );
                }
            }
            let req = SimpleCharRequest {
                lambda: l,
                regime,
                r_limit: None,
                window,
            };
            simple_char(&req, &p_provider, q_provider.as_ref())?
        }
    };
    emit(cfg, &character_to_json(&ch), render::character(&ch));
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = RunConfig::new(cli.common)?;
    match cli.command {
        Command::Char { kind, lambda } => run_char(&cfg, kind, lambda.as_deref()),
        Command::Linkage { mu, lambda } => {
            let (mu, lambda) = (parse_weight(&mu)?, parse_weight(&lambda)?);
            let k = cfg.modulus()?;
            let wit = strongly_linked(&mu, &lambda, k, &cfg.rd)?;
            emit(&cfg, &witness_to_json(&wit), render::witness(&wit));
            Ok(if wit.linked { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify { suite, cutoff, n } => {
            let report = verify::run(suite, &cfg, cutoff, n)?;
            emit(&cfg, &report.to_json(), report.render());
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Ledger { n, cutoff } => {
            let regime = cfg.regime()?;
            cfg.check_span(n, cutoff)?;
            let ledger = sl2_composition_factors(n, &regime, cutoff)?;
            emit(&cfg, &ledger_to_json(&ledger), render::ledger(&ledger));
            Ok(ExitCode::SUCCESS)
        }
        Command::Reciprocity { lambda, mu } => {
            let regime = cfg.regime()?;
            let outcome = sl2_reciprocity_check(lambda, mu, &regime)?;
            emit(&cfg, &reciprocity_to_json(&outcome, &regime), render::reciprocity(&outcome));
            Ok(if outcome.equal { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn error_json(e: &Error) -> (Value, u8) {
    let kind = match e {
        Error::UnsupportedType { .. } => "unsupported_type",
        Error::Argument(_) => "argument",
        Error::WindowMismatch(_) => "window_mismatch",
        Error::InsufficientDepth(_) => "insufficient_depth",
        Error::ProviderGap { .. } => "provider_gap",
        Error::RecursionLimit { .. } => "recursion_limit",
        Error::Consistency(_) => "consistency",
        Error::Format(_) => "format",
        Error::Json(_) => "json",
        Error::Io(_) => "io",
    };
    let mut body = json!({"kind": kind, "message": e.to_string()});
    if let Error::ProviderGap { modulus, missing } = e {
        body["modulus"] = json!(modulus);
        body["missing"] = json!(missing.iter().map(|w| w.0.clone()).collect::<Vec<_>>());
        return (json!({ "error": body }), 3);
    }
    (json!({ "error": body }), 2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let (body, code) = error_json(&e);
            println!("{}", serde_json::to_string(&body).expect("JSON values serialize"));
            ExitCode::from(code)
        }
    }
}
