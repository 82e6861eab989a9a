use std::fmt::Write;

use bggchar_core::*;
use clap::ValueEnum;
use serde_json::{json, Map, Value};

use crate::config::RunConfig;

const MAX_FAILURES_SHOWN: usize = 10;
const MAX_SUITE_POINTS: u64 = 4096;
const MAX_RECIPROCITY_MODULUS: u64 = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    VermaIdentity,
    SteinbergConsistency,
    Sl2Ledger,
    Reciprocity,
    All,
}

pub struct Check {
    name: &'static str,
    params: Map<String, Value>,
    passed: u64,
    failures: Vec<String>,
    failed: u64,
}

impl Check {
    fn new(name: &'static str, params: Value) -> Self {
        let Value::Object(params) = params else {
            unreachable!("check parameters are objects")
        };
        Check {
            name,
            params,
            passed: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES_SHOWN {
                self.failures.push(describe());
            }
        }
    }
}

pub struct Report {
    suite: Suite,
    checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "params": c.params,
                    "passed": c.passed,
                    "failed": c.failed,
                    "failures": c.failures,
                })
            })
            .collect();
        json!({
            "suite": suite_name(self.suite),
            "passed": self.passed(),
            "checks": checks,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.failed == 0 { "PASS" } else { "FAIL" };
            let params = serde_json::to_string(&c.params).expect("JSON values serialize");
            writeln!(out, "[{verdict}] {} {params}: {} passed, {} failed", c.name, c.passed, c.failed).unwrap();
            for f in &c.failures {
                writeln!(out, "    {f}").unwrap();
            }
        }
        let verdict = if self.passed() { "pass" } else { "fail" };
        writeln!(out, "{}: {verdict}", suite_name(self.suite)).unwrap();
        out
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::VermaIdentity => "verma-identity",
        Suite::SteinbergConsistency => "steinberg-consistency",
        Suite::Sl2Ledger => "sl2-ledger",
        Suite::Reciprocity => "reciprocity",
        Suite::All => "all",
    }
}

pub fn run(suite: Suite, cfg: &RunConfig, cutoff: Option<i64>, n: Option<i64>) -> Result<Report> {
    let checks = match suite {
        Suite::VermaIdentity => vec![verma_identity(cfg)?],
        Suite::SteinbergConsistency => vec![steinberg_consistency(cfg, required_p(cfg)?)?],
        Suite::Sl2Ledger => vec![sl2_ledger(cfg, rank_one_regime(cfg, required_p(cfg)?)?, n, cutoff)?],
        Suite::Reciprocity => vec![reciprocity(rank_one_regime(cfg, required_p(cfg)?)?)?],
        Suite::All => {
            let p = cfg.p.unwrap_or(3);
            let regime = rank_one_regime(cfg, p)?;
            vec![
                verma_identity(cfg)?,
                steinberg_consistency(cfg, p)?,
                sl2_ledger(cfg, regime, n, cutoff)?,
                reciprocity(regime)?,
            ]
        }
    };
    Ok(Report { suite, checks })
}

fn required_p(cfg: &RunConfig) -> Result<u64> {
    cfg.p.ok_or_else(|| Error::Argument("--p is required".into()))
}

fn rank_one_regime(cfg: &RunConfig, p: u64) -> Result<Regime> {
    let regime = match cfg.ell {
        Some(ell) => Regime::Quantum { ell, p },
        None => Regime::Modular { p },
    };
    regime.validate(&RootDatum::from_label("A1")?)?;
    Ok(regime)
}

// every weight with coordinates in [−radius, radius]
fn grid(rank: usize, radius: i64) -> Vec<Weight> {
    let mut points = vec![vec![]];
    for _ in 0..rank {
        points = points
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-radius..=radius).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    points.into_iter().map(Weight).collect()
}

/// `Char Δ(λ) = q⁻·e^{λ+ρ}` on windows at λ.
fn verma_identity(cfg: &RunConfig) -> Result<Check> {
    let rd = &cfg.rd;
    let radius = if rd.rank() <= 2 { 2 } else { 1 };
    let mut check = Check::new(
        "verma-identity",
        json!({"type": rd.label(), "depth": cfg.depth, "radius": radius}),
    );
    let qm = q_minus(rd, &cfg.window(-rd.rho())?)?;
    for lambda in grid(rd.rank(), radius) {
        let window = cfg.window(lambda.clone())?;
        let verma = verma_character(&lambda, rd, &window)?;
        let shift = Character::monomial(rd, &lambda + rd.rho());
        let product = char_mul(&qm, &shift, Some(&window))?;
        check.record(product == verma, || format!("λ = {lambda}"));
    }
    Ok(check)
}

/// Expanding at modulus p twice agrees with one expansion at modulus p².
fn steinberg_consistency(cfg: &RunConfig, p: u64) -> Result<Check> {
    let rd = &cfg.rd;
    let p2 = p * p;
    let points = p2.checked_pow(rd.rank() as u32).filter(|&n| n <= MAX_SUITE_POINTS);
    let Some(points) = points else {
        return Err(Error::Argument(format!(
            "X_{p2} in rank {} exceeds {MAX_SUITE_POINTS} weights",
            rd.rank()
        )));
    };
    let provider = cfg.provider(p, cfg.provider_spec.as_deref())?;
    let lifted = provider.lift(2)?;
    let mut check = Check::new(
        "steinberg-consistency",
        json!({"type": rd.label(), "p": p, "depth": cfg.depth, "provenance": provider.provenance()}),
    );
    for idx in 0..points {
        let mut rest = idx;
        let lambda = Weight(
            (0..rd.rank())
                .map(|_| {
                    let c = (rest % p2) as i64;
                    rest /= p2;
                    c
                })
                .collect(),
        );
        let window = cfg.window(lambda.clone())?;
        let twice = simple_char_modular(&lambda, p, &window, None, &provider)?;
        let once = lifted.get(&lambda)?.restrict(&window)?;
        check.record(twice.terms() == once.terms(), || format!("λ = {lambda}"));
    }
    Ok(check)
}

/// Conservation, linkage and socle checks for a rank-one ledger.
fn sl2_ledger(cfg: &RunConfig, regime: Regime, n: Option<i64>, cutoff: Option<i64>) -> Result<Check> {
    let n = n.unwrap_or(0);
    let cutoff = cutoff.unwrap_or(n - 6 * (regime.first_modulus() * regime.p()) as i64);
    cfg.check_span(n, cutoff)?;
    let ledger = sl2_composition_factors(n, &regime, cutoff)?;
    let factors: Vec<i64> = ledger.factors.keys().rev().copied().collect();
    let mut check = Check::new(
        "sl2-ledger",
        json!({
            "regime": bggchar_core::json::regime_to_json(&regime),
            "n": n,
            "cutoff": cutoff,
            "factors": factors,
        }),
    );
    check.record(ledger.conserves()?, || "character not conserved".into());
    if let Regime::Modular { p } = regime {
        let a1 = RootDatum::from_label("A1")?;
        let down = linkage_downset(&Weight(vec![n]), p, &a1, &ledger.window())?;
        for f in &factors {
            check.record(down.contains(&Weight(vec![*f])), || format!("factor {f} is not linked to {n}"));
        }
    }
    if let Some(socle) = sl2_socle(n, &regime)? {
        if socle > cutoff {
            check.record(ledger.factors.contains_key(&socle), || format!("socle L({socle}) missing"));
        }
    }
    Ok(check)
}

/// Tilting/baby-Verma reciprocity for λ ∈ [−1, m² − 1], m the first modulus.
fn reciprocity(regime: Regime) -> Result<Check> {
    let m = regime.first_modulus();
    if m > MAX_RECIPROCITY_MODULUS {
        return Err(Error::Argument(format!(
            "modulus {m} exceeds the suite cap {MAX_RECIPROCITY_MODULUS}"
        )));
    }
    let mi = m as i64;
    let a1 = RootDatum::from_label("A1")?;
    let mut check = Check::new(
        "reciprocity",
        json!({"regime": bggchar_core::json::regime_to_json(&regime), "lambda_max": mi * mi - 1}),
    );
    for lambda in -1..=mi * mi - 1 {
        let mus: Vec<i64> = match regime {
            Regime::Modular { p } => {
                let window = TruncationWindow::new(Weight(vec![lambda]), 3 * m * m);
                linkage_downset(&Weight(vec![lambda]), p, &a1, &window)?
                    .into_iter()
                    .map(|w| w.0[0])
                    .collect()
            }
            Regime::Quantum { .. } => (0..=3 * mi * mi).map(|j| lambda - 2 * j).collect(),
        };
        for mu in mus {
            let o = sl2_reciprocity_check(lambda, mu, &regime)?;
            check.record(o.equal, || {
                format!("λ = {lambda}, μ = {mu}: {} ≠ {}", o.lhs, o.rhs)
            });
        }
    }
    Ok(check)
}
