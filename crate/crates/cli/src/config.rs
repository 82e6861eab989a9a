use std::path::Path;

use bggchar_core::json::load_provider;
use bggchar_core::*;
use clap::ValueEnum;

use crate::CommonArgs;

pub const DEFAULT_DEPTH: u64 = 6;
pub const DEFAULT_DEPTH_CAP: u64 = 1000;
pub const MAX_WINDOW_VOLUME: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Pretty,
}

pub struct RunConfig {
    pub rd: RootDatum,
    pub p: Option<u64>,
    pub ell: Option<u64>,
    pub depth: u64,
    pub output: Output,
    pub provider_spec: Option<String>,
    pub q_provider_spec: Option<String>,
}

/// Comma-separated fundamental-weight coordinates.
pub fn parse_weight(raw: &str) -> Result<Weight> {
    raw.split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| Error::Argument(format!("{raw:?} is not a comma-separated weight")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Weight)
}

impl RunConfig {
    pub fn new(args: CommonArgs) -> Result<Self> {
        let rd = RootDatum::from_label(&args.root_type)?;
        if let Some(p) = args.p {
            if !steinberg::is_prime(p) {
                return Err(Error::Argument(format!("p = {p} is not prime")));
            }
        }
        if let Some(ell) = args.ell {
            // parity, size and the G2 rule for ℓ
            Regime::Quantum { ell, p: args.p.unwrap_or(3) }.validate(&rd)?;
        }
        let depth = args.depth.unwrap_or(DEFAULT_DEPTH);
        if depth == 0 {
            return Err(Error::Argument("depth must be at least 1".into()));
        }
        if depth > args.depth_cap {
            return Err(Error::Argument(format!(
                "depth {depth} exceeds the safety cap {}",
                args.depth_cap
            )));
        }
        Ok(RunConfig {
            rd,
            p: args.p,
            ell: args.ell,
            depth,
            output: args.output,
            provider_spec: args.provider,
            q_provider_spec: args.q_provider,
        })
    }

    pub fn window(&self, top: Weight) -> Result<TruncationWindow> {
        let window = TruncationWindow::new(top, self.depth);
        if window.volume() > MAX_WINDOW_VOLUME {
            return Err(Error::Argument(format!(
                "window of depth {} in rank {} exceeds {MAX_WINDOW_VOLUME} lattice points",
                self.depth,
                self.rd.rank()
            )));
        }
        Ok(window)
    }

    /// Rank-one span check for ledgers: the weights above the cutoff.
    pub fn check_span(&self, n: i64, cutoff: i64) -> Result<()> {
        let span = (n as i128 - cutoff as i128).max(0) as u128 / 2;
        if span > MAX_WINDOW_VOLUME {
            return Err(Error::Argument(format!(
                "cutoff {cutoff} leaves more than {MAX_WINDOW_VOLUME} weights"
            )));
        }
        Ok(())
    }

    /// ℓ when given, otherwise p.
    pub fn modulus(&self) -> Result<u64> {
        self.ell
            .or(self.p)
            .ok_or_else(|| Error::Argument("--p or --ell is required".into()))
    }

    pub fn regime(&self) -> Result<Regime> {
        let p = self
            .p
            .ok_or_else(|| Error::Argument("--p is required".into()))?;
        let regime = match self.ell {
            Some(ell) => Regime::Quantum { ell, p },
            None => Regime::Modular { p },
        };
        regime.validate(&self.rd)?;
        Ok(regime)
    }

    /// `sl2`, `weyl`, or a provider file; the default is `sl2` in type A1
    /// and `weyl` otherwise.
    pub fn provider(&self, modulus: u64, spec: Option<&str>) -> Result<RestrictedCharProvider> {
        let default = if self.rd.label() == "A1" { "sl2" } else { "weyl" };
        let provider = match spec.unwrap_or(default) {
            "sl2" => {
                if self.rd.label() != "A1" {
                    return Err(Error::Argument(format!(
                        "the sl2 provider is for type A1, not {}",
                        self.rd.label()
                    )));
                }
                RestrictedCharProvider::sl2(modulus)?
            }
            "weyl" => RestrictedCharProvider::weyl(&self.rd, modulus)?,
            path => load_provider(Path::new(path))?,
        };
        if provider.root_datum() != &self.rd {
            return Err(Error::Argument(format!(
                "provider is for type {}, not {}",
                provider.root_datum().label(),
                self.rd.label()
            )));
        }
        if provider.modulus() != modulus {
            return Err(Error::Argument(format!(
                "provider modulus {} does not match {modulus}",
                provider.modulus()
            )));
        }
        Ok(provider)
    }
}
