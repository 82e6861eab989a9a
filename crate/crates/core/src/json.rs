//! Deterministic JSON forms. Supports are sorted and field order is fixed,
//! so equal values serialize to identical bytes.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::charring::{Character, TruncationWindow};
use crate::error::{Error, Result};
use crate::linkage::LinkageWitness;
use crate::rootsys::{RootDatum, Weight};
use crate::sl2::{CompositionLedger, ReciprocityOutcome};
use crate::steinberg::{Regime, RestrictedCharProvider};

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    #[serde(rename = "type")]
    root_type: String,
    top: Vec<i64>,
    depth: u64,
    exact_outside: bool,
    terms: Vec<(Vec<i64>, Number)>,
}

fn big_to_number(n: &BigUint) -> Number {
    Number::from_str(&n.to_string()).expect("decimal digits form a JSON number")
}

fn number_to_big(n: &Number) -> Result<BigUint> {
    BigUint::from_str(&n.to_string())
        .map_err(|_| Error::Format(format!("multiplicity {n} is not a nonnegative integer")))
}

fn character_json(ch: &Character) -> CharacterJson {
    CharacterJson {
        root_type: ch.root_datum().label().to_string(),
        top: ch.window().top.0.clone(),
        depth: ch.window().depth,
        exact_outside: ch.is_exact(),
        terms: ch
            .terms()
            .iter()
            .map(|(w, m)| (w.0.clone(), big_to_number(m)))
            .collect(),
    }
}

fn character_from(raw: CharacterJson) -> Result<Character> {
    let rd = RootDatum::from_label(&raw.root_type)?;
    let window = TruncationWindow::new(Weight(raw.top), raw.depth);
    let mut terms = Vec::with_capacity(raw.terms.len());
    for (w, m) in raw.terms {
        let w = Weight(w);
        rd.check_rank(&w)?;
        terms.push((w, number_to_big(&m)?));
    }
    Character::from_terms(&rd, window, raw.exact_outside, terms)
}

pub fn character_to_json(ch: &Character) -> Value {
    serde_json::to_value(character_json(ch)).expect("character JSON is well formed")
}

pub fn character_from_json(v: &Value) -> Result<Character> {
    character_from(CharacterJson::deserialize(v)?)
}

#[derive(Serialize, Deserialize)]
struct ProviderJson {
    modulus: u64,
    #[serde(rename = "type")]
    root_type: String,
    provenance: String,
    table: BTreeMap<String, CharacterJson>,
}

fn weight_key(w: &Weight) -> String {
    w.0.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn parse_key(key: &str) -> Result<Weight> {
    key.split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| Error::Format(format!("provider key {key:?} is not a weight")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Weight)
}

/// Provider file contents; table keys are comma-separated coordinates.
pub fn provider_to_json(provider: &RestrictedCharProvider) -> Result<Value> {
    let table = provider
        .to_table()?
        .iter()
        .map(|(k, ch)| (weight_key(k), character_json(ch)))
        .collect();
    let raw = ProviderJson {
        modulus: provider.modulus(),
        root_type: provider.root_datum().label().to_string(),
        provenance: provider.provenance().to_string(),
        table,
    };
    Ok(serde_json::to_value(raw)?)
}

pub fn provider_from_json(v: &Value) -> Result<RestrictedCharProvider> {
    let raw = ProviderJson::deserialize(v)?;
    let rd = RootDatum::from_label(&raw.root_type)?;
    let mut table = BTreeMap::new();
    for (key, ch) in raw.table {
        let w = parse_key(&key)?;
        rd.check_rank(&w)?;
        table.insert(w, character_from(ch)?);
    }
    RestrictedCharProvider::from_table(&rd, raw.modulus, raw.provenance, table)
}

pub fn load_provider(path: &Path) -> Result<RestrictedCharProvider> {
    let text = std::fs::read_to_string(path)?;
    provider_from_json(&serde_json::from_str(&text)?)
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RegimeJson {
    Modular { p: u64 },
    Quantum { ell: u64, p: u64 },
}

pub fn regime_to_json(regime: &Regime) -> Value {
    let raw = match *regime {
        Regime::Modular { p } => RegimeJson::Modular { p },
        Regime::Quantum { ell, p } => RegimeJson::Quantum { ell, p },
    };
    serde_json::to_value(raw).expect("regime JSON is well formed")
}

#[derive(Serialize)]
struct RemainderItemJson {
    restricted_part: i64,
    verma_part: i64,
    twist: u64,
    head_peeled: bool,
}

#[derive(Serialize)]
struct RemainderJson {
    items: Vec<RemainderItemJson>,
}

#[derive(Serialize)]
struct LedgerJson {
    n: i64,
    regime: Value,
    cutoff: i64,
    factors: Vec<(i64, u64)>,
    remainder: Option<RemainderJson>,
}

pub fn ledger_to_json(ledger: &CompositionLedger) -> Value {
    let items: Vec<_> = ledger
        .remainder
        .iter()
        .map(|item| RemainderItemJson {
            restricted_part: item.quotient.restricted_part,
            verma_part: item.quotient.verma_part,
            twist: item.quotient.twist,
            head_peeled: item.head_peeled,
        })
        .collect();
    let raw = LedgerJson {
        n: ledger.n,
        regime: regime_to_json(&ledger.regime),
        cutoff: ledger.cutoff,
        factors: ledger.factors.iter().map(|(&w, &m)| (w, m)).collect(),
        remainder: (!items.is_empty()).then_some(RemainderJson { items }),
    };
    serde_json::to_value(raw).expect("ledger JSON is well formed")
}

#[derive(Serialize)]
struct ReflectionJson {
    beta: Vec<i64>,
    m: i64,
    modulus: u64,
}

#[derive(Serialize)]
struct StepJson {
    from: Vec<i64>,
    reflection: ReflectionJson,
    to: Vec<i64>,
}

#[derive(Serialize)]
struct WitnessJson {
    linked: bool,
    mu: Vec<i64>,
    lambda: Vec<i64>,
    modulus: u64,
    chain: Vec<StepJson>,
}

pub fn witness_to_json(w: &LinkageWitness) -> Value {
    let raw = WitnessJson {
        linked: w.linked,
        mu: w.mu.0.clone(),
        lambda: w.lambda.0.clone(),
        modulus: w.modulus,
        chain: w
            .chain
            .iter()
            .map(|s| StepJson {
                from: s.from.0.clone(),
                reflection: ReflectionJson {
                    beta: s.reflection.beta.0.clone(),
                    m: s.reflection.m,
                    modulus: s.reflection.modulus,
                },
                to: s.to.0.clone(),
            })
            .collect(),
    };
    serde_json::to_value(raw).expect("witness JSON is well formed")
}

#[derive(Serialize)]
struct ReciprocityJson {
    lambda: i64,
    mu: i64,
    regime: Value,
    r: u32,
    lhs: i64,
    rhs: i64,
    equal: bool,
}

pub fn reciprocity_to_json(outcome: &ReciprocityOutcome, regime: &Regime) -> Value {
    let raw = ReciprocityJson {
        lambda: outcome.lambda,
        mu: outcome.mu,
        regime: regime_to_json(regime),
        r: outcome.r,
        lhs: outcome.lhs,
        rhs: outcome.rhs,
        equal: outcome.equal,
    };
    serde_json::to_value(raw).expect("reciprocity JSON is well formed")
}
