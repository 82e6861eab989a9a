//! Explicit rank-one structure: simple characters for every highest weight,
//! Verma filtrations, composition ledgers, socles, tilting characters and
//! the reciprocity identity.
//!
//! Weights are plain integers `n`, standing for `n·ω`.

mod ledger;
mod tilting;

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::charring::{Character, TruncationWindow};
use crate::error::{Error, Result};
use crate::rootsys::{RootDatum, Weight};
use crate::steinberg::Regime;

pub use ledger::{sl2_composition_factors, CompositionLedger, RemainderItem};
pub use tilting::{
    sl2_reciprocity_check, tilting_character, weyl_decomposition, ReciprocityOutcome,
};

pub type Sl2Regime = Regime;

/// Weight multiplicities of a rank-one character, keyed by integer weight.
pub type WeightCounts = BTreeMap<i64, u64>;

/// `L(restricted_part) ⊗ Δ(verma_part)^{(twist)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiltrationQuotient {
    pub restricted_part: i64,
    pub verma_part: i64,
    pub twist: u64,
}

impl FiltrationQuotient {
    pub fn highest_weight(&self) -> i64 {
        self.restricted_part + self.twist as i64 * self.verma_part
    }
}

pub(crate) fn a1() -> RootDatum {
    RootDatum::from_label("A1").expect("A1 is supported")
}

fn validate(regime: &Regime) -> Result<()> {
    regime.validate(&a1())
}

/// Digit moduli: `ℓ, p, p, …` or `p, p, …`.
fn modulus_at(regime: &Regime, position: usize) -> u64 {
    if position == 0 {
        regime.first_modulus()
    } else {
        regime.p()
    }
}

// n = Σ d_k s_k (+ s_r·(−1) tail); digits (d_k, s_k) and the tail scale.
fn digit_expansion(n: i64, regime: &Regime) -> (Vec<(i64, i64)>, Option<i64>) {
    let mut digits = Vec::new();
    let mut cur = n;
    let mut scale = 1i64;
    let mut position = 0;
    while cur != 0 && cur != -1 {
        let m = modulus_at(regime, position) as i64;
        digits.push((cur.rem_euclid(m), scale));
        cur = cur.div_euclid(m);
        scale *= m;
        position += 1;
    }
    (digits, (cur == -1).then_some(scale))
}

fn add_counts(into: &mut WeightCounts, w: i64, m: u64) {
    if m > 0 {
        *into.entry(w).or_default() += m;
    }
}

/// Weights `≥ bottom` of the simple module of highest weight `n`.
pub fn simple_weights(n: i64, regime: &Regime, bottom: i64) -> WeightCounts {
    let (digits, tail) = digit_expansion(n, regime);
    let mut finite = WeightCounts::from([(0i64, 1u64)]);
    for (d, s) in digits {
        let mut next = WeightCounts::new();
        for (&w, &m) in &finite {
            for j in 0..=d {
                add_counts(&mut next, w + s * (d - 2 * j), m);
            }
        }
        finite = next;
    }
    let mut out = WeightCounts::new();
    for (&w, &m) in &finite {
        match tail {
            None => {
                if w >= bottom {
                    add_counts(&mut out, w, m);
                }
            }
            Some(s) => {
                let mut t = w - s;
                while t >= bottom {
                    add_counts(&mut out, t, m);
                    t -= 2 * s;
                }
            }
        }
    }
    out
}

/// Weights `≥ bottom` of `L(s) ⊗ Δ(v)^{(t)}`.
pub fn quotient_weights(q: &FiltrationQuotient, regime: &Regime, bottom: i64) -> WeightCounts {
    let t = q.twist as i64;
    let head = simple_weights(q.restricted_part, regime, i64::MIN / 4);
    let mut out = WeightCounts::new();
    for (&w, &m) in &head {
        let mut x = w + t * q.verma_part;
        while x >= bottom {
            add_counts(&mut out, x, m);
            x -= 2 * t;
        }
    }
    out
}

fn window_bottom(window: &TruncationWindow) -> i64 {
    window.top.0[0] - 2 * window.depth as i64
}

fn counts_to_character(counts: WeightCounts, window: &TruncationWindow) -> Result<Character> {
    let rd = a1();
    let terms: Vec<_> = counts
        .into_iter()
        .map(|(w, m)| (Weight(vec![w]), BigUint::from(m)))
        .filter(|(w, _)| window.contains(w, &rd))
        .collect();
    Character::from_terms(&rd, window.clone(), false, terms)
}

/// `Char L(n)` on `window`, for every integer `n`.
pub fn sl2_simple_char(n: i64, regime: &Regime, window: &TruncationWindow) -> Result<Character> {
    validate(regime)?;
    a1().check_rank(&window.top)?;
    counts_to_character(simple_weights(n, regime, window_bottom(window)), window)
}

/// `Char L(s) · (Char Δ(v))^{(t)}` on `window`.
pub fn quotient_character(
    q: &FiltrationQuotient,
    regime: &Regime,
    window: &TruncationWindow,
) -> Result<Character> {
    validate(regime)?;
    a1().check_rank(&window.top)?;
    counts_to_character(quotient_weights(q, regime, window_bottom(window)), window)
}

/// One filtration step of `Δ(n)` at modulus `m`, submodule first.
pub(crate) fn filtration_step_at(n: i64, m: u64) -> Vec<FiltrationQuotient> {
    let mi = m as i64;
    if (n + 1).rem_euclid(mi) == 0 {
        return vec![FiltrationQuotient {
            restricted_part: mi - 1,
            verma_part: (n + 1) / mi - 1,
            twist: m,
        }];
    }
    let (n0, n1) = (n.rem_euclid(mi), n.div_euclid(mi));
    vec![
        FiltrationQuotient {
            restricted_part: mi - n0 - 2,
            verma_part: n1 - 1,
            twist: m,
        },
        FiltrationQuotient {
            restricted_part: n0,
            verma_part: n1,
            twist: m,
        },
    ]
}

/// Filtration of `Δ(n)` by twisted Verma modules at the regime's first modulus.
pub fn sl2_verma_filtration_step(n: i64, regime: &Regime) -> Result<Vec<FiltrationQuotient>> {
    validate(regime)?;
    Ok(filtration_step_at(n, regime.first_modulus()))
}

/// Highest weight of the socle of `Δ(n)`; none when `n ≤ −2`.
pub fn sl2_socle(n: i64, regime: &Regime) -> Result<Option<i64>> {
    validate(regime)?;
    Ok(match n {
        n if n >= 0 => Some(-n - 2),
        -1 => Some(-1),
        _ => None,
    })
}

// Applies `steps` filtration rounds (moduli ℓ then p, or p throughout) to
// every quotient, returning the composition labels s + t·v.
fn baby_verma_labels(n: i64, regime: &Regime, steps: u32) -> WeightCounts {
    let mut items = vec![FiltrationQuotient {
        restricted_part: 0,
        verma_part: n,
        twist: 1,
    }];
    for round in 0..steps {
        let m = modulus_at(regime, round as usize);
        items = items
            .into_iter()
            .flat_map(|q| {
                filtration_step_at(q.verma_part, m)
                    .into_iter()
                    .map(move |sub| FiltrationQuotient {
                        restricted_part: q.restricted_part + q.twist as i64 * sub.restricted_part,
                        verma_part: sub.verma_part,
                        twist: q.twist * sub.twist,
                    })
            })
            .collect();
    }
    let mut labels = WeightCounts::new();
    for q in items {
        add_counts(&mut labels, q.highest_weight(), 1);
    }
    labels
}

/// Composition multiset of the baby Verma module `Δ̃_r(n)` at modulus `p^r`.
pub fn sl2_baby_verma_comp(n: i64, r: u32, p: u64) -> Result<WeightCounts> {
    if r == 0 {
        return Err(Error::Argument("r must be positive".into()));
    }
    validate(&Regime::Modular { p })?;
    Ok(baby_verma_labels(n, &Regime::Modular { p }, r))
}

/// Mixed version at modulus `ℓp^r`: one `ℓ`-round followed by `r` rounds at `p`.
pub fn sl2_baby_verma_comp_quantum(n: i64, r: u32, ell: u64, p: u64) -> Result<WeightCounts> {
    let regime = Regime::Quantum { ell, p };
    validate(&regime)?;
    Ok(baby_verma_labels(n, &regime, r + 1))
}
