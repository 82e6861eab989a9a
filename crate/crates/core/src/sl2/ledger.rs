use std::collections::{BTreeMap, VecDeque};

use super::{
    add_counts, a1, filtration_step_at, modulus_at, quotient_weights, simple_weights, validate,
    FiltrationQuotient, WeightCounts,
};
use crate::charring::{char_add, verma_character, Character, TruncationWindow};
use crate::error::{Error, Result};
use crate::rootsys::Weight;
use crate::steinberg::Regime;

/// An unexpanded quotient whose weights above the cutoff, if any, are
/// exhausted by its head (which is then listed among the factors).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RemainderItem {
    pub quotient: FiltrationQuotient,
    pub head_peeled: bool,
}

/// Composition factors of `Δ(n)` with highest weight above `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionLedger {
    pub n: i64,
    pub regime: Regime,
    pub cutoff: i64,
    pub factors: BTreeMap<i64, u64>,
    pub remainder: Vec<RemainderItem>,
}

// twisted quotients are refined at modulus ℓ only while untwisted
fn step_modulus(regime: &Regime, twist: u64) -> u64 {
    modulus_at(regime, usize::from(twist != 1))
}

/// Expands `Δ(n)` by repeated filtration steps until every weight above
/// `cutoff` is accounted for by a simple factor.
pub fn sl2_composition_factors(n: i64, regime: &Regime, cutoff: i64) -> Result<CompositionLedger> {
    validate(regime)?;
    if cutoff >= n {
        return Err(Error::Argument(format!("cutoff {cutoff} must lie below {n}")));
    }
    let bottom = cutoff + 1;
    let mut ledger = CompositionLedger {
        n,
        regime: *regime,
        cutoff,
        factors: BTreeMap::new(),
        remainder: Vec::new(),
    };
    let mut work = VecDeque::from([FiltrationQuotient {
        restricted_part: 0,
        verma_part: n,
        twist: 1,
    }]);
    while let Some(q) = work.pop_front() {
        let head = q.highest_weight();
        if q.verma_part == -1 {
            // Δ(−1) is simple, so the quotient is the simple module L(head)
            if head > cutoff {
                *ledger.factors.entry(head).or_default() += 1;
            } else {
                ledger.remainder.push(RemainderItem {
                    quotient: q,
                    head_peeled: false,
                });
            }
            continue;
        }
        if head <= cutoff {
            ledger.remainder.push(RemainderItem {
                quotient: q,
                head_peeled: false,
            });
            continue;
        }
        let whole = quotient_weights(&q, regime, bottom);
        if whole == simple_weights(head, regime, bottom) {
            *ledger.factors.entry(head).or_default() += 1;
            ledger.remainder.push(RemainderItem {
                quotient: q,
                head_peeled: true,
            });
            continue;
        }
        let m = step_modulus(regime, q.twist);
        for sub in filtration_step_at(q.verma_part, m) {
            work.push_back(FiltrationQuotient {
                restricted_part: q.restricted_part + q.twist as i64 * sub.restricted_part,
                verma_part: sub.verma_part,
                twist: q.twist * sub.twist,
            });
        }
    }
    Ok(ledger)
}

impl CompositionLedger {
    /// The window of weights strictly above the cutoff.
    pub fn window(&self) -> TruncationWindow {
        let depth = (self.n - self.cutoff - 1) / 2;
        TruncationWindow::new(Weight(vec![self.n]), depth as u64)
    }

    fn bottom(&self) -> i64 {
        self.cutoff + 1
    }

    /// Weights above the cutoff of the remainder, net of peeled heads.
    pub fn remainder_weights(&self) -> WeightCounts {
        let mut out = WeightCounts::new();
        for item in &self.remainder {
            let mut counts = quotient_weights(&item.quotient, &self.regime, self.bottom());
            if item.head_peeled {
                for (w, m) in simple_weights(item.quotient.highest_weight(), &self.regime, self.bottom()) {
                    let entry = counts.entry(w).or_default();
                    *entry -= m;
                }
                counts.retain(|_, m| *m > 0);
            }
            for (w, m) in counts {
                add_counts(&mut out, w, m);
            }
        }
        out
    }

    /// Σ factor characters plus the remainder, above the cutoff.
    pub fn total_character(&self) -> Result<Character> {
        let window = self.window();
        let mut total = Character::zero(&a1(), window.clone(), false);
        for (&f, &mult) in &self.factors {
            let ch = super::counts_to_character(simple_weights(f, &self.regime, self.bottom()), &window)?;
            for _ in 0..mult {
                total = char_add(&total, &ch)?;
            }
        }
        let rest = super::counts_to_character(self.remainder_weights(), &window)?;
        char_add(&total, &rest)
    }

    /// Whether the ledger accounts for the Verma character above the cutoff.
    pub fn conserves(&self) -> Result<bool> {
        let window = self.window();
        let verma = verma_character(&Weight(vec![self.n]), &a1(), &window)?;
        Ok(self.total_character()? == verma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkage::linkage_downset;

    fn keys(l: &CompositionLedger) -> Vec<i64> {
        l.factors.keys().copied().collect()
    }

    #[test]
    fn modular_zero_example() {
        let l = sl2_composition_factors(0, &Regime::Modular { p: 3 }, -54).unwrap();
        assert_eq!(keys(&l), vec![-18, -6, -2, 0]);
        assert!(l.factors.values().all(|&m| m == 1));
        assert_eq!(
            l.remainder,
            vec![RemainderItem {
                quotient: FiltrationQuotient {
                    restricted_part: 0,
                    verma_part: 0,
                    twist: 27
                },
                head_peeled: true
            }]
        );
        assert!(l.conserves().unwrap());
    }

    #[test]
    fn quantum_zero_example() {
        let l = sl2_composition_factors(0, &Regime::Quantum { ell: 5, p: 3 }, -40).unwrap();
        assert_eq!(keys(&l), vec![-30, -10, -2, 0]);
        assert!(l.conserves().unwrap());
    }

    #[test]
    fn special_verma_is_simple() {
        for cutoff in [-3, -20, -100] {
            let l = sl2_composition_factors(-1, &Regime::Modular { p: 3 }, cutoff).unwrap();
            assert_eq!(keys(&l), vec![-1]);
            assert!(l.remainder.is_empty());
        }
    }

    #[test]
    fn cutoff_must_lie_below() {
        assert!(sl2_composition_factors(0, &Regime::Modular { p: 3 }, 0).is_err());
    }

    #[test]
    fn ledgers_conserve_and_respect_linkage() {
        let rd = a1();
        for regime in [
            Regime::Modular { p: 2 },
            Regime::Modular { p: 3 },
            Regime::Modular { p: 5 },
            Regime::Quantum { ell: 5, p: 3 },
        ] {
            for n in -20..20 {
                for depth in [3i64, 10, 25] {
                    let cutoff = n - 2 * depth - 1;
                    let l = sl2_composition_factors(n, &regime, cutoff).unwrap();
                    assert!(l.conserves().unwrap(), "{regime} n={n} cutoff={cutoff}");
                    if let Regime::Modular { p } = regime {
                        let down = linkage_downset(&Weight(vec![n]), p, &rd, &l.window()).unwrap();
                        for f in l.factors.keys() {
                            assert!(down.contains(&Weight(vec![*f])), "{regime} n={n} factor {f}");
                        }
                    }
                    if n >= 0 && -n - 2 > cutoff {
                        assert!(l.factors.contains_key(&(-n - 2)), "socle missing n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn socle_is_the_unique_antidominant_factor_at_first_depth() {
        for regime in [Regime::Modular { p: 2 }, Regime::Modular { p: 3 }, Regime::Modular { p: 5 }] {
            for n in 0..40 {
                let l = sl2_composition_factors(n, &regime, -n - 3).unwrap();
                let anti: Vec<i64> = l.factors.keys().copied().filter(|&f| f <= -1).collect();
                assert_eq!(anti, vec![-n - 2], "{regime} n={n}");
                assert_eq!(l.factors[&(-n - 2)], 1);
            }
        }
    }
}
