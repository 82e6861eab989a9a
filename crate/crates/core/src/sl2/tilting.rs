use std::collections::BTreeMap;

use super::{sl2_baby_verma_comp, sl2_baby_verma_comp_quantum, validate, WeightCounts};
use crate::error::{Error, Result};
use crate::steinberg::Regime;

type Signed = BTreeMap<i64, i64>;

fn weyl(n: i64) -> Signed {
    (0..=n).map(|j| (n - 2 * j, 1)).collect()
}

fn add(into: &mut Signed, other: &Signed, factor: i64) {
    for (&w, &m) in other {
        *into.entry(w).or_default() += factor * m;
    }
    into.retain(|_, m| *m != 0);
}

fn mul(f: &Signed, g: &Signed) -> Signed {
    let mut out = Signed::new();
    for (&a, &x) in f {
        for (&b, &y) in g {
            *out.entry(a + b).or_default() += x * y;
        }
    }
    out.retain(|_, m| *m != 0);
    out
}

fn stretch(f: &Signed, m: i64) -> Signed {
    f.iter().map(|(&w, &c)| (w * m, c)).collect()
}

/// Coefficients `a_j` with `f = Σ a_j χ(j)` for a W-invariant finite `f`.
pub fn weyl_decomposition(f: &BTreeMap<i64, i64>) -> Result<BTreeMap<i64, i64>> {
    let mut rest = f.clone();
    rest.retain(|_, m| *m != 0);
    let mut out = BTreeMap::new();
    while let Some((&top, &c)) = rest.iter().next_back() {
        if top < 0 {
            return Err(Error::Consistency(format!(
                "character with top weight {top} is not Weyl-invariant"
            )));
        }
        out.insert(top, c);
        add(&mut rest, &weyl(top), -c);
    }
    Ok(out)
}

// T(m) = χ(m) below the first wall, a pair of Weyl characters in the second alcove,
// and Donkin's tensor product formula beyond.
fn tilting_signed(m: i64, regime: &Regime) -> Signed {
    let first = regime.first_modulus() as i64;
    if m < first {
        return weyl(m);
    }
    let shifted = m - first + 1;
    let (r, k) = (shifted.rem_euclid(first), shifted.div_euclid(first));
    let mut low = weyl(first - 1 + r);
    if r > 0 {
        add(&mut low, &weyl(first - 1 - r), 1);
    }
    if k == 0 {
        return low;
    }
    let p = regime.p();
    let twisted = stretch(&tilting_signed(k, &Regime::Modular { p }), first);
    mul(&low, &twisted)
}

/// Character of the indecomposable tilting module `T(m)`, `m ≥ 0`.
pub fn tilting_character(m: i64, regime: &Regime) -> Result<WeightCounts> {
    validate(regime)?;
    if m < 0 {
        return Err(Error::Argument(format!("tilting modules need m ≥ 0, got {m}")));
    }
    tilting_signed(m, regime)
        .into_iter()
        .map(|(w, c)| {
            u64::try_from(c).map(|c| (w, c)).map_err(|_| {
                Error::Consistency(format!("negative tilting multiplicity at {w}"))
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReciprocityOutcome {
    pub lambda: i64,
    pub mu: i64,
    pub r: u32,
    pub lhs: i64,
    pub rhs: i64,
    pub equal: bool,
}

/// Compares the Verma multiplicity of `Δ(μ)` in the indecomposable
/// ∞-tilting module of highest weight `λ` with the multiplicity of
/// `L(−λ−2)` in the baby Verma module at `μ`.
pub fn sl2_reciprocity_check(lambda: i64, mu: i64, regime: &Regime) -> Result<ReciprocityOutcome> {
    validate(regime)?;
    if lambda < -1 {
        return Err(Error::Argument(format!(
            "λ + ρ must be dominant, got λ = {lambda}"
        )));
    }
    let p = regime.p() as i64;
    let first = regime.first_modulus() as i64;
    let (mut r, mut period) = (0u32, first);
    if let Regime::Modular { .. } = regime {
        r = 1;
    }
    while lambda + 1 >= period {
        period *= p;
        r += 1;
    }
    let tilting = tilting_signed(lambda + period, regime);
    // coefficient of e^ν in Char T · (q⁻)^{(period)}
    let coeff = |nu: i64| -> i64 {
        tilting
            .iter()
            .filter(|(&w, _)| {
                let gap = w - nu;
                gap > 0 && gap % period == 0 && (gap / period) % 2 == 1
            })
            .map(|(_, &c)| c)
            .sum()
    };
    let lhs = coeff(mu) - coeff(mu + 2);
    let comp = match *regime {
        Regime::Modular { p } => sl2_baby_verma_comp(mu, r, p)?,
        Regime::Quantum { ell, p } => sl2_baby_verma_comp_quantum(mu, r, ell, p)?,
    };
    let rhs = comp.get(&(-lambda - 2)).copied().unwrap_or(0) as i64;
    Ok(ReciprocityOutcome {
        lambda,
        mu,
        r,
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    // Weyl factors of T(m) from the digits of m + 1 in the radix 1, m₀, m₀p, …:
    // b = a_k P_k ± a_{k−1} P_{k−1} ± … ± a_0, each contributing χ(b − 1).
    fn digit_oracle(m: i64, first: i64, p: i64) -> BTreeSet<i64> {
        let mut digits = Vec::new();
        let mut x = m + 1;
        let mut place = 1;
        let mut radix = first;
        while x > 0 {
            digits.push((x % radix, place));
            x /= radix;
            place *= radix;
            radix = p;
        }
        let (top_digit, top_place) = digits.pop().unwrap();
        let mut values = BTreeSet::from([top_digit * top_place]);
        for (a, pl) in digits.into_iter().rev() {
            values = values
                .into_iter()
                .flat_map(|v| [v + a * pl, v - a * pl])
                .collect();
        }
        values.into_iter().map(|b| b - 1).collect()
    }

    #[test]
    fn tilting_matches_digit_formula() {
        for regime in [
            Regime::Modular { p: 2 },
            Regime::Modular { p: 3 },
            Regime::Modular { p: 5 },
            Regime::Quantum { ell: 5, p: 3 },
            Regime::Quantum { ell: 3, p: 2 },
        ] {
            for m in 0..200 {
                let ch: Signed = tilting_character(m, &regime)
                    .unwrap()
                    .into_iter()
                    .map(|(w, c)| (w, c as i64))
                    .collect();
                let dec = weyl_decomposition(&ch).unwrap();
                assert!(dec.values().all(|&c| c == 1), "{regime} m={m} {dec:?}");
                let got: BTreeSet<i64> = dec.keys().copied().collect();
                let expected = digit_oracle(m, regime.first_modulus() as i64, regime.p() as i64);
                assert_eq!(got, expected, "{regime} m={m}");
            }
        }
    }

    #[test]
    fn tilting_times_natural_is_tilting() {
        for regime in [Regime::Modular { p: 3 }, Regime::Quantum { ell: 5, p: 3 }] {
            for m in 0..80 {
                let mut rest = mul(&tilting_signed(m, &regime), &weyl(1));
                while let Some((&top, &c)) = rest.iter().next_back() {
                    assert!(c > 0, "{regime} m={m}: negative tilting multiplicity");
                    add(&mut rest, &tilting_signed(top, &regime), -c);
                }
            }
        }
    }

    #[test]
    fn reciprocity_examples() {
        let p3 = Regime::Modular { p: 3 };
        let r = sl2_reciprocity_check(0, 0, &p3).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equal), (1, 1, true));
        let r = sl2_reciprocity_check(0, 1, &p3).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equal), (0, 0, true));
        let r = sl2_reciprocity_check(-1, -1, &p3).unwrap();
        assert_eq!((r.lhs, r.rhs, r.equal), (1, 1, true));
        assert!(sl2_reciprocity_check(-2, 0, &p3).is_err());
    }

    #[test]
    fn quantum_reciprocity() {
        let q = Regime::Quantum { ell: 5, p: 3 };
        for lambda in -1..15 {
            for mu in (lambda - 120..=lambda + 4).rev() {
                let r = sl2_reciprocity_check(lambda, mu, &q).unwrap();
                assert!(r.equal, "{r:?}");
            }
        }
    }
}
