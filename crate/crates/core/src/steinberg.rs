//! Simple characters assembled from restricted data by Steinberg-type tensor
//! product expansions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::One;

use crate::charring::{
    char_mul, frobenius_stretch, q_minus_at_depth, steinberg_character, weyl_character,
    Character, TruncationWindow,
};
use crate::error::{Error, Result};
use crate::rootsys::{adic_decompose, RootDatum, Weight};

pub const WEYL_PROVENANCE: &str = "Weyl characters; valid for generic q / large p only";
pub const SL2_PROVENANCE: &str = "exact rank-one restricted simples";

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Modular (`p`) or mixed quantum (`ℓ`, then `p`) setting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    Modular { p: u64 },
    Quantum { ell: u64, p: u64 },
}

impl Regime {
    pub fn p(&self) -> u64 {
        match *self {
            Regime::Modular { p } | Regime::Quantum { p, .. } => p,
        }
    }

    /// Modulus of the first digit.
    pub fn first_modulus(&self) -> u64 {
        match *self {
            Regime::Modular { p } => p,
            Regime::Quantum { ell, .. } => ell,
        }
    }

    pub fn validate(&self, rd: &RootDatum) -> Result<()> {
        let p = self.p();
        if !is_prime(p) {
            return Err(Error::Argument(format!("p = {p} is not prime")));
        }
        if let Regime::Quantum { ell, .. } = *self {
            if ell <= 1 || ell % 2 == 0 {
                return Err(Error::Argument(format!("ℓ = {ell} must be odd and greater than 1")));
            }
            if rd.label() == "G2" && ell % 3 == 0 {
                return Err(Error::Argument(format!(
                    "ℓ = {ell} must not be divisible by 3 in type G2"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::Modular { p } => write!(f, "p={p}"),
            Regime::Quantum { ell, p } => write!(f, "ℓ={ell}, p={p}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimpleCharRequest {
    pub lambda: Weight,
    pub regime: Regime,
    pub r_limit: Option<u32>,
    pub window: TruncationWindow,
}

#[derive(Clone)]
enum Source {
    Table(BTreeMap<Weight, Character>),
    Weyl,
    Lifted { base: RestrictedCharProvider, power: u32 },
}

/// Characters of the simple modules with restricted highest weight.
#[derive(Clone)]
pub struct RestrictedCharProvider {
    inner: Arc<ProviderInner>,
}

struct ProviderInner {
    rd: RootDatum,
    modulus: u64,
    provenance: String,
    source: Source,
    cache: Mutex<HashMap<Weight, Character>>,
}

impl fmt::Debug for RestrictedCharProvider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RestrictedCharProvider")
            .field("type", &self.inner.rd.label())
            .field("modulus", &self.inner.modulus)
            .field("provenance", &self.inner.provenance)
            .finish()
    }
}

impl RestrictedCharProvider {
    fn from_source(rd: &RootDatum, modulus: u64, provenance: String, source: Source) -> Self {
        RestrictedCharProvider {
            inner: Arc::new(ProviderInner {
                rd: rd.clone(),
                modulus,
                provenance,
                source,
                cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    /// Validated table of restricted characters.
    pub fn from_table(
        rd: &RootDatum,
        modulus: u64,
        provenance: impl Into<String>,
        table: BTreeMap<Weight, Character>,
    ) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Argument(format!("modulus {modulus} must be at least 2")));
        }
        let steinberg_weight = rd.rho().scaled(modulus as i64 - 1);
        for (key, ch) in &table {
            rd.check_rank(key)?;
            if !key.is_restricted(modulus) {
                return Err(Error::Format(format!(
                    "provider key {key} is not restricted for modulus {modulus}"
                )));
            }
            if ch.root_datum() != rd {
                return Err(Error::Format(format!(
                    "provider entry {key} is a character of {}",
                    ch.root_datum().label()
                )));
            }
            if !ch.is_exact() {
                return Err(Error::Format(format!("provider entry {key} is not finitely supported")));
            }
            if ch.coeff(key) != BigUint::one() {
                return Err(Error::Format(format!(
                    "provider entry {key} does not have top coefficient 1"
                )));
            }
            if let Some(w) = ch.terms().keys().find(|w| !rd.dominance_leq(w, key)) {
                return Err(Error::Format(format!(
                    "provider entry {key} has weight {w} not below its key"
                )));
            }
            if *key == steinberg_weight {
                let st = steinberg_character(modulus, rd)?;
                if st.terms() != ch.terms() {
                    return Err(Error::Format(format!(
                        "provider entry {key} differs from the Steinberg character"
                    )));
                }
            }
        }
        Ok(Self::from_source(rd, modulus, provenance.into(), Source::Table(table)))
    }

    /// Exact rank-one provider: the simple module of restricted highest
    /// weight `n < m` has character `e^n + e^{n−2} + … + e^{−n}`.
    pub fn sl2(m: u64) -> Result<Self> {
        let rd = RootDatum::from_label("A1")?;
        let table = (0..m as i64)
            .map(|n| {
                let key = Weight(vec![n]);
                weyl_character(&key, &rd).map(|ch| (key, ch))
            })
            .collect::<Result<_>>()?;
        Self::from_table(&rd, m, SL2_PROVENANCE, table)
    }

    /// Weyl characters at every restricted weight, computed on demand.
    pub fn weyl(rd: &RootDatum, m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Argument(format!("modulus {m} must be at least 2")));
        }
        Ok(Self::from_source(rd, m, WEYL_PROVENANCE.into(), Source::Weyl))
    }

    /// The provider for modulus `m^r` obtained by multiplying stretched digit characters.
    pub fn lift(&self, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::Argument("lift exponent must be positive".into()));
        }
        if r == 1 {
            return Ok(self.clone());
        }
        let modulus = self
            .inner
            .modulus
            .checked_pow(r)
            .ok_or_else(|| Error::Argument(format!("modulus {}^{r} overflows", self.inner.modulus)))?;
        Ok(Self::from_source(
            &self.inner.rd,
            modulus,
            format!("{} (lifted to modulus {modulus})", self.inner.provenance),
            Source::Lifted {
                base: self.clone(),
                power: r,
            },
        ))
    }

    pub fn modulus(&self) -> u64 {
        self.inner.modulus
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.inner.rd
    }

    pub fn provenance(&self) -> &str {
        &self.inner.provenance
    }

    /// Stored entries, when the provider is table-backed.
    pub fn table(&self) -> Option<&BTreeMap<Weight, Character>> {
        match &self.inner.source {
            Source::Table(t) => Some(t),
            _ => None,
        }
    }

    /// Every entry over `X_m`, evaluated.
    pub fn to_table(&self) -> Result<BTreeMap<Weight, Character>> {
        if let Some(t) = self.table() {
            return Ok(t.clone());
        }
        let n = self.inner.rd.rank();
        let m = self.inner.modulus;
        let count = m.checked_pow(n as u32).ok_or_else(|| {
            Error::Argument(format!("X_{m} is too large to tabulate"))
        })?;
        (0..count)
            .map(|mut idx| {
                let coords: Vec<i64> = (0..n)
                    .map(|_| {
                        let c = (idx % m) as i64;
                        idx /= m;
                        c
                    })
                    .collect();
                let key = Weight(coords);
                self.get(&key).map(|ch| (key, ch))
            })
            .collect()
    }

    /// Character of the simple module with restricted highest weight `lambda0`.
    pub fn get(&self, lambda0: &Weight) -> Result<Character> {
        let rd = &self.inner.rd;
        rd.check_rank(lambda0)?;
        let m = self.inner.modulus;
        if !lambda0.is_restricted(m) {
            return Err(Error::Argument(format!(
                "{lambda0} is not restricted for modulus {m}"
            )));
        }
        if lambda0.is_zero() {
            return Ok(Character::monomial(rd, lambda0.clone()));
        }
        if let Source::Table(t) = &self.inner.source {
            return t.get(lambda0).cloned().ok_or_else(|| Error::ProviderGap {
                modulus: m,
                missing: vec![lambda0.clone()],
            });
        }
        if let Some(ch) = self.inner.cache.lock().unwrap().get(lambda0) {
            return Ok(ch.clone());
        }
        let ch = match &self.inner.source {
            Source::Table(_) => unreachable!(),
            Source::Weyl => weyl_character(lambda0, rd)?,
            Source::Lifted { base, power } => {
                let b = base.modulus();
                let mut acc = Character::monomial(rd, Weight::zero(rd.rank()));
                let mut cur = lambda0.clone();
                let mut scale = 1u64;
                for _ in 0..*power {
                    let digits = adic_decompose(&cur, b);
                    if !digits.lambda0.is_zero() {
                        let factor = frobenius_stretch(&base.get(&digits.lambda0)?, scale)?;
                        acc = char_mul(&acc, &factor, None)?;
                    }
                    cur = digits.lambda1;
                    scale *= b;
                }
                acc
            }
        };
        self.inner
            .cache
            .lock()
            .unwrap()
            .insert(lambda0.clone(), ch.clone());
        Ok(ch)
    }
}

// Depth needed at the natural top λ so that the window is covered.
fn depth_below(lambda: &Weight, window: &TruncationWindow, rd: &RootDatum) -> u64 {
    let det = rd.cartan_det();
    let over = rd
        .scaled_root_coords(&(lambda - &window.top))
        .into_iter()
        .map(|c| (c + det - 1).div_euclid(det))
        .max()
        .unwrap_or(0);
    (window.depth as i64 + over).max(0) as u64
}

fn check_provider(provider: &RestrictedCharProvider, rd: &RootDatum, modulus: u64) -> Result<()> {
    if provider.root_datum() != rd {
        return Err(Error::Argument(format!(
            "provider is for {}, request is for {}",
            provider.root_datum().label(),
            rd.label()
        )));
    }
    if provider.modulus() != modulus {
        return Err(Error::Argument(format!(
            "provider modulus {} does not match the requested modulus {modulus}",
            provider.modulus()
        )));
    }
    Ok(())
}

/// `Char L̄_p(λ)` on `window`, by repeated `p`-adic expansion.
pub fn simple_char_modular(
    lambda: &Weight,
    p: u64,
    window: &TruncationWindow,
    r_limit: Option<u32>,
    provider: &RestrictedCharProvider,
) -> Result<Character> {
    let rd = provider.root_datum().clone();
    rd.check_rank(lambda)?;
    rd.check_rank(&window.top)?;
    Regime::Modular { p }.validate(&rd)?;
    check_provider(provider, &rd, p)?;
    let depth = depth_below(lambda, window, &rd);
    let minus_rho = -rd.rho();

    let origin = Weight::zero(rd.rank());
    let mut acc = Character::from_terms(
        &rd,
        TruncationWindow::new(origin.clone(), depth),
        false,
        [(origin, BigUint::one())],
    )?;
    let mut cur = lambda.clone();
    let mut scale = 1u64;
    let mut steps = 0u32;
    let tail = loop {
        if cur.is_zero() {
            break Character::monomial(&rd, cur);
        }
        if cur == minus_rho {
            let qm = q_minus_at_depth(&rd, depth / scale)?;
            break frobenius_stretch(&qm, scale)?;
        }
        if scale > depth {
            // every lower term of the remaining factor falls below the window
            let top = Character::from_terms(
                &rd,
                TruncationWindow::new(cur.clone(), 0),
                false,
                [(cur, BigUint::one())],
            )?;
            break frobenius_stretch(&top, scale)?;
        }
        if r_limit.is_some_and(|limit| steps >= limit) {
            return Err(Error::RecursionLimit {
                limit: r_limit.unwrap_or_default(),
                lambda: lambda.clone(),
            });
        }
        let digits = adic_decompose(&cur, p);
        if !digits.lambda0.is_zero() {
            let factor = frobenius_stretch(&provider.get(&digits.lambda0)?, scale)?;
            acc = char_mul(&acc, &factor, None)?;
        }
        cur = digits.lambda1;
        scale = scale
            .checked_mul(p)
            .ok_or_else(|| Error::Argument("p-adic scale overflows".into()))?;
        steps += 1;
    };
    char_mul(&acc, &tail, Some(window))
}

/// `Char L_q(λ) = Char L_q(λ⁰) · (Char L̄_p(λ¹))^{(ℓ)}` on `window`.
pub fn simple_char_quantum(
    lambda: &Weight,
    ell: u64,
    p: u64,
    window: &TruncationWindow,
    r_limit: Option<u32>,
    q_provider: &RestrictedCharProvider,
    p_provider: &RestrictedCharProvider,
) -> Result<Character> {
    let rd = q_provider.root_datum().clone();
    rd.check_rank(lambda)?;
    rd.check_rank(&window.top)?;
    Regime::Quantum { ell, p }.validate(&rd)?;
    check_provider(q_provider, &rd, ell)?;
    check_provider(p_provider, &rd, p)?;
    let depth = depth_below(lambda, window, &rd);
    let digits = adic_decompose(lambda, ell);
    let head = q_provider.get(&digits.lambda0)?;
    let inner_window = TruncationWindow::new(digits.lambda1.clone(), depth / ell);
    let rest = simple_char_modular(&digits.lambda1, p, &inner_window, r_limit, p_provider)?;
    char_mul(&head, &frobenius_stretch(&rest, ell)?, Some(window))
}

/// Dispatches a [`SimpleCharRequest`]; quantum requests need `q_provider`.
pub fn simple_char(
    req: &SimpleCharRequest,
    p_provider: &RestrictedCharProvider,
    q_provider: Option<&RestrictedCharProvider>,
) -> Result<Character> {
    match req.regime {
        Regime::Modular { p } => {
            simple_char_modular(&req.lambda, p, &req.window, req.r_limit, p_provider)
        }
        Regime::Quantum { ell, p } => {
            let q = q_provider.ok_or_else(|| {
                Error::Argument("quantum requests need a modulus-ℓ provider".into())
            })?;
            simple_char_quantum(&req.lambda, ell, p, &req.window, req.r_limit, q, p_provider)
        }
    }
}

/// Smallest `r` with `p^r ≥ −λ_i` for every `i`.
pub fn antidominant_exponent(lambda: &Weight, p: u64) -> u32 {
    let need = lambda.0.iter().map(|c| -c).max().unwrap_or(1).max(1) as u64;
    let mut r = 0;
    let mut pr = 1u64;
    while pr < need {
        pr *= p;
        r += 1;
    }
    r
}

/// `Char L̄_p(λ) = Char L̄_p(p^r ρ + λ) · (q⁻)^{(r)}` for antidominant `λ`.
pub fn antidominant_simple_char(
    lambda: &Weight,
    p: u64,
    rd: &RootDatum,
    window: &TruncationWindow,
    provider: &RestrictedCharProvider,
) -> Result<Character> {
    rd.check_rank(lambda)?;
    if !lambda.is_antidominant() {
        return Err(Error::Argument(format!("{lambda} is not antidominant")));
    }
    Regime::Modular { p }.validate(rd)?;
    check_provider(provider, rd, p)?;
    let r = antidominant_exponent(lambda, p);
    let pr = p.pow(r);
    let top = &rd.rho().scaled(pr as i64) + lambda;
    let depth = depth_below(lambda, window, rd);
    let head = if top.is_zero() {
        Character::monomial(rd, top)
    } else {
        let below = rd
            .root_coords(&(&top - &rd.w0(&top)))
            .expect("λ − w0λ lies in the root lattice");
        let hd = below.0.into_iter().max().unwrap_or(0) as u64;
        let w = TruncationWindow::new(top.clone(), hd);
        let ch = simple_char_modular(&top, p, &w, None, provider)?;
        Character::from_terms(rd, w, true, ch.terms().clone())?
    };
    let tail = frobenius_stretch(&q_minus_at_depth(rd, depth / pr)?, pr)?;
    char_mul(&head, &tail, Some(window))
}

/// `dim L̄_p(λ)_μ` through one expansion at modulus `p^r`, with `r` the
/// smallest exponent for which `p^r` exceeds every coefficient of `λ − μ`.
/// Returns the multiplicity and `r`.
pub fn weight_mult_stabilized(
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    provider: &RestrictedCharProvider,
) -> Result<(BigUint, u32)> {
    let rd = provider.root_datum();
    rd.check_rank(lambda)?;
    rd.check_rank(mu)?;
    let nu = rd
        .root_coords(&(lambda - mu))
        .filter(|rc| rc.is_nonnegative())
        .ok_or_else(|| Error::Argument(format!("{mu} is not below {lambda}")))?;
    let max_n = nu.0.iter().copied().max().unwrap_or(0) as u64;
    let mut r = 0u32;
    let mut pr = 1u64;
    while pr <= max_n {
        pr *= p;
        r += 1;
    }
    let r = r.max(1);
    Ok((weight_mult_at(lambda, mu, p, r, provider)?, r))
}

/// `dim L̄_p(λ⁰)_{μ − p^r λ¹}` for `λ = λ⁰ + p^r λ¹`.
pub fn weight_mult_at(
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    r: u32,
    provider: &RestrictedCharProvider,
) -> Result<BigUint> {
    let rd = provider.root_datum();
    Regime::Modular { p }.validate(rd)?;
    check_provider(provider, rd, p)?;
    let lifted = provider.lift(r)?;
    let digits = adic_decompose(lambda, lifted.modulus());
    let target = mu - &digits.lambda1.scaled(lifted.modulus() as i64);
    Ok(lifted.get(&digits.lambda0)?.coeff(&target))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> RootDatum {
        RootDatum::from_label("A1").unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    fn weights(ch: &Character) -> Vec<i64> {
        ch.terms()
            .iter()
            .map(|(w, m)| {
                assert_eq!(*m, BigUint::one());
                w.0[0]
            })
            .collect()
    }

    #[test]
    fn modular_examples() {
        let prov = RestrictedCharProvider::sl2(3).unwrap();
        let win = TruncationWindow::new(w(&[4]), 4);
        let ch = simple_char_modular(&w(&[4]), 3, &win, None, &prov).unwrap();
        assert_eq!(weights(&ch), vec![-4, -2, 2, 4]);

        let win = TruncationWindow::new(w(&[2]), 2);
        let st = simple_char_modular(&w(&[2]), 3, &win, None, &prov).unwrap();
        assert_eq!(st.terms(), steinberg_character(3, &a1()).unwrap().terms());

        let win = TruncationWindow::new(w(&[0]), 5);
        let triv = simple_char_modular(&w(&[0]), 3, &win, None, &prov).unwrap();
        assert_eq!(weights(&triv), vec![0]);

        let win = TruncationWindow::new(w(&[-2]), 6);
        let ch = simple_char_modular(&w(&[-2]), 3, &win, None, &prov).unwrap();
        assert_eq!(weights(&ch), vec![-14, -10, -8, -4, -2]);
    }

    #[test]
    fn quantum_examples() {
        let q = RestrictedCharProvider::sl2(5).unwrap();
        let p = RestrictedCharProvider::sl2(3).unwrap();
        let win = TruncationWindow::new(w(&[3]), 3);
        let ch = simple_char_quantum(&w(&[3]), 5, 3, &win, None, &q, &p).unwrap();
        assert_eq!(weights(&ch), vec![-3, -1, 1, 3]);
        let win = TruncationWindow::new(w(&[7]), 7);
        let ch = simple_char_quantum(&w(&[7]), 5, 3, &win, None, &q, &p).unwrap();
        assert_eq!(weights(&ch), vec![-7, -5, -3, 3, 5, 7]);
        assert!(simple_char_quantum(&w(&[7]), 4, 3, &win, None, &q, &p).is_err());
    }

    #[test]
    fn antidominant_examples() {
        let rd = a1();
        let prov = RestrictedCharProvider::sl2(3).unwrap();
        let win = TruncationWindow::new(w(&[-2]), 6);
        let ch = antidominant_simple_char(&w(&[-2]), 3, &rd, &win, &prov).unwrap();
        assert_eq!(weights(&ch), vec![-14, -10, -8, -4, -2]);
        let win = TruncationWindow::new(w(&[-1]), 6);
        let ch = antidominant_simple_char(&w(&[-1]), 3, &rd, &win, &prov).unwrap();
        assert_eq!(ch, q_minus_at_depth(&rd, 6).unwrap());
        assert!(antidominant_simple_char(&w(&[0]), 3, &rd, &win, &prov).is_err());
    }

    #[test]
    fn antidominant_agrees_with_recursion() {
        let rd = a1();
        for p in [2u64, 3, 5] {
            let prov = RestrictedCharProvider::sl2(p).unwrap();
            for n in -30..=-1 {
                let win = TruncationWindow::new(w(&[n]), 20);
                let a = antidominant_simple_char(&w(&[n]), p, &rd, &win, &prov).unwrap();
                let b = simple_char_modular(&w(&[n]), p, &win, None, &prov).unwrap();
                assert_eq!(a, b, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn sl2_dimension_is_digit_product() {
        for p in [2u64, 3, 5] {
            let prov = RestrictedCharProvider::sl2(p).unwrap();
            for n in 0..60i64 {
                let win = TruncationWindow::new(w(&[n]), n as u64);
                let ch = simple_char_modular(&w(&[n]), p, &win, None, &prov).unwrap();
                let mut expected = 1u64;
                let mut m = n as u64;
                while m > 0 {
                    expected *= m % p + 1;
                    m /= p;
                }
                assert_eq!(ch.dimension(), expected.into(), "p={p} n={n}");
                assert_eq!(ch.coeff(&w(&[n])), BigUint::one());
            }
        }
    }

    #[test]
    fn recursion_limit_is_reported() {
        let rd = RootDatum::from_label("A2").unwrap();
        let prov = RestrictedCharProvider::weyl(&rd, 3).unwrap();
        let lambda = w(&[0, -1]);
        let win = TruncationWindow::new(lambda.clone(), 30);
        let err = simple_char_modular(&lambda, 3, &win, Some(2), &prov).unwrap_err();
        assert!(matches!(err, Error::RecursionLimit { limit: 2, .. }), "{err}");
        let ch = simple_char_modular(&lambda, 3, &win, None, &prov).unwrap();
        assert_eq!(ch.coeff(&lambda), BigUint::one());
    }

    #[test]
    fn provider_gap_names_the_weight() {
        let rd = RootDatum::from_label("A2").unwrap();
        let table = BTreeMap::from([(w(&[1, 0]), weyl_character(&w(&[1, 0]), &rd).unwrap())]);
        let prov = RestrictedCharProvider::from_table(&rd, 3, "partial", table).unwrap();
        let win = TruncationWindow::new(w(&[1, 1]), 2);
        match simple_char_modular(&w(&[1, 1]), 3, &win, None, &prov) {
            Err(Error::ProviderGap { modulus, missing }) => {
                assert_eq!(modulus, 3);
                assert_eq!(missing, vec![w(&[1, 1])]);
            }
            other => panic!("expected a provider gap, got {other:?}"),
        }
    }

    #[test]
    fn provider_validation() {
        let rd = a1();
        let bad_top = Character::from_terms(
            &rd,
            TruncationWindow::new(w(&[1]), 1),
            true,
            [(w(&[1]), BigUint::from(2u32))],
        )
        .unwrap();
        let table = BTreeMap::from([(w(&[1]), bad_top)]);
        assert!(RestrictedCharProvider::from_table(&rd, 3, "bad", table).is_err());
        let not_steinberg = weyl_character(&w(&[0]), &rd).unwrap().shift(&w(&[2]));
        let table = BTreeMap::from([(w(&[2]), not_steinberg)]);
        assert!(RestrictedCharProvider::from_table(&rd, 3, "bad", table).is_err());
    }

    #[test]
    fn stabilized_examples() {
        let prov = RestrictedCharProvider::sl2(3).unwrap();
        let (m, _) = weight_mult_stabilized(&w(&[4]), &w(&[4]), 3, &prov).unwrap();
        assert_eq!(m, BigUint::one());
        let (m, r) = weight_mult_stabilized(&w(&[4]), &w(&[2]), 3, &prov).unwrap();
        assert_eq!((m, r), (BigUint::one(), 1));
        let (m, _) = weight_mult_stabilized(&w(&[4]), &w(&[0]), 3, &prov).unwrap();
        assert_eq!(m, BigUint::from(0u32));
        assert!(weight_mult_stabilized(&w(&[4]), &w(&[3]), 3, &prov).is_err());
    }

    #[test]
    fn regime_validation() {
        let rd = RootDatum::from_label("G2").unwrap();
        assert!(Regime::Quantum { ell: 9, p: 2 }.validate(&rd).is_err());
        assert!(Regime::Quantum { ell: 5, p: 2 }.validate(&rd).is_ok());
        assert!(Regime::Modular { p: 4 }.validate(&rd).is_err());
        assert!(Regime::Quantum { ell: 1, p: 3 }.validate(&a1()).is_err());
    }
}
