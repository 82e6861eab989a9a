//! Truncated formal characters.
//!
//! A [`Character`] records multiplicities inside a [`TruncationWindow`]: the
//! weights `μ` whose simple-root coordinates of `top − μ` all lie in
//! `[0, depth]`. Coordinates are allowed to be rational so that exact
//! characters spanning several root-lattice cosets still have a window.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{PartitionTable, RootDatum, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncationWindow {
    pub top: Weight,
    pub depth: u64,
}

impl TruncationWindow {
    pub fn new(top: Weight, depth: u64) -> Self {
        TruncationWindow { top, depth }
    }

    /// Upper bound on the number of lattice points retained.
    pub fn volume(&self) -> u128 {
        (self.depth as u128 + 1).pow(self.top.rank() as u32)
    }

    pub fn contains(&self, mu: &Weight, rd: &RootDatum) -> bool {
        let det = rd.cartan_det();
        let limit = self.depth as i64 * det;
        rd.scaled_root_coords(&(&self.top - mu))
            .iter()
            .all(|&c| (0..=limit).contains(&c))
    }

    /// Whether `other` is a sub-box of `self`.
    pub fn contains_window(&self, other: &TruncationWindow, rd: &RootDatum) -> bool {
        let det = rd.cartan_det();
        rd.scaled_root_coords(&(&self.top - &other.top))
            .iter()
            .all(|&c| c >= 0 && c + other.depth as i64 * det <= self.depth as i64 * det)
    }

    /// Weights `top − ν` with `ν` a nonnegative integral root combination in the box.
    pub fn lattice_points(&self, rd: &RootDatum) -> Vec<Weight> {
        let n = rd.rank();
        let mut out = Vec::new();
        let mut nu = vec![0i64; n];
        loop {
            let shift = nu.iter().enumerate().fold(Weight::zero(n), |acc, (i, &c)| {
                &acc + &rd.root_weight(i).scaled(c)
            });
            out.push(&self.top - &shift);
            let mut i = 0;
            while i < n {
                nu[i] += 1;
                if nu[i] as u64 <= self.depth {
                    break;
                }
                nu[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct Character {
    rd: RootDatum,
    window: TruncationWindow,
    exact_outside: bool,
    terms: BTreeMap<Weight, BigUint>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.rd == other.rd && self.window == other.window && self.terms == other.terms
    }
}

impl Eq for Character {}

impl Character {
    pub fn zero(rd: &RootDatum, window: TruncationWindow, exact_outside: bool) -> Character {
        Character {
            rd: rd.clone(),
            window,
            exact_outside,
            terms: BTreeMap::new(),
        }
    }

    /// `e^μ`, exact, in the depth-0 window at `μ`.
    pub fn monomial(rd: &RootDatum, mu: Weight) -> Character {
        let mut terms = BTreeMap::new();
        terms.insert(mu.clone(), BigUint::one());
        Character {
            rd: rd.clone(),
            window: TruncationWindow::new(mu, 0),
            exact_outside: true,
            terms,
        }
    }

    /// Builds a character from raw terms, dropping zeros.
    pub fn from_terms(
        rd: &RootDatum,
        window: TruncationWindow,
        exact_outside: bool,
        terms: impl IntoIterator<Item = (Weight, BigUint)>,
    ) -> Result<Character> {
        rd.check_rank(&window.top)?;
        let mut out = Character::zero(rd, window, exact_outside);
        for (w, m) in terms {
            rd.check_rank(&w)?;
            if !out.window.contains(&w, rd) {
                return Err(Error::Argument(format!(
                    "weight {w} lies outside the window at {} of depth {}",
                    out.window.top, out.window.depth
                )));
            }
            out.add_term(w, m);
        }
        Ok(out)
    }

    fn add_term(&mut self, w: Weight, m: BigUint) {
        if m.is_zero() {
            return;
        }
        *self.terms.entry(w).or_default() += m;
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn window(&self) -> &TruncationWindow {
        &self.window
    }

    pub fn is_exact(&self) -> bool {
        self.exact_outside
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigUint> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Weight) -> BigUint {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all retained multiplicities.
    pub fn dimension(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Keeps the terms inside `window`, which must sit inside the current one.
    pub fn restrict(&self, window: &TruncationWindow) -> Result<Character> {
        if !self.exact_outside && !self.window.contains_window(window, &self.rd) {
            return Err(Error::InsufficientDepth(format!(
                "cannot restrict a character known on the window at {} of depth {} to the window at {} of depth {}",
                self.window.top, self.window.depth, window.top, window.depth
            )));
        }
        let terms: BTreeMap<_, _> = self
            .terms
            .iter()
            .filter(|(w, _)| window.contains(w, &self.rd))
            .map(|(w, m)| (w.clone(), m.clone()))
            .collect();
        let exact_outside = self.exact_outside && terms.len() == self.terms.len();
        Ok(Character {
            rd: self.rd.clone(),
            window: window.clone(),
            exact_outside,
            terms,
        })
    }

    /// Multiplication by `e^μ`.
    pub fn shift(&self, mu: &Weight) -> Character {
        Character {
            rd: self.rd.clone(),
            window: TruncationWindow::new(&self.window.top + mu, self.window.depth),
            exact_outside: self.exact_outside,
            terms: self.terms.iter().map(|(w, m)| (w + mu, m.clone())).collect(),
        }
    }
}

fn check_same_datum(f: &Character, g: &Character) -> Result<()> {
    if f.rd != g.rd {
        return Err(Error::Argument(format!(
            "characters of {} and {} cannot be combined",
            f.rd.label(),
            g.rd.label()
        )));
    }
    Ok(())
}

fn hull_window(f: &Character, g: &Character) -> TruncationWindow {
    let rd = &f.rd;
    let det = rd.cartan_det();
    // raise f's top along ρ until it dominates g's top
    let gap = rd.scaled_root_coords(&(&g.window.top - &f.window.top));
    let rho_rc = rd.scaled_root_coords(rd.rho());
    let k = gap
        .iter()
        .zip(&rho_rc)
        .map(|(&c, &r)| if c <= 0 { 0 } else { (c + r - 1) / r })
        .max()
        .unwrap_or(0);
    let top = &f.window.top + &rd.rho().scaled(k);
    let span = |w: &TruncationWindow| {
        rd.scaled_root_coords(&(&top - &w.top))
            .iter()
            .map(|&c| (c + w.depth as i64 * det + det - 1).div_euclid(det) as u64)
            .max()
            .unwrap_or(0)
    };
    let depth = span(&f.window).max(span(&g.window));
    TruncationWindow::new(top, depth)
}

/// Pointwise sum. Truncated operands must share a window, or one window must
/// contain the other, in which case the sum lives on the smaller one.
pub fn char_add(f: &Character, g: &Character) -> Result<Character> {
    check_same_datum(f, g)?;
    let rd = &f.rd;
    let (window, exact) = match (f.exact_outside, g.exact_outside) {
        (true, true) => (hull_window(f, g), true),
        (true, false) => (g.window.clone(), false),
        (false, true) => (f.window.clone(), false),
        (false, false) => {
            if f.window == g.window || g.window.contains_window(&f.window, rd) {
                (f.window.clone(), false)
            } else if f.window.contains_window(&g.window, rd) {
                (g.window.clone(), false)
            } else {
                return Err(Error::WindowMismatch(format!(
                    "windows at {} (depth {}) and {} (depth {})",
                    f.window.top, f.window.depth, g.window.top, g.window.depth
                )));
            }
        }
    };
    let mut out = Character::zero(rd, window, exact);
    for (w, m) in f.terms.iter().chain(&g.terms) {
        if out.window.contains(w, rd) {
            out.add_term(w.clone(), m.clone());
        }
    }
    Ok(out)
}

/// Convolution, truncated to `window` (or to the natural product window).
pub fn char_mul(
    f: &Character,
    g: &Character,
    window: Option<&TruncationWindow>,
) -> Result<Character> {
    check_same_datum(f, g)?;
    let rd = &f.rd;
    let det = rd.cartan_det();
    let natural_top = &f.window.top + &g.window.top;
    let (target, exact) = match window {
        Some(w) => (w.clone(), false),
        None => match (f.exact_outside, g.exact_outside) {
            (true, true) => (
                TruncationWindow::new(natural_top.clone(), f.window.depth + g.window.depth),
                true,
            ),
            (true, false) => (TruncationWindow::new(natural_top.clone(), g.window.depth), false),
            (false, true) => (TruncationWindow::new(natural_top.clone(), f.window.depth), false),
            (false, false) => (
                TruncationWindow::new(
                    natural_top.clone(),
                    f.window.depth.min(g.window.depth),
                ),
                false,
            ),
        },
    };
    rd.check_rank(&target.top)?;
    let slack = rd.scaled_root_coords(&(&natural_top - &target.top));
    for factor in [f, g] {
        if factor.exact_outside {
            continue;
        }
        let allowed = factor.window.depth as i64 * det;
        if slack
            .iter()
            .any(|&s| s + target.depth as i64 * det > allowed)
        {
            return Err(Error::InsufficientDepth(format!(
                "a factor known to depth {} cannot determine the product on the window at {} of depth {}",
                factor.window.depth, target.top, target.depth
            )));
        }
    }
    let top_rc = rd.scaled_root_coords(&target.top);
    let limit = target.depth as i64 * det;
    let f_terms: Vec<_> = f
        .terms
        .iter()
        .map(|(w, m)| (w, m, rd.scaled_root_coords(w)))
        .collect();
    let g_terms: Vec<_> = g
        .terms
        .iter()
        .map(|(w, m)| (w, m, rd.scaled_root_coords(w)))
        .collect();
    let mut acc: HashMap<Weight, BigUint> = HashMap::new();
    for (fw, fm, frc) in &f_terms {
        for (gw, gm, grc) in &g_terms {
            let inside = (0..rd.rank()).all(|i| {
                let c = top_rc[i] - frc[i] - grc[i];
                (0..=limit).contains(&c)
            });
            if inside {
                *acc.entry(*fw + *gw).or_default() += *fm * *gm;
            }
        }
    }
    let mut out = Character::zero(rd, target, exact);
    out.terms = acc.into_iter().filter(|(_, m)| !m.is_zero()).collect();
    Ok(out)
}

/// `Σ a_μ e^μ ↦ Σ a_μ e^{mμ}`.
pub fn frobenius_stretch(f: &Character, m: u64) -> Result<Character> {
    if m == 0 {
        return Err(Error::Argument("stretch factor must be positive".into()));
    }
    let mi = m as i64;
    let depth = if f.exact_outside {
        f.window.depth * m
    } else {
        // weights between stretched lattice points are known to vanish
        f.window.depth * m + m - 1
    };
    Ok(Character {
        rd: f.rd.clone(),
        window: TruncationWindow::new(f.window.top.scaled(mi), depth),
        exact_outside: f.exact_outside,
        terms: f.terms.iter().map(|(w, c)| (w.scaled(mi), c.clone())).collect(),
    })
}

/// `Σ_{μ ≤ λ} P(λ − μ) e^μ` on `window`.
pub fn verma_character(
    lambda: &Weight,
    rd: &RootDatum,
    window: &TruncationWindow,
) -> Result<Character> {
    rd.check_rank(lambda)?;
    rd.check_rank(&window.top)?;
    partition_character(lambda, rd, window, None)
}

fn partition_character(
    lambda: &Weight,
    rd: &RootDatum,
    window: &TruncationWindow,
    bound: Option<u64>,
) -> Result<Character> {
    let det = rd.cartan_det();
    let offset = rd.scaled_root_coords(&(lambda - &window.top));
    let extent: Vec<i64> = offset
        .iter()
        .map(|&c| (c + window.depth as i64 * det).div_euclid(det))
        .collect();
    let mut out = Character::zero(rd, window.clone(), bound.is_some());
    if extent.iter().any(|&e| e < 0) {
        return Ok(out);
    }
    let extent: Vec<usize> = extent.into_iter().map(|e| e as usize).collect();
    let table = PartitionTable::new(rd, &extent, bound);
    for mu in TruncationWindow::new(lambda.clone(), *extent.iter().max().unwrap_or(&0) as u64)
        .lattice_points(rd)
    {
        if !window.contains(&mu, rd) {
            continue;
        }
        let nu = rd
            .root_coords(&(lambda - &mu))
            .expect("lattice point lies in the root lattice");
        let m = table.get(&nu.0);
        out.add_term(mu, m);
    }
    Ok(out)
}

/// `Char Δ(−ρ)`.
pub fn q_minus(rd: &RootDatum, window: &TruncationWindow) -> Result<Character> {
    let minus_rho = -rd.rho();
    verma_character(&minus_rho, rd, window)
}

/// `Char Δ(−ρ)` on the window at `−ρ` of the given depth.
pub fn q_minus_at_depth(rd: &RootDatum, depth: u64) -> Result<Character> {
    q_minus(rd, &TruncationWindow::new(-rd.rho(), depth))
}

/// The Weyl character `χ(λ)` of dominant `λ`, by Freudenthal's formula.
pub fn weyl_character(lambda: &Weight, rd: &RootDatum) -> Result<Character> {
    rd.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::Argument(format!("{lambda} is not dominant")));
    }
    let lowest = rd.w0(lambda);
    let extent: Vec<i64> = rd
        .root_coords(&(lambda - &lowest))
        .expect("λ − w0λ lies in the root lattice")
        .0;
    let depth = extent.iter().copied().max().unwrap_or(0) as u64;
    let shifted_top = lambda + rd.rho();
    let top_norm = rd.scaled_form(&shifted_top, &shifted_top);
    let roots: Vec<Weight> = (0..rd.num_positive_roots())
        .map(|i| rd.root_weight(i).clone())
        .collect();

    // visit ν = rc(λ − μ) in order of increasing height
    let mut points: Vec<Vec<i64>> = vec![vec![]];
    for &e in &extent {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=e).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    points.sort_by_key(|p| p.iter().sum::<i64>());

    let mut mult: HashMap<Weight, BigUint> = HashMap::new();
    mult.insert(lambda.clone(), BigUint::one());
    for nu in points.iter().skip(1) {
        let mu = nu.iter().enumerate().fold(lambda.clone(), |acc, (i, &c)| {
            &acc - &rd.root_weight(i).scaled(c)
        });
        let mut numerator = BigInt::zero();
        for alpha in &roots {
            let mut k = 1;
            loop {
                let above = &mu + &alpha.scaled(k);
                let Some(m) = mult.get(&above) else {
                    if rd
                        .root_coords(&(lambda - &above))
                        .is_some_and(|rc| rc.is_nonnegative())
                    {
                        k += 1;
                        continue;
                    }
                    break;
                };
                numerator += BigInt::from(rd.scaled_form(&above, alpha)) * BigInt::from(m.clone());
                k += 1;
            }
        }
        numerator *= 2;
        let shifted = &mu + rd.rho();
        let denominator = top_norm - rd.scaled_form(&shifted, &shifted);
        if denominator == 0 {
            if !numerator.is_zero() {
                return Err(Error::Consistency(format!(
                    "Freudenthal recursion degenerate at {mu}"
                )));
            }
            continue;
        }
        let value = numerator / BigInt::from(denominator);
        match value.sign() {
            Sign::Plus => {
                mult.insert(mu, value.magnitude().clone());
            }
            Sign::NoSign => {}
            Sign::Minus => {
                return Err(Error::Consistency(format!(
                    "negative weight multiplicity at {mu}"
                )))
            }
        }
    }
    let mut out = Character::zero(rd, TruncationWindow::new(lambda.clone(), depth), true);
    for (w, m) in mult {
        out.add_term(w, m);
    }
    Ok(out)
}

/// `Char Δ̃(λ)`: `λ − Σ n_β β` with every `0 ≤ n_β < bound`.
pub fn baby_verma_character(lambda: &Weight, bound: u64, rd: &RootDatum) -> Result<Character> {
    rd.check_rank(lambda)?;
    if bound < 2 {
        return Err(Error::Argument(format!("bound {bound} must be at least 2")));
    }
    let two_rho = rd
        .root_coords(&rd.rho().scaled(2))
        .expect("2ρ lies in the root lattice");
    let depth = two_rho.0.iter().copied().max().unwrap_or(0) as u64 * (bound - 1);
    partition_character(lambda, rd, &TruncationWindow::new(lambda.clone(), depth), Some(bound))
}

/// `χ((m − 1)ρ)`, whose dimension must be `m^N`.
pub fn steinberg_character(m: u64, rd: &RootDatum) -> Result<Character> {
    if m < 2 {
        return Err(Error::Argument(format!("modulus {m} must be at least 2")));
    }
    let chi = weyl_character(&rd.rho().scaled(m as i64 - 1), rd)?;
    let expected = BigUint::from(m).pow(rd.num_positive_roots() as u32);
    if chi.dimension() != expected {
        return Err(Error::Consistency(format!(
            "Steinberg character for modulus {m} has dimension {} instead of {expected}",
            chi.dimension()
        )));
    }
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rd(label: &str) -> RootDatum {
        RootDatum::from_label(label).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    fn support(ch: &Character) -> Vec<(Vec<i64>, u64)> {
        ch.terms()
            .iter()
            .map(|(w, m)| (w.0.clone(), m.try_into().unwrap()))
            .collect()
    }

    fn sparse(rd: &RootDatum, terms: &[(&[i64], u64)], exact: bool, window: TruncationWindow) -> Character {
        Character::from_terms(
            rd,
            window,
            exact,
            terms.iter().map(|(w, m)| (Weight(w.to_vec()), BigUint::from(*m))),
        )
        .unwrap()
    }

    #[test]
    fn add_examples() {
        let a1 = rd("A1");
        let one = Character::monomial(&a1, w(&[0]));
        let two = char_add(&one, &one).unwrap();
        assert_eq!(support(&two), vec![(vec![0], 2)]);
        let z = Character::zero(&a1, TruncationWindow::new(w(&[0]), 0), true);
        assert_eq!(char_add(&one, &z).unwrap(), one);

        let l1 = weyl_character(&w(&[1]), &a1).unwrap();
        let l0 = weyl_character(&w(&[0]), &a1).unwrap();
        let sum = char_add(&l1, &l0).unwrap();
        assert_eq!(
            support(&sum),
            vec![(vec![-1], 1), (vec![0], 1), (vec![1], 1)]
        );
        assert!(sum.is_exact());
    }

    #[test]
    fn add_rejects_disjoint_windows() {
        let a1 = rd("A1");
        let f = Character::zero(&a1, TruncationWindow::new(w(&[0]), 3), false);
        let g = Character::zero(&a1, TruncationWindow::new(w(&[10]), 3), false);
        assert!(matches!(char_add(&f, &g), Err(Error::WindowMismatch(_))));
        let h = Character::zero(&a1, TruncationWindow::new(w(&[2]), 5), false);
        assert_eq!(char_add(&f, &h).unwrap().window(), f.window());
    }

    #[test]
    fn mul_examples() {
        let a1 = rd("A1");
        let win = |t: i64, d: u64| TruncationWindow::new(w(&[t]), d);
        let f = sparse(&a1, &[(&[1], 1), (&[-1], 1)], true, win(1, 1));
        let g = sparse(&a1, &[(&[3], 1), (&[-3], 1)], true, win(3, 3));
        let prod = char_mul(&f, &g, None).unwrap();
        assert_eq!(
            support(&prod),
            vec![(vec![-4], 1), (vec![-2], 1), (vec![2], 1), (vec![4], 1)]
        );
        let id = Character::monomial(&a1, w(&[0]));
        assert_eq!(char_mul(&prod, &id, None).unwrap(), prod);
    }

    #[test]
    fn mul_detects_insufficient_depth() {
        let a1 = rd("A1");
        let qm = q_minus_at_depth(&a1, 3).unwrap();
        let deep = TruncationWindow::new(w(&[-2]), 5);
        assert!(matches!(
            char_mul(&qm, &Character::monomial(&a1, w(&[0])), Some(&deep)),
            Err(Error::InsufficientDepth(_))
        ));
    }

    #[test]
    fn verma_examples() {
        let a1 = rd("A1");
        let v = verma_character(&w(&[0]), &a1, &TruncationWindow::new(w(&[0]), 3)).unwrap();
        assert_eq!(
            support(&v),
            vec![(vec![-6], 1), (vec![-4], 1), (vec![-2], 1), (vec![0], 1)]
        );
        assert!(!v.is_exact());
        let a2 = rd("A2");
        let v = verma_character(&w(&[0, 0]), &a2, &TruncationWindow::new(w(&[0, 0]), 2)).unwrap();
        // −(α1+α2) = (−1,−1)
        assert_eq!(v.coeff(&w(&[-1, -1])), 2u32.into());
        let qm = q_minus_at_depth(&a2, 2).unwrap();
        assert_eq!(qm.coeff(&w(&[-1, -1])), 1u32.into());
        assert_eq!(qm.coeff(&w(&[-2, -2])), 2u32.into());
        let sl2 = q_minus_at_depth(&a1, 3).unwrap();
        assert_eq!(
            support(&sl2),
            vec![(vec![-7], 1), (vec![-5], 1), (vec![-3], 1), (vec![-1], 1)]
        );
    }

    #[test]
    fn verma_top_coefficient_is_one() {
        for label in crate::rootsys::SUPPORTED_TYPES {
            let r = rd(label);
            let lambda = Weight((0..r.rank() as i64).map(|i| i - 1).collect());
            let v = verma_character(&lambda, &r, &TruncationWindow::new(lambda.clone(), 2)).unwrap();
            assert_eq!(v.coeff(&lambda), BigUint::one(), "{label}");
        }
    }

    #[test]
    fn weyl_examples() {
        let a1 = rd("A1");
        for n in 0..8 {
            let chi = weyl_character(&w(&[n]), &a1).unwrap();
            let expected: Vec<_> = (0..=n).map(|k| (vec![-n + 2 * k], 1)).collect();
            assert_eq!(support(&chi), expected);
        }
        let a2 = rd("A2");
        let adj = weyl_character(&w(&[1, 1]), &a2).unwrap();
        assert_eq!(adj.dimension(), 8u32.into());
        assert_eq!(adj.coeff(&w(&[0, 0])), 2u32.into());
        assert!(weyl_character(&w(&[-1, 0]), &a2).is_err());
    }

    // alternating-sum oracle: χ(λ) · Σ sgn(w) e^{wρ} = Σ sgn(w) e^{w(λ+ρ)}
    fn alternating_check(r: &RootDatum, lambda: &Weight) {
        let chi = weyl_character(lambda, r).unwrap();
        let mut lhs: HashMap<Weight, i64> = HashMap::new();
        for el in r.weyl_group() {
            let wr = el.apply(r.rho());
            for (mu, m) in chi.terms() {
                let m: i64 = m.try_into().unwrap();
                *lhs.entry(mu + &wr).or_default() += el.sign() * m;
            }
        }
        lhs.retain(|_, v| *v != 0);
        let shifted = lambda + r.rho();
        let rhs: HashMap<Weight, i64> = r
            .weyl_group()
            .iter()
            .map(|el| (el.apply(&shifted), el.sign()))
            .collect();
        assert_eq!(lhs, rhs, "{} {lambda}", r.label());
    }

    #[test]
    fn weyl_matches_alternating_formula_rank_two() {
        for label in ["A1", "A2", "B2", "G2"] {
            let r = rd(label);
            let mut weights = vec![vec![]];
            for _ in 0..r.rank() {
                weights = weights
                    .into_iter()
                    .flat_map(|v: Vec<i64>| {
                        (0..4).map(move |c| {
                            let mut u = v.clone();
                            u.push(c);
                            u
                        })
                    })
                    .collect();
            }
            for lambda in weights {
                alternating_check(&r, &Weight(lambda));
            }
        }
    }

    #[test]
    fn weyl_dimension_agreement() {
        for label in crate::rootsys::SUPPORTED_TYPES {
            let r = rd(label);
            for lambda in [Weight::zero(r.rank()), r.rho().clone(), {
                let mut v = vec![0; r.rank()];
                v[0] = 2;
                Weight(v)
            }] {
                let chi = weyl_character(&lambda, &r).unwrap();
                assert_eq!(chi.dimension(), r.weyl_dimension(&lambda).unwrap(), "{label} {lambda}");
            }
        }
    }

    #[test]
    fn weyl_is_w_invariant() {
        for (label, lambda) in [("A2", vec![2, 1]), ("B2", vec![1, 2]), ("G2", vec![1, 1]), ("A3", vec![1, 0, 1])] {
            let r = rd(label);
            let chi = weyl_character(&Weight(lambda), &r).unwrap();
            for el in r.weyl_group() {
                for (mu, m) in chi.terms() {
                    assert_eq!(&chi.coeff(&el.apply(mu)), m, "{label}");
                }
            }
        }
    }

    #[test]
    fn baby_verma_examples() {
        let a1 = rd("A1");
        let b = baby_verma_character(&w(&[0]), 5, &a1).unwrap();
        assert_eq!(
            support(&b),
            vec![(vec![-8], 1), (vec![-6], 1), (vec![-4], 1), (vec![-2], 1), (vec![0], 1)]
        );
        for (label, bound) in [("A2", 3u64), ("B2", 2), ("G2", 2), ("A3", 2)] {
            let r = rd(label);
            let b = baby_verma_character(&Weight::zero(r.rank()), bound, &r).unwrap();
            let n = r.num_positive_roots() as u32;
            assert_eq!(b.dimension(), BigUint::from(bound).pow(n), "{label}");
        }
        let a2 = rd("A2");
        let b = baby_verma_character(&w(&[0, 0]), 3, &a2).unwrap();
        assert_eq!(b.coeff(&w(&[-1, -1])), 2u32.into());
        assert!(baby_verma_character(&w(&[0]), 1, &a1).is_err());
    }

    #[test]
    fn steinberg_examples() {
        let a1 = rd("A1");
        let st = steinberg_character(3, &a1).unwrap();
        assert_eq!(support(&st), vec![(vec![-2], 1), (vec![0], 1), (vec![2], 1)]);
        assert_eq!(steinberg_character(2, &a1).unwrap().dimension(), 2u32.into());
        assert_eq!(steinberg_character(5, &rd("A2")).unwrap().dimension(), 125u32.into());
    }

    #[test]
    fn stretch_examples() {
        let a1 = rd("A1");
        let f = sparse(&a1, &[(&[-1], 1), (&[-3], 1)], true, TruncationWindow::new(w(&[-1]), 1));
        let s = frobenius_stretch(&f, 3).unwrap();
        assert_eq!(support(&s), vec![(vec![-9], 1), (vec![-3], 1)]);
        assert_eq!(frobenius_stretch(&f, 1).unwrap(), f);
    }

    #[test]
    fn verma_identity_on_windows() {
        for label in ["A1", "A2", "B2", "G2"] {
            let r = rd(label);
            for depth in [0u64, 3, 8] {
                for lambda in [Weight::zero(r.rank()), r.rho().scaled(2), -r.rho()] {
                    let win = TruncationWindow::new(lambda.clone(), depth);
                    let direct = verma_character(&lambda, &r, &win).unwrap();
                    let qm = q_minus_at_depth(&r, depth).unwrap();
                    let e = Character::monomial(&r, &lambda + r.rho());
                    let via = char_mul(&qm, &e, Some(&win)).unwrap();
                    assert_eq!(direct, via, "{label} depth {depth} {lambda}");
                }
            }
        }
    }

    fn small_char(r: &RootDatum, top: &Weight, coeffs: &[u8]) -> Character {
        let win = TruncationWindow::new(top.clone(), 2);
        let pts = win.lattice_points(r);
        Character::from_terms(
            r,
            win,
            true,
            pts.into_iter()
                .zip(coeffs)
                .map(|(p, &c)| (p, BigUint::from(c % 3))),
        )
        .unwrap()
    }

    proptest! {
        #[test]
        fn stretch_is_a_ring_homomorphism(
            a in proptest::collection::vec(0u8..5, 9),
            b in proptest::collection::vec(0u8..5, 9),
            t1 in -3i64..3, t2 in -3i64..3, m in 1u64..4,
        ) {
            let r = rd("A2");
            let f = small_char(&r, &w(&[t1, t2]), &a);
            let g = small_char(&r, &w(&[t2, t1]), &b);
            let prod = char_mul(&f, &g, None).unwrap();
            let lhs = frobenius_stretch(&prod, m).unwrap();
            let rhs = char_mul(
                &frobenius_stretch(&f, m).unwrap(),
                &frobenius_stretch(&g, m).unwrap(),
                None,
            ).unwrap();
            prop_assert_eq!(lhs.terms(), rhs.terms());
            let sum = char_add(&f, &g).unwrap();
            let lhs = frobenius_stretch(&sum, m).unwrap();
            let rhs = char_add(&frobenius_stretch(&f, m).unwrap(), &frobenius_stretch(&g, m).unwrap()).unwrap();
            prop_assert_eq!(lhs.terms(), rhs.terms());
        }

        #[test]
        fn mul_truncation_is_sound(
            d in 0u64..5, label in prop::sample::select(vec!["A1", "A2", "B2", "G2"]),
            shift in -2i64..3,
        ) {
            let r = rd(label);
            let lambda = r.rho().scaled(shift);
            let at = |depth: u64| {
                let qm = q_minus_at_depth(&r, depth).unwrap();
                let v = verma_character(&lambda, &r, &TruncationWindow::new(lambda.clone(), depth)).unwrap();
                char_mul(&qm, &v, None).unwrap()
            };
            let small = at(d);
            let large = at(d + 4).restrict(small.window()).unwrap();
            prop_assert_eq!(small, large);
        }

        #[test]
        fn baby_verma_is_periodic(
            n in -6i64..6, k in -3i64..3, bound in 2u64..5,
            label in prop::sample::select(vec!["A1", "A2", "B2"]),
        ) {
            let r = rd(label);
            let lambda = Weight(vec![n; r.rank()]);
            let mu = Weight((0..r.rank() as i64).map(|i| k + i).collect());
            let moved = &lambda + &mu.scaled(bound as i64);
            let lhs = baby_verma_character(&moved, bound, &r).unwrap();
            let rhs = baby_verma_character(&lambda, bound, &r).unwrap().shift(&mu.scaled(bound as i64));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
