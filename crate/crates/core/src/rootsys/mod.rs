//! Root data, weight lattice arithmetic, dot actions and adic decompositions.
//!
//! Weights live in fundamental-weight coordinates: coordinate `i` of a weight
//! is its pairing with the simple coroot `α_i∨`. Roots live in simple-root
//! coordinates. The Cartan matrix converts the latter into the former:
//! the weight coordinates of `α_j` form column `j` of the matrix
//! `A[i][j] = ⟨α_i∨, α_j⟩`.

mod partition;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

pub use partition::PartitionTable;

/// A weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn scaled(&self, m: i64) -> Weight {
        Weight(self.0.iter().map(|&c| c * m).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Member of `X⁺`.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Member of `X⁻`: every coordinate at most `-1`.
    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&c| c <= -1)
    }

    /// Member of `X_m`: dominant with every coordinate below `m`.
    pub fn is_restricted(&self, m: u64) -> bool {
        self.0.iter().all(|&c| c >= 0 && (c as u64) < m)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

/// Coefficients over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootCoords(pub Vec<i64>);

impl RootCoords {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootCoords(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl fmt::Display for RootCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Weight(self.0.clone()))
    }
}

/// `λ = λ⁰ + m·λ¹` with `λ⁰ ∈ X_m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdicDecomposition {
    pub lambda0: Weight,
    pub lambda1: Weight,
    pub modulus: u64,
}

/// Floor-semantics decomposition: every coordinate of `λ⁰` lies in `[0, m)`.
pub fn adic_decompose(lambda: &Weight, m: u64) -> AdicDecomposition {
    assert!(m >= 1, "modulus must be positive");
    let mi = m as i64;
    let lambda0 = Weight(lambda.0.iter().map(|c| c.rem_euclid(mi)).collect());
    let lambda1 = Weight(lambda.0.iter().map(|c| c.div_euclid(mi)).collect());
    AdicDecomposition {
        lambda0,
        lambda1,
        modulus: m,
    }
}

/// An element of the finite Weyl group, as an integer matrix acting on
/// weight coordinates, together with its length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub length: usize,
}

impl WeylElement {
    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub const SUPPORTED_TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2",
];

// (bound, number of roots still in play, remaining target)
type BoundedKey = (u64, usize, Vec<i64>);

/// Immutable root-system package. Cheap to clone.
#[derive(Clone)]
pub struct RootDatum {
    inner: Arc<Inner>,
}

struct Inner {
    label: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    d: Vec<i64>,
    positive_roots: Vec<RootCoords>,
    root_weights: Vec<Weight>,
    // β∨ = Σ coroot_coeffs[β][i] α_i∨
    coroot_coeffs: Vec<Vec<i64>>,
    rho: Weight,
    coxeter_number: i64,
    det: i64,
    adj: Vec<Vec<i64>>,
    // (α_i, α_j) = d_i A[i][j]
    form: Vec<Vec<i64>>,
    weyl: Vec<WeylElement>,
    w0_perm: Vec<usize>,
    kostant_cache: Mutex<HashMap<(usize, Vec<i64>), BigUint>>,
    bounded_cache: Mutex<HashMap<BoundedKey, BigUint>>,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootDatum")
            .field("type", &self.inner.label)
            .finish()
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.inner.label == other.inner.label
    }
}

impl Eq for RootDatum {}

/// Builds the root datum of the simple type `type_label` and `rank`.
pub fn build_root_datum(type_label: &str, rank: usize) -> Result<RootDatum> {
    let family = type_label.trim().to_ascii_uppercase();
    let label = format!("{family}{rank}");
    if !SUPPORTED_TYPES.contains(&label.as_str()) {
        return Err(Error::UnsupportedType { label });
    }
    let family = family.chars().next().expect("non-empty family");
    Ok(RootDatum::construct(label, cartan_matrix(family, rank)))
}

fn cartan_matrix(family: char, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        'A' | 'B' | 'C' => (0..n - 1).for_each(|i| link(i, i + 1)),
        'D' => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        'G' => link(0, 1),
        _ => unreachable!("family checked against the supported set"),
    }
    match family {
        // last simple root short
        'B' => a[n - 1][n - 2] = -2,
        // last simple root long
        'C' => a[n - 2][n - 1] = -2,
        // second simple root short
        'G' => a[1][0] = -3,
        _ => {}
    }
    a
}

fn symmetrizers(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    // rational d_i = num/den, propagated along the Dynkin diagram
    let mut num = vec![0i64; n];
    let mut den = vec![0i64; n];
    num[0] = 1;
    den[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && den[j] == 0 {
                // d_i a_ij = d_j a_ji
                let (nn, dd) = (num[i] * a[i][j], den[i] * a[j][i]);
                let g = nn.gcd(&dd);
                let sign = if dd < 0 { -1 } else { 1 };
                num[j] = sign * nn / g;
                den[j] = sign * dd / g;
                queue.push_back(j);
            }
        }
    }
    let l = den.iter().fold(1i64, |acc, d| acc.lcm(d));
    let ints: Vec<i64> = (0..n).map(|i| num[i] * (l / den[i])).collect();
    let g = ints.iter().fold(0i64, |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / g).collect()
}

fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * determinant(&minor(m, 0, j))
            })
            .sum(),
    }
}

fn minor(m: &[Vec<i64>], row: usize, col: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, v)| *v)
                .collect()
        })
        .collect()
}

fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    sign * determinant(&minor(m, j, i))
                })
                .collect()
        })
        .collect()
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn positive_root_closure(a: &[Vec<i64>]) -> Vec<RootCoords> {
    let n = a.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let mut roots: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            let pairing = mat_vec(a, beta);
            for i in 0..n {
                // α_i-string through β: p - q = ⟨β, α_i∨⟩
                let mut p = 0i64;
                loop {
                    let mut c = beta.clone();
                    c[i] -= p + 1;
                    if c.iter().all(|&x| x >= 0) && known.contains(&c) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing[i] > 0 {
                    let mut c = beta.clone();
                    c[i] += 1;
                    if known.insert(c.clone()) {
                        roots.push(c.clone());
                        next.push(c);
                    }
                }
            }
        }
        next.sort();
        frontier = next;
    }
    roots.into_iter().map(RootCoords).collect()
}

fn enumerate_weyl_group(a: &[Vec<i64>], rho: &[i64]) -> Vec<WeylElement> {
    let n = a.len();
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    // (s_i λ)_j = λ_j - λ_i A[j][i]
    let generators: Vec<Vec<Vec<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|l| i64::from(j == l) - if l == i { a[j][i] } else { 0 })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut elements = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(rho.to_vec());
    queue.push_back(WeylElement {
        matrix: identity,
        length: 0,
    });
    while let Some(w) = queue.pop_front() {
        for g in &generators {
            let m = mat_mul(g, &w.matrix);
            if seen.insert(mat_vec(&m, rho)) {
                queue.push_back(WeylElement {
                    matrix: m,
                    length: w.length + 1,
                });
            }
        }
        elements.push(w);
    }
    elements
}

impl RootDatum {
    /// Parses labels such as `"A2"` or `"g2"`.
    pub fn from_label(label: &str) -> Result<RootDatum> {
        let label = label.trim();
        let mut chars = label.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::UnsupportedType { label: label.into() })?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnsupportedType { label: label.into() })?;
        build_root_datum(&family.to_string(), rank)
    }

    fn construct(label: String, cartan: Vec<Vec<i64>>) -> RootDatum {
        let rank = cartan.len();
        let d = symmetrizers(&cartan);
        let positive_roots = positive_root_closure(&cartan);
        let root_weights: Vec<Weight> = positive_roots
            .iter()
            .map(|r| Weight(mat_vec(&cartan, &r.0)))
            .collect();
        let form: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| d[i] * cartan[i][j]).collect())
            .collect();
        let coroot_coeffs = positive_roots
            .iter()
            .map(|r| {
                let c = &r.0;
                let norm2: i64 = (0..rank)
                    .flat_map(|i| (0..rank).map(move |j| (i, j)))
                    .map(|(i, j)| c[i] * c[j] * form[i][j])
                    .sum();
                let d_beta = norm2 / 2;
                (0..rank)
                    .map(|i| {
                        debug_assert_eq!((c[i] * d[i]) % d_beta, 0);
                        c[i] * d[i] / d_beta
                    })
                    .collect()
            })
            .collect();
        let rho = Weight(vec![1; rank]);
        let det = determinant(&cartan);
        let adj = adjugate(&cartan);
        let weyl = enumerate_weyl_group(&cartan, &rho.0);
        let minus_rho: Vec<i64> = vec![-1; rank];
        let w0 = weyl
            .iter()
            .find(|w| mat_vec(&w.matrix, &rho.0) == minus_rho)
            .expect("longest element exists");
        let w0_perm = w0
            .matrix
            .iter()
            .map(|row| row.iter().position(|&x| x == -1).expect("w0 = -σ"))
            .collect();
        let coxeter_number = 2 * positive_roots.len() as i64 / rank as i64;
        RootDatum {
            inner: Arc::new(Inner {
                label,
                rank,
                cartan,
                d,
                positive_roots,
                root_weights,
                coroot_coeffs,
                rho,
                coxeter_number,
                det,
                adj,
                form,
                weyl,
                w0_perm,
                kostant_cache: Mutex::new(HashMap::new()),
                bounded_cache: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn rank(&self) -> usize {
        self.inner.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.inner.cartan
    }

    /// Minimal positive `d_i` with `D·A` symmetric.
    pub fn symmetrizers(&self) -> &[i64] {
        &self.inner.d
    }

    /// Positive roots in simple-root coordinates, ordered by height.
    /// The first `rank` entries are the simple roots.
    pub fn positive_roots(&self) -> &[RootCoords] {
        &self.inner.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.inner.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.inner.rho
    }

    pub fn coxeter_number(&self) -> i64 {
        self.inner.coxeter_number
    }

    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.inner.weyl
    }

    /// `w0(λ)_i = -λ_{σ(i)}`; returns `σ`.
    pub fn w0_permutation(&self) -> &[usize] {
        &self.inner.w0_perm
    }

    pub fn w0(&self, lambda: &Weight) -> Weight {
        Weight(self.inner.w0_perm.iter().map(|&j| -lambda.0[j]).collect())
    }

    /// `w0·λ = w0(λ+ρ) - ρ`.
    pub fn w0_dot(&self, lambda: &Weight) -> Weight {
        &self.w0(&(lambda + self.rho())) - self.rho()
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::Argument(format!(
                "weight {w} has length {} but {} has rank {}",
                w.rank(),
                self.label(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn root_to_weight(&self, r: &RootCoords) -> Weight {
        Weight(mat_vec(&self.inner.cartan, &r.0))
    }

    /// Weight coordinates of the `index`-th positive root.
    pub fn root_weight(&self, index: usize) -> &Weight {
        &self.inner.root_weights[index]
    }

    pub fn root_index(&self, beta: &RootCoords) -> Option<usize> {
        self.inner.positive_roots.iter().position(|r| r == beta)
    }

    /// `det(A)`; all root coordinates are integers divided by this.
    pub fn cartan_det(&self) -> i64 {
        self.inner.det
    }

    /// Root coordinates of `w`, scaled by `det(A)` so they are integral.
    pub fn scaled_root_coords(&self, w: &Weight) -> Vec<i64> {
        mat_vec(&self.inner.adj, &w.0)
    }

    /// Root coordinates of `w` when `w` lies in the root lattice.
    pub fn root_coords(&self, w: &Weight) -> Option<RootCoords> {
        let det = self.inner.det;
        let scaled = self.scaled_root_coords(w);
        if scaled.iter().all(|c| c % det == 0) {
            Some(RootCoords(scaled.into_iter().map(|c| c / det).collect()))
        } else {
            None
        }
    }

    /// `(x, y)` of two weights, scaled by `det(A)²`.
    pub fn scaled_form(&self, x: &Weight, y: &Weight) -> i64 {
        let a = self.scaled_root_coords(x);
        let b = self.scaled_root_coords(y);
        let f = &self.inner.form;
        (0..self.rank())
            .flat_map(|i| (0..self.rank()).map(move |j| (i, j)))
            .map(|(i, j)| a[i] * f[i][j] * b[j])
            .sum()
    }

    /// `⟨λ, β∨⟩` for the `index`-th positive root.
    pub fn coroot_pairing(&self, index: usize, lambda: &Weight) -> i64 {
        self.inner.coroot_coeffs[index]
            .iter()
            .zip(&lambda.0)
            .map(|(c, l)| c * l)
            .sum()
    }

    /// `s_{β,m}·λ = λ - ⟨λ+ρ, β∨⟩β + m·k·β` for the `index`-th positive root.
    pub fn affine_dot_reflect(&self, index: usize, m: i64, k: u64, lambda: &Weight) -> Weight {
        let shifted = lambda + self.rho();
        let coeff = self.coroot_pairing(index, &shifted) - m * k as i64;
        lambda - &self.root_weight(index).scaled(coeff)
    }

    /// `μ ≤ λ`: `λ - μ` is a nonnegative integral combination of simple roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        match self.root_coords(&(lambda - mu)) {
            Some(rc) => rc.is_nonnegative(),
            None => false,
        }
    }

    /// Weyl's dimension formula for dominant `λ`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigUint> {
        self.check_rank(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::Argument(format!("{lambda} is not dominant")));
        }
        let shifted = lambda + self.rho();
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for i in 0..self.num_positive_roots() {
            num *= self.coroot_pairing(i, &shifted) as u64;
            den *= self.coroot_pairing(i, self.rho()) as u64;
        }
        let (q, r) = num.div_rem(&den);
        if r != BigUint::from(0u32) {
            return Err(Error::Consistency("Weyl dimension is not integral".into()));
        }
        Ok(q)
    }
}

/// `μ ≤ λ` in the dominance order.
pub fn dominance_leq(mu: &Weight, lambda: &Weight, rd: &RootDatum) -> bool {
    rd.dominance_leq(mu, lambda)
}

/// Affine dot action of `s_{β,m}` with translation modulus `k`.
pub fn dot_action(
    beta: &RootCoords,
    m: i64,
    k: u64,
    lambda: &Weight,
    rd: &RootDatum,
) -> Result<Weight> {
    rd.check_rank(lambda)?;
    let index = rd
        .root_index(beta)
        .ok_or_else(|| Error::Argument(format!("{beta} is not a positive root of {}", rd.label())))?;
    Ok(rd.affine_dot_reflect(index, m, k, lambda))
}

/// Number of ways to write `ν` as a sum of positive roots.
pub fn kostant_partition(nu: &RootCoords, rd: &RootDatum) -> BigUint {
    rd.kostant_partition(nu)
}

/// Number of tuples `(n_β)` with `0 ≤ n_β < bound` and `Σ n_β β = ν`.
pub fn count_bounded_partitions(nu: &RootCoords, bound: u64, rd: &RootDatum) -> BigUint {
    rd.count_bounded_partitions(nu, bound)
}
