use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{RootCoords, RootDatum};

impl RootDatum {
    /// Kostant's partition function `P(ν)`.
    pub fn kostant_partition(&self, nu: &RootCoords) -> BigUint {
        if !nu.is_nonnegative() {
            return BigUint::zero();
        }
        self.kostant_rec(self.num_positive_roots(), &nu.0)
    }

    // partitions using the roots with index < k
    fn kostant_rec(&self, k: usize, nu: &[i64]) -> BigUint {
        if k <= self.rank() {
            return BigUint::one();
        }
        let key = (k, nu.to_vec());
        if let Some(v) = self.inner.kostant_cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let beta = &self.positive_roots()[k - 1].0;
        let mut total = BigUint::zero();
        let mut cur = nu.to_vec();
        while cur.iter().all(|&c| c >= 0) {
            total += self.kostant_rec(k - 1, &cur);
            cur.iter_mut().zip(beta).for_each(|(c, b)| *c -= b);
        }
        self.inner
            .kostant_cache
            .lock()
            .unwrap()
            .insert(key, total.clone());
        total
    }

    /// Number of ways to write `ν = Σ n_β β` with every `0 ≤ n_β < bound`.
    pub fn count_bounded_partitions(&self, nu: &RootCoords, bound: u64) -> BigUint {
        if !nu.is_nonnegative() || bound == 0 {
            return BigUint::zero();
        }
        self.bounded_rec(bound, self.num_positive_roots(), &nu.0)
    }

    fn bounded_rec(&self, bound: u64, k: usize, nu: &[i64]) -> BigUint {
        if k <= self.rank() {
            let fits = nu.iter().all(|&c| c >= 0 && (c as u64) < bound);
            return if fits { BigUint::one() } else { BigUint::zero() };
        }
        let key = (bound, k, nu.to_vec());
        if let Some(v) = self.inner.bounded_cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let beta = &self.positive_roots()[k - 1].0;
        let mut total = BigUint::zero();
        let mut cur = nu.to_vec();
        for _ in 0..bound {
            if !cur.iter().all(|&c| c >= 0) {
                break;
            }
            total += self.bounded_rec(bound, k - 1, &cur);
            cur.iter_mut().zip(beta).for_each(|(c, b)| *c -= b);
        }
        self.inner
            .bounded_cache
            .lock()
            .unwrap()
            .insert(key, total.clone());
        total
    }
}

/// Partition counts for every `ν` in the box `0 ≤ ν_i ≤ extent_i`,
/// optionally with each root used fewer than `bound` times.
pub struct PartitionTable {
    extent: Vec<usize>,
    strides: Vec<usize>,
    values: Vec<BigUint>,
}

impl PartitionTable {
    pub fn new(rd: &RootDatum, extent: &[usize], bound: Option<u64>) -> PartitionTable {
        let n = extent.len();
        assert_eq!(n, rd.rank());
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (extent[i + 1] + 1);
        }
        let size = strides[0] * (extent[0] + 1);
        let mut values = vec![BigUint::zero(); size];
        values[0] = BigUint::one();
        let mut table = PartitionTable {
            extent: extent.to_vec(),
            strides,
            values: Vec::new(),
        };
        let coords: Vec<Vec<usize>> = (0..size).map(|f| table.unflatten(f)).collect();
        for beta in rd.positive_roots() {
            let b: Vec<usize> = beta.0.iter().map(|&c| c as usize).collect();
            let shift = table.offset(&b);
            match bound {
                None => {
                    for (f, c) in coords.iter().enumerate() {
                        if c.iter().zip(&b).all(|(x, y)| x >= y) {
                            let prev = values[f - shift].clone();
                            values[f] += prev;
                        }
                    }
                }
                Some(bound) => {
                    let old = values.clone();
                    let bb = bound as usize;
                    for (f, c) in coords.iter().enumerate() {
                        if c.iter().zip(&b).all(|(x, y)| x >= y) {
                            let prev = values[f - shift].clone();
                            values[f] += prev;
                            if c.iter().zip(&b).all(|(x, y)| *x >= y * bb) {
                                values[f] -= &old[f - shift * bb];
                            }
                        }
                    }
                }
            }
        }
        table.values = values;
        table
    }

    fn offset(&self, c: &[usize]) -> usize {
        c.iter().zip(&self.strides).map(|(a, s)| a * s).sum()
    }

    fn unflatten(&self, mut f: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|s| {
                let q = f / s;
                f %= s;
                q
            })
            .collect()
    }

    pub fn extent(&self) -> &[usize] {
        &self.extent
    }

    /// Zero outside the box.
    pub fn get(&self, nu: &[i64]) -> BigUint {
        let inside = nu
            .iter()
            .zip(&self.extent)
            .all(|(&c, &e)| c >= 0 && (c as usize) <= e);
        if !inside {
            return BigUint::zero();
        }
        let c: Vec<usize> = nu.iter().map(|&x| x as usize).collect();
        self.values[self.offset(&c)].clone()
    }
}
