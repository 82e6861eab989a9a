//! Affine reflections and the strong linkage relation.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::charring::TruncationWindow;
use crate::error::{Error, Result};
use crate::rootsys::{RootCoords, RootDatum, Weight};

/// `s_{β,m}`, acting by `λ ↦ s_β·λ + m·k·β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineReflection {
    pub beta: RootCoords,
    pub m: i64,
    pub modulus: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub from: Weight,
    pub reflection: AffineReflection,
    pub to: Weight,
}

/// Outcome of a strong-linkage query; `chain` walks down from `λ` to `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkageWitness {
    pub linked: bool,
    pub mu: Weight,
    pub lambda: Weight,
    pub modulus: u64,
    pub chain: Vec<ChainStep>,
}

pub fn apply_reflection(r: &AffineReflection, lambda: &Weight, rd: &RootDatum) -> Result<Weight> {
    crate::rootsys::dot_action(&r.beta, r.m, r.modulus, lambda, rd)
}

fn check_modulus(k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::Argument(format!("modulus {k} must be at least 2")));
    }
    Ok(())
}

// Strictly lower reflection images of ν whose scaled root coordinates
// relative to `top` stay within `limits`.
fn lower_images(
    nu: &Weight,
    k: u64,
    rd: &RootDatum,
    top: &Weight,
    limits: &[i64],
) -> Vec<(AffineReflection, Weight)> {
    let ki = k as i64;
    let base = rd.scaled_root_coords(&(top - nu));
    let det = rd.cartan_det();
    let shifted = nu + rd.rho();
    let mut out = Vec::new();
    for (idx, beta) in rd.positive_roots().iter().enumerate() {
        // moving down by tβ adds t·det·β to the scaled coordinates
        let t_max = beta
            .0
            .iter()
            .zip(base.iter().zip(limits))
            .filter(|(b, _)| **b > 0)
            .map(|(b, (c, l))| (l - c).div_euclid(b * det))
            .min()
            .unwrap_or(0);
        let c = rd.coroot_pairing(idx, &shifted);
        let mut t = c.rem_euclid(ki);
        if t == 0 {
            t = ki;
        }
        while t <= t_max {
            let image = nu - &rd.root_weight(idx).scaled(t);
            let reflection = AffineReflection {
                beta: beta.clone(),
                m: (c - t) / ki,
                modulus: k,
            };
            out.push((reflection, image));
            t += ki;
        }
    }
    out
}

/// Decides `μ ↑ λ` by breadth-first search down from `λ`.
pub fn strongly_linked(
    mu: &Weight,
    lambda: &Weight,
    k: u64,
    rd: &RootDatum,
) -> Result<LinkageWitness> {
    rd.check_rank(mu)?;
    rd.check_rank(lambda)?;
    check_modulus(k)?;
    let mut witness = LinkageWitness {
        linked: false,
        mu: mu.clone(),
        lambda: lambda.clone(),
        modulus: k,
        chain: Vec::new(),
    };
    if mu == lambda {
        witness.linked = true;
        return Ok(witness);
    }
    if !rd.dominance_leq(mu, lambda) {
        return Ok(witness);
    }
    // images must stay above μ
    let limits = rd.scaled_root_coords(&(lambda - mu));
    let mut parent: HashMap<Weight, (AffineReflection, Weight)> = HashMap::new();
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(nu) = queue.pop_front() {
        for (refl, image) in lower_images(&nu, k, rd, lambda, &limits) {
            if image == *lambda || parent.contains_key(&image) {
                continue;
            }
            parent.insert(image.clone(), (refl, nu.clone()));
            if image == *mu {
                let mut cur = image;
                while cur != *lambda {
                    let (refl, from) = parent[&cur].clone();
                    witness.chain.push(ChainStep {
                        from: from.clone(),
                        reflection: refl,
                        to: cur,
                    });
                    cur = from;
                }
                witness.chain.reverse();
                witness.linked = true;
                return Ok(witness);
            }
            queue.push_back(image);
        }
    }
    Ok(witness)
}

/// Every `μ` in `window` with `μ ↑ λ`.
pub fn linkage_downset(
    lambda: &Weight,
    k: u64,
    rd: &RootDatum,
    window: &TruncationWindow,
) -> Result<BTreeSet<Weight>> {
    rd.check_rank(lambda)?;
    rd.check_rank(&window.top)?;
    check_modulus(k)?;
    let limits = vec![window.depth as i64 * rd.cartan_det(); rd.rank()];
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(nu) = queue.pop_front() {
        for (_, image) in lower_images(&nu, k, rd, &window.top, &limits) {
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen.retain(|w| window.contains(w, rd));
    Ok(seen)
}
