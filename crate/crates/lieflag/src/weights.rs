//! Weight systems of irreducible highest-weight modules.

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::roots::{RootDatum, RootVector, WeightVector};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Default bound on the dimension of a computed module.
pub const DIMENSION_CAP: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSystem {
    pub highest: WeightVector,
    pub table: BTreeMap<WeightVector, u64>,
}

impl WeightSystem {
    pub fn multiplicity(&self, w: &WeightVector) -> u64 {
        self.table.get(w).copied().unwrap_or(0)
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        self.table.contains_key(w)
    }

    pub fn dimension(&self) -> u64 {
        self.table.values().sum()
    }

    /// Support in lexicographic label order.
    pub fn support(&self) -> impl Iterator<Item = &WeightVector> {
        self.table.keys()
    }

    pub fn dominant_part(&self) -> impl Iterator<Item = (&WeightVector, &u64)> {
        self.table.iter().filter(|(w, _)| w.is_dominant())
    }
}

pub fn weyl_dimension(rd: &RootDatum, lambda: &WeightVector) -> Result<BigUint> {
    check_dominant(rd, lambda)?;
    let shifted = lambda + &rd.rho();
    let rho = rd.rho();
    let mut acc = Q::one();
    for a in rd.positive_roots() {
        let num = rd.pair_weight_root(&shifted, a);
        let den = rd.pair_weight_root(&rho, a);
        acc *= Q::new(num.into(), den.into());
    }
    if !acc.is_integer() {
        return Err(Error::Internal(format!("non-integral Weyl dimension for {lambda}")));
    }
    acc.to_integer().to_biguint().ok_or_else(|| Error::Internal("negative Weyl dimension".into()))
}

pub fn weyl_dimension_u64(rd: &RootDatum, lambda: &WeightVector) -> Result<u64> {
    weyl_dimension(rd, lambda)?.to_u64().ok_or(Error::ResourceCap { what: "module dimension", cap: u64::MAX })
}

pub fn dual_weight(rd: &RootDatum, lambda: &WeightVector) -> WeightVector {
    rd.to_dominant(&-lambda).dominant
}

pub fn lowest_weight(rd: &RootDatum, lambda: &WeightVector) -> WeightVector {
    -&dual_weight(rd, lambda)
}

pub fn weight_system(rd: &RootDatum, lambda: &WeightVector) -> Result<WeightSystem> {
    weight_system_capped(rd, lambda, DIMENSION_CAP)
}

pub fn weight_system_capped(rd: &RootDatum, lambda: &WeightVector, cap: u64) -> Result<WeightSystem> {
    let dim = weyl_dimension(rd, lambda)?;
    if dim > BigUint::from(cap) {
        return Err(Error::ResourceCap { what: "module dimension", cap });
    }
    let dominant = dominant_multiplicities(rd, lambda)?;
    let mut table = BTreeMap::new();
    for (mu, m) in &dominant {
        for w in rd.weyl_orbit(mu)? {
            table.insert(w, *m);
        }
    }
    let ws = WeightSystem { highest: lambda.clone(), table };
    if BigUint::from(ws.dimension()) != dim {
        return Err(Error::Internal(format!("Freudenthal total {} differs from Weyl dimension {dim}", ws.dimension())));
    }
    Ok(ws)
}

fn check_dominant(rd: &RootDatum, lambda: &WeightVector) -> Result<()> {
    rd.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    Ok(())
}

/// Dominant weights `µ ≤ λ` with their depth vectors `λ − µ` in root coordinates.
fn dominant_weights(rd: &RootDatum, lambda: &WeightVector) -> Vec<(WeightVector, RootVector)> {
    let roots: Vec<(RootVector, WeightVector)> =
        rd.positive_roots().iter().map(|r| (r.clone(), rd.root_to_weight(r))).collect();
    let mut seen: HashMap<WeightVector, RootVector> = HashMap::new();
    seen.insert(lambda.clone(), RootVector::zero(rd.rank()));
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        let depth = seen[&mu].clone();
        for (r, rw) in &roots {
            let nu = &mu - rw;
            if nu.is_dominant() && !seen.contains_key(&nu) {
                seen.insert(nu.clone(), &depth + r);
                stack.push(nu);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| a.1.height().cmp(&b.1.height()).then_with(|| b.0.cmp(&a.0)));
    out
}

/// Freudenthal's recursion on the dominant chamber, all in integers.
pub fn dominant_multiplicities(rd: &RootDatum, lambda: &WeightVector) -> Result<BTreeMap<WeightVector, u64>> {
    check_dominant(rd, lambda)?;
    let rank = rd.rank();
    let d = rd.symmetrizers();
    let roots: Vec<(RootVector, WeightVector)> =
        rd.positive_roots().iter().map(|r| (r.clone(), rd.root_to_weight(r))).collect();
    let two_rho = rd.rho().scale(2);
    let mut mult: HashMap<WeightVector, i64> = HashMap::new();
    // tail[(ν, k)] = Σ_{j≥0} m(ν + jα_k)(ν + jα_k, α_k); every weight above the current one is final.
    let mut tail: HashMap<(WeightVector, usize), i64> = HashMap::new();
    for (mu, depth) in dominant_weights(rd, lambda) {
        if depth.is_zero() {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i64 = 0;
        for (k, (r, rw)) in roots.iter().enumerate() {
            let mut nu = &mu + rw;
            let mut path = Vec::new();
            let mut acc = 0;
            loop {
                if let Some(&t) = tail.get(&(nu.clone(), k)) {
                    acc = t;
                    break;
                }
                let dom = rd.to_dominant(&nu).dominant;
                let Some(&m) = mult.get(&dom) else { break };
                let next = &nu + rw;
                path.push((m * rd.pair_weight_root(&nu, r), nu));
                nu = next;
            }
            for (term, w) in path.into_iter().rev() {
                acc += term;
                tail.insert((w, k), acc);
            }
            num += acc;
        }
        let sum = &(lambda + &mu) + &two_rho;
        let den: i64 = (0..rank).map(|j| depth.0[j] * d[j] * sum.0[j]).sum();
        if den <= 0 || (2 * num) % den != 0 {
            return Err(Error::Internal(format!("Freudenthal step at {mu}: {num}/{den}")));
        }
        let m = 2 * num / den;
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    Ok(mult.into_iter().map(|(w, m)| (w, m as u64)).collect())
}
