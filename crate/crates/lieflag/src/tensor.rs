//! Tensor product decompositions.

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::roots::{RootDatum, WeightVector};
use crate::weights::{dominant_multiplicities, dual_weight, weight_system, weyl_dimension_u64};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Default bound on `dim V(λ)·dim V(µ)` for the brute-force oracle.
pub const ORACLE_CAP: u64 = 250_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IrrepDecomposition {
    pub summands: BTreeMap<WeightVector, u64>,
}

impl IrrepDecomposition {
    pub fn multiplicity(&self, w: &WeightVector) -> u64 {
        self.summands.get(w).copied().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.summands.values().all(|&m| m == 1)
    }

    pub fn total_dimension(&self, rd: &RootDatum) -> Result<u64> {
        let mut s = 0u64;
        for (w, m) in &self.summands {
            s += m * weyl_dimension_u64(rd, w)?;
        }
        Ok(s)
    }

    pub fn highest_weights(&self) -> impl Iterator<Item = &WeightVector> {
        self.summands.keys()
    }
}

fn check_pair(rd: &RootDatum, a: &WeightVector, b: &WeightVector) -> Result<(u64, u64)> {
    for w in [a, b] {
        rd.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.0.clone()));
        }
    }
    Ok((weyl_dimension_u64(rd, a)?, weyl_dimension_u64(rd, b)?))
}

fn check_identity(rd: &RootDatum, dec: &IrrepDecomposition, da: u64, db: u64) -> Result<()> {
    let total = dec.total_dimension(rd)?;
    if total != da * db {
        return Err(Error::Internal(format!("dimension identity fails: {total} != {da}·{db}")));
    }
    Ok(())
}

/// Racah–Speiser reflection of `λ + ν + ρ` over the weights `ν` of the smaller factor.
pub fn klimyk(rd: &RootDatum, lambda: &WeightVector, mu: &WeightVector) -> Result<IrrepDecomposition> {
    let (dl, dm) = check_pair(rd, lambda, mu)?;
    let (big, small) = if dm <= dl { (lambda, mu) } else { (mu, lambda) };
    let ws = weight_system(rd, small)?;
    let rho = rd.rho();
    let base = big + &rho;
    let mut acc: BTreeMap<WeightVector, i64> = BTreeMap::new();
    for (nu, &m) in &ws.table {
        let d = rd.to_dominant(&(&base + nu));
        if d.singular {
            continue;
        }
        *acc.entry(&d.dominant - &rho).or_insert(0) += i64::from(d.parity) * m as i64;
    }
    let mut dec = IrrepDecomposition::default();
    for (w, m) in acc {
        match m {
            0 => {}
            m if m < 0 => return Err(Error::Internal(format!("negative multiplicity {m} at {w}"))),
            m => {
                dec.summands.insert(w, m as u64);
            }
        }
    }
    check_identity(rd, &dec, dl, dm)?;
    Ok(dec)
}

pub fn character_product_oracle(rd: &RootDatum, lambda: &WeightVector, mu: &WeightVector) -> Result<IrrepDecomposition> {
    character_product_oracle_capped(rd, lambda, mu, ORACLE_CAP)
}

/// Multiplies characters and peels off irreducible characters from the top, tracking dominant weights only.
pub fn character_product_oracle_capped(
    rd: &RootDatum,
    lambda: &WeightVector,
    mu: &WeightVector,
    cap: u64,
) -> Result<IrrepDecomposition> {
    let (dl, dm) = check_pair(rd, lambda, mu)?;
    if dl.saturating_mul(dm) > cap {
        return Err(Error::ResourceCap { what: "character product dimension", cap });
    }
    let a = weight_system(rd, lambda)?;
    let b = weight_system(rd, mu)?;
    let mut chi: HashMap<WeightVector, i64> = HashMap::new();
    for (x, m) in &a.table {
        for (y, n) in &b.table {
            let s = x + y;
            if s.is_dominant() {
                *chi.entry(s).or_insert(0) += (m * n) as i64;
            }
        }
    }
    let mut heights: HashMap<WeightVector, Q> = HashMap::new();
    let mut dec = IrrepDecomposition::default();
    loop {
        chi.retain(|_, m| *m != 0);
        if chi.is_empty() {
            break;
        }
        for w in chi.keys() {
            if !heights.contains_key(w) {
                heights.insert(w.clone(), rd.weight_to_root_coords(w).into_iter().sum());
            }
        }
        let top = chi
            .keys()
            .max_by(|x, y| heights[*x].cmp(&heights[*y]).then_with(|| x.cmp(y)))
            .cloned()
            .expect("non-empty");
        let m = chi[&top];
        if m < 0 || !top.is_dominant() {
            return Err(Error::Internal(format!("oracle peeled {top} with multiplicity {m}")));
        }
        for (w, k) in dominant_multiplicities(rd, &top)? {
            *chi.entry(w).or_insert(0) -= m * k as i64;
        }
        dec.summands.insert(top, m as u64);
    }
    check_identity(rd, &dec, dl, dm)?;
    Ok(dec)
}

/// `V(λ)* ⊗ R(𝔩)`.
pub fn dual_tensor_adjoint(rd: &RootDatum, lambda: &WeightVector) -> Result<IrrepDecomposition> {
    klimyk(rd, &dual_weight(rd, lambda), &rd.adjoint_weight())
}
