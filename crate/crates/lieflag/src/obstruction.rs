//! Candidate filter and the weight-lattice exclusion test.

use crate::error::Result;
use crate::roots::{LieType, RootDatum, RootStatus, RootVector, WeightVector};
use crate::tensor::dual_tensor_adjoint;
use crate::weights::{dual_weight, weight_system, WeightSystem};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateReport {
    pub lie_type: LieType,
    /// 1-based fundamental-weight indices.
    pub candidate_indices: Vec<usize>,
    pub short_coroot_coefficients: Vec<i64>,
}

/// Positions where the coroot of the highest root has coefficient one.
pub fn shortroot_candidates(rd: &RootDatum) -> CandidateReport {
    let coeffs = rd.coroot_coordinates(rd.highest_root()).expect("highest root is a root");
    CandidateReport {
        lie_type: rd.lie_type(),
        candidate_indices: coeffs.iter().enumerate().filter(|(_, &c)| c == 1).map(|(i, _)| i + 1).collect(),
        short_coroot_coefficients: coeffs,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaStatus {
    PositiveRoot,
    NegativeRoot,
    Zero,
    NotRoot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaEntry {
    pub mu: WeightVector,
    pub gamma: WeightVector,
    /// Simple-root coordinates of γ when it lies in the root lattice.
    pub gamma_root: Option<RootVector>,
    pub status: GammaStatus,
    pub witness: Option<WeightVector>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Excluded,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub lie_type: LieType,
    pub lambda: WeightVector,
    pub lambda_star: WeightVector,
    pub dimension: u64,
    pub multiplicity_free: bool,
    pub summands: Vec<GammaEntry>,
    pub verdict: Verdict,
}

fn classify_gamma(rd: &RootDatum, gamma: &WeightVector) -> (Option<RootVector>, GammaStatus) {
    if gamma.is_zero() {
        return (Some(RootVector::zero(rd.rank())), GammaStatus::Zero);
    }
    let coords = rd.weight_to_root_coords(gamma);
    let root = rd.weight_to_root(gamma);
    let status = match rd.is_root_rational(&coords) {
        RootStatus::Positive => GammaStatus::PositiveRoot,
        RootStatus::Negative => GammaStatus::NegativeRoot,
        RootStatus::NotARoot => GammaStatus::NotRoot,
    };
    (root, status)
}

/// `(µ, γ = µ − λ*, status)` for each summand `V(µ)` of `V* ⊗ R(𝔩)`.
pub fn candidate_gammas(rd: &RootDatum, lambda: &WeightVector) -> Result<Vec<(WeightVector, WeightVector, GammaStatus)>> {
    let star = dual_weight(rd, lambda);
    let dec = dual_tensor_adjoint(rd, lambda)?;
    Ok(dec
        .highest_weights()
        .map(|mu| {
            let gamma = mu - &star;
            let (_, st) = classify_gamma(rd, &gamma);
            (mu.clone(), gamma, st)
        })
        .collect())
}

/// First `ν` in label order with `ν+γ ∈ 𝔛(V)` and `ν+λ*+γ ∉ Φ⁺`.
pub fn find_witness(rd: &RootDatum, lambda: &WeightVector, gamma: &RootVector) -> Result<Option<WeightVector>> {
    let ws = weight_system(rd, lambda)?;
    let star = dual_weight(rd, lambda);
    Ok(scan(rd, &ws, &star, &rd.root_to_weight(gamma)))
}

fn scan(rd: &RootDatum, ws: &WeightSystem, star: &WeightVector, gamma: &WeightVector) -> Option<WeightVector> {
    let shift = star + gamma;
    ws.support()
        .find(|nu| {
            ws.contains(&(*nu + gamma))
                && rd.weight_to_root(&(*nu + &shift)).map_or(true, |r| !rd.is_positive_root(&r))
        })
        .cloned()
}

/// Re-checks a witness from scratch against module and root data.
pub fn validate_witness(
    rd: &RootDatum,
    ws: &WeightSystem,
    lambda_star: &WeightVector,
    gamma: &WeightVector,
    nu: &WeightVector,
) -> bool {
    let total = &(nu + lambda_star) + gamma;
    let coords = rd.weight_to_root_coords(&total);
    ws.multiplicity(nu) > 0 && ws.multiplicity(&(nu + gamma)) > 0 && rd.is_root_rational(&coords) != RootStatus::Positive
}

pub fn obstruction_report(rd: &RootDatum, lambda: &WeightVector) -> Result<ObstructionReport> {
    let ws = weight_system(rd, lambda)?;
    let star = dual_weight(rd, lambda);
    let dec = dual_tensor_adjoint(rd, lambda)?;
    let summands: Vec<GammaEntry> = dec
        .highest_weights()
        .map(|mu| {
            let gamma = mu - &star;
            let (gamma_root, status) = classify_gamma(rd, &gamma);
            let witness = (status == GammaStatus::PositiveRoot).then(|| scan(rd, &ws, &star, &gamma)).flatten();
            GammaEntry { mu: mu.clone(), gamma, gamma_root, status, witness }
        })
        .collect();
    let excluded = summands.iter().filter(|e| e.status == GammaStatus::PositiveRoot).all(|e| e.witness.is_some());
    Ok(ObstructionReport {
        lie_type: rd.lie_type(),
        lambda: lambda.clone(),
        lambda_star: star,
        dimension: ws.dimension(),
        multiplicity_free: dec.is_multiplicity_free(),
        summands,
        verdict: if excluded { Verdict::Excluded } else { Verdict::Inconclusive },
    })
}

impl ObstructionReport {
    /// Every recorded witness re-validates against fresh module data.
    pub fn revalidate(&self, rd: &RootDatum) -> Result<bool> {
        let ws = weight_system(rd, &self.lambda)?;
        Ok(self.summands.iter().all(|e| match &e.witness {
            Some(nu) => validate_witness(rd, &ws, &self.lambda_star, &e.gamma, nu),
            None => true,
        }))
    }
}
