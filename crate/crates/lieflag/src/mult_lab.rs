//! Compatible multiplications: verification, construction and search.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseSystem, SpanBasis};
use crate::matrix_reps::{sl_tautological, sp_index, symplectic_form, MatrixRep};
use crate::rational::{fmt_q, q, qf, serde_q, Q};
use crate::roots::WeightVector;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

mod a18;
pub use a18::{build_a18, mono_name, A18Report, A18_BASIS};

/// `e_i · e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    n: usize,
    c: Vec<Q>,
}

impl StructureTensor {
    pub fn zero(n: usize) -> Self {
        Self { n, c: vec![Q::zero(); n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.c[(i * self.n + j) * self.n + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Q) {
        let n = self.n;
        self.c[(i * n + j) * n + k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self { n: self.n, c: self.c.iter().map(|x| x * s).collect() }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Q)> + '_ {
        let n = self.n;
        self.c.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    pub fn product(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.n];
        for (i, j, k, c) in self.entries() {
            if !u[i].is_zero() && !v[j].is_zero() {
                out[k] += &u[i] * &v[j] * c;
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Q> {
        (0..self.n).map(|k| self.get(i, j, k).clone()).collect()
    }

    /// Left multiplication `µ_v`.
    pub fn mult_operator(&self, v: &[Q]) -> Matrix {
        let mut m = Matrix::zeros(self.n, self.n);
        for (i, j, k, c) in self.entries() {
            if !v[i].is_zero() {
                m.add_at(k, j, &(&v[i] * c));
            }
        }
        m
    }

    pub fn basis_operator(&self, i: usize) -> Matrix {
        self.mult_operator(&unit(self.n, i))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| (0..self.n).all(|k| self.get(i, j, k) == self.get(j, i, k))))
    }

    pub fn is_associative(&self) -> bool {
        let ops: Vec<Matrix> = (0..self.n).map(|i| self.basis_operator(i)).collect();
        for i in 0..self.n {
            for j in 0..self.n {
                // (e_i e_j) e_k = e_i (e_j e_k) for all k  ⇔  µ_{e_i e_j} = µ_i µ_j
                let lhs = self.mult_operator(&self.basis_product(i, j));
                if lhs != &ops[i] * &ops[j] {
                    return false;
                }
            }
        }
        true
    }

    /// `u(vw) = 0` for all basis triples.
    pub fn triple_products_vanish(&self) -> bool {
        let ops: Vec<Matrix> = (0..self.n).map(|i| self.basis_operator(i)).collect();
        ops.iter().all(|a| ops.iter().all(|b| (a * b).is_zero()))
    }

    /// Nilpotency of `µ_v` for basis vectors and a fixed list of combinations.
    pub fn all_nilpotent(&self) -> bool {
        nilpotency_probes(self.n).iter().all(|v| self.mult_operator(v).is_nilpotent())
    }

    pub fn to_json(&self) -> TensorJson {
        TensorJson { n: self.n, entries: self.entries().map(|(i, j, k, v)| (i, j, k, JsonQ(v.clone()))).collect() }
    }

    pub fn from_json(t: &TensorJson) -> Result<Self> {
        let mut out = Self::zero(t.n);
        for (i, j, k, v) in &t.entries {
            if *i >= t.n || *j >= t.n || *k >= t.n {
                return Err(Error::DimensionMismatch(format!("entry ({i},{j},{k}) outside dimension {}", t.n)));
            }
            let cur = out.get(*i, *j, *k).clone();
            out.set(*i, *j, *k, cur + &v.0);
        }
        Ok(out)
    }

    /// Direct sum, second summand placed after the first.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut out = Self::zero(n);
        for (i, j, k, v) in self.entries() {
            out.set(i, j, k, v.clone());
        }
        for (i, j, k, v) in other.entries() {
            out.set(i + self.n, j + self.n, k + self.n, v.clone());
        }
        out
    }
}

/// A rational serialized as a string `"n"` or `"n/d"`; integers are accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonQ(#[serde(with = "serde_q")] pub Q);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub n: usize,
    pub entries: Vec<(usize, usize, usize, JsonQ)>,
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

/// Basis vectors plus four fixed dense combinations.
pub fn nilpotency_probes(n: usize) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = (0..n).map(|i| unit(n, i)).collect();
    out.push(vec![Q::one(); n]);
    out.push((0..n).map(|i| q(i as i64 + 1)).collect());
    out.push((0..n).map(|i| q(if i % 2 == 0 { 1 } else { -1 })).collect());
    out.push((0..n).map(|i| qf(((i * i) as i64) + 2, i as i64 + 1)).collect());
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub names: Vec<String>,
    pub tensor: StructureTensor,
}

impl AlgebraSpec {
    pub fn new(names: Vec<String>, tensor: StructureTensor) -> Result<Self> {
        if names.len() != tensor.dim() {
            return Err(Error::DimensionMismatch("names and tensor differ in dimension".into()));
        }
        if names.iter().collect::<BTreeSet<_>>().len() != names.len() {
            return Err(Error::Internal("basis names are not unique".into()));
        }
        Ok(Self { names, tensor })
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Product of two named basis elements.
    pub fn mul_named(&self, a: &str, b: &str) -> Option<Vec<Q>> {
        Some(self.tensor.basis_product(self.index(a)?, self.index(b)?))
    }

    /// Coordinates as `name ↦ coefficient`, zeros dropped.
    pub fn describe(&self, v: &[Q]) -> BTreeMap<String, String> {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.names[i].clone(), fmt_q(c))).collect()
    }
}

/// Basis `x, x², …, xⁿ` with `xⁱ·xʲ = x^{i+j}`, truncated above `n`.
pub fn truncated_power_algebra(n: usize) -> AlgebraSpec {
    let mut t = StructureTensor::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            if i + j <= n {
                t.set(i - 1, j - 1, i + j - 1, Q::one());
            }
        }
    }
    let names = (1..=n).map(|i| if i == 1 { "x".to_string() } else { format!("x^{i}") }).collect();
    AlgebraSpec::new(names, t).expect("consistent")
}

/// The two-dimensional algebra `x² = y`, `xy = yx = y² = 0`.
pub fn two_dim_example() -> AlgebraSpec {
    let mut t = StructureTensor::zero(2);
    t.set(0, 0, 1, Q::one());
    AlgebraSpec::new(vec!["x".into(), "y".into()], t).expect("consistent")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub commutative: bool,
    pub associative: bool,
    pub all_nilpotent: bool,
    pub mu_in_image: bool,
    /// Row `a` holds the algebra-basis coordinates of `φ(e_a)`.
    pub phi_matrix: Option<Matrix>,
}

impl CompatibilityReport {
    pub fn compatible(&self) -> bool {
        self.commutative && self.associative && self.all_nilpotent && self.mu_in_image
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut f = Vec::new();
        if !self.commutative {
            f.push("commutativity");
        }
        if !self.associative {
            f.push("associativity");
        }
        if !self.all_nilpotent {
            f.push("nilpotency");
        }
        if !self.mu_in_image {
            f.push("multiplication operators in the image of the algebra");
        }
        f
    }
}

fn algebra_columns(rep: &MatrixRep) -> Matrix {
    let n = rep.module_dim;
    Matrix::from_fn(n * n, rep.algebra_basis.len(), |r, c| rep.algebra_basis[c].get(r / n, r % n).clone())
}

pub fn verify_compatible(rep: &MatrixRep, t: &StructureTensor) -> Result<CompatibilityReport> {
    if rep.module_dim != t.dim() {
        return Err(Error::DimensionMismatch(format!("module dimension {} vs tensor dimension {}", rep.module_dim, t.dim())));
    }
    let cols = algebra_columns(rep);
    let mut phi = Matrix::zeros(t.dim(), rep.algebra_basis.len());
    let mut mu_in_image = true;
    for a in 0..t.dim() {
        match cols.solve(&t.basis_operator(a).flatten()) {
            Some(x) => {
                for (b, v) in x.into_iter().enumerate() {
                    phi.set(a, b, v);
                }
            }
            None => mu_in_image = false,
        }
    }
    let faithful = rep.is_faithful_basis();
    Ok(CompatibilityReport {
        commutative: t.is_commutative(),
        associative: t.is_associative(),
        all_nilpotent: t.all_nilpotent(),
        mu_in_image,
        phi_matrix: (mu_in_image && faithful).then_some(phi),
    })
}

/// Fully symmetric trilinear form on `kᵐ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrilinearForm {
    m: usize,
    c: Vec<Q>,
}

impl TrilinearForm {
    pub fn zero(m: usize) -> Self {
        Self { m, c: vec![Q::zero(); m * m * m] }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Q {
        &self.c[(a * self.m + b) * self.m + c]
    }

    /// Sets the value at `(a, b, c)` without symmetrizing.
    pub fn set_raw(&mut self, a: usize, b: usize, c: usize, v: Q) {
        let m = self.m;
        self.c[(a * m + b) * m + c] = v;
    }

    /// Sets the value at all permutations of `(a, b, c)`.
    pub fn set_sym(&mut self, a: usize, b: usize, c: usize, v: Q) {
        for (x, y, z) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            self.set_raw(x, y, z, v.clone());
        }
    }

    pub fn check_symmetric(&self) -> Result<()> {
        for a in 0..self.m {
            for b in 0..self.m {
                for c in 0..self.m {
                    let v = self.get(a, b, c);
                    if v != self.get(b, a, c) || v != self.get(a, c, b) {
                        return Err(Error::NotSymmetric(vec![a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Seeded random symmetric form with small rational values.
    pub fn random(m: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut f = Self::zero(m);
        for a in 0..m {
            for b in a..m {
                for c in b..m {
                    let num: i64 = rng.gen_range(-4..=4);
                    let den: i64 = rng.gen_range(1..=3);
                    f.set_sym(a, b, c, qf(num, den));
                }
            }
        }
        f
    }
}

/// Product on `k^{2l}` with `ω(uv, w) = c(u, v, w)`, `c` lifted from `V/Z`, `Z = ⟨e_1..e_l⟩`.
pub fn from_trilinear(l: usize, c: &TrilinearForm) -> Result<StructureTensor> {
    c.check_symmetric()?;
    if c.dim() != l {
        return Err(Error::DimensionMismatch(format!("form on a {}-dimensional space, expected {l}", c.dim())));
    }
    let n = 2 * l;
    let omega = symplectic_form(l);
    let lifted = |u: usize, v: usize, w: usize| -> Q {
        let quot = |x: usize| (x >= l).then(|| x - l);
        match (quot(u), quot(v), quot(w)) {
            (Some(a), Some(b), Some(cc)) => c.get(a, b, cc).clone(),
            _ => Q::zero(),
        }
    };
    // ω(x, e_w) = Σ_k x_k ω[k][w], so x solves ωᵀ x = c(u, v, ·).
    let omega_t = omega.transpose();
    let mut t = StructureTensor::zero(n);
    for u in 0..n {
        for v in 0..n {
            let rhs: Vec<Q> = (0..n).map(|w| lifted(u, v, w)).collect();
            if rhs.iter().all(Zero::is_zero) {
                continue;
            }
            let x = omega_t.solve(&rhs).ok_or(Error::Singular)?;
            for (k, val) in x.into_iter().enumerate() {
                t.set(u, v, k, val);
            }
        }
    }
    Ok(t)
}

/// Basis names `e1..el, e-1..e-l` for the symplectic module.
pub fn sp_basis_names(l: usize) -> Vec<String> {
    let mut names = vec![String::new(); 2 * l];
    for i in 1..=l as i64 {
        names[sp_index(l, i)] = format!("e{i}");
        names[sp_index(l, -i)] = format!("e-{i}");
    }
    names
}

/// Basis of the span of all products `uv`.
pub fn product_span(t: &StructureTensor) -> Vec<Vec<Q>> {
    let mut span = SpanBasis::new(t.dim());
    let mut out = Vec::new();
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            let p = t.basis_product(i, j);
            if span.insert(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Products of basis vectors from distinct blocks vanish.
pub fn isotypic_vanishing_check(blocks: &[Vec<usize>], t: &StructureTensor) -> bool {
    for (bi, a) in blocks.iter().enumerate() {
        for (bj, b) in blocks.iter().enumerate() {
            if bi == bj {
                continue;
            }
            for &i in a {
                for &j in b {
                    if t.basis_product(i, j).iter().any(|x| !x.is_zero()) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `(g·t)(u, v) = g·t(g⁻¹u, g⁻¹v)`.
pub fn scaling_action(g: &Matrix, t: &StructureTensor) -> Result<StructureTensor> {
    let n = t.dim();
    if g.rows() != n || g.cols() != n {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix on a {n}-dimensional algebra", g.rows(), g.cols())));
    }
    let gi = g.inverse().ok_or(Error::Singular)?;
    let mut out = StructureTensor::zero(n);
    for i in 0..n {
        for j in 0..n {
            let p = t.product(&gi.column(i), &gi.column(j));
            let img = g.apply(&p);
            for (k, v) in img.into_iter().enumerate() {
                out.set(i, j, k, v);
            }
        }
    }
    Ok(out)
}

/// Weight-homogeneous basis of `{φ: V → 𝔩 : ρ(φ(v))w = ρ(φ(w))v}`.
#[derive(Clone, Debug)]
pub struct CompatSpace {
    /// Each element: row `a` = algebra-basis coordinates of `φ(e_a)`.
    pub basis: Vec<Matrix>,
    pub weights: Vec<WeightVector>,
}

impl CompatSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn linear_compat_space(rep: &MatrixRep) -> Result<CompatSpace> {
    if !rep.is_faithful_basis() {
        return Err(Error::Internal("algebra basis is not linearly independent on the module".into()));
    }
    let n = rep.module_dim;
    let m = rep.algebra_basis.len();
    let var = |a: usize, b: usize| a * m + b;
    let mut sys = SparseSystem::new(n * m);
    // columns[b][c] = X_b e_c as a sparse list
    let cols: Vec<Vec<Vec<(usize, Q)>>> = rep
        .algebra_basis
        .iter()
        .map(|x| (0..n).map(|c| (0..n).filter_map(|k| (!x.get(k, c).is_zero()).then(|| (k, x.get(k, c).clone()))).collect()).collect())
        .collect();
    for a in 0..n {
        for c in a + 1..n {
            let mut eqs: BTreeMap<usize, Vec<(usize, Q)>> = BTreeMap::new();
            for b in 0..m {
                for (k, v) in &cols[b][c] {
                    eqs.entry(*k).or_default().push((var(a, b), v.clone()));
                }
                for (k, v) in &cols[b][a] {
                    eqs.entry(*k).or_default().push((var(c, b), -v.clone()));
                }
            }
            for (_, eq) in eqs {
                sys.add_equation(eq);
            }
        }
    }
    let mw = rep.module_weights()?;
    let aw = rep.algebra_weights()?;
    let mut basis = Vec::new();
    let mut weights = Vec::new();
    for v in sys.kernel() {
        let lead = v.iter().position(|x| !x.is_zero()).expect("nonzero kernel vector");
        weights.push(&aw[lead % m] - &mw[lead / m]);
        basis.push(Matrix::from_fn(n, m, |a, b| v[var(a, b)].clone()));
    }
    Ok(CompatSpace { basis, weights })
}

/// `ρ(φ(e_a))` for each `a`.
pub fn phi_operators(rep: &MatrixRep, phi: &Matrix) -> Vec<Matrix> {
    (0..rep.module_dim)
        .map(|a| {
            let mut acc = Matrix::zeros(rep.module_dim, rep.module_dim);
            for (b, x) in rep.algebra_basis.iter().enumerate() {
                let c = phi.get(a, b);
                if !c.is_zero() {
                    acc = &acc + &x.scale(c);
                }
            }
            acc
        })
        .collect()
}

/// The multiplication `uv = ρ(φ(u))v`.
pub fn tensor_from_phi(rep: &MatrixRep, phi: &Matrix) -> StructureTensor {
    let n = rep.module_dim;
    let ops = phi_operators(rep, phi);
    let mut t = StructureTensor::zero(n);
    for (a, op) in ops.iter().enumerate() {
        for (k, j, v) in op.nonzeros() {
            t.set(a, j, k, v.clone());
        }
    }
    t
}

#[derive(Clone, Debug)]
pub struct BFixedCandidate {
    pub weight: WeightVector,
    pub phi: Matrix,
    pub tensor: StructureTensor,
    pub commutative: bool,
    pub associative: bool,
    pub nilpotent: bool,
}

impl BFixedCandidate {
    pub fn passes(&self) -> bool {
        self.commutative && self.associative && self.nilpotent
    }
}

/// Highest-weight vectors of the compatibility space, each tested for the quadratic axioms.
pub fn b_fixed_scan(rep: &MatrixRep, space: &CompatSpace) -> Result<Vec<BFixedCandidate>> {
    let n = rep.module_dim;
    let mut by_weight: BTreeMap<WeightVector, Vec<usize>> = BTreeMap::new();
    for (s, w) in space.weights.iter().enumerate() {
        by_weight.entry(w.clone()).or_default().push(s);
    }
    let mut out = Vec::new();
    for (w, members) in by_weight {
        // Raising images of each member, flattened as operator lists.
        let images: Vec<Vec<Q>> = members
            .iter()
            .map(|&s| {
                let ops = phi_operators(rep, &space.basis[s]);
                let mut flat = Vec::new();
                for t in &rep.generators {
                    for a in 0..n {
                        // (x·φ)(e_a) = [x, φ(e_a)] − Σ_c x[c][a] φ(e_c)
                        let mut acc = t.x.commutator(&ops[a]);
                        for (c, op) in ops.iter().enumerate() {
                            let coef = t.x.get(c, a);
                            if !coef.is_zero() {
                                acc = &acc - &op.scale(coef);
                            }
                        }
                        flat.extend(acc.flatten());
                    }
                }
                flat
            })
            .collect();
        let mat = Matrix::from_fn(images[0].len(), members.len(), |r, c| images[c][r].clone());
        for coeffs in mat.nullspace() {
            let mut phi = Matrix::zeros(n, rep.algebra_basis.len());
            for (c, &s) in coeffs.iter().zip(&members) {
                if !c.is_zero() {
                    phi = &phi + &space.basis[s].scale(c);
                }
            }
            let tensor = tensor_from_phi(rep, &phi);
            out.push(BFixedCandidate {
                weight: w.clone(),
                commutative: tensor.is_commutative(),
                associative: tensor.is_associative(),
                nilpotent: tensor.all_nilpotent(),
                phi,
                tensor,
            });
        }
    }
    Ok(out)
}

/// Ambient flag data for [`subalgebra_from_mult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Ambient {
    /// `SL_{l+1}` with `P = P_1`; `𝔲⁻` is the first column below the diagonal.
    ANode1 { l: usize },
    /// `Sp_{2l}` with `P = P_l`; not supported.
    CNodeL { l: usize },
}

#[derive(Clone, Debug)]
pub struct SubalgebraReport {
    pub ambient: Ambient,
    pub basis: Vec<Matrix>,
    pub abelian: bool,
    pub complement_to_p: bool,
    pub all_nilpotent: bool,
    pub dim_matches: bool,
}

impl SubalgebraReport {
    pub fn all_ok(&self) -> bool {
        self.abelian && self.complement_to_p && self.all_nilpotent && self.dim_matches
    }
}

/// `𝔞 = {u + φ(u)}` inside `𝔰𝔩_{l+1}`.
pub fn subalgebra_from_mult(ambient: Ambient, t: &StructureTensor) -> Result<SubalgebraReport> {
    let l = match ambient {
        Ambient::ANode1 { l } => l,
        Ambient::CNodeL { .. } => {
            return Err(Error::UnsupportedAmbient("symplectic ambients carry no tautological radical; only A-type node 1".into()))
        }
    };
    if t.dim() != l || l == 0 {
        return Err(Error::DimensionMismatch(format!("tensor of dimension {} for radical of dimension {l}", t.dim())));
    }
    let ops: Vec<Matrix> = if l == 1 {
        if !t.is_zero() {
            return Err(Error::Incompatible("nilpotency".into()));
        }
        vec![Matrix::zeros(1, 1)]
    } else {
        let rep = sl_tautological(l)?;
        let report = verify_compatible(&rep, t)?;
        if !report.compatible() {
            return Err(Error::Incompatible(report.failures().join(", ")));
        }
        let phi = report.phi_matrix.ok_or_else(|| Error::Internal("no φ for a faithful module".into()))?;
        phi_operators(&rep, &phi)
    };
    let big = l + 1;
    let basis: Vec<Matrix> = (0..l)
        .map(|a| {
            let mut m = Matrix::zeros(big, big);
            m.set(a + 1, 0, Q::one());
            for (r, c, v) in ops[a].nonzeros() {
                m.set(r + 1, c + 1, v.clone());
            }
            m
        })
        .collect();
    let abelian = basis.iter().all(|x| basis.iter().all(|y| x.commutator(y).is_zero()));
    let all_nilpotent = basis.iter().all(Matrix::is_nilpotent)
        && nilpotency_probes(l).iter().all(|v| {
            let mut acc = Matrix::zeros(big, big);
            for (c, b) in v.iter().zip(&basis) {
                acc = &acc + &b.scale(c);
            }
            acc.is_nilpotent()
        });
    // 𝔭: traceless matrices vanishing on the block below the (0,0) corner.
    let mut span = SpanBasis::new(big * big);
    let mut p_dim = 0;
    for r in 0..big {
        for c in 0..big {
            if c == 0 && r > 0 {
                continue;
            }
            let m = if r == c {
                if r == 0 {
                    continue;
                }
                &Matrix::unit(big, r - 1, r - 1) - &Matrix::unit(big, r, r)
            } else {
                Matrix::unit(big, r, c)
            };
            span.insert(&m.flatten());
            p_dim += 1;
        }
    }
    let mut independent = true;
    for b in &basis {
        if b.trace() != Q::zero() {
            independent = false;
        }
        independent &= span.insert(&b.flatten());
    }
    let sl_dim = big * big - 1;
    Ok(SubalgebraReport {
        ambient,
        abelian,
        complement_to_p: independent && span.rank() == sl_dim && p_dim + l == sl_dim,
        all_nilpotent,
        dim_matches: basis.len() == l,
        basis,
    })
}
