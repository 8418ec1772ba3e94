//! Matrix realizations of classical Lie algebras and derived modules.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SpanBasis};
use crate::rational::{q, qf, Q};
use crate::roots::{Family, LieType, RootDatum, WeightVector};
use num_traits::Zero;
use std::collections::BTreeMap;

/// A Chevalley triple acting on the module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub x: Matrix,
    pub y: Matrix,
    pub h: Matrix,
}

/// How a module was obtained from the defining representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Defining,
    Dual(Box<Construction>),
    ExteriorSquare(Box<Construction>),
}

impl Construction {
    fn dim(&self, base: usize) -> usize {
        match self {
            Construction::Defining => base,
            Construction::Dual(c) => c.dim(base),
            Construction::ExteriorSquare(c) => {
                let d = c.dim(base);
                d * (d - 1) / 2
            }
        }
    }

    /// Action on the module of an operator on the defining space.
    fn lift(&self, x: &Matrix) -> Matrix {
        match self {
            Construction::Defining => x.clone(),
            Construction::Dual(c) => -&c.lift(x).transpose(),
            Construction::ExteriorSquare(c) => wedge_action(&c.lift(x)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub algebra_type: LieType,
    pub module_dim: usize,
    pub generators: Vec<Triple>,
    pub algebra_basis: Vec<Matrix>,
    /// Invariant bilinear form on the module, when one is part of the construction.
    pub form: Option<Matrix>,
    pub defining_dim: usize,
    pub construction: Construction,
}

/// `y = c·xᵀ` normalized so that `[h, x] = 2x` with `h = [x, y]`.
fn triple_from_raising(x: Matrix) -> Triple {
    let y0 = x.transpose();
    let h0 = x.commutator(&y0);
    let hx = h0.commutator(&x);
    let (r, c, v) = x.nonzeros().next().map(|(r, c, v)| (r, c, v.clone())).expect("nonzero raising operator");
    let ratio = hx.get(r, c) / v;
    let s = q(2) / ratio;
    Triple { y: y0.scale(&s), h: h0.scale(&s), x }
}

fn close_under_brackets(gens: &[Matrix], n: usize) -> Vec<Matrix> {
    let mut span = SpanBasis::new(n * n);
    let mut basis: Vec<Matrix> = Vec::new();
    let mut queue: Vec<Matrix> = Vec::new();
    for g in gens {
        if span.insert(&g.flatten()) {
            basis.push(g.clone());
            queue.push(g.clone());
        }
    }
    while let Some(m) = queue.pop() {
        for g in gens {
            let b = g.commutator(&m);
            if !b.is_zero() && span.insert(&b.flatten()) {
                basis.push(b.clone());
                queue.push(b);
            }
        }
    }
    basis
}

impl MatrixRep {
    fn from_raising(algebra_type: LieType, xs: Vec<Matrix>, form: Option<Matrix>) -> Self {
        let n = xs[0].rows();
        let generators: Vec<Triple> = xs.into_iter().map(triple_from_raising).collect();
        let pos: Vec<Matrix> = generators.iter().map(|t| t.x.clone()).collect();
        let neg: Vec<Matrix> = generators.iter().map(|t| t.y.clone()).collect();
        let mut basis = close_under_brackets(&pos, n);
        basis.extend(close_under_brackets(&neg, n));
        basis.extend(generators.iter().map(|t| t.h.clone()));
        Self {
            algebra_type,
            module_dim: n,
            generators,
            algebra_basis: basis,
            form,
            defining_dim: n,
            construction: Construction::Defining,
        }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_basis.len()
    }

    /// Action on this module of an operator on the defining space.
    pub fn lift(&self, x: &Matrix) -> Matrix {
        self.construction.lift(x)
    }

    fn derived(&self, construction: Construction, f: impl Fn(&Matrix) -> Matrix) -> Self {
        let generators = self
            .generators
            .iter()
            .map(|t| Triple { x: f(&t.x), y: f(&t.y), h: f(&t.h) })
            .collect();
        Self {
            algebra_type: self.algebra_type,
            module_dim: construction.dim(self.defining_dim),
            generators,
            algebra_basis: self.algebra_basis.iter().map(&f).collect(),
            form: None,
            defining_dim: self.defining_dim,
            construction,
        }
    }

    /// Contragredient module, `X ↦ −Xᵀ`.
    pub fn dual(&self) -> Self {
        self.derived(Construction::Dual(Box::new(self.construction.clone())), |x| -&x.transpose())
    }

    /// `Λ²` of this module with basis `e_a∧e_b`, `a < b`, in lexicographic order.
    pub fn exterior_square(&self) -> Self {
        self.derived(Construction::ExteriorSquare(Box::new(self.construction.clone())), wedge_action)
    }

    /// Weights of the standard basis vectors, read off the diagonal `h_i`.
    pub fn module_weights(&self) -> Result<Vec<WeightVector>> {
        (0..self.module_dim)
            .map(|a| {
                self.generators
                    .iter()
                    .map(|t| {
                        if !t.h.is_diagonal() {
                            return Err(Error::Internal("toral generator is not diagonal".into()));
                        }
                        crate::rational::to_i64(t.h.get(a, a)).ok_or_else(|| Error::Internal("non-integral weight".into()))
                    })
                    .collect::<Result<Vec<i64>>>()
                    .map(WeightVector)
            })
            .collect()
    }

    /// Weight of each algebra basis element under `ad h`.
    pub fn algebra_weights(&self) -> Result<Vec<WeightVector>> {
        self.algebra_basis
            .iter()
            .map(|b| {
                let labels = self
                    .generators
                    .iter()
                    .map(|t| {
                        let hb = t.h.commutator(b);
                        let (r, c, v) = b.nonzeros().next().ok_or_else(|| Error::Internal("zero basis element".into()))?;
                        let ratio = hb.get(r, c) / v;
                        if hb != b.scale(&ratio) {
                            return Err(Error::Internal("algebra basis element is not a weight vector".into()));
                        }
                        crate::rational::to_i64(&ratio).ok_or_else(|| Error::Internal("non-integral root".into()))
                    })
                    .collect::<Result<Vec<i64>>>()?;
                Ok(WeightVector(labels))
            })
            .collect()
    }

    /// Span test for an operator on the module.
    pub fn in_algebra(&self, m: &Matrix) -> bool {
        let mut span = SpanBasis::new(self.module_dim * self.module_dim);
        for b in &self.algebra_basis {
            span.insert(&b.flatten());
        }
        span.contains(&m.flatten())
    }

    /// Whether the algebra basis is linearly independent as operators.
    pub fn is_faithful_basis(&self) -> bool {
        let mut span = SpanBasis::new(self.module_dim * self.module_dim);
        self.algebra_basis.iter().all(|b| span.insert(&b.flatten()))
    }

    /// Structural checks: Serre relations for the triples, closure and dimension.
    pub fn verify(&self) -> Result<RepChecks> {
        let rd = RootDatum::build(self.algebra_type)?;
        let a = rd.cartan();
        let mut triples_ok = true;
        for (i, ti) in self.generators.iter().enumerate() {
            triples_ok &= ti.x.commutator(&ti.y) == ti.h;
            for (j, tj) in self.generators.iter().enumerate() {
                let c = q(a[i][j]);
                triples_ok &= ti.h.commutator(&tj.x) == tj.x.scale(&c);
                triples_ok &= ti.h.commutator(&tj.y) == tj.y.scale(&-c);
                if i != j {
                    triples_ok &= ti.x.commutator(&tj.y).is_zero();
                }
            }
        }
        let mut span = SpanBasis::new(self.module_dim * self.module_dim);
        for b in &self.algebra_basis {
            span.insert(&b.flatten());
        }
        let closed = self
            .algebra_basis
            .iter()
            .all(|u| self.algebra_basis.iter().all(|v| span.contains(&u.commutator(v).flatten())));
        let preserves_form = self.form.as_ref().map(|f| {
            self.algebra_basis.iter().all(|m| (&(f * m) + &(&m.transpose() * f)).is_zero())
        });
        Ok(RepChecks {
            triples_ok,
            closed,
            dimension: span.rank(),
            expected_dimension: rd.rank() + 2 * rd.num_positive_roots(),
            preserves_form,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepChecks {
    pub triples_ok: bool,
    pub closed: bool,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub preserves_form: Option<bool>,
}

impl RepChecks {
    pub fn all_ok(&self) -> bool {
        self.triples_ok && self.closed && self.dimension == self.expected_dimension && self.preserves_form != Some(false)
    }
}

/// Index of `e_a ∧ e_b` (0-based, `a < b`) in the lexicographic basis of `Λ²(kⁿ)`.
pub fn wedge_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < n);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// Induced action on `Λ²`: `X(u∧v) = Xu∧v + u∧Xv`.
pub fn wedge_action(x: &Matrix) -> Matrix {
    let n = x.rows();
    let dim = n * (n - 1) / 2;
    let mut out = Matrix::zeros(dim, dim);
    let mut put = |c: usize, d: usize, col: usize, v: &Q| {
        if c == d || v.is_zero() {
            return;
        }
        if c < d {
            out.add_at(wedge_index(n, c, d), col, v);
        } else {
            out.add_at(wedge_index(n, d, c), col, &-v);
        }
    };
    for a in 0..n {
        for b in a + 1..n {
            let col = wedge_index(n, a, b);
            for c in 0..n {
                put(c, b, col, x.get(c, a));
                put(a, c, col, x.get(c, b));
            }
        }
    }
    out
}

/// `𝔰𝔩_n` on `kⁿ` with `x_i = E_{i,i+1}`.
pub fn sl_tautological(n: usize) -> Result<MatrixRep> {
    if n < 2 {
        return Err(Error::Inadmissible { family: 'A', rank: n.saturating_sub(1), reason: "sl_n needs n >= 2" });
    }
    let xs = (0..n - 1).map(|i| Matrix::unit(n, i, i + 1)).collect();
    Ok(MatrixRep::from_raising(LieType::new(Family::A, n - 1)?, xs, None))
}

/// Index of `e_i` (`i > 0`) or `e_{−i}` (`i < 0`) in the order `e_1..e_l, e_{−1}..e_{−l}`.
pub fn sp_index(l: usize, i: i64) -> usize {
    if i > 0 {
        (i - 1) as usize
    } else {
        l + (-i - 1) as usize
    }
}

/// `ω = Σ(e_i*⊗e_{−i}* − e_{−i}*⊗e_i*)` as a Gram matrix.
pub fn symplectic_form(l: usize) -> Matrix {
    let mut w = Matrix::zeros(2 * l, 2 * l);
    for i in 1..=l as i64 {
        w.set(sp_index(l, i), sp_index(l, -i), q(1));
        w.set(sp_index(l, -i), sp_index(l, i), q(-1));
    }
    w
}

/// `𝔰𝔭_{2l}` on `k^{2l}`; the long-root generator is `x_l = E_{l,−l}`.
pub fn sp_tautological(l: usize) -> Result<MatrixRep> {
    if l < 2 {
        return Err(Error::Inadmissible { family: 'C', rank: l, reason: "sp_2l needs l >= 2" });
    }
    let n = 2 * l;
    let e = |a: i64, b: i64| Matrix::unit(n, sp_index(l, a), sp_index(l, b));
    let mut xs: Vec<Matrix> = (1..l as i64).map(|i| &e(i, i + 1) - &e(-(i + 1), -i)).collect();
    xs.push(e(l as i64, -(l as i64)));
    Ok(MatrixRep::from_raising(LieType::new(Family::C, l)?, xs, Some(symplectic_form(l))))
}

/// Basis order in which the raising operators of [`sp_tautological`] are strictly upper triangular.
pub fn sp_flag_order(l: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (1..=l as i64).map(|i| sp_index(l, i)).collect();
    order.extend((1..=l as i64).rev().map(|i| sp_index(l, -i)));
    order
}

/// `𝔰𝔬_n` for the split form with ones on the antidiagonal.
pub fn so_vector(n: usize) -> Result<MatrixRep> {
    if n < 5 {
        return Err(Error::Inadmissible { family: if n % 2 == 1 { 'B' } else { 'D' }, rank: n / 2, reason: "so_n needs n >= 5" });
    }
    let l = n / 2;
    let prime = |a: usize| n - 1 - a;
    let f = |a: usize, b: usize| &Matrix::unit(n, a, b) - &Matrix::unit(n, prime(b), prime(a));
    let mut xs: Vec<Matrix> = (0..l - 1).map(|i| f(i, i + 1)).collect();
    let t = if n % 2 == 1 {
        xs.push(f(l - 1, l));
        LieType::new(Family::B, l)?
    } else {
        xs.push(f(l - 2, l));
        LieType::new(Family::D, l)?
    };
    let form = Matrix::from_fn(n, n, |r, c| if r + c == n - 1 { q(1) } else { q(0) });
    Ok(MatrixRep::from_raising(t, xs, Some(form)))
}

/// `x_i·v = 0` for every raising generator.
pub fn annihilated_by_raising(module: &MatrixRep, v: &[Q]) -> Result<bool> {
    if v.len() != module.module_dim {
        return Err(Error::DimensionMismatch(format!("vector of length {} for module of dimension {}", v.len(), module.module_dim)));
    }
    Ok(module.generators.iter().all(|t| t.x.apply(v).iter().all(Zero::is_zero)))
}

/// An element of `M ⊗ 𝔤𝔩(W)`: one operator on the defining space per basis vector of `M`.
pub type GlTensor = Vec<Matrix>;

/// Raising action on `M ⊗ 𝔤𝔩(W)`: `x·(m⊗X) = xm⊗X + m⊗[x, X]`.
pub fn raise_gl_tensor(base: &MatrixRep, module: &MatrixRep, elem: &[Matrix], i: usize) -> GlTensor {
    let xm = &module.generators[i].x;
    let xw = &base.generators[i].x;
    (0..module.module_dim)
        .map(|p| {
            let mut acc = xw.commutator(&elem[p]);
            for (qq, e) in elem.iter().enumerate() {
                let c = xm.get(p, qq);
                if !c.is_zero() {
                    acc = &acc + &e.scale(c);
                }
            }
            acc
        })
        .collect()
}

pub fn gl_tensor_annihilated(base: &MatrixRep, module: &MatrixRep, elem: &[Matrix]) -> Result<bool> {
    if elem.len() != module.module_dim {
        return Err(Error::DimensionMismatch("tensor length differs from module dimension".into()));
    }
    Ok((0..base.rank()).all(|i| raise_gl_tensor(base, module, elem, i).iter().all(Matrix::is_zero)))
}

/// Weight of a homogeneous element of `M ⊗ 𝔤𝔩(W)`, if it is one.
pub fn gl_tensor_weight(base: &MatrixRep, module: &MatrixRep, elem: &[Matrix]) -> Result<Option<WeightVector>> {
    let mw = module.module_weights()?;
    let ww = base.module_weights()?;
    let mut found: Option<WeightVector> = None;
    for (p, m) in elem.iter().enumerate() {
        for (r, c, _) in m.nonzeros() {
            let w = &(&mw[p] + &ww[r]) - &ww[c];
            match &found {
                None => found = Some(w),
                Some(f) if *f != w => return Ok(None),
                _ => {}
            }
        }
    }
    Ok(found)
}

/// Image of `M ⊗ 𝔤𝔩(W)` in `M ⊗ M ⊗ M*`: slot `i` holds the action of the `i`-th coefficient on `M`.
pub fn gl_tensor_to_operators(module: &MatrixRep, elem: &[Matrix]) -> Vec<Matrix> {
    elem.iter().map(|x| module.lift(x)).collect()
}

/// `T[i][j][k] = ops[i][j][k]` lies in `S²(M) ⊗ M*` iff it is symmetric in `i, j`.
pub fn in_symmetric_component(module_dim: usize, ops: &[Matrix]) -> Result<bool> {
    if ops.len() != module_dim || ops.iter().any(|m| m.rows() != module_dim || m.cols() != module_dim) {
        return Err(Error::DimensionMismatch("operator list does not match module dimension".into()));
    }
    for i in 0..module_dim {
        for j in 0..module_dim {
            for k in 0..module_dim {
                if ops[i].get(j, k) != ops[j].get(i, k) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The four highest-weight candidates in `Λ²W ⊗ 𝔤𝔩(W)` for `W = k^{l+1}`, `l ≥ 3`.
pub fn exterior_square_hw_candidates(l: usize) -> Vec<GlTensor> {
    let n = l + 1;
    let dim = n * (n - 1) / 2;
    let mut items: Vec<BTreeMap<usize, Matrix>> = vec![BTreeMap::new(); 4];
    let mut add = |item: usize, a: usize, b: usize, r: usize, c: usize, coef: Q| {
        let (idx, sign) = if a < b { (wedge_index(n, a - 1, b - 1), q(1)) } else { (wedge_index(n, b - 1, a - 1), q(-1)) };
        let m = items[item].entry(idx).or_insert_with(|| Matrix::zeros(n, n));
        m.add_at(r - 1, c - 1, &(coef * sign));
    };
    add(0, 1, 2, 1, n, q(1));
    for i in 2..=n {
        add(1, 1, i, 1, i, q(1));
    }
    add(2, 1, 3, 2, n, q(1));
    add(2, 2, 3, 1, n, q(-1));
    add(2, 1, 2, 3, n, q(-1));
    let half3 = qf(l as i64 - 3, 2);
    let half1 = qf(l as i64 - 1, 2);
    for i in 3..=n {
        add(3, 1, i, 2, i, q(1));
        add(3, 2, i, 1, i, q(-1));
        add(3, 1, 2, i, i, half3.clone());
    }
    add(3, 1, 2, 1, 1, half1.clone());
    add(3, 1, 2, 2, 2, half1);
    items
        .into_iter()
        .map(|m| (0..dim).map(|p| m.get(&p).cloned().unwrap_or_else(|| Matrix::zeros(n, n))).collect())
        .collect()
}
