//! The 18-dimensional algebra generated by `x, y` in `k[x,y]/(x⁵+y⁵−x³y³, x⁴y, xy⁴)`.

use super::{AlgebraSpec, StructureTensor};
use crate::linalg::{Matrix, SpanBasis};
use crate::rational::{q, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

type Mono = (u32, u32);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Poly(BTreeMap<Mono, Q>);

impl Poly {
    fn mono(a: u32, b: u32) -> Self {
        Self(BTreeMap::from([((a, b), q(1))]))
    }

    fn add(&self, o: &Self, s: i64) -> Self {
        let mut out = self.0.clone();
        for (m, c) in &o.0 {
            *out.entry(*m).or_insert_with(Q::zero) += c * q(s);
        }
        out.retain(|_, c| !c.is_zero());
        Self(out)
    }

    fn mul(&self, o: &Self) -> Self {
        let mut out: BTreeMap<Mono, Q> = BTreeMap::new();
        for ((a, b), c) in &self.0 {
            for ((x, y), d) in &o.0 {
                *out.entry((a + x, b + y)).or_insert_with(Q::zero) += c * d;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Self(out)
    }

    fn truncate(&self, max_deg: u32) -> Self {
        Self(self.0.iter().filter(|((a, b), _)| a + b <= max_deg).map(|(m, c)| (*m, c.clone())).collect())
    }
}

fn relations() -> [Poly; 3] {
    let f1 = Poly::mono(5, 0).add(&Poly::mono(0, 5), 1).add(&Poly::mono(3, 3), -1);
    [f1, Poly::mono(4, 1), Poly::mono(1, 4)]
}

/// The basis listed for the algebra, in order.
pub const A18_BASIS: [Mono; 18] = [
    (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3),
    (4, 0), (3, 1), (2, 2), (1, 3), (0, 4), (2, 3), (3, 2), (5, 0), (0, 5),
];

pub fn mono_name((a, b): Mono) -> String {
    let part = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        e => format!("{v}^{e}"),
    };
    format!("{}{}", part("x", a), part("y", b))
}

#[derive(Clone, Debug)]
pub struct A18Report {
    pub algebra: AlgebraSpec,
    pub dimension: usize,
    pub basis_matches: bool,
    /// `x⁷` and `y⁷` rewritten explicitly through the relations.
    pub degree7_identities: bool,
    pub degree_at_least_7_vanish: bool,
    pub x5_nonzero: bool,
    pub x6_zero: bool,
    pub x7_zero: bool,
    pub commutative: bool,
    pub associative: bool,
    pub all_nilpotent: bool,
}

impl A18Report {
    pub fn all_ok(&self) -> bool {
        self.dimension == 18
            && self.basis_matches
            && self.degree7_identities
            && self.degree_at_least_7_vanish
            && self.x5_nonzero
            && self.x6_zero
            && self.x7_zero
            && self.commutative
            && self.associative
            && self.all_nilpotent
    }
}

/// Monomials of degree `1..=6`, the space in which the algebra lives once `𝔪⁷ ⊆ I`.
fn low_monomials() -> Vec<Mono> {
    (1..=6u32).flat_map(|d| (0..=d).rev().map(move |a| (a, d - a))).collect()
}

struct Quotient {
    monos: Vec<Mono>,
    index: BTreeMap<Mono, usize>,
    ideal: Vec<Vec<Q>>,
    solver: Matrix,
}

impl Quotient {
    fn vector(&self, p: &Poly) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.monos.len()];
        for (m, c) in &p.truncate(6).0 {
            if let Some(&i) = self.index.get(m) {
                v[i] += c;
            }
        }
        v
    }

    /// Coordinates in the chosen basis of the class of `p`.
    fn reduce(&self, p: &Poly) -> Vec<Q> {
        let x = self.solver.solve(&self.vector(p)).expect("basis and ideal span the truncated space");
        x[..A18_BASIS.len()].to_vec()
    }
}

fn quotient() -> Quotient {
    let monos = low_monomials();
    let index: BTreeMap<Mono, usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut q0 = Quotient { monos, index, ideal: Vec::new(), solver: Matrix::zeros(0, 0) };
    // Only multipliers of degree <= 1 survive truncation at degree 6.
    let multipliers = [Poly::mono(0, 0), Poly::mono(1, 0), Poly::mono(0, 1)];
    let mut ideal = Vec::new();
    for f in relations() {
        for m in &multipliers {
            ideal.push(q0.vector(&f.mul(m)));
        }
    }
    let cols: Vec<Vec<Q>> = A18_BASIS.iter().map(|&m| q0.vector(&Poly::mono(m.0, m.1))).chain(ideal.iter().cloned()).collect();
    q0.solver = Matrix::from_fn(q0.monos.len(), cols.len(), |r, c| cols[c][r].clone());
    q0.ideal = ideal;
    q0
}

pub fn build_a18() -> A18Report {
    let [f1, f2, f3] = relations();
    let x2 = Poly::mono(2, 0);
    let y2 = Poly::mono(0, 2);
    let xy = Poly::mono(1, 1);
    let xy2 = Poly::mono(1, 2);
    let x2y = Poly::mono(2, 1);
    let x7 = x2.mul(&f1).add(&xy.mul(&f3), -1).add(&xy2.mul(&f2), 1);
    let y7 = y2.mul(&f1).add(&xy.mul(&f2), -1).add(&x2y.mul(&f3), 1);
    let mixed_in_ideal = (1..7u32).all(|a| a >= 4 || 7 - a >= 4);
    let degree7_identities = x7 == Poly::mono(7, 0) && y7 == Poly::mono(0, 7);

    let quo = quotient();
    let mut ideal_span = SpanBasis::new(quo.monos.len());
    for v in &quo.ideal {
        ideal_span.insert(v);
    }
    let dimension = quo.monos.len() - ideal_span.rank();
    let mut full = ideal_span.clone();
    let basis_matches = A18_BASIS.iter().all(|&m| full.insert(&quo.vector(&Poly::mono(m.0, m.1)))) && full.rank() == quo.monos.len();

    let n = A18_BASIS.len();
    let mut t = StructureTensor::zero(n);
    for (i, a) in A18_BASIS.iter().enumerate() {
        for (j, b) in A18_BASIS.iter().enumerate() {
            let prod = Poly::mono(a.0 + b.0, a.1 + b.1);
            for (k, v) in quo.reduce(&prod).into_iter().enumerate() {
                t.set(i, j, k, v);
            }
        }
    }
    let names = A18_BASIS.iter().map(|&m| mono_name(m)).collect();
    let algebra = AlgebraSpec::new(names, t).expect("unique names");
    let is_zero = |p: &Poly| quo.reduce(p).iter().all(Zero::is_zero);
    let x5_nonzero = !is_zero(&Poly::mono(5, 0));
    let x6_zero = is_zero(&Poly::mono(6, 0));
    let x7_zero = degree7_identities;
    A18Report {
        dimension,
        basis_matches,
        degree7_identities,
        degree_at_least_7_vanish: degree7_identities && mixed_in_ideal,
        x5_nonzero,
        x6_zero,
        x7_zero,
        commutative: algebra.tensor.is_commutative(),
        associative: algebra.tensor.is_associative(),
        all_nilpotent: algebra.tensor.all_nilpotent(),
        algebra,
    }
}
