//! Finite root systems in the simple-root basis, weights in the Dynkin-label basis.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{q, Q};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// Default bound on the size of a generated Weyl orbit.
pub const ORBIT_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let c = family.letter();
        let bad = |reason| Err(Error::Inadmissible { family: c, rank, reason });
        match family {
            Family::A if rank < 1 => bad("A needs rank >= 1"),
            Family::B if rank < 2 => bad("B needs rank >= 2"),
            Family::C if rank < 2 => bad("C needs rank >= 2"),
            Family::D if rank < 3 => bad("D needs rank >= 3"),
            Family::E if !(6..=8).contains(&rank) => bad("E exists only in ranks 6, 7, 8"),
            Family::F if rank != 4 => bad("F exists only in rank 4"),
            Family::G if rank != 2 => bad("G exists only in rank 2"),
            _ => Ok(Self { family, rank }),
        }
    }

    pub fn from_letter(c: char, rank: usize) -> Result<Self> {
        let f = Family::from_letter(c).ok_or_else(|| Error::BadTypeName(c.to_string()))?;
        Self::new(f, rank)
    }

    /// D3 is accepted, but it is the same system as A3 with a different labeling.
    pub fn alias_warning(&self) -> Option<&'static str> {
        (self.family == Family::D && self.rank == 3).then_some("D3 is an alias of A3")
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Every admissible type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for r in 1..=max_rank {
                if let Ok(t) = LieType::new(f, r) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let c = chars.next().ok_or_else(|| Error::BadTypeName(s.to_string()))?;
        let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| Error::BadTypeName(s.to_string()))?;
        Self::from_letter(c, rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! int_vector {
    ($name:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                Self(vec![0; rank])
            }

            /// The `i`-th basis vector, 1-based.
            pub fn basis(rank: usize, i: usize) -> Self {
                let mut v = vec![0; rank];
                v[i - 1] = 1;
                Self(v)
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn scale(&self, k: i64) -> Self {
                Self(self.0.iter().map(|x| x * k).collect())
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, o: &$name) -> $name {
                $name(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, o: &$name) -> $name {
                $name(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                Self(v)
            }
        }
    };
}

int_vector!(WeightVector);
int_vector!(RootVector);

impl WeightVector {
    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// All labels one.
    pub fn rho(rank: usize) -> Self {
        Self(vec![1; rank])
    }
}

impl RootVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootStatus {
    Positive,
    Negative,
    NotARoot,
}

/// Output of [`RootDatum::to_dominant`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dominant {
    pub dominant: WeightVector,
    pub parity: i8,
    pub singular: bool,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    form: Vec<Vec<i64>>,
    positive_roots: Vec<RootVector>,
    highest_root: RootVector,
    root_index: HashMap<Vec<i64>, usize>,
    cartan_inv: Matrix,
}

/// Symmetrizer vector `d_i = (α_i, α_i) / 2` and Bourbaki edges (0-based).
fn diagram(t: LieType) -> (Vec<i64>, Vec<(usize, usize)>) {
    let l = t.rank;
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family {
        Family::A => (vec![1; l], chain(l)),
        Family::B => {
            let mut d = vec![2; l];
            d[l - 1] = 1;
            (d, chain(l))
        }
        Family::C => {
            let mut d = vec![1; l];
            d[l - 1] = 2;
            (d, chain(l))
        }
        Family::D => {
            let mut e = chain(l - 1);
            e.push((l - 3, l - 1));
            (vec![1; l], e)
        }
        Family::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..l - 1).map(|i| (i, i + 1)));
            (vec![1; l], e)
        }
        Family::F => (vec![2, 2, 1, 1], chain(4)),
        Family::G => (vec![1, 3], vec![(0, 1)]),
    }
}

impl RootDatum {
    pub fn build(t: LieType) -> Result<Self> {
        let t = LieType::new(t.family, t.rank)?;
        let l = t.rank;
        let (d, edges) = diagram(t);
        let mut form = vec![vec![0i64; l]; l];
        for i in 0..l {
            form[i][i] = 2 * d[i];
        }
        for &(i, j) in &edges {
            let v = -d[i].max(d[j]);
            form[i][j] = v;
            form[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| 2 * form[i][j] / form[i][i]).collect()).collect();
        let cartan_inv = Matrix::from_i64(&cartan).inverse().ok_or(Error::Singular)?;

        let positive_roots = saturate(&cartan);
        let root_index = positive_roots.iter().enumerate().map(|(k, r)| (r.0.clone(), k)).collect();
        let mut rd = Self {
            lie_type: t,
            cartan,
            symmetrizers: d,
            form,
            highest_root: RootVector::zero(l),
            positive_roots,
            root_index,
            cartan_inv,
        };
        let tops: Vec<&RootVector> = rd
            .positive_roots
            .iter()
            .filter(|b| (1..=l).all(|i| !rd.is_positive_root(&(*b + &RootVector::basis(l, i)))))
            .collect();
        if tops.len() != 1 {
            return Err(Error::Internal(format!("{t}: {} maximal roots", tops.len())));
        }
        rd.highest_root = tops[0].clone();
        Ok(rd)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// Pairwise simple-root inner products, `diag(d)·A`.
    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &RootVector {
        &self.highest_root
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn is_positive_root(&self, v: &RootVector) -> bool {
        self.root_index.contains_key(&v.0)
    }

    pub fn is_root(&self, v: &RootVector) -> RootStatus {
        if self.root_index.contains_key(&v.0) {
            RootStatus::Positive
        } else if self.root_index.contains_key(&(-v).0) {
            RootStatus::Negative
        } else {
            RootStatus::NotARoot
        }
    }

    /// Membership for a rational vector in the simple-root basis.
    pub fn is_root_rational(&self, v: &[Q]) -> RootStatus {
        match integral(v) {
            Some(iv) if iv.len() == self.rank() => self.is_root(&RootVector(iv)),
            _ => RootStatus::NotARoot,
        }
    }

    /// Dynkin labels of a root-lattice element: `A·coords`.
    pub fn root_to_weight(&self, r: &RootVector) -> WeightVector {
        WeightVector(self.cartan.iter().map(|row| row.iter().zip(&r.0).map(|(a, c)| a * c).sum()).collect())
    }

    /// Simple-root coordinates of a weight: `A⁻¹·labels`.
    pub fn weight_to_root_coords(&self, w: &WeightVector) -> Vec<Q> {
        let v: Vec<Q> = w.0.iter().map(|&x| q(x)).collect();
        self.cartan_inv.apply(&v)
    }

    /// The weight as a root-lattice vector, if it lies in the root lattice.
    pub fn weight_to_root(&self, w: &WeightVector) -> Option<RootVector> {
        integral(&self.weight_to_root_coords(w)).map(RootVector)
    }

    pub fn inverse_cartan(&self) -> &Matrix {
        &self.cartan_inv
    }

    /// `(β, γ)` for root-basis vectors.
    pub fn inner_roots(&self, a: &RootVector, b: &RootVector) -> i64 {
        let mut s = 0;
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                s += a.0[i] * self.form[i][j] * b.0[j];
            }
        }
        s
    }

    /// `(u, v)` for rational root-basis vectors.
    pub fn inner_root_coords(&self, a: &[Q], b: &[Q]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                if self.form[i][j] != 0 {
                    s += &a[i] * &b[j] * q(self.form[i][j]);
                }
            }
        }
        s
    }

    /// `(λ, µ)` for Dynkin-label vectors, using `(λ, α_i) = d_i λ_i`.
    pub fn inner_weights(&self, a: &WeightVector, b: &WeightVector) -> Q {
        let c = self.weight_to_root_coords(a);
        c.iter().zip(&self.symmetrizers).zip(&b.0).map(|((ci, &di), &bi)| ci * q(di * bi)).sum()
    }

    /// `(λ, β)` for a weight and a root-lattice vector; always an integer.
    pub fn pair_weight_root(&self, w: &WeightVector, r: &RootVector) -> i64 {
        (0..self.rank()).map(|j| r.0[j] * self.symmetrizers[j] * w.0[j]).sum()
    }

    /// Coefficients of `β^∨` in the simple coroots.
    pub fn coroot_coordinates(&self, beta: &RootVector) -> Result<Vec<i64>> {
        if self.is_root(beta) == RootStatus::NotARoot {
            return Err(Error::NotARoot(beta.0.clone()));
        }
        let bb = self.inner_roots(beta, beta);
        beta.0
            .iter()
            .zip(&self.symmetrizers)
            .map(|(&n, &d)| {
                let num = n * 2 * d;
                if num % bb != 0 {
                    Err(Error::Internal(format!("non-integral coroot coefficient for {:?}", beta.0)))
                } else {
                    Ok(num / bb)
                }
            })
            .collect()
    }

    /// Fundamental weight `ϖ_i`, 1-based.
    pub fn fundamental(&self, i: usize) -> WeightVector {
        WeightVector::basis(self.rank(), i)
    }

    pub fn rho(&self) -> WeightVector {
        WeightVector::rho(self.rank())
    }

    /// The highest root as a weight: highest weight of the adjoint module.
    pub fn adjoint_weight(&self) -> WeightVector {
        self.root_to_weight(&self.highest_root)
    }

    pub fn check_weight(&self, w: &WeightVector) -> Result<()> {
        if w.len() != self.rank() {
            return Err(Error::WrongLength { weight: w.0.clone(), got: w.len(), expected: self.rank() });
        }
        Ok(())
    }

    /// `s_i(w) = w − w_i·(column i of A)`, 1-based `i`.
    pub fn simple_reflection(&self, i: usize, w: &WeightVector) -> WeightVector {
        let k = i - 1;
        let wi = w.0[k];
        WeightVector((0..self.rank()).map(|r| w.0[r] - wi * self.cartan[r][k]).collect())
    }

    /// Weyl orbit, sorted, capped at [`ORBIT_CAP`].
    pub fn weyl_orbit(&self, w: &WeightVector) -> Result<Vec<WeightVector>> {
        self.weyl_orbit_capped(w, ORBIT_CAP)
    }

    pub fn weyl_orbit_capped(&self, w: &WeightVector, cap: usize) -> Result<Vec<WeightVector>> {
        let start = self.to_dominant(w).dominant;
        let mut seen: HashSet<WeightVector> = HashSet::new();
        seen.insert(start.clone());
        let mut frontier = vec![start];
        // Descending from the dominant point along positive labels reaches every orbit element.
        while let Some(v) = frontier.pop() {
            for i in 1..=self.rank() {
                if v.0[i - 1] > 0 {
                    let s = self.simple_reflection(i, &v);
                    if seen.insert(s.clone()) {
                        if seen.len() > cap {
                            return Err(Error::ResourceCap { what: "Weyl orbit size", cap: cap as u64 });
                        }
                        frontier.push(s);
                    }
                }
            }
        }
        let mut out: Vec<WeightVector> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Reflects into the dominant chamber; `singular` means the orbit meets a wall.
    pub fn to_dominant(&self, w: &WeightVector) -> Dominant {
        let mut v = w.clone();
        let mut parity = 1i8;
        while let Some(k) = v.0.iter().position(|&x| x < 0) {
            v = self.simple_reflection(k + 1, &v);
            parity = -parity;
        }
        let singular = v.0.contains(&0);
        Dominant { dominant: v, parity, singular }
    }

    /// Canonical JSON document; field order is fixed.
    pub fn to_json_value(&self) -> RootDatumDoc<'_> {
        RootDatumDoc {
            lie_type: self.lie_type,
            cartan: &self.cartan,
            symmetrizers: &self.symmetrizers,
            form: &self.form,
            positive_roots: &self.positive_roots,
            highest_root: &self.highest_root,
            alias_warning: self.lie_type.alias_warning(),
        }
    }
}

#[derive(Serialize)]
pub struct RootDatumDoc<'a> {
    pub lie_type: LieType,
    pub cartan: &'a [Vec<i64>],
    pub symmetrizers: &'a [i64],
    pub form: &'a [Vec<i64>],
    pub positive_roots: &'a [RootVector],
    pub highest_root: &'a RootVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alias_warning: Option<&'static str>,
}

fn integral(v: &[Q]) -> Option<Vec<i64>> {
    v.iter().map(crate::rational::to_i64).collect()
}

/// Positive roots by α-string saturation, level by level in height.
fn saturate(cartan: &[Vec<i64>]) -> Vec<RootVector> {
    let l = cartan.len();
    let labels = |r: &[i64], i: usize| -> i64 { (0..l).map(|j| cartan[i][j] * r[j]).sum() };
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    all.extend(level.iter().cloned());
    while !level.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &level {
            for i in 0..l {
                let mut down = beta.clone();
                let mut p = 0;
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let qv = p - labels(beta, i);
                if qv > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next.into_iter().collect();
    }
    all.into_iter().map(RootVector).collect()
}

impl RootVector {
    /// Any nonzero entry negative means not in the positive cone.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }
}
