//! Dense and sparse exact linear algebra over `Q`.

use crate::rational::{one, q, zero, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| crate::rational::fmt_q(self.get(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, one());
        }
        m
    }

    /// Elementary matrix with a single one at `(r, c)`.
    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(r, c, one());
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_fn(rows.len(), cols, |r, c| q(rows[r][c]))
    }

    pub fn diag(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Q) {
        let e = &mut self.data[r * self.cols + c];
        *e += v;
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn is_strictly_upper(&self) -> bool {
        self.nonzeros().all(|(r, c, _)| r < c)
    }

    pub fn is_diagonal(&self) -> bool {
        self.nonzeros().all(|(r, c, _)| r == c)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows as u32).is_zero()
    }

    pub fn rank(&self) -> usize {
        rref(self.clone()).1.len()
    }

    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        nullspace_of(self)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, one());
        }
        let (red, pivots) = rref(aug);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Solves `self · x = b`; returns one solution if consistent.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, pivots) = rref(aug);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Flattens row-major into a vector.
    pub fn flatten(&self) -> Vec<Q> {
        self.data.clone()
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.add_at(r, c, &(a * b));
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

/// Reduced row echelon form and pivot columns.
pub fn rref(mut m: Matrix) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..m.cols {
                m.data.swap(p * m.cols + k, r * m.cols + k);
            }
        }
        let inv = m.get(r, c).recip();
        for k in c..m.cols {
            let v = m.get(r, k) * &inv;
            m.set(r, k, v);
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for k in c..m.cols {
                let sub = m.get(r, k) * &f;
                if !sub.is_zero() {
                    let v = m.get(i, k) - sub;
                    m.set(i, k, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

fn nullspace_of(m: &Matrix) -> Vec<Vec<Q>> {
    let (red, pivots) = rref(m.clone());
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero(); m.cols];
            v[f] = one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(r, f).clone();
            }
            v
        })
        .collect()
}

/// Incrementally maintained echelon basis of a subspace of `Q^n`.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    dim: usize,
    /// Reduced rows keyed by pivot column.
    rows: BTreeMap<usize, Vec<Q>>,
}

impl SpanBasis {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (&p, row) in &self.rows {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.insert(p, r);
        true
    }
}

/// A sparse homogeneous linear system, eliminated row by row.
#[derive(Clone, Debug)]
pub struct SparseSystem {
    vars: usize,
    pivots: BTreeMap<usize, BTreeMap<usize, Q>>,
}

impl SparseSystem {
    pub fn new(vars: usize) -> Self {
        Self { vars, pivots: BTreeMap::new() }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds the equation `Σ coeff·x_var = 0`.
    pub fn add_equation(&mut self, eq: impl IntoIterator<Item = (usize, Q)>) {
        let mut row: BTreeMap<usize, Q> = BTreeMap::new();
        for (v, c) in eq {
            assert!(v < self.vars);
            let e = row.entry(v).or_insert_with(zero);
            *e += c;
        }
        row.retain(|_, c| !c.is_zero());
        loop {
            let Some((&lead, _)) = row.iter().next() else { return };
            match self.pivots.get(&lead) {
                None => {
                    let inv = row[&lead].recip();
                    for c in row.values_mut() {
                        *c *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
                Some(prow) => {
                    let f = row[&lead].clone();
                    for (k, c) in prow {
                        let e = row.entry(*k).or_insert_with(zero);
                        *e -= &f * c;
                    }
                    row.retain(|_, c| !c.is_zero());
                }
            }
        }
    }

    /// Basis of the solution space.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut reduced: BTreeMap<usize, BTreeMap<usize, Q>> = BTreeMap::new();
        for (&p, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            let later: Vec<usize> = row.keys().copied().filter(|&k| k != p && reduced.contains_key(&k)).collect();
            for k in later {
                let f = row.remove(&k).unwrap();
                for (kk, c) in &reduced[&k] {
                    let e = row.entry(*kk).or_insert_with(zero);
                    *e -= &f * c;
                }
            }
            row.retain(|_, c| !c.is_zero());
            reduced.insert(p, row);
        }
        let free: Vec<usize> = (0..self.vars).filter(|v| !reduced.contains_key(v)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![zero(); self.vars];
                v[f] = Q::one();
                for (&p, row) in &reduced {
                    if let Some(c) = row.get(&f) {
                        v[p] = -c.clone();
                    }
                }
                v
            })
            .collect()
    }
}
