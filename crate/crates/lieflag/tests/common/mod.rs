#![allow(dead_code)]

use lieflag::rational::{q, qf};
use lieflag::{Family, LieType, Q, RootDatum, WeightVector};
use num_traits::{ToPrimitive, Zero};

/// An ambient Euclidean model: Gram matrix plus simple roots in ambient coordinates.
pub struct Model {
    pub gram: Vec<Vec<Q>>,
    pub simple: Vec<Vec<Q>>,
}

impl Model {
    pub fn dot(&self, a: &[Q], b: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                s += x * y * &self.gram[i][j];
            }
        }
        s
    }

    /// `labels_i = 2(v, α_i)/(α_i, α_i)`.
    pub fn labels(&self, v: &[Q]) -> WeightVector {
        WeightVector(
            self.simple
                .iter()
                .map(|a| {
                    let x = q(2) * self.dot(v, a) / self.dot(a, a);
                    assert!(x.is_integer(), "non-integral label");
                    x.to_integer().to_i64().unwrap()
                })
                .collect(),
        )
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        self.simple.iter().map(|ai| self.labels(ai).0).collect::<Vec<_>>().into_iter().enumerate().fold(
            vec![vec![0; self.simple.len()]; self.simple.len()],
            |mut acc, (j, col)| {
                for (i, x) in col.into_iter().enumerate() {
                    acc[i][j] = x;
                }
                acc
            },
        )
    }
}

fn orthonormal(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()).collect()
}

/// Builds an ambient vector from `(index, numerator, denominator)` terms.
pub fn vec_of(n: usize, terms: &[(usize, i64, i64)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    for &(i, a, b) in terms {
        v[i] += qf(a, b);
    }
    v
}

pub struct ReferenceWitness {
    pub name: &'static str,
    pub lie_type: LieType,
    pub node: usize,
    pub model: Model,
    pub lambda_star: Vec<Q>,
    /// `(γ, ν)` pairs in ambient coordinates.
    pub pairs: Vec<(Vec<Q>, Vec<Q>)>,
}

fn t(f: Family, r: usize) -> LieType {
    LieType::new(f, r).unwrap()
}

/// Explicit published witnesses, in their Euclidean coordinates.
pub fn reference_witnesses() -> Vec<ReferenceWitness> {
    let mut out = Vec::new();
    let e = |n: usize, terms: &[(usize, i64, i64)]| vec_of(n, terms);

    // B3: ε-orthonormal, α3 = ε3.
    let n = 3;
    out.push(ReferenceWitness {
        name: "B3",
        lie_type: t(Family::B, 3),
        node: 3,
        model: Model { gram: orthonormal(n), simple: vec![e(n, &[(0, 1, 1), (1, -1, 1)]), e(n, &[(1, 1, 1), (2, -1, 1)]), e(n, &[(2, 1, 1)])] },
        lambda_star: e(n, &[(0, 1, 2), (1, 1, 2), (2, 1, 2)]),
        pairs: vec![
            (e(n, &[(0, 1, 1), (1, 1, 1)]), e(n, &[(0, -1, 2), (1, -1, 2), (2, 1, 2)])),
            (e(n, &[(0, 1, 1)]), e(n, &[(0, -1, 2), (1, 1, 2), (2, 1, 2)])),
        ],
    });

    // D5: α4 = ε4 − ε5, α5 = ε4 + ε5.
    let n = 5;
    let mut simple: Vec<Vec<Q>> = (0..4).map(|i| e(n, &[(i, 1, 1), (i + 1, -1, 1)])).collect();
    simple.push(e(n, &[(3, 1, 1), (4, 1, 1)]));
    out.push(ReferenceWitness {
        name: "D5",
        lie_type: t(Family::D, 5),
        node: 5,
        model: Model { gram: orthonormal(n), simple },
        lambda_star: e(n, &[(0, 1, 2), (1, 1, 2), (2, 1, 2), (3, 1, 2), (4, -1, 2)]),
        pairs: vec![
            (e(n, &[(0, 1, 1), (1, 1, 1)]), e(n, &[(0, -1, 2), (1, -1, 2), (2, 1, 2), (3, 1, 2), (4, 1, 2)])),
            (e(n, &[(0, 1, 1), (4, 1, 1)]), e(n, &[(0, -1, 2), (1, 1, 2), (2, 1, 2), (3, 1, 2), (4, -1, 2)])),
        ],
    });

    // C3: α3 = 2ε3.
    let n = 3;
    let c3 = || Model { gram: orthonormal(3), simple: vec![e(3, &[(0, 1, 1), (1, -1, 1)]), e(3, &[(1, 1, 1), (2, -1, 1)]), e(3, &[(2, 2, 1)])] };
    out.push(ReferenceWitness {
        name: "C3 p=2",
        lie_type: t(Family::C, 3),
        node: 2,
        model: c3(),
        lambda_star: e(n, &[(0, 1, 1), (1, 1, 1)]),
        pairs: vec![
            (e(n, &[(0, 2, 1)]), e(n, &[(0, -1, 1), (1, 1, 1)])),
            (e(n, &[(0, 1, 1), (1, -1, 1)]), e(n, &[(1, 1, 1), (2, 1, 1)])),
            (e(n, &[(0, 1, 1), (2, 1, 1)]), e(n, &[(0, -1, 1), (1, 1, 1)])),
        ],
    });
    out.push(ReferenceWitness {
        name: "C3 p=3",
        lie_type: t(Family::C, 3),
        node: 3,
        model: c3(),
        lambda_star: e(n, &[(0, 1, 1), (1, 1, 1), (2, 1, 1)]),
        pairs: vec![
            (e(n, &[(0, 2, 1)]), e(n, &[(0, -1, 1), (1, 1, 1), (2, 1, 1)])),
            (e(n, &[(0, 1, 1), (2, -1, 1)]), e(n, &[(0, -1, 1), (1, 1, 1), (2, 1, 1)])),
        ],
    });

    // E6: ε1..ε6 with (ε_i, ε_j) = δ_ij/2 − 1/12, plus ζ orthonormal to them (index 6).
    let n = 7;
    let mut gram = vec![vec![Q::zero(); n]; n];
    for (i, row) in gram.iter_mut().enumerate().take(6) {
        for (j, x) in row.iter_mut().enumerate().take(6) {
            *x = if i == j { qf(5, 12) } else { qf(-1, 12) };
        }
    }
    gram[6][6] = q(1);
    let d = |i: usize| e(n, &[(i, 1, 1), (i + 1, -1, 1)]);
    out.push(ReferenceWitness {
        name: "E6",
        lie_type: t(Family::E, 6),
        node: 1,
        model: Model { gram, simple: vec![d(0), e(n, &[(3, 1, 1), (4, 1, 1), (5, 1, 1), (6, -1, 2)]), d(1), d(2), d(3), d(4)] },
        lambda_star: e(n, &[(5, -1, 1), (6, -1, 2)]),
        pairs: vec![
            (e(n, &[(6, -1, 1)]), e(n, &[(0, 1, 1), (6, 1, 2)])),
            (e(n, &[(0, 1, 1), (1, 1, 1), (5, 1, 1), (6, -1, 2)]), e(n, &[(1, -1, 1), (5, -1, 1)])),
        ],
    });

    // E7: ε1..ε8 with (ε_i, ε_j) = δ_ij/2 − 1/16.
    let n = 8;
    let gram: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { qf(7, 16) } else { qf(-1, 16) }).collect()).collect();
    let d = |i: usize| e(n, &[(i, 1, 1), (i + 1, -1, 1)]);
    out.push(ReferenceWitness {
        name: "E7",
        lie_type: t(Family::E, 7),
        node: 7,
        model: Model { gram, simple: vec![d(1), e(n, &[(4, 1, 1), (5, 1, 1), (6, 1, 1), (7, 1, 1)]), d(2), d(3), d(4), d(5), d(6)] },
        // The printed ϖ7 = ε1+ε8 and ϖ2 = 2ε1 are −ϖ7 and −ϖ2 in this model; signs corrected here.
        lambda_star: e(n, &[(0, -1, 1), (7, -1, 1)]),
        pairs: vec![
            (e(n, &[(1, 1, 1), (0, -1, 1)]), e(n, &[(0, 1, 1), (2, 1, 1)])),
            (e(n, &[(7, 1, 1), (0, -1, 1)]), e(n, &[(6, -1, 1), (7, -1, 1)])),
        ],
    });

    // F4: orthonormal ε1..ε4.
    let n = 4;
    out.push(ReferenceWitness {
        name: "F4",
        lie_type: t(Family::F, 4),
        node: 4,
        model: Model {
            gram: orthonormal(n),
            simple: vec![
                e(n, &[(1, 1, 1), (2, -1, 1)]),
                e(n, &[(2, 1, 1), (3, -1, 1)]),
                e(n, &[(3, 1, 1)]),
                e(n, &[(0, 1, 2), (1, -1, 2), (2, -1, 2), (3, -1, 2)]),
            ],
        },
        lambda_star: e(n, &[(0, 1, 1)]),
        pairs: vec![
            (e(n, &[(0, 1, 1), (1, 1, 1)]), e(n, &[(1, -1, 1)])),
            (e(n, &[(0, 1, 2), (1, 1, 2), (2, 1, 2), (3, 1, 2)]), vec![Q::zero(); n]),
        ],
    });

    // G2: ε1 + ε2 + ε3 = 0 realized by the Gram matrix δ_ij − 1/3.
    let n = 3;
    let gram: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { qf(2, 3) } else { qf(-1, 3) }).collect()).collect();
    out.push(ReferenceWitness {
        name: "G2",
        lie_type: t(Family::G, 2),
        node: 1,
        model: Model { gram, simple: vec![e(n, &[(0, 1, 1), (1, -1, 1)]), e(n, &[(1, 3, 1)])] },
        lambda_star: e(n, &[(0, 1, 1), (2, -1, 1)]),
        pairs: vec![
            (e(n, &[(2, -3, 1)]), e(n, &[(2, 1, 1), (1, -1, 1)])),
            (e(n, &[(0, 1, 1), (2, -1, 1)]), vec![Q::zero(); n]),
        ],
    });
    out
}

pub fn datum(f: Family, r: usize) -> RootDatum {
    RootDatum::build(LieType::new(f, r).unwrap()).unwrap()
}

/// Bourbaki Cartan matrices written out by hand, `A_ij = ⟨α_j, α_i^∨⟩`.
pub fn hand_cartan(f: Family, r: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match f {
        Family::A => (1..r).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (1..r - 1).for_each(|i| link(i, i + 1, -1, -1));
            // α_{r-1} long, α_r short.
            link(r - 1, r, -1, -2);
        }
        Family::C => {
            (1..r - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(r - 1, r, -2, -1);
        }
        Family::D => {
            (1..r - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(r - 2, r, -1, -1);
        }
        Family::E => {
            link(1, 3, -1, -1);
            link(2, 4, -1, -1);
            (3..r).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(1, 2, -1, -1);
            link(2, 3, -1, -2);
            link(3, 4, -1, -1);
        }
        Family::G => link(1, 2, -3, -1),
    }
    a
}

/// Weight from `(index, coefficient)` terms, 1-based.
pub fn w(rank: usize, terms: &[(usize, i64)]) -> WeightVector {
    let mut v = vec![0; rank];
    for &(i, c) in terms {
        v[i - 1] += c;
    }
    WeightVector(v)
}

pub struct Decomposition {
    pub name: String,
    pub lie_type: LieType,
    pub lambda: WeightVector,
    pub expected: Vec<WeightVector>,
}

/// Published decompositions of `V* ⊗ R(𝔩)`, over the tested ranks.
pub fn cited_decompositions() -> Vec<Decomposition> {
    let mut out = Vec::new();
    let mut push = |name: String, f: Family, r: usize, lambda: WeightVector, expected: Vec<WeightVector>| {
        out.push(Decomposition { name, lie_type: t(f, r), lambda, expected });
    };
    // A_l with V* = Λ²W.
    for l in 3..=8 {
        let x = |terms: &[(usize, i64)]| w(l, terms);
        push(
            format!("A{l} Λ²"),
            Family::A,
            l,
            x(&[(l - 1, 1)]),
            vec![x(&[(1, 1), (2, 1), (l, 1)]), x(&[(1, 2)]), x(&[(3, 1), (l, 1)]), x(&[(2, 1)])],
        );
    }
    // A_l, λ = ϖ_p, 2 < p ≤ ⌈l/2⌉, λ* = ϖ_{l+1−p}.
    for l in 5..=8usize {
        for p in 3..=l.div_ceil(2) {
            let x = |terms: &[(usize, i64)]| w(l, terms);
            let s = l + 1 - p;
            push(
                format!("A{l} ϖ{p}"),
                Family::A,
                l,
                x(&[(p, 1)]),
                vec![x(&[(1, 1), (s, 1), (l, 1)]), x(&[(1, 1), (l - p, 1)]), x(&[(s + 1, 1), (l, 1)]), x(&[(s, 1)])],
            );
        }
    }
    for l in 3..=8 {
        let x = |terms: &[(usize, i64)]| w(l, terms);
        push(format!("B{l} ϖ{l}"), Family::B, l, x(&[(l, 1)]), vec![x(&[(2, 1), (l, 1)]), x(&[(1, 1), (l, 1)]), x(&[(l, 1)])]);
    }
    for l in 5..=8usize {
        let x = |terms: &[(usize, i64)]| w(l, terms);
        let (star, zeta) = if l % 2 == 0 { (l, l - 1) } else { (l - 1, l) };
        push(
            format!("D{l} ϖ{l}"),
            Family::D,
            l,
            x(&[(l, 1)]),
            vec![x(&[(2, 1), (star, 1)]), x(&[(1, 1), (zeta, 1)]), x(&[(star, 1)])],
        );
    }
    for l in 2..=6 {
        for p in 2..=l {
            let x = |terms: &[(usize, i64)]| w(l, terms);
            let mut e = vec![x(&[(1, 2), (p, 1)]), x(&[(1, 1), (p - 1, 1)]), x(&[(p, 1)])];
            if p < l {
                e.push(x(&[(1, 1), (p + 1, 1)]));
            }
            push(format!("C{l} ϖ{p}"), Family::C, l, x(&[(p, 1)]), e);
        }
    }
    push("E6 ϖ1".into(), Family::E, 6, w(6, &[(1, 1)]), vec![w(6, &[(2, 1), (6, 1)]), w(6, &[(3, 1)]), w(6, &[(6, 1)])]);
    push("E7 ϖ7".into(), Family::E, 7, w(7, &[(7, 1)]), vec![w(7, &[(1, 1), (7, 1)]), w(7, &[(2, 1)]), w(7, &[(7, 1)])]);
    push("F4 ϖ4".into(), Family::F, 4, w(4, &[(4, 1)]), vec![w(4, &[(1, 1), (4, 1)]), w(4, &[(3, 1)]), w(4, &[(4, 1)])]);
    push("G2 ϖ1".into(), Family::G, 2, w(2, &[(1, 1)]), vec![w(2, &[(1, 1), (2, 1)]), w(2, &[(1, 2)]), w(2, &[(1, 1)])]);
    out
}
