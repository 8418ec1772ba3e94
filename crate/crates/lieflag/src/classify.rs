//! Parabolic pairs: Levi data, verdicts and the two summary tables.

use crate::error::{Error, Result};
use crate::matrix_reps::{
    exterior_square_hw_candidates, gl_tensor_annihilated, gl_tensor_to_operators, in_symmetric_component, sl_tautological,
    so_vector,
};
use crate::mult_lab::{from_trilinear, linear_compat_space, truncated_power_algebra, verify_compatible, TrilinearForm};
use crate::obstruction::{obstruction_report, shortroot_candidates, Verdict};
use crate::rational::Q;
use crate::roots::{Family, LieType, RootDatum, RootVector, WeightVector};
use crate::tensor::dual_tensor_adjoint;
use num_traits::One;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairDescriptor {
    pub lie_type: LieType,
    pub node: usize,
}

impl PairDescriptor {
    pub fn new(lie_type: LieType, node: usize) -> Result<Self> {
        if node == 0 || node > lie_type.rank {
            return Err(Error::BadNode { node, rank: lie_type.rank });
        }
        Ok(Self { lie_type, node })
    }
}

impl std::fmt::Display for PairDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, P_{})", self.lie_type, self.node)
    }
}

/// Positive roots whose `α_node` coefficient is positive.
pub fn radical_roots(rd: &RootDatum, node: usize) -> Vec<RootVector> {
    rd.positive_roots().iter().filter(|r| r.0[node - 1] > 0).cloned().collect()
}

pub fn radical_commutative(p: PairDescriptor) -> Result<bool> {
    let rd = RootDatum::build(p.lie_type)?;
    Ok(radical_commutative_in(&rd, p.node))
}

fn radical_commutative_in(rd: &RootDatum, node: usize) -> bool {
    let u = radical_roots(rd, node);
    u.iter().enumerate().all(|(k, a)| u[k..].iter().all(|b| !rd.is_positive_root(&(a + b))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviComponent {
    pub lie_type: LieType,
    /// Original node indices in the component's own Bourbaki order.
    pub nodes: Vec<usize>,
    pub highest_weight: WeightVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeviReport {
    pub pair: PairDescriptor,
    pub semisimple_components: Vec<LeviComponent>,
    pub u_minus_irreducible: bool,
    pub radical_commutative: bool,
    pub u_dim: usize,
}

/// Identifies a connected subdiagram and orders its nodes in Bourbaki order (1-based labels).
fn identify_component(rd: &RootDatum, nodes: &[usize]) -> Result<(LieType, Vec<usize>)> {
    let a = rd.cartan();
    let d = rd.symmetrizers();
    let adj = |x: usize, y: usize| x != y && a[x - 1][y - 1] != 0;
    let nbrs = |x: usize| nodes.iter().copied().filter(|&y| adj(x, y)).collect::<Vec<_>>();
    let r = nodes.len();
    let walk = |start: usize, avoid: Option<usize>| {
        let mut path = vec![start];
        let mut prev = avoid;
        let mut cur = start;
        loop {
            let next: Vec<usize> = nbrs(cur).into_iter().filter(|&y| Some(y) != prev && !path.contains(&y)).collect();
            match next.as_slice() {
                [n] => {
                    prev = Some(cur);
                    cur = *n;
                    path.push(cur);
                }
                _ => return path,
            }
        }
    };
    if let Some(&branch) = nodes.iter().find(|&&x| nbrs(x).len() == 3) {
        let mut arms: Vec<Vec<usize>> = nbrs(branch).into_iter().map(|s| walk(s, Some(branch))).collect();
        arms.sort_by_key(|arm| (arm.len(), std::cmp::Reverse(arm[0])));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        let t = match lens.as_slice() {
            [1, 1, _] => Family::D,
            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Family::E,
            _ => return Err(Error::Internal(format!("unrecognized branched diagram {lens:?}"))),
        };
        let mut order = Vec::new();
        if t == Family::D {
            let long: Vec<usize> = arms[2].iter().rev().copied().collect();
            order.extend(long);
            order.push(branch);
            let (x, y) = (arms[0][0], arms[1][0]);
            order.push(x.min(y));
            order.push(x.max(y));
        } else {
            // E: α1, α2, α3, α4, α5, ... with α2 the short arm and α1-α3 the length-2 arm.
            let short = arms[0][0];
            let (two, long) = if arms[1].len() == arms[2].len() && arms[2][0] < arms[1][0] {
                (&arms[2], &arms[1])
            } else {
                (&arms[1], &arms[2])
            };
            order.push(two[1]);
            order.push(short);
            order.push(two[0]);
            order.push(branch);
            order.extend(long.iter().copied());
        }
        return Ok((LieType::new(t, r)?, order));
    }
    let ends: Vec<usize> = nodes.iter().copied().filter(|&x| nbrs(x).len() <= 1).collect();
    let start = *ends.iter().min().expect("chain has an end");
    let mut order = walk(start, None);
    let multi = |x: usize, y: usize| a[x - 1][y - 1] * a[y - 1][x - 1];
    let bond_pos = order.windows(2).position(|w| multi(w[0], w[1]) > 1);
    let Some(pos) = bond_pos else {
        return Ok((LieType::new(Family::A, r)?, order));
    };
    if multi(order[pos], order[pos + 1]) == 3 {
        if order.len() != 2 {
            return Err(Error::Internal("triple bond in a longer chain".into()));
        }
        if d[order[0] - 1] > d[order[1] - 1] {
            order.reverse();
        }
        return Ok((LieType::new(Family::G, 2)?, order));
    }
    if pos != order.len() - 2 && pos != 0 {
        if r == 4 {
            // F4: long nodes first.
            if d[order[0] - 1] < d[order[3] - 1] {
                order.reverse();
            }
            return Ok((LieType::new(Family::F, 4)?, order));
        }
        return Err(Error::Internal("double bond inside a chain".into()));
    }
    if pos == 0 && order.len() > 2 {
        order.reverse();
    }
    let last = order[order.len() - 1];
    let prev = order[order.len() - 2];
    let fam = if d[last - 1] < d[prev - 1] { Family::B } else { Family::C };
    Ok((LieType::new(fam, r)?, order))
}

pub fn levi_summary(p: PairDescriptor) -> Result<LeviReport> {
    let rd = RootDatum::build(p.lie_type)?;
    levi_summary_in(&rd, p)
}

fn levi_summary_in(rd: &RootDatum, p: PairDescriptor) -> Result<LeviReport> {
    let i = p.node;
    let a = rd.cartan();
    let rest: Vec<usize> = (1..=rd.rank()).filter(|&j| j != i).collect();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut components = Vec::new();
    for &s in &rest {
        if seen.contains(&s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s);
        let mut k = 0;
        while k < comp.len() {
            let x = comp[k];
            for &y in &rest {
                if !seen.contains(&y) && a[x - 1][y - 1] != 0 {
                    seen.insert(y);
                    comp.push(y);
                }
            }
            k += 1;
        }
        comp.sort();
        let (t, order) = identify_component(rd, &comp)?;
        let highest_weight = WeightVector(order.iter().map(|&j| -a[j - 1][i - 1]).collect());
        components.push(LeviComponent { lie_type: t, nodes: order, highest_weight });
    }
    let u = radical_roots(rd, i);
    let tops = u
        .iter()
        .filter(|g| rest.iter().all(|&j| !rd.is_positive_root(&(*g + &RootVector::basis(rd.rank(), j)))))
        .count();
    Ok(LeviReport {
        pair: p,
        semisimple_components: components,
        u_minus_irreducible: tops == 1,
        radical_commutative: radical_commutative_in(rd, i),
        u_dim: u.len(),
    })
}

/// The three families of pairs whose automorphism group is larger than `G`.
pub fn aut_exceptional(p: PairDescriptor) -> Option<PairDescriptor> {
    let t = p.lie_type;
    let make = |f: Family, r: usize, n: usize| PairDescriptor::new(LieType::new(f, r).ok()?, n).ok();
    match (t.family, p.node) {
        (Family::C, 1) => make(Family::A, 2 * t.rank - 1, 1),
        (Family::G, 1) => make(Family::B, 3, 1),
        (Family::B, n) if n == t.rank => make(Family::D, t.rank + 1, t.rank + 1),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ClassificationVerdict {
    /// Actions correspond to `m`-dimensional commutative associative algebras with nilpotent multiplication.
    Family { m: usize },
    UniqueAction,
    NoAction,
    NotAutMaximal { replacement: PairDescriptor },
}

pub fn classify_pair(p: PairDescriptor) -> Result<ClassificationVerdict> {
    let rd = RootDatum::build(p.lie_type)?;
    Ok(classify_in(&rd, p))
}

fn classify_in(rd: &RootDatum, p: PairDescriptor) -> ClassificationVerdict {
    if let Some(replacement) = aut_exceptional(p) {
        return ClassificationVerdict::NotAutMaximal { replacement };
    }
    if p.lie_type.family == Family::A && (p.node == 1 || p.node == p.lie_type.rank) {
        return ClassificationVerdict::Family { m: radical_roots(rd, p.node).len() };
    }
    if radical_commutative_in(rd, p.node) {
        ClassificationVerdict::UniqueAction
    } else {
        ClassificationVerdict::NoAction
    }
}

/// Why the Levi module does or does not carry nontrivial compatible multiplications.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "snake_case")]
pub enum Evidence {
    /// `[L, L]` is trivial.
    EmptyLevi,
    /// Several simple factors act on a tensor product.
    TensorProduct,
    /// Not fundamental, or fundamental with coroot coefficient above one.
    NotCandidate,
    /// Every positive-root summand has a weight witness.
    WitnessExcluded,
    /// No highest-weight vector of `V* ⊗ R(𝔩)` lies in `S²(V*) ⊗ V`.
    NoSymmetricHighestWeight,
    /// The space of linear solutions of the commutativity constraint is zero.
    CompatSpaceZero,
    /// An explicit nonzero compatible multiplication was verified.
    Exists(String),
    /// None of the engine's tests decided the case.
    Undecided,
}

impl Evidence {
    pub fn nontrivial(&self) -> bool {
        matches!(self, Evidence::Exists(_))
    }

    pub fn trivial(&self) -> bool {
        matches!(
            self,
            Evidence::TensorProduct
                | Evidence::NotCandidate
                | Evidence::WitnessExcluded
                | Evidence::NoSymmetricHighestWeight
                | Evidence::CompatSpaceZero
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    pub pair: PairDescriptor,
    pub verdict: ClassificationVerdict,
    pub levi: LeviReport,
    pub evidence: Option<Evidence>,
    pub cross_check_ok: bool,
}

/// Caches per-module evidence across pairs.
#[derive(Default)]
pub struct Classifier {
    data: HashMap<LieType, RootDatum>,
    evidence: HashMap<(LieType, WeightVector), Evidence>,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    fn datum(&mut self, t: LieType) -> Result<&RootDatum> {
        if !self.data.contains_key(&t) {
            self.data.insert(t, RootDatum::build(t)?);
        }
        Ok(&self.data[&t])
    }

    /// Evidence for `V(λ)` of the simple algebra `t`.
    pub fn module_evidence(&mut self, t: LieType, lambda: &WeightVector) -> Result<Evidence> {
        let key = (t, lambda.clone());
        if let Some(e) = self.evidence.get(&key) {
            return Ok(e.clone());
        }
        let e = self.compute_evidence(t, lambda)?;
        self.evidence.insert(key, e.clone());
        Ok(e)
    }

    fn compute_evidence(&mut self, t: LieType, lambda: &WeightVector) -> Result<Evidence> {
        let rd = self.datum(t)?.clone();
        let ones: Vec<usize> = lambda.0.iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, _)| k + 1).collect();
        if ones.len() != 1 || lambda.0[ones[0] - 1] != 1 {
            return Ok(Evidence::NotCandidate);
        }
        let i = ones[0];
        if !shortroot_candidates(&rd).candidate_indices.contains(&i) {
            return Ok(Evidence::NotCandidate);
        }
        let r = t.rank;
        match t.family {
            Family::A if i == 1 || i == r => {
                let n = r + 1;
                let base = sl_tautological(n)?;
                let module = if i == 1 { base } else { base.dual() };
                let alg = truncated_power_algebra(n);
                if verify_compatible(&module, &alg.tensor)?.compatible() {
                    return Ok(Evidence::Exists(format!("truncated power algebra of dimension {n}")));
                }
                Ok(Evidence::Undecided)
            }
            Family::A if r == 3 && i == 2 => {
                // sl4 on Λ²k⁴ is so6 on its vector module.
                if linear_compat_space(&so_vector(6)?)?.dim() == 0 {
                    Ok(Evidence::CompatSpaceZero)
                } else {
                    Ok(Evidence::Undecided)
                }
            }
            Family::A if r >= 4 && (i == 2 || i == r - 1) => {
                let dec = dual_tensor_adjoint(&rd, &rd.fundamental(2))?;
                if !dec.is_multiplicity_free() || dec.summands.len() != 4 {
                    return Ok(Evidence::Undecided);
                }
                let base = sl_tautological(r + 1)?;
                let module = base.exterior_square();
                for item in exterior_square_hw_candidates(r) {
                    if !gl_tensor_annihilated(&base, &module, &item)? {
                        return Ok(Evidence::Undecided);
                    }
                    if in_symmetric_component(module.module_dim, &gl_tensor_to_operators(&module, &item))? {
                        return Ok(Evidence::Undecided);
                    }
                }
                Ok(Evidence::NoSymmetricHighestWeight)
            }
            Family::B | Family::D if i == 1 => {
                let n = if t.family == Family::B { 2 * r + 1 } else { 2 * r };
                if linear_compat_space(&so_vector(n)?)?.dim() == 0 {
                    Ok(Evidence::CompatSpaceZero)
                } else {
                    Ok(Evidence::Undecided)
                }
            }
            Family::C if i == 1 => {
                let mut c = TrilinearForm::zero(r);
                c.set_sym(0, 0, 0, Q::one());
                let tensor = from_trilinear(r, &c)?;
                if verify_compatible(&crate::matrix_reps::sp_tautological(r)?, &tensor)?.compatible() {
                    Ok(Evidence::Exists("trilinear form on V/Z".into()))
                } else {
                    Ok(Evidence::Undecided)
                }
            }
            _ => match obstruction_report(&rd, lambda)?.verdict {
                Verdict::Excluded => Ok(Evidence::WitnessExcluded),
                Verdict::Inconclusive => Ok(Evidence::Undecided),
            },
        }
    }

    pub fn classify(&mut self, p: PairDescriptor) -> Result<PairClassification> {
        let rd = self.datum(p.lie_type)?.clone();
        let verdict = classify_in(&rd, p);
        let levi = levi_summary_in(&rd, p)?;
        let evidence = if !levi.u_minus_irreducible || matches!(verdict, ClassificationVerdict::NotAutMaximal { .. }) {
            None
        } else {
            Some(match levi.semisimple_components.as_slice() {
                [] => Evidence::EmptyLevi,
                [c] => self.module_evidence(c.lie_type, &c.highest_weight)?,
                _ => Evidence::TensorProduct,
            })
        };
        let cross_check_ok = match (&verdict, &evidence) {
            (ClassificationVerdict::Family { .. }, Some(e)) => e.nontrivial() || *e == Evidence::EmptyLevi,
            (ClassificationVerdict::UniqueAction, Some(e)) => e.trivial(),
            (ClassificationVerdict::UniqueAction, None) => false,
            (ClassificationVerdict::Family { .. }, None) => false,
            _ => true,
        };
        Ok(PairClassification { pair: p, verdict, levi, evidence, cross_check_ok })
    }
}

/// All pairs of types of rank at most `max_rank`, D3 excluded.
pub fn all_pairs(max_rank: usize) -> Vec<PairDescriptor> {
    LieType::all_up_to(max_rank)
        .into_iter()
        .filter(|t| t.alias_warning().is_none())
        .flat_map(|t| (1..=t.rank).map(move |n| PairDescriptor { lie_type: t, node: n }))
        .collect()
}

fn has_action(rd: &RootDatum, p: PairDescriptor) -> bool {
    matches!(classify_in(rd, p), ClassificationVerdict::Family { .. } | ClassificationVerdict::UniqueAction)
}

/// Candidate spellings of an integer relative to the rank.
fn spellings(v: usize, rank: usize, symbolic: bool) -> Vec<String> {
    let mut out = vec![v.to_string()];
    if symbolic {
        for k in 0..=2usize {
            if v + k == rank {
                out.push(if k == 0 { "l".into() } else { format!("l-{k}") });
            }
        }
    }
    out
}

fn sub(s: &str) -> String {
    if s.chars().count() == 1 {
        format!("_{s}")
    } else {
        format!("_{{{s}}}")
    }
}

/// Picks a spelling shared by all ranks: the numeral if constant, else the first common symbol.
fn common_spelling(values: &[(usize, usize)], symbolic: bool) -> Option<String> {
    let sets: Vec<Vec<String>> = values.iter().map(|&(v, r)| spellings(v, r, symbolic)).collect();
    let first = &sets[0];
    first.iter().find(|s| sets.iter().all(|set| set.contains(s))).cloned()
}

fn intro_label(t: Family, rank: usize) -> String {
    match t {
        Family::A => "PSL_{l+1}".into(),
        Family::B => "SO_{2l+1}".into(),
        Family::C => "PSp_{2l}".into(),
        Family::D => "PSO_{2l}".into(),
        f => format!("Group of type {}{}", f.letter(), sub(&rank.to_string())),
    }
}

fn table_ranks(f: Family, max_rank: usize) -> Vec<usize> {
    (1..=max_rank)
        .filter(|&r| LieType::new(f, r).is_ok())
        .filter(|&r| !(f == Family::D && r < 4))
        .collect()
}

/// `(family label, node cell)` rows of the admissibility table.
pub fn intro_table(max_rank: usize) -> Result<Vec<(String, String)>> {
    let mut rows = Vec::new();
    for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        let classical = matches!(f, Family::A | Family::B | Family::C | Family::D);
        let mut cells: Vec<(usize, String)> = Vec::new();
        for r in table_ranks(f, max_rank) {
            let rd = RootDatum::build(LieType::new(f, r)?)?;
            let nodes: Vec<usize> =
                (1..=r).filter(|&n| has_action(&rd, PairDescriptor { lie_type: rd.lie_type(), node: n })).collect();
            if nodes.is_empty() {
                continue;
            }
            let cell = if classical && nodes.len() == r {
                "P_i (1 <= i <= l)".to_string()
            } else {
                let names: Vec<String> = nodes
                    .iter()
                    .map(|&n| {
                        let opts = spellings(n, r, classical);
                        if n == 1 {
                            "1".to_string()
                        } else {
                            opts.iter().find(|s| s.starts_with('l')).cloned().unwrap_or_else(|| n.to_string())
                        }
                    })
                    .collect();
                if names.len() == 1 {
                    format!("P{}", sub(&names[0]))
                } else {
                    format!("P_i (i = {})", names.join(", "))
                }
            };
            cells.push((r, cell));
        }
        let mut groups: Vec<(usize, String)> = Vec::new();
        for (r, cell) in cells {
            match groups.last() {
                Some((_, c)) if *c == cell && classical => {}
                _ => groups.push((r, cell)),
            }
        }
        for (r, cell) in groups {
            rows.push((intro_label(f, r), cell));
        }
    }
    Ok(rows)
}

pub fn render_intro_table(rows: &[(String, String)]) -> String {
    let mut s = String::from("G | P\n");
    for (g, p) in rows {
        let _ = writeln!(s, "{g} | {p}");
    }
    s
}

#[derive(Clone, Debug)]
struct LeviRowAtRank {
    ambient: Family,
    rank: usize,
    nodes: Vec<usize>,
    levi: LieType,
    weight: WeightVector,
}

impl LeviRowAtRank {
    fn shape(&self) -> (usize, Family, Vec<i64>) {
        let coeffs = self.weight.0.iter().copied().filter(|&x| x != 0).collect();
        (self.nodes.len(), self.levi.family, coeffs)
    }
}

/// Rows of the Levi table: type of G, P, type of [L,L], highest weight of 𝔲⁻.
pub fn levi_table(max_rank: usize) -> Result<Vec<[String; 4]>> {
    let mut out: Vec<(Family, usize, usize, [String; 4])> = Vec::new();
    for f in [Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        let classical = matches!(f, Family::B | Family::C | Family::D);
        let mut per_rank: Vec<LeviRowAtRank> = Vec::new();
        for r in table_ranks(f, max_rank) {
            if f == Family::B && r == 2 {
                continue;
            }
            let rd = RootDatum::build(LieType::new(f, r)?)?;
            let mut merged: BTreeMap<(LieType, WeightVector), Vec<usize>> = BTreeMap::new();
            for n in 1..=r {
                let p = PairDescriptor { lie_type: rd.lie_type(), node: n };
                if classify_in(&rd, p) != ClassificationVerdict::UniqueAction {
                    continue;
                }
                let levi = levi_summary_in(&rd, p)?;
                let [c] = levi.semisimple_components.as_slice() else {
                    return Err(Error::Internal(format!("{p}: Levi factor is not simple")));
                };
                merged.entry((c.lie_type, c.highest_weight.clone())).or_default().push(n);
            }
            for ((levi, weight), mut nodes) in merged {
                if f == Family::D && r == 4 {
                    nodes.truncate(1);
                }
                per_rank.push(LeviRowAtRank { ambient: f, rank: r, nodes, levi, weight });
            }
        }
        let mut shapes: Vec<(usize, Family, Vec<i64>)> = Vec::new();
        for row in &per_rank {
            if !shapes.contains(&row.shape()) {
                shapes.push(row.shape());
            }
        }
        for shape in shapes {
            let rows: Vec<&LeviRowAtRank> = per_rank.iter().filter(|r| r.shape() == shape).collect();
            let mut start = 0;
            while start < rows.len() {
                let mut end = start + 1;
                while end < rows.len()
                    && rows[end].rank == rows[end - 1].rank + 1
                    && render_levi_group(&rows[start..=end], classical).is_some()
                {
                    end += 1;
                }
                let group = &rows[start..end];
                let cells = render_levi_group(group, classical && group.len() > 1)
                    .ok_or_else(|| Error::Internal("single-rank Levi row failed to render".into()))?;
                out.push((f, group[0].rank, group[0].nodes[0], cells));
                start = end;
            }
        }
    }
    out.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    Ok(out.into_iter().map(|(_, _, _, cells)| cells).collect())
}

fn render_levi_group(group: &[&LeviRowAtRank], symbolic: bool) -> Option<[String; 4]> {
    let first = group[0];
    let g_type = if group.len() > 1 {
        format!("{}_l (l >= {})", first.ambient.letter(), first.rank)
    } else {
        format!("{}{}", first.ambient.letter(), sub(&first.rank.to_string()))
    };
    let mut p_parts = Vec::new();
    for k in 0..first.nodes.len() {
        let vals: Vec<(usize, usize)> = group.iter().map(|r| (r.nodes[k], r.rank)).collect();
        p_parts.push(format!("P{}", sub(&common_spelling(&vals, symbolic)?)));
    }
    let ranks: Vec<(usize, usize)> = group.iter().map(|r| (r.levi.rank, r.rank)).collect();
    let levi = format!("{}{}", first.levi.family.letter(), sub(&common_spelling(&ranks, symbolic)?));
    let mut terms = Vec::new();
    for (k, &c) in first.weight.0.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let idx = |r: &LeviRowAtRank| r.weight.0.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, _)| j + 1).collect::<Vec<_>>();
        let pos = idx(first).iter().position(|&j| j == k + 1)?;
        let vals: Vec<(usize, usize)> = group.iter().map(|r| (idx(r)[pos], r.rank)).collect();
        let coef = if c == 1 { String::new() } else { c.to_string() };
        terms.push(format!("{coef}ϖ{}", sub(&common_spelling(&vals, symbolic)?)));
    }
    Some([g_type, p_parts.join(", "), levi, terms.join(" + ")])
}

pub fn render_levi_table(rows: &[[String; 4]]) -> String {
    let mut s = String::from("Type of G | P | Type of [L,L] | Highest [L,L]-weight of u^-\n");
    for r in rows {
        let _ = writeln!(s, "{} | {} | {} | {}", r[0], r[1], r[2], r[3]);
    }
    s
}

pub const INTRO_FIXTURE: &str = include_str!("../fixtures/intro_table.txt");
pub const LEVI_FIXTURE: &str = include_str!("../fixtures/levi_table.txt");

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub text: String,
    pub matches_fixture: bool,
    /// `(line, expected, got)` for each differing line.
    pub diff: Vec<(usize, String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TablesReport {
    pub max_rank: usize,
    pub intro: TableReport,
    pub levi: TableReport,
}

impl TablesReport {
    pub fn all_ok(&self) -> bool {
        self.intro.matches_fixture && self.levi.matches_fixture
    }
}

fn compare(text: String, fixture: &str) -> TableReport {
    let got: Vec<&str> = text.lines().collect();
    let want: Vec<&str> = fixture.lines().collect();
    let diff = (0..got.len().max(want.len()))
        .filter(|&k| got.get(k) != want.get(k))
        .map(|k| (k + 1, want.get(k).unwrap_or(&"").to_string(), got.get(k).unwrap_or(&"").to_string()))
        .collect();
    TableReport { matches_fixture: text == fixture, text, diff }
}

/// Regenerates both tables for ranks up to 8 and compares them with the stored fixtures.
pub fn emit_tables() -> Result<TablesReport> {
    let max_rank = 8;
    Ok(TablesReport {
        max_rank,
        intro: compare(render_intro_table(&intro_table(max_rank)?), INTRO_FIXTURE),
        levi: compare(render_levi_table(&levi_table(max_rank)?), LEVI_FIXTURE),
    })
}
