//! Multiplicities of the irreducible constituents: shapes indexed by
//! irreducible labels, the dimension identity, Levi weight spaces, and
//! Schur polynomial checks.

use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::json;
use thiserror::Error;

use crate::gf::{enumerate_irreducibles, is_irreducible, FieldSpec, GfError, PolyFq};
use crate::guard::{self, GuardExceeded};
use crate::hecke_index::{enumerate_m_mu, enumerate_n_mu};
use crate::report::CheckReport;
use crate::shapes::{enumerate_cst, kostka, Composition, Partition, ShapeError, SkewShape, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompError {
    #[error("shape has size {shape} but mu has size {mu}")]
    SizeMismatch { shape: usize, mu: usize },
    #[error("{0} is not a monic irreducible with nonzero constant term")]
    NotALabel(String),
    #[error("need at least {needed} variables, got {got}")]
    TooFewVariables { needed: usize, got: usize },
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// A partition for each label in a finite set of irreducibles; empty
/// partitions are dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PhiShape(BTreeMap<PolyFq, Partition>);

impl PhiShape {
    pub fn new(map: BTreeMap<PolyFq, Partition>) -> Self {
        PhiShape(map.into_iter().filter(|(_, p)| !p.is_empty()).collect())
    }

    pub fn get(&self, label: &PolyFq) -> Option<&Partition> {
        self.0.get(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PolyFq, &Partition)> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ_f d(f) |λ^(f)|`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|(f, p)| f.degree().unwrap_or(0) * p.size()).sum()
    }

    /// Largest number of rows over all labels.
    pub fn height(&self) -> usize {
        self.0.values().map(Partition::len).max().unwrap_or(0)
    }

    /// `{label: parts}` with labels as polynomial strings.
    pub fn to_json(&self, field: &FieldSpec) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.0.iter().map(|(f, p)| (f.to_text(field), json!(p.parts()))).collect();
        serde_json::Value::Object(map)
    }
}

/// `γ = (γ_1, ..., γ_l)` with every `γ_i` of height at most one and
/// `|γ_i| = mu_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LeviWeight(Vec<PhiShape>);

impl LeviWeight {
    pub fn components(&self) -> &[PhiShape] {
        &self.0
    }

    pub fn to_json(&self, field: &FieldSpec) -> serde_json::Value {
        json!(self.0.iter().map(|g| g.to_json(field)).collect::<Vec<_>>())
    }
}

/// Rows `(λ, m_λ)` with positive counts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiplicityTable {
    pub rows: Vec<(PhiShape, usize)>,
}

impl MultiplicityTable {
    pub fn sum_of_squares(&self) -> usize {
        self.rows.iter().map(|(_, m)| m * m).sum()
    }

    pub fn count(&self, shape: &PhiShape) -> usize {
        self.rows.iter().find(|(s, _)| s == shape).map_or(0, |(_, m)| *m)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Every assignment of a nonzero per-label weight vector `w^(f)` to labels
/// such that `Σ_f d(f) w^(f) = mu`. Labels are visited in `labels` order.
fn label_distributions(labels: &[PolyFq], mu: &[usize]) -> Vec<BTreeMap<PolyFq, Vec<usize>>> {
    fn rec(
        labels: &[PolyFq],
        remaining: &mut Vec<usize>,
        current: &mut BTreeMap<PolyFq, Vec<usize>>,
        out: &mut Vec<BTreeMap<PolyFq, Vec<usize>>>,
    ) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(current.clone());
            return;
        }
        let Some((f, rest)) = labels.split_first() else { return };
        let d = f.degree().unwrap();
        let mut w = vec![0usize; remaining.len()];
        loop {
            if w.iter().any(|&x| x > 0) {
                for (r, x) in remaining.iter_mut().zip(&w) {
                    *r -= d * x;
                }
                current.insert(f.clone(), w.clone());
                rec(rest, remaining, current, out);
                current.remove(f);
                for (r, x) in remaining.iter_mut().zip(&w) {
                    *r += d * x;
                }
            } else {
                rec(rest, remaining, current, out);
            }
            // next w with d * w_i <= remaining_i, last coordinate fastest
            let mut i = w.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if d * (w[i] + 1) <= remaining[i] {
                    w[i] += 1;
                    break;
                }
                w[i] = 0;
            }
        }
    }
    let mut out = Vec::new();
    rec(labels, &mut mu.to_vec(), &mut BTreeMap::new(), &mut out);
    out
}

fn labels_for(field: &FieldSpec, n: usize) -> Result<Vec<PolyFq>, DecompError> {
    Ok(if n == 0 { Vec::new() } else { enumerate_irreducibles(field, n)? })
}

/// `|Ĥ_mu^λ|` for every Φ-shape λ with a column-strict filling of
/// degree-weighted weight `mu`, computed as sums of products of Kostka
/// numbers over the label weight distributions.
pub fn h_hat(field: &FieldSpec, mu: &Composition) -> Result<MultiplicityTable, DecompError> {
    let labels = labels_for(field, mu.size())?;
    let mut counts: BTreeMap<PhiShape, usize> = BTreeMap::new();
    for dist in label_distributions(&labels, mu.parts()) {
        // every choice of one shape per label, weighted by the Kostka product
        let mut partial: Vec<(BTreeMap<PolyFq, Partition>, usize)> = vec![(BTreeMap::new(), 1)];
        for (f, w) in &dist {
            let weight = Weight::new(w.clone());
            let options: Vec<(Partition, usize)> = Partition::all_of(weight.size())
                .into_iter()
                .map(|p| {
                    let k = kostka(&p, &weight);
                    (p, k)
                })
                .filter(|(_, k)| *k > 0)
                .collect();
            partial = partial
                .into_iter()
                .flat_map(|(shape, count)| {
                    options.iter().map(move |(p, k)| {
                        let mut shape = shape.clone();
                        shape.insert(f.clone(), p.clone());
                        (shape, count * k)
                    })
                })
                .collect();
        }
        for (shape, count) in partial {
            *counts.entry(PhiShape::new(shape)).or_default() += count;
        }
    }
    Ok(MultiplicityTable { rows: counts.into_iter().collect() })
}

/// `|N_mu|` three ways: filtering all monomial matrices, counting M_mu, and
/// `Σ_λ |Ĥ_mu^λ|^2`.
pub fn dim_identity_check(field: &FieldSpec, mu: &Composition) -> Result<CheckReport, DecompError> {
    let n = mu.size();
    guard::check("n", n as u64, guard::DIM_CHECK_MAX_N as u64)?;
    guard::check("q", field.q() as u64, guard::DIM_CHECK_MAX_Q as u64)?;
    let mut report = CheckReport::new("dim_identity", n, field.q(), Some(mu));

    let start = Instant::now();
    let n_mu = enumerate_n_mu(field, mu).len();
    report.time("n_mu", start);
    let start = Instant::now();
    let m_mu = enumerate_m_mu(field, mu).len();
    report.time("m_mu", start);
    let start = Instant::now();
    let table = h_hat(field, mu)?;
    let squares = table.sum_of_squares();
    report.time("h_hat", start);

    report.detail("n_mu_count", n_mu);
    report.detail("m_mu_count", m_mu);
    report.detail("sum_of_squares", squares);
    let shapes: Vec<serde_json::Value> =
        table.rows.iter().map(|(s, m)| json!({ "shape": s.to_json(field), "count": m })).collect();
    report.detail("shapes", shapes);
    if n_mu != m_mu || m_mu != squares {
        report.fail(json!({ "n_mu_count": n_mu, "m_mu_count": m_mu, "sum_of_squares": squares }));
    }
    Ok(report)
}

/// Dimensions of the Levi weight spaces of the λ-constituent: for each `γ`,
/// the number of Φ-families of column-strict fillings of λ whose f-tableau
/// has weight `(|γ_1^(f)|, ..., |γ_l^(f)|)`. Only nonzero rows are returned.
pub fn weight_space_dims(
    field: &FieldSpec,
    lambda: &PhiShape,
    mu: &Composition,
) -> Result<Vec<(LeviWeight, usize)>, DecompError> {
    if lambda.size() != mu.size() {
        return Err(DecompError::SizeMismatch { shape: lambda.size(), mu: mu.size() });
    }
    let labels: Vec<PolyFq> = lambda.iter().map(|(f, _)| f.clone()).collect();
    if let Some(bad) = labels.iter().find(|f| !f.is_monic_unit() || !is_irreducible(f, field)) {
        return Err(DecompError::NotALabel(bad.to_text(field)));
    }
    let mut out = BTreeMap::new();
    for dist in label_distributions(&labels, mu.parts()) {
        if dist.len() != labels.len() {
            continue;
        }
        let mut dim = 1;
        for (f, w) in &dist {
            let shape = lambda.get(f).expect("label of lambda");
            let weight = Weight::new(w.clone());
            dim *= if shape.size() == weight.size() { kostka(shape, &weight) } else { 0 };
        }
        if dim == 0 {
            continue;
        }
        let gamma = (0..mu.len())
            .map(|i| {
                PhiShape::new(
                    dist.iter()
                        .map(|(f, w)| (f.clone(), Partition::from_padded(vec![w[i]]).expect("one row")))
                        .collect(),
                )
            })
            .collect();
        *out.entry(LeviWeight(gamma)).or_default() += dim;
    }
    Ok(out.into_iter().collect())
}

/// A polynomial in `x_1, ..., x_m` with integer coefficients, keyed by
/// exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl IntPoly {
    pub fn zero(vars: usize) -> Self {
        IntPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], 1)
    }

    pub fn monomial(exponents: Vec<u32>, coeff: i64) -> Self {
        let vars = exponents.len();
        let mut p = Self::zero(vars);
        p.add_term(exponents, coeff);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exponents: Vec<u32>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> IntPoly {
        let mut out = IntPoly::zero(self.vars);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        assert_eq!(self.vars, other.vars, "variable counts differ");
        let mut out = IntPoly::zero(self.vars);
        for (a, &c) in &self.terms {
            for (b, &d) in &other.terms {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        out
    }

    /// Human-readable form, e.g. `x1*x2^2 + 2*x3`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                    .collect();
                match (vars.is_empty(), *c) {
                    (true, c) => c.to_string(),
                    (false, 1) => vars.join("*"),
                    (false, c) => format!("{c}*{}", vars.join("*")),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `e_r(x_1, ..., x_m)`, zero for `r > m`.
pub fn elementary_symmetric(r: usize, m: usize) -> IntPoly {
    let mut out = IntPoly::zero(m);
    if r > m {
        return out;
    }
    let mut subset: Vec<usize> = (0..r).collect();
    loop {
        let mut e = vec![0u32; m];
        for &i in &subset {
            e[i] = 1;
        }
        out.add_term(e, 1);
        // next r-subset in lexicographic order
        let Some(i) = (0..r).rev().find(|&i| subset[i] < m - r + i) else {
            return out;
        };
        subset[i] += 1;
        for k in i + 1..r {
            subset[k] = subset[k - 1] + 1;
        }
    }
}

/// `s_ν = det(e_{ν'_i - i + j})` in `m` variables.
pub fn schur_jacobi_trudi(nu: &Partition, m: usize) -> IntPoly {
    let conj = nu.conjugate();
    let k = conj.len();
    let e = |r: isize| {
        if r < 0 {
            IntPoly::zero(m)
        } else {
            elementary_symmetric(r as usize, m)
        }
    };
    let entry = |i: usize, j: usize| e(conj.part(i) as isize - i as isize + j as isize);
    let mut det = IntPoly::zero(m);
    for (perm, sign) in signed_permutations(k) {
        let term = (0..k).fold(IntPoly::one(m), |acc, i| acc.mul(&entry(i, perm[i])));
        det = det.add(&term.scale(sign));
    }
    det
}

fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == k {
            let inversions =
                (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| cur[i] > cur[j]).count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(k, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// `Σ_T x^{wt(T)}` over column-strict fillings of `ν` with entries at most `m`.
pub fn schur_from_tableaux(nu: &Partition, m: usize) -> IntPoly {
    let mut out = IntPoly::zero(m);
    let shape = SkewShape::straight(nu.clone());
    for w in weak_compositions(nu.size(), m) {
        let count = enumerate_cst(&shape, &Weight::new(w.clone())).map_or(0, |t| t.len());
        out.add_term(w.iter().map(|&x| x as u32).collect(), count as i64);
    }
    out
}

fn weak_compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..=n)
        .flat_map(|first| {
            weak_compositions(n - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// `s_ν s_(n) = Σ s_γ` over `γ ⊇ ν` such that `γ/ν` has a column-strict
/// filling of weight `(n)`, compared as polynomials in `m` variables.
pub fn pieri_check(nu: &Partition, n: usize, m: usize) -> Result<CheckReport, DecompError> {
    if m < nu.len() + 1 {
        return Err(DecompError::TooFewVariables { needed: nu.len() + 1, got: m });
    }
    let mut report = CheckReport::new("pieri", n, 0, None);
    let start = Instant::now();
    let row = Partition::from_padded(vec![n])?;
    let lhs = schur_jacobi_trudi(nu, m).mul(&schur_jacobi_trudi(&row, m));
    let mut rhs = IntPoly::zero(m);
    let mut terms = Vec::new();
    for gamma in Partition::all_of(nu.size() + n) {
        if !gamma.contains(nu) {
            continue;
        }
        let skew = SkewShape::new(gamma.clone(), nu.clone())?;
        if enumerate_cst(&skew, &Weight::new(vec![n]))?.is_empty() {
            continue;
        }
        rhs = rhs.add(&schur_jacobi_trudi(&gamma, m));
        terms.push(json!(gamma.parts()));
    }
    report.detail("nu", json!(nu.parts()));
    report.detail("vars", m);
    report.detail("terms", terms);
    if lhs != rhs {
        report.fail(json!({ "lhs": lhs.to_text(), "rhs": rhs.to_text() }));
    }
    report.time("pieri", start);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rsk::enumerate_families;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn shape(field: &FieldSpec, entries: &[(&str, &[usize])]) -> PhiShape {
        PhiShape::new(entries.iter().map(|(f, p)| (PolyFq::parse(f, field).unwrap(), part(p))).collect())
    }

    #[test]
    fn h_hat_examples() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let t = h_hat(&f2, &comp(&[1, 1])).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.count(&shape(&f2, &[("X+1", &[2])])), 1);
        assert_eq!(t.count(&shape(&f2, &[("X+1", &[1, 1])])), 1);

        let t = h_hat(&f2, &comp(&[2])).unwrap();
        assert_eq!(t.count(&shape(&f2, &[("X+1", &[2])])), 1);
        assert_eq!(t.count(&shape(&f2, &[("X+1", &[1, 1])])), 0);
        assert_eq!(t.count(&shape(&f2, &[("X^2+X+1", &[1])])), 1);
        assert_eq!(t.sum_of_squares(), 2);
    }

    #[test]
    fn gelfand_graev_shapes_have_height_one() {
        for p in [2, 3] {
            let f = FieldSpec::new(p, 1).unwrap();
            for n in 1..=4 {
                let t = h_hat(&f, &comp(&[n])).unwrap();
                assert!(t.rows.iter().all(|(s, m)| s.height() == 1 && *m == 1));
            }
        }
    }

    #[test]
    fn h_hat_matches_explicit_families() {
        for p in [2, 3] {
            let f = FieldSpec::new(p, 1).unwrap();
            for n in 1..=4 {
                for mu in Composition::all_of(n) {
                    let table = h_hat(&f, &mu).unwrap();
                    let families = enumerate_families(&f, &mu).unwrap();
                    let explicit: Vec<(PhiShape, usize)> = families.into_iter().map(|(s, v)| (s, v.len())).collect();
                    assert_eq!(table.rows, explicit, "q={p} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn dim_identity_examples() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let f3 = FieldSpec::new(3, 1).unwrap();
        let r = dim_identity_check(&f2, &comp(&[1, 1])).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["n_mu_count"], json!(2));
        let r = dim_identity_check(&f3, &comp(&[1])).unwrap();
        assert_eq!(r.details["sum_of_squares"], json!(2));
        assert!(dim_identity_check(&f2, &comp(&[2, 1])).unwrap().pass);
        assert!(matches!(dim_identity_check(&f2, &comp(&[6])), Err(DecompError::Guard(_))));
    }

    #[test]
    fn weight_space_examples() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let lam = shape(&f2, &[("X+1", &[2])]);
        let dims = weight_space_dims(&f2, &lam, &comp(&[1, 1])).unwrap();
        assert_eq!(dims.len(), 1);
        assert_eq!(dims[0].1, 1);
        let gamma_1 = shape(&f2, &[("X+1", &[1])]);
        assert_eq!(dims[0].0.components(), &[gamma_1.clone(), gamma_1]);

        let single = shape(&f2, &[("X^3+X+1", &[1])]);
        let dims = weight_space_dims(&f2, &single, &comp(&[3])).unwrap();
        assert_eq!(dims.iter().map(|d| d.1).collect::<Vec<_>>(), vec![1]);

        assert!(matches!(weight_space_dims(&f2, &single, &comp(&[2])), Err(DecompError::SizeMismatch { .. })));
        let reducible = shape(&f2, &[("X^2+1", &[1])]);
        assert!(matches!(weight_space_dims(&f2, &reducible, &comp(&[2])), Err(DecompError::NotALabel(_))));
    }

    #[test]
    fn weight_space_sum_rule() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        for n in 1..=3 {
            for mu in Composition::all_of(n) {
                for (lam, m) in h_hat(&f2, &mu).unwrap().rows {
                    let total: usize = weight_space_dims(&f2, &lam, &mu).unwrap().iter().map(|d| d.1).sum();
                    assert_eq!(total, m);
                }
            }
        }
    }

    #[test]
    fn schur_small() {
        assert_eq!(schur_jacobi_trudi(&part(&[1]), 2).to_text(), "x1 + x2");
        assert_eq!(schur_jacobi_trudi(&part(&[1, 1]), 2).to_text(), "x1*x2");
        assert_eq!(schur_jacobi_trudi(&Partition::empty(), 3), IntPoly::one(3));
        let s21 = schur_jacobi_trudi(&part(&[2, 1]), 3);
        assert_eq!(s21.terms().values().sum::<i64>(), 8);
        assert!(schur_jacobi_trudi(&part(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn schur_matches_tableaux() {
        for size in 0..=4 {
            for nu in Partition::all_of(size) {
                for m in 1..=4 {
                    assert_eq!(schur_jacobi_trudi(&nu, m), schur_from_tableaux(&nu, m), "{nu:?} m={m}");
                }
            }
        }
    }

    #[test]
    fn pieri_examples() {
        assert!(pieri_check(&Partition::empty(), 1, 1).unwrap().pass);
        let r = pieri_check(&part(&[1]), 1, 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.details["terms"], json!([[2], [1, 1]]));
        assert!(pieri_check(&part(&[2, 1]), 2, 4).unwrap().pass);
        assert!(matches!(pieri_check(&part(&[1, 1]), 1, 2), Err(DecompError::TooFewVariables { .. })));
    }

    #[test]
    fn elementary_counts() {
        assert_eq!(elementary_symmetric(2, 4).terms().len(), 6);
        assert_eq!(elementary_symmetric(0, 3), IntPoly::one(3));
        assert!(elementary_symmetric(4, 3).is_zero());
    }
}
