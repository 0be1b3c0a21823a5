//! Column-insertion RSK on nonnegative integer matrices and its extension to
//! M_mu through entrywise factorization into irreducibles.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use serde_json::json;
use thiserror::Error;

use crate::decomp::PhiShape;
use crate::gf::{enumerate_irreducibles, factorize, FieldSpec, GfError, PolyFq};
use crate::guard::{self, GuardExceeded};
use crate::hecke_index::{enumerate_m_mu, PolyMatrix};
use crate::report::CheckReport;
use crate::shapes::{enumerate_cst, Composition, Partition, ShapeError, SkewShape, Tableau, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RskError {
    #[error("insertion needs a column-strict tableau of straight shape")]
    NotColumnStrict,
    #[error("entries must be positive")]
    NonPositiveEntry,
    #[error("matrix rows have unequal lengths")]
    Ragged,
    #[error("two-line array violates the ordering rules at position {0}")]
    BadTwoLineArray(usize),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
}

/// A rectangular matrix of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DegreeMatrix(Vec<Vec<u32>>);

impl DegreeMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, RskError> {
        if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
            return Err(RskError::Ragged);
        }
        Ok(DegreeMatrix(rows))
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        DegreeMatrix(vec![vec![0; cols]; rows])
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.0[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|&x| x == 0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().flatten().sum()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.0.iter().map(|r| r.iter().sum::<u32>() as usize).collect()
    }

    pub fn column_sums(&self) -> Vec<usize> {
        let cols = self.0.first().map_or(0, Vec::len);
        (0..cols).map(|j| self.0.iter().map(|r| r[j] as usize).sum()).collect()
    }

    pub fn transpose(&self) -> Self {
        let cols = self.0.first().map_or(0, Vec::len);
        DegreeMatrix((0..cols).map(|j| self.0.iter().map(|r| r[j]).collect()).collect())
    }
}

/// Pairs `(i, j)` with `i` weakly increasing and, for equal `i`, `j` weakly
/// decreasing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoLineArray {
    pairs: Vec<(u32, u32)>,
}

impl TwoLineArray {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self, RskError> {
        for (k, w) in pairs.windows(2).enumerate() {
            let ((i0, j0), (i1, j1)) = (w[0], w[1]);
            if i0 > i1 || (i0 == i1 && j0 < j1) {
                return Err(RskError::BadTwoLineArray(k + 1));
            }
        }
        if pairs.iter().any(|&(i, j)| i == 0 || j == 0) {
            return Err(RskError::NonPositiveEntry);
        }
        Ok(TwoLineArray { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn top(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// `b_ij` copies of `(i, j)` (1-based), in two-line-array order.
pub fn two_line_array(b: &DegreeMatrix) -> TwoLineArray {
    let mut pairs = Vec::new();
    for (i, row) in b.rows().iter().enumerate() {
        for (j, &count) in row.iter().enumerate().rev() {
            pairs.extend(std::iter::repeat_n(((i + 1) as u32, (j + 1) as u32), count as usize));
        }
    }
    TwoLineArray { pairs }
}

/// Inserts `j` into the first column, bumping the smallest entry `>= j` into
/// the next column, until an entry lands at the bottom of a column. Returns
/// the row of the new box.
fn insert_in_place(p: &mut Tableau, mut j: u32) -> usize {
    let mut col = 0;
    loop {
        let height = p.rows().iter().take_while(|r| r.len() > col).count();
        let bumped = (0..height).find(|&r| p.rows()[r][col] >= j);
        match bumped {
            Some(r) => {
                let old = p.rows()[r][col];
                p.set(r, col, j);
                j = old;
                col += 1;
            }
            None => {
                p.push_to_row(height, j);
                return height;
            }
        }
    }
}

/// `P <- j` by column insertion.
pub fn insert_column(p: &Tableau, j: u32) -> Result<Tableau, RskError> {
    if j == 0 {
        return Err(RskError::NonPositiveEntry);
    }
    if !p.shape().is_straight() || !p.cst_check()? {
        return Err(RskError::NotColumnStrict);
    }
    let mut out = p.clone();
    insert_in_place(&mut out, j);
    Ok(out)
}

/// Folds column insertion over the bottom line of `b`'s two-line array,
/// recording each top entry in the new box of Q.
pub fn rsk_classical(b: &DegreeMatrix) -> (Tableau, Tableau) {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for &(i, j) in two_line_array(b).pairs() {
        let row = insert_in_place(&mut p, j);
        q.push_to_row(row, i);
    }
    (p, q)
}

/// The matrices `a^(f)`, `a^(f)_ij` = multiplicity of `f` in `a_ij`, for
/// every irreducible `f` dividing some entry.
pub fn phi_factor_matrix(a: &PolyMatrix, field: &FieldSpec) -> Result<BTreeMap<PolyFq, DegreeMatrix>, RskError> {
    let l = a.len();
    let mut out: BTreeMap<PolyFq, DegreeMatrix> = BTreeMap::new();
    for i in 0..l {
        for j in 0..l {
            for (f, e) in factorize(a.entry(i, j), field)?.factors {
                out.entry(f).or_insert_with(|| DegreeMatrix::zero(l, l)).0[i][j] = e;
            }
        }
    }
    Ok(out)
}

/// A tableau for each label in a finite set of irreducibles; empty tableaux
/// are dropped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PhiTableauFamily(BTreeMap<PolyFq, Tableau>);

impl PhiTableauFamily {
    pub fn new(map: BTreeMap<PolyFq, Tableau>) -> Self {
        PhiTableauFamily(map.into_iter().filter(|(_, t)| !t.is_empty()).collect())
    }

    pub fn get(&self, label: &PolyFq) -> Option<&Tableau> {
        self.0.get(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PolyFq, &Tableau)> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shape(&self) -> PhiShape {
        PhiShape::new(self.0.iter().map(|(f, t)| (f.clone(), t.outer().clone())).collect())
    }

    /// `wt_i = Σ_f d(f) · #{entries equal to i in the f-tableau}`.
    pub fn weighted_weight(&self) -> Weight {
        let mut counts: Vec<usize> = Vec::new();
        for (f, t) in &self.0 {
            let d = f.degree().unwrap_or(0);
            for &v in t.rows().iter().flatten() {
                let i = v as usize - 1;
                if counts.len() <= i {
                    counts.resize(i + 1, 0);
                }
                counts[i] += d;
            }
        }
        Weight::new(counts)
    }
}

/// Componentwise classical RSK on the factor matrices of `a`.
pub fn rsk_generalized(a: &PolyMatrix, field: &FieldSpec) -> Result<(PhiTableauFamily, PhiTableauFamily), RskError> {
    let mut ps = BTreeMap::new();
    let mut qs = BTreeMap::new();
    for (f, b) in phi_factor_matrix(a, field)? {
        let (p, q) = rsk_classical(&b);
        ps.insert(f.clone(), p);
        qs.insert(f, q);
    }
    Ok((PhiTableauFamily::new(ps), PhiTableauFamily::new(qs)))
}

/// Every Φ-family of column-strict tableaux with degree-weighted weight `mu`,
/// grouped by shape. Families within a shape are in generation order: labels
/// in canonical order, per-label weights lexicographic, then fillings by
/// reading word.
pub fn enumerate_families(
    field: &FieldSpec,
    mu: &Composition,
) -> Result<BTreeMap<PhiShape, Vec<PhiTableauFamily>>, RskError> {
    let n = mu.size();
    let labels = if n == 0 { Vec::new() } else { enumerate_irreducibles(field, n)? };
    let mut out: BTreeMap<PhiShape, Vec<PhiTableauFamily>> = BTreeMap::new();
    let mut current = BTreeMap::new();
    families_rec(&labels, 0, mu.parts().to_vec(), &mut current, &mut out)?;
    Ok(out)
}

fn families_rec(
    labels: &[PolyFq],
    next: usize,
    remaining: Vec<usize>,
    current: &mut BTreeMap<PolyFq, Tableau>,
    out: &mut BTreeMap<PhiShape, Vec<PhiTableauFamily>>,
) -> Result<(), RskError> {
    if remaining.iter().all(|&r| r == 0) {
        let family = PhiTableauFamily::new(current.clone());
        out.entry(family.shape()).or_default().push(family);
        return Ok(());
    }
    let Some(f) = labels.get(next) else { return Ok(()) };
    let d = f.degree().unwrap();
    for w in bounded_vectors(&remaining, d) {
        let size: usize = w.iter().sum();
        let rest: Vec<usize> = remaining.iter().zip(&w).map(|(r, x)| r - d * x).collect();
        if size == 0 {
            families_rec(labels, next + 1, rest, current, out)?;
            continue;
        }
        let weight = Weight::new(w);
        for lambda in Partition::all_of(size) {
            for t in enumerate_cst(&SkewShape::straight(lambda), &weight)? {
                current.insert(f.clone(), t);
                families_rec(labels, next + 1, rest.clone(), current, out)?;
                current.remove(f);
            }
        }
    }
    Ok(())
}

/// All `w` with `d · w_i <= bound_i`, lexicographic.
fn bounded_vectors(bound: &[usize], d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b / d).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// All pairs `(P, Q)` of Φ-families of equal shape, each of degree-weighted
/// weight `mu`, ordered by shape, then P, then Q.
pub fn enumerate_pairs(
    field: &FieldSpec,
    mu: &Composition,
) -> Result<Vec<(PhiTableauFamily, PhiTableauFamily)>, RskError> {
    let mut out = Vec::new();
    for families in enumerate_families(field, mu)?.values() {
        for p in families {
            for q in families {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    Ok(out)
}

/// Checks that `rsk_generalized` is injective on M_mu and that its image is
/// exactly the set of pairs from [`enumerate_pairs`].
pub fn rsk_bijectivity_check(field: &FieldSpec, mu: &Composition) -> Result<CheckReport, RskError> {
    let n = mu.size();
    guard::check("|N|", guard::monomial_count(field.q(), n), guard::ENUM_MAX)?;
    let mut report = CheckReport::new("rsk_bijectivity", n, field.q(), Some(mu));
    let start = Instant::now();
    let m = enumerate_m_mu(field, mu);
    let mut image = HashSet::new();
    for a in &m {
        let pair = rsk_generalized(a, field)?;
        let target = Weight::from(mu);
        if pair.0.weighted_weight() != target || pair.1.weighted_weight() != target || pair.0.shape() != pair.1.shape()
        {
            report.fail(json!({ "a": a.render(field), "reason": "pair has the wrong shape or weight" }));
        }
        if !image.insert(pair) {
            report.fail(json!({ "a": a.render(field), "reason": "image repeated" }));
        }
    }
    report.time("rsk", start);
    let start = Instant::now();
    let pairs: HashSet<_> = enumerate_pairs(field, mu)?.into_iter().collect();
    if pairs != image {
        report.fail(json!({ "image_size": image.len(), "pairs": pairs.len(), "reason": "image differs from the pair enumeration" }));
    }
    report.detail("m_mu_count", m.len());
    report.detail("pair_count", pairs.len());
    report.time("pairs", start);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn dm(rows: &[&[u32]]) -> DegreeMatrix {
        DegreeMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion_steps() {
        let one = insert_column(&Tableau::empty(), 2).unwrap();
        assert_eq!(one, tab(&[&[2]]));
        let two = insert_column(&one, 1).unwrap();
        assert_eq!(two, tab(&[&[1, 2]]));
        assert_eq!(insert_column(&two, 3).unwrap(), tab(&[&[1, 2], &[3]]));
        assert_eq!(insert_column(&Tableau::empty(), 5).unwrap(), tab(&[&[5]]));
        assert!(matches!(insert_column(&tab(&[&[2, 1]]), 1), Err(RskError::NotColumnStrict)));
    }

    #[test]
    fn worked_example() {
        let b = dm(&[&[1, 1, 0], &[0, 0, 2], &[0, 1, 0]]);
        let arr = two_line_array(&b);
        assert_eq!(arr.top(), vec![1, 1, 2, 2, 3]);
        assert_eq!(arr.bottom(), vec![2, 1, 3, 3, 2]);
        let (p, q) = rsk_classical(&b);
        assert_eq!(p, tab(&[&[1, 2, 3], &[2, 3]]));
        assert_eq!(q, tab(&[&[1, 1, 3], &[2, 2]]));
    }

    #[test]
    fn trivial_inputs() {
        assert!(two_line_array(&DegreeMatrix::zero(2, 2)).is_empty());
        assert_eq!(two_line_array(&dm(&[&[2]])).pairs(), &[(1, 1), (1, 1)]);
        assert_eq!(rsk_classical(&DegreeMatrix::zero(3, 3)), (Tableau::empty(), Tableau::empty()));
        assert_eq!(rsk_classical(&dm(&[&[1]])), (tab(&[&[1]]), tab(&[&[1]])));
        assert!(TwoLineArray::new(vec![(1, 1), (1, 2)]).is_err());
        assert!(TwoLineArray::new(vec![(2, 1), (1, 2)]).is_err());
    }

    /// All `rows x cols` matrices with entries at most `max` and total at most `total`.
    fn matrices(rows: usize, cols: usize, max: u32, total: u32) -> Vec<DegreeMatrix> {
        let mut out = vec![Vec::new()];
        for _ in 0..rows * cols {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=max).filter_map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        (v.iter().sum::<u32>() <= total).then_some(v)
                    })
                })
                .collect();
        }
        out.into_iter().map(|v| DegreeMatrix(v.chunks(cols).map(<[u32]>::to_vec).collect())).collect()
    }

    #[test]
    fn shape_and_weight_invariants() {
        for b in matrices(3, 3, 3, 9) {
            let (p, q) = rsk_classical(&b);
            assert_eq!(p.outer(), q.outer());
            assert!(p.cst_check().unwrap() && q.cst_check().unwrap());
            assert_eq!(p.cst_weight().unwrap(), Weight::new(b.column_sums()));
            assert_eq!(q.cst_weight().unwrap(), Weight::new(b.row_sums()));
        }
    }

    #[test]
    fn classical_injective() {
        let all = matrices(3, 3, 6, 6);
        let images: HashSet<(Tableau, Tableau)> = all.iter().map(rsk_classical).collect();
        assert_eq!(images.len(), all.len());
    }

    #[test]
    fn transpose_swaps_p_and_q() {
        for b in matrices(3, 3, 5, 5) {
            let (p, q) = rsk_classical(&b);
            assert_eq!(rsk_classical(&b.transpose()), (q, p), "{b:?}");
        }
    }

    #[test]
    fn generalized_example() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let poly = |s: &str| PolyFq::parse(s, &f2).unwrap();
        let (f, g, h) = (poly("X+1"), poly("X^2+X+1"), poly("X^3+X+1"));
        let one = PolyFq::one();
        let f2h = f.pow(2, &f2).mul(&h, &f2);
        let entries = vec![
            vec![g.clone(), f2h, one.clone(), one.clone()],
            vec![h.clone(), one.clone(), g.clone(), one.clone()],
            vec![one.clone(), one.clone(), f.clone(), f.pow(2, &f2)],
            vec![g.clone(), one.clone(), one.clone(), one.clone()],
        ];
        let mu = Composition::new(vec![7, 5, 3, 2]).unwrap();
        let a = PolyMatrix::new(entries, mu.clone()).unwrap();

        let factors = phi_factor_matrix(&a, &f2).unwrap();
        assert_eq!(factors.keys().cloned().collect::<Vec<_>>(), vec![f.clone(), g.clone(), h.clone()]);
        assert_eq!(factors[&f], dm(&[&[0, 2, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 2], &[0, 0, 0, 0]]));
        assert_eq!(factors[&g], dm(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[1, 0, 0, 0]]));
        assert_eq!(factors[&h], dm(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]));

        let (p, q) = rsk_generalized(&a, &f2).unwrap();
        assert_eq!(p.get(&f), Some(&tab(&[&[2, 2, 4], &[3, 4]])));
        assert_eq!(p.get(&g), Some(&tab(&[&[1, 1], &[3]])));
        assert_eq!(p.get(&h), Some(&tab(&[&[1, 2]])));
        assert_eq!(q.get(&f), Some(&tab(&[&[1, 1, 3], &[3, 3]])));
        assert_eq!(q.get(&g), Some(&tab(&[&[1, 4], &[2]])));
        assert_eq!(q.get(&h), Some(&tab(&[&[1, 2]])));
        assert_eq!(p.weighted_weight(), Weight::from(&mu));
        assert_eq!(q.weighted_weight(), Weight::from(&mu));
    }

    #[test]
    fn single_label_degree_n() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        let f = PolyFq::parse("X^2+1", &f3).unwrap();
        let a = PolyMatrix::new(vec![vec![f.clone()]], Composition::new(vec![2]).unwrap()).unwrap();
        let (p, q) = rsk_generalized(&a, &f3).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.get(&f), Some(&tab(&[&[1]])));
        assert_eq!(p.weighted_weight(), Weight::new(vec![2]));
    }

    #[test]
    fn pair_counts() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let f3 = FieldSpec::new(3, 1).unwrap();
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        assert_eq!(enumerate_pairs(&f2, &c(&[1])).unwrap().len(), 1);
        assert_eq!(enumerate_pairs(&f3, &c(&[1])).unwrap().len(), 2);
        let pairs = enumerate_pairs(&f2, &c(&[1, 1])).unwrap();
        assert_eq!(pairs.len(), 2);
        let shapes: Vec<PhiShape> = pairs.iter().map(|(p, _)| p.shape()).collect();
        assert_ne!(shapes[0], shapes[1]);
    }

    #[test]
    fn generalized_is_bijective_small() {
        for p in [2, 3] {
            let field = FieldSpec::new(p, 1).unwrap();
            for n in 1..=3 {
                for mu in Composition::all_of(n) {
                    let m = enumerate_m_mu(&field, &mu);
                    let images: HashSet<_> = m.iter().map(|a| rsk_generalized(a, &field).unwrap()).collect();
                    assert_eq!(images.len(), m.len());
                    let pairs: HashSet<_> = enumerate_pairs(&field, &mu).unwrap().into_iter().collect();
                    assert_eq!(images, pairs, "q={p} mu={mu}");
                }
            }
        }
    }
}
