//! The index sets of the double-coset basis: monomial matrices N, the subset
//! N_mu, the polynomial matrices M_mu, and the bijection `a -> v_a` between
//! M_mu and N_mu.

use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use serde_json::json;
use thiserror::Error;

use crate::gf::{enumerate_monic_units, FieldSpec, FqElement, PolyFq};
use crate::guard::{self, GuardExceeded};
use crate::oracle::{psi_mu_exponent, GlMatrix};
use crate::report::CheckReport;
use crate::shapes::Composition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndexError {
    #[error("permutation {0:?} is not a bijection")]
    NotAPermutation(Vec<usize>),
    #[error("monomial matrix entries must be nonzero")]
    ZeroEntry,
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("polynomial {0} is not monic")]
    NotMonic(String),
    #[error("polynomial {0} has zero constant term")]
    ZeroConstantTerm(String),
    #[error("matrix is not in M_mu: {0}")]
    NotInMMu(String),
    #[error("matrix is not in N_mu: {0}")]
    NotInNMu(String),
    #[error(transparent)]
    Guard(#[from] GuardExceeded),
}

/// An n x n matrix with exactly one nonzero entry in each row and column.
///
/// Column `i` (0-based) holds `entries[i]` in row `perm[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonomialMatrix {
    perm: Vec<usize>,
    entries: Vec<FqElement>,
}

impl MonomialMatrix {
    pub fn new(perm: Vec<usize>, entries: Vec<FqElement>) -> Result<Self, IndexError> {
        if perm.len() != entries.len() {
            return Err(IndexError::LengthMismatch { expected: perm.len(), got: entries.len() });
        }
        let mut seen = vec![false; perm.len()];
        for &r in &perm {
            if r >= perm.len() || std::mem::replace(&mut seen[r], true) {
                return Err(IndexError::NotAPermutation(perm));
            }
        }
        if entries.iter().any(|e| e.is_zero()) {
            return Err(IndexError::ZeroEntry);
        }
        Ok(MonomialMatrix { perm, entries })
    }

    pub fn identity(n: usize) -> Self {
        MonomialMatrix { perm: (0..n).collect(), entries: vec![FqElement::ONE; n] }
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    /// Row (0-based) of the nonzero entry in column `col`.
    pub fn row_of(&self, col: usize) -> usize {
        self.perm[col]
    }

    /// The nonzero entry of column `col`.
    pub fn entry(&self, col: usize) -> FqElement {
        self.entries[col]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn entries(&self) -> &[FqElement] {
        &self.entries
    }

    /// Entry at `(row, col)`, zero off the support.
    pub fn get(&self, row: usize, col: usize) -> FqElement {
        if self.perm[col] == row {
            self.entries[col]
        } else {
            FqElement::ZERO
        }
    }

    pub fn scaled(&self, c: FqElement, field: &FieldSpec) -> Self {
        MonomialMatrix { perm: self.perm.clone(), entries: self.entries.iter().map(|&e| field.mul(e, c)).collect() }
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &MonomialMatrix) -> Self {
        let n = self.size();
        let mut perm = self.perm.clone();
        perm.extend(other.perm.iter().map(|&r| r + n));
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        MonomialMatrix { perm, entries }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &MonomialMatrix, field: &FieldSpec) -> Self {
        assert_eq!(self.size(), other.size(), "monomial matrix sizes differ");
        let (perm, entries) = (0..other.size())
            .map(|j| {
                let mid = other.perm[j];
                (self.perm[mid], field.mul(self.entries[mid], other.entries[j]))
            })
            .unzip();
        MonomialMatrix { perm, entries }
    }

    /// The same matrix as an element of GL_n(F_q).
    pub fn to_gl(&self) -> GlMatrix {
        let n = self.size();
        let mut m = GlMatrix::zero(n);
        for (c, (&r, &e)) in self.perm.iter().zip(&self.entries).enumerate() {
            m.set(r, c, e);
        }
        m
    }

    /// Recovers a monomial matrix from a dense one, if it is monomial.
    pub fn from_gl(g: &GlMatrix) -> Option<Self> {
        let n = g.size();
        let mut perm = Vec::with_capacity(n);
        let mut entries = Vec::with_capacity(n);
        for c in 0..n {
            let nonzero: Vec<usize> = (0..n).filter(|&r| !g.get(r, c).is_zero()).collect();
            let [r] = nonzero[..] else { return None };
            perm.push(r);
            entries.push(g.get(r, c));
        }
        MonomialMatrix::new(perm, entries).ok()
    }

    /// Dense text rendering with entries formatted by the field.
    pub fn render(&self, field: &FieldSpec) -> String {
        let n = self.size();
        (0..n)
            .map(|r| (0..n).map(|c| field.format_element(self.get(r, c))).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The k x k antidiagonal permutation matrix w_(k), `(w_(k))_{ij} = δ_{j, k-i+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ReversalPermutation {
    pub size: usize,
}

impl ReversalPermutation {
    pub fn new(size: usize) -> Self {
        ReversalPermutation { size }
    }

    pub fn matrix(&self) -> MonomialMatrix {
        let k = self.size;
        MonomialMatrix { perm: (0..k).map(|c| k - 1 - c).collect(), entries: vec![FqElement::ONE; k] }
    }
}

/// An l x l matrix of monic polynomials with nonzero constant terms whose
/// degree row sums and degree column sums both equal `mu`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyMatrix {
    mu: Composition,
    entries: Vec<Vec<PolyFq>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<PolyFq>>, mu: Composition) -> Result<Self, IndexError> {
        let l = mu.len();
        if entries.len() != l || entries.iter().any(|r| r.len() != l) {
            return Err(IndexError::NotInMMu(format!("expected a {l}x{l} matrix")));
        }
        for row in &entries {
            for f in row {
                if !f.is_monic() {
                    return Err(IndexError::NotInMMu(format!("entry {f:?} is not monic")));
                }
                if f.constant_term().is_zero() {
                    return Err(IndexError::NotInMMu(format!("entry {f:?} has zero constant term")));
                }
            }
        }
        let m = PolyMatrix { mu, entries };
        let degrees = m.degree_matrix();
        let rows: Vec<usize> = degrees.iter().map(|r| r.iter().sum()).collect();
        let cols: Vec<usize> = (0..l).map(|j| degrees.iter().map(|r| r[j]).sum()).collect();
        if rows != m.mu.parts() || cols != m.mu.parts() {
            return Err(IndexError::NotInMMu(format!(
                "degree row sums {rows:?} and column sums {cols:?} must both equal {:?}",
                m.mu.parts()
            )));
        }
        Ok(m)
    }

    pub fn mu(&self) -> &Composition {
        &self.mu
    }

    pub fn entries(&self) -> &[Vec<PolyFq>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &PolyFq {
        &self.entries[i][j]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrix of entry degrees `d(a_ij)`.
    pub fn degree_matrix(&self) -> Vec<Vec<usize>> {
        self.entries.iter().map(|r| r.iter().map(|f| f.degree().unwrap_or(0)).collect()).collect()
    }

    /// Block-diagonal matrix `(f_1) ⊕ ... ⊕ (f_l)` with off-diagonal entries 1.
    pub fn block_diagonal(diagonal: Vec<PolyFq>) -> Result<Self, IndexError> {
        let mu = diagonal.iter().map(|f| f.degree().unwrap_or(0)).collect();
        let mu = Composition::new(mu).map_err(|e| IndexError::NotInMMu(e.to_string()))?;
        let l = diagonal.len();
        let mut entries = vec![vec![PolyFq::one(); l]; l];
        for (i, f) in diagonal.into_iter().enumerate() {
            entries[i][i] = f;
        }
        PolyMatrix::new(entries, mu)
    }

    pub fn render(&self, field: &FieldSpec) -> String {
        self.entries
            .iter()
            .map(|r| r.iter().map(|f| f.to_text(field)).collect::<Vec<_>>().join(" ; "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm: Vec<usize> = self.perm.iter().map(|r| r + 1).collect();
        let entries: Vec<u32> = self.entries.iter().map(|e| e.index()).collect();
        write!(f, "perm={perm:?} entries={entries:?}")
    }
}

/// `v_(f) = w_(n) (a_0 w_(i_1) ⊕ a_1 w_(i_2 - i_1) ⊕ ... ⊕ a_r w_(n - i_r))`
/// for `f = a_0 + a_1 X^{i_1} + ... + a_r X^{i_r} + X^n`. The constant
/// polynomial 1 maps to the 0 x 0 matrix.
pub fn v_of_poly(f: &PolyFq, field: &FieldSpec) -> Result<MonomialMatrix, IndexError> {
    if !f.is_monic() {
        return Err(IndexError::NotMonic(f.to_text(field)));
    }
    if f.constant_term().is_zero() {
        return Err(IndexError::ZeroConstantTerm(f.to_text(field)));
    }
    let n = f.degree().unwrap();
    let support: Vec<usize> = (0..n).filter(|&d| !f.coeff(d).is_zero()).collect();
    let mut blocks = MonomialMatrix::identity(0);
    for (k, &start) in support.iter().enumerate() {
        let end = support.get(k + 1).copied().unwrap_or(n);
        let block = ReversalPermutation::new(end - start).matrix().scaled(f.coeff(start), field);
        blocks = blocks.direct_sum(&block);
    }
    Ok(ReversalPermutation::new(n).matrix().mul(&blocks, field))
}

/// Inverse of [`v_of_poly`] on its image.
fn poly_of_v(v: &MonomialMatrix, field: &FieldSpec) -> Option<PolyFq> {
    let n = v.size();
    // Undo the outer w_(n): the remaining factor is block diagonal with
    // antidiagonal blocks.
    let inner = ReversalPermutation::new(n).matrix().mul(v, field);
    let mut coeffs = vec![FqElement::ZERO; n + 1];
    coeffs[n] = FqElement::ONE;
    let mut start = 0;
    while start < n {
        let top = inner.row_of(start);
        if top < start {
            return None;
        }
        let size = top - start + 1;
        let scalar = inner.entry(start);
        for c in start..start + size {
            if c >= n || inner.row_of(c) != 2 * start + size - 1 - c || inner.entry(c) != scalar {
                return None;
            }
        }
        coeffs[start] = scalar;
        start += size;
    }
    Some(PolyFq::from_elements(coeffs))
}

/// Row and column offsets of every sub-block `v_(a_ij)` inside `v_a`.
///
/// Within block row `i` the sub-blocks are stacked top to bottom by
/// decreasing `j`; within block column `j` they run left to right by
/// decreasing `i`.
fn sub_block_offsets(degrees: &[Vec<usize>], mu: &Composition) -> Vec<Vec<(usize, usize)>> {
    let l = degrees.len();
    let starts = mu.block_starts();
    (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let row = starts[i] + ((j + 1)..l).map(|jj| degrees[i][jj]).sum::<usize>();
                    let col = starts[j] + ((i + 1)..l).map(|ii| degrees[ii][j]).sum::<usize>();
                    (row, col)
                })
                .collect()
        })
        .collect()
}

/// The monomial matrix `v_a` assembled from the sub-blocks `v_(a_ij)`.
pub fn v_of_matrix(a: &PolyMatrix, field: &FieldSpec) -> MonomialMatrix {
    let n = a.mu.size();
    let degrees = a.degree_matrix();
    let offsets = sub_block_offsets(&degrees, &a.mu);
    let mut perm = vec![usize::MAX; n];
    let mut entries = vec![FqElement::ZERO; n];
    for (i, row) in a.entries.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            let block = v_of_poly(f, field).expect("entries of M_mu are monic units");
            let (r0, c0) = offsets[i][j];
            for c in 0..block.size() {
                perm[c0 + c] = r0 + block.row_of(c);
                entries[c0 + c] = block.entry(c);
            }
        }
    }
    MonomialMatrix::new(perm, entries).expect("v_a is monomial")
}

/// The unique `a ∈ M_mu` with `v_a = v`.
pub fn matrix_of_v(v: &MonomialMatrix, mu: &Composition, field: &FieldSpec) -> Result<PolyMatrix, IndexError> {
    if !is_in_n_mu_fast(v, mu) {
        return Err(IndexError::NotInNMu(format!("{v} fails the membership conditions for {mu}")));
    }
    let l = mu.len();
    let starts = mu.block_starts();
    let block_of = |x: usize| starts.partition_point(|&s| s <= x) - 1;

    let mut degrees = vec![vec![0usize; l]; l];
    for c in 0..v.size() {
        degrees[block_of(v.row_of(c))][block_of(c)] += 1;
    }
    let offsets = sub_block_offsets(&degrees, mu);
    let mut entries = vec![vec![PolyFq::one(); l]; l];
    for i in 0..l {
        for j in 0..l {
            let d = degrees[i][j];
            let (r0, c0) = offsets[i][j];
            let mut perm = Vec::with_capacity(d);
            let mut vals = Vec::with_capacity(d);
            for c in c0..c0 + d {
                let r = v.row_of(c);
                if r < r0 || r >= r0 + d {
                    return Err(IndexError::NotInNMu(format!("sub-block ({}, {}) misplaced", i + 1, j + 1)));
                }
                perm.push(r - r0);
                vals.push(v.entry(c));
            }
            let block = MonomialMatrix::new(perm, vals)?;
            entries[i][j] = poly_of_v(&block, field).ok_or_else(|| {
                IndexError::NotInNMu(format!("sub-block ({}, {}) is not of the form v_(f)", i + 1, j + 1))
            })?;
        }
    }
    let a = PolyMatrix::new(entries, mu.clone())?;
    if v_of_matrix(&a, field) != *v {
        return Err(IndexError::NotInNMu("reconstruction does not reproduce the input".into()));
    }
    Ok(a)
}

/// Membership in N_mu via the combinatorial conditions on pairs of columns:
/// for all `i < j` with `v(i) < v(j)`,
///  (i)   `i ∉ B, v(i) ∈ B  ⇒ j ≠ i+1`,
///  (ii)  `i ∈ B, v(i) ∉ B  ⇒ v(j) ≠ v(i)+1`,
///  (iii) `i, v(i) ∉ B  ⇒ (j = i+1 ⇔ v(j) = v(i)+1)`,
///  (iii') `i, v(i) ∉ B` and `v(j) = v(i)+1` ⇒ columns `i` and `i+1` carry equal scalars.
pub fn is_in_n_mu_fast(v: &MonomialMatrix, mu: &Composition) -> bool {
    let n = v.size();
    if mu.size() != n {
        return false;
    }
    let mut boundary = vec![false; n + 1];
    for b in mu.boundary_set() {
        boundary[b] = true;
    }
    // 1-based positions throughout, to match the conditions.
    let row = |i: usize| v.row_of(i - 1) + 1;
    for i in 1..=n {
        let (bi, bvi) = (boundary[i], boundary[row(i)]);
        for j in i + 1..=n {
            if row(i) >= row(j) {
                continue;
            }
            let adjacent_cols = j == i + 1;
            let adjacent_rows = row(j) == row(i) + 1;
            match (bi, bvi) {
                (false, true) if adjacent_cols => return false,
                (true, false) if adjacent_rows => return false,
                (false, false) => {
                    if adjacent_cols != adjacent_rows {
                        return false;
                    }
                    if adjacent_rows && v.entry(i - 1) != v.entry(i) {
                        return false;
                    }
                }
                _ => {}
            }
        }
    }
    true
}

/// Membership in N_mu straight from the definition: for every `u ∈ U` with
/// `v u v^{-1} ∈ U`, `psi_mu(u) = psi_mu(v u v^{-1})`.
pub fn is_in_n_mu_direct(v: &MonomialMatrix, mu: &Composition, field: &FieldSpec) -> Result<bool, IndexError> {
    let n = v.size();
    if mu.size() != n {
        return Ok(false);
    }
    guard::check("|U|", guard::unipotent_order(field.q(), n), guard::DIRECT_TEST_MAX_U)?;
    let vg = v.to_gl();
    let v_inv = vg.inverse(field).expect("monomial matrices are invertible");
    for u in GlMatrix::unipotent_iter(n, field) {
        let conj = vg.mul(&u, field).mul(&v_inv, field);
        if !conj.is_unipotent_upper() {
            continue;
        }
        if psi_mu_exponent(&u, mu, field) != psi_mu_exponent(&conj, mu, field) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All of N: permutations in lexicographic order, then entry vectors in
/// lexicographic order.
pub fn enumerate_n(field: &FieldSpec, n: usize) -> Vec<MonomialMatrix> {
    let units: Vec<FqElement> = field.units().collect();
    let perms = permutations(n);
    let mut entry_vectors: Vec<Vec<FqElement>> = vec![Vec::new()];
    for _ in 0..n {
        entry_vectors = entry_vectors
            .into_iter()
            .flat_map(|prefix| {
                units.iter().map(move |&u| {
                    let mut v = prefix.clone();
                    v.push(u);
                    v
                })
            })
            .collect();
    }
    perms
        .iter()
        .flat_map(|p| entry_vectors.iter().map(|e| MonomialMatrix { perm: p.clone(), entries: e.clone() }))
        .collect()
}

/// Brute-force N_mu: the elements of N passing the fast test.
pub fn enumerate_n_mu(field: &FieldSpec, mu: &Composition) -> Vec<MonomialMatrix> {
    enumerate_n(field, mu.size()).into_iter().filter(|v| is_in_n_mu_fast(v, mu)).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Nonnegative l x l integer matrices with all row sums and column sums equal
/// to `mu`, in row-major lexicographic order.
pub fn degree_matrices(mu: &Composition) -> Vec<Vec<Vec<usize>>> {
    let l = mu.len();
    let target = mu.parts();
    let mut out = Vec::new();
    let mut cells = vec![0usize; l * l];
    let mut col_left = target.to_vec();
    fn rec(
        pos: usize,
        l: usize,
        target: &[usize],
        row_left: usize,
        cells: &mut Vec<usize>,
        col_left: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if pos == l * l {
            if col_left.iter().all(|&c| c == 0) {
                out.push(cells.chunks(l).map(<[usize]>::to_vec).collect());
            }
            return;
        }
        let (i, j) = (pos / l, pos % l);
        let last_in_row = j == l - 1;
        let range = if last_in_row { row_left..=row_left } else { 0..=row_left.min(col_left[j]) };
        for x in range {
            if x > col_left[j] {
                continue;
            }
            cells[pos] = x;
            col_left[j] -= x;
            let next_row_left = if last_in_row { target.get(i + 1).copied().unwrap_or(0) } else { row_left - x };
            rec(pos + 1, l, target, next_row_left, cells, col_left, out);
            col_left[j] += x;
        }
        cells[pos] = 0;
    }
    if l > 0 {
        rec(0, l, target, target[0], &mut cells, &mut col_left, &mut out);
    }
    out
}

/// All of M_mu, ordered by degree matrix and then entrywise by the canonical
/// polynomial order (row-major).
pub fn enumerate_m_mu(field: &FieldSpec, mu: &Composition) -> Vec<PolyMatrix> {
    let l = mu.len();
    let max_degree = mu.parts().iter().copied().max().unwrap_or(0);
    let units: Vec<Vec<PolyFq>> = (0..=max_degree).map(|d| enumerate_monic_units(field, d)).collect();
    let mut out = Vec::new();
    for degrees in degree_matrices(mu) {
        let choices: Vec<&Vec<PolyFq>> = degrees.iter().flatten().map(|&d| &units[d]).collect();
        let mut idx = vec![0usize; choices.len()];
        loop {
            let flat: Vec<PolyFq> = idx.iter().zip(&choices).map(|(&k, c)| c[k].clone()).collect();
            let entries = flat.chunks(l).map(<[PolyFq]>::to_vec).collect();
            out.push(PolyMatrix { mu: mu.clone(), entries });
            // odometer with the last cell fastest
            let mut pos = choices.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || choices.is_empty() {
                break;
            }
        }
    }
    out
}

/// Checks the bijection `M_mu -> N_mu` exhaustively: every `v_a` passes the
/// fast test, `matrix_of_v` inverts it, and the image is the brute-force
/// filter of N. For `n <= 3` the fast test is also compared with the direct
/// definition on all of N.
pub fn bijection_check(field: &FieldSpec, mu: &Composition) -> Result<CheckReport, IndexError> {
    let n = mu.size();
    guard::check("|N|", guard::monomial_count(field.q(), n), guard::ENUM_MAX)?;
    let mut report = CheckReport::new("bijection", n, field.q(), Some(mu));
    let start = Instant::now();
    let m = enumerate_m_mu(field, mu);
    let mut image = HashSet::new();
    for a in &m {
        let v = v_of_matrix(a, field);
        if !is_in_n_mu_fast(&v, mu) {
            report.fail(json!({ "a": a.render(field), "v": v.to_string(), "reason": "v_a fails the membership test" }));
        } else if matrix_of_v(&v, mu, field).as_ref() != Ok(a) {
            report
                .fail(json!({ "a": a.render(field), "v": v.to_string(), "reason": "matrix_of_v does not invert v_a" }));
        }
        image.insert(v);
    }
    report.time("forward", start);

    let start = Instant::now();
    let filtered: HashSet<MonomialMatrix> = enumerate_n_mu(field, mu).into_iter().collect();
    if image.len() != m.len() {
        report.fail("v_a is not injective");
    }
    if image != filtered {
        report.fail(
            json!({ "image_size": image.len(), "filter_size": filtered.len(), "reason": "image differs from N_mu" }),
        );
    }
    report.detail("m_mu_count", m.len());
    report.detail("n_mu_count", filtered.len());
    report.time("filter", start);

    if n <= 3 {
        let start = Instant::now();
        for v in enumerate_n(field, n) {
            if is_in_n_mu_fast(&v, mu) != is_in_n_mu_direct(&v, mu, field)? {
                report.fail(json!({ "v": v.to_string(), "reason": "fast and direct membership tests disagree" }));
            }
        }
        report.detail("direct_test_compared", true);
        report.time("direct", start);
    }
    Ok(report)
}
