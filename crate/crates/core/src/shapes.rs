//! Compositions, partitions, skew shapes and column-strict tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("composition parts must be positive: {0:?}")]
    NonPositivePart(Vec<usize>),
    #[error("partition parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("inner shape {inner:?} does not fit inside {outer:?}")]
    BadSkew { outer: Vec<usize>, inner: Vec<usize> },
    #[error("rows {rows:?} do not match the shape row lengths {expected:?}")]
    RowMismatch { rows: Vec<usize>, expected: Vec<usize> },
    #[error("tableau is not column strict")]
    NotColumnStrict,
    #[error("shape size {shape} differs from weight size {weight}")]
    SizeMismatch { shape: usize, weight: usize },
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.contains(&0) {
            return Err(ShapeError::NonPositivePart(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums `{mu_1, mu_1 + mu_2, ...}`, in increasing order.
    pub fn boundary_set(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &m| {
                *acc += m;
                Some(*acc)
            })
            .collect()
    }

    /// Membership in the boundary set, for 1-based positions.
    pub fn is_boundary(&self, i: usize) -> bool {
        self.boundary_set().binary_search(&i).is_ok()
    }

    /// Starting offsets (0-based) of each block when `1..=n` is cut by the parts.
    pub fn block_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.0.len());
        let mut acc = 0;
        for &m in &self.0 {
            starts.push(acc);
            acc += m;
        }
        starts
    }

    /// All compositions of `n` in lexicographic order.
    pub fn all_of(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition(prefix.clone()));
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                rec(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = ShapeError;
    fn try_from(v: Vec<usize>) -> Result<Self, ShapeError> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts before validating.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self, ShapeError> {
        parts.retain(|&p| p > 0);
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `nu'_i = #{j : nu_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order starting from `(n)`.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for first in (1..=rest.min(max)).rev() {
                prefix.push(first);
                rec(rest - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ShapeError;
    fn try_from(v: Vec<usize>) -> Result<Self, ShapeError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

/// `outer / inner`; a straight shape has an empty inner partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::BadSkew { outer: outer.0, inner: inner.0 });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape { outer: shape, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells in each row.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.outer.len()).map(|i| self.outer.part(i) - self.inner.part(i)).collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> Self {
        SkewShape::straight(p)
    }
}

/// Weight vector: entry `i` counts occurrences of `i + 1`. Trailing zeros are
/// insignificant for equality.
#[derive(Clone, Debug, Default)]
pub struct Weight(Vec<usize>);

impl Weight {
    pub fn new(counts: Vec<usize>) -> Self {
        Weight(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// The counts with trailing zeros removed.
    pub fn trimmed(&self) -> &[usize] {
        let end = self.0.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
        &self.0[..end]
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Weight {}

impl From<&Composition> for Weight {
    fn from(c: &Composition) -> Self {
        Weight(c.0.clone())
    }
}

impl From<Vec<usize>> for Weight {
    fn from(v: Vec<usize>) -> Self {
        Weight(v)
    }
}

/// A filling of a (possibly skew) shape by positive integers. `rows[i]` lists
/// the entries of the cells of row `i`, left to right, starting after the
/// inner margin.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Pairs a shape with rows without validating either against the other;
    /// [`Tableau::cst_check`] reports a mismatch.
    pub fn with_shape(shape: SkewShape, rows: Vec<Vec<u32>>) -> Self {
        Tableau { shape, rows }
    }

    /// Straight-shape tableau whose shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, ShapeError> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lengths.clone()).map_err(|_| ShapeError::NotAPartition(lengths))?;
        Ok(Tableau { shape: SkewShape::straight(shape), rows })
    }

    pub fn empty() -> Self {
        Tableau { shape: SkewShape::straight(Partition::empty()), rows: Vec::new() }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Outer partition of the shape (the shape itself when straight).
    pub fn outer(&self) -> &Partition {
        &self.shape.outer
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row-reading word: rows top to bottom, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    fn check_rows(&self) -> Result<(), ShapeError> {
        let expected = self.shape.row_lengths();
        let rows: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        if rows != expected {
            return Err(ShapeError::RowMismatch { rows, expected });
        }
        Ok(())
    }

    /// Entry at absolute position `(row, col)` if that cell belongs to the shape.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        let start = self.shape.inner.part(row);
        col.checked_sub(start).and_then(|c| self.rows.get(row)?.get(c).copied())
    }

    /// Column strictness: entries positive, weakly increasing along rows and
    /// strictly increasing down columns.
    pub fn cst_check(&self) -> Result<bool, ShapeError> {
        self.check_rows()?;
        for (r, row) in self.rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return Ok(false);
            }
            if r == 0 {
                continue;
            }
            let start = self.shape.inner.part(r);
            for (c, &v) in row.iter().enumerate() {
                if let Some(above) = self.get(r - 1, start + c) {
                    if above >= v {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `wt(T)_i` = number of entries equal to `i`.
    pub fn cst_weight(&self) -> Result<Weight, ShapeError> {
        if !self.cst_check()? {
            return Err(ShapeError::NotColumnStrict);
        }
        Ok(self.content())
    }

    /// Entry counts without checking column strictness.
    pub(crate) fn content(&self) -> Weight {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0; max];
        for &v in self.rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        Weight(counts)
    }

    /// Appends `value` at the end of row `row`, growing the shape. Only valid
    /// for straight shapes; used by the insertion algorithms.
    pub(crate) fn push_to_row(&mut self, row: usize, value: u32) {
        debug_assert!(self.shape.is_straight());
        if row == self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[row].push(value);
        let lengths = self.rows.iter().map(Vec::len).collect();
        self.shape = SkewShape::straight(Partition(lengths));
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: u32) {
        self.rows[row][col] = value;
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("[{}]", join(r))).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// All column-strict fillings of `shape` with the given weight, ordered by
/// reading word. Their number is the Kostka number for straight shapes.
pub fn enumerate_cst(shape: &SkewShape, weight: &Weight) -> Result<Vec<Tableau>, ShapeError> {
    if shape.size() != weight.size() {
        return Err(ShapeError::SizeMismatch { shape: shape.size(), weight: weight.size() });
    }
    let outer = shape.outer.parts().to_vec();
    let rows = outer.len();
    let start: Vec<usize> = (0..rows).map(|i| shape.inner.part(i)).collect();
    let mut out = Vec::new();
    let mut fill: Vec<Vec<u32>> = vec![Vec::new(); rows];
    place_strips(&outer, &start, weight.trimmed(), 0, &mut fill, &mut out);
    let mut tableaux: Vec<Tableau> = out.into_iter().map(|rows| Tableau { shape: shape.clone(), rows }).collect();
    tableaux.sort_by_key(|a| a.reading_word());
    Ok(tableaux)
}

/// Number of column-strict tableaux of shape `shape` and weight `weight`.
pub fn kostka(shape: &Partition, weight: &Weight) -> usize {
    enumerate_cst(&SkewShape::straight(shape.clone()), weight).map_or(0, |v| v.len())
}

/// Adds the entries equal to `value + 1` as a horizontal strip on top of the
/// current filled shape `current`, then recurses on the next value.
fn place_strips(
    outer: &[usize],
    current: &[usize],
    weight: &[usize],
    value: usize,
    fill: &mut Vec<Vec<u32>>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if value == weight.len() {
        if current.iter().zip(outer).all(|(c, o)| c == o) {
            out.push(fill.clone());
        }
        return;
    }
    let mut next = current.to_vec();
    strips(outer, current, weight[value], 0, &mut next, &mut |next| {
        for (r, (&old, &new)) in current.iter().zip(next.iter()).enumerate() {
            fill[r].extend(std::iter::repeat_n((value + 1) as u32, new - old));
        }
        place_strips(outer, next, weight, value + 1, fill, out);
        for (r, (&old, &new)) in current.iter().zip(next.iter()).enumerate() {
            let len = fill[r].len();
            fill[r].truncate(len - (new - old));
        }
    });
}

/// Enumerates `next ⊇ current` with `next / current` a horizontal strip of
/// `remaining` cells contained in `outer`.
fn strips(
    outer: &[usize],
    current: &[usize],
    remaining: usize,
    row: usize,
    next: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == outer.len() {
        if remaining == 0 {
            visit(next);
        }
        return;
    }
    let cap = if row == 0 { outer[0] } else { outer[row].min(current[row - 1]) };
    let lo = current[row];
    let hi = cap.max(lo).min(lo + remaining);
    for len in lo..=hi {
        next[row] = len;
        strips(outer, current, remaining - (len - lo), row + 1, next, visit);
    }
    next[row] = current[row];
}

/// All `gamma ⊇ nu` such that `gamma / nu` is a horizontal strip of size `n`.
pub fn horizontal_strip_extensions(nu: &Partition, n: usize) -> Vec<Partition> {
    let mut outer: Vec<usize> = nu.parts().to_vec();
    outer.push(0);
    let bound = nu.part(0) + n;
    let current = outer.clone();
    let caps: Vec<usize> = std::iter::once(bound).chain(outer.iter().copied()).take(outer.len()).collect();
    let mut out = Vec::new();
    let mut next = current.clone();
    strips(&caps, &current, n, 0, &mut next, &mut |g| {
        out.push(Partition::from_padded(g.to_vec()).expect("horizontal strips keep partitions"));
    });
    out
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[1, 1, 1]).conjugate(), part(&[3]));
        assert_eq!(part(&[3, 2]).conjugate(), part(&[2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[6, 3, 3, 2, 1]).conjugate(), part(&[5, 4, 3, 1, 1, 1]));
    }

    #[test]
    fn conjugate_is_involutive() {
        for n in 0..=8 {
            for p in Partition::all_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Composition::all_of(4).len(), 8);
        assert!(Composition::all_of(0).is_empty());
    }

    #[test]
    fn boundary_set_examples() {
        let mu = Composition::new(vec![2, 5, 3, 4]).unwrap();
        assert_eq!(mu.boundary_set(), vec![2, 7, 10, 14]);
        assert_eq!(mu.size(), 14);
        assert_eq!(mu.len(), 4);
        assert_eq!(Composition::new(vec![6]).unwrap().boundary_set(), vec![6]);
        assert_eq!(Composition::new(vec![1, 1, 1]).unwrap().boundary_set(), vec![1, 2, 3]);
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn cst_check_examples() {
        assert_eq!(tab(&[&[1, 1], &[2]]).cst_check(), Ok(true));
        assert_eq!(tab(&[&[1, 1], &[1]]).cst_check(), Ok(false));
        assert_eq!(tab(&[&[2, 1]]).cst_check(), Ok(false));
        let bad = Tableau::with_shape(part(&[2, 1]).into(), vec![vec![1, 2]]);
        assert!(matches!(bad.cst_check(), Err(ShapeError::RowMismatch { .. })));
    }

    #[test]
    fn cst_check_skew() {
        let shape = SkewShape::new(part(&[3, 2]), part(&[2])).unwrap();
        // row 0 has one cell at column 2; row 1 has cells at columns 0, 1
        let t = Tableau::with_shape(shape.clone(), vec![vec![1], vec![1, 1]]);
        assert_eq!(t.cst_check(), Ok(true));
        let shape = SkewShape::new(part(&[3, 2]), part(&[1])).unwrap();
        let t = Tableau::with_shape(shape, vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(t.cst_check(), Ok(false));
    }

    #[test]
    fn cst_weight_examples() {
        let q = tab(&[&[1, 1, 1, 2, 4, 4], &[2, 2, 6], &[3, 4, 7], &[4, 6], &[5]]);
        assert_eq!(q.cst_weight().unwrap(), Weight::new(vec![3, 3, 1, 4, 1, 2, 1]));
        assert_eq!(tab(&[&[1, 1], &[2]]).cst_weight().unwrap(), Weight::new(vec![2, 1]));
        assert_eq!(Tableau::empty().cst_weight().unwrap(), Weight::new(vec![]));
        assert_eq!(tab(&[&[1, 1], &[1]]).cst_weight(), Err(ShapeError::NotColumnStrict));
    }

    #[test]
    fn weight_equality_ignores_trailing_zeros() {
        assert_eq!(Weight::new(vec![2, 1, 0, 0]), Weight::new(vec![2, 1]));
        assert_ne!(Weight::new(vec![0, 2, 1]), Weight::new(vec![2, 1]));
    }

    #[test]
    fn enumerate_cst_examples() {
        let w = |v: &[usize]| Weight::new(v.to_vec());
        let got = enumerate_cst(&part(&[2, 1]).into(), &w(&[1, 1, 1])).unwrap();
        assert_eq!(got, vec![tab(&[&[1, 2], &[3]]), tab(&[&[1, 3], &[2]])]);
        for lambda in Partition::all_of(5) {
            let forced = enumerate_cst(&lambda.clone().into(), &w(lambda.parts())).unwrap();
            assert_eq!(forced.len(), 1);
        }
        assert!(enumerate_cst(&part(&[1, 1]).into(), &w(&[2])).unwrap().is_empty());
        assert!(matches!(enumerate_cst(&part(&[2]).into(), &w(&[1])), Err(ShapeError::SizeMismatch { .. })));
    }

    /// Every assignment of the weight multiset to the cells, filtered by cst_check.
    fn brute_force_cst(shape: &Partition, weight: &[usize]) -> Vec<Tableau> {
        let values: Vec<u32> =
            weight.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i as u32 + 1, c)).collect();
        let mut perms = Vec::new();
        let mut used = vec![false; values.len()];
        fn rec(values: &[u32], used: &mut [bool], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == values.len() {
                out.push(cur.clone());
                return;
            }
            for i in 0..values.len() {
                if used[i] {
                    continue;
                }
                used[i] = true;
                cur.push(values[i]);
                rec(values, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
        rec(&values, &mut used, &mut Vec::new(), &mut perms);
        perms.sort();
        perms.dedup();
        perms
            .into_iter()
            .filter_map(|word| {
                let mut rows = Vec::new();
                let mut it = word.into_iter();
                for &len in shape.parts() {
                    rows.push(it.by_ref().take(len).collect());
                }
                let t = Tableau::from_rows(rows).unwrap();
                t.cst_check().unwrap().then_some(t)
            })
            .collect()
    }

    #[test]
    fn enumerate_cst_matches_brute_force() {
        for n in 0..=5 {
            for lambda in Partition::all_of(n) {
                for mu in Composition::all_of(n)
                    .iter()
                    .map(|c| c.parts().to_vec())
                    .chain(std::iter::once(vec![]).filter(|_| n == 0))
                {
                    let got = enumerate_cst(&lambda.clone().into(), &Weight::new(mu.clone())).unwrap();
                    let expected = brute_force_cst(&lambda, &mu);
                    assert_eq!(got, expected, "shape {lambda}, weight {mu:?}");
                }
            }
        }
    }

    #[test]
    fn enumerate_cst_outputs_are_valid_and_distinct() {
        for n in 1..=6 {
            for lambda in Partition::all_of(n) {
                for mu in Partition::all_of(n) {
                    let w = Weight::new(mu.parts().to_vec());
                    let got = enumerate_cst(&lambda.clone().into(), &w).unwrap();
                    for t in &got {
                        assert_eq!(t.cst_weight().unwrap(), w);
                    }
                    let mut dedup = got.clone();
                    dedup.dedup();
                    assert_eq!(dedup.len(), got.len());
                    if lambda == mu {
                        assert_eq!(got.len(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_values() {
        let w = |v: &[usize]| Weight::new(v.to_vec());
        assert_eq!(kostka(&part(&[3, 2]), &w(&[1, 1, 1, 1, 1])), 5);
        assert_eq!(kostka(&part(&[2, 2]), &w(&[2, 1, 1])), 1);
        assert_eq!(kostka(&part(&[3, 1]), &w(&[2, 1, 1])), 2);
        assert_eq!(kostka(&part(&[2, 1, 1]), &w(&[3, 1])), 0);
    }

    #[test]
    fn pieri_shapes_agree_with_skew_fillings() {
        for size in 0..=4 {
            for nu in Partition::all_of(size) {
                for n in 1..=3 {
                    let mut by_strip = horizontal_strip_extensions(&nu, n);
                    by_strip.sort();
                    let mut by_filling: Vec<Partition> = Partition::all_of(size + n)
                        .into_iter()
                        .filter(|g| g.contains(&nu))
                        .filter(|g| {
                            let skew = SkewShape::new(g.clone(), nu.clone()).unwrap();
                            !enumerate_cst(&skew, &Weight::new(vec![n])).unwrap().is_empty()
                        })
                        .collect();
                    by_filling.sort();
                    assert_eq!(by_strip, by_filling, "nu = {nu}, n = {n}");
                }
            }
        }
    }
}
