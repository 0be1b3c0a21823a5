use std::fmt;

use crate::gf::{FieldSpec, FqElement};
use crate::shapes::Composition;

/// A square matrix over F_q, stored row-major. Invertibility is checked by
/// the constructors that need it rather than stored as a type invariant, so
/// the same type also serves for intermediate products.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlMatrix {
    n: usize,
    data: Vec<FqElement>,
}

impl GlMatrix {
    pub fn zero(n: usize) -> Self {
        GlMatrix { n, data: vec![FqElement::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, FqElement::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<FqElement>]) -> Option<Self> {
        let n = rows.len();
        rows.iter().all(|r| r.len() == n).then(|| GlMatrix { n, data: rows.concat() })
    }

    /// The elementary matrix `x_ij(t) = 1 + t E_ij` (0-based indices).
    pub fn elementary(n: usize, i: usize, j: usize, t: FqElement) -> Self {
        let mut m = Self::identity(n);
        m.set(i, j, t);
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> FqElement {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: FqElement) {
        self.data[r * self.n + c] = x;
    }

    pub fn mul(&self, other: &GlMatrix, field: &FieldSpec) -> GlMatrix {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j);
                        out.set(i, j, field.add(cur, field.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self, field: &FieldSpec) -> Option<GlMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let scale = field.inv(a.get(col, col)).ok()?;
            a.scale_row(col, scale, field);
            inv.scale_row(col, scale, field);
            for r in 0..n {
                let factor = a.get(r, col);
                if r != col && !factor.is_zero() {
                    let neg = field.neg(factor);
                    a.add_row_multiple(r, col, neg, field);
                    inv.add_row_multiple(r, col, neg, field);
                }
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self, field: &FieldSpec) -> bool {
        self.inverse(field).is_some()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.n {
            self.data.swap(a * self.n + c, b * self.n + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: FqElement, field: &FieldSpec) {
        for c in 0..self.n {
            let x = self.get(r, c);
            self.set(r, c, field.mul(x, s));
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, s: FqElement, field: &FieldSpec) {
        for c in 0..self.n {
            let x = field.add(self.get(target, c), field.mul(s, self.get(source, c)));
            self.set(target, c, x);
        }
    }

    fn block_of(mu: &Composition, i: usize) -> usize {
        let starts = mu.block_starts();
        starts.partition_point(|&s| s <= i) - 1
    }

    /// Upper unitriangular: the subgroup U.
    pub fn is_unipotent_upper(&self) -> bool {
        (0..self.n).all(|r| (0..=r).all(|c| self.get(r, c) == if r == c { FqElement::ONE } else { FqElement::ZERO }))
    }

    /// Block upper triangular for the blocks of `mu`: the parabolic P_mu.
    pub fn is_in_parabolic(&self, mu: &Composition, field: &FieldSpec) -> bool {
        self.is_invertible(field) && self.block_support(mu, |bi, bj| bi > bj)
    }

    /// Block diagonal for the blocks of `mu`: the Levi subgroup L_mu.
    pub fn is_in_levi(&self, mu: &Composition, field: &FieldSpec) -> bool {
        self.is_invertible(field) && self.block_support(mu, |bi, bj| bi != bj)
    }

    /// Block upper triangular with identity diagonal blocks: the radical U_mu.
    pub fn is_in_unipotent_radical(&self, mu: &Composition) -> bool {
        self.block_support(mu, |bi, bj| bi > bj)
            && (0..self.n).all(|r| {
                (0..self.n).all(|c| {
                    Self::block_of(mu, r) != Self::block_of(mu, c)
                        || self.get(r, c) == if r == c { FqElement::ONE } else { FqElement::ZERO }
                })
            })
    }

    /// True iff every entry in a block pair selected by `forbidden` is zero.
    fn block_support(&self, mu: &Composition, forbidden: impl Fn(usize, usize) -> bool) -> bool {
        self.n == mu.size()
            && (0..self.n).all(|r| {
                (0..self.n)
                    .all(|c| !forbidden(Self::block_of(mu, r), Self::block_of(mu, c)) || self.get(r, c).is_zero())
            })
    }

    /// Every element of U, with the strictly upper entries read row by row
    /// as the digits of a counter (last entry fastest).
    pub fn unipotent_iter(n: usize, field: &FieldSpec) -> impl Iterator<Item = GlMatrix> {
        let positions: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let q = field.q() as u64;
        let total = q.pow(positions.len() as u32);
        (0..total).map(move |idx| {
            let mut m = GlMatrix::identity(n);
            let mut rest = idx;
            for &(i, j) in positions.iter().rev() {
                m.set(i, j, FqElement::from_index((rest % q) as u32));
                rest /= q;
            }
            m
        })
    }

    /// Every element of GL_n(F_q), in the same counter order over all n^2
    /// entries.
    pub fn gl_iter(n: usize, field: &FieldSpec) -> impl Iterator<Item = GlMatrix> + '_ {
        let q = field.q() as u64;
        let total = q.pow((n * n) as u32);
        (0..total)
            .map(move |idx| {
                let mut m = GlMatrix::zero(n);
                let mut rest = idx;
                for k in (0..n * n).rev() {
                    m.data[k] = FqElement::from_index((rest % q) as u32);
                    rest /= q;
                }
                m
            })
            .filter(move |m| m.is_invertible(field))
    }

    pub fn render(&self, field: &FieldSpec) -> Vec<Vec<String>> {
        (0..self.n).map(|r| (0..self.n).map(|c| field.format_element(self.get(r, c))).collect()).collect()
    }
}

impl fmt::Debug for GlMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<u32>> =
            self.data.chunks(self.n.max(1)).map(|r| r.iter().map(|x| x.index()).collect()).collect();
        write!(f, "{rows:?}")
    }
}
