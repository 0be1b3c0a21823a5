//! Finite fields F_q with q = p^k, backed by precomputed operation tables.
//!
//! Elements are stored as their coordinate vector in the basis 1, g, ..., g^{k-1}
//! packed into a single integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. The prime
//! subfield is therefore the range `0..p`, and the embedding F_p -> F_q is the
//! identity on packed values.

use std::fmt;
use std::sync::Arc;

use super::poly::PolyFq;
use super::GfError;

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u32 = 1024;

/// An element of some F_q, stored as packed coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElement(u32);

impl FqElement {
    pub const ZERO: FqElement = FqElement(0);
    pub const ONE: FqElement = FqElement(1);

    /// Packed index of the element, in `0..q`.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Raw constructor; the caller is responsible for `index < q`.
    /// Use [`FieldSpec::element`] for a checked version.
    pub(crate) fn from_index(index: u32) -> Self {
        FqElement(index)
    }
}

impl fmt::Debug for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fq({})", self.0)
    }
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    trace: Vec<u16>,
}

struct FieldInner {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus over F_p, low-degree coefficient first; empty for prime fields.
    modulus: Vec<u32>,
    tables: Tables,
}

/// The field F_q, q = p^k. Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.0.p)
            .field("k", &self.0.k)
            .field("modulus", &self.0.modulus)
            .finish()
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Builds F_{p^k}. For k > 1 the modulus is the lexicographically smallest
    /// monic irreducible of degree k over F_p, comparing coefficient tuples
    /// from the constant term upward.
    pub fn new(p: u32, k: u32) -> Result<Self, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if k == 0 {
            return Err(GfError::ZeroExtensionDegree);
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER as u64);
        let Some(q) = q else {
            return Err(GfError::FieldTooLarge { p, k });
        };
        let q = q as u32;
        if k == 1 {
            return Ok(Self::build(p, 1, q, Vec::new()));
        }
        let prime = Self::build(p, 1, p, Vec::new());
        let modulus = smallest_irreducible(&prime, k as usize);
        Ok(Self::build(p, k, q, modulus))
    }

    fn build(p: u32, k: u32, q: u32, modulus: Vec<u32>) -> Self {
        let qs = q as usize;
        let digits = |x: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(k as usize);
            let mut x = x;
            for _ in 0..k {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let pack = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        let mut neg = vec![0u16; qs];
        for x in 0..q {
            let dx = digits(x);
            neg[x as usize] = pack(&dx.iter().map(|&c| (p - c) % p).collect::<Vec<_>>()) as u16;
            for y in 0..q {
                let dy = digits(y);
                let s: Vec<u32> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[(x * q + y) as usize] = pack(&s) as u16;
                mul[(x * q + y) as usize] = pack(&mul_mod(&dx, &dy, &modulus, p)) as u16;
            }
        }
        let mut inv = vec![0u16; qs];
        for x in 1..q {
            let y = (1..q)
                .find(|&y| mul[(x * q + y) as usize] == 1)
                .expect("every nonzero element of a field has an inverse");
            inv[x as usize] = y as u16;
        }
        // trace(x) = x + x^p + ... + x^{p^{k-1}}
        let mut trace = vec![0u16; qs];
        for x in 0..q {
            let mut acc = 0u16;
            let mut frob = x as u16;
            for _ in 0..k {
                acc = add[acc as usize * qs + frob as usize];
                let mut next = 1u16;
                for _ in 0..p {
                    next = mul[next as usize * qs + frob as usize];
                }
                frob = next;
            }
            trace[x as usize] = acc;
        }
        FieldSpec(Arc::new(FieldInner { p, k, q, modulus, tables: Tables { add, mul, neg, inv, trace } }))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    /// Modulus coefficients over F_p (constant term first), `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        if self.0.k == 1 {
            None
        } else {
            Some(&self.0.modulus)
        }
    }

    pub fn zero(&self) -> FqElement {
        FqElement::ZERO
    }

    pub fn one(&self) -> FqElement {
        FqElement::ONE
    }

    /// All elements in packed-index order.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> {
        (0..self.0.q).map(FqElement)
    }

    /// Nonzero elements in packed-index order.
    pub fn units(&self) -> impl Iterator<Item = FqElement> {
        (1..self.0.q).map(FqElement)
    }

    /// Checked constructor from a packed index.
    pub fn element(&self, index: u32) -> Result<FqElement, GfError> {
        if index < self.0.q {
            Ok(FqElement(index))
        } else {
            Err(GfError::ForeignElement { index, q: self.0.q })
        }
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FqElement {
        FqElement(n.rem_euclid(self.0.p as i64) as u32)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<FqElement, GfError> {
        if coords.len() != self.0.k as usize || coords.iter().any(|&c| c >= self.0.p) {
            return Err(GfError::BadCoordinates(coords.to_vec()));
        }
        Ok(FqElement(coords.iter().rev().fold(0, |acc, &c| acc * self.0.p + c)))
    }

    /// Coordinates in the basis 1, g, ..., g^{k-1}.
    pub fn coords(&self, x: FqElement) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.0.k as usize);
        let mut i = x.0;
        for _ in 0..self.0.k {
            v.push(i % self.0.p);
            i /= self.0.p;
        }
        v
    }

    pub fn contains(&self, x: FqElement) -> bool {
        x.0 < self.0.q
    }

    #[inline]
    fn idx2(&self, x: FqElement, y: FqElement) -> usize {
        debug_assert!(self.contains(x) && self.contains(y), "element outside field");
        (x.0 * self.0.q + y.0) as usize
    }

    #[inline]
    pub fn add(&self, x: FqElement, y: FqElement) -> FqElement {
        FqElement(self.0.tables.add[self.idx2(x, y)] as u32)
    }

    #[inline]
    pub fn mul(&self, x: FqElement, y: FqElement) -> FqElement {
        FqElement(self.0.tables.mul[self.idx2(x, y)] as u32)
    }

    #[inline]
    pub fn neg(&self, x: FqElement) -> FqElement {
        FqElement(self.0.tables.neg[x.0 as usize] as u32)
    }

    #[inline]
    pub fn sub(&self, x: FqElement, y: FqElement) -> FqElement {
        self.add(x, self.neg(y))
    }

    pub fn inv(&self, x: FqElement) -> Result<FqElement, GfError> {
        if x.is_zero() {
            return Err(GfError::InverseOfZero);
        }
        Ok(FqElement(self.0.tables.inv[x.0 as usize] as u32))
    }

    pub fn div(&self, x: FqElement, y: FqElement) -> Result<FqElement, GfError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: FqElement, mut e: u64) -> FqElement {
        let mut base = x;
        let mut acc = FqElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Absolute trace to F_p, returned as an integer in `0..p`.
    pub fn trace(&self, x: FqElement) -> u32 {
        self.0.tables.trace[x.0 as usize] as u32
    }

    /// Operand-checked variants, for values that did not originate from this field.
    pub fn checked_add(&self, x: FqElement, y: FqElement) -> Result<FqElement, GfError> {
        self.element(x.0)?;
        self.element(y.0)?;
        Ok(self.add(x, y))
    }

    pub fn checked_mul(&self, x: FqElement, y: FqElement) -> Result<FqElement, GfError> {
        self.element(x.0)?;
        self.element(y.0)?;
        Ok(self.mul(x, y))
    }

    /// Formats one coefficient: an integer for prime fields, `[c0,c1,...]` otherwise.
    pub fn format_element(&self, x: FqElement) -> String {
        if self.is_prime_field() {
            x.0.to_string()
        } else {
            let c: Vec<String> = self.coords(x).iter().map(|c| c.to_string()).collect();
            format!("[{}]", c.join(","))
        }
    }
}

/// Schoolbook product of two coordinate vectors reduced by a monic modulus over F_p.
fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = a.len();
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    if modulus.is_empty() {
        prod.truncate(k);
        return prod;
    }
    // X^k = -(m_0 + ... + m_{k-1} X^{k-1})
    for d in (k..2 * k).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &m) in modulus[..k].iter().enumerate() {
            let sub = c * m % p;
            prod[d - k + i] = (prod[d - k + i] + p - sub) % p;
        }
    }
    prod.truncate(k);
    prod
}

/// Smallest monic irreducible of degree `k` over the prime field, under
/// lexicographic order on `(c_0, c_1, ..., c_{k-1})`.
fn smallest_irreducible(prime: &FieldSpec, k: usize) -> Vec<u32> {
    let p = prime.p();
    let total = (p as u64).pow(k as u32);
    for idx in 0..total {
        // c_0 is the most significant digit of the running index.
        let mut coeffs = vec![0u32; k + 1];
        let mut rest = idx;
        for i in (0..k).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[k] = 1;
        let poly = PolyFq::from_elements(coeffs.iter().map(|&c| prime.from_int(c as i64)).collect());
        if super::factor::is_irreducible(&poly, prime) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
