use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An element `Σ_{i=0}^{p-2} a_i ζ^i` of Q(ζ_p) with exact rational
/// coordinates. The power basis `1, ζ, ..., ζ^{p-2}` makes the representation
/// unique, so equality is coordinatewise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    p: u32,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(p: u32) -> Self {
        Cyclotomic { p, coords: vec![BigRational::zero(); (p - 1) as usize] }
    }

    pub fn one(p: u32) -> Self {
        Self::from_rational(p, BigRational::one())
    }

    pub fn from_rational(p: u32, r: BigRational) -> Self {
        let mut c = Self::zero(p);
        c.coords[0] = r;
        c
    }

    pub fn from_int(p: u32, n: i64) -> Self {
        Self::from_rational(p, BigRational::from_integer(BigInt::from(n)))
    }

    /// `ζ_p^e`.
    pub fn zeta_pow(p: u32, e: u32) -> Self {
        let mut c = Self::zero(p);
        c.add_zeta_pow(e % p, &BigRational::one());
        c
    }

    /// Builds from exactly `p - 1` coordinates.
    pub fn from_coords(p: u32, coords: Vec<BigRational>) -> Option<Self> {
        (coords.len() == (p - 1) as usize).then_some(Cyclotomic { p, coords })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    /// Adds `r ζ^e` in place, reducing `ζ^{p-1} = -(1 + ... + ζ^{p-2})`.
    fn add_zeta_pow(&mut self, e: u32, r: &BigRational) {
        let e = (e % self.p) as usize;
        if e + 1 < self.p as usize {
            self.coords[e] += r;
        } else {
            for c in &mut self.coords {
                *c -= r;
            }
        }
    }

    fn check(&self, other: &Cyclotomic) {
        assert_eq!(self.p, other.p, "cyclotomic fields differ");
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        self.check(other);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Cyclotomic { p: self.p, coords }
    }

    pub fn add_assign(&mut self, other: &Cyclotomic) {
        self.check(other);
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic { p: self.p, coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        Cyclotomic { p: self.p, coords: self.coords.iter().map(|a| a * r).collect() }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        self.check(other);
        let mut out = Cyclotomic::zero(self.p);
        for (i, a) in self.coords.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coords.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out.add_zeta_pow((i + j) as u32, &(a * b));
            }
        }
        out
    }

    /// Image under the automorphism `ζ -> ζ^k`.
    pub fn galois(&self, k: u32) -> Cyclotomic {
        let mut out = Cyclotomic::zero(self.p);
        for (i, a) in self.coords.iter().enumerate() {
            out.add_zeta_pow((i as u64 * k as u64 % self.p as u64) as u32, a);
        }
        out
    }

    /// Inverse via the norm: `x^{-1} = Π_{k≠1} σ_k(x) / N(x)`.
    pub fn inv(&self) -> Option<Cyclotomic> {
        if self.is_zero() {
            return None;
        }
        let others = (2..self.p).fold(Cyclotomic::one(self.p), |acc, k| acc.mul(&self.galois(k)));
        let norm = self.mul(&others).to_rational().expect("the norm is rational");
        Some(others.scale(&norm.recip()))
    }

    pub fn div(&self, other: &Cyclotomic) -> Option<Cyclotomic> {
        other.inv().map(|inv| self.mul(&inv))
    }

    /// Coordinates as rational strings, e.g. `["1/2", "0"]`.
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| match i {
                0 => format!("{a}"),
                _ => format!("({a})*z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
