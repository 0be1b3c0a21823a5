//! Enumeration of monic polynomials and factorization by trial division.

use super::field::{FieldSpec, FqElement};
use super::poly::PolyFq;
use super::GfError;

/// Unit times a product of powers of distinct monic irreducibles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FqElement,
    /// Sorted in the canonical polynomial order.
    pub factors: Vec<(PolyFq, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self, field: &FieldSpec) -> PolyFq {
        self.factors.iter().fold(PolyFq::constant(self.unit), |acc, (f, e)| acc.mul(&f.pow(*e, field), field))
    }

    pub fn multiplicity(&self, f: &PolyFq) -> u32 {
        self.factors.iter().find(|(g, _)| g == f).map_or(0, |(_, e)| *e)
    }
}

/// All monic polynomials of degree `n`, in canonical order.
pub fn enumerate_monic(field: &FieldSpec, n: usize) -> Vec<PolyFq> {
    let q = field.q() as u64;
    let total = q.pow(n as u32);
    (0..total)
        .map(|idx| {
            let mut coeffs = Vec::with_capacity(n + 1);
            let mut rest = idx;
            for _ in 0..n {
                coeffs.push(FqElement::from_index((rest % q) as u32));
                rest /= q;
            }
            coeffs.push(FqElement::ONE);
            PolyFq::from_elements(coeffs)
        })
        .collect()
}

/// All monic polynomials of degree `n` with nonzero constant term, in
/// canonical order. For `n = 0` this is just the polynomial 1.
pub fn enumerate_monic_units(field: &FieldSpec, n: usize) -> Vec<PolyFq> {
    if n == 0 {
        return vec![PolyFq::one()];
    }
    enumerate_monic(field, n).into_iter().filter(|f| !f.constant_term().is_zero()).collect()
}

/// True iff `f` has positive degree and no monic divisor of degree
/// `1..=deg(f)/2`.
pub fn is_irreducible(f: &PolyFq, field: &FieldSpec) -> bool {
    let Some(deg) = f.degree().filter(|&d| d >= 1) else {
        return false;
    };
    for d in 1..=deg / 2 {
        for g in enumerate_monic(field, d) {
            let (_, r) = f.divrem(&g, field).expect("monic divisor is nonzero");
            if r.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Monic irreducibles of degree `1..=max_degree` with nonzero constant term
/// (so X itself is excluded), sorted by degree and then canonical order.
pub fn enumerate_irreducibles(field: &FieldSpec, max_degree: usize) -> Result<Vec<PolyFq>, GfError> {
    if max_degree == 0 {
        return Err(GfError::BadArgument("max_degree must be at least 1".into()));
    }
    let mut found: Vec<PolyFq> = Vec::new();
    for d in 1..=max_degree {
        let fresh: Vec<PolyFq> = enumerate_monic_units(field, d)
            .into_iter()
            .filter(|f| {
                found
                    .iter()
                    .take_while(|g| 2 * g.degree().unwrap() <= d)
                    .all(|g| !f.divrem(g, field).unwrap().1.is_zero())
            })
            .collect();
        found.extend(fresh);
    }
    Ok(found)
}

/// Factorization into monic irreducibles by trial division, degree by degree.
pub fn factorize(f: &PolyFq, field: &FieldSpec) -> Result<Factorization, GfError> {
    let Some(lead) = f.leading() else {
        return Err(GfError::ZeroPolynomial);
    };
    let mut rest = f.scale(field.inv(lead)?, field);
    let mut factors = Vec::new();

    let x_power = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if x_power > 0 {
        factors.push((PolyFq::x(), x_power as u32));
        rest = PolyFq::from_elements(rest.coeffs()[x_power..].to_vec());
    }

    let mut d = 1;
    while rest.degree().unwrap() >= 1 {
        if 2 * d > rest.degree().unwrap() {
            factors.push((rest, 1));
            break;
        }
        for g in enumerate_monic_units(field, d) {
            if !is_irreducible(&g, field) {
                continue;
            }
            let mut e = 0;
            loop {
                let (quot, r) = rest.divrem(&g, field)?;
                if !r.is_zero() {
                    break;
                }
                rest = quot;
                e += 1;
            }
            if e > 0 {
                factors.push((g, e));
            }
        }
        d += 1;
    }
    factors.sort();
    Ok(Factorization { unit: lead, factors })
}
