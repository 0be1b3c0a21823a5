//! Univariate polynomials over F_q.

use std::cmp::Ordering;

use super::field::{FieldSpec, FqElement};
use super::GfError;

/// A polynomial with coefficients in F_q, constant term first.
///
/// The representation is canonical: there are no trailing zero coefficients,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PolyFq {
    coeffs: Vec<FqElement>,
}

/// Canonical order used for every enumeration: by degree, then by coefficients
/// compared from the leading term down to the constant term.
impl Ord for PolyFq {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for PolyFq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PolyFq {
    pub fn zero() -> Self {
        PolyFq { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyFq { coeffs: vec![FqElement::ONE] }
    }

    /// The monomial X.
    pub fn x() -> Self {
        PolyFq { coeffs: vec![FqElement::ZERO, FqElement::ONE] }
    }

    pub fn constant(c: FqElement) -> Self {
        Self::from_elements(vec![c])
    }

    /// Builds from coefficients (constant term first), trimming trailing zeros.
    pub fn from_elements(mut coeffs: Vec<FqElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyFq { coeffs }
    }

    /// Builds from packed element indices, checking each against the field.
    pub fn from_indices(field: &FieldSpec, indices: &[u32]) -> Result<Self, GfError> {
        let coeffs = indices.iter().map(|&i| field.element(i)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_elements(coeffs))
    }

    pub fn coeffs(&self) -> &[FqElement] {
        &self.coeffs
    }

    /// Coefficient of X^d (zero past the degree).
    pub fn coeff(&self, d: usize) -> FqElement {
        self.coeffs.get(d).copied().unwrap_or(FqElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` as the sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FqElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(FqElement::ONE)
    }

    /// Constant term.
    pub fn constant_term(&self) -> FqElement {
        self.coeff(0)
    }

    /// Monic with nonzero constant term: the entries allowed in M_mu.
    pub fn is_monic_unit(&self) -> bool {
        self.is_monic() && !self.constant_term().is_zero()
    }

    pub fn add(&self, other: &PolyFq, field: &FieldSpec) -> PolyFq {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| field.add(self.coeff(i), other.coeff(i))).collect();
        PolyFq::from_elements(coeffs)
    }

    pub fn neg(&self, field: &FieldSpec) -> PolyFq {
        PolyFq { coeffs: self.coeffs.iter().map(|&c| field.neg(c)).collect() }
    }

    pub fn sub(&self, other: &PolyFq, field: &FieldSpec) -> PolyFq {
        self.add(&other.neg(field), field)
    }

    pub fn mul(&self, other: &PolyFq, field: &FieldSpec) -> PolyFq {
        if self.is_zero() || other.is_zero() {
            return PolyFq::zero();
        }
        let mut out = vec![FqElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        PolyFq::from_elements(out)
    }

    pub fn scale(&self, c: FqElement, field: &FieldSpec) -> PolyFq {
        PolyFq::from_elements(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn pow(&self, e: u32, field: &FieldSpec) -> PolyFq {
        (0..e).fold(PolyFq::one(), |acc, _| acc.mul(self, field))
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn divrem(&self, divisor: &PolyFq, field: &FieldSpec) -> Result<(PolyFq, PolyFq), GfError> {
        let Some(dd) = divisor.degree() else {
            return Err(GfError::DivisionByZero);
        };
        let lead_inv = field.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let Some(dn) = self.degree().filter(|&d| d >= dd) else {
            return Ok((PolyFq::zero(), self.clone()));
        };
        let mut quot = vec![FqElement::ZERO; dn - dd + 1];
        for shift in (0..=dn - dd).rev() {
            let c = field.mul(rem[shift + dd], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[shift] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = field.sub(rem[shift + i], field.mul(c, d));
            }
        }
        Ok((PolyFq::from_elements(quot), PolyFq::from_elements(rem)))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: FqElement, field: &FieldSpec) -> FqElement {
        self.coeffs.iter().rev().fold(FqElement::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
    }

    /// Text form, e.g. `1+1*X^1+1*X^3` over F_2 or `[1,0]+[0,1]*X^1` over F_4.
    pub fn to_text(&self, field: &FieldSpec) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, &c)| {
                let coeff = field.format_element(c);
                if d == 0 {
                    coeff
                } else {
                    format!("{coeff}*X^{d}")
                }
            })
            .collect();
        terms.join("+")
    }

    /// Parses the text form. Accepts an omitted `*`, an omitted `^1`, and an
    /// omitted coefficient in front of `X` (read as 1). Repeated degrees add up.
    pub fn parse(text: &str, field: &FieldSpec) -> Result<PolyFq, GfError> {
        let err = |why: &str| GfError::Parse(format!("{why} in polynomial {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut coeffs: Vec<FqElement> = Vec::new();
        for term in split_terms(&compact) {
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coeff_text, rest) = match term.find('X') {
                Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
                None => (term, None),
            };
            let coeff_text = coeff_text.strip_suffix('*').unwrap_or(coeff_text);
            let coeff = if coeff_text.is_empty() {
                if rest.is_none() {
                    return Err(err("missing coefficient"));
                }
                FqElement::ONE
            } else {
                parse_coefficient(coeff_text, field).map_err(|e| err(&e))?
            };
            let degree = match rest {
                None => 0,
                Some("") => 1,
                Some(r) => {
                    let r = r.strip_prefix('^').ok_or_else(|| err("expected '^' after X"))?;
                    r.parse::<usize>().map_err(|_| err("bad exponent"))?
                }
            };
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, FqElement::ZERO);
            }
            coeffs[degree] = field.add(coeffs[degree], coeff);
        }
        Ok(PolyFq::from_elements(coeffs))
    }
}

/// Splits on `+` outside of brackets.
fn split_terms(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_coefficient(s: &str, field: &FieldSpec) -> Result<FqElement, String> {
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let coords = inner
            .split(',')
            .map(|c| c.parse::<u32>().map_err(|_| format!("bad coordinate {c:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        field.from_coords(&coords).map_err(|e| e.to_string())
    } else {
        if !field.is_prime_field() {
            return Err(format!("extension-field coefficient {s:?} must be a coordinate vector"));
        }
        let v = s.parse::<u32>().map_err(|_| format!("bad coefficient {s:?}"))?;
        if v >= field.p() {
            return Err(format!("coefficient {v} out of range for p = {}", field.p()));
        }
        Ok(field.from_int(v as i64))
    }
}
