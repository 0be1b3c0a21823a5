use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use hecke::gf::{FieldSpec, FqElement, PolyFq};
use hecke::hecke_index::{is_in_n_mu_fast, matrix_of_v, v_of_poly, PolyMatrix};
use hecke::oracle::Cyclotomic;
use hecke::rsk::{rsk_classical, DegreeMatrix};
use hecke::shapes::{Composition, Weight};

const FIELDS: [(u32, u32); 9] = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2)];

fn field_and_elements(count: usize) -> impl Strategy<Value = (FieldSpec, Vec<FqElement>)> {
    (0..FIELDS.len(), prop::collection::vec(any::<u32>(), count)).prop_map(|(i, raw)| {
        let (p, k) = FIELDS[i];
        let field = FieldSpec::new(p, k).unwrap();
        let xs = raw.iter().map(|r| field.element(r % field.q()).unwrap()).collect();
        (field, xs)
    })
}

/// A monic polynomial of degree `1..=6` with nonzero constant term.
fn monic_unit() -> impl Strategy<Value = (FieldSpec, PolyFq)> {
    (0..4usize, 1..=6usize, prop::collection::vec(any::<u32>(), 6)).prop_map(|(i, d, raw)| {
        let (p, k) = FIELDS[i];
        let field = FieldSpec::new(p, k).unwrap();
        let mut coeffs: Vec<FqElement> = raw[..d].iter().map(|r| field.element(r % field.q()).unwrap()).collect();
        if coeffs[0].is_zero() {
            coeffs[0] = field.one();
        }
        coeffs.push(field.one());
        (field, PolyFq::from_elements(coeffs))
    })
}

fn cyclotomic(p: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(-4i64..=4, (p - 1) as usize).prop_map(move |c| {
        let coords = c.into_iter().map(|x| BigRational::from_integer(BigInt::from(x))).collect();
        Cyclotomic::from_coords(p, coords).unwrap()
    })
}

proptest! {
    #[test]
    fn field_axioms((f, xs) in field_and_elements(3)) {
        let (a, b, c) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        // Frobenius is additive
        let p = f.p() as u64;
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }

    #[test]
    fn polynomial_text_roundtrip((f, g) in monic_unit()) {
        prop_assert_eq!(PolyFq::parse(&g.to_text(&f), &f).unwrap(), g);
    }

    #[test]
    fn single_block_roundtrip((f, g) in monic_unit()) {
        let d = g.degree().unwrap();
        let mu = Composition::new(vec![d]).unwrap();
        let v = v_of_poly(&g, &f).unwrap();
        prop_assert!(is_in_n_mu_fast(&v, &mu));
        let a = PolyMatrix::new(vec![vec![g.clone()]], mu.clone()).unwrap();
        prop_assert_eq!(matrix_of_v(&v, &mu, &f).unwrap(), a);
    }

    #[test]
    fn rsk_shape_weight_and_transpose(rows in prop::collection::vec(prop::collection::vec(0u32..3, 4), 1..4)) {
        let b = DegreeMatrix::new(rows).unwrap();
        let (p, q) = rsk_classical(&b);
        prop_assert_eq!(p.outer(), q.outer());
        prop_assert!(p.cst_check().unwrap() && q.cst_check().unwrap());
        prop_assert_eq!(p.cst_weight().unwrap(), Weight::new(b.column_sums()));
        prop_assert_eq!(q.cst_weight().unwrap(), Weight::new(b.row_sums()));
        prop_assert_eq!(rsk_classical(&b.transpose()), (q, p));
    }

    #[test]
    fn cyclotomic_field_ops(x in cyclotomic(5), y in cyclotomic(5)) {
        prop_assert_eq!(x.galois(2).mul(&y.galois(2)), x.mul(&y).galois(2));
        if !x.is_zero() {
            prop_assert_eq!(x.mul(&x.inv().unwrap()), Cyclotomic::one(5));
            prop_assert_eq!(x.mul(&y).div(&x).unwrap(), y);
        }
    }
}
