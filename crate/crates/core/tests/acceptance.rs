//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints its PASS/FAIL line; exits nonzero if any criterion fails.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use hecke::decomp::{h_hat, pieri_check, schur_from_tableaux, schur_jacobi_trudi, weight_space_dims};
use hecke::gf::{FieldSpec, FqElement, PolyFq};
use hecke::hecke_index::{
    enumerate_m_mu, enumerate_n, enumerate_n_mu, is_in_n_mu_direct, is_in_n_mu_fast, matrix_of_v, v_of_matrix,
    v_of_poly, MonomialMatrix, PolyMatrix,
};
use hecke::oracle::{algebra_mul, basis_check, commutativity_check, e_mu, levi_embedding_check, t_v};
use hecke::rsk::{enumerate_pairs, rsk_classical, rsk_generalized, two_line_array, DegreeMatrix};
use hecke::shapes::{Composition, Partition, Tableau, Weight};

type Outcome = Result<(), String>;
type Criterion = (u32, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field(p: u32) -> FieldSpec {
    FieldSpec::new(p, 1).unwrap()
}

fn comp(v: &[usize]) -> Composition {
    Composition::new(v.to_vec()).unwrap()
}

fn tab(rows: &[&[u32]]) -> Tableau {
    Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn criterion_1() -> Outcome {
    let b = DegreeMatrix::new(vec![vec![1, 1, 0], vec![0, 0, 2], vec![0, 1, 0]]).unwrap();
    let arr = two_line_array(&b);
    ensure(arr.top() == [1, 1, 2, 2, 3] && arr.bottom() == [2, 1, 3, 3, 2], || format!("two-line array {arr:?}"))?;
    let (p, q) = rsk_classical(&b);
    ensure(p == tab(&[&[1, 2, 3], &[2, 3]]), || format!("P = {p:?}"))?;
    ensure(q == tab(&[&[1, 1, 3], &[2, 2]]), || format!("Q = {q:?}"))
}

fn criterion_2() -> Outcome {
    let f5 = field(5);
    for a in f5.units() {
        for b in f5.units() {
            for c in f5.units() {
                let coeffs = vec![a, FqElement::ZERO, FqElement::ZERO, b, c, FqElement::ZERO, f5.one()];
                let v = v_of_poly(&PolyFq::from_elements(coeffs), &f5).map_err(|e| e.to_string())?;
                let placed: BTreeMap<(usize, usize), FqElement> =
                    [((1, 5), c), ((2, 6), c), ((3, 4), b), ((4, 1), a), ((5, 2), a), ((6, 3), a)]
                        .into_iter()
                        .collect();
                for i in 1..=6 {
                    for j in 1..=6 {
                        let want = placed.get(&(i, j)).copied().unwrap_or(FqElement::ZERO);
                        ensure(v.get(i - 1, j - 1) == want, || format!("(a,b,c)=({a:?},{b:?},{c:?}) entry ({i},{j})"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let f2 = field(2);
    let poly = |s: &str| PolyFq::parse(s, &f2).unwrap();
    let (f, g, h, one) = (poly("X+1"), poly("X^2+X+1"), poly("X^3+X+1"), PolyFq::one());
    let f2h = f.pow(2, &f2).mul(&h, &f2);
    let entries = vec![
        vec![g.clone(), f2h, one.clone(), one.clone()],
        vec![h.clone(), one.clone(), g.clone(), one.clone()],
        vec![one.clone(), one.clone(), f.clone(), f.pow(2, &f2)],
        vec![g.clone(), one.clone(), one.clone(), one.clone()],
    ];
    let mu = comp(&[7, 5, 3, 2]);
    let a = PolyMatrix::new(entries, mu.clone()).map_err(|e| e.to_string())?;
    let (p, q) = rsk_generalized(&a, &f2).map_err(|e| e.to_string())?;
    let expected_p = [(&f, tab(&[&[2, 2, 4], &[3, 4]])), (&g, tab(&[&[1, 1], &[3]])), (&h, tab(&[&[1, 2]]))];
    let expected_q = [(&f, tab(&[&[1, 1, 3], &[3, 3]])), (&g, tab(&[&[1, 4], &[2]])), (&h, tab(&[&[1, 2]]))];
    ensure(p.iter().count() == 3 && q.iter().count() == 3, || "unexpected labels".into())?;
    for (label, t) in expected_p {
        ensure(p.get(label) == Some(&t), || format!("P at {}", label.to_text(&f2)))?;
    }
    for (label, t) in expected_q {
        ensure(q.get(label) == Some(&t), || format!("Q at {}", label.to_text(&f2)))?;
    }
    let target = Weight::from(&mu);
    ensure(p.weighted_weight() == target && q.weighted_weight() == target, || "weighted weight".into())
}

/// Every n x n monomial matrix over the field, built here rather than
/// through the library enumeration.
fn all_monomials(field: &FieldSpec, n: usize) -> Vec<MonomialMatrix> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let units: Vec<FqElement> = field.units().collect();
    let mut entries: Vec<Vec<FqElement>> = vec![Vec::new()];
    for _ in 0..n {
        entries = entries.into_iter().flat_map(|e| units.iter().map(move |&u| [e.clone(), vec![u]].concat())).collect();
    }
    perms(n)
        .into_iter()
        .flat_map(|p| entries.iter().map(move |e| MonomialMatrix::new(p.clone(), e.clone()).unwrap()))
        .collect()
}

fn criterion_4() -> Outcome {
    for p in [2, 3] {
        let f = field(p);
        for n in 1..=4 {
            let all = all_monomials(&f, n);
            ensure(all.len() == enumerate_n(&f, n).len(), || format!("|N| for q={p} n={n}"))?;
            for mu in Composition::all_of(n) {
                let m = enumerate_m_mu(&f, &mu);
                let mut image = HashSet::new();
                for a in &m {
                    let v = v_of_matrix(a, &f);
                    ensure(is_in_n_mu_fast(&v, &mu), || format!("v_a outside N_mu, q={p} mu={mu}"))?;
                    ensure(matrix_of_v(&v, &mu, &f).as_ref() == Ok(a), || format!("roundtrip, q={p} mu={mu}"))?;
                    image.insert(v);
                }
                let filtered: HashSet<MonomialMatrix> =
                    all.iter().filter(|v| is_in_n_mu_fast(v, &mu)).cloned().collect();
                ensure(image.len() == m.len() && image == filtered, || format!("image vs filter, q={p} mu={mu}"))?;
                if n <= 3 {
                    for v in &all {
                        let direct = is_in_n_mu_direct(v, &mu, &f).map_err(|e| e.to_string())?;
                        ensure(direct == is_in_n_mu_fast(v, &mu), || format!("fast vs direct at {v}, q={p} mu={mu}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for p in [2, 3] {
        let f = field(p);
        for n in 1..=4 {
            for mu in Composition::all_of(n) {
                let m = enumerate_m_mu(&f, &mu);
                let mut image = HashSet::new();
                for a in &m {
                    ensure(image.insert(rsk_generalized(a, &f).map_err(|e| e.to_string())?), || {
                        format!("rsk_generalized not injective, q={p} mu={mu}")
                    })?;
                }
                let pairs = enumerate_pairs(&f, &mu).map_err(|e| e.to_string())?;
                let pair_set: HashSet<_> = pairs.iter().cloned().collect();
                ensure(pair_set == image, || format!("image vs enumerate_pairs, q={p} mu={mu}"))?;

                // pairs grouped by shape against the Kostka-product count
                let mut by_shape = BTreeMap::new();
                for (pt, _) in &pairs {
                    *by_shape.entry(pt.shape()).or_insert(0usize) += 1;
                }
                let table = h_hat(&f, &mu).map_err(|e| e.to_string())?;
                for (shape, count) in &by_shape {
                    let h = table.count(shape);
                    ensure(h * h == *count, || format!("pairs of one shape vs |H|^2, q={p} mu={mu}"))?;
                }
                let n_mu = enumerate_n_mu(&f, &mu).len();
                let squares = table.sum_of_squares();
                ensure(n_mu == m.len() && m.len() == squares, || {
                    format!("|N_mu|={n_mu} |M_mu|={} sum={squares}, q={p} mu={mu}", m.len())
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (n, p) in [(2, 2), (2, 3), (3, 2)] {
        let f = field(p);
        let commutative = commutativity_check(&f, n).map_err(|e| e.to_string())?;
        ensure(commutative.pass, || format!("H_(n) not commutative, n={n} q={p}"))?;
        let all = enumerate_n(&f, n);
        for mu in Composition::all_of(n) {
            let e = e_mu(&f, &mu).map_err(|e| e.to_string())?;
            let e2 = algebra_mul(&e, &e).map_err(|e| e.to_string())?;
            ensure(e2 == e, || format!("e_mu not idempotent, n={n} q={p} mu={mu}"))?;
            for v in &all {
                let nonzero = !t_v(v, &mu, &f).map_err(|e| e.to_string())?.is_zero();
                let member = is_in_n_mu_direct(v, &mu, &f).map_err(|e| e.to_string())?;
                ensure(nonzero == member, || format!("T_v at {v}, n={n} q={p} mu={mu}"))?;
            }
            let basis = basis_check(&f, &mu).map_err(|e| e.to_string())?;
            ensure(basis.pass, || format!("basis check, n={n} q={p} mu={mu}: {:?}", basis.counterexample))?;
            let levi = levi_embedding_check(&f, &mu).map_err(|e| e.to_string())?;
            ensure(levi.pass, || format!("Levi embedding, n={n} q={p} mu={mu}: {:?}", levi.counterexample))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let f2 = field(2);
    for n in 1..=3 {
        for mu in Composition::all_of(n) {
            let table = h_hat(&f2, &mu).map_err(|e| e.to_string())?;
            for (lambda, count) in &table.rows {
                let dims = weight_space_dims(&f2, lambda, &mu).map_err(|e| e.to_string())?;
                let total: usize = dims.iter().map(|(_, d)| d).sum();
                ensure(total == *count, || format!("mu={mu}: {total} != {count}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for size in 0..=5 {
        for nu in Partition::all_of(size) {
            for m in nu.len().max(1)..=5 {
                ensure(schur_jacobi_trudi(&nu, m) == schur_from_tableaux(&nu, m), || {
                    format!("s_{nu:?} in {m} variables")
                })?;
            }
        }
    }
    for size in 0..=4 {
        for nu in Partition::all_of(size) {
            for n in 1..=3 {
                for m in nu.len() + 1..=5 {
                    let report = pieri_check(&nu, n, m).map_err(|e| e.to_string())?;
                    ensure(report.pass, || format!("pieri nu={nu:?} n={n} m={m}"))?;
                }
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, criterion_1, Duration::from_secs(1)),
        (2, criterion_2, Duration::from_secs(1)),
        (3, criterion_3, Duration::from_secs(1)),
        (4, criterion_4, Duration::from_secs(120)),
        (5, criterion_5, Duration::from_secs(300)),
        (6, criterion_6, Duration::from_secs(600)),
        (7, criterion_7, Duration::from_secs(60)),
        (8, criterion_8, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (id, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= budget, || format!("took {:.2}s, budget {}s", elapsed.as_secs_f64(), budget.as_secs()))
        });
        match outcome {
            Ok(()) => println!("criterion {id}: PASS ({:.2}s)", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {id}: FAIL ({:.2}s) {msg}", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
