use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use super::{Cyclotomic, GlMatrix, OracleError};
use crate::gf::{FieldSpec, FqElement};
use crate::guard;
use crate::hecke_index::{enumerate_n, is_in_n_mu_fast, matrix_of_v, v_of_matrix, MonomialMatrix, PolyMatrix};
use crate::report::CheckReport;
use crate::shapes::Composition;

/// `Σ_{i ∉ B_mu} Tr(u_{i,i+1}) mod p`, the exponent of ζ_p in `psi_mu(u)`.
/// `None` if `u` is not in U or its size differs from `|mu|`.
pub fn psi_mu_exponent(u: &GlMatrix, mu: &Composition, field: &FieldSpec) -> Option<u32> {
    let n = u.size();
    if n != mu.size() || !u.is_unipotent_upper() {
        return None;
    }
    let p = field.p();
    let sum = (1..n).filter(|&i| !mu.is_boundary(i)).map(|i| field.trace(u.get(i - 1, i))).sum::<u32>();
    Some(sum % p)
}

/// `psi_mu(u) = Π_{i ∉ B_mu} ψ(u_{i,i+1})` with `ψ(t) = ζ_p^{Tr(t)}`.
pub fn psi_mu_eval(u: &GlMatrix, mu: &Composition, field: &FieldSpec) -> Result<Cyclotomic, OracleError> {
    psi_mu_exponent(u, mu, field)
        .map(|e| Cyclotomic::zeta_pow(field.p(), e))
        .ok_or_else(|| OracleError::NotUnipotent(format!("{u:?}")))
}

/// A finitely supported function `GL_n(F_q) -> Q(ζ_p)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    field: FieldSpec,
    n: usize,
    support: BTreeMap<GlMatrix, Cyclotomic>,
}

impl GroupAlgebraElement {
    pub fn zero(field: &FieldSpec, n: usize) -> Self {
        GroupAlgebraElement { field: field.clone(), n, support: BTreeMap::new() }
    }

    /// The basis element `δ_g`.
    pub fn delta(field: &FieldSpec, g: GlMatrix) -> Self {
        let n = g.size();
        let mut support = BTreeMap::new();
        support.insert(g, Cyclotomic::one(field.p()));
        GroupAlgebraElement { field: field.clone(), n, support }
    }

    fn from_map(field: &FieldSpec, n: usize, map: HashMap<GlMatrix, Cyclotomic>) -> Self {
        let support = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        GroupAlgebraElement { field: field.clone(), n, support }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.support.len()
    }

    pub fn support(&self) -> impl Iterator<Item = (&GlMatrix, &Cyclotomic)> {
        self.support.iter()
    }

    pub fn coefficient(&self, g: &GlMatrix) -> Cyclotomic {
        self.support.get(g).cloned().unwrap_or_else(|| Cyclotomic::zero(self.field.p()))
    }

    fn compatible(&self, other: &Self) -> Result<(), OracleError> {
        if self.n != other.n || self.field != other.field {
            return Err(OracleError::Mismatch(format!(
                "n={} over F_{} vs n={} over F_{}",
                self.n,
                self.field.q(),
                other.n,
                other.field.q()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, OracleError> {
        self.compatible(other)?;
        let mut map: HashMap<GlMatrix, Cyclotomic> = self.support.clone().into_iter().collect();
        for (g, c) in &other.support {
            map.entry(g.clone()).or_insert_with(|| Cyclotomic::zero(self.field.p())).add_assign(c);
        }
        Ok(Self::from_map(&self.field, self.n, map))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let map = self.support.iter().map(|(g, x)| (g.clone(), x.mul(c))).collect();
        Self::from_map(&self.field, self.n, map)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, OracleError> {
        self.add(&other.scale(&Cyclotomic::from_int(self.field.p(), -1)))
    }

    /// Convolution product: `δ_g δ_h = δ_{gh}` extended bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self, OracleError> {
        self.compatible(other)?;
        let mut map: HashMap<GlMatrix, Cyclotomic> = HashMap::new();
        for (g, a) in &self.support {
            for (h, b) in &other.support {
                let gh = g.mul(h, &self.field);
                map.entry(gh).or_insert_with(|| Cyclotomic::zero(self.field.p())).add_assign(&a.mul(b));
            }
        }
        Ok(Self::from_map(&self.field, self.n, map))
    }
}

pub fn algebra_mul(x: &GroupAlgebraElement, y: &GroupAlgebraElement) -> Result<GroupAlgebraElement, OracleError> {
    x.mul(y)
}

fn check_sizes(field: &FieldSpec, n: usize) -> Result<(), OracleError> {
    guard::check("|U|", guard::unipotent_order(field.q(), n), guard::ORACLE_MAX_U)?;
    guard::check("|G|", guard::gl_order(field.q(), n), guard::ORACLE_MAX_G)?;
    Ok(())
}

/// `e_mu = (1/|U|) Σ_{u ∈ U} psi_mu(u^{-1}) u`.
pub fn e_mu(field: &FieldSpec, mu: &Composition) -> Result<GroupAlgebraElement, OracleError> {
    let n = mu.size();
    check_sizes(field, n)?;
    let p = field.p();
    let order = BigInt::from(guard::unipotent_order(field.q(), n));
    let weight = BigRational::new(BigInt::from(1), order);
    let map = GlMatrix::unipotent_iter(n, field)
        .map(|u| {
            let e = psi_mu_exponent(&u, mu, field).expect("u is unipotent");
            let coeff = Cyclotomic::zeta_pow(p, (p - e) % p).scale(&weight);
            (u, coeff)
        })
        .collect();
    Ok(GroupAlgebraElement::from_map(field, n, map))
}

/// `T_v = e_mu v e_mu`.
pub fn t_v(v: &MonomialMatrix, mu: &Composition, field: &FieldSpec) -> Result<GroupAlgebraElement, OracleError> {
    if v.size() != mu.size() {
        return Err(OracleError::Mismatch(format!("{v} is not of size {}", mu.size())));
    }
    let e = e_mu(field, mu)?;
    sandwich(&e, v, field)
}

fn sandwich(
    e: &GroupAlgebraElement,
    v: &MonomialMatrix,
    field: &FieldSpec,
) -> Result<GroupAlgebraElement, OracleError> {
    e.mul(&GroupAlgebraElement::delta(field, v.to_gl()))?.mul(e)
}

/// The basis `T_v, v ∈ N_mu` of `e_mu CG e_mu`, in the enumeration order of N.
pub struct HeckeBasis {
    pub field: FieldSpec,
    pub mu: Composition,
    pub e: GroupAlgebraElement,
    pub index: Vec<MonomialMatrix>,
    pub elements: Vec<GroupAlgebraElement>,
}

impl HeckeBasis {
    pub fn new(field: &FieldSpec, mu: &Composition) -> Result<Self, OracleError> {
        let e = e_mu(field, mu)?;
        let index: Vec<MonomialMatrix> =
            enumerate_n(field, mu.size()).into_iter().filter(|v| is_in_n_mu_fast(v, mu)).collect();
        let elements = index.iter().map(|v| sandwich(&e, v, field)).collect::<Result<_, _>>()?;
        Ok(HeckeBasis { field: field.clone(), mu: mu.clone(), e, index, elements })
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn position(&self, v: &MonomialMatrix) -> Option<usize> {
        self.index.iter().position(|w| w == v)
    }

    /// Expands `x` in the basis by reading coefficients at the monomial
    /// representatives. Returns the coordinates and the residual.
    pub fn expand(&self, x: &GroupAlgebraElement) -> Result<(Vec<Cyclotomic>, GroupAlgebraElement), OracleError> {
        let mut coords = Vec::with_capacity(self.len());
        let mut residual = x.clone();
        for (v, t) in self.index.iter().zip(&self.elements) {
            let g = v.to_gl();
            let c = x
                .coefficient(&g)
                .div(&t.coefficient(&g))
                .ok_or_else(|| OracleError::Counterexample(format!("T_v vanishes at v = {v}")))?;
            residual = residual.sub(&t.scale(&c))?;
            coords.push(c);
        }
        Ok((coords, residual))
    }
}

/// Structure constants `c[u][v][w]` of `T_u T_v = Σ_w c_{uv}^w T_w`.
pub struct StructureTable {
    pub mu: Composition,
    pub index: Vec<MonomialMatrix>,
    pub constants: Vec<Vec<Vec<Cyclotomic>>>,
}

impl StructureTable {
    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn get(&self, u: usize, v: usize, w: usize) -> &Cyclotomic {
        &self.constants[u][v][w]
    }

    /// First triple `(a, b, c)` with `(T_a T_b) T_c ≠ T_a (T_b T_c)` according to the table.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        let p = self.mu_p();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for x in 0..n {
                        let mut left = Cyclotomic::zero(p);
                        let mut right = Cyclotomic::zero(p);
                        for w in 0..n {
                            let (ab, bc) = (&self.constants[a][b][w], &self.constants[b][c][w]);
                            if !ab.is_zero() {
                                left.add_assign(&ab.mul(&self.constants[w][c][x]));
                            }
                            if !bc.is_zero() {
                                right.add_assign(&bc.mul(&self.constants[a][w][x]));
                            }
                        }
                        if left != right {
                            return Some((a, b, c));
                        }
                    }
                }
            }
        }
        None
    }

    /// First pair `(u, v)` with `c_{uv} ≠ c_{vu}`.
    pub fn commutativity_failure(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| self.constants[u][v] != self.constants[v][u])
    }

    fn mu_p(&self) -> u32 {
        self.constants.first().and_then(|r| r.first()).and_then(|c| c.first()).map_or(2, Cyclotomic::p)
    }
}

/// Computes the full structure-constant table; a nonzero residual in any
/// expansion is reported as a counterexample.
pub fn structure_constants(field: &FieldSpec, mu: &Composition) -> Result<StructureTable, OracleError> {
    let basis = HeckeBasis::new(field, mu)?;
    structure_constants_of(&basis)
}

fn structure_constants_of(basis: &HeckeBasis) -> Result<StructureTable, OracleError> {
    let mut constants = Vec::with_capacity(basis.len());
    for (u, tu) in basis.index.iter().zip(&basis.elements) {
        let mut row = Vec::with_capacity(basis.len());
        for (v, tv) in basis.index.iter().zip(&basis.elements) {
            let (coords, residual) = basis.expand(&tu.mul(tv)?)?;
            if !residual.is_zero() {
                return Err(OracleError::Counterexample(format!("T_u T_v leaves a residual for u = {u}, v = {v}")));
            }
            row.push(coords);
        }
        constants.push(row);
    }
    Ok(StructureTable { mu: basis.mu.clone(), index: basis.index.clone(), constants })
}

/// Checks for a single `mu`: `e_mu` idempotent, `T_v ≠ 0` exactly on N_mu,
/// disjoint supports, zero residuals and associativity.
pub fn basis_check(field: &FieldSpec, mu: &Composition) -> Result<CheckReport, OracleError> {
    let n = mu.size();
    let mut report = CheckReport::new("basis", n, field.q(), Some(mu));
    let start = Instant::now();
    let e = e_mu(field, mu)?;
    if e.mul(&e)? != e {
        report.fail("e_mu is not idempotent");
    }
    let mut nonzero = 0usize;
    let mut seen: HashSet<GlMatrix> = HashSet::new();
    let mut supports_disjoint = true;
    for v in enumerate_n(field, n) {
        let t = sandwich(&e, &v, field)?;
        if t.is_zero() == is_in_n_mu_fast(&v, mu) {
            report.fail(json!({ "v": v.to_string(), "t_v_zero": t.is_zero() }));
        }
        if !t.is_zero() {
            nonzero += 1;
            for (g, _) in t.support() {
                supports_disjoint &= seen.insert(g.clone());
            }
        }
    }
    if !supports_disjoint {
        report.fail("supports of distinct T_v overlap");
    }
    report.detail("dim", nonzero);
    report.time("basis", start);

    let start = Instant::now();
    match structure_constants(field, mu) {
        Ok(table) => {
            if let Some((a, b, c)) = table.associativity_failure() {
                report.fail(json!({ "associativity": [table.index[a].to_string(), table.index[b].to_string(), table.index[c].to_string()] }));
            }
        }
        Err(OracleError::Counterexample(msg)) => report.fail(msg),
        Err(err) => return Err(err),
    }
    report.time("structure_constants", start);
    Ok(report)
}

/// `T_u T_v = T_v T_u` for all `u, v ∈ N_(n)`, compared as group-algebra elements.
pub fn commutativity_check(field: &FieldSpec, n: usize) -> Result<CheckReport, OracleError> {
    let mu = Composition::new(vec![n]).map_err(|e| OracleError::Mismatch(e.to_string()))?;
    let mut report = CheckReport::new("commutativity", n, field.q(), Some(&mu));
    let start = Instant::now();
    let basis = HeckeBasis::new(field, &mu)?;
    'outer: for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (a, b) = (&basis.elements[i], &basis.elements[j]);
            if a.mul(b)? != b.mul(a)? {
                report.fail(json!({ "u": basis.index[i].to_string(), "v": basis.index[j].to_string() }));
                break 'outer;
            }
        }
    }
    report.detail("dim", basis.len());
    report.time("commutativity", start);
    Ok(report)
}

/// Checks that `T_(f_1) ⊗ ... ⊗ T_(f_l) -> T_a`, with `a` block diagonal
/// with diagonal `(f_i)`, is an injective algebra homomorphism
/// `H_(mu_1) ⊗ ... ⊗ H_(mu_l) -> H_mu`.
pub fn levi_embedding_check(field: &FieldSpec, mu: &Composition) -> Result<CheckReport, OracleError> {
    let mut report = CheckReport::new("levi", mu.size(), field.q(), Some(mu));
    let start = Instant::now();
    let big = structure_constants(field, mu)?;

    let mut factor_tables: BTreeMap<usize, StructureTable> = BTreeMap::new();
    for &m in mu.parts() {
        if let Entry::Vacant(e) = factor_tables.entry(m) {
            let part = Composition::new(vec![m]).expect("positive part");
            e.insert(structure_constants(field, &part)?);
        }
    }
    let factors: Vec<&StructureTable> = mu.parts().iter().map(|m| &factor_tables[m]).collect();

    // Each tensor of factor basis indices, in odometer order.
    let mut tensors: Vec<Vec<usize>> = vec![Vec::new()];
    for table in &factors {
        tensors = tensors
            .into_iter()
            .flat_map(|t| {
                (0..table.len()).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }

    let mut image = Vec::with_capacity(tensors.len());
    for t in &tensors {
        let diagonal = t
            .iter()
            .zip(&factors)
            .map(|(&k, table)| {
                let part = &table.mu;
                matrix_of_v(&table.index[k], part, field).map(|a| a.entry(0, 0).clone())
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| OracleError::Counterexample(e.to_string()))?;
        let a = PolyMatrix::block_diagonal(diagonal).map_err(|e| OracleError::Counterexample(e.to_string()))?;
        let v = v_of_matrix(&a, field);
        let Some(pos) = big.index.iter().position(|w| *w == v) else {
            report.fail(json!({ "not_in_basis": v.to_string() }));
            return Ok(report);
        };
        image.push(pos);
    }
    let distinct: HashSet<usize> = image.iter().copied().collect();
    if distinct.len() != image.len() {
        report.fail("two tensors map to the same basis element");
    }
    report.detail("tensor_dim", tensors.len());
    report.detail("dim", big.len());

    let p = field.p();
    'outer: for (s, ts) in tensors.iter().enumerate() {
        for (t, tt) in tensors.iter().enumerate() {
            let mut expected = vec![Cyclotomic::zero(p); big.len()];
            for (r, tr) in tensors.iter().enumerate() {
                let coeff = factors
                    .iter()
                    .enumerate()
                    .fold(Cyclotomic::one(p), |acc, (i, table)| acc.mul(table.get(ts[i], tt[i], tr[i])));
                expected[image[r]] = coeff;
            }
            if big.constants[image[s]][image[t]] != expected {
                report.fail(json!({ "u": big.index[image[s]].to_string(), "v": big.index[image[t]].to_string() }));
                break 'outer;
            }
        }
    }
    report.time("levi", start);
    Ok(report)
}

/// Partitions G into the double cosets `UvU`, `v ∈ N`, by orbit search under
/// the root subgroups `x_{i,i+1}(t)`. Returns each `v` with `|UvU|`.
pub fn double_coset_reps(field: &FieldSpec, n: usize) -> Result<Vec<(MonomialMatrix, u64)>, OracleError> {
    let group_order = guard::gl_order(field.q(), n);
    guard::check("|G|", group_order, guard::ORACLE_MAX_G)?;
    let mut generators = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for c in 0..field.k() as usize {
            generators.push(GlMatrix::elementary(n, i, i + 1, basis_element(field, c)));
        }
    }

    let mut seen: HashSet<GlMatrix> = HashSet::new();
    let mut out = Vec::new();
    for v in enumerate_n(field, n) {
        let start = v.to_gl();
        if seen.contains(&start) {
            return Err(OracleError::Counterexample(format!("{v} lies in an earlier double coset")));
        }
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        let mut size = 1u64;
        while let Some(g) = queue.pop_front() {
            for x in &generators {
                for h in [x.mul(&g, field), g.mul(x, field)] {
                    if seen.insert(h.clone()) {
                        size += 1;
                        queue.push_back(h);
                    }
                }
            }
        }
        out.push((v, size));
    }
    let total: u64 = out.iter().map(|(_, s)| s).sum();
    if total != group_order {
        return Err(OracleError::Counterexample(format!("double cosets cover {total} of {group_order} elements")));
    }
    Ok(out)
}

/// The F_p-basis element of F_q with a 1 in coordinate `c`.
fn basis_element(field: &FieldSpec, c: usize) -> FqElement {
    let mut coords = vec![0; field.k() as usize];
    coords[c] = 1;
    field.from_coords(&coords).expect("unit coordinate vector")
}
