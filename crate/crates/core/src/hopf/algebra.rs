//! Finite-dimensional Hopf algebras by structure constants.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::group::FiniteGroup;
use crate::linalg::{Field, Mat};
use crate::report::{CheckEntry, CheckReport};

/// Sparse coefficient list `Σ c·e_i`.
pub type Sparse<F> = Vec<(usize, <F as Field>::Elem)>;
/// Sparse element of `H⊗H`: `Σ c·e_a⊗e_b`.
pub type Sparse2<F> = Vec<(usize, usize, <F as Field>::Elem)>;

/// Raw structure constants, validated by [`HopfAlgebra::new`].
#[derive(Clone, Debug)]
pub struct HopfParts<F: Field> {
    pub name: String,
    pub dim: usize,
    /// `mult[i][j]` = `e_i·e_j`.
    pub mult: Vec<Vec<Sparse<F>>>,
    pub unit: Vec<F::Elem>,
    /// `comult[i]` = `Δ(e_i)`.
    pub comult: Vec<Sparse2<F>>,
    pub counit: Vec<F::Elem>,
    /// Column `i` is `S(e_i)`.
    pub antipode: Mat<F>,
    /// Basis elements generating the algebra together with the unit; module
    /// maps are checked against these.
    pub generators: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra<F: Field> {
    field: F,
    parts: HopfParts<F>,
    group: Option<Arc<FiniteGroup>>,
}

impl<F: Field> PartialEq for HopfAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.parts.name == other.parts.name
            && self.parts.dim == other.parts.dim
            && self.parts.mult == other.parts.mult
            && self.parts.comult == other.parts.comult
            && self.parts.antipode == other.parts.antipode
    }
}

impl<F: Field> HopfAlgebra<F> {
    /// Validates all Hopf axioms and cocommutativity; the error names the
    /// first failing axiom.
    pub fn new(field: &F, parts: HopfParts<F>) -> Result<Self> {
        let h = Self::from_parts_unchecked(field, parts)?;
        let report = verify_hopf(&h);
        if let Some(bad) = report.failures().next() {
            return Err(Error::InvalidHopf(format!("{}: {}", bad.name, bad.details)));
        }
        Ok(h)
    }

    /// Only checks shapes. Used to build deliberately broken algebras.
    pub fn from_parts_unchecked(field: &F, parts: HopfParts<F>) -> Result<Self> {
        let n = parts.dim;
        let shape_ok = parts.mult.len() == n
            && parts.mult.iter().all(|r| r.len() == n && r.iter().all(|v| v.iter().all(|(k, _)| *k < n)))
            && parts.unit.len() == n
            && parts.comult.len() == n
            && parts.comult.iter().all(|v| v.iter().all(|(a, b, _)| *a < n && *b < n))
            && parts.counit.len() == n
            && parts.antipode.dims() == (n, n)
            && parts.generators.iter().all(|&g| g < n);
        if !shape_ok {
            return Err(Error::InvalidHopf("structure constants have inconsistent shapes".into()));
        }
        Ok(HopfAlgebra { field: field.clone(), parts, group: None })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn name(&self) -> &str {
        &self.parts.name
    }
    pub fn dim(&self) -> usize {
        self.parts.dim
    }
    pub fn parts(&self) -> &HopfParts<F> {
        &self.parts
    }
    pub fn generators(&self) -> &[usize] {
        &self.parts.generators
    }
    pub fn group(&self) -> Option<&Arc<FiniteGroup>> {
        self.group.as_ref()
    }
    pub fn basis_product(&self, i: usize, j: usize) -> &Sparse<F> {
        &self.parts.mult[i][j]
    }
    pub fn comult_of(&self, i: usize) -> &Sparse2<F> {
        &self.parts.comult[i]
    }
    pub fn counit_of(&self, i: usize) -> &F::Elem {
        &self.parts.counit[i]
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.parts.unit
    }
    pub fn antipode(&self) -> &Mat<F> {
        &self.parts.antipode
    }

    pub fn basis_vec(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn mul_vec(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, m) in &self.parts.mult[i][j] {
                    out[*k] = f.add(&out[*k], &f.mul(&c, m));
                }
            }
        }
        out
    }

    pub fn counit_vec(&self, v: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        v.iter().zip(&self.parts.counit).fold(f.zero(), |acc, (a, e)| f.add(&acc, &f.mul(a, e)))
    }

    pub fn antipode_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let col = Mat::column(&self.field, v);
        self.parts.antipode.mul(&col).expect("antipode is square").col_vec(0)
    }
}

/// The group algebra `k[G]`: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra<F: Field>(group: &FiniteGroup, field: &F) -> HopfAlgebra<F> {
    let n = group.order();
    let one = field.one();
    let parts = HopfParts {
        name: format!("k[{}]", group.name()),
        dim: n,
        mult: (0..n).map(|a| (0..n).map(|b| vec![(group.mul(a, b), one.clone())]).collect()).collect(),
        unit: (0..n).map(|a| if a == group.identity() { one.clone() } else { field.zero() }).collect(),
        comult: (0..n).map(|a| vec![(a, a, one.clone())]).collect(),
        counit: vec![one.clone(); n],
        antipode: Mat::permutation(field, group.inverse_table()),
        generators: group.generators().to_vec(),
    };
    let mut h = HopfAlgebra::from_parts_unchecked(field, parts).expect("group algebra shapes");
    h.group = Some(Arc::new(group.clone()));
    h
}

/// `k[x]/(x^n)` with `x` primitive (`Δx = x⊗1 + 1⊗x`), `S(x) = -x`.
///
/// This is a Hopf algebra exactly when `n` is a power of the characteristic
/// (for `n = p` it is the restricted enveloping algebra of a one-dimensional
/// Lie algebra); other parameters produce an object for which
/// [`verify_hopf`] reports the failing axiom.
pub fn truncated_primitive<F: Field>(field: &F, n: usize) -> HopfAlgebra<F> {
    let binom = binomials(n);
    let one = field.one();
    let parts = HopfParts {
        name: format!("k[x]/(x^{n})"),
        dim: n,
        mult: (0..n)
            .map(|i| (0..n).map(|j| if i + j < n { vec![(i + j, one.clone())] } else { vec![] }).collect())
            .collect(),
        unit: (0..n).map(|i| if i == 0 { one.clone() } else { field.zero() }).collect(),
        comult: (0..n)
            .map(|m| {
                (0..=m).map(|k| (k, m - k, field.from_i64(binom[m][k]))).filter(|(_, _, c)| !field.is_zero(c)).collect()
            })
            .collect(),
        counit: (0..n).map(|i| if i == 0 { one.clone() } else { field.zero() }).collect(),
        antipode: Mat::from_fn(field, n, n, |i, j| {
            if i != j {
                field.zero()
            } else if i % 2 == 0 {
                one.clone()
            } else {
                field.neg(&one)
            }
        }),
        generators: if n > 1 { vec![1] } else { vec![] },
    };
    HopfAlgebra::from_parts_unchecked(field, parts).expect("truncated algebra shapes")
}

fn binomials(n: usize) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
    for m in 0..n {
        let mut row = vec![1i64; m + 1];
        for k in 1..m {
            row[k] = rows[m - 1][k - 1] + rows[m - 1][k];
        }
        rows.push(row);
    }
    rows
}

type Tensor<F> = BTreeMap<Vec<usize>, <F as Field>::Elem>;

fn accumulate<F: Field>(f: &F, t: &mut Tensor<F>, key: Vec<usize>, c: F::Elem) {
    if f.is_zero(&c) {
        return;
    }
    let slot = t.entry(key.clone()).or_insert_with(|| f.zero());
    *slot = f.add(slot, &c);
    if f.is_zero(slot) {
        t.remove(&key);
    }
}

fn vec_tensor<F: Field>(f: &F, v: &[F::Elem]) -> Tensor<F> {
    let mut t = Tensor::<F>::new();
    for (i, c) in v.iter().enumerate() {
        accumulate(f, &mut t, vec![i], c.clone());
    }
    t
}

fn describe_diff<F: Field>(f: &F, a: &Tensor<F>, b: &Tensor<F>) -> String {
    let zero = f.zero();
    let key = a
        .keys()
        .chain(b.keys())
        .find(|k| a.get(*k).unwrap_or(&zero) != b.get(*k).unwrap_or(&zero))
        .cloned()
        .unwrap_or_default();
    format!(
        "coefficient at {:?}: {} vs {}",
        key,
        f.format(a.get(&key).unwrap_or(&zero)),
        f.format(b.get(&key).unwrap_or(&zero))
    )
}

/// Checks every Hopf axiom plus cocommutativity on basis tuples, recording
/// the first failing tuple for each.
pub fn verify_hopf<F: Field>(h: &HopfAlgebra<F>) -> CheckReport {
    let f = h.field();
    let n = h.dim();
    let at = vec![h.name().to_string()];
    let mut report = CheckReport::new(format!("{} over {}", h.name(), f.spec()), "hopf-axioms");
    let mut record = |name: &str, found: Option<String>| {
        let e = CheckEntry::new(name, at.clone(), found.is_none());
        report.push(match found {
            Some(d) => e.with_details(d),
            None => e,
        });
    };

    // (e_i e_j) e_k = e_i (e_j e_k)
    let mut found = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = h.mul_vec(&h.basis_vec(i), &h.basis_vec(j));
            for k in 0..n {
                let lhs = vec_tensor(f, &h.mul_vec(&ij, &h.basis_vec(k)));
                let jk = h.mul_vec(&h.basis_vec(j), &h.basis_vec(k));
                let rhs = vec_tensor(f, &h.mul_vec(&h.basis_vec(i), &jk));
                if lhs != rhs {
                    found = Some(format!("triple ({i},{j},{k}): {}", describe_diff(f, &lhs, &rhs)));
                    break 'assoc;
                }
            }
        }
    }
    record("associativity", found);

    let mut found = None;
    for i in 0..n {
        let e = vec_tensor(f, &h.basis_vec(i));
        if vec_tensor(f, &h.mul_vec(h.unit(), &h.basis_vec(i))) != e
            || vec_tensor(f, &h.mul_vec(&h.basis_vec(i), h.unit())) != e
        {
            found = Some(format!("basis element {i}"));
            break;
        }
    }
    record("unitality", found);

    // (Δ⊗id)Δ = (id⊗Δ)Δ
    let mut found = None;
    for i in 0..n {
        let mut lhs = Tensor::<F>::new();
        let mut rhs = Tensor::<F>::new();
        for (a, b, c) in h.comult_of(i) {
            for (a1, a2, c1) in h.comult_of(*a) {
                accumulate(f, &mut lhs, vec![*a1, *a2, *b], f.mul(c, c1));
            }
            for (b1, b2, c2) in h.comult_of(*b) {
                accumulate(f, &mut rhs, vec![*a, *b1, *b2], f.mul(c, c2));
            }
        }
        if lhs != rhs {
            found = Some(format!("basis element {i}: {}", describe_diff(f, &lhs, &rhs)));
            break;
        }
    }
    record("coassociativity", found);

    // (ε⊗id)Δ = id = (id⊗ε)Δ
    let mut found = None;
    for i in 0..n {
        let mut left = Tensor::<F>::new();
        let mut right = Tensor::<F>::new();
        for (a, b, c) in h.comult_of(i) {
            accumulate(f, &mut left, vec![*b], f.mul(c, h.counit_of(*a)));
            accumulate(f, &mut right, vec![*a], f.mul(c, h.counit_of(*b)));
        }
        let e = vec_tensor(f, &h.basis_vec(i));
        if left != e || right != e {
            found = Some(format!("basis element {i}"));
            break;
        }
    }
    record("counit", found);

    // Δ(e_i e_j) = Δ(e_i)Δ(e_j), Δ(1) = 1⊗1
    let comult_vec = |v: &[F::Elem]| {
        let mut t = Tensor::<F>::new();
        for (i, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (a, b, d) in h.comult_of(i) {
                accumulate(f, &mut t, vec![*a, *b], f.mul(c, d));
            }
        }
        t
    };
    let mut found = None;
    let mut unit_sq = Tensor::<F>::new();
    for (a, ca) in h.unit().iter().enumerate() {
        for (b, cb) in h.unit().iter().enumerate() {
            accumulate(f, &mut unit_sq, vec![a, b], f.mul(ca, cb));
        }
    }
    if comult_vec(h.unit()) != unit_sq {
        found = Some("unit: Δ(1) ≠ 1⊗1".to_string());
    }
    'comult: for i in 0..n {
        if found.is_some() {
            break;
        }
        for j in 0..n {
            let lhs = comult_vec(&h.mul_vec(&h.basis_vec(i), &h.basis_vec(j)));
            let mut rhs = Tensor::<F>::new();
            for (a, b, c) in h.comult_of(i) {
                for (a2, b2, c2) in h.comult_of(j) {
                    let cc = f.mul(c, c2);
                    for (x, cx) in h.basis_product(*a, *a2) {
                        for (y, cy) in h.basis_product(*b, *b2) {
                            accumulate(f, &mut rhs, vec![*x, *y], f.mul(&cc, &f.mul(cx, cy)));
                        }
                    }
                }
            }
            if lhs != rhs {
                found = Some(format!("pair ({i},{j}): {}", describe_diff(f, &lhs, &rhs)));
                break 'comult;
            }
        }
    }
    record("comult-multiplicative", found);

    let mut found = None;
    if !f.is_one(&h.counit_vec(h.unit())) {
        found = Some("ε(1) ≠ 1".to_string());
    }
    'counit: for i in 0..n {
        if found.is_some() {
            break;
        }
        for j in 0..n {
            let lhs = h.counit_vec(&h.mul_vec(&h.basis_vec(i), &h.basis_vec(j)));
            if lhs != f.mul(h.counit_of(i), h.counit_of(j)) {
                found = Some(format!("pair ({i},{j})"));
                break 'counit;
            }
        }
    }
    record("counit-multiplicative", found);

    // Σ S(a)b = ε 1 and Σ a S(b) = ε 1 over Δ = Σ a⊗b
    for (name, left) in [("antipode-left", true), ("antipode-right", false)] {
        let mut found = None;
        for i in 0..n {
            let mut acc = vec![f.zero(); n];
            for (a, b, c) in h.comult_of(i) {
                let prod = if left {
                    h.mul_vec(&h.antipode_vec(&h.basis_vec(*a)), &h.basis_vec(*b))
                } else {
                    h.mul_vec(&h.basis_vec(*a), &h.antipode_vec(&h.basis_vec(*b)))
                };
                for (k, v) in prod.iter().enumerate() {
                    acc[k] = f.add(&acc[k], &f.mul(c, v));
                }
            }
            let expect: Vec<F::Elem> = h.unit().iter().map(|u| f.mul(u, h.counit_of(i))).collect();
            if acc != expect {
                found = Some(format!("basis element {i}"));
                break;
            }
        }
        record(name, found);
    }

    let mut found = None;
    for i in 0..n {
        let mut t = Tensor::<F>::new();
        let mut swapped = Tensor::<F>::new();
        for (a, b, c) in h.comult_of(i) {
            accumulate(f, &mut t, vec![*a, *b], c.clone());
            accumulate(f, &mut swapped, vec![*b, *a], c.clone());
        }
        if t != swapped {
            found = Some(format!("basis element {i}"));
            break;
        }
    }
    record("cocommutativity", found);

    report.finalize();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::group::builtin_group;
    use crate::linalg::{PrimeField, Rationals};

    #[test]
    fn group_algebras_pass() {
        for g in ["C2", "C4", "S3", "Q8"] {
            let grp = builtin_group(g).unwrap();
            let h = group_algebra(&grp, &Rationals);
            assert!(verify_hopf(&h).all_pass(), "{g}");
            let h2 = group_algebra(&grp, &PrimeField::new(2).unwrap());
            assert!(verify_hopf(&h2).all_pass(), "{g} over F2");
        }
    }

    #[test]
    fn c4_antipode_fixes_identity_and_involution() {
        let g = builtin_group("C4").unwrap();
        let h = group_algebra(&g, &Rationals);
        let fixed: Vec<usize> = (0..4).filter(|&i| h.antipode().get(i, i) == &Rationals.one()).collect();
        assert_eq!(fixed.len(), 2);
        assert!(fixed.contains(&g.identity()));
        assert!(fixed.iter().all(|&i| g.element_order(i) <= 2));
    }

    #[test]
    fn identity_antipode_on_c3_fails() {
        let g = builtin_group("C3").unwrap();
        let h = group_algebra(&g, &Rationals);
        let mut parts = h.parts().clone();
        parts.antipode = Mat::identity(&Rationals, 3);
        let bad = HopfAlgebra::from_parts_unchecked(&Rationals, parts.clone()).unwrap();
        let r = verify_hopf(&bad);
        assert!(!r.named("antipode-left").next().unwrap().pass);
        assert!(r.named("associativity").next().unwrap().pass);
        assert!(HopfAlgebra::new(&Rationals, parts).is_err());
    }

    #[test]
    fn truncated_primitive_needs_matching_characteristic() {
        let f3 = PrimeField::new(3).unwrap();
        assert!(verify_hopf(&truncated_primitive(&f3, 3)).all_pass());
        let r = verify_hopf(&truncated_primitive(&Rationals, 2));
        assert!(!r.named("comult-multiplicative").next().unwrap().pass);
    }
}
