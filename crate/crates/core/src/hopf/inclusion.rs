//! Inclusions `A ⊂ B` of Hopf algebras with `B` free over `A`.
//!
//! Two decompositions are kept. The left one, `B = ⊕ A·L_i`, is used for
//! coinduction; the right one, `B = ⊕ R_i·A` with `R_i = S(L_i)`, for
//! induction. For group algebras `L_i` are right coset representatives.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::algebra::{group_algebra, HopfAlgebra};
use crate::hopf::group::FiniteGroup;
use crate::linalg::{Field, Mat, RowEchelon};

type Vector<F> = Vec<<F as Field>::Elem>;

#[derive(Clone, Debug)]
pub struct HopfInclusion<F: Field> {
    sub: Arc<HopfAlgebra<F>>,
    big: Arc<HopfAlgebra<F>>,
    embed: Mat<F>,
    left_basis: Vec<Vector<F>>,
    right_basis: Vec<Vector<F>>,
    left_decomp: Mat<F>,
    right_decomp: Mat<F>,
    /// `left_rewrite[b][i][j]`: `L_i·e_b = Σ_j a_ij·L_j`.
    left_rewrite: Vec<Vec<Vec<Vector<F>>>>,
    /// `right_rewrite[b][i][j]`: `e_b·R_i = Σ_j R_j·a_ji`.
    right_rewrite: Vec<Vec<Vec<Vector<F>>>>,
    /// `1 = Σ_j c_j·L_j`.
    unit_left: Vec<Vector<F>>,
    /// `1 = Σ_j R_j·d_j`.
    unit_right: Vec<Vector<F>>,
}

impl<F: Field> HopfInclusion<F> {
    /// Validates `embed` as an injective Hopf map, then computes a free basis
    /// greedily unless one is supplied.
    pub fn new(
        sub: Arc<HopfAlgebra<F>>,
        big: Arc<HopfAlgebra<F>>,
        embed: Mat<F>,
        left_basis: Option<Vec<Vector<F>>>,
    ) -> Result<Self> {
        check_embedding(&sub, &big, &embed)?;
        let left_basis = match left_basis {
            Some(b) => b,
            None => compute_free_basis(&sub, &big, &embed)?,
        };
        let field = big.field().clone();
        let m = sub.dim();
        let n = big.dim();
        let r = left_basis.len();
        if r * m != n {
            return Err(Error::NotFree(format!("{r} basis vectors over dim {m} cannot span dim {n}")));
        }
        let embedded: Vec<Vector<F>> = (0..m).map(|a| embed.col_vec(a)).collect();
        let right_basis: Vec<Vector<F>> = left_basis.iter().map(|l| big.antipode_vec(l)).collect();

        let mut phi_left = Mat::zeros(&field, n, n);
        let mut phi_right = Mat::zeros(&field, n, n);
        for i in 0..r {
            for (a, ea) in embedded.iter().enumerate() {
                let lv = big.mul_vec(ea, &left_basis[i]);
                let rv = big.mul_vec(&right_basis[i], ea);
                for k in 0..n {
                    phi_left.set(k, i * m + a, lv[k].clone());
                    phi_right.set(k, i * m + a, rv[k].clone());
                }
            }
        }
        let left_decomp =
            phi_left.inverse().map_err(|_| Error::NotFree("left A-span of the basis is not all of B".into()))?;
        let right_decomp = phi_right
            .inverse()
            .map_err(|_| Error::NotFree("right A-span of the antipode basis is not all of B".into()))?;

        let mut incl = HopfInclusion {
            sub,
            big,
            embed,
            left_basis,
            right_basis,
            left_decomp,
            right_decomp,
            left_rewrite: Vec::new(),
            right_rewrite: Vec::new(),
            unit_left: Vec::new(),
            unit_right: Vec::new(),
        };
        let big = incl.big.clone();
        for b in 0..n {
            let eb = big.basis_vec(b);
            incl.left_rewrite.push((0..r).map(|i| incl.left_coords(&big.mul_vec(&incl.left_basis[i], &eb))).collect());
            incl.right_rewrite
                .push((0..r).map(|i| incl.right_coords(&big.mul_vec(&eb, &incl.right_basis[i]))).collect());
        }
        incl.unit_left = incl.left_coords(big.unit());
        incl.unit_right = incl.right_coords(big.unit());
        Ok(incl)
    }

    pub fn sub(&self) -> &Arc<HopfAlgebra<F>> {
        &self.sub
    }
    pub fn big(&self) -> &Arc<HopfAlgebra<F>> {
        &self.big
    }
    pub fn embed(&self) -> &Mat<F> {
        &self.embed
    }
    pub fn field(&self) -> &F {
        self.big.field()
    }
    /// The index `r` of `A` in `B`.
    pub fn index(&self) -> usize {
        self.left_basis.len()
    }
    /// Left free basis: `B = ⊕ A·L_i`.
    pub fn free_basis(&self) -> &[Vector<F>] {
        &self.left_basis
    }
    /// Right free basis: `B = ⊕ R_i·A`.
    pub fn right_basis(&self) -> &[Vector<F>] {
        &self.right_basis
    }
    pub fn left_rewrite(&self, b: usize, i: usize) -> &[Vector<F>] {
        &self.left_rewrite[b][i]
    }
    pub fn right_rewrite(&self, b: usize, i: usize) -> &[Vector<F>] {
        &self.right_rewrite[b][i]
    }
    pub fn unit_left(&self) -> &[Vector<F>] {
        &self.unit_left
    }
    pub fn unit_right(&self) -> &[Vector<F>] {
        &self.unit_right
    }

    /// Writes `v = Σ ι(a_i)·L_i` and returns the `a_i`.
    pub fn left_coords(&self, v: &[F::Elem]) -> Vec<Vector<F>> {
        self.split(&self.left_decomp, v)
    }

    /// Writes `v = Σ R_i·ι(a_i)` and returns the `a_i`.
    pub fn right_coords(&self, v: &[F::Elem]) -> Vec<Vector<F>> {
        self.split(&self.right_decomp, v)
    }

    fn split(&self, decomp: &Mat<F>, v: &[F::Elem]) -> Vec<Vector<F>> {
        let coords = decomp.mul(&Mat::column(self.field(), v)).expect("decomposition shape").col_vec(0);
        coords.chunks(self.sub.dim()).map(|c| c.to_vec()).collect()
    }

    pub fn embed_vec(&self, a: &[F::Elem]) -> Vector<F> {
        self.embed.mul(&Mat::column(self.field(), a)).expect("embed shape").col_vec(0)
    }

    /// Re-expands both rewrite tables through `embed` and compares with the
    /// multiplication of `B` on every (basis element, free basis vector).
    pub fn verify_rewrite(&self) -> bool {
        let big = &self.big;
        let f = self.field();
        let r = self.index();
        let sum = |terms: Vec<Vector<F>>| {
            terms
                .into_iter()
                .fold(vec![f.zero(); big.dim()], |acc, t| acc.iter().zip(&t).map(|(x, y)| f.add(x, y)).collect())
        };
        (0..big.dim()).all(|b| {
            let eb = big.basis_vec(b);
            (0..r).all(|i| {
                let left = sum((0..r)
                    .map(|j| big.mul_vec(&self.embed_vec(&self.left_rewrite[b][i][j]), &self.left_basis[j]))
                    .collect());
                let right = sum((0..r)
                    .map(|j| big.mul_vec(&self.right_basis[j], &self.embed_vec(&self.right_rewrite[b][i][j])))
                    .collect());
                left == big.mul_vec(&self.left_basis[i], &eb) && right == big.mul_vec(&eb, &self.right_basis[i])
            })
        })
    }
}

/// Checks that `embed` is injective and commutes with all Hopf structure.
pub fn check_embedding<F: Field>(sub: &HopfAlgebra<F>, big: &HopfAlgebra<F>, embed: &Mat<F>) -> Result<()> {
    let f = big.field();
    let (n, m) = (big.dim(), sub.dim());
    if embed.dims() != (n, m) {
        return Err(Error::Dimension(format!("embedding is {:?}, expected ({n}, {m})", embed.dims())));
    }
    if embed.rank() != m {
        return Err(Error::InvalidHopf("embedding is not injective".into()));
    }
    let col = |v: &[F::Elem]| Mat::column(f, v);
    let image = |v: &[F::Elem]| embed.mul(&col(v)).expect("embed shape").col_vec(0);
    if image(sub.unit()) != big.unit() {
        return Err(Error::InvalidHopf("embedding does not preserve the unit".into()));
    }
    for a in 0..m {
        let ea = sub.basis_vec(a);
        let ia = image(&ea);
        if big.counit_vec(&ia) != *sub.counit_of(a) {
            return Err(Error::InvalidHopf(format!("counit not preserved at {a}")));
        }
        if big.antipode_vec(&ia) != image(&sub.antipode_vec(&ea)) {
            return Err(Error::InvalidHopf(format!("antipode not preserved at {a}")));
        }
        for b in 0..m {
            let prod = image(&sub.mul_vec(&ea, &sub.basis_vec(b)));
            if prod != big.mul_vec(&ia, &image(&sub.basis_vec(b))) {
                return Err(Error::InvalidHopf(format!("product not preserved at ({a},{b})")));
            }
        }
        // Δ_B(ι e_a) against (ι⊗ι)Δ_A(e_a), as n×n coefficient matrices.
        let mut lhs = Mat::zeros(f, n, n);
        for (k, c) in ia.iter().enumerate() {
            for (x, y, d) in big.comult_of(k) {
                let v = f.add(lhs.get(*x, *y), &f.mul(c, d));
                lhs.set(*x, *y, v);
            }
        }
        let mut rhs = Mat::zeros(f, n, n);
        for (x, y, d) in sub.comult_of(a) {
            let term = col(&embed.col_vec(*x)).mul(&col(&embed.col_vec(*y)).transpose()).expect("outer product");
            rhs.add_scaled(d, &term)?;
        }
        if lhs != rhs {
            return Err(Error::InvalidHopf(format!("comultiplication not preserved at {a}")));
        }
    }
    Ok(())
}

/// Greedy left free basis: scan the basis of `B`, keeping each vector not yet
/// in the accumulated `A`-span, and require each kept vector to contribute a
/// full copy of `A`.
pub fn compute_free_basis<F: Field>(
    sub: &HopfAlgebra<F>,
    big: &HopfAlgebra<F>,
    embed: &Mat<F>,
) -> Result<Vec<Vector<F>>> {
    let f = big.field();
    let n = big.dim();
    let embedded: Vec<Vector<F>> = (0..sub.dim()).map(|a| embed.col_vec(a)).collect();
    let mut echelon = RowEchelon::new(f, n);
    let mut basis = Vec::new();
    // Start from the unit so that index-one inclusions return {1}.
    let candidates = std::iter::once(big.unit().to_vec()).chain((0..n).map(|c| big.basis_vec(c)));
    for cand in candidates {
        if echelon.rank() == n {
            break;
        }
        if echelon.reduce(cand.clone()).iter().all(|x| f.is_zero(x)) {
            continue;
        }
        let gained = embedded.iter().filter(|ea| echelon.insert(big.mul_vec(ea, &cand))).count();
        if gained != sub.dim() {
            return Err(Error::NotFree(format!(
                "A-span grew by {gained} instead of {} after {} basis vectors",
                sub.dim(),
                basis.len()
            )));
        }
        basis.push(cand);
    }
    if echelon.rank() < n {
        return Err(Error::NotFree(format!("A-span stabilized at dimension {}", echelon.rank())));
    }
    Ok(basis)
}

/// `k[H] ⊂ k[G]` for the subgroup generated by `generators`, with right coset
/// representatives (identity first) as the free basis.
pub fn subgroup_inclusion<F: Field>(group: &FiniteGroup, generators: &[usize], field: &F) -> Result<HopfInclusion<F>> {
    subgroup_inclusion_named(group, generators, &format!("H{:?}", generators), field)
}

pub fn subgroup_inclusion_named<F: Field>(
    group: &FiniteGroup,
    generators: &[usize],
    sub_name: &str,
    field: &F,
) -> Result<HopfInclusion<F>> {
    if let Some(&bad) = generators.iter().find(|&&g| g >= group.order()) {
        return Err(Error::Config(format!("generator index {bad} out of range for {}", group.name())));
    }
    let elems = group.closure(generators);
    let mut h = group.subgroup(sub_name, &elems)?;
    h = h.with_generators(generators.iter().map(|g| elems.iter().position(|e| e == g).expect("in closure")).collect());
    let sub = Arc::new(group_algebra(&h, field));
    let big = Arc::new(group_algebra(group, field));
    let embed =
        Mat::from_fn(field, group.order(), elems.len(), |b, a| if elems[a] == b { field.one() } else { field.zero() });
    let mut covered = vec![false; group.order()];
    let mut reps = Vec::new();
    let order = std::iter::once(group.identity()).chain(0..group.order());
    for g in order {
        if covered[g] {
            continue;
        }
        for &x in &elems {
            covered[group.mul(x, g)] = true;
        }
        reps.push(big.basis_vec(g));
    }
    HopfInclusion::new(sub, big, embed, Some(reps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::algebra::truncated_primitive;
    use crate::hopf::group::{builtin_group, builtin_subgroup};
    use crate::linalg::{PrimeField, Rationals};

    fn incl(g: &str, h: &str) -> HopfInclusion<Rationals> {
        let grp = builtin_group(g).unwrap();
        let gens = builtin_subgroup(&grp, h).unwrap();
        subgroup_inclusion(&grp, &gens, &Rationals).unwrap()
    }

    #[test]
    fn indices_and_rewrites() {
        for (g, h, r) in
            [("S3", "C3", 2), ("S3", "C2", 3), ("S3", "S3", 1), ("S3", "1", 6), ("Q8", "C4", 2), ("S4", "D4", 3)]
        {
            let i = incl(g, h);
            assert_eq!(i.index(), r, "{h}<{g}");
            assert!(i.verify_rewrite(), "{h}<{g}");
        }
    }

    #[test]
    fn index_one_basis_is_identity() {
        let i = incl("S3", "S3");
        assert_eq!(i.free_basis(), &[i.big().unit().to_vec()]);
    }

    #[test]
    fn trivial_subgroup_rewrite_is_group_table() {
        let grp = builtin_group("S3").unwrap();
        let i = subgroup_inclusion(&grp, &[], &Rationals).unwrap();
        let one = Rationals.one();
        for b in 0..6 {
            for ri in 0..6 {
                let terms = i.right_rewrite(b, ri);
                let nonzero: Vec<usize> = (0..6).filter(|&j| !Rationals.is_zero(&terms[j][0])).collect();
                assert_eq!(nonzero.len(), 1);
                let j = nonzero[0];
                assert_eq!(terms[j][0], one);
                let rj = &i.right_basis()[j];
                assert_eq!(rj, &i.big().mul_vec(&i.big().basis_vec(b), &i.right_basis()[ri]));
            }
        }
    }

    #[test]
    fn greedy_basis_matches_coset_count() {
        for (g, h) in [("S3", "C3"), ("C4", "C2"), ("D4", "C2"), ("S4", "A4")] {
            let i = incl(g, h);
            let basis = compute_free_basis(i.sub(), i.big(), i.embed()).unwrap();
            assert_eq!(basis.len(), i.index(), "{h}<{g}");
        }
        let greedy = {
            let i = incl("C4", "C2");
            HopfInclusion::new(i.sub().clone(), i.big().clone(), i.embed().clone(), None).unwrap()
        };
        assert_eq!(greedy.index(), 2);
        assert!(greedy.verify_rewrite());
    }

    #[test]
    fn non_free_span_is_detected() {
        let f = Rationals;
        let c2 = group_algebra(&builtin_group("C2").unwrap(), &f);
        let c3 = group_algebra(&builtin_group("C3").unwrap(), &f);
        // e0 -> 1, e1 -> 1 + g: injective but not a Hopf map
        let embed = Mat::from_i64(&f, &[vec![1, 1], vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(compute_free_basis(&c2, &c3, &embed), Err(Error::NotFree(_))));
        assert!(HopfInclusion::new(Arc::new(c2), Arc::new(c3), embed, None).is_err());
    }

    #[test]
    fn ground_field_in_truncated_algebra() {
        let f = PrimeField::new(3).unwrap();
        let u = Arc::new(truncated_primitive(&f, 3));
        let k = Arc::new(group_algebra(&builtin_group("C1").unwrap(), &f));
        let embed = Mat::column(&f, u.unit());
        let i = HopfInclusion::new(k, u, embed, None).unwrap();
        assert_eq!(i.index(), 3);
        assert!(i.verify_rewrite());
    }
}
