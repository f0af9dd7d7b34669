//! Closed symmetric monoidal structure on modules over a cocommutative Hopf
//! algebra, with every structural isomorphism materialized as a matrix.
//!
//! Conventions: the basis of `X⊗Y` is `x_i⊗y_j` at index `i·dim Y + j`; the
//! basis of `Hom(X,Y)` is the elementary matrices `E_ij` (sending `x_j` to
//! `y_i`) at index `i·dim X + j`.

use std::sync::Arc;

use crate::category::object::{chain, ModuleObject, Morphism};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{intertwiner_basis, Field, Mat};

/// The unit object `k`, on which `b` acts by `ε(b)`.
pub fn unit_object<F: Field>(h: &Arc<HopfAlgebra<F>>) -> ModuleObject<F> {
    let f = h.field();
    let action = (0..h.dim()).map(|b| Mat::from_fn(f, 1, 1, |_, _| h.counit_of(b).clone())).collect();
    ModuleObject::from_action_unchecked(h.clone(), 1, action, "S").expect("unit object shape").keyed("S")
}

fn require_same<F: Field>(x: &ModuleObject<F>, y: &ModuleObject<F>) -> Result<()> {
    if x.same_algebra(y) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// `X⊗Y` with `b` acting by `Σ kron(ρ_X(b₁), ρ_Y(b₂))` over `Δ(b)`.
pub fn tensor<F: Field>(x: &ModuleObject<F>, y: &ModuleObject<F>) -> Result<ModuleObject<F>> {
    require_same(x, y)?;
    let h = x.algebra().clone();
    let d = x.dim() * y.dim();
    let key = format!("({}⊗{})", x.key(), y.key());
    let label = format!("({}⊗{})", x.label(), y.label());
    let (x, y) = (x.clone(), y.clone());
    let alg = h.clone();
    Ok(ModuleObject::lazy(h, d, key, label, move |b| {
        let mut m = Mat::zeros(alg.field(), d, d);
        for (a, c, coef) in alg.comult_of(b) {
            m.add_scaled(coef, &x.action(*a).kron(y.action(*c))).expect("tensor shapes");
        }
        m
    }))
}

/// `Hom_k(X,Y)` with `b` acting by `φ ↦ Σ ρ_Y(b₁)∘φ∘ρ_X(S b₂)`.
pub fn hom<F: Field>(x: &ModuleObject<F>, y: &ModuleObject<F>) -> Result<ModuleObject<F>> {
    require_same(x, y)?;
    let h = x.algebra().clone();
    let d = x.dim() * y.dim();
    let key = format!("Hom({},{})", x.key(), y.key());
    let label = if y.dim() == 1 && y.key() == "S" {
        format!("D{}", x.label())
    } else {
        format!("Hom({},{})", x.label(), y.label())
    };
    let (x, y) = (x.clone(), y.clone());
    let alg = h.clone();
    Ok(ModuleObject::lazy(h, d, key, label, move |b| {
        let mut m = Mat::zeros(alg.field(), d, d);
        for (a, c, coef) in alg.comult_of(b) {
            let s = x.act(&alg.antipode_vec(&alg.basis_vec(*c))).transpose();
            m.add_scaled(coef, &y.action(*a).kron(&s)).expect("hom shapes");
        }
        m
    }))
}

/// `DX = Hom(X, S)`.
pub fn dual<F: Field>(x: &ModuleObject<F>) -> ModuleObject<F> {
    hom(x, &unit_object(x.algebra())).expect("same algebra")
}

/// D_W X = Hom(X, W).
pub fn twisted_dual<F: Field>(x: &ModuleObject<F>, w: &ModuleObject<F>) -> Result<ModuleObject<F>> {
    hom(x, w)
}

pub fn direct_sum<F: Field>(x: &ModuleObject<F>, y: &ModuleObject<F>) -> Result<ModuleObject<F>> {
    require_same(x, y)?;
    let h = x.algebra().clone();
    let key = format!("({}⊕{})", x.key(), y.key());
    let label = format!("({}⊕{})", x.label(), y.label());
    let (x, y) = (x.clone(), y.clone());
    let alg = h.clone();
    Ok(ModuleObject::lazy(h, x.dim() + y.dim(), key, label, move |b| {
        Mat::block_diag(alg.field(), &[x.action(b), y.action(b)])
    }))
}

/// `f⊗g: X⊗Y → X'⊗Y'`.
pub fn tensor_mor<F: Field>(f: &Morphism<F>, g: &Morphism<F>) -> Result<Morphism<F>> {
    Ok(Morphism::unchecked(tensor(f.src(), g.src())?, tensor(f.dst(), g.dst())?, f.mat().kron(g.mat())))
}

/// `Hom(f, g): Hom(X,W) → Hom(X',W')` for `f: X' → X`, `g: W → W'`,
/// sending `φ` to `g∘φ∘f`.
pub fn hom_mor<F: Field>(f: &Morphism<F>, g: &Morphism<F>) -> Result<Morphism<F>> {
    Ok(Morphism::unchecked(hom(f.dst(), g.src())?, hom(f.src(), g.dst())?, g.mat().kron(&f.mat().transpose())))
}

/// `D(f) = Hom(f, id_S)`.
pub fn dual_mor<F: Field>(f: &Morphism<F>) -> Result<Morphism<F>> {
    hom_mor(f, &unit_object(f.src().algebra()).identity())
}

fn structural<F: Field>(src: ModuleObject<F>, dst: ModuleObject<F>, mat: Mat<F>) -> Morphism<F> {
    Morphism::unchecked(src, dst, mat)
}

/// `(X⊗Y)⊗Z → X⊗(Y⊗Z)`; the identity matrix in the fixed ordering.
pub fn assoc<F: Field>(x: &ModuleObject<F>, y: &ModuleObject<F>, z: &ModuleObject<F>) -> Result<Morphism<F>> {
    let src = tensor(&tensor(x, y)?, z)?;
    let dst = tensor(x, &tensor(y, z)?)?;
    let d = src.dim();
    Ok(structural(src, dst, Mat::identity(x.field(), d)))
}

pub fn assoc_inv<F: Field>(x: &ModuleObject<F>, y: &ModuleObject<F>, z: &ModuleObject<F>) -> Result<Morphism<F>> {
    assoc(x, y, z)?.inverse()
}

/// `X⊗Y → Y⊗X`, `x_i⊗y_j ↦ y_j⊗x_i`.
pub fn swap<F: Field>(x: &ModuleObject<F>, y: &ModuleObject<F>) -> Result<Morphism<F>> {
    let (dx, dy) = (x.dim(), y.dim());
    let mut perm = vec![0; dx * dy];
    for i in 0..dx {
        for j in 0..dy {
            perm[i * dy + j] = j * dx + i;
        }
    }
    Ok(structural(tensor(x, y)?, tensor(y, x)?, Mat::permutation(x.field(), &perm)))
}

/// `S⊗X → X`.
pub fn left_unitor<F: Field>(x: &ModuleObject<F>) -> Morphism<F> {
    let s = unit_object(x.algebra());
    structural(tensor(&s, x).expect("same algebra"), x.clone(), Mat::identity(x.field(), x.dim()))
}

pub fn left_unitor_inv<F: Field>(x: &ModuleObject<F>) -> Morphism<F> {
    let m = left_unitor(x);
    Morphism::unchecked(m.dst().clone(), m.src().clone(), m.mat().clone())
}

/// `X⊗S → X`.
pub fn right_unitor<F: Field>(x: &ModuleObject<F>) -> Morphism<F> {
    let s = unit_object(x.algebra());
    structural(tensor(x, &s).expect("same algebra"), x.clone(), Mat::identity(x.field(), x.dim()))
}

pub fn right_unitor_inv<F: Field>(x: &ModuleObject<F>) -> Morphism<F> {
    let m = right_unitor(x);
    Morphism::unchecked(m.dst().clone(), m.src().clone(), m.mat().clone())
}

/// `Hom(S, X) → X`, evaluation at `1`.
pub fn hom_unit<F: Field>(x: &ModuleObject<F>) -> Morphism<F> {
    let s = unit_object(x.algebra());
    structural(hom(&s, x).expect("same algebra"), x.clone(), Mat::identity(x.field(), x.dim()))
}

pub fn hom_unit_inv<F: Field>(x: &ModuleObject<F>) -> Morphism<F> {
    let m = hom_unit(x);
    Morphism::unchecked(m.dst().clone(), m.src().clone(), m.mat().clone())
}

/// Evaluation `Hom(X,W)⊗X → W`.
pub fn ev<F: Field>(x: &ModuleObject<F>, w: &ModuleObject<F>) -> Result<Morphism<F>> {
    let h = hom(x, w)?;
    let src = tensor(&h, x)?;
    let (dx, dw) = (x.dim(), w.dim());
    let f = x.field();
    let mut m = Mat::zeros(f, dw, dx * dw * dx);
    for i in 0..dw {
        for j in 0..dx {
            m.set(i, (i * dx + j) * dx + j, f.one());
        }
    }
    Ok(structural(src, w.clone(), m))
}

/// The adjoint `A → Hom(B,C)` of `f: A⊗B → C`; a pure reindexing.
pub fn curry<F: Field>(f: &Morphism<F>, a: &ModuleObject<F>, b: &ModuleObject<F>) -> Result<Morphism<F>> {
    let c = f.dst();
    let (da, db, dc) = (a.dim(), b.dim(), c.dim());
    if f.src().dim() != da * db {
        return Err(Error::Dimension(format!("cannot curry a map out of dim {} as {da}x{db}", f.src().dim())));
    }
    if !f.src().same_module(&tensor(a, b)?) {
        return Err(Error::ObjectMismatch(format!("source of map is not {}⊗{}", a.label(), b.label())));
    }
    let field = a.field();
    let mut out = Mat::zeros(field, dc * db, da);
    for ci in 0..dc {
        for ai in 0..da {
            for bi in 0..db {
                out.set(ci * db + bi, ai, f.mat().get(ci, ai * db + bi).clone());
            }
        }
    }
    Ok(Morphism::unchecked(a.clone(), hom(b, c)?, out))
}

/// Inverse of [`curry`]: `g: A → Hom(B,C)` becomes `A⊗B → C`.
pub fn uncurry<F: Field>(g: &Morphism<F>, b: &ModuleObject<F>, c: &ModuleObject<F>) -> Result<Morphism<F>> {
    let a = g.src();
    let (da, db, dc) = (a.dim(), b.dim(), c.dim());
    if !g.dst().same_module(&hom(b, c)?) {
        return Err(Error::ObjectMismatch(format!("target of map is not Hom({},{})", b.label(), c.label())));
    }
    let field = a.field();
    let mut out = Mat::zeros(field, dc, da * db);
    for ci in 0..dc {
        for ai in 0..da {
            for bi in 0..db {
                out.set(ci, ai * db + bi, g.mat().get(ci * db + bi, ai).clone());
            }
        }
    }
    Ok(Morphism::unchecked(tensor(a, b)?, c.clone(), out))
}

/// Coevaluation `S → X⊗DX`, the dual-basis tensor `Σ x_i⊗x^i`.
pub fn coev<F: Field>(x: &ModuleObject<F>) -> Morphism<F> {
    let d = x.dim();
    let f = x.field();
    let mut m = Mat::zeros(f, d * d, 1);
    for i in 0..d {
        m.set(i * d + i, 0, f.one());
    }
    let dx = dual(x);
    structural(unit_object(x.algebra()), tensor(x, &dx).expect("same algebra"), m)
}

/// `ν: DX⊗W → Hom(X,W)`, the adjoint of
/// `(DX⊗W)⊗X ≅ (DX⊗X)⊗W → S⊗W ≅ W`.
pub fn nu<F: Field>(x: &ModuleObject<F>, w: &ModuleObject<F>) -> Result<Morphism<F>> {
    let dx = dual(x);
    let s = unit_object(x.algebra());
    let composite = chain(&[
        &assoc(&dx, w, x)?,
        &tensor_mor(&dx.identity(), &swap(w, x)?)?,
        &assoc_inv(&dx, x, w)?,
        &tensor_mor(&ev(x, &s)?, &w.identity())?,
        &left_unitor(w),
    ])?;
    curry(&composite, &tensor(&dx, w)?, x)
}

/// `Y⊗Hom(C,Z) → Hom(C, Y⊗Z)`, the adjoint of
/// `(Y⊗Hom(C,Z))⊗C ≅ Y⊗(Hom(C,Z)⊗C) → Y⊗Z`.
pub fn nu_general<F: Field>(y: &ModuleObject<F>, c: &ModuleObject<F>, z: &ModuleObject<F>) -> Result<Morphism<F>> {
    let hcz = hom(c, z)?;
    let composite = assoc(y, &hcz, c)?.then(&tensor_mor(&y.identity(), &ev(c, z)?)?)?;
    curry(&composite, &tensor(y, &hcz)?, c)
}

/// `ρ_W: X → D_W D_W X`, the adjoint of `X⊗Hom(X,W) ≅ Hom(X,W)⊗X → W`.
pub fn rho_twisted<F: Field>(x: &ModuleObject<F>, w: &ModuleObject<F>) -> Result<Morphism<F>> {
    let dwx = hom(x, w)?;
    let composite = swap(x, &dwx)?.then(&ev(x, w)?)?;
    curry(&composite, x, &dwx)
}

/// `ρ: X → DDX`.
pub fn rho<F: Field>(x: &ModuleObject<F>) -> Result<Morphism<F>> {
    rho_twisted(x, &unit_object(x.algebra()))
}

/// Dual object with evaluation and coevaluation.
#[derive(Clone, Debug)]
pub struct DualityData<F: Field> {
    pub obj: ModuleObject<F>,
    pub dual: ModuleObject<F>,
    pub ev: Morphism<F>,
    pub coev: Morphism<F>,
}

impl<F: Field> DualityData<F> {
    /// `X ≅ S⊗X → (X⊗DX)⊗X ≅ X⊗(DX⊗X) → X⊗S ≅ X`.
    pub fn first_zigzag(&self) -> Result<Morphism<F>> {
        let x = &self.obj;
        chain(&[
            &left_unitor_inv(x),
            &tensor_mor(&self.coev, &x.identity())?,
            &assoc(x, &self.dual, x)?,
            &tensor_mor(&x.identity(), &self.ev)?,
            &right_unitor(x),
        ])
    }

    /// `DX ≅ DX⊗S → DX⊗(X⊗DX) ≅ (DX⊗X)⊗DX → S⊗DX ≅ DX`.
    pub fn second_zigzag(&self) -> Result<Morphism<F>> {
        let (x, dx) = (&self.obj, &self.dual);
        chain(&[
            &right_unitor_inv(dx),
            &tensor_mor(&dx.identity(), &self.coev)?,
            &assoc_inv(dx, x, dx)?,
            &tensor_mor(&self.ev, &dx.identity())?,
            &left_unitor(dx),
        ])
    }
}

pub fn duality_data<F: Field>(x: &ModuleObject<F>) -> Result<DualityData<F>> {
    let s = unit_object(x.algebra());
    let data = DualityData { obj: x.clone(), dual: dual(x), ev: ev(x, &s)?, coev: coev(x) };
    if !data.first_zigzag()?.mat().is_identity() || !data.second_zigzag()?.mat().is_identity() {
        return Err(Error::NotDualizable(x.label().to_string()));
    }
    Ok(data)
}

/// Outcome of the invertibility test: coevaluation square and full rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invertibility {
    pub invertible: bool,
    pub coev_dims: [usize; 2],
    pub coev_rank: usize,
}

pub fn is_invertible<F: Field>(x: &ModuleObject<F>) -> Invertibility {
    let c = coev(x);
    let rank = c.mat().rank();
    let (r, k) = c.mat().dims();
    // dims are [source, target], as in reports
    Invertibility { invertible: r == k && rank == r, coev_dims: [k, r], coev_rank: rank }
}

/// Basis of `Hom_B(X, Y)`.
pub fn intertwiners<F: Field>(x: &ModuleObject<F>, y: &ModuleObject<F>) -> Result<Vec<Morphism<F>>> {
    require_same(x, y)?;
    let constraints: Vec<(Mat<F>, Mat<F>)> =
        x.algebra().generators().iter().map(|&b| (y.action(b).clone(), x.action(b).clone())).collect();
    Ok(intertwiner_basis(x.field(), &constraints, x.dim(), y.dim())?
        .into_iter()
        .map(|m| Morphism::unchecked(x.clone(), y.clone(), m))
        .collect())
}

/// The bijection `Hom(X⊗X', W) ≅ Hom(X, Hom(X', W))` on explicit bases.
#[derive(Clone, Debug)]
pub struct TensorHomAdjunction<F: Field> {
    /// Basis of `Hom_B(X⊗X', W)`.
    pub tensor_side: Vec<Morphism<F>>,
    /// Basis of `Hom_B(X, Hom(X', W))`.
    pub hom_side: Vec<Morphism<F>>,
    /// `curry` applied to `tensor_side`.
    pub curried: Vec<Morphism<F>>,
    /// `uncurry` applied to `hom_side`.
    pub uncurried: Vec<Morphism<F>>,
    pub ev: Morphism<F>,
}

impl<F: Field> TensorHomAdjunction<F> {
    /// Both sides have equal dimension, curried maps are intertwiners, and
    /// both round trips are the identity.
    pub fn verify(&self, x: &ModuleObject<F>, xp: &ModuleObject<F>, w: &ModuleObject<F>) -> Result<bool> {
        if self.tensor_side.len() != self.hom_side.len() {
            return Ok(false);
        }
        for (f, c) in self.tensor_side.iter().zip(&self.curried) {
            if !c.is_intertwiner() || uncurry(c, xp, w)?.mat() != f.mat() {
                return Ok(false);
            }
        }
        for (g, u) in self.hom_side.iter().zip(&self.uncurried) {
            if !u.is_intertwiner() || curry(u, x, xp)?.mat() != g.mat() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn tensor_hom_adjunction<F: Field>(
    x: &ModuleObject<F>,
    xp: &ModuleObject<F>,
    w: &ModuleObject<F>,
) -> Result<TensorHomAdjunction<F>> {
    let txp = tensor(x, xp)?;
    let hxw = hom(xp, w)?;
    let tensor_side = intertwiners(&txp, w)?;
    let hom_side = intertwiners(x, &hxw)?;
    let curried = tensor_side.iter().map(|f| curry(f, x, xp)).collect::<Result<_>>()?;
    let uncurried = hom_side.iter().map(|g| uncurry(g, xp, w)).collect::<Result<_>>()?;
    Ok(TensorHomAdjunction { tensor_side, hom_side, curried, uncurried, ev: ev(xp, w)? })
}

/// `Hom(A, Hom(B, W)) → Hom(A⊗B, W)`, a permutation of elementary matrices.
pub fn reindex<F: Field>(a: &ModuleObject<F>, b: &ModuleObject<F>, w: &ModuleObject<F>) -> Result<Morphism<F>> {
    let (da, db, dw) = (a.dim(), b.dim(), w.dim());
    let mut perm = vec![0; da * db * dw];
    for wi in 0..dw {
        for bi in 0..db {
            for ai in 0..da {
                perm[(wi * db + bi) * da + ai] = wi * (da * db) + ai * db + bi;
            }
        }
    }
    Ok(structural(hom(a, &hom(b, w)?)?, hom(&tensor(a, b)?, w)?, Mat::permutation(a.field(), &perm)))
}

/// `Hom(A, Hom(B, W)) → Hom(B, Hom(A, W))`, exchanging the two arguments.
pub fn argswap<F: Field>(a: &ModuleObject<F>, b: &ModuleObject<F>, w: &ModuleObject<F>) -> Result<Morphism<F>> {
    let (da, db, dw) = (a.dim(), b.dim(), w.dim());
    let mut perm = vec![0; da * db * dw];
    for wi in 0..dw {
        for bi in 0..db {
            for ai in 0..da {
                perm[(wi * db + bi) * da + ai] = (wi * da + ai) * db + bi;
            }
        }
    }
    Ok(structural(hom(a, &hom(b, w)?)?, hom(b, &hom(a, w)?)?, Mat::permutation(a.field(), &perm)))
}

/// Searches `Hom_B(X, Y)` for an isomorphism.
///
/// Over ℚ, and over prime fields with a large combination space, up to
/// `draws` random small-integer combinations of the intertwiner basis are
/// tried. Over a prime field with at most 4096 combinations every one is
/// enumerated, so a miss there is definitive.
pub fn find_isomorphism<F: Field>(
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
    rng: &mut impl rand::Rng,
    draws: usize,
) -> Result<Option<Morphism<F>>> {
    if x.dim() != y.dim() {
        return Ok(None);
    }
    let basis = intertwiners(x, y)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let f = x.field();
    let combine = |coeffs: &[i64]| {
        let mut m = Mat::zeros(f, y.dim(), x.dim());
        for (c, b) in coeffs.iter().zip(&basis) {
            m.add_scaled(&f.from_i64(*c), b.mat()).expect("basis shapes");
        }
        m
    };
    let p = f.spec().characteristic() as u64;
    let space = (p > 0).then(|| p.checked_pow(basis.len() as u32)).flatten();
    if let Some(total) = space.filter(|&t| t <= 4096) {
        for code in 1..total {
            let mut rest = code;
            let coeffs: Vec<i64> = (0..basis.len())
                .map(|_| {
                    let c = rest % p;
                    rest /= p;
                    c as i64
                })
                .collect();
            let m = combine(&coeffs);
            if m.is_invertible() {
                return Ok(Some(Morphism::unchecked(x.clone(), y.clone(), m)));
            }
        }
        return Ok(None);
    }
    for _ in 0..draws {
        let coeffs: Vec<i64> = (0..basis.len()).map(|_| rng.gen_range(-3..=3)).collect();
        let m = combine(&coeffs);
        if m.is_invertible() {
            return Ok(Some(Morphism::unchecked(x.clone(), y.clone(), m)));
        }
    }
    Ok(None)
}
