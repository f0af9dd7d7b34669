//! Maps built from the strong monoidal `f^*` and its adjoints alone: the
//! lax and op-lax structure maps, `α`, the internal-Hom adjunction, `β`, `π`.

use crate::category::{ev, hom, hom_mor, tensor, tensor_mor, ModuleObject, Morphism};
use crate::context::AdjunctionContext;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::maps::{MapName, NamedMap};

/// `T → f_*S`, adjoint to `f^*T ≅ S`.
pub fn lax_unit<F: Field>(ctx: &AdjunctionContext<F>) -> Result<Morphism<F>> {
    ctx.adj_lower(&ctx.unit_d(), &ctx.unit_iso()?)
}

/// `f_*W⊗f_*X → f_*(W⊗X)`, adjoint to `(ε⊗ε)` after the strong witness.
pub fn lax_tensor<F: Field>(
    ctx: &AdjunctionContext<F>,
    w: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let (lw, lx) = (ctx.f_lower_star(w)?, ctx.f_lower_star(x)?);
    let body = ctx.strong(&lw, &lx)?.then(&tensor_mor(&ctx.eps(w)?, &ctx.eps(x)?)?)?;
    ctx.adj_lower(&tensor(&lw, &lx)?, &body)
}

pub fn lax_maps<F: Field>(
    ctx: &AdjunctionContext<F>,
    w: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<(NamedMap<F>, NamedMap<F>)> {
    let unit = NamedMap::new(MapName::LaxUnit, &[], lax_unit(ctx)?, &["eta", "f_*(unit iso)"]);
    let tens =
        NamedMap::new(MapName::LaxTensor, &[w, x], lax_tensor(ctx, w, x)?, &["eta", "f_*(strong)", "f_*(eps⊗eps)"]);
    Ok((unit, tens))
}

/// `α: f^*Hom(Y,Z) → Hom(f^*Y, f^*Z)`, adjoint to `f^*(ev)` after the
/// strong witness.
pub fn alpha<F: Field>(ctx: &AdjunctionContext<F>, y: &ModuleObject<F>, z: &ModuleObject<F>) -> Result<Morphism<F>> {
    let hyz = hom(y, z)?;
    let body = ctx.strong_inv(&hyz, y)?.then(&ctx.f_star_mor(&ev(y, z)?)?)?;
    crate::category::curry(&body, &ctx.f_star(&hyz)?, &ctx.f_star(y)?)
}

pub fn alpha_map<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<NamedMap<F>> {
    Ok(NamedMap::new(MapName::Alpha, &[y, z], alpha(ctx, y, z)?, &["strong⁻¹", "f^*(ev)", "curry"]))
}

/// `Hom(Y, f_*X) → f_*Hom(f^*Y, X)`, adjoint to `Hom(id,ε)∘α`.
pub fn internal_hom_iso<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let lx = ctx.f_lower_star(x)?;
    let body = alpha(ctx, y, &lx)?.then(&hom_mor(&ctx.f_star(y)?.identity(), &ctx.eps(x)?)?)?;
    ctx.adj_lower(&hom(y, &lx)?, &body)
}

/// `f_*Hom(f^*Y, X) → Hom(Y, f_*X)`, curried from the adjoint of
/// `ev∘(ε⊗id)∘strong`.
pub fn internal_hom_iso_inv<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let py = ctx.f_star(y)?;
    let inner = hom(&py, x)?;
    let m = ctx.f_lower_star(&inner)?;
    let body = ctx.strong(&m, y)?.then(&tensor_mor(&ctx.eps(&inner)?, &py.identity())?)?.then(&ev(&py, x)?)?;
    crate::category::curry(&ctx.adj_lower(&tensor(&m, y)?, &body)?, &m, y)
}

/// The internal-Hom adjunction iso; failure of full rank would falsify the
/// implementation and is reported as an error.
pub fn internal_hom_adj<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<NamedMap<F>> {
    let m = NamedMap::new(
        MapName::InternalHomAdj,
        &[y, x],
        internal_hom_iso(ctx, y, x)?,
        &["alpha", "Hom(id,eps)", "adjoint"],
    );
    if !m.is_iso {
        return Err(Error::AssertionFailure(format!("internal Hom adjunction not invertible at {:?}", m.at)));
    }
    Ok(m)
}

/// `β: f_*Hom(X,W) → Hom(f_*X, f_*W)`.
pub fn beta<F: Field>(ctx: &AdjunctionContext<F>, x: &ModuleObject<F>, w: &ModuleObject<F>) -> Result<Morphism<F>> {
    let pre = ctx.f_lower_star_mor(&hom_mor(&ctx.eps(x)?, &w.identity())?)?;
    pre.then(&internal_hom_iso_inv(ctx, &ctx.f_lower_star(x)?, w)?)
}

pub fn beta_map<F: Field>(ctx: &AdjunctionContext<F>, x: &ModuleObject<F>, w: &ModuleObject<F>) -> Result<NamedMap<F>> {
    Ok(NamedMap::new(MapName::Beta, &[x, w], beta(ctx, x, w)?, &["f_*Hom(eps,id)", "internal Hom iso⁻¹"]))
}

/// `π: Y⊗f_*X → f_*(f^*Y⊗X)`.
pub fn pi<F: Field>(ctx: &AdjunctionContext<F>, y: &ModuleObject<F>, x: &ModuleObject<F>) -> Result<Morphism<F>> {
    let lx = ctx.f_lower_star(x)?;
    tensor_mor(&ctx.eta(y)?, &lx.identity())?.then(&lax_tensor(ctx, &ctx.f_star(y)?, x)?)
}

pub fn pi_map<F: Field>(ctx: &AdjunctionContext<F>, y: &ModuleObject<F>, x: &ModuleObject<F>) -> Result<NamedMap<F>> {
    Ok(NamedMap::new(MapName::Pi, &[y, x], pi(ctx, y, x)?, &["eta⊗id", "laxTensor"]))
}

/// `f^*DY → Df^*Y`: `α` at `(Y, T)` followed by `Hom(id, f^*T ≅ S)`.
pub fn dual_comparison<F: Field>(ctx: &AdjunctionContext<F>, y: &ModuleObject<F>) -> Result<Morphism<F>> {
    alpha(ctx, y, &ctx.unit_d())?.then(&hom_mor(&ctx.f_star(y)?.identity(), &ctx.unit_iso()?)?)
}

fn require_star<F: Field>(ctx: &AdjunctionContext<F>) -> Result<()> {
    if ctx.shriek_is_star() {
        Ok(())
    } else {
        Err(Error::MissingFunctor("f^! = f^*"))
    }
}

/// `f_!S → T`, adjoint to `S ≅ f^*T`; needs `f^! = f^*`.
pub fn oplax_unit<F: Field>(ctx: &AdjunctionContext<F>) -> Result<Morphism<F>> {
    require_star(ctx)?;
    ctx.adj_shriek_inv(&ctx.unit_d(), &ctx.unit_iso_inv()?)
}

/// `f_!(W⊗X) → f_!W⊗f_!X`, adjoint to `ζ⊗ζ` followed by the strong
/// witness; needs `f^! = f^*`.
pub fn oplax_tensor<F: Field>(
    ctx: &AdjunctionContext<F>,
    w: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    require_star(ctx)?;
    let (sw, sx) = (ctx.f_shriek(w)?, ctx.f_shriek(x)?);
    let body = tensor_mor(&ctx.zeta(w)?, &ctx.zeta(x)?)?.then(&ctx.strong_inv(&sw, &sx)?)?;
    ctx.adj_shriek_inv(&tensor(&sw, &sx)?, &body)
}

pub fn oplax_maps<F: Field>(
    ctx: &AdjunctionContext<F>,
    w: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<(NamedMap<F>, NamedMap<F>)> {
    let unit = NamedMap::new(MapName::OpLaxUnit, &[], oplax_unit(ctx)?, &["f_!(unit iso⁻¹)", "sigma"]);
    let tens = NamedMap::new(
        MapName::OpLaxTensor,
        &[w, x],
        oplax_tensor(ctx, w, x)?,
        &["zeta⊗zeta", "strong⁻¹", "f_!", "sigma"],
    );
    Ok((unit, tens))
}
