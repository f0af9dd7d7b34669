//! The comparison `ω: f_*X → f_!(X⊗C)` and its companions `τ`, `ξ`, `ψ` in
//! a context with `f^! = f^*` and a chosen `Df_!S ≅ f_!C`.
//!
//! Throughout, `f♯X = f_!(X⊗C)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::category::{
    dual, dual_mor, find_isomorphism, hom_mor, hom_unit, hom_unit_inv, nu, right_unitor, right_unitor_inv, swap,
    tensor, tensor_mor, ModuleObject, Morphism,
};
use crate::context::{AdjunctionContext, WirthmuellerData};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};
use crate::maps::basic::{dual_comparison, lax_unit};
use crate::maps::triads::{gamma_bar, pi_bar, pi_hat};
use crate::maps::{labels, MapName, NamedMap};
use crate::report::{CheckEntry, CheckReport};

/// `f♯X = f_!(X⊗C)`.
pub fn f_sharp<F: Field>(wd: &WirthmuellerData<F>, x: &ModuleObject<F>) -> Result<ModuleObject<F>> {
    wd.ctx().f_shriek(&tensor(x, wd.shift())?)
}

pub fn f_sharp_mor<F: Field>(wd: &WirthmuellerData<F>, g: &Morphism<F>) -> Result<Morphism<F>> {
    wd.ctx().f_shriek_mor(&tensor_mor(g, &wd.shift().identity())?)
}

/// `Df_!X → f_*DX`: `γ̄` at `(X, T)` followed by `f^*T ≅ S`.
pub fn dual_induction<F: Field>(ctx: &AdjunctionContext<F>, x: &ModuleObject<F>) -> Result<Morphism<F>> {
    let post = ctx.f_lower_star_mor(&hom_mor(&x.identity(), &ctx.unit_iso()?)?)?;
    gamma_bar(ctx, x, &ctx.unit_d())?.then(&post)
}

/// `f_*S → f_!C`, the witness precomposed with `f_*S ≅ Df_!S`.
pub fn witness_lower_star<F: Field>(wd: &WirthmuellerData<F>) -> Result<Morphism<F>> {
    let ctx = wd.ctx();
    let s = ctx.unit_c();
    let to_coinduced = dual_induction(ctx, &s)?.then(&ctx.f_lower_star_mor(&hom_unit(&s))?)?;
    to_coinduced.inverse()?.then(wd.witness())
}

/// `τ: T → f_!C` through the lax unit.
pub fn tau_unit<F: Field>(wd: &WirthmuellerData<F>) -> Result<Morphism<F>> {
    lax_unit(wd.ctx())?.then(&witness_lower_star(wd)?)
}

/// `τ: T → f_!C` through the dual of `σ_T`.
pub fn tau_unit_alt<F: Field>(wd: &WirthmuellerData<F>) -> Result<Morphism<F>> {
    let ctx = wd.ctx();
    let t = ctx.unit_d();
    let back = dual_mor(&ctx.f_shriek_mor(&ctx.unit_iso_inv()?)?)?;
    hom_unit_inv(&t).then(&dual_mor(&ctx.sigma(&t)?)?)?.then(&back)?.then(wd.witness())
}

/// `ξ: f^*f_!C → S` through the counit.
pub fn xi_unit<F: Field>(wd: &WirthmuellerData<F>) -> Result<Morphism<F>> {
    let ctx = wd.ctx();
    ctx.f_star_mor(&witness_lower_star(wd)?.inverse()?)?.then(&ctx.eps(&ctx.unit_c())?)
}

/// `ξ: f^*f_!C → S` through the dual of `ζ_S`.
pub fn xi_unit_alt<F: Field>(wd: &WirthmuellerData<F>) -> Result<Morphism<F>> {
    let ctx = wd.ctx();
    let s = ctx.unit_c();
    let shriek_s = ctx.f_shriek(&s)?;
    ctx.f_star_mor(&wd.witness().inverse()?)?
        .then(&dual_comparison(ctx, &shriek_s)?)?
        .then(&dual_mor(&ctx.zeta(&s)?)?)?
        .then(&hom_unit(&s))
}

/// `τ: Y → f♯f^*Y`.
pub fn tau<F: Field>(wd: &WirthmuellerData<F>, y: &ModuleObject<F>) -> Result<Morphism<F>> {
    tau_with(wd, y, &tau_unit(wd)?)
}

fn tau_with<F: Field>(wd: &WirthmuellerData<F>, y: &ModuleObject<F>, unit: &Morphism<F>) -> Result<Morphism<F>> {
    right_unitor_inv(y).then(&tensor_mor(&y.identity(), unit)?)?.then(&pi_bar(wd.ctx(), y, wd.shift())?.inverse()?)
}

/// `ξ: f^*f♯f^*Y → f^*Y`.
pub fn xi<F: Field>(wd: &WirthmuellerData<F>, y: &ModuleObject<F>) -> Result<Morphism<F>> {
    xi_with(wd, y, &xi_unit(wd)?)
}

fn xi_with<F: Field>(wd: &WirthmuellerData<F>, y: &ModuleObject<F>, unit: &Morphism<F>) -> Result<Morphism<F>> {
    let ctx = wd.ctx();
    let sc = ctx.f_shriek(wd.shift())?;
    let py = ctx.f_star(y)?;
    ctx.f_star_mor(&pi_bar(ctx, y, wd.shift())?)?
        .then(&ctx.strong(y, &sc)?)?
        .then(&tensor_mor(&py.identity(), unit)?)?
        .then(&right_unitor(&py))
}

/// `ω: f_*X → f♯X`.
pub fn omega<F: Field>(wd: &WirthmuellerData<F>, x: &ModuleObject<F>) -> Result<Morphism<F>> {
    let ctx = wd.ctx();
    tau(wd, &ctx.f_lower_star(x)?)?.then(&f_sharp_mor(wd, &ctx.eps(x)?)?)
}

/// `ψ: f♯f^*Y → f_*f^*Y`, adjoint to `ξ`.
pub fn psi<F: Field>(wd: &WirthmuellerData<F>, y: &ModuleObject<F>) -> Result<Morphism<F>> {
    let ctx = wd.ctx();
    let sharp = f_sharp(wd, &ctx.f_star(y)?)?;
    ctx.adj_lower(&sharp, &xi(wd, y)?)
}

/// `ψ` rebuilt through `ν` and `Df_!S → f_*DS`.
pub fn psi_composite<F: Field>(wd: &WirthmuellerData<F>, y: &ModuleObject<F>) -> Result<Morphism<F>> {
    let ctx = wd.ctx();
    let s = ctx.unit_c();
    let shriek_s = ctx.f_shriek(&s)?;
    let dual_s = dual(&shriek_s);
    pi_bar(ctx, y, wd.shift())?
        .then(&tensor_mor(&y.identity(), &wd.witness().inverse()?)?)?
        .then(&swap(y, &dual_s)?)?
        .then(&nu(&shriek_s, y)?)?
        .then(&gamma_bar(ctx, &s, y)?)?
        .then(&ctx.f_lower_star_mor(&hom_unit(&ctx.f_star(y)?))?)
}

/// `τ` and `ξ` at `y`, `ω` at `x` and `ψ` at `y`.
pub fn wirthmueller_maps<F: Field>(
    wd: &WirthmuellerData<F>,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
) -> Result<[NamedMap<F>; 4]> {
    Ok([
        NamedMap::new(MapName::Tau, &[y], tau(wd, y)?, &["right unitor⁻¹", "id⊗tau(T)", "piBar⁻¹"]),
        NamedMap::new(MapName::Xi, &[y], xi(wd, y)?, &["f^*(piBar)", "strong", "id⊗xi(S)", "right unitor"]),
        NamedMap::new(MapName::Omega, &[x], omega(wd, x)?, &["tau(f_*X)", "f♯(eps)"]),
        NamedMap::new(MapName::Psi, &[y], psi(wd, y)?, &["eta", "f_*(xi)"]),
    ])
}

fn equal<F: Field>(name: &str, map: &str, at: &[&ModuleObject<F>], lhs: &Morphism<F>, rhs: &Morphism<F>) -> CheckEntry {
    let mut e = CheckEntry::equality(name, labels(at), lhs.mat(), rhs.mat());
    e.map = Some(map.into());
    e
}

fn identity_check<F: Field>(name: &str, map: &str, at: &[&ModuleObject<F>], m: &Morphism<F>) -> CheckEntry {
    let id = Mat::identity(m.mat().field(), m.src().dim());
    let mut e = CheckEntry::equality(name, labels(at), m.mat(), &id);
    e.map = Some(map.into());
    e
}

/// Both constructions of `τ` and of `ξ` on the units agree.
pub fn unit_agreement<F: Field>(wd: &WirthmuellerData<F>) -> Result<Vec<CheckEntry>> {
    let t = wd.ctx().unit_d();
    let s = wd.ctx().unit_c();
    Ok(vec![
        equal("tauUnitAgreement", "tau", &[&t], &tau_unit(wd)?, &tau_unit_alt(wd)?),
        equal("xiUnitAgreement", "xi", &[&s], &xi_unit(wd)?, &xi_unit_alt(wd)?),
    ])
}

/// `ω∘η = τ`, `ξ∘f^*τ = id` and `ψ∘τ = η` at `y`.
pub fn relation_checks<F: Field>(wd: &WirthmuellerData<F>, y: &ModuleObject<F>) -> Result<Vec<CheckEntry>> {
    let ctx = wd.ctx();
    let py = ctx.f_star(y)?;
    let (t, eta) = (tau(wd, y)?, ctx.eta(y)?);
    Ok(vec![
        equal("omegaEta", "omega", &[y], &eta.then(&omega(wd, &py)?)?, &t),
        identity_check("xiTau", "xi", &[y], &ctx.f_star_mor(&t)?.then(&xi(wd, y)?)?),
        equal("psiTau", "psi", &[y], &t.then(&psi(wd, y)?)?, &eta),
    ])
}

/// `ψ∘ω = id` and `ω∘ψ = id` at `X = f^*Y`, and `ψ` against its composite
/// through `ν`.
pub fn psi_inverse_check<F: Field>(wd: &WirthmuellerData<F>, y: &ModuleObject<F>) -> Result<CheckReport> {
    let ctx = wd.ctx();
    let mut report = CheckReport::new(ctx.name(), "psi-inverse");
    let om = omega(wd, &ctx.f_star(y)?)?;
    let ps = psi(wd, y)?;
    report.push(identity_check("psiOmega", "psi", &[y], &om.then(&ps)?));
    report.push(identity_check("omegaPsi", "omega", &[y], &ps.then(&om)?));
    report.push(equal("psiComposite", "psi", &[y], &ps, &psi_composite(wd, y)?));
    report.finalize();
    Ok(report)
}

/// `ε_X∘f^*ω⁻¹: f^*f♯X → X`, the candidate whose adjoint inverts `ω`.
pub fn xi_from_omega<F: Field>(wd: &WirthmuellerData<F>, x: &ModuleObject<F>) -> Result<Morphism<F>> {
    let ctx = wd.ctx();
    ctx.f_star_mor(&omega(wd, x)?.inverse()?)?.then(&ctx.eps(x)?)
}

/// `f♯ξ∘τ_{f♯X}`, which the criterion compares with the identity. The
/// candidate need not intertwine.
pub fn sharp_xi_tau<F: Field>(
    wd: &WirthmuellerData<F>,
    x: &ModuleObject<F>,
    candidate: &Morphism<F>,
) -> Result<Morphism<F>> {
    let sharp = f_sharp(wd, x)?;
    let candidate = candidate.retype(&wd.ctx().f_star(&sharp)?, x)?;
    tau(wd, &sharp)?.then(&f_sharp_mor(wd, &candidate)?)
}

/// The invertibility criterion for `ω` at `x` with candidate
/// `ξ: f^*f♯X → X`.
///
/// Records `f♯ξ∘τ = id`, the counit naturality square, the equivalent
/// condition through `ζ_{X⊗C}`, whether those two agree, and, when the first
/// two hold, that the adjoint of `ξ` inverts `ω`.
pub fn omega_criterion_check<F: Field>(
    wd: &WirthmuellerData<F>,
    x: &ModuleObject<F>,
    candidate: &Morphism<F>,
) -> Result<CheckReport> {
    let ctx = wd.ctx();
    let mut report = CheckReport::new(ctx.name(), "omega-criterion");
    let sharp = f_sharp(wd, x)?;
    let xc = tensor(x, wd.shift())?;
    let candidate = candidate.retype(&ctx.f_star(&sharp)?, x)?;
    if !candidate.is_intertwiner() {
        return Err(Error::NotIntertwiner("criterion candidate".into()));
    }

    let tau_sharp = tau(wd, &sharp)?;
    let sharp_xi = f_sharp_mor(wd, &candidate)?;
    let triangle = identity_check("sharpXiTau", "xi", &[x], &tau_sharp.then(&sharp_xi)?);

    let lx = ctx.f_lower_star(x)?;
    let eps = ctx.eps(x)?;
    let nat_lhs = xi(wd, &lx)?.then(&eps)?;
    let nat_rhs = ctx.f_star_mor(&f_sharp_mor(wd, &eps)?)?.then(&candidate)?;
    let naturality = equal("counitNaturality", "xi", &[x], &nat_lhs, &nat_rhs);

    let z = ctx.zeta(&xc)?;
    let through = z.then(&ctx.f_star_mor(&tau_sharp)?)?.then(&ctx.f_star_mor(&sharp_xi)?)?;
    let through_zeta = equal("shriekUnitXi", "zeta", &[x], &through, &z);

    let agree = CheckEntry::new("criterionAgreement", labels(&[x]), triangle.pass == through_zeta.pass)
        .with_details(format!("sharpXiTau={}, shriekUnitXi={}", triangle.pass, through_zeta.pass));
    let both = triangle.pass && naturality.pass;
    report.push(triangle);
    report.push(naturality);
    report.push(through_zeta);
    report.push(agree);

    if both {
        let om = omega(wd, x)?;
        report.push(
            NamedMap::new(MapName::Omega, &[x], om.clone(), &["tau(f_*X)", "f♯(eps)"]).entry("candidateOmega", true),
        );
        let ps = ctx.adj_lower(&sharp, &candidate)?;
        report.push(identity_check("candidateLeftInverse", "psi", &[x], &om.then(&ps)?));
        report.push(identity_check("candidateRightInverse", "psi", &[x], &ps.then(&om)?));
    }
    report.finalize();
    Ok(report)
}

/// Data for the comparison in a context with an arbitrary `(f_!, f^!)`: an
/// object `C` of `𝒞` and an isomorphism `Df_!f^!T → f_!C`.
#[derive(Debug)]
pub struct VerdierData<'a, F: Field> {
    pub ctx: &'a AdjunctionContext<F>,
    pub shift: ModuleObject<F>,
    pub witness: Morphism<F>,
}

impl<'a, F: Field> VerdierData<'a, F> {
    /// Searches for the isomorphism `Df_!f^!T → f_!C`.
    pub fn search(ctx: &'a AdjunctionContext<F>, shift: &ModuleObject<F>) -> Result<Self> {
        let t = ctx.unit_d();
        let src = dual(&ctx.f_shriek(&ctx.f_upper_shriek(&t)?)?);
        let dst = ctx.f_shriek(shift)?;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        match find_isomorphism(&src, &dst, &mut rng, 8)? {
            Some(witness) => Ok(VerdierData { ctx, shift: shift.clone(), witness }),
            None => Err(Error::WitnessMissing(format!("no isomorphism D f_!f^!T -> f_!{}", shift.label()))),
        }
    }

    /// `T → f_!C` through the dual of `σ_T`.
    pub fn tau_unit(&self) -> Result<Morphism<F>> {
        let t = self.ctx.unit_d();
        hom_unit_inv(&t).then(&dual_mor(&self.ctx.sigma(&t)?)?)?.then(&self.witness)
    }
}

/// `ω: f_*X → f_!(X⊗C)` from `π̂` and the unit `T → f_!C`.
pub fn omega_vg<F: Field>(vd: &VerdierData<'_, F>, x: &ModuleObject<F>) -> Result<Morphism<F>> {
    let ctx = vd.ctx;
    let lx = ctx.f_lower_star(x)?;
    right_unitor_inv(&lx)
        .then(&tensor_mor(&lx.identity(), &vd.tau_unit()?)?)?
        .then(&pi_hat(ctx, &lx, &vd.shift)?)?
        .then(&ctx.f_shriek_mor(&tensor_mor(&ctx.eps(x)?, &vd.shift.identity())?)?)
}

pub fn omega_vg_map<F: Field>(vd: &VerdierData<'_, F>, x: &ModuleObject<F>) -> Result<NamedMap<F>> {
    Ok(NamedMap::new(
        MapName::OmegaVg,
        &[x],
        omega_vg(vd, x)?,
        &["right unitor⁻¹", "id⊗(witness∘D(sigma)∘unit)", "piHat", "f_!(eps⊗id)"],
    ))
}
