//! The two triads of maps relating `f_!, f^!` to `f^*, f_*`:
//! `π̂: Y⊗f_!X → f_!(f^*Y⊗X)`, `γ: f_*Hom(X,f^!Y) → Hom(f_!X,Y)`,
//! `δ: Hom(f^*Y,f^!Z) → f^!Hom(Y,Z)`, and the barred maps going the other way.
//!
//! Each context supplies one triad directly (from `π` when `f_! = f_*`, from
//! `α` when `f^! = f^*`, or by hand). The other triad is then the inverse.
//! The reconstructions below recover each member from each other one through
//! the adjunction bijections alone.

use crate::category::{
    argswap, assoc_inv, ev, hom, hom_mor, reindex, swap, tensor, tensor_mor, uncurry, ModuleObject, Morphism,
};
use crate::context::{AdjunctionContext, ContextKind};
use crate::error::Result;
use crate::linalg::Field;
use crate::maps::basic::{alpha, beta, internal_hom_iso_inv, oplax_tensor, pi};
use crate::maps::{flip, MapName, NamedMap};
use crate::report::{CheckEntry, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriadKind {
    /// `π̂, γ, δ`.
    Unbarred,
    /// `π̄, γ̄, δ̄`.
    Barred,
}

impl TriadKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TriadKind::Unbarred => "unbarred",
            TriadKind::Barred => "barred",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Member {
    Pi,
    Gamma,
    Delta,
}

impl Member {
    fn name(&self, kind: TriadKind) -> MapName {
        match (kind, self) {
            (TriadKind::Unbarred, Member::Pi) => MapName::PiHat,
            (TriadKind::Unbarred, Member::Gamma) => MapName::Gamma,
            (TriadKind::Unbarred, Member::Delta) => MapName::Delta,
            (TriadKind::Barred, Member::Pi) => MapName::PiBar,
            (TriadKind::Barred, Member::Gamma) => MapName::GammaBar,
            (TriadKind::Barred, Member::Delta) => MapName::DeltaBar,
        }
    }
}

const MEMBERS: [Member; 3] = [Member::Pi, Member::Gamma, Member::Delta];

/// `π̂: Y⊗f_!X → f_!(f^*Y⊗X)`.
pub fn pi_hat<F: Field>(ctx: &AdjunctionContext<F>, y: &ModuleObject<F>, x: &ModuleObject<F>) -> Result<Morphism<F>> {
    match ctx.kind() {
        ContextKind::Identity(_) | ContextKind::Grothendieck(_) => pi(ctx, y, x),
        ContextKind::Twist(c) => assoc_inv(y, x, c),
        ContextKind::Shifted { base, shift } => {
            let regroup = base.f_shriek_mor(&assoc_inv(&base.f_star(y)?, x, shift)?)?;
            pi_hat(base, y, &tensor(x, shift)?)?.then(&regroup)
        }
        ContextKind::Hopf(_) => pi_bar(ctx, y, x)?.inverse(),
    }
}

/// `γ: f_*Hom(X, f^!Y) → Hom(f_!X, Y)`.
pub fn gamma<F: Field>(ctx: &AdjunctionContext<F>, x: &ModuleObject<F>, y: &ModuleObject<F>) -> Result<Morphism<F>> {
    match ctx.kind() {
        ContextKind::Identity(_) | ContextKind::Grothendieck(_) => {
            let post = hom_mor(&ctx.f_lower_star(x)?.identity(), &ctx.sigma(y)?)?;
            beta(ctx, x, &ctx.f_upper_shriek(y)?)?.then(&post)
        }
        ContextKind::Twist(c) => reindex(x, c, y),
        ContextKind::Shifted { base, shift } => {
            let pre = base.f_lower_star_mor(&reindex(x, shift, &base.f_upper_shriek(y)?)?)?;
            pre.then(&gamma(base, &tensor(x, shift)?, y)?)
        }
        ContextKind::Hopf(_) => gamma_bar(ctx, x, y)?.inverse(),
    }
}

/// `δ: Hom(f^*Y, f^!Z) → f^!Hom(Y,Z)`.
pub fn delta<F: Field>(ctx: &AdjunctionContext<F>, y: &ModuleObject<F>, z: &ModuleObject<F>) -> Result<Morphism<F>> {
    match ctx.kind() {
        ContextKind::Identity(_) | ContextKind::Grothendieck(_) => {
            let uz = ctx.f_upper_shriek(z)?;
            let src = hom(&ctx.f_star(y)?, &uz)?;
            let body = internal_hom_iso_inv(ctx, y, &uz)?.then(&hom_mor(&y.identity(), &ctx.sigma(z)?)?)?;
            ctx.adj_shriek(&src, &body)
        }
        ContextKind::Twist(c) => argswap(y, c, z),
        ContextKind::Shifted { base, shift } => {
            let swapped = argswap(&base.f_star(y)?, shift, &base.f_upper_shriek(z)?)?;
            swapped.then(&hom_mor(&shift.identity(), &delta(base, y, z)?)?)
        }
        ContextKind::Hopf(_) => delta_bar(ctx, y, z)?.inverse(),
    }
}

/// `π̄: f_!(f^*Y⊗X) → Y⊗f_!X`.
pub fn pi_bar<F: Field>(ctx: &AdjunctionContext<F>, y: &ModuleObject<F>, x: &ModuleObject<F>) -> Result<Morphism<F>> {
    if ctx.shriek_is_star() {
        let shriek_x = ctx.f_shriek(x)?;
        oplax_tensor(ctx, &ctx.f_star(y)?, x)?.then(&tensor_mor(&ctx.sigma(y)?, &shriek_x.identity())?)
    } else {
        pi_hat(ctx, y, x)?.inverse()
    }
}

/// `γ̄: Hom(f_!X, Y) → f_*Hom(X, f^!Y)`.
pub fn gamma_bar<F: Field>(
    ctx: &AdjunctionContext<F>,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    if ctx.shriek_is_star() {
        let sx = ctx.f_shriek(x)?;
        let body = alpha(ctx, &sx, y)?.then(&hom_mor(&ctx.zeta(x)?, &ctx.f_star(y)?.identity())?)?;
        ctx.adj_lower(&hom(&sx, y)?, &body)
    } else {
        gamma(ctx, x, y)?.inverse()
    }
}

/// `δ̄: f^!Hom(Y,Z) → Hom(f^*Y, f^!Z)`.
pub fn delta_bar<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    if ctx.shriek_is_star() {
        alpha(ctx, y, z)
    } else {
        delta(ctx, y, z)?.inverse()
    }
}

/// Direct construction of one member at `(x, y, z)`: `π` at `(y, x)`,
/// `γ` at `(x, y)`, `δ` at `(y, z)`.
pub fn direct<F: Field>(
    ctx: &AdjunctionContext<F>,
    kind: TriadKind,
    member: Member,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    match (kind, member) {
        (TriadKind::Unbarred, Member::Pi) => pi_hat(ctx, y, x),
        (TriadKind::Unbarred, Member::Gamma) => gamma(ctx, x, y),
        (TriadKind::Unbarred, Member::Delta) => delta(ctx, y, z),
        (TriadKind::Barred, Member::Pi) => pi_bar(ctx, y, x),
        (TriadKind::Barred, Member::Gamma) => gamma_bar(ctx, x, y),
        (TriadKind::Barred, Member::Delta) => delta_bar(ctx, y, z),
    }
}

/// Rebuilds `target` from the direct construction of `source`.
pub fn reconstruct<F: Field>(
    ctx: &AdjunctionContext<F>,
    kind: TriadKind,
    target: Member,
    source: Member,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    use Member::*;
    match (kind, target, source) {
        (_, t, s) if t == s => direct(ctx, kind, t, x, y, z),
        (TriadKind::Unbarred, Gamma, Pi) => gamma_from_pi_hat(ctx, x, y),
        (TriadKind::Unbarred, Pi, Gamma) => pi_hat_from_gamma(ctx, y, x),
        (TriadKind::Unbarred, Delta, Pi) => delta_from_pi_hat(ctx, y, z),
        (TriadKind::Unbarred, Pi, Delta) => pi_hat_from_delta(ctx, y, x),
        (TriadKind::Unbarred, Gamma, Delta) => gamma_from_delta(ctx, x, y),
        (TriadKind::Unbarred, Delta, Gamma) => delta_from_gamma(ctx, y, z),
        (TriadKind::Barred, Gamma, Pi) => gamma_bar_from_pi_bar(ctx, x, y),
        (TriadKind::Barred, Pi, Gamma) => pi_bar_from_gamma_bar(ctx, y, x),
        (TriadKind::Barred, Delta, Pi) => delta_bar_from_pi_bar(ctx, y, z),
        (TriadKind::Barred, Pi, Delta) => pi_bar_from_delta_bar(ctx, y, x),
        (TriadKind::Barred, Gamma, Delta) => gamma_bar_from_delta_bar(ctx, x, y),
        (TriadKind::Barred, Delta, Gamma) => delta_bar_from_gamma_bar(ctx, y, z),
        _ => unreachable!("all pairs covered"),
    }
}

fn gamma_from_pi_hat<F: Field>(
    ctx: &AdjunctionContext<F>,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let uy = ctx.f_upper_shriek(y)?;
    let inner = hom(x, &uy)?;
    let zp = ctx.f_lower_star(&inner)?;
    let evaluated = tensor_mor(&ctx.eps(&inner)?, &x.identity())?.then(&ev(x, &uy)?)?;
    let adjoint = ctx.adj_shriek_inv(y, &evaluated)?;
    let joined = pi_hat(ctx, &zp, x)?.then(&adjoint)?;
    crate::category::curry(&joined, &zp, &ctx.f_shriek(x)?)
}

fn pi_hat_from_gamma<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let py = ctx.f_star(y)?;
    let pyx = tensor(&py, x)?;
    let target = ctx.f_shriek(&pyx)?;
    let curried = crate::category::curry(&ctx.zeta(&pyx)?, &py, x)?;
    let lowered = ctx.adj_lower(y, &curried)?;
    uncurry(&lowered.then(&gamma(ctx, x, &target)?)?, &ctx.f_shriek(x)?, &target)
}

fn delta_from_pi_hat<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let py = ctx.f_star(y)?;
    let uz = ctx.f_upper_shriek(z)?;
    let xp = hom(&py, &uz)?;
    let sxp = ctx.f_shriek(&xp)?;
    let evaluated = swap(&py, &xp)?.then(&ev(&py, &uz)?)?;
    let joined = swap(&sxp, y)?.then(&pi_hat(ctx, y, &xp)?)?.then(&ctx.adj_shriek_inv(z, &evaluated)?)?;
    ctx.adj_shriek(&xp, &crate::category::curry(&joined, &sxp, y)?)
}

fn pi_hat_from_delta<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let py = ctx.f_star(y)?;
    let target = ctx.f_shriek(&tensor(&py, x)?)?;
    let unit = swap(x, &py)?.then(&ctx.zeta(&tensor(&py, x)?)?)?;
    let curried = crate::category::curry(&unit, x, &py)?;
    let lifted = curried.then(&delta(ctx, y, &target)?)?;
    let down = ctx.adj_shriek_inv(&hom(y, &target)?, &lifted)?;
    swap(y, &ctx.f_shriek(x)?)?.then(&uncurry(&down, y, &target)?)
}

fn gamma_from_delta<F: Field>(
    ctx: &AdjunctionContext<F>,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let uy = ctx.f_upper_shriek(y)?;
    let inner = hom(x, &uy)?;
    let zp = ctx.f_lower_star(&inner)?;
    let flipped = flip(&ctx.eps(&inner)?, x, &uy)?;
    let lifted = flipped.then(&delta(ctx, &zp, y)?)?;
    let down = ctx.adj_shriek_inv(&hom(&zp, y)?, &lifted)?;
    flip(&down, &zp, y)
}

fn delta_from_gamma<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let py = ctx.f_star(y)?;
    let uz = ctx.f_upper_shriek(z)?;
    let xp = hom(&py, &uz)?;
    let flipped = flip(&xp.identity(), &py, &uz)?;
    let through = ctx.adj_lower(y, &flipped)?.then(&gamma(ctx, &xp, z)?)?;
    ctx.adj_shriek(&xp, &flip(&through, &ctx.f_shriek(&xp)?, z)?)
}

fn gamma_bar_from_pi_bar<F: Field>(
    ctx: &AdjunctionContext<F>,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let sx = ctx.f_shriek(x)?;
    let zp = hom(&sx, y)?;
    let pz = ctx.f_star(&zp)?;
    let joined = pi_bar(ctx, &zp, x)?.then(&ev(&sx, y)?)?;
    let up = ctx.adj_shriek(&tensor(&pz, x)?, &joined)?;
    ctx.adj_lower(&zp, &crate::category::curry(&up, &pz, x)?)
}

fn pi_bar_from_gamma_bar<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let sx = ctx.f_shriek(x)?;
    let target = tensor(y, &sx)?;
    let ut = ctx.f_upper_shriek(&target)?;
    let curried = crate::category::curry(&target.identity(), y, &sx)?;
    let lowered = curried.then(&gamma_bar(ctx, x, &target)?)?;
    let back = ctx.adj_lower_inv(&hom(x, &ut)?, &lowered)?;
    ctx.adj_shriek_inv(&target, &uncurry(&back, x, &ut)?)
}

fn delta_bar_from_pi_bar<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let hyz = hom(y, z)?;
    let xp = ctx.f_upper_shriek(&hyz)?;
    let sxp = ctx.f_shriek(&xp)?;
    let py = ctx.f_star(y)?;
    let joined = ctx
        .f_shriek_mor(&swap(&xp, &py)?)?
        .then(&pi_bar(ctx, y, &xp)?)?
        .then(&swap(y, &sxp)?)?
        .then(&uncurry(&ctx.sigma(&hyz)?, y, z)?)?;
    let up = ctx.adj_shriek(&tensor(&xp, &py)?, &joined)?;
    crate::category::curry(&up, &xp, &py)
}

fn pi_bar_from_delta_bar<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    x: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let sx = ctx.f_shriek(x)?;
    let target = tensor(y, &sx)?;
    let py = ctx.f_star(y)?;
    let ut = ctx.f_upper_shriek(&target)?;
    let curried = crate::category::curry(&swap(&sx, y)?, &sx, y)?;
    let lifted = ctx.adj_shriek(x, &curried)?.then(&delta_bar(ctx, y, &target)?)?;
    let down = ctx.adj_shriek_inv(&target, &uncurry(&lifted, &py, &ut)?)?;
    ctx.f_shriek_mor(&swap(&py, x)?)?.then(&down)
}

fn gamma_bar_from_delta_bar<F: Field>(
    ctx: &AdjunctionContext<F>,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let sx = ctx.f_shriek(x)?;
    let zp = hom(&sx, y)?;
    let flipped = flip(&zp.identity(), &sx, y)?;
    let lifted = ctx.adj_shriek(x, &flipped)?.then(&delta_bar(ctx, &zp, y)?)?;
    let down = flip(&lifted, &ctx.f_star(&zp)?, &ctx.f_upper_shriek(y)?)?;
    ctx.adj_lower(&zp, &down)
}

fn delta_bar_from_gamma_bar<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<Morphism<F>> {
    let hyz = hom(y, z)?;
    let xp = ctx.f_upper_shriek(&hyz)?;
    let uz = ctx.f_upper_shriek(z)?;
    let flipped = flip(&ctx.sigma(&hyz)?, y, z)?;
    let through = flipped.then(&gamma_bar(ctx, &xp, z)?)?;
    let back = ctx.adj_lower_inv(&hom(&xp, &uz)?, &through)?;
    flip(&back, &xp, &uz)
}

/// The three direct members of a triad at `(x, y, z)` as named maps.
pub fn triad_maps<F: Field>(
    ctx: &AdjunctionContext<F>,
    kind: TriadKind,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<[NamedMap<F>; 3]> {
    let (pi_at, gamma_at, delta_at) = ([y, x], [x, y], [y, z]);
    let factors: [&'static [&'static str]; 3] = match (kind, ctx.shriek_is_star(), ctx.shriek_is_lower_star()) {
        (TriadKind::Barred, true, _) => {
            [&["opLaxTensor", "sigma⊗id"], &["alpha", "Hom(zeta,id)", "adjoint"], &["alpha"]]
        }
        (TriadKind::Unbarred, _, true) => {
            [&["pi"], &["beta", "Hom(id,sigma)"], &["internal Hom iso⁻¹", "Hom(id,sigma)", "adjoint"]]
        }
        _ => [&[], &[], &[]],
    };
    Ok([
        NamedMap::new(Member::Pi.name(kind), &pi_at, direct(ctx, kind, Member::Pi, x, y, z)?, factors[0]),
        NamedMap::new(Member::Gamma.name(kind), &gamma_at, direct(ctx, kind, Member::Gamma, x, y, z)?, factors[1]),
        NamedMap::new(Member::Delta.name(kind), &delta_at, direct(ctx, kind, Member::Delta, x, y, z)?, factors[2]),
    ])
}

/// `π̄, γ̄, δ̄` with `δ̄ = α`; needs `f^! = f^*`.
pub fn upper_star_triad<F: Field>(
    ctx: &AdjunctionContext<F>,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<[NamedMap<F>; 3]> {
    if !ctx.shriek_is_star() {
        return Err(crate::error::Error::MissingFunctor("f^! = f^*"));
    }
    triad_maps(ctx, TriadKind::Barred, x, y, z)
}

/// `π̂ = π, γ, δ`; needs `f_! = f_*`.
pub fn lower_star_triad<F: Field>(
    ctx: &AdjunctionContext<F>,
    x: &ModuleObject<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<[NamedMap<F>; 3]> {
    if !ctx.shriek_is_lower_star() {
        return Err(crate::error::Error::MissingFunctor("f_! = f_*"));
    }
    triad_maps(ctx, TriadKind::Unbarred, x, y, z)
}

/// Rebuilds every member of the triad from each other member and compares
/// with the direct construction, for every sample `(x, y, z)`.
pub fn conjugation_check<F: Field>(
    ctx: &AdjunctionContext<F>,
    kind: TriadKind,
    samples: &[(ModuleObject<F>, ModuleObject<F>, ModuleObject<F>)],
) -> Result<CheckReport> {
    let mut report = CheckReport::new(ctx.name(), "conjugation");
    for (x, y, z) in samples {
        for target in MEMBERS {
            let want = direct(ctx, kind, target, x, y, z)?;
            for source in MEMBERS {
                if source == target {
                    continue;
                }
                let got = reconstruct(ctx, kind, target, source, x, y, z)?;
                let name = format!("conjugation:{}", kind.as_str());
                let mut e = CheckEntry::equality(name, crate::maps::labels(&[x, y, z]), got.mat(), want.mat());
                e.map = Some(format!("{}<-{}", target.name(kind), source.name(kind)));
                report.push(e);
            }
        }
    }
    report.finalize();
    Ok(report)
}
