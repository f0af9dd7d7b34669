//! Maps and checks around duals: `φ`, the two coherence diagrams for `f^*`
//! against evaluation and `ν`, and the twisted-dual battery for a candidate
//! dualizing object.

use crate::category::{
    ev, hom, is_invertible, nu, rho_twisted, right_unitor, tensor, tensor_mor, unit_object, ModuleObject, Morphism,
};
use crate::context::AdjunctionContext;
use crate::error::Result;
use crate::linalg::Field;
use crate::maps::basic::{alpha, dual_comparison};
use crate::maps::triads::pi_bar;
use crate::maps::{labels, MapName, NamedMap};
use crate::report::{CheckEntry, CheckReport};

/// `φ: f^*Y⊗f^!Z → f^!(Y⊗Z)`, adjoint to `(id⊗σ)∘π̂⁻¹`.
pub fn phi<F: Field>(ctx: &AdjunctionContext<F>, y: &ModuleObject<F>, z: &ModuleObject<F>) -> Result<Morphism<F>> {
    let uz = ctx.f_upper_shriek(z)?;
    let body = pi_bar(ctx, y, &uz)?.then(&tensor_mor(&y.identity(), &ctx.sigma(z)?)?)?;
    ctx.adj_shriek(&tensor(&ctx.f_star(y)?, &uz)?, &body)
}

/// `f^*Y⊗f^!T → f^!Y`: `φ` at `Z = T` followed by the unitor.
pub fn phi_v<F: Field>(ctx: &AdjunctionContext<F>, y: &ModuleObject<F>) -> Result<Morphism<F>> {
    phi(ctx, y, &ctx.unit_d())?.then(&ctx.f_upper_shriek_mor(&right_unitor(y))?)
}

/// `φ` at `(Y, Z)` and its unit specialization at `Y`.
pub fn phi_map<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<(NamedMap<F>, NamedMap<F>)> {
    let full = NamedMap::new(MapName::Phi, &[y, z], phi(ctx, y, z)?, &["piBar", "id⊗sigma", "adjoint"]);
    let unit = NamedMap::new(MapName::Phi, &[y], phi_v(ctx, y)?, &["phi(Y,T)", "f^!(right unitor)"]);
    Ok((full, unit))
}

/// The two diagrams relating `f^*` applied to `ev` and `ν` with the dual
/// comparison `f^*DY → Df^*Y`, plus the rank of that comparison.
pub fn coherence<F: Field>(
    ctx: &AdjunctionContext<F>,
    y: &ModuleObject<F>,
    z: &ModuleObject<F>,
) -> Result<Vec<CheckEntry>> {
    let t = ctx.unit_d();
    let dy = hom(y, &t)?;
    let (py, pz) = (ctx.f_star(y)?, ctx.f_star(z)?);
    let comparison = dual_comparison(ctx, y)?;

    let ev_lhs = ctx.strong_inv(&dy, y)?.then(&ctx.f_star_mor(&ev(y, &t)?)?)?.then(&ctx.unit_iso()?)?;
    let ev_rhs = tensor_mor(&comparison, &py.identity())?.then(&ev(&py, &ctx.unit_c())?)?;

    let nu_lhs = ctx.strong_inv(&dy, z)?.then(&ctx.f_star_mor(&nu(y, z)?)?)?.then(&alpha(ctx, y, z)?)?;
    let nu_rhs = tensor_mor(&comparison, &pz.identity())?.then(&nu(&py, &pz)?)?;

    let mut ev_entry = CheckEntry::equality("evaluationCoherence", labels(&[y]), ev_lhs.mat(), ev_rhs.mat());
    ev_entry.map = Some("ev∘(dual comparison⊗id)".into());
    let mut nu_entry = CheckEntry::equality("nuCoherence", labels(&[y, z]), nu_lhs.mat(), nu_rhs.mat());
    nu_entry.map = Some("nu∘(dual comparison⊗id)".into());
    let rank = NamedMap::new(MapName::Alpha, &[y], comparison, &["alpha(Y,T)", "Hom(id, unit iso)"])
        .entry("dualComparison", true);
    Ok(vec![ev_entry, nu_entry, rank])
}

pub fn coherence_checks<F: Field>(
    ctx: &AdjunctionContext<F>,
    samples: &[(ModuleObject<F>, ModuleObject<F>)],
) -> Result<CheckReport> {
    let mut report = CheckReport::new(ctx.name(), "coherence");
    for (y, z) in samples {
        for e in coherence(ctx, y, z)? {
            report.push(e);
        }
    }
    report.finalize();
    Ok(report)
}

/// Tests the equivalence "W invertible ⟺ S is W-reflexive" and, when it
/// holds, W-reflexivity of every sample.
pub fn dualizing_object_battery<F: Field>(w: &ModuleObject<F>, samples: &[ModuleObject<F>]) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("dualizing({})", w.label()), "dualizing");
    let s = unit_object(w.algebra());
    let inv = is_invertible(w);
    let mut inv_entry = CheckEntry::new("invertible", labels(&[w]), true);
    inv_entry.dims = Some(inv.coev_dims);
    inv_entry.rank = Some(inv.coev_rank);
    inv_entry.is_iso = Some(inv.invertible);
    inv_entry.map = Some("coev".into());
    report.push(inv_entry);

    let unit_rho = rho_twisted(&s, w)?;
    let unit_reflexive = unit_rho.is_iso();
    let mut unit_entry = CheckEntry::rank_of("unitReflexive", "rhoW", labels(&[w, &s]), unit_rho.mat(), inv.invertible);
    if !unit_entry.pass {
        unit_entry.details = "reflexivity of S disagrees with invertibility of W".into();
    }
    report.push(unit_entry);
    let agree = CheckEntry::new("invertibleIffReflexive", labels(&[w]), unit_reflexive == inv.invertible)
        .with_details(format!("invertible={}, S reflexive={}", inv.invertible, unit_reflexive));
    report.push(agree);

    if inv.invertible {
        for x in samples {
            let r = rho_twisted(x, w)?;
            let mut e = CheckEntry::rank_of("reflexive", "rhoW", labels(&[w, x]), r.mat(), true);
            if !r.is_intertwiner() {
                e.pass = false;
                e.details = "matrix does not intertwine".into();
            }
            report.push(e);
        }
    }
    report.finalize();
    Ok(report)
}
