use std::sync::Arc;

use sixops::category::*;
use sixops::context::*;
use sixops::hopf::{builtin_group, builtin_subgroup, group_algebra, subgroup_inclusion_named, HopfAlgebra};
use sixops::linalg::{Field, PrimeField, Rationals};
use sixops::maps::*;

fn algebra<F: Field>(g: &str, f: &F) -> Arc<HopfAlgebra<F>> {
    Arc::new(group_algebra(&builtin_group(g).unwrap(), f))
}

fn hopf_ctx<F: Field>(g: &str, h: &str, f: &F) -> Arc<AdjunctionContext<F>> {
    let group = builtin_group(g).unwrap();
    let gens = builtin_subgroup(&group, h).unwrap();
    wirthmueller_context(subgroup_inclusion_named(&group, &gens, h, f).unwrap())
}

fn triples<F: Field>(
    ctx: &AdjunctionContext<F>,
    seed: u64,
    n: usize,
) -> Vec<(ModuleObject<F>, ModuleObject<F>, ModuleObject<F>)> {
    let mut sc = ObjectSampler::new(&ctx.cat_c(), seed, 3);
    let mut sd = ObjectSampler::new(&ctx.cat_d(), seed + 1, 3);
    (0..n).map(|_| (sc.sample(), sd.sample(), sd.sample())).collect()
}

fn assert_report(r: &sixops::report::CheckReport) {
    let bad: Vec<_> = r.failures().collect();
    assert!(bad.is_empty(), "{} {}: {:#?}", r.context, r.battery, bad.iter().take(3).collect::<Vec<_>>());
}

#[test]
fn conjugation_hopf_both_triads() {
    let ctx = hopf_ctx("S3", "C3", &PrimeField::new(3).unwrap());
    let s = triples(&ctx, 1, 3);
    assert_report(&conjugation_check(&ctx, TriadKind::Barred, &s).unwrap());
    assert_report(&conjugation_check(&ctx, TriadKind::Unbarred, &s).unwrap());
}

#[test]
fn conjugation_twist_both_triads() {
    let h = algebra("S3", &Rationals);
    for name in ["char:sign", "standard"] {
        let ctx = twist_context(&named_module(&h, name).unwrap());
        let s = triples(&ctx, 2, 3);
        assert_report(&conjugation_check(&ctx, TriadKind::Unbarred, &s).unwrap());
        assert_report(&conjugation_check(&ctx, TriadKind::Barred, &s).unwrap());
    }
}

#[test]
fn coherence_hopf() {
    let ctx = hopf_ctx("S3", "C2", &Rationals);
    let s: Vec<_> = triples(&ctx, 3, 4).into_iter().map(|(_, y, z)| (y, z)).collect();
    assert_report(&coherence_checks(&ctx, &s).unwrap());
}

#[test]
fn wirthmueller_relations() {
    let ctx = hopf_ctx("S3", "C3", &Rationals);
    let wd = WirthmuellerData::automatic(&ctx).unwrap();
    for e in unit_agreement(&wd).unwrap() {
        assert!(e.pass, "{e:?}");
    }
    for (x, y, _) in triples(&ctx, 4, 3) {
        for e in relation_checks(&wd, &y).unwrap() {
            assert!(e.pass, "{e:?}");
        }
        assert_report(&psi_inverse_check(&wd, &y).unwrap());
        assert!(omega(&wd, &x).unwrap().is_iso());
        let cand = xi_from_omega(&wd, &x).unwrap();
        assert_report(&omega_criterion_check(&wd, &x, &cand).unwrap());
    }
}

#[test]
fn phi_matches_nu_in_twist() {
    let h = algebra("S3", &Rationals);
    let c = named_module(&h, "standard").unwrap();
    let ctx = twist_context(&c);
    for (_, y, z) in triples(&ctx, 5, 4) {
        let p = phi(&ctx, &y, &z).unwrap();
        assert_eq!(p.mat(), nu_general(&y, &c, &z).unwrap().mat());
        assert!(p.is_iso());
    }
}

#[test]
fn grothendieck_triangles() {
    let ctx = hopf_ctx("S3", "C3", &Rationals);
    let wd = Arc::new(WirthmuellerData::automatic(&ctx).unwrap());
    let g = grothendieck_from_wirthmueller(&wd, &[ctx.unit_c()]).unwrap();
    for (x, y, z) in triples(&g, 6, 3) {
        let sx = g.f_shriek(&x).unwrap();
        let left = g.f_shriek_mor(&g.zeta(&x).unwrap()).unwrap().then(&g.sigma(&sx).unwrap()).unwrap();
        assert!(left.mat().is_identity());
        let uy = g.f_upper_shriek(&y).unwrap();
        let right = g.zeta(&uy).unwrap().then(&g.f_upper_shriek_mor(&g.sigma(&y).unwrap()).unwrap()).unwrap();
        assert!(right.mat().is_identity());
        assert!(phi_v(&g, &y).unwrap().is_iso());
        let s = vec![(x.clone(), y.clone(), z.clone())];
        assert_report(&conjugation_check(&g, TriadKind::Unbarred, &s).unwrap());
    }
}

#[test]
fn generalized_omega_detects_invertibility() {
    let h = algebra("S3", &Rationals);
    let x = trivial(&h);
    for (name, iso) in [("char:sign", true), ("standard", false), ("trivial", true)] {
        let c = named_module(&h, name).unwrap();
        let ctx = twist_context(&c);
        let vd = VerdierData::search(&ctx, &dual(&c)).unwrap();
        let m = omega_vg_map(&vd, &x).unwrap();
        assert_eq!(m.is_iso, iso, "{name}");
        if !iso {
            assert_eq!(m.morphism.mat().dims(), (4, 1));
        }
        assert!(m.morphism.is_intertwiner());
    }
}

#[test]
fn shifted_conjugation_both_triads() {
    let ctx = hopf_ctx("S3", "C3", &PrimeField::new(7).unwrap());
    let shift = named_module(&ctx.cat_c(), "char:1").unwrap();
    let sh = shifted_pair(&ctx, &shift).unwrap();
    let s = triples(&sh, 7, 2);
    assert_report(&conjugation_check(&sh, TriadKind::Unbarred, &s).unwrap());
    assert_report(&conjugation_check(&sh, TriadKind::Barred, &s).unwrap());
}

#[test]
fn dualizing_battery_standard_fails_with_dims() {
    let h = algebra("S3", &Rationals);
    let w = named_module(&h, "standard").unwrap();
    let mut smp = ObjectSampler::new(&h, 9, 4);
    let r = dualizing_object_battery(&w, &smp.sample_n(4)).unwrap();
    assert_report(&r);
    let unit = r.named("unitReflexive").next().unwrap();
    assert_eq!(unit.dims, Some([1, 4]));
    assert_eq!(unit.is_iso, Some(false));
    let sign = named_module(&h, "char:sign").unwrap();
    let r = dualizing_object_battery(&sign, &smp.sample_n(4)).unwrap();
    assert_report(&r);
    assert_eq!(r.named("reflexive").count(), 4);
}

#[test]
fn unnormalized_witness_breaks_psi_inverse() {
    // 1 ⊂ C2: every unit of k[C2] gives a witness, but only scalars make ψ = ω⁻¹
    let ctx = hopf_ctx("C2", "C1", &Rationals);
    let good = WirthmuellerData::automatic(&ctx).unwrap();
    assert!(good.is_normalized().unwrap());
    let (src, dst) = (good.witness().src().clone(), good.witness().dst().clone());
    let basis = intertwiners(&src, &dst).unwrap();
    let other = basis.iter().find(|b| !b.mat().is_identity()).unwrap();
    let mut m = good.witness().mat().clone();
    m.add_scaled(&Rationals.from_i64(2), other.mat()).unwrap();
    let bad = WirthmuellerData::new(&ctx, good.shift(), Morphism::unchecked(src, dst, m)).unwrap();
    assert!(!bad.is_normalized().unwrap());
    let y = ctx.unit_d();
    for e in relation_checks(&bad, &y).unwrap() {
        assert!(e.pass, "{e:?}");
    }
    assert!(!psi_inverse_check(&bad, &y).unwrap().all_pass());
    assert!(omega(&bad, &ctx.unit_c()).unwrap().is_iso());
}
