use std::sync::Arc;

use proptest::prelude::*;
use sixops::category::*;
use sixops::hopf::{builtin_group, group_algebra, truncated_primitive, HopfAlgebra};
use sixops::linalg::{Field, Mat, PrimeField, Rationals};

fn algebra<F: Field>(g: &str, f: &F) -> Arc<HopfAlgebra<F>> {
    Arc::new(group_algebra(&builtin_group(g).unwrap(), f))
}

#[test]
fn sign_squared_is_trivial_and_self_dual() {
    let h = algebra("S3", &Rationals);
    let sign = named_module(&h, "char:sign").unwrap();
    let t = trivial(&h);
    assert!(tensor(&sign, &sign).unwrap().same_module(&t));
    assert!(dual(&sign).same_module(&sign));
    assert!(dual(&t).same_module(&t));
    // brute-force oracle: a 1x1 intertwiner trivial -> sign must satisfy
    // sign(g)·m = m for the transposition, so m = 0
    assert!(intertwiners(&t, &sign).unwrap().is_empty());
    assert_eq!(intertwiners(&sign, &sign).unwrap().len(), 1);
}

#[test]
fn unit_object_acts_by_counit() {
    let h = algebra("S3", &Rationals);
    let s = unit_object(&h);
    s.verify().unwrap();
    assert!(s.actions().into_iter().all(|m| m.is_identity()));
    let ss = tensor(&s, &s).unwrap();
    assert!(ss.same_module(&s));
    assert!(left_unitor(&s).mat().is_identity());
    let x = named_module(&h, "standard").unwrap();
    assert!(tensor(&s, &x).unwrap().same_module(&x));
    assert!(hom_unit(&x).mat().is_identity());
    assert!(hom(&s, &x).unwrap().same_module(&x));
}

#[test]
fn regular_tensor_dimension_and_coev() {
    let h = algebra("C2", &Rationals);
    let reg = regular(&h);
    assert_eq!(tensor(&reg, &reg).unwrap().dim(), 4);
    let c = coev(&reg);
    let f = Rationals;
    // dual-basis tensor x_0⊗x^0 + x_1⊗x^1 at indices 0 and 3
    let expect = Mat::from_i64(&f, &[vec![1], vec![0], vec![0], vec![1]]).unwrap();
    assert_eq!(c.mat(), &expect);
    assert!(c.is_intertwiner());
}

#[test]
fn nu_matches_direct_formula() {
    let h = algebra("S3", &Rationals);
    let f = Rationals;
    let mut s = ObjectSampler::new(&h, 5, 6);
    let xs = s.sample_n(6);
    for x in &xs {
        for w in xs.iter().take(3) {
            let n = nu(x, w).unwrap();
            assert!(n.is_intertwiner());
            let (dx, dw) = (x.dim(), w.dim());
            // φ_j⊗w_i ↦ (x ↦ φ_j(x)·w_i) = E_ij
            let direct = Mat::from_fn(&f, dx * dw, dx * dw, |r, c| {
                let (j, i) = (c / dw, c % dw);
                if r == i * dx + j {
                    f.one()
                } else {
                    f.zero()
                }
            });
            assert_eq!(n.mat(), &direct);
            assert_eq!(n.mat().rank(), dx * dw);
        }
    }
    let sx = unit_object(&h);
    let std = named_module(&h, "standard").unwrap();
    assert!(nu(&sx, &std).unwrap().mat().is_identity());
}

#[test]
fn rho_double_dual() {
    let h = algebra("S3", &Rationals);
    let s = unit_object(&h);
    assert!(rho(&s).unwrap().mat().is_identity());
    let t2 = direct_sum(&trivial(&h), &trivial(&h)).unwrap();
    let r = rho(&t2).unwrap();
    assert!(r.is_intertwiner());
    assert_eq!(r.mat().rank(), 2);
    let sign = named_module(&h, "char:sign").unwrap();
    let std = named_module(&h, "standard").unwrap();
    let rw = rho_twisted(&std, &sign).unwrap();
    assert_eq!(rw.mat().rank(), 2);
    assert_eq!(twisted_dual(&twisted_dual(&std, &sign).unwrap(), &sign).unwrap().dim(), 2);
    let rs = rho_twisted(&s, &std).unwrap();
    assert_eq!((rs.mat().cols(), rs.mat().rows()), (1, 4));
    assert_eq!(
        twisted_dual(&twisted_dual(&std, &std).unwrap(), &std).unwrap().dim(),
        std.dim() * std.dim() * std.dim()
    );
    assert!(rho_twisted(&std, &s).unwrap().mat() == rho(&std).unwrap().mat());
}

#[test]
fn invertibility() {
    let h = algebra("S3", &Rationals);
    assert!(is_invertible(&named_module(&h, "char:sign").unwrap()).invertible);
    assert!(is_invertible(&unit_object(&h)).invertible);
    let std = is_invertible(&named_module(&h, "standard").unwrap());
    assert!(!std.invertible);
    assert_eq!(std.coev_dims, [1, 4]);
}

#[test]
fn duality_and_tensor_hom_over_f2() {
    let f = PrimeField::new(2).unwrap();
    let h = algebra("S3", &f);
    let mut s = ObjectSampler::new(&h, 9, 6);
    let xs = s.sample_n(5);
    for x in &xs {
        let d = duality_data(x).unwrap();
        assert!(d.first_zigzag().unwrap().mat().is_identity());
        assert!(d.ev.is_intertwiner() && d.coev.is_intertwiner());
        assert!(nu(x, x).unwrap().is_iso());
    }
    for (i, x) in xs.iter().enumerate() {
        let xp = &xs[(i + 1) % xs.len()];
        let w = &xs[(i + 2) % xs.len()];
        if x.dim() * xp.dim() * w.dim() > 30 {
            continue;
        }
        let adj = tensor_hom_adjunction(x, xp, w).unwrap();
        assert!(adj.verify(x, xp, w).unwrap());
    }
    let x = &xs[0];
    let adj = tensor_hom_adjunction(x, &unit_object(&h), x).unwrap();
    assert_eq!(adj.tensor_side.len(), adj.hom_side.len());
}

#[test]
fn non_group_hopf_modules() {
    let f = PrimeField::new(3).unwrap();
    let u = Arc::new(truncated_primitive(&f, 3));
    let reg = regular(&u);
    reg.verify().unwrap();
    let t = tensor(&reg, &reg).unwrap();
    t.verify().unwrap();
    let hm = hom(&reg, &reg).unwrap();
    hm.verify().unwrap();
    assert!(swap(&reg, &reg).unwrap().is_intertwiner());
    assert!(nu(&reg, &reg).unwrap().is_intertwiner());
    assert!(duality_data(&reg).is_ok());
    // Hom_u(k, u) is spanned by the socle x^2
    assert_eq!(intertwiners(&unit_object(&u), &reg).unwrap().len(), 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn swap_is_an_intertwiner(seed in 0u64..1000) {
        let f = PrimeField::new(3).unwrap();
        let h = algebra("S3", &f);
        let mut s = ObjectSampler::new(&h, seed, 6);
        let (x, y) = (s.sample(), s.sample());
        let sw = swap(&x, &y).unwrap();
        prop_assert!(Morphism::new(sw.src().clone(), sw.dst().clone(), sw.mat().clone()).is_ok());
        let back = swap(&y, &x).unwrap();
        prop_assert!(back.compose(&sw).unwrap().mat().is_identity());
    }

    #[test]
    fn zigzags_hold(seed in 0u64..1000) {
        let h = algebra("D4", &Rationals);
        let mut s = ObjectSampler::new(&h, seed, 8);
        let x = s.sample();
        let d = duality_data(&x).unwrap();
        prop_assert!(d.second_zigzag().unwrap().mat().is_identity());
        prop_assert_eq!(is_invertible(&x).invertible, x.dim() == 1);
    }

    #[test]
    fn curry_round_trip(seed in 0u64..1000) {
        let h = algebra("C4", &Rationals);
        let mut s = ObjectSampler::new(&h, seed, 4);
        let (a, b, c) = (s.sample(), s.sample(), s.sample());
        let e = ev(&b, &c).unwrap();
        let hbc = hom(&b, &c).unwrap();
        let cur = curry(&e, &hbc, &b).unwrap();
        prop_assert!(cur.mat().is_identity());
        if let Some(m) = s.sample_morphism(&tensor(&a, &b).unwrap(), &c) {
            let g = curry(&m, &a, &b).unwrap();
            prop_assert!(g.is_intertwiner());
            let back = uncurry(&g, &b, &c).unwrap();
            prop_assert_eq!(back.mat(), m.mat());
        }
    }
}
