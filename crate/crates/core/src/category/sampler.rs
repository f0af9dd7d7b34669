//! Seeded random modules and module maps for property batteries.
//!
//! Objects are drawn from a generating family (trivial, one-dimensional
//! characters, permutation modules on cosets, regular, standard) and closed
//! under ⊗, ⊕, Hom and duals, subject to a dimension cap.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::monoidal::{direct_sum, dual, hom, intertwiners, tensor};
use crate::category::named::{character_modules, permutation_module, regular, standard_module, trivial};
use crate::category::object::{ModuleObject, Morphism};
use crate::hopf::{builtin_subgroups, HopfAlgebra};
use crate::linalg::{Field, Mat};

pub struct ObjectSampler<F: Field> {
    base: Vec<ModuleObject<F>>,
    rng: ChaCha8Rng,
    max_dim: usize,
}

impl<F: Field> ObjectSampler<F> {
    pub fn new(h: &Arc<HopfAlgebra<F>>, seed: u64, max_dim: usize) -> Self {
        let max_dim = max_dim.max(1);
        ObjectSampler { base: generating_family(h, max_dim), rng: ChaCha8Rng::seed_from_u64(seed), max_dim }
    }

    pub fn base(&self) -> &[ModuleObject<F>] {
        &self.base
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn pick_base(&mut self) -> ModuleObject<F> {
        let i = self.rng.gen_range(0..self.base.len());
        self.base[i].clone()
    }

    fn draw(&mut self, depth: usize) -> ModuleObject<F> {
        if depth == 0 {
            return self.pick_base();
        }
        match self.rng.gen_range(0..10) {
            0..=4 => self.pick_base(),
            5 | 6 => {
                let (a, b) = (self.draw(depth - 1), self.draw(depth - 1));
                tensor(&a, &b).expect("same algebra")
            }
            7 => {
                let (a, b) = (self.draw(depth - 1), self.draw(depth - 1));
                direct_sum(&a, &b).expect("same algebra")
            }
            8 => {
                let (a, b) = (self.draw(depth - 1), self.draw(depth - 1));
                hom(&a, &b).expect("same algebra")
            }
            _ => dual(&self.draw(depth - 1)),
        }
    }

    /// One object of dimension at most the cap.
    pub fn sample(&mut self) -> ModuleObject<F> {
        for _ in 0..64 {
            let x = self.draw(2);
            if x.dim() <= self.max_dim {
                return x;
            }
        }
        self.pick_base()
    }

    pub fn sample_n(&mut self, n: usize) -> Vec<ModuleObject<F>> {
        (0..n).map(|_| self.sample()).collect()
    }

    /// A random nonzero intertwiner `x → y`, if `Hom_B(x, y)` is nonzero.
    pub fn sample_morphism(&mut self, x: &ModuleObject<F>, y: &ModuleObject<F>) -> Option<Morphism<F>> {
        let basis = intertwiners(x, y).ok()?;
        if basis.is_empty() {
            return None;
        }
        let f = x.field().clone();
        loop {
            let mut m = Mat::zeros(&f, y.dim(), x.dim());
            for b in &basis {
                let c = f.from_i64(self.rng.gen_range(-2..=2));
                m.add_scaled(&c, b.mat()).expect("basis shapes");
            }
            if !m.is_zero() {
                return Some(Morphism::unchecked(x.clone(), y.clone(), m));
            }
        }
    }
}

/// The generating family for a Hopf algebra, restricted to `max_dim`.
pub fn generating_family<F: Field>(h: &Arc<HopfAlgebra<F>>, max_dim: usize) -> Vec<ModuleObject<F>> {
    let mut out = vec![trivial(h)];
    if let Some(g) = h.group() {
        if let Ok(chars) = character_modules(h) {
            out.extend(chars.into_iter().skip(1));
        }
        let subgroups: Vec<(String, Vec<usize>)> = match builtin_subgroups(g) {
            Ok(named) => named.into_iter().map(|(n, gens)| (format!("perm:{n}"), g.closure(&gens))).collect(),
            Err(_) => g.some_subgroups().into_iter().enumerate().map(|(i, e)| (format!("perm:{i}"), e)).collect(),
        };
        for (label, elems) in subgroups {
            let index = g.order() / elems.len();
            if index > 1 && index < g.order() && index <= max_dim {
                out.push(permutation_module(h, &elems, label).expect("group algebra"));
            }
        }
        if let Ok(std) = standard_module(h) {
            if std.dim() <= max_dim {
                out.push(std);
            }
        }
    }
    if h.dim() <= max_dim && h.dim() > 1 {
        out.push(regular(h));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{builtin_group, group_algebra};
    use crate::linalg::Rationals;

    #[test]
    fn deterministic_and_capped() {
        let h = Arc::new(group_algebra(&builtin_group("S3").unwrap(), &Rationals));
        let a: Vec<String> = ObjectSampler::new(&h, 7, 6).sample_n(20).iter().map(|x| x.label().to_string()).collect();
        let b: Vec<String> = ObjectSampler::new(&h, 7, 6).sample_n(20).iter().map(|x| x.label().to_string()).collect();
        assert_eq!(a, b);
        let mut s = ObjectSampler::new(&h, 3, 6);
        for x in s.sample_n(20) {
            assert!(x.dim() <= 6);
            x.verify().unwrap();
        }
    }

    #[test]
    fn sampled_morphisms_intertwine() {
        let h = Arc::new(group_algebra(&builtin_group("S3").unwrap(), &Rationals));
        let mut s = ObjectSampler::new(&h, 11, 6);
        let xs = s.sample_n(6);
        for x in &xs {
            for y in &xs {
                if let Some(m) = s.sample_morphism(x, y) {
                    assert!(m.is_intertwiner());
                }
            }
        }
    }
}
