//! Named natural maps of an adjunction context, built as explicit
//! morphisms, and the diagram checks relating them.

pub mod basic;
pub mod duality;
pub mod triads;
pub mod wirthmueller;

use std::fmt;

use crate::category::{curry, swap, uncurry, ModuleObject, Morphism};
use crate::error::Result;
use crate::linalg::Field;
use crate::report::CheckEntry;

pub use basic::*;
pub use duality::*;
pub use triads::*;
pub use wirthmueller::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapName {
    LaxUnit,
    LaxTensor,
    Alpha,
    InternalHomAdj,
    Beta,
    Pi,
    OpLaxUnit,
    OpLaxTensor,
    PiHat,
    PiBar,
    Gamma,
    GammaBar,
    Delta,
    DeltaBar,
    Phi,
    Tau,
    Xi,
    Omega,
    Psi,
    OmegaVg,
}

impl MapName {
    pub fn as_str(&self) -> &'static str {
        match self {
            MapName::LaxUnit => "laxUnit",
            MapName::LaxTensor => "laxTensor",
            MapName::Alpha => "alpha",
            MapName::InternalHomAdj => "internalHomAdj",
            MapName::Beta => "beta",
            MapName::Pi => "pi",
            MapName::OpLaxUnit => "opLaxUnit",
            MapName::OpLaxTensor => "opLaxTensor",
            MapName::PiHat => "piHat",
            MapName::PiBar => "piBar",
            MapName::Gamma => "gamma",
            MapName::GammaBar => "gammaBar",
            MapName::Delta => "delta",
            MapName::DeltaBar => "deltaBar",
            MapName::Phi => "phi",
            MapName::Tau => "tau",
            MapName::Xi => "xi",
            MapName::Omega => "omega",
            MapName::Psi => "psi",
            MapName::OmegaVg => "omegaVG",
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A component of a named natural map at a tuple of objects.
#[derive(Clone, Debug)]
pub struct NamedMap<F: Field> {
    pub name: MapName,
    pub at: Vec<String>,
    pub morphism: Morphism<F>,
    /// Square and full rank.
    pub is_iso: bool,
    /// The composite's factors in application order.
    pub factors: Vec<&'static str>,
}

impl<F: Field> NamedMap<F> {
    pub fn new(name: MapName, at: &[&ModuleObject<F>], morphism: Morphism<F>, factors: &[&'static str]) -> Self {
        let is_iso = morphism.is_iso();
        NamedMap { name, at: labels(at), morphism, is_iso, factors: factors.to_vec() }
    }

    /// A report entry that passes when the iso verdict matches `expect_iso`
    /// and the matrix intertwines.
    pub fn entry(&self, check: &str, expect_iso: bool) -> CheckEntry {
        let mut e = CheckEntry::rank_of(check, self.name.as_str(), self.at.clone(), self.morphism.mat(), expect_iso)
            .with_factors(&self.factors);
        if !self.morphism.is_intertwiner() {
            e.pass = false;
            e.details = "matrix does not intertwine".into();
        }
        e
    }
}

pub fn labels<F: Field>(objs: &[&ModuleObject<F>]) -> Vec<String> {
    objs.iter().map(|o| o.label().to_string()).collect()
}

/// `h: A → Hom(B, C)` to `B → Hom(A, C)`.
pub fn flip<F: Field>(h: &Morphism<F>, b: &ModuleObject<F>, c: &ModuleObject<F>) -> Result<Morphism<F>> {
    let a = h.src();
    let joined = uncurry(h, b, c)?;
    curry(&swap(b, a)?.then(&joined)?, b, a)
}
