//! Adjunction contexts: a strong symmetric monoidal `f^*` with right adjoint
//! `f_*`, and a second pair `(f_!, f^!)`, all realized on explicit modules.
//!
//! `𝒞` is the category `f^*` lands in and `𝒟` its source. Units and counits
//! are `η: Y → f_*f^*Y`, `ε: f^*f_*X → X`, `ζ: X → f^!f_!X` and
//! `σ: f_!f^!Y → Y`.

pub mod hopf;
mod wirthmueller;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

pub use wirthmueller::WirthmuellerData;

use crate::category::{curry, ev, hom, hom_mor, tensor, tensor_mor, unit_object, ModuleObject, Morphism};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfInclusion};
use crate::linalg::{Field, Mat};
use crate::maps::wirthmueller::omega;

static NEXT_CONTEXT: AtomicU64 = AtomicU64::new(0);

pub enum ContextKind<F: Field> {
    /// `𝒞 = 𝒟` and all four functors are the identity.
    Identity(Arc<HopfAlgebra<F>>),
    /// Restriction, induction and coinduction; `f^! = f^*`.
    Hopf(Arc<HopfInclusion<F>>),
    /// `f^* = f_* = Id`, `f_! = −⊗C'`, `f^! = Hom(C', −)`.
    Twist(ModuleObject<F>),
    /// `(f_!(−⊗C'), Hom(C', f^!−))` over a base context.
    Shifted { base: Arc<AdjunctionContext<F>>, shift: ModuleObject<F> },
    /// The old `f_*` as left adjoint of `Hom(C, f^*−)`.
    Grothendieck(Arc<WirthmuellerData<F>>),
}

pub struct AdjunctionContext<F: Field> {
    tag: String,
    name: String,
    kind: ContextKind<F>,
}

impl<F: Field> std::fmt::Debug for AdjunctionContext<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AdjunctionContext({})", self.name)
    }
}

fn make<F: Field>(name: String, kind: ContextKind<F>) -> Arc<AdjunctionContext<F>> {
    let tag = NEXT_CONTEXT.fetch_add(1, Ordering::Relaxed).to_string();
    Arc::new(AdjunctionContext { tag, name, kind })
}

pub fn identity_context<F: Field>(h: &Arc<HopfAlgebra<F>>) -> Arc<AdjunctionContext<F>> {
    make(format!("identity({})", h.name()), ContextKind::Identity(h.clone()))
}

pub fn wirthmueller_context<F: Field>(incl: HopfInclusion<F>) -> Arc<AdjunctionContext<F>> {
    let name = format!("{}<{}", incl.sub().name(), incl.big().name());
    make(name, ContextKind::Hopf(Arc::new(incl)))
}

pub fn twist_context<F: Field>(twist: &ModuleObject<F>) -> Arc<AdjunctionContext<F>> {
    make(format!("twist({})", twist.label()), ContextKind::Twist(twist.clone()))
}

/// Shifts the `(f_!, f^!)` pair of `base` by an object of `𝒞`.
pub fn shifted_pair<F: Field>(
    base: &Arc<AdjunctionContext<F>>,
    shift: &ModuleObject<F>,
) -> Result<Arc<AdjunctionContext<F>>> {
    if !shift.same_algebra(&unit_object(&base.cat_c())) {
        return Err(Error::AlgebraMismatch);
    }
    let name = format!("shift({}, {})", base.name, shift.label());
    Ok(make(name, ContextKind::Shifted { base: base.clone(), shift: shift.clone() }))
}

/// New context with `f_!` the old `f_*` and `f^!Y = Hom(C, f^*Y)`.
///
/// The unit and counit are built from `ω`, so `ω` must be invertible; this is
/// checked on `probes` first.
pub fn grothendieck_from_wirthmueller<F: Field>(
    wd: &Arc<WirthmuellerData<F>>,
    probes: &[ModuleObject<F>],
) -> Result<Arc<AdjunctionContext<F>>> {
    for x in probes {
        let om = omega(wd, x)?;
        if !om.is_iso() {
            let (r, c) = om.mat().dims();
            return Err(Error::OmegaNotIso(format!("at {}: {c} -> {r}, rank {}", x.label(), om.mat().rank())));
        }
    }
    let name = format!("grothendieck({}, {})", wd.ctx().name, wd.shift().label());
    Ok(make(name, ContextKind::Grothendieck(wd.clone())))
}

impl<F: Field> AdjunctionContext<F> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &ContextKind<F> {
        &self.kind
    }

    /// The algebra of `𝒞`, where `f^*` lands.
    pub fn cat_c(&self) -> Arc<HopfAlgebra<F>> {
        match &self.kind {
            ContextKind::Identity(h) => h.clone(),
            ContextKind::Hopf(incl) => incl.sub().clone(),
            ContextKind::Twist(c) => c.algebra().clone(),
            ContextKind::Shifted { base, .. } => base.cat_c(),
            ContextKind::Grothendieck(wd) => wd.ctx().cat_c(),
        }
    }

    /// The algebra of `𝒟`.
    pub fn cat_d(&self) -> Arc<HopfAlgebra<F>> {
        match &self.kind {
            ContextKind::Identity(h) => h.clone(),
            ContextKind::Hopf(incl) => incl.big().clone(),
            ContextKind::Twist(c) => c.algebra().clone(),
            ContextKind::Shifted { base, .. } => base.cat_d(),
            ContextKind::Grothendieck(wd) => wd.ctx().cat_d(),
        }
    }

    pub fn field(&self) -> F {
        self.cat_c().field().clone()
    }

    /// Unit object `S` of `𝒞`.
    pub fn unit_c(&self) -> ModuleObject<F> {
        unit_object(&self.cat_c())
    }

    /// Unit object `T` of `𝒟`.
    pub fn unit_d(&self) -> ModuleObject<F> {
        unit_object(&self.cat_d())
    }

    /// Whether `f^! = f^*` (the second triad then arises from `α`).
    pub fn shriek_is_star(&self) -> bool {
        matches!(self.kind, ContextKind::Identity(_) | ContextKind::Hopf(_))
    }

    /// Whether `f_! = f_*` (the first triad then arises from `π`).
    pub fn shriek_is_lower_star(&self) -> bool {
        matches!(self.kind, ContextKind::Identity(_) | ContextKind::Grothendieck(_))
    }

    /// Index `r` with `dim f_!X = r·dim X`, when that is a constant.
    pub fn index(&self) -> Option<usize> {
        match &self.kind {
            ContextKind::Identity(_) => Some(1),
            ContextKind::Hopf(incl) => Some(incl.index()),
            _ => None,
        }
    }

    pub fn f_star(&self, y: &ModuleObject<F>) -> Result<ModuleObject<F>> {
        match &self.kind {
            ContextKind::Identity(_) | ContextKind::Twist(_) => Ok(y.clone()),
            ContextKind::Hopf(incl) => hopf::restrict(incl, &self.tag, y),
            ContextKind::Shifted { base, .. } => base.f_star(y),
            ContextKind::Grothendieck(wd) => wd.ctx().f_star(y),
        }
    }

    pub fn f_star_mor(&self, g: &Morphism<F>) -> Result<Morphism<F>> {
        match &self.kind {
            ContextKind::Identity(_) | ContextKind::Twist(_) => Ok(g.clone()),
            ContextKind::Hopf(_) => {
                Ok(Morphism::unchecked(self.f_star(g.src())?, self.f_star(g.dst())?, g.mat().clone()))
            }
            ContextKind::Shifted { base, .. } => base.f_star_mor(g),
            ContextKind::Grothendieck(wd) => wd.ctx().f_star_mor(g),
        }
    }

    pub fn f_lower_star(&self, x: &ModuleObject<F>) -> Result<ModuleObject<F>> {
        match &self.kind {
            ContextKind::Identity(_) | ContextKind::Twist(_) => Ok(x.clone()),
            ContextKind::Hopf(incl) => hopf::coinduce(incl, &self.tag, x),
            ContextKind::Shifted { base, .. } => base.f_lower_star(x),
            ContextKind::Grothendieck(wd) => wd.ctx().f_lower_star(x),
        }
    }

    pub fn f_lower_star_mor(&self, g: &Morphism<F>) -> Result<Morphism<F>> {
        match &self.kind {
            ContextKind::Identity(_) | ContextKind::Twist(_) => Ok(g.clone()),
            ContextKind::Hopf(incl) => Ok(Morphism::unchecked(
                self.f_lower_star(g.src())?,
                self.f_lower_star(g.dst())?,
                Mat::identity(incl.field(), incl.index()).kron(g.mat()),
            )),
            ContextKind::Shifted { base, .. } => base.f_lower_star_mor(g),
            ContextKind::Grothendieck(wd) => wd.ctx().f_lower_star_mor(g),
        }
    }

    pub fn f_shriek(&self, x: &ModuleObject<F>) -> Result<ModuleObject<F>> {
        match &self.kind {
            ContextKind::Identity(_) => Ok(x.clone()),
            ContextKind::Hopf(incl) => hopf::induce(incl, &self.tag, x),
            ContextKind::Twist(c) => tensor(x, c),
            ContextKind::Shifted { base, shift } => base.f_shriek(&tensor(x, shift)?),
            ContextKind::Grothendieck(wd) => wd.ctx().f_lower_star(x),
        }
    }

    pub fn f_shriek_mor(&self, g: &Morphism<F>) -> Result<Morphism<F>> {
        match &self.kind {
            ContextKind::Identity(_) => Ok(g.clone()),
            ContextKind::Hopf(incl) => Ok(Morphism::unchecked(
                self.f_shriek(g.src())?,
                self.f_shriek(g.dst())?,
                Mat::identity(incl.field(), incl.index()).kron(g.mat()),
            )),
            ContextKind::Twist(c) => tensor_mor(g, &c.identity()),
            ContextKind::Shifted { base, shift } => base.f_shriek_mor(&tensor_mor(g, &shift.identity())?),
            ContextKind::Grothendieck(wd) => wd.ctx().f_lower_star_mor(g),
        }
    }

    pub fn f_upper_shriek(&self, y: &ModuleObject<F>) -> Result<ModuleObject<F>> {
        match &self.kind {
            ContextKind::Identity(_) => Ok(y.clone()),
            ContextKind::Hopf(_) => self.f_star(y),
            ContextKind::Twist(c) => hom(c, y),
            ContextKind::Shifted { base, shift } => hom(shift, &base.f_upper_shriek(y)?),
            ContextKind::Grothendieck(wd) => hom(wd.shift(), &wd.ctx().f_star(y)?),
        }
    }

    pub fn f_upper_shriek_mor(&self, g: &Morphism<F>) -> Result<Morphism<F>> {
        match &self.kind {
            ContextKind::Identity(_) => Ok(g.clone()),
            ContextKind::Hopf(_) => self.f_star_mor(g),
            ContextKind::Twist(c) => hom_mor(&c.identity(), g),
            ContextKind::Shifted { base, shift } => hom_mor(&shift.identity(), &base.f_upper_shriek_mor(g)?),
            ContextKind::Grothendieck(wd) => hom_mor(&wd.shift().identity(), &wd.ctx().f_star_mor(g)?),
        }
    }

    /// `η: Y → f_*f^*Y`.
    pub fn eta(&self, y: &ModuleObject<F>) -> Result<Morphism<F>> {
        match &self.kind {
            ContextKind::Identity(_) | ContextKind::Twist(_) => Ok(y.identity()),
            ContextKind::Hopf(incl) => hopf::coinduction_unit(incl, y, self.f_lower_star(&self.f_star(y)?)?),
            ContextKind::Shifted { base, .. } => base.eta(y),
            ContextKind::Grothendieck(wd) => wd.ctx().eta(y),
        }
    }

    /// `ε: f^*f_*X → X`.
    pub fn eps(&self, x: &ModuleObject<F>) -> Result<Morphism<F>> {
        match &self.kind {
            ContextKind::Identity(_) | ContextKind::Twist(_) => Ok(x.identity()),
            ContextKind::Hopf(incl) => hopf::coinduction_counit(incl, x, self.f_star(&self.f_lower_star(x)?)?),
            ContextKind::Shifted { base, .. } => base.eps(x),
            ContextKind::Grothendieck(wd) => wd.ctx().eps(x),
        }
    }

    /// `ζ: X → f^!f_!X`.
    pub fn zeta(&self, x: &ModuleObject<F>) -> Result<Morphism<F>> {
        match &self.kind {
            ContextKind::Identity(_) => Ok(x.identity()),
            ContextKind::Hopf(incl) => hopf::induction_unit(incl, x, self.f_star(&self.f_shriek(x)?)?),
            ContextKind::Twist(c) => curry(&tensor(x, c)?.identity(), x, c),
            ContextKind::Shifted { base, shift } => curry(&base.zeta(&tensor(x, shift)?)?, x, shift),
            ContextKind::Grothendieck(wd) => {
                let base = wd.ctx();
                let shift = wd.shift();
                let back = omega(wd, x)?.inverse()?;
                let composite = base.zeta(&tensor(x, shift)?)?.then(&base.f_star_mor(&back)?)?;
                curry(&composite, x, shift)
            }
        }
    }

    /// `σ: f_!f^!Y → Y`.
    pub fn sigma(&self, y: &ModuleObject<F>) -> Result<Morphism<F>> {
        match &self.kind {
            ContextKind::Identity(_) => Ok(y.identity()),
            ContextKind::Hopf(incl) => hopf::induction_counit(incl, y, self.f_shriek(&self.f_star(y)?)?),
            ContextKind::Twist(c) => ev(c, y),
            ContextKind::Shifted { base, shift } => {
                let upper = base.f_upper_shriek(y)?;
                base.f_shriek_mor(&ev(shift, &upper)?)?.then(&base.sigma(y)?)
            }
            ContextKind::Grothendieck(wd) => {
                let base = wd.ctx();
                let pulled = base.f_star(y)?;
                let inner = hom(wd.shift(), &pulled)?;
                omega(wd, &inner)?.then(&base.f_shriek_mor(&ev(wd.shift(), &pulled)?)?)?.then(&base.sigma(y)?)
            }
        }
    }

    /// The strong monoidal witness `f^*(Y⊗Z) → f^*Y⊗f^*Z`.
    pub fn strong(&self, y: &ModuleObject<F>, z: &ModuleObject<F>) -> Result<Morphism<F>> {
        let src = self.f_star(&tensor(y, z)?)?;
        let dst = tensor(&self.f_star(y)?, &self.f_star(z)?)?;
        let d = src.dim();
        Ok(Morphism::unchecked(src, dst, Mat::identity(&self.field(), d)))
    }

    pub fn strong_inv(&self, y: &ModuleObject<F>, z: &ModuleObject<F>) -> Result<Morphism<F>> {
        let m = self.strong(y, z)?;
        Ok(Morphism::unchecked(m.dst().clone(), m.src().clone(), m.mat().clone()))
    }

    /// `f^*T → S`.
    pub fn unit_iso(&self) -> Result<Morphism<F>> {
        let src = self.f_star(&self.unit_d())?;
        Ok(Morphism::unchecked(src, self.unit_c(), Mat::identity(&self.field(), 1)))
    }

    pub fn unit_iso_inv(&self) -> Result<Morphism<F>> {
        let m = self.unit_iso()?;
        Ok(Morphism::unchecked(m.dst().clone(), m.src().clone(), m.mat().clone()))
    }

    /// `g: f^*Y → X` to its adjoint `f_*g∘η: Y → f_*X`.
    pub fn adj_lower(&self, y: &ModuleObject<F>, g: &Morphism<F>) -> Result<Morphism<F>> {
        self.eta(y)?.then(&self.f_lower_star_mor(g)?)
    }

    /// `h: Y → f_*X` to its adjoint `ε∘f^*h: f^*Y → X`.
    pub fn adj_lower_inv(&self, x: &ModuleObject<F>, h: &Morphism<F>) -> Result<Morphism<F>> {
        self.f_star_mor(h)?.then(&self.eps(x)?)
    }

    /// `g: f_!X → Y` to its adjoint `f^!g∘ζ: X → f^!Y`.
    pub fn adj_shriek(&self, x: &ModuleObject<F>, g: &Morphism<F>) -> Result<Morphism<F>> {
        self.zeta(x)?.then(&self.f_upper_shriek_mor(g)?)
    }

    /// `h: X → f^!Y` to its adjoint `σ∘f_!h: f_!X → Y`.
    pub fn adj_shriek_inv(&self, y: &ModuleObject<F>, h: &Morphism<F>) -> Result<Morphism<F>> {
        self.f_shriek_mor(h)?.then(&self.sigma(y)?)
    }
}
