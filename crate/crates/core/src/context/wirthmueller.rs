use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::category::{character_modules, dual, find_isomorphism, intertwiners, ModuleObject, Morphism};
use crate::context::AdjunctionContext;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};
use crate::maps::wirthmueller::{sharp_xi_tau, xi};

/// Random draws per search over ℚ (and over large prime-field spaces).
const SEARCH_DRAWS: usize = 8;

/// A context with `f^! = f^*`, an object `C` of `𝒞` and an isomorphism
/// `Df_!S → f_!C`.
#[derive(Debug)]
pub struct WirthmuellerData<F: Field> {
    ctx: Arc<AdjunctionContext<F>>,
    shift: ModuleObject<F>,
    witness: Morphism<F>,
}

impl<F: Field> WirthmuellerData<F> {
    /// Accepts a supplied witness after checking its type, that it
    /// intertwines, and that it is invertible.
    pub fn new(ctx: &Arc<AdjunctionContext<F>>, shift: &ModuleObject<F>, witness: Morphism<F>) -> Result<Self> {
        if !ctx.shriek_is_star() {
            return Err(Error::MissingFunctor("f^! = f^*"));
        }
        let src = dual(&ctx.f_shriek(&ctx.unit_c())?);
        let dst = ctx.f_shriek(shift)?;
        let witness = witness
            .retype(&src, &dst)
            .map_err(|_| Error::WitnessMissing(format!("witness is not a map D f_!S -> f_!{}", shift.label())))?;
        if !witness.is_intertwiner() || !witness.is_iso() {
            return Err(Error::WitnessMissing(format!(
                "witness for {} is not an isomorphism of modules",
                shift.label()
            )));
        }
        Ok(WirthmuellerData { ctx: ctx.clone(), shift: shift.clone(), witness })
    }

    /// Searches `Hom_𝒟(Df_!S, f_!C)` for an isomorphism, preferring one
    /// for which `τ` and `ξ` satisfy the triangle `f♯ξ∘τ = id` at `S`.
    ///
    /// Not every isomorphism does: for `1 ⊂ C2` and the witness "multiply by
    /// `1+2g`", `ξ∘f^*τ = id` still holds but `ψ` is not inverse to `ω`. The
    /// dual-basis map (identity matrix) is tried first since for coset bases
    /// it is the normalized one; otherwise the first isomorphism found is kept.
    pub fn search(ctx: &Arc<AdjunctionContext<F>>, shift: &ModuleObject<F>) -> Result<Self> {
        if !ctx.shriek_is_star() {
            return Err(Error::MissingFunctor("f^! = f^*"));
        }
        let src = dual(&ctx.f_shriek(&ctx.unit_c())?);
        let dst = ctx.f_shriek(shift)?;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let Some(found) = find_isomorphism(&src, &dst, &mut rng, SEARCH_DRAWS)? else {
            return Err(Error::NoDualizingObjectFound(format!("D f_!S is not isomorphic to f_!{}", shift.label())));
        };
        let mut candidates = Vec::new();
        if src.dim() == dst.dim() {
            let id = Morphism::unchecked(src.clone(), dst.clone(), Mat::identity(src.field(), src.dim()));
            if id.is_intertwiner() {
                candidates.push(id);
            }
        }
        candidates.extend(intertwiners(&src, &dst)?.into_iter().filter(|m| m.is_iso()));
        for w in candidates {
            let wd = Self::new(ctx, shift, w)?;
            if wd.is_normalized()? {
                return Ok(wd);
            }
        }
        log::warn!("no normalized witness for C = {}; psi may not invert omega", shift.label());
        Self::new(ctx, shift, found)
    }

    /// `f♯ξ∘τ = id` at `S`, with `ξ` and `τ` built from the witness.
    pub fn is_normalized(&self) -> Result<bool> {
        let t = self.ctx.unit_d();
        let s = self.ctx.f_star(&t)?;
        let m = sharp_xi_tau(self, &s, &xi(self, &t)?)?;
        Ok(m.mat() == &Mat::identity(m.mat().field(), m.src().dim()))
    }

    /// Tries the trivial module first, then the one-dimensional characters
    /// of a group algebra.
    pub fn automatic(ctx: &Arc<AdjunctionContext<F>>) -> Result<Self> {
        let trivial = ctx.unit_c().relabel("trivial");
        match Self::search(ctx, &trivial) {
            Err(Error::NoDualizingObjectFound(_)) => {}
            other => return other,
        }
        let h = ctx.cat_c();
        if h.group().is_some() {
            for ch in character_modules(&h)?.into_iter().skip(1) {
                match Self::search(ctx, &ch) {
                    Err(Error::NoDualizingObjectFound(_)) => continue,
                    other => return other,
                }
            }
        }
        Err(Error::NoDualizingObjectFound(format!("no trivial or one-dimensional candidate in {}", ctx.name())))
    }

    pub fn ctx(&self) -> &Arc<AdjunctionContext<F>> {
        &self.ctx
    }

    /// The object `C`.
    pub fn shift(&self) -> &ModuleObject<F> {
        &self.shift
    }

    /// `Df_!S → f_!C`.
    pub fn witness(&self) -> &Morphism<F> {
        &self.witness
    }
}
