//! Restriction, induction and coinduction along a Hopf inclusion `A ⊂ B`.
//!
//! Induction `B⊗_A X` lives on `⊕ R_i⊗X` (block `i` of size `dim X`) and
//! coinduction `Hom_A(B, X)` on the values `φ(L_i)`, also block `i`.

use std::sync::Arc;

use crate::category::{ModuleObject, Morphism};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfInclusion};
use crate::linalg::{Field, Mat};

fn require_over<F: Field>(obj: &ModuleObject<F>, alg: &Arc<HopfAlgebra<F>>) -> Result<()> {
    if Arc::ptr_eq(obj.algebra(), alg) || **obj.algebra() == **alg {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// `f^*Y`: `a` acts by `ρ_Y(ι(a))`.
pub fn restrict<F: Field>(incl: &Arc<HopfInclusion<F>>, tag: &str, y: &ModuleObject<F>) -> Result<ModuleObject<F>> {
    require_over(y, incl.big())?;
    let key = format!("res{tag}({})", y.key());
    let label = format!("res({})", y.label());
    let (inc, obj) = (incl.clone(), y.clone());
    Ok(ModuleObject::lazy(incl.sub().clone(), y.dim(), key, label, move |a| obj.act(&inc.embed().col_vec(a))))
}

/// `f_!X = B⊗_A X`; `e_b` sends `R_i⊗x` to `Σ_j R_j⊗a_ji·x`.
pub fn induce<F: Field>(incl: &Arc<HopfInclusion<F>>, tag: &str, x: &ModuleObject<F>) -> Result<ModuleObject<F>> {
    require_over(x, incl.sub())?;
    let (r, d) = (incl.index(), x.dim());
    let key = format!("ind{tag}({})", x.key());
    let label = format!("ind({})", x.label());
    let (inc, obj) = (incl.clone(), x.clone());
    Ok(ModuleObject::lazy(incl.big().clone(), r * d, key, label, move |b| {
        let mut m = Mat::zeros(inc.field(), r * d, r * d);
        for i in 0..r {
            for (j, coeff) in inc.right_rewrite(b, i).iter().enumerate() {
                m.set_block(j * d, i * d, &obj.act(coeff));
            }
        }
        m
    }))
}

/// `f_*X = Hom_A(B, X)` on the values `φ(L_i)`; `(e_b·φ)(L_i) = Σ_j a_ij·φ(L_j)`.
pub fn coinduce<F: Field>(incl: &Arc<HopfInclusion<F>>, tag: &str, x: &ModuleObject<F>) -> Result<ModuleObject<F>> {
    require_over(x, incl.sub())?;
    let (r, d) = (incl.index(), x.dim());
    let key = format!("coind{tag}({})", x.key());
    let label = format!("coind({})", x.label());
    let (inc, obj) = (incl.clone(), x.clone());
    Ok(ModuleObject::lazy(incl.big().clone(), r * d, key, label, move |b| {
        let mut m = Mat::zeros(inc.field(), r * d, r * d);
        for i in 0..r {
            for (j, coeff) in inc.left_rewrite(b, i).iter().enumerate() {
                m.set_block(i * d, j * d, &obj.act(coeff));
            }
        }
        m
    }))
}

/// `y ↦ (b ↦ b·y)`, stacked as the values `L_i·y`.
pub fn coinduction_unit<F: Field>(
    incl: &HopfInclusion<F>,
    y: &ModuleObject<F>,
    dst: ModuleObject<F>,
) -> Result<Morphism<F>> {
    let blocks: Vec<Mat<F>> = incl.free_basis().iter().map(|l| y.act(l)).collect();
    let refs: Vec<&Mat<F>> = blocks.iter().collect();
    Ok(Morphism::unchecked(y.clone(), dst, Mat::vstack(&refs)?))
}

/// Evaluation at `1 = Σ c_j·L_j`.
pub fn coinduction_counit<F: Field>(
    incl: &HopfInclusion<F>,
    x: &ModuleObject<F>,
    src: ModuleObject<F>,
) -> Result<Morphism<F>> {
    let blocks: Vec<Mat<F>> = incl.unit_left().iter().map(|c| x.act(c)).collect();
    let refs: Vec<&Mat<F>> = blocks.iter().collect();
    Ok(Morphism::unchecked(src, x.clone(), Mat::hstack(&refs)?))
}

/// `x ↦ 1⊗x` with `1 = Σ R_j·d_j`.
pub fn induction_unit<F: Field>(
    incl: &HopfInclusion<F>,
    x: &ModuleObject<F>,
    dst: ModuleObject<F>,
) -> Result<Morphism<F>> {
    let blocks: Vec<Mat<F>> = incl.unit_right().iter().map(|d| x.act(d)).collect();
    let refs: Vec<&Mat<F>> = blocks.iter().collect();
    Ok(Morphism::unchecked(x.clone(), dst, Mat::vstack(&refs)?))
}

/// `R_i⊗y ↦ R_i·y`.
pub fn induction_counit<F: Field>(
    incl: &HopfInclusion<F>,
    y: &ModuleObject<F>,
    src: ModuleObject<F>,
) -> Result<Morphism<F>> {
    let blocks: Vec<Mat<F>> = incl.right_basis().iter().map(|rb| y.act(rb)).collect();
    let refs: Vec<&Mat<F>> = blocks.iter().collect();
    Ok(Morphism::unchecked(src, y.clone(), Mat::hstack(&refs)?))
}
