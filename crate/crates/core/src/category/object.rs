//! Modules over a Hopf algebra and the intertwiners between them.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Field, Mat};

static NEXT_ID: AtomicU64 = AtomicU64::new(0);

type Builder<F> = Arc<dyn Fn(usize) -> Mat<F> + Send + Sync>;

/// A finite-dimensional module: one action matrix per algebra basis element.
///
/// Action matrices may be computed lazily. Every object carries a structural
/// key; objects with equal keys were built by the same recipe from the same
/// inputs and so have equal actions without comparing matrices.
#[derive(Clone)]
pub struct ModuleObject<F: Field> {
    algebra: Arc<HopfAlgebra<F>>,
    dim: usize,
    action: Arc<Vec<OnceLock<Mat<F>>>>,
    builder: Option<Builder<F>>,
    key: Arc<str>,
    label: String,
}

impl<F: Field> fmt::Debug for ModuleObject<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleObject({}, dim {})", self.label, self.dim)
    }
}

impl<F: Field> ModuleObject<F> {
    /// Builds and verifies a module (unit acts as identity, action is
    /// multiplicative on all basis pairs).
    pub fn new(
        algebra: Arc<HopfAlgebra<F>>,
        dim: usize,
        action: Vec<Mat<F>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let m = Self::from_action_unchecked(algebra, dim, action, label)?;
        m.verify()?;
        Ok(m)
    }

    /// Checks shapes only; used for objects whose module axioms follow from
    /// construction.
    pub fn from_action_unchecked(
        algebra: Arc<HopfAlgebra<F>>,
        dim: usize,
        action: Vec<Mat<F>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if action.len() != algebra.dim() || action.iter().any(|a| a.dims() != (dim, dim)) {
            return Err(Error::InvalidModule(format!("need {} action matrices of size {dim}x{dim}", algebra.dim())));
        }
        let key = format!("#{}", NEXT_ID.fetch_add(1, Ordering::Relaxed));
        let action = action.into_iter().map(OnceLock::from).collect();
        Ok(Self::with_key(algebra, dim, Arc::new(action), None, key, label.into()))
    }

    /// An object whose action matrices are computed on first use, one basis
    /// element at a time. `key` must determine the action completely.
    pub fn lazy(
        algebra: Arc<HopfAlgebra<F>>,
        dim: usize,
        key: String,
        label: String,
        builder: impl Fn(usize) -> Mat<F> + Send + Sync + 'static,
    ) -> Self {
        let action = (0..algebra.dim()).map(|_| OnceLock::new()).collect();
        Self::with_key(algebra, dim, Arc::new(action), Some(Arc::new(builder)), key, label)
    }

    fn with_key(
        algebra: Arc<HopfAlgebra<F>>,
        dim: usize,
        action: Arc<Vec<OnceLock<Mat<F>>>>,
        builder: Option<Builder<F>>,
        key: String,
        label: String,
    ) -> Self {
        ModuleObject { algebra, dim, action, builder, key: key.into(), label }
    }

    /// Replaces the structural key; only for constructions whose action is
    /// determined by the key and the algebra alone.
    pub fn keyed(mut self, key: &str) -> Self {
        self.key = key.into();
        self
    }

    pub fn key(&self) -> &str {
        &self.key
    }

    pub fn verify(&self) -> Result<()> {
        let h = &self.algebra;
        let f = h.field();
        if !self.act(h.unit()).is_identity() {
            return Err(Error::InvalidModule(format!("{}: unit does not act as identity", self.label)));
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let mut prod = Mat::zeros(f, self.dim, self.dim);
                for (k, c) in h.basis_product(i, j) {
                    prod.add_scaled(c, self.action(*k))?;
                }
                if prod != self.action(i).mul(self.action(j))? {
                    return Err(Error::InvalidModule(format!(
                        "{}: action not multiplicative at ({i},{j})",
                        self.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra<F>> {
        &self.algebra
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn action(&self, b: usize) -> &Mat<F> {
        self.action[b].get_or_init(|| (self.builder.as_ref().expect("lazy object has a builder"))(b))
    }
    pub fn actions(&self) -> Vec<&Mat<F>> {
        (0..self.action.len()).map(|b| self.action(b)).collect()
    }

    pub fn relabel(&self, label: impl Into<String>) -> Self {
        ModuleObject { label: label.into(), ..self.clone() }
    }

    /// Action of an arbitrary algebra element given by coefficients.
    pub fn act(&self, elem: &[F::Elem]) -> Mat<F> {
        let f = self.field();
        let mut out = Mat::zeros(f, self.dim, self.dim);
        for (b, c) in elem.iter().enumerate() {
            if !f.is_zero(c) {
                out.add_scaled(c, self.action(b)).expect("action shapes");
            }
        }
        out
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || *self.algebra == *other.algebra
    }

    /// Same algebra and literally the same action matrices. Generators
    /// suffice since both sides are modules.
    pub fn same_module(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.same_algebra(other)
            && (self.key == other.key
                || Arc::ptr_eq(&self.action, &other.action)
                || self.algebra.generators().iter().all(|&b| self.action(b) == other.action(b)))
    }

    pub fn identity(&self) -> Morphism<F> {
        Morphism::unchecked(self.clone(), self.clone(), Mat::identity(self.field(), self.dim))
    }

    pub fn zero_to(&self, other: &Self) -> Morphism<F> {
        Morphism::unchecked(self.clone(), other.clone(), Mat::zeros(self.field(), other.dim, self.dim))
    }
}

/// A linear map between modules, stored as a `dst.dim x src.dim` matrix.
#[derive(Clone)]
pub struct Morphism<F: Field> {
    src: ModuleObject<F>,
    dst: ModuleObject<F>,
    mat: Mat<F>,
}

impl<F: Field> fmt::Debug for Morphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({} -> {}, {:?})", self.src.label, self.dst.label, self.mat)
    }
}

impl<F: Field> Morphism<F> {
    /// Verifies shapes and that `mat` intertwines the actions of the algebra
    /// generators (which implies it for every element).
    pub fn new(src: ModuleObject<F>, dst: ModuleObject<F>, mat: Mat<F>) -> Result<Self> {
        let m = Self::unchecked(src, dst, mat);
        m.check_shape()?;
        if let Some(b) = m.first_non_intertwined() {
            return Err(Error::NotIntertwiner(format!(
                "{} -> {} at algebra basis element {b}",
                m.src.label, m.dst.label
            )));
        }
        Ok(m)
    }

    /// No verification; used for deliberately perturbed candidates.
    pub fn unchecked(src: ModuleObject<F>, dst: ModuleObject<F>, mat: Mat<F>) -> Self {
        Morphism { src, dst, mat }
    }

    fn check_shape(&self) -> Result<()> {
        if !self.src.same_algebra(&self.dst) {
            return Err(Error::AlgebraMismatch);
        }
        if self.mat.dims() != (self.dst.dim, self.src.dim) {
            return Err(Error::Dimension(format!(
                "matrix {:?} for {} -> {}",
                self.mat.dims(),
                self.src.dim,
                self.dst.dim
            )));
        }
        Ok(())
    }

    /// First algebra generator whose action the matrix fails to intertwine.
    pub fn first_non_intertwined(&self) -> Option<usize> {
        self.src.algebra().generators().iter().copied().find(|&b| {
            let lhs = self.dst.action(b).mul(&self.mat).expect("shape");
            let rhs = self.mat.mul(self.src.action(b)).expect("shape");
            lhs != rhs
        })
    }

    pub fn is_intertwiner(&self) -> bool {
        self.check_shape().is_ok() && self.first_non_intertwined().is_none()
    }

    pub fn src(&self) -> &ModuleObject<F> {
        &self.src
    }
    pub fn dst(&self) -> &ModuleObject<F> {
        &self.dst
    }
    pub fn mat(&self) -> &Mat<F> {
        &self.mat
    }
    pub fn into_mat(self) -> Mat<F> {
        self.mat
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism<F>) -> Result<Morphism<F>> {
        if !other.dst.same_module(&self.src) {
            return Err(Error::ObjectMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.src.label, self.dst.label, other.src.label, other.dst.label
            )));
        }
        Ok(Morphism { src: other.src.clone(), dst: self.dst.clone(), mat: self.mat.mul(&other.mat)? })
    }

    /// Composes a chain given in diagrammatic order reversed: `then(a).then(b)`
    /// is `b ∘ a ∘ self`.
    pub fn then(&self, next: &Morphism<F>) -> Result<Morphism<F>> {
        next.compose(self)
    }

    pub fn add(&self, other: &Morphism<F>) -> Result<Morphism<F>> {
        Ok(Morphism { src: self.src.clone(), dst: self.dst.clone(), mat: self.mat.add(&other.mat)? })
    }

    pub fn scale(&self, s: &F::Elem) -> Morphism<F> {
        Morphism { src: self.src.clone(), dst: self.dst.clone(), mat: self.mat.scale(s) }
    }

    /// Same matrix, re-typed between objects with identical actions.
    pub fn retype(&self, src: &ModuleObject<F>, dst: &ModuleObject<F>) -> Result<Morphism<F>> {
        if !self.src.same_module(src) || !self.dst.same_module(dst) {
            return Err(Error::ObjectMismatch(format!(
                "cannot retype {} -> {} as {} -> {}",
                self.src.label, self.dst.label, src.label, dst.label
            )));
        }
        Ok(Morphism { src: src.clone(), dst: dst.clone(), mat: self.mat.clone() })
    }

    pub fn inverse(&self) -> Result<Morphism<F>> {
        Ok(Morphism { src: self.dst.clone(), dst: self.src.clone(), mat: self.mat.inverse()? })
    }

    pub fn is_iso(&self) -> bool {
        self.mat.is_invertible()
    }
}

/// Folds a list of morphisms given in application order into one composite.
pub fn chain<F: Field>(steps: &[&Morphism<F>]) -> Result<Morphism<F>> {
    let (first, rest) = steps.split_first().ok_or_else(|| Error::ObjectMismatch("empty chain".into()))?;
    rest.iter().try_fold((*first).clone(), |acc, m| m.compose(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{builtin_group, group_algebra};
    use crate::linalg::Rationals;

    #[test]
    fn module_axioms_checked() {
        let g = builtin_group("C2").unwrap();
        let h = Arc::new(group_algebra(&g, &Rationals));
        let f = Rationals;
        let flip = Mat::from_i64(&f, &[vec![0, 1], vec![1, 0]]).unwrap();
        let ok = ModuleObject::new(h.clone(), 2, vec![Mat::identity(&f, 2), flip.clone()], "reg");
        assert!(ok.is_ok());
        let bad = ModuleObject::new(
            h.clone(),
            2,
            vec![Mat::identity(&f, 2), Mat::from_i64(&f, &[vec![1, 1], vec![0, 1]]).unwrap()],
            "bad",
        );
        assert!(matches!(bad, Err(Error::InvalidModule(_))));
        let reg = ok.unwrap();
        let triv = ModuleObject::new(h, 1, vec![Mat::identity(&f, 1), Mat::identity(&f, 1)], "k").unwrap();
        let sum = Mat::from_i64(&f, &[vec![1, 1]]).unwrap();
        assert!(Morphism::new(reg.clone(), triv.clone(), sum).is_ok());
        let proj = Mat::from_i64(&f, &[vec![1, 0]]).unwrap();
        assert!(matches!(Morphism::new(reg, triv, proj), Err(Error::NotIntertwiner(_))));
    }
}
