//! Named module constructors: trivial, regular, permutation modules on
//! cosets, one-dimensional characters, the standard module, and modules
//! read from JSON.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use serde::Deserialize;
use serde_json::Value;

use crate::category::monoidal::unit_object;
use crate::category::object::ModuleObject;
use crate::error::{Error, Result};
use crate::hopf::{builtin_subgroup, FiniteGroup, HopfAlgebra};
use crate::linalg::{Field, Mat};

fn group_of<F: Field>(h: &Arc<HopfAlgebra<F>>) -> Result<&Arc<FiniteGroup>> {
    h.group().ok_or_else(|| Error::Config(format!("{} is not a group algebra", h.name())))
}

pub fn trivial<F: Field>(h: &Arc<HopfAlgebra<F>>) -> ModuleObject<F> {
    unit_object(h).relabel("trivial")
}

/// `B` acting on itself by left multiplication.
pub fn regular<F: Field>(h: &Arc<HopfAlgebra<F>>) -> ModuleObject<F> {
    let n = h.dim();
    let action = (0..n)
        .map(|b| {
            let mut m = Mat::zeros(h.field(), n, n);
            for c in 0..n {
                for (k, v) in h.basis_product(b, c) {
                    m.set(*k, c, v.clone());
                }
            }
            m
        })
        .collect();
    ModuleObject::from_action_unchecked(h.clone(), n, action, "regular").expect("regular shape").keyed("regular")
}

/// `k[G/H]`: the permutation module on left cosets of the subgroup with the
/// given elements.
pub fn permutation_module<F: Field>(
    h: &Arc<HopfAlgebra<F>>,
    subgroup: &[usize],
    label: impl Into<String>,
) -> Result<ModuleObject<F>> {
    let g = group_of(h)?;
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut count = 0;
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &s in subgroup {
            coset_of[g.mul(x, s)] = count;
        }
        count += 1;
    }
    let reps: Vec<usize> = (0..count).map(|c| coset_of.iter().position(|&k| k == c).expect("coset")).collect();
    let action = (0..g.order())
        .map(|a| {
            let perm: Vec<usize> = reps.iter().map(|&x| coset_of[g.mul(a, x)]).collect();
            Mat::permutation(h.field(), &perm)
        })
        .collect();
    ModuleObject::from_action_unchecked(h.clone(), count, action, label)
}

/// The one-dimensional module on which group element `a` acts by `values[a]`.
pub fn character_module<F: Field>(
    h: &Arc<HopfAlgebra<F>>,
    values: &[F::Elem],
    label: impl Into<String>,
) -> Result<ModuleObject<F>> {
    let action = values.iter().map(|v| Mat::from_fn(h.field(), 1, 1, |_, _| v.clone())).collect();
    ModuleObject::new(h.clone(), 1, action, label)
}

/// All one-dimensional characters of the group with values in the field,
/// trivial first. Found by assigning roots of unity to generators and
/// propagating through the multiplication table.
pub fn characters<F: Field>(group: &FiniteGroup, field: &F) -> Vec<Vec<F::Elem>> {
    let roots = field.roots_of_unity(group.order());
    let gens = group.generators();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        if let Some(chi) =
            extend_character(group, field, gens, &choice.iter().map(|&c| roots[c].clone()).collect::<Vec<_>>())
        {
            if !out.contains(&chi) {
                out.push(chi);
            }
        }
        // odometer over root assignments
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < roots.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn extend_character<F: Field>(
    group: &FiniteGroup,
    field: &F,
    gens: &[usize],
    images: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let mut chi: Vec<Option<F::Elem>> = vec![None; group.order()];
    chi[group.identity()] = Some(field.one());
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        for (g, v) in gens.iter().zip(images) {
            let y = group.mul(x, *g);
            let val = field.mul(chi[x].as_ref().expect("visited"), v);
            match &chi[y] {
                Some(existing) if *existing != val => return None,
                Some(_) => {}
                None => {
                    chi[y] = Some(val);
                    queue.push_back(y);
                }
            }
        }
    }
    let chi: Vec<F::Elem> = chi.into_iter().collect::<Option<_>>()?;
    for a in 0..group.order() {
        for b in 0..group.order() {
            if chi[group.mul(a, b)] != field.mul(&chi[a], &chi[b]) {
                return None;
            }
        }
    }
    Some(chi)
}

/// Sign of each element's permutation, when the group has a permutation
/// realization.
fn permutation_sign<F: Field>(group: &FiniteGroup, field: &F) -> Option<Vec<F::Elem>> {
    (0..group.order())
        .map(|a| {
            let p = group.as_permutation(a)?;
            let mut seen = vec![false; p.len()];
            let mut parity = 0;
            for s in 0..p.len() {
                if seen[s] {
                    continue;
                }
                let mut len = 0;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = p[t];
                    len += 1;
                }
                parity += len - 1;
            }
            Some(field.from_i64(if parity % 2 == 0 { 1 } else { -1 }))
        })
        .collect()
}

/// All one-dimensional character modules, labelled `char:<i>` with `char:0`
/// trivial.
pub fn character_modules<F: Field>(h: &Arc<HopfAlgebra<F>>) -> Result<Vec<ModuleObject<F>>> {
    let g = group_of(h)?;
    characters(g, h.field())
        .into_iter()
        .enumerate()
        .map(|(i, chi)| character_module(h, &chi, format!("char:{i}")))
        .collect()
}

/// The sum-zero submodule of the natural permutation module, with basis
/// `e_k - e_{k+1}`.
pub fn standard_module<F: Field>(h: &Arc<HopfAlgebra<F>>) -> Result<ModuleObject<F>> {
    let g = group_of(h)?;
    let f = h.field();
    let d = g
        .permutation_degree()
        .ok_or_else(|| Error::Config(format!("group {} has no permutation realization", g.name())))?;
    if d < 2 {
        return Err(Error::Config("standard module needs degree at least 2".into()));
    }
    let action = (0..g.order())
        .map(|a| {
            let p = g.as_permutation(a).expect("permutation data");
            let mut m = Mat::zeros(f, d - 1, d - 1);
            for k in 0..d - 1 {
                // image e_{p(k)} - e_{p(k+1)} in coordinates: coefficient of
                // basis vector j is the partial sum of entries 0..=j
                let mut img = vec![0i64; d];
                img[p[k]] += 1;
                img[p[k + 1]] -= 1;
                let mut acc = 0;
                for (j, v) in img.iter().take(d - 1).enumerate() {
                    acc += v;
                    m.set(j, k, f.from_i64(acc));
                }
            }
            m
        })
        .collect();
    ModuleObject::new(h.clone(), d - 1, action, "standard")
}

/// Resolves `trivial`, `regular`, `standard`, `perm:<subgroup>`,
/// `char:<index>` and `char:sign`.
pub fn named_module<F: Field>(h: &Arc<HopfAlgebra<F>>, name: &str) -> Result<ModuleObject<F>> {
    match name {
        "trivial" | "S" => return Ok(trivial(h)),
        "regular" => return Ok(regular(h)),
        "standard" => return standard_module(h),
        _ => {}
    }
    if let Some(sub) = name.strip_prefix("perm:") {
        let g = group_of(h)?;
        let gens = builtin_subgroup(g, sub)?;
        return permutation_module(h, &g.closure(&gens), name);
    }
    if let Some(which) = name.strip_prefix("char:") {
        let g = group_of(h)?;
        let f = h.field();
        if which == "sign" {
            let values = match permutation_sign(g, f) {
                Some(v) => v,
                None => characters(g, f)
                    .into_iter()
                    .find(|chi| chi.iter().any(|v| !f.is_one(v)) && chi.iter().all(|v| f.is_one(&f.mul(v, v))))
                    .ok_or_else(|| Error::Config(format!("{} has no sign-type character", g.name())))?,
            };
            return character_module(h, &values, name);
        }
        let idx: usize = which.parse().map_err(|_| Error::Config(format!("unknown character '{name}'")))?;
        let chars = characters(g, f);
        let chi = chars.get(idx).ok_or_else(|| {
            Error::Config(format!("{} has only {} characters over {}", g.name(), chars.len(), f.spec()))
        })?;
        return character_module(h, chi, name);
    }
    Err(Error::Config(format!("unknown module '{name}'")))
}

/// Module file: `{"dim": n, "action": {"<basis index>": [[...]], ...}}`.
/// Entries are integers or strings `"p/q"`. For group algebras the listed
/// basis elements only need to generate the group.
#[derive(Debug, Deserialize)]
pub struct ModuleFile {
    pub dim: usize,
    pub action: BTreeMap<String, Vec<Vec<Value>>>,
    #[serde(default)]
    pub label: Option<String>,
}

fn parse_scalar<F: Field>(f: &F, v: &Value) -> Result<F::Elem> {
    let bad = || Error::Config(format!("bad matrix entry {v}"));
    match v {
        Value::Number(n) => Ok(f.from_i64(n.as_i64().ok_or_else(bad)?)),
        Value::String(s) => {
            let (p, q) = s.split_once('/').unwrap_or((s.as_str(), "1"));
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            let qi = f.inv(&f.from_i64(q)).ok_or_else(bad)?;
            Ok(f.mul(&f.from_i64(p), &qi))
        }
        _ => Err(bad()),
    }
}

pub fn module_from_file<F: Field>(h: &Arc<HopfAlgebra<F>>, file: &ModuleFile) -> Result<ModuleObject<F>> {
    let f = h.field();
    let d = file.dim;
    let mut given: BTreeMap<usize, Mat<F>> = BTreeMap::new();
    for (k, rows) in &file.action {
        let b: usize = k.parse().map_err(|_| Error::Config(format!("bad basis index '{k}'")))?;
        if b >= h.dim() || rows.len() != d || rows.iter().any(|r| r.len() != d) {
            return Err(Error::Config(format!("action of {k} is not a {d}x{d} matrix for a basis element")));
        }
        let data = rows.iter().flatten().map(|v| parse_scalar(f, v)).collect::<Result<Vec<_>>>()?;
        given.insert(b, Mat::from_elems(f, d, d, data)?);
    }
    let label = file.label.clone().unwrap_or_else(|| "file".to_string());
    let action = if given.len() == h.dim() {
        given.into_values().collect()
    } else {
        let g = group_of(h)?;
        let mut act: Vec<Option<Mat<F>>> = vec![None; g.order()];
        act[g.identity()] = Some(Mat::identity(f, d));
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(x) = queue.pop_front() {
            for (&s, m) in &given {
                let y = g.mul(x, s);
                if act[y].is_none() {
                    act[y] = Some(act[x].as_ref().expect("visited").mul(m)?);
                    queue.push_back(y);
                }
            }
        }
        act.into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Config("listed elements do not generate the group".into()))?
    };
    ModuleObject::new(h.clone(), d, action, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{builtin_group, group_algebra};
    use crate::linalg::{PrimeField, Rationals};

    fn s3() -> Arc<HopfAlgebra<Rationals>> {
        Arc::new(group_algebra(&builtin_group("S3").unwrap(), &Rationals))
    }

    #[test]
    fn constructors_are_modules() {
        let h = s3();
        for name in ["trivial", "regular", "standard", "perm:C3", "perm:C2", "char:0", "char:1", "char:sign"] {
            let m = named_module(&h, name).unwrap();
            m.verify().unwrap();
        }
        assert_eq!(named_module(&h, "perm:C2").unwrap().dim(), 3);
        assert_eq!(named_module(&h, "standard").unwrap().dim(), 2);
    }

    #[test]
    fn character_counts() {
        let f3 = PrimeField::new(3).unwrap();
        let f7 = PrimeField::new(7).unwrap();
        let c3 = builtin_group("C3").unwrap();
        assert_eq!(characters(&builtin_group("S3").unwrap(), &Rationals).len(), 2);
        assert_eq!(characters(&c3, &Rationals).len(), 1);
        assert_eq!(characters(&c3, &f7).len(), 3);
        assert_eq!(characters(&c3, &f3).len(), 1);
        assert_eq!(characters(&builtin_group("V4").unwrap(), &Rationals).len(), 4);
        assert_eq!(characters(&builtin_group("Q8").unwrap(), &Rationals).len(), 4);
    }

    #[test]
    fn module_file_generators_extend() {
        let h = s3();
        let g = h.group().unwrap().clone();
        let mut action = BTreeMap::new();
        for &s in g.generators() {
            let sign = if g.element_order(s) == 2 { -1 } else { 1 };
            action.insert(s.to_string(), vec![vec![Value::from(sign)]]);
        }
        let m = module_from_file(&h, &ModuleFile { dim: 1, action, label: None }).unwrap();
        let sign = named_module(&h, "char:sign").unwrap();
        assert!(m.same_module(&sign));
    }
}
