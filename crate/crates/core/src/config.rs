//! Context specifications read from TOML or JSON, and their resolution into
//! algebras, contexts and named objects.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::{module_from_file, named_module, ModuleFile, ModuleObject};
use crate::context::{
    grothendieck_from_wirthmueller, identity_context, shifted_pair, twist_context, wirthmueller_context,
    AdjunctionContext, WirthmuellerData,
};
use crate::error::{Error, Result};
use crate::hopf::{
    builtin_group, builtin_subgroup, group_algebra, subgroup_inclusion_named, truncated_primitive, FiniteGroup,
    GroupFile, HopfAlgebra, HopfInclusion,
};
use crate::linalg::{Field, FieldSpec, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecKind {
    Identity,
    Wirthmueller,
    Twist,
    Shifted,
    Grothendieck,
}

/// A context description, e.g.
/// `{"kind": "wirthmueller", "group": "S3", "subgroup": "C3", "field": "Q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextSpec {
    pub kind: SpecKind,
    /// Builtin group name.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    /// Path to a multiplication-table file, instead of `group`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_file: Option<PathBuf>,
    /// `truncated:<n>` for `k[x]/(x^n)`, instead of a group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    /// Builtin subgroup name; see also `subgroup_generators`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup_generators: Option<Vec<usize>>,
    #[serde(default = "default_field")]
    pub field: String,
    /// The twist or shift object, or an explicit `C` for Wirthmüller data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object_file: Option<PathBuf>,
}

fn default_field() -> String {
    "Q".into()
}

impl ContextSpec {
    /// Parses TOML, or JSON when the text starts with `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Config(format!("bad JSON spec: {e}")))
        } else {
            toml::from_str(text).map_err(|e| Error::Config(format!("bad TOML spec: {e}")))
        }
    }

    /// Reads a spec file; relative paths inside it resolve against its
    /// directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut spec = Self::parse(&text)?;
        let dir = path.parent().unwrap_or(Path::new("."));
        for p in [&mut spec.group_file, &mut spec.object_file].into_iter().flatten() {
            if p.is_relative() {
                *p = dir.join(&*p);
            }
        }
        Ok(spec)
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        FieldSpec::parse(&self.field)
    }

    fn group(&self) -> Result<Option<FiniteGroup>> {
        match (&self.group, &self.group_file) {
            (Some(_), Some(_)) => Err(Error::Config("give either group or group_file, not both".into())),
            (Some(name), None) => builtin_group(name).map(Some),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                let file: GroupFile =
                    serde_json::from_str(&text).map_err(|e| Error::Config(format!("bad group file: {e}")))?;
                let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "G".into());
                FiniteGroup::from_file(name, &file).map(Some)
            }
            (None, None) => Ok(None),
        }
    }

    fn truncated_degree(&self) -> Result<Option<usize>> {
        let Some(a) = &self.algebra else { return Ok(None) };
        let n = a
            .strip_prefix("truncated:")
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| Error::Config(format!("unknown algebra '{a}'")))?;
        Ok(Some(n))
    }

    /// The algebra of `𝒟`.
    pub fn big_algebra<F: Field>(&self, field: &F) -> Result<Arc<HopfAlgebra<F>>> {
        match (self.group()?, self.truncated_degree()?) {
            (Some(_), Some(_)) => Err(Error::Config("give either a group or an algebra, not both".into())),
            (Some(g), None) => Ok(Arc::new(group_algebra(&g, field))),
            (None, Some(n)) => Ok(Arc::new(truncated_primitive(field, n))),
            (None, None) => Err(Error::Config("spec names no group or algebra".into())),
        }
    }

    fn has_subgroup(&self) -> bool {
        self.subgroup.is_some() || self.subgroup_generators.is_some()
    }

    /// The inclusion named by `subgroup` (or the ground field inside a
    /// truncated algebra).
    pub fn inclusion<F: Field>(&self, field: &F) -> Result<HopfInclusion<F>> {
        if let Some(n) = self.truncated_degree()? {
            if self.has_subgroup() {
                return Err(Error::Config("truncated algebras only support the ground-field inclusion".into()));
            }
            let big = Arc::new(truncated_primitive(field, n));
            let sub = Arc::new(group_algebra(&builtin_group("C1")?, field));
            let embed = Mat::from_fn(field, n, 1, |i, _| if i == 0 { field.one() } else { field.zero() });
            return HopfInclusion::new(sub, big, embed, None);
        }
        let group = self.group()?.ok_or_else(|| Error::Config("spec names no group".into()))?;
        let (name, gens) = match (&self.subgroup, &self.subgroup_generators) {
            (_, Some(gens)) => (self.subgroup.clone().unwrap_or_else(|| format!("H{gens:?}")), gens.clone()),
            (Some(sub), None) => (sub.clone(), builtin_subgroup(&group, sub)?),
            (None, None) => return Err(Error::Config("spec names no subgroup".into())),
        };
        subgroup_inclusion_named(&group, &gens, &name, field)
    }

    /// Resolves `object` or `object_file` over `h`.
    pub fn object<F: Field>(&self, h: &Arc<HopfAlgebra<F>>) -> Result<Option<ModuleObject<F>>> {
        match (&self.object, &self.object_file) {
            (Some(_), Some(_)) => Err(Error::Config("give either object or object_file, not both".into())),
            (Some(name), None) => named_module(h, name).map(Some),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                let file: ModuleFile =
                    serde_json::from_str(&text).map_err(|e| Error::Config(format!("bad module file: {e}")))?;
                module_from_file(h, &file).map(Some)
            }
            (None, None) => Ok(None),
        }
    }

    fn require_object<F: Field>(&self, h: &Arc<HopfAlgebra<F>>) -> Result<ModuleObject<F>> {
        self.object(h)?.ok_or_else(|| Error::Config(format!("a {:?} spec needs an object", self.kind).to_lowercase()))
    }

    /// Wirthmüller data over `ctx`, with `object` as `C` if given.
    pub fn wirthmueller_data<F: Field>(&self, ctx: &Arc<AdjunctionContext<F>>) -> Result<Arc<WirthmuellerData<F>>> {
        let wd = match self.object(&ctx.cat_c())? {
            Some(c) => WirthmuellerData::search(ctx, &c)?,
            None => WirthmuellerData::automatic(ctx)?,
        };
        Ok(Arc::new(wd))
    }

    /// Builds the context. `probes` are the objects on which `ω` is checked
    /// before a Grothendieck context is accepted.
    pub fn build<F: Field>(&self, field: &F, probes: usize) -> Result<Built<F>> {
        let built = match self.kind {
            SpecKind::Identity => Built::plain(identity_context(&self.big_algebra(field)?)),
            SpecKind::Wirthmueller => {
                let ctx = wirthmueller_context(self.inclusion(field)?);
                let object = self.object(&ctx.cat_c())?;
                Built { ctx, object, wirthmueller: None }
            }
            SpecKind::Twist => {
                let h = self.big_algebra(field)?;
                let c = self.require_object(&h)?;
                Built { ctx: twist_context(&c), object: Some(c), wirthmueller: None }
            }
            SpecKind::Shifted => {
                let base = if self.has_subgroup() {
                    wirthmueller_context(self.inclusion(field)?)
                } else {
                    identity_context(&self.big_algebra(field)?)
                };
                let c = self.require_object(&base.cat_c())?;
                Built { ctx: shifted_pair(&base, &c)?, object: Some(c), wirthmueller: None }
            }
            SpecKind::Grothendieck => {
                let wd = self.wirthmueller_data(&wirthmueller_context(self.inclusion(field)?))?;
                let family = crate::category::generating_family(&wd.ctx().cat_c(), 4);
                let probes: Vec<_> = family.into_iter().take(probes.max(1)).collect();
                let ctx = grothendieck_from_wirthmueller(&wd, &probes)?;
                Built { ctx, object: Some(wd.shift().clone()), wirthmueller: Some(wd) }
            }
        };
        Ok(built)
    }
}

/// A constructed context with the objects it was built from.
pub struct Built<F: Field> {
    pub ctx: Arc<AdjunctionContext<F>>,
    /// Twist or shift object, or `C`.
    pub object: Option<ModuleObject<F>>,
    pub wirthmueller: Option<Arc<WirthmuellerData<F>>>,
}

impl<F: Field> Built<F> {
    fn plain(ctx: Arc<AdjunctionContext<F>>) -> Self {
        Built { ctx, object: None, wirthmueller: None }
    }
}
