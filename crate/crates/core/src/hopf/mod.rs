pub mod algebra;
pub mod group;
pub mod inclusion;

pub use algebra::{group_algebra, truncated_primitive, verify_hopf, HopfAlgebra, HopfParts};
pub use group::{builtin_group, builtin_group_names, builtin_subgroup, builtin_subgroups, FiniteGroup, GroupFile};
pub use inclusion::{compute_free_basis, subgroup_inclusion, subgroup_inclusion_named, HopfInclusion};
