pub mod monoidal;
pub mod named;
pub mod object;
pub mod sampler;

pub use monoidal::*;
pub use named::{
    character_modules, characters, module_from_file, named_module, permutation_module, regular, standard_module,
    trivial, ModuleFile,
};
pub use object::{chain, ModuleObject, Morphism};
pub use sampler::{generating_family, ObjectSampler};
