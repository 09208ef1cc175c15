//! Right modules, Hom spaces, minimal projective resolutions, Ext and homological dimensions.

mod module;
mod projective;
mod resolution;

pub use module::{find_isomorphism, hom_space, ModuleMap, RightModule};
pub use projective::{
    indecomposable_projectives, projective_classes, projective_cover, random_module, simple_modules, AMatrix, ProjectiveModule,
    RealizedProjective,
};
pub use resolution::{
    bimodule_of, ext_dims, ext_dims_from, global_dimension, is_proper, is_regular, is_smooth, minimal_resolution,
    projective_dimension, DimensionBound, Resolution, ResolutionStatus,
};
