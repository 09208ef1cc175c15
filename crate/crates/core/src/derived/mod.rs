mod certificate;
mod complex;
mod hom;

pub use certificate::{projective_stalk, verify_sod, CertStep, GenerationCertificate, K0Check, SODReport};
pub use complex::{ChainMap, PerfComplex};
pub use hom::{
    check_semiorthogonal, collection_algebra, derived_hom, end_algebra, end_algebra_data, homotopic, is_exceptional, is_semi_exceptional,
    is_w_exceptional, Cohomology, CollectionAlgebra, DerivedHomProfile, EndData, HomComplex, OrthogonalityFailure, Semiorthogonality,
    Verdict,
};
