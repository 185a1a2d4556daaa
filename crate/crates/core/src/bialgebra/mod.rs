//! Graded bialgebra structures on kQ: a monoid on the vertices together
//! with a compatible bimodule action on the arrows, and the quantum-shuffle
//! product they determine.

mod classify;
mod monoid;
mod shuffle;
mod spec;
mod verify;

pub use classify::{
    attach_quiver, check_degree1_closure, classify_finite_type, has_sink_or_source, isotypic_dims,
    Classification, Component, Degree1Counterexample, Dynkin, IsotypicMatrix,
};
pub use monoid::{validate_monoid, VertexMonoid};
pub use shuffle::{
    ainf_closed_product, ainf_path, product_tensor2, product_vector, shuffle_product, ClosedProduct,
};
pub(crate) use spec::prune;
pub use spec::{
    ainf_bialgebra, trivial_bialgebra, validate_bimodule, BialgebraSpec, BimoduleAction,
};
pub use verify::{verify_bialgebra, CheckResult, VerifyReport};
