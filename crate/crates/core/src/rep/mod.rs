//! Finite-dimensional representations as comodules over kQ, their tensor
//! products under a bialgebra structure, and interval decompositions on
//! equioriented type-A lines.

mod interval;
mod matrix;
mod representation;
mod tensor;

pub use interval::{
    barcode_decompose, interval_module, intervals_direct_sum, is_isomorphic, rank_invariant,
    Interval, IntervalMultiset,
};
pub use matrix::Matrix;
pub use representation::{
    comodule_map, is_locally_nilpotent, ComoduleImage, ComoduleTerms, Nilpotency, Representation,
};
pub use tensor::{
    cg_table, check_tensor_comodule, intervals_up_to, render_class, rep_ring_check,
    tensor_intervals, tensor_representations, unit_representation, CgEntry, CgTable, Class,
    RepRingReport,
};
