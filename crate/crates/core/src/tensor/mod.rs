//! The concrete tensor category: ℤ-graded rational vector spaces with the
//! Koszul symmetry, finite group actions, Schur functors, traces and
//! bounded complexes.

mod complex;
mod graded;
mod group;
mod power;

pub use complex::{ComplexObject, GComplex};
pub use graded::{
    categorical_trace, graded_categorical_trace, signed_dimension, trace_to_laurent, GradedMap, GradedObject,
    GradedTrace,
};
pub use group::{equivariant_kernel, permutation_matrix, FiniteGroup, GObject};
pub use power::{
    char_series, class_function_trace, multiplicity_spaces, schur_object, schur_objects, sym_action,
    tensor_power_trace, trace_schur, trace_schur_graded, DEFAULT_TENSOR_BOUND,
};
pub(crate) use power::{schur_dims_labelled, Label};
