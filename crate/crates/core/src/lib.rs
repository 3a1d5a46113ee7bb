//! Exact computation of dope matrices: which derivatives of a polynomial
//! vanish at which points of a node tuple.

pub mod counting;
pub mod dope;
pub mod enumerate;
pub mod error;
pub mod expr;
pub mod forms;
pub mod input;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod scalar;

pub use dope::{
    check_conditions, check_dope_conditions, dope_matrix_of, extend, gv_nonsingular, is_dope_two_row,
    multiplicity_from_dope, poised_by_nullspace, polya_poised, satisfies_condition_t, signed_dope_matrix_of,
    witness_general, witness_two_row, ConditionReport, DopeMatrix, ExtensionPlan, GvReport, MultiplicityMatrix,
    Realization, SignedDopeMatrix,
};
pub use error::{Error, Result};
pub use forms::{build_forms, closure, FormGrid, Grid, NodeTuple, Position, PositionSet};
pub use linalg::ExactMatrix;
pub use poly::{crt_interpolate, crt_interpolate_multiple, CrtResidue, Poly, PolyLiteral};
pub use scalar::{FieldDescriptor, Scalar, ScalarLiteral};
