//! Workbench for three- and four-valued logics of indicative conditionals:
//! logical matrices with exhaustive validity checking, twist constructions
//! over small factor algebras, mechanical verification of the twist
//! representation results, and exact connective definability via clone
//! closure.
//!
//! Everything is finite and deterministic: exhaustive scans report the
//! lexicographically least counterexample, so repeated runs agree.

pub mod algebra;
pub mod classes;
pub mod definability;
pub mod error;
pub mod families;
pub mod formula;
pub mod matrices;
pub mod representation;
pub mod twist;

pub use algebra::{
    check_equation, check_quasiequation, eval_term, find_embeddings, find_isomorphism,
    generated_subalgebra, make_algebra, AlgebraSpec, CheckResult, ElemId, Equation,
    FiniteAlgebra, Morphism, OpSpec, OpTable, QuasiEquation, Term,
};
pub use classes::{classify, classify_by_name, AlgebraClass, ALL_CLASSES};
pub use definability::{
    binary_clone, check_definition, is_definable, is_table_definable, CloneFragment, Definability,
};
pub use error::{Error, Result};
pub use formula::{parse, render, Formula};
pub use matrices::{
    check_theses, connective_table, entails, is_valid, named_matrix, ConnTable, LogicalMatrix,
    TableItem, ThesesReport, Verdict, MATRIX_NAMES,
};
pub use representation::{
    box_image, diamond_image, roundtrip_check, verify_representation, Extraction,
    RepresentationMode, RepresentationReport, RoundtripReport, StepVerdict,
};
pub use twist::{
    check_closed_forms, check_universe_equivalence, enumerate_pi1_full_subalgebras, twist_build,
    TwistAlgebra, TwistKind, TwistSpec, ALL_KINDS,
};
