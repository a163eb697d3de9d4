//! Relation schemas of the shifted iYangian and its Poisson limit, evaluation
//! of those schemas in target algebras, shift maps and PBW data.

mod expr;
mod pbw;
mod relations;
mod verify;

pub use expr::{Expr, GenKind, Sym};
pub use pbw::{
    pbw_generators, pbw_hilbert_series, root_vector_decomposition, shift_homomorphism_map, PbwGenerator, ShiftMap,
};
pub use relations::{classical_relation_instances, quantum_relation_instances, RelationInstance, Tag};
pub use verify::{verify, Evaluator, GeneratorAssignment, InstanceResult, TagSummary, TargetAlgebra, VerificationReport};
