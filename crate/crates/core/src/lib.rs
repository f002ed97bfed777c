//! Exact computation of total domination numbers of digraphs and of the
//! upper and lower orientable total domination numbers of graphs, together
//! with recognizers and generators for the graph families whose upper
//! number is one less than the vertex count, and exhaustive verification
//! pipelines over small graphs.

pub mod domination;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod orientation;
pub mod orientations;
pub mod verify;

pub use domination::{
    gamma_t, gamma_t_oracle, has_overdominating_set, is_total_dominating,
    minimal_total_dominating_sets, TdsSolution,
};
pub use enumerate::{canonical_code, enumerate_graphs, ENUMERATION_LIMIT};
pub use error::{Error, Graph6Error, Result};
pub use families::{
    extremal_orientation_for, fixture, recognize_f1, recognize_f2, recognize_f3,
    recognize_result1_class, recognize_theorem_class, F1Witness, F2Witness, F3Case, F3Witness,
    FWitness, FamilyWitness,
};
pub use graph::{is_isomorphic, ComponentDecomposition, Graph, VertexSet};
pub use graph6::{parse_graph6, to_graph6};
pub use orientation::Orientation;
pub use orientations::{
    construct_valid_orientation, domt_lower, domt_range, domt_upper,
    enumerate_valid_orientations, exists_extremal_orientation,
    verify_extremal_necessary_conditions, DomtRange, ExtremalRule, OrientationSearchStats,
};
