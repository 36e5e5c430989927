//! Enumeration of minimal dominating sets of bicolored graphs.
//!
//! A bicolored graph is a graph `G` with a prescribed set `A`; the goal is
//! every inclusion-minimal `D` with `A ⊆ N[D]`. The enumerators walk a tree
//! over a peeling of `A` and differ only in how they produce the candidate
//! extensions of a node. Streams are restartable and hold no solution-sized
//! state, which is what lets repetitions be filtered by replay.

pub mod enumerate;
pub mod error;
pub mod extensions;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod ordered;
pub mod peeling;
pub mod split;
pub mod stream;

pub use enumerate::{
    enum_maximal_independent_sets, enum_mds_diamond_free, enum_mds_diamond_free_with,
    enum_mds_general, enum_mds_general_with, enum_mds_kt_plus_k2, enum_mds_paw_free,
    enum_mds_paw_free_with, enum_mds_triangle_free, enum_mds_triangle_free_with, GeneralOptions,
};
pub use error::{Error, GraphClass, Result};
pub use graph::{
    closed_neighborhood, detect_classes, find_diamond, find_paw, find_triangle,
    is_minimal_dominating, private_neighbors, BicoloredGraph, ClassReport, Graph, Vertex,
    VertexSet,
};
pub use oracle::{
    oracle_extension, oracle_extension_with_cap, oracle_mds, oracle_mds_with_cap, ORACLE_CAP,
};
pub use ordered::{
    check_parent, enumerate_ordered, enumerate_ordered_with, parent, ExtensionContext,
    ExtensionProvider, Probe,
};
pub use peeling::{compute_peeling, validate_peeling, Peeling};
pub use split::{enumerate_split_mds, maximalize_split, SplitPartition};
pub use stream::{dedup, SolutionStream, Solutions};
