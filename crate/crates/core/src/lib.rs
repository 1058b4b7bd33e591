//! Efficient domination and its relatives on graphs and hypergraphs.
//!
//! The crate solves four problems:
//!
//! * **ED**: find a vertex set whose closed neighborhoods partition the vertex set.
//! * **EED**: find an edge set such that every edge meets exactly one chosen edge
//!   (a dominating induced matching).
//! * **MIM**: find a maximum induced matching.
//! * **XC**: find a subfamily of hyperedges partitioning the vertex set.
//!
//! Each solver dispatches on graph class. Dually chordal graphs get a linear-time
//! ED algorithm that works directly on a maximum neighborhood ordering, chordal
//! squares and chordal line graphs get Frank's two-pass maximum weight
//! independent set algorithm, and everything else falls back to gated
//! exponential search. Every returned certificate is re-verified.
//!
//! Vertices, edges and hyperedges are 0-based indices throughout the library.
//! The text formats in [`io`] are 1-based.

pub mod ed;
pub mod eed;
pub mod gadgets;
pub mod generate;
pub mod graph;
pub mod hyper;
pub mod hypergraph;
pub mod io;
pub mod mwis;
pub mod oracles;
pub mod ordering;
pub mod recognition;

mod error;

pub use ed::{
    ed_dually_chordal, ed_via_square, solve_ed, verify_ed, EdCertificate, Method, MethodChoice,
    Status,
};
pub use eed::{
    eed_structural_screen, solve_eed, solve_mim, verify_eed, verify_mim, EedCertificate,
    MimCertificate, Obstruction, Screen,
};
pub use error::{Error, Result};
pub use graph::{
    is_independent_set, line_graph, neighborhood_weights, square, Graph, LabeledLineGraph,
    WeightMap,
};
pub use hyper::{
    solve_exact_cover, solve_hyper_ed, solve_hyper_eed, solve_hyper_mim, verify_exact_cover,
    verify_hyper_eed, verify_hyper_mim, XcCertificate,
};
pub use hypergraph::{
    clique_hypergraph, closed_neighborhood_hypergraph, dual, hyper_line_graph, two_section,
    Hypergraph,
};
pub use mwis::{mwis_chordal, MwisCertificate};
pub use ordering::{
    compute_mno, is_chordal, is_dually_chordal, is_peo, mcs, MnoObstruction, MnoResult, PeoResult,
};
pub use recognition::{
    is_alpha_acyclic, is_conformal, is_helly, is_hypertree, join_tree, ClassReport, JoinTree,
    Witness,
};
