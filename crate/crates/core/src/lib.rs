//! Construction and verification toolkit for the reduction from monotone
//! NAE-3-SAT to 4-coloring of (P19, C3)-free graphs.
//!
//! * [`graph`], [`io`]: labeled graphs and the `.graph` text format.
//! * [`mycielski`]: `M_k`, the trimmed connector gadget `M'` and its checks.
//! * [`gadgets`]: MNAE-3-SAT instances and the reduction graph `G(phi)`.
//! * [`core_family`]: the nine fixed graphs `G0,0..G0,5, G1, G2, G3`.
//! * [`coloring`]: exact list-coloring decisions and the end-to-end harness.
//! * [`snake`]: exact induced-path search with an unpruned oracle.

mod bits;
pub mod budget;
pub mod coloring;
pub mod core_family;
pub mod equivalence;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod mycielski;
pub mod snake;

pub use budget::Budget;
pub use coloring::{
    decide_coloring, ColoringOutcome, ColoringProblem, ColoringReport, ColoringWitness, Symmetry,
};
pub use core_family::{build_core, realize_witness_path, CoreGraphId};
pub use equivalence::{end_to_end_check, EquivalenceReport};
pub use error::{Error, Result};
pub use gadgets::{build_reduction, nae_satisfiable, parse_mnae, AcPairType, MnaeInstance};
pub use graph::{Connector, GraphBuilder, LabeledGraph, Provenance, VertexKind, VertexTag};
pub use io::{read_graph, write_graph};
pub use mycielski::{build_m_prime, build_mk, mycielskian, ConnectorGadget};
pub use snake::{
    has_induced_path, is_induced_path, longest_induced_path, max_order_with_tag_count,
    naive_enumerate, LongestReport, PathDecision, PathQuery, SearchReport,
};
