//! Gray code generators for spanning trees.
//!
//! Every spanning tree of a complete graph K_n can be listed so that
//! consecutive trees differ by pivoting one edge around a shared vertex, in
//! constant amortized time per tree ([`PivotGen`]). Arbitrary connected
//! graphs get an edge-exchange listing ([`EdgeExchangeGen`]), and complete
//! bipartite graphs a constant-amortized-time specialization
//! ([`BipartiteGen`]). All three ride on a resumable reflectable Gray code
//! for mixed-radix strings ([`MixedRadixGen`]) that skips the all-zero
//! string and can start anywhere.
//!
//! The [`verify`] module holds independent oracles: exact matrix-tree
//! counting, brute-force enumeration, and streaming listing validation.
//!
//! ```
//! use spantree::{PivotGen, TreeGen};
//!
//! let mut gen = PivotGen::new(4).unwrap();
//! let mut trees = Vec::new();
//! while let Some(ev) = gen.next_event() {
//!     trees.push(ev.forest.to_compact().unwrap());
//! }
//! assert_eq!(trees.len(), 16);
//! assert_eq!(trees[0], "123");
//! ```

pub mod bipartite;
pub mod edge_exchange;
pub mod error;
pub mod graph;
pub mod mixed_radix;
pub mod pivot;
pub mod tree;
pub mod verify;

pub use bipartite::BipartiteGen;
pub use edge_exchange::{candidate_parents, find_reconnection, EdgeExchangeGen};
pub use error::{Error, Result};
pub use graph::{
    build_graph, connected_components, dot_format, initial_spanning_tree, parse_edge_list, Graph,
    GraphSpec,
};
pub use mixed_radix::{MixedRadixGen, StepDelta};
pub use pivot::PivotGen;
pub use tree::{collect_compact, edge, lift, Edge, ParentForest, TransitionEvent, TreeGen, Vertex};
pub use verify::{
    brute_force_trees, cayley_count, cayley_count_recursive, classify_transition,
    count_spanning_trees, validate_generator, validate_listing, ListingMode, ListingReport,
    ListingValidator, Transition,
};
