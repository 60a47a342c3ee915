//! Exact exponential-time solvers.
//!
//! Every routine enumerates exhaustively within an explicit order cap and
//! explores candidates in increasing vertex order, so equal inputs give equal
//! witnesses.

mod cliques;
mod matching;
mod paths;
mod stable;

pub use cliques::{is_perfect, min_clique_partition, PerfectCheck, CLIQUE_CAP, PERFECT_CAP};
pub use matching::{max_bipartite_matching, Matching};
pub use paths::{
    exists_s_path_partition, hamilton_search, min_path_partition, path_partition_number,
    HamiltonConstraint, PATH_CAP,
};
pub use stable::{
    check_maximum_stable, max_stable_sets, max_stable_sets_graph, stability_number,
    stability_number_graph, StableSetFamily, ALPHA_CAP, STABLE_SETS_CAP,
};

pub(crate) use stable::alpha_mask;
