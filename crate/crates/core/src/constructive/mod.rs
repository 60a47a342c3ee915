//! Partition builders that follow the constructive proofs for each digraph
//! class on which the α-property or BE-property is known to hold.
//!
//! Every builder validates its own output before returning it and records the
//! steps it took in a [`BuildTrace`] whose replay reproduces the partition.

mod compose;
mod cycle;
mod dispatch;
mod in_semicomplete;
mod perfect;
mod semi_symmetric;
mod semicomplete;
mod series_parallel;
mod trace;
mod universal;

pub use compose::{clique_cut_split, compose_partitions, cycle_split};
pub use cycle::partition_cycle_digraph;
pub use dispatch::{run_builder, Builder};
pub use in_semicomplete::{hamilton_cycle_strong_in_semicomplete, partition_in_semicomplete};
pub use perfect::partition_perfect;
pub use semi_symmetric::partition_semi_symmetric;
pub use semicomplete::{redei_hamilton_path, st_hamilton_path};
pub use series_parallel::partition_series_parallel;
pub use trace::{BuildTrace, Built, Lemma, TraceStep};
pub use universal::extend_through_universal;
