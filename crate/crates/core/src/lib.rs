//! Path partitions of small digraphs.
//!
//! The crate decides, certifies and constructs path partitions in which every
//! path meets a maximum stable set exactly once (the α-property), optionally
//! at one of its ends (the BE-property). It bundles
//!
//! * the [`Digraph`] value type and its structural queries,
//! * exact exponential-time [`oracles`],
//! * recognizers for forbidden odd cycles and digraph classes ([`forbidden`]),
//! * constructive partition builders for each class where the properties are
//!   known to hold ([`constructive`]),
//! * an exhaustive and randomized verification [`harness`].
//!
//! Orders are small by design: every exponential routine enforces an explicit
//! cap and reports [`Error::TooLarge`] beyond it.

mod bits;
pub mod constructive;
pub mod digraph;
pub mod error;
pub mod forbidden;
pub mod graph;
pub mod harness;
pub mod instances;
pub mod oracles;
pub mod path;

pub use constructive::{BuildTrace, Builder, Built};
pub use digraph::{Digraph, Induced, StrongDecomposition};
pub use error::{Error, Result};
pub use forbidden::{ClassReport, ForbiddenClass, Witness, WitnessKind};
pub use graph::Graph;
pub use path::{InvalidPartition, Mode, PartitionMode, Path, PathPartition};
