use thiserror::Error;

use crate::forbidden::ForbiddenClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc ({0}, {0}) is a loop")]
    LoopArc(usize),
    #[error("vertex {vertex} is out of range for a digraph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{what}: order {order} exceeds the size cap {cap}")]
    TooLarge {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("vertex set {0:?} is not stable")]
    NotStable(Vec<usize>),
    #[error("stable set of size {size} is not maximum (stability number is {alpha})")]
    NotMaximumStable { size: usize, alpha: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("digraph is not semicomplete")]
    NotSemicomplete,
    #[error("digraph contains the induced transitive triangle {0:?}")]
    TransitiveTrianglePresent(Vec<usize>),
    #[error("exceptional digraph: no Hamilton path joins {s} and {t}")]
    ExceptionDigraph { s: usize, t: usize },
    #[error("{s} and {t} lie in the same strong component of a non-strong digraph")]
    SidesViolated { s: usize, t: usize },
    #[error("underlying graph is not perfect (odd hole or antihole {0:?})")]
    NotPerfect(Vec<usize>),
    #[error("digraph is not in class {0}")]
    NotInClass(ForbiddenClass),
    #[error("vertex {0} is not universal")]
    NotUniversal(usize),
    #[error("vertex {0} cannot be inserted into any path")]
    InsertionImpossible(usize),
    #[error("stability numbers are not additive: parts sum to {parts}, digraph has {whole}")]
    AlphaNotAdditive { parts: usize, whole: usize },
    #[error("parts do not partition the vertex set")]
    NotAPartition,
    #[error("{0:?} is not a clique cut")]
    NotACliqueCut(Vec<usize>),
    #[error("underlying graph is not a cycle")]
    NotACycle,
    #[error("underlying graph is not series-parallel")]
    NotSeriesParallel,
    #[error("digraph is not in-semicomplete")]
    NotInSemicomplete,
    #[error("digraph is not strong")]
    NotStrong,
    #[error("internal theorem violation: {0}")]
    InternalTheoremViolation(String),
    #[error("digraph has {0} lonely arcs (at most 3 supported)")]
    TooManyLonelyArcs(usize),
    #[error("lonely arcs share the endvertex {0}")]
    SharedEndvertex(usize),
    #[error("unknown class name {0:?}")]
    UnknownClass(String),
    #[error("budget of {budget} digraphs exceeded ({required} required)")]
    BudgetExceeded { budget: usize, required: usize },
}

impl Error {
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::InternalTheoremViolation(msg.into())
    }

    pub(crate) fn check_cap(what: &'static str, order: usize, cap: usize) -> Result<()> {
        if order > cap {
            Err(Error::TooLarge { what, order, cap })
        } else {
            Ok(())
        }
    }
}
