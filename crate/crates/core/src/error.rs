use thiserror::Error;

use crate::graph::MAX_ORDER;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("self-loop at vertex {0} rejected")]
    LoopRejected(usize),

    #[error("order {0} exceeds the {MAX_ORDER}-vertex cap")]
    TooLarge(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("format error at byte {offset}: {reason}")]
    Format { offset: usize, reason: String },

    #[error("graph is not connected")]
    NotConnected,

    #[error("order {order} exceeds exhaustive enumeration limit {limit}")]
    BudgetExceeded { order: usize, limit: usize },

    #[error("order {0} is too small for a cycle (need at least 3 vertices)")]
    TooSmall(usize),

    #[error("degree sequence is not graphical")]
    NotRealizable,
}

pub type Result<T> = std::result::Result<T, Error>;
