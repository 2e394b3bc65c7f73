use std::fmt;

use crate::graph::NodeId;

/// Why a report field carries no value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UndefinedReason {
    /// All link endpoints have the same degree, so the degree-correlation
    /// denominator is zero (regular graphs).
    Regular,
    /// Fewer than two usable points in the requested fit range.
    Unfittable,
    /// The component has a single node, so there are no pairs to average.
    SingleNode,
}

impl UndefinedReason {
    pub fn code(self) -> &'static str {
        match self {
            UndefinedReason::Regular => "regular",
            UndefinedReason::Unfittable => "unfittable",
            UndefinedReason::SingleNode => "single_node",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "regular" => Some(UndefinedReason::Regular),
            "unfittable" => Some(UndefinedReason::Unfittable),
            "single_node" => Some(UndefinedReason::SingleNode),
            _ => None,
        }
    }
}

impl fmt::Display for UndefinedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A node id that is not part of the graph was passed to a query.
    UnknownNode(NodeId),
    /// The operation is not defined on the empty graph.
    EmptyGraph,
    /// A configuration value is outside its legal range.
    InvalidParameter(String),
    /// The preference probability is undefined for degree-0 nodes.
    IsolatedNode(NodeId),
    /// A weighted selection was asked for but every node is excluded.
    ExhaustedCandidates,
    /// A log-log fit has fewer than two usable points or zero x-variance.
    Unfittable(String),
    /// A metric has no value on this graph; carries the report reason code.
    Undefined {
        metric: &'static str,
        reason: UndefinedReason,
    },
    /// A text document failed to parse; `line` is 1-based.
    Parse { line: usize, message: String },
    /// A report document violates the key-value schema.
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownNode(v) => write!(f, "node {v} is not in the graph"),
            Error::EmptyGraph => write!(f, "operation is undefined on the empty graph"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::IsolatedNode(v) => write!(
                f,
                "preference weight is undefined for isolated node {v} (degree 0)"
            ),
            Error::ExhaustedCandidates => write!(f, "no selectable node remains"),
            Error::Unfittable(msg) => write!(f, "unfittable data: {msg}"),
            Error::Undefined { metric, reason } => {
                write!(f, "metric {metric} is undefined: {reason}")
            }
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
            Error::Report(msg) => write!(f, "malformed report: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
