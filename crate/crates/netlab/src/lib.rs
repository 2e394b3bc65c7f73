pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod pfp;
pub mod scalar;
pub mod viz;

pub use error::{Error, Result, UndefinedReason};
pub use graph::{Graph, NodeId};
pub use metrics::{
    average_reports, full_report, DistributionTable, MetricValue, MetricsReport, TableKind,
};
pub use pfp::{grow, grow_ensemble, pfp_select, preference_weights, seed_graph, PfpParams, RngStream};
pub use scalar::Scalar;

/// Default-precision aliases; the generic types accept any [`Scalar`].
pub type Table = DistributionTable<f64>;
pub type Report = MetricsReport<f64>;
pub type Params = PfpParams<f64>;
pub type Layout = viz::ShellLayout<f64>;
