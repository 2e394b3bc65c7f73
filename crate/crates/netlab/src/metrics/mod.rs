//! Topology statistics: degree distributions and power-law fits, degree
//! correlations, rich-club connectivity, triangle coefficients, shortest
//! paths, k-core decomposition, and the per-graph summary report.

mod correlation;
mod degree;
mod kcore;
mod paths;
mod report;
mod richclub;
mod triangles;

pub use correlation::{assortative_coefficient, knn_by_degree};
pub use degree::{degree_distribution, degree_exponent, fit_loglog_slope};
pub use kcore::coreness;
pub use paths::{shortest_path_stats, PathStats};
pub use report::{average_reports, full_report, MetricsReport};
pub use richclub::{rich_club_by_degree, rich_club_by_rank, top_clique_size};
pub use triangles::{triangle_coefficients, triangle_summaries, TriangleSummary};

use crate::error::{Error, Result, UndefinedReason};
use crate::scalar::Scalar;

/// A report field that may be undefined on degenerate graphs, carrying the
/// reason instead of a sentinel value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricValue<T> {
    Defined(T),
    Undefined(UndefinedReason),
}

impl<T: Copy> MetricValue<T> {
    pub fn defined(&self) -> Option<T> {
        match self {
            MetricValue::Defined(v) => Some(*v),
            MetricValue::Undefined(_) => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, MetricValue::Defined(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Pdf,
    Ccd,
    ByDegree,
    ByRank,
}

/// A plottable series of (x, y) points with strictly increasing x.
/// Ccd tables additionally keep y non-increasing within [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionTable<T> {
    kind: TableKind,
    points: Vec<(T, T)>,
}

impl<T: Scalar> DistributionTable<T> {
    pub fn new(kind: TableKind, points: Vec<(T, T)>) -> Result<Self> {
        for pair in points.windows(2) {
            if pair[0].0 >= pair[1].0 {
                return Err(Error::InvalidParameter(format!(
                    "table x values must be strictly increasing, got {} then {}",
                    pair[0].0, pair[1].0
                )));
            }
        }
        if kind == TableKind::Ccd {
            for &(x, y) in &points {
                if y < T::zero() || y > T::one() {
                    return Err(Error::InvalidParameter(format!(
                        "ccd y values must lie in [0, 1], got {y} at x = {x}"
                    )));
                }
            }
            for pair in points.windows(2) {
                if pair[0].1 < pair[1].1 {
                    return Err(Error::InvalidParameter(format!(
                        "ccd y values must be non-increasing, got {} then {}",
                        pair[0].1, pair[1].1
                    )));
                }
            }
        }
        Ok(DistributionTable { kind, points })
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn points(&self) -> &[(T, T)] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }
}
