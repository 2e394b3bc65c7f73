use crate::error::{Error, Result, UndefinedReason};
use crate::graph::Graph;
use crate::metrics::{
    assortative_coefficient, coreness, degree_exponent, fit_loglog_slope, rich_club_by_rank,
    shortest_path_stats, top_clique_size, triangle_summaries, MetricValue,
};
use crate::scalar::{from_usize, Scalar};

/// One summary row per graph: node/link counts, the fitted exponents, and
/// the clique/core/path statistics. Count-valued fields are carried as the
/// scalar type so ensemble averages keep full precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricsReport<T> {
    pub n: T,
    pub l: T,
    pub k_max: T,
    pub gamma: MetricValue<T>,
    pub alpha: MetricValue<T>,
    pub n_clique: T,
    pub theta: MetricValue<T>,
    pub mean_triangle: T,
    pub ell_star: MetricValue<T>,
    pub c_max: T,
    /// True when the input was not connected; path statistics then describe
    /// the largest component only.
    pub disconnected: bool,
}

fn to_value<T>(r: Result<T>) -> Result<MetricValue<T>> {
    match r {
        Ok(v) => Ok(MetricValue::Defined(v)),
        Err(Error::Unfittable(_)) => Ok(MetricValue::Undefined(UndefinedReason::Unfittable)),
        Err(Error::Undefined { reason, .. }) => Ok(MetricValue::Undefined(reason)),
        Err(e) => Err(e),
    }
}

/// Rich-club exponent: slope of log10 φ on log10(r/N) from the first rank
/// whose club is not a complete clique through r = N. The leading φ = 1
/// plateau is excluded because it carries no power-law information.
fn rich_club_exponent<T: Scalar>(g: &Graph) -> Result<T> {
    let table = rich_club_by_rank::<T>(g);
    let start = table
        .points()
        .iter()
        .find(|&&(_, y)| y < T::one())
        .map(|&(x, _)| x)
        .ok_or_else(|| Error::Unfittable("every rank prefix is a clique".into()))?;
    fit_loglog_slope(&table, start, T::one())
}

pub fn full_report<T: Scalar>(g: &Graph) -> Result<MetricsReport<T>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let triangles = triangle_summaries::<T>(g)?;
    let paths = shortest_path_stats::<T>(g)?;
    let (_, c_max) = coreness(g)?;
    Ok(MetricsReport {
        n: from_usize(g.node_count()),
        l: from_usize(g.edge_count()),
        k_max: from_usize(g.max_degree()),
        gamma: to_value(degree_exponent(g))?,
        alpha: to_value(assortative_coefficient(g))?,
        n_clique: from_usize(top_clique_size(g)?),
        theta: to_value(rich_club_exponent(g))?,
        mean_triangle: triangles.mean,
        ell_star: paths.ell_star,
        c_max: T::from_u32(c_max).unwrap(),
        disconnected: !g.is_connected(),
    })
}

fn mean_plain<T: Scalar>(reports: &[MetricsReport<T>], get: impl Fn(&MetricsReport<T>) -> T) -> T {
    let mut sum = T::zero();
    for r in reports {
        sum = sum + get(r);
    }
    sum / from_usize(reports.len())
}

fn mean_value<T: Scalar>(
    reports: &[MetricsReport<T>],
    field: &'static str,
    get: impl Fn(&MetricsReport<T>) -> MetricValue<T>,
    mismatched: &mut Vec<&'static str>,
) -> MetricValue<T> {
    let first = get(&reports[0]);
    let consistent = reports.iter().all(|r| match (get(r), first) {
        (MetricValue::Defined(_), MetricValue::Defined(_)) => true,
        (MetricValue::Undefined(a), MetricValue::Undefined(b)) => a == b,
        _ => false,
    });
    if !consistent {
        mismatched.push(field);
        return first;
    }
    match first {
        MetricValue::Undefined(reason) => MetricValue::Undefined(reason),
        MetricValue::Defined(_) => {
            let mut sum = T::zero();
            for r in reports {
                sum = sum + get(r).defined().expect("checked defined");
            }
            MetricValue::Defined(sum / from_usize(reports.len()))
        }
    }
}

/// Field-wise arithmetic mean of per-run reports. Every report must define
/// the same fields (with matching reasons on the undefined ones); anything
/// else indicates runs so different that averaging them is meaningless.
pub fn average_reports<T: Scalar>(reports: &[MetricsReport<T>]) -> Result<MetricsReport<T>> {
    if reports.is_empty() {
        return Err(Error::Report("cannot average zero reports".into()));
    }
    let mut mismatched: Vec<&'static str> = Vec::new();
    let averaged = MetricsReport {
        n: mean_plain(reports, |r| r.n),
        l: mean_plain(reports, |r| r.l),
        k_max: mean_plain(reports, |r| r.k_max),
        gamma: mean_value(reports, "gamma", |r| r.gamma, &mut mismatched),
        alpha: mean_value(reports, "alpha", |r| r.alpha, &mut mismatched),
        n_clique: mean_plain(reports, |r| r.n_clique),
        theta: mean_value(reports, "theta", |r| r.theta, &mut mismatched),
        mean_triangle: mean_plain(reports, |r| r.mean_triangle),
        ell_star: mean_value(reports, "ell_star", |r| r.ell_star, &mut mismatched),
        c_max: mean_plain(reports, |r| r.c_max),
        disconnected: reports.iter().any(|r| r.disconnected),
    };
    if !mismatched.is_empty() {
        return Err(Error::Report(format!(
            "reports disagree on which fields are defined: {}",
            mismatched.join(", ")
        )));
    }
    Ok(averaged)
}
