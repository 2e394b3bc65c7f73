use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{DistributionTable, TableKind};
use crate::scalar::{from_usize, Scalar};

/// Histogram of degrees: occurring degree → node count, ascending.
fn degree_histogram(g: &Graph) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for k in g.degrees() {
        *hist.entry(k).or_insert(0usize) += 1;
    }
    hist
}

/// Degree pdf (fraction of nodes per occurring degree) and ccd (fraction of
/// nodes with degree ≥ k).
pub fn degree_distribution<T: Scalar>(
    g: &Graph,
) -> Result<(DistributionTable<T>, DistributionTable<T>)> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n: T = from_usize(g.node_count());
    let hist = degree_histogram(g);
    let pdf: Vec<(T, T)> = hist
        .iter()
        .map(|(&k, &c)| (from_usize(k), from_usize::<T>(c) / n))
        .collect();
    // suffix sums over the ascending histogram
    let mut remaining = g.node_count();
    let ccd: Vec<(T, T)> = hist
        .iter()
        .map(|(&k, &c)| {
            let y = from_usize::<T>(remaining) / n;
            remaining -= c;
            (from_usize(k), y)
        })
        .collect();
    Ok((
        DistributionTable::new(TableKind::Pdf, pdf)?,
        DistributionTable::new(TableKind::Ccd, ccd)?,
    ))
}

/// Least-squares slope of log10(y) on log10(x) over the points with
/// x in [x_min, x_max] and positive coordinates.
pub fn fit_loglog_slope<T: Scalar>(
    table: &DistributionTable<T>,
    x_min: T,
    x_max: T,
) -> Result<T> {
    let pts: Vec<(T, T)> = table
        .points()
        .iter()
        .filter(|&&(x, y)| x >= x_min && x <= x_max && x > T::zero() && y > T::zero())
        .map(|&(x, y)| (x.log10(), y.log10()))
        .collect();
    if pts.len() < 2 {
        return Err(Error::Unfittable(format!(
            "need at least 2 positive points in [{x_min}, {x_max}], found {}",
            pts.len()
        )));
    }
    let n: T = from_usize(pts.len());
    let mut sum_u = T::zero();
    let mut sum_v = T::zero();
    for &(u, v) in &pts {
        sum_u = sum_u + u;
        sum_v = sum_v + v;
    }
    let mean_u = sum_u / n;
    let mean_v = sum_v / n;
    let mut cov = T::zero();
    let mut var = T::zero();
    for &(u, v) in &pts {
        cov = cov + (u - mean_u) * (v - mean_v);
        var = var + (u - mean_u) * (u - mean_u);
    }
    if var <= T::zero() {
        return Err(Error::Unfittable("all x values coincide".into()));
    }
    Ok(cov / var)
}

/// Power-law degree exponent γ: the pdf slope recovered from the ccd
/// (a pdf ~ k^γ has ccd ~ k^(γ+1), so γ = ccd slope − 1). Fitted over the
/// full degree range [1, k_max].
pub fn degree_exponent<T: Scalar>(g: &Graph) -> Result<T> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let distinct = degree_histogram(g).len();
    if distinct < 3 {
        return Err(Error::Unfittable(format!(
            "need at least 3 distinct degrees, found {distinct}"
        )));
    }
    let (_, ccd) = degree_distribution::<T>(g)?;
    let slope = fit_loglog_slope(&ccd, T::one(), from_usize(g.max_degree()))?;
    Ok(slope - T::one())
}
