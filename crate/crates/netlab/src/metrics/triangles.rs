use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{DistributionTable, TableKind};
use crate::scalar::{from_usize, Scalar};

/// Per-node triangle coefficient k_t (the number of links among the
/// node's neighbors), aligned with `g.nodes()` order. Every triangle is
/// enumerated once at its lowest-index edge via sorted-adjacency
/// intersection, then credited to all three corners.
pub fn triangle_coefficients(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut kt = vec![0u64; n];
    for u in 0..n {
        for &v in g.neighbors_ix(u) {
            let v = v as usize;
            if v <= u {
                continue;
            }
            let (mut a, mut b) = (g.neighbors_ix(u), g.neighbors_ix(v));
            // common neighbors above v close a triangle u < v < w
            while let (Some(&x), Some(&y)) = (a.first(), b.first()) {
                if x < y {
                    a = &a[1..];
                } else if y < x {
                    b = &b[1..];
                } else {
                    if x as usize > v {
                        kt[u] += 1;
                        kt[v] += 1;
                        kt[x as usize] += 1;
                    }
                    a = &a[1..];
                    b = &b[1..];
                }
            }
        }
    }
    kt
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriangleSummary<T> {
    /// Fraction of nodes with triangle coefficient ≥ x, per occurring value.
    pub ccd: DistributionTable<T>,
    /// Mean triangle coefficient per degree class.
    pub by_degree: DistributionTable<T>,
    /// Mean triangle coefficient over all nodes.
    pub mean: T,
}

pub fn triangle_summaries<T: Scalar>(g: &Graph) -> Result<TriangleSummary<T>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let kt = triangle_coefficients(g);
    let n = g.node_count();
    let nf: T = from_usize(n);

    let mut value_counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &t in &kt {
        *value_counts.entry(t).or_insert(0) += 1;
    }
    let mut remaining = n;
    let ccd: Vec<(T, T)> = value_counts
        .iter()
        .map(|(&t, &c)| {
            let y = from_usize::<T>(remaining) / nf;
            remaining -= c;
            (T::from_u64(t).unwrap(), y)
        })
        .collect();

    let degrees = g.degrees();
    let mut classes: BTreeMap<usize, (u64, usize)> = BTreeMap::new();
    for i in 0..n {
        let entry = classes.entry(degrees[i]).or_insert((0, 0));
        entry.0 += kt[i];
        entry.1 += 1;
    }
    let by_degree: Vec<(T, T)> = classes
        .into_iter()
        .map(|(k, (sum, count))| {
            (
                from_usize(k),
                T::from_u64(sum).unwrap() / from_usize(count),
            )
        })
        .collect();

    let total: u64 = kt.iter().sum();
    Ok(TriangleSummary {
        ccd: DistributionTable::new(TableKind::Ccd, ccd)?,
        by_degree: DistributionTable::new(TableKind::ByDegree, by_degree)?,
        mean: T::from_u64(total).unwrap() / nf,
    })
}
