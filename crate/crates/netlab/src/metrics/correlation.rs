use std::collections::BTreeMap;

use crate::error::{Error, Result, UndefinedReason};
use crate::graph::Graph;
use crate::metrics::{DistributionTable, TableKind};
use crate::scalar::{from_usize, Scalar};

/// Nearest-neighbors average degree per degree class: for each occurring
/// degree k, the mean over degree-k nodes of their neighbors' average
/// degree.
pub fn knn_by_degree<T: Scalar>(g: &Graph) -> Result<DistributionTable<T>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let degrees = g.degrees();
    // degree class → (sum of per-node neighbor averages, node count)
    let mut classes: BTreeMap<usize, (T, usize)> = BTreeMap::new();
    for i in 0..g.node_count() {
        let k = degrees[i];
        if k == 0 {
            return Err(Error::IsolatedNode(g.id_of(i)));
        }
        let neighbor_sum: usize = g.neighbors_ix(i).iter().map(|&j| degrees[j as usize]).sum();
        let avg = from_usize::<T>(neighbor_sum) / from_usize(k);
        let entry = classes.entry(k).or_insert((T::zero(), 0));
        entry.0 = entry.0 + avg;
        entry.1 += 1;
    }
    let points: Vec<(T, T)> = classes
        .into_iter()
        .map(|(k, (sum, count))| (from_usize(k), sum / from_usize(count)))
        .collect();
    DistributionTable::new(TableKind::ByDegree, points)
}

/// Assortative coefficient over links: each undirected link contributes its
/// endpoint degrees (j, k) once; the symmetric half-sums make endpoint
/// order irrelevant. Computed from exact integer sums
///   α = (4·L·Σjk − (Σ(j+k))²) / (2·L·Σ(j²+k²) − (Σ(j+k))²),
/// the displayed formula cleared of its 1/L factors.
pub fn assortative_coefficient<T: Scalar>(g: &Graph) -> Result<T> {
    let degrees = g.degrees();
    let mut l: u128 = 0;
    let mut a: u128 = 0; // Σ j·k
    let mut s1: u128 = 0; // Σ (j + k)
    let mut s2: u128 = 0; // Σ (j² + k²)
    for (u, v) in g.edges() {
        let j = degrees[g.index_of(u).unwrap()] as u128;
        let k = degrees[g.index_of(v).unwrap()] as u128;
        l += 1;
        a += j * k;
        s1 += j + k;
        s2 += j * j + k * k;
    }
    let num = 4i128 * (l * a) as i128 - (s1 * s1) as i128;
    let den = 2i128 * (l * s2) as i128 - (s1 * s1) as i128;
    if den == 0 {
        return Err(Error::Undefined {
            metric: "alpha",
            reason: UndefinedReason::Regular,
        });
    }
    Ok(T::from_f64(num as f64 / den as f64).unwrap())
}
