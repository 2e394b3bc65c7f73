use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result, UndefinedReason};
use crate::graph::Graph;
use crate::metrics::{DistributionTable, MetricValue, TableKind};
use crate::scalar::{from_usize, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct PathStats<T> {
    /// Fraction of unordered node pairs at distance ≥ x.
    pub ccd: DistributionTable<T>,
    /// Mean distance from degree-k nodes to every other node.
    pub by_degree: DistributionTable<T>,
    /// Mean distance over all unordered pairs.
    pub ell_star: MetricValue<T>,
}

/// Distance histogram and distance sum from one BFS source.
fn bfs_source(
    adj: &[Vec<u32>],
    source: usize,
    dist: &mut [u32],
    queue: &mut Vec<u32>,
) -> (Vec<u64>, u64) {
    dist.fill(u32::MAX);
    queue.clear();
    dist[source] = 0;
    queue.push(source as u32);
    let mut head = 0;
    let mut hist: Vec<u64> = vec![0];
    let mut sum = 0u64;
    while head < queue.len() {
        let v = queue[head] as usize;
        head += 1;
        let d = dist[v] + 1;
        for &w in &adj[v] {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = d;
                queue.push(w);
                if hist.len() <= d as usize {
                    hist.resize(d as usize + 1, 0);
                }
                hist[d as usize] += 1;
                sum += u64::from(d);
            }
        }
    }
    (hist, sum)
}

/// All-pairs shortest-path statistics over the largest connected component.
///
/// Sources run in parallel; per-source results are merged in node order, so
/// the output is identical regardless of worker count.
pub fn shortest_path_stats<T: Scalar>(g: &Graph) -> Result<PathStats<T>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let lcc;
    let component = if g.is_connected() {
        g
    } else {
        lcc = g.largest_connected_component();
        &lcc
    };
    let n = component.node_count();
    if n == 1 {
        return Ok(PathStats {
            ccd: DistributionTable::new(TableKind::Ccd, vec![])?,
            by_degree: DistributionTable::new(TableKind::ByDegree, vec![])?,
            ell_star: MetricValue::Undefined(UndefinedReason::SingleNode),
        });
    }
    let adj: Vec<Vec<u32>> = (0..n).map(|i| component.neighbors_ix(i).to_vec()).collect();
    let per_source: Vec<(Vec<u64>, u64)> = (0..n)
        .into_par_iter()
        .map_init(
            || (vec![u32::MAX; n], Vec::with_capacity(n)),
            |(dist, queue), s| bfs_source(&adj, s, dist, queue),
        )
        .collect();

    let degrees = component.degrees();
    let mut ordered_hist: Vec<u64> = Vec::new();
    let mut total_sum = 0u64;
    // degree class → (distance sum over its sources, source count)
    let mut classes: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
    for (s, (hist, sum)) in per_source.iter().enumerate() {
        if ordered_hist.len() < hist.len() {
            ordered_hist.resize(hist.len(), 0);
        }
        for (d, &c) in hist.iter().enumerate() {
            ordered_hist[d] += c;
        }
        total_sum += sum;
        let entry = classes.entry(degrees[s]).or_insert((0, 0));
        entry.0 += sum;
        entry.1 += 1;
    }

    let pairs = (n as u64) * (n as u64 - 1) / 2;
    let pairs_t = T::from_u64(pairs).unwrap();
    // each unordered pair appears once per endpoint in the ordered counts
    let mut remaining: u64 = pairs;
    let mut ccd: Vec<(T, T)> = Vec::new();
    for (d, &c) in ordered_hist.iter().enumerate().skip(1) {
        let pair_count = c / 2;
        if pair_count > 0 {
            ccd.push((
                from_usize::<T>(d),
                T::from_u64(remaining).unwrap() / pairs_t,
            ));
            remaining -= pair_count;
        }
    }

    let by_degree: Vec<(T, T)> = classes
        .into_iter()
        .map(|(k, (sum, count))| {
            let denom = T::from_u64(count * (n as u64 - 1)).unwrap();
            (from_usize(k), T::from_u64(sum).unwrap() / denom)
        })
        .collect();

    Ok(PathStats {
        ccd: DistributionTable::new(TableKind::Ccd, ccd)?,
        by_degree: DistributionTable::new(TableKind::ByDegree, by_degree)?,
        ell_star: MetricValue::Defined(T::from_u64(total_sum / 2).unwrap() / pairs_t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, star};

    #[test]
    fn complete_graph_distance_is_one() {
        let s = shortest_path_stats::<f64>(&complete(3)).unwrap();
        assert_eq!(s.ell_star, MetricValue::Defined(1.0));
        assert_eq!(s.ccd.points(), &[(1.0, 1.0)]);
        assert_eq!(s.by_degree.points(), &[(2.0, 1.0)]);
    }

    #[test]
    fn three_node_path_mean_distance() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2)]);
        let s = shortest_path_stats::<f64>(&g).unwrap();
        // pairs at distance 1, 1, 2 → mean 4/3
        let ell = s.ell_star.defined().unwrap();
        assert!((ell - 4.0 / 3.0).abs() < 1e-12);
        assert_eq!(s.ccd.points(), &[(1.0, 1.0), (2.0, 1.0 / 3.0)]);
        // the middle node reaches both ends in one hop, the ends need 1+2
        assert_eq!(s.by_degree.points(), &[(1.0, 1.5), (2.0, 1.0)]);
    }

    #[test]
    fn star_distances() {
        let s = shortest_path_stats::<f64>(&star(3)).unwrap();
        // 3 hub-leaf pairs at 1, 3 leaf-leaf pairs at 2
        assert_eq!(s.ell_star, MetricValue::Defined(1.5));
        assert_eq!(s.ccd.points(), &[(1.0, 1.0), (2.0, 0.5)]);
    }

    #[test]
    fn disconnected_input_uses_largest_component() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (5, 6)]);
        let s = shortest_path_stats::<f64>(&g).unwrap();
        let ell = s.ell_star.defined().unwrap();
        assert!((ell - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn single_node_has_undefined_path_length() {
        let g = Graph::from_edge_list(&[(3, 3)]);
        let s = shortest_path_stats::<f64>(&g).unwrap();
        assert_eq!(
            s.ell_star,
            MetricValue::Undefined(UndefinedReason::SingleNode)
        );
        assert!(s.ccd.is_empty());
    }

    #[test]
    fn empty_graph_is_an_error() {
        assert!(matches!(
            shortest_path_stats::<f64>(&Graph::from_edge_list(&[])),
            Err(Error::EmptyGraph)
        ));
    }
}
