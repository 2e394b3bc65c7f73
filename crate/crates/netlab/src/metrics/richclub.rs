use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{DistributionTable, TableKind};
use crate::scalar::{from_usize, Scalar};

/// Internal node indices sorted by non-increasing degree, ties broken by
/// ascending node id: the "rank list" every rich-club quantity shares.
fn rank_order(g: &Graph) -> Vec<usize> {
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(g.id_of(a).cmp(&g.id_of(b))));
    order
}

/// Number of links inside each rank prefix: entry r (1-based rank) is the
/// link count among the top-r nodes.
fn prefix_link_counts(g: &Graph, order: &[usize]) -> Vec<u64> {
    let mut member = vec![false; g.node_count()];
    let mut counts = Vec::with_capacity(order.len() + 1);
    counts.push(0); // rank 0: empty club
    let mut links = 0u64;
    for &i in order {
        for &j in g.neighbors_ix(i) {
            if member[j as usize] {
                links += 1;
            }
        }
        member[i] = true;
        counts.push(links);
    }
    counts
}

/// Rich-club connectivity by degree threshold: for each occurring degree k
/// whose club {v : deg(v) ≥ k} has at least two members, the ratio of
/// actual to maximum possible in-club links.
pub fn rich_club_by_degree<T: Scalar>(g: &Graph) -> DistributionTable<T> {
    let order = rank_order(g);
    let counts = prefix_link_counts(g, &order);
    let degrees = g.degrees();
    let mut points: Vec<(T, T)> = Vec::new();
    // The club of threshold k is exactly the rank prefix of nodes with
    // degree ≥ k, so prefix counts give every E_k in one pass.
    let mut r = g.node_count();
    let mut last_degree = None;
    for &i in order.iter().rev() {
        let k = degrees[i];
        if last_degree != Some(k) && r >= 2 {
            let pairs = (r as u64) * (r as u64 - 1) / 2;
            points.push((
                from_usize(k),
                T::from_u64(counts[r]).unwrap() / T::from_u64(pairs).unwrap(),
            ));
            last_degree = Some(k);
        }
        r -= 1;
    }
    DistributionTable::new(TableKind::ByDegree, points).expect("degrees strictly increase")
}

/// Rich-club connectivity by rank prefix: x = r/N and y = φ(r) for
/// r = 2..N over the rank list.
pub fn rich_club_by_rank<T: Scalar>(g: &Graph) -> DistributionTable<T> {
    let n = g.node_count();
    let order = rank_order(g);
    let counts = prefix_link_counts(g, &order);
    let nf: T = from_usize(n);
    let mut points: Vec<(T, T)> = Vec::with_capacity(n.saturating_sub(1));
    for r in 2..=n {
        let pairs = (r as u64) * (r as u64 - 1) / 2;
        points.push((
            from_usize::<T>(r) / nf,
            T::from_u64(counts[r]).unwrap() / T::from_u64(pairs).unwrap(),
        ));
    }
    DistributionTable::new(TableKind::ByRank, points).expect("ranks strictly increase")
}

/// Size of the largest rank prefix that is pairwise adjacent.
pub fn top_clique_size(g: &Graph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let order = rank_order(g);
    let mut clique: Vec<u32> = vec![order[0] as u32];
    for &i in &order[1..] {
        let id = g.id_of(i);
        if !clique.iter().all(|&j| g.has_edge(g.id_of(j as usize), id)) {
            break;
        }
        clique.push(i as u32);
    }
    Ok(clique.len())
}
