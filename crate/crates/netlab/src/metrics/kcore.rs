use crate::error::{Error, Result};
use crate::graph::Graph;

/// Coreness per node (aligned with `g.nodes()`) and the maximum coreness,
/// via linear-time bucket peeling: repeatedly remove a minimum-degree node;
/// a node's coreness is its remaining degree at removal, clamped below by
/// the cores already peeled.
pub fn coreness(g: &Graph) -> Result<(Vec<u32>, u32)> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut deg: Vec<usize> = g.degrees();
    let max_deg = *deg.iter().max().expect("non-empty");

    // counting sort of nodes by degree; bin[d] = start of degree-d block
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin[d + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut vert = vec![0usize; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            pos[v] = next[deg[v]];
            vert[pos[v]] = v;
            next[deg[v]] += 1;
        }
    }

    for i in 0..n {
        let v = vert[i];
        for idx in 0..g.neighbors_ix(v).len() {
            let u = g.neighbors_ix(v)[idx] as usize;
            if deg[u] > deg[v] {
                // move u to the front of its degree block, then shrink it
                let du = deg[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    vert[pu] = w;
                    vert[pw] = u;
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                deg[u] -= 1;
            }
        }
    }

    let core: Vec<u32> = deg.into_iter().map(|d| d as u32).collect();
    let c_max = *core.iter().max().expect("non-empty");
    Ok((core, c_max))
}
