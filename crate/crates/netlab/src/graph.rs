//! Immutable undirected simple graph over integer node identifiers.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Node identifier: an AS number for ingested graphs, a birth index for
/// generated ones.
pub type NodeId = u32;

/// Undirected simple graph. Nodes are stored sorted by id; adjacency is kept
/// as sorted internal indices so iteration and serialization are
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    ids: Vec<NodeId>,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a simple graph from an edge list. Self-loops are dropped,
    /// duplicate and reversed pairs collapse to one edge, and every endpoint
    /// (including self-loop endpoints) is retained as a node.
    pub fn from_edge_list(edges: &[(NodeId, NodeId)]) -> Graph {
        let mut nodes = BTreeSet::new();
        let mut canonical = BTreeSet::new();
        for &(a, b) in edges {
            nodes.insert(a);
            nodes.insert(b);
            if a != b {
                canonical.insert((a.min(b), a.max(b)));
            }
        }
        Graph::build(nodes, canonical)
    }

    fn build(nodes: BTreeSet<NodeId>, edges: BTreeSet<(NodeId, NodeId)>) -> Graph {
        let ids: Vec<NodeId> = nodes.into_iter().collect();
        let mut adj = vec![Vec::new(); ids.len()];
        let edge_count = edges.len();
        for (a, b) in edges {
            let i = ids.binary_search(&a).expect("endpoint is a node") as u32;
            let j = ids.binary_search(&b).expect("endpoint is a node") as u32;
            adj[i as usize].push(j);
            adj[j as usize].push(i);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Graph {
            ids,
            adj,
            edge_count,
        }
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Node identifiers in ascending order.
    pub fn nodes(&self) -> &[NodeId] {
        &self.ids
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    /// Number of links incident to `v`.
    pub fn degree(&self, v: NodeId) -> Result<usize> {
        let i = self.index_of(v).ok_or(Error::UnknownNode(v))?;
        Ok(self.adj[i].len())
    }

    /// Largest degree in the graph; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adj[i].binary_search(&(j as u32)).is_ok(),
            _ => false,
        }
    }

    /// Neighbor identifiers of `v` in ascending order.
    pub fn neighbors(&self, v: NodeId) -> Result<Vec<NodeId>> {
        let i = self.index_of(v).ok_or(Error::UnknownNode(v))?;
        Ok(self.adj[i].iter().map(|&j| self.ids[j as usize]).collect())
    }

    /// Edges as (min, max) id pairs, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(i, row)| {
            row.iter()
                .filter(move |&&j| j as usize > i)
                .map(move |&j| (self.ids[i], self.ids[j as usize]))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.ids.is_empty() {
            return true;
        }
        self.component_of(0).len() == self.ids.len()
    }

    /// Induced subgraph on the largest connected component, node ids
    /// preserved. Ties go to the component containing the smallest id.
    pub fn largest_connected_component(&self) -> Graph {
        let n = self.ids.len();
        let mut seen = vec![false; n];
        let mut best: Vec<u32> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let comp = self.component_of(start);
            for &i in &comp {
                seen[i as usize] = true;
            }
            // scanning in ascending id order, the first component of maximal
            // size is the one with the smallest minimum id
            if comp.len() > best.len() {
                best = comp;
            }
        }
        let members: BTreeSet<NodeId> = best.iter().map(|&i| self.ids[i as usize]).collect();
        let edges: BTreeSet<(NodeId, NodeId)> = self
            .edges()
            .filter(|(a, b)| members.contains(a) && members.contains(b))
            .collect();
        Graph::build(members, edges)
    }

    fn component_of(&self, start: usize) -> Vec<u32> {
        let mut visited = vec![false; self.ids.len()];
        let mut stack = vec![start as u32];
        let mut comp = Vec::new();
        visited[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for &j in &self.adj[i as usize] {
                if !visited[j as usize] {
                    visited[j as usize] = true;
                    stack.push(j);
                }
            }
        }
        comp
    }

    /// Checks simplicity, symmetry, and the edge-count bookkeeping.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.ids.len();
        if self.adj.len() != n {
            return Err("adjacency length differs from node count".into());
        }
        if self.ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err("node ids are not strictly ascending".into());
        }
        let mut half_edges = 0usize;
        for (i, row) in self.adj.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("duplicate neighbor entries at node {}", self.ids[i]));
            }
            for &j in row {
                if j as usize == i {
                    return Err(format!("self-loop at node {}", self.ids[i]));
                }
                if j as usize >= n {
                    return Err("neighbor index out of range".into());
                }
                if self.adj[j as usize].binary_search(&(i as u32)).is_err() {
                    return Err(format!(
                        "asymmetric edge {} -> {}",
                        self.ids[i], self.ids[j as usize]
                    ));
                }
            }
            half_edges += row.len();
        }
        if half_edges != 2 * self.edge_count {
            return Err(format!(
                "edge count {} does not match degree sum {}",
                self.edge_count, half_edges
            ));
        }
        Ok(())
    }

    pub(crate) fn index_of(&self, v: NodeId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub(crate) fn id_of(&self, i: usize) -> NodeId {
        self.ids[i]
    }

    pub(crate) fn neighbors_ix(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub(crate) fn degree_ix(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Degrees in internal (ascending id) order.
    pub(crate) fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }
}
