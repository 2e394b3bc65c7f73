//! Interactive-growth generator with positive-feedback preference.
//!
//! Networks grow one node per step. With probability `p` the new node
//! attaches to one preferentially chosen host and the host gains two new
//! internal links; otherwise the new node attaches to two hosts and the
//! first host gains one internal link. Every endpoint choice among existing
//! nodes is made with probability proportional to
//! k^(1 + delta*log10(k)), so well-connected nodes attract new links at a
//! superlinear rate.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::scalar::{from_usize, Scalar};

/// Growth-model configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PfpParams<T> {
    /// Probability of the single-host growth branch.
    pub p: T,
    /// Feedback strength in the preference exponent.
    pub delta: T,
    /// Final node count.
    pub target_n: usize,
    /// Size of the initial random graph.
    pub seed_size: usize,
    /// Base seed; run i of an ensemble uses the stream derived from (seed, i).
    pub rng_seed: u64,
}

impl<T: Scalar> PfpParams<T> {
    /// Parameters with the standard p = 0.4, delta = 0.048 and a 5-node seed
    /// graph.
    pub fn new(target_n: usize, rng_seed: u64) -> Self {
        PfpParams {
            p: T::from_f64(0.4).unwrap(),
            delta: T::from_f64(0.048).unwrap(),
            target_n,
            seed_size: 5,
            rng_seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.p < T::zero() || self.p > T::one() {
            return Err(Error::InvalidParameter(format!(
                "p must be in [0, 1], got {}",
                self.p
            )));
        }
        if self.delta < T::zero() || self.delta > T::one() {
            return Err(Error::InvalidParameter(format!(
                "delta must be in [0, 1], got {}",
                self.delta
            )));
        }
        if self.seed_size < 3 {
            return Err(Error::InvalidParameter(format!(
                "seed_size must be at least 3, got {}",
                self.seed_size
            )));
        }
        if self.target_n < self.seed_size {
            return Err(Error::InvalidParameter(format!(
                "target_n {} is smaller than seed_size {}",
                self.target_n, self.seed_size
            )));
        }
        Ok(())
    }
}

/// Deterministic random stream; identical (seed, run) pairs yield identical
/// draws.
#[derive(Debug, Clone)]
pub struct RngStream {
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn for_run(seed: u64, run: u64) -> RngStream {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&run.to_le_bytes());
        RngStream {
            rng: ChaCha8Rng::from_seed(key),
        }
    }

    /// Uniform draw in [0, 1).
    pub fn unit_f64(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    pub fn unit<T: Scalar>(&mut self) -> T {
        T::from_f64(self.unit_f64()).unwrap()
    }

    /// Uniform draw in 0..n.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

/// Preference weight k^(1 + delta*log10(k)) per degree, in input order.
/// Degree 0 has no defined weight and is rejected.
pub fn preference_weights<T: Scalar>(degrees: &[usize], delta: T) -> Result<Vec<T>> {
    degrees
        .iter()
        .map(|&k| {
            if k == 0 {
                return Err(Error::IsolatedNode(0));
            }
            Ok(preference_weight(k, delta))
        })
        .collect()
}

fn preference_weight<T: Scalar>(k: usize, delta: T) -> T {
    let kf: T = from_usize(k);
    kf.powf(T::one() + delta * kf.log10())
}

/// One weighted draw by cumulative-weight inversion over candidates
/// 0..n with the given indices excluded. Weights are summed in index order,
/// so results are deterministic for a fixed stream.
fn cumulative_pick<T: Scalar>(
    weight_of: impl Fn(usize) -> T,
    n: usize,
    excluded: impl Fn(usize) -> bool,
    rng: &mut RngStream,
) -> Result<usize> {
    let mut total = T::zero();
    let mut any = false;
    for i in 0..n {
        if !excluded(i) {
            total = total + weight_of(i);
            any = true;
        }
    }
    if !any {
        return Err(Error::ExhaustedCandidates);
    }
    let target = rng.unit::<T>() * total;
    let mut acc = T::zero();
    let mut last = None;
    for i in 0..n {
        if excluded(i) {
            continue;
        }
        acc = acc + weight_of(i);
        last = Some(i);
        if acc > target {
            return Ok(i);
        }
    }
    // rounding can leave the accumulated sum at or below the target; fall
    // back to the final candidate
    Ok(last.expect("at least one candidate"))
}

/// Samples a node of `g` with the positive-feedback preference probability,
/// restricted to nodes outside `excluded`.
pub fn pfp_select<T: Scalar>(
    g: &Graph,
    delta: T,
    excluded: &HashSet<NodeId>,
    rng: &mut RngStream,
) -> Result<NodeId> {
    let n = g.node_count();
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let k = g.degree_ix(i);
        if excluded.contains(&g.id_of(i)) {
            weights.push(T::zero());
        } else if k == 0 {
            return Err(Error::IsolatedNode(g.id_of(i)));
        } else {
            weights.push(preference_weight(k, delta));
        }
    }
    let i = cumulative_pick(
        |i| weights[i],
        n,
        |i| excluded.contains(&g.id_of(i)),
        rng,
    )?;
    Ok(g.id_of(i))
}

/// Connected random graph on `seed_size` nodes: a uniformly random spanning
/// tree plus each remaining pair with probability 1/2.
pub fn seed_graph(seed_size: usize, rng: &mut RngStream) -> Result<Graph> {
    if seed_size < 3 {
        return Err(Error::InvalidParameter(format!(
            "seed_size must be at least 3, got {seed_size}"
        )));
    }
    let n = seed_size;
    // uniform labeled tree via a random Pruefer sequence
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.index(n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in &seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1 && !used[v])
            .expect("a leaf always remains");
        edges.push((leaf as NodeId, s as NodeId));
        used[leaf] = true;
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let mut tail = (0..n).filter(|&v| degree[v] == 1 && !used[v]);
    let a = tail.next().expect("two leaves remain");
    let b = tail.next().expect("two leaves remain");
    edges.push((a as NodeId, b as NodeId));

    let tree: HashSet<(NodeId, NodeId)> = edges
        .iter()
        .map(|&(x, y)| (x.min(y), x.max(y)))
        .collect();
    for u in 0..n as NodeId {
        for v in (u + 1)..n as NodeId {
            let coin = rng.unit_f64() < 0.5;
            if coin && !tree.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edge_list(&edges);
    debug_assert!(g.validate().is_ok());
    debug_assert!(g.is_connected());
    Ok(g)
}

/// Adjacency under construction, indexed by birth order, with preference
/// weights memoized per degree and a scratch bitmap marking nodes excluded
/// from the current draw.
struct GrowState<T> {
    adj: Vec<Vec<u32>>,
    weight_by_degree: Vec<T>,
    delta: T,
    blocked: Vec<bool>,
    blocked_list: Vec<u32>,
}

impl<T: Scalar> GrowState<T> {
    fn from_seed(seed: &Graph, target_n: usize, delta: T) -> GrowState<T> {
        let mut adj = vec![Vec::new(); seed.node_count()];
        adj.reserve(target_n - seed.node_count());
        for (a, b) in seed.edges() {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        let mut state = GrowState {
            adj,
            weight_by_degree: vec![T::zero(); 1],
            delta,
            blocked: vec![false; target_n],
            blocked_list: Vec::new(),
        };
        state.ensure_weights(state.max_degree());
        state
    }

    fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn ensure_weights(&mut self, degree: usize) {
        while self.weight_by_degree.len() <= degree {
            let k = self.weight_by_degree.len();
            self.weight_by_degree.push(preference_weight(k, self.delta));
        }
    }

    fn add_node(&mut self) -> u32 {
        self.adj.push(Vec::new());
        (self.adj.len() - 1) as u32
    }

    fn add_edge(&mut self, u: u32, v: u32) {
        self.adj[u as usize].push(v);
        self.adj[v as usize].push(u);
        let bigger = self.adj[u as usize].len().max(self.adj[v as usize].len());
        self.ensure_weights(bigger);
    }

    fn block(&mut self, v: u32) {
        if !self.blocked[v as usize] {
            self.blocked[v as usize] = true;
            self.blocked_list.push(v);
        }
    }

    /// Blocks every neighbor of `v` (not `v` itself).
    fn block_neighbors(&mut self, v: u32) {
        for i in 0..self.adj[v as usize].len() {
            let u = self.adj[v as usize][i];
            self.block(u);
        }
    }

    fn unblock_all(&mut self) {
        while let Some(v) = self.blocked_list.pop() {
            self.blocked[v as usize] = false;
        }
    }

    /// Preferential draw over unblocked nodes among the first `n_old`;
    /// errors with ExhaustedCandidates when every candidate is blocked.
    fn pick(&self, n_old: usize, rng: &mut RngStream) -> Result<u32> {
        let idx = cumulative_pick(
            |i| self.weight_by_degree[self.adj[i].len()],
            n_old,
            |i| self.blocked[i],
            rng,
        )?;
        Ok(idx as u32)
    }

    fn into_graph(self) -> Graph {
        let edges: Vec<(NodeId, NodeId)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                row.iter()
                    .filter(move |&&j| j as usize > i)
                    .map(move |&j| (i as NodeId, j))
            })
            .collect();
        Graph::from_edge_list(&edges)
    }
}

/// Grows a network to `params.target_n` nodes.
///
/// Internal-link peers are drawn with the host's neighbors excluded but the
/// host itself still holding its preference weight; a draw that lands on
/// the host cancels that link. The self-collision rate therefore tracks the
/// host's own weight share, substantial in small dense graphs and for
/// runaway hubs but marginal at scale, which keeps small networks well
/// under the three-links-per-step budget while large ones approach it.
pub fn grow<T: Scalar>(params: &PfpParams<T>, rng: &mut RngStream) -> Result<Graph> {
    params.validate()?;
    let seed = seed_graph(params.seed_size, rng)?;
    if params.target_n == params.seed_size {
        return Ok(seed);
    }
    let mut state = GrowState::from_seed(&seed, params.target_n, params.delta);

    while state.adj.len() < params.target_n {
        let n_old = state.adj.len();
        let branch_a = rng.unit::<T>() < params.p;
        if branch_a {
            // one host for the new node, then two internal links from it
            let host = state.pick(n_old, rng)?;
            let new = state.add_node();
            state.add_edge(new, host);
            for _ in 0..2 {
                if let Some(peer) = internal_peer(&mut state, host, n_old, rng)? {
                    state.add_edge(host, peer);
                }
            }
        } else {
            // two hosts for the new node, then one internal link from the first
            let host_a = state.pick(n_old, rng)?;
            state.block(host_a);
            let host_b = state.pick(n_old, rng)?;
            state.unblock_all();
            let new = state.add_node();
            state.add_edge(new, host_a);
            state.add_edge(new, host_b);
            if let Some(peer) = internal_peer(&mut state, host_a, n_old, rng)? {
                state.add_edge(host_a, peer);
            }
        }
    }
    let g = state.into_graph();
    debug_assert!(g.validate().is_ok());
    debug_assert!(g.is_connected());
    Ok(g)
}

/// One internal-link peer draw for `host`: nodes already adjacent to the
/// host never enter the candidate set, while the host itself keeps its own
/// preference weight in the pool; drawing it is the self-collision that
/// cancels the link. Ok(None) means the link is skipped.
fn internal_peer<T: Scalar>(
    state: &mut GrowState<T>,
    host: u32,
    n_old: usize,
    rng: &mut RngStream,
) -> Result<Option<u32>> {
    state.block_neighbors(host);
    let drawn = state.pick(n_old, rng);
    state.unblock_all();
    match drawn {
        Ok(peer) if peer == host => Ok(None),
        Ok(peer) => Ok(Some(peer)),
        Err(Error::ExhaustedCandidates) => Ok(None),
        Err(e) => Err(e),
    }
}


/// Generates `runs` independent networks; run i draws from the stream
/// derived from (params.rng_seed, i). Runs execute in parallel and the
/// result order is fixed by run index.
pub fn grow_ensemble<T: Scalar>(params: &PfpParams<T>, runs: usize) -> Result<Vec<Graph>> {
    if runs == 0 {
        return Err(Error::InvalidParameter("runs must be at least 1".into()));
    }
    params.validate()?;
    (0..runs as u64)
        .into_par_iter()
        .map(|run| {
            let mut rng = RngStream::for_run(params.rng_seed, run);
            grow(params, &mut rng)
        })
        .collect()
}
