//! End-to-end converse bounds for repeater chains and quantum networks whose
//! edges are Holevo-Werner channels.
//!
//! For a chain the bottleneck edge (largest η) determines both bounds. For a
//! network with end-nodes A and B, a cut C is any node bipartition separating
//! them and its cut-set C̃ the edges crossing it; then
//!
//! - single-path routing: `K ≤ min_C max_{e ∈ C̃} E(e)`, dual to the widest
//!   (maximum-bottleneck) A-B path;
//! - multi-path flooding: `K^m ≤ min_C Σ_{e ∈ C̃} E(e)`, a minimum cut of
//!   edge capacities `E(e)`, dual to max-flow.
//!
//! Both bounds are computed two ways — explicit cut enumeration on small
//! graphs and the dual graph algorithm — and the routes must agree; the
//! acceptance suite checks this on a randomized corpus.
//!
//! Edges are undirected: the bounds depend only on each edge's Choi matrix,
//! which carries no direction for these channels. Mixed dimensions are
//! allowed; every edge is weighed by its own `(η, d)`.

use std::collections::{HashMap, VecDeque};

use rand::Rng;
use serde::Deserialize;

use crate::capacity::channel_bounds;
use crate::measures::MeasureTag;
use crate::werner::WernerParams;
use crate::{Error, Result};

/// Hard limit on non-terminal nodes for explicit cut enumeration.
pub const ENUMERATION_GUARD: usize = 20;
/// Below this many non-terminal nodes the bound functions enumerate cuts to
/// honour the lexicographic tie-break exactly; above it they derive the cut
/// from the dual algorithm.
const AUTO_ENUMERATION: usize = 12;
/// Residual capacities below this are treated as exhausted by the max-flow
/// search.
const FLOW_EPS: f64 = 1e-12;

/// An undirected network edge carrying a Holevo-Werner channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub params: WernerParams,
}

/// Undirected multigraph with two distinguished terminals.
#[derive(Debug, Clone)]
pub struct QuantumNetwork {
    nodes: Vec<String>,
    edges: Vec<Edge>,
    a: usize,
    b: usize,
}

impl QuantumNetwork {
    /// Builds and validates a network from node names, named edges and the
    /// terminal pair `(A, B)`.
    pub fn new(
        nodes: Vec<String>,
        edges: Vec<(String, String, WernerParams)>,
        terminals: (String, String),
    ) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::Network("empty node list".into()));
        }
        let mut index = HashMap::new();
        for (i, name) in nodes.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::Network(format!("duplicate node '{name}'")));
            }
        }
        let (ta, tb) = terminals;
        let a = *index
            .get(&ta)
            .ok_or_else(|| Error::Network(format!("terminal A: unknown node '{ta}'")))?;
        let b = *index
            .get(&tb)
            .ok_or_else(|| Error::Network(format!("terminal B: unknown node '{tb}'")))?;
        if a == b {
            return Err(Error::Network(format!("terminals coincide: '{ta}'")));
        }
        let mut built = Vec::with_capacity(edges.len());
        for (i, (u, v, params)) in edges.into_iter().enumerate() {
            let ui = *index.get(&u).ok_or_else(|| {
                Error::Network(format!("edge {i} ({u} - {v}): unknown node '{u}'"))
            })?;
            let vi = *index.get(&v).ok_or_else(|| {
                Error::Network(format!("edge {i} ({u} - {v}): unknown node '{v}'"))
            })?;
            if ui == vi {
                return Err(Error::Network(format!("edge {i}: self-loop at '{u}'")));
            }
            built.push(Edge {
                u: ui,
                v: vi,
                params,
            });
        }
        Ok(Self {
            nodes,
            edges: built,
            a,
            b,
        })
    }

    /// Parses the JSON interchange format:
    ///
    /// ```json
    /// {
    ///   "nodes": ["A", "r1", "B"],
    ///   "edges": [{"u": "A", "v": "r1", "eta": -1.0, "d": 3}],
    ///   "terminals": {"A": "A", "B": "B"}
    /// }
    /// ```
    ///
    /// Unknown fields are rejected; syntax errors carry line/column, semantic
    /// errors name the offending edge and field.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: NetworkFile = serde_json::from_str(text)?;
        let mut edges = Vec::with_capacity(file.edges.len());
        for (i, e) in file.edges.into_iter().enumerate() {
            let params = WernerParams::new(e.eta, e.d)
                .map_err(|err| Error::Network(format!("edge {i} ({} - {}): {err}", e.u, e.v)))?;
            edges.push((e.u, e.v, params));
        }
        Self::new(file.nodes, edges, (file.terminals.a, file.terminals.b))
    }

    pub fn from_json_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node_name(&self, i: usize) -> &str {
        &self.nodes[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn terminal_a(&self) -> usize {
        self.a
    }

    pub fn terminal_b(&self) -> usize {
        self.b
    }

    /// Non-terminal node indices, in ascending order.
    fn free_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| i != self.a && i != self.b)
            .collect()
    }

    /// True iff A and B lie in the same component.
    pub fn terminals_connected(&self) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([self.a]);
        seen[self.a] = true;
        while let Some(u) = queue.pop_front() {
            if u == self.b {
                return true;
            }
            for e in &self.edges {
                let next = if e.u == u {
                    e.v
                } else if e.v == u {
                    e.u
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
        false
    }

    /// Component of A (used for the degenerate partition when disconnected).
    fn component_of_a(&self) -> Vec<bool> {
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([self.a]);
        seen[self.a] = true;
        while let Some(u) = queue.pop_front() {
            for e in &self.edges {
                let next = if e.u == u {
                    e.v
                } else if e.v == u {
                    e.u
                } else {
                    continue;
                };
                if !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    fn partition_names(&self, a_side: &[bool]) -> (Vec<String>, Vec<String>) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, name) in self.nodes.iter().enumerate() {
            if a_side[i] {
                left.push(name.clone());
            } else {
                right.push(name.clone());
            }
        }
        left.sort();
        right.sort();
        (left, right)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NetworkFile {
    nodes: Vec<String>,
    edges: Vec<EdgeFile>,
    terminals: TerminalsFile,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    u: String,
    v: String,
    eta: f64,
    d: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TerminalsFile {
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
}

/// Per-edge weight used by the network bounds: one fixed measure, or the
/// pointwise best K-bound `min{E_R², Ẽ_sq, E*_sq}` (valid per edge because
/// each pool member bounds K separately and min-cut objectives are monotone
/// in every edge weight).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeWeight {
    Measure(MeasureTag),
    BestK,
}

impl EdgeWeight {
    pub fn evaluate(&self, params: &WernerParams) -> f64 {
        match self {
            EdgeWeight::Measure(tag) => tag.evaluate(params),
            EdgeWeight::BestK => MeasureTag::K_POOL
                .iter()
                .map(|t| t.evaluate(params))
                .fold(f64::INFINITY, f64::min),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            EdgeWeight::Measure(tag) => tag.label(),
            EdgeWeight::BestK => "best_k",
        }
    }
}

/// Result of a chain analysis: both bounds and the bottleneck edge.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainBounds {
    pub k_bound: f64,
    pub q2_bound: f64,
    pub bottleneck_index: usize,
    pub k_bound_source: MeasureTag,
}

/// Bounds for an iso-dimensional repeater chain with edge parameters `etas`.
///
/// Every per-edge measure is non-increasing in η, so the edge with maximal η
/// is the bottleneck: `min_i E(W_{η_i,d}) = E(W_{η_max,d})`. If `η_max ≥ 0`
/// some edge is separable and both capacities vanish.
pub fn chain_bounds(etas: &[f64], d: usize) -> Result<ChainBounds> {
    if etas.is_empty() {
        return Err(Error::EmptyChain);
    }
    let mut bottleneck_index = 0usize;
    for (i, &eta) in etas.iter().enumerate() {
        // Validate every edge, not only the bottleneck.
        WernerParams::new(eta, d)?;
        if eta > etas[bottleneck_index] {
            bottleneck_index = i;
        }
    }
    let eta_max = etas[bottleneck_index];
    if eta_max >= 0.0 {
        return Ok(ChainBounds {
            k_bound: 0.0,
            q2_bound: 0.0,
            bottleneck_index,
            k_bound_source: MeasureTag::ReeTwoCopy,
        });
    }
    let report = channel_bounds(&WernerParams::new(eta_max, d)?);
    Ok(ChainBounds {
        k_bound: report.k_bound,
        q2_bound: report.q2_bound,
        bottleneck_index,
        k_bound_source: report.k_bound_source,
    })
}

/// A bipartition of the nodes separating A from B, with its cut-set.
#[derive(Debug, Clone, PartialEq)]
pub struct CutSkeleton {
    /// `a_side[i]` is true iff node `i` sits on A's side.
    pub a_side: Vec<bool>,
    /// Indices into `net.edges()` of the crossing edges.
    pub cut_edges: Vec<usize>,
}

/// Iterator over all `2^(nodes-2)` A-B cuts of a network.
pub struct CutIter<'a> {
    net: &'a QuantumNetwork,
    free: Vec<usize>,
    mask: usize,
    done: bool,
}

impl Iterator for CutIter<'_> {
    type Item = CutSkeleton;

    fn next(&mut self) -> Option<CutSkeleton> {
        if self.done {
            return None;
        }
        let mut a_side = vec![false; self.net.node_count()];
        a_side[self.net.terminal_a()] = true;
        for (bit, &node) in self.free.iter().enumerate() {
            if self.mask & (1 << bit) != 0 {
                a_side[node] = true;
            }
        }
        let cut_edges = (0..self.net.edges().len())
            .filter(|&i| {
                let e = &self.net.edges()[i];
                a_side[e.u] != a_side[e.v]
            })
            .collect();
        if self.mask == (1usize << self.free.len()) - 1 || self.free.is_empty() {
            self.done = true;
        } else {
            self.mask += 1;
        }
        Some(CutSkeleton { a_side, cut_edges })
    }
}

/// Enumerates every A-B cut; fails above [`ENUMERATION_GUARD`] non-terminal
/// nodes (callers should fall back to the flow-based bounds there).
pub fn enumerate_cuts(net: &QuantumNetwork) -> Result<CutIter<'_>> {
    let free = net.free_nodes();
    if free.len() > ENUMERATION_GUARD {
        return Err(Error::TooManyNodesForEnumeration {
            got: free.len(),
            guard: ENUMERATION_GUARD,
        });
    }
    Ok(CutIter {
        net,
        free,
        mask: 0,
        done: false,
    })
}

/// A minimizing cut: its value, cut-set and node partition (A's side first,
/// both sides sorted by name).
#[derive(Debug, Clone, PartialEq)]
pub struct CutResult {
    pub cut_value: f64,
    pub cut_edges: Vec<usize>,
    pub partition: (Vec<String>, Vec<String>),
}

fn disconnected_result(net: &QuantumNetwork) -> CutResult {
    let comp = net.component_of_a();
    CutResult {
        cut_value: 0.0,
        cut_edges: Vec::new(),
        partition: net.partition_names(&comp),
    }
}

/// How a cut aggregates its cut-set weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CutObjective {
    Max,
    Sum,
}

fn cut_value(weights: &[f64], cut_edges: &[usize], objective: CutObjective) -> f64 {
    match objective {
        CutObjective::Max => cut_edges
            .iter()
            .map(|&i| weights[i])
            .fold(f64::NEG_INFINITY, f64::max),
        CutObjective::Sum => cut_edges.iter().map(|&i| weights[i]).sum(),
    }
}

fn enumerated_min_cut(
    net: &QuantumNetwork,
    weights: &[f64],
    objective: CutObjective,
) -> Result<CutResult> {
    let mut best: Option<(f64, Vec<String>, CutSkeleton)> = None;
    for cut in enumerate_cuts(net)? {
        if cut.cut_edges.is_empty() {
            // A and B disconnected even without removing anything.
            return Ok(disconnected_result(net));
        }
        let value = cut_value(weights, &cut.cut_edges, objective);
        let names: Vec<String> = (0..net.node_count())
            .filter(|&i| cut.a_side[i])
            .map(|i| net.node_name(i).to_string())
            .collect();
        let mut sorted = names;
        sorted.sort();
        let better = match &best {
            None => true,
            Some((bv, bnames, _)) => value < *bv || (value == *bv && sorted < *bnames),
        };
        if better {
            best = Some((value, sorted, cut));
        }
    }
    let (value, _, cut) = best.expect("at least one cut exists");
    Ok(CutResult {
        cut_value: value,
        cut_edges: cut.cut_edges,
        partition: net.partition_names(&cut.a_side),
    })
}

/// Widest (maximum-bottleneck) A-B path under the given edge weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WidestPath {
    /// `max` over paths of the minimum edge weight; 0 when disconnected.
    pub value: f64,
    /// Edge indices along an optimal path (empty when disconnected).
    pub path_edges: Vec<usize>,
    /// Node names along the path, starting at A.
    pub path_nodes: Vec<String>,
}

/// Modified Dijkstra maximizing the minimum edge weight along the path.
pub fn widest_path(net: &QuantumNetwork, weight: EdgeWeight) -> WidestPath {
    let n = net.node_count();
    let weights: Vec<f64> = net
        .edges()
        .iter()
        .map(|e| weight.evaluate(&e.params))
        .collect();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in net.edges().iter().enumerate() {
        adjacency[e.u].push(i);
        adjacency[e.v].push(i);
    }

    let mut width = vec![f64::NEG_INFINITY; n];
    let mut via_edge = vec![usize::MAX; n];
    let mut settled = vec![false; n];
    width[net.terminal_a()] = f64::INFINITY;

    loop {
        let mut u = usize::MAX;
        let mut best = f64::NEG_INFINITY;
        for i in 0..n {
            if !settled[i] && width[i] > best {
                best = width[i];
                u = i;
            }
        }
        if u == usize::MAX || best == f64::NEG_INFINITY {
            break;
        }
        settled[u] = true;
        if u == net.terminal_b() {
            break;
        }
        for &ei in &adjacency[u] {
            let e = &net.edges()[ei];
            let v = if e.u == u { e.v } else { e.u };
            if settled[v] {
                continue;
            }
            let w = width[u].min(weights[ei]);
            if w > width[v] {
                width[v] = w;
                via_edge[v] = ei;
            }
        }
    }

    let b = net.terminal_b();
    if width[b] == f64::NEG_INFINITY {
        return WidestPath {
            value: 0.0,
            path_edges: Vec::new(),
            path_nodes: Vec::new(),
        };
    }
    let mut path_edges = Vec::new();
    let mut path_nodes = vec![b];
    let mut cursor = b;
    while cursor != net.terminal_a() {
        let ei = via_edge[cursor];
        path_edges.push(ei);
        let e = &net.edges()[ei];
        cursor = if e.u == cursor { e.v } else { e.u };
        path_nodes.push(cursor);
    }
    path_edges.reverse();
    path_nodes.reverse();
    WidestPath {
        value: width[b],
        path_edges,
        path_nodes: path_nodes
            .into_iter()
            .map(|i| net.node_name(i).to_string())
            .collect(),
    }
}

/// Minimizing cut derived from a widest-path value: A's side is everything
/// reachable through edges strictly wider than the bottleneck.
fn cut_from_widest(net: &QuantumNetwork, weights: &[f64], bottleneck: f64) -> CutResult {
    let n = net.node_count();
    let mut a_side = vec![false; n];
    a_side[net.terminal_a()] = true;
    let mut queue = VecDeque::from([net.terminal_a()]);
    while let Some(u) = queue.pop_front() {
        for (i, e) in net.edges().iter().enumerate() {
            if weights[i] <= bottleneck {
                continue;
            }
            let next = if e.u == u {
                e.v
            } else if e.v == u {
                e.u
            } else {
                continue;
            };
            if !a_side[next] {
                a_side[next] = true;
                queue.push_back(next);
            }
        }
    }
    debug_assert!(!a_side[net.terminal_b()]);
    let cut_edges: Vec<usize> = (0..net.edges().len())
        .filter(|&i| {
            let e = &net.edges()[i];
            a_side[e.u] != a_side[e.v]
        })
        .collect();
    let cut_value = cut_edges
        .iter()
        .map(|&i| weights[i])
        .fold(f64::NEG_INFINITY, f64::max);
    CutResult {
        cut_value,
        cut_edges,
        partition: net.partition_names(&a_side),
    }
}

/// Single-path routing bound `min_C max_{e ∈ C̃} E(e)`.
///
/// Computed by the widest-path dual; on small networks the minimizing cut is
/// re-derived by enumeration so ties resolve to the lexicographically
/// smallest A-side. Disconnected terminals give 0 with an empty cut-set.
pub fn single_path_bound(net: &QuantumNetwork, weight: EdgeWeight) -> Result<CutResult> {
    if !net.terminals_connected() {
        return Ok(disconnected_result(net));
    }
    let weights: Vec<f64> = net
        .edges()
        .iter()
        .map(|e| weight.evaluate(&e.params))
        .collect();
    if net.free_nodes().len() <= AUTO_ENUMERATION {
        enumerated_min_cut(net, &weights, CutObjective::Max)
    } else {
        let wp = widest_path(net, weight);
        Ok(cut_from_widest(net, &weights, wp.value))
    }
}

/// Enumeration route for the single-path bound (duality cross-check).
pub fn single_path_bound_enumerated(net: &QuantumNetwork, weight: EdgeWeight) -> Result<CutResult> {
    if !net.terminals_connected() {
        return Ok(disconnected_result(net));
    }
    let weights: Vec<f64> = net
        .edges()
        .iter()
        .map(|e| weight.evaluate(&e.params))
        .collect();
    enumerated_min_cut(net, &weights, CutObjective::Max)
}

struct FlowArc {
    to: usize,
    cap: f64,
    rev: usize,
}

struct FlowGraph {
    arcs: Vec<Vec<FlowArc>>,
}

impl FlowGraph {
    fn new(n: usize) -> Self {
        Self {
            arcs: (0..n).map(|_| Vec::new()).collect(),
        }
    }

    /// Undirected edge as a pair of antiparallel arcs of equal capacity.
    fn add_undirected(&mut self, u: usize, v: usize, cap: f64) {
        let iu = self.arcs[u].len();
        let iv = self.arcs[v].len();
        self.arcs[u].push(FlowArc {
            to: v,
            cap,
            rev: iv,
        });
        self.arcs[v].push(FlowArc {
            to: u,
            cap,
            rev: iu,
        });
    }

    /// Edmonds-Karp: shortest augmenting paths by BFS until the residual
    /// graph separates source from sink.
    fn max_flow(&mut self, source: usize, sink: usize) -> f64 {
        let mut total = 0.0f64;
        loop {
            let n = self.arcs.len();
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
            let mut seen = vec![false; n];
            seen[source] = true;
            let mut queue = VecDeque::from([source]);
            'bfs: while let Some(u) = queue.pop_front() {
                for (ai, arc) in self.arcs[u].iter().enumerate() {
                    if !seen[arc.to] && arc.cap > FLOW_EPS {
                        seen[arc.to] = true;
                        prev[arc.to] = Some((u, ai));
                        if arc.to == sink {
                            break 'bfs;
                        }
                        queue.push_back(arc.to);
                    }
                }
            }
            if !seen[sink] {
                return total;
            }
            let mut bottleneck = f64::INFINITY;
            let mut cursor = sink;
            while cursor != source {
                let (u, ai) = prev[cursor].unwrap();
                bottleneck = bottleneck.min(self.arcs[u][ai].cap);
                cursor = u;
            }
            let mut cursor = sink;
            while cursor != source {
                let (u, ai) = prev[cursor].unwrap();
                let rev = self.arcs[u][ai].rev;
                self.arcs[u][ai].cap -= bottleneck;
                let to = cursor;
                self.arcs[to][rev].cap += bottleneck;
                cursor = u;
            }
            total += bottleneck;
        }
    }

    /// Source side of the residual graph after max-flow.
    fn residual_source_side(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for arc in &self.arcs[u] {
                if !seen[arc.to] && arc.cap > FLOW_EPS {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }
}

/// Max-flow value with per-edge capacities `E(e)`; the flooding-protocol
/// certificate for [`multi_path_bound`].
pub fn max_flow_value(net: &QuantumNetwork, weight: EdgeWeight) -> f64 {
    let mut graph = FlowGraph::new(net.node_count());
    for e in net.edges() {
        graph.add_undirected(e.u, e.v, weight.evaluate(&e.params));
    }
    graph.max_flow(net.terminal_a(), net.terminal_b())
}

/// Multi-path (flooding) routing bound `min_C Σ_{e ∈ C̃} E(e)`.
///
/// Computed as a minimum cut: by enumeration on small networks (with the
/// lexicographic tie-break), else from the residual graph of max-flow. The
/// reported `cut_value` is the exact sum of crossing capacities.
pub fn multi_path_bound(net: &QuantumNetwork, weight: EdgeWeight) -> Result<CutResult> {
    if !net.terminals_connected() {
        return Ok(disconnected_result(net));
    }
    let weights: Vec<f64> = net
        .edges()
        .iter()
        .map(|e| weight.evaluate(&e.params))
        .collect();
    if net.free_nodes().len() <= AUTO_ENUMERATION {
        enumerated_min_cut(net, &weights, CutObjective::Sum)
    } else {
        let mut graph = FlowGraph::new(net.node_count());
        for (e, &w) in net.edges().iter().zip(&weights) {
            graph.add_undirected(e.u, e.v, w);
        }
        graph.max_flow(net.terminal_a(), net.terminal_b());
        let a_side = graph.residual_source_side(net.terminal_a());
        let cut_edges: Vec<usize> = (0..net.edges().len())
            .filter(|&i| {
                let e = &net.edges()[i];
                a_side[e.u] != a_side[e.v]
            })
            .collect();
        let cut_value = cut_edges.iter().map(|&i| weights[i]).sum();
        Ok(CutResult {
            cut_value,
            cut_edges,
            partition: net.partition_names(&a_side),
        })
    }
}

/// Enumeration route for the multi-path bound (duality cross-check).
pub fn multi_path_bound_enumerated(net: &QuantumNetwork, weight: EdgeWeight) -> Result<CutResult> {
    if !net.terminals_connected() {
        return Ok(disconnected_result(net));
    }
    let weights: Vec<f64> = net
        .edges()
        .iter()
        .map(|e| weight.evaluate(&e.params))
        .collect();
    enumerated_min_cut(net, &weights, CutObjective::Sum)
}

/// Verifies, cut by cut, that the flooding bounds are ordered:
/// `Σ E_P^∞ ≤ Σ E_R² ≤ Σ E_R` (within 1e-10) over every cut-set, hence also
/// after minimizing over cuts.
pub fn ordering_chain_check(net: &QuantumNetwork) -> Result<bool> {
    let p_inf: Vec<f64> = net
        .edges()
        .iter()
        .map(|e| MeasureTag::RpptRegularised.evaluate(&e.params))
        .collect();
    let r2: Vec<f64> = net
        .edges()
        .iter()
        .map(|e| MeasureTag::ReeTwoCopy.evaluate(&e.params))
        .collect();
    let r1: Vec<f64> = net
        .edges()
        .iter()
        .map(|e| MeasureTag::ReeOneCopy.evaluate(&e.params))
        .collect();
    for cut in enumerate_cuts(net)? {
        let sum_p: f64 = cut.cut_edges.iter().map(|&i| p_inf[i]).sum();
        let sum_r2: f64 = cut.cut_edges.iter().map(|&i| r2[i]).sum();
        let sum_r1: f64 = cut.cut_edges.iter().map(|&i| r1[i]).sum();
        if sum_p > sum_r2 + 1e-10 || sum_r2 > sum_r1 + 1e-10 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Seeded random connected multigraph for the duality test corpus: 2..=8
/// nodes, a random spanning tree plus up to 16 total edges (parallels
/// allowed), one dimension `d ∈ {3,4,5}` per network and `η ∈ [-1, 0)` per
/// edge. Terminals are the first and last node.
pub fn random_network<R: Rng + ?Sized>(rng: &mut R) -> QuantumNetwork {
    let n = rng.gen_range(2..=8usize);
    let d = [3usize, 4, 5][rng.gen_range(0..3)];
    let nodes: Vec<String> = (0..n).map(|i| format!("n{i}")).collect();
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        let eta = rng.gen_range(-1.0..0.0);
        edges.push((
            nodes[parent].clone(),
            nodes[i].clone(),
            WernerParams::new(eta, d).unwrap(),
        ));
    }
    let extra = rng.gen_range(0..=(16 - edges.len()).min(8));
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n);
        if u == v {
            v = (v + 1) % n;
        }
        let eta = rng.gen_range(-1.0..0.0);
        edges.push((
            nodes[u].clone(),
            nodes[v].clone(),
            WernerParams::new(eta, d).unwrap(),
        ));
    }
    QuantumNetwork::new(
        nodes.clone(),
        edges,
        (nodes[0].clone(), nodes[n - 1].clone()),
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn p(eta: f64, d: usize) -> WernerParams {
        WernerParams::new(eta, d).unwrap()
    }

    /// The five-edge diamond: A - r1, A - r2, r1 - r2, r1 - B, r2 - B.
    fn diamond(eta: f64, d: usize) -> QuantumNetwork {
        let names = ["A", "r1", "r2", "B"];
        let links = [
            ("A", "r1"),
            ("A", "r2"),
            ("r1", "r2"),
            ("r1", "B"),
            ("r2", "B"),
        ];
        QuantumNetwork::new(
            names.iter().map(|s| s.to_string()).collect(),
            links
                .iter()
                .map(|(u, v)| (u.to_string(), v.to_string(), p(eta, d)))
                .collect(),
            ("A".into(), "B".into()),
        )
        .unwrap()
    }

    fn path_graph(etas: &[f64], d: usize) -> QuantumNetwork {
        let n = etas.len() + 1;
        let nodes: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let edges = etas
            .iter()
            .enumerate()
            .map(|(i, &eta)| (nodes[i].clone(), nodes[i + 1].clone(), p(eta, d)))
            .collect();
        QuantumNetwork::new(
            nodes.clone(),
            edges,
            (nodes[0].clone(), nodes[n - 1].clone()),
        )
        .unwrap()
    }

    #[test]
    fn network_validation_errors() {
        let nodes = vec!["A".to_string(), "B".to_string()];
        assert!(matches!(
            QuantumNetwork::new(
                nodes.clone(),
                vec![("A".into(), "X".into(), p(-1.0, 3))],
                ("A".into(), "B".into())
            ),
            Err(Error::Network(msg)) if msg.contains("edge 0") && msg.contains("'X'")
        ));
        assert!(matches!(
            QuantumNetwork::new(nodes.clone(), vec![], ("A".into(), "A".into())),
            Err(Error::Network(_))
        ));
        assert!(matches!(
            QuantumNetwork::new(
                vec!["A".into(), "A".into()],
                vec![],
                ("A".into(), "A".into())
            ),
            Err(Error::Network(_))
        ));
    }

    #[test]
    fn json_round_trip_and_errors() {
        let text = r#"{
            "nodes": ["A", "r1", "B"],
            "edges": [
                {"u": "A", "v": "r1", "eta": -1.0, "d": 3},
                {"u": "r1", "v": "B", "eta": -0.5, "d": 3}
            ],
            "terminals": {"A": "A", "B": "B"}
        }"#;
        let net = QuantumNetwork::from_json_str(text).unwrap();
        assert_eq!(net.node_count(), 3);
        assert_eq!(net.edges().len(), 2);

        let bad_node = text.replace("\"v\": \"r1\"", "\"v\": \"zz\"");
        assert!(matches!(
            QuantumNetwork::from_json_str(&bad_node),
            Err(Error::Network(msg)) if msg.contains("edge 0") && msg.contains("'zz'")
        ));

        let bad_eta = text.replace("-0.5", "-7.5");
        assert!(matches!(
            QuantumNetwork::from_json_str(&bad_eta),
            Err(Error::Network(msg)) if msg.contains("edge 1")
        ));

        let unknown_field = text.replace("\"eta\": -1.0", "\"eta\": -1.0, \"loss\": 2");
        assert!(matches!(
            QuantumNetwork::from_json_str(&unknown_field),
            Err(Error::Json(_))
        ));

        assert!(matches!(
            QuantumNetwork::from_json_str("{not json"),
            Err(Error::Json(_))
        ));
    }

    #[test]
    fn chain_bound_examples() {
        let r = chain_bounds(&[-1.0, -0.5, -0.8], 3).unwrap();
        assert_eq!(r.bottleneck_index, 1);
        assert_abs_diff_eq!(r.k_bound, 0.188_721_875_540_867, epsilon = 1e-9);
        assert_abs_diff_eq!(r.q2_bound, 0.188_721_875_540_867, epsilon = 1e-9);
        assert_eq!(r.k_bound_source, MeasureTag::ReeTwoCopy);

        let r = chain_bounds(&[-0.9, 0.1, -1.0], 4).unwrap();
        assert_eq!(r.bottleneck_index, 1);
        assert_eq!(r.k_bound, 0.0);
        assert_eq!(r.q2_bound, 0.0);

        // One-hop chain reduces to the channel bounds.
        let r = chain_bounds(&[-1.0], 4).unwrap();
        let c = channel_bounds(&p(-1.0, 4));
        assert_eq!(r.k_bound, c.k_bound);
        assert_eq!(r.q2_bound, c.q2_bound);
        assert_eq!(r.bottleneck_index, 0);

        assert!(matches!(chain_bounds(&[], 3), Err(Error::EmptyChain)));
        // Ties resolve to the first occurrence.
        let r = chain_bounds(&[-0.5, -0.5, -0.9], 3).unwrap();
        assert_eq!(r.bottleneck_index, 0);
    }

    #[test]
    fn cut_enumeration_counts() {
        let two = QuantumNetwork::new(
            vec!["A".into(), "B".into()],
            vec![
                ("A".into(), "B".into(), p(-1.0, 3)),
                ("A".into(), "B".into(), p(-0.5, 3)),
            ],
            ("A".into(), "B".into()),
        )
        .unwrap();
        let cuts: Vec<_> = enumerate_cuts(&two).unwrap().collect();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].cut_edges.len(), 2);

        let cuts: Vec<_> = enumerate_cuts(&diamond(-1.0, 3)).unwrap().collect();
        assert_eq!(cuts.len(), 4);
    }

    #[test]
    fn cut_enumeration_guard() {
        // 21 non-terminal nodes exceed the enumeration guard.
        let nodes: Vec<String> = (0..23).map(|i| format!("n{i}")).collect();
        let edges = (1..23)
            .map(|i| (nodes[i - 1].clone(), nodes[i].clone(), p(-0.5, 3)))
            .collect();
        let net = QuantumNetwork::new(nodes.clone(), edges, (nodes[0].clone(), nodes[22].clone()))
            .unwrap();
        assert!(matches!(
            enumerate_cuts(&net),
            Err(Error::TooManyNodesForEnumeration { got: 21, guard: 20 })
        ));
        // The flow-based bounds still work there.
        let flow = max_flow_value(&net, EdgeWeight::Measure(MeasureTag::ReeOneCopy));
        let single = single_path_bound(&net, EdgeWeight::Measure(MeasureTag::ReeOneCopy)).unwrap();
        let widest = widest_path(&net, EdgeWeight::Measure(MeasureTag::ReeOneCopy));
        assert!((single.cut_value - widest.value).abs() < 1e-12);
        assert!(
            (flow - widest.value).abs() < 1e-9,
            "path graph: flow = bottleneck"
        );
    }

    #[test]
    fn every_cut_disconnects_the_terminals() {
        let net = diamond(-0.7, 3);
        for cut in enumerate_cuts(&net).unwrap() {
            // Traverse from A avoiding the cut edges.
            let mut seen = vec![false; net.node_count()];
            seen[net.terminal_a()] = true;
            let mut queue = VecDeque::from([net.terminal_a()]);
            while let Some(u) = queue.pop_front() {
                for (i, e) in net.edges().iter().enumerate() {
                    if cut.cut_edges.contains(&i) {
                        continue;
                    }
                    let next = if e.u == u {
                        e.v
                    } else if e.v == u {
                        e.u
                    } else {
                        continue;
                    };
                    if !seen[next] {
                        seen[next] = true;
                        queue.push_back(next);
                    }
                }
            }
            assert!(!seen[net.terminal_b()], "cut failed to disconnect");
        }
    }

    #[test]
    fn single_path_uniform_diamond() {
        let net = diamond(-1.0, 3);
        let r = single_path_bound(&net, EdgeWeight::Measure(MeasureTag::ReeTwoCopy)).unwrap();
        assert_abs_diff_eq!(r.cut_value, 0.5 * 3.0f64.log2(), epsilon = 1e-9);
        let wp = widest_path(&net, EdgeWeight::Measure(MeasureTag::ReeTwoCopy));
        assert_abs_diff_eq!(wp.value, r.cut_value, epsilon = 1e-12);
    }

    #[test]
    fn path_graph_reduces_to_chain_bounds() {
        let etas = [-1.0, -0.5, -0.8];
        let net = path_graph(&etas, 3);
        let chain = chain_bounds(&etas, 3).unwrap();
        let single = single_path_bound(&net, EdgeWeight::BestK).unwrap();
        assert_abs_diff_eq!(single.cut_value, chain.k_bound, epsilon = 1e-12);
        // Multi-path on a path graph: cut-sets are single edges, so the
        // flooding Q2 bound equals the bottleneck E_P^∞.
        let multi =
            multi_path_bound(&net, EdgeWeight::Measure(MeasureTag::RpptRegularised)).unwrap();
        assert_abs_diff_eq!(multi.cut_value, chain.q2_bound, epsilon = 1e-12);
    }

    #[test]
    fn parallel_edges_add_up_under_flooding() {
        let net = QuantumNetwork::new(
            vec!["A".into(), "B".into()],
            vec![
                ("A".into(), "B".into(), p(-1.0, 4)),
                ("A".into(), "B".into(), p(-1.0, 4)),
            ],
            ("A".into(), "B".into()),
        )
        .unwrap();
        let r = multi_path_bound(&net, EdgeWeight::Measure(MeasureTag::RpptRegularised)).unwrap();
        assert_abs_diff_eq!(r.cut_value, 2.0 * 1.5f64.log2(), epsilon = 1e-12);
        assert_eq!(r.cut_edges.len(), 2);
    }

    #[test]
    fn multi_path_diamond_and_tie_break() {
        let net = diamond(-1.0, 4);
        let r = multi_path_bound(&net, EdgeWeight::Measure(MeasureTag::RpptRegularised)).unwrap();
        assert_abs_diff_eq!(r.cut_value, 2.0 * 1.5f64.log2(), epsilon = 1e-9);
        // Two cuts share the minimum (isolate A / isolate B); the smaller
        // sorted A-side wins.
        assert_eq!(r.partition.0, vec!["A".to_string()]);
        assert_eq!(r.cut_edges.len(), 2);
        let flow = max_flow_value(&net, EdgeWeight::Measure(MeasureTag::RpptRegularised));
        assert_abs_diff_eq!(flow, r.cut_value, epsilon = 1e-9);
    }

    #[test]
    fn multi_path_dominates_single_path() {
        let mut rng = StdRng::seed_from_u64(404);
        for _ in 0..25 {
            let net = random_network(&mut rng);
            for weight in [
                EdgeWeight::Measure(MeasureTag::ReeTwoCopy),
                EdgeWeight::Measure(MeasureTag::RpptRegularised),
                EdgeWeight::BestK,
            ] {
                let single = single_path_bound(&net, weight).unwrap();
                let multi = multi_path_bound(&net, weight).unwrap();
                assert!(multi.cut_value >= single.cut_value - 1e-12);
            }
        }
    }

    #[test]
    fn dualities_on_random_networks() {
        let mut rng = StdRng::seed_from_u64(777);
        for _ in 0..40 {
            let net = random_network(&mut rng);
            let weight = EdgeWeight::Measure(MeasureTag::ReeTwoCopy);
            let enumerated = single_path_bound_enumerated(&net, weight).unwrap();
            let wp = widest_path(&net, weight);
            assert_abs_diff_eq!(enumerated.cut_value, wp.value, epsilon = 1e-12);

            let weight = EdgeWeight::Measure(MeasureTag::RpptRegularised);
            let enumerated = multi_path_bound_enumerated(&net, weight).unwrap();
            let flow = max_flow_value(&net, weight);
            assert_abs_diff_eq!(enumerated.cut_value, flow, epsilon = 1e-9);
        }
    }

    #[test]
    fn improving_an_edge_never_lowers_the_bounds() {
        // Measures are non-increasing in η and both min-cut objectives are
        // monotone in every edge weight, so decreasing one edge's η can only
        // raise (or keep) the network bounds.
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..15 {
            let net = random_network(&mut rng);
            let pick = rng.gen_range(0..net.edges().len());
            let mut improved_edges: Vec<(String, String, WernerParams)> = net
                .edges()
                .iter()
                .map(|e| {
                    (
                        net.node_name(e.u).to_string(),
                        net.node_name(e.v).to_string(),
                        e.params,
                    )
                })
                .collect();
            let old = improved_edges[pick].2;
            let lowered = (old.eta() - 0.3).max(-1.0);
            improved_edges[pick].2 = WernerParams::new(lowered, old.d()).unwrap();
            let improved = QuantumNetwork::new(
                (0..net.node_count())
                    .map(|i| net.node_name(i).to_string())
                    .collect(),
                improved_edges,
                (
                    net.node_name(net.terminal_a()).to_string(),
                    net.node_name(net.terminal_b()).to_string(),
                ),
            )
            .unwrap();
            for weight in [
                EdgeWeight::BestK,
                EdgeWeight::Measure(MeasureTag::RpptRegularised),
            ] {
                let before_s = single_path_bound(&net, weight).unwrap().cut_value;
                let after_s = single_path_bound(&improved, weight).unwrap().cut_value;
                assert!(after_s >= before_s - 1e-12);
                let before_m = multi_path_bound(&net, weight).unwrap().cut_value;
                let after_m = multi_path_bound(&improved, weight).unwrap().cut_value;
                assert!(after_m >= before_m - 1e-12);
            }
        }
    }

    #[test]
    fn disconnected_terminals_give_zero() {
        let net = QuantumNetwork::new(
            vec!["A".into(), "B".into(), "x".into()],
            vec![("A".into(), "x".into(), p(-1.0, 3))],
            ("A".into(), "B".into()),
        )
        .unwrap();
        assert!(!net.terminals_connected());
        let single = single_path_bound(&net, EdgeWeight::BestK).unwrap();
        assert_eq!(single.cut_value, 0.0);
        assert!(single.cut_edges.is_empty());
        assert_eq!(single.partition.0, vec!["A".to_string(), "x".to_string()]);
        let multi = multi_path_bound(&net, EdgeWeight::BestK).unwrap();
        assert_eq!(multi.cut_value, 0.0);
        let wp = widest_path(&net, EdgeWeight::BestK);
        assert_eq!(wp.value, 0.0);
        assert!(wp.path_edges.is_empty());
    }

    #[test]
    fn zero_capacity_edges_choke_single_path() {
        // Every A-B path crosses the separable (η ≥ 0) middle edge.
        let net = path_graph(&[-1.0, 0.2, -0.9], 3);
        let r = single_path_bound(&net, EdgeWeight::BestK).unwrap();
        assert_eq!(r.cut_value, 0.0);
        // The minimizing cut consists of zero-measure edges only.
        for &i in &r.cut_edges {
            assert_eq!(EdgeWeight::BestK.evaluate(&net.edges()[i].params), 0.0);
        }
    }

    #[test]
    fn ordering_of_flooding_bounds() {
        let net = diamond(-0.9, 3);
        assert!(ordering_chain_check(&net).unwrap());
        // Strict ordering at a cut when some edge is deep in the
        // subadditive region.
        let net = diamond(-1.0, 5);
        let q = multi_path_bound(&net, EdgeWeight::Measure(MeasureTag::RpptRegularised))
            .unwrap()
            .cut_value;
        let k2 = multi_path_bound(&net, EdgeWeight::Measure(MeasureTag::ReeTwoCopy))
            .unwrap()
            .cut_value;
        let k1 = multi_path_bound(&net, EdgeWeight::Measure(MeasureTag::ReeOneCopy))
            .unwrap()
            .cut_value;
        assert!(q < k2 - 1e-6);
        assert!(k2 < k1 - 1e-6);
        // All three coincide in the additivity region.
        let net = diamond(-0.25, 5);
        assert!(ordering_chain_check(&net).unwrap());
        let q = multi_path_bound(&net, EdgeWeight::Measure(MeasureTag::RpptRegularised))
            .unwrap()
            .cut_value;
        let k1 = multi_path_bound(&net, EdgeWeight::Measure(MeasureTag::ReeOneCopy))
            .unwrap()
            .cut_value;
        assert_abs_diff_eq!(q, k1, epsilon = 1e-10);
    }

    #[test]
    fn mixed_dimension_networks_are_supported() {
        let net = QuantumNetwork::new(
            vec!["A".into(), "m".into(), "B".into()],
            vec![
                ("A".into(), "m".into(), p(-1.0, 3)),
                ("m".into(), "B".into(), p(-1.0, 5)),
            ],
            ("A".into(), "B".into()),
        )
        .unwrap();
        let r = single_path_bound(&net, EdgeWeight::Measure(MeasureTag::ReeTwoCopy)).unwrap();
        // Bottleneck is the d = 5 edge: E_R² is smaller there.
        assert_abs_diff_eq!(r.cut_value, 0.660_964_047_443_9, epsilon = 1e-9);
    }
}
