//! Disjoint and anticomplete path packings against separators: classical
//! Menger via vertex-capacity max-flow, an exhaustive anticomplete packing
//! oracle for small graphs, the edge-partition cleaning and recursion
//! steps that trade cluttered parts for induced structure, and the
//! contraction pipeline that returns either a lifted anticomplete packing
//! or a separator scattered around few centers.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::decomposition::{distance_r_independence, Branch, DistanceIndependence};
use crate::error::{internal, validation, Error, Result};
use crate::family::{
    build_layered_family, degeneracy, degeneracy_layering, LayeredFamily,
    DEFAULT_MINIMALITY_BUDGET,
};
use crate::graph::{
    enumerate_induced_paths, extract_induced_path_from_walk, is_separator,
    quotient_by_components, shortest_path_within, sorted_dedup, Graph, QuotientMap, Vertex,
    UNREACHABLE,
};
use crate::lp::ab::{restrict_dual_to_upward_minimal, solve_ab_lp};
use crate::lp::{LpConfig, Mode};
use crate::partition::{
    classify_parts, greedy_four_radius_partition, star_edge_partition, EdgePartition,
};
use crate::rounding::{round_ab_separator, AbSeparatorCertificate, BoundCheck};
use crate::sampling::{sample_path_multiset, PathPacking};

pub const DEFAULT_ORACLE_BUDGET: usize = 5_000_000;

/// s^z * (2l+1)^(4l^2+1), the separator bound driver of the recursion.
pub fn g_bound(s: usize, z: usize, ell: usize) -> BigUint {
    let base = BigUint::from(s.max(1));
    let poly = BigUint::from(2 * ell + 1);
    base.pow(z as u32) * poly.pow((4 * ell * ell + 1) as u32)
}

fn big_to_f64(v: &BigUint) -> f64 {
    match v.to_f64() {
        Some(x) if x.is_finite() => x,
        _ => 1e300,
    }
}

/// Outcome of classical Menger: k disjoint paths or a minimum separator
/// smaller than k. Exactly one of the two is present.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MengerResult {
    pub k: usize,
    /// Attained max-flow value; equals the path count or separator size.
    pub flow: usize,
    pub paths: Option<Vec<Vec<Vertex>>>,
    pub separator: Option<Vec<Vertex>>,
}

struct FlowNet {
    to: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

const FLOW_INF: i64 = 1 << 40;

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet { to: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    fn arc(&mut self, u: usize, v: usize, c: i64) {
        self.to.push(v);
        self.cap.push(c);
        self.adj[u].push(self.to.len() - 1);
        self.to.push(u);
        self.cap.push(0);
        self.adj[v].push(self.to.len() - 1);
    }

    /// One shortest augmenting path; returns the pushed amount (0 if none).
    fn augment(&mut self, s: usize, t: usize) -> i64 {
        let mut pre: Vec<Option<usize>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &id in &self.adj[u] {
                let v = self.to[id];
                if self.cap[id] > 0 && !seen[v] {
                    seen[v] = true;
                    pre[v] = Some(id);
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] {
            return 0;
        }
        let mut bottleneck = i64::MAX;
        let mut cur = t;
        while cur != s {
            let id = pre[cur].unwrap();
            bottleneck = bottleneck.min(self.cap[id]);
            cur = self.to[id ^ 1];
        }
        let mut cur = t;
        while cur != s {
            let id = pre[cur].unwrap();
            self.cap[id] -= bottleneck;
            self.cap[id ^ 1] += bottleneck;
            cur = self.to[id ^ 1];
        }
        bottleneck
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.adj[u] {
                let v = self.to[id];
                if self.cap[id] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Unit-capacity Menger: split every vertex, push flow until it reaches k
/// or stalls. Flow >= k decomposes into k vertex-disjoint A-B paths (a
/// vertex in both A and B is its own one-vertex path); otherwise the
/// residual cut is a minimum vertex separator of size < k.
pub fn menger_max_flow(g: &Graph, a: &[Vertex], b: &[Vertex], k: usize) -> Result<MengerResult> {
    if k == 0 {
        return Err(validation("requested path count must be positive"));
    }
    let a = sorted_dedup(a);
    let b = sorted_dedup(b);
    if a.is_empty() || b.is_empty() {
        return Err(validation("both terminal sets must be nonempty"));
    }
    for &v in a.iter().chain(b.iter()) {
        if v >= g.n() {
            return Err(validation(format!("terminal {v} out of range")));
        }
    }
    let n = g.n();
    // node ids: v_in = 2v, v_out = 2v+1, source = 2n, sink = 2n+1
    let (src, snk) = (2 * n, 2 * n + 1);
    let mut net = FlowNet::new(2 * n + 2);
    for v in 0..n {
        net.arc(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, FLOW_INF);
        net.arc(2 * v + 1, 2 * u, FLOW_INF);
    }
    for &v in &a {
        net.arc(src, 2 * v, FLOW_INF);
    }
    for &v in &b {
        net.arc(2 * v + 1, snk, FLOW_INF);
    }

    let mut flow: i64 = 0;
    while flow < k as i64 {
        let pushed = net.augment(src, snk);
        if pushed == 0 {
            break;
        }
        flow += pushed;
    }

    if flow >= k as i64 {
        // flow of a forward arc (even id) sits on its twin's capacity
        let mut paths = Vec::with_capacity(k);
        for _ in 0..k {
            let mut path = Vec::new();
            let mut node = src;
            while node != snk {
                let id = net.adj[node]
                    .iter()
                    .copied()
                    .find(|&id| id % 2 == 0 && net.cap[id ^ 1] > 0)
                    .ok_or_else(|| internal("flow decomposition stalled"))?;
                net.cap[id ^ 1] -= 1;
                net.cap[id] += 1;
                node = net.to[id];
                if node < 2 * n && node % 2 == 0 {
                    path.push(node / 2);
                }
            }
            paths.push(path);
        }
        let aset: BTreeSet<Vertex> = a.iter().copied().collect();
        let bset: BTreeSet<Vertex> = b.iter().copied().collect();
        let mut used: BTreeSet<Vertex> = BTreeSet::new();
        for p in &paths {
            if p.is_empty() || !aset.contains(&p[0]) || !bset.contains(p.last().unwrap()) {
                return Err(internal("decomposed path misses a terminal"));
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(internal("decomposed path skips a non-edge"));
                }
            }
            for &v in p {
                if !used.insert(v) {
                    return Err(internal("decomposed paths share a vertex"));
                }
            }
        }
        return Ok(MengerResult { k, flow: k, paths: Some(paths), separator: None });
    }

    let reach = net.residual_reachable(src);
    let separator: Vec<Vertex> =
        (0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
    if separator.len() as i64 != flow {
        return Err(internal("cut size does not match the flow value"));
    }
    if !is_separator(g, &a, &b, &separator) {
        return Err(internal("extracted cut does not separate"));
    }
    Ok(MengerResult { k, flow: flow as usize, paths: None, separator: Some(separator) })
}

fn minimum_vertex_cut(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<Vec<Vertex>> {
    match menger_max_flow(g, a, b, g.n() + 1)? {
        MengerResult { separator: Some(s), .. } => Ok(s),
        _ => Err(internal("flow exceeded the vertex count")),
    }
}

/// Pairwise vertex-disjoint, pairwise anticomplete induced A-B paths.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnticompletePacking {
    pub paths: Vec<Vec<Vertex>>,
}

/// Re-checks a packing from scratch: k paths, each an induced A-B path,
/// pairwise disjoint and with no edges between them.
pub fn verify_anticomplete_packing(
    g: &Graph,
    a: &[Vertex],
    b: &[Vertex],
    packing: &AnticompletePacking,
    k: usize,
) -> Result<()> {
    if packing.paths.len() != k {
        return Err(validation(format!(
            "packing has {} paths, expected {k}",
            packing.paths.len()
        )));
    }
    let aset: BTreeSet<Vertex> = a.iter().copied().collect();
    let bset: BTreeSet<Vertex> = b.iter().copied().collect();
    for (i, p) in packing.paths.iter().enumerate() {
        if p.is_empty() {
            return Err(validation(format!("path {i} is empty")));
        }
        if !aset.contains(&p[0]) || !bset.contains(p.last().unwrap()) {
            return Err(validation(format!("path {i} does not join A to B")));
        }
        if !g.is_induced_path(p) {
            return Err(validation(format!("path {i} is not induced")));
        }
    }
    for i in 0..packing.paths.len() {
        for j in (i + 1)..packing.paths.len() {
            let (p, q) = (&packing.paths[i], &packing.paths[j]);
            let pset: BTreeSet<Vertex> = p.iter().copied().collect();
            if q.iter().any(|v| pset.contains(v)) {
                return Err(validation(format!("paths {i} and {j} share a vertex")));
            }
            if !g.is_anticomplete(p, q) {
                return Err(validation(format!("paths {i} and {j} are joined by an edge")));
            }
        }
    }
    Ok(())
}

/// Exhaustive search for k pairwise disjoint and anticomplete induced A-B
/// paths. `Ok(None)` is a proof of absence; running out of budget is the
/// inconclusive error. Meant for small graphs.
pub fn brute_force_anticomplete_packing(
    g: &Graph,
    a: &[Vertex],
    b: &[Vertex],
    k: usize,
    budget: usize,
) -> Result<Option<AnticompletePacking>> {
    if k == 0 {
        return Ok(Some(AnticompletePacking { paths: vec![] }));
    }
    if g.n() > 128 {
        return Err(validation("exhaustive packing search is limited to 128 vertices"));
    }
    let a = sorted_dedup(a);
    let b = sorted_dedup(b);
    for &v in a.iter().chain(b.iter()) {
        if v >= g.n() {
            return Err(validation(format!("terminal {v} out of range")));
        }
    }
    if a.is_empty() || b.is_empty() {
        return Ok(None);
    }
    let mut paths = match enumerate_induced_paths(g, &a, &b, budget) {
        Ok(p) => p,
        Err(Error::PathOverflow { cap }) => {
            return Err(Error::BudgetExhausted(format!(
                "more than {cap} induced A-B paths"
            )))
        }
        Err(e) => return Err(e),
    };
    paths.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
    let vert_mask: Vec<u128> = paths
        .iter()
        .map(|p| p.iter().fold(0u128, |m, &v| m | 1 << v))
        .collect();
    let block_mask: Vec<u128> = paths
        .iter()
        .map(|p| {
            p.iter().fold(0u128, |m, &v| {
                g.neighbors(v).iter().fold(m | 1 << v, |mm, &w| mm | 1 << w)
            })
        })
        .collect();

    struct Search<'a> {
        vert: &'a [u128],
        block: &'a [u128],
        k: usize,
        nodes: usize,
        budget: usize,
    }

    impl Search<'_> {
        fn dfs(&mut self, start: usize, blocked: u128, chosen: &mut Vec<usize>) -> Result<bool> {
            if chosen.len() == self.k {
                return Ok(true);
            }
            for i in start..self.vert.len() {
                if self.vert.len() - i < self.k - chosen.len() {
                    break;
                }
                if self.vert[i] & blocked != 0 {
                    continue;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Err(Error::BudgetExhausted(format!(
                        "packing search visited more than {} states",
                        self.budget
                    )));
                }
                chosen.push(i);
                if self.dfs(i + 1, blocked | self.block[i], chosen)? {
                    return Ok(true);
                }
                chosen.pop();
            }
            Ok(false)
        }
    }

    let mut search = Search { vert: &vert_mask, block: &block_mask, k, nodes: 0, budget };
    let mut chosen = Vec::new();
    if search.dfs(0, 0, &mut chosen)? {
        let packing =
            AnticompletePacking { paths: chosen.into_iter().map(|i| paths[i].clone()).collect() };
        verify_anticomplete_packing(g, &a, &b, &packing, k)?;
        Ok(Some(packing))
    } else {
        Ok(None)
    }
}

/// Builds a walk through the blocks of a quotient path and extracts an
/// induced A-B path from it; every vertex stays inside the path's blocks.
fn lift_quotient_path(
    g: &Graph,
    qmap: &QuotientMap,
    qpath: &[usize],
    a: &[Vertex],
    b: &[Vertex],
) -> Result<Vec<Vertex>> {
    if qpath.is_empty() {
        return Err(internal("empty quotient path"));
    }
    let start = qmap.blocks[qpath[0]]
        .iter()
        .copied()
        .find(|v| a.binary_search(v).is_ok())
        .ok_or_else(|| internal("first block misses A"))?;
    let end = qmap.blocks[*qpath.last().unwrap()]
        .iter()
        .copied()
        .find(|v| b.binary_search(v).is_ok())
        .ok_or_else(|| internal("last block misses B"))?;
    let mut walk = vec![start];
    let mut cur = start;
    for w in qpath.windows(2) {
        let (bi, bj) = (&qmap.blocks[w[0]], &qmap.blocks[w[1]]);
        let mut crossing = None;
        'outer: for &u in bi {
            for &v in bj {
                if g.has_edge(u, v) {
                    crossing = Some((u, v));
                    break 'outer;
                }
            }
        }
        let (u, v) = crossing.ok_or_else(|| internal("adjacent blocks share no edge"))?;
        let hop = shortest_path_within(g, bi, cur, u)
            .ok_or_else(|| internal("block is not connected"))?;
        walk.extend(hop.into_iter().skip(1));
        walk.push(v);
        cur = v;
    }
    let last_block = &qmap.blocks[*qpath.last().unwrap()];
    let hop = shortest_path_within(g, last_block, cur, end)
        .ok_or_else(|| internal("block is not connected"))?;
    walk.extend(hop.into_iter().skip(1));
    extract_induced_path_from_walk(g, &walk)
}

fn blocks_meeting(qmap: &QuotientMap, verts: &[Vertex]) -> Vec<usize> {
    sorted_dedup(&verts.iter().map(|&v| qmap.block_of[v]).collect::<Vec<_>>())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CleaningLedger {
    pub clean_before: usize,
    pub clean_after: usize,
    pub part_count: usize,
    pub s: usize,
    pub cluttered_index: usize,
    /// No separator of at most this size survives in H.
    pub separator_floor: f64,
    /// Disjoint quotient paths found: floor(f/s) + 1.
    pub quotient_paths: usize,
    pub flow_verified: bool,
}

/// One cleaning round: the first cluttered part contracted, disjoint
/// quotient paths lifted to induced paths, and the partition restricted
/// to their union.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CleaningStep {
    pub h: Graph,
    /// H vertex id to input vertex id.
    pub to_orig: Vec<Vertex>,
    /// Edge partition of H, in H's own ids.
    pub partition: EdgePartition,
    /// Terminals surviving into H, in H's own ids.
    pub a_h: Vec<Vertex>,
    pub b_h: Vec<Vertex>,
    /// The lifted induced A-B paths, in input ids.
    pub paths: Vec<Vec<Vertex>>,
    pub ledger: CleaningLedger,
}

/// Contracts the first cluttered part, routes floor(f/s)+1 disjoint paths
/// through the quotient, and restricts everything to their lifted union.
/// Requires that no A-B separator of size at most f exists.
pub fn cleaning_step(
    g: &Graph,
    lambda: &EdgePartition,
    a: &[Vertex],
    b: &[Vertex],
    f: usize,
) -> Result<CleaningStep> {
    if f == 0 {
        return Err(validation("the separator floor f must be positive"));
    }
    let a = sorted_dedup(a);
    let b = sorted_dedup(b);
    if a.is_empty() || b.is_empty() {
        return Err(validation("both terminal sets must be nonempty"));
    }
    let i_o = lambda
        .clean
        .iter()
        .position(|&c| !c)
        .ok_or_else(|| validation("every part is already clean"))?;
    let s = lambda.s;
    if s == 0 {
        return Err(validation("the partition carries no size bound"));
    }
    match menger_max_flow(g, &a, &b, f + 1)? {
        MengerResult { paths: Some(_), .. } => {}
        MengerResult { separator: Some(sep), .. } => {
            return Err(validation(format!(
                "an A-B separator of size {} <= f = {f} exists: {sep:?}",
                sep.len()
            )))
        }
        _ => unreachable!(),
    }

    let part_graph = Graph::from_edges(g.n(), &lambda.parts[i_o])?;
    let blocks = part_graph.connected_components();
    let (gq, qmap) = quotient_by_components(g, &blocks)?;
    let a_q = blocks_meeting(&qmap, &a);
    let b_q = blocks_meeting(&qmap, &b);
    let needed = f / s + 1;
    let qpaths = match menger_max_flow(&gq, &a_q, &b_q, needed)? {
        MengerResult { paths: Some(p), .. } => p,
        MengerResult { separator: Some(sep), .. } => {
            return Err(internal(format!(
                "contraction lost the separator floor: quotient separator {sep:?}"
            )))
        }
        _ => unreachable!(),
    };

    let mut paths: Vec<Vec<Vertex>> = Vec::with_capacity(qpaths.len());
    let mut used: BTreeSet<Vertex> = BTreeSet::new();
    for qp in &qpaths {
        let p = lift_quotient_path(g, &qmap, qp, &a, &b)?;
        let allowed: BTreeSet<Vertex> =
            qp.iter().flat_map(|&c| qmap.blocks[c].iter().copied()).collect();
        if p.iter().any(|v| !allowed.contains(v)) {
            return Err(internal("lifted path escaped its blocks"));
        }
        if !g.is_induced_path(&p) {
            return Err(internal("lifted path is not induced"));
        }
        for &v in &p {
            if !used.insert(v) {
                return Err(internal("lifted paths share a vertex"));
            }
        }
        paths.push(p);
    }

    let verts: Vec<Vertex> = used.iter().copied().collect();
    let (h, to_orig) = g.induced_subgraph(&verts)?;
    let mut inv = vec![usize::MAX; g.n()];
    for (new, &old) in to_orig.iter().enumerate() {
        inv[old] = new;
    }
    let parts_h: Vec<Vec<(Vertex, Vertex)>> = lambda
        .parts
        .iter()
        .map(|part| {
            part.iter()
                .filter(|&&(u, v)| used.contains(&u) && used.contains(&v))
                .map(|&(u, v)| (inv[u], inv[v]))
                .collect()
        })
        .collect();
    let mut ep = classify_parts(&h, parts_h)?;
    if ep.s > s {
        return Err(internal("a component outgrew the size bound"));
    }
    ep.s = s;
    let clean_before = lambda.clean.iter().filter(|&&c| c).count();
    let clean_after = ep.clean.iter().filter(|&&c| c).count();
    for i in 0..lambda.clean.len() {
        if lambda.clean[i] && !ep.clean[i] {
            return Err(internal(format!("part {i} was clean and became cluttered")));
        }
    }
    if !ep.clean[i_o] {
        return Err(internal("the contracted part is still cluttered"));
    }
    if clean_after <= clean_before {
        return Err(internal("cleaning did not increase the clean part count"));
    }

    let a_h: Vec<Vertex> = a.iter().filter(|v| used.contains(v)).map(|&v| inv[v]).collect();
    let b_h: Vec<Vertex> = b.iter().filter(|v| used.contains(v)).map(|&v| inv[v]).collect();
    let floor = f / s;
    let flow_verified =
        matches!(menger_max_flow(&h, &a_h, &b_h, floor + 1)?, MengerResult { paths: Some(_), .. });
    if !flow_verified {
        return Err(internal("the cleaned subgraph lost the separator floor"));
    }

    Ok(CleaningStep {
        h,
        to_orig,
        partition: ep,
        a_h,
        b_h,
        paths,
        ledger: CleaningLedger {
            clean_before,
            clean_after,
            part_count: lambda.parts.len(),
            s,
            cluttered_index: i_o,
            separator_floor: f as f64 / s as f64,
            quotient_paths: needed,
            flow_verified,
        },
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeparatorWithBound {
    pub separator: Vec<Vertex>,
    /// k * g(s, z, l) as a decimal string; usually astronomically large.
    pub claimed_bound: String,
    pub within_bound: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum InducedMengerResult {
    Packing(AnticompletePacking),
    Separator(SeparatorWithBound),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecursionLedger {
    pub s: usize,
    pub ell: usize,
    pub z_initial: usize,
    pub cleanings: usize,
    /// g(s, z_initial, ell) as a decimal string.
    pub bound: String,
    /// Maximum degree at the all-clean base case, at most 2*ell.
    pub base_max_degree: Option<usize>,
    pub branches: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RecursiveMenger {
    pub result: InducedMengerResult,
    pub ledger: RecursionLedger,
}

/// Induction over the cluttered part count: either an early separator
/// within k*g(s,z,l), or cleaning rounds down to an all-clean instance
/// where the exhaustive oracle settles the packing. `force_clean` skips
/// the separator attempts so the cleaning path runs even though the
/// bound comparison would fire immediately at any realistic size.
pub fn recursive_induced_menger(
    g: &Graph,
    lambda: &EdgePartition,
    a: &[Vertex],
    b: &[Vertex],
    k: usize,
    budget: usize,
    force_clean: bool,
) -> Result<RecursiveMenger> {
    if k == 0 {
        return Err(validation("requested path count must be positive"));
    }
    let a = sorted_dedup(a);
    let b = sorted_dedup(b);
    if a.is_empty() || b.is_empty() {
        return Err(validation("both terminal sets must be nonempty"));
    }
    let s = lambda.s.max(1);
    let ell = lambda.parts.len();
    let z0 = lambda.cluttered_count();
    let top_bound = g_bound(s, z0, ell);
    let k_top = BigUint::from(k) * &top_bound;
    let mut ledger = RecursionLedger {
        s,
        ell,
        z_initial: z0,
        cleanings: 0,
        bound: top_bound.to_string(),
        base_max_degree: None,
        branches: Vec::new(),
    };

    let mut cur_g = g.clone();
    let mut cur_lambda = lambda.clone();
    let mut cur_a = a.clone();
    let mut cur_b = b.clone();
    let mut to_orig: Vec<Vertex> = (0..g.n()).collect();

    loop {
        let z = cur_lambda.cluttered_count();
        if z == 0 {
            let dmax = cur_g.max_degree();
            if dmax > 2 * ell {
                return Err(internal("all parts clean yet the degree exceeds 2 per part"));
            }
            ledger.base_max_degree = Some(dmax);
            match brute_force_anticomplete_packing(&cur_g, &cur_a, &cur_b, k, budget)? {
                Some(p) => {
                    ledger.branches.push("base-packing".into());
                    let lifted = AnticompletePacking {
                        paths: p
                            .paths
                            .iter()
                            .map(|path| path.iter().map(|&v| to_orig[v]).collect())
                            .collect(),
                    };
                    verify_anticomplete_packing(g, &a, &b, &lifted, k)?;
                    return Ok(RecursiveMenger {
                        result: InducedMengerResult::Packing(lifted),
                        ledger,
                    });
                }
                None => {
                    // no packing exists down here, so fall back to the
                    // smallest separator of the original instance
                    ledger.branches.push("base-separator".into());
                    let separator = minimum_vertex_cut(g, &a, &b)?;
                    let within = BigUint::from(separator.len()) <= k_top;
                    return Ok(RecursiveMenger {
                        result: InducedMengerResult::Separator(SeparatorWithBound {
                            separator,
                            claimed_bound: k_top.to_string(),
                            within_bound: within,
                        }),
                        ledger,
                    });
                }
            }
        }

        if !force_clean {
            let kg = BigUint::from(k) * g_bound(s, z, ell);
            let request = if kg >= BigUint::from(cur_g.n()) {
                cur_g.n() + 1
            } else {
                kg.to_usize().unwrap() + 1
            };
            match menger_max_flow(&cur_g, &cur_a, &cur_b, request)? {
                MengerResult { separator: Some(sep), .. } => {
                    if ledger.cleanings > 0 {
                        return Err(internal("a separator survived below the cleaning floor"));
                    }
                    ledger.branches.push("separator".into());
                    let within = BigUint::from(sep.len()) <= kg;
                    return Ok(RecursiveMenger {
                        result: InducedMengerResult::Separator(SeparatorWithBound {
                            separator: sep,
                            claimed_bound: kg.to_string(),
                            within_bound: within,
                        }),
                        ledger,
                    });
                }
                MengerResult { paths: Some(_), .. } => {
                    let f = kg.to_usize().ok_or_else(|| {
                        internal("flow reached an astronomically large request")
                    })?;
                    let step = cleaning_step(&cur_g, &cur_lambda, &cur_a, &cur_b, f)?;
                    ledger.cleanings += 1;
                    ledger.branches.push("clean".into());
                    to_orig = step.to_orig.iter().map(|&v| to_orig[v]).collect();
                    cur_g = step.h;
                    cur_lambda = step.partition;
                    cur_a = step.a_h;
                    cur_b = step.b_h;
                }
                _ => unreachable!(),
            }
        } else {
            let cut = minimum_vertex_cut(&cur_g, &cur_a, &cur_b)?;
            if cut.len() < 2 {
                // cleaning needs a positive floor; report the smallest
                // separator of the original instance instead
                ledger.branches.push("separator-small-cut".into());
                let separator = minimum_vertex_cut(g, &a, &b)?;
                let within = BigUint::from(separator.len()) <= k_top;
                return Ok(RecursiveMenger {
                    result: InducedMengerResult::Separator(SeparatorWithBound {
                        separator,
                        claimed_bound: k_top.to_string(),
                        within_bound: within,
                    }),
                    ledger,
                });
            }
            let step = cleaning_step(&cur_g, &cur_lambda, &cur_a, &cur_b, cut.len() - 1)?;
            ledger.cleanings += 1;
            ledger.branches.push("clean".into());
            to_orig = step.to_orig.iter().map(|&v| to_orig[v]).collect();
            cur_g = step.h;
            cur_lambda = step.partition;
            cur_a = step.a_h;
            cur_b = step.b_h;
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeDependentMenger {
    pub result: InducedMengerResult,
    pub ledger: RecursionLedger,
    /// Achieved star-partition part count, standing in for the class
    /// constant the bound formula expects.
    pub mu: usize,
    pub max_degree: usize,
    /// (max_degree+1)^mu * (2mu+1)^(4mu^2+1) as a decimal string.
    pub degree_bound: String,
    pub t: usize,
}

/// Star-partitions the edges, classifies the parts, and runs the
/// cluttered-part recursion; the ledger reports the degree-driven bound
/// with the achieved part count.
pub fn degree_dependent_menger(
    g: &Graph,
    t: usize,
    a: &[Vertex],
    b: &[Vertex],
    k: usize,
    partition: Option<EdgePartition>,
    budget: usize,
    force_clean: bool,
) -> Result<DegreeDependentMenger> {
    let ep = match partition {
        Some(p) => {
            let mut ep = classify_parts(g, p.parts)?;
            if p.s > 0 {
                if ep.s > p.s {
                    return Err(validation("declared size bound below an actual component"));
                }
                ep.s = p.s;
            }
            ep
        }
        None => star_edge_partition(g)?,
    };
    let mu = ep.parts.len();
    let dmax = g.max_degree();
    let rec = recursive_induced_menger(g, &ep, a, b, k, budget, force_clean)?;
    Ok(DegreeDependentMenger {
        result: rec.result,
        ledger: rec.ledger,
        mu,
        max_degree: dmax,
        degree_bound: g_bound(dmax + 1, mu, mu).to_string(),
        t,
    })
}

/// Separator branch of the threshold dichotomy: rounded separator plus the
/// fractional-cover claim against 8 log^2(2n) f.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AuxSeparator {
    pub separator: Vec<Vertex>,
    pub certificate: AbSeparatorCertificate,
    pub lp_objective: f64,
    pub fcov_claim: BoundCheck,
}

/// Dense branch: a sampled low-degree subgraph through A and B whose every
/// A-B separator needs a large family cover.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AuxDense {
    pub h: Graph,
    /// H vertex id to input vertex id, ascending.
    pub vertices: Vec<Vertex>,
    /// Surviving terminals, in input ids.
    pub a_h: Vec<Vertex>,
    pub b_h: Vec<Vertex>,
    pub packing: PathPacking,
    pub max_degree: usize,
    pub degree_bound: f64,
    pub degree_ok: bool,
    /// Every A_H-B_H separator needs at least this much family cover.
    pub cover_floor: f64,
    /// Exhaustive audit of the floor; only run on small instances.
    pub cover_floor_audited: Option<bool>,
    pub lp_objective: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum AuxMengerOutcome {
    Separator(AuxSeparator),
    Dense(AuxDense),
}

const AUX_AUDIT_MAX: usize = 14;

/// Exact minimum number of family sets whose union separates A from B in
/// H: a cover of any separator yields a separating union and vice versa.
fn min_separating_cover(
    h: &Graph,
    fam: &LayeredFamily,
    vertices: &[Vertex],
    a_loc: &[Vertex],
    b_loc: &[Vertex],
) -> usize {
    let nf = fam.len();
    let mut inv = vec![usize::MAX; vertices.iter().copied().max().unwrap_or(0) + 1];
    for (new, &old) in vertices.iter().enumerate() {
        inv[old] = new;
    }
    let local_sets: Vec<Vec<Vertex>> = (0..nf)
        .map(|fi| {
            fam.set(fi)
                .iter()
                .filter(|&&v| v < inv.len() && inv[v] != usize::MAX)
                .map(|&v| inv[v])
                .collect()
        })
        .collect();
    let mut best = usize::MAX;
    for mask in 0u64..(1u64 << nf) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut union: Vec<Vertex> = Vec::new();
        for (fi, ls) in local_sets.iter().enumerate() {
            if mask >> fi & 1 == 1 {
                union.extend(ls.iter().copied());
            }
        }
        if is_separator(h, a_loc, b_loc, &union) {
            best = size;
        }
    }
    best
}

/// Threshold dichotomy on the A-B separator LP: optimum at most f rounds
/// to a separator with small fractional cover; otherwise path sampling
/// yields a low-degree subgraph whose separators all need cover >= f/6.
pub fn aux_class_menger(
    g: &Graph,
    fam: &LayeredFamily,
    a: &[Vertex],
    b: &[Vertex],
    f: f64,
    d: usize,
    branch: Branch,
    cfg: &LpConfig,
    seed: u64,
) -> Result<AuxMengerOutcome> {
    if f <= 0.0 {
        return Err(validation("the threshold f must be positive"));
    }
    let n = g.n();
    let l2n = (2.0 * n as f64).log2();
    let sol = solve_ab_lp(g, fam, a, b, cfg)?;
    let f_opt = sol.objective;
    let take_separator = match branch {
        Branch::Rounding => true,
        Branch::Sampling => false,
        Branch::Auto => f_opt <= f + cfg.cert_tol,
    };
    if take_separator {
        let cert = round_ab_separator(g, fam, a, b, &sol, cfg)?;
        let fcov_claim =
            BoundCheck::new("fcov <= 8 log^2(2n) f", 8.0 * l2n * l2n * f, cert.fcov);
        return Ok(AuxMengerOutcome::Separator(AuxSeparator {
            separator: cert.separator.clone(),
            certificate: cert,
            lp_objective: f_opt,
            fcov_claim,
        }));
    }

    if sol.mode != Mode::Exact {
        return Err(validation("the dense branch needs the exact solver's path dual"));
    }
    let rsol = restrict_dual_to_upward_minimal(g, fam, a, b, &sol, DEFAULT_MINIMALITY_BUDGET)?;
    let ell = (l2n.ceil() as usize).max(1);
    let packing = sample_path_multiset(g, fam, a, b, &rsol, ell, seed)?;
    let mut verts: BTreeSet<Vertex> = BTreeSet::new();
    for p in &packing.paths {
        verts.extend(p.iter().copied());
    }
    let vertices: Vec<Vertex> = verts.iter().copied().collect();
    let (h, _) = g.induced_subgraph(&vertices)?;
    let a_h: Vec<Vertex> = a.iter().copied().filter(|v| verts.contains(v)).collect();
    let b_h: Vec<Vertex> = b.iter().copied().filter(|v| verts.contains(v)).collect();
    let max_degree = h.max_degree();
    let degree_bound = 12.0 * l2n * l2n + 4.0 * d as f64;
    let degree_ok = (max_degree as f64) <= degree_bound + 1e-9;
    if !degree_ok {
        return Err(validation(format!(
            "sampled subgraph degree {max_degree} exceeds 12 log^2(2n) + 4d = {degree_bound:.3}; \
             is the family {d}-witnessing?"
        )));
    }
    let cover_floor = f.min(f_opt) / 6.0;
    let cover_floor_audited = if n <= AUX_AUDIT_MAX && fam.len() <= AUX_AUDIT_MAX {
        let mut inv = vec![usize::MAX; n];
        for (new, &old) in vertices.iter().enumerate() {
            inv[old] = new;
        }
        let a_loc: Vec<Vertex> = a_h.iter().map(|&v| inv[v]).collect();
        let b_loc: Vec<Vertex> = b_h.iter().map(|&v| inv[v]).collect();
        let best = min_separating_cover(&h, fam, &vertices, &a_loc, &b_loc);
        Some((best as f64) >= cover_floor - 1e-9)
    } else {
        None
    };
    Ok(AuxMengerOutcome::Dense(AuxDense {
        h,
        vertices,
        a_h,
        b_h,
        packing,
        max_degree,
        degree_bound,
        degree_ok,
        cover_floor,
        cover_floor_audited,
        lp_objective: f_opt,
    }))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PackingCertificate {
    pub kind: String,
    pub k: usize,
    pub paths: Vec<Vec<Vertex>>,
    pub quotient_paths: Vec<Vec<usize>>,
    pub verified: bool,
}

/// Separator whose vertices all sit close to few centers: removing it
/// separates A from B, every vertex reaches a center within the cover
/// radius, and the independence of the separator at double that radius
/// stays within the center count.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScatteredSeparatorCertificate {
    pub kind: String,
    pub separator: Vec<Vertex>,
    pub centers: Vec<Vertex>,
    pub quotient_separator: Vec<usize>,
    pub cover_sets: Vec<usize>,
    pub separation_verified: bool,
    pub cover_radius_vertices: usize,
    pub cover_radius_verified: bool,
    pub independence_radius_edges: usize,
    /// Exact independence number when small enough to settle.
    pub alpha: Option<usize>,
    pub alpha_witness: Vec<Vertex>,
    pub alpha_within_centers: bool,
    pub cov_claim: BoundCheck,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum MengerPipelineOutcome {
    Packing(PackingCertificate),
    Separator(ScatteredSeparatorCertificate),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MengerPipelineResult {
    pub outcome: MengerPipelineOutcome,
    pub branch: String,
    pub k: usize,
    pub quotient_n: usize,
    pub part_count: usize,
    pub degeneracy: usize,
    pub thickness: usize,
    /// Achieved star-partition part count on the quotient.
    pub mu: usize,
    /// The degree-driven bound with achieved parameters, decimal.
    pub g_bound: String,
    /// 6 k g + 1, saturating far below infinity so artifacts stay finite.
    pub f_threshold: f64,
    pub aux_lp_objective: f64,
}

fn lift_separator_outcome(
    g: &Graph,
    a: &[Vertex],
    b: &[Vertex],
    famq: &LayeredFamily,
    qmap: &QuotientMap,
    aux: AuxSeparator,
    k: usize,
    g_tilde: &BigUint,
) -> Result<ScatteredSeparatorCertificate> {
    let nq = qmap.blocks.len();
    let l2nq = (2.0 * nq as f64).log2();
    let cover_sets = aux.certificate.cover.set_indices.clone();
    let mut expanded: BTreeSet<usize> = BTreeSet::new();
    for &fi in &cover_sets {
        expanded.extend(famq.set(fi).iter().copied());
    }
    let quotient_separator: Vec<usize> = expanded.iter().copied().collect();
    let separator = qmap.lift_set(&quotient_separator);
    let separation_verified = is_separator(g, a, b, &separator);
    if !separation_verified {
        return Err(internal("lifted separator does not separate"));
    }
    let centers: Vec<Vertex> = sorted_dedup(
        &aux.certificate
            .cover
            .centers
            .iter()
            .map(|&c| qmap.representative(c))
            .collect::<Vec<_>>(),
    );
    let cover_radius_vertices = 8 * (l2nq.ceil() as usize).max(1);
    let cover_radius_verified = if separator.is_empty() {
        true
    } else if centers.is_empty() {
        false
    } else {
        let dist = g.hop_distances(&centers);
        separator
            .iter()
            .all(|&v| dist[v] != UNREACHABLE && dist[v] <= cover_radius_vertices - 1)
    };
    if !cover_radius_verified {
        return Err(internal("a separator vertex is too far from every center"));
    }
    let independence_radius_edges = 16 * (((2.0 * g.n() as f64).log2()).ceil() as usize).max(1);
    let (alpha, alpha_witness, alpha_within_centers) =
        match distance_r_independence(g, &separator, independence_radius_edges)? {
            DistanceIndependence::Exact { alpha, witness } => {
                (Some(alpha), witness.clone(), alpha <= centers.len())
            }
            DistanceIndependence::Inconclusive { lower_bound, witness } => {
                (None, witness, lower_bound <= centers.len())
            }
        };
    let cov_claim = BoundCheck::new(
        "cov <= 50 k g log^3(2n')",
        (50.0 * k as f64 * big_to_f64(g_tilde) * l2nq.powi(3)).min(1e300),
        cover_sets.len() as f64,
    );
    Ok(ScatteredSeparatorCertificate {
        kind: "menger-separator".into(),
        separator,
        centers,
        quotient_separator,
        cover_sets,
        separation_verified,
        cover_radius_vertices,
        cover_radius_verified,
        independence_radius_edges,
        alpha,
        alpha_witness,
        alpha_within_centers,
        cov_claim,
    })
}

/// End-to-end coarse Menger: contract the radius-4 partition, run the
/// threshold dichotomy on the quotient over its degeneracy family, then
/// either lift an anticomplete packing found inside the dense subgraph or
/// lift the covered separator with one center representative per cover
/// set. `branch` overrides the dichotomy, which otherwise compares
/// against a threshold too large to ever sample.
pub fn coarse_menger_pipeline(
    g: &Graph,
    t: usize,
    a: &[Vertex],
    b: &[Vertex],
    k: usize,
    branch: Branch,
    budget: usize,
    cfg: &LpConfig,
    seed: u64,
) -> Result<MengerPipelineResult> {
    if g.n() == 0 {
        return Err(validation("graph has no vertices"));
    }
    if k == 0 {
        return Err(validation("requested path count must be positive"));
    }
    let a = sorted_dedup(a);
    let b = sorted_dedup(b);
    if a.is_empty() || b.is_empty() {
        return Err(validation("both terminal sets must be nonempty"));
    }
    for &v in a.iter().chain(b.iter()) {
        if v >= g.n() {
            return Err(validation(format!("terminal {v} out of range")));
        }
    }

    let rp = greedy_four_radius_partition(g)?;
    let (gq, qmap) = quotient_by_components(g, &rp.parts)?;
    let a_q = blocks_meeting(&qmap, &a);
    let b_q = blocks_meeting(&qmap, &b);
    let (d, _) = degeneracy(&gq);
    let layering = degeneracy_layering(&gq, d)?;
    let famq = build_layered_family(&gq, layering)?;
    let nq = gq.n();
    let l2nq = (2.0 * nq as f64).log2();
    let mu = star_edge_partition(&gq)?.parts.len();
    let delta_plus = (12.0 * l2nq * l2nq + 4.0 * d as f64 + 1.0).ceil() as usize;
    let g_tilde = g_bound(delta_plus, mu, mu);
    let f_threshold =
        (6.0 * k as f64 * big_to_f64(&g_tilde) + 1.0).min(1e300);

    let aux = aux_class_menger(&gq, &famq, &a_q, &b_q, f_threshold, d, branch, cfg, seed)?;
    let (outcome, branch_str, lp_obj) = match aux {
        AuxMengerOutcome::Separator(aux_sep) => {
            let lp = aux_sep.lp_objective;
            let cert = lift_separator_outcome(g, &a, &b, &famq, &qmap, aux_sep, k, &g_tilde)?;
            (MengerPipelineOutcome::Separator(cert), "separator".to_string(), lp)
        }
        AuxMengerOutcome::Dense(dx) => {
            let lp = dx.lp_objective;
            let mut inv = vec![usize::MAX; nq];
            for (new, &old) in dx.vertices.iter().enumerate() {
                inv[old] = new;
            }
            let a_loc: Vec<Vertex> = dx.a_h.iter().map(|&v| inv[v]).collect();
            let b_loc: Vec<Vertex> = dx.b_h.iter().map(|&v| inv[v]).collect();
            let ddm =
                degree_dependent_menger(&dx.h, t, &a_loc, &b_loc, k, None, budget, true)?;
            match ddm.result {
                InducedMengerResult::Packing(p) => {
                    let quotient_paths: Vec<Vec<usize>> = p
                        .paths
                        .iter()
                        .map(|path| path.iter().map(|&v| dx.vertices[v]).collect())
                        .collect();
                    let mut lifted = Vec::with_capacity(quotient_paths.len());
                    for qp in &quotient_paths {
                        lifted.push(lift_quotient_path(g, &qmap, qp, &a, &b)?);
                    }
                    let packing = AnticompletePacking { paths: lifted };
                    verify_anticomplete_packing(g, &a, &b, &packing, k)?;
                    (
                        MengerPipelineOutcome::Packing(PackingCertificate {
                            kind: "menger-packing".into(),
                            k,
                            paths: packing.paths,
                            quotient_paths,
                            verified: true,
                        }),
                        "packing".to_string(),
                        lp,
                    )
                }
                InducedMengerResult::Separator(_) => {
                    // the dense subgraph holds no packing, so fall back to
                    // the covered-separator branch on the quotient
                    let aux2 = aux_class_menger(
                        &gq,
                        &famq,
                        &a_q,
                        &b_q,
                        f_threshold,
                        d,
                        Branch::Rounding,
                        cfg,
                        seed,
                    )?;
                    let AuxMengerOutcome::Separator(aux_sep) = aux2 else {
                        return Err(internal("forced rounding did not yield a separator"));
                    };
                    let cert =
                        lift_separator_outcome(g, &a, &b, &famq, &qmap, aux_sep, k, &g_tilde)?;
                    (
                        MengerPipelineOutcome::Separator(cert),
                        "separator-fallback".to_string(),
                        lp,
                    )
                }
            }
        }
    };

    Ok(MengerPipelineResult {
        outcome,
        branch: branch_str,
        k,
        quotient_n: nq,
        part_count: rp.part_count(),
        degeneracy: d,
        thickness: famq.thickness(),
        mu,
        g_bound: g_tilde.to_string(),
        f_threshold,
        aux_lp_objective: lp_obj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::OrderedPartition;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn singleton_family(g: &Graph) -> LayeredFamily {
        let part = OrderedPartition::new(vec![(0..g.n()).collect()], g.n()).unwrap();
        build_layered_family(g, part).unwrap()
    }

    #[test]
    fn bound_matches_hand_values() {
        assert_eq!(g_bound(2, 1, 1), BigUint::from(486u32));
        assert_eq!(g_bound(3, 0, 1), BigUint::from(243u32));
        assert_eq!(g_bound(7, 0, 0), BigUint::from(1u32));
        let ell = 2usize;
        assert_eq!(g_bound(9, 0, ell), BigUint::from(5u32).pow(17));
    }

    #[test]
    fn max_flow_on_a_path() {
        let g = path(4);
        let one = menger_max_flow(&g, &[0], &[3], 1).unwrap();
        let p = one.paths.unwrap();
        assert_eq!(p, vec![vec![0, 1, 2, 3]]);
        let two = menger_max_flow(&g, &[0], &[3], 2).unwrap();
        let sep = two.separator.unwrap();
        assert_eq!(sep.len(), 1);
        assert!(is_separator(&g, &[0], &[3], &sep));
    }

    #[test]
    fn max_flow_on_a_cycle() {
        let g = cycle(4);
        let res = menger_max_flow(&g, &[0, 1], &[2, 3], 2).unwrap();
        let paths = res.paths.unwrap();
        assert_eq!(paths.len(), 2);
        let all: BTreeSet<Vertex> = paths.iter().flatten().copied().collect();
        assert_eq!(all.len(), paths.iter().map(|p| p.len()).sum::<usize>());
        // fully disjoint paths from a single vertex are capped at one
        let res = menger_max_flow(&g, &[0], &[2], 2).unwrap();
        assert_eq!(res.separator.unwrap().len(), 1);
    }

    #[test]
    fn shared_terminal_is_a_one_vertex_path() {
        let g = path(3);
        let res = menger_max_flow(&g, &[1], &[1], 1).unwrap();
        assert_eq!(res.paths.unwrap(), vec![vec![1]]);
        // the shared vertex blocks every route, so the flow stays at one
        let res = menger_max_flow(&g, &[0, 1], &[1, 2], 2).unwrap();
        assert_eq!(res.separator.unwrap(), vec![1]);
    }

    fn brute_min_separator(g: &Graph, a: &[Vertex], b: &[Vertex]) -> usize {
        let n = g.n();
        let mut best = n;
        for mask in 0u32..(1 << n) {
            let sep: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if sep.len() < best && is_separator(g, a, b, &sep) {
                best = sep.len();
            }
        }
        best
    }

    #[test]
    fn flow_value_equals_minimum_separator_exhaustively() {
        // all graphs on 4 vertices, several terminal choices
        for emask in 0u32..(1 << 6) {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| emask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            for (a, b) in [(vec![0], vec![3]), (vec![0, 1], vec![2, 3]), (vec![0], vec![1, 2, 3])]
            {
                let res = menger_max_flow(&g, &a, &b, 5).unwrap();
                let flow = res.flow;
                assert_eq!(flow, brute_min_separator(&g, &a, &b), "emask={emask} a={a:?}");
            }
        }
    }

    #[test]
    fn brute_force_packs_two_components() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let found =
            brute_force_anticomplete_packing(&g, &[0, 3], &[2, 5], 2, 10_000).unwrap().unwrap();
        verify_anticomplete_packing(&g, &[0, 3], &[2, 5], &found, 2).unwrap();
    }

    #[test]
    fn brute_force_sees_absence_on_a_path() {
        let g = path(4);
        assert!(brute_force_anticomplete_packing(&g, &[0], &[3], 2, 10_000).unwrap().is_none());
    }

    #[test]
    fn brute_force_trivial_cases() {
        let g = path(3);
        let empty = brute_force_anticomplete_packing(&g, &[0], &[2], 0, 10).unwrap().unwrap();
        assert!(empty.paths.is_empty());
        let shared =
            brute_force_anticomplete_packing(&g, &[1], &[1], 1, 10).unwrap().unwrap();
        assert_eq!(shared.paths, vec![vec![1]]);
    }

    #[test]
    fn brute_force_reports_budget_exhaustion() {
        let g = cycle(6);
        let err = brute_force_anticomplete_packing(&g, &[0], &[3], 2, 1).unwrap_err();
        assert!(matches!(err, Error::BudgetExhausted(_)), "{err:?}");
    }

    /// Three disjoint A-B routes with a cluttered star at vertex 4.
    fn cleaning_fixture() -> (Graph, EdgePartition, Vec<Vertex>, Vec<Vertex>) {
        let g = Graph::from_edges(
            10,
            &[
                (0, 3),
                (3, 7),
                (1, 4),
                (4, 8),
                (2, 5),
                (5, 9),
                (4, 3),
                (4, 5),
            ],
        )
        .unwrap();
        let parts = vec![
            vec![(4, 1), (4, 8), (4, 3), (4, 5)],
            vec![(0, 3), (3, 7), (2, 5), (5, 9)],
        ];
        let ep = classify_parts(&g, parts).unwrap();
        assert!(!ep.clean[0] && ep.clean[1]);
        (g, ep, vec![0, 1, 2], vec![7, 8, 9])
    }

    #[test]
    fn cleaning_contracts_the_star_part() {
        let (g, ep, a, b) = cleaning_fixture();
        let step = cleaning_step(&g, &ep, &a, &b, 2).unwrap();
        assert_eq!(step.ledger.clean_before, 1);
        assert_eq!(step.ledger.clean_after, 2);
        assert_eq!(step.ledger.part_count, 2);
        assert_eq!(step.ledger.s, 5);
        assert_eq!(step.ledger.cluttered_index, 0);
        assert!(step.ledger.flow_verified);
        assert_eq!(step.partition.s, 5);
        assert!(step.partition.clean.iter().all(|&c| c));
        assert_eq!(step.to_orig, vec![1, 4, 8]);
        for p in &step.paths {
            assert!(g.is_induced_path(p));
        }
    }

    #[test]
    fn cleaning_rejects_clean_partitions_and_small_floors() {
        let g = path(4);
        let ep = classify_parts(&g, vec![vec![(0, 1), (2, 3)], vec![(1, 2)]]).unwrap();
        assert!(ep.clean.iter().all(|&c| c));
        let err = cleaning_step(&g, &ep, &[0], &[3], 1).unwrap_err();
        assert!(err.to_string().contains("clean"), "{err}");

        let (g, ep, a, b) = cleaning_fixture();
        let err = cleaning_step(&g, &ep, &a, &b, 3).unwrap_err();
        assert!(err.to_string().contains("separator"), "{err}");
    }

    #[test]
    fn cleaning_invariants_on_random_star_partitions() {
        let mut rng = ChaCha20Rng::seed_from_u64(42);
        let mut ran = 0;
        for _ in 0..40 {
            let n = 8 + (rng.gen::<usize>() % 5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.25) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let ep = star_edge_partition(&g).unwrap();
            if ep.cluttered_count() == 0 {
                continue;
            }
            let a = vec![0, 1];
            let b = vec![n - 2, n - 1];
            let cut = minimum_vertex_cut(&g, &a, &b).unwrap();
            if cut.len() < 2 {
                continue;
            }
            let f = cut.len() - 1;
            let step = cleaning_step(&g, &ep, &a, &b, f).unwrap();
            ran += 1;
            assert!(step.ledger.clean_after > step.ledger.clean_before);
            assert_eq!(step.partition.parts.len(), ep.parts.len());
            assert!(step.partition.s <= ep.s);
            assert_eq!(step.paths.len(), f / ep.s + 1);
            for p in &step.paths {
                assert!(g.is_induced_path(p));
            }
        }
        assert!(ran >= 3, "only {ran} cleaning runs exercised");
    }

    #[test]
    fn recursion_base_case_packs_a_path() {
        let g = path(4);
        let ep = classify_parts(&g, vec![vec![(0, 1), (2, 3)], vec![(1, 2)]]).unwrap();
        let rec = recursive_induced_menger(&g, &ep, &[0], &[3], 1, 10_000, false).unwrap();
        let InducedMengerResult::Packing(p) = rec.result else { panic!("expected packing") };
        assert_eq!(p.paths, vec![vec![0, 1, 2, 3]]);
        assert_eq!(rec.ledger.base_max_degree, Some(2));
        assert_eq!(rec.ledger.branches, vec!["base-packing"]);
    }

    #[test]
    fn recursion_defaults_to_the_separator_branch() {
        let (g, ep, a, b) = cleaning_fixture();
        let rec = recursive_induced_menger(&g, &ep, &a, &b, 1, 10_000, false).unwrap();
        let InducedMengerResult::Separator(s) = rec.result else { panic!("expected separator") };
        assert!(s.within_bound);
        assert!(is_separator(&g, &a, &b, &s.separator));
        assert_eq!(rec.ledger.branches, vec!["separator"]);
    }

    #[test]
    fn forced_cleaning_reaches_the_base_case() {
        let (g, ep, a, b) = cleaning_fixture();
        let rec = recursive_induced_menger(&g, &ep, &a, &b, 1, 100_000, true).unwrap();
        assert_eq!(rec.ledger.cleanings, 1);
        let InducedMengerResult::Packing(p) = rec.result else { panic!("expected packing") };
        verify_anticomplete_packing(&g, &a, &b, &p, 1).unwrap();
    }

    #[test]
    fn degree_dependent_branches() {
        // two disjoint corridors star-partition into clean parts
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let forced =
            degree_dependent_menger(&g, 2, &[0, 3], &[2, 5], 2, None, 100_000, true).unwrap();
        let InducedMengerResult::Packing(p) = forced.result else { panic!("expected packing") };
        verify_anticomplete_packing(&g, &[0, 3], &[2, 5], &p, 2).unwrap();
        assert_eq!(forced.degree_bound, g_bound(3, forced.mu, forced.mu).to_string());

        // a spider's central star is cluttered, so the default run stops
        // at the bound comparison and hands back a separator
        let spider =
            Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let default =
            degree_dependent_menger(&spider, 2, &[2], &[4], 1, None, 100_000, false).unwrap();
        let InducedMengerResult::Separator(s) = default.result else {
            panic!("expected separator")
        };
        assert!(s.within_bound);
        assert_eq!(s.separator.len(), 1);
        assert!(is_separator(&spider, &[2], &[4], &s.separator));
        assert_eq!(default.ledger.branches, vec!["separator"]);
    }

    #[test]
    fn aux_disconnected_terminals_round_to_an_empty_separator() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let fam = singleton_family(&g);
        let out = aux_class_menger(
            &g,
            &fam,
            &[0],
            &[3],
            1.0,
            1,
            Branch::Auto,
            &LpConfig::default(),
            0,
        )
        .unwrap();
        let AuxMengerOutcome::Separator(s) = out else { panic!("expected separator") };
        assert!(s.separator.is_empty());
        assert_eq!(s.lp_objective, 0.0);
        assert!(s.fcov_claim.satisfied);
    }

    #[test]
    fn aux_separator_branch_cuts_a_path() {
        let g = path(3);
        let fam = singleton_family(&g);
        let out = aux_class_menger(
            &g,
            &fam,
            &[0],
            &[2],
            1.5,
            1,
            Branch::Auto,
            &LpConfig::default(),
            0,
        )
        .unwrap();
        let AuxMengerOutcome::Separator(s) = out else { panic!("expected separator") };
        assert_eq!(s.separator.len(), 1);
        assert!(s.certificate.separation_verified);
        assert!(s.fcov_claim.satisfied);
    }

    /// Two terminals joined by three internally disjoint 3-edge paths.
    fn theta() -> Graph {
        Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 7), (0, 3), (3, 4), (4, 7), (0, 5), (5, 6), (6, 7)],
        )
        .unwrap()
    }

    #[test]
    fn aux_dense_branch_samples_a_bounded_subgraph() {
        let g = theta();
        let fam = singleton_family(&g);
        let out = aux_class_menger(
            &g,
            &fam,
            &[0],
            &[7],
            0.5,
            2,
            Branch::Auto,
            &LpConfig::default(),
            3,
        )
        .unwrap();
        let AuxMengerOutcome::Dense(dx) = out else { panic!("expected dense branch") };
        assert!(dx.lp_objective > 0.5);
        assert!(dx.degree_ok);
        assert!(dx.vertices.contains(&0) && dx.vertices.contains(&7));
        assert_eq!(dx.cover_floor_audited, Some(true));
        assert!(!dx.packing.paths.is_empty());
    }

    /// Two far-apart corridors joining A to B.
    fn corridors() -> (Graph, Vec<Vertex>, Vec<Vertex>) {
        let mut edges: Vec<(usize, usize)> = (1..6).map(|v| (v - 1, v)).collect();
        edges.extend((7..12).map(|v| (v - 1, v)));
        (Graph::from_edges(12, &edges).unwrap(), vec![0, 6], vec![5, 11])
    }

    /// Two blobs of terminals joined through a single middle vertex.
    fn bottleneck() -> (Graph, Vec<Vertex>, Vec<Vertex>) {
        let g = Graph::from_edges(
            9,
            &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (5, 8)],
        )
        .unwrap();
        (g, vec![0, 1, 2], vec![6, 7, 8])
    }

    #[test]
    fn pipeline_lifts_a_packing_from_the_corridors() {
        let (g, a, b) = corridors();
        let out = coarse_menger_pipeline(
            &g,
            2,
            &a,
            &b,
            2,
            Branch::Sampling,
            100_000,
            &LpConfig::default(),
            7,
        )
        .unwrap();
        assert_eq!(out.branch, "packing");
        let MengerPipelineOutcome::Packing(p) = out.outcome else { panic!("expected packing") };
        assert!(p.verified);
        assert_eq!(p.paths.len(), 2);
        let packing = AnticompletePacking { paths: p.paths.clone() };
        verify_anticomplete_packing(&g, &a, &b, &packing, 2).unwrap();
    }

    #[test]
    fn pipeline_covers_the_bottleneck_with_a_scattered_separator() {
        let (g, a, b) = bottleneck();
        let out = coarse_menger_pipeline(
            &g,
            2,
            &a,
            &b,
            2,
            Branch::Auto,
            100_000,
            &LpConfig::default(),
            0,
        )
        .unwrap();
        assert_eq!(out.branch, "separator");
        let MengerPipelineOutcome::Separator(c) = out.outcome else {
            panic!("expected separator")
        };
        assert!(c.separation_verified);
        assert!(c.cover_radius_verified);
        assert!(c.alpha_within_centers);
        assert!(c.alpha.is_some());
        assert!(!c.separator.is_empty());
        assert!(c.cov_claim.satisfied);
    }

    #[test]
    fn pipeline_disconnected_terminals_give_an_empty_separator() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let out = coarse_menger_pipeline(
            &g,
            2,
            &[0],
            &[5],
            1,
            Branch::Auto,
            100_000,
            &LpConfig::default(),
            0,
        )
        .unwrap();
        let MengerPipelineOutcome::Separator(c) = out.outcome else {
            panic!("expected separator")
        };
        assert!(c.separator.is_empty());
        assert!(c.centers.is_empty());
        assert_eq!(c.alpha, Some(0));
        assert!(c.alpha_within_centers);
    }

    #[test]
    fn random_flow_instances_match_brute_force() {
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        for _ in 0..300 {
            let n = 3 + (rng.gen::<usize>() % 4);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let a = vec![0];
            let b = vec![n - 1];
            let res = menger_max_flow(&g, &a, &b, n + 1).unwrap();
            assert_eq!(res.flow, brute_min_separator(&g, &a, &b));
        }
    }
}
