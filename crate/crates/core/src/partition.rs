//! Radius-bounded vertex partitions with cover witnesses, BFS layer
//! splits of connected sets, extraction of complete-bipartite induced
//! minors, and star edge partitions with clean/cluttered flags.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{internal, validation, Result};
use crate::graph::{sorted_dedup, Graph, Vertex, UNREACHABLE};

/// Scattering gap for radius-partition centers: no path on at most 7
/// vertices between two centers, so their radius-4 balls stay disjoint.
const CENTER_GAP_EDGES: usize = 7;

/// Scattering gap when assembling the bipartite minor: no path of at
/// most 4 edges between the chosen anchor vertices.
const ANCHOR_GAP_EDGES: usize = 5;

/// One connected component of a part together with the vertex certifying
/// its coverability: every component vertex reaches the center by a path
/// of at most `radius_vertices` vertices, measured in the whole graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverWitness {
    pub component: Vec<Vertex>,
    pub center: Vertex,
    pub radius_vertices: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RadiusPartition {
    pub parts: Vec<Vec<Vertex>>,
    /// Per part, one witness per connected component of g[part], in
    /// component discovery order.
    pub witnesses: Vec<Vec<CoverWitness>>,
}

impl RadiusPartition {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Checks that the parts partition `ground` and every witness holds:
    /// component vertices within `radius_vertices` (at most 4) of the
    /// center, distances taken in g rather than in the part.
    pub fn validate(&self, g: &Graph, ground: &[Vertex]) -> Result<()> {
        let ground = sorted_dedup(ground);
        let mut all: Vec<Vertex> = self.parts.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(validation("parts overlap"));
        }
        if all != ground {
            return Err(validation("parts do not cover the ground set"));
        }
        if self.witnesses.len() != self.parts.len() {
            return Err(validation("witness list does not match parts"));
        }
        for (part, ws) in self.parts.iter().zip(&self.witnesses) {
            let comps = g.components_within(part);
            if comps.len() != ws.len() {
                return Err(validation("witness count does not match components"));
            }
            for (comp, w) in comps.iter().zip(ws) {
                if comp != &w.component {
                    return Err(validation("witness component mismatch"));
                }
                if w.radius_vertices > 4 {
                    return Err(validation("cover radius exceeds 4 vertices"));
                }
                let dist = g.hop_distances(&[w.center]);
                for &v in comp {
                    if dist[v] == UNREACHABLE || dist[v] + 1 > w.radius_vertices {
                        return Err(validation(format!(
                            "vertex {v} not within {} vertices of center {}",
                            w.radius_vertices, w.center
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Greedy radius-4 partition of a vertex subset. Each sweep picks a
/// maximal scattered set of centers (pairwise no path on at most 7
/// vertices), most-covering first, and assigns every subset vertex within
/// 3 edges of a center to that center; leftovers go to later sweeps.
pub fn greedy_radius_partition_of(g: &Graph, s: &[Vertex]) -> Result<RadiusPartition> {
    let s = sorted_dedup(s);
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(validation(format!("vertex {v} out of range")));
    }
    let mut remaining: BTreeSet<Vertex> = s.into_iter().collect();
    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    let mut witnesses: Vec<Vec<CoverWitness>> = Vec::new();
    while !remaining.is_empty() {
        let mut centers: Vec<(Vertex, Vec<usize>)> = Vec::new();
        let mut covered: BTreeSet<Vertex> = BTreeSet::new();
        loop {
            // Most new coverage wins; ties prefer the tighter ball, then
            // the smaller vertex.
            let mut best: Option<(usize, usize, Vertex, Vec<usize>)> = None;
            for &v in &remaining {
                if centers
                    .iter()
                    .any(|(_, d)| d[v] < CENTER_GAP_EDGES)
                {
                    continue;
                }
                let d = g.hop_distances(&[v]);
                let mut gain = 0usize;
                let mut radius = 0usize;
                for &u in &remaining {
                    if !covered.contains(&u) && d[u] <= 3 {
                        gain += 1;
                        radius = radius.max(d[u]);
                    }
                }
                if best
                    .as_ref()
                    .map_or(true, |&(bg, br, _, _)| gain > bg || (gain == bg && radius < br))
                {
                    best = Some((gain, radius, v, d));
                }
            }
            let Some((_, _, c, d)) = best else { break };
            for &u in &remaining {
                if d[u] <= 3 {
                    covered.insert(u);
                }
            }
            centers.push((c, d));
        }
        if centers.is_empty() {
            return Err(internal("sweep produced no centers"));
        }
        for (c, d) in centers {
            let part: Vec<Vertex> = remaining
                .iter()
                .copied()
                .filter(|&v| d[v] <= 3)
                .collect();
            for &v in &part {
                remaining.remove(&v);
            }
            let mut ws = Vec::new();
            for comp in g.components_within(&part) {
                let radius = comp.iter().map(|&v| d[v] + 1).max().unwrap_or(1);
                if radius > 4 {
                    return Err(internal("ball assignment exceeded radius 4"));
                }
                ws.push(CoverWitness {
                    component: comp,
                    center: c,
                    radius_vertices: radius,
                });
            }
            parts.push(part);
            witnesses.push(ws);
        }
    }
    let rp = RadiusPartition { parts, witnesses };
    let ground: Vec<Vertex> = {
        let mut v: Vec<Vertex> = rp.parts.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    };
    rp.validate(g, &ground)?;
    Ok(rp)
}

pub fn greedy_four_radius_partition(g: &Graph) -> Result<RadiusPartition> {
    let all: Vec<Vertex> = (0..g.n()).collect();
    greedy_radius_partition_of(g, &all)
}

/// One candidate split of a connected set Y rooted at v0: `inner` holds
/// the BFS layers up to depth i-2, `middle` the layer at depth i-1, and
/// `outer` one component of the layer at depth i, depths taken in g[Y].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LayerSplit {
    pub layer: usize,
    pub inner: Vec<Vertex>,
    pub middle: Vec<Vertex>,
    pub outer: Vec<Vertex>,
}

fn hops_within(g: &Graph, allowed: &BTreeSet<Vertex>, v0: Vertex) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut q = VecDeque::new();
    dist[v0] = 0;
    q.push_back(v0);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if allowed.contains(&w) && dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

/// The four split conditions: inner's outside-neighbors in Y stay in
/// middle; g[inner] and g[outer] connected; every outer vertex touches
/// middle; every middle vertex touches inner.
pub fn layer_split_conditions(g: &Graph, y: &[Vertex], s: &LayerSplit) -> [bool; 4] {
    let yset: BTreeSet<Vertex> = y.iter().copied().collect();
    let inner: BTreeSet<Vertex> = s.inner.iter().copied().collect();
    let middle: BTreeSet<Vertex> = s.middle.iter().copied().collect();
    let fenced = yset.iter().all(|&v| {
        inner.contains(&v)
            || middle.contains(&v)
            || !g.neighbors(v).iter().any(|u| inner.contains(u))
    });
    let connected = g.components_within(&s.inner).len() == 1
        && g.components_within(&s.outer).len() == 1;
    let outer_touches = s
        .outer
        .iter()
        .all(|&v| g.neighbors(v).iter().any(|u| middle.contains(u)));
    let middle_touches = s
        .middle
        .iter()
        .all(|&v| g.neighbors(v).iter().any(|u| inner.contains(u)));
    [fenced, connected, outer_touches, middle_touches]
}

/// Splits a connected set Y by BFS layers from v0: every layer index
/// i >= 2 and every component of the layer-i graph yields one candidate.
/// Sets with fewer than 3 vertices yield none.
pub fn bfs_layer_split(g: &Graph, y: &[Vertex], v0: Vertex) -> Result<Vec<LayerSplit>> {
    let y = sorted_dedup(y);
    if y.binary_search(&v0).is_err() {
        return Err(validation("root vertex is not in the set"));
    }
    if g.components_within(&y).len() != 1 {
        return Err(validation("layer splitting needs a connected set"));
    }
    if y.len() < 3 {
        return Ok(Vec::new());
    }
    let yset: BTreeSet<Vertex> = y.iter().copied().collect();
    let dist = hops_within(g, &yset, v0);
    let maxd = y.iter().map(|&v| dist[v]).max().unwrap_or(0);
    let layer = |i: usize| -> Vec<Vertex> {
        y.iter().copied().filter(|&v| dist[v] == i).collect()
    };
    let mut out = Vec::new();
    for i in 2..=maxd {
        let inner: Vec<Vertex> = y.iter().copied().filter(|&v| dist[v] + 2 <= i).collect();
        let middle = layer(i - 1);
        for outer in g.components_within(&layer(i)) {
            let cand = LayerSplit {
                layer: i,
                inner: inner.clone(),
                middle: middle.clone(),
                outer,
            };
            if layer_split_conditions(g, &y, &cand).iter().any(|ok| !ok) {
                return Err(internal("layer split violated its conditions"));
            }
            out.push(cand);
        }
    }
    Ok(out)
}

/// An induced-minor model of the complete bipartite graph K_{t,t}:
/// disjoint connected branch sets with every cross pair joined by an
/// edge and no edges inside a side between distinct branch sets.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MinorModel {
    pub t: usize,
    #[serde(rename = "A")]
    pub side_a: Vec<Vec<Vertex>>,
    #[serde(rename = "B")]
    pub side_b: Vec<Vec<Vertex>>,
}

pub fn verify_minor_model(g: &Graph, model: &MinorModel, t: usize) -> bool {
    if model.t != t || model.side_a.len() != t || model.side_b.len() != t {
        return false;
    }
    let branches: Vec<&Vec<Vertex>> = model.side_a.iter().chain(&model.side_b).collect();
    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    for b in &branches {
        if b.is_empty() {
            return false;
        }
        for &v in *b {
            if v >= g.n() || !seen.insert(v) {
                return false;
            }
        }
        if g.components_within(b).len() != 1 {
            return false;
        }
    }
    let touches = |p: &[Vertex], q: &[Vertex]| -> bool {
        let qs: BTreeSet<Vertex> = q.iter().copied().collect();
        p.iter().any(|&v| g.neighbors(v).iter().any(|u| qs.contains(u)))
    };
    for a in &model.side_a {
        for b in &model.side_b {
            if !touches(a, b) {
                return false;
            }
        }
    }
    for side in [&model.side_a, &model.side_b] {
        for i in 0..t {
            for j in i + 1..t {
                if touches(&side[i], &side[j]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Attempts to build a K_{t,t} induced-minor model by repeated layer
/// splitting: t rounds each pick the candidate whose outer layer has the
/// largest greedy radius-partition estimate, then t pairwise-scattered
/// anchors in the final layer are wired to the recorded middles. Success
/// is always verified; failure is an inconclusive absence verdict.
pub fn extract_ktt_model(g: &Graph, t: usize) -> Result<Option<MinorModel>> {
    if t == 0 {
        return Err(validation("t must be at least 1"));
    }
    if t == 1 {
        let mut edges = g.edges();
        edges.sort_unstable();
        return Ok(edges.first().map(|&(u, v)| MinorModel {
            t: 1,
            side_a: vec![vec![u]],
            side_b: vec![vec![v]],
        }));
    }
    for comp in g.connected_components() {
        if let Some(model) = extract_in_component(g, &comp, t)? {
            return Ok(Some(model));
        }
    }
    Ok(None)
}

fn extract_in_component(g: &Graph, start: &[Vertex], t: usize) -> Result<Option<MinorModel>> {
    let mut current = start.to_vec();
    let mut inners: Vec<Vec<Vertex>> = Vec::new();
    let mut middles: Vec<Vec<Vertex>> = Vec::new();
    for _ in 0..t {
        if current.len() < 3 {
            return Ok(None);
        }
        let v0 = current[0];
        let cands = bfs_layer_split(g, &current, v0)?;
        let mut best: Option<(usize, LayerSplit)> = None;
        for cand in cands {
            let est = greedy_radius_partition_of(g, &cand.outer)?.part_count();
            let better = match &best {
                None => true,
                Some((be, bc)) => {
                    est > *be
                        || (est == *be && cand.outer.len() > bc.outer.len())
                        || (est == *be
                            && cand.outer.len() == bc.outer.len()
                            && cand.outer < bc.outer)
                }
            };
            if better {
                best = Some((est, cand));
            }
        }
        let Some((_, chosen)) = best else {
            return Ok(None);
        };
        inners.push(chosen.inner);
        middles.push(chosen.middle);
        current = chosen.outer;
    }

    let mut anchors: Vec<(Vertex, Vec<usize>)> = Vec::new();
    for &v in &current {
        if anchors.iter().all(|(_, d)| d[v] >= ANCHOR_GAP_EDGES) {
            anchors.push((v, g.hop_distances(&[v])));
        }
    }
    if anchors.len() < t {
        return Ok(None);
    }
    anchors.truncate(t);

    let mut side_b = Vec::with_capacity(t);
    for (u, _) in &anchors {
        let mut branch = vec![*u];
        for middle in &middles {
            let mset: BTreeSet<Vertex> = middle.iter().copied().collect();
            let link = g
                .neighbors(*u)
                .iter()
                .copied()
                .find(|v| mset.contains(v))
                .ok_or_else(|| internal("anchor lost contact with a middle layer"))?;
            branch.push(link);
        }
        side_b.push(sorted_dedup(&branch));
    }
    let model = MinorModel {
        t,
        side_a: inners,
        side_b,
    };
    if !verify_minor_model(g, &model, t) {
        return Err(internal("assembled model failed verification"));
    }
    Ok(Some(model))
}

/// An edge partition with per-part component-size bound s and
/// clean/cluttered flags: clean means the part's graph has max degree
/// at most 2.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgePartition {
    pub parts: Vec<Vec<(Vertex, Vertex)>>,
    pub clean: Vec<bool>,
    #[serde(skip)]
    pub s: usize,
}

impl EdgePartition {
    pub fn cluttered_count(&self) -> usize {
        self.clean.iter().filter(|&&c| !c).count()
    }
}

/// Validates that the parts partition E(g) exactly, then flags each part
/// clean or cluttered and records the largest component size as s.
pub fn classify_parts(g: &Graph, parts: Vec<Vec<(Vertex, Vertex)>>) -> Result<EdgePartition> {
    let mut seen: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut normalized: Vec<Vec<(Vertex, Vertex)>> = Vec::with_capacity(parts.len());
    for part in parts {
        let mut norm = Vec::with_capacity(part.len());
        for (u, v) in part {
            let e = (u.min(v), u.max(v));
            if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                return Err(validation(format!("({u},{v}) is not an edge")));
            }
            if !seen.insert(e) {
                return Err(validation(format!("edge ({},{}) repeated", e.0, e.1)));
            }
            norm.push(e);
        }
        norm.sort_unstable();
        normalized.push(norm);
    }
    if seen.len() != g.m() {
        return Err(validation("parts do not cover every edge"));
    }
    let mut clean = Vec::with_capacity(normalized.len());
    let mut s = 0usize;
    for part in &normalized {
        let mut deg: std::collections::BTreeMap<Vertex, usize> = std::collections::BTreeMap::new();
        for &(u, v) in part {
            *deg.entry(u).or_insert(0) += 1;
            *deg.entry(v).or_insert(0) += 1;
        }
        clean.push(deg.values().all(|&d| d <= 2));
        let touched: Vec<Vertex> = deg.keys().copied().collect();
        let pg = Graph::from_edges(g.n(), part)?;
        for comp in pg.components_within(&touched) {
            s = s.max(comp.len());
        }
    }
    Ok(EdgePartition {
        parts: normalized,
        clean,
        s,
    })
}

/// Greedy star partition of the edges: repeatedly take the star of the
/// max-remaining-degree vertex, opening a new part whenever the star
/// would share a vertex with the part under construction. Components of
/// every part are stars, so sizes stay below max degree + 1.
pub fn star_edge_partition(g: &Graph) -> Result<EdgePartition> {
    let mut remaining: BTreeSet<(Vertex, Vertex)> = g.edges().into_iter().collect();
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut parts: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
    let mut part: Vec<(Vertex, Vertex)> = Vec::new();
    let mut part_verts: BTreeSet<Vertex> = BTreeSet::new();
    while !remaining.is_empty() {
        let c = (0..g.n()).max_by_key(|&v| (deg[v], std::cmp::Reverse(v))).unwrap();
        let star: Vec<(Vertex, Vertex)> = remaining
            .iter()
            .copied()
            .filter(|&(u, v)| u == c || v == c)
            .collect();
        let star_verts: BTreeSet<Vertex> =
            star.iter().flat_map(|&(u, v)| [u, v]).collect();
        if !part.is_empty() && !part_verts.is_disjoint(&star_verts) {
            parts.push(std::mem::take(&mut part));
            part_verts.clear();
        }
        for &(u, v) in &star {
            remaining.remove(&(u, v));
            deg[u] -= 1;
            deg[v] -= 1;
        }
        part.extend(star);
        part_verts.extend(star_verts);
    }
    if !part.is_empty() {
        parts.push(part);
    }
    let mut ep = classify_parts(g, parts)?;
    if ep.s > g.max_degree() + 1 {
        return Err(internal("star component exceeded degree bound"));
    }
    ep.s = g.max_degree() + 1;
    Ok(ep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(Vertex, Vertex)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn grid3() -> Graph {
        let mut edges = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let v = 3 * r + c;
                if c + 1 < 3 {
                    edges.push((v, v + 1));
                }
                if r + 1 < 3 {
                    edges.push((v, v + 3));
                }
            }
        }
        Graph::from_edges(9, &edges).unwrap()
    }

    #[test]
    fn p7_is_one_part_centered_at_middle() {
        let g = path(7);
        let rp = greedy_four_radius_partition(&g).unwrap();
        assert_eq!(rp.parts, vec![vec![0, 1, 2, 3, 4, 5, 6]]);
        assert_eq!(rp.witnesses[0][0].center, 3);
        assert_eq!(rp.witnesses[0][0].radius_vertices, 4);
    }

    #[test]
    fn grid_is_one_part_centered_at_middle() {
        let g = grid3();
        let rp = greedy_four_radius_partition(&g).unwrap();
        assert_eq!(rp.part_count(), 1);
        assert_eq!(rp.witnesses[0][0].center, 4);
        assert_eq!(rp.witnesses[0][0].radius_vertices, 3);
    }

    #[test]
    fn joined_p7s_need_more_parts() {
        let g = path(22);
        let rp = greedy_four_radius_partition(&g).unwrap();
        assert!(rp.part_count() >= 2);
        let all: Vec<Vertex> = (0..22).collect();
        rp.validate(&g, &all).unwrap();
    }

    #[test]
    fn subset_partition_covers_only_the_subset() {
        let g = path(22);
        let rp = greedy_radius_partition_of(&g, &[0, 21]).unwrap();
        assert_eq!(rp.part_count(), 2);
        rp.validate(&g, &[0, 21]).unwrap();
        assert!(rp.validate(&g, &[0, 1, 21]).is_err());
    }

    #[test]
    fn validate_rejects_foreign_center() {
        let g = path(7);
        let mut rp = greedy_four_radius_partition(&g).unwrap();
        rp.witnesses[0][0].center = 0;
        let all: Vec<Vertex> = (0..7).collect();
        assert!(rp.validate(&g, &all).is_err());
    }

    #[test]
    fn p5_splits_from_an_endpoint() {
        let g = path(5);
        let y: Vec<Vertex> = (0..5).collect();
        let cands = bfs_layer_split(&g, &y, 0).unwrap();
        assert_eq!(cands.len(), 3);
        assert_eq!(cands[0].inner, vec![0]);
        assert_eq!(cands[0].middle, vec![1]);
        assert_eq!(cands[0].outer, vec![2]);
        for c in &cands {
            assert_eq!(layer_split_conditions(&g, &y, c), [true; 4]);
        }
    }

    #[test]
    fn star_from_center_has_no_splits() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let y: Vec<Vertex> = (0..5).collect();
        assert!(bfs_layer_split(&g, &y, 0).unwrap().is_empty());
    }

    #[test]
    fn c6_splits_at_two_depths() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let y: Vec<Vertex> = (0..6).collect();
        let cands = bfs_layer_split(&g, &y, 0).unwrap();
        assert_eq!(cands.len(), 3);
        assert_eq!(cands[0].middle, vec![1, 5]);
        assert_eq!(cands[0].outer, vec![2]);
        assert_eq!(cands[1].outer, vec![4]);
        assert_eq!(cands[2].outer, vec![3]);
        for c in &cands {
            assert_eq!(layer_split_conditions(&g, &y, c), [true; 4]);
        }
    }

    #[test]
    fn split_rejects_disconnected_sets() {
        let g = path(3);
        assert!(bfs_layer_split(&g, &[0, 2], 0).is_err());
    }

    #[test]
    fn tiny_sets_yield_no_splits() {
        let g = path(3);
        assert!(bfs_layer_split(&g, &[0, 1], 0).unwrap().is_empty());
    }

    /// C4 is its own K_{2,2} model: opposite corners form the sides.
    #[test]
    fn c4_model_verifies() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let model = MinorModel {
            t: 2,
            side_a: vec![vec![0], vec![2]],
            side_b: vec![vec![1], vec![3]],
        };
        assert!(verify_minor_model(&g, &model, 2));
        let adjacent_side = MinorModel {
            t: 2,
            side_a: vec![vec![0], vec![1]],
            side_b: vec![vec![2], vec![3]],
        };
        assert!(!verify_minor_model(&g, &adjacent_side, 2));
        let overlapping = MinorModel {
            t: 2,
            side_a: vec![vec![0], vec![2]],
            side_b: vec![vec![1], vec![1]],
        };
        assert!(!verify_minor_model(&g, &overlapping, 2));
        let disconnected = MinorModel {
            t: 2,
            side_a: vec![vec![0, 2], vec![1]],
            side_b: vec![vec![3], vec![3]],
        };
        assert!(!verify_minor_model(&g, &disconnected, 2));
    }

    #[test]
    fn single_edge_gives_t1_model() {
        let g = path(2);
        let model = extract_ktt_model(&g, 1).unwrap().unwrap();
        assert_eq!(model.side_a, vec![vec![0]]);
        assert_eq!(model.side_b, vec![vec![1]]);
        assert!(verify_minor_model(&g, &model, 1));
        let empty = Graph::from_edges(3, &[]).unwrap();
        assert!(extract_ktt_model(&empty, 1).unwrap().is_none());
    }

    #[test]
    fn trees_give_absence_verdicts() {
        let g = path(12);
        assert!(extract_ktt_model(&g, 2).unwrap().is_none());
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert!(extract_ktt_model(&star, 2).unwrap().is_none());
    }

    /// Two pillars feed a three-row fan whose middle row has no lateral
    /// edges, so the deepest row wins every candidate selection and its
    /// far ends anchor a K_{2,2} model.
    fn layered_fixture() -> Graph {
        let mut edges: Vec<(Vertex, Vertex)> = vec![(0, 23), (23, 24), (0, 25), (25, 26)];
        for v in 2..=8 {
            edges.push((1, v));
        }
        for v in 2..8 {
            edges.push((v, v + 1));
        }
        for v in 2..=8 {
            edges.push((v, v + 7));
        }
        for v in 9..=15 {
            edges.push((v, v + 7));
        }
        for v in 16..22 {
            edges.push((v, v + 1));
        }
        for v in [1, 2, 3, 4, 9, 10, 11, 16, 17, 18] {
            edges.push((24, v));
        }
        for v in [5, 6, 7, 8, 12, 13, 14, 15, 19, 20, 21, 22] {
            edges.push((26, v));
        }
        Graph::from_edges(27, &edges).unwrap()
    }

    #[test]
    fn layered_fixture_yields_a_k22_model() {
        let g = layered_fixture();
        let model = extract_ktt_model(&g, 2).unwrap().unwrap();
        assert!(verify_minor_model(&g, &model, 2));
        assert_eq!(model.side_a[0], vec![0, 23, 25]);
        assert_eq!(model.side_a[1], vec![1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(model.side_b[0], vec![9, 16, 24]);
        assert_eq!(model.side_b[1], vec![14, 21, 26]);
    }

    #[test]
    fn star_graph_is_one_part() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let ep = star_edge_partition(&g).unwrap();
        assert_eq!(ep.parts.len(), 1);
        assert_eq!(ep.clean, vec![false]);
        assert_eq!(ep.s, 6);
    }

    #[test]
    fn p4_stars_fit_in_two_parts() {
        let g = path(4);
        let ep = star_edge_partition(&g).unwrap();
        assert_eq!(ep.parts, vec![vec![(0, 1), (1, 2)], vec![(2, 3)]]);
        assert_eq!(ep.clean, vec![true, true]);
    }

    #[test]
    fn triangle_needs_two_parts() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let ep = star_edge_partition(&g).unwrap();
        assert_eq!(ep.parts.len(), 2);
        assert_eq!(ep.cluttered_count(), 0);
    }

    #[test]
    fn classification_flags_high_degree_parts() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ep = classify_parts(&g, vec![vec![(0, 1), (0, 2), (0, 3)]]).unwrap();
        assert_eq!(ep.clean, vec![false]);
        assert_eq!(ep.cluttered_count(), 1);
        assert_eq!(ep.s, 4);
        let split = classify_parts(&g, vec![vec![(0, 1), (0, 2)], vec![(0, 3)]]).unwrap();
        assert_eq!(split.clean, vec![true, true]);
    }

    #[test]
    fn classification_rejects_broken_partitions() {
        let g = path(4);
        assert!(classify_parts(&g, vec![vec![(0, 1), (1, 2)]]).is_err());
        assert!(classify_parts(&g, vec![vec![(0, 1), (1, 0), (1, 2), (2, 3)]]).is_err());
        assert!(classify_parts(&g, vec![vec![(0, 1), (1, 2), (2, 3), (0, 3)]]).is_err());
    }
}
