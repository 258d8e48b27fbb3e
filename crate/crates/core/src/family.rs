//! Layered set families over an ordered vertex partition.
//!
//! Cross-part edges are oriented from higher part index to lower. Vertices
//! with no parent are centers; each center's set is itself plus all of its
//! descendants, so every set is downward closed. The thickness of the family
//! is the largest number of parts any one set touches.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{internal, validation, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedPartition {
    parts: Vec<Vec<Vertex>>,
}

impl OrderedPartition {
    pub fn new(parts: Vec<Vec<Vertex>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(validation(format!("part {i} is empty")));
            }
            for &v in part {
                if v >= n {
                    return Err(validation(format!("part vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(validation(format!("vertex {v} appears in two parts")));
                }
                seen[v] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(validation(format!("vertex {missing} missing from partition")));
        }
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        Ok(OrderedPartition { parts })
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Restriction to a vertex subset, dropping emptied parts but keeping
    /// the relative order. Vertex ids are preserved.
    pub fn restrict(&self, keep: &BTreeSet<Vertex>) -> Vec<Vec<Vertex>> {
        self.parts
            .iter()
            .map(|p| p.iter().copied().filter(|v| keep.contains(v)).collect::<Vec<_>>())
            .filter(|p: &Vec<Vertex>| !p.is_empty())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LayeredFamily {
    partition: OrderedPartition,
    part_of: Vec<usize>,
    parents: Vec<Vec<Vertex>>,
    children: Vec<Vec<Vertex>>,
    centers: Vec<Vertex>,
    sets: Vec<Vec<Vertex>>,
    member_sets: Vec<Vec<usize>>,
    thickness: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LayeredFamilyJson {
    pub parts: Vec<Vec<Vertex>>,
    pub sets: BTreeMap<String, Vec<Vertex>>,
    pub thickness: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessingReport {
    pub d: usize,
    pub bound: usize,
    pub worst_excess: usize,
    pub ok: bool,
}

/// Verdict of the upward-minimality oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityVerdict {
    Minimal,
    /// A same-endpoint path whose upward closure is strictly contained in the
    /// tested path's closure, or equal with fewer vertices.
    Witness(Vec<Vertex>),
    BudgetExhausted,
}

pub fn build_layered_family(g: &Graph, partition: OrderedPartition) -> Result<LayeredFamily> {
    let n = g.n();
    let mut part_of = vec![0usize; n];
    for (i, part) in partition.parts().iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }
    let mut parents = vec![Vec::new(); n];
    let mut children = vec![Vec::new(); n];
    for v in 0..n {
        for &w in g.neighbors(v) {
            if part_of[w] > part_of[v] {
                parents[v].push(w);
            } else if part_of[w] < part_of[v] {
                children[v].push(w);
            }
        }
    }
    let centers: Vec<Vertex> = (0..n).filter(|&v| parents[v].is_empty()).collect();
    let mut sets = Vec::with_capacity(centers.len());
    let mut member_sets = vec![Vec::new(); n];
    for (idx, &c) in centers.iter().enumerate() {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([c]);
        seen[c] = true;
        let mut members = Vec::new();
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &w in &children[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        for &v in &members {
            member_sets[v].push(idx);
        }
        sets.push(members);
    }
    let thickness = sets
        .iter()
        .map(|s| {
            let parts: BTreeSet<usize> = s.iter().map(|&v| part_of[v]).collect();
            parts.len()
        })
        .max()
        .unwrap_or(0);
    Ok(LayeredFamily {
        partition,
        part_of,
        parents,
        children,
        centers,
        sets,
        member_sets,
        thickness,
    })
}

impl LayeredFamily {
    pub fn partition(&self) -> &OrderedPartition {
        &self.partition
    }

    pub fn part_of(&self, v: Vertex) -> usize {
        self.part_of[v]
    }

    pub fn parents(&self, v: Vertex) -> &[Vertex] {
        &self.parents[v]
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn centers(&self) -> &[Vertex] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set(&self, idx: usize) -> &[Vertex] {
        &self.sets[idx]
    }

    pub fn sets(&self) -> &[Vec<Vertex>] {
        &self.sets
    }

    pub fn center_of_set(&self, idx: usize) -> Vertex {
        self.centers[idx]
    }

    pub fn set_of_center(&self, c: Vertex) -> Option<usize> {
        self.centers.binary_search(&c).ok()
    }

    /// Indices of the sets containing `v`.
    pub fn sets_containing(&self, v: Vertex) -> &[usize] {
        &self.member_sets[v]
    }

    pub fn thickness(&self) -> usize {
        self.thickness
    }

    /// Ancestors of every vertex in `s`, including `s` itself.
    pub fn upward_closure(&self, s: &[Vertex]) -> Vec<Vertex> {
        self.closure(s, &self.parents)
    }

    /// Descendants of every vertex in `s`, including `s` itself.
    pub fn downward_closure(&self, s: &[Vertex]) -> Vec<Vertex> {
        self.closure(s, &self.children)
    }

    fn closure(&self, s: &[Vertex], step: &[Vec<Vertex>]) -> Vec<Vertex> {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut queue: VecDeque<Vertex> = VecDeque::new();
        for &v in s {
            if seen.insert(v) {
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &step[v] {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn is_downward_closed(&self, s: &[Vertex]) -> bool {
        let set: BTreeSet<Vertex> = s.iter().copied().collect();
        set.iter().all(|&v| self.children[v].iter().all(|w| set.contains(w)))
    }

    /// Worst neighborhood escape `|N[v] \ F|` over all sets and members,
    /// checked against the witnessing bound `4d`.
    pub fn verify_witnessing(&self, g: &Graph, d: usize) -> WitnessingReport {
        let mut worst = 0usize;
        for set in &self.sets {
            let members: BTreeSet<Vertex> = set.iter().copied().collect();
            for &v in set {
                let mut excess = 0usize;
                for &w in g.neighbors(v) {
                    if !members.contains(&w) {
                        excess += 1;
                    }
                }
                // v itself is in F, so N[v] \ F counts neighbors only.
                worst = worst.max(excess);
            }
        }
        let bound = 4 * d;
        WitnessingReport { d, bound, worst_excess: worst, ok: worst <= bound }
    }

    /// Walks `v`'s parent chain inside set `idx` up to the center, taking the
    /// least parent at each step. The chain visits strictly increasing parts,
    /// so it has at most `thickness` vertices.
    fn chain_to_center(&self, idx: usize, v: Vertex) -> Result<Vec<Vertex>> {
        let members: BTreeSet<Vertex> = self.sets[idx].iter().copied().collect();
        if !members.contains(&v) {
            return Err(validation(format!(
                "vertex {v} is not in the set of center {}",
                self.centers[idx]
            )));
        }
        let center = self.centers[idx];
        let mut chain = vec![v];
        let mut cur = v;
        while cur != center {
            let next = self.parents[cur]
                .iter()
                .copied()
                .find(|p| members.contains(p))
                .ok_or_else(|| {
                    internal(format!("non-center vertex {cur} has no parent inside its set"))
                })?;
            chain.push(next);
            cur = next;
        }
        Ok(chain)
    }

    /// A `u`-`v` path inside set `idx` on at most `2*thickness - 1` vertices,
    /// every vertex an ancestor of `u` or of `v`: both parent chains are
    /// walked to the center and the union is shortcut to a shortest path.
    pub fn ancestral_path(&self, g: &Graph, idx: usize, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
        let chain_u = self.chain_to_center(idx, u)?;
        if u == v {
            return Ok(vec![u]);
        }
        let chain_v = self.chain_to_center(idx, v)?;
        let mut allowed: BTreeSet<Vertex> = chain_u.into_iter().collect();
        allowed.extend(chain_v);
        let allowed: Vec<Vertex> = allowed.into_iter().collect();
        crate::graph::shortest_path_within(g, &allowed, u, v)
            .ok_or_else(|| internal("parent chains failed to connect inside the set"))
    }

    /// Upward closure of a path's vertex set, as a set.
    pub fn path_closure(&self, path: &[Vertex]) -> BTreeSet<Vertex> {
        self.upward_closure(path).into_iter().collect()
    }

    pub fn to_json(&self) -> LayeredFamilyJson {
        let sets = self
            .centers
            .iter()
            .zip(&self.sets)
            .map(|(c, s)| (c.to_string(), s.clone()))
            .collect();
        LayeredFamilyJson {
            parts: self.partition.parts().to_vec(),
            sets,
            thickness: self.thickness,
        }
    }
}

/// Degeneracy by iterative minimum-degree removal, with the peeling order.
pub fn degeneracy(g: &Graph) -> (usize, Vec<Vertex>) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degen = 0usize;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        degen = degen.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    (degen, order)
}

/// Ordered partition by peeling vertices of residual degree at most `4d`.
/// Requires `d` at least the true degeneracy; the first part collects the
/// lowest-degree vertices, so parts are ordered sparsest first.
pub fn degeneracy_layering(g: &Graph, d: usize) -> Result<OrderedPartition> {
    let (degen, _) = degeneracy(g);
    if d < degen {
        return Err(validation(format!(
            "degeneracy parameter {d} too small: a subgraph of minimum degree {degen} exists"
        )));
    }
    let n = g.n();
    let threshold = 4 * d;
    let mut remaining: BTreeSet<Vertex> = (0..n).collect();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut parts = Vec::new();
    while !remaining.is_empty() {
        let take: Vec<Vertex> = remaining.iter().copied().filter(|&v| deg[v] <= threshold).collect();
        if take.is_empty() {
            return Err(internal(
                "peeling stalled although the degeneracy precondition held",
            ));
        }
        for &v in &take {
            remaining.remove(&v);
        }
        for &v in &take {
            for &w in g.neighbors(v) {
                if remaining.contains(&w) {
                    deg[w] -= 1;
                }
            }
        }
        parts.push(take);
    }
    OrderedPartition::new(parts, n)
}

/// Enumerates all simple paths between the endpoints of `path` and reports a
/// witness with strictly smaller upward closure (or equal closure and fewer
/// vertices) if one exists. `budget` caps the number of search steps.
pub fn is_upward_minimal(
    g: &Graph,
    fam: &LayeredFamily,
    path: &[Vertex],
    budget: usize,
) -> Result<MinimalityVerdict> {
    if path.is_empty() {
        return Err(validation("empty path"));
    }
    for pair in path.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(validation(format!("({},{}) is not an edge", pair[0], pair[1])));
        }
    }
    let target = fam.path_closure(path);
    let (u, v) = (path[0], *path.last().unwrap());
    let mut steps = 0usize;
    let mut stack = vec![u];
    let mut on = vec![false; g.n()];
    on[u] = true;

    fn dfs(
        g: &Graph,
        fam: &LayeredFamily,
        v: Vertex,
        target: &BTreeSet<Vertex>,
        orig: &[Vertex],
        stack: &mut Vec<Vertex>,
        on: &mut [bool],
        steps: &mut usize,
        budget: usize,
    ) -> std::result::Result<Option<Vec<Vertex>>, ()> {
        *steps += 1;
        if *steps > budget {
            return Err(());
        }
        let cur = *stack.last().unwrap();
        if cur == v {
            if stack.as_slice() != orig {
                let closure = fam.path_closure(stack);
                let smaller = closure.is_subset(target)
                    && (closure.len() < target.len()
                        || (closure.len() == target.len() && stack.len() < orig.len()));
                if smaller {
                    return Ok(Some(stack.clone()));
                }
            }
            return Ok(None);
        }
        let nbrs: Vec<Vertex> = g.neighbors(cur).to_vec();
        for w in nbrs {
            if on[w] {
                continue;
            }
            stack.push(w);
            on[w] = true;
            let r = dfs(g, fam, v, target, orig, stack, on, steps, budget)?;
            on[w] = false;
            stack.pop();
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }

    match dfs(g, fam, v, &target, path, &mut stack, &mut on, &mut steps, budget) {
        Ok(Some(witness)) => Ok(MinimalityVerdict::Witness(witness)),
        Ok(None) => Ok(MinimalityVerdict::Minimal),
        Err(()) => Ok(MinimalityVerdict::BudgetExhausted),
    }
}

pub const DEFAULT_MINIMALITY_BUDGET: usize = 100_000;
