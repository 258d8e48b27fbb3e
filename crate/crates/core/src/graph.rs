//! Undirected simple graphs with sorted adjacency lists, plus the path and
//! quotient operations everything else is built on.
//!
//! Vertices are `0..n`. Optional `labels` carry original vertex ids through
//! induced subgraphs and quotients so certificates can be mapped back.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{validation, Error, Result};

pub type Vertex = usize;

/// Sentinel for "unreachable" in hop distance arrays.
pub const UNREACHABLE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    labels: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson { n: self.n, edges: self.edges() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::from_edges(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n], labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(validation(format!("self-loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(validation(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        if self.has_edge(u, v) {
            return Err(validation(format!("duplicate edge ({u},{v})")));
        }
        let iu = self.adj[u].partition_point(|&w| w < v);
        self.adj[u].insert(iu, v);
        let iv = self.adj[v].partition_point(|&w| w < u);
        self.adj[v].insert(iv, u);
        Ok(())
    }

    /// Parses an edge list: one `u v` pair per line, `#` starts a comment,
    /// an optional `# n=N` header fixes the vertex count.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut header_n: Option<usize> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut max_v: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if let Some(num) = rest.strip_prefix("n=") {
                    let n: usize = num.trim().parse().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("bad n header: {rest}"),
                    })?;
                    header_n = Some(n);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let body = line.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let mut it = body.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.ok_or(Error::Parse { line: lineno, msg: "expected `u v`".into() })?
                    .parse()
                    .map_err(|_| Error::Parse { line: lineno, msg: format!("bad vertex in `{body}`") })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::Parse { line: lineno, msg: format!("trailing tokens in `{body}`") });
            }
            max_v = Some(max_v.map_or(u.max(v), |m: usize| m.max(u.max(v))));
            edges.push((u, v, lineno));
        }
        let n = match (header_n, max_v) {
            (Some(h), Some(m)) => {
                if h <= m {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("header n={h} but vertex {m} appears"),
                    });
                }
                h
            }
            (Some(h), None) => h,
            (None, Some(m)) => m + 1,
            (None, None) => 0,
        };
        let mut g = Graph::new(n);
        for (u, v, lineno) in edges {
            g.add_edge(u, v).map_err(|e| Error::Parse { line: lineno, msg: e.to_string() })?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<usize>) -> Result<()> {
        if labels.len() != self.n {
            return Err(validation("label vector length must equal n"));
        }
        self.labels = Some(labels);
        Ok(())
    }

    /// Label of `v`, falling back to `v` itself when no labels are attached.
    pub fn label_of(&self, v: Vertex) -> usize {
        match &self.labels {
            Some(l) => l[v],
            None => v,
        }
    }

    /// Induced subgraph on `verts` (sorted, deduped). The i-th new vertex is
    /// `verts[i]`; labels carry the original ids forward.
    pub fn induced_subgraph(&self, verts: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        let vs: Vec<Vertex> = {
            let set: BTreeSet<Vertex> = verts.iter().copied().collect();
            set.into_iter().collect()
        };
        if let Some(&bad) = vs.iter().find(|&&v| v >= self.n) {
            return Err(validation(format!("vertex {bad} out of range")));
        }
        let mut index = vec![UNREACHABLE; self.n];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i;
        }
        let mut sub = Graph::new(vs.len());
        for (i, &v) in vs.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != UNREACHABLE && i < j {
                    sub.adj[i].push(j);
                    sub.adj[j].push(i);
                }
            }
        }
        for a in &mut sub.adj {
            a.sort_unstable();
        }
        sub.labels = Some(vs.iter().map(|&v| self.label_of(v)).collect());
        Ok((sub, vs))
    }

    /// Graph minus a vertex set, as an induced subgraph.
    pub fn remove_vertices(&self, removed: &BTreeSet<Vertex>) -> Result<(Graph, Vec<Vertex>)> {
        let keep: Vec<Vertex> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components, each sorted, ordered by minimum vertex id.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Components of the induced subgraph on `verts`, in original vertex ids.
    pub fn components_within(&self, verts: &[Vertex]) -> Vec<Vec<Vertex>> {
        let inset: BTreeSet<Vertex> = verts.iter().copied().collect();
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut comps = Vec::new();
        for &s in inset.iter() {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if inset.contains(&w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.connected_components().len() == 1
    }

    /// BFS hop distances (edge counts) from a set of sources; `UNREACHABLE`
    /// marks vertices no source reaches.
    pub fn hop_distances(&self, sources: &[Vertex]) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] == UNREACHABLE {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True when no edge joins `s` to `t`.
    pub fn is_anticomplete(&self, s: &[Vertex], t: &[Vertex]) -> bool {
        let tset: BTreeSet<Vertex> = t.iter().copied().collect();
        for &u in s {
            for &w in &self.adj[u] {
                if tset.contains(&w) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks that `path` is a path of this graph and induced: consecutive
    /// vertices adjacent, no repeats, no chords.
    pub fn is_induced_path(&self, path: &[Vertex]) -> bool {
        if path.is_empty() {
            return false;
        }
        let set: BTreeSet<Vertex> = path.iter().copied().collect();
        if set.len() != path.len() || path.iter().any(|&v| v >= self.n) {
            return false;
        }
        for i in 0..path.len() {
            for j in i + 1..path.len() {
                let adjacent = self.has_edge(path[i], path[j]);
                if j == i + 1 && !adjacent {
                    return false;
                }
                if j > i + 1 && adjacent {
                    return false;
                }
            }
        }
        true
    }
}

/// Vertex-to-block contraction map produced by `quotient_by_components`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuotientMap {
    /// Sorted vertex lists, indexed by block id. Blocks are ordered by their
    /// minimum original vertex.
    pub blocks: Vec<Vec<Vertex>>,
    /// Block id of every original vertex.
    pub block_of: Vec<usize>,
}

impl QuotientMap {
    pub fn representative(&self, block: usize) -> Vertex {
        self.blocks[block][0]
    }

    /// Union of the blocks behind a set of quotient vertices.
    pub fn lift_set(&self, quotient_vertices: &[usize]) -> Vec<Vertex> {
        let mut out: BTreeSet<Vertex> = BTreeSet::new();
        for &q in quotient_vertices {
            out.extend(self.blocks[q].iter().copied());
        }
        out.into_iter().collect()
    }
}

/// Contracts each connected component of each part to a single vertex.
/// Parts must be disjoint and cover the vertex set.
pub fn quotient_by_components(g: &Graph, parts: &[Vec<Vertex>]) -> Result<(Graph, QuotientMap)> {
    let mut seen = vec![false; g.n()];
    for part in parts {
        for &v in part {
            if v >= g.n() {
                return Err(validation(format!("part vertex {v} out of range")));
            }
            if seen[v] {
                return Err(validation(format!("vertex {v} appears in two parts")));
            }
            seen[v] = true;
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(validation(format!("vertex {missing} not covered by any part")));
    }
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    for part in parts {
        blocks.extend(g.components_within(part));
    }
    blocks.sort_by_key(|b| b[0]);
    let mut block_of = vec![0usize; g.n()];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    let mut q = Graph::new(blocks.len());
    let mut qedges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, v) in g.edges() {
        let (bu, bv) = (block_of[u], block_of[v]);
        if bu != bv {
            qedges.insert((bu.min(bv), bu.max(bv)));
        }
    }
    for (bu, bv) in qedges {
        q.add_edge(bu, bv)?;
    }
    q.labels = Some(blocks.iter().map(|b| b[0]).collect());
    Ok((q, QuotientMap { blocks, block_of }))
}

/// All induced A-B paths whose internal vertices avoid A and B, deduplicated
/// up to reversal (the lexicographically smaller of the sequence and its
/// reverse is kept). Errors with `PathOverflow` past `cap` paths.
pub fn enumerate_induced_paths(
    g: &Graph,
    a: &[Vertex],
    b: &[Vertex],
    cap: usize,
) -> Result<Vec<Vec<Vertex>>> {
    let aset: BTreeSet<Vertex> = a.iter().copied().collect();
    let bset: BTreeSet<Vertex> = b.iter().copied().collect();
    if aset.is_empty() || bset.is_empty() {
        return Err(validation("enumerate_induced_paths: A and B must be nonempty"));
    }
    if let Some(&bad) = aset.iter().chain(bset.iter()).find(|&&v| v >= g.n()) {
        return Err(validation(format!("endpoint vertex {bad} out of range")));
    }
    let mut found: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut path: Vec<Vertex> = Vec::new();
    let mut on_path = vec![false; g.n()];

    fn canonical(path: &[Vertex]) -> Vec<Vertex> {
        let rev: Vec<Vertex> = path.iter().rev().copied().collect();
        if rev.as_slice() < path {
            rev
        } else {
            path.to_vec()
        }
    }

    struct Ctx<'a> {
        g: &'a Graph,
        aset: &'a BTreeSet<Vertex>,
        bset: &'a BTreeSet<Vertex>,
        cap: usize,
        found: &'a mut BTreeSet<Vec<Vertex>>,
    }

    fn extend(ctx: &mut Ctx, path: &mut Vec<Vertex>, on_path: &mut [bool]) -> Result<()> {
        let last = *path.last().unwrap();
        let candidates: Vec<Vertex> = ctx.g.neighbors(last).to_vec();
        for w in candidates {
            if on_path[w] {
                continue;
            }
            // Induced: w may touch only the current endpoint of the path.
            let chord = path[..path.len() - 1].iter().any(|&p| ctx.g.has_edge(p, w));
            if chord {
                continue;
            }
            if ctx.bset.contains(&w) {
                path.push(w);
                ctx.found.insert(canonical(path));
                if ctx.found.len() > ctx.cap {
                    return Err(Error::PathOverflow { cap: ctx.cap });
                }
                path.pop();
                continue;
            }
            if ctx.aset.contains(&w) {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            extend(ctx, path, on_path)?;
            on_path[w] = false;
            path.pop();
        }
        Ok(())
    }

    let mut ctx = Ctx { g, aset: &aset, bset: &bset, cap, found: &mut found };
    for &s in aset.iter() {
        if bset.contains(&s) {
            ctx.found.insert(vec![s]);
            if ctx.found.len() > cap {
                return Err(Error::PathOverflow { cap });
            }
        }
        path.push(s);
        on_path[s] = true;
        extend(&mut ctx, &mut path, &mut on_path)?;
        on_path[s] = false;
        path.pop();
    }
    Ok(found.into_iter().collect())
}

/// Shortest induced path between the walk's endpoints inside the subgraph
/// induced by the walk's vertex set. Ties broken by lexicographically least
/// vertex sequence.
pub fn extract_induced_path_from_walk(g: &Graph, walk: &[Vertex]) -> Result<Vec<Vertex>> {
    if walk.is_empty() {
        return Err(validation("empty walk"));
    }
    for pair in walk.windows(2) {
        if !g.has_edge(pair[0], pair[1]) {
            return Err(validation(format!(
                "walk step ({},{}) is not an edge",
                pair[0], pair[1]
            )));
        }
    }
    let (u, v) = (walk[0], *walk.last().unwrap());
    if u == v {
        return Ok(vec![u]);
    }
    let verts: BTreeSet<Vertex> = walk.iter().copied().collect();
    let allowed: Vec<Vertex> = verts.iter().copied().collect();
    shortest_path_within(g, &allowed, u, v)
        .ok_or_else(|| validation("walk endpoints disconnected inside walk subgraph"))
}

/// Lexicographically least shortest `u`-`v` path using only `allowed`
/// vertices. Shortest paths are chordless, hence induced.
pub fn shortest_path_within(
    g: &Graph,
    allowed: &[Vertex],
    u: Vertex,
    v: Vertex,
) -> Option<Vec<Vertex>> {
    let inset: BTreeSet<Vertex> = allowed.iter().copied().collect();
    if !inset.contains(&u) || !inset.contains(&v) {
        return None;
    }
    let mut dist: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut queue = VecDeque::from([v]);
    dist.insert(v, 0);
    while let Some(x) = queue.pop_front() {
        let dx = dist[&x];
        for &w in g.neighbors(x) {
            if inset.contains(&w) && !dist.contains_key(&w) {
                dist.insert(w, dx + 1);
                queue.push_back(w);
            }
        }
    }
    let mut cur = u;
    let mut remaining = *dist.get(&u)?;
    let mut path = vec![u];
    while cur != v {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|w| dist.get(w) == Some(&(remaining - 1)))?;
        path.push(next);
        cur = next;
        remaining -= 1;
    }
    Some(path)
}

/// True when `sep` hits every A-B path: no vertex of `A \ sep` reaches
/// `B \ sep` in the graph minus `sep`.
pub fn is_separator(g: &Graph, a: &[Vertex], b: &[Vertex], sep: &[Vertex]) -> bool {
    let sset: BTreeSet<Vertex> = sep.iter().copied().collect();
    let bset: BTreeSet<Vertex> = b.iter().filter(|v| !sset.contains(v)).copied().collect();
    let mut seen = vec![false; g.n()];
    let mut queue: VecDeque<Vertex> = VecDeque::new();
    for &s in a {
        if !sset.contains(&s) && !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        if bset.contains(&x) {
            return false;
        }
        for &w in g.neighbors(x) {
            if !sset.contains(&w) && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    true
}

pub fn sorted_dedup(vs: &[Vertex]) -> Vec<Vertex> {
    let set: BTreeSet<Vertex> = vs.iter().copied().collect();
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn parse_edge_list_with_header_and_comments() {
        let g = Graph::from_edge_list("# n=5\n0 1\n1 2 # chain\n\n# trailing comment\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_rejects_duplicates_and_loops() {
        let err = Graph::from_edge_list("0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = Graph::from_edge_list("2 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn k4_has_single_induced_ab_path() {
        let g = k4();
        let paths = enumerate_induced_paths(&g, &[0], &[3], 100).unwrap();
        // Any longer path has a chord in K4, so only the edge remains.
        assert_eq!(paths, vec![vec![0, 3]]);
    }

    #[test]
    fn c4_opposite_corners_have_two_induced_paths() {
        let g = c4();
        let paths = enumerate_induced_paths(&g, &[0], &[2], 100).unwrap();
        assert_eq!(paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);
    }

    #[test]
    fn shared_endpoint_gives_single_vertex_path() {
        let g = c4();
        let paths = enumerate_induced_paths(&g, &[1], &[1, 3], 100).unwrap();
        assert!(paths.contains(&vec![1]));
        // No longer path from 1 may pass through B = {1,3} internally, and
        // both neighbors of 1 reach 3 directly.
        assert_eq!(paths.len(), 3, "{paths:?}");
    }

    #[test]
    fn enumeration_overflow_signals() {
        let g = c4();
        let err = enumerate_induced_paths(&g, &[0], &[2], 1).unwrap_err();
        assert!(matches!(err, Error::PathOverflow { cap: 1 }));
    }

    #[test]
    fn extract_from_c4_walk_prefers_lexicographic_side() {
        let g = c4();
        // Walk both ways around; both two-edge sides exist, 0-1-2 is lex least.
        let p = extract_induced_path_from_walk(&g, &[0, 3, 2, 1, 0, 1, 2]).unwrap();
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = c4();
        let (s1, map1) = g.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(map1, vec![1, 2, 3]);
        let (s2, _) = s1.induced_subgraph(&[1, 2]).unwrap();
        assert_eq!(s2.labels().unwrap(), &[2, 3]);
        assert!(s2.has_edge(0, 1));
    }

    #[test]
    fn quotient_contracts_part_components() {
        // Path 0-1-2-3-4 with parts {0,1,4}, {2,3}: blocks {0,1}, {4}, {2,3}.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (q, map) = quotient_by_components(&g, &[vec![0, 1, 4], vec![2, 3]]).unwrap();
        assert_eq!(map.blocks, vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert_eq!(q.n(), 3);
        assert_eq!(q.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(map.block_of, vec![0, 0, 1, 1, 2]);
    }

    #[test]
    fn quotient_rejects_bad_parts() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(quotient_by_components(&g, &[vec![0, 1]]).is_err());
        assert!(quotient_by_components(&g, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn separator_and_anticomplete_checks() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(is_separator(&g, &[0], &[4], &[2]));
        assert!(!is_separator(&g, &[0], &[4], &[]));
        assert!(is_separator(&g, &[0], &[0], &[0]));
        assert!(g.is_anticomplete(&[0], &[2, 3, 4]));
        assert!(!g.is_anticomplete(&[0, 1], &[2]));
    }

    #[test]
    fn hop_distsingleton_and_multi_source() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let d = g.hop_distances(&[0]);
        assert_eq!(d, vec![0, 1, UNREACHABLE, UNREACHABLE]);
        let d2 = g.hop_distances(&[0, 3]);
        assert_eq!(d2, vec![0, 1, 1, 0]);
    }

    #[test]
    fn graph_json_round_trip() {
        let g = c4();
        let text = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(g, back);
    }
}
