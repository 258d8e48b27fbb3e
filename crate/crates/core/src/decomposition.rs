//! Recursive coarse tree decompositions over layered families. A separator
//! made of whole family sets splits the graph, components recurse with the
//! family restricted, and every bag is the union of its witness centers'
//! sets. Also hosts the decomposition checkers, bag quality metrics
//! (coverability, distance independence) and the contraction pipeline that
//! lifts a decomposition of the radius-partition quotient back to the input.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{internal, validation, Result};
use crate::family::{
    build_layered_family, degeneracy, degeneracy_layering, LayeredFamily, OrderedPartition,
    DEFAULT_MINIMALITY_BUDGET,
};
use crate::graph::{
    quotient_by_components, sorted_dedup, Graph, Vertex, UNREACHABLE,
};
use crate::lp::balanced::{restrict_balanced_dual_to_upward_minimal, solve_balanced_lp};
use crate::lp::LpConfig;
use crate::partition::greedy_four_radius_partition;
use crate::rounding::{round_balanced_separator, BalancedSeparatorCertificate, BoundCheck};
use crate::sampling::{sample_dense_subgraph, SampledSubgraph};

/// Which side of the threshold comparison to take when splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Auto,
    Rounding,
    Sampling,
}

/// A separator assembled from whole family sets: removing `expanded`
/// (the union of the centers' sets) leaves every component with at most
/// 95% of X.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CenterSeparator {
    pub centers: Vec<Vertex>,
    pub expanded: Vec<Vertex>,
    pub mode: String,
    pub lp_objective: f64,
    pub size_cap: f64,
    pub size_ok: bool,
    pub balance_verified: bool,
    pub certificate: Option<BalancedSeparatorCertificate>,
}

/// Outcome of the sampling branch: a low-degree subgraph through X whose
/// balanced separators all need many family sets, reported as evidence
/// rather than resolved into a contradiction.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DenseDiagnostic {
    pub max_degree: usize,
    pub ell: usize,
    pub lp_objective: f64,
    /// Every balanced separator of the subgraph needs at least this much
    /// fractional cover.
    pub separator_cover_floor: f64,
    pub treewidth_floor: f64,
    pub subgraph: SampledSubgraph,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum SeparatorOutcome {
    Centers(CenterSeparator),
    Diagnostic(DenseDiagnostic),
}

fn center_separator_cap(k: usize, n: usize, f: f64) -> f64 {
    let l = (2.0 * n as f64).log2();
    5000.0 * k as f64 * l * l * f * (4.0 * f).log2()
}

fn family_union(fam: &LayeredFamily, centers: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut out: BTreeSet<Vertex> = BTreeSet::new();
    for &w in centers {
        let idx = fam
            .set_of_center(w)
            .ok_or_else(|| internal(format!("vertex {w} is not a center")))?;
        out.extend(fam.set(idx).iter().copied());
    }
    Ok(out.into_iter().collect())
}

fn separator_is_balanced(g: &Graph, sep: &[Vertex], xs: &[Vertex]) -> bool {
    if xs.is_empty() {
        return true;
    }
    let sset: BTreeSet<Vertex> = sep.iter().copied().collect();
    let rest: Vec<Vertex> = (0..g.n()).filter(|v| !sset.contains(v)).collect();
    g.components_within(&rest).iter().all(|c| {
        20 * c.iter().filter(|v| xs.binary_search(v).is_ok()).count() <= 19 * xs.len()
    })
}

fn finish_centers(
    g: &Graph,
    fam: &LayeredFamily,
    centers: Vec<Vertex>,
    xs: &[Vertex],
    mode: &str,
    lp_objective: f64,
    size_cap: f64,
    certificate: Option<BalancedSeparatorCertificate>,
) -> Result<CenterSeparator> {
    let expanded = family_union(fam, &centers)?;
    let balance_verified = separator_is_balanced(g, &expanded, xs);
    if !balance_verified {
        return Err(internal("expanded center separator is not balanced"));
    }
    let size_ok = (centers.len() as f64) <= size_cap + 1e-9;
    Ok(CenterSeparator {
        centers,
        expanded,
        mode: mode.to_string(),
        lp_objective,
        size_cap,
        size_ok,
        balance_verified,
        certificate,
    })
}

/// Finds S among the centers so that removing the union of their sets
/// leaves every component with at most 95% of X, or, on the sampling
/// branch, returns the dense-subgraph diagnostic instead.
pub fn balanced_center_separator(
    g: &Graph,
    fam: &LayeredFamily,
    x: &[Vertex],
    f_threshold: Option<f64>,
    branch: Branch,
    cfg: &LpConfig,
    seed: u64,
) -> Result<SeparatorOutcome> {
    let xs = sorted_dedup(x);
    for &u in &xs {
        if u >= g.n() {
            return Err(validation(format!("X member {u} out of range")));
        }
        if fam.set_of_center(u).is_none() {
            return Err(validation(format!("X member {u} is not a center")));
        }
    }
    let k = fam.thickness().max(1);
    let n = g.n();

    if xs.is_empty() {
        let cs = finish_centers(g, fam, vec![], &xs, "empty", 0.0, center_separator_cap(k, n, 1.0), None)?;
        return Ok(SeparatorOutcome::Centers(cs));
    }
    if xs.len() == 1 {
        // the lone terminal sits inside its own set, so no component of the
        // remainder meets X at all
        let cs = finish_centers(
            g,
            fam,
            vec![xs[0]],
            &xs,
            "single-center",
            0.0,
            center_separator_cap(k, n, 1.0),
            None,
        )?;
        return Ok(SeparatorOutcome::Centers(cs));
    }

    let sol = solve_balanced_lp(g, fam, &xs, cfg)?;
    let f_opt = sol.objective;
    if f_opt <= cfg.cert_tol {
        // zero weight means no component can hold more than one terminal
        let cs = finish_centers(g, fam, vec![], &xs, "split", f_opt, center_separator_cap(k, n, 1.0), None)?;
        return Ok(SeparatorOutcome::Centers(cs));
    }
    let f_used = f_threshold.unwrap_or(f_opt + 1.0);
    let take_rounding = match branch {
        Branch::Rounding => true,
        Branch::Sampling => false,
        Branch::Auto => f_opt <= f_used + cfg.cert_tol,
    };
    if take_rounding {
        let cert = round_balanced_separator(g, fam, &sol, cfg)?;
        let centers = sorted_dedup(&cert.cover.centers);
        let cs = finish_centers(
            g,
            fam,
            centers,
            &xs,
            "rounding",
            f_opt,
            center_separator_cap(k, n, f_used),
            Some(cert),
        )?;
        Ok(SeparatorOutcome::Centers(cs))
    } else {
        let dual = sol
            .dual
            .as_ref()
            .ok_or_else(|| validation("the sampling branch needs the exact solver's path dual"))?;
        let (dual, _) = restrict_balanced_dual_to_upward_minimal(g, fam, dual, DEFAULT_MINIMALITY_BUDGET)?;
        let ell = (7.0 * (f_opt * (n as f64).log2() + xs.len() as f64 + 2.0)).ceil() as usize;
        let sub = sample_dense_subgraph(g, fam, &xs, &dual, ell, seed)?;
        Ok(SeparatorOutcome::Diagnostic(DenseDiagnostic {
            max_degree: sub.subgraph.max_degree(),
            ell,
            lp_objective: f_opt,
            separator_cover_floor: f_opt,
            treewidth_floor: (f_opt - 1.0).max(0.0),
            subgraph: sub,
        }))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TdNode {
    pub id: usize,
    pub parent: Option<usize>,
    pub witnesses: Vec<Vertex>,
    pub bag: Vec<Vertex>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub root: usize,
    pub nodes: Vec<TdNode>,
}

impl TreeDecomposition {
    pub fn children(&self, id: usize) -> Vec<usize> {
        self.nodes
            .iter()
            .filter(|n| n.parent == Some(id))
            .map(|n| n.id)
            .collect()
    }

    pub fn max_bag(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0)
    }

    pub fn max_witnesses(&self) -> usize {
        self.nodes.iter().map(|n| n.witnesses.len()).max().unwrap_or(0)
    }
}

/// First failed check, if any: 0 structural, 1 vertex coverage, 2 edge
/// coverage, 3 connected subtrees, 4 bags equal their witness unions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub ok: bool,
    pub violation: Option<u8>,
    pub detail: Option<String>,
}

pub fn validate_tree_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
    fam: Option<&LayeredFamily>,
) -> DecompositionReport {
    let fail = |violation: u8, detail: String| DecompositionReport {
        ok: false,
        violation: Some(violation),
        detail: Some(detail),
    };
    let n = td.nodes.len();
    if n == 0 {
        return fail(0, "decomposition has no nodes".into());
    }
    if td.root >= n {
        return fail(0, "root id out of range".into());
    }
    for (i, node) in td.nodes.iter().enumerate() {
        if node.id != i {
            return fail(0, format!("node {i} carries id {}", node.id));
        }
        if node.bag.iter().any(|&v| v >= g.n()) {
            return fail(0, format!("bag of node {i} leaves the vertex range"));
        }
        match node.parent {
            None if i != td.root => {
                return fail(0, format!("node {i} has no parent but is not the root"))
            }
            Some(p) if p >= n => return fail(0, format!("node {i} points to a missing parent")),
            Some(p) if p == i => return fail(0, format!("node {i} is its own parent")),
            _ => {}
        }
    }
    if td.nodes[td.root].parent.is_some() {
        return fail(0, "root has a parent".into());
    }
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n];
    for node in &td.nodes {
        if let Some(p) = node.parent {
            kids[p].push(node.id);
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![td.root];
    seen[td.root] = true;
    let mut reached = 0usize;
    while let Some(t) = stack.pop() {
        reached += 1;
        for &c in &kids[t] {
            if !seen[c] {
                seen[c] = true;
                stack.push(c);
            }
        }
    }
    if reached != n {
        return fail(0, "parent links do not form one tree".into());
    }

    let mut nodes_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for node in &td.nodes {
        for &v in &node.bag {
            nodes_of[v].push(node.id);
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| nodes_of[v].is_empty()) {
        return fail(1, format!("vertex {v} is in no bag"));
    }
    let bag_sets: Vec<BTreeSet<Vertex>> = td
        .nodes
        .iter()
        .map(|node| node.bag.iter().copied().collect())
        .collect();
    for (u, v) in g.edges() {
        if !nodes_of[u].iter().any(|&t| bag_sets[t].contains(&v)) {
            return fail(2, format!("edge ({u},{v}) fits in no bag"));
        }
    }
    for v in 0..g.n() {
        let home: BTreeSet<usize> = nodes_of[v].iter().copied().collect();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut stack = vec![nodes_of[v][0]];
        seen.insert(nodes_of[v][0]);
        while let Some(t) = stack.pop() {
            let mut step = |u: usize| {
                if home.contains(&u) && seen.insert(u) {
                    stack.push(u);
                }
            };
            if let Some(p) = td.nodes[t].parent {
                step(p);
            }
            for &c in &kids[t] {
                step(c);
            }
        }
        if seen.len() != home.len() {
            return fail(3, format!("vertex {v} spans a disconnected set of nodes"));
        }
    }
    if let Some(fam) = fam {
        for node in &td.nodes {
            let mut union: BTreeSet<Vertex> = BTreeSet::new();
            for &w in &node.witnesses {
                let Some(idx) = fam.set_of_center(w) else {
                    return fail(4, format!("witness {w} of node {} is not a center", node.id));
                };
                union.extend(fam.set(idx).iter().copied());
            }
            let bag: BTreeSet<Vertex> = node.bag.iter().copied().collect();
            if union != bag {
                return fail(4, format!("bag of node {} is not its witness union", node.id));
            }
        }
    }
    DecompositionReport { ok: true, violation: None, detail: None }
}

/// Per-node accounting of the recursion: terminal count going in, the pad
/// cap in force, the separator spent, and whether the witness count stayed
/// within their sum.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BagLedgerEntry {
    pub node: usize,
    pub witness_count: usize,
    pub x_size: usize,
    pub pad_cap: usize,
    pub separator_size: usize,
    /// The padding target was raised because a separator failed to shrink
    /// every component; cap_ok reflects the original target.
    pub retried: bool,
    pub fallback: bool,
    pub cap_ok: bool,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BuildLedger {
    pub entries: Vec<BagLedgerEntry>,
    pub retries: usize,
    pub fallbacks: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct BuildConfig {
    /// Terminal-set padding target; `None` derives ceil(|centers|/4) per
    /// instance so the recursion actually splits at small scales.
    pub pad_cap: Option<usize>,
    pub lp: LpConfig,
    pub seed: u64,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig { pad_cap: None, lp: LpConfig::fast(), seed: 0 }
    }
}

struct Builder {
    cfg: BuildConfig,
    nodes: Vec<TdNode>,
    ledger: BuildLedger,
    orig_n: usize,
}

impl Builder {
    fn whole_bag(
        &mut self,
        fam: &LayeredFamily,
        to_orig: &[Vertex],
        x_size: usize,
        pad_cap: usize,
        fallback: bool,
        parent: Option<usize>,
    ) -> usize {
        let id = self.nodes.len();
        let wc = fam.centers().len();
        self.nodes.push(TdNode {
            id,
            parent,
            witnesses: fam.centers().iter().map(|&c| to_orig[c]).collect(),
            bag: to_orig.to_vec(),
        });
        self.ledger.entries.push(BagLedgerEntry {
            node: id,
            witness_count: wc,
            x_size,
            pad_cap,
            separator_size: 0,
            retried: fallback,
            fallback,
            cap_ok: wc <= x_size.max(pad_cap),
        });
        if fallback {
            self.ledger.fallbacks += 1;
        }
        id
    }

    fn node(
        &mut self,
        g: &Graph,
        to_orig: &[Vertex],
        fam: &LayeredFamily,
        x: &BTreeSet<Vertex>,
        parent: Option<usize>,
        depth: usize,
    ) -> Result<usize> {
        if depth > self.orig_n {
            return Err(internal("recursion depth exceeded the vertex count"));
        }
        let centers: Vec<Vertex> = fam.centers().to_vec();
        if centers.is_empty() {
            return Err(internal("family has no centers"));
        }
        let pad_cap = self.cfg.pad_cap.unwrap_or((centers.len() + 3) / 4).max(1);
        if centers.len() <= x.len().max(pad_cap) {
            return Ok(self.whole_bag(fam, to_orig, x.len(), pad_cap, false, parent));
        }

        let mut y = x.clone();
        let target = x.len().max(pad_cap);
        for &c in &centers {
            if y.len() >= target {
                break;
            }
            y.insert(c);
        }

        // every component must shrink; if not, pad more terminals in and
        // try again, giving up to a single bag once every center is in
        let mut grew = false;
        let (cs, comps) = loop {
            let ys: Vec<Vertex> = y.iter().copied().collect();
            let outcome =
                balanced_center_separator(g, fam, &ys, None, Branch::Auto, &self.cfg.lp, self.cfg.seed)?;
            let cs = match outcome {
                SeparatorOutcome::Centers(cs) => cs,
                SeparatorOutcome::Diagnostic(_) => {
                    return Err(internal("auto branch yielded a diagnostic"))
                }
            };
            let sset: BTreeSet<Vertex> = cs.expanded.iter().copied().collect();
            let rest: Vec<Vertex> = (0..g.n()).filter(|v| !sset.contains(v)).collect();
            let comps = g.components_within(&rest);
            if comps.iter().all(|c| c.len() + cs.expanded.len() < g.n()) {
                break (cs, comps);
            }
            if y.len() >= centers.len() {
                return Ok(self.whole_bag(fam, to_orig, x.len(), pad_cap, true, parent));
            }
            self.ledger.retries += 1;
            grew = true;
            let target = y.len().saturating_mul(2).min(centers.len());
            for &c in &centers {
                if y.len() >= target {
                    break;
                }
                y.insert(c);
            }
        };
        let s = cs.centers;
        let s_exp = cs.expanded;

        let id = self.nodes.len();
        let mut wit: BTreeSet<Vertex> = y.clone();
        wit.extend(s.iter().copied());
        let mut bag: BTreeSet<Vertex> = BTreeSet::new();
        for &w in &wit {
            let idx = fam
                .set_of_center(w)
                .ok_or_else(|| internal("witness is not a center"))?;
            bag.extend(fam.set(idx).iter().copied());
        }
        self.nodes.push(TdNode {
            id,
            parent,
            witnesses: wit.iter().map(|&w| to_orig[w]).collect(),
            bag: bag.iter().map(|&v| to_orig[v]).collect(),
        });
        self.ledger.entries.push(BagLedgerEntry {
            node: id,
            witness_count: wit.len(),
            x_size: x.len(),
            pad_cap,
            separator_size: s.len(),
            retried: grew,
            fallback: false,
            cap_ok: wit.len() <= x.len().max(pad_cap) + s.len(),
        });

        let center_set: BTreeSet<Vertex> = centers.iter().copied().collect();
        for comp in &comps {
            let comp_set: BTreeSet<Vertex> = comp.iter().copied().collect();
            let mut u: Vec<Vertex> = comp.clone();
            u.extend(s_exp.iter().copied());
            u.sort_unstable();
            let (sub, map) = g.induced_subgraph(&u)?;
            let mut inv = vec![usize::MAX; g.n()];
            for (new, &old) in map.iter().enumerate() {
                inv[old] = new;
            }
            let keep: BTreeSet<Vertex> = u.iter().copied().collect();
            let parts: Vec<Vec<Vertex>> = fam
                .partition()
                .restrict(&keep)
                .into_iter()
                .map(|p| p.into_iter().map(|v| inv[v]).collect())
                .collect();
            let fam_c = build_layered_family(&sub, OrderedPartition::new(parts, sub.n())?)?;
            // the restriction must keep exactly the separator centers plus
            // the component's own centers, with their sets intact
            let expected: BTreeSet<Vertex> = s
                .iter()
                .copied()
                .chain(comp_set.iter().copied().filter(|c| center_set.contains(c)))
                .collect();
            let got: BTreeSet<Vertex> = fam_c.centers().iter().map(|&c| map[c]).collect();
            if got != expected {
                return Err(internal("restricting the family changed its centers"));
            }
            for (idx, &cnew) in fam_c.centers().iter().enumerate() {
                let lifted: Vec<Vertex> = fam_c.set(idx).iter().map(|&v| map[v]).collect();
                let src = fam
                    .set_of_center(map[cnew])
                    .ok_or_else(|| internal("restricted center vanished upstream"))?;
                if lifted != fam.set(src) {
                    return Err(internal("restricting the family changed a set"));
                }
            }
            // padding centers count as terminals downstream: a set that
            // reaches into the component must stay in the child's root bag,
            // or its vertices would reappear deeper with a gap
            let x_c: BTreeSet<Vertex> = s
                .iter()
                .copied()
                .chain(y.iter().copied().filter(|v| comp_set.contains(v)))
                .map(|v| inv[v])
                .collect();
            let to_orig_c: Vec<Vertex> = map.iter().map(|&old| to_orig[old]).collect();
            self.node(&sub, &to_orig_c, &fam_c, &x_c, Some(id), depth + 1)?;
        }
        Ok(id)
    }
}

/// Builds the rooted decomposition by repeated balanced splitting. X0 names
/// centers that must share the root bag.
pub fn build_tree_decomposition(
    g: &Graph,
    fam: &LayeredFamily,
    x0: &[Vertex],
    cfg: &BuildConfig,
) -> Result<(TreeDecomposition, BuildLedger)> {
    if g.n() == 0 {
        return Err(validation("graph has no vertices"));
    }
    let x0 = sorted_dedup(x0);
    for &u in &x0 {
        if fam.set_of_center(u).is_none() {
            return Err(validation(format!("X member {u} is not a center")));
        }
    }
    let mut seen = vec![false; g.n()];
    for idx in 0..fam.len() {
        for &v in fam.set(idx) {
            seen[v] = true;
        }
    }
    if let Some(v) = seen.iter().position(|&b| !b) {
        return Err(internal(format!("family sets never reach vertex {v}")));
    }
    let mut b = Builder {
        cfg: *cfg,
        nodes: Vec::new(),
        ledger: BuildLedger::default(),
        orig_n: g.n(),
    };
    let to_orig: Vec<Vertex> = (0..g.n()).collect();
    let x: BTreeSet<Vertex> = x0.into_iter().collect();
    let root = b.node(g, &to_orig, fam, &x, None, 0)?;
    Ok((TreeDecomposition { root, nodes: b.nodes }, b.ledger))
}

/// Whether k centers can reach all of S by paths on at most r vertices.
/// Exact via set-cover search when the graph is small, greedy otherwise;
/// only the exact mode can assert absence.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum Coverability {
    Covered { centers: Vec<Vertex>, radius_vertices: usize },
    Absent,
    Inconclusive { greedy_centers: Vec<Vertex> },
}

const COVER_EXACT_MAX_N: usize = 20;

pub fn coverability(g: &Graph, s: &[Vertex], k: usize, r: usize) -> Result<Coverability> {
    if r == 0 {
        return Err(validation("cover radius counts vertices and must be positive"));
    }
    let targets = sorted_dedup(s);
    for &v in &targets {
        if v >= g.n() {
            return Err(validation(format!("vertex {v} out of range")));
        }
    }
    if targets.is_empty() {
        return Ok(Coverability::Covered { centers: vec![], radius_vertices: r });
    }
    let m = targets.len();
    // target indices within radius of every candidate center
    let reach: Vec<Vec<usize>> = (0..g.n())
        .map(|c| {
            let dist = g.hop_distances(&[c]);
            targets
                .iter()
                .enumerate()
                .filter(|&(_, &t)| dist[t] != UNREACHABLE && dist[t] <= r - 1)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    if g.n() <= COVER_EXACT_MAX_N {
        let masks: Vec<u32> = reach
            .iter()
            .map(|js| js.iter().fold(0u32, |acc, &j| acc | 1 << j))
            .collect();
        let full: usize = (1usize << m) - 1;
        let mut owner: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (c, js) in reach.iter().enumerate() {
            for &j in js {
                owner[j].push(c);
            }
        }
        let mut dp = vec![u8::MAX; full + 1];
        let mut choice = vec![usize::MAX; full + 1];
        dp[0] = 0;
        for mask in 1..=full {
            let low = mask.trailing_zeros() as usize;
            for &c in &owner[low] {
                let prev = mask & !(masks[c] as usize);
                if dp[prev] == u8::MAX {
                    continue;
                }
                let cand = dp[prev] + 1;
                if cand < dp[mask] {
                    dp[mask] = cand;
                    choice[mask] = c;
                }
            }
        }
        if dp[full] == u8::MAX {
            return Err(internal("a target covers itself, yet cover search failed"));
        }
        if (dp[full] as usize) > k {
            return Ok(Coverability::Absent);
        }
        let mut centers = Vec::new();
        let mut mask = full;
        while mask != 0 {
            let c = choice[mask];
            centers.push(c);
            mask &= !(masks[c] as usize);
        }
        centers.sort_unstable();
        return Ok(Coverability::Covered { centers, radius_vertices: r });
    }

    let mut left: BTreeSet<usize> = (0..m).collect();
    let mut chosen: Vec<Vertex> = Vec::new();
    while !left.is_empty() {
        let mut best = (0usize, usize::MAX);
        for c in 0..g.n() {
            let gain = reach[c].iter().filter(|j| left.contains(j)).count();
            if gain > best.0 {
                best = (gain, c);
            }
        }
        if best.0 == 0 {
            return Err(internal("a target covers itself, yet greedy cover stalled"));
        }
        chosen.push(best.1);
        for j in &reach[best.1] {
            left.remove(j);
        }
    }
    if chosen.len() <= k {
        chosen.sort_unstable();
        Ok(Coverability::Covered { centers: chosen, radius_vertices: r })
    } else {
        chosen.sort_unstable();
        Ok(Coverability::Inconclusive { greedy_centers: chosen })
    }
}

/// Largest subset of S with pairwise hop distance above r, exact up to
/// 40 targets via branching on the conflict graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum DistanceIndependence {
    Exact { alpha: usize, witness: Vec<Vertex> },
    Inconclusive { lower_bound: usize, witness: Vec<Vertex> },
}

const INDEPENDENCE_EXACT_MAX: usize = 40;

fn low_degree_mis(adj: &[u64], mask: u64) -> u64 {
    // disjoint paths and cycles: walk each component and take alternates
    let mut todo = mask;
    let mut take = 0u64;
    while todo != 0 {
        let start0 = todo.trailing_zeros() as usize;
        let mut comp = 1u64 << start0;
        loop {
            let mut grow = comp;
            let mut mm = comp;
            while mm != 0 {
                let i = mm.trailing_zeros() as usize;
                mm &= mm - 1;
                grow |= adj[i] & mask;
            }
            if grow == comp {
                break;
            }
            comp = grow;
        }
        todo &= !comp;
        let mut start = usize::MAX;
        let mut mm = comp;
        while mm != 0 {
            let i = mm.trailing_zeros() as usize;
            mm &= mm - 1;
            if (adj[i] & comp).count_ones() <= 1 {
                start = i;
                break;
            }
        }
        let cycle = start == usize::MAX;
        if cycle {
            start = comp.trailing_zeros() as usize;
        }
        let mut order = vec![start];
        let mut visited = 1u64 << start;
        loop {
            let cur = *order.last().unwrap();
            let nexts = adj[cur] & comp & !visited;
            if nexts == 0 {
                break;
            }
            let nx = nexts.trailing_zeros() as usize;
            visited |= 1u64 << nx;
            order.push(nx);
        }
        let upto = if cycle { order.len() - 1 } else { order.len() };
        let mut i = 0;
        while i < upto {
            take |= 1u64 << order[i];
            i += 2;
        }
    }
    take
}

fn mis_mask(adj: &[u64], mask: u64) -> u64 {
    if mask == 0 {
        return 0;
    }
    let mut v = usize::MAX;
    let mut dmax = 0usize;
    let mut mm = mask;
    while mm != 0 {
        let i = mm.trailing_zeros() as usize;
        mm &= mm - 1;
        let d = (adj[i] & mask).count_ones() as usize;
        if v == usize::MAX || d > dmax {
            v = i;
            dmax = d;
        }
    }
    if dmax <= 2 {
        return low_degree_mis(adj, mask);
    }
    let exclude = mis_mask(adj, mask & !(1u64 << v));
    let include = (1u64 << v) | mis_mask(adj, mask & !adj[v] & !(1u64 << v));
    if include.count_ones() >= exclude.count_ones() {
        include
    } else {
        exclude
    }
}

fn greedy_scattered(g: &Graph, targets: &[Vertex], r: usize) -> Vec<Vertex> {
    let mut blocked = vec![false; g.n()];
    let mut out = Vec::new();
    for &v in targets {
        if blocked[v] {
            continue;
        }
        out.push(v);
        let dist = g.hop_distances(&[v]);
        for u in 0..g.n() {
            if dist[u] != UNREACHABLE && dist[u] <= r {
                blocked[u] = true;
            }
        }
    }
    out
}

pub fn distance_r_independence(g: &Graph, s: &[Vertex], r: usize) -> Result<DistanceIndependence> {
    let targets = sorted_dedup(s);
    for &v in &targets {
        if v >= g.n() {
            return Err(validation(format!("vertex {v} out of range")));
        }
    }
    if targets.is_empty() {
        return Ok(DistanceIndependence::Exact { alpha: 0, witness: vec![] });
    }
    if targets.len() > INDEPENDENCE_EXACT_MAX {
        let witness = greedy_scattered(g, &targets, r);
        return Ok(DistanceIndependence::Inconclusive { lower_bound: witness.len(), witness });
    }
    let m = targets.len();
    let mut adj = vec![0u64; m];
    for (i, &u) in targets.iter().enumerate() {
        let dist = g.hop_distances(&[u]);
        for (j, &v) in targets.iter().enumerate() {
            if i != j && dist[v] != UNREACHABLE && dist[v] <= r {
                adj[i] |= 1 << j;
            }
        }
    }
    let best = mis_mask(&adj, (1u64 << m) - 1);
    let witness: Vec<Vertex> = (0..m).filter(|&i| best >> i & 1 == 1).map(|i| targets[i]).collect();
    Ok(DistanceIndependence::Exact { alpha: witness.len(), witness })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BagQualityEntry {
    pub node: usize,
    pub witness_count: usize,
    pub cover_centers: Vec<Vertex>,
    pub cover_verified: bool,
    /// Exact distance independence of the bag, when small enough to settle.
    pub alpha: Option<usize>,
    pub alpha_witness: Vec<Vertex>,
    /// alpha at doubled radius never beats the cover size.
    pub doubling_ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BagQuality {
    pub radius_vertices: usize,
    pub independence_radius_edges: usize,
    pub max_witnesses: usize,
    pub ok: bool,
    pub entries: Vec<BagQualityEntry>,
}

/// Audits each bag against its witnesses-as-centers cover at the given
/// radius (in vertices) and measures distance independence at double the
/// radius (in edges).
pub fn bag_quality(g: &Graph, td: &TreeDecomposition, radius_vertices: usize) -> Result<BagQuality> {
    if radius_vertices == 0 {
        return Err(validation("cover radius must be at least one vertex"));
    }
    let r_ind = 2 * radius_vertices;
    let mut entries = Vec::with_capacity(td.nodes.len());
    let mut ok = true;
    let mut max_witnesses = 0usize;
    for node in &td.nodes {
        let centers = node.witnesses.clone();
        max_witnesses = max_witnesses.max(centers.len());
        let dist = g.hop_distances(&centers);
        let cover_verified = node
            .bag
            .iter()
            .all(|&v| dist[v] != UNREACHABLE && dist[v] <= radius_vertices - 1);
        let (alpha, alpha_witness, doubling_ok) = match distance_r_independence(g, &node.bag, r_ind)? {
            DistanceIndependence::Exact { alpha, witness } => {
                (Some(alpha), witness, alpha <= centers.len())
            }
            DistanceIndependence::Inconclusive { lower_bound: _, witness } => (None, witness, true),
        };
        ok &= cover_verified && doubling_ok;
        entries.push(BagQualityEntry {
            node: node.id,
            witness_count: node.witnesses.len(),
            cover_centers: centers,
            cover_verified,
            alpha,
            alpha_witness,
            doubling_ok,
        });
    }
    Ok(BagQuality {
        radius_vertices,
        independence_radius_edges: r_ind,
        max_witnesses,
        ok,
        entries,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PipelineResult {
    pub decomposition: TreeDecomposition,
    pub quotient_decomposition: TreeDecomposition,
    pub quality: BagQuality,
    pub ledger: BuildLedger,
    pub report: DecompositionReport,
    pub quotient_report: DecompositionReport,
    pub quotient_n: usize,
    pub part_count: usize,
    pub degeneracy: usize,
    pub thickness: usize,
    pub lift_radius_vertices: usize,
    pub part_bound: Option<BoundCheck>,
}

/// End-to-end decomposition of an arbitrary graph: contract the radius-4
/// partition, decompose the quotient over its degeneracy layering, then
/// lift bags back through the blocks. Bag covers are re-verified in the
/// input graph at radius 8 ceil(log 2n') vertices.
pub fn coarse_treewidth_pipeline(g: &Graph, t: usize, cfg: &BuildConfig) -> Result<PipelineResult> {
    if g.n() == 0 {
        return Err(validation("graph has no vertices"));
    }
    let rp = greedy_four_radius_partition(g)?;
    let (gq, qmap) = quotient_by_components(g, &rp.parts)?;
    let (d, _) = degeneracy(&gq);
    let layering = degeneracy_layering(&gq, d)?;
    let famq = build_layered_family(&gq, layering)?;
    let (tdq, ledger) = build_tree_decomposition(&gq, &famq, &[], cfg)?;
    let nq = gq.n();
    let lift_radius = 8 * ((2.0 * nq as f64).log2().ceil() as usize).max(1);
    let nodes: Vec<TdNode> = tdq
        .nodes
        .iter()
        .map(|nd| {
            let mut witnesses: Vec<Vertex> =
                nd.witnesses.iter().map(|&q| qmap.representative(q)).collect();
            witnesses.sort_unstable();
            TdNode { id: nd.id, parent: nd.parent, witnesses, bag: qmap.lift_set(&nd.bag) }
        })
        .collect();
    let td = TreeDecomposition { root: tdq.root, nodes };
    let quality = bag_quality(g, &td, lift_radius)?;
    let report = validate_tree_decomposition(g, &td, None);
    let quotient_report = validate_tree_decomposition(&gq, &tdq, Some(&famq));
    let part_bound = if t >= 2 {
        let tf = t as f64;
        Some(BoundCheck::new(
            "parts <= 2^(t log t)",
            (tf * tf.log2()).exp2(),
            rp.part_count() as f64,
        ))
    } else {
        None
    };
    Ok(PipelineResult {
        decomposition: td,
        quotient_decomposition: tdq,
        quality,
        ledger,
        report,
        quotient_report,
        quotient_n: nq,
        part_count: rp.part_count(),
        degeneracy: d,
        thickness: famq.thickness(),
        lift_radius_vertices: lift_radius,
        part_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
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

    fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn grid(w: usize, h: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..h {
            for j in 0..w {
                let v = i * w + j;
                if j + 1 < w {
                    edges.push((v, v + 1));
                }
                if i + 1 < h {
                    edges.push((v, v + w));
                }
            }
        }
        Graph::from_edges(w * h, &edges).unwrap()
    }

    fn singleton_family(g: &Graph) -> LayeredFamily {
        let part = OrderedPartition::new(vec![(0..g.n()).collect()], g.n()).unwrap();
        build_layered_family(g, part).unwrap()
    }

    fn exact_cfg() -> LpConfig {
        LpConfig::default()
    }

    #[test]
    fn empty_terminals_need_no_separator() {
        let g = star(4);
        let part = OrderedPartition::new(vec![vec![1, 2, 3, 4], vec![0]], 5).unwrap();
        let fam = build_layered_family(&g, part).unwrap();
        let out =
            balanced_center_separator(&g, &fam, &[], None, Branch::Auto, &exact_cfg(), 0).unwrap();
        let SeparatorOutcome::Centers(cs) = out else { panic!("expected centers") };
        assert_eq!(cs.mode, "empty");
        assert!(cs.centers.is_empty());
        assert!(cs.expanded.is_empty());
        assert!(cs.balance_verified);
    }

    #[test]
    fn single_terminal_is_its_own_separator() {
        let g = star(4);
        let part = OrderedPartition::new(vec![vec![1, 2, 3, 4], vec![0]], 5).unwrap();
        let fam = build_layered_family(&g, part).unwrap();
        let out =
            balanced_center_separator(&g, &fam, &[0], None, Branch::Auto, &exact_cfg(), 0).unwrap();
        let SeparatorOutcome::Centers(cs) = out else { panic!("expected centers") };
        assert_eq!(cs.mode, "single-center");
        assert_eq!(cs.centers, vec![0]);
        assert_eq!(cs.expanded, vec![0, 1, 2, 3, 4]);
        assert!(cs.balance_verified);
    }

    #[test]
    fn terminals_in_different_components_need_nothing() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let fam = singleton_family(&g);
        let out =
            balanced_center_separator(&g, &fam, &[0, 2], None, Branch::Auto, &exact_cfg(), 0)
                .unwrap();
        let SeparatorOutcome::Centers(cs) = out else { panic!("expected centers") };
        assert_eq!(cs.mode, "split");
        assert!(cs.centers.is_empty());
        assert!(cs.balance_verified);
    }

    #[test]
    fn rounding_mode_balances_path_endpoints() {
        let g = path(4);
        let fam = singleton_family(&g);
        let out =
            balanced_center_separator(&g, &fam, &[0, 3], None, Branch::Auto, &exact_cfg(), 0)
                .unwrap();
        let SeparatorOutcome::Centers(cs) = out else { panic!("expected centers") };
        assert_eq!(cs.mode, "rounding");
        assert!(!cs.centers.is_empty());
        assert!(cs.balance_verified);
        assert!(cs.size_ok);
        assert!(cs.certificate.is_some());
    }

    #[test]
    fn sampling_override_returns_diagnostic() {
        let g = cycle(4);
        let fam = singleton_family(&g);
        let out =
            balanced_center_separator(&g, &fam, &[0, 2], None, Branch::Sampling, &exact_cfg(), 7)
                .unwrap();
        let SeparatorOutcome::Diagnostic(d) = out else { panic!("expected diagnostic") };
        assert!(d.lp_objective > 0.0);
        assert!((d.treewidth_floor - (d.lp_objective - 1.0).max(0.0)).abs() < 1e-12);
        assert_eq!(d.separator_cover_floor, d.lp_objective);
        assert!(d.subgraph.vertices.binary_search(&0).is_ok());
        assert!(d.subgraph.vertices.binary_search(&2).is_ok());
        assert!(d.ell >= 14);
    }

    #[test]
    fn single_set_family_gives_one_node() {
        let g = star(4);
        let part = OrderedPartition::new(vec![vec![1, 2, 3, 4], vec![0]], 5).unwrap();
        let fam = build_layered_family(&g, part).unwrap();
        let (td, ledger) = build_tree_decomposition(&g, &fam, &[], &BuildConfig::default()).unwrap();
        assert_eq!(td.nodes.len(), 1);
        assert_eq!(td.nodes[0].witnesses, vec![0]);
        assert_eq!(td.nodes[0].bag, vec![0, 1, 2, 3, 4]);
        let report = validate_tree_decomposition(&g, &td, Some(&fam));
        assert!(report.ok, "{report:?}");
        assert_eq!(ledger.entries.len(), 1);
        assert!(ledger.entries[0].cap_ok);
    }

    #[test]
    fn path_with_singleton_family_recurses_validly() {
        let g = path(4);
        let fam = singleton_family(&g);
        let (td, ledger) = build_tree_decomposition(&g, &fam, &[], &BuildConfig::default()).unwrap();
        let report = validate_tree_decomposition(&g, &td, Some(&fam));
        assert!(report.ok, "{report:?}");
        for e in &ledger.entries {
            assert!(e.cap_ok || e.fallback || e.retried, "{e:?}");
        }
    }

    #[test]
    fn joined_stars_split_into_multiple_bags() {
        let g = Graph::from_edges(
            8,
            &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7), (0, 4)],
        )
        .unwrap();
        let fam = singleton_family(&g);
        let (td, ledger) = build_tree_decomposition(&g, &fam, &[], &BuildConfig::default()).unwrap();
        let report = validate_tree_decomposition(&g, &td, Some(&fam));
        assert!(report.ok, "{report:?}");
        assert!(td.nodes.len() >= 2, "expected a split, got {td:?}");
        assert_eq!(ledger.fallbacks, 0);
    }

    #[test]
    fn terminals_end_up_in_the_root_bag() {
        let g = path(6);
        let fam = singleton_family(&g);
        let (td, _) = build_tree_decomposition(&g, &fam, &[0, 5], &BuildConfig::default()).unwrap();
        let root = &td.nodes[td.root];
        assert!(root.bag.contains(&0) && root.bag.contains(&5));
        assert!(validate_tree_decomposition(&g, &td, Some(&fam)).ok);
    }

    #[test]
    fn validator_flags_each_axiom() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let ok_td = TreeDecomposition {
            root: 0,
            nodes: vec![TdNode { id: 0, parent: None, witnesses: vec![], bag: vec![0, 1] }],
        };
        assert!(validate_tree_decomposition(&g, &ok_td, None).ok);

        let missing_vertex = TreeDecomposition {
            root: 0,
            nodes: vec![TdNode { id: 0, parent: None, witnesses: vec![], bag: vec![0] }],
        };
        assert_eq!(validate_tree_decomposition(&g, &missing_vertex, None).violation, Some(1));

        let g3 = path(3);
        let missing_edge = TreeDecomposition {
            root: 0,
            nodes: vec![
                TdNode { id: 0, parent: None, witnesses: vec![], bag: vec![0, 1] },
                TdNode { id: 1, parent: Some(0), witnesses: vec![], bag: vec![2] },
            ],
        };
        assert_eq!(validate_tree_decomposition(&g3, &missing_edge, None).violation, Some(2));

        let g2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let torn = TreeDecomposition {
            root: 0,
            nodes: vec![
                TdNode { id: 0, parent: None, witnesses: vec![], bag: vec![0, 1] },
                TdNode { id: 1, parent: Some(0), witnesses: vec![], bag: vec![1] },
                TdNode { id: 2, parent: Some(1), witnesses: vec![], bag: vec![0, 1] },
            ],
        };
        assert_eq!(validate_tree_decomposition(&g2, &torn, None).violation, Some(3));

        let gs = star(4);
        let part = OrderedPartition::new(vec![vec![1, 2, 3, 4], vec![0]], 5).unwrap();
        let fam = build_layered_family(&gs, part).unwrap();
        let wrong_union = TreeDecomposition {
            root: 0,
            nodes: vec![TdNode { id: 0, parent: None, witnesses: vec![], bag: vec![0, 1, 2, 3, 4] }],
        };
        assert_eq!(
            validate_tree_decomposition(&gs, &wrong_union, Some(&fam)).violation,
            Some(4)
        );

        let cyc = TreeDecomposition {
            root: 0,
            nodes: vec![
                TdNode { id: 0, parent: None, witnesses: vec![], bag: vec![0, 1] },
                TdNode { id: 1, parent: Some(2), witnesses: vec![], bag: vec![0, 1] },
                TdNode { id: 2, parent: Some(1), witnesses: vec![], bag: vec![0, 1] },
            ],
        };
        assert_eq!(validate_tree_decomposition(&g2, &cyc, None).violation, Some(0));
    }

    #[test]
    fn ball_is_covered_by_its_center() {
        let g = path(7);
        let all: Vec<Vertex> = (0..7).collect();
        match coverability(&g, &all, 1, 4).unwrap() {
            Coverability::Covered { centers, radius_vertices } => {
                assert_eq!(centers, vec![3]);
                assert_eq!(radius_vertices, 4);
            }
            other => panic!("expected cover, got {other:?}"),
        }
    }

    #[test]
    fn far_apart_balls_need_two_centers() {
        let g = path(9);
        match coverability(&g, &[0, 8], 1, 4).unwrap() {
            Coverability::Absent => {}
            other => panic!("expected absence, got {other:?}"),
        }
        match coverability(&g, &[0, 8], 2, 4).unwrap() {
            Coverability::Covered { centers, .. } => assert_eq!(centers.len(), 2),
            other => panic!("expected cover, got {other:?}"),
        }
    }

    #[test]
    fn empty_target_set_is_covered_for_free() {
        let g = path(3);
        match coverability(&g, &[], 0, 1).unwrap() {
            Coverability::Covered { centers, .. } => assert!(centers.is_empty()),
            other => panic!("expected trivial cover, got {other:?}"),
        }
    }

    #[test]
    fn greedy_cover_handles_larger_graphs() {
        let g = path(30);
        let all: Vec<Vertex> = (0..30).collect();
        match coverability(&g, &all, 5, 4).unwrap() {
            Coverability::Covered { centers, .. } => {
                assert!(centers.len() <= 5);
                let dist = g.hop_distances(&centers);
                assert!(all.iter().all(|&v| dist[v] <= 3));
            }
            other => panic!("expected greedy cover, got {other:?}"),
        }
    }

    #[test]
    fn independence_on_small_fixtures() {
        let g = path(5);
        match distance_r_independence(&g, &[2], 3).unwrap() {
            DistanceIndependence::Exact { alpha, witness } => {
                assert_eq!(alpha, 1);
                assert_eq!(witness, vec![2]);
            }
            other => panic!("{other:?}"),
        }
        match distance_r_independence(&g, &[0, 4], 3).unwrap() {
            DistanceIndependence::Exact { alpha, witness } => {
                assert_eq!(alpha, 2);
                assert_eq!(witness, vec![0, 4]);
            }
            other => panic!("{other:?}"),
        }
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        match distance_r_independence(&k4, &[0, 1, 2, 3], 1).unwrap() {
            DistanceIndependence::Exact { alpha, .. } => assert_eq!(alpha, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn independence_matches_brute_force_on_paths_and_cycles() {
        // alpha_r over a path of n vertices is ceil(n / (r + 1)); over a
        // cycle it is floor(n / (r + 1)) for n > r
        for r in 1..4usize {
            for n in 2..12usize {
                let g = path(n);
                let all: Vec<Vertex> = (0..n).collect();
                let DistanceIndependence::Exact { alpha, witness } =
                    distance_r_independence(&g, &all, r).unwrap()
                else {
                    panic!("exact expected")
                };
                assert_eq!(alpha, n.div_ceil(r + 1), "path n={n} r={r}");
                for (i, &u) in witness.iter().enumerate() {
                    for &v in &witness[i + 1..] {
                        assert!(v.abs_diff(u) > r);
                    }
                }
            }
            for n in (r + 1)..12usize {
                let g = cycle(n.max(3));
                let nn = n.max(3);
                let all: Vec<Vertex> = (0..nn).collect();
                let DistanceIndependence::Exact { alpha, .. } =
                    distance_r_independence(&g, &all, r).unwrap()
                else {
                    panic!("exact expected")
                };
                assert_eq!(alpha, nn / (r + 1), "cycle n={nn} r={r}");
            }
        }
    }

    #[test]
    fn doubled_radius_independence_stays_under_cover_size() {
        let g = path(7);
        let all: Vec<Vertex> = (0..7).collect();
        let Coverability::Covered { centers, radius_vertices } =
            coverability(&g, &all, 1, 4).unwrap()
        else {
            panic!("cover expected")
        };
        let DistanceIndependence::Exact { alpha, .. } =
            distance_r_independence(&g, &all, 2 * radius_vertices).unwrap()
        else {
            panic!("exact expected")
        };
        assert!(alpha <= centers.len());
    }

    #[test]
    fn pipeline_on_grid_lifts_and_verifies() {
        let g = grid(5, 5);
        let out = coarse_treewidth_pipeline(&g, 4, &BuildConfig::default()).unwrap();
        assert!(out.report.ok, "{:?}", out.report);
        assert!(out.quotient_report.ok, "{:?}", out.quotient_report);
        assert!(out.quality.ok);
        assert!(out.quality.entries.iter().all(|e| e.cover_verified));
        assert!(out.part_bound.as_ref().unwrap().satisfied);
        assert_eq!(out.decomposition.nodes.len(), out.quotient_decomposition.nodes.len());
    }

    #[test]
    fn pipeline_on_tree_and_single_vertex() {
        let g = path(12);
        let out = coarse_treewidth_pipeline(&g, 3, &BuildConfig::default()).unwrap();
        assert!(out.report.ok && out.quotient_report.ok && out.quality.ok);

        let one = Graph::new(1);
        let out = coarse_treewidth_pipeline(&one, 2, &BuildConfig::default()).unwrap();
        assert_eq!(out.decomposition.nodes.len(), 1);
        assert_eq!(out.decomposition.nodes[0].bag, vec![0]);
        assert!(out.report.ok && out.quality.ok);
    }

    #[test]
    fn random_instances_build_valid_decompositions() {
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        for trial in 0..8 {
            let n = 6 + (trial % 5);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let fam = singleton_family(&g);
            let (td, ledger) =
                build_tree_decomposition(&g, &fam, &[], &BuildConfig::default()).unwrap();
            let report = validate_tree_decomposition(&g, &td, Some(&fam));
            assert!(report.ok, "trial {trial}: {report:?}");
            for e in &ledger.entries {
                assert!(e.cap_ok || e.fallback || e.retried, "trial {trial}: {e:?}");
            }
        }
    }

    #[test]
    fn layered_families_from_degeneracy_also_build() {
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for trial in 0..4 {
            let n = 10 + trial;
            let mut edges = Vec::new();
            for v in 1..n {
                let u = rng.gen_range(0..v);
                edges.push((u, v));
                if rng.gen_bool(0.4) {
                    let w = rng.gen_range(0..v);
                    if w != u {
                        edges.push((w.min(v), w.max(v).max(w + 1).min(v)));
                    }
                }
            }
            edges.retain(|&(a, b)| a != b);
            edges.sort_unstable();
            edges.dedup();
            let g = Graph::from_edges(n, &edges).unwrap();
            let (d, _) = degeneracy(&g);
            let layering = degeneracy_layering(&g, d).unwrap();
            let fam = build_layered_family(&g, layering).unwrap();
            let (td, _) = build_tree_decomposition(&g, &fam, &[], &BuildConfig::default()).unwrap();
            let report = validate_tree_decomposition(&g, &td, Some(&fam));
            assert!(report.ok, "trial {trial}: {report:?}");
        }
    }
}
