//! The A-B separator LP over a layered family and its path-indexed dual.
//!
//! Exact mode enumerates the induced A-B paths (internal vertices outside
//! A and B) and solves the packing dual with one row per family set; primal
//! separator values are read off as row duals. Fast mode never enumerates:
//! it generates violated path constraints from vertex-weighted shortest
//! paths, which relaxes each set-sum to a multiplicity-counted vertex sum.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{internal, validation, Error, Result};
use crate::family::{is_upward_minimal, LayeredFamily, MinimalityVerdict};
use crate::graph::{
    enumerate_induced_paths, extract_induced_path_from_walk, sorted_dedup, Graph, Vertex,
    UNREACHABLE,
};
use crate::lp::simplex::{Problem, Rel, Row, Status};
use crate::lp::{check_strong_duality, LpConfig, Mode};
use crate::rounding::vertex_weighted_distance;

/// Fractional separator weights plus (in exact mode) a dual path packing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AbLpSolution {
    pub mode: Mode,
    /// Current value of the weights in `x`.
    pub objective: f64,
    /// Objective of the solution this one was derived from, before any
    /// normalization doubled the weights.
    pub pre_normalization_objective: f64,
    /// Weight per family set, indexed like the family.
    pub x: Vec<f64>,
    /// Support of the dual packing: (induced A-B path, mass).
    pub dual_paths: Vec<(Vec<Vertex>, f64)>,
    /// Whether any induced A-B path exists at all.
    pub connected: bool,
    pub normalized: bool,
    /// Set once the dual support has been rerouted onto upward minimal
    /// paths; `Some(false)` means a minimality check ran out of budget.
    pub minimal_support: Option<bool>,
}

impl AbLpSolution {
    pub fn dual_objective(&self) -> f64 {
        self.dual_paths.iter().map(|(_, m)| m).sum()
    }
}

/// Sum of `x` over the distinct sets that intersect `path`.
pub fn set_sum(fam: &LayeredFamily, x: &[f64], path: &[Vertex]) -> f64 {
    let mut hit = BTreeSet::new();
    for &v in path {
        hit.extend(fam.sets_containing(v).iter().copied());
    }
    hit.into_iter().map(|fi| x[fi]).sum()
}

/// Per-vertex mass: for each v, the sum of `x` over sets containing v.
pub fn vertex_mass(fam: &LayeredFamily, x: &[f64]) -> Vec<f64> {
    let n: usize = fam.partition().parts().iter().map(|p| p.len()).sum();
    let mut w = vec![0.0; n];
    for (v, wv) in w.iter_mut().enumerate() {
        *wv = fam.sets_containing(v).iter().map(|&fi| x[fi]).sum();
    }
    w
}

/// Largest per-set load of a path packing, and the offending set.
pub fn max_dual_load(fam: &LayeredFamily, dual_paths: &[(Vec<Vertex>, f64)]) -> (f64, usize) {
    let mut load = vec![0.0f64; fam.len()];
    for (p, m) in dual_paths {
        let mut hit = BTreeSet::new();
        for &v in p {
            hit.extend(fam.sets_containing(v).iter().copied());
        }
        for fi in hit {
            load[fi] += m;
        }
    }
    load.iter()
        .enumerate()
        .map(|(i, &l)| (l, i))
        .fold((0.0, 0), |acc, cur| if cur.0 > acc.0 { cur } else { acc })
}

fn validate_terminals(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
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
    Ok((a, b))
}

fn trivial_solution(fam: &LayeredFamily) -> AbLpSolution {
    AbLpSolution {
        mode: Mode::Exact,
        objective: 0.0,
        pre_normalization_objective: 0.0,
        x: vec![0.0; fam.len()],
        dual_paths: vec![],
        connected: false,
        normalized: false,
        minimal_support: None,
    }
}

/// Lexicographically smaller of a path and its reversal; matches the
/// canonical form used by path enumeration.
pub fn canonical_path(p: &[Vertex]) -> Vec<Vertex> {
    let rev: Vec<Vertex> = p.iter().rev().copied().collect();
    if rev.as_slice() < p {
        rev
    } else {
        p.to_vec()
    }
}

/// Shortest restricted subpath: from the last A vertex before the first B
/// vertex, through that B vertex. Internal vertices avoid both sets.
fn trim_to_restricted(
    path: &[Vertex],
    a: &BTreeSet<Vertex>,
    b: &BTreeSet<Vertex>,
) -> Result<Vec<Vertex>> {
    let j = path
        .iter()
        .position(|v| b.contains(v))
        .ok_or_else(|| internal("path misses the target side"))?;
    let i = path[..=j]
        .iter()
        .rposition(|v| a.contains(v))
        .ok_or_else(|| internal("path misses the source side"))?;
    Ok(path[i..=j].to_vec())
}

/// Solves the fractional A-B separator LP. In exact mode the returned
/// `dual_paths` form an optimal packing of induced A-B paths with per-set
/// load at most one; in fast mode they cover only the generated rows.
pub fn solve_ab_lp(
    g: &Graph,
    fam: &LayeredFamily,
    a: &[Vertex],
    b: &[Vertex],
    cfg: &LpConfig,
) -> Result<AbLpSolution> {
    let (a, b) = validate_terminals(g, a, b)?;
    match cfg.mode {
        Mode::Exact => solve_exact(g, fam, &a, &b, cfg),
        Mode::Fast => solve_fast(g, fam, &a, &b, cfg),
    }
}

fn solve_exact(
    g: &Graph,
    fam: &LayeredFamily,
    a: &[Vertex],
    b: &[Vertex],
    cfg: &LpConfig,
) -> Result<AbLpSolution> {
    let paths = enumerate_induced_paths(g, a, b, cfg.path_cap)?;
    if paths.is_empty() {
        return Ok(trivial_solution(fam));
    }
    let nf = fam.len();
    let mut coeffs_of_set: Vec<Vec<(usize, f64)>> = vec![vec![]; nf];
    for (pi, p) in paths.iter().enumerate() {
        let mut hit = BTreeSet::new();
        for &v in p {
            hit.extend(fam.sets_containing(v).iter().copied());
        }
        for fi in hit {
            coeffs_of_set[fi].push((pi, 1.0));
        }
    }
    let problem = Problem {
        minimize: false,
        objective: vec![1.0; paths.len()],
        rows: coeffs_of_set
            .into_iter()
            .map(|coeffs| Row { coeffs, rel: Rel::Le, rhs: 1.0 })
            .collect(),
    };
    let sol = cfg.solve(&problem)?;
    if sol.status != Status::Optimal {
        return Err(Error::Lp("path packing LP reported infeasible".into()));
    }
    let x: Vec<f64> = sol.duals.iter().map(|&d| d.max(0.0)).collect();
    for (i, &d) in sol.duals.iter().enumerate() {
        if d < -cfg.cert_tol {
            return Err(Error::Lp(format!(
                "negative separator weight {d:.3e} on set {i}; try rational arithmetic"
            )));
        }
    }
    for p in &paths {
        let s = set_sum(fam, &x, p);
        if s < 1.0 - cfg.cert_tol {
            return Err(Error::Lp(format!(
                "recovered weights undercover a path ({s:.8} < 1); try rational arithmetic"
            )));
        }
    }
    let dual_paths: Vec<(Vec<Vertex>, f64)> = paths
        .into_iter()
        .zip(sol.x.iter())
        .filter(|(_, &m)| m > cfg.tol)
        .map(|(p, &m)| (p, m))
        .collect();
    let (load, worst) = max_dual_load(fam, &dual_paths);
    if load > 1.0 + cfg.cert_tol {
        return Err(Error::Lp(format!(
            "dual packing overloads set {worst} ({load:.8} > 1)"
        )));
    }
    let objective: f64 = x.iter().sum();
    if !check_strong_duality(objective, sol.objective, cfg.cert_tol) {
        return Err(Error::Lp(format!(
            "duality gap between {objective:.8} and {:.8}",
            sol.objective
        )));
    }
    Ok(AbLpSolution {
        mode: Mode::Exact,
        objective,
        pre_normalization_objective: objective,
        x,
        dual_paths,
        connected: true,
        normalized: false,
        minimal_support: None,
    })
}

fn solve_fast(
    g: &Graph,
    fam: &LayeredFamily,
    a: &[Vertex],
    b: &[Vertex],
    cfg: &LpConfig,
) -> Result<AbLpSolution> {
    let hop = g.hop_distances(a);
    if b.iter().all(|&v| hop[v] == UNREACHABLE) {
        return Ok(trivial_solution(fam));
    }
    let aset: BTreeSet<Vertex> = a.iter().copied().collect();
    let bset: BTreeSet<Vertex> = b.iter().copied().collect();
    let nf = fam.len();
    let mut rows: Vec<Row> = Vec::new();
    let mut generated: Vec<Vec<Vertex>> = Vec::new();
    let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut x = vec![0.0; nf];
    let mut duals: Vec<f64> = Vec::new();
    loop {
        if generated.len() >= cfg.path_cap {
            return Err(Error::BudgetExhausted(format!(
                "constraint generation exceeded {} paths",
                cfg.path_cap
            )));
        }
        if !rows.is_empty() {
            let sol = cfg.solve(&Problem {
                minimize: true,
                objective: vec![1.0; nf],
                rows: rows.clone(),
            })?;
            if sol.status != Status::Optimal {
                return Err(Error::Lp("separator LP reported infeasible".into()));
            }
            x = sol.x;
            duals = sol.duals;
        }
        let w = vertex_mass(fam, &x);
        let (dist, parent) = vertex_weighted_distance(g, a, &w);
        let target = b
            .iter()
            .copied()
            .filter(|&v| dist[v].is_finite())
            .min_by(|&u, &v| dist[u].total_cmp(&dist[v]).then(u.cmp(&v)))
            .ok_or_else(|| internal("reachable target vanished"))?;
        if dist[target] >= 1.0 - cfg.cert_tol {
            break;
        }
        let mut walk = vec![target];
        while let Some(p) = parent[*walk.last().unwrap()] {
            walk.push(p);
        }
        walk.reverse();
        let induced = extract_induced_path_from_walk(g, &walk)?;
        let trimmed = trim_to_restricted(&induced, &aset, &bset)?;
        let key = canonical_path(&trimmed);
        if !seen.insert(key.clone()) {
            return Err(internal("constraint generation repeated a path"));
        }
        let mut coeffs = Vec::new();
        for &v in &key {
            for &fi in fam.sets_containing(v) {
                coeffs.push((fi, 1.0));
            }
        }
        rows.push(Row { coeffs, rel: Rel::Ge, rhs: 1.0 });
        generated.push(key);
    }
    let objective: f64 = x.iter().sum();
    let dual_paths = generated
        .into_iter()
        .zip(duals.iter())
        .filter(|(_, &m)| m > cfg.tol)
        .map(|(p, &m)| (p, m))
        .collect();
    Ok(AbLpSolution {
        mode: Mode::Fast,
        objective,
        pre_normalization_objective: objective,
        x,
        dual_paths,
        connected: true,
        normalized: false,
        minimal_support: None,
    })
}

/// Thresholds tiny weights to zero and doubles the rest, capped at one.
/// Accepts any weights that cover the induced A-B paths, optimal or not;
/// the result still covers them, at most doubles the total weight, and
/// every surviving weight is at least 1/|family|.
pub fn normalize_ab_solution(
    g: &Graph,
    fam: &LayeredFamily,
    a: &[Vertex],
    b: &[Vertex],
    sol: &AbLpSolution,
    cfg: &LpConfig,
) -> Result<AbLpSolution> {
    let (a, b) = validate_terminals(g, a, b)?;
    let nf = fam.len();
    if nf == 0 {
        return Err(validation("family is empty"));
    }
    if sol.x.len() != nf {
        return Err(validation("weight vector does not match the family"));
    }
    let paths = enumerate_induced_paths(g, &a, &b, cfg.path_cap)?;
    for p in &paths {
        let s = set_sum(fam, &sol.x, p);
        if s < 1.0 - cfg.cert_tol {
            return Err(validation(format!(
                "input weights do not cover path {p:?} (mass {s:.8})"
            )));
        }
    }
    let theta = 1.0 / (2.0 * nf as f64);
    let y: Vec<f64> = sol
        .x
        .iter()
        .map(|&xv| if xv < theta { 0.0 } else { (2.0 * xv).min(1.0) })
        .collect();
    for p in &paths {
        let s = set_sum(fam, &y, p);
        if s < 1.0 - cfg.cert_tol {
            return Err(internal(format!(
                "normalized weights lost coverage of {p:?} ({s:.8})"
            )));
        }
    }
    let sx: f64 = sol.x.iter().sum();
    let sy: f64 = y.iter().sum();
    if sy > 2.0 * sx + cfg.cert_tol {
        return Err(internal("normalization more than doubled the objective"));
    }
    let floor = 1.0 / nf as f64;
    for &v in &y {
        if v > 0.0 && (v < floor - cfg.cert_tol || v > 1.0 + cfg.cert_tol) {
            return Err(internal(format!("normalized weight {v} out of range")));
        }
    }
    Ok(AbLpSolution {
        mode: sol.mode,
        objective: sy,
        pre_normalization_objective: sx,
        x: y,
        dual_paths: vec![],
        connected: sol.connected,
        normalized: true,
        minimal_support: None,
    })
}

const MAX_REROUTES: usize = 10_000;

/// Moves all dual mass onto upward minimal paths. Each offending path is
/// replaced by its minimality witness, shortcut to an induced path and
/// trimmed back to restricted A-B form; the witness's upward closure is
/// contained in the original's, so every set load can only drop. Returns
/// the reworked solution; `minimal_support` records whether every check
/// finished within `budget`.
pub fn restrict_dual_to_upward_minimal(
    g: &Graph,
    fam: &LayeredFamily,
    a: &[Vertex],
    b: &[Vertex],
    sol: &AbLpSolution,
    budget: usize,
) -> Result<AbLpSolution> {
    if sol.mode != Mode::Exact {
        return Err(validation("dual restriction needs an exact path dual"));
    }
    let (a, b) = validate_terminals(g, a, b)?;
    let aset: BTreeSet<Vertex> = a.iter().copied().collect();
    let bset: BTreeSet<Vertex> = b.iter().copied().collect();
    let before: f64 = sol.dual_objective();
    let mut masses: BTreeMap<Vec<Vertex>, f64> = BTreeMap::new();
    for (p, m) in &sol.dual_paths {
        *masses.entry(canonical_path(p)).or_insert(0.0) += m;
    }
    let mut queue: VecDeque<Vec<Vertex>> = masses.keys().cloned().collect();
    let mut complete = true;
    let mut reroutes = 0usize;
    while let Some(p) = queue.pop_front() {
        let Some(&m) = masses.get(&p) else { continue };
        if m <= 0.0 {
            masses.remove(&p);
            continue;
        }
        match is_upward_minimal(g, fam, &p, budget)? {
            MinimalityVerdict::Minimal => {}
            MinimalityVerdict::BudgetExhausted => complete = false,
            MinimalityVerdict::Witness(w) => {
                reroutes += 1;
                if reroutes > MAX_REROUTES {
                    complete = false;
                    continue;
                }
                let induced = extract_induced_path_from_walk(g, &w)?;
                let trimmed = trim_to_restricted(&induced, &aset, &bset)?;
                let key = canonical_path(&trimmed);
                masses.remove(&p);
                *masses.entry(key.clone()).or_insert(0.0) += m;
                queue.push_back(key);
            }
        }
    }
    let dual_paths: Vec<(Vec<Vertex>, f64)> =
        masses.into_iter().filter(|(_, m)| *m > 0.0).collect();
    let after: f64 = dual_paths.iter().map(|(_, m)| m).sum();
    if (after - before).abs() > 1e-9 * before.abs().max(1.0) {
        return Err(internal("rerouting changed the dual objective"));
    }
    let (load, worst) = max_dual_load(fam, &dual_paths);
    if load > 1.0 + 1e-6 {
        return Err(internal(format!(
            "rerouting overloaded set {worst} ({load:.8} > 1)"
        )));
    }
    Ok(AbLpSolution {
        dual_paths,
        minimal_support: Some(complete),
        ..sol.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_layered_family, OrderedPartition};
    use crate::graph::Graph;

    fn family_of(g: &Graph, parts: Vec<Vec<Vertex>>) -> LayeredFamily {
        build_layered_family(g, OrderedPartition::new(parts, g.n()).unwrap()).unwrap()
    }

    fn singleton_family(g: &Graph) -> LayeredFamily {
        // A single part has no cross-part edges, so every vertex is its own
        // center and every set is a singleton.
        let parts = vec![(0..g.n()).collect()];
        build_layered_family(g, OrderedPartition::new(parts, g.n()).unwrap()).unwrap()
    }

    /// P3 0-1-2, one part per vertex. A = {0}, B = {2}: only path is
    /// 0-1-2, optimum 1.
    #[test]
    fn path_graph_needs_unit_weight() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let fam = family_of(&g, vec![vec![0], vec![1], vec![2]]);
        let sol = solve_ab_lp(&g, &fam, &[0], &[2], &LpConfig::default()).unwrap();
        assert!(sol.connected);
        assert!((sol.objective - 1.0).abs() < 1e-9);
        assert_eq!(sol.dual_paths.len(), 1);
        assert_eq!(sol.dual_paths[0].0, vec![0, 1, 2]);
    }

    /// C4 with A, B on opposite corners and singleton sets: both paths
    /// pass through the terminal 0, so its set alone covers everything
    /// and the optimum is 1, not 2.
    #[test]
    fn cycle_terminal_covers_both_paths() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let fam = singleton_family(&g);
        assert_eq!(fam.len(), 4);
        let sol = solve_ab_lp(&g, &fam, &[0], &[2], &LpConfig::default()).unwrap();
        assert!((sol.objective - 1.0).abs() < 1e-9);
        assert!((sol.dual_objective() - 1.0).abs() < 1e-9);
    }

    /// Two disjoint paths with a terminal pair on each: no single vertex
    /// meets both, so the optimum is 2 and the dual saturates both paths.
    #[test]
    fn separate_paths_need_weight_each() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let fam = singleton_family(&g);
        let sol = solve_ab_lp(&g, &fam, &[0, 3], &[2, 5], &LpConfig::default()).unwrap();
        assert!(sol.connected);
        assert!((sol.objective - 2.0).abs() < 1e-9);
        assert!((sol.dual_objective() - 2.0).abs() < 1e-9);
    }

    /// Fast mode agrees with exact mode on singleton sets, where vertex
    /// sums equal set sums.
    #[test]
    fn fast_mode_matches_on_singleton_sets() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let fam = singleton_family(&g);
        let sol = solve_ab_lp(&g, &fam, &[0], &[2], &LpConfig::fast()).unwrap();
        assert_eq!(sol.mode, Mode::Fast);
        assert!((sol.objective - 1.0).abs() < 1e-9);
    }

    /// Fast mode lower-bounds exact mode when a set intersects a path
    /// several times: vertex sums overcount, so constraints are looser.
    #[test]
    fn fast_mode_lower_bounds_exact() {
        // P5 with parts {0,2,4} below {1,3}: centers 1 and 3, sets
        // {0,1,2} and {2,3,4}. The only A-B path crosses each set three
        // times, so the fast relaxation needs total weight only 1/3.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let fam = family_of(&g, vec![vec![0, 2, 4], vec![1, 3]]);
        let exact = solve_ab_lp(&g, &fam, &[0], &[4], &LpConfig::default()).unwrap();
        let fast = solve_ab_lp(&g, &fam, &[0], &[4], &LpConfig::fast()).unwrap();
        assert!(fast.objective <= exact.objective + 1e-9);
    }

    #[test]
    fn disconnected_sides_give_zero() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let fam = singleton_family(&g);
        let sol = solve_ab_lp(&g, &fam, &[0], &[3], &LpConfig::default()).unwrap();
        assert!(!sol.connected);
        assert_eq!(sol.objective, 0.0);
        let fast = solve_ab_lp(&g, &fam, &[0], &[3], &LpConfig::fast()).unwrap();
        assert!(!fast.connected);
    }

    #[test]
    fn overlapping_terminals_force_full_coverage() {
        // 1 lies in A and B: the one-vertex path [1] must be covered.
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let fam = singleton_family(&g);
        let sol = solve_ab_lp(&g, &fam, &[0, 1], &[1, 2], &LpConfig::default()).unwrap();
        assert!(set_sum(&fam, &sol.x, &[1]) >= 1.0 - 1e-6);
    }

    #[test]
    fn normalization_keeps_coverage_and_at_most_doubles() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let fam = singleton_family(&g);
        let cfg = LpConfig::default();
        let sol = solve_ab_lp(&g, &fam, &[0], &[2], &cfg).unwrap();
        let norm = normalize_ab_solution(&g, &fam, &[0], &[2], &sol, &cfg).unwrap();
        assert!(norm.normalized);
        assert!(norm.objective <= 2.0 * sol.objective + 1e-9);
        assert!((norm.pre_normalization_objective - sol.objective).abs() < 1e-12);
        let floor = 1.0 / fam.len() as f64;
        for &v in &norm.x {
            assert!(v == 0.0 || (floor - 1e-9..=1.0 + 1e-9).contains(&v));
        }
    }

    #[test]
    fn normalization_rejects_infeasible_input() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let fam = singleton_family(&g);
        let cfg = LpConfig::default();
        let bogus = AbLpSolution {
            x: vec![0.0; fam.len()],
            ..trivial_solution(&fam)
        };
        let err = normalize_ab_solution(&g, &fam, &[0], &[2], &bogus, &cfg).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    /// Triangle with a chord detour: mass initially placed on the long
    /// path must migrate to the direct edge under restriction.
    #[test]
    fn dual_restriction_moves_mass_to_minimal_paths() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let fam = family_of(&g, vec![vec![0, 1], vec![2]]);
        let base = solve_ab_lp(&g, &fam, &[0], &[1], &LpConfig::default()).unwrap();
        let doctored = AbLpSolution {
            dual_paths: vec![(vec![0, 2, 1], base.dual_objective())],
            ..base.clone()
        };
        let fixed =
            restrict_dual_to_upward_minimal(&g, &fam, &[0], &[1], &doctored, 10_000).unwrap();
        assert_eq!(fixed.minimal_support, Some(true));
        for (p, _) in &fixed.dual_paths {
            assert_eq!(
                is_upward_minimal(&g, &fam, p, 10_000).unwrap(),
                MinimalityVerdict::Minimal
            );
        }
        assert!((fixed.dual_objective() - base.dual_objective()).abs() < 1e-9);
    }

    #[test]
    fn dual_restriction_preserves_loads_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..20 {
            let n = 6 + (trial % 4);
            let mut edges = vec![];
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.45) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let parts: Vec<Vec<Vertex>> = if trial % 2 == 0 {
                vec![(0..n / 2).collect(), (n / 2..n).collect()]
            } else {
                vec![(0..n).step_by(2).collect(), (1..n).step_by(2).collect()]
            };
            let fam = family_of(&g, parts);
            let cfg = LpConfig::default();
            let sol = match solve_ab_lp(&g, &fam, &[0], &[n - 1], &cfg) {
                Ok(s) => s,
                Err(Error::PathOverflow { .. }) => continue,
                Err(e) => panic!("trial {trial}: {e}"),
            };
            if !sol.connected {
                continue;
            }
            let fixed =
                restrict_dual_to_upward_minimal(&g, &fam, &[0], &[n - 1], &sol, 100_000)
                    .unwrap();
            let (load, _) = max_dual_load(&fam, &fixed.dual_paths);
            assert!(load <= 1.0 + 1e-6, "trial {trial}: load {load}");
            assert!((fixed.dual_objective() - sol.dual_objective()).abs() < 1e-9);
        }
    }
}
