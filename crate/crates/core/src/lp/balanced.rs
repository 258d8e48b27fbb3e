//! The balanced separator LP: cover every center of X by fractional set
//! weights so that each u in X keeps average capped distance at least
//! |X|/10 to X. Exact mode solves the packing dual over ordered pairs
//! (rho, eta, gamma) and reads the primal off the row duals; fast mode
//! solves the primal directly with generated path constraints.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{internal, validation, Error, Result};
use crate::family::{is_upward_minimal, LayeredFamily, MinimalityVerdict};
use crate::graph::{
    enumerate_induced_paths, extract_induced_path_from_walk, sorted_dedup, Graph, Vertex,
};
use crate::lp::ab::{canonical_path, set_sum, vertex_mass};
use crate::lp::simplex::{Problem, Rel, Row, Status};
use crate::lp::{check_strong_duality, LpConfig, Mode};
use crate::rounding::vertex_weighted_distance;

/// Optimal packing dual: a mixture over (u, v, path) triples. Entries are
/// keyed by vertex ids from X; gamma paths run between the keyed pair.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BalancedDual {
    pub objective: f64,
    pub rho: Vec<(Vertex, f64)>,
    pub eta: Vec<((Vertex, Vertex), f64)>,
    pub gamma: Vec<((Vertex, Vertex), Vec<(Vec<Vertex>, f64)>)>,
}

impl BalancedDual {
    pub fn rho_total(&self) -> f64 {
        self.rho.iter().map(|(_, r)| r).sum()
    }

    pub fn rho_of(&self, u: Vertex) -> f64 {
        self.rho.iter().find(|(w, _)| *w == u).map_or(0.0, |(_, r)| *r)
    }

    pub fn eta_of(&self, u: Vertex, v: Vertex) -> f64 {
        self.eta
            .iter()
            .find(|((a, b), _)| (*a, *b) == (u, v))
            .map_or(0.0, |(_, e)| *e)
    }

    pub fn gamma_of(&self, u: Vertex, v: Vertex) -> &[(Vec<Vertex>, f64)] {
        self.gamma
            .iter()
            .find(|((a, b), _)| (*a, *b) == (u, v))
            .map_or(&[], |(_, g)| g.as_slice())
    }

    pub fn gamma_total(&self, u: Vertex, v: Vertex) -> f64 {
        self.gamma_of(u, v).iter().map(|(_, m)| m).sum()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BalancedLpSolution {
    pub mode: Mode,
    /// Total set weight; the LP optimum in exact mode, a lower bound in
    /// fast mode.
    pub objective: f64,
    /// Weight per family set, indexed like the family.
    pub x: Vec<f64>,
    /// The center set X, sorted.
    pub xs: Vec<Vertex>,
    /// Capped pair distances, row-major over positions in `xs`.
    pub d: Vec<f64>,
    pub dual: Option<BalancedDual>,
}

impl BalancedLpSolution {
    pub fn d_at(&self, ui: usize, vi: usize) -> f64 {
        self.d[ui * self.xs.len() + vi]
    }
}

fn validate_xs(g: &Graph, fam: &LayeredFamily, xs: &[Vertex]) -> Result<Vec<Vertex>> {
    let xs = sorted_dedup(xs);
    if xs.is_empty() {
        return Err(validation("X must be nonempty"));
    }
    for &u in &xs {
        if u >= g.n() {
            return Err(validation(format!("X member {u} out of range")));
        }
        if fam.set_of_center(u).is_none() {
            return Err(validation(format!("X member {u} is not a center")));
        }
    }
    Ok(xs)
}

/// All induced u-v paths for each unordered pair of X, keyed by positions
/// in `xs`; the self pair holds the one-vertex path. The cap bounds the
/// total count across pairs.
fn pair_paths(
    g: &Graph,
    xs: &[Vertex],
    cap: usize,
) -> Result<BTreeMap<(usize, usize), Vec<Vec<Vertex>>>> {
    let mut out = BTreeMap::new();
    let mut used = 0usize;
    for ui in 0..xs.len() {
        for vi in ui..xs.len() {
            let paths = if ui == vi {
                vec![vec![xs[ui]]]
            } else {
                enumerate_induced_paths(g, &[xs[ui]], &[xs[vi]], cap.saturating_sub(used))?
            };
            used += paths.len();
            out.insert((ui, vi), paths);
        }
    }
    Ok(out)
}

pub fn solve_balanced_lp(
    g: &Graph,
    fam: &LayeredFamily,
    xs: &[Vertex],
    cfg: &LpConfig,
) -> Result<BalancedLpSolution> {
    let xs = validate_xs(g, fam, xs)?;
    match cfg.mode {
        Mode::Exact => solve_exact(g, fam, &xs, cfg),
        Mode::Fast => solve_fast(g, fam, &xs, cfg),
    }
}

fn hit_sets(fam: &LayeredFamily, path: &[Vertex]) -> BTreeSet<usize> {
    let mut hit = BTreeSet::new();
    for &v in path {
        hit.extend(fam.sets_containing(v).iter().copied());
    }
    hit
}

fn solve_exact(
    g: &Graph,
    fam: &LayeredFamily,
    xs: &[Vertex],
    cfg: &LpConfig,
) -> Result<BalancedLpSolution> {
    let nx = xs.len();
    let nf = fam.len();
    let paths = pair_paths(g, xs, cfg.path_cap)?;
    let quota = nx as f64 / 10.0;

    // Columns: rho (nx), eta (nx^2 ordered), then gamma per ordered pair
    // and path. Rows: one per ordered pair, then one per family set.
    let eta0 = nx;
    let gamma0 = nx + nx * nx;
    let mut gamma_meta: Vec<(usize, usize, usize)> = Vec::new();
    for ui in 0..nx {
        for vi in 0..nx {
            let key = (ui.min(vi), ui.max(vi));
            for pj in 0..paths[&key].len() {
                gamma_meta.push((ui, vi, pj));
            }
        }
    }
    let ncols = gamma0 + gamma_meta.len();

    let mut rows: Vec<Row> = Vec::with_capacity(nx * nx + nf);
    let mut pair_row_coeffs: Vec<Vec<(usize, f64)>> = vec![vec![]; nx * nx];
    let mut set_row_coeffs: Vec<Vec<(usize, f64)>> = vec![vec![]; nf];
    for (gi, &(ui, vi, pj)) in gamma_meta.iter().enumerate() {
        let col = gamma0 + gi;
        pair_row_coeffs[ui * nx + vi].push((col, -1.0));
        let key = (ui.min(vi), ui.max(vi));
        for fi in hit_sets(fam, &paths[&key][pj]) {
            set_row_coeffs[fi].push((col, 1.0));
        }
    }
    for ui in 0..nx {
        for vi in 0..nx {
            let mut coeffs = vec![(ui, 1.0), (eta0 + ui * nx + vi, -1.0)];
            coeffs.append(&mut pair_row_coeffs[ui * nx + vi]);
            rows.push(Row { coeffs, rel: Rel::Le, rhs: 0.0 });
        }
    }
    for coeffs in set_row_coeffs {
        rows.push(Row { coeffs, rel: Rel::Le, rhs: 1.0 });
    }

    let mut objective = vec![0.0; ncols];
    for c in objective.iter_mut().take(nx) {
        *c = quota;
    }
    for c in objective.iter_mut().take(gamma0).skip(eta0) {
        *c = -1.0;
    }
    let sol = cfg.solve(&Problem { minimize: false, objective, rows })?;
    if sol.status != Status::Optimal {
        return Err(Error::Lp("balanced packing LP reported infeasible".into()));
    }

    let d: Vec<f64> = sol.duals[..nx * nx]
        .iter()
        .map(|&v| v.max(0.0))
        .collect();
    let x: Vec<f64> = sol.duals[nx * nx..]
        .iter()
        .map(|&v| v.max(0.0))
        .collect();
    verify_balanced_primal(fam, xs, &x, &d, &paths, cfg)?;
    let objective: f64 = x.iter().sum();
    if !check_strong_duality(objective, sol.objective, cfg.cert_tol) {
        return Err(Error::Lp(format!(
            "duality gap between {objective:.8} and {:.8}",
            sol.objective
        )));
    }

    let rho: Vec<(Vertex, f64)> = xs
        .iter()
        .enumerate()
        .map(|(ui, &u)| (u, sol.x[ui].max(0.0)))
        .collect();
    let mut eta = Vec::new();
    for ui in 0..nx {
        for vi in 0..nx {
            let e = sol.x[eta0 + ui * nx + vi].max(0.0);
            if e > cfg.tol {
                eta.push(((xs[ui], xs[vi]), e));
            }
        }
    }
    let mut gamma_map: BTreeMap<(Vertex, Vertex), Vec<(Vec<Vertex>, f64)>> = BTreeMap::new();
    for (gi, &(ui, vi, pj)) in gamma_meta.iter().enumerate() {
        let m = sol.x[gamma0 + gi];
        if m > cfg.tol {
            let key = (ui.min(vi), ui.max(vi));
            gamma_map
                .entry((xs[ui], xs[vi]))
                .or_default()
                .push((paths[&key][pj].clone(), m));
        }
    }
    let dual = BalancedDual {
        objective: sol.objective,
        rho,
        eta,
        gamma: gamma_map.into_iter().collect(),
    };
    verify_balanced_dual(fam, xs, &dual, cfg)?;

    Ok(BalancedLpSolution {
        mode: Mode::Exact,
        objective,
        x,
        xs: xs.to_vec(),
        d,
        dual: Some(dual),
    })
}

fn verify_balanced_primal(
    fam: &LayeredFamily,
    xs: &[Vertex],
    x: &[f64],
    d: &[f64],
    paths: &BTreeMap<(usize, usize), Vec<Vec<Vertex>>>,
    cfg: &LpConfig,
) -> Result<()> {
    let nx = xs.len();
    let quota = nx as f64 / 10.0;
    for ui in 0..nx {
        let total: f64 = (0..nx).map(|vi| d[ui * nx + vi]).sum();
        if total < quota - cfg.cert_tol {
            return Err(Error::Lp(format!(
                "coverage of {} is {total:.8} < {quota:.8}",
                xs[ui]
            )));
        }
    }
    for (ui, vi) in (0..nx).flat_map(|u| (0..nx).map(move |v| (u, v))) {
        let duv = d[ui * nx + vi];
        if duv > 1.0 + cfg.cert_tol {
            return Err(Error::Lp(format!("distance cap violated at {duv:.8}")));
        }
        let key = (ui.min(vi), ui.max(vi));
        for p in &paths[&key] {
            let s = set_sum(fam, x, p);
            if duv > s + cfg.cert_tol {
                return Err(Error::Lp(format!(
                    "pair ({}, {}) has distance {duv:.8} above a path mass {s:.8}",
                    xs[ui], xs[vi]
                )));
            }
        }
    }
    Ok(())
}

/// Feasibility of the packing dual plus the two facts that hold at every
/// optimum: per-u eta mass at most (|X|/10) rho_u, and 10 f <= rho |X|.
pub fn verify_balanced_dual(
    fam: &LayeredFamily,
    xs: &[Vertex],
    dual: &BalancedDual,
    cfg: &LpConfig,
) -> Result<()> {
    let nx = xs.len();
    let quota = nx as f64 / 10.0;
    for &(u, r) in &dual.rho {
        if r < -cfg.cert_tol {
            return Err(Error::Lp(format!("rho[{u}] is negative")));
        }
    }
    let mut load = vec![0.0f64; fam.len()];
    for ((u, v), gs) in &dual.gamma {
        for (p, m) in gs {
            if *m < -cfg.cert_tol {
                return Err(Error::Lp(format!("gamma mass on ({u},{v}) is negative")));
            }
            let ends_ok = match (p.first(), p.last()) {
                (Some(a), Some(b)) => (a, b) == (u, v) || (a, b) == (v, u),
                _ => false,
            };
            if !ends_ok {
                return Err(Error::Lp("gamma path detached from its pair".into()));
            }
            for fi in hit_sets(fam, p) {
                load[fi] += m;
            }
        }
    }
    for (fi, &l) in load.iter().enumerate() {
        if l > 1.0 + cfg.cert_tol {
            return Err(Error::Lp(format!("set {fi} is overloaded ({l:.8})")));
        }
    }
    for &u in xs {
        let eta_u: f64 = xs.iter().map(|&v| dual.eta_of(u, v)).sum();
        let gamma_u_ok = xs.iter().all(|&v| {
            dual.rho_of(u) - dual.eta_of(u, v) - dual.gamma_total(u, v) <= cfg.cert_tol
        });
        if !gamma_u_ok {
            return Err(Error::Lp(format!("pair constraint violated at u = {u}")));
        }
        if eta_u > quota * dual.rho_of(u) + cfg.cert_tol {
            return Err(Error::Lp(format!(
                "eta mass at {u} exceeds {quota:.4} * rho"
            )));
        }
    }
    let eta_total: f64 = dual.eta.iter().map(|(_, e)| e).sum();
    let recomputed = quota * dual.rho_total() - eta_total;
    if (recomputed - dual.objective).abs() > cfg.cert_tol * dual.objective.abs().max(1.0) {
        return Err(Error::Lp("dual objective does not match its parts".into()));
    }
    if 10.0 * dual.objective > dual.rho_total() * nx as f64 + cfg.cert_tol {
        return Err(Error::Lp("10 f <= rho |X| failed".into()));
    }
    Ok(())
}

fn solve_fast(
    g: &Graph,
    fam: &LayeredFamily,
    xs: &[Vertex],
    cfg: &LpConfig,
) -> Result<BalancedLpSolution> {
    let nx = xs.len();
    let nf = fam.len();
    let quota = nx as f64 / 10.0;
    // Columns: x (nf) then d (nx^2 row-major).
    let dcol = |ui: usize, vi: usize| nf + ui * nx + vi;
    let ncols = nf + nx * nx;
    let mut rows: Vec<Row> = Vec::new();
    for ui in 0..nx {
        let coeffs = (0..nx).map(|vi| (dcol(ui, vi), 1.0)).collect();
        rows.push(Row { coeffs, rel: Rel::Ge, rhs: quota });
    }
    for ui in 0..nx {
        for vi in 0..nx {
            rows.push(Row { coeffs: vec![(dcol(ui, vi), 1.0)], rel: Rel::Le, rhs: 1.0 });
        }
    }
    for (ui, &u) in xs.iter().enumerate() {
        // The one-vertex path bounds the self distance by u's own mass.
        let mut coeffs = vec![(dcol(ui, ui), 1.0)];
        for &fi in fam.sets_containing(u) {
            coeffs.push((fi, -1.0));
        }
        rows.push(Row { coeffs, rel: Rel::Le, rhs: 0.0 });
    }

    let mut objective = vec![0.0; ncols];
    for c in objective.iter_mut().take(nf) {
        *c = 1.0;
    }
    let mut seen: BTreeSet<(usize, usize, Vec<Vertex>)> = BTreeSet::new();
    let mut x: Vec<f64>;
    let mut d: Vec<f64>;
    let mut added = 0usize;
    loop {
        let sol = cfg.solve(&Problem {
            minimize: true,
            objective: objective.clone(),
            rows: rows.clone(),
        })?;
        if sol.status != Status::Optimal {
            return Err(Error::Lp("balanced LP reported infeasible".into()));
        }
        x = sol.x[..nf].iter().map(|&v| v.max(0.0)).collect();
        d = sol.x[nf..].iter().map(|&v| v.max(0.0)).collect();
        let w = vertex_mass(fam, &x);
        let mut violated = false;
        // Rows cover both directions at once, so the mirror pair may trip
        // over the same key within one sweep; only a repeat from an
        // earlier solve means the generation has stalled.
        let mut fresh: BTreeSet<(usize, usize, Vec<Vertex>)> = BTreeSet::new();
        for (ui, &u) in xs.iter().enumerate() {
            let (dist, parent) = vertex_weighted_distance(g, &[u], &w);
            for (vi, &v) in xs.iter().enumerate() {
                if vi == ui || !dist[v].is_finite() {
                    continue;
                }
                if d[ui * nx + vi] <= dist[v] + cfg.cert_tol {
                    continue;
                }
                violated = true;
                let mut walk = vec![v];
                while let Some(p) = parent[*walk.last().unwrap()] {
                    walk.push(p);
                }
                walk.reverse();
                let induced = extract_induced_path_from_walk(g, &walk)?;
                let key = (ui.min(vi), ui.max(vi), canonical_path(&induced));
                if !seen.insert(key.clone()) {
                    if fresh.contains(&key) {
                        continue;
                    }
                    return Err(internal("balanced separation repeated a path"));
                }
                fresh.insert(key.clone());
                added += 1;
                if added > cfg.path_cap {
                    return Err(Error::BudgetExhausted(format!(
                        "balanced constraint generation exceeded {} paths",
                        cfg.path_cap
                    )));
                }
                for (a, b) in [(ui, vi), (vi, ui)] {
                    let mut coeffs = vec![(dcol(a, b), 1.0)];
                    for &pv in &key.2 {
                        for &fi in fam.sets_containing(pv) {
                            coeffs.push((fi, -1.0));
                        }
                    }
                    rows.push(Row { coeffs, rel: Rel::Le, rhs: 0.0 });
                }
            }
        }
        if !violated {
            break;
        }
    }
    Ok(BalancedLpSolution {
        mode: Mode::Fast,
        objective: x.iter().sum(),
        x,
        xs: xs.to_vec(),
        d,
        dual: None,
    })
}

/// Moves gamma mass within each pair onto upward minimal paths; witnesses
/// keep their endpoints, so pair constraints are untouched and set loads
/// can only drop. Returns the reworked dual and whether every minimality
/// check completed within `budget`.
pub fn restrict_balanced_dual_to_upward_minimal(
    g: &Graph,
    fam: &LayeredFamily,
    dual: &BalancedDual,
    budget: usize,
) -> Result<(BalancedDual, bool)> {
    let mut complete = true;
    let mut gamma = Vec::with_capacity(dual.gamma.len());
    for ((u, v), entries) in &dual.gamma {
        let mut masses: BTreeMap<Vec<Vertex>, f64> = BTreeMap::new();
        let mut queue: Vec<Vec<Vertex>> = Vec::new();
        for (p, m) in entries {
            *masses.entry(p.clone()).or_insert(0.0) += m;
            queue.push(p.clone());
        }
        let mut steps = 0usize;
        while let Some(p) = queue.pop() {
            let Some(&m) = masses.get(&p) else { continue };
            if m <= 0.0 {
                masses.remove(&p);
                continue;
            }
            steps += 1;
            if steps > 10_000 {
                complete = false;
                break;
            }
            match is_upward_minimal(g, fam, &p, budget)? {
                MinimalityVerdict::Minimal => {}
                MinimalityVerdict::BudgetExhausted => complete = false,
                MinimalityVerdict::Witness(w) => {
                    let induced = extract_induced_path_from_walk(g, &w)?;
                    masses.remove(&p);
                    *masses.entry(induced.clone()).or_insert(0.0) += m;
                    queue.push(induced);
                }
            }
        }
        gamma.push((
            (*u, *v),
            masses.into_iter().filter(|(_, m)| *m > 0.0).collect(),
        ));
    }
    let out = BalancedDual { gamma, ..dual.clone() };
    let before: f64 = dual
        .gamma
        .iter()
        .flat_map(|(_, gs)| gs.iter().map(|(_, m)| m))
        .sum();
    let after: f64 = out
        .gamma
        .iter()
        .flat_map(|(_, gs)| gs.iter().map(|(_, m)| m))
        .sum();
    if (before - after).abs() > 1e-9 * before.abs().max(1.0) {
        return Err(internal("gamma mass changed during restriction"));
    }
    Ok((out, complete))
}
