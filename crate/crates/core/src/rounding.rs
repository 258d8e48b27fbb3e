//! Rounding fractional separator weights into vertex separators.
//!
//! A-B separators come from an interval sweep: each vertex owns the
//! half-open interval (d_v - y_v, d_v] of its weighted distance from A,
//! and every threshold r in (0,1] cuts a separator. Balanced separators
//! come from region growing: repeatedly pick the component holding more
//! than 95% of X, grow a ball around its least center until a shell is
//! no heavier than its ball, and cut the shell with the interval sweep.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{internal, validation, Error, Result};
use crate::family::{build_layered_family, LayeredFamily, OrderedPartition};
use crate::graph::{is_separator, sorted_dedup, Graph, Vertex};
use crate::lp::ab::{vertex_mass, AbLpSolution};
use crate::lp::balanced::BalancedLpSolution;
use crate::lp::simplex::{Problem, Rel, Row, Status};
use crate::lp::{check_strong_duality, LpConfig};

/// Single-source shortest paths where a path's length is the sum of the
/// weights of all its vertices, both endpoints included. Returns per-vertex
/// distances (infinite when unreachable) and predecessors; ties prefer
/// fewer hops, then the smallest predecessor, making paths reproducible.
pub fn vertex_weighted_distance(
    g: &Graph,
    sources: &[Vertex],
    w: &[f64],
) -> (Vec<f64>, Vec<Option<Vertex>>) {
    let n = g.n();
    assert_eq!(w.len(), n, "one weight per vertex");
    debug_assert!(w.iter().all(|&x| x >= 0.0), "weights must be nonnegative");
    let mut dist = vec![f64::INFINITY; n];
    let mut hops = vec![usize::MAX; n];
    let mut parent: Vec<Option<Vertex>> = vec![None; n];
    let mut done = vec![false; n];
    for &s in sources {
        dist[s] = w[s];
        hops[s] = 1;
    }
    loop {
        let mut best: Option<Vertex> = None;
        for v in 0..n {
            if done[v] || dist[v].is_infinite() {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => {
                    if (dist[v], hops[v]) < (dist[b], hops[b]) {
                        Some(v)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let Some(u) = best else { break };
        done[u] = true;
        for &v in g.neighbors(u) {
            if done[v] {
                continue;
            }
            let cand = (dist[u] + w[v], hops[u] + 1, Some(u));
            let cur = (dist[v], hops[v], parent[v]);
            if cand.0 < cur.0
                || (cand.0 == cur.0 && cand.1 < cur.1)
                || (cand.0 == cur.0 && cand.1 == cur.1 && cand.2 < cur.2)
            {
                dist[v] = cand.0;
                hops[v] = cand.1;
                parent[v] = cand.2;
            }
        }
    }
    (dist, parent)
}

/// Optimal fractional cover of `s` by family sets: min total weight with
/// every vertex of `s` covered to 1. Solved through the packing dual, so
/// the rows are family sets regardless of |s|.
pub fn fractional_cover_lp(
    fam: &LayeredFamily,
    s: &[Vertex],
    cfg: &LpConfig,
) -> Result<(f64, Vec<f64>)> {
    let s = sorted_dedup(s);
    let nf = fam.len();
    if s.is_empty() {
        return Ok((0.0, vec![0.0; nf]));
    }
    let mut rows: Vec<Vec<(usize, f64)>> = vec![vec![]; nf];
    for (si, &v) in s.iter().enumerate() {
        if fam.sets_containing(v).is_empty() {
            return Err(internal(format!("vertex {v} is in no family set")));
        }
        for &fi in fam.sets_containing(v) {
            rows[fi].push((si, 1.0));
        }
    }
    let sol = cfg.solve(&Problem {
        minimize: false,
        objective: vec![1.0; s.len()],
        rows: rows
            .into_iter()
            .map(|coeffs| Row { coeffs, rel: Rel::Le, rhs: 1.0 })
            .collect(),
    })?;
    if sol.status != Status::Optimal {
        return Err(Error::Lp("cover LP reported infeasible".into()));
    }
    let z: Vec<f64> = sol.duals.iter().map(|&d| d.max(0.0)).collect();
    for &v in &s {
        let c: f64 = fam.sets_containing(v).iter().map(|&fi| z[fi]).sum();
        if c < 1.0 - cfg.cert_tol {
            return Err(Error::Lp(format!("cover misses vertex {v} ({c:.8})")));
        }
    }
    let total: f64 = z.iter().sum();
    if !check_strong_duality(total, sol.objective, cfg.cert_tol) {
        return Err(Error::Lp("cover LP duality gap".into()));
    }
    Ok((total, z))
}

/// Greedy integral cover of `s`: repeatedly the set covering the most
/// uncovered vertices, ties to the smaller index. Classic guarantee:
/// at most (1 + ln |s|) times the fractional optimum.
pub fn greedy_cover(fam: &LayeredFamily, s: &[Vertex]) -> Result<Vec<usize>> {
    let s = sorted_dedup(s);
    let mut uncovered: BTreeSet<Vertex> = s.into_iter().collect();
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let mut best_gain = 0usize;
        let mut best_fi = usize::MAX;
        for fi in 0..fam.len() {
            let gain = fam.set(fi).iter().filter(|v| uncovered.contains(v)).count();
            if gain > best_gain {
                best_gain = gain;
                best_fi = fi;
            }
        }
        if best_gain == 0 {
            return Err(internal("family does not cover the separator"));
        }
        chosen.push(best_fi);
        for &v in fam.set(best_fi) {
            uncovered.remove(&v);
        }
    }
    Ok(chosen)
}

/// A named inequality recorded on a certificate. `satisfied` is
/// `actual <= claimed` with a fixed slack.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundCheck {
    pub label: String,
    pub claimed: f64,
    pub actual: f64,
    pub satisfied: bool,
}

impl BoundCheck {
    pub fn new(label: &str, claimed: f64, actual: f64) -> Self {
        BoundCheck {
            label: label.to_string(),
            claimed,
            actual,
            satisfied: actual <= claimed + 1e-9,
        }
    }
}

/// Headline accounting of a separator certificate: the LP objective it
/// was rounded from and the cover bound it promises.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundLedger {
    pub lp_objective: f64,
    pub k: usize,
    pub n: usize,
    pub claimed_bound: f64,
    pub fcov: f64,
    pub satisfied: bool,
}

/// Integral cover of a separator by family sets; members of each set sit
/// within a path of at most `radius_vertices` vertices from its center.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverInfo {
    pub set_indices: Vec<usize>,
    pub centers: Vec<Vertex>,
    pub size: usize,
    pub radius_vertices: usize,
}

fn cover_info(fam: &LayeredFamily, s: &[Vertex]) -> Result<CoverInfo> {
    let set_indices = greedy_cover(fam, s)?;
    let centers = set_indices.iter().map(|&fi| fam.center_of_set(fi)).collect();
    Ok(CoverInfo {
        size: set_indices.len(),
        set_indices,
        centers,
        radius_vertices: fam.thickness(),
    })
}

/// Distances from A and per-vertex masses defining the sweep intervals
/// (d_v - y_v, d_v]: a threshold r selects {v : r inside the interval}.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntervalRounding {
    pub d: Vec<f64>,
    pub y: Vec<f64>,
    /// Candidate thresholds in (0,1]: interval endpoints, midpoints of
    /// consecutive endpoints, and 1.
    pub thresholds: Vec<f64>,
}

impl IntervalRounding {
    pub fn separator_at(&self, r: f64) -> Vec<Vertex> {
        (0..self.d.len())
            .filter(|&v| self.d[v].is_finite() && self.d[v] - self.y[v] < r && r <= self.d[v])
            .collect()
    }
}

pub fn build_interval_rounding(
    g: &Graph,
    fam: &LayeredFamily,
    a: &[Vertex],
    x: &[f64],
) -> IntervalRounding {
    let y = vertex_mass(fam, x);
    let (d, _) = vertex_weighted_distance(g, a, &y);
    let mut ends: Vec<f64> = Vec::new();
    for v in 0..g.n() {
        if !d[v].is_finite() {
            continue;
        }
        for e in [d[v], d[v] - y[v]] {
            if e > 0.0 && e <= 1.0 {
                ends.push(e);
            }
        }
    }
    ends.push(1.0);
    ends.sort_by(f64::total_cmp);
    ends.dedup();
    let mut thresholds = ends.clone();
    for w in ends.windows(2) {
        thresholds.push((w[0] + w[1]) / 2.0);
    }
    thresholds.sort_by(f64::total_cmp);
    thresholds.dedup();
    IntervalRounding { d, y, thresholds }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AbSeparatorCertificate {
    pub kind: String,
    pub separator: Vec<Vertex>,
    pub chosen_threshold: f64,
    pub thresholds_tried: usize,
    pub fcov: f64,
    pub cover: CoverInfo,
    pub separation_verified: bool,
    /// Every positive weight was at least 1/n, the precondition of the
    /// expectation bound.
    pub support_floor_ok: bool,
    pub ledger: BoundLedger,
    pub bounds: Vec<BoundCheck>,
}

/// Rounds separator weights into an A-B separator by the interval sweep.
/// Requires the weights to be feasible in the vertex-sum sense: along
/// every A-B path the vertex masses add to at least 1 (set-sum feasible
/// solutions qualify, since vertex sums dominate set sums).
pub fn round_ab_separator(
    g: &Graph,
    fam: &LayeredFamily,
    a: &[Vertex],
    b: &[Vertex],
    sol: &AbLpSolution,
    cfg: &LpConfig,
) -> Result<AbSeparatorCertificate> {
    let a = sorted_dedup(a);
    let b = sorted_dedup(b);
    if a.is_empty() || b.is_empty() {
        return Err(validation("both terminal sets must be nonempty"));
    }
    if sol.x.len() != fam.len() {
        return Err(validation("weight vector does not match the family"));
    }
    let n = g.n();
    let iv = build_interval_rounding(g, fam, &a, &sol.x);
    for &v in &b {
        if iv.d[v] < 1.0 - cfg.cert_tol {
            return Err(validation(format!(
                "weights are not separating: target {v} at weighted distance {:.8}",
                iv.d[v]
            )));
        }
    }

    let mut best: Option<(f64, f64, Vec<Vertex>)> = None;
    let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    for &r in &iv.thresholds {
        let s = iv.separator_at(r);
        if !seen.insert(s.clone()) {
            continue;
        }
        let (fcov, _) = fractional_cover_lp(fam, &s, cfg)?;
        if best.as_ref().map_or(true, |(bf, _, _)| fcov < bf - 1e-12) {
            best = Some((fcov, r, s));
        }
    }
    let (fcov, chosen_threshold, separator) =
        best.ok_or_else(|| internal("no threshold candidates"))?;

    let separation_verified = is_separator(g, &a, &b, &separator);
    if !separation_verified {
        return Err(internal("interval sweep produced a non-separator"));
    }
    let support_floor_ok = sol
        .x
        .iter()
        .all(|&m| m <= 0.0 || m >= 1.0 / n as f64 - cfg.cert_tol);
    let k = fam.thickness();
    let log2n = (2.0 * n as f64).log2();
    let f_pre = sol.pre_normalization_objective;
    let sum_y: f64 = sol.x.iter().sum();
    let claimed = 8.0 * k as f64 * log2n * f_pre;
    let cover = cover_info(fam, &separator)?;
    let bounds = vec![
        BoundCheck::new("fcov <= 4k log(2n) sum(y)", 4.0 * k as f64 * log2n * sum_y, fcov),
        BoundCheck::new(
            "cov <= fcov ln(n) + 1",
            fcov * (n as f64).ln() + 1.0,
            cover.size as f64,
        ),
    ];
    Ok(AbSeparatorCertificate {
        kind: "ab".into(),
        separator,
        chosen_threshold,
        thresholds_tried: iv.thresholds.len(),
        fcov,
        cover,
        separation_verified,
        support_floor_ok,
        ledger: BoundLedger {
            lp_objective: f_pre,
            k,
            n,
            claimed_bound: claimed,
            fcov,
            satisfied: fcov <= claimed + 1e-9,
        },
        bounds,
    })
}

/// One round of region growing inside the heavy component.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegionGrowState {
    pub round: usize,
    pub heavy_component_size: usize,
    pub heavy_x_count: usize,
    pub ubar: Vertex,
    pub level: usize,
    pub radius: f64,
    pub extended_search: bool,
    pub mu_ball: f64,
    pub mu_shell: f64,
    /// Measure of the ball one level further out.
    pub mu_next_ball: f64,
    /// No family set meets both the ball and its shell; when this holds
    /// the measures must add up into the next ball.
    pub locality_ok: bool,
    pub additivity_ok: bool,
    pub separator_added: Vec<Vertex>,
    pub cut_fcov: f64,
    /// Fraction of X left on the near side of the cut, a diagnostic for
    /// the balance argument.
    pub a_side_x_fraction: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BalancedSeparatorCertificate {
    pub kind: String,
    pub separator: Vec<Vertex>,
    pub downward_closed: bool,
    pub balance_verified: bool,
    /// Largest |C intersect X| / |X| over components of G - S.
    pub largest_fraction: f64,
    pub fcov: f64,
    pub cover: CoverInfo,
    pub epsilon: f64,
    pub level_cap: usize,
    pub rounds: Vec<RegionGrowState>,
    pub ledger: BoundLedger,
    pub bounds: Vec<BoundCheck>,
}

fn measure(fam: &LayeredFamily, x: &[f64], marked: &[bool]) -> f64 {
    let mut total = 0.0;
    for fi in 0..fam.len() {
        if fam.set(fi).iter().any(|&v| marked[v]) {
            total += x[fi];
        }
    }
    total
}

const EXTENDED_LEVELS: usize = 64;

/// Rounds a balanced-LP solution into a downward closed separator leaving
/// every component with at most 95% of X. Starts from the heavy-vertex
/// core and repeatedly cuts the heavy component with a grown region.
pub fn round_balanced_separator(
    g: &Graph,
    fam: &LayeredFamily,
    sol: &BalancedLpSolution,
    cfg: &LpConfig,
) -> Result<BalancedSeparatorCertificate> {
    let n = g.n();
    let xs = &sol.xs;
    if xs.is_empty() {
        return Err(validation("X must be nonempty"));
    }
    if sol.x.len() != fam.len() {
        return Err(validation("weight vector does not match the family"));
    }
    let k = fam.thickness().max(1);
    let f: f64 = sol.x.iter().sum();
    if f <= 0.0 {
        return Err(validation(
            "zero-weight solution: the terminals are not jointly connected",
        ));
    }
    let eps = 1.0 / (500.0 * (f + 4.0).log2());
    let lmax = ((f + 4.0) / eps).log2().ceil() as usize;
    let masses = vertex_mass(fam, &sol.x);

    let z0: Vec<Vertex> = (0..n)
        .filter(|&v| masses[v] >= eps / (2.0 * k as f64))
        .collect();
    let mut z: Vec<Vertex> = fam.downward_closure(&z0);
    if z.len() != z0.len() {
        return Err(internal("heavy-vertex core is not downward closed"));
    }

    let mut rounds: Vec<RegionGrowState> = Vec::new();
    loop {
        if rounds.len() > n {
            return Err(internal("region growing failed to terminate"));
        }
        let zset: BTreeSet<Vertex> = z.iter().copied().collect();
        let rest: Vec<Vertex> = (0..n).filter(|v| !zset.contains(v)).collect();
        let comps = g.components_within(&rest);
        let heavy = comps
            .iter()
            .find(|c| 20 * c.iter().filter(|v| xs.binary_search(v).is_ok()).count() > 19 * xs.len());
        let Some(heavy) = heavy else { break };
        let state = grow_and_cut(g, fam, sol, &zset, heavy, eps, lmax, rounds.len(), cfg)?;
        let mut grew = false;
        for &v in &state.separator_added {
            if zset.contains(&v) {
                return Err(internal("cut revisited the separator"));
            }
            grew = true;
            z.push(v);
        }
        if !grew {
            return Err(internal("cut added no vertices"));
        }
        z = sorted_dedup(&z);
        rounds.push(state);
    }

    let separator = z;
    let downward_closed = fam.is_downward_closed(&separator);
    if !downward_closed {
        return Err(internal("separator lost downward closure"));
    }
    let sset: BTreeSet<Vertex> = separator.iter().copied().collect();
    let rest: Vec<Vertex> = (0..n).filter(|v| !sset.contains(v)).collect();
    let mut largest = 0usize;
    for c in g.components_within(&rest) {
        largest = largest.max(c.iter().filter(|v| xs.binary_search(v).is_ok()).count());
    }
    let balance_verified = 20 * largest <= 19 * xs.len();
    let largest_fraction = largest as f64 / xs.len() as f64;
    let (fcov, _) = fractional_cover_lp(fam, &separator, cfg)?;
    let cover = cover_info(fam, &separator)?;
    let log2n = (2.0 * n as f64).log2();
    let claimed = 5000.0 * k as f64 * log2n * (f + 4.0).log2() * f;
    let bounds = vec![BoundCheck::new(
        "cov <= fcov ln(n) + 1",
        fcov * (n as f64).ln() + 1.0,
        cover.size as f64,
    )];
    Ok(BalancedSeparatorCertificate {
        kind: "balanced".into(),
        separator,
        downward_closed,
        balance_verified,
        largest_fraction,
        fcov,
        cover,
        epsilon: eps,
        level_cap: lmax,
        rounds,
        ledger: BoundLedger {
            lp_objective: f,
            k,
            n,
            claimed_bound: claimed,
            fcov,
            satisfied: fcov <= claimed + 1e-9,
        },
        bounds,
    })
}

#[allow(clippy::too_many_arguments)]
fn grow_and_cut(
    g: &Graph,
    fam: &LayeredFamily,
    sol: &BalancedLpSolution,
    z: &BTreeSet<Vertex>,
    heavy: &[Vertex],
    eps: f64,
    lmax: usize,
    round: usize,
    cfg: &LpConfig,
) -> Result<RegionGrowState> {
    let xs = &sol.xs;
    let masses = vertex_mass(fam, &sol.x);
    let ubar = *heavy
        .iter()
        .find(|v| xs.binary_search(v).is_ok())
        .ok_or_else(|| internal("heavy component has no X vertex"))?;
    let (dist, _) = vertex_weighted_distance(g, &[ubar], &masses);

    let in_heavy: BTreeSet<Vertex> = heavy.iter().copied().collect();
    let ball = |r: f64| -> Vec<bool> {
        let mut m = vec![false; g.n()];
        for &v in heavy {
            if dist[v].is_finite() && dist[v] <= r {
                m[v] = true;
            }
        }
        m
    };
    let mu = |marked: &[bool]| measure(fam, &sol.x, marked);

    let mut chosen: Option<(usize, bool, f64, f64)> = None;
    for (extended, level) in (1..=lmax)
        .map(|l| (false, l))
        .chain((lmax + 1..=lmax + EXTENDED_LEVELS).map(|l| (true, l)))
    {
        let r = 3.0 * level as f64 * eps;
        let b = ball(r);
        let shell: Vec<bool> = (0..g.n())
            .map(|v| {
                in_heavy.contains(&v)
                    && dist[v].is_finite()
                    && dist[v] > r + eps
                    && dist[v] <= r + 3.0 * eps
            })
            .collect();
        let mu_b = mu(&b);
        let mu_s = mu(&shell);
        let outer_nonempty = heavy
            .iter()
            .any(|&v| !dist[v].is_finite() || dist[v] > r + 3.0 * eps);
        if mu_s <= mu_b + 1e-12 && outer_nonempty {
            chosen = Some((level, extended, mu_b, mu_s));
            break;
        }
    }
    let (level, extended_search, mu_ball, mu_shell) =
        chosen.ok_or_else(|| internal("no layer balanced its shell"))?;
    let r = 3.0 * level as f64 * eps;

    let near: Vec<Vertex> = heavy
        .iter()
        .copied()
        .filter(|&v| dist[v].is_finite() && dist[v] <= r + eps)
        .collect();
    let far: Vec<Vertex> = heavy
        .iter()
        .copied()
        .filter(|&v| !dist[v].is_finite() || dist[v] > r + 3.0 * eps)
        .collect();
    if near.is_empty() || far.is_empty() {
        return Err(internal("degenerate cut sides"));
    }

    // Separator LP instance restricted to the heavy component: weights
    // are the shell-touching sets scaled by 1/eps. Restriction keeps the
    // family's shape: centers survive and sets intersect down.
    let (gc, map) = g.induced_subgraph(heavy)?;
    let parts_c = fam.partition().restrict(&in_heavy);
    let to_sub = |v: Vertex| map.binary_search(&v).unwrap();
    let parts_mapped: Vec<Vec<Vertex>> = parts_c
        .iter()
        .map(|p| p.iter().map(|&v| to_sub(v)).collect())
        .collect();
    let fam_c = build_layered_family(&gc, OrderedPartition::new(parts_mapped, gc.n())?)?;
    for (ci, &c_sub) in fam_c.centers().iter().enumerate() {
        let c_orig = map[c_sub];
        let fi = fam
            .set_of_center(c_orig)
            .ok_or_else(|| internal("restricted family invented a center"))?;
        let expect: Vec<Vertex> = fam
            .set(fi)
            .iter()
            .copied()
            .filter(|v| in_heavy.contains(v))
            .map(to_sub)
            .collect();
        if fam_c.set(ci) != expect.as_slice() {
            return Err(internal("restricted family does not match intersections"));
        }
    }

    let shell_marked: Vec<bool> = {
        let mut m = vec![false; g.n()];
        for &v in heavy {
            if dist[v].is_finite() && dist[v] > r + eps && dist[v] <= r + 3.0 * eps {
                m[v] = true;
            }
        }
        m
    };

    // When no set reaches from the ball into its shell, the two measures
    // are carried by disjoint sets and must add up inside the next ball.
    let ball_marked = ball(r);
    let mu_next_ball = mu(&ball(r + 3.0 * eps));
    let locality_ok = (0..fam.len()).all(|fi| {
        !(fam.set(fi).iter().any(|&v| ball_marked[v])
            && fam.set(fi).iter().any(|&v| shell_marked[v]))
    });
    let additivity_ok = !locality_ok || mu_next_ball + 1e-9 >= mu_ball + mu_shell;

    let mut x_scaled = vec![0.0; fam_c.len()];
    for (ci, &c_sub) in fam_c.centers().iter().enumerate() {
        let fi = fam.set_of_center(map[c_sub]).unwrap();
        if fam.set(fi).iter().any(|&v| shell_marked[v]) {
            x_scaled[ci] = sol.x[fi] / eps;
        }
    }
    let inner = AbLpSolution {
        mode: crate::lp::Mode::Exact,
        objective: x_scaled.iter().sum(),
        pre_normalization_objective: x_scaled.iter().sum(),
        x: x_scaled,
        dual_paths: vec![],
        connected: true,
        normalized: false,
        minimal_support: None,
    };
    let a_sub: Vec<Vertex> = near.iter().map(|&v| to_sub(v)).collect();
    let b_sub: Vec<Vertex> = far.iter().map(|&v| to_sub(v)).collect();
    let cert = round_ab_separator(&gc, &fam_c, &a_sub, &b_sub, &inner, cfg)?;
    let s_orig: Vec<Vertex> = cert.separator.iter().map(|&v| map[v]).collect();

    // The downward closure can only add vertices already cut away (in Z)
    // or inside the component; keep the in-component part.
    let closed = fam.downward_closure(&s_orig);
    let mut added = Vec::new();
    for &v in &closed {
        if in_heavy.contains(&v) {
            added.push(v);
        } else if !z.contains(&v) {
            return Err(internal("closure escaped both the component and the cut"));
        }
    }
    let added = sorted_dedup(&added);
    if added.is_empty() {
        return Err(internal("cut is empty"));
    }

    let aset: BTreeSet<Vertex> = added.iter().copied().collect();
    let rest: Vec<Vertex> = heavy.iter().copied().filter(|v| !aset.contains(v)).collect();
    let farset: BTreeSet<Vertex> = far.iter().copied().collect();
    let mut a_side_x = 0usize;
    for c in g.components_within(&rest) {
        if c.iter().any(|v| farset.contains(v)) {
            continue;
        }
        a_side_x += c.iter().filter(|v| xs.binary_search(v).is_ok()).count();
    }

    Ok(RegionGrowState {
        round,
        heavy_component_size: heavy.len(),
        heavy_x_count: heavy.iter().filter(|v| xs.binary_search(v).is_ok()).count(),
        ubar,
        level,
        radius: r,
        extended_search,
        mu_ball,
        mu_shell,
        mu_next_ball,
        locality_ok,
        additivity_ok,
        separator_added: added,
        cut_fcov: cert.fcov,
        a_side_x_fraction: a_side_x as f64 / xs.len() as f64,
    })
}
