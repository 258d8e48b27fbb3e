//! Randomized constructions driven by LP duals: low-congestion multisets
//! of A-B paths, and dense-but-thin induced subgraphs for the balanced
//! dual. Every accepted artifact is checked by counting, not trusted to
//! probability, and carries a transcript so it can be replayed bit-exactly
//! from (inputs, seed).

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::error::{internal, validation, Error, Result};
use crate::family::LayeredFamily;
use crate::graph::{is_separator, sorted_dedup, Graph, Vertex};
use crate::lp::ab::AbLpSolution;
use crate::lp::balanced::BalancedDual;
use crate::lp::Mode;

const MAX_ATTEMPTS: u32 = 64;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Transcript {
    pub seed: u64,
    pub attempts: u32,
    pub accepted: bool,
}

/// Multiset of induced A-B paths with verified per-set congestion.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PathPacking {
    pub paths: Vec<Vec<Vertex>>,
    /// Number of sampled paths meeting each family set.
    pub congestion: Vec<usize>,
    pub max_congestion: usize,
    pub congestion_bound: usize,
    /// Largest |F intersect P| over sampled paths and sets.
    pub max_intersection: usize,
    pub intersection_bound: usize,
    pub target_size: usize,
    pub dual_objective: f64,
    pub ell: usize,
    pub transcript: Transcript,
}

fn pick_cumulative<'a, T>(items: &'a [(T, f64)], total: f64, r: f64) -> &'a (T, f64) {
    let mut acc = 0.0;
    for it in items {
        acc += it.1;
        if r * total < acc {
            return it;
        }
    }
    items.last().expect("nonempty distribution")
}

fn sets_hit(fam: &LayeredFamily, path: &[Vertex]) -> BTreeSet<usize> {
    let mut hit = BTreeSet::new();
    for &v in path {
        hit.extend(fam.sets_containing(v).iter().copied());
    }
    hit
}

fn max_multiplicity(fam: &LayeredFamily, path: &[Vertex]) -> usize {
    let mut count = vec![0usize; fam.len()];
    for &v in path {
        for &fi in fam.sets_containing(v) {
            count[fi] += 1;
        }
    }
    count.into_iter().max().unwrap_or(0)
}

/// Draws ceil(f * ell) paths i.i.d. from the dual mass and accepts when no
/// family set meets more than 6*ell of them; rejected draws are retried
/// with stepped seeds. The dual must be exact and restricted to upward
/// minimal support, which caps every |F intersect P| at 2k-1.
pub fn sample_path_multiset(
    g: &Graph,
    fam: &LayeredFamily,
    a: &[Vertex],
    b: &[Vertex],
    dual: &AbLpSolution,
    ell: usize,
    seed: u64,
) -> Result<PathPacking> {
    if dual.mode != Mode::Exact {
        return Err(validation("path sampling needs an exact-mode dual"));
    }
    if dual.minimal_support != Some(true) {
        return Err(validation(
            "dual must be restricted to upward minimal support first",
        ));
    }
    let f = dual.dual_objective();
    if f <= 0.0 {
        return Err(validation("dual carries no mass"));
    }
    let nf = fam.len();
    let needed = (4.0 * nf as f64).log2() / 6.0;
    if (ell as f64) < needed - 1e-9 {
        return Err(validation(format!(
            "ell = {ell} below the sampling threshold {needed:.3}"
        )));
    }
    let aset: BTreeSet<Vertex> = a.iter().copied().collect();
    let bset: BTreeSet<Vertex> = b.iter().copied().collect();
    let k = fam.thickness();
    let intersection_bound = 2 * k - 1;
    for (p, m) in &dual.dual_paths {
        if *m <= 0.0 {
            return Err(validation("dual path with nonpositive mass"));
        }
        let (s, t) = (p[0], *p.last().unwrap());
        let ends_ok = (aset.contains(&s) && bset.contains(&t))
            || (aset.contains(&t) && bset.contains(&s));
        if !ends_ok || !g.is_induced_path(p) {
            return Err(validation("dual path is not an induced A-B path"));
        }
        if max_multiplicity(fam, p) > intersection_bound {
            return Err(internal(
                "upward minimal path meets a set more than 2k-1 times",
            ));
        }
    }

    let target_size = (f * ell as f64).ceil() as usize;
    let congestion_bound = 6 * ell;
    let mut worst: Vec<usize> = Vec::new();
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha20Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let mut paths = Vec::with_capacity(target_size);
        let mut congestion = vec![0usize; nf];
        for _ in 0..target_size {
            let r: f64 = rng.gen();
            let (p, _) = pick_cumulative(&dual.dual_paths, f, r);
            for fi in sets_hit(fam, p) {
                congestion[fi] += 1;
            }
            paths.push(p.clone());
        }
        let max_congestion = congestion.iter().copied().max().unwrap_or(0);
        if max_congestion <= congestion_bound {
            let max_intersection = paths
                .iter()
                .map(|p| max_multiplicity(fam, p))
                .max()
                .unwrap_or(0);
            return Ok(PathPacking {
                paths,
                congestion,
                max_congestion,
                congestion_bound,
                max_intersection,
                intersection_bound,
                target_size,
                dual_objective: f,
                ell,
                transcript: Transcript { seed, attempts: attempt + 1, accepted: true },
            });
        }
        worst = congestion;
    }
    let mut hist: Vec<(usize, usize)> = worst.into_iter().enumerate().collect();
    hist.sort_by(|a, b| b.1.cmp(&a.1));
    hist.truncate(5);
    Err(Error::SamplingFailed {
        attempts: MAX_ATTEMPTS,
        msg: format!(
            "congestion bound {congestion_bound} exceeded; worst sets (index, count): {hist:?}"
        ),
    })
}

/// The three-stage triple sampler of the balanced dual: u weighted by rho,
/// v uniform on X, then either no path (weighted by eta) or a path from
/// the pair's gamma mass.
#[derive(Clone, Debug)]
pub struct TripleDistribution {
    xs: Vec<Vertex>,
    rho: Vec<(Vertex, f64)>,
    rho_total: f64,
    dual: BalancedDual,
}

pub fn build_triple_distribution(
    xs: &[Vertex],
    dual: &BalancedDual,
) -> Result<TripleDistribution> {
    let xs = sorted_dedup(xs);
    if xs.is_empty() {
        return Err(validation("X must be nonempty"));
    }
    let rho: Vec<(Vertex, f64)> = xs.iter().map(|&u| (u, dual.rho_of(u))).collect();
    let rho_total: f64 = rho.iter().map(|(_, r)| r).sum();
    if rho_total <= 0.0 {
        return Err(validation("rho carries no mass"));
    }
    Ok(TripleDistribution { xs, rho, rho_total, dual: dual.clone() })
}

impl TripleDistribution {
    pub fn sample(&self, rng: &mut ChaCha20Rng) -> (Vertex, Vertex, Option<Vec<Vertex>>) {
        let r: f64 = rng.gen();
        let (u, _) = *pick_cumulative(&self.rho, self.rho_total, r);
        let v = self.xs[rng.gen_range(0..self.xs.len())];
        let eta = self.dual.eta_of(u, v);
        let gamma = self.dual.gamma_of(u, v);
        let gamma_total: f64 = gamma.iter().map(|(_, m)| m).sum();
        if eta + gamma_total <= 0.0 {
            return (u, v, None);
        }
        let r: f64 = rng.gen();
        if r * (eta + gamma_total) < eta {
            return (u, v, None);
        }
        let r: f64 = rng.gen();
        let (p, _) = pick_cumulative(gamma, gamma_total, r);
        (u, v, Some(p.clone()))
    }
}

/// Induced subgraph grown from sampled dual triples.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampledSubgraph {
    pub subgraph: Graph,
    /// Vertices of the subgraph in original ids, sorted; contains X.
    pub vertices: Vec<Vertex>,
    /// |F intersect V(H)| per family set.
    pub membership: Vec<usize>,
    pub max_membership: usize,
    pub membership_bound: f64,
    pub ell: usize,
    pub dual_objective: f64,
    pub triples: Vec<(Vertex, Vertex, Option<Vec<Vertex>>)>,
    pub transcript: Transcript,
}

/// Samples ell triples and keeps the subgraph induced by X plus all path
/// vertices, accepting when every family set meets it in at most
/// 1 + (3 ell / 5 f)(2k - 1) vertices.
pub fn sample_dense_subgraph(
    g: &Graph,
    fam: &LayeredFamily,
    xs: &[Vertex],
    dual: &BalancedDual,
    ell: usize,
    seed: u64,
) -> Result<SampledSubgraph> {
    let xs = sorted_dedup(xs);
    if xs.is_empty() {
        return Err(validation("X must be nonempty"));
    }
    let f = dual.objective;
    if f <= 0.0 {
        return Err(validation("dual objective must be positive"));
    }
    let needed = 7.0 * (f * (g.n() as f64).log2() + xs.len() as f64 + 2.0);
    if (ell as f64) < needed - 1e-9 {
        return Err(validation(format!(
            "ell = {ell} below the sampling threshold {needed:.3}"
        )));
    }
    let k = fam.thickness();
    for ((u, v), paths) in &dual.gamma {
        for (p, m) in paths {
            if *m <= 0.0 {
                continue;
            }
            let ends = (p.first().copied(), p.last().copied());
            let ends_ok = ends == (Some(*u), Some(*v)) || ends == (Some(*v), Some(*u));
            if !ends_ok || !g.is_induced_path(p) {
                return Err(validation("gamma path is not an induced path of its pair"));
            }
            if max_multiplicity(fam, p) > 2 * k - 1 {
                return Err(validation(
                    "gamma path meets a set more than 2k-1 times; restrict the dual first",
                ));
            }
        }
    }
    let sampler = build_triple_distribution(&xs, dual)?;
    let membership_bound = 1.0 + (3.0 * ell as f64) / (5.0 * f) * (2 * k - 1) as f64;

    let mut worst = (0usize, vec![]);
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha20Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let mut triples = Vec::with_capacity(ell);
        let mut verts: BTreeSet<Vertex> = xs.iter().copied().collect();
        for _ in 0..ell {
            let t = sampler.sample(&mut rng);
            if let Some(p) = &t.2 {
                verts.extend(p.iter().copied());
            }
            triples.push(t);
        }
        let vertices: Vec<Vertex> = verts.into_iter().collect();
        let membership: Vec<usize> = (0..fam.len())
            .map(|fi| {
                fam.set(fi)
                    .iter()
                    .filter(|v| vertices.binary_search(v).is_ok())
                    .count()
            })
            .collect();
        let max_membership = membership.iter().copied().max().unwrap_or(0);
        if (max_membership as f64) <= membership_bound + 1e-9 {
            let (subgraph, mapped) = g.induced_subgraph(&vertices)?;
            debug_assert_eq!(mapped, vertices);
            return Ok(SampledSubgraph {
                subgraph,
                vertices,
                membership,
                max_membership,
                membership_bound,
                ell,
                dual_objective: f,
                triples,
                transcript: Transcript { seed, attempts: attempt + 1, accepted: true },
            });
        }
        worst = (max_membership, membership);
    }
    Err(Error::SamplingFailed {
        attempts: MAX_ATTEMPTS,
        msg: format!(
            "membership bound {membership_bound:.3} exceeded (worst {} over {:?})",
            worst.0,
            worst.1.iter().take(8).collect::<Vec<_>>()
        ),
    })
}

/// Turns an (A, 1/2)-balanced separator into a two-sided instance: a
/// partition A1, A2 of A with both sides at most 2|A|/3 such that S is an
/// A1-A2 separator. Components are taken largest A-share first, with the
/// smallest prefix holding at least |A|/3; when S itself holds half of A,
/// half of those vertices form A1 outright.
pub fn split_balanced_to_two_sided(
    g: &Graph,
    a: &[Vertex],
    s: &[Vertex],
) -> Result<(Vec<Vertex>, Vec<Vertex>)> {
    let a = sorted_dedup(a);
    let s = sorted_dedup(s);
    if a.is_empty() {
        return Err(validation("A must be nonempty"));
    }
    let sset: BTreeSet<Vertex> = s.iter().copied().collect();
    let rest: Vec<Vertex> = (0..g.n()).filter(|v| !sset.contains(v)).collect();
    let comps = g.components_within(&rest);
    for c in &comps {
        let share = c.iter().filter(|v| a.binary_search(v).is_ok()).count();
        if 2 * share > a.len() {
            return Err(validation(format!(
                "separator is not (A,1/2)-balanced: a component holds {share} of {}",
                a.len()
            )));
        }
    }

    let in_s: Vec<Vertex> = a.iter().copied().filter(|v| sset.contains(v)).collect();
    let (a1, a2): (Vec<Vertex>, Vec<Vertex>);
    if 2 * in_s.len() >= a.len() {
        let take = a.len().div_ceil(2);
        a1 = in_s[..take].to_vec();
        a2 = a.iter().copied().filter(|v| !a1.contains(v)).collect();
    } else {
        // Component A-shares, largest first (ties to the smaller minimum
        // vertex), with the S-share appended last as the paper orders it.
        let mut shares: Vec<Vec<Vertex>> = comps
            .iter()
            .map(|c| c.iter().copied().filter(|v| a.binary_search(v).is_ok()).collect())
            .filter(|sh: &Vec<Vertex>| !sh.is_empty())
            .collect();
        shares.sort_by(|p, q| q.len().cmp(&p.len()).then(p[0].cmp(&q[0])));
        shares.push(in_s);
        let mut taken: Vec<Vertex> = Vec::new();
        for sh in &shares {
            taken.extend(sh.iter().copied());
            if 3 * taken.len() >= a.len() {
                break;
            }
        }
        a1 = sorted_dedup(&taken);
        a2 = a.iter().copied().filter(|v| a1.binary_search(v).is_err()).collect();
    }
    if a.len() >= 2 && (3 * a1.len() > 2 * a.len() || 3 * a2.len() > 2 * a.len()) {
        return Err(internal("split sides exceed two thirds"));
    }
    if !is_separator(g, &a1, &a2, &s) {
        return Err(internal("split sides are not separated"));
    }
    Ok((a1, a2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_layered_family, OrderedPartition};
    use crate::lp::ab::{restrict_dual_to_upward_minimal, solve_ab_lp};
    use crate::lp::balanced::{restrict_balanced_dual_to_upward_minimal, solve_balanced_lp};
    use crate::lp::LpConfig;

    fn singleton_family(g: &Graph) -> LayeredFamily {
        let parts = vec![(0..g.n()).collect()];
        build_layered_family(g, OrderedPartition::new(parts, g.n()).unwrap()).unwrap()
    }

    fn minimal_ab_dual(g: &Graph, a: &[Vertex], b: &[Vertex]) -> (LayeredFamily, AbLpSolution) {
        let fam = singleton_family(g);
        let sol = solve_ab_lp(g, &fam, a, b, &LpConfig::default()).unwrap();
        let sol = restrict_dual_to_upward_minimal(g, &fam, a, b, &sol, 100_000).unwrap();
        (fam, sol)
    }

    #[test]
    fn single_path_with_full_mass_repeats() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (fam, dual) = minimal_ab_dual(&g, &[0], &[2]);
        let packing = sample_path_multiset(&g, &fam, &[0], &[2], &dual, 2, 7).unwrap();
        assert_eq!(packing.paths, vec![vec![0, 1, 2], vec![0, 1, 2]]);
        assert_eq!(packing.max_congestion, 2);
        assert_eq!(packing.congestion_bound, 12);
        assert_eq!(packing.max_intersection, 1);
        assert!(packing.transcript.accepted);
        assert_eq!(packing.transcript.attempts, 1);
    }

    #[test]
    fn packing_rejects_unrestricted_or_empty_duals() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let fam = singleton_family(&g);
        let raw = solve_ab_lp(&g, &fam, &[0], &[2], &LpConfig::default()).unwrap();
        let err = sample_path_multiset(&g, &fam, &[0], &[2], &raw, 2, 7).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));

        let g2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (fam2, dual2) = minimal_ab_dual(&g2, &[0], &[3]);
        let err = sample_path_multiset(&g2, &fam2, &[0], &[3], &dual2, 2, 7).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    /// Two disjoint paths each carrying mass 1 (f = 2): 4 draws, and both
    /// singleton-set congestions stay at most the count of one path.
    #[test]
    fn two_path_packing_counts_congestion() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let (fam, dual) = minimal_ab_dual(&g, &[0, 3], &[2, 5]);
        assert!((dual.dual_objective() - 2.0).abs() < 1e-9);
        let packing = sample_path_multiset(&g, &fam, &[0, 3], &[2, 5], &dual, 2, 11).unwrap();
        assert_eq!(packing.paths.len(), 4);
        assert!(packing.max_congestion <= 4);
        for p in &packing.paths {
            assert!(p == &vec![0, 1, 2] || p == &vec![3, 4, 5]);
        }
    }

    #[test]
    fn packing_replays_bit_exactly() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let (fam, dual) = minimal_ab_dual(&g, &[0, 3], &[2, 5]);
        let p1 = sample_path_multiset(&g, &fam, &[0, 3], &[2, 5], &dual, 3, 99).unwrap();
        let p2 = sample_path_multiset(&g, &fam, &[0, 3], &[2, 5], &dual, 3, 99).unwrap();
        assert_eq!(p1.paths, p2.paths);
        assert_eq!(p1.congestion, p2.congestion);
    }

    fn hand_dual(
        rho: Vec<(Vertex, f64)>,
        eta: Vec<((Vertex, Vertex), f64)>,
        gamma: Vec<((Vertex, Vertex), Vec<(Vec<Vertex>, f64)>)>,
        objective: f64,
    ) -> BalancedDual {
        BalancedDual { objective, rho, eta, gamma }
    }

    #[test]
    fn triple_sampler_deterministic_single_path() {
        let dual = hand_dual(
            vec![(0, 1.0)],
            vec![],
            vec![((0, 2), vec![(vec![0, 1, 2], 0.5)])],
            0.1,
        );
        let sampler = build_triple_distribution(&[0, 2], &dual).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for _ in 0..100 {
            let (u, v, p) = sampler.sample(&mut rng);
            assert_eq!(u, 0);
            match v {
                0 => assert!(p.is_none()),
                2 => assert_eq!(p.unwrap(), vec![0, 1, 2]),
                _ => panic!("v = {v} outside X"),
            }
        }
    }

    #[test]
    fn triple_sampler_eta_only_yields_empty() {
        let dual = hand_dual(vec![(0, 1.0)], vec![((0, 0), 0.3), ((0, 2), 0.3)], vec![], 0.1);
        let sampler = build_triple_distribution(&[0, 2], &dual).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for _ in 0..100 {
            let (_, _, p) = sampler.sample(&mut rng);
            assert!(p.is_none());
        }
    }

    #[test]
    fn triple_sampler_splits_equal_gamma_evenly() {
        let dual = hand_dual(
            vec![(0, 1.0)],
            vec![],
            vec![((0, 2), vec![(vec![0, 1, 2], 0.5), (vec![0, 3, 2], 0.5)])],
            0.1,
        );
        let sampler = build_triple_distribution(&[0, 2], &dual).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(42);
        let mut first = 0usize;
        let mut total = 0usize;
        while total < 10_000 {
            let (_, v, p) = sampler.sample(&mut rng);
            if v != 2 {
                continue;
            }
            total += 1;
            if p.as_deref() == Some(&[0, 1, 2][..]) {
                first += 1;
            }
        }
        // 3 sigma around a fair coin over 10^4 draws.
        assert!((first as f64 - 5000.0).abs() < 150.0, "saw {first}");
    }

    #[test]
    fn zero_rho_rejected() {
        let dual = hand_dual(vec![(0, 0.0)], vec![], vec![], 0.0);
        assert!(matches!(
            build_triple_distribution(&[0], &dual),
            Err(Error::Validation(_))
        ));
    }

    /// All mass on eta: no paths sampled, H is the subgraph induced by X.
    #[test]
    fn dense_subgraph_with_no_paths_is_x() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let fam = singleton_family(&g);
        let dual = hand_dual(vec![(0, 1.0), (2, 1.0)], vec![((0, 0), 0.1)], vec![], 0.05);
        let ell = 7 * 5; // above 7 (f log n + |X| + 2) for f = 0.05
        let sub = sample_dense_subgraph(&g, &fam, &[0, 2], &dual, ell, 3).unwrap();
        assert_eq!(sub.vertices, vec![0, 2]);
        assert_eq!(sub.subgraph.n(), 2);
        assert_eq!(sub.subgraph.edges().len(), 0);
        assert!(sub.transcript.accepted);
        assert_eq!(sub.max_membership, 1);
    }

    #[test]
    fn dense_subgraph_from_solved_dual_contains_x() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let fam = singleton_family(&g);
        let sol = solve_balanced_lp(&g, &fam, &[0, 3], &LpConfig::default()).unwrap();
        let dual = sol.dual.clone().unwrap();
        let (dual, complete) =
            restrict_balanced_dual_to_upward_minimal(&g, &fam, &dual, 100_000).unwrap();
        assert!(complete);
        let f = dual.objective;
        let ell = (7.0 * (f * (6f64).log2() + 2.0 + 2.0)).ceil() as usize;
        let sub = sample_dense_subgraph(&g, &fam, &[0, 3], &dual, ell, 17).unwrap();
        assert!(sub.vertices.binary_search(&0).is_ok());
        assert!(sub.vertices.binary_search(&3).is_ok());
        for (fi, &count) in sub.membership.iter().enumerate() {
            let manual = fam
                .set(fi)
                .iter()
                .filter(|v| sub.vertices.binary_search(v).is_ok())
                .count();
            assert_eq!(count, manual);
        }
        let replay = sample_dense_subgraph(&g, &fam, &[0, 3], &dual, ell, 17).unwrap();
        assert_eq!(replay.vertices, sub.vertices);
        assert_eq!(replay.triples, sub.triples);
    }

    #[test]
    fn split_takes_half_from_separator() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (a1, a2) = split_balanced_to_two_sided(&g, &[0, 2], &[0, 1, 2]).unwrap();
        assert_eq!(a1, vec![0]);
        assert_eq!(a2, vec![2]);
    }

    #[test]
    fn split_groups_components() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let (a1, a2) = split_balanced_to_two_sided(&g, &[0, 3], &[]).unwrap();
        assert_eq!(a1, vec![0]);
        assert_eq!(a2, vec![3]);
    }

    #[test]
    fn split_rejects_unbalanced_separator() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let err = split_balanced_to_two_sided(&g, &[0, 2], &[]).unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn split_singleton_a_inside_separator() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (a1, a2) = split_balanced_to_two_sided(&g, &[0], &[0]).unwrap();
        assert_eq!(a1, vec![0]);
        assert!(a2.is_empty());
    }
}
