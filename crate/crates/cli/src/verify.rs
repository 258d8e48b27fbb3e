//! Independent re-verification of emitted artifacts. Each kind is checked
//! from the graph and the recorded payload alone; any mismatch names the
//! violated property.

use std::collections::BTreeSet;

use coarse_decomp::decomposition::{
    bag_quality, distance_r_independence, validate_tree_decomposition, DistanceIndependence,
};
use coarse_decomp::error::{validation, Result};
use coarse_decomp::family::{
    build_layered_family, degeneracy, degeneracy_layering, LayeredFamily, OrderedPartition,
};
use coarse_decomp::graph::{
    is_separator, quotient_by_components, sorted_dedup, Graph, Vertex, UNREACHABLE,
};
use coarse_decomp::lp::ab::solve_ab_lp;
use coarse_decomp::lp::balanced::solve_balanced_lp;
use coarse_decomp::lp::Mode;
use coarse_decomp::menger::{
    menger_max_flow, verify_anticomplete_packing, AnticompletePacking, MengerPipelineOutcome,
};
use coarse_decomp::partition::greedy_four_radius_partition;
use coarse_decomp::rounding::fractional_cover_lp;

use crate::artifact::{
    AbLpPayload, AbSeparatorPayload, Artifact, BalancedLpPayload, BalancedSeparatorPayload,
    FamilyPayload, MengerPayload, MengerPipelinePayload, PartitionPayload, PathPackingPayload,
    SampledSubgraphPayload, TreeDecompPayload, TwPipelinePayload,
};

fn ensure(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(validation(msg.to_string()))
    }
}

fn family_from_layering(g: &Graph, layering: &[Vec<Vertex>]) -> Result<LayeredFamily> {
    let part = OrderedPartition::new(layering.to_vec(), g.n())?;
    build_layered_family(g, part)
}

fn payload<P: serde::de::DeserializeOwned>(artifact: &Artifact) -> Result<P> {
    serde_json::from_value(artifact.payload.clone())
        .map_err(|e| validation(format!("payload does not match kind {}: {e}", artifact.kind)))
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

/// Largest |C intersect X| / |X| over components of g - sep.
fn largest_x_fraction(g: &Graph, xs: &[Vertex], sep: &[Vertex]) -> f64 {
    let blocked: BTreeSet<Vertex> = sep.iter().copied().collect();
    let in_x: BTreeSet<Vertex> = xs.iter().copied().collect();
    let mut seen = vec![false; g.n()];
    let mut best = 0usize;
    for start in 0..g.n() {
        if seen[start] || blocked.contains(&start) {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 0usize;
        while let Some(u) = stack.pop() {
            if in_x.contains(&u) {
                count += 1;
            }
            for &w in g.neighbors(u) {
                if !seen[w] && !blocked.contains(&w) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        best = best.max(count);
    }
    best as f64 / xs.len().max(1) as f64
}

fn check_path_in_graph(g: &Graph, p: &[Vertex], a: &[Vertex], b: &[Vertex]) -> Result<()> {
    ensure(!p.is_empty(), "a recorded path is empty")?;
    let distinct: BTreeSet<Vertex> = p.iter().copied().collect();
    ensure(distinct.len() == p.len(), "a recorded path repeats a vertex")?;
    for w in p.windows(2) {
        ensure(g.has_edge(w[0], w[1]), "a recorded path uses a non-edge")?;
    }
    ensure(a.contains(&p[0]), "a recorded path does not start in A")?;
    ensure(b.contains(p.last().unwrap()), "a recorded path does not end in B")?;
    Ok(())
}

fn verify_partition(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: PartitionPayload = payload(artifact)?;
    let all: Vec<Vertex> = (0..g.n()).collect();
    p.partition.validate(g, &all)?;
    ensure(p.part_count == p.partition.part_count(), "part count does not match")?;
    Ok(format!("four-radius partition with {} parts re-verified", p.part_count))
}

fn verify_family(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: FamilyPayload = payload(artifact)?;
    let fam = family_from_layering(g, &p.layering)?;
    let rebuilt = fam.to_json();
    ensure(rebuilt.parts == p.family.parts, "layering parts do not match the family")?;
    ensure(rebuilt.sets == p.family.sets, "family sets do not match the recorded layering")?;
    ensure(rebuilt.thickness == p.family.thickness, "thickness does not match")?;
    let report = fam.verify_witnessing(g, p.witnessing.d);
    ensure(report.ok, "family is not witnessing at the recorded d")?;
    ensure(report.ok == p.witnessing.ok, "witnessing report does not match")?;
    Ok(format!(
        "layered family with {} sets, thickness {}, witnessing d={} re-verified",
        rebuilt.sets.len(),
        rebuilt.thickness,
        p.witnessing.d
    ))
}

fn verify_ab_lp(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: AbLpPayload = payload(artifact)?;
    let fam = family_from_layering(g, &p.layering)?;
    let cfg = artifact.lp_config();
    let sol = solve_ab_lp(g, &fam, &p.a, &p.b, &cfg)?;
    let tol = artifact.tol.max(1e-6);
    ensure(
        close(sol.objective, p.solution.objective, tol),
        "re-solved objective does not match",
    )?;
    ensure(p.solution.x.iter().all(|&v| v >= -1e-9), "negative set weight recorded")?;
    if p.solution.mode == Mode::Exact {
        ensure(
            close(p.dual_objective, p.solution.objective, tol),
            "strong duality gap exceeds the tolerance",
        )?;
    }
    Ok(format!("ab lp objective {:.6} re-verified", p.solution.objective))
}

fn check_cover(
    fam: &LayeredFamily,
    set_indices: &[usize],
    centers: &[Vertex],
    covered: &[Vertex],
) -> Result<()> {
    let mut union: BTreeSet<Vertex> = BTreeSet::new();
    for &fi in set_indices {
        ensure(fi < fam.len(), "cover set index out of range")?;
        union.extend(fam.set(fi).iter().copied());
    }
    ensure(
        covered.iter().all(|v| union.contains(v)),
        "recorded cover misses separator vertices",
    )?;
    let expect: Vec<Vertex> = set_indices.iter().map(|&fi| fam.center_of_set(fi)).collect();
    ensure(expect == centers, "cover centers do not match the cover sets")?;
    Ok(())
}

fn verify_ab_separator(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: AbSeparatorPayload = payload(artifact)?;
    let fam = family_from_layering(g, &p.layering)?;
    let cert = &p.certificate;
    ensure(
        is_separator(g, &p.a, &p.b, &cert.separator),
        "separator fails to separate A from B",
    )?;
    ensure(cert.separation_verified, "certificate does not claim separation")?;
    check_cover(&fam, &cert.cover.set_indices, &cert.cover.centers, &cert.separator)?;
    let cfg = artifact.lp_config();
    let (fcov, _) = fractional_cover_lp(&fam, &cert.separator, &cfg)?;
    ensure(
        close(fcov, cert.fcov, artifact.tol.max(1e-6)),
        "fractional cover does not match",
    )?;
    for b in &cert.bounds {
        ensure(
            b.satisfied == (b.actual <= b.claimed + 1e-9),
            "a recorded bound check is inconsistent",
        )?;
    }
    Ok(format!(
        "ab separator of {} vertices, fcov {:.4}, re-verified",
        cert.separator.len(),
        cert.fcov
    ))
}

fn verify_balanced_lp(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: BalancedLpPayload = payload(artifact)?;
    let fam = family_from_layering(g, &p.layering)?;
    let cfg = artifact.lp_config();
    let sol = solve_balanced_lp(g, &fam, &p.xs, &cfg)?;
    let tol = artifact.tol.max(1e-6);
    ensure(close(sol.objective, p.objective, tol), "re-solved objective does not match")?;
    if let (Some(rec), Some(dual)) = (p.dual_objective, sol.dual.as_ref()) {
        ensure(close(rec, dual.objective, tol), "dual objective does not match")?;
    }
    Ok(format!("balanced lp objective {:.6} re-verified", p.objective))
}

fn verify_balanced_separator(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: BalancedSeparatorPayload = payload(artifact)?;
    let fam = family_from_layering(g, &p.layering)?;
    let cert = &p.certificate;
    ensure(
        fam.is_downward_closed(&cert.separator),
        "separator is not downward closed",
    )?;
    let frac = largest_x_fraction(g, &p.xs, &cert.separator);
    ensure(
        close(frac, cert.largest_fraction, 1e-9),
        "largest component fraction does not match",
    )?;
    ensure(frac <= 0.95 + 1e-9, "a component keeps more than 95% of X")?;
    check_cover(&fam, &cert.cover.set_indices, &cert.cover.centers, &cert.separator)?;
    let cfg = artifact.lp_config();
    let (fcov, _) = fractional_cover_lp(&fam, &cert.separator, &cfg)?;
    ensure(
        close(fcov, cert.fcov, artifact.tol.max(1e-6)),
        "fractional cover does not match",
    )?;
    Ok(format!(
        "balanced separator of {} vertices, largest fraction {:.3}, re-verified",
        cert.separator.len(),
        cert.largest_fraction
    ))
}

fn verify_path_packing(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: PathPackingPayload = payload(artifact)?;
    let fam = family_from_layering(g, &p.layering)?;
    let pk = &p.packing;
    ensure(pk.paths.len() == pk.target_size, "path count does not match the target")?;
    for path in &pk.paths {
        check_path_in_graph(g, path, &p.a, &p.b)?;
    }
    let mut congestion = vec![0usize; fam.len()];
    let mut max_inter = 0usize;
    for path in &pk.paths {
        let pset: BTreeSet<Vertex> = path.iter().copied().collect();
        for fi in 0..fam.len() {
            let inter = fam.set(fi).iter().filter(|v| pset.contains(v)).count();
            if inter > 0 {
                congestion[fi] += 1;
            }
            max_inter = max_inter.max(inter);
        }
    }
    ensure(congestion == pk.congestion, "per-set congestion does not match")?;
    let max_c = congestion.iter().copied().max().unwrap_or(0);
    ensure(max_c == pk.max_congestion, "maximum congestion does not match")?;
    ensure(max_c <= pk.congestion_bound, "congestion exceeds the 6 ell bound")?;
    ensure(max_inter == pk.max_intersection, "maximum intersection does not match")?;
    ensure(
        max_inter <= pk.intersection_bound,
        "a set meets a path in more than 2k-1 vertices",
    )?;
    Ok(format!(
        "path packing of {} paths, congestion {}/{}, re-verified",
        pk.paths.len(),
        pk.max_congestion,
        pk.congestion_bound
    ))
}

fn verify_sampled_subgraph(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: SampledSubgraphPayload = payload(artifact)?;
    let fam = family_from_layering(g, &p.layering)?;
    let s = &p.sample;
    let (h, _) = g.induced_subgraph(&s.vertices)?;
    ensure(h.edges() == s.subgraph.edges(), "subgraph is not the induced subgraph")?;
    ensure(h.n() == s.subgraph.n(), "subgraph order does not match")?;
    let vset: BTreeSet<Vertex> = s.vertices.iter().copied().collect();
    ensure(p.xs.iter().all(|v| vset.contains(v)), "subgraph does not contain X")?;
    let membership: Vec<usize> = (0..fam.len())
        .map(|fi| fam.set(fi).iter().filter(|v| vset.contains(v)).count())
        .collect();
    ensure(membership == s.membership, "per-set membership does not match")?;
    let max_m = membership.iter().copied().max().unwrap_or(0);
    ensure(max_m == s.max_membership, "maximum membership does not match")?;
    ensure(
        (max_m as f64) <= s.membership_bound + 1e-9,
        "a family set meets the subgraph beyond the bound",
    )?;
    Ok(format!(
        "sampled subgraph on {} vertices, membership {}/{:.2}, re-verified",
        s.vertices.len(),
        s.max_membership,
        s.membership_bound
    ))
}

const VIOLATION_NAMES: [&str; 5] = [
    "node structure",
    "vertex coverage",
    "edge coverage",
    "connected subtrees",
    "witness union",
];

fn report_violation(report: &coarse_decomp::decomposition::DecompositionReport) -> Result<()> {
    if report.ok {
        return Ok(());
    }
    let name = report
        .violation
        .map(|v| VIOLATION_NAMES.get(v as usize).copied().unwrap_or("unknown"))
        .unwrap_or("unknown");
    Err(validation(format!(
        "tree decomposition violates {name}: {}",
        report.detail.as_deref().unwrap_or("no detail recorded")
    )))
}

fn verify_tree_decomposition(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: TreeDecompPayload = payload(artifact)?;
    let fam = family_from_layering(g, &p.layering)?;
    let report = validate_tree_decomposition(g, &p.decomposition, Some(&fam));
    report_violation(&report)?;
    let root_bag: BTreeSet<Vertex> =
        p.decomposition.nodes[p.decomposition.root].bag.iter().copied().collect();
    ensure(
        p.x.iter().all(|v| root_bag.contains(v)),
        "a terminal is missing from the root bag",
    )?;
    Ok(format!(
        "tree decomposition with {} nodes, max bag {}, re-verified",
        p.decomposition.nodes.len(),
        p.decomposition.max_bag()
    ))
}

fn verify_tw_pipeline(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: TwPipelinePayload = payload(artifact)?;
    let r = &p.result;
    let rp = greedy_four_radius_partition(g)?;
    let (gq, _) = quotient_by_components(g, &rp.parts)?;
    ensure(gq.n() == r.quotient_n, "quotient order does not match")?;
    let (d, _) = degeneracy(&gq);
    ensure(d == r.degeneracy, "quotient degeneracy does not match")?;
    let layering = degeneracy_layering(&gq, d)?;
    let famq = build_layered_family(&gq, layering)?;
    report_violation(&validate_tree_decomposition(&gq, &r.quotient_decomposition, Some(&famq)))?;
    report_violation(&validate_tree_decomposition(g, &r.decomposition, None))?;
    let quality = bag_quality(g, &r.decomposition, r.lift_radius_vertices)?;
    ensure(quality.ok == r.quality.ok, "bag quality audit does not match")?;
    ensure(quality.ok, "a lifted bag fails its cover or doubling audit")?;
    Ok(format!(
        "treewidth pipeline re-verified: {} lifted nodes, max bag {}, cover radius {}",
        r.decomposition.nodes.len(),
        r.decomposition.max_bag(),
        r.lift_radius_vertices
    ))
}

fn verify_menger(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: MengerPayload = payload(artifact)?;
    let rerun = menger_max_flow(g, &p.a, &p.b, p.result.k)?;
    ensure(rerun.flow == p.result.flow, "re-run flow value does not match")?;
    match (&p.result.paths, &p.result.separator) {
        (Some(paths), None) => {
            ensure(paths.len() == p.result.k, "path count does not match k")?;
            let mut used: BTreeSet<Vertex> = BTreeSet::new();
            for path in paths {
                check_path_in_graph(g, path, &p.a, &p.b)?;
                for &v in path {
                    ensure(used.insert(v), "recorded paths share a vertex")?;
                }
            }
            Ok(format!("{} disjoint paths re-verified", paths.len()))
        }
        (None, Some(sep)) => {
            ensure(
                is_separator(g, &p.a, &p.b, sep),
                "recorded separator fails to separate",
            )?;
            ensure(sep.len() == p.result.flow, "separator size does not match the flow")?;
            ensure(sep.len() < p.result.k, "separator is not smaller than k")?;
            Ok(format!("minimum separator of {} vertices re-verified", sep.len()))
        }
        _ => Err(validation("result must carry exactly one of paths or separator")),
    }
}

fn verify_menger_pipeline(g: &Graph, artifact: &Artifact) -> Result<String> {
    let p: MengerPipelinePayload = payload(artifact)?;
    match &p.result.outcome {
        MengerPipelineOutcome::Packing(cert) => {
            ensure(cert.verified, "certificate does not claim verification")?;
            ensure(cert.k == p.k, "packing k does not match the request")?;
            let packing = AnticompletePacking { paths: cert.paths.clone() };
            verify_anticomplete_packing(g, &p.a, &p.b, &packing, p.k)?;
            Ok(format!("anticomplete packing of {} paths re-verified", cert.paths.len()))
        }
        MengerPipelineOutcome::Separator(cert) => {
            ensure(
                is_separator(g, &p.a, &p.b, &cert.separator),
                "lifted separator fails to separate",
            )?;
            let rp = greedy_four_radius_partition(g)?;
            let (gq, qmap) = quotient_by_components(g, &rp.parts)?;
            let (d, _) = degeneracy(&gq);
            let layering = degeneracy_layering(&gq, d)?;
            let famq = build_layered_family(&gq, layering)?;
            let mut expanded: BTreeSet<usize> = BTreeSet::new();
            for &fi in &cert.cover_sets {
                ensure(fi < famq.len(), "cover set index out of range")?;
                expanded.extend(famq.set(fi).iter().copied());
            }
            let quotient_separator: Vec<usize> = expanded.iter().copied().collect();
            ensure(
                quotient_separator == cert.quotient_separator,
                "quotient separator does not match the cover sets",
            )?;
            ensure(
                qmap.lift_set(&quotient_separator) == cert.separator,
                "separator does not match the lifted quotient separator",
            )?;
            let centers: Vec<Vertex> = sorted_dedup(
                &cert
                    .cover_sets
                    .iter()
                    .map(|&fi| qmap.representative(famq.center_of_set(fi)))
                    .collect::<Vec<_>>(),
            );
            ensure(centers == cert.centers, "centers do not match the cover sets")?;
            if !cert.separator.is_empty() {
                ensure(!centers.is_empty(), "nonempty separator with no centers")?;
                let dist = g.hop_distances(&centers);
                ensure(
                    cert.separator.iter().all(|&v| {
                        dist[v] != UNREACHABLE && dist[v] <= cert.cover_radius_vertices - 1
                    }),
                    "a separator vertex lies beyond the cover radius of every center",
                )?;
            }
            match distance_r_independence(g, &cert.separator, cert.independence_radius_edges)? {
                DistanceIndependence::Exact { alpha, .. } => {
                    ensure(cert.alpha == Some(alpha), "independence number does not match")?;
                    ensure(
                        alpha <= centers.len() || cert.separator.is_empty(),
                        "independence at doubled radius exceeds the center count",
                    )?;
                }
                DistanceIndependence::Inconclusive { lower_bound, .. } => {
                    ensure(cert.alpha.is_none(), "recorded exact alpha was not reproducible")?;
                    ensure(
                        lower_bound <= centers.len(),
                        "independence lower bound exceeds the center count",
                    )?;
                }
            }
            ensure(
                cert.alpha_within_centers,
                "certificate does not claim alpha within centers",
            )?;
            Ok(format!(
                "scattered separator of {} vertices around {} centers re-verified",
                cert.separator.len(),
                cert.centers.len()
            ))
        }
    }
}

pub fn verify_artifact(g: &Graph, artifact: &Artifact) -> Result<String> {
    // only the order is pinned: edge edits should surface as semantic
    // failures of the recorded certificate, not as a schema mismatch
    if artifact.n != g.n() {
        return Err(validation(format!(
            "graph does not match the artifact: expected n={}, got n={}",
            artifact.n,
            g.n()
        )));
    }
    match artifact.kind.as_str() {
        "four-radius-partition" => verify_partition(g, artifact),
        "layered-family" => verify_family(g, artifact),
        "ab-lp" => verify_ab_lp(g, artifact),
        "ab-separator" => verify_ab_separator(g, artifact),
        "balanced-lp" => verify_balanced_lp(g, artifact),
        "balanced-separator" => verify_balanced_separator(g, artifact),
        "path-packing" => verify_path_packing(g, artifact),
        "sampled-subgraph" => verify_sampled_subgraph(g, artifact),
        "tree-decomposition" => verify_tree_decomposition(g, artifact),
        "treewidth-pipeline" => verify_tw_pipeline(g, artifact),
        "menger-result" => verify_menger(g, artifact),
        "menger-pipeline" => verify_menger_pipeline(g, artifact),
        other => Err(validation(format!("unrecognized artifact kind {other:?}"))),
    }
}
