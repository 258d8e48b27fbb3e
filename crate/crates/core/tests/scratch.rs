use std::collections::BTreeSet;

use coarse_decomp::family::{build_layered_family, degeneracy, degeneracy_layering};
use coarse_decomp::graph::{Graph, Vertex};
use coarse_decomp::lp::ab::solve_ab_lp;
use coarse_decomp::lp::LpConfig;
use coarse_decomp::rounding::round_ab_separator;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn connected_graph(n: usize, extra: usize, rng: &mut ChaCha20Rng) -> Graph {
    let mut edges: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    if n >= 2 {
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).expect("connected graph")
}

fn distinct_from(pool: &[Vertex], count: usize, rng: &mut ChaCha20Rng) -> Vec<Vertex> {
    let mut picked: BTreeSet<Vertex> = BTreeSet::new();
    while picked.len() < count.min(pool.len()) {
        picked.insert(pool[rng.gen_range(0..pool.len())]);
    }
    picked.into_iter().collect()
}

#[test]
fn dump_instance_53() {
    let mut rng = ChaCha20Rng::seed_from_u64(303);
    let cfg = LpConfig::default();
    for i in 0..100usize {
        let n = rng.gen_range(6..=24);
        let g = connected_graph(n, rng.gen_range(0..=n / 2), &mut rng);
        let all: Vec<Vertex> = (0..n).collect();
        let a = distinct_from(&all, rng.gen_range(1..=3), &mut rng);
        let rest: Vec<Vertex> = all.iter().copied().filter(|v| !a.contains(v)).collect();
        let b = distinct_from(&rest, rng.gen_range(1..=3), &mut rng);
        if i != 53 {
            continue;
        }
        println!("n={n} edges={:?}", g.edges());
        println!("a={a:?} b={b:?}");
        let (d, _) = degeneracy(&g);
        let layering = degeneracy_layering(&g, d).unwrap();
        println!("d={d} layering={:?}", layering.parts());
        let fam = build_layered_family(&g, layering).unwrap();
        for idx in 0..fam.len() {
            println!("set {idx} center {} = {:?}", fam.center_of_set(idx), fam.set(idx));
        }
        let sol = solve_ab_lp(&g, &fam, &a, &b, &cfg).unwrap();
        println!("objective={} x={:?}", sol.objective, sol.x);
        println!("dual={:?}", sol.dual_paths);
        match round_ab_separator(&g, &fam, &a, &b, &sol, &cfg) {
            Ok(c) => println!("separator={:?} fcov={}", c.separator, c.fcov),
            Err(e) => println!("ERROR: {e}"),
        }
    }
}
