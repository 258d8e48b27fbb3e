//! Deterministic graph generators for fixtures and experiments. Every
//! kind maps (params, seed) to one graph; the seed only matters for gnp.

use coarse_decomp::error::{validation, Result};
use coarse_decomp::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    if rows == 0 || cols == 0 {
        return Err(validation("grid dimensions must be positive"));
    }
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::from_edges(rows * cols, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(validation("path needs at least one vertex"));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(validation("star needs at least one vertex"));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(validation("cycle needs at least three vertices"));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(validation("gnp needs at least one vertex"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(validation("edge probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Terminals 0 and n-1 joined by `branches` internally disjoint paths of
/// `len` edges each.
pub fn theta(len: usize, branches: usize) -> Result<Graph> {
    if len == 0 || branches == 0 {
        return Err(validation("theta needs positive length and branch count"));
    }
    if len == 1 && branches > 1 {
        return Err(validation("length-1 branches would duplicate the terminal edge"));
    }
    let inner = len - 1;
    let n = 2 + branches * inner;
    let (s, t) = (0, n - 1);
    let mut edges = Vec::new();
    for b in 0..branches {
        if inner == 0 {
            edges.push((s, t));
            continue;
        }
        let first = 1 + b * inner;
        edges.push((s, first));
        for i in 1..inner {
            edges.push((first + i - 1, first + i));
        }
        edges.push((first + inner - 1, t));
    }
    Graph::from_edges(n, &edges)
}

/// `width` disjoint paths with `length` vertices each; corridor c spans
/// vertices c*length .. (c+1)*length - 1.
pub fn corridor(width: usize, length: usize) -> Result<Graph> {
    if width == 0 || length == 0 {
        return Err(validation("corridor needs positive width and length"));
    }
    let mut edges = Vec::new();
    for c in 0..width {
        for i in 1..length {
            edges.push((c * length + i - 1, c * length + i));
        }
    }
    Graph::from_edges(width * length, &edges)
}

/// Two stars of `size` vertices whose centers are joined by a path with
/// `bridge` edges. The first center is 0; the second is size + bridge - 1.
pub fn two_balls(size: usize, bridge: usize) -> Result<Graph> {
    if size < 2 || bridge == 0 {
        return Err(validation("two-balls needs size >= 2 and a positive bridge"));
    }
    let c1 = 0;
    let c2 = size + bridge - 1;
    let n = 2 * size + bridge - 1;
    let mut edges = Vec::new();
    for leaf in 1..size {
        edges.push((c1, leaf));
    }
    let mut prev = c1;
    for v in size..c2 {
        edges.push((prev, v));
        prev = v;
    }
    edges.push((prev, c2));
    for leaf in (c2 + 1)..n {
        edges.push((c2, leaf));
    }
    Graph::from_edges(n, &edges)
}

/// Edge-list text in the format the parser reads back: a vertex-count
/// header followed by one sorted "u v" line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_is_a_four_cycle() {
        let g = grid(2, 2).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(g.degree(0) == 2 && g.degree(3) == 2);
    }

    #[test]
    fn theta_three_three_shape() {
        let g = theta(3, 3).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 9);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(7), 3);
    }

    #[test]
    fn gnp_is_reproducible() {
        let a = gnp(10, 0.3, 1).unwrap();
        let b = gnp(10, 0.3, 1).unwrap();
        assert_eq!(a.edges(), b.edges());
        let c = gnp(10, 0.3, 2).unwrap();
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn edge_list_round_trips() {
        let g = two_balls(4, 2).unwrap();
        assert_eq!(g.n(), 9);
        let text = to_edge_list(&g);
        let back = Graph::from_edge_list(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.n(), g.n());
    }
}
