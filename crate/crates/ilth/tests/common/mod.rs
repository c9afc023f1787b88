//! Deterministic fixture generators shared by the integration suites.
// each test binary uses its own subset
#![allow(dead_code)]

use ilth::hypergraph::Hypergraph;
use ilth::random::SplitMix64;
use ilth::Graph;

/// Connected k-uniform hypergraph with no isolated vertices: a covering
/// chain of edges first (each reusing one covered vertex), then extra random
/// edges. Deterministic in the seed.
pub fn random_connected_h0(k: usize, n: usize, extra_edges: usize, seed: u64) -> Hypergraph {
    assert!(n >= k);
    let mut rng = SplitMix64::new(seed);
    let mut covered: Vec<u32> = Vec::new();
    let mut uncovered: Vec<u32> = (0..n as u32).collect();
    let mut edges: Vec<Vec<u32>> = Vec::new();
    // initial edge
    let mut first = Vec::with_capacity(k);
    for _ in 0..k {
        let idx = rng.next_below(uncovered.len() as u64) as usize;
        first.push(uncovered.swap_remove(idx));
    }
    covered.extend(&first);
    first.sort_unstable();
    edges.push(first);
    // cover the rest, one anchored edge at a time
    while !uncovered.is_empty() {
        let mut edge = Vec::with_capacity(k);
        let anchor = covered[rng.next_below(covered.len() as u64) as usize];
        edge.push(anchor);
        while edge.len() < k && !uncovered.is_empty() {
            let idx = rng.next_below(uncovered.len() as u64) as usize;
            let v = uncovered.swap_remove(idx);
            covered.push(v);
            edge.push(v);
        }
        while edge.len() < k {
            let v = covered[rng.next_below(covered.len() as u64) as usize];
            if !edge.contains(&v) {
                edge.push(v);
            }
        }
        edge.sort_unstable();
        if !edges.contains(&edge) {
            edges.push(edge);
        }
    }
    // extra random edges touching the covered set (everything is covered now)
    let target_len = edges.len() + extra_edges;
    let mut attempts = 0;
    while edges.len() < target_len && attempts < 1000 {
        attempts += 1;
        let mut edge = Vec::with_capacity(k);
        while edge.len() < k {
            let v = rng.next_below(n as u64) as u32;
            if !edge.contains(&v) {
                edge.push(v);
            }
        }
        edge.sort_unstable();
        if !edges.contains(&edge) {
            edges.push(edge);
        }
    }
    Hypergraph::new(k, n, edges).expect("fixture construction")
}

/// Arbitrary (possibly disconnected) random hypergraph for oracle cross
/// checks.
pub fn random_hypergraph(k: usize, n: usize, m: usize, seed: u64) -> Hypergraph {
    let mut rng = SplitMix64::new(seed);
    let mut edges: Vec<Vec<u32>> = Vec::new();
    let mut attempts = 0;
    while edges.len() < m && attempts < 10_000 {
        attempts += 1;
        let mut edge = Vec::with_capacity(k);
        while edge.len() < k {
            let v = rng.next_below(n as u64) as u32;
            if !edge.contains(&v) {
                edge.push(v);
            }
        }
        edge.sort_unstable();
        if !edges.contains(&edge) {
            edges.push(edge);
        }
    }
    Hypergraph::new(k, n, edges).expect("fixture construction")
}

/// Random pattern graph admitting a homomorphism to `target`: sample an
/// image for every vertex, then keep only edges between pairs with adjacent
/// images, with probability `keep_permille`/1000 each.
pub fn random_hom_compatible_graph(
    n: usize,
    target: &Graph,
    keep_permille: u64,
    seed: u64,
) -> (Graph, Vec<u32>) {
    let mut rng = SplitMix64::new(seed);
    let image: Vec<u32> = (0..n)
        .map(|_| rng.next_below(target.n() as u64) as u32)
        .collect();
    let mut pairs = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if target.has_edge(image[u as usize], image[v as usize])
                && rng.next_below(1000) < keep_permille
            {
                pairs.push((u, v));
            }
        }
    }
    (Graph::new(n, pairs).unwrap(), image)
}
