//! Graph homomorphism search and the constructive embedding of graphs into
//! 2-sections of iterated hypergraphs.
//!
//! The embedding follows the constructive argument in two phases. Phase one
//! makes the map injective: each generation, the lowest-id vertex whose image
//! collides with an earlier one is redirected to the clone of that image.
//! Phase two makes it induced: each generation, the lexicographically first
//! non-edge of the pattern whose endpoints map to adjacent hosts has both
//! images redirected to their clones, which are never adjacent to each other.
//! Each fix advances exactly one generation, so the returned t equals
//! (initial collisions) + (spurious edges after phase one).
//!
//! Hosts are grown with the graph-level clone step; that is the 2-section of
//! the hypergraph step, so the result embeds into the 2-section of the
//! corresponding hypergraph generation (the commutation is tested in
//! `graph.rs`), while host growth stays 3^t instead of (k+1)^t.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// A vertex map from a pattern graph into a host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexMap {
    pub image: Vec<u32>,
}

impl VertexMap {
    pub fn new(image: Vec<u32>) -> Self {
        VertexMap { image }
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<u32> = self.image.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Every pattern edge maps to a host edge.
    pub fn is_homomorphism(&self, g: &Graph, host: &Graph) -> bool {
        self.image.len() == g.n()
            && self.image.iter().all(|&x| (x as usize) < host.n())
            && g.edges()
                .iter()
                .all(|&(u, v)| host.has_edge(self.image[u as usize], self.image[v as usize]))
    }
}

/// Search budget and growth caps for the embedding host.
#[derive(Debug, Clone)]
pub struct EmbedOptions {
    pub max_generations: usize,
    pub host_edge_cap: u64,
}

impl Default for EmbedOptions {
    fn default() -> Self {
        EmbedOptions {
            max_generations: 64,
            host_edge_cap: 100_000_000,
        }
    }
}

/// Default backtracking budget for homomorphism search.
pub const DEFAULT_HOM_BUDGET: u64 = 100_000_000;

/// Finds a homomorphism from `g` to `target` by backtracking over vertices
/// in degree-descending order with neighbor-consistency pruning, or proves
/// there is none. Exceeding `budget` search nodes is an error distinct from
/// a definitive "none".
pub fn find_homomorphism(g: &Graph, target: &Graph, budget: u64) -> Result<Option<VertexMap>> {
    if g.n() == 0 {
        return Ok(Some(VertexMap::new(Vec::new())));
    }
    if target.n() == 0 {
        return Ok(None);
    }
    let mut order: Vec<u32> = (0..g.n() as u32).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut image: Vec<Option<u32>> = vec![None; g.n()];
    let mut nodes = 0u64;
    if backtrack(g, target, &order, 0, &mut image, &mut nodes, budget)? {
        Ok(Some(VertexMap::new(
            image.into_iter().map(|x| x.unwrap()).collect(),
        )))
    } else {
        Ok(None)
    }
}

fn backtrack(
    g: &Graph,
    target: &Graph,
    order: &[u32],
    idx: usize,
    image: &mut Vec<Option<u32>>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    if idx == order.len() {
        return Ok(true);
    }
    let v = order[idx];
    for c in 0..target.n() as u32 {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExhausted { budget });
        }
        let consistent = g.neighbors(v).iter().all(|&u| {
            image[u as usize]
                .map(|cu| target.has_edge(c, cu))
                .unwrap_or(true)
        });
        if consistent {
            image[v as usize] = Some(c);
            if backtrack(g, target, order, idx + 1, image, nodes, budget)? {
                return Ok(true);
            }
            image[v as usize] = None;
        }
    }
    Ok(false)
}

/// True iff `map` is injective and maps edges to edges and non-edges to
/// non-edges, i.e. embeds `g` as an induced subgraph of `host`.
pub fn verify_embedding(g: &Graph, host: &Graph, map: &VertexMap) -> bool {
    if map.image.len() != g.n()
        || !map.is_injective()
        || map.image.iter().any(|&x| (x as usize) >= host.n())
    {
        return false;
    }
    for u in 0..g.n() as u32 {
        for v in u + 1..g.n() as u32 {
            let mapped = host.has_edge(map.image[u as usize], map.image[v as usize]);
            if g.has_edge(u, v) != mapped {
                return false;
            }
        }
    }
    true
}

fn first_collision(image: &[u32]) -> Option<(usize, usize)> {
    let mut first_owner: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    for (v, &x) in image.iter().enumerate() {
        if let Some(&u) = first_owner.get(&x) {
            return Some((u, v));
        }
        first_owner.insert(x, v);
    }
    None
}

fn first_spurious(g: &Graph, host: &Graph, image: &[u32]) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u as u32, v as u32) && host.has_edge(image[u], image[v]) {
                return Some((u, v));
            }
        }
    }
    None
}

fn count_spurious(g: &Graph, host: &Graph, image: &[u32]) -> usize {
    let mut count = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u as u32, v as u32) && host.has_edge(image[u], image[v]) {
                count += 1;
            }
        }
    }
    count
}

/// Given a homomorphism `f` from `g` to the 2-section of `h0`, produces a
/// generation index t and an injective map whose image induces a copy of `g`
/// in the 2-section of the t-th hypergraph generation.
pub fn embed(
    g: &Graph,
    h0: &Hypergraph,
    f: &VertexMap,
    opts: &EmbedOptions,
) -> Result<(usize, VertexMap)> {
    let mut host = h0.two_section();
    if !f.is_homomorphism(g, &host) {
        let bad = g
            .edges()
            .into_iter()
            .find(|&(u, v)| !host.has_edge(f.image[u as usize], f.image[v as usize]))
            .unwrap_or((0, 0));
        return Err(Error::NotHomomorphism {
            u: bad.0,
            v: bad.1,
        });
    }
    let mut image = f.image.clone();
    let mut t = 0usize;

    let grow = |host: &mut Graph, t: &mut usize| -> Result<usize> {
        if *t >= opts.max_generations {
            return Err(Error::BudgetExhausted {
                budget: opts.max_generations as u64,
            });
        }
        let next_edges = host.edge_count() as u64 * 3;
        if next_edges > opts.host_edge_cap {
            return Err(Error::GraphCapExceeded {
                n: host.n() * 2,
                m: next_edges as usize,
                cap: opts.host_edge_cap,
            });
        }
        let prev_n = host.n();
        *host = host.clone_step();
        *t += 1;
        Ok(prev_n)
    };

    // phase 1: redirect one colliding vertex per generation to the clone
    while let Some((_, v)) = first_collision(&image) {
        let prev_n = grow(&mut host, &mut t)?;
        image[v] += prev_n as u32;
    }
    debug_assert!(VertexMap::new(image.clone()).is_injective());

    // phase 2: clone both endpoints of one spurious edge per generation
    let mut spurious = count_spurious(g, &host, &image);
    while let Some((u, v)) = first_spurious(g, &host, &image) {
        let prev_n = grow(&mut host, &mut t)?;
        image[u] += prev_n as u32;
        image[v] += prev_n as u32;
        let now = count_spurious(g, &host, &image);
        debug_assert_eq!(now, spurious - 1, "spurious edges must drop one by one");
        spurious = now;
    }

    let map = VertexMap::new(image);
    debug_assert!(verify_embedding(g, &host, &map));
    Ok((t, map))
}

/// Host 2-section after t clone steps, for checking an embedding produced by
/// [`embed`].
pub fn host_after(h0: &Hypergraph, t: usize) -> Graph {
    let mut host = h0.two_section();
    for _ in 0..t {
        host = host.clone_step();
    }
    host
}
