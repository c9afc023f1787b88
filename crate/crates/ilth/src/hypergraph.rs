//! k-uniform hypergraphs and the iterated cloning step operators.
//!
//! A [`Hypergraph`] is immutable after construction: hyperedges are stored as
//! strictly ascending id lists and an incidence index maps every vertex to the
//! edges containing it. The step operators are pure functions returning a new
//! hypergraph together with a [`Lineage`] describing parent/clone relations.
//!
//! Id conventions (load-bearing for reproducible output):
//! - the clone of vertex `i` under a plain step is `i + n`;
//! - under the multi-clone step, clone `j` of vertex `i` is `i + j*n`;
//! - edge order after a step is: input edges first, in order, then descendants
//!   grouped by parent edge with the cloned vertex ascending, then (multi-clone
//!   step only) one clone-family edge per input vertex, in vertex order.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on generated hyperedge counts; growth is exponential in t.
pub const DEFAULT_EDGE_CAP: u64 = 10_000_000;

/// Immutable k-uniform hypergraph with an incidence index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<u32>>,
    incidence: Vec<Vec<u32>>,
}

/// Parent maps for one cloning step, relating `H_t` back to `H_{t-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lineage {
    /// Index of the produced hypergraph within an iteration run (1-based).
    pub generation: usize,
    /// Parent of each vertex; a vertex that is not a clone is its own parent.
    pub vertex_parent: Vec<u32>,
    /// Predecessor edge index; `None` for clone-family edges, which have none.
    pub edge_parent: Vec<Option<u32>>,
    /// Which clone a vertex is: 0 for originals, `j` for the j-th clone.
    pub clone_rank: Vec<u32>,
}

impl Hypergraph {
    /// Builds a hypergraph from raw edge lists, sorting each edge and
    /// checking every structural invariant.
    pub fn new(k: usize, n: usize, mut edges: Vec<Vec<u32>>) -> Result<Self> {
        for e in edges.iter_mut() {
            e.sort_unstable();
        }
        let incidence = build_incidence(n, &edges);
        let h = Hypergraph {
            k,
            n,
            edges,
            incidence,
        };
        h.validate()?;
        Ok(h)
    }

    /// A hypergraph with `n` vertices and no hyperedges.
    pub fn empty(k: usize, n: usize) -> Self {
        Hypergraph {
            k,
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    /// The canonical seed instance: one hyperedge `{0, .., k-1}` on k vertices.
    pub fn single_edge(k: usize) -> Self {
        let edge: Vec<u32> = (0..k as u32).collect();
        Hypergraph {
            k,
            n: k,
            edges: vec![edge],
            incidence: (0..k).map(|_| vec![0]).collect(),
        }
    }

    /// Internal constructor for step operators, which build edges already
    /// sorted and duplicate-free.
    fn from_parts(k: usize, n: usize, edges: Vec<Vec<u32>>) -> Self {
        let incidence = build_incidence(n, &edges);
        let h = Hypergraph {
            k,
            n,
            edges,
            incidence,
        };
        debug_assert!(h.validate().is_ok());
        h
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hyperedges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[u32] {
        &self.edges[i]
    }

    /// Indices of the hyperedges containing `v`, ascending.
    pub fn incident_edges(&self, v: u32) -> &[u32] {
        &self.incidence[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.incidence[v as usize].len()
    }

    /// Checks every structural invariant, reporting the first violation:
    /// wrong cardinality, out-of-range id, duplicate edge set, or a stale
    /// incidence index.
    pub fn validate(&self) -> Result<()> {
        for (i, e) in self.edges.iter().enumerate() {
            if e.len() != self.k {
                return Err(Error::EdgeCardinality {
                    index: i,
                    expected: self.k,
                    actual: e.len(),
                });
            }
            for w in e.windows(2) {
                if w[0] >= w[1] {
                    // repeated vertex collapses the set below k
                    return Err(Error::EdgeCardinality {
                        index: i,
                        expected: self.k,
                        actual: e.iter().collect::<std::collections::BTreeSet<_>>().len(),
                    });
                }
            }
            if let Some(&last) = e.last() {
                if last as usize >= self.n {
                    return Err(Error::VertexOutOfRange {
                        index: i,
                        vertex: last,
                        n: self.n,
                    });
                }
            }
        }
        let mut seen: std::collections::HashMap<&[u32], usize> = std::collections::HashMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(&first) = seen.get(e.as_slice()) {
                return Err(Error::DuplicateEdge { first, second: i });
            }
            seen.insert(e.as_slice(), i);
        }
        if self.incidence.len() != self.n {
            return Err(Error::StaleIncidence { vertex: 0 });
        }
        let rebuilt = build_incidence(self.n, &self.edges);
        for (v, lists) in self.incidence.iter().zip(&rebuilt).enumerate() {
            if lists.0 != lists.1 {
                return Err(Error::StaleIncidence { vertex: v as u32 });
            }
        }
        Ok(())
    }

    /// One cloning step: every vertex gains a clone (`i + n`), every hyperedge
    /// `e` is kept and joined by the k substitutions `e - x + x'`.
    ///
    /// Clones form an independent set and no hyperedge contains a vertex
    /// together with its own clone.
    pub fn step(&self) -> (Hypergraph, Lineage) {
        let n = self.n;
        let n2 = n * 2;
        let mut edges = Vec::with_capacity(self.edges.len() * (self.k + 1));
        let mut edge_parent = Vec::with_capacity(edges.capacity());
        for (i, e) in self.edges.iter().enumerate() {
            edges.push(e.clone());
            edge_parent.push(Some(i as u32));
        }
        for (i, e) in self.edges.iter().enumerate() {
            for (pos, &x) in e.iter().enumerate() {
                // all original ids are < n, so pushing x + n keeps order
                let mut d = Vec::with_capacity(self.k);
                d.extend_from_slice(&e[..pos]);
                d.extend_from_slice(&e[pos + 1..]);
                d.push(x + n as u32);
                edges.push(d);
                edge_parent.push(Some(i as u32));
            }
        }
        let mut vertex_parent: Vec<u32> = (0..n2 as u32).collect();
        let mut clone_rank = vec![0u32; n2];
        for v in 0..n {
            vertex_parent[n + v] = v as u32;
            clone_rank[n + v] = 1;
        }
        let h = Hypergraph::from_parts(self.k, n2, edges);
        let lineage = Lineage {
            generation: 1,
            vertex_parent,
            edge_parent,
            clone_rank,
        };
        (h, lineage)
    }

    /// Multi-clone step: every vertex gains k-1 clones (`i + j*n`), every
    /// hyperedge is kept and joined by all `e - x + x^j`, and each vertex
    /// contributes the clone-family hyperedge `{v, v^1, .., v^{k-1}}`.
    pub fn step_multi(&self) -> Result<(Hypergraph, Lineage)> {
        if self.k < 2 {
            return Err(Error::BadUniformity {
                k: self.k,
                reason: "multi-clone step needs k >= 2",
            });
        }
        let k = self.k;
        let n = self.n;
        let nk = n * k;
        let mut edges = Vec::new();
        let mut edge_parent = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            edges.push(e.clone());
            edge_parent.push(Some(i as u32));
        }
        for (i, e) in self.edges.iter().enumerate() {
            for (pos, &x) in e.iter().enumerate() {
                for j in 1..k as u32 {
                    let mut d = Vec::with_capacity(k);
                    d.extend_from_slice(&e[..pos]);
                    d.extend_from_slice(&e[pos + 1..]);
                    d.push(x + j * n as u32);
                    edges.push(d);
                    edge_parent.push(Some(i as u32));
                }
            }
        }
        for v in 0..n as u32 {
            let family: Vec<u32> = (0..k as u32).map(|j| v + j * n as u32).collect();
            edges.push(family);
            edge_parent.push(None);
        }
        let mut vertex_parent = Vec::with_capacity(nk);
        let mut clone_rank = Vec::with_capacity(nk);
        for j in 0..k as u32 {
            for v in 0..n as u32 {
                vertex_parent.push(v);
                clone_rank.push(j);
            }
        }
        let h = Hypergraph::from_parts(k, nk, edges);
        let lineage = Lineage {
            generation: 1,
            vertex_parent,
            edge_parent,
            clone_rank,
        };
        Ok((h, lineage))
    }

    /// Applies [`Hypergraph::step`] `t` times, refusing up front when the
    /// predicted output size exceeds `edge_cap` or the id space.
    pub fn iterate(&self, t: usize, edge_cap: u64) -> Result<(Hypergraph, Vec<Lineage>)> {
        let growth = (self.k as u128 + 1).checked_pow(t as u32);
        let predicted = growth.and_then(|g| g.checked_mul(self.m() as u128));
        check_caps(predicted, (self.n as u128) << t, edge_cap)?;
        let mut h = self.clone();
        let mut lineages = Vec::with_capacity(t);
        for step_index in 1..=t {
            let (next, mut lineage) = h.step();
            lineage.generation = step_index;
            lineages.push(lineage);
            h = next;
        }
        Ok((h, lineages))
    }

    /// Applies [`Hypergraph::step_multi`] `t` times under the same caps.
    pub fn iterate_multi(&self, t: usize, edge_cap: u64) -> Result<(Hypergraph, Vec<Lineage>)> {
        let mut pn = self.n as u128;
        let per_edge = (self.k * self.k - self.k + 1) as u128;
        let mut predicted = Some(self.m() as u128);
        for _ in 0..t {
            predicted = predicted
                .and_then(|m| m.checked_mul(per_edge))
                .and_then(|m| m.checked_add(pn));
            pn = pn.saturating_mul(self.k as u128);
        }
        check_caps(predicted, pn, edge_cap)?;
        let mut h = self.clone();
        let mut lineages = Vec::with_capacity(t);
        for step_index in 1..=t {
            let (next, mut lineage) = h.step_multi()?;
            lineage.generation = step_index;
            lineages.push(lineage);
            h = next;
        }
        Ok((h, lineages))
    }

    /// The 2-section: same vertices, an edge wherever two distinct vertices
    /// share a hyperedge.
    pub fn two_section(&self) -> Graph {
        let mut pairs = Vec::new();
        for e in &self.edges {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    pairs.push((e[i], e[j]));
                }
            }
        }
        Graph::from_pairs_dedup(self.n, pairs)
    }
}

fn check_caps(predicted_edges: Option<u128>, predicted_vertices: u128, edge_cap: u64) -> Result<()> {
    let predicted = predicted_edges.ok_or(Error::EdgeCapExceeded {
        predicted: u128::MAX,
        cap: edge_cap,
    })?;
    if predicted > edge_cap as u128 {
        return Err(Error::EdgeCapExceeded {
            predicted,
            cap: edge_cap,
        });
    }
    if predicted_vertices > u32::MAX as u128 {
        return Err(Error::VertexOverflow {
            predicted: predicted_vertices,
        });
    }
    Ok(())
}

fn build_incidence(n: usize, edges: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut incidence = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        for &v in e {
            if (v as usize) < n {
                incidence[v as usize].push(i as u32);
            }
        }
    }
    incidence
}

/// Follows parent maps backwards to the generation-0 ancestor of `v`.
///
/// With the lineages of a full run, the induced map sends every hyperedge of
/// `H_t` onto a hyperedge of `H_0`.
pub fn project_to_initial(lineages: &[Lineage], v: u32) -> Result<u32> {
    let mut cur = v;
    for lineage in lineages.iter().rev() {
        let parent = lineage
            .vertex_parent
            .get(cur as usize)
            .ok_or(Error::SourceOutOfRange {
                vertex: cur as usize,
                n: lineage.vertex_parent.len(),
            })?;
        cur = *parent;
    }
    Ok(cur)
}
