//! Simple undirected graphs: the 2-section target type, the graph-level
//! cloning step, BFS, and an exact max-clique search for small instances.

use crate::error::{Error, Result};

/// Undirected, loop-free, simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops and out-of-range ids.
    /// Parallel edges collapse to one.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::SourceOutOfRange {
                    vertex: u.max(v) as usize,
                    n,
                });
            }
            if u == v {
                return Err(Error::Parse {
                    path: String::new(),
                    line: 0,
                    col: 0,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            pairs.push((u, v));
        }
        Ok(Self::from_pairs_dedup(n, pairs))
    }

    /// Builds from possibly-repeated pairs; ids must already be in range.
    pub(crate) fn from_pairs_dedup(n: usize, pairs: Vec<(u32, u32)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in pairs {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Graph { n, adj }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n as u32)
            .map(|v| (0..n as u32).filter(|&u| u != v).collect())
            .collect();
        Graph { n, adj }
    }

    /// Cycle on n >= 3 vertices.
    pub fn cycle(n: usize) -> Self {
        let pairs = (0..n as u32)
            .map(|v| (v, (v + 1) % n as u32))
            .collect::<Vec<_>>();
        Self::from_pairs_dedup(n, pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// All edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n as u32 {
            for &v in &self.adj[u as usize] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Graph-level cloning step: on 2n vertices, each edge uv contributes
    /// uv, uv' and u'v, with the clone of i at id i + n. Edge count triples.
    pub fn clone_step(&self) -> Graph {
        let n = self.n;
        let mut pairs = Vec::with_capacity(self.edge_count() * 3);
        for (u, v) in self.edges() {
            pairs.push((u, v));
            pairs.push((u, v + n as u32));
            pairs.push((u + n as u32, v));
        }
        Self::from_pairs_dedup(n * 2, pairs)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: u32) -> Result<Vec<Option<u32>>> {
        if source as usize >= self.n {
            return Err(Error::SourceOutOfRange {
                vertex: source as usize,
                n: self.n,
            });
        }
        let mut dist = vec![None; self.n];
        dist[source as usize] = Some(0);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            for &w in &self.adj[u as usize] {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Exact maximum clique size by branch and bound; intended for the small
    /// host graphs that arise in embedding checks.
    pub fn max_clique_size(&self) -> usize {
        let mut order: Vec<u32> = (0..self.n as u32).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut best = 0usize;
        let mut clique = Vec::new();
        let candidates: Vec<u32> = order;
        self.extend_clique(&mut clique, &candidates, &mut best);
        best
    }

    fn extend_clique(&self, clique: &mut Vec<u32>, candidates: &[u32], best: &mut usize) {
        if clique.len() > *best {
            *best = clique.len();
        }
        if clique.len() + candidates.len() <= *best {
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if clique.len() + (candidates.len() - i) <= *best {
                return;
            }
            let next: Vec<u32> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| self.has_edge(u, v))
                .collect();
            clique.push(v);
            self.extend_clique(clique, &next, best);
            clique.pop();
        }
    }
}
