//! Distances, diameter, Wiener index, and densification statistics, all
//! grounded in the 2-section.
//!
//! Hypergraph walk distance equals 2-section distance, so every computation
//! here builds the 2-section adjacency once and runs BFS over it. All-pairs
//! sums parallelize over sources; totals are integer sums and therefore
//! independent of scheduling.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frac::{frac, Frac, FracOut};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// Diameter of a possibly disconnected hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Serialize for Diameter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u32(*d),
            Diameter::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Exact distance statistics over unordered distinct vertex pairs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceSummary {
    pub connected: bool,
    pub diameter: Diameter,
    /// Sum of d(u, v) over unordered reachable pairs.
    pub wiener_unordered: u64,
    /// Unordered adjacent pairs, i.e. the 2-section edge count.
    pub adjacent_pair_count: u64,
    /// wiener / C(n, 2) when connected; over reachable pairs otherwise.
    /// Absent when no pair is reachable.
    pub average_distance: Option<FracOut>,
    #[serde(skip)]
    pub average_distance_exact: Option<Frac>,
}

/// BFS distances from `source` in the 2-section of `h`.
pub fn bfs_distances(h: &Hypergraph, source: u32) -> Result<Vec<Option<u32>>> {
    h.two_section().bfs(source)
}

/// All-sources BFS over a prebuilt 2-section.
pub fn distance_summary_of_graph(g: &Graph) -> DistanceSummary {
    let n = g.n();
    let per_source: Vec<(u64, u32, u64)> = (0..n as u32)
        .into_par_iter()
        .map(|s| {
            let dist = g.bfs(s).expect("source in range");
            let mut sum = 0u64;
            let mut ecc = 0u32;
            let mut reached = 0u64;
            for d in dist.into_iter().flatten() {
                sum += d as u64;
                ecc = ecc.max(d);
                reached += 1;
            }
            (sum, ecc, reached)
        })
        .collect();
    let ordered_sum: u64 = per_source.iter().map(|x| x.0).sum();
    let ecc_max = per_source.iter().map(|x| x.1).max().unwrap_or(0);
    // each source reaches itself; reachable ordered pairs exclude that
    let reachable_pairs: u64 = per_source.iter().map(|x| x.2 - 1).sum::<u64>() / 2;
    let all_pairs = (n as u64) * (n as u64).saturating_sub(1) / 2;
    let connected = reachable_pairs == all_pairs;
    let wiener = ordered_sum / 2;
    let average = if reachable_pairs > 0 {
        Some(frac(wiener as i128, reachable_pairs as i128))
    } else {
        None
    };
    DistanceSummary {
        connected,
        diameter: if connected {
            Diameter::Finite(ecc_max)
        } else {
            Diameter::Infinite
        },
        wiener_unordered: wiener,
        adjacent_pair_count: g.edge_count() as u64,
        average_distance: average.as_ref().map(FracOut::of),
        average_distance_exact: average,
    }
}

/// All fields computed exactly by all-sources BFS on the 2-section.
pub fn distance_summary(h: &Hypergraph) -> DistanceSummary {
    distance_summary_of_graph(&h.two_section())
}

/// Closed form for the unordered Wiener index after `t` cloning steps:
///
/// W(t) = 4^t (W0 + m2_0 + n0) - 3^t m2_0 - 2^t n0
///
/// obtained by iterating W(t+1) = 4 W(t) + m2(t) + 2 n(t) with the 2-section
/// edge count m2(t) = 3^t m2_0. Valid for a connected start without isolated
/// vertices.
pub fn wiener_closed_form(w0: u64, m2_0: u64, n0: u64, t: u32) -> Result<u64> {
    let pow4 = 4u128.checked_pow(t);
    let pow3 = 3u128.checked_pow(t);
    let pow2 = 2u128.checked_pow(t);
    let value = (|| {
        let lead = pow4?.checked_mul(w0 as u128 + m2_0 as u128 + n0 as u128)?;
        let sub = pow3?.checked_mul(m2_0 as u128)?.checked_add(pow2?.checked_mul(n0 as u128)?)?;
        lead.checked_sub(sub)
    })()
    .ok_or(Error::CountOverflow {
        what: "wiener closed form",
    })?;
    u64::try_from(value).map_err(|_| Error::CountOverflow {
        what: "wiener closed form",
    })
}
