//! Exact counters for the tuple families behind the hypergraph clustering
//! coefficients, plus the coefficients themselves as exact rationals.
//!
//! Counted objects (all tuples ordered, vertices distinct):
//! - path of length two: (u, e1, v, e2, w) with e1 != e2, u,v in e1, v,w in e2;
//! - hypertriangle: (u, e1, v, e2, w, e3) with the three edges distinct and
//!   u in e1&e3, v in e1&e2, w in e2&e3;
//! - the primed variants drop edge-distinctness;
//! - closable paths additionally require some edge containing u and w.
//!
//! Everything reduces to three aggregates: the ordered pair-intersection
//! histogram, per-pair co-membership counts c(u,v), and per-triple counts
//! c3(u,v,w); the tuple totals follow by exact combinatorial identities that
//! the brute-force oracle in the tests re-derives from the definitions.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frac::{frac, Frac, FracOut};
use crate::hypergraph::Hypergraph;

/// Exact tuple-family counters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleCounts {
    /// Paths of length two by the literal tuple definition.
    pub paths2: u64,
    /// Variant requiring u outside e2 and w outside e1.
    pub paths2_strict: u64,
    /// Ordered (e1, v, e2) with v in both edges; e1 = e2 allowed.
    pub p_prime: u64,
    /// Hypertriangles with distinct edges.
    pub hypertriangles: u64,
    /// Hypertriangle tuples without edge-distinctness.
    pub t_prime: u64,
    /// Closable paths: some edge contains both endpoints; e1 = e2 allowed.
    pub a_count: u64,
    /// Paths of length two whose endpoints share an edge.
    pub lambda_count: u64,
    /// p_histogram[i] = ordered edge pairs with |e1 & e2| = i, 0 <= i <= k.
    pub p_histogram: Vec<u64>,
}

/// Clustering coefficients; `None` marks an undefined value (degenerate
/// denominator), never reported as zero.
#[derive(Debug, Clone, Serialize)]
pub struct ClusteringReport {
    #[serde(flatten)]
    pub counts: TupleCounts,
    pub hc1: Option<FracOut>,
    pub hc2: Option<FracOut>,
    pub hc3: Option<FracOut>,
    #[serde(skip)]
    pub hc1_exact: Option<Frac>,
    #[serde(skip)]
    pub hc2_exact: Option<Frac>,
    #[serde(skip)]
    pub hc3_exact: Option<Frac>,
}

fn pair_key(u: u32, v: u32) -> u64 {
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    ((lo as u64) << 32) | hi as u64
}

struct Aggregates {
    /// ordered pair-intersection histogram, diagonal included at index k
    hist: Vec<u64>,
    /// unordered (u, v) -> number of edges containing both
    pair_counts: HashMap<u64, u64>,
    /// ascending (u, v, w) -> number of edges containing all three
    triple_counts: HashMap<(u32, u32, u32), u64>,
}

fn aggregates(h: &Hypergraph) -> Aggregates {
    let k = h.k();
    let m = h.m();
    let mut hist = vec![0u64; k + 1];
    let mut stamp = vec![u32::MAX; m];
    let mut shared = vec![0u32; m];
    let mut touched = Vec::new();
    for i in 0..m {
        touched.clear();
        for &v in h.edge(i) {
            for &j in h.incident_edges(v) {
                let j = j as usize;
                if j == i {
                    continue;
                }
                if stamp[j] != i as u32 {
                    stamp[j] = i as u32;
                    shared[j] = 0;
                    touched.push(j);
                }
                shared[j] += 1;
            }
        }
        for &j in &touched {
            hist[shared[j] as usize] += 1;
        }
    }
    hist[k] += m as u64;
    let counted: u64 = hist.iter().sum();
    hist[0] = (m as u64) * (m as u64) - counted;

    let mut pair_counts = HashMap::new();
    let mut triple_counts = HashMap::new();
    for e in h.edges() {
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                *pair_counts.entry(pair_key(e[a], e[b])).or_insert(0) += 1;
                for c in b + 1..e.len() {
                    *triple_counts.entry((e[a], e[b], e[c])).or_insert(0u64) += 1;
                }
            }
        }
    }
    Aggregates {
        hist,
        pair_counts,
        triple_counts,
    }
}

fn checked_u64(value: u128, what: &'static str) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::CountOverflow { what })
}

fn require_uniformity(h: &Hypergraph) -> Result<()> {
    if h.k() < 2 {
        return Err(Error::BadUniformity {
            k: h.k(),
            reason: "tuple counters need k >= 2",
        });
    }
    Ok(())
}

/// All tuple counters, exact.
pub fn tuple_counts(h: &Hypergraph) -> Result<TupleCounts> {
    require_uniformity(h)?;
    let agg = aggregates(h);
    tuple_counts_from(h, &agg)
}

fn tuple_counts_from(h: &Hypergraph, agg: &Aggregates) -> Result<TupleCounts> {
    let k = h.k() as u128;
    let mut p_prime: u128 = 0;
    let mut paths2: u128 = 0;
    let mut paths2_strict: u128 = 0;
    for (i, &pairs) in agg.hist.iter().enumerate() {
        let i = i as u128;
        let pairs = pairs as u128;
        p_prime += i * pairs;
        if i >= 1 && i < k {
            // distinct edges only; the diagonal sits at index k
            paths2 += pairs * i * ((i - 1) * (k - 2) + (k - i) * (k - 1));
            paths2_strict += pairs * i * (k - i) * (k - i);
        }
    }

    let section = h.two_section();
    let c = |u: u32, v: u32| *agg.pair_counts.get(&pair_key(u, v)).unwrap_or(&0) as u128;
    let c3 = |u: u32, v: u32, w: u32| {
        let mut t = [u, v, w];
        t.sort_unstable();
        *agg.triple_counts.get(&(t[0], t[1], t[2])).unwrap_or(&0) as u128
    };

    let mut t_prime: u128 = 0;
    let mut hypertriangles: u128 = 0;
    let mut a_count: u128 = 0;
    let mut lambda_count: u128 = 0;
    for u in 0..section.n() as u32 {
        for &v in section.neighbors(u) {
            if v <= u {
                continue;
            }
            // triangles u < v < w
            for &w in section.neighbors(v) {
                if w <= v || !section.has_edge(u, w) {
                    continue;
                }
                let (cuv, cvw, cuw) = (c(u, v), c(v, w), c(u, w));
                let c3uvw = c3(u, v, w);
                let prod = cuv * cvw * cuw;
                t_prime += 6 * prod;
                hypertriangles += 6 * (prod + 2 * c3uvw) - 6 * c3uvw * (cuv + cvw + cuw);
                let wedge_products = cuv * cvw + cuv * cuw + cuw * cvw;
                a_count += 2 * wedge_products;
                lambda_count += 2 * wedge_products - 6 * c3uvw;
            }
        }
    }

    Ok(TupleCounts {
        paths2: checked_u64(paths2, "paths2")?,
        paths2_strict: checked_u64(paths2_strict, "paths2_strict")?,
        p_prime: checked_u64(p_prime, "p_prime")?,
        hypertriangles: checked_u64(hypertriangles, "hypertriangles")?,
        t_prime: checked_u64(t_prime, "t_prime")?,
        a_count: checked_u64(a_count, "a_count")?,
        lambda_count: checked_u64(lambda_count, "lambda_count")?,
        p_histogram: agg.hist.clone(),
    })
}

/// All three coefficients plus the raw counters.
///
/// hc1 is the average number of closing hyperedges per length-two walk,
/// degenerate walks and closings included: t_prime over
/// paths2 + k(k-1)(k-2)m. That reading reproduces the graph clustering
/// coefficient when every hyperedge is a pair, gives C(n-2, k-2) on the
/// complete k-uniform hypergraph, and matches the random-model expectation
/// C(n-2, k-2) p. It is undefined (not zero) when no genuine path of length
/// two exists.
pub fn clustering_report(h: &Hypergraph) -> Result<ClusteringReport> {
    require_uniformity(h)?;
    let agg = aggregates(h);
    let counts = tuple_counts_from(h, &agg)?;
    let k = h.k() as u64;
    let walks2 = counts.paths2 + k * (k - 1) * (k.saturating_sub(2)) * h.m() as u64;
    let hc1 = (counts.paths2 > 0).then(|| frac(counts.t_prime as i128, walks2 as i128));
    let hc2 =
        (counts.paths2 > 0).then(|| frac(counts.lambda_count as i128, counts.paths2 as i128));
    let hc3 = extra_overlap_mean(h, &agg)?;
    Ok(ClusteringReport {
        hc1: FracOut::opt(&hc1),
        hc2: FracOut::opt(&hc2),
        hc3: FracOut::opt(&hc3),
        hc1_exact: hc1,
        hc2_exact: hc2,
        hc3_exact: hc3,
        counts,
    })
}

pub fn hc1(h: &Hypergraph) -> Result<Option<Frac>> {
    Ok(clustering_report(h)?.hc1_exact)
}

pub fn hc2(h: &Hypergraph) -> Result<Option<Frac>> {
    Ok(clustering_report(h)?.hc2_exact)
}

pub fn hc3(h: &Hypergraph) -> Result<Option<Frac>> {
    Ok(clustering_report(h)?.hc3_exact)
}

/// Mean extra overlap over unordered intersecting pairs of distinct edges.
fn extra_overlap_mean(h: &Hypergraph, agg: &Aggregates) -> Result<Option<Frac>> {
    let adjacent = |u: u32, w: u32| agg.pair_counts.contains_key(&pair_key(u, w));
    let m = h.m();
    let mut stamp = vec![u32::MAX; m];
    let mut sum = frac(0, 1);
    let mut pairs: u64 = 0;
    let mut diff_i = Vec::with_capacity(h.k());
    let mut diff_j = Vec::with_capacity(h.k());
    for i in 0..m {
        let ei = h.edge(i);
        for &v in ei {
            for &j in h.incident_edges(v) {
                let ju = j as usize;
                if ju <= i || stamp[ju] == i as u32 {
                    continue;
                }
                stamp[ju] = i as u32;
                let ej = h.edge(ju);
                diff_i.clear();
                diff_i.extend(ei.iter().copied().filter(|x| !ej.contains(x)));
                diff_j.clear();
                diff_j.extend(ej.iter().copied().filter(|x| !ei.contains(x)));
                let a_ij = diff_i
                    .iter()
                    .filter(|&&u| diff_j.iter().any(|&w| adjacent(u, w)))
                    .count() as i128;
                let a_ji = diff_j
                    .iter()
                    .filter(|&&w| diff_i.iter().any(|&u| adjacent(u, w)))
                    .count() as i128;
                let den = (diff_i.len() + diff_j.len()) as i128;
                sum += frac(a_ij + a_ji, den);
                pairs += 1;
            }
        }
    }
    if pairs == 0 {
        return Ok(None);
    }
    Ok(Some(sum / frac(pairs as i128, 1)))
}

/// Closure statistics over strict paths (u outside e2, w outside e1): the
/// path count, how many have adjacent endpoints, and the total number of
/// (path, closing edge) incidences. For strict paths no closing candidate
/// coincides with e1 or e2, which makes the per-path closure probability in
/// the binomial random model exactly the closed forms used by the
/// random-baseline checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrictClosure {
    pub paths: u64,
    pub closed: u64,
    pub closings: u64,
}

pub fn strict_closure_counts(h: &Hypergraph) -> Result<StrictClosure> {
    require_uniformity(h)?;
    let agg = aggregates(h);
    let c = |u: u32, w: u32| *agg.pair_counts.get(&pair_key(u, w)).unwrap_or(&0);
    let m = h.m();
    let mut stamp = vec![u32::MAX; m];
    let (mut paths, mut closed, mut closings) = (0u64, 0u64, 0u64);
    for i in 0..m {
        let ei = h.edge(i);
        // ordered pairs (i, j), j enumerated via shared vertices
        stampless_partners(h, i, &mut stamp, |j| {
            let ej = h.edge(j);
            for &v in ei.iter().filter(|v| ej.contains(v)) {
                for &u in ei.iter().filter(|&&u| u != v && !ej.contains(&u)) {
                    for &w in ej.iter().filter(|&&w| w != v && !ei.contains(&w)) {
                        paths += 1;
                        let cuw = c(u, w);
                        closings += cuw;
                        if cuw > 0 {
                            closed += 1;
                        }
                    }
                }
            }
        });
    }
    Ok(StrictClosure {
        paths,
        closed,
        closings,
    })
}

/// Calls `visit` once per edge j != i sharing a vertex with edge i.
fn stampless_partners(
    h: &Hypergraph,
    i: usize,
    stamp: &mut [u32],
    mut visit: impl FnMut(usize),
) {
    for &v in h.edge(i) {
        for &j in h.incident_edges(v) {
            let j = j as usize;
            if j != i && stamp[j] != i as u32 {
                stamp[j] = i as u32;
                visit(j);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle: straight off the tuple definitions, cubic in m.
// ---------------------------------------------------------------------------

/// Literal tuple enumeration, usable as an independent oracle on small
/// instances (cost O((m k)^3)).
pub fn tuple_counts_bruteforce(h: &Hypergraph, edge_cap: usize) -> Result<TupleCounts> {
    let m = h.m();
    if m > edge_cap {
        return Err(Error::BruteForceCapExceeded { m, cap: edge_cap });
    }
    let k = h.k();
    let section = h.two_section();
    let mut hist = vec![0u64; k + 1];
    let mut p_prime = 0u64;
    for i in 0..m {
        for j in 0..m {
            let shared: u64 = h
                .edge(i)
                .iter()
                .filter(|v| h.edge(j).contains(v))
                .count() as u64;
            hist[shared as usize] += 1;
            p_prime += shared;
        }
    }

    let (mut paths2, mut paths2_strict, mut a_count, mut lambda_count) = (0u64, 0u64, 0u64, 0u64);
    for i in 0..m {
        for j in 0..m {
            let (ei, ej) = (h.edge(i), h.edge(j));
            for &v in ei.iter().filter(|v| ej.contains(v)) {
                for &u in ei.iter().filter(|&&u| u != v) {
                    for &w in ej.iter().filter(|&&w| w != v && w != u) {
                        let closable = section.has_edge(u, w);
                        if closable {
                            a_count += 1;
                        }
                        if i != j {
                            paths2 += 1;
                            if !ej.contains(&u) && !ei.contains(&w) {
                                paths2_strict += 1;
                            }
                            if closable {
                                lambda_count += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    let (mut t_prime, mut hypertriangles) = (0u64, 0u64);
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                let (e1, e2, e3) = (h.edge(i), h.edge(j), h.edge(l));
                for &u in e1.iter().filter(|v| e3.contains(v)) {
                    for &v in e1.iter().filter(|v| e2.contains(v)) {
                        for &w in e2.iter().filter(|v| e3.contains(v)) {
                            if u != v && v != w && u != w {
                                t_prime += 1;
                                if i != j && j != l && i != l {
                                    hypertriangles += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(TupleCounts {
        paths2,
        paths2_strict,
        p_prime,
        hypertriangles,
        t_prime,
        a_count,
        lambda_count,
        p_histogram: hist,
    })
}
