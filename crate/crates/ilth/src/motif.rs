//! Motif census: classify and count connected configurations of three
//! distinct hyperedges by the nonemptiness pattern of their seven Venn
//! regions.
//!
//! Region order everywhere is (a, b, c, d, e, f, g) =
//! (e1 only, e2 only, e3 only, e1&e2, e2&e3, e1&e3, all three).
//! A pattern is the 7-bit indicator of those regions, canonicalized under the
//! six permutations of the edge roles; eleven canonical patterns carry the
//! conventional motif numbers 2..26 used in the literature on three-hyperedge
//! motifs.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::LazyLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// How the six role permutations act on the region array (a,b,c,d,e,f):
/// permuting the edges permutes (a,b,c) directly and (d,e,f) through the
/// induced action on pairs; g is fixed. new[i] = old[PERM[i]].
const ROLE_PERMS: [[usize; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [0, 2, 1, 5, 4, 3],
    [1, 0, 2, 3, 5, 4],
    [1, 2, 0, 4, 5, 3],
    [2, 0, 1, 5, 3, 4],
    [2, 1, 0, 4, 3, 5],
];

/// The motif numbering of the eleven k-uniform patterns, as published.
const NUMBERED_PATTERNS: [(u8, &str); 11] = [
    (2, "1110001"),
    (6, "1110101"),
    (11, "1011101"),
    (12, "1111101"),
    (13, "0001111"),
    (14, "1001111"),
    (15, "1011111"),
    (16, "1111111"),
    (24, "1001110"),
    (25, "1011110"),
    (26, "1111110"),
];

/// 7-bit region indicator; bit 6 is region a down to bit 0 for region g, so
/// numeric order equals lexicographic order on the printed string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(u8);

impl Pattern {
    pub fn from_bits(bits: u8) -> Self {
        Pattern(bits & 0x7f)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// Parses a 7-character indicator string such as "1011101".
    pub fn parse(s: &str) -> Option<Self> {
        if s.len() != 7 || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return None;
        }
        let mut bits = 0u8;
        for b in s.bytes() {
            bits = (bits << 1) | (b - b'0');
        }
        Some(Pattern(bits))
    }

    /// Lexicographically smallest indicator in the role-permutation orbit.
    pub fn canonical(self) -> Self {
        Pattern(CANONICAL_BITS[self.0 as usize])
    }

    /// The motif number when this is one of the eleven named patterns.
    pub fn motif_number(self) -> Option<u8> {
        NUMBER_BY_CANONICAL.get(&self.canonical().0).copied()
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in (0..7).rev() {
            write!(f, "{}", (self.0 >> i) & 1)?;
        }
        Ok(())
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn permute_bits(bits: u8, perm: &[usize; 6]) -> u8 {
    let region = |i: usize| (bits >> (6 - i)) & 1;
    let mut out = bits & 1; // g bit
    for (i, &src) in perm.iter().enumerate() {
        out |= region(src) << (6 - i);
    }
    out
}

static CANONICAL_BITS: LazyLock<[u8; 128]> = LazyLock::new(|| {
    let mut table = [0u8; 128];
    for bits in 0..128u8 {
        table[bits as usize] = ROLE_PERMS
            .iter()
            .map(|p| permute_bits(bits, p))
            .min()
            .unwrap();
    }
    table
});

static NUMBER_BY_CANONICAL: LazyLock<HashMap<u8, u8>> = LazyLock::new(|| {
    NUMBERED_PATTERNS
        .iter()
        .map(|(number, s)| (Pattern::parse(s).unwrap().canonical().0, *number))
        .collect()
});

/// Region sizes (a,b,c,d,e,f,g) of a hyperedge triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CardinalityVector(pub [u32; 7]);

impl CardinalityVector {
    pub fn new(a: u32, b: u32, c: u32, d: u32, e: u32, f: u32, g: u32) -> Self {
        CardinalityVector([a, b, c, d, e, f, g])
    }

    /// Exact region sizes for three sorted hyperedges (distinctness is not
    /// required here).
    pub fn from_edges(e1: &[u32], e2: &[u32], e3: &[u32]) -> Self {
        let x12 = intersection_size(e1, e2);
        let x23 = intersection_size(e2, e3);
        let x13 = intersection_size(e1, e3);
        let x123 = triple_intersection_size(e1, e2, e3);
        let g = x123;
        let d = x12 - g;
        let e = x23 - g;
        let f = x13 - g;
        let a = e1.len() as u32 - d - f - g;
        let b = e2.len() as u32 - d - e - g;
        let c = e3.len() as u32 - e - f - g;
        CardinalityVector([a, b, c, d, e, f, g])
    }

    pub fn total_vertices(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn indicator(&self) -> Pattern {
        let mut bits = 0u8;
        for (i, &r) in self.0.iter().enumerate() {
            if r > 0 {
                bits |= 1 << (6 - i);
            }
        }
        Pattern(bits)
    }

    /// Lexicographically smallest vector in the role-permutation orbit.
    pub fn canonical(&self) -> Self {
        let v = &self.0;
        let mut best = *v;
        for perm in &ROLE_PERMS[1..] {
            let mut cand = [0u32; 7];
            cand[6] = v[6];
            for (i, &src) in perm.iter().enumerate() {
                cand[i] = v[src];
            }
            if cand < best {
                best = cand;
            }
        }
        CardinalityVector(best)
    }
}

/// Outcome of classifying one hyperedge triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotifClass {
    /// The intersection graph of the triple is disconnected.
    Disconnected,
    Motif { pattern: Pattern, number: Option<u8> },
}

/// Classifies a cardinality vector: disconnected when fewer than two of the
/// three pairwise intersections are populated, otherwise the canonical
/// pattern with its motif number when it has one.
pub fn classify(cv: &CardinalityVector) -> MotifClass {
    let [_, _, _, d, e, f, g] = cv.0;
    let present = (d + g > 0) as u8 + (e + g > 0) as u8 + (f + g > 0) as u8;
    if present < 2 {
        return MotifClass::Disconnected;
    }
    let pattern = cv.indicator().canonical();
    MotifClass::Motif {
        pattern,
        number: pattern.motif_number(),
    }
}

/// Number of descendant motifs one motif of this cardinality vector spawns
/// under a cloning step: g + (c+1)d + (b+1)f + (a+1)e + (a+1)(b+1)(c+1).
pub fn descendant_multiplier(cv: &CardinalityVector) -> u64 {
    let [a, b, c, d, e, f, g] = cv.0.map(u64::from);
    g + (c + 1) * d + (b + 1) * f + (a + 1) * e + (a + 1) * (b + 1) * (c + 1)
}

/// Maximum vertex total over cardinality vectors realizing `pattern` with
/// three pairwise-distinct k-uniform hyperedges; `None` when infeasible.
pub fn alpha(pattern: Pattern, k: usize) -> Option<u32> {
    let target = pattern.canonical();
    let k = k as u32;
    let mut best: Option<u32> = None;
    for d in 0..=k {
        for e in 0..=k {
            for f in 0..=k {
                for g in 0..=k {
                    let (Some(a), Some(b), Some(c)) = (
                        k.checked_sub(d + f + g),
                        k.checked_sub(d + e + g),
                        k.checked_sub(e + f + g),
                    ) else {
                        continue;
                    };
                    // pairwise-distinct edges
                    if a + f + b + e == 0 || b + d + c + f == 0 || a + d + c + e == 0 {
                        continue;
                    }
                    let cv = CardinalityVector([a, b, c, d, e, f, g]);
                    if cv.indicator().canonical() == target {
                        let total = cv.total_vertices();
                        best = Some(best.map_or(total, |x| x.max(total)));
                    }
                }
            }
        }
    }
    best
}

/// Published closed forms for the maximum vertex count of each named motif.
///
/// The type-13 entry uses ceil(3k/2) - 1; the published table floors the
/// half-integer, which contradicts the unique realizable vector at odd k
/// (see the alpha tests for the explicit witness).
pub fn table1_alpha(number: u8, k: usize) -> Option<u32> {
    let k = k as u32;
    Some(match number {
        2 => 3 * k - 2,
        6 => 3 * k - 3,
        11 => 2 * k - 1,
        12 => 3 * k - 4,
        13 => (3 * k).div_ceil(2) - 1,
        14 => 2 * k - 2,
        15 => 2 * k - 2,
        16 => 3 * k - 5,
        24 => 2 * k - 1,
        25 => 2 * k - 1,
        26 => 3 * k - 3,
        _ => return None,
    })
}

/// Census configuration.
#[derive(Debug, Clone)]
pub struct CensusOptions {
    /// Also aggregate counts per canonical cardinality vector.
    pub per_cardinality_vector: bool,
    /// Abort once this many triples have been classified.
    pub triple_cap: u64,
    /// Edge-count ceiling for the cubic brute-force oracle.
    pub brute_force_edge_cap: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            per_cardinality_vector: false,
            triple_cap: 2_000_000_000,
            brute_force_edge_cap: 500,
        }
    }
}

/// Counts of connected three-hyperedge motifs, each unordered triple of
/// distinct hyperedges counted exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MotifCensus {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub triples_examined: u64,
    /// Canonical pattern -> count.
    pub counts: BTreeMap<Pattern, u64>,
    /// Canonical cardinality vector -> count, when requested.
    pub cv_counts: Option<BTreeMap<CardinalityVector, u64>>,
}

impl MotifCensus {
    fn new(h: &Hypergraph, per_cv: bool) -> Self {
        MotifCensus {
            k: h.k(),
            n: h.n(),
            m: h.m(),
            triples_examined: 0,
            counts: BTreeMap::new(),
            cv_counts: per_cv.then(BTreeMap::new),
        }
    }

    fn record(&mut self, cv: &CardinalityVector) {
        let pattern = cv.indicator().canonical();
        *self.counts.entry(pattern).or_insert(0) += 1;
        self.triples_examined += 1;
        if let Some(map) = self.cv_counts.as_mut() {
            *map.entry(cv.canonical()).or_insert(0) += 1;
        }
    }

    fn merge(mut self, other: MotifCensus) -> MotifCensus {
        for (p, c) in other.counts {
            *self.counts.entry(p).or_insert(0) += c;
        }
        self.triples_examined += other.triples_examined;
        if let (Some(mine), Some(theirs)) = (self.cv_counts.as_mut(), other.cv_counts) {
            for (cv, c) in theirs {
                *mine.entry(cv).or_insert(0) += c;
            }
        }
        self
    }

    /// Count for a named motif; absent patterns count as zero.
    pub fn numbered_count(&self, number: u8) -> u64 {
        self.counts
            .iter()
            .filter(|(p, _)| p.motif_number() == Some(number))
            .map(|(_, c)| *c)
            .sum()
    }

    /// Counts keyed by motif number, for the patterns that have one.
    pub fn numbered_counts(&self) -> BTreeMap<u8, u64> {
        let mut out = BTreeMap::new();
        for (p, c) in &self.counts {
            if let Some(number) = p.motif_number() {
                *out.entry(number).or_insert(0) += c;
            }
        }
        out
    }
}

fn intersection_size(x: &[u32], y: &[u32]) -> u32 {
    let (mut i, mut j, mut out) = (0, 0, 0);
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out += 1;
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn triple_intersection_size(x: &[u32], y: &[u32], z: &[u32]) -> u32 {
    let (mut i, mut j, mut l, mut out) = (0, 0, 0, 0);
    while i < x.len() && j < y.len() && l < z.len() {
        let (a, b, c) = (x[i], y[j], z[l]);
        let m = a.min(b).min(c);
        if a == b && b == c {
            out += 1;
        }
        if a == m {
            i += 1;
        }
        if b == m {
            j += 1;
        }
        if c == m {
            l += 1;
        }
    }
    out
}

fn disjoint(x: &[u32], y: &[u32]) -> bool {
    intersection_size(x, y) == 0
}

/// Per-worker scratch for the parallel census.
struct Scratch {
    census: MotifCensus,
    stamp: Vec<u32>,
    epoch: u32,
    pending: u64,
}

const FLUSH_EVERY: u64 = 4096;

impl Scratch {
    fn flush(&mut self, examined: &AtomicU64, cap: u64) -> Result<()> {
        if self.pending == 0 {
            return Ok(());
        }
        let total = examined.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if total > cap {
            return Err(Error::TripleCapExceeded { cap });
        }
        Ok(())
    }
}

/// Exact census by incidence-driven enumeration.
///
/// Every unordered triple of distinct hyperedges with a connected union is
/// classified exactly once:
/// - pairs (i < j) with a common vertex extend by any third edge l > j
///   meeting their union;
/// - chain triples whose two lowest-indexed edges are disjoint are recovered
///   from the outer pair (i, j) by scanning middles i < b < j that meet e_j
///   but not e_i.
pub fn census(h: &Hypergraph, opts: &CensusOptions) -> Result<MotifCensus> {
    let m = h.m();
    let examined = AtomicU64::new(0);
    let census = (0..m as u32)
        .into_par_iter()
        .try_fold(
            || Scratch {
                census: MotifCensus::new(h, opts.per_cardinality_vector),
                stamp: vec![0u32; m],
                epoch: 0,
                pending: 0,
            },
            |mut scratch, i| {
                visit_first_edge(h, i, opts, &examined, &mut scratch)?;
                Ok(scratch)
            },
        )
        .map(|r: Result<Scratch>| {
            r.and_then(|mut s| {
                s.flush(&examined, opts.triple_cap)?;
                Ok(s.census)
            })
        })
        .try_reduce(
            || MotifCensus::new(h, opts.per_cardinality_vector),
            |a, b| Ok(a.merge(b)),
        )?;
    Ok(census)
}

fn visit_first_edge(
    h: &Hypergraph,
    i: u32,
    opts: &CensusOptions,
    examined: &AtomicU64,
    scratch: &mut Scratch,
) -> Result<()> {
    let ei = h.edge(i as usize);
    // partners j > i sharing a vertex with e_i
    scratch.epoch += 1;
    let mut partners = Vec::new();
    for &v in ei {
        for &j in h.incident_edges(v) {
            if j > i && scratch.stamp[j as usize] != scratch.epoch {
                scratch.stamp[j as usize] = scratch.epoch;
                partners.push(j);
            }
        }
    }
    let mut union = Vec::with_capacity(2 * h.k());
    for j in partners {
        let ej = h.edge(j as usize);
        union.clear();
        union.extend_from_slice(ei);
        union.extend_from_slice(ej);
        union.sort_unstable();
        union.dedup();

        // pass 1: closing edges above j
        scratch.epoch += 1;
        for &w in &union {
            for &l in h.incident_edges(w) {
                if l > j && scratch.stamp[l as usize] != scratch.epoch {
                    scratch.stamp[l as usize] = scratch.epoch;
                    let cv = CardinalityVector::from_edges(ei, ej, h.edge(l as usize));
                    scratch.census.record(&cv);
                    scratch.pending += 1;
                }
            }
        }

        // pass 2: chain middles between i and j, disjoint from e_i
        scratch.epoch += 1;
        for &w in ej {
            for &b in h.incident_edges(w) {
                if b > i && b < j && scratch.stamp[b as usize] != scratch.epoch {
                    scratch.stamp[b as usize] = scratch.epoch;
                    let eb = h.edge(b as usize);
                    if disjoint(eb, ei) {
                        let cv = CardinalityVector::from_edges(ei, eb, ej);
                        scratch.census.record(&cv);
                        scratch.pending += 1;
                    }
                }
            }
        }

        if scratch.pending >= FLUSH_EVERY {
            scratch.flush(examined, opts.triple_cap)?;
        }
    }
    Ok(())
}

/// Census oracle: direct loop over all C(m, 3) triples. Same contract as
/// [`census`], bounded by `opts.brute_force_edge_cap`.
pub fn census_bruteforce(h: &Hypergraph, opts: &CensusOptions) -> Result<MotifCensus> {
    let m = h.m();
    if m > opts.brute_force_edge_cap {
        return Err(Error::BruteForceCapExceeded {
            m,
            cap: opts.brute_force_edge_cap,
        });
    }
    let mut census = MotifCensus::new(h, opts.per_cardinality_vector);
    for i in 0..m {
        for j in i + 1..m {
            for l in j + 1..m {
                let cv = CardinalityVector::from_edges(h.edge(i), h.edge(j), h.edge(l));
                if classify(&cv) != MotifClass::Disconnected {
                    census.record(&cv);
                }
            }
        }
    }
    Ok(census)
}

/// Per-generation census with empirical growth ratios and the matched-random
/// growth classification for each named motif.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthReport {
    pub k: usize,
    pub generations: Vec<GenerationCensus>,
    /// number -> count(t+1)/count(t) for each consecutive generation pair.
    pub ratios: BTreeMap<u8, Vec<Option<f64>>>,
    /// number -> expected fate of the motif count in a matched random hypergraph.
    pub random_classification: BTreeMap<u8, crate::random::GrowthClass>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenerationCensus {
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub numbered_counts: BTreeMap<u8, u64>,
    pub pattern_counts: BTreeMap<String, u64>,
}

pub fn growth_report(
    h0: &Hypergraph,
    t_max: usize,
    opts: &CensusOptions,
    edge_cap: u64,
) -> Result<GrowthReport> {
    let mut generations = Vec::new();
    let mut h = h0.clone();
    for t in 0..=t_max {
        if t > 0 {
            let predicted = (h.m() as u128) * (h.k() as u128 + 1);
            if predicted > edge_cap as u128 {
                return Err(Error::EdgeCapExceeded {
                    predicted,
                    cap: edge_cap,
                });
            }
            h = h.step().0;
        }
        let census = census(&h, opts)?;
        generations.push(GenerationCensus {
            t,
            n: h.n(),
            m: h.m(),
            numbered_counts: census.numbered_counts(),
            pattern_counts: census
                .counts
                .iter()
                .map(|(p, c)| (p.to_string(), *c))
                .collect(),
        });
    }
    let mut all_numbers: Vec<u8> = generations
        .iter()
        .flat_map(|g| g.numbered_counts.keys().copied())
        .collect();
    all_numbers.sort_unstable();
    all_numbers.dedup();
    let mut ratios = BTreeMap::new();
    let mut random_classification = BTreeMap::new();
    for number in all_numbers {
        let series: Vec<u64> = generations
            .iter()
            .map(|g| g.numbered_counts.get(&number).copied().unwrap_or(0))
            .collect();
        let r: Vec<Option<f64>> = series
            .windows(2)
            .map(|w| (w[0] > 0).then(|| w[1] as f64 / w[0] as f64))
            .collect();
        ratios.insert(number, r);
        let pattern = NUMBERED_PATTERNS
            .iter()
            .find(|(l, _)| *l == number)
            .map(|(_, s)| Pattern::parse(s).unwrap())
            .expect("named motif");
        random_classification.insert(number, crate::random::motif_expectation_class(pattern, h0.k())?);
    }
    Ok(GrowthReport {
        k: h0.k(),
        generations,
        ratios,
        random_classification,
    })
}
