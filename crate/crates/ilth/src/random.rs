//! The binomial random k-uniform hypergraph G(n, k, p), its closed-form
//! clustering expectations, and matched-density Monte Carlo comparisons
//! against generated hypergraphs.
//!
//! Randomness comes from a fixed 64-bit generator specified bit-exactly
//! below, so identical parameters and seed reproduce identical samples on
//! any implementation.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::clustering;
use crate::error::{Error, Result};
use crate::frac::{frac, Frac, FracOut};
use crate::hypergraph::{Hypergraph, DEFAULT_EDGE_CAP};
use crate::motif::{self, CensusOptions, Pattern};
use num_traits::ToPrimitive;

/// SplitMix64: state advances by 0x9E3779B97F4A7C15 per draw; each output is
/// the finalizer `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
/// z *= 0x94D049BB133111EB; z ^= z >> 31` applied to the new state.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

/// The SplitMix64 output finalizer, also used to derive per-trial seeds.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        mix64(self.state)
    }

    /// Uniform in [0, 1) with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in 0..bound by rejection below the largest multiple of bound.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}

/// Trial seeds: seed xor trial index, passed through the output mixer.
pub fn trial_seed(seed: u64, trial: u32) -> u64 {
    mix64(seed ^ trial as u64)
}

/// C(n, k) in 128 bits, erroring on overflow.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out
            .checked_mul((n - i) as u128)
            .ok_or(Error::BinomialOverflow { n, k })?;
        out /= (i + 1) as u128;
    }
    Ok(out)
}

/// C(n, k) in floating point, for expectations where n may be large.
pub fn binomial_f64(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut out = 1.0f64;
    for i in 0..k {
        out *= (n - i) as f64 / (i + 1) as f64;
    }
    out
}

/// Parameters of one G(n, k, p) experiment.
#[derive(Debug, Clone, Serialize)]
pub struct RandomModelParams {
    pub n: usize,
    pub k: usize,
    /// Inclusion probability as an exact reduced fraction.
    pub p: FracOut,
    pub seed: u64,
    pub trials: u32,
    #[serde(skip)]
    pub p_exact: Frac,
}

impl RandomModelParams {
    pub fn new(n: usize, k: usize, p: Frac, seed: u64, trials: u32) -> Result<Self> {
        if p < frac(0, 1) || p > frac(1, 1) {
            return Err(Error::BadProbability {
                value: p.to_f64().unwrap_or(f64::NAN),
            });
        }
        binomial(n as u64, k as u64)?; // must be representable
        Ok(RandomModelParams {
            n,
            k,
            p: FracOut::of(&p),
            seed,
            trials,
            p_exact: p,
        })
    }

    pub fn p_f64(&self) -> f64 {
        self.p_exact.to_f64().unwrap_or(f64::NAN)
    }
}

/// Matched-density parameters for a generated hypergraph: same order and
/// uniformity, p = m / C(n, k) exactly.
pub fn matched_params(h: &Hypergraph, seed: u64, trials: u32) -> Result<RandomModelParams> {
    let total = binomial(h.n() as u64, h.k() as u64)?;
    let total = i128::try_from(total).map_err(|_| Error::BinomialOverflow {
        n: h.n() as u64,
        k: h.k() as u64,
    })?;
    let p = if h.m() == 0 {
        frac(0, 1)
    } else {
        frac(h.m() as i128, total)
    };
    RandomModelParams::new(h.n(), h.k(), p, seed, trials)
}

/// Inversion is exact below this expected count; above it a rounded normal
/// draw with out-of-range rejection stands in (documented approximation).
const BINOMIAL_INVERSION_CUTOFF: f64 = 256.0;

/// Draws Binomial(total, p).
fn binomial_draw(rng: &mut SplitMix64, total: u128, p: f64) -> u64 {
    if p <= 0.0 || total == 0 {
        return 0;
    }
    if p >= 1.0 {
        return total.min(u64::MAX as u128) as u64;
    }
    let total_f = total as f64;
    let mean = total_f * p;
    if mean <= BINOMIAL_INVERSION_CUTOFF && total_f * p.ln_1p_neg() > -700.0 {
        // CDF inversion from zero
        let u = rng.next_f64();
        let ratio = p / (1.0 - p);
        let mut pmf = (total_f * (-p).ln_1p()).exp();
        let mut cdf = pmf;
        let mut i: u64 = 0;
        let max_iter = (mean + 64.0 * mean.sqrt() + 256.0) as u64;
        while u > cdf && i < max_iter {
            pmf *= ((total_f - i as f64) / (i as f64 + 1.0)) * ratio;
            cdf += pmf;
            i += 1;
        }
        i
    } else {
        let sd = (total_f * p * (1.0 - p)).sqrt();
        loop {
            let u1 = 1.0 - rng.next_f64();
            let u2 = rng.next_f64();
            let z = (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos();
            let x = (mean + z * sd).round();
            if x >= 0.0 && x <= total_f {
                return x as u64;
            }
        }
    }
}

trait LnOnePlusNeg {
    fn ln_1p_neg(self) -> f64;
}

impl LnOnePlusNeg for f64 {
    fn ln_1p_neg(self) -> f64 {
        (-self).ln_1p()
    }
}

/// Samples G(n, k, p): the edge count is binomial over all C(n, k) k-sets,
/// then that many distinct k-sets are drawn uniformly by rejection on the
/// sorted encoding. Distribution equals independent per-set inclusion.
pub fn sample(params: &RandomModelParams) -> Result<Hypergraph> {
    let n = params.n;
    let k = params.k;
    let total = binomial(n as u64, k as u64)?;
    let mut rng = SplitMix64::new(params.seed);
    let count = binomial_draw(&mut rng, total, params.p_f64());
    if count > DEFAULT_EDGE_CAP {
        return Err(Error::EdgeCapExceeded {
            predicted: count as u128,
            cap: DEFAULT_EDGE_CAP,
        });
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(count as usize);
    let mut edges: Vec<Vec<u32>> = Vec::with_capacity(count as usize);
    let mut pick = Vec::with_capacity(k);
    while edges.len() < count as usize {
        pick.clear();
        while pick.len() < k {
            let v = rng.next_below(n as u64) as u32;
            if !pick.contains(&v) {
                pick.push(v);
            }
        }
        pick.sort_unstable();
        if !seen.contains(&pick) {
            seen.insert(pick.clone());
            edges.push(pick.clone());
        }
    }
    Hypergraph::new(k, n, edges)
}

/// E[HC1] = C(n-2, k-2) p: the expected number of closing edges over a fixed
/// endpoint pair.
pub fn expected_hc1(n: usize, k: usize, p: f64) -> f64 {
    if n < 2 || k < 2 {
        return 0.0;
    }
    binomial_f64(n as u64 - 2, k as u64 - 2) * p
}

/// E[HC2] = 1 - (1-p)^C(n-2, k-2), evaluated in log space.
pub fn expected_hc2(n: usize, k: usize, p: f64) -> f64 {
    if n < 2 || k < 2 {
        return 0.0;
    }
    if p >= 1.0 {
        return 1.0;
    }
    -f64::exp_m1(binomial_f64(n as u64 - 2, k as u64 - 2) * (-p).ln_1p())
}

/// Fate of a motif count in the matched random model as t grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthClass {
    Grows,
    Decays,
    Critical,
}

/// Compares the maximum motif order alpha against 3 (k - log2(k+1)): the
/// expected count grows when alpha clears the threshold, decays below it.
pub fn motif_expectation_class(pattern: Pattern, k: usize) -> Result<GrowthClass> {
    let alpha = motif::alpha(pattern, k).ok_or_else(|| Error::InfeasiblePattern {
        pattern: pattern.to_string(),
        k,
    })?;
    let threshold = 3.0 * (k as f64 - ((k + 1) as f64).log2());
    let diff = alpha as f64 - threshold;
    Ok(if diff.abs() < 1e-12 {
        GrowthClass::Critical
    } else if diff > 0.0 {
        GrowthClass::Grows
    } else {
        GrowthClass::Decays
    })
}

/// Monte Carlo mean and standard error; trials where the metric is undefined
/// are excluded and reported.
#[derive(Debug, Clone, Serialize)]
pub struct McStats {
    pub mean: f64,
    pub stderr: f64,
    pub used_trials: u32,
    pub excluded_trials: u32,
}

pub fn monte_carlo<F>(params: &RandomModelParams, metric: F) -> Result<McStats>
where
    F: Fn(&Hypergraph) -> Result<Option<f64>> + Sync,
{
    let values: Vec<Option<f64>> = (0..params.trials)
        .into_par_iter()
        .map(|trial| {
            let trial_params = RandomModelParams {
                seed: trial_seed(params.seed, trial),
                ..params.clone()
            };
            let h = sample(&trial_params)?;
            metric(&h)
        })
        .collect::<Result<_>>()?;
    Ok(summarize(&values))
}

fn summarize(values: &[Option<f64>]) -> McStats {
    let used: Vec<f64> = values.iter().copied().flatten().collect();
    let excluded = (values.len() - used.len()) as u32;
    if used.is_empty() {
        return McStats {
            mean: f64::NAN,
            stderr: f64::NAN,
            used_trials: 0,
            excluded_trials: excluded,
        };
    }
    let n = used.len() as f64;
    let mean = used.iter().sum::<f64>() / n;
    let stderr = if used.len() > 1 {
        let var = used.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
        (var / n).sqrt()
    } else {
        0.0
    };
    McStats {
        mean,
        stderr,
        used_trials: used.len() as u32,
        excluded_trials: excluded,
    }
}

/// Pooled ratio over Monte Carlo trials: sum of numerators over sum of
/// denominators, with a linearized ratio-estimator standard error. This is
/// the estimator whose expectation matches a per-path probability or
/// per-path expected count exactly (ratio of expectations), unlike the mean
/// of per-trial ratios.
#[derive(Debug, Clone, Serialize)]
pub struct PooledRatio {
    pub value: f64,
    pub stderr: f64,
    pub trials: u32,
}

pub fn pooled_ratio_mc<F>(params: &RandomModelParams, counter: F) -> Result<PooledRatio>
where
    F: Fn(&Hypergraph) -> Result<(u64, u64)> + Sync,
{
    let pairs: Vec<(u64, u64)> = (0..params.trials)
        .into_par_iter()
        .map(|trial| {
            let trial_params = RandomModelParams {
                seed: trial_seed(params.seed, trial),
                ..params.clone()
            };
            counter(&sample(&trial_params)?)
        })
        .collect::<Result<_>>()?;
    let total_num: f64 = pairs.iter().map(|p| p.0 as f64).sum();
    let total_den: f64 = pairs.iter().map(|p| p.1 as f64).sum();
    let t = pairs.len() as f64;
    if total_den == 0.0 {
        return Ok(PooledRatio {
            value: f64::NAN,
            stderr: f64::NAN,
            trials: params.trials,
        });
    }
    let ratio = total_num / total_den;
    let mean_den = total_den / t;
    // var of (num_i - ratio * den_i) drives the ratio-estimator error
    let resid_var = pairs
        .iter()
        .map(|&(x, y)| {
            let r = x as f64 - ratio * y as f64;
            r * r
        })
        .sum::<f64>()
        / (t - 1.0).max(1.0);
    let stderr = (resid_var / t).sqrt() / mean_den;
    Ok(PooledRatio {
        value: ratio,
        stderr,
        trials: params.trials,
    })
}

/// Which cloning model a comparison runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Ilth,
    Ilth2,
}

/// Metrics included in a comparison run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompareMetrics {
    pub hc1: bool,
    pub hc2: bool,
    pub motifs: bool,
}

impl Default for CompareMetrics {
    fn default() -> Self {
        CompareMetrics {
            hc1: true,
            hc2: true,
            motifs: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MetricComparison {
    pub generated: Option<FracOut>,
    pub random: McStats,
}

#[derive(Debug, Clone, Serialize)]
pub struct MotifComparison {
    pub generated: u64,
    pub random: McStats,
}

/// One generation of a matched-density comparison.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub matched_p: FracOut,
    pub trials: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hc1: Option<MetricComparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hc2: Option<MetricComparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub motifs: Option<std::collections::BTreeMap<u8, MotifComparison>>,
    /// hc1(t) / hc1(t-1) on the generated side.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hc1_step_ratio_generated: Option<f64>,
    /// Ratio of successive random-side hc1 means.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hc1_step_ratio_random: Option<f64>,
}

/// Generates `t_max + 1` generations from `h0` and pits each against its
/// matched random hypergraph over `trials` Monte Carlo samples.
pub fn compare(
    h0: &Hypergraph,
    t_max: usize,
    seed: u64,
    trials: u32,
    model: Model,
    metrics: CompareMetrics,
    edge_cap: u64,
) -> Result<Vec<ComparisonReport>> {
    let mut reports: Vec<ComparisonReport> = Vec::with_capacity(t_max + 1);
    let mut h = h0.clone();
    let census_opts = CensusOptions::default();
    for t in 0..=t_max {
        if t > 0 {
            let growth = match model {
                Model::Ilth => h.k() as u128 + 1,
                Model::Ilth2 => (h.k() * h.k() - h.k() + 1) as u128,
            };
            let predicted = h.m() as u128 * growth + h.n() as u128;
            if predicted > edge_cap as u128 {
                return Err(Error::EdgeCapExceeded {
                    predicted,
                    cap: edge_cap,
                });
            }
            h = match model {
                Model::Ilth => h.step().0,
                Model::Ilth2 => h.step_multi()?.0,
            };
        }
        let params = matched_params(&h, seed.wrapping_add(t as u64), trials)?;
        let generated_report = clustering::clustering_report(&h)?;

        let hc1 = if metrics.hc1 {
            let random = monte_carlo(&params, |s| {
                Ok(clustering::clustering_report(s)?
                    .hc1_exact
                    .and_then(|f| f.to_f64()))
            })?;
            Some(MetricComparison {
                generated: FracOut::opt(&generated_report.hc1_exact),
                random,
            })
        } else {
            None
        };
        let hc2 = if metrics.hc2 {
            let random = monte_carlo(&params, |s| {
                Ok(clustering::clustering_report(s)?
                    .hc2_exact
                    .and_then(|f| f.to_f64()))
            })?;
            Some(MetricComparison {
                generated: FracOut::opt(&generated_report.hc2_exact),
                random,
            })
        } else {
            None
        };
        let motifs = if metrics.motifs {
            let generated_census = motif::census(&h, &census_opts)?;
            let numbers = generated_census.numbered_counts();
            let mut out = std::collections::BTreeMap::new();
            for (number, count) in numbers {
                let random = monte_carlo(&params, |s| {
                    Ok(Some(motif::census(s, &census_opts)?.numbered_count(number) as f64))
                })?;
                out.insert(
                    number,
                    MotifComparison {
                        generated: count,
                        random,
                    },
                );
            }
            Some(out)
        } else {
            None
        };

        let hc1_step_ratio_generated = reports.last().and_then(|prev| {
            let prev_v = prev.hc1.as_ref()?.generated.as_ref()?.decimal;
            let cur_v = hc1.as_ref()?.generated.as_ref()?.decimal;
            (prev_v != 0.0).then(|| cur_v / prev_v)
        });
        let hc1_step_ratio_random = reports.last().and_then(|prev| {
            let prev_v = prev.hc1.as_ref()?.random.mean;
            let cur_v = hc1.as_ref()?.random.mean;
            (prev_v != 0.0).then(|| cur_v / prev_v)
        });

        reports.push(ComparisonReport {
            t,
            n: h.n(),
            m: h.m(),
            matched_p: params.p.clone(),
            trials,
            hc1,
            hc2,
            motifs,
            hc1_step_ratio_generated,
            hc1_step_ratio_random,
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_deterministic() {
        let params = RandomModelParams::new(20, 3, frac(1, 100), 42, 1).unwrap();
        let a = sample(&params).unwrap();
        let b = sample(&params).unwrap();
        assert_eq!(a, b);
        let other = RandomModelParams::new(20, 3, frac(1, 100), 43, 1).unwrap();
        // overwhelmingly unlikely to coincide
        assert_ne!(sample(&other).unwrap(), a);
    }

    #[test]
    fn degenerate_probabilities() {
        let params = RandomModelParams::new(6, 3, frac(0, 1), 7, 1).unwrap();
        assert_eq!(sample(&params).unwrap().m(), 0);
        let params = RandomModelParams::new(4, 3, frac(1, 1), 7, 1).unwrap();
        let h = sample(&params).unwrap();
        assert_eq!(h.m(), 4); // all four triples
    }

    #[test]
    fn rejects_bad_probability() {
        assert!(matches!(
            RandomModelParams::new(5, 3, frac(3, 2), 0, 1),
            Err(Error::BadProbability { .. })
        ));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(20, 3).unwrap(), 1140);
        assert_eq!(binomial(12, 3).unwrap(), 220);
        assert_eq!(binomial(5, 0).unwrap(), 1);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert!((binomial_f64(20, 3) - 1140.0).abs() < 1e-9);
    }

    #[test]
    fn edge_count_mean_matches_binomial() {
        // n=20, k=3, p=0.01: mean 11.4, var ~ 11.286
        let mut total = 0u64;
        let trials = 1000u32;
        for trial in 0..trials {
            let params =
                RandomModelParams::new(20, 3, frac(1, 100), trial_seed(99, trial), 1).unwrap();
            total += sample(&params).unwrap().m() as u64;
        }
        let mean = total as f64 / trials as f64;
        let expected = 1140.0 * 0.01;
        let sd = (1140.0f64 * 0.01 * 0.99).sqrt();
        let stderr = sd / (trials as f64).sqrt();
        assert!(
            (mean - expected).abs() < 3.0 * stderr,
            "mean {mean}, expected {expected} +- {stderr}"
        );
    }

    #[test]
    fn per_set_inclusion_frequency() {
        // the fixed set {0,1,2} should appear with frequency ~ p
        let p = 0.3;
        let trials = 10_000u32;
        let mut hits = 0u32;
        for trial in 0..trials {
            let params =
                RandomModelParams::new(6, 3, frac(3, 10), trial_seed(5, trial), 1).unwrap();
            let h = sample(&params).unwrap();
            if h.edges().iter().any(|e| e == &[0, 1, 2]) {
                hits += 1;
            }
        }
        let freq = hits as f64 / trials as f64;
        let se = (p * (1.0 - p) / trials as f64).sqrt();
        assert!(
            (freq - p).abs() < 4.0 * se,
            "freq {freq}, expected {p} +- {se}"
        );
    }

    #[test]
    fn matched_params_examples() {
        let (h2, _) = Hypergraph::single_edge(3).iterate(2, DEFAULT_EDGE_CAP).unwrap();
        let params = matched_params(&h2, 0, 1).unwrap();
        assert_eq!(params.p.fraction, "4/55"); // 16/220 reduced
        let (h1, _) = Hypergraph::single_edge(4).step();
        let params = matched_params(&h1, 0, 1).unwrap();
        assert_eq!(params.p.fraction, "1/14"); // 5/70 reduced
        let empty = Hypergraph::empty(4, 6);
        assert_eq!(matched_params(&empty, 0, 1).unwrap().p.fraction, "0/1");
    }

    #[test]
    fn expectation_formulas() {
        assert!((expected_hc1(5, 3, 1.0) - 3.0).abs() < 1e-12);
        let p = 16.0 / 220.0;
        assert!((expected_hc1(12, 3, p) - 10.0 * p).abs() < 1e-12);
        assert_eq!(expected_hc2(12, 3, 0.0), 0.0);
        assert_eq!(expected_hc2(12, 3, 1.0), 1.0);
        let direct = 1.0 - (1.0 - p).powi(10);
        assert!((expected_hc2(12, 3, p) - direct).abs() < 1e-12);
        // ~0.5301 for the matched H_2 fixture
        assert!((expected_hc2(12, 3, p) - 0.5301).abs() < 5e-4);
    }

    #[test]
    fn expected_hc2_is_monotone() {
        let mut prev = 0.0;
        for i in 0..=20 {
            let p = i as f64 / 20.0;
            let v = expected_hc2(12, 3, p);
            assert!(v >= prev);
            prev = v;
        }
        let mut prev = 0.0;
        for n in 5..40 {
            let v = expected_hc2(n, 3, 0.05);
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn growth_classification() {
        // alpha = 3k - 2 always grows
        let p2 = Pattern::parse("1110001").unwrap();
        for k in 3..=10 {
            assert_eq!(motif_expectation_class(p2, k).unwrap(), GrowthClass::Grows);
        }
        // alpha = 2k - 1 decays once k >= 9
        let p11 = Pattern::parse("1011101").unwrap();
        assert_eq!(
            motif_expectation_class(p11, 9).unwrap(),
            GrowthClass::Decays
        );
        // floor(3k/2) - 1-ish orders decay deep into large k
        let p13 = Pattern::parse("0001111").unwrap();
        assert_eq!(
            motif_expectation_class(p13, 10).unwrap(),
            GrowthClass::Decays
        );
        // alpha_14 = 2k - 2 = 12 exactly equals the threshold at k = 7
        let p14 = Pattern::parse("1001111").unwrap();
        assert_eq!(
            motif_expectation_class(p14, 7).unwrap(),
            GrowthClass::Critical
        );
        assert!(matches!(
            motif_expectation_class(Pattern::parse("1000000").unwrap(), 3),
            Err(Error::InfeasiblePattern { .. })
        ));
    }

    #[test]
    fn multi_clone_matched_density_trend() {
        // matched p shrinks by (k^2-k+1)/k^k per multi-clone step
        let mut h = Hypergraph::single_edge(3);
        let mut prev = matched_params(&h, 0, 1).unwrap().p_f64();
        let mut last_ratio = 0.0;
        for _ in 0..4 {
            h = h.step_multi().unwrap().0;
            let p = matched_params(&h, 0, 1).unwrap().p_f64();
            last_ratio = p / prev;
            prev = p;
        }
        let limit = 7.0 / 27.0;
        assert!(
            (last_ratio - limit).abs() / limit < 0.02,
            "ratio {last_ratio} vs {limit}"
        );
    }

    #[test]
    fn generated_hc2_sits_below_matched_random_for_k4() {
        let (h3, _) = Hypergraph::single_edge(4).iterate(3, DEFAULT_EDGE_CAP).unwrap();
        let generated = clustering::clustering_report(&h3)
            .unwrap()
            .hc2_exact
            .unwrap()
            .to_f64()
            .unwrap();
        let params = matched_params(&h3, 99, 50).unwrap();
        let mc = monte_carlo(&params, |s| {
            Ok(clustering::clustering_report(s)?
                .hc2_exact
                .and_then(|f| f.to_f64()))
        })
        .unwrap();
        assert!(
            generated < mc.mean - 3.0 * mc.stderr,
            "generated {generated} vs random {} +- {}",
            mc.mean,
            mc.stderr
        );
    }

    #[test]
    fn monte_carlo_summary_excludes_undefined() {
        let params = RandomModelParams::new(8, 3, frac(1, 25), 11, 64).unwrap();
        let stats = monte_carlo(&params, |h| {
            Ok(clustering::clustering_report(h)?
                .hc2_exact
                .and_then(|f| f.to_f64()))
        })
        .unwrap();
        assert_eq!(stats.used_trials + stats.excluded_trials, 64);
        assert!(stats.used_trials > 0);
    }
}
