//! Command-line entry point: generate, metrics, motifs, clustering, random,
//! compare, embed, and tables, over the HGF interchange format.
//!
//! Reports are JSON objects with a `schema` field (or flat key\tvalue TSV via
//! `--format tsv`). Identical configuration and seed produce byte-identical
//! output. The `ILTH_MAX_EDGES` environment variable overrides the generation
//! cap.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::frac::frac;
use crate::hgf;
use crate::hom::{self, EmbedOptions, DEFAULT_HOM_BUDGET};
use crate::hypergraph::{Hypergraph, DEFAULT_EDGE_CAP};
use crate::metrics;
use crate::motif::{self, CensusOptions};
use crate::random::{self, CompareMetrics, Model};
use crate::tables;
use crate::{clustering, eigen};

#[derive(Debug, Parser)]
#[command(
    name = "ilth",
    about = "Iterated local transitivity hypergraphs: generation and analysis"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Ilth,
    Ilth2,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Ilth => Model::Ilth,
            ModelArg::Ilth2 => Model::Ilth2,
        }
    }
}

/// Input selection shared by the analysis subcommands: an HGF file (`-` for
/// standard input), or a generated instance. Omitting both reads standard
/// input.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// HGF file to analyze.
    #[arg(long, conflicts_with = "generate")]
    pub input: Option<PathBuf>,
    /// Generate from a single hyperedge: uniformity k and steps t.
    #[arg(long, num_args = 2, value_names = ["K", "T"])]
    pub generate: Option<Vec<usize>>,
    /// Cloning model used with --generate.
    #[arg(long, value_enum, default_value_t = ModelArg::Ilth)]
    pub model: ModelArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a hypergraph and write it as HGF.
    Generate {
        /// Uniformity of the seed hyperedge.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Number of cloning steps.
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Start from this HGF file instead of a single hyperedge.
        #[arg(long)]
        h0: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModelArg::Ilth)]
        model: ModelArg,
    },
    /// Distance summary (diameter, Wiener index, average distance).
    Metrics {
        #[command(flatten)]
        input: InputArgs,
        /// Include adjacency eigenvalues.
        #[arg(long)]
        spectrum: bool,
        /// Eigensolver tolerance.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Motif census over triples of hyperedges.
    Motifs {
        #[command(flatten)]
        input: InputArgs,
        /// Use the cubic brute-force oracle instead of the optimized census.
        #[arg(long)]
        brute_force: bool,
        /// Break counts down by cardinality vector.
        #[arg(long)]
        by_cardinality_vector: bool,
    },
    /// Tuple counts and the clustering coefficients.
    Clustering {
        #[command(flatten)]
        input: InputArgs,
        /// Report every generation from 0 to this many steps.
        #[arg(long)]
        iterate: Option<usize>,
    },
    /// Sample a random k-uniform hypergraph and write it as HGF.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Inclusion probability, as a decimal or an exact fraction "16/220".
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Matched-density comparison against random hypergraphs.
    Compare {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        t_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: u32,
        /// Comma-separated metrics: hc1, hc2, motifs.
        #[arg(long, default_value = "hc1,hc2")]
        metrics: String,
    },
    /// Embed a graph into the 2-section of an iterated hypergraph.
    Embed {
        /// Pattern graph as an edge-list file (`n m` header, then `u v`).
        #[arg(long)]
        graph: PathBuf,
        /// Starting hypergraph (HGF).
        #[arg(long)]
        h0: PathBuf,
        /// Homomorphism search budget in backtracking nodes.
        #[arg(long, default_value_t = DEFAULT_HOM_BUDGET)]
        budget: u64,
    },
    /// Regenerate the published motif tables and diff cell by cell.
    Tables {
        /// Restrict to these uniformities.
        #[arg(long, value_delimiter = ',', default_values_t = vec![3usize, 4, 5, 6])]
        k: Vec<usize>,
        /// Override the per-table default generation range.
        #[arg(long)]
        t_max: Option<usize>,
    },
}

fn edge_cap() -> u64 {
    std::env::var("ILTH_MAX_EDGES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_EDGE_CAP)
}

fn load_input(input: &InputArgs) -> Result<Hypergraph> {
    if let Some(spec) = &input.generate {
        let (k, t) = (spec[0], spec[1]);
        let h0 = Hypergraph::single_edge(k);
        let h = match input.model {
            ModelArg::Ilth => h0.iterate(t, edge_cap())?.0,
            ModelArg::Ilth2 => h0.iterate_multi(t, edge_cap())?.0,
        };
        return Ok(h);
    }
    let (path, text) = match &input.input {
        Some(p) if p.as_os_str() != "-" => {
            (p.display().to_string(), std::fs::read_to_string(p)?)
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            ("<stdin>".to_string(), buf)
        }
    };
    hgf::parse_hgf(&path, &text)
}

fn parse_probability(s: &str) -> Result<crate::frac::Frac> {
    if let Some((num, den)) = s.split_once('/') {
        let num: i128 = num.trim().parse().map_err(|_| Error::Parse {
            path: "--p".into(),
            line: 1,
            col: 1,
            msg: format!("bad fraction {s:?}"),
        })?;
        let den: i128 = den.trim().parse().map_err(|_| Error::Parse {
            path: "--p".into(),
            line: 1,
            col: 1,
            msg: format!("bad fraction {s:?}"),
        })?;
        return Ok(frac(num, den));
    }
    let value: f64 = s.parse().map_err(|_| Error::Parse {
        path: "--p".into(),
        line: 1,
        col: 1,
        msg: format!("bad probability {s:?}"),
    })?;
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::BadProbability { value });
    }
    // decimal inputs are scaled to an exact fraction over 10^9
    Ok(frac((value * 1e9).round() as i128, 1_000_000_000))
}

fn flatten_json(prefix: &str, value: &serde_json::Value, out: &mut Vec<(String, String)>) {
    match value {
        serde_json::Value::Object(map) => {
            for (key, v) in map {
                let next = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                flatten_json(&next, v, out);
            }
        }
        serde_json::Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten_json(&format!("{prefix}[{i}]"), v, out);
            }
        }
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn render<T: Serialize>(config: &RunConfig, report: &T) -> Result<String> {
    let value = serde_json::to_value(report).map_err(|e| Error::Io(e.to_string()))?;
    Ok(match config.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut rows = Vec::new();
            flatten_json("", &value, &mut rows);
            let mut s = String::new();
            for (key, v) in rows {
                s.push_str(&format!("{key}\t{v}\n"));
            }
            s
        }
    })
}

fn emit(config: &RunConfig, text: &str) -> Result<()> {
    match &config.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct MetricsReport<'a> {
    schema: &'a str,
    k: usize,
    n: usize,
    m: usize,
    #[serde(flatten)]
    summary: metrics::DistanceSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<eigen::Spectrum>,
}

#[derive(Serialize)]
struct MotifsReport {
    schema: &'static str,
    k: usize,
    n: usize,
    m: usize,
    triples: u64,
    counts: std::collections::BTreeMap<String, u64>,
    motif_numbers: std::collections::BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cardinality_vectors: Option<Vec<CvRow>>,
}

#[derive(Serialize)]
struct CvRow {
    pattern: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    motif_number: Option<u8>,
    cv: [u32; 7],
    count: u64,
}

/// Executes one parsed invocation end to end.
pub fn run(config: &RunConfig) -> Result<()> {
    if let Some(threads) = config.threads {
        // ignore failure when a global pool already exists (tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match &config.command {
        Command::Generate { k, t, h0, model } => {
            let start = match h0 {
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    hgf::parse_hgf(&path.display().to_string(), &text)?
                }
                None => Hypergraph::single_edge(*k),
            };
            let h = match model {
                ModelArg::Ilth => start.iterate(*t, edge_cap())?.0,
                ModelArg::Ilth2 => start.iterate_multi(*t, edge_cap())?.0,
            };
            emit(config, &hgf::write_hgf(&h))
        }
        Command::Metrics {
            input,
            spectrum,
            tol,
        } => {
            let h = load_input(input)?;
            let summary = metrics::distance_summary(&h);
            let spec = if *spectrum {
                Some(eigen::spectrum(&h.two_section(), *tol)?)
            } else {
                None
            };
            let report = MetricsReport {
                schema: "ilth/metrics/v1",
                k: h.k(),
                n: h.n(),
                m: h.m(),
                summary,
                spectrum: spec,
            };
            emit(config, &render(config, &report)?)
        }
        Command::Motifs {
            input,
            brute_force,
            by_cardinality_vector,
        } => {
            let h = load_input(input)?;
            let opts = CensusOptions {
                per_cardinality_vector: *by_cardinality_vector,
                ..CensusOptions::default()
            };
            let census = if *brute_force {
                motif::census_bruteforce(&h, &opts)?
            } else {
                motif::census(&h, &opts)?
            };
            let report = MotifsReport {
                schema: "ilth/motifs/v1",
                k: census.k,
                n: census.n,
                m: census.m,
                triples: census.triples_examined,
                counts: census
                    .counts
                    .iter()
                    .map(|(p, c)| (p.to_string(), *c))
                    .collect(),
                motif_numbers: census
                    .numbered_counts()
                    .into_iter()
                    .map(|(number, c)| (number.to_string(), c))
                    .collect(),
                cardinality_vectors: census.cv_counts.as_ref().map(|cvs| {
                    cvs.iter()
                        .map(|(cv, count)| CvRow {
                            pattern: cv.indicator().canonical().to_string(),
                            motif_number: cv.indicator().motif_number(),
                            cv: cv.0,
                            count: *count,
                        })
                        .collect()
                }),
            };
            emit(config, &render(config, &report)?)
        }
        Command::Clustering { input, iterate } => {
            let h = load_input(input)?;
            let report = match iterate {
                None => {
                    let r = clustering::clustering_report(&h)?;
                    json!({
                        "schema": "ilth/clustering/v1",
                        "k": h.k(), "n": h.n(), "m": h.m(),
                        "report": r,
                    })
                }
                Some(t_max) => {
                    let mut gens = Vec::new();
                    let mut cur = h.clone();
                    for t in 0..=*t_max {
                        if t > 0 {
                            let growth = match input.model {
                                ModelArg::Ilth => cur.k() as u128 + 1,
                                ModelArg::Ilth2 => (cur.k() * cur.k() - cur.k() + 1) as u128,
                            };
                            let predicted = cur.m() as u128 * growth + cur.n() as u128;
                            if predicted > edge_cap() as u128 {
                                return Err(Error::EdgeCapExceeded {
                                    predicted,
                                    cap: edge_cap(),
                                });
                            }
                            cur = match input.model {
                                ModelArg::Ilth => cur.step().0,
                                ModelArg::Ilth2 => cur.step_multi()?.0,
                            };
                        }
                        let r = clustering::clustering_report(&cur)?;
                        gens.push(json!({
                            "t": t, "n": cur.n(), "m": cur.m(), "report": r,
                        }));
                    }
                    json!({
                        "schema": "ilth/clustering-trend/v1",
                        "k": h.k(),
                        "generations": gens,
                    })
                }
            };
            emit(config, &render(config, &report)?)
        }
        Command::Random { n, k, p, seed } => {
            let p = parse_probability(p)?;
            let params = random::RandomModelParams::new(*n, *k, p, *seed, 1)?;
            let h = random::sample(&params)?;
            emit(config, &hgf::write_hgf(&h))
        }
        Command::Compare {
            input,
            t_max,
            seed,
            trials,
            metrics: metric_list,
        } => {
            let h = load_input(input)?;
            let mut selection = CompareMetrics {
                hc1: false,
                hc2: false,
                motifs: false,
            };
            for item in metric_list.split(',') {
                match item.trim() {
                    "hc1" => selection.hc1 = true,
                    "hc2" => selection.hc2 = true,
                    "motifs" => selection.motifs = true,
                    "" => {}
                    other => {
                        return Err(Error::Parse {
                            path: "--metrics".into(),
                            line: 1,
                            col: 1,
                            msg: format!("unknown metric {other:?}"),
                        })
                    }
                }
            }
            let reports = random::compare(
                &h,
                *t_max,
                *seed,
                *trials,
                input.model.into(),
                selection,
                edge_cap(),
            )?;
            let report = json!({
                "schema": "ilth/compare/v1",
                "model": match input.model { ModelArg::Ilth => "ilth", ModelArg::Ilth2 => "ilth2" },
                "generations": reports,
            });
            emit(config, &render(config, &report)?)
        }
        Command::Embed { graph, h0, budget } => {
            let gtext = std::fs::read_to_string(graph)?;
            let g = hgf::parse_edge_list(&graph.display().to_string(), &gtext)?;
            let htext = std::fs::read_to_string(h0)?;
            let h0 = hgf::parse_hgf(&h0.display().to_string(), &htext)?;
            let section = h0.two_section();
            let Some(f) = hom::find_homomorphism(&g, &section, *budget)? else {
                let report = json!({
                    "schema": "ilth/embed/v1",
                    "homomorphic": false,
                });
                return emit(config, &render(config, &report)?);
            };
            let (t, map) = hom::embed(&g, &h0, &f, &EmbedOptions::default())?;
            let host = hom::host_after(&h0, t);
            let report = json!({
                "schema": "ilth/embed/v1",
                "homomorphic": true,
                "t": t,
                "map": map,
                "injective": map.is_injective(),
                "induced": hom::verify_embedding(&g, &host, &map),
            });
            emit(config, &render(config, &report)?)
        }
        Command::Tables { k, t_max } => {
            let check = tables::verify_tables(k, *t_max, &CensusOptions::default())?;
            let mut lines = String::new();
            for cell in &check.cells {
                let status = if cell.ok && cell.erratum {
                    "ok (published cell is a known typo; matched verified value)"
                } else if cell.ok {
                    "ok"
                } else {
                    "MISMATCH"
                };
                lines.push_str(&format!(
                    "k={} t={} motif {:>2}: published {:>12} computed {:>12}  {}\n",
                    cell.k, cell.t, cell.motif, cell.expected, cell.actual, status
                ));
            }
            lines.push_str(if check.all_ok {
                "TABLES OK\n"
            } else {
                "TABLES MISMATCH\n"
            });
            emit(config, &lines)?;
            if !check.all_ok {
                return Err(Error::Io("table mismatch".into()));
            }
            Ok(())
        }
    }
}

/// Parses argv and runs, mapping errors to a machine-readable object on
/// standard error and a nonzero exit status.
pub fn main_entry() -> std::process::ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(err) => {
            let obj = json!({
                "schema": "ilth/error/v1",
                "error": err.to_string(),
            });
            eprintln!("{obj}");
            std::process::ExitCode::FAILURE
        }
    }
}
