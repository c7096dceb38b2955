//! Benchmark harness: success rates, timings, and search-effort statistics
//! for families of guest graphs against a fixed host, reported as CSV.

use std::time::Instant;

use thiserror::Error;

use crate::embed::{find_embedding, EmbedParams};
use crate::generators::{complete_graph, grid_graph, random_cubic_graph, GeneratorError};
use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("size list must not be empty")]
    NoSizes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Grid,
    Cubic,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Grid => "grid",
            Family::Cubic => "cubic",
        }
    }

    /// The guest for one (size, instance) cell. `size` is the vertex count
    /// for complete and cubic guests and the side length for grids.
    fn instance(self, size: usize, instance_seed: u64) -> Result<Graph, GeneratorError> {
        match self {
            Family::Complete => complete_graph(size),
            Family::Grid => grid_graph(size, size),
            Family::Cubic => random_cubic_graph(size, instance_seed),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Family, String> {
        match s {
            "complete" => Ok(Family::Complete),
            "grid" => Ok(Family::Grid),
            "cubic" => Ok(Family::Cubic),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    /// Random guest instances per size (only >1 is meaningful for cubic).
    pub instances: u32,
    /// Embedder runs per instance.
    pub trials: u32,
    pub params: EmbedParams,
    /// Report 0.000 for all timings so the CSV is byte-reproducible.
    pub no_timing: bool,
}

/// One CSV row: all trials of one size, aggregated across instances.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    pub h_size: usize,
    pub g_spec: String,
    pub trials: u32,
    pub successes: u32,
    pub success_rate: f64,
    pub median_time_s: f64,
    pub mean_rounds: f64,
    pub mean_pops: f64,
    pub mode: &'static str,
}

pub const CSV_HEADER: &str =
    "family,h_size,g_spec,trials,successes,success_rate,median_time_s,mean_rounds,mean_pops,mode";

impl BenchRow {
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{:.4},{:.3},{:.2},{:.1},{}",
            self.family.as_str(),
            self.h_size,
            self.g_spec,
            self.trials,
            self.successes,
            self.success_rate,
            self.median_time_s,
            self.mean_rounds,
            self.mean_pops,
            self.mode,
        )
    }
}

pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv_line());
        out.push('\n');
    }
    out
}

/// SplitMix64-style mixer for per-cell seeds, so every (size, instance,
/// trial) cell runs an independent deterministic stream.
fn derive_seed(base: u64, size: usize, instance: u32, trial: u32) -> u64 {
    let mut z = base
        .wrapping_add((size as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .wrapping_add(u64::from(instance) << 32)
        .wrapping_add(u64::from(trial));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

struct CellResult {
    success: bool,
    seconds: f64,
    rounds: u32,
    pops: u64,
}

/// Run the whole benchmark against host `g`. Cells execute in parallel;
/// rows are assembled in size order so output is deterministic.
pub fn run_bench(g: &Graph, g_spec: &str, cfg: &BenchConfig) -> Result<Vec<BenchRow>, BenchError> {
    if cfg.sizes.is_empty() {
        return Err(BenchError::NoSizes);
    }
    let mode = if cfg.params.localized {
        "localized"
    } else {
        "global"
    };
    let mut rows = Vec::with_capacity(cfg.sizes.len());
    for &size in &cfg.sizes {
        let mut guests = Vec::with_capacity(cfg.instances as usize);
        for inst in 0..cfg.instances {
            let inst_seed = derive_seed(cfg.params.seed, size, inst, u32::MAX);
            guests.push(std::sync::Arc::new(self::Family::instance(
                cfg.family, size, inst_seed,
            )?));
        }

        let mut cells: Vec<CellResult> = Vec::new();
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for (inst, guest) in guests.iter().enumerate() {
                for trial in 0..cfg.trials {
                    let params = EmbedParams {
                        seed: derive_seed(cfg.params.seed, size, inst as u32, trial),
                        ..cfg.params.clone()
                    };
                    let guest = guest.clone();
                    handles.push(scope.spawn(move || {
                        let start = Instant::now();
                        let outcome = find_embedding(g, &guest, &params)
                            .expect("bench guests fit the host");
                        CellResult {
                            success: outcome.is_success(),
                            seconds: start.elapsed().as_secs_f64(),
                            rounds: outcome.stats.rounds,
                            pops: outcome.stats.pops,
                        }
                    }));
                }
            }
            for h in handles {
                cells.push(h.join().expect("bench worker panicked"));
            }
        });

        let trials = cfg.instances * cfg.trials;
        let successes = cells.iter().filter(|c| c.success).count() as u32;
        let median_time_s = if cfg.no_timing {
            0.0
        } else {
            let mut times: Vec<f64> = cells.iter().map(|c| c.seconds).collect();
            times.sort_by(|a, b| a.total_cmp(b));
            times[times.len() / 2]
        };
        let mean_rounds =
            cells.iter().map(|c| f64::from(c.rounds)).sum::<f64>() / f64::from(trials);
        let mean_pops = cells.iter().map(|c| c.pops as f64).sum::<f64>() / f64::from(trials);
        rows.push(BenchRow {
            family: cfg.family,
            h_size: size,
            g_spec: g_spec.to_string(),
            trials,
            successes,
            success_rate: f64::from(successes) / f64::from(trials),
            median_time_s,
            mean_rounds,
            mean_pops,
            mode,
        });
    }
    Ok(rows)
}
