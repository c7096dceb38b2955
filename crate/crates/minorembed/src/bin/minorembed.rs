//! Command-line front end: embed, generate, verify, and bench.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use minorembed::bench::{rows_to_csv, run_bench, BenchConfig, Family};
use minorembed::embed::{find_embedding, EmbedError, EmbedParams};
use minorembed::fileio::{parse_mask, EmbeddingFile, Status};
use minorembed::generators::{
    chimera_graph, complete_graph, grid_graph, random_cubic_graph, ChimeraSpec,
};
use minorembed::graph::{parse_edge_list, write_edge_list, Graph, VertexSet};
use minorembed::verify::{verify_embedding, Violation};

#[derive(Parser)]
#[command(name = "minorembed", version, about = "Heuristic graph minor embedding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Embed a guest graph into a host graph.
    Embed(EmbedArgs),
    /// Write a generated graph as an edge list.
    Generate(GenerateArgs),
    /// Check an embedding file against a guest/host pair.
    Verify(VerifyArgs),
    /// Benchmark a guest family against a host; writes CSV.
    Bench(BenchArgs),
}

/// Host selection shared by embed/verify/bench: an edge-list file or a
/// Chimera shape with an optional broken-vertex mask.
#[derive(Args)]
struct HostArgs {
    /// Host graph edge-list file.
    #[arg(long, value_name = "FILE", conflicts_with = "chimera")]
    g_file: Option<PathBuf>,
    /// Chimera host C(M,N,L).
    #[arg(long, num_args = 3, value_names = ["M", "N", "L"])]
    chimera: Option<Vec<u32>>,
    /// Broken-vertex mask for the Chimera host (pre-mask ids, one per line).
    #[arg(long, value_name = "FILE", requires = "chimera")]
    mask: Option<PathBuf>,
}

impl HostArgs {
    fn load(&self) -> Result<(Graph, String), String> {
        match (&self.g_file, &self.chimera) {
            (Some(path), None) => Ok((read_graph(path)?, display_name(path))),
            (None, Some(dims)) => {
                let mut spec = ChimeraSpec::unbroken(dims[0], dims[1], dims[2]);
                if let Some(mask_path) = &self.mask {
                    let text = read_file(mask_path)?;
                    let broken =
                        parse_mask(&text).map_err(|e| format!("{}: {e}", mask_path.display()))?;
                    for v in &broken {
                        if *v as usize >= spec.total_vertices() {
                            return Err(format!(
                                "mask vertex {v} out of range for {}",
                                spec.label()
                            ));
                        }
                    }
                    spec.broken = VertexSet::from_iter(broken);
                }
                // comma-free form so the label is safe inside CSV
                let mut label = format!("chimera-{}-{}-{}", spec.rows, spec.cols, spec.shore);
                if !spec.broken.is_empty() {
                    label.push_str(&format!("-{}broken", spec.broken.len()));
                }
                Ok((chimera_graph(&spec).graph, label))
            }
            _ => Err("exactly one of --g-file or --chimera is required".into()),
        }
    }
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Independent restarts; the first success wins.
    #[arg(long, default_value_t = 10)]
    tries: u32,
    /// Non-improving sweeps tolerated before a restart gives up.
    #[arg(long, default_value_t = 10)]
    patience: u32,
    #[arg(long, default_value_t = 1000)]
    max_rounds: u32,
    /// Multisource A* root selection instead of per-model Dijkstra.
    #[arg(long)]
    localized: bool,
    /// Always take the minimum-cost root instead of sampling.
    #[arg(long)]
    no_root_sampling: bool,
    /// Sweep guest vertices in a fixed order.
    #[arg(long)]
    no_randomize_order: bool,
    #[arg(long, default_value_t = 1.0)]
    sampling_scale: f64,
}

impl ParamArgs {
    fn to_params(&self) -> EmbedParams {
        EmbedParams {
            seed: self.seed,
            tries: self.tries,
            patience: self.patience,
            max_rounds: self.max_rounds,
            localized: self.localized,
            randomize_order: !self.no_randomize_order,
            root_sampling: !self.no_root_sampling,
            sampling_scale: self.sampling_scale,
        }
    }
}

#[derive(Args)]
struct EmbedArgs {
    /// Guest graph edge-list file.
    #[arg(long, value_name = "FILE")]
    h_file: PathBuf,
    #[command(flatten)]
    host: HostArgs,
    #[command(flatten)]
    params: ParamArgs,
    /// Write the embedding file here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Report wall time as 0.000 so output is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    kind: GenerateKind,
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Chimera C(M,N,L), optionally with a broken-vertex mask.
    Chimera {
        m: u32,
        n: u32,
        l: u32,
        #[arg(long, value_name = "FILE")]
        mask: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Complete graph K_n.
    Complete {
        n: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Rows x cols grid graph.
    Grid {
        rows: usize,
        cols: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Random cubic (3-regular) graph on n vertices.
    Cubic {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Guest graph edge-list file.
    #[arg(long, value_name = "FILE")]
    h_file: PathBuf,
    #[command(flatten)]
    host: HostArgs,
    /// Embedding file to check.
    #[arg(long, value_name = "FILE")]
    embedding: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Guest family: complete, grid, or cubic.
    #[arg(long)]
    family: Family,
    /// Sizes as a comma list ("4,6,8") or inclusive range ("4..8").
    /// Vertex count for complete/cubic, side length for grid.
    #[arg(long)]
    sizes: String,
    #[command(flatten)]
    host: HostArgs,
    /// Embedder runs per instance.
    #[arg(long, default_value_t = 10)]
    trials: u32,
    /// Random guest instances per size (cubic only; others use 1).
    #[arg(long, default_value_t = 1)]
    instances: u32,
    #[command(flatten)]
    params: ParamArgs,
    /// Write CSV here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Report all timings as 0.000 so the CSV is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    parse_edge_list(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, String> {
    let bad = |_| format!("bad size list '{text}'");
    if let Some((a, b)) = text.split_once("..") {
        let a: usize = a.trim().parse().map_err(bad)?;
        let b: usize = b.trim().parse().map_err(bad)?;
        if a > b {
            return Err(format!("empty size range '{text}'"));
        }
        return Ok((a..=b).collect());
    }
    text.split(',')
        .map(|tok| tok.trim().parse().map_err(bad))
        .collect()
}

fn cmd_embed(args: &EmbedArgs) -> Result<ExitCode, String> {
    let h = read_graph(&args.h_file)?;
    let (g, g_name) = args.host.load()?;
    let params = args.params.to_params();
    let start = Instant::now();
    let outcome = match find_embedding(&g, &h, &params) {
        Ok(o) => o,
        Err(e @ (EmbedError::GuestTooLarge { .. } | EmbedError::EmptyGraph)) => {
            return Err(e.to_string())
        }
    };
    let wall = if args.no_timing {
        0.0
    } else {
        start.elapsed().as_secs_f64()
    };

    // never trust the embedder's own claim of success
    let verified = outcome.is_success()
        && verify_embedding(&g, &h, &outcome.chains().chains)
            .map(|v| v.is_empty())
            .unwrap_or(false);
    let mut file = EmbeddingFile::from_outcome(&outcome, &params, g.vertex_count(), wall);
    if !verified {
        file.status = Status::Decomposition;
    }
    write_output(&args.out, &file.render())?;
    if verified {
        eprintln!(
            "embedded {} guest vertices into {g_name} ({} rounds, try {}, max chain load {})",
            h.vertex_count(),
            outcome.stats.rounds,
            outcome.stats.tries_used,
            file.max_occupancy,
        );
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "no embedding found; best decomposition has max occupancy {} (total size {})",
            file.max_occupancy, file.total_chain_size,
        );
        Ok(ExitCode::from(2))
    }
}

fn cmd_generate(args: &GenerateArgs) -> Result<ExitCode, String> {
    let (text, out) = match &args.kind {
        GenerateKind::Chimera { m, n, l, mask, out } => {
            let mut spec = ChimeraSpec::unbroken(*m, *n, *l);
            if let Some(mask_path) = mask {
                let broken = parse_mask(&read_file(mask_path)?)
                    .map_err(|e| format!("{}: {e}", mask_path.display()))?;
                for v in &broken {
                    if *v as usize >= spec.total_vertices() {
                        return Err(format!("mask vertex {v} out of range for {}", spec.label()));
                    }
                }
                spec.broken = VertexSet::from_iter(broken);
            }
            let chimera = chimera_graph(&spec);
            let mut text = format!("# {}\n", spec.label());
            if !spec.broken.is_empty() {
                // record how compacted ids map back to pre-mask ids
                for (new, old) in chimera.new_to_old.iter().enumerate() {
                    text.push_str(&format!("# map {new} {old}\n"));
                }
            }
            text.push_str(&write_edge_list(&chimera.graph));
            (text, out.clone())
        }
        GenerateKind::Complete { n, out } => {
            let g = complete_graph(*n).map_err(|e| e.to_string())?;
            (write_edge_list(&g), out.clone())
        }
        GenerateKind::Grid { rows, cols, out } => {
            let g = grid_graph(*rows, *cols).map_err(|e| e.to_string())?;
            (write_edge_list(&g), out.clone())
        }
        GenerateKind::Cubic { n, seed, out } => {
            let g = random_cubic_graph(*n, *seed).map_err(|e| e.to_string())?;
            (write_edge_list(&g), out.clone())
        }
    };
    write_output(&out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let h = read_graph(&args.h_file)?;
    let (g, _) = args.host.load()?;
    let text = read_file(&args.embedding)?;
    let file =
        EmbeddingFile::parse(&text).map_err(|e| format!("{}: {e}", args.embedding.display()))?;
    if file.g_vertices != g.vertex_count() {
        return Err(format!(
            "embedding names a host with {} vertices, this host has {}",
            file.g_vertices,
            g.vertex_count()
        ));
    }
    let violations: Vec<Violation> =
        verify_embedding(&g, &h, &file.chains).map_err(|e| e.to_string())?;
    if violations.is_empty() {
        eprintln!("valid embedding");
        Ok(ExitCode::SUCCESS)
    } else {
        for v in &violations {
            println!("{v}");
        }
        Ok(ExitCode::from(2))
    }
}

fn cmd_bench(args: &BenchArgs) -> Result<ExitCode, String> {
    let (g, g_spec) = args.host.load()?;
    let cfg = BenchConfig {
        family: args.family,
        sizes: parse_sizes(&args.sizes)?,
        instances: if args.family == Family::Cubic {
            args.instances
        } else {
            1
        },
        trials: args.trials,
        params: args.params.to_params(),
        no_timing: args.no_timing,
    };
    let rows = run_bench(&g, &g_spec, &cfg).map_err(|e| e.to_string())?;
    write_output(&args.out, &rows_to_csv(&rows))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Embed(args) => cmd_embed(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
