//! Embedding files ("format: 1" structured text) and broken-vertex masks.

use thiserror::Error;

use crate::embed::{EmbedOutcome, EmbedParams, EmbedResult, ImprovementMetric};
use crate::graph::{Vertex, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FileError {
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("unsupported format version {0}")]
    BadVersion(String),
    #[error("missing field '{0}'")]
    MissingField(&'static str),
    #[error("chain {0} names vertex {1}, but the host has {2} vertices")]
    ChainOutOfRange(usize, Vertex, usize),
    #[error("expected {expected} chain lines, found {found}")]
    ChainCountMismatch { expected: usize, found: usize },
}

/// Everything an embedding run writes to disk. Round-trips losslessly
/// through `render` / `parse` (wall-time is stored already rounded to
/// milliseconds, matching the written precision).
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingFile {
    pub status: Status,
    pub h_vertices: usize,
    pub g_vertices: usize,
    pub params: EmbedParams,
    pub rounds: u32,
    pub tries_used: u32,
    pub wall_time_s: f64,
    pub max_occupancy: u32,
    pub total_chain_size: usize,
    pub chains: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Embedding,
    Decomposition,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Embedding => "embedding",
            Status::Decomposition => "decomposition",
        }
    }
}

impl EmbeddingFile {
    /// Package an embedder outcome for writing. `wall_time_s` is taken
    /// separately so callers can zero it for reproducible output.
    pub fn from_outcome(
        outcome: &EmbedOutcome,
        params: &EmbedParams,
        g_vertices: usize,
        wall_time_s: f64,
    ) -> EmbeddingFile {
        let status = match outcome.result {
            EmbedResult::Embedded(_) => Status::Embedding,
            EmbedResult::Decomposition(_) => Status::Decomposition,
        };
        let chains = outcome.chains().chains.clone();
        EmbeddingFile {
            status,
            h_vertices: chains.len(),
            g_vertices,
            params: params.clone(),
            rounds: outcome.stats.rounds,
            tries_used: outcome.stats.tries_used,
            wall_time_s: (wall_time_s * 1000.0).round() / 1000.0,
            max_occupancy: outcome.stats.final_metric.max_occupancy,
            total_chain_size: outcome.stats.final_metric.total_chain_size,
            chains,
        }
    }

    pub fn metric(&self) -> ImprovementMetric {
        ImprovementMetric {
            max_occupancy: self.max_occupancy,
            total_chain_size: self.total_chain_size,
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let p = &self.params;
        out.push_str("format: 1\n");
        out.push_str(&format!("status: {}\n", self.status.as_str()));
        out.push_str(&format!("h_vertices: {}\n", self.h_vertices));
        out.push_str(&format!("g_vertices: {}\n", self.g_vertices));
        out.push_str(&format!("seed: {}\n", p.seed));
        out.push_str(&format!("tries: {}\n", p.tries));
        out.push_str(&format!("patience: {}\n", p.patience));
        out.push_str(&format!("max_rounds: {}\n", p.max_rounds));
        out.push_str(&format!("localized: {}\n", p.localized));
        out.push_str(&format!("randomize_order: {}\n", p.randomize_order));
        out.push_str(&format!("root_sampling: {}\n", p.root_sampling));
        out.push_str(&format!("sampling_scale: {}\n", p.sampling_scale));
        out.push_str(&format!("rounds: {}\n", self.rounds));
        out.push_str(&format!("tries_used: {}\n", self.tries_used));
        out.push_str(&format!("wall_time_s: {:.3}\n", self.wall_time_s));
        out.push_str(&format!("max_occupancy: {}\n", self.max_occupancy));
        out.push_str(&format!("total_chain_size: {}\n", self.total_chain_size));
        for (i, chain) in self.chains.iter().enumerate() {
            out.push_str(&format!("chain {i}:"));
            for v in chain.iter() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<EmbeddingFile, FileError> {
        let mut fields = std::collections::HashMap::new();
        let mut chains: Vec<(usize, VertexSet)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| FileError::Malformed(idx + 1, "expected 'key: value'".into()))?;
            let (key, value) = (key.trim(), value.trim());
            if let Some(num) = key.strip_prefix("chain ") {
                let i: usize = num
                    .parse()
                    .map_err(|_| FileError::Malformed(idx + 1, "bad chain index".into()))?;
                let mut set = VertexSet::new();
                for tok in value.split_whitespace() {
                    let v: Vertex = tok
                        .parse()
                        .map_err(|_| FileError::Malformed(idx + 1, "bad vertex id".into()))?;
                    set.insert(v);
                }
                chains.push((i, set));
            } else {
                fields.insert(key.to_string(), (idx + 1, value.to_string()));
            }
        }

        fn take<T: std::str::FromStr>(
            fields: &std::collections::HashMap<String, (usize, String)>,
            key: &'static str,
        ) -> Result<T, FileError> {
            let (line, value) = fields.get(key).ok_or(FileError::MissingField(key))?;
            value
                .parse()
                .map_err(|_| FileError::Malformed(*line, format!("bad value for '{key}'")))
        }

        let version: String = take(&fields, "format")?;
        if version != "1" {
            return Err(FileError::BadVersion(version));
        }
        let status = match take::<String>(&fields, "status")?.as_str() {
            "embedding" => Status::Embedding,
            "decomposition" => Status::Decomposition,
            other => {
                let line = fields["status"].0;
                return Err(FileError::Malformed(line, format!("bad status '{other}'")));
            }
        };
        let h_vertices: usize = take(&fields, "h_vertices")?;
        let g_vertices: usize = take(&fields, "g_vertices")?;
        let params = EmbedParams {
            seed: take(&fields, "seed")?,
            tries: take(&fields, "tries")?,
            patience: take(&fields, "patience")?,
            max_rounds: take(&fields, "max_rounds")?,
            localized: take(&fields, "localized")?,
            randomize_order: take(&fields, "randomize_order")?,
            root_sampling: take(&fields, "root_sampling")?,
            sampling_scale: take(&fields, "sampling_scale")?,
        };

        if chains.len() != h_vertices {
            return Err(FileError::ChainCountMismatch {
                expected: h_vertices,
                found: chains.len(),
            });
        }
        chains.sort_by_key(|(i, _)| *i);
        for (pos, (i, _)) in chains.iter().enumerate() {
            if *i != pos {
                return Err(FileError::ChainCountMismatch {
                    expected: h_vertices,
                    found: chains.len(),
                });
            }
        }
        let chains: Vec<VertexSet> = chains.into_iter().map(|(_, s)| s).collect();
        for (i, chain) in chains.iter().enumerate() {
            for v in chain.iter() {
                if (v as usize) >= g_vertices {
                    return Err(FileError::ChainOutOfRange(i, v, g_vertices));
                }
            }
        }

        Ok(EmbeddingFile {
            status,
            h_vertices,
            g_vertices,
            params,
            rounds: take(&fields, "rounds")?,
            tries_used: take(&fields, "tries_used")?,
            wall_time_s: take(&fields, "wall_time_s")?,
            max_occupancy: take(&fields, "max_occupancy")?,
            total_chain_size: take(&fields, "total_chain_size")?,
            chains,
        })
    }
}

/// Parse a broken-vertex mask: one vertex id per line, '#' comments and
/// blank lines ignored.
pub fn parse_mask(text: &str) -> Result<Vec<Vertex>, FileError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            let v: Vertex = tok
                .parse()
                .map_err(|_| FileError::Malformed(idx + 1, format!("bad vertex id '{tok}'")))?;
            out.push(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{find_embedding, EmbedParams};
    use crate::generators::complete_graph;
    use proptest::prelude::*;

    fn sample_file() -> EmbeddingFile {
        EmbeddingFile {
            status: Status::Embedding,
            h_vertices: 2,
            g_vertices: 5,
            params: EmbedParams {
                seed: 7,
                sampling_scale: 0.5,
                ..EmbedParams::default()
            },
            rounds: 3,
            tries_used: 1,
            wall_time_s: 0.042,
            max_occupancy: 1,
            total_chain_size: 3,
            chains: vec![VertexSet::from_iter([0, 1]), VertexSet::singleton(4)],
        }
    }

    #[test]
    fn render_parse_round_trip() {
        let f = sample_file();
        let text = f.render();
        assert!(text.starts_with("format: 1\n"));
        let back = EmbeddingFile::parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.render(), text);
    }

    #[test]
    fn real_outcome_round_trips() {
        let g = complete_graph(4).unwrap();
        let h = complete_graph(3).unwrap();
        let params = EmbedParams::default();
        let outcome = find_embedding(&g, &h, &params).unwrap();
        let f = EmbeddingFile::from_outcome(&outcome, &params, 4, 0.0);
        assert_eq!(f.status, Status::Embedding);
        assert_eq!(EmbeddingFile::parse(&f.render()).unwrap(), f);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let f = sample_file();
        let text = format!("# run artifact\n\n{}", f.render());
        assert_eq!(EmbeddingFile::parse(&text).unwrap(), f);
    }

    #[test]
    fn chain_order_in_file_does_not_matter() {
        let f = sample_file();
        let rendered = f.render();
        let mut lines: Vec<&str> = rendered.lines().collect();
        let n = lines.len();
        lines.swap(n - 1, n - 2);
        let text = lines.join("\n");
        assert_eq!(EmbeddingFile::parse(&text).unwrap(), f);
    }

    #[test]
    fn version_check() {
        let text = sample_file().render().replace("format: 1", "format: 9");
        assert_eq!(
            EmbeddingFile::parse(&text).unwrap_err(),
            FileError::BadVersion("9".into())
        );
    }

    #[test]
    fn missing_field_reported() {
        let text: String = sample_file()
            .render()
            .lines()
            .filter(|l| !l.starts_with("seed:"))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(
            EmbeddingFile::parse(&text).unwrap_err(),
            FileError::MissingField("seed")
        );
    }

    #[test]
    fn chain_vertex_out_of_range() {
        let mut f = sample_file();
        f.chains[1] = VertexSet::singleton(99);
        assert_eq!(
            EmbeddingFile::parse(&f.render()).unwrap_err(),
            FileError::ChainOutOfRange(1, 99, 5)
        );
    }

    #[test]
    fn chain_count_mismatch() {
        let text: String = sample_file()
            .render()
            .lines()
            .filter(|l| !l.starts_with("chain 1:"))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(
            EmbeddingFile::parse(&text).unwrap_err(),
            FileError::ChainCountMismatch {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn mask_parsing() {
        let text = "# broken qubits\n3\n17\n\n4 5\n";
        assert_eq!(parse_mask(text).unwrap(), vec![3, 17, 4, 5]);
        assert!(matches!(
            parse_mask("3\nx\n").unwrap_err(),
            FileError::Malformed(2, _)
        ));
    }

    proptest! {
        #[test]
        fn arbitrary_docs_round_trip(
            seed in any::<u64>(),
            tries in 1u32..100,
            patience in 1u32..100,
            max_rounds in 1u32..5000,
            localized in any::<bool>(),
            randomize_order in any::<bool>(),
            root_sampling in any::<bool>(),
            scale_milli in 1u32..10_000,
            rounds in 0u32..5000,
            wall_ms in 0u32..1_000_000,
            chain_sets in prop::collection::vec(prop::collection::btree_set(0u32..50, 1..6), 1..8),
        ) {
            let chains: Vec<VertexSet> = chain_sets
                .iter()
                .map(|s| VertexSet::from_iter(s.iter().copied()))
                .collect();
            let f = EmbeddingFile {
                status: if localized { Status::Decomposition } else { Status::Embedding },
                h_vertices: chains.len(),
                g_vertices: 50,
                params: EmbedParams {
                    seed,
                    tries,
                    patience,
                    max_rounds,
                    localized,
                    randomize_order,
                    root_sampling,
                    sampling_scale: f64::from(scale_milli) / 1000.0,
                },
                rounds,
                tries_used: tries.min(rounds.max(1)),
                wall_time_s: f64::from(wall_ms) / 1000.0,
                max_occupancy: 1,
                total_chain_size: chains.iter().map(|c| c.len()).sum(),
                chains,
            };
            prop_assert_eq!(EmbeddingFile::parse(&f.render()).unwrap(), f);
        }
    }
}
