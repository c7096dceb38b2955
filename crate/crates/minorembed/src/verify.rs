//! Independent validation of embeddings and G-decompositions.
//!
//! This module is the trust anchor for every other component: it shares
//! only the `Graph` type with the embedder and re-derives chain
//! connectivity with its own BFS.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("embedding has {found} chains but H has {expected} vertices")]
    WrongChainCount { expected: usize, found: usize },
    #[error("chain {h_vertex} contains G-vertex {g_vertex} out of range")]
    VertexOutOfRange { h_vertex: usize, g_vertex: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyChain {
        h_vertex: usize,
    },
    DisconnectedChain {
        h_vertex: usize,
        witness: Vec<Vertex>,
    },
    Overlap {
        h_a: usize,
        h_b: usize,
        g_vertex: Vertex,
    },
    MissingEdge {
        h_a: usize,
        h_b: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyChain { h_vertex } => {
                write!(f, "empty-chain: H-vertex {h_vertex} has no G-vertices")
            }
            Violation::DisconnectedChain { h_vertex, witness } => write!(
                f,
                "disconnected-chain: H-vertex {h_vertex} splits at G-vertices {witness:?}"
            ),
            Violation::Overlap { h_a, h_b, g_vertex } => write!(
                f,
                "overlap: H-vertices {h_a} and {h_b} both use G-vertex {g_vertex}"
            ),
            Violation::MissingEdge { h_a, h_b } => write!(
                f,
                "missing-edge: no G-edge between chains of adjacent H-vertices {h_a} and {h_b}"
            ),
        }
    }
}

fn check_shape(g: &Graph, h: &Graph, chains: &[VertexSet]) -> Result<(), VerifyError> {
    if chains.len() != h.vertex_count() {
        return Err(VerifyError::WrongChainCount {
            expected: h.vertex_count(),
            found: chains.len(),
        });
    }
    for (x, chain) in chains.iter().enumerate() {
        for v in chain.iter() {
            if v as usize >= g.vertex_count() {
                return Err(VerifyError::VertexOutOfRange {
                    h_vertex: x,
                    g_vertex: v,
                });
            }
        }
    }
    Ok(())
}

/// BFS inside the induced subgraph; returns the members missed from the
/// first one, empty if the chain is connected (or empty).
fn disconnected_witness(g: &Graph, chain: &VertexSet) -> Vec<Vertex> {
    if chain.len() <= 1 {
        return Vec::new();
    }
    let start = chain.as_slice()[0];
    let mut seen = VertexSet::singleton(start);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if chain.contains(v) && seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    chain.iter().filter(|&v| !seen.contains(v)).collect()
}

fn edge_between(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    a.iter()
        .any(|u| g.neighbors(u).iter().any(|&v| b.contains(v)))
}

fn check_conditions(
    g: &Graph,
    h: &Graph,
    chains: &[VertexSet],
    overlaps_permitted: bool,
) -> Result<Vec<Violation>, VerifyError> {
    check_shape(g, h, chains)?;
    let mut violations = Vec::new();

    // condition 1: nonempty, connected
    for (x, chain) in chains.iter().enumerate() {
        if chain.is_empty() {
            violations.push(Violation::EmptyChain { h_vertex: x });
            continue;
        }
        let witness = disconnected_witness(g, chain);
        if !witness.is_empty() {
            violations.push(Violation::DisconnectedChain {
                h_vertex: x,
                witness,
            });
        }
    }

    // condition 2: pairwise disjoint
    if !overlaps_permitted {
        let mut holder: Vec<Option<usize>> = vec![None; g.vertex_count()];
        for (x, chain) in chains.iter().enumerate() {
            for v in chain.iter() {
                match holder[v as usize] {
                    Some(other) => violations.push(Violation::Overlap {
                        h_a: other,
                        h_b: x,
                        g_vertex: v,
                    }),
                    None => holder[v as usize] = Some(x),
                }
            }
        }
    }

    // condition 3: every H-edge is covered by a G-edge between the chains
    for (x, y) in h.edges() {
        let (cx, cy) = (&chains[x as usize], &chains[y as usize]);
        if cx.is_empty() || cy.is_empty() {
            continue; // already reported as empty-chain
        }
        if !edge_between(g, cx, cy) {
            violations.push(Violation::MissingEdge {
                h_a: x as usize,
                h_b: y as usize,
            });
        }
    }
    Ok(violations)
}

/// Check all three minor-embedding conditions. An empty result certifies
/// that the chains witness H as a minor of G.
pub fn verify_embedding(
    g: &Graph,
    h: &Graph,
    chains: &[VertexSet],
) -> Result<Vec<Violation>, VerifyError> {
    check_conditions(g, h, chains, false)
}

/// Check only connectivity and edge coverage; overlaps are permitted.
pub fn verify_decomposition(
    g: &Graph,
    h: &Graph,
    chains: &[VertexSet],
) -> Result<Vec<Violation>, VerifyError> {
    check_conditions(g, h, chains, true)
}
