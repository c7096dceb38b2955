//! C ABI for the minorembed embedder. All functions are panic-safe: a
//! panic inside the library surfaces as `ME_STATUS_INTERNAL` instead of
//! unwinding across the FFI boundary. Handles are freed exactly once with
//! their matching `_free` function.

use std::panic::{catch_unwind, AssertUnwindSafe};

use minorembed::embed::{find_embedding, EmbedError, EmbedParams, EmbedResult};
use minorembed::generators::{chimera_graph, ChimeraSpec};
use minorembed::graph::{Graph, VertexSet};
use minorembed::verify::verify_embedding;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeStatus {
    MeStatusOk = 0,
    /// A required pointer argument was null.
    MeStatusNullPointer = 1,
    /// An argument was out of range (bad vertex id, zero-size graph, ...).
    MeStatusBadArgument = 2,
    /// The guest has more vertices than the host.
    MeStatusGuestTooLarge = 3,
    /// The heuristic finished without a valid embedding; the returned
    /// handle holds the best overlapping decomposition instead.
    MeStatusNoEmbedding = 4,
    /// The output buffer was too small.
    MeStatusBufferTooSmall = 5,
    /// Internal invariant failure (a bug; never expected).
    MeStatusInternal = 6,
}

use MeStatus::*;

/// Opaque edge-list builder for a host or guest graph.
pub struct MeGraph {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
}

/// Opaque result handle: one chain of host vertices per guest vertex.
pub struct MeEmbedding {
    valid: bool,
    chains: Vec<VertexSet>,
}

/// Embedder parameters; obtain defaults from `me_params_default`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct MeParams {
    pub seed: u64,
    pub tries: u32,
    pub patience: u32,
    pub max_rounds: u32,
    pub localized: bool,
    pub randomize_order: bool,
    pub root_sampling: bool,
    pub sampling_scale: f64,
}

impl From<MeParams> for EmbedParams {
    fn from(p: MeParams) -> EmbedParams {
        EmbedParams {
            seed: p.seed,
            tries: p.tries,
            patience: p.patience,
            max_rounds: p.max_rounds,
            localized: p.localized,
            randomize_order: p.randomize_order,
            root_sampling: p.root_sampling,
            sampling_scale: p.sampling_scale,
        }
    }
}

#[no_mangle]
pub extern "C" fn me_params_default() -> MeParams {
    let d = EmbedParams::default();
    MeParams {
        seed: d.seed,
        tries: d.tries,
        patience: d.patience,
        max_rounds: d.max_rounds,
        localized: d.localized,
        randomize_order: d.randomize_order,
        root_sampling: d.root_sampling,
        sampling_scale: d.sampling_scale,
    }
}

/// Create an empty graph with `vertex_count` vertices. Returns null when
/// `vertex_count` is zero. Free with `me_graph_free`.
#[no_mangle]
pub extern "C" fn me_graph_new(vertex_count: u32) -> *mut MeGraph {
    if vertex_count == 0 {
        return std::ptr::null_mut();
    }
    Box::into_raw(Box::new(MeGraph {
        vertex_count,
        edges: Vec::new(),
    }))
}

/// Create a Chimera C(m,n,l) host. Returns null when any dimension is zero.
#[no_mangle]
pub extern "C" fn me_graph_chimera(m: u32, n: u32, l: u32) -> *mut MeGraph {
    if m == 0 || n == 0 || l == 0 {
        return std::ptr::null_mut();
    }
    let chimera = chimera_graph(&ChimeraSpec::unbroken(m, n, l));
    let mut edges = Vec::with_capacity(chimera.graph.edge_count());
    for (u, v) in chimera.graph.edges() {
        edges.push((u, v));
    }
    Box::into_raw(Box::new(MeGraph {
        vertex_count: chimera.graph.vertex_count() as u32,
        edges,
    }))
}

/// Add an undirected edge. Self-loops and duplicates are tolerated and
/// collapsed when the graph is used.
#[no_mangle]
pub extern "C" fn me_graph_add_edge(graph: *mut MeGraph, u: u32, v: u32) -> MeStatus {
    let Some(graph) = (unsafe { graph.as_mut() }) else {
        return MeStatusNullPointer;
    };
    if u >= graph.vertex_count || v >= graph.vertex_count {
        return MeStatusBadArgument;
    }
    graph.edges.push((u, v));
    MeStatusOk
}

#[no_mangle]
pub extern "C" fn me_graph_vertex_count(graph: *const MeGraph) -> u32 {
    unsafe { graph.as_ref() }.map_or(0, |g| g.vertex_count)
}

/// # Safety
/// `graph` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn me_graph_free(graph: *mut MeGraph) {
    if !graph.is_null() {
        drop(unsafe { Box::from_raw(graph) });
    }
}

fn build(g: &MeGraph) -> Result<Graph, MeStatus> {
    Graph::build(g.vertex_count as usize, &g.edges).map_err(|_| MeStatusBadArgument)
}

/// Embed guest `h` into host `g`. On `ME_STATUS_OK` the embedding in
/// `*out` is verifier-checked; on `ME_STATUS_NO_EMBEDDING` it holds the
/// best decomposition reached (chains may overlap). Free with
/// `me_embedding_free`.
#[no_mangle]
pub extern "C" fn me_embed(
    g: *const MeGraph,
    h: *const MeGraph,
    params: *const MeParams,
    out: *mut *mut MeEmbedding,
) -> MeStatus {
    let (Some(g), Some(h), Some(params)) =
        (unsafe { g.as_ref() }, unsafe { h.as_ref() }, unsafe { params.as_ref() })
    else {
        return MeStatusNullPointer;
    };
    if out.is_null() {
        return MeStatusNullPointer;
    }
    if params.tries == 0 || params.patience == 0 || params.max_rounds == 0 {
        return MeStatusBadArgument;
    }
    if !(params.sampling_scale.is_finite() && params.sampling_scale > 0.0) {
        return MeStatusBadArgument;
    }
    let result = catch_unwind(AssertUnwindSafe(|| -> Result<MeEmbedding, MeStatus> {
        let g = build(g)?;
        let h = build(h)?;
        let outcome = find_embedding(&g, &h, &(*params).into()).map_err(|e| match e {
            EmbedError::GuestTooLarge { .. } => MeStatusGuestTooLarge,
            EmbedError::EmptyGraph => MeStatusBadArgument,
        })?;
        let valid = match &outcome.result {
            EmbedResult::Embedded(e) => verify_embedding(&g, &h, &e.chains)
                .map(|v| v.is_empty())
                .unwrap_or(false),
            EmbedResult::Decomposition(_) => false,
        };
        Ok(MeEmbedding {
            valid,
            chains: outcome.chains().chains.clone(),
        })
    }));
    match result {
        Ok(Ok(embedding)) => {
            let valid = embedding.valid;
            unsafe { *out = Box::into_raw(Box::new(embedding)) };
            if valid {
                MeStatusOk
            } else {
                MeStatusNoEmbedding
            }
        }
        Ok(Err(status)) => status,
        Err(_) => MeStatusInternal,
    }
}

/// 1 when the handle holds a verifier-checked embedding, 0 for a
/// decomposition.
#[no_mangle]
pub extern "C" fn me_embedding_is_valid(embedding: *const MeEmbedding) -> i32 {
    unsafe { embedding.as_ref() }.map_or(0, |e| i32::from(e.valid))
}

/// Number of chains (= guest vertex count).
#[no_mangle]
pub extern "C" fn me_embedding_chain_count(embedding: *const MeEmbedding) -> u32 {
    unsafe { embedding.as_ref() }.map_or(0, |e| e.chains.len() as u32)
}

/// Length of chain `index`, or 0 when the handle or index is invalid.
#[no_mangle]
pub extern "C" fn me_embedding_chain_len(embedding: *const MeEmbedding, index: u32) -> u32 {
    unsafe { embedding.as_ref() }
        .and_then(|e| e.chains.get(index as usize))
        .map_or(0, |c| c.len() as u32)
}

/// Copy chain `index` into `buffer` (capacity `capacity` vertex ids),
/// sorted ascending. `written` receives the chain length.
#[no_mangle]
pub extern "C" fn me_embedding_chain_copy(
    embedding: *const MeEmbedding,
    index: u32,
    buffer: *mut u32,
    capacity: usize,
    written: *mut usize,
) -> MeStatus {
    let Some(e) = (unsafe { embedding.as_ref() }) else {
        return MeStatusNullPointer;
    };
    let Some(chain) = e.chains.get(index as usize) else {
        return MeStatusBadArgument;
    };
    if written.is_null() {
        return MeStatusNullPointer;
    }
    unsafe { *written = chain.len() };
    if chain.len() > capacity {
        return MeStatusBufferTooSmall;
    }
    if buffer.is_null() && !chain.is_empty() {
        return MeStatusNullPointer;
    }
    for (i, v) in chain.iter().enumerate() {
        unsafe { *buffer.add(i) = v };
    }
    MeStatusOk
}

/// # Safety
/// `embedding` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn me_embedding_free(embedding: *mut MeEmbedding) {
    if !embedding.is_null() {
        drop(unsafe { Box::from_raw(embedding) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: u32) -> *mut MeGraph {
        let g = me_graph_new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                assert_eq!(me_graph_add_edge(g, u, v), MeStatusOk);
            }
        }
        g
    }

    #[test]
    fn k3_into_chimera_round_trip() {
        let g = me_graph_chimera(2, 2, 4);
        let h = complete(3);
        let params = me_params_default();
        let mut out: *mut MeEmbedding = std::ptr::null_mut();
        let status = me_embed(g, h, &params, &mut out);
        assert_eq!(status, MeStatusOk);
        assert_eq!(me_embedding_is_valid(out), 1);
        assert_eq!(me_embedding_chain_count(out), 3);
        let mut buf = [0u32; 64];
        let mut written = 0usize;
        for i in 0..3 {
            let len = me_embedding_chain_len(out, i);
            assert!(len >= 1);
            assert_eq!(
                me_embedding_chain_copy(out, i, buf.as_mut_ptr(), buf.len(), &mut written),
                MeStatusOk
            );
            assert_eq!(written as u32, len);
            assert!(buf[..written].iter().all(|&v| v < me_graph_vertex_count(g)));
        }
        unsafe {
            me_embedding_free(out);
            me_graph_free(g);
            me_graph_free(h);
        }
    }

    #[test]
    fn too_large_guest_reports_status() {
        let g = complete(3);
        let h = complete(4);
        let params = me_params_default();
        let mut out: *mut MeEmbedding = std::ptr::null_mut();
        assert_eq!(me_embed(g, h, &params, &mut out), MeStatusGuestTooLarge);
        assert!(out.is_null());
        unsafe {
            me_graph_free(g);
            me_graph_free(h);
        }
    }

    #[test]
    fn null_and_range_checks() {
        assert!(me_graph_new(0).is_null());
        assert!(me_graph_chimera(0, 1, 1).is_null());
        let g = me_graph_new(2);
        assert_eq!(me_graph_add_edge(g, 0, 5), MeStatusBadArgument);
        assert_eq!(
            me_graph_add_edge(std::ptr::null_mut(), 0, 1),
            MeStatusNullPointer
        );
        let params = me_params_default();
        let mut out: *mut MeEmbedding = std::ptr::null_mut();
        assert_eq!(
            me_embed(std::ptr::null(), g, &params, &mut out),
            MeStatusNullPointer
        );
        let mut bad = params;
        bad.tries = 0;
        assert_eq!(me_embed(g, g, &bad, &mut out), MeStatusBadArgument);
        unsafe { me_graph_free(g) };
    }

    #[test]
    fn impossible_embedding_yields_decomposition() {
        // K5 cannot be a minor of a 4-cycle host with 5 vertices
        let g = me_graph_new(5);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            me_graph_add_edge(g, u, v);
        }
        let h = complete(5);
        let mut params = me_params_default();
        params.tries = 2;
        params.max_rounds = 20;
        let mut out: *mut MeEmbedding = std::ptr::null_mut();
        assert_eq!(me_embed(g, h, &params, &mut out), MeStatusNoEmbedding);
        assert_eq!(me_embedding_is_valid(out), 0);
        assert_eq!(me_embedding_chain_count(out), 5);
        unsafe {
            me_embedding_free(out);
            me_graph_free(g);
            me_graph_free(h);
        }
    }

    #[test]
    fn buffer_too_small_reports_needed_length() {
        let g = me_graph_chimera(2, 2, 4);
        let h = complete(5);
        let params = me_params_default();
        let mut out: *mut MeEmbedding = std::ptr::null_mut();
        assert_eq!(me_embed(g, h, &params, &mut out), MeStatusOk);
        let longest = (0..5)
            .max_by_key(|&i| me_embedding_chain_len(out, i))
            .unwrap();
        let len = me_embedding_chain_len(out, longest);
        if len > 1 {
            let mut buf = [0u32; 1];
            let mut written = 0usize;
            assert_eq!(
                me_embedding_chain_copy(out, longest, buf.as_mut_ptr(), 1, &mut written),
                MeStatusBufferTooSmall
            );
            assert_eq!(written as u32, len);
        }
        unsafe {
            me_embedding_free(out);
            me_graph_free(g);
            me_graph_free(h);
        }
    }
}
