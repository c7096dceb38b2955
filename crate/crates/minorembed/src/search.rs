//! Shortest-path machinery: vertex-weighted single-source Dijkstra seeded
//! from a vertex set, multisource Dijkstra, and multisource A*.
//!
//! Vertex weights become arc weights by weighting every arc with its head,
//! so the cost of a path is the sum of the weights of its vertices. Seeding
//! every set member at distance 0 stands in for a dummy super-source, which
//! also excludes the source set's own weights from all distances.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("source set is empty")]
    EmptySourceSet,
    #[error("no sources given")]
    NoSources,
}

/// Per-vertex non-negative weights `wt(g)`, all at least 1.
#[derive(Debug, Clone)]
pub struct VertexWeights {
    w: Vec<f64>,
}

impl VertexWeights {
    pub fn new(w: Vec<f64>) -> VertexWeights {
        assert!(
            w.iter().all(|x| x.is_finite() && *x >= 1.0),
            "vertex weights must be finite and >= 1"
        );
        VertexWeights { w }
    }

    pub fn uniform(n: usize) -> VertexWeights {
        VertexWeights { w: vec![1.0; n] }
    }

    pub fn get(&self, v: Vertex) -> f64 {
        self.w[v as usize]
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }
}

/// f64 with total order; never holds NaN.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
struct Cost(f64);

impl Eq for Cost {}
#[allow(clippy::derive_ord_xor_partial_ord)]
impl Ord for Cost {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.partial_cmp(other).expect("cost is never NaN")
    }
}

/// Best distances plus parent pointers for path reconstruction. Unreached
/// vertices keep `f64::INFINITY` and a `None` parent.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    pub dist: Vec<f64>,
    pub parent: Vec<Option<Vertex>>,
}

impl DistanceTable {
    fn new(n: usize) -> DistanceTable {
        DistanceTable {
            dist: vec![f64::INFINITY; n],
            parent: vec![None; n],
        }
    }

    /// Walk parent pointers from `v` down to a source (distance 0, no
    /// parent). Returns `[v, ..., source]`, or None if `v` was not reached.
    pub fn path_to_source(&self, v: Vertex) -> Option<Vec<Vertex>> {
        if !self.dist[v as usize].is_finite() {
            return None;
        }
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur as usize] {
            path.push(p);
            cur = p;
        }
        Some(path)
    }
}

/// Weighted SSSP from a set of sources. All set members start at distance
/// 0; settling a vertex `v` via `u` costs `d(u) + wt(v)`, so distances sum
/// the weights of path vertices excluding the sources and including the
/// endpoint. Ties break on (distance, vertex id).
pub fn weighted_sssp_from_set(
    g: &Graph,
    weights: &VertexWeights,
    sources: &VertexSet,
) -> Result<(DistanceTable, u64), SearchError> {
    if sources.is_empty() {
        return Err(SearchError::EmptySourceSet);
    }
    let n = g.vertex_count();
    let mut table = DistanceTable::new(n);
    let mut visited = vec![false; n];
    let mut heap = BinaryHeap::new();
    for s in sources.iter() {
        table.dist[s as usize] = 0.0;
        heap.push(Reverse((Cost(0.0), s)));
    }
    let mut pops = 0u64;
    while let Some(Reverse((Cost(d), u))) = heap.pop() {
        if visited[u as usize] {
            continue;
        }
        visited[u as usize] = true;
        pops += 1;
        for &v in g.neighbors(u) {
            let alt = d + weights.get(v);
            if alt < table.dist[v as usize] {
                table.dist[v as usize] = alt;
                table.parent[v as usize] = Some(u);
                heap.push(Reverse((Cost(alt), v)));
            }
        }
    }
    Ok((table, pops))
}

/// Result of a multisource search. `winner` is the first vertex reached by
/// all sources (None if no such vertex exists); `max_distance` is its
/// largest per-source distance. Tables cover only the explored region.
#[derive(Debug, Clone)]
pub struct MultisourceResult {
    pub winner: Option<Vertex>,
    pub max_distance: f64,
    pub tables: Vec<DistanceTable>,
    pub pops: u64,
}

pub fn multisource_dijkstra(
    g: &Graph,
    weights: &VertexWeights,
    sources: &[VertexSet],
) -> Result<MultisourceResult, SearchError> {
    multisource_dijkstra_filtered(g, weights, sources, |_| false)
}

/// Multisource Dijkstra with a winner filter: vertices for which `forbid`
/// returns true are expanded normally but never declared the winner.
pub fn multisource_dijkstra_filtered(
    g: &Graph,
    weights: &VertexWeights,
    sources: &[VertexSet],
    forbid: impl Fn(Vertex) -> bool,
) -> Result<MultisourceResult, SearchError> {
    if sources.is_empty() {
        return Err(SearchError::NoSources);
    }
    let (n, k) = (g.vertex_count(), sources.len());
    let mut tables = Vec::with_capacity(k);
    let mut heap = BinaryHeap::new();
    for (i, set) in sources.iter().enumerate() {
        if set.is_empty() {
            return Err(SearchError::EmptySourceSet);
        }
        let mut table = DistanceTable::new(n);
        for s in set.iter() {
            table.dist[s as usize] = 0.0;
            heap.push(Reverse((Cost(0.0), s, i)));
        }
        tables.push(table);
    }
    let mut visited = vec![false; n * k];
    let mut reached_count = vec![0u32; n];
    let mut pops = 0u64;
    let mut winner = None;
    let mut max_distance = f64::INFINITY;
    while let Some(Reverse((Cost(d), v, i))) = heap.pop() {
        if visited[v as usize * k + i] {
            continue;
        }
        visited[v as usize * k + i] = true;
        pops += 1;
        reached_count[v as usize] += 1;
        if reached_count[v as usize] == k as u32 && !forbid(v) {
            winner = Some(v);
            max_distance = tables
                .iter()
                .map(|t| t.dist[v as usize])
                .fold(0.0, f64::max);
            break;
        }
        for &u in g.neighbors(v) {
            let alt = d + weights.get(u);
            if alt < tables[i].dist[u as usize] {
                tables[i].dist[u as usize] = alt;
                tables[i].parent[u as usize] = Some(v);
                heap.push(Reverse((Cost(alt), u, i)));
            }
        }
    }
    Ok(MultisourceResult {
        winner,
        max_distance,
        tables,
        pops,
    })
}

pub fn multisource_astar(
    g: &Graph,
    weights: &VertexWeights,
    sources: &[VertexSet],
    heuristic: &[f64],
) -> Result<MultisourceResult, SearchError> {
    multisource_astar_filtered(g, weights, sources, heuristic, |_| false)
}

/// Multisource A*. Keeps a per-vertex (min_est, min_src) pair in the
/// priority queue; pops the global minimum estimate, marks the vertex
/// reached for that source, and stops at the first vertex reached by all
/// sources (subject to the winner filter). `heuristic` must be finite and
/// non-negative; with the zero heuristic the returned max-distance value
/// matches multisource Dijkstra's.
pub fn multisource_astar_filtered(
    g: &Graph,
    weights: &VertexWeights,
    sources: &[VertexSet],
    heuristic: &[f64],
    forbid: impl Fn(Vertex) -> bool,
) -> Result<MultisourceResult, SearchError> {
    if sources.is_empty() {
        return Err(SearchError::NoSources);
    }
    let (n, k) = (g.vertex_count(), sources.len());
    assert_eq!(heuristic.len(), n, "heuristic must cover every vertex");
    assert!(
        heuristic.iter().all(|h| h.is_finite() && *h >= 0.0),
        "heuristic values must be finite and non-negative"
    );

    let mut tables = Vec::with_capacity(k);
    // est(v,i) = d(v,i) + h(v), except sources which start at 0
    let mut est = vec![f64::INFINITY; n * k];
    let mut reached = vec![false; n * k];
    let mut min_est = vec![f64::INFINITY; n];
    let mut min_src = vec![usize::MAX; n];
    let mut heap = BinaryHeap::new();
    for (i, set) in sources.iter().enumerate() {
        if set.is_empty() {
            return Err(SearchError::EmptySourceSet);
        }
        let mut table = DistanceTable::new(n);
        for s in set.iter() {
            table.dist[s as usize] = 0.0;
            est[s as usize * k + i] = 0.0;
            if min_est[s as usize] > 0.0 || min_src[s as usize] == usize::MAX {
                min_est[s as usize] = 0.0;
                min_src[s as usize] = min_src[s as usize].min(i);
                heap.push(Reverse((Cost(0.0), s)));
            }
        }
        tables.push(table);
    }

    let mut reached_count = vec![0u32; n];
    let mut pops = 0u64;
    let mut winner = None;
    let mut max_distance = f64::INFINITY;
    while let Some(Reverse((Cost(e), cv))) = heap.pop() {
        if min_src[cv as usize] == usize::MAX || e != min_est[cv as usize] {
            continue; // stale entry
        }
        let cs = min_src[cv as usize];
        if reached[cv as usize * k + cs] {
            continue;
        }
        reached[cv as usize * k + cs] = true;
        pops += 1;
        reached_count[cv as usize] += 1;
        if reached_count[cv as usize] == k as u32 && !forbid(cv) {
            winner = Some(cv);
            max_distance = tables
                .iter()
                .map(|t| t.dist[cv as usize])
                .fold(0.0, f64::max);
            break;
        }

        // new best (source, estimate) for cv among unreached sources
        let mut best: Option<(f64, usize)> = None;
        for i in 0..k {
            if !reached[cv as usize * k + i] {
                let e = est[cv as usize * k + i];
                if e.is_finite() && best.map_or(true, |(be, _)| e < be) {
                    best = Some((e, i));
                }
            }
        }
        match best {
            Some((e, i)) => {
                min_est[cv as usize] = e;
                min_src[cv as usize] = i;
                heap.push(Reverse((Cost(e), cv)));
            }
            None => {
                min_est[cv as usize] = f64::INFINITY;
                min_src[cv as usize] = usize::MAX;
            }
        }

        let dcv = tables[cs].dist[cv as usize];
        for &v in g.neighbors(cv) {
            let alt = dcv + weights.get(v);
            if alt < tables[cs].dist[v as usize] {
                tables[cs].dist[v as usize] = alt;
                tables[cs].parent[v as usize] = Some(cv);
                let e = alt + heuristic[v as usize];
                est[v as usize * k + cs] = e;
                if e < min_est[v as usize] && !reached[v as usize * k + cs] {
                    min_est[v as usize] = e;
                    min_src[v as usize] = cs;
                    heap.push(Reverse((Cost(e), v)));
                }
            }
        }
    }
    Ok(MultisourceResult {
        winner,
        max_distance,
        tables,
        pops,
    })
}
