//! Hardware-graph and benchmark-family generators: Chimera grids of
//! bicliques (with broken-vertex masks), complete graphs, grid graphs, and
//! random cubic graphs.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("random cubic graph needs even n >= 4, got {0}")]
    BadCubicOrder(usize),
    #[error("grid needs rows >= 1 and cols >= 1")]
    EmptyGrid,
    #[error("complete graph needs n >= 1")]
    EmptyComplete,
}

/// Chimera parameters: an `rows x cols` grid of `K_{shore,shore}` unit
/// cells, with optional broken (disabled) vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChimeraSpec {
    pub rows: u32,
    pub cols: u32,
    pub shore: u32,
    pub broken: VertexSet,
}

impl ChimeraSpec {
    pub fn unbroken(rows: u32, cols: u32, shore: u32) -> ChimeraSpec {
        ChimeraSpec {
            rows,
            cols,
            shore,
            broken: VertexSet::new(),
        }
    }

    /// Vertex count before masking.
    pub fn total_vertices(&self) -> usize {
        2 * self.rows as usize * self.cols as usize * self.shore as usize
    }

    /// Linear id of qubit `k` on the given shore of cell `(i, j)`.
    /// Shore 0 is "vertical" (couples to vertical neighbours across rows),
    /// shore 1 is "horizontal" (couples across columns).
    pub fn index(&self, i: u32, j: u32, shore: u32, k: u32) -> Vertex {
        ((i * self.cols + j) * 2 + shore) * self.shore + k
    }

    /// Short display form, e.g. `C(8,8,4)`.
    pub fn label(&self) -> String {
        if self.broken.is_empty() {
            format!("C({},{},{})", self.rows, self.cols, self.shore)
        } else {
            format!(
                "C({},{},{})-{}broken",
                self.rows,
                self.cols,
                self.shore,
                self.broken.len()
            )
        }
    }
}

/// A generated Chimera graph. Broken vertices are removed and the id space
/// compacted; the old/new maps relate pre-mask ids to graph ids.
#[derive(Debug, Clone)]
pub struct ChimeraGraph {
    pub graph: Graph,
    /// Pre-mask id -> compacted id (None for broken vertices).
    pub old_to_new: Vec<Option<Vertex>>,
    /// Compacted id -> pre-mask id.
    pub new_to_old: Vec<Vertex>,
}

pub fn chimera_graph(spec: &ChimeraSpec) -> ChimeraGraph {
    let total = spec.total_vertices();
    let mut old_to_new = vec![None; total];
    let mut new_to_old = Vec::with_capacity(total - spec.broken.len());
    for old in 0..total as Vertex {
        if !spec.broken.contains(old) {
            old_to_new[old as usize] = Some(new_to_old.len() as Vertex);
            new_to_old.push(old);
        }
    }

    let (m, n, l) = (spec.rows, spec.cols, spec.shore);
    let mut edges = Vec::new();
    let mut push = |a: Vertex, b: Vertex| {
        if let (Some(a), Some(b)) = (old_to_new[a as usize], old_to_new[b as usize]) {
            edges.push((a, b));
        }
    };
    for i in 0..m {
        for j in 0..n {
            // K_{L,L} between the two shores of the cell
            for a in 0..l {
                for b in 0..l {
                    push(spec.index(i, j, 0, a), spec.index(i, j, 1, b));
                }
            }
            // inter-cell couplers: vertical shore down the rows,
            // horizontal shore along the columns
            for k in 0..l {
                if i + 1 < m {
                    push(spec.index(i, j, 0, k), spec.index(i + 1, j, 0, k));
                }
                if j + 1 < n {
                    push(spec.index(i, j, 1, k), spec.index(i, j + 1, 1, k));
                }
            }
        }
    }
    let graph = Graph::build(new_to_old.len(), &edges).expect("chimera edges in range");
    ChimeraGraph {
        graph,
        old_to_new,
        new_to_old,
    }
}

pub fn complete_graph(n: usize) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(GeneratorError::EmptyComplete);
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(n, &edges).expect("complete edges in range"))
}

pub fn grid_graph(rows: usize, cols: usize) -> Result<Graph, GeneratorError> {
    if rows < 1 || cols < 1 {
        return Err(GeneratorError::EmptyGrid);
    }
    let at = |r: usize, c: usize| (r * cols + c) as Vertex;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((at(r, c), at(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((at(r, c), at(r + 1, c)));
            }
        }
    }
    Ok(Graph::build(rows * cols, &edges).expect("grid edges in range"))
}

/// Uniform-model 3-regular simple graph via the configuration (pairing)
/// model: pair up stubs at random and reject the whole pairing whenever it
/// produces a loop or parallel edge. Deterministic per seed.
pub fn random_cubic_graph(n: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if n < 4 || n % 2 != 0 {
        return Err(GeneratorError::BadCubicOrder(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<Vertex> = (0..n as Vertex).flat_map(|v| [v, v, v]).collect();
    loop {
        stubs.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(stubs.len() / 2);
        let mut ok = true;
        for pair in stubs.chunks_exact(2) {
            if pair[0] == pair[1] {
                ok = false;
                break;
            }
            edges.push((pair[0], pair[1]));
        }
        if !ok {
            continue;
        }
        let graph = Graph::build(n, &edges).expect("cubic edges in range");
        if graph.edge_count() == edges.len() {
            // no duplicates collapsed: the pairing was simple
            return Ok(graph);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_is_k44() {
        let g = chimera_graph(&ChimeraSpec::unbroken(1, 1, 4)).graph;
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 16);
        for v in 0..8 {
            assert_eq!(g.degree(v), 4);
        }
    }

    #[test]
    fn c8_counts_and_degrees() {
        let g = chimera_graph(&ChimeraSpec::unbroken(8, 8, 4)).graph;
        assert_eq!(g.vertex_count(), 512);
        assert_eq!(g.edge_count(), 1472);
        // independent per-vertex degree census
        let census: usize = (0..512).map(|v| g.degree(v)).sum();
        assert_eq!(census, 2 * 1472);
        assert_eq!((0..512).map(|v| g.degree(v)).max(), Some(6));
    }

    #[test]
    fn c16_vertex_count() {
        let g = chimera_graph(&ChimeraSpec::unbroken(16, 16, 4)).graph;
        assert_eq!(g.vertex_count(), 2048);
    }

    #[test]
    fn interior_and_corner_degrees() {
        let spec = ChimeraSpec::unbroken(3, 3, 4);
        let g = chimera_graph(&spec).graph;
        // interior cell (1,1): both shores see two inter-cell neighbours
        for shore in 0..2 {
            for k in 0..4 {
                assert_eq!(g.degree(spec.index(1, 1, shore, k)), 6);
            }
        }
        // corner cell (0,0): each shore has exactly one inter-cell neighbour
        for shore in 0..2 {
            for k in 0..4 {
                assert_eq!(g.degree(spec.index(0, 0, shore, k)), 5);
            }
        }
    }

    #[test]
    fn chimera_is_bipartite() {
        let g = chimera_graph(&ChimeraSpec::unbroken(4, 4, 4)).graph;
        // BFS 2-coloring
        let mut color = vec![u8::MAX; g.vertex_count()];
        for s in 0..g.vertex_count() as Vertex {
            if color[s as usize] != u8::MAX {
                continue;
            }
            color[s as usize] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if color[v as usize] == u8::MAX {
                        color[v as usize] = 1 - color[u as usize];
                        queue.push_back(v);
                    } else {
                        assert_ne!(color[v as usize], color[u as usize]);
                    }
                }
            }
        }
    }

    #[test]
    fn mask_removes_and_compacts() {
        let mut spec = ChimeraSpec::unbroken(2, 2, 4);
        spec.broken.insert(0);
        spec.broken.insert(9);
        let c = chimera_graph(&spec);
        assert_eq!(c.graph.vertex_count(), 30);
        assert_eq!(c.old_to_new[0], None);
        assert_eq!(c.old_to_new[9], None);
        assert_eq!(c.old_to_new[1], Some(0));
        assert_eq!(c.new_to_old.len(), 30);
        // map round-trips
        for (new_id, &old_id) in c.new_to_old.iter().enumerate() {
            assert_eq!(c.old_to_new[old_id as usize], Some(new_id as Vertex));
        }
    }

    #[test]
    fn complete_graph_k4() {
        let g = complete_graph(4).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!((0..4).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn grid_16x16_counts() {
        let g = grid_graph(16, 16).unwrap();
        assert_eq!(g.vertex_count(), 256);
        assert_eq!(g.edge_count(), 480); // 2 * 16 * 15
    }

    #[test]
    fn cubic_is_three_regular_and_simple() {
        let g = random_cubic_graph(100, 7).unwrap();
        assert_eq!(g.vertex_count(), 100);
        assert!((0..100).all(|v| g.degree(v) == 3));
        assert_eq!(g.edge_count(), 150);
    }

    #[test]
    fn cubic_rejects_odd_order() {
        assert_eq!(
            random_cubic_graph(7, 1),
            Err(GeneratorError::BadCubicOrder(7))
        );
    }

    #[test]
    fn cubic_is_deterministic_per_seed() {
        let a = random_cubic_graph(60, 42).unwrap();
        let b = random_cubic_graph(60, 42).unwrap();
        assert_eq!(a, b);
        let c = random_cubic_graph(60, 43).unwrap();
        assert_ne!(a, c);
    }
}
