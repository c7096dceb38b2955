//! Immutable undirected simple graphs in adjacency-list form.
//!
//! Vertices are dense integer ids `0..vertex_count`; external labels, if any,
//! are mapped at the I/O layer. The same type backs both the host graph `G`
//! and the guest graph `H`.

use std::fmt::Write as _;

use thiserror::Error;

pub type Vertex = u32;

/// Sentinel for "no finite hop distance" in BFS tables.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {0} out of range (vertex count {1})")]
    EndpointOutOfRange(Vertex, usize),
    #[error("source vertex {0} out of range (vertex count {1})")]
    SourceOutOfRange(Vertex, usize),
    #[error("graph is disconnected; diameter is undefined")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("missing 'p <vertices> <edges>' header line")]
    MissingHeader,
    #[error("header says {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Count of input edges dropped while canonicalizing to a simple graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DroppedEdges {
    pub self_loops: usize,
    pub duplicates: usize,
}

/// Immutable undirected simple graph. Adjacency lists are sorted, symmetric,
/// self-loop-free and duplicate-free by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn build(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        Self::build_counted(vertex_count, edges).map(|(g, _)| g)
    }

    /// Like [`Graph::build`] but also reports how many self-loops and
    /// parallel edges were collapsed.
    pub fn build_counted(
        vertex_count: usize,
        edges: &[(Vertex, Vertex)],
    ) -> Result<(Graph, DroppedEdges), GraphError> {
        let mut dropped = DroppedEdges::default();
        let mut canon: Vec<(Vertex, Vertex)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u as usize >= vertex_count {
                return Err(GraphError::EndpointOutOfRange(u, vertex_count));
            }
            if v as usize >= vertex_count {
                return Err(GraphError::EndpointOutOfRange(v, vertex_count));
            }
            if u == v {
                dropped.self_loops += 1;
                continue;
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        let before = canon.len();
        canon.dedup();
        dropped.duplicates = before - canon.len();

        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in &canon {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok((
            Graph {
                adj,
                edge_count: canon.len(),
            },
            dropped,
        ))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as Vertex) < v {
                    out.push((u as Vertex, v));
                }
            }
        }
        out
    }

    /// Hop distances from `source`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<u32>, GraphError> {
        if source as usize >= self.vertex_count() {
            return Err(GraphError::SourceOutOfRange(source, self.vertex_count()));
        }
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        dist[source as usize] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &v in self.neighbors(u) {
                if dist[v as usize] == UNREACHABLE {
                    dist[v as usize] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// Maximum hop distance over all vertex pairs. Defined as 1 for a
    /// single-vertex graph so that weight bases are never zero.
    pub fn diameter(&self) -> Result<u32, GraphError> {
        if self.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        let mut best = 0;
        for s in 0..self.vertex_count() as Vertex {
            let dist = self.bfs_distances(s)?;
            for &d in &dist {
                if d == UNREACHABLE {
                    return Err(GraphError::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best.max(1))
    }

    /// Partition of the vertices into connected components.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.vertex_count()];
        let mut parts = Vec::new();
        for s in 0..self.vertex_count() as Vertex {
            if seen[s as usize] {
                continue;
            }
            seen[s as usize] = true;
            let mut members = vec![s];
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            parts.push(VertexSet::from_vec(members));
        }
        parts
    }
}

/// A set of vertex ids of one graph, stored sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<Vertex>,
}

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet::default()
    }

    pub fn singleton(v: Vertex) -> VertexSet {
        VertexSet { members: vec![v] }
    }

    pub fn from_vec(mut members: Vec<Vertex>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.members.binary_search(&v) {
            Ok(_) => false,
            Err(i) => {
                self.members.insert(i, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.members.binary_search(&v) {
            Ok(i) => {
                self.members.remove(i);
                true
            }
            Err(_) => false,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn clear(&mut self) {
        self.members.clear();
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.members
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        // both sorted; merge scan
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

/// Canonical edge-list text form: `p <vertex_count> <edge_count>` header,
/// then one `u v` line per edge with `u < v`, sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parse the edge-list format. `#` starts a comment; blank lines are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        if header.is_none() {
            if fields.next() != Some("p") {
                return Err(ParseError::MissingHeader);
            }
            let n = parse_field(fields.next(), lineno)?;
            let m = parse_field(fields.next(), lineno)?;
            if fields.next().is_some() {
                return Err(ParseError::Malformed(
                    lineno + 1,
                    "trailing tokens after header".into(),
                ));
            }
            header = Some((n, m));
        } else {
            let u: Vertex = parse_field(fields.next(), lineno)? as Vertex;
            let v: Vertex = parse_field(fields.next(), lineno)? as Vertex;
            if fields.next().is_some() {
                return Err(ParseError::Malformed(
                    lineno + 1,
                    "trailing tokens after edge".into(),
                ));
            }
            edges.push((u, v));
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::build(n, &edges)?)
}

fn parse_field(field: Option<&str>, lineno: usize) -> Result<usize, ParseError> {
    field
        .ok_or_else(|| ParseError::Malformed(lineno + 1, "missing field".into()))?
        .parse()
        .map_err(|e| ParseError::Malformed(lineno + 1, format!("bad integer: {e}")))
}
