//! The minor-embedding heuristic: grow a vertex-model for each guest vertex
//! from exponentially-weighted shortest paths to its neighbours' models,
//! then sweep until no host vertex carries more than one model.
//!
//! Two cost-evaluation strategies are available: the global mode runs one
//! weighted Dijkstra per neighbour model and picks the root minimizing the
//! summed costs; the localized mode finds the root with a single multisource
//! A* search aimed at the model's previous root.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet, UNREACHABLE};
use crate::search::{
    multisource_astar_filtered, weighted_sssp_from_set, DistanceTable, VertexWeights,
};
use crate::verify;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("H has {h} vertices but G has only {g}")]
    GuestTooLarge { h: usize, g: usize },
    #[error("both graphs must have at least one vertex")]
    EmptyGraph,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmbedParams {
    pub seed: u64,
    /// Consecutive non-improving sweeps tolerated before a restart aborts.
    pub patience: u32,
    pub max_rounds: u32,
    /// Independent restarts; the first success wins.
    pub tries: u32,
    /// Use multisource A* root selection instead of per-model Dijkstra.
    pub localized: bool,
    pub randomize_order: bool,
    /// Sample roots with probability proportional to exp(-cost) instead of
    /// taking the argmin (global mode only).
    pub root_sampling: bool,
    pub sampling_scale: f64,
}

impl Default for EmbedParams {
    fn default() -> Self {
        EmbedParams {
            seed: 0,
            patience: 10,
            max_rounds: 1000,
            tries: 10,
            localized: false,
            randomize_order: true,
            root_sampling: true,
            sampling_scale: 1.0,
        }
    }
}

/// Lexicographic improvement metric: first the largest number of models at
/// any host vertex, then the total model size. Smaller is better.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ImprovementMetric {
    pub max_occupancy: u32,
    pub total_chain_size: usize,
}

/// One chain (vertex-model) per H-vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub chains: Vec<VertexSet>,
}

#[derive(Debug, Clone)]
pub struct EmbedStats {
    pub rounds: u32,
    pub tries_used: u32,
    /// Total priority-queue pops across all shortest-path searches.
    pub pops: u64,
    pub wall_time: Duration,
    pub final_metric: ImprovementMetric,
}

#[derive(Debug, Clone)]
pub enum EmbedResult {
    /// Verifier-checked minor embedding.
    Embedded(Embedding),
    /// Best overlapping state reached: a G-decomposition of H.
    Decomposition(Embedding),
}

#[derive(Debug, Clone)]
pub struct EmbedOutcome {
    pub result: EmbedResult,
    pub stats: EmbedStats,
}

impl EmbedOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self.result, EmbedResult::Embedded(_))
    }

    pub fn chains(&self) -> &Embedding {
        match &self.result {
            EmbedResult::Embedded(e) | EmbedResult::Decomposition(e) => e,
        }
    }
}

/// Weight base: the diameter of G, or for disconnected hosts the largest
/// finite hop distance. At least 2 so that occupancy always raises the
/// weight; a base of 1 (dense hosts like K3) would leave the heuristic
/// blind to overlaps.
pub fn weight_base(g: &Graph) -> f64 {
    let mut best = 2u32;
    for s in 0..g.vertex_count() as Vertex {
        let dist = g.bfs_distances(s).expect("source in range");
        for d in dist {
            if d != UNREACHABLE {
                best = best.max(d);
            }
        }
    }
    best as f64
}

/// wt(g) = D^(occupancy excluding the excluded chain's membership), with
/// the exponent capped so the weight stays well inside f64 range while
/// preserving ordering.
pub fn compute_weights(
    occupancy: &[u32],
    excluded_chain: Option<&VertexSet>,
    diameter: f64,
) -> VertexWeights {
    assert!(diameter >= 1.0);
    let k_cap = if diameter > 1.0 {
        (500.0 / diameter.log2()).floor() as u32
    } else {
        0
    };
    let w = occupancy
        .iter()
        .enumerate()
        .map(|(v, &occ)| {
            let excl = excluded_chain.map_or(false, |c| c.contains(v as Vertex)) as u32;
            let k = (occ - excl).min(k_cap);
            diameter.powi(k as i32)
        })
        .collect();
    VertexWeights::new(w)
}

/// Pick a root from per-vertex total costs: argmin with (cost, id)
/// tie-break, or Boltzmann sampling with probability proportional to
/// exp(-(cost - min)/scale). Returns None when every cost is infinite.
pub fn sample_root(
    costs: &[f64],
    rng: &mut ChaCha8Rng,
    sampling: bool,
    scale: f64,
) -> Option<Vertex> {
    let min_cost = costs.iter().copied().filter(|c| c.is_finite()).fold(
        f64::INFINITY,
        f64::min,
    );
    if !min_cost.is_finite() {
        return None;
    }
    if !sampling {
        return costs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_finite())
            .min_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(v, _)| v as Vertex);
    }
    let probs: Vec<f64> = costs
        .iter()
        .map(|&c| {
            if c.is_finite() {
                (-(c - min_cost) / scale).exp()
            } else {
                0.0
            }
        })
        .collect();
    let total: f64 = probs.iter().sum();
    let mut draw = rng.random::<f64>() * total;
    for (v, &p) in probs.iter().enumerate() {
        draw -= p;
        if draw <= 0.0 && p > 0.0 {
            return Some(v as Vertex);
        }
    }
    // numeric tail: fall back to the last vertex with positive mass
    probs
        .iter()
        .rposition(|&p| p > 0.0)
        .map(|v| v as Vertex)
}

/// Outcome of rebuilding one vertex-model: the new chain plus vertices the
/// path-assignment rule hands to neighbouring models.
#[derive(Debug, Clone)]
pub struct VertexModelOutcome {
    pub root: Vertex,
    pub new_chain: VertexSet,
    /// (H-neighbour, vertices appended to that neighbour's chain)
    pub neighbor_additions: Vec<(usize, Vec<Vertex>)>,
}

struct Restart<'a> {
    g: &'a Graph,
    h: &'a Graph,
    params: &'a EmbedParams,
    diameter: f64,
    chains: Vec<VertexSet>,
    occupancy: Vec<u32>,
    previous_root: Vec<Option<Vertex>>,
    rng: ChaCha8Rng,
    pops: u64,
}

impl<'a> Restart<'a> {
    fn new(g: &'a Graph, h: &'a Graph, params: &'a EmbedParams, diameter: f64, try_index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        rng.set_stream(try_index);
        Restart {
            g,
            h,
            params,
            diameter,
            chains: vec![VertexSet::new(); h.vertex_count()],
            occupancy: vec![0; g.vertex_count()],
            previous_root: vec![None; h.vertex_count()],
            rng,
            pops: 0,
        }
    }

    fn tear_out(&mut self, target: usize) {
        for v in self.chains[target].iter() {
            self.occupancy[v as usize] -= 1;
        }
        self.chains[target].clear();
    }

    fn apply(&mut self, target: usize, outcome: VertexModelOutcome) {
        for v in outcome.new_chain.iter() {
            self.occupancy[v as usize] += 1;
        }
        self.chains[target] = outcome.new_chain;
        for (j, adds) in outcome.neighbor_additions {
            for v in adds {
                if self.chains[j].insert(v) {
                    self.occupancy[v as usize] += 1;
                }
            }
        }
        self.previous_root[target] = Some(outcome.root);
    }

    /// Rebuild the model of `target`. Returns false when no vertex has
    /// finite total cost (the chain is left empty for this round).
    fn rebuild(&mut self, target: usize) -> bool {
        self.tear_out(target);
        let neighbors: Vec<usize> = self
            .h
            .neighbors(target as Vertex)
            .iter()
            .map(|&x| x as usize)
            .collect();
        let nonempty: Vec<usize> = neighbors
            .iter()
            .copied()
            .filter(|&j| !self.chains[j].is_empty())
            .collect();

        if nonempty.is_empty() {
            let root = self.rng.random_range(0..self.g.vertex_count() as Vertex);
            self.apply(
                target,
                VertexModelOutcome {
                    root,
                    new_chain: VertexSet::singleton(root),
                    neighbor_additions: Vec::new(),
                },
            );
            return true;
        }

        let weights = compute_weights(&self.occupancy, None, self.diameter);
        let outcome = if self.params.localized {
            self.localized_model(target, &nonempty, &weights)
        } else {
            self.global_model(&nonempty, &weights)
        };
        match outcome {
            Some(o) => {
                self.apply(target, o);
                true
            }
            None => false,
        }
    }

    fn global_model(
        &mut self,
        nonempty: &[usize],
        weights: &VertexWeights,
    ) -> Option<VertexModelOutcome> {
        let n = self.g.vertex_count();
        let mut tables = Vec::with_capacity(nonempty.len());
        for &j in nonempty {
            let (table, pops) =
                weighted_sssp_from_set(self.g, weights, &self.chains[j]).expect("chain nonempty");
            self.pops += pops;
            tables.push(table);
        }
        let mut total = vec![0.0f64; n];
        for (&j, table) in nonempty.iter().zip(&tables) {
            for v in 0..n {
                let c = if self.chains[j].contains(v as Vertex) {
                    weights.get(v as Vertex)
                } else {
                    table.dist[v]
                };
                total[v] += c;
            }
        }
        let root = sample_root(
            &total,
            &mut self.rng,
            self.params.root_sampling,
            self.params.sampling_scale,
        )?;
        self.assemble(root, nonempty, &tables)
    }

    fn localized_model(
        &mut self,
        target: usize,
        nonempty: &[usize],
        weights: &VertexWeights,
    ) -> Option<VertexModelOutcome> {
        let n = self.g.vertex_count();
        let heuristic = match self.previous_root[target] {
            Some(r) => self
                .g
                .bfs_distances(r)
                .expect("root in range")
                .into_iter()
                .map(|d| if d == UNREACHABLE { 0.0 } else { d as f64 })
                .collect(),
            None => vec![0.0; n],
        };
        let sources: Vec<VertexSet> = nonempty.iter().map(|&j| self.chains[j].clone()).collect();
        // a root inside a neighbour model would stall the refinement loop,
        // so members never win the multisource search
        let result = multisource_astar_filtered(self.g, weights, &sources, &heuristic, |v| {
            nonempty.iter().any(|&j| self.chains[j].contains(v))
        })
        .expect("sources nonempty");
        self.pops += result.pops;
        let root = result.winner?;
        self.assemble(root, nonempty, &result.tables)
    }

    /// Reconstruct one shortest path from the root to each neighbour model
    /// and split the path vertices between the new chain and the
    /// neighbours' chains: a vertex on two or more paths joins the new
    /// chain, a vertex on exactly one path joins that neighbour's chain.
    fn assemble(
        &mut self,
        root: Vertex,
        nonempty: &[usize],
        tables: &[DistanceTable],
    ) -> Option<VertexModelOutcome> {
        let mut interiors: Vec<Vec<Vertex>> = Vec::with_capacity(nonempty.len());
        for (&j, table) in nonempty.iter().zip(tables) {
            let path = if self.chains[j].contains(root) {
                vec![root]
            } else {
                table.path_to_source(root)?
            };
            // drop the root and the chain-member endpoint
            let interior = if path.len() >= 2 {
                path[1..path.len() - 1].to_vec()
            } else {
                Vec::new()
            };
            interiors.push(interior);
        }

        let mut count = vec![0u32; self.g.vertex_count()];
        for interior in &interiors {
            for &v in interior {
                count[v as usize] += 1;
            }
        }
        let mut new_chain = VertexSet::singleton(root);
        let mut additions: Vec<(usize, Vec<Vertex>)> = Vec::new();
        for (&j, interior) in nonempty.iter().zip(&interiors) {
            let mut adds = Vec::new();
            for &v in interior {
                if count[v as usize] >= 2 {
                    new_chain.insert(v);
                } else {
                    adds.push(v);
                }
            }
            if !adds.is_empty() {
                additions.push((j, adds));
            }
        }

        if self.assignment_valid(&new_chain, nonempty, &additions) {
            return Some(VertexModelOutcome {
                root,
                new_chain,
                neighbor_additions: additions,
            });
        }
        // Shared path vertices can, under distance ties, be reached by
        // prefixes that diverged; then the split above may disconnect a
        // chain. Fall back to the full union of paths as the new chain.
        let mut union_chain = VertexSet::singleton(root);
        for interior in &interiors {
            for &v in interior {
                union_chain.insert(v);
            }
        }
        Some(VertexModelOutcome {
            root,
            new_chain: union_chain,
            neighbor_additions: Vec::new(),
        })
    }

    /// Check that the proposed split keeps the new chain connected, keeps
    /// each extended neighbour chain connected, and leaves an edge between
    /// the new chain and every neighbour model.
    fn assignment_valid(
        &self,
        new_chain: &VertexSet,
        nonempty: &[usize],
        additions: &[(usize, Vec<Vertex>)],
    ) -> bool {
        if !self.is_connected_set(new_chain) {
            return false;
        }
        for &j in nonempty {
            let mut extended = self.chains[j].clone();
            if let Some((_, adds)) = additions.iter().find(|(k, _)| *k == j) {
                for &v in adds {
                    extended.insert(v);
                }
            }
            if !self.is_connected_set(&extended) {
                return false;
            }
            // an overlap (root inside the neighbour model) stands in for
            // the edge mid-run; the final verifier still demands disjointness
            let has_edge = new_chain
                .iter()
                .any(|u| self.g.neighbors(u).iter().any(|&v| extended.contains(v)));
            if !has_edge && !new_chain.intersects(&extended) {
                return false;
            }
        }
        true
    }

    fn is_connected_set(&self, set: &VertexSet) -> bool {
        if set.len() <= 1 {
            return true;
        }
        let start = set.as_slice()[0];
        let mut seen = VertexSet::singleton(start);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in self.g.neighbors(u) {
                if set.contains(v) && seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen.len() == set.len()
    }

    fn metric(&self) -> ImprovementMetric {
        ImprovementMetric {
            max_occupancy: self.occupancy.iter().copied().max().unwrap_or(0),
            total_chain_size: self.chains.iter().map(|c| c.len()).sum(),
        }
    }

    #[cfg(debug_assertions)]
    fn audit_occupancy(&self) {
        let mut recount = vec![0u32; self.g.vertex_count()];
        for chain in &self.chains {
            for v in chain.iter() {
                recount[v as usize] += 1;
            }
        }
        debug_assert_eq!(recount, self.occupancy, "occupancy drifted");
    }

    /// Run sweeps until success, patience runs out, or max_rounds. Returns
    /// (success, best chains seen, best metric, rounds run).
    fn run(mut self, order: &mut Vec<usize>) -> RestartResult {
        let mut best_metric: Option<ImprovementMetric> = None;
        let mut best_chains = self.chains.clone();
        let mut no_improve = 0u32;
        let mut rounds = 0u32;
        loop {
            rounds += 1;
            if self.params.randomize_order {
                order.shuffle(&mut self.rng);
            }
            for &target in order.iter() {
                self.rebuild(target);
            }
            #[cfg(debug_assertions)]
            self.audit_occupancy();

            let metric = self.metric();
            if metric.max_occupancy <= 1
                && self.chains.iter().all(|c| !c.is_empty())
                && verify::verify_embedding(self.g, self.h, &self.chains)
                    .map(|v| v.is_empty())
                    .unwrap_or(false)
            {
                return RestartResult {
                    success: true,
                    chains: self.chains,
                    metric,
                    rounds,
                    pops: self.pops,
                };
            }
            if best_metric.map_or(true, |b| metric < b) {
                best_metric = Some(metric);
                best_chains = self.chains.clone();
                no_improve = 0;
            } else {
                no_improve += 1;
            }
            if rounds >= self.params.max_rounds
                || (rounds >= 2 && no_improve >= self.params.patience)
            {
                return RestartResult {
                    success: false,
                    chains: best_chains,
                    metric: best_metric.expect("at least one round ran"),
                    rounds,
                    pops: self.pops,
                };
            }
        }
    }
}

struct RestartResult {
    success: bool,
    chains: Vec<VertexSet>,
    metric: ImprovementMetric,
    rounds: u32,
    pops: u64,
}

/// Top-level heuristic: up to `params.tries` independent restarts, each a
/// sequence of full sweeps over a randomized H-vertex order. Returns the
/// first verifier-checked embedding, otherwise the best G-decomposition
/// seen across restarts.
pub fn find_embedding(g: &Graph, h: &Graph, params: &EmbedParams) -> Result<EmbedOutcome, EmbedError> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(EmbedError::EmptyGraph);
    }
    if h.vertex_count() > g.vertex_count() {
        return Err(EmbedError::GuestTooLarge {
            h: h.vertex_count(),
            g: g.vertex_count(),
        });
    }
    let start = Instant::now();
    let diameter = weight_base(g);
    let mut order: Vec<usize> = (0..h.vertex_count()).collect();
    let mut total_rounds = 0u32;
    let mut total_pops = 0u64;
    let mut best: Option<(ImprovementMetric, Vec<VertexSet>)> = None;
    for try_index in 0..params.tries.max(1) {
        let restart = Restart::new(g, h, params, diameter, try_index as u64);
        let result = restart.run(&mut order);
        total_rounds += result.rounds;
        total_pops += result.pops;
        if result.success {
            return Ok(EmbedOutcome {
                result: EmbedResult::Embedded(Embedding {
                    chains: result.chains,
                }),
                stats: EmbedStats {
                    rounds: total_rounds,
                    tries_used: try_index + 1,
                    pops: total_pops,
                    wall_time: start.elapsed(),
                    final_metric: result.metric,
                },
            });
        }
        if best.as_ref().map_or(true, |(m, _)| result.metric < *m) {
            best = Some((result.metric, result.chains));
        }
    }
    let (metric, chains) = best.expect("at least one try ran");
    Ok(EmbedOutcome {
        result: EmbedResult::Decomposition(Embedding { chains }),
        stats: EmbedStats {
            rounds: total_rounds,
            tries_used: params.tries.max(1),
            pops: total_pops,
            wall_time: start.elapsed(),
            final_metric: metric,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{chimera_graph, complete_graph, ChimeraSpec};

    fn path_graph(n: usize) -> Graph {
        let edges: Vec<_> = (0..n as Vertex - 1).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn weights_all_one_when_unoccupied() {
        let w = compute_weights(&[0, 0, 0], None, 7.0);
        assert!((0..3).all(|v| w.get(v) == 1.0));
    }

    #[test]
    fn weights_exclude_targets_own_chain() {
        let excluded = VertexSet::singleton(1);
        let w = compute_weights(&[0, 1, 2], Some(&excluded), 7.0);
        assert_eq!(w.get(0), 1.0);
        assert_eq!(w.get(1), 1.0); // only the excluded chain holds it
        assert_eq!(w.get(2), 49.0);
    }

    #[test]
    fn weights_direct_exponentiation() {
        let w = compute_weights(&[3], None, 7.0);
        assert_eq!(w.get(0), 343.0);
    }

    #[test]
    fn weights_cap_preserves_order_and_stays_finite() {
        let w = compute_weights(&[0, 10, 100, 1000], None, 6.0);
        assert!(w.get(0) < w.get(1));
        assert!(w.get(1) < w.get(2));
        assert!(w.get(2) <= w.get(3));
        assert!(w.get(3).is_finite());
    }

    #[test]
    fn sample_root_single_finite() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let v = sample_root(&[1.0, f64::INFINITY, f64::INFINITY], &mut rng, true, 1.0);
            assert_eq!(v, Some(0));
        }
    }

    #[test]
    fn sample_root_all_infinite() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(
            sample_root(&[f64::INFINITY, f64::INFINITY], &mut rng, true, 1.0),
            None
        );
        assert_eq!(
            sample_root(&[f64::INFINITY], &mut rng, false, 1.0),
            None
        );
    }

    #[test]
    fn sample_root_symmetric_costs_split_evenly() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut first = 0u32;
        for _ in 0..10_000 {
            if sample_root(&[3.0, 3.0], &mut rng, true, 1.0) == Some(0) {
                first += 1;
            }
        }
        let freq = first as f64 / 10_000.0;
        assert!((freq - 0.5).abs() < 0.05, "freq {freq}");
    }

    #[test]
    fn sample_root_softmax_frequency() {
        // costs [0, ln 3] -> P(0) = 3/4
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let costs = [0.0, 3.0f64.ln()];
        let mut first = 0u32;
        for _ in 0..10_000 {
            if sample_root(&costs, &mut rng, true, 1.0) == Some(0) {
                first += 1;
            }
        }
        let freq = first as f64 / 10_000.0;
        assert!((freq - 0.75).abs() < 0.02, "freq {freq}");
    }

    #[test]
    fn sample_root_argmin_when_disabled() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert_eq!(
            sample_root(&[2.0, 1.0, 1.0], &mut rng, false, 1.0),
            Some(1) // (cost, id) tie-break
        );
    }

    /// Drive a single rebuild with fixed surrounding chains.
    fn rebuild_once(
        g: &Graph,
        h: &Graph,
        chains: Vec<VertexSet>,
        target: usize,
        params: &EmbedParams,
    ) -> (bool, Vec<VertexSet>, Option<Vertex>) {
        let diameter = weight_base(g);
        let mut restart = Restart::new(g, h, params, diameter, 0);
        for (i, chain) in chains.into_iter().enumerate() {
            for v in chain.iter() {
                restart.occupancy[v as usize] += 1;
            }
            restart.chains[i] = chain;
        }
        let ok = restart.rebuild(target);
        let root = restart.previous_root[target];
        (ok, restart.chains, root)
    }

    #[test]
    fn base_case_uniform_random_singleton() {
        // all neighbour chains empty: root uniform over the 8 cell vertices
        let g = chimera_graph(&ChimeraSpec::unbroken(1, 1, 4)).graph;
        let h = Graph::build(2, &[(0, 1)]).unwrap();
        let mut hits = vec![0u32; 8];
        for seed in 0..4000 {
            let params = EmbedParams {
                seed,
                ..EmbedParams::default()
            };
            let (ok, chains, _) = rebuild_once(
                &g,
                &h,
                vec![VertexSet::new(), VertexSet::new()],
                0,
                &params,
            );
            assert!(ok);
            assert_eq!(chains[0].len(), 1);
            hits[chains[0].as_slice()[0] as usize] += 1;
        }
        for &hit in &hits {
            let freq = hit as f64 / 4000.0;
            assert!((freq - 0.125).abs() < 0.03, "freq {freq}");
        }
    }

    #[test]
    fn p5_model_between_two_chains() {
        // G = P5, neighbour chains {v0} and {v4}, unit weights: the interior
        // vertices v1, v2, v3 tie at total cost 4 (see the exhaustive check
        // below), so the (cost, id) tie-break roots the model at v1; the
        // path to {v4} contributes v2 and v3 to that neighbour's chain.
        let g = path_graph(5);
        let h = Graph::build(3, &[(0, 2), (1, 2)]).unwrap(); // H vertex 2 adjacent to 0 and 1
        let params = EmbedParams {
            root_sampling: false,
            ..EmbedParams::default()
        };
        let chains = vec![
            VertexSet::singleton(0),
            VertexSet::singleton(4),
            VertexSet::new(),
        ];
        let (ok, chains, root) = rebuild_once(&g, &h, chains, 2, &params);
        assert!(ok);
        assert_eq!(root, Some(1));
        assert_eq!(chains[2], VertexSet::singleton(1));
        assert_eq!(chains[0], VertexSet::singleton(0));
        assert_eq!(chains[1], VertexSet::from_vec(vec![2, 3, 4]));
    }

    #[test]
    fn p5_exhaustive_cost_check() {
        // independent cost evaluation over all 5 candidate roots
        let g = path_graph(5);
        let weights = VertexWeights::uniform(5);
        let chains = [VertexSet::singleton(0), VertexSet::singleton(4)];
        let mut totals = Vec::new();
        for v in 0..5u32 {
            let mut total = 0.0;
            for chain in &chains {
                let (t, _) = weighted_sssp_from_set(&g, &weights, chain).unwrap();
                total += if chain.contains(v) {
                    weights.get(v)
                } else {
                    t.dist[v as usize]
                };
            }
            totals.push(total);
        }
        assert_eq!(totals, vec![5.0, 4.0, 4.0, 4.0, 5.0]);
        // argmin under the (cost, id) tie-break is v1
        let root = sample_root(&totals, &mut ChaCha8Rng::seed_from_u64(0), false, 1.0);
        assert_eq!(root, Some(1));
    }

    #[test]
    fn star_center_wins() {
        // G = K_{1,3} star with center 0; three leaf chains
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let h = Graph::build(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let params = EmbedParams {
            root_sampling: false,
            ..EmbedParams::default()
        };
        let chains = vec![
            VertexSet::singleton(1),
            VertexSet::singleton(2),
            VertexSet::singleton(3),
            VertexSet::new(),
        ];
        let (ok, chains, root) = rebuild_once(&g, &h, chains, 3, &params);
        assert!(ok);
        assert_eq!(root, Some(0));
        assert_eq!(chains[3], VertexSet::singleton(0));
    }

    #[test]
    fn single_vertex_into_k1() {
        let g = Graph::build(1, &[]).unwrap();
        let h = Graph::build(1, &[]).unwrap();
        let outcome = find_embedding(&g, &h, &EmbedParams::default()).unwrap();
        assert!(outcome.is_success());
        assert_eq!(outcome.chains().chains, vec![VertexSet::singleton(0)]);
    }

    #[test]
    fn k3_into_k3() {
        let g = complete_graph(3).unwrap();
        let h = complete_graph(3).unwrap();
        for seed in 0..20 {
            let params = EmbedParams {
                seed,
                tries: 1,
                ..EmbedParams::default()
            };
            let outcome = find_embedding(&g, &h, &params).unwrap();
            assert!(outcome.is_success(), "seed {seed}");
            let chains = &outcome.chains().chains;
            assert!(chains.iter().all(|c| c.len() == 1));
        }
    }

    #[test]
    fn guest_too_large_fails_fast() {
        let g = complete_graph(3).unwrap();
        let h = complete_graph(4).unwrap();
        assert_eq!(
            find_embedding(&g, &h, &EmbedParams::default()).unwrap_err(),
            EmbedError::GuestTooLarge { h: 4, g: 3 }
        );
    }

    #[test]
    fn empty_graphs_rejected() {
        let empty = Graph::build(0, &[]).unwrap();
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!(
            find_embedding(&empty, &k1, &EmbedParams::default()).unwrap_err(),
            EmbedError::EmptyGraph
        );
        assert_eq!(
            find_embedding(&k1, &empty, &EmbedParams::default()).unwrap_err(),
            EmbedError::EmptyGraph
        );
    }

    #[test]
    fn deterministic_per_seed_both_modes() {
        let g = chimera_graph(&ChimeraSpec::unbroken(2, 2, 4)).graph;
        let h = complete_graph(5).unwrap();
        for localized in [false, true] {
            let params = EmbedParams {
                seed: 9,
                tries: 3,
                localized,
                ..EmbedParams::default()
            };
            let a = find_embedding(&g, &h, &params).unwrap();
            let b = find_embedding(&g, &h, &params).unwrap();
            assert_eq!(a.chains().chains, b.chains().chains);
            assert_eq!(a.is_success(), b.is_success());
            assert_eq!(a.stats.rounds, b.stats.rounds);
            assert_eq!(a.stats.pops, b.stats.pops);
        }
    }

    #[test]
    fn successful_outputs_always_verify() {
        let g = chimera_graph(&ChimeraSpec::unbroken(2, 2, 4)).graph;
        for (hn, localized) in [(4usize, false), (5, false), (4, true), (5, true)] {
            let h = complete_graph(hn).unwrap();
            let params = EmbedParams {
                seed: 3,
                localized,
                ..EmbedParams::default()
            };
            let outcome = find_embedding(&g, &h, &params).unwrap();
            if outcome.is_success() {
                let violations =
                    verify::verify_embedding(&g, &h, &outcome.chains().chains).unwrap();
                assert!(violations.is_empty());
            }
        }
    }

    #[test]
    fn disconnected_host_fails_gracefully() {
        // two disjoint triangles cannot host K4
        let g = Graph::build(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        let h = complete_graph(4).unwrap();
        let params = EmbedParams {
            tries: 2,
            max_rounds: 20,
            ..EmbedParams::default()
        };
        let outcome = find_embedding(&g, &h, &params).unwrap();
        assert!(!outcome.is_success());
    }
}
