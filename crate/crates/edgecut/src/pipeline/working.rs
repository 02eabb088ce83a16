//! The working subgraph H of the contraction host Ḡ.
//!
//! H starts as Ḡ minus the passive super vertices and shrinks by cutting and
//! trimming. Vertices are grouped into components; every H-edge stays inside
//! its component, because cuts separate components and removals only delete.
//! Components are split only along explicit cuts, so a component may silently
//! be disconnected; that surfaces later as a conductance-0 cut, which is fine.

use super::config::PipelineConfig;
use crate::graph::{GraphView, MultiGraph};
use serde::Serialize;

/// Per-round edge accounting for the cut/trim/shave/scrap amortization.
#[derive(Debug, Clone, Copy, Default, Serialize, PartialEq, Eq)]
pub struct ChargeLedger {
    /// Edges removed by low-conductance cuts.
    pub cut_edges: u64,
    /// Edges removed together with passive super vertices.
    pub passive_cut_edges: u64,
    pub trimmed_edges: u64,
    pub shaved_edges: u64,
    pub scrapped_edges: u64,
}

impl ChargeLedger {
    /// trimmed + shaved + scrapped ≤ 4 · (edges cut, of either kind)
    pub fn amortization_holds(&self) -> bool {
        self.trimmed_edges + self.shaved_edges + self.scrapped_edges
            <= 4 * (self.cut_edges + self.passive_cut_edges)
    }
}

#[derive(Debug, Clone)]
pub struct Component {
    /// Vertices, kept in non-decreasing H-degree order (ties by id) after
    /// `sort_component`.
    pub verts: Vec<u32>,
    /// Certified strength level; read through min(strength, m(C)).
    pub strength: f64,
}

#[derive(Debug)]
pub struct WorkingSubgraph<'g> {
    host: &'g MultiGraph,
    alive: Vec<bool>,
    edge_alive: Vec<bool>,
    deg_h: Vec<u32>,
    comp_of: Vec<u32>,
    components: Vec<Component>,
}

impl<'g> WorkingSubgraph<'g> {
    /// Build H = Ḡ minus passive super vertices. Returns the subgraph and the
    /// number of edges removed with the passive vertices. Components are the
    /// connected components of the remainder; strengths start at m(C).
    pub fn new(host: &'g MultiGraph, cfg: &PipelineConfig) -> (Self, u64) {
        let n = host.vertex_count();
        let delta_star = cfg.delta_star(host.delta());
        let alive = vec![true; n];
        let mut edge_alive = vec![false; host.edge_id_bound()];
        for e in host.edge_ids() {
            edge_alive[e as usize] = true;
        }
        let deg_h: Vec<u32> = (0..n as u32).map(|v| host.degree(v)).collect();
        let mut sub = WorkingSubgraph {
            host,
            alive,
            edge_alive,
            deg_h,
            comp_of: vec![u32::MAX; n],
            components: Vec::new(),
        };
        let mut passive_cut = 0u64;
        for v in 0..n as u32 {
            if host.is_super(v) && (host.degree(v) as f64) < delta_star {
                passive_cut += sub.remove_vertex_edges(v);
                sub.alive[v as usize] = false;
            }
        }
        sub.rebuild_components();
        (sub, passive_cut)
    }

    fn remove_vertex_edges(&mut self, v: u32) -> u64 {
        let mut removed = 0u64;
        for &(w, e) in self.host.neighbors(v) {
            if self.edge_alive[e as usize] {
                self.edge_alive[e as usize] = false;
                self.deg_h[w as usize] -= 1;
                self.deg_h[v as usize] -= 1;
                removed += 1;
            }
        }
        removed
    }

    fn rebuild_components(&mut self) {
        let n = self.host.vertex_count();
        self.components.clear();
        self.comp_of = vec![u32::MAX; n];
        for start in 0..n as u32 {
            if !self.alive[start as usize] || self.comp_of[start as usize] != u32::MAX {
                continue;
            }
            let idx = self.components.len() as u32;
            let mut verts = vec![start];
            self.comp_of[start as usize] = idx;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, e) in self.host.neighbors(v) {
                    if self.edge_alive[e as usize]
                        && self.alive[w as usize]
                        && self.comp_of[w as usize] == u32::MAX
                    {
                        self.comp_of[w as usize] = idx;
                        verts.push(w);
                        queue.push_back(w);
                    }
                }
            }
            let mut comp = Component {
                verts,
                strength: 0.0,
            };
            comp.verts.sort_unstable();
            self.components.push(comp);
        }
        for i in 0..self.components.len() {
            self.components[i].strength = self.component_edges(i) as f64;
        }
    }

    pub fn host(&self) -> &'g MultiGraph {
        self.host
    }

    pub fn is_alive(&self, v: u32) -> bool {
        self.alive[v as usize]
    }

    pub fn edge_is_alive(&self, e: u32) -> bool {
        self.edge_alive[e as usize]
    }

    pub fn h_degree(&self, v: u32) -> u32 {
        self.deg_h[v as usize]
    }

    /// Host degree minus H degree.
    pub fn lost_degree(&self, v: u32) -> u32 {
        self.host.degree(v) - self.deg_h[v as usize]
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn set_strength(&mut self, idx: usize, s: f64) {
        self.components[idx].strength = s;
    }

    /// m(C): alive edges inside component `idx`.
    pub fn component_edges(&self, idx: usize) -> u64 {
        let total: u64 = self.components[idx]
            .verts
            .iter()
            .map(|&v| self.deg_h[v as usize] as u64)
            .sum();
        total / 2
    }

    /// Order the component's vertex list by non-decreasing H-degree.
    pub fn sort_component(&mut self, idx: usize) {
        let deg = &self.deg_h;
        self.components[idx]
            .verts
            .sort_by_key(|&v| (deg[v as usize], v));
    }

    pub fn component_view<'a>(&'a self, idx: usize) -> ComponentView<'a, 'g> {
        ComponentView {
            sub: self,
            comp: idx as u32,
            edges: self.component_edges(idx),
        }
    }

    /// Remove every vertex that lost more than the trim fraction of its host
    /// degree, cascading to a fixed point. Returns the number of H-edges
    /// removed by the trimming.
    pub fn trim(&mut self, cfg: &PipelineConfig) -> u64 {
        let frac = cfg.trim_fraction;
        let mut queue: std::collections::VecDeque<u32> = (0..self.host.vertex_count() as u32)
            .filter(|&v| {
                self.alive[v as usize]
                    && frac.exceeds(self.lost_degree(v) as u64, self.host.degree(v) as u64)
            })
            .collect();
        let mut removed_edges = 0u64;
        while let Some(v) = queue.pop_front() {
            if !self.alive[v as usize] {
                continue;
            }
            removed_edges += self.deg_h[v as usize] as u64;
            self.alive[v as usize] = false;
            let mut neighbors = Vec::new();
            for &(w, e) in self.host.neighbors(v) {
                if self.edge_alive[e as usize] {
                    self.edge_alive[e as usize] = false;
                    self.deg_h[w as usize] -= 1;
                    self.deg_h[v as usize] -= 1;
                    neighbors.push(w);
                }
            }
            let comp = self.comp_of[v as usize];
            if comp != u32::MAX {
                self.components[comp as usize].verts.retain(|&u| u != v);
                self.comp_of[v as usize] = u32::MAX;
            }
            for w in neighbors {
                if self.alive[w as usize]
                    && frac.exceeds(self.lost_degree(w) as u64, self.host.degree(w) as u64)
                {
                    queue.push_back(w);
                }
            }
        }
        removed_edges
    }

    /// Remove the edges between `side` and the rest of component `idx`, then
    /// split off `side` as a new component. Strengths of both parts are left
    /// for the caller to set. Returns (cut edge count, new component index).
    pub fn cut_component(&mut self, idx: usize, side: &[u32]) -> (u64, usize) {
        let mut in_side = vec![false; self.host.vertex_count()];
        for &v in side {
            debug_assert!(self.alive[v as usize] && self.comp_of[v as usize] == idx as u32);
            in_side[v as usize] = true;
        }
        let mut cut = 0u64;
        for &v in side {
            for &(w, e) in self.host.neighbors(v) {
                if self.edge_alive[e as usize] && !in_side[w as usize] && self.alive[w as usize] {
                    self.edge_alive[e as usize] = false;
                    self.deg_h[v as usize] -= 1;
                    self.deg_h[w as usize] -= 1;
                    cut += 1;
                }
            }
        }
        let new_idx = self.components.len();
        let old = &mut self.components[idx];
        old.verts.retain(|&v| !in_side[v as usize]);
        let mut side_sorted = side.to_vec();
        side_sorted.sort_unstable();
        for &v in &side_sorted {
            self.comp_of[v as usize] = new_idx as u32;
        }
        let strength = self.components[idx].strength;
        self.components.push(Component {
            verts: side_sorted,
            strength,
        });
        (cut, new_idx)
    }

    /// Index of the first component whose effective strength exceeds `s0`.
    pub fn next_above_strength(&self, s0: f64) -> Option<usize> {
        (0..self.components.len()).find(|&i| {
            let c = &self.components[i];
            !c.verts.is_empty() && c.strength.min(self.component_edges(i) as f64) > s0
        })
    }
}

/// Read-only view of one component of H; implements the graph interface used
/// by the push machinery. Vertex and edge ids are the host's.
#[derive(Clone, Copy)]
pub struct ComponentView<'a, 'g> {
    sub: &'a WorkingSubgraph<'g>,
    comp: u32,
    edges: u64,
}

impl<'a, 'g> ComponentView<'a, 'g> {
    /// The component's vertices in the order maintained by the subgraph
    /// (non-decreasing H-degree after `sort_component`).
    pub fn ordered_vertices(&self) -> &'a [u32] {
        &self.sub.components[self.comp as usize].verts
    }
}

impl<'a, 'g> GraphView for ComponentView<'a, 'g> {
    fn vertex_id_bound(&self) -> usize {
        self.sub.host.vertex_id_bound()
    }
    fn edge_id_bound(&self) -> usize {
        self.sub.host.edge_id_bound()
    }
    fn vertex_count(&self) -> usize {
        self.sub.components[self.comp as usize].verts.len()
    }
    fn edge_count(&self) -> u64 {
        self.edges
    }
    fn degree(&self, v: u32) -> u32 {
        debug_assert!(self.contains_vertex(v));
        self.sub.deg_h[v as usize]
    }
    fn contains_vertex(&self, v: u32) -> bool {
        (v as usize) < self.sub.alive.len()
            && self.sub.alive[v as usize]
            && self.sub.comp_of[v as usize] == self.comp
    }
    fn for_each_vertex(&self, f: &mut dyn FnMut(u32)) {
        for &v in &self.sub.components[self.comp as usize].verts {
            f(v);
        }
    }
    fn for_each_incident(&self, v: u32, f: &mut dyn FnMut(u32, u32)) {
        for &(w, e) in self.sub.host.neighbors(v) {
            if self.sub.edge_alive[e as usize] {
                f(w, e);
            }
        }
    }
    fn origin_min_degree(&self) -> u32 {
        self.sub.host.delta()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn cfg() -> PipelineConfig {
        PipelineConfig::scaled()
    }

    fn host(n: usize, edges: &[(u32, u32)]) -> MultiGraph {
        MultiGraph::from_simple(&SimpleGraph::from_edges(n, edges).unwrap())
    }

    #[test]
    fn full_degree_graph_trims_nothing() {
        let h = host(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let (mut sub, passive) = WorkingSubgraph::new(&h, &cfg());
        assert_eq!(passive, 0);
        assert_eq!(sub.trim(&cfg()), 0);
        assert_eq!(sub.components().len(), 1);
    }

    #[test]
    fn trim_threshold_is_strictly_more_than_three_fifths() {
        // vertex 0 has host degree 5; kill 3 of its edges: stays. kill 4: goes.
        let edges = [
            (0u32, 1u32),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (3, 4),
            (4, 5),
            (1, 5),
            (2, 3),
        ];
        let h = host(6, &edges);
        let (mut sub, _) = WorkingSubgraph::new(&h, &cfg());
        // manually kill edges 0..3 (vertex 0 to 1,2,3)
        for e in 0..3u32 {
            sub.edge_alive[e as usize] = false;
            let (a, b) = h.edge_endpoints(e).unwrap();
            sub.deg_h[a as usize] -= 1;
            sub.deg_h[b as usize] -= 1;
        }
        assert_eq!(sub.lost_degree(0), 3);
        let trimmed = sub.trim(&cfg());
        assert!(sub.is_alive(0), "lost 3 of 5 is not more than 3/5");
        let _ = trimmed;
        // now kill a fourth
        sub.edge_alive[3] = false;
        sub.deg_h[0] -= 1;
        sub.deg_h[4] -= 1;
        sub.trim(&cfg());
        assert!(!sub.is_alive(0), "lost 4 of 5 exceeds 3/5");
    }

    #[test]
    fn trim_cascades() {
        // vertex 0 (degree 5) loses 3 edges directly -- not enough -- and the
        // fourth arrives when its trimmed neighbor 5 goes away
        let edges = [
            (0u32, 1u32),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (5, 6),
            (5, 7),
            (5, 8),
        ];
        let h = host(9, &edges);
        let (mut sub, _) = WorkingSubgraph::new(&h, &cfg());
        // kill 0's edges to 1,2,3 and 5's edges to 6,7,8
        for e in [0u32, 1, 2, 5, 6, 7] {
            sub.edge_alive[e as usize] = false;
            let (a, b) = h.edge_endpoints(e).unwrap();
            sub.deg_h[a as usize] -= 1;
            sub.deg_h[b as usize] -= 1;
        }
        assert_eq!(sub.lost_degree(0), 3, "3 of 5 is not yet over the line");
        assert_eq!(sub.lost_degree(5), 3, "3 of 4 is over the line");
        sub.trim(&cfg());
        assert!(!sub.is_alive(5));
        assert!(
            !sub.is_alive(0),
            "losing (0,5) to the cascade pushes 0 to 4 of 5 lost"
        );
    }

    #[test]
    fn cut_splits_components_and_counts_edges() {
        let h = host(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]);
        let (mut sub, _) = WorkingSubgraph::new(&h, &cfg());
        assert_eq!(sub.components().len(), 1);
        let (cut, new_idx) = sub.cut_component(0, &[0, 1, 2]);
        assert_eq!(cut, 1);
        assert_eq!(sub.components()[new_idx].verts, vec![0, 1, 2]);
        assert_eq!(sub.components()[0].verts, vec![3, 4, 5]);
        assert_eq!(sub.component_edges(0), 3);
        assert_eq!(sub.component_edges(new_idx), 3);
    }

    #[test]
    fn passive_supers_are_removed_on_construction() {
        // contract a pair to get a super vertex with low degree
        let g = SimpleGraph::from_edges(
            5,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (3, 4),
                (2, 4),
                (0, 3),
                (1, 4),
            ],
        )
        .unwrap();
        let m = MultiGraph::from_simple(&g).contract(&[3, 4]).unwrap();
        let sup = m.current_vertex_of(3);
        assert!(m.is_super(sup));
        // scaled delta* = 4δ = 4·3 = 12 > deg(sup), so it is passive
        let (sub, passive) = WorkingSubgraph::new(&m, &cfg());
        assert!(!sub.is_alive(sup));
        assert_eq!(passive, m.degree(sup) as u64);
    }

    #[test]
    fn component_view_exposes_subgraph_degrees() {
        let h = host(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)]);
        let (mut sub, _) = WorkingSubgraph::new(&h, &cfg());
        let (_, side_idx) = sub.cut_component(0, &[0, 1, 2]);
        let view = sub.component_view(side_idx);
        assert_eq!(view.vertex_count(), 3);
        assert_eq!(view.edge_count(), 3);
        assert_eq!(view.degree(2), 2, "cut edge no longer counts");
        let mut seen = Vec::new();
        view.for_each_incident(2, &mut |w, _| seen.push(w));
        seen.sort_unstable();
        assert_eq!(seen, vec![0, 1]);
    }
}
