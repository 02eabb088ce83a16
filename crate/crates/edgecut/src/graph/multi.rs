//! Contraction-aware multigraph.
//!
//! Edge ids are stable across contractions: an edge keeps the dense id it was
//! assigned at parse time, and `provenance` maps it back to the originating
//! graph's edge id (the identity unless a graph was derived from another, as
//! with sparse certificates). Edges internal to a contracted set are deleted,
//! never kept as loops, and any vertex pair accumulating more than δ parallel
//! edges is contracted in turn.

use super::{CutView, GraphView, SimpleGraph};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct MultiGraph {
    /// Multiplicity cap: δ of the originating simple graph.
    delta: u32,
    /// Per current vertex: sorted original vertex ids merged into it.
    members: Vec<Vec<u32>>,
    /// Per current vertex: (neighbor, edge id), one entry per parallel edge.
    adj: Vec<Vec<(u32, u32)>>,
    /// Edge id -> current endpoints; `None` once deleted by a contraction.
    edges: Vec<Option<(u32, u32)>>,
    /// Edge id -> edge id in the originating graph.
    provenance: Vec<u32>,
    /// Original vertex id -> current vertex id.
    contraction_map: Vec<u32>,
    edge_count: u64,
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
        }
    }
    fn find(&mut self, x: u32) -> u32 {
        if self.parent[x as usize] != x {
            let root = self.find(self.parent[x as usize]);
            self.parent[x as usize] = root;
            root
        } else {
            x
        }
    }
    // Smaller id wins so vertex numbering stays canonical.
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi as usize] = lo;
        }
    }
}

impl MultiGraph {
    pub fn from_simple(g: &SimpleGraph) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(g.edge_count());
        for e in 0..g.edge_count() as u32 {
            let (u, v) = g.edge_endpoints(e);
            adj[u as usize].push((v, e));
            adj[v as usize].push((u, e));
            edges.push(Some((u, v)));
        }
        MultiGraph {
            delta: g.min_degree(),
            members: (0..n as u32).map(|v| vec![v]).collect(),
            adj,
            edges,
            provenance: (0..g.edge_count() as u32).collect(),
            contraction_map: (0..n as u32).collect(),
            edge_count: g.edge_count() as u64,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.members.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.adj[v as usize].len() as u32
    }

    pub fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        &self.adj[v as usize]
    }

    /// Original vertices merged into current vertex `v`.
    pub fn members(&self, v: u32) -> &[u32] {
        &self.members[v as usize]
    }

    pub fn is_super(&self, v: u32) -> bool {
        self.members[v as usize].len() > 1
    }

    pub fn current_vertex_of(&self, original: u32) -> u32 {
        self.contraction_map[original as usize]
    }

    pub fn original_edge_of(&self, e: u32) -> u32 {
        self.provenance[e as usize]
    }

    pub fn edge_endpoints(&self, e: u32) -> Option<(u32, u32)> {
        self.edges[e as usize]
    }

    /// Ids of the surviving edges, ascending.
    pub fn edge_ids(&self) -> impl Iterator<Item = u32> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|_| i as u32))
    }

    /// Number of parallel edges between `u` and `v`.
    pub fn multiplicity(&self, u: u32, v: u32) -> u32 {
        self.adj[u as usize]
            .iter()
            .filter(|&&(w, _)| w == v)
            .count() as u32
    }

    /// Rewrite provenance through `table`, mapping this graph's "original" edge
    /// ids into an older id space (used when the originating graph was itself
    /// derived, e.g. a sparse certificate of another graph).
    pub fn compose_provenance(&mut self, table: &[u32]) {
        for p in &mut self.provenance {
            *p = table[*p as usize];
        }
    }

    /// Contract one vertex set; see [`MultiGraph::contract_groups`].
    pub fn contract(&self, set: &[u32]) -> Result<MultiGraph> {
        self.contract_groups(std::slice::from_ref(&set.to_vec()))
    }

    /// Contract several pairwise-disjoint vertex sets at once, then contract
    /// any vertex pair joined by more than δ parallel edges until none remains.
    /// Produces a new graph; `self` is untouched.
    pub fn contract_groups(&self, groups: &[Vec<u32>]) -> Result<MultiGraph> {
        let n = self.vertex_count();
        let mut uf = UnionFind::new(n);
        for set in groups {
            for &v in set {
                if v as usize >= n {
                    return Err(Error::UnknownVertex(v));
                }
            }
            if set.is_empty() {
                continue;
            }
            let first = set[0];
            for &v in &set[1..] {
                uf.union(first, v);
            }
        }
        // Multiplicity cap: merge offending pairs to a fixed point. BTreeMap
        // iteration picks the lexicographically smallest pair, so the result
        // is deterministic.
        loop {
            let mut counts: std::collections::BTreeMap<(u32, u32), u32> =
                std::collections::BTreeMap::new();
            for e in self.edges.iter().flatten() {
                let (ra, rb) = (uf.find(e.0), uf.find(e.1));
                if ra != rb {
                    *counts.entry((ra.min(rb), ra.max(rb))).or_insert(0) += 1;
                }
            }
            match counts.iter().find(|&(_, &c)| c > self.delta) {
                Some((&(a, b), _)) => uf.union(a, b),
                None => break,
            }
        }
        Ok(self.rebuild(&mut uf))
    }

    fn rebuild(&self, uf: &mut UnionFind) -> MultiGraph {
        let n = self.vertex_count();
        let mut new_id = vec![u32::MAX; n];
        let mut next = 0u32;
        for v in 0..n as u32 {
            if uf.find(v) == v {
                new_id[v as usize] = next;
                next += 1;
            }
        }
        let n_new = next as usize;
        let mut members: Vec<Vec<u32>> = vec![Vec::new(); n_new];
        for v in 0..n as u32 {
            let target = new_id[uf.find(v) as usize];
            members[target as usize].extend_from_slice(&self.members[v as usize]);
        }
        for m in &mut members {
            m.sort_unstable();
        }
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n_new];
        let mut edges = vec![None; self.edges.len()];
        let mut edge_count = 0u64;
        for (id, e) in self.edges.iter().enumerate() {
            if let Some((a, b)) = e {
                let (na, nb) = (new_id[uf.find(*a) as usize], new_id[uf.find(*b) as usize]);
                if na != nb {
                    adj[na as usize].push((nb, id as u32));
                    adj[nb as usize].push((na, id as u32));
                    edges[id] = Some((na, nb));
                    edge_count += 1;
                }
            }
        }
        let contraction_map = self
            .contraction_map
            .iter()
            .map(|&cur| new_id[uf.find(cur) as usize])
            .collect();
        MultiGraph {
            delta: self.delta,
            members,
            adj,
            edges,
            provenance: self.provenance.clone(),
            contraction_map,
            edge_count,
        }
    }

    /// Translate a cut of this graph into a cut of the originating simple
    /// graph: sides expand through member sets, boundary ids through
    /// provenance. The cut size is unchanged.
    pub fn map_cut_to_original(&self, cut: &CutView, original: &SimpleGraph) -> CutView {
        let mut side: Vec<u32> = cut
            .side
            .iter()
            .flat_map(|&v| self.members(v).iter().copied())
            .collect();
        side.sort_unstable();
        let mut boundary: Vec<u32> = cut
            .boundary
            .iter()
            .map(|&e| self.original_edge_of(e))
            .collect();
        boundary.sort_unstable();
        debug_assert_eq!(boundary.len(), cut.boundary.len());
        let volume: u64 = side.iter().map(|&v| original.degree(v) as u64).sum();
        let total = 2 * original.edge_count() as u64;
        let small_volume = volume.min(total - volume);
        let conductance = if small_volume == 0 {
            0.0
        } else {
            boundary.len() as f64 / small_volume as f64
        };
        CutView {
            side,
            boundary,
            volume,
            small_volume,
            conductance,
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0u32]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }
}

impl GraphView for MultiGraph {
    fn vertex_id_bound(&self) -> usize {
        self.vertex_count()
    }
    fn edge_id_bound(&self) -> usize {
        self.edges.len()
    }
    fn vertex_count(&self) -> usize {
        self.members.len()
    }
    fn edge_count(&self) -> u64 {
        self.edge_count
    }
    fn degree(&self, v: u32) -> u32 {
        self.adj[v as usize].len() as u32
    }
    fn contains_vertex(&self, v: u32) -> bool {
        (v as usize) < self.members.len()
    }
    fn for_each_vertex(&self, f: &mut dyn FnMut(u32)) {
        for v in 0..self.members.len() as u32 {
            f(v);
        }
    }
    fn for_each_incident(&self, v: u32, f: &mut dyn FnMut(u32, u32)) {
        for &(w, e) in &self.adj[v as usize] {
            f(w, e);
        }
    }
    fn origin_min_degree(&self) -> u32 {
        self.delta
    }
}
