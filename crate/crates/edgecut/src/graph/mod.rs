//! Graph representations and cut/volume/conductance primitives.

mod multi;
mod parse;

pub use multi::MultiGraph;
pub use parse::{parse_graph, read_graph_file, sniff_format, GraphFormat, ParseMode, ParseReport};

use crate::{Error, Result};

/// Read-only view of an undirected graph, possibly a subgraph of a larger
/// host. Vertex and edge ids index into the host's id spaces, so a view over a
/// subgraph may use sparse ids below the stated bounds.
pub trait GraphView {
    /// Exclusive upper bound on vertex ids appearing in this view.
    fn vertex_id_bound(&self) -> usize;
    /// Exclusive upper bound on edge ids appearing in this view.
    fn edge_id_bound(&self) -> usize;
    /// Number of vertices in the view.
    fn vertex_count(&self) -> usize;
    /// Number of edges in the view, counting parallel edges.
    fn edge_count(&self) -> u64;
    /// Degree of `v` within the view, counting parallel edges.
    fn degree(&self, v: u32) -> u32;
    fn contains_vertex(&self, v: u32) -> bool;
    /// Visit every vertex of the view once, in increasing id order.
    fn for_each_vertex(&self, f: &mut dyn FnMut(u32));
    /// Visit every edge incident to `v`, one call per parallel edge.
    fn for_each_incident(&self, v: u32, f: &mut dyn FnMut(u32, u32));

    /// δ of the originating simple graph (the multiplicity cap and the bound
    /// every min-cut respects).
    fn origin_min_degree(&self) -> u32;

    /// Total volume 2m of the view.
    fn total_volume(&self) -> u64 {
        2 * self.edge_count()
    }
}

/// One side of a cut together with its exact boundary and volume.
///
/// The integer pair (boundary size, smaller-side volume) is kept exact so that
/// conductance comparisons and tie-breaks never go through floating point.
#[derive(Debug, Clone, PartialEq)]
pub struct CutView {
    /// Vertices on the specified side, sorted by id.
    pub side: Vec<u32>,
    /// Ids of the edges crossing the cut, sorted.
    pub boundary: Vec<u32>,
    /// Volume of `side`: sum of degrees.
    pub volume: u64,
    /// min(volume, 2m - volume) in the host view.
    pub small_volume: u64,
    /// boundary_size / small_volume, in [0, 1].
    pub conductance: f64,
}

impl CutView {
    pub fn boundary_size(&self) -> usize {
        self.boundary.len()
    }

    /// Exact conductance comparison: self < other?
    pub fn sparser_than(&self, other: &CutView) -> bool {
        cmp_conductance(
            (self.boundary.len() as u64, self.small_volume),
            (other.boundary.len() as u64, other.small_volume),
        ) == std::cmp::Ordering::Less
    }
}

/// Compare b1/v1 against b2/v2 without division. A zero-volume side counts as
/// conductance 0 (it can only arise with an empty boundary).
pub fn cmp_conductance(a: (u64, u64), b: (u64, u64)) -> std::cmp::Ordering {
    let (b1, v1) = a;
    let (b2, v2) = b;
    match (v1, v2) {
        (0, 0) => std::cmp::Ordering::Equal,
        (0, _) => std::cmp::Ordering::Less,
        (_, 0) => std::cmp::Ordering::Greater,
        _ => (b1 as u128 * v2 as u128).cmp(&(b2 as u128 * v1 as u128)),
    }
}

/// Conductance of `side` within `view`: |∂S| / min(vol(S), 2m - vol(S)).
///
/// Errors if the side is empty or covers the whole view.
pub fn conductance<V: GraphView + ?Sized>(view: &V, side: &[u32]) -> Result<CutView> {
    if side.is_empty() {
        return Err(Error::InvalidParameter("cut side is empty".into()));
    }
    if side.len() >= view.vertex_count() {
        return Err(Error::InvalidParameter(
            "cut side covers the whole graph".into(),
        ));
    }
    let mut in_side = vec![false; view.vertex_id_bound()];
    for &v in side {
        if !view.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        in_side[v as usize] = true;
    }
    let mut volume = 0u64;
    let mut boundary = Vec::new();
    for &v in side {
        volume += view.degree(v) as u64;
        view.for_each_incident(v, &mut |w, e| {
            if !in_side[w as usize] {
                boundary.push(e);
            }
        });
    }
    boundary.sort_unstable();
    let mut sorted_side = side.to_vec();
    sorted_side.sort_unstable();
    sorted_side.dedup();
    let small_volume = volume.min(view.total_volume() - volume);
    let conductance = if small_volume == 0 {
        0.0
    } else {
        boundary.len() as f64 / small_volume as f64
    };
    Ok(CutView {
        side: sorted_side,
        boundary,
        volume,
        small_volume,
        conductance,
    })
}

/// Immutable simple graph: no self-loops, no parallel edges, symmetric
/// adjacency with a shared dense edge id per undirected edge.
#[derive(Debug, Clone)]
pub struct SimpleGraph {
    labels: Vec<u64>,
    adj: Vec<Vec<(u32, u32)>>,
    edges: Vec<(u32, u32)>,
    min_degree: u32,
}

impl SimpleGraph {
    /// Build from a validated edge list over vertices `0..n`. External labels
    /// default to the vertex ids.
    pub fn from_edges(n: usize, edge_list: &[(u32, u32)]) -> Result<Self> {
        let labels = (0..n as u64).collect();
        Self::from_edges_labeled(labels, edge_list)
    }

    /// Build with explicit external labels (`labels[v]` is vertex v's name).
    pub fn from_edges_labeled(labels: Vec<u64>, edge_list: &[(u32, u32)]) -> Result<Self> {
        let n = labels.len();
        if edge_list.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for (idx, &(u, v)) in edge_list.iter().enumerate() {
            if u as usize >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v as usize >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate edge {}-{}",
                    key.0, key.1
                )));
            }
            let e = idx as u32;
            adj[u as usize].push((v, e));
            adj[v as usize].push((u, e));
            edges.push(key);
        }
        let min_degree = adj.iter().map(|a| a.len() as u32).min().unwrap_or(0);
        Ok(SimpleGraph {
            labels,
            adj,
            edges,
            min_degree,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.adj[v as usize].len() as u32
    }

    /// δ, the minimum degree.
    pub fn min_degree(&self) -> u32 {
        self.min_degree
    }

    /// Neighbors of `v` as (neighbor, edge id) pairs, in insertion order.
    pub fn neighbors(&self, v: u32) -> &[(u32, u32)] {
        &self.adj[v as usize]
    }

    pub fn edge_endpoints(&self, e: u32) -> (u32, u32) {
        self.edges[e as usize]
    }

    /// External label of vertex `v`.
    pub fn label(&self, v: u32) -> u64 {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut comp = vec![start];
            seen[start as usize] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Does removing exactly the given edges disconnect the graph?
    pub fn disconnects(&self, removed_edges: &[u32]) -> bool {
        let mut dead = vec![false; self.edge_count()];
        for &e in removed_edges {
            dead[e as usize] = true;
        }
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::from([0u32]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &(w, e) in self.neighbors(v) {
                if !dead[e as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached < n
    }
}

impl GraphView for SimpleGraph {
    fn vertex_id_bound(&self) -> usize {
        self.vertex_count()
    }
    fn edge_id_bound(&self) -> usize {
        self.edge_count()
    }
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }
    fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }
    fn degree(&self, v: u32) -> u32 {
        self.adj[v as usize].len() as u32
    }
    fn contains_vertex(&self, v: u32) -> bool {
        (v as usize) < self.adj.len()
    }
    fn for_each_vertex(&self, f: &mut dyn FnMut(u32)) {
        for v in 0..self.adj.len() as u32 {
            f(v);
        }
    }
    fn for_each_incident(&self, v: u32, f: &mut dyn FnMut(u32, u32)) {
        for &(w, e) in &self.adj[v as usize] {
            f(w, e);
        }
    }
    fn origin_min_degree(&self) -> u32 {
        self.min_degree
    }
}
