//! Immutable simple graphs stored as per-vertex bitsets.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::spectral::SymMatrix;

/// Largest order accepted by any constructor. Dense spectral work is cubic in
/// the order, so anything above this is refused up front.
pub const MAX_ORDER: usize = 10_000;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept as one bitset row per vertex. Rows are symmetric, the
/// diagonal is always clear, and values never change after construction:
/// every editing operation returns a new graph.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    label: Option<String>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph order",
                limit: MAX_ORDER,
                got: n,
            });
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
            label: None,
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::param("edge list", format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a 0/1 adjacency predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + bit)
                }
            })
        })
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Neighborhood rows as single words; `None` when `n > 64`.
    pub fn masks64(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| (0..self.n).map(|v| self.rows[v]).collect())
    }

    /// True when `N(u) = N(v)` as open neighborhoods.
    pub fn same_neighborhood(&self, u: usize, v: usize) -> bool {
        self.row(u) == self.row(v)
    }

    pub fn adjacency_matrix(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| if self.has_edge(i, j) { 1.0 } else { 0.0 })
    }

    /// Induced subgraph on `keep`, renumbered in increasing vertex order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut ids = keep.to_vec();
        ids.sort_unstable();
        ids.dedup();
        for &v in &ids {
            self.check_vertex(v)?;
        }
        Graph::from_fn(ids.len(), |a, b| self.has_edge(ids[a], ids[b]))
    }

    /// Induced subgraph on `V(g) \ remove`, renumbered order-preservingly.
    pub fn delete_vertices(&self, remove: &[usize]) -> Result<Graph> {
        let mut gone = vec![false; self.n];
        for &v in remove {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.delete_vertices(&[v])
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v)).expect("same order")
    }

    /// Block-diagonal union; vertices of `gs[i]` follow those of `gs[i-1]`.
    pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
        let total: usize = gs.iter().map(Graph::n).sum();
        let mut out = Graph::empty(total)?;
        let mut offset = 0;
        for g in gs {
            for (u, v) in g.edges() {
                out.set_edge(offset + u, offset + v);
            }
            offset += g.n;
        }
        Ok(out)
    }

    /// `g1 ∨ g2`: the disjoint union plus every edge between the two parts.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
        let mut out = Graph::disjoint_union(&[g1.clone(), g2.clone()])?;
        for u in 0..g1.n {
            for v in 0..g2.n {
                out.set_edge(u, g1.n + v);
            }
        }
        Ok(out)
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn component_sets(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() == 1
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .field("label", &self.label)
            .finish()
    }
}
