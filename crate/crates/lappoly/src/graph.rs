//! Simple undirected graphs with dense 0-based vertex labels.
//!
//! Everything is immutable after construction; operations return fresh
//! values. Isolated vertices are first-class citizens: they carry degree-0
//! factors through the matching sums and isolated vertices of subdivision
//! graphs, so they are never dropped.

use crate::error::{Error, Result};

/// Finite simple graph: no loops, no multiple edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Build a graph on `n` vertices from an edge list. Edges are
    /// normalized to `u < v` and stored sorted; loops, duplicates, and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::EndpointOutOfRange { vertex: v, n });
                }
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically, each with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Degrees sorted nonincreasing; sums to `2 m`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_connected(&self) -> bool {
        self.components().components.len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.components()
            .kinds
            .iter()
            .all(|k| *k == ComponentKind::Tree)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// A star K_{1,k} (k >= 1): one center adjacent to every other vertex,
    /// no other edges. K_2 = K_{1,1} counts.
    pub fn is_star(&self) -> bool {
        self.n >= 2 && self.m() == self.n - 1 && self.max_degree() == self.n - 1
    }

    /// Connected components with the tree/unicyclic/other classification.
    pub fn components(&self) -> ComponentReport {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        let mut kinds = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut verts = Vec::new();
            while let Some(v) = stack.pop() {
                verts.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            verts.sort_unstable();
            let edge_count = verts.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
            let kind = if edge_count + 1 == verts.len() {
                ComponentKind::Tree
            } else if edge_count == verts.len() {
                ComponentKind::Unicyclic
            } else {
                ComponentKind::Other
            };
            components.push(verts);
            kinds.push(kind);
        }
        ComponentReport { components, kinds }
    }

    /// Induced subgraph after deleting the vertex set `w`. The second return
    /// value maps new labels back to original labels, so degree lookups in
    /// the parent graph stay possible after relabeling.
    pub fn induced_delete(&self, w: &[usize]) -> Result<(Graph, Vec<usize>)> {
        for &v in w {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut drop = vec![false; self.n];
        for &v in w {
            drop[v] = true;
        }
        let kept: Vec<usize> = (0..self.n).filter(|&v| !drop[v]).collect();
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_label[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !drop[u] && !drop[v])
            .map(|&(u, v)| (new_label[u], new_label[v]));
        let graph = Graph::new(kept.len(), edges).expect("induced subgraph is always valid");
        Ok((graph, kept))
    }

    /// Subdivision graph: every edge is replaced by a path of length two
    /// through a fresh vertex. Originals keep labels `0..n`; the vertex for
    /// edge `i` (in sorted edge order) is `n + i`.
    pub fn subdivision(&self) -> SubdivisionGraph {
        let n = self.n;
        let mut edges = Vec::with_capacity(2 * self.m());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            edges.push((u, n + i));
            edges.push((v, n + i));
        }
        let graph = Graph::new(n + self.m(), edges).expect("subdivision is always valid");
        SubdivisionGraph {
            graph,
            original_n: n,
            original_edges: self.edges.clone(),
        }
    }

    /// All nonempty 2-regular subgraphs (disjoint unions of cycles), in
    /// lexicographic order of their edge sets. Depth-first over the sorted
    /// edge list: an edge is never taken at a vertex of degree 2, and a
    /// branch dies as soon as some vertex of degree 1 has no remaining
    /// incident edge to complete it.
    pub fn enumerate_two_regular(&self) -> Vec<TwoRegularSubgraph> {
        let m = self.m();
        let mut last_incident = vec![usize::MAX; self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            last_incident[u] = i;
            last_incident[v] = i;
        }
        let mut out = Vec::new();
        let mut deg = vec![0usize; self.n];
        let mut chosen: Vec<usize> = Vec::new();
        self.two_regular_rec(0, m, &last_incident, &mut deg, &mut chosen, &mut out);
        out
    }

    fn two_regular_rec(
        &self,
        i: usize,
        m: usize,
        last_incident: &[usize],
        deg: &mut Vec<usize>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<TwoRegularSubgraph>,
    ) {
        if deg
            .iter()
            .enumerate()
            .any(|(v, &d)| d == 1 && (last_incident[v] == usize::MAX || last_incident[v] < i))
        {
            return;
        }
        if i == m {
            if !chosen.is_empty() {
                let edges: Vec<(usize, usize)> = chosen.iter().map(|&e| self.edges[e]).collect();
                let omega = count_components(self.n, &edges);
                out.push(TwoRegularSubgraph { edges, omega });
            }
            return;
        }
        let (u, v) = self.edges[i];
        if deg[u] < 2 && deg[v] < 2 {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push(i);
            self.two_regular_rec(i + 1, m, last_incident, deg, chosen, out);
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        self.two_regular_rec(i + 1, m, last_incident, deg, chosen, out);
    }
}

/// Number of connected components of the edge-induced subgraph (touched
/// vertices only).
fn count_components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut touched = vec![false; n];
    let mut comps = 0;
    for &(u, v) in edges {
        for w in [u, v] {
            if !touched[w] {
                touched[w] = true;
                comps += 1;
            }
        }
        let ru = find(&mut parent, u);
        let rv = find(&mut parent, v);
        if ru != rv {
            parent[ru] = rv;
            comps -= 1;
        }
    }
    comps
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Tree,
    Unicyclic,
    Other,
}

/// Partition of the vertex set into connected components, classified by
/// comparing edge and vertex counts.
#[derive(Debug, Clone)]
pub struct ComponentReport {
    pub components: Vec<Vec<usize>>,
    pub kinds: Vec<ComponentKind>,
}

impl ComponentReport {
    pub fn count_of(&self, kind: ComponentKind) -> usize {
        self.kinds.iter().filter(|k| **k == kind).count()
    }
}

/// A nonempty disjoint union of cycles inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoRegularSubgraph {
    pub edges: Vec<(usize, usize)>,
    /// Number of cycles (= components).
    pub omega: usize,
}

impl TwoRegularSubgraph {
    /// Vertices touched by the cycle union, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// The subdivision graph together with the edge <-> new-vertex
/// correspondence.
#[derive(Debug, Clone)]
pub struct SubdivisionGraph {
    graph: Graph,
    original_n: usize,
    original_edges: Vec<(usize, usize)>,
}

impl SubdivisionGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn original_n(&self) -> usize {
        self.original_n
    }

    pub fn original_m(&self) -> usize {
        self.original_edges.len()
    }

    /// New vertex subdividing the original edge `{u, v}`.
    pub fn edge_vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.original_edges
            .binary_search(&e)
            .ok()
            .map(|i| self.original_n + i)
    }

    /// Original edge carried by an edge vertex.
    pub fn original_edge_of(&self, vertex: usize) -> Option<(usize, usize)> {
        vertex
            .checked_sub(self.original_n)
            .and_then(|i| self.original_edges.get(i).copied())
    }
}
