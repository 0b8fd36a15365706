//! TU-subgraphs (every component a tree or unicyclic), their weights, and
//! the projection from matchings of the subdivision graph onto them.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::traits::One;

use crate::error::{Error, Result};
use crate::graph::{ComponentKind, Graph, SubdivisionGraph};
use crate::matching::for_each_matching;

/// An edge subset whose edge-induced subgraph has only tree and unicyclic
/// components. The weight is `2^c` times the product of tree orders, where
/// `c` counts the unicyclic components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuSubgraph {
    pub edges: Vec<(usize, usize)>,
    pub component_kinds: Vec<ComponentKind>,
    pub weight: BigInt,
}

/// Union-find over component vertex/edge counts with an undo trail, so the
/// enumeration can backtrack in O(1) per step. No path compression: undo
/// needs parents to stay put.
struct UndoDsu {
    parent: Vec<usize>,
    vertices: Vec<usize>,
    edges: Vec<usize>,
    trail: Vec<TrailEntry>,
}

enum TrailEntry {
    EdgeBump(usize),
    Union { child: usize, parent: usize, parent_edges: usize },
}

impl UndoDsu {
    fn new(n: usize) -> Self {
        UndoDsu {
            parent: (0..n).collect(),
            vertices: vec![1; n],
            edges: vec![0; n],
            trail: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Add an edge if the touched component keeps at most one independent
    /// cycle; returns false (and records nothing) otherwise.
    fn try_add_edge(&mut self, u: usize, v: usize) -> bool {
        let ru = self.find(u);
        let rv = self.find(v);
        if ru == rv {
            if self.edges[ru] + 1 > self.vertices[ru] {
                return false;
            }
            self.edges[ru] += 1;
            self.trail.push(TrailEntry::EdgeBump(ru));
            return true;
        }
        let merged_edges = self.edges[ru] + self.edges[rv] + 1;
        if merged_edges > self.vertices[ru] + self.vertices[rv] {
            return false;
        }
        let (child, parent) = if self.vertices[ru] <= self.vertices[rv] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        self.trail.push(TrailEntry::Union {
            child,
            parent,
            parent_edges: self.edges[parent],
        });
        self.parent[child] = parent;
        self.vertices[parent] += self.vertices[child];
        self.edges[parent] = merged_edges;
        true
    }

    fn checkpoint(&self) -> usize {
        self.trail.len()
    }

    fn rollback(&mut self, to: usize) {
        while self.trail.len() > to {
            match self.trail.pop().unwrap() {
                TrailEntry::EdgeBump(r) => self.edges[r] -= 1,
                TrailEntry::Union {
                    child,
                    parent,
                    parent_edges,
                } => {
                    self.parent[child] = child;
                    self.vertices[parent] -= self.vertices[child];
                    self.edges[parent] = parent_edges;
                }
            }
        }
    }
}

/// Classify the edge-induced subgraph on an edge set: per-component kinds
/// and the TU weight, or an error when some component has more edges than
/// vertices.
fn classify(edges: &[(usize, usize)]) -> Result<(Vec<ComponentKind>, BigInt)> {
    let n = edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let mut dsu = UndoDsu::new(n);
    let mut touched = vec![false; n];
    for &(u, v) in edges {
        touched[u] = true;
        touched[v] = true;
        if !dsu.try_add_edge(u, v) {
            let (ru, rv) = (dsu.find(u), dsu.find(v));
            let (e, nv) = if ru == rv {
                (dsu.edges[ru] + 1, dsu.vertices[ru])
            } else {
                (
                    dsu.edges[ru] + dsu.edges[rv] + 1,
                    dsu.vertices[ru] + dsu.vertices[rv],
                )
            };
            return Err(Error::NotTuSubgraph {
                edges: e,
                vertices: nv,
            });
        }
    }
    let mut kinds = Vec::new();
    let mut weight = BigInt::one();
    for v in 0..n {
        if touched[v] && dsu.find(v) == v {
            let (e, nv) = (dsu.edges[v], dsu.vertices[v]);
            if e + 1 == nv {
                kinds.push(ComponentKind::Tree);
                weight *= BigInt::from(nv);
            } else {
                debug_assert_eq!(e, nv);
                kinds.push(ComponentKind::Unicyclic);
                weight *= BigInt::from(2);
            }
        }
    }
    Ok((kinds, weight))
}

/// Weight of a TU-subgraph given by its edge set.
pub fn tu_weight(edges: &[(usize, usize)]) -> Result<BigInt> {
    classify(edges).map(|(_, w)| w)
}

/// All TU-subgraphs of `g` with exactly `r` edges, in lexicographic order
/// of their edge sets. Depth-first over the sorted edge list with
/// union-find pruning: a branch dies as soon as a component would carry a
/// second independent cycle.
pub fn enumerate_tu(g: &Graph, r: usize) -> Vec<TuSubgraph> {
    let mut out = Vec::new();
    let mut dsu = UndoDsu::new(g.n());
    let mut chosen = Vec::new();
    enumerate_tu_rec(g, 0, r, &mut dsu, &mut chosen, &mut out);
    out
}

fn enumerate_tu_rec(
    g: &Graph,
    i: usize,
    remaining: usize,
    dsu: &mut UndoDsu,
    chosen: &mut Vec<usize>,
    out: &mut Vec<TuSubgraph>,
) {
    if remaining == 0 {
        let edges: Vec<(usize, usize)> = chosen.iter().map(|&e| g.edges()[e]).collect();
        let (component_kinds, weight) =
            classify(&edges).expect("enumeration only visits TU-feasible sets");
        out.push(TuSubgraph {
            edges,
            component_kinds,
            weight,
        });
        return;
    }
    if g.m() - i < remaining {
        return;
    }
    let (u, v) = g.edges()[i];
    let cp = dsu.checkpoint();
    if dsu.try_add_edge(u, v) {
        chosen.push(i);
        enumerate_tu_rec(g, i + 1, remaining - 1, dsu, chosen, out);
        chosen.pop();
        dsu.rollback(cp);
    }
    enumerate_tu_rec(g, i + 1, remaining, dsu, chosen, out);
}

/// Sum of TU weights by size: entry `r` is the sum over all TU-subgraphs
/// with `r` edges. One pruned pass over the subset tree covers every size.
pub fn tu_weight_sums(g: &Graph) -> Vec<BigInt> {
    let cap = g.n().min(g.m());
    let mut sums = vec![BigInt::from(0); cap + 1];
    sums[0] = BigInt::one();
    let mut dsu = UndoDsu::new(g.n());
    let mut chosen = Vec::new();
    weight_sums_rec(g, 0, &mut dsu, &mut chosen, &mut sums);
    sums
}

fn weight_sums_rec(
    g: &Graph,
    i: usize,
    dsu: &mut UndoDsu,
    chosen: &mut Vec<usize>,
    sums: &mut [BigInt],
) {
    if i == g.m() {
        return;
    }
    let (u, v) = g.edges()[i];
    let cp = dsu.checkpoint();
    if dsu.try_add_edge(u, v) {
        chosen.push(i);
        sums[chosen.len()] += current_weight(g, dsu, chosen);
        weight_sums_rec(g, i + 1, dsu, chosen, sums);
        chosen.pop();
        dsu.rollback(cp);
    }
    weight_sums_rec(g, i + 1, dsu, chosen, sums);
}

fn current_weight(g: &Graph, dsu: &UndoDsu, chosen: &[usize]) -> BigInt {
    let mut roots: Vec<usize> = chosen
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.edges()[e];
            [dsu.find(u), dsu.find(v)]
        })
        .collect();
    roots.sort_unstable();
    roots.dedup();
    let mut weight = BigInt::one();
    for r in roots {
        if dsu.edges[r] == dsu.vertices[r] {
            weight *= BigInt::from(2);
        } else {
            weight *= BigInt::from(dsu.vertices[r]);
        }
    }
    weight
}

/// Coefficient `a_r` of the Laplacian matching polynomial as a sum of TU
/// weights.
pub fn coefficient_via_tu(g: &Graph, r: usize) -> BigInt {
    tu_weight_sums(g)
        .get(r)
        .cloned()
        .unwrap_or_else(|| BigInt::from(0))
}

/// Project a matching of the subdivision graph onto the TU-subgraph induced
/// by the original edges its edges came from. Every edge of `S_G` joins an
/// original vertex to an edge vertex, so the original edge is read off the
/// edge-vertex endpoint. The image is always TU; anything else is reported
/// as an internal invariant violation.
pub fn project_matching(
    s: &SubdivisionGraph,
    matching: &[(usize, usize)],
) -> Result<TuSubgraph> {
    let mut used = vec![false; s.graph().n()];
    let mut originals = Vec::with_capacity(matching.len());
    for &(a, b) in matching {
        if !s.graph().has_edge(a, b) {
            return Err(Error::BadParameter(format!(
                "{{{a}, {b}}} is not an edge of the subdivision graph"
            )));
        }
        for x in [a, b] {
            if used[x] {
                return Err(Error::BadParameter(
                    "edge set is not a matching".into(),
                ));
            }
            used[x] = true;
        }
        let ev = a.max(b);
        let original = s
            .original_edge_of(ev)
            .expect("one endpoint of every subdivision edge is an edge vertex");
        originals.push(original);
    }
    originals.sort_unstable();
    let (component_kinds, weight) = classify(&originals).map_err(|e| {
        Error::InternalInvariantViolation(format!(
            "projected matching is not a TU-subgraph: {e}"
        ))
    })?;
    Ok(TuSubgraph {
        edges: originals,
        component_kinds,
        weight,
    })
}

/// One fiber of the projection: a TU-subgraph, the number of r-matchings
/// of `S_G` mapping onto it, and its weight. The two must agree.
#[derive(Debug, Clone)]
pub struct Fiber {
    pub edges: Vec<(usize, usize)>,
    pub size: BigInt,
    pub weight: BigInt,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct FiberReport {
    pub r: usize,
    pub fibers: Vec<Fiber>,
    /// TU-subgraphs with r edges that no matching projects onto (must be
    /// empty).
    pub missing: Vec<Vec<(usize, usize)>>,
    pub pass: bool,
}

/// Group the r-matchings of the subdivision graph by their projection and
/// compare every fiber size with the TU weight, for each r.
pub fn fiber_size_check_all(g: &Graph) -> Vec<FiberReport> {
    let s = g.subdivision();
    let sg = s.graph().clone();
    let mut fibers: BTreeMap<(usize, Vec<(usize, usize)>), BigInt> = BTreeMap::new();
    for_each_matching(&sg, |chosen, _| {
        let mut originals: Vec<(usize, usize)> = chosen
            .iter()
            .map(|&e| {
                let (a, b) = sg.edges()[e];
                s.original_edge_of(a.max(b)).unwrap()
            })
            .collect();
        originals.sort_unstable();
        debug_assert_eq!(originals.len(), chosen.len());
        *fibers
            .entry((chosen.len(), originals))
            .or_insert_with(|| BigInt::from(0)) += 1;
    });

    let max_r = g.n().min(g.m());
    (0..=max_r)
        .map(|r| {
            let mut rows = Vec::new();
            let mut seen = std::collections::BTreeSet::new();
            for ((size_r, edges), count) in fibers.range(&(r, Vec::new())..) {
                if *size_r != r {
                    break;
                }
                let weight = tu_weight(edges)
                    .expect("projection images are TU-subgraphs");
                rows.push(Fiber {
                    edges: edges.clone(),
                    size: count.clone(),
                    weight: weight.clone(),
                    pass: *count == weight,
                });
                seen.insert(edges.clone());
            }
            let missing: Vec<Vec<(usize, usize)>> = enumerate_tu(g, r)
                .into_iter()
                .map(|t| t.edges)
                .filter(|e| !seen.contains(e))
                .collect();
            let pass = rows.iter().all(|f| f.pass) && missing.is_empty();
            FiberReport {
                r,
                fibers: rows,
                missing,
                pass,
            }
        })
        .collect()
}

/// Fibers of the projection for a single matching size.
pub fn fiber_size_check(g: &Graph, r: usize) -> FiberReport {
    fiber_size_check_all(g)
        .into_iter()
        .find(|rep| rep.r == r)
        .unwrap_or(FiberReport {
            r,
            fibers: Vec::new(),
            missing: Vec::new(),
            pass: true,
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TuKind {
    Tree,
    Unicyclic,
}

/// Maximum-matching counts of the subdivision graph of a tree or unicyclic
/// graph, checked against the closed forms: `|V|` for a tree (via the
/// unique perfect matching of `S_T - v` for every v), and 2 for a
/// unicyclic graph.
#[derive(Debug, Clone)]
pub struct MaxMatchingReport {
    pub kind: TuKind,
    pub count: BigInt,
    pub expected: BigInt,
    /// For trees: perfect-matching count of `S_T - v` per vertex, each of
    /// which must be exactly 1.
    pub deleted_vertex_counts: Vec<BigInt>,
    pub pass: bool,
}

pub fn tree_unicyclic_max_matching_check(x: &Graph) -> Result<MaxMatchingReport> {
    if x.n() == 0 || !x.is_connected() {
        return Err(Error::NotTreeOrUnicyclic);
    }
    let kind = if x.m() == x.n() - 1 {
        TuKind::Tree
    } else if x.m() == x.n() {
        TuKind::Unicyclic
    } else {
        return Err(Error::NotTreeOrUnicyclic);
    };
    let s = x.subdivision();
    let count = crate::matching::match_counts(s.graph()).get(x.m());
    let expected = match kind {
        TuKind::Tree => BigInt::from(x.n()),
        TuKind::Unicyclic => BigInt::from(2),
    };
    let mut deleted_vertex_counts = Vec::new();
    let mut pass = count == expected;
    if kind == TuKind::Tree {
        for v in 0..x.n() {
            let (sv, _) = s.graph().induced_delete(&[v])?;
            let pm = crate::matching::match_counts(&sv).get(x.m());
            pass &= pm == BigInt::one();
            deleted_vertex_counts.push(pm);
        }
    }
    Ok(MaxMatchingReport {
        kind,
        count,
        expected,
        deleted_vertex_counts,
        pass,
    })
}
