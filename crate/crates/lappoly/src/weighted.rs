//! Edge-weighted Laplacian matching polynomial over positive rationals.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::for_each_matching;
use crate::poly::RatPoly;

/// A graph with a positive rational weight on every edge. The vertex
/// weight is the sum of incident edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<BigRational>,
}

impl WeightedGraph {
    /// Weights are given in the order of the sorted edge list.
    pub fn new(graph: Graph, weights: Vec<BigRational>) -> Result<Self> {
        if weights.len() != graph.m() {
            return Err(Error::BadParameter(format!(
                "{} weights for {} edges",
                weights.len(),
                graph.m()
            )));
        }
        for (w, &(u, v)) in weights.iter().zip(graph.edges()) {
            if !w.is_positive() {
                return Err(Error::NonpositiveWeight(u, v));
            }
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// Every edge gets weight 1, reducing the weighted polynomial to the
    /// plain Laplacian matching polynomial.
    pub fn unit(graph: Graph) -> Self {
        let weights = vec![BigRational::one(); graph.m()];
        WeightedGraph { graph, weights }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn edge_weight(&self, index: usize) -> &BigRational {
        &self.weights[index]
    }

    /// Sum of the weights of the edges incident to `v`.
    pub fn vertex_weight(&self, v: usize) -> BigRational {
        self.graph
            .edges()
            .iter()
            .zip(&self.weights)
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, w)| w.clone())
            .sum()
    }
}

/// Weighted Laplacian matching polynomial: each matching M contributes
/// `(-1)^|M|` times the squared product of its edge weights times the
/// product of `(x - w(v))` over unmatched vertices. Exact rational
/// arithmetic throughout.
pub fn weighted_beta(wg: &WeightedGraph) -> RatPoly {
    let g = wg.graph();
    let vertex_weights: Vec<BigRational> = (0..g.n()).map(|v| wg.vertex_weight(v)).collect();
    let factors: Vec<RatPoly> = vertex_weights.iter().map(RatPoly::x_minus).collect();

    let mut sum = RatPoly::zero();
    for_each_matching(g, |chosen, used| {
        let mut scalar = BigRational::one();
        for &e in chosen {
            let w = wg.edge_weight(e);
            scalar *= w * w;
        }
        if chosen.len() % 2 == 1 {
            scalar = -scalar;
        }
        let mut term = RatPoly::constant(scalar);
        for (v, factor) in factors.iter().enumerate() {
            if used & (1 << v) == 0 {
                term = &term * factor;
            }
        }
        sum = &sum + &term;
    });
    sum
}

/// Parse the weighted edge-list format: first nonempty line is the vertex
/// count, then lines `u v w` with `w` a positive rational `p/q` or integer
/// (missing weights default to 1). `#`-lines are comments.
pub fn parse_weighted_edge_list(text: &str) -> Result<WeightedGraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::MalformedEdgeList("missing vertex-count line".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::MalformedEdgeList(format!("bad vertex count {header:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 2 || tokens.len() > 3 {
            return Err(Error::MalformedEdgeList(format!(
                "expected \"u v [w]\", found {line:?}"
            )));
        }
        let u: usize = tokens[0]
            .parse()
            .map_err(|_| Error::MalformedEdgeList(format!("bad endpoint {:?}", tokens[0])))?;
        let v: usize = tokens[1]
            .parse()
            .map_err(|_| Error::MalformedEdgeList(format!("bad endpoint {:?}", tokens[1])))?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        for x in [u, v] {
            if x >= n {
                return Err(Error::EndpointOutOfRange { vertex: x, n });
            }
        }
        let w = match tokens.get(2) {
            None => BigRational::one(),
            Some(t) => parse_rational(t)
                .ok_or_else(|| Error::MalformedEdgeList(format!("bad weight {t:?}")))?,
        };
        if !w.is_positive() {
            return Err(Error::NonpositiveWeight(u.min(v), u.max(v)));
        }
        edges.push(((u.min(v), u.max(v)), w));
    }
    // weights must follow the sorted edge order used by Graph
    edges.sort_by_key(|&(e, _)| e);
    if let Some(w) = edges.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::DuplicateEdge(w[0].0 .0, w[0].0 .1));
    }
    let graph = Graph::new(n, edges.iter().map(|&(e, _)| e))?;
    WeightedGraph::new(graph, edges.into_iter().map(|(_, w)| w).collect())
}

fn parse_rational(t: &str) -> Option<BigRational> {
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.parse().ok()?;
        let q: BigInt = q.parse().ok()?;
        if q.is_zero() {
            return None;
        }
        Some(BigRational::new(p, q))
    } else {
        let p: BigInt = t.parse().ok()?;
        Some(BigRational::from(p))
    }
}
