//! Shared brute-force oracles and sweep helpers. Everything here is
//! deliberately independent of the library's own algorithms: plain subset
//! filters, breadth-first searches, and Laplace expansions.

#![allow(dead_code)]

use num::bigint::BigInt;
use num::traits::{One, Zero};

use lappoly::graph::Graph;
use lappoly::poly::IntPoly;
use lappoly::spectra::IntMatrix;

/// All vertex pairs of K_n in lexicographic order; bit `i` of a mask picks
/// `pairs(n)[i]`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, mask: u64, pair_list: &[(usize, usize)]) -> Graph {
    let edges = pair_list
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).expect("mask subsets of K_n are valid graphs")
}

/// Every labeled graph on `n` vertices, as edge subsets of K_n.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pair_list = pairs(n);
    (0u64..1 << pair_list.len())
        .map(|mask| graph_from_mask(n, mask, &pair_list))
        .collect()
}

/// Subsets of the edge set of `g`, as index vectors.
pub fn edge_subsets(g: &Graph) -> impl Iterator<Item = Vec<usize>> + '_ {
    let m = g.m();
    (0u64..1 << m).map(move |mask| (0..m).filter(|&i| mask >> i & 1 == 1).collect())
}

fn is_matching(g: &Graph, subset: &[usize]) -> bool {
    let mut used = vec![false; g.n()];
    for &i in subset {
        let (u, v) = g.edges()[i];
        if used[u] || used[v] {
            return false;
        }
        used[u] = true;
        used[v] = true;
    }
    true
}

/// r-matching counts by filtering every edge subset.
pub fn brute_match_counts(g: &Graph) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); g.n() / 2 + 1];
    for subset in edge_subsets(g) {
        if is_matching(g, &subset) {
            counts[subset.len()] += 1;
        }
    }
    counts
}

/// Connected components of an edge subset (touched vertices only),
/// returned as (vertex count, edge count) per component.
pub fn component_shapes(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj = vec![Vec::new(); n];
    let mut touched = vec![false; n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
        touched[u] = true;
        touched[v] = true;
    }
    let mut seen = vec![false; n];
    let mut shapes = Vec::new();
    for start in 0..n {
        if !touched[start] || seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut vs = 0usize;
        let mut deg_sum = 0usize;
        while let Some(v) = stack.pop() {
            vs += 1;
            deg_sum += adj[v].len();
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        shapes.push((vs, deg_sum / 2));
    }
    shapes
}

/// Nonempty edge subsets in which every touched vertex has degree exactly
/// two, by plain filtering.
pub fn brute_two_regular(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for subset in edge_subsets(g) {
        if subset.is_empty() {
            continue;
        }
        let mut deg = vec![0usize; g.n()];
        for &i in &subset {
            let (u, v) = g.edges()[i];
            deg[u] += 1;
            deg[v] += 1;
        }
        if (0..g.n()).all(|v| deg[v] == 0 || deg[v] == 2) {
            out.push(subset.iter().map(|&i| g.edges()[i]).collect());
        }
    }
    out
}

/// Edge subsets of size r whose components are all trees or unicyclic, by
/// plain filtering.
pub fn brute_tu(g: &Graph, r: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for subset in edge_subsets(g) {
        if subset.len() != r {
            continue;
        }
        let edges: Vec<(usize, usize)> = subset.iter().map(|&i| g.edges()[i]).collect();
        if component_shapes(g.n(), &edges)
            .iter()
            .all(|&(v, e)| e <= v)
        {
            out.push(edges);
        }
    }
    out
}

/// TU weight computed from scratch: 2 per unicyclic component, vertex
/// count per tree component.
pub fn brute_tu_weight(n: usize, edges: &[(usize, usize)]) -> BigInt {
    let mut w = BigInt::one();
    for (v, e) in component_shapes(n, edges) {
        if e == v {
            w *= 2;
        } else {
            assert_eq!(e + 1, v, "not a TU-subgraph");
            w *= BigInt::from(v);
        }
    }
    w
}

/// det(xI - M) by Laplace expansion over polynomial entries.
pub fn cofactor_char_poly(m: &IntMatrix) -> IntPoly {
    assert!(m.is_square());
    let n = m.rows();
    let entries: Vec<Vec<IntPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = -&IntPoly::constant(m.get(i, j).clone());
                    if i == j {
                        p = &p + &IntPoly::x();
                    }
                    p
                })
                .collect()
        })
        .collect();
    det_poly(&entries)
}

fn det_poly(a: &[Vec<IntPoly>]) -> IntPoly {
    let n = a.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut det = IntPoly::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPoly>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| a[i][c].clone())
                    .collect()
            })
            .collect();
        let term = &a[0][j] * &det_poly(&minor);
        det = if j % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

/// Independent graph6 decoder: reads the packed upper-triangle bits by
/// direct index arithmetic instead of streaming.
pub fn decode_graph6_independent(text: &str) -> Option<(usize, Vec<(usize, usize)>)> {
    let bytes = text.trim().as_bytes();
    let n = (*bytes.first()? as usize).checked_sub(63)?;
    let data = &bytes[1..];
    let bit = |k: usize| -> Option<bool> {
        let byte = *data.get(k / 6)? as usize - 63;
        Some(byte >> (5 - k % 6) & 1 == 1)
    };
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if bit(v * (v - 1) / 2 + u)? {
                edges.push((u, v));
            }
        }
    }
    Some((n, edges))
}
