//! Deterministic graph generators: canonical labeled families and seeded
//! random graphs.
//!
//! Random generation is reproducible across platforms: a ChaCha8 stream
//! seeded from the 64-bit seed, uniform doubles taken as
//! `(next_u64 >> 11) * 2^-53`, and integers in `[0, n)` as `next_u64 % n`.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path on `n >= 1` vertices (`n = 1` is a single vertex).
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameter("path needs n >= 1".into()));
    }
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// Star K_{1,k} with `k >= 1` leaves; vertex 0 is the center.
pub fn star(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::BadParameter("star needs k >= 1 leaves".into()));
    }
    Graph::new(k + 1, (1..=k).map(|v| (0, v)))
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameter("complete needs n >= 1".into()));
    }
    Graph::new(n, all_pairs(n))
}

/// Complete bipartite graph with parts of size `a, b >= 1`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::BadParameter(
            "complete_bipartite needs both part sizes >= 1".into(),
        ));
    }
    Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Parse a family spec of the form `name:params`, e.g. `cycle:5` or
/// `complete_bipartite:2,3`.
pub fn family_from_spec(spec: &str) -> Result<Graph> {
    let (name, params) = spec
        .split_once(':')
        .ok_or_else(|| Error::BadParameter(format!("family spec {spec:?} needs name:params")))?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::BadParameter(format!("bad family parameter {p:?}")))
        })
        .collect::<Result<_>>()?;
    let one = |f: fn(usize) -> Result<Graph>| {
        if nums.len() == 1 {
            f(nums[0])
        } else {
            Err(Error::BadParameter(format!(
                "family {name:?} takes one parameter"
            )))
        }
    };
    match name {
        "path" => one(path),
        "cycle" => one(cycle),
        "star" => one(star),
        "complete" => one(complete),
        "complete_bipartite" => {
            if nums.len() == 2 {
                complete_bipartite(nums[0], nums[1])
            } else {
                Err(Error::BadParameter(
                    "complete_bipartite takes two parameters".into(),
                ))
            }
        }
        _ => Err(Error::BadParameter(format!("unknown family {name:?}"))),
    }
}

/// G(n, p): each pair independently with probability `p`, deterministic in
/// the seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = all_pairs(n)
        .filter(|_| unit_f64(&mut rng) < p)
        .collect();
    Graph::new(n, edges)
}

/// Uniform random labeled tree on `n >= 1` vertices, deterministic in the
/// seed (uniform over sequence encodings of labeled trees).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameter("random_tree needs n >= 1".into()));
    }
    if n == 1 {
        return Graph::new(1, []);
    }
    if n == 2 {
        return Graph::new(2, [(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| below(&mut rng, n)).collect();
    Ok(tree_from_sequence(n, &seq))
}

/// Random connected unicyclic graph on `n >= 3` vertices: a random tree
/// plus one random non-tree edge.
pub fn random_unicyclic(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter("random_unicyclic needs n >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| below(&mut rng, n)).collect();
    let tree = tree_from_sequence(n, &seq);
    loop {
        let u = below(&mut rng, n);
        let v = below(&mut rng, n);
        if u != v && !tree.has_edge(u, v) {
            let mut edges = tree.edges().to_vec();
            edges.push((u, v));
            return Graph::new(n, edges);
        }
    }
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn below(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// Decode a length n-2 sequence over [0, n) into a labeled tree.
fn tree_from_sequence(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    Graph::new(n, edges).expect("sequence decoding yields a valid tree")
}
