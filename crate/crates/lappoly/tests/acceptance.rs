//! Acceptance suite: one test per criterion, each printing a pass line
//! with the swept volume. Exact identities are compared coefficient by
//! coefficient; root comparisons use the 1e-7 tolerance on top of 1e-10
//! isolation widths.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

mod common;

use std::collections::{HashMap, HashSet};

use num::bigint::BigInt;
use num::traits::One;
use rayon::prelude::*;

use lappoly::analysis::{degree_majorization_check, grone_sequence_check, vertex_interlacing_check};
use lappoly::generate;
use lappoly::graph::Graph;
use lappoly::identities::{
    adjacency_duality, degree_sum_bound_check, forest_characterization, min_root_bound_check,
    root_interval_check, signless_laplacian_duality, spectral_bound_check, DualityDirection,
};
use lappoly::matching::{
    beta_via_subdivision, laplacian_matching_polynomial, match_counts, principal_beta,
};
use lappoly::poly::IntPoly;
use lappoly::roots::{real_roots, RootList};
use lappoly::spectra::{char_poly, signless_laplacian, subdivision_spectra_check};
use lappoly::tu;
use lappoly::weighted::{weighted_beta, WeightedGraph};

use common::*;

const TOL: f64 = 1e-7;
const ROOT_TOL: f64 = 1e-10;

fn p(desc: &[i64]) -> IntPoly {
    IntPoly::from_descending(desc)
}

fn isolate_all(polys: HashSet<IntPoly>) -> HashMap<IntPoly, RootList> {
    polys
        .into_par_iter()
        .map(|p| {
            let roots = real_roots(&p, ROOT_TOL).unwrap_or_else(|e| {
                panic!("real-rootedness violated for {p}: {e}");
            });
            (p, roots)
        })
        .collect()
}

/// Criterion 1: the subdivision identity holds exactly for every graph on
/// at most 5 vertices and every vertex subset W.
#[test]
fn acceptance_01_subdivision_identity() {
    let mut pairs_checked = 0u64;
    for n in 0..=5usize {
        let pair_list = pairs(n);
        let count: u64 = (0u64..1 << pair_list.len())
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask, &pair_list);
                for wmask in 0u64..1 << n {
                    let w: Vec<usize> = (0..n).filter(|&v| wmask >> v & 1 == 1).collect();
                    let keep: Vec<usize> = (0..n).filter(|&v| wmask >> v & 1 == 0).collect();
                    let via = beta_via_subdivision(&g, &w).unwrap();
                    let direct = principal_beta(&g, &keep).unwrap();
                    let residual = &via - &direct;
                    assert!(
                        residual.is_zero(),
                        "criterion 1 failed: n={n}, mask={mask}, W={w:?}: {via} vs {direct}"
                    );
                    // the spectra analogue rides along on the same sweep
                    assert!(
                        subdivision_spectra_check(&g, &w).unwrap().pass,
                        "spectra side failed: n={n}, mask={mask}, W={w:?}"
                    );
                }
                1u64 << n
            })
            .sum();
        pairs_checked += count;
    }
    println!("acceptance 01 subdivision-identity: PASS ({pairs_checked} (G, W) pairs, zero residuals)");
}

/// Criterion 2: for every graph on at most 6 vertices the coefficient
/// a_r of the Laplacian matching polynomial, the r-matching count of the
/// subdivision graph, and the TU-subgraph weight sum agree exactly.
#[test]
fn acceptance_02_coefficient_triple_agreement() {
    let mut graphs_checked = 0u64;
    for n in 0..=6usize {
        let pair_list = pairs(n);
        let count: u64 = (0u64..1 << pair_list.len())
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask, &pair_list);
                let beta = laplacian_matching_polynomial(&g);
                let s = g.subdivision();
                let counts = match_counts(s.graph());
                let sums = tu::tu_weight_sums(&g);
                let top = n.max((n + g.m()) / 2);
                for r in 0..=top {
                    let a_r = if r <= n {
                        let c = beta.coeff(n - r);
                        if r % 2 == 0 {
                            c
                        } else {
                            -c
                        }
                    } else {
                        BigInt::from(0)
                    };
                    let sub = counts.get(r);
                    let tuw = sums.get(r).cloned().unwrap_or_default();
                    assert!(
                        a_r == sub && sub == tuw,
                        "criterion 2 failed: n={n}, mask={mask}, r={r}: beta {a_r}, subdivision {sub}, tu {tuw}"
                    );
                }
                1
            })
            .sum();
        graphs_checked += count;
    }
    println!("acceptance 02 coefficient-triple-agreement: PASS ({graphs_checked} graphs, all r)");
}

/// Criterion 3: every fiber of the matching projection has size equal to
/// the TU weight, for every graph on at most 5 vertices and every r.
#[test]
fn acceptance_03_fiber_law() {
    let mut fibers_checked = 0u64;
    for n in 0..=5usize {
        let pair_list = pairs(n);
        let count: u64 = (0u64..1 << pair_list.len())
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask, &pair_list);
                let mut local = 0u64;
                for rep in tu::fiber_size_check_all(&g) {
                    assert!(
                        rep.pass,
                        "criterion 3 failed: n={n}, mask={mask}, r={}",
                        rep.r
                    );
                    local += rep.fibers.len() as u64;
                }
                local
            })
            .sum();
        fibers_checked += count;
    }
    println!("acceptance 03 fiber-law: PASS ({fibers_checked} fibers, sizes equal weights)");
}

/// Criterion 4: exact maximum-matching counts of subdivision graphs for
/// 100 random trees and 100 random unicyclic graphs on up to 12 vertices;
/// trees additionally have the unique perfect matching after deleting any
/// vertex.
#[test]
fn acceptance_04_tree_unicyclic_counts() {
    (0..100u64).into_par_iter().for_each(|seed| {
        let n = 2 + (seed as usize % 11);
        let t = generate::random_tree(n, seed).unwrap();
        let rep = tu::tree_unicyclic_max_matching_check(&t).unwrap();
        assert_eq!(rep.count, BigInt::from(n), "tree seed {seed}");
        assert!(
            rep.deleted_vertex_counts.iter().all(|c| c == &BigInt::one()),
            "unique perfect matching failed for tree seed {seed}"
        );
        assert!(rep.pass);
    });
    (0..100u64).into_par_iter().for_each(|seed| {
        let n = 3 + (seed as usize % 10);
        let u = generate::random_unicyclic(n, 1000 + seed).unwrap();
        let rep = tu::tree_unicyclic_max_matching_check(&u).unwrap();
        assert_eq!(rep.count, BigInt::from(2), "unicyclic seed {seed}");
        assert!(rep.pass);
    });
    println!("acceptance 04 tree-unicyclic-counts: PASS (100 trees + 100 unicyclic, n <= 12, exact)");
}

/// Criterion 5: both duality identities, in both directions, exact on all
/// connected graphs up to 6 vertices and 300 random graphs up to 9, with
/// the concrete cycle anchors.
#[test]
fn acceptance_05_dualities() {
    // anchors
    let c3 = generate::cycle(3).unwrap();
    let phi_q_c3 = char_poly(&signless_laplacian(&c3));
    assert_eq!(phi_q_c3, p(&[1, -6, 9, -4]));
    assert_eq!(
        phi_q_c3,
        &laplacian_matching_polynomial(&c3) - &IntPoly::constant(2)
    );
    let c4 = generate::cycle(4).unwrap();
    assert_eq!(
        char_poly(&signless_laplacian(&c4)),
        &laplacian_matching_polynomial(&c4) - &IntPoly::constant(2)
    );

    let directions = [
        DualityDirection::PhiFromMatching,
        DualityDirection::MatchingFromPhi,
    ];
    let check = |g: &Graph, label: &str| {
        for dir in directions {
            let q = signless_laplacian_duality(g, dir);
            assert!(q.pass, "q-duality failed ({label}): residual {}", q.residual);
            let a = adjacency_duality(g, dir);
            assert!(a.pass, "a-duality failed ({label}): residual {}", a.residual);
        }
    };

    let mut connected_count = 0u64;
    for n in 1..=6usize {
        let pair_list = pairs(n);
        let count: u64 = (0u64..1 << pair_list.len())
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask, &pair_list);
                if !g.is_connected() {
                    return 0;
                }
                check(&g, &format!("n={n}, mask={mask}"));
                1
            })
            .sum();
        connected_count += count;
    }

    (0..300u64).into_par_iter().for_each(|seed| {
        let n = 4 + (seed as usize % 6);
        let prob = [0.3, 0.5, 0.7][seed as usize % 3];
        let g = generate::random_graph(n, prob, 2000 + seed).unwrap();
        check(&g, &format!("random seed {seed}"));
    });

    println!(
        "acceptance 05 dualities: PASS ({connected_count} connected graphs n <= 6 + 300 random n <= 9, both directions exact)"
    );
}

/// Criterion 6: the forest characterization biconditional holds on every
/// graph with at most 6 vertices.
#[test]
fn acceptance_06_forest_characterization() {
    let mut graphs_checked = 0u64;
    for n in 0..=6usize {
        let pair_list = pairs(n);
        let count: u64 = (0u64..1 << pair_list.len())
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask, &pair_list);
                let rep = forest_characterization(&g);
                assert!(
                    rep.pass,
                    "criterion 6 failed: n={n}, mask={mask}: forest={}, equal={}",
                    rep.is_forest, rep.polynomials_equal
                );
                1
            })
            .sum();
        graphs_checked += count;
    }
    println!("acceptance 06 forest-characterization: PASS ({graphs_checked} graphs, zero exceptions)");
}

/// Criterion 7: vertex interlacing for every (G, H, v) with n <= 5, with
/// the strict largest-root clause whenever the induced subgraph on H is
/// connected. Root isolation is cached per distinct polynomial.
#[test]
fn acceptance_07_interlacing() {
    let mut checked = 0u64;
    for n in 1..=5usize {
        let pair_list = pairs(n);
        let graphs: Vec<Graph> = (0u64..1 << pair_list.len())
            .map(|mask| graph_from_mask(n, mask, &pair_list))
            .collect();

        // principal polynomials for every (graph, subset), then one root
        // isolation per distinct polynomial
        let per_graph: Vec<Vec<IntPoly>> = graphs
            .par_iter()
            .map(|g| {
                (0u64..1 << n)
                    .map(|hmask| {
                        let h: Vec<usize> = (0..n).filter(|&v| hmask >> v & 1 == 1).collect();
                        principal_beta(g, &h).unwrap()
                    })
                    .collect()
            })
            .collect();
        let cache = isolate_all(per_graph.iter().flatten().cloned().collect());

        let count: u64 = graphs
            .par_iter()
            .zip(&per_graph)
            .map(|(g, polys)| {
                let mut local = 0u64;
                for hmask in 1u64..1 << n {
                    let h: Vec<usize> = (0..n).filter(|&v| hmask >> v & 1 == 1).collect();
                    let roots_h = &cache[&polys[hmask as usize]];
                    let dropped: Vec<usize> =
                        (0..n).filter(|&v| hmask >> v & 1 == 0).collect();
                    let (induced, _) = g.induced_delete(&dropped).unwrap();
                    let connected = induced.is_connected();
                    for &v in &h {
                        let sub = hmask & !(1 << v);
                        let roots_hv = &cache[&polys[sub as usize]];
                        assert!(
                            lappoly::analysis::interlaces(roots_hv, roots_h, TOL).unwrap(),
                            "criterion 7 interlacing failed: {:?}, H={h:?}, v={v}",
                            g.edges()
                        );
                        if connected {
                            assert_eq!(
                                roots_h.max_multiplicity(),
                                Some(1),
                                "largest-root multiplicity failed: {:?}, H={h:?}",
                                g.edges()
                            );
                            if let (Some(top), Some(second)) = (roots_h.max(), roots_hv.max()) {
                                assert!(
                                    top > second + TOL,
                                    "strict max gap failed: {:?}, H={h:?}, v={v}",
                                    g.edges()
                                );
                            }
                        }
                        local += 1;
                    }
                }
                local
            })
            .sum();
        checked += count;
    }

    // the library-level checker agrees on a sample
    let g = generate::cycle(5).unwrap();
    for v in 0..5 {
        assert!(vertex_interlacing_check(&g, &[0, 1, 2, 3, 4], v, TOL)
            .unwrap()
            .pass);
    }
    println!("acceptance 07 interlacing: PASS ({checked} (G, H, v) triples, tol {TOL})");
}

/// Criterion 8: the zero sequence of the Laplacian matching polynomial
/// majorizes the degree sequence (all graphs n <= 6 and 500 random n <= 9,
/// exact total), and the shifted-degree majorization holds exactly for
/// trees (all trees n <= 8, 100 connected non-trees with min degree 1).
#[test]
fn acceptance_08_majorization_and_grone() {
    // all graphs up to 6 vertices, root isolation cached per polynomial
    let mut graphs_checked = 0u64;
    for n in 1..=6usize {
        let pair_list = pairs(n);
        let items: Vec<(IntPoly, Vec<usize>, usize)> = (0u64..1 << pair_list.len())
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask, &pair_list);
                (
                    laplacian_matching_polynomial(&g),
                    g.degree_sequence(),
                    g.m(),
                )
            })
            .collect();
        let cache = isolate_all(items.iter().map(|(b, _, _)| b.clone()).collect());
        items.par_iter().for_each(|(beta, degrees, m)| {
            let roots = &cache[beta];
            let seq: Vec<f64> = degrees.iter().map(|&d| d as f64).collect();
            let verdict = lappoly::analysis::majorizes(&roots.expanded(), &seq, TOL).unwrap();
            assert!(verdict.weak, "criterion 8 prefix failed: beta {beta}");
            assert_eq!(
                -beta.coeff(n - 1),
                BigInt::from(2 * m),
                "criterion 8 exact total failed: beta {beta}"
            );
        });
        graphs_checked += items.len() as u64;
    }

    // 500 random graphs on up to 9 vertices
    (0..500u64).into_par_iter().for_each(|seed| {
        let n = 4 + (seed as usize % 6);
        let prob = [0.3, 0.5, 0.7][seed as usize % 3];
        let g = generate::random_graph(n, prob, 3000 + seed).unwrap();
        let rep = degree_majorization_check(&g, TOL, false).unwrap();
        assert!(rep.pass, "criterion 8 random failed: seed {seed}");
        assert!(rep.total_exact);
    });

    // every tree on up to 8 vertices, deduplicated by the data the check
    // depends on (degree sequence and polynomial)
    let mut tree_classes = 0u64;
    for n in 2..=8usize {
        let codes: u64 = if n <= 2 { 1 } else { (n as u64).pow(n as u32 - 2) };
        let mut class_reps: HashMap<(Vec<usize>, IntPoly), Graph> = HashMap::new();
        let keyed: Vec<((Vec<usize>, IntPoly), Graph)> = (0..codes)
            .into_par_iter()
            .map(|code| {
                let t = tree_from_code(n, code);
                let key = (t.degree_sequence(), laplacian_matching_polynomial(&t));
                (key, t)
            })
            .collect();
        for (key, t) in keyed {
            class_reps.entry(key).or_insert(t);
        }
        tree_classes += class_reps.len() as u64;
        class_reps.par_iter().for_each(|(_, t)| {
            let rep = grone_sequence_check(t, TOL).unwrap();
            assert!(
                rep.pass && rep.majorizes && rep.is_tree,
                "criterion 8 grone failed on tree {:?}",
                t.edges()
            );
        });
    }

    // 100 connected non-trees with minimum degree 1: majorization of the
    // shifted sequence must fail
    (0..100u64).into_par_iter().for_each(|seed| {
        let base_n = 3 + (seed as usize % 9);
        let core = if seed % 3 == 0 {
            // denser core: random connected graph with at least one cycle
            let mut s = seed;
            loop {
                let g = generate::random_graph(base_n, 0.6, 4000 + s).unwrap();
                if g.is_connected() && g.m() >= g.n() {
                    break g;
                }
                s += 101;
            }
        } else {
            generate::random_unicyclic(base_n, 4000 + seed).unwrap()
        };
        // attach a pendant vertex so the minimum degree is 1
        let mut edges = core.edges().to_vec();
        edges.push((0, core.n()));
        let g = Graph::new(core.n() + 1, edges).unwrap();
        assert!(g.is_connected() && g.min_degree() == 1 && !g.is_tree());
        let rep = grone_sequence_check(&g, TOL).unwrap();
        assert!(
            rep.pass && !rep.majorizes && !rep.is_tree,
            "criterion 8 grone non-tree failed: seed {seed}, edges {:?}",
            g.edges()
        );
    });

    println!(
        "acceptance 08 majorization-and-grone: PASS ({graphs_checked} graphs n <= 6 + 500 random n <= 9; {tree_classes} tree classes n <= 8 + 100 non-trees)"
    );
}

fn tree_from_code(n: usize, code: u64) -> Graph {
    if n <= 2 {
        return generate::path(n).unwrap();
    }
    let mut seq = Vec::with_capacity(n - 2);
    let mut c = code;
    for _ in 0..n - 2 {
        seq.push((c % n as u64) as usize);
        c /= n as u64;
    }
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    Graph::new(n, edges).unwrap()
}

/// Criterion 9: the three largest/smallest-root bounds and the root
/// interval, with equality/strictness flags matching the structural
/// predicates, on every connected graph with up to 7 vertices.
#[test]
fn acceptance_09_root_bounds() {
    struct PerGraph {
        beta: IntPoly,
        phi_q: IntPoly,
        n: usize,
        min_degree: usize,
        max_degree: usize,
        max_edge_degree_sum: Option<usize>,
        is_tree: bool,
        is_star: bool,
    }

    let mut connected_count = 0u64;
    let mut beta_cache: HashMap<IntPoly, RootList> = HashMap::new();
    let mut q_cache: HashMap<IntPoly, RootList> = HashMap::new();

    for n in 1..=7usize {
        let pair_list = pairs(n);
        let total = 1u64 << pair_list.len();
        let chunk = 1u64 << 16;
        let mut start = 0u64;
        while start < total {
            let end = (start + chunk).min(total);
            let graphs: Vec<PerGraph> = (start..end)
                .into_par_iter()
                .filter_map(|mask| {
                    let g = graph_from_mask(n, mask, &pair_list);
                    if !g.is_connected() {
                        return None;
                    }
                    Some(PerGraph {
                        beta: laplacian_matching_polynomial(&g),
                        phi_q: char_poly(&signless_laplacian(&g)),
                        n,
                        min_degree: g.min_degree(),
                        max_degree: g.max_degree(),
                        max_edge_degree_sum: g
                            .edges()
                            .iter()
                            .map(|&(u, v)| g.degree(u) + g.degree(v))
                            .max(),
                        is_tree: g.is_tree(),
                        is_star: g.is_star(),
                    })
                })
                .collect();

            let fresh_beta: HashSet<IntPoly> = graphs
                .iter()
                .map(|pg| pg.beta.clone())
                .filter(|p| !beta_cache.contains_key(p))
                .collect();
            beta_cache.extend(isolate_all(fresh_beta));
            let fresh_q: HashSet<IntPoly> = graphs
                .iter()
                .map(|pg| pg.phi_q.clone())
                .filter(|p| !q_cache.contains_key(p))
                .collect();
            q_cache.extend(isolate_all(fresh_q));

            graphs.par_iter().for_each(|pg| {
                let roots = &beta_cache[&pg.beta];
                let min = roots.min().unwrap();
                let max = roots.max().unwrap();

                // lambda_min <= delta, equality iff n = 1
                let delta = pg.min_degree as f64;
                assert!(min <= delta + TOL, "min-root bound failed: {}", pg.beta);
                assert_eq!(
                    (min - delta).abs() <= TOL,
                    pg.n == 1,
                    "min-root equality flag failed: {}",
                    pg.beta
                );

                // lambda_max <= rho(Q), equality iff tree, strict by more
                // than the tolerance otherwise
                let rho = q_cache[&pg.phi_q].max().unwrap();
                assert!(max <= rho + TOL, "spectral bound failed: {}", pg.beta);
                if pg.is_tree {
                    assert!(
                        (max - rho).abs() <= TOL,
                        "tree equality failed: {}",
                        pg.beta
                    );
                } else {
                    assert!(
                        max < rho - TOL,
                        "non-tree strictness failed: {} (max {max}, rho {rho})",
                        pg.beta
                    );
                }

                // lambda_max <= max edge degree sum, equality iff star
                if let Some(ds) = pg.max_edge_degree_sum {
                    let ds = ds as f64;
                    assert!(max <= ds + TOL, "degree-sum bound failed: {}", pg.beta);
                    assert_eq!(
                        (max - ds).abs() <= TOL,
                        pg.is_star,
                        "degree-sum equality flag failed: {}",
                        pg.beta
                    );
                }

                // root interval [0, Delta + 2 sqrt(Delta - 1))
                if pg.max_degree >= 2 {
                    let bound =
                        pg.max_degree as f64 + 2.0 * ((pg.max_degree - 1) as f64).sqrt();
                    assert!(min >= -TOL, "interval lower end failed: {}", pg.beta);
                    assert!(
                        max < bound,
                        "interval upper end failed: {} (max {max}, bound {bound})",
                        pg.beta
                    );
                }
            });

            connected_count += graphs.len() as u64;
            start = end;
        }
    }

    // the library-level checkers agree on a sample
    for g in [
        generate::cycle(5).unwrap(),
        generate::star(4).unwrap(),
        generate::complete(5).unwrap(),
        generate::path(7).unwrap(),
    ] {
        assert!(min_root_bound_check(&g, TOL).unwrap().pass);
        assert!(spectral_bound_check(&g, TOL).unwrap().pass);
        assert!(degree_sum_bound_check(&g, TOL).unwrap().pass);
        if g.max_degree() >= 2 {
            assert!(root_interval_check(&g, TOL).unwrap().pass);
        }
    }

    println!(
        "acceptance 09 root-bounds: PASS ({connected_count} connected graphs n <= 7, flags exact, {} beta / {} phiQ isolations)",
        beta_cache.len(),
        q_cache.len()
    );
}

/// Criterion 10: the weighted polynomial reduces to the plain one under
/// unit weights on every graph with at most 6 vertices, and the weighted
/// K2 anchor comes out exactly.
#[test]
fn acceptance_10_weighted_reduction() {
    let mut graphs_checked = 0u64;
    for n in 0..=6usize {
        let pair_list = pairs(n);
        let count: u64 = (0u64..1 << pair_list.len())
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask, &pair_list);
                let beta = laplacian_matching_polynomial(&g).to_rational();
                let weighted = weighted_beta(&WeightedGraph::unit(g));
                assert_eq!(weighted, beta, "criterion 10 failed: n={n}, mask={mask}");
                1
            })
            .sum();
        graphs_checked += count;
    }

    let k2 = generate::complete(2).unwrap();
    let wg = WeightedGraph::new(
        k2,
        vec![num::rational::BigRational::new(
            BigInt::from(3),
            BigInt::from(2),
        )],
    )
    .unwrap();
    assert_eq!(
        weighted_beta(&wg).decimal_coefficients_desc(),
        vec!["1", "-3", "0"]
    );

    println!("acceptance 10 weighted-reduction: PASS ({graphs_checked} graphs, unit weights exact; K2 anchor x^2 - 3x)");
}
