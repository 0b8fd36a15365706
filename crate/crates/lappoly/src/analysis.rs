//! Interlacing, majorization, and the zero-sequence checks.

use num::bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{laplacian_matching_polynomial, principal_beta};
use crate::roots::{real_roots, RootList, DEFAULT_ROOT_TOL};

/// True iff the roots of `f` interlace the roots of `g` with slack `tol`:
/// after multiplicity expansion and nonincreasing sort,
/// `g_1 >= f_1 >= g_2 >= ... >= f_(n-1) >= g_n`. Requires
/// `deg f = deg g - 1`.
pub fn interlaces(f: &RootList, g: &RootList, tol: f64) -> Result<bool> {
    let fr = f.expanded();
    let gr = g.expanded();
    if fr.len() + 1 != gr.len() {
        return Err(Error::DegreeMismatch {
            f: fr.len(),
            g: gr.len(),
        });
    }
    Ok((0..fr.len()).all(|i| gr[i] + tol >= fr[i] && fr[i] + tol >= gr[i + 1]))
}

/// Vertex interlacing for principal Laplacian matching polynomials, plus
/// the strict largest-root clause when the induced subgraph is connected.
#[derive(Debug, Clone)]
pub struct InterlacingReport {
    pub interlaces: bool,
    pub induced_connected: bool,
    /// Multiplicity-1 check on the largest root (connected case only).
    pub max_multiplicity_one: Option<bool>,
    /// Strict gap between the two largest roots (connected case only;
    /// vacuous when the smaller polynomial is constant).
    pub strict_max_gap: Option<bool>,
    pub pass: bool,
}

pub fn vertex_interlacing_check(
    g: &Graph,
    h: &[usize],
    v: usize,
    tol: f64,
) -> Result<InterlacingReport> {
    let mut h = h.to_vec();
    h.sort_unstable();
    h.dedup();
    if !h.contains(&v) {
        return Err(Error::VertexNotInH(v));
    }
    let without: Vec<usize> = h.iter().copied().filter(|&x| x != v).collect();

    let beta_h = principal_beta(g, &h)?;
    let beta_hv = principal_beta(g, &without)?;
    let roots_h = real_roots(&beta_h, DEFAULT_ROOT_TOL)?;
    let roots_hv = real_roots(&beta_hv, DEFAULT_ROOT_TOL)?;
    let inter = interlaces(&roots_hv, &roots_h, tol)?;

    let dropped: Vec<usize> = (0..g.n()).filter(|x| !h.contains(x)).collect();
    let (induced, _) = g.induced_delete(&dropped)?;
    let induced_connected = induced.is_connected();

    let (max_multiplicity_one, strict_max_gap, pass);
    if induced_connected {
        let mult_one = roots_h.max_multiplicity() == Some(1);
        let gap = match (roots_h.max(), roots_hv.max()) {
            (Some(top), Some(second)) => top > second + tol,
            _ => true,
        };
        max_multiplicity_one = Some(mult_one);
        strict_max_gap = Some(gap);
        pass = inter && mult_one && gap;
    } else {
        max_multiplicity_one = None;
        strict_max_gap = None;
        pass = inter;
    }
    Ok(InterlacingReport {
        interlaces: inter,
        induced_connected,
        max_multiplicity_one,
        strict_max_gap,
        pass,
    })
}

/// Prefix-sum comparison after nonincreasing sort. `weak` holds when every
/// prefix sum of `x` stays at most the matching prefix sum of `y` (within
/// `tol`); `full` additionally needs equal totals.
#[derive(Debug, Clone)]
pub struct MajorizationVerdict {
    pub weak: bool,
    pub full: bool,
    pub first_failing_prefix: Option<usize>,
    pub prefix_sums_y: Vec<f64>,
    pub prefix_sums_x: Vec<f64>,
}

/// Does `y` (weakly) majorize `x`? Both verdicts are reported.
pub fn majorizes(y: &[f64], x: &[f64], tol: f64) -> Result<MajorizationVerdict> {
    if y.len() != x.len() {
        return Err(Error::LengthMismatch(y.len(), x.len()));
    }
    let sort_desc = |s: &[f64]| {
        let mut v = s.to_vec();
        v.sort_by(|a, b| b.partial_cmp(a).expect("sequences must not contain NaN"));
        v
    };
    let ys = sort_desc(y);
    let xs = sort_desc(x);
    let prefix = |s: &[f64]| {
        s.iter()
            .scan(0.0, |acc, &v| {
                *acc += v;
                Some(*acc)
            })
            .collect::<Vec<f64>>()
    };
    let prefix_sums_y = prefix(&ys);
    let prefix_sums_x = prefix(&xs);
    let first_failing_prefix = (0..ys.len())
        .find(|&k| prefix_sums_x[k] > prefix_sums_y[k] + tol)
        .map(|k| k + 1);
    let weak = first_failing_prefix.is_none();
    let totals_equal = match (prefix_sums_x.last(), prefix_sums_y.last()) {
        (Some(tx), Some(ty)) => (tx - ty).abs() <= tol,
        _ => true,
    };
    Ok(MajorizationVerdict {
        weak,
        full: weak && totals_equal,
        first_failing_prefix,
        prefix_sums_y,
        prefix_sums_x,
    })
}

/// The zero sequence of the Laplacian matching polynomial majorizes the
/// degree sequence. Prefix comparisons are numeric; the total-sum leg is
/// the exact integer identity between the subleading coefficient and
/// `2|E|`.
#[derive(Debug, Clone)]
pub struct DegreeMajorizationReport {
    pub verdict: MajorizationVerdict,
    pub total_exact: bool,
    /// Per-prefix results of the nested principal-subgraph claims, when
    /// requested.
    pub trace: Option<Vec<TraceRow>>,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct TraceRow {
    pub prefix: usize,
    pub weak: bool,
    pub total_exact: bool,
}

pub fn degree_majorization_check(
    g: &Graph,
    tol: f64,
    trace: bool,
) -> Result<DegreeMajorizationReport> {
    let beta = laplacian_matching_polynomial(g);
    let roots = real_roots(&beta, DEFAULT_ROOT_TOL)?;
    let degrees: Vec<f64> = g.degree_sequence().iter().map(|&d| d as f64).collect();
    let verdict = majorizes(&roots.expanded(), &degrees, tol)?;
    let total_exact = zero_sum_coefficient(&beta, g.n()) == BigInt::from(2 * g.m());
    let mut pass = verdict.weak && total_exact;

    let trace = if trace {
        // vertices in nonincreasing degree order; prefix i induces H_i
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut rows = Vec::new();
        for i in 1..=g.n() {
            let h = &order[..i];
            let beta_h = principal_beta(g, h)?;
            let roots_h = real_roots(&beta_h, DEFAULT_ROOT_TOL)?;
            let degs: Vec<f64> = h.iter().map(|&v| g.degree(v) as f64).collect();
            let v = majorizes(&roots_h.expanded(), &degs, tol)?;
            let sum: usize = h.iter().map(|&v| g.degree(v)).sum();
            let exact = zero_sum_coefficient(&beta_h, i) == BigInt::from(sum);
            pass &= v.weak && exact;
            rows.push(TraceRow {
                prefix: i,
                weak: v.weak,
                total_exact: exact,
            });
        }
        Some(rows)
    } else {
        None
    };

    Ok(DegreeMajorizationReport {
        verdict,
        total_exact,
        trace,
        pass,
    })
}

/// Sum of the zeros of a monic degree-`deg` polynomial, read off the
/// subleading coefficient.
fn zero_sum_coefficient(p: &crate::poly::IntPoly, deg: usize) -> BigInt {
    if deg == 0 {
        BigInt::from(0)
    } else {
        -p.coeff(deg - 1)
    }
}

/// For a connected graph with minimum degree 1, the zero sequence of the
/// Laplacian matching polynomial majorizes
/// `(d_1 + 1, d_2, ..., d_(n-1), d_n - 1)` exactly when the graph is a
/// tree.
#[derive(Debug, Clone)]
pub struct GroneReport {
    pub shifted_degrees: Vec<f64>,
    pub majorizes: bool,
    pub is_tree: bool,
    pub pass: bool,
}

pub fn grone_sequence_check(g: &Graph, tol: f64) -> Result<GroneReport> {
    if g.n() < 2 {
        return Err(Error::BadParameter(
            "grone_sequence_check needs at least two vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.min_degree() != 1 {
        return Err(Error::MinDegreeNotOne(g.min_degree()));
    }
    let d = g.degree_sequence();
    let n = g.n();
    let mut shifted: Vec<f64> = d.iter().map(|&x| x as f64).collect();
    shifted[0] += 1.0;
    shifted[n - 1] -= 1.0;

    let beta = laplacian_matching_polynomial(g);
    let roots = real_roots(&beta, DEFAULT_ROOT_TOL)?;
    let verdict = majorizes(&roots.expanded(), &shifted, tol)?;
    // totals agree identically (both are 2|E|), so the exact leg is the
    // subleading-coefficient identity
    let total_exact = zero_sum_coefficient(&beta, n) == BigInt::from(2 * g.m());
    let maj = verdict.weak && total_exact;
    let is_tree = g.is_tree();
    Ok(GroneReport {
        shifted_degrees: shifted,
        majorizes: maj,
        is_tree,
        pass: maj == is_tree,
    })
}

/// Exact zero-sum identity for principal polynomials: the subleading
/// coefficient of `beta(G, x)_[H]` equals the degree sum over `H`, with no
/// root extraction involved.
#[derive(Debug, Clone)]
pub struct ZeroSumReport {
    pub coefficient_sum: BigInt,
    pub degree_sum: BigInt,
    pub pass: bool,
}

pub fn principal_zero_sum_check(g: &Graph, h: &[usize]) -> Result<ZeroSumReport> {
    let mut h = h.to_vec();
    h.sort_unstable();
    h.dedup();
    let beta_h = principal_beta(g, &h)?;
    let coefficient_sum = zero_sum_coefficient(&beta_h, h.len());
    let degree_sum: BigInt = h.iter().map(|&v| BigInt::from(g.degree(v))).sum();
    Ok(ZeroSumReport {
        pass: coefficient_sum == degree_sum,
        coefficient_sum,
        degree_sum,
    })
}
