//! Matching counts, the matching polynomial, and the (principal) Laplacian
//! matching polynomial via two independent routes.
//!
//! The definitional route sums over every matching directly, carrying the
//! product of `(x - deg)` factors for unmatched vertices; it is the
//! correctness oracle. The subdivision route counts matchings of the
//! subdivision graph with a memoized edge-mask recursion and recovers the
//! same polynomial through the exponent bookkeeping, so the two paths share
//! no code worth speaking of and cross-check each other.

use std::collections::HashMap;
use std::rc::Rc;

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::error::Result;
use crate::graph::Graph;
use crate::poly::IntPoly;

/// Exact r-matching counts `p(G, 0), ..., p(G, floor(n/2))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchCounts {
    counts: Vec<BigInt>,
}

impl MatchCounts {
    /// `p(G, r)`; zero beyond the stored range.
    pub fn get(&self, r: usize) -> BigInt {
        self.counts.get(r).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }
}

const MAX_MASK_EDGES: usize = 128;

/// Count r-matchings with the edge recursion
/// `p(G, r) = p(G - e, r) + p(G - u - v, r - 1)`, memoized on the mask of
/// surviving edges. The cache lives and dies with one invocation.
pub fn match_counts(g: &Graph) -> MatchCounts {
    let n = g.n();
    let m = g.m();
    assert!(
        m <= MAX_MASK_EDGES,
        "match_counts supports up to {MAX_MASK_EDGES} edges, got {m}"
    );
    let mut incident = vec![0u128; n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u] |= 1 << i;
        incident[v] |= 1 << i;
    }
    let full: u128 = if m == 128 { !0 } else { (1 << m) - 1 };
    let mut memo: HashMap<u128, Rc<Vec<BigInt>>> = HashMap::new();
    let raw = mask_counts(full, g.edges(), &incident, &mut memo);

    let mut counts = raw.as_ref().clone();
    counts.resize(n / 2 + 1, BigInt::zero());
    MatchCounts { counts }
}

fn mask_counts(
    mask: u128,
    edges: &[(usize, usize)],
    incident: &[u128],
    memo: &mut HashMap<u128, Rc<Vec<BigInt>>>,
) -> Rc<Vec<BigInt>> {
    if mask == 0 {
        return Rc::new(vec![BigInt::one()]);
    }
    if let Some(hit) = memo.get(&mask) {
        return Rc::clone(hit);
    }
    let e = mask.trailing_zeros() as usize;
    let (u, v) = edges[e];
    let without = mask_counts(mask & !(1u128 << e), edges, incident, memo);
    let with = mask_counts(mask & !incident[u] & !incident[v], edges, incident, memo);
    let mut counts = without.as_ref().clone();
    if counts.len() < with.len() + 1 {
        counts.resize(with.len() + 1, BigInt::zero());
    }
    for (r, c) in with.iter().enumerate() {
        counts[r + 1] += c;
    }
    let counts = Rc::new(counts);
    memo.insert(mask, Rc::clone(&counts));
    counts
}

/// Matching polynomial: sum over r of `(-1)^r p(G, r) x^(n - 2r)`.
pub fn matching_polynomial(g: &Graph) -> IntPoly {
    let n = g.n();
    let counts = match_counts(g);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (r, c) in counts.counts().iter().enumerate() {
        let signed = if r % 2 == 0 { c.clone() } else { -c };
        coeffs[n - 2 * r] = signed;
    }
    IntPoly::from_coeffs(coeffs)
}

/// Visit every matching of `g` (including the empty one) exactly once, as a
/// bitmask of matched vertices plus the list of chosen edge indices.
pub(crate) fn for_each_matching<F: FnMut(&[usize], u64)>(g: &Graph, mut f: F) {
    assert!(g.n() <= 64, "matching enumeration supports up to 64 vertices");
    let mut chosen = Vec::new();
    matching_rec(g, 0, 0, &mut chosen, &mut f);
}

fn matching_rec<F: FnMut(&[usize], u64)>(
    g: &Graph,
    i: usize,
    used: u64,
    chosen: &mut Vec<usize>,
    f: &mut F,
) {
    if i == g.m() {
        f(chosen, used);
        return;
    }
    matching_rec(g, i + 1, used, chosen, f);
    let (u, v) = g.edges()[i];
    let bits = (1u64 << u) | (1u64 << v);
    if used & bits == 0 {
        chosen.push(i);
        matching_rec(g, i + 1, used | bits, chosen, f);
        chosen.pop();
    }
}

/// Laplacian matching polynomial by direct summation over all matchings:
/// each matching M contributes `(-1)^|M|` times the product of
/// `(x - deg(v))` over unmatched vertices. No memoization; this is the
/// definitional oracle route.
pub fn laplacian_matching_polynomial(g: &Graph) -> IntPoly {
    principal_beta(g, &(0..g.n()).collect::<Vec<_>>()).expect("full vertex set is in range")
}

/// Principal Laplacian matching polynomial with respect to the induced
/// subgraph on `h`: matchings range over the induced subgraph, degrees stay
/// those of the whole graph. Degree equals `|h|`.
pub fn principal_beta(g: &Graph, h: &[usize]) -> Result<IntPoly> {
    let mut h = h.to_vec();
    h.sort_unstable();
    h.dedup();
    let dropped: Vec<usize> = {
        let mut keep = vec![false; g.n()];
        for &v in &h {
            if v >= g.n() {
                return Err(crate::error::Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            keep[v] = true;
        }
        (0..g.n()).filter(|&v| !keep[v]).collect()
    };
    let (ind, old_label) = g.induced_delete(&dropped)?;
    let factors: Vec<IntPoly> = old_label
        .iter()
        .map(|&v| IntPoly::x_minus(g.degree(v) as i64))
        .collect();

    let mut sum = IntPoly::zero();
    for_each_matching(&ind, |chosen, used| {
        let mut term = IntPoly::one();
        for (v, factor) in factors.iter().enumerate() {
            if used & (1 << v) == 0 {
                term = &term * factor;
            }
        }
        if chosen.len() % 2 == 1 {
            term = -&term;
        }
        sum = &sum + &term;
    });
    Ok(sum)
}

/// The subdivision route to the principal Laplacian matching polynomial:
/// compute the matching polynomial of `S_G - W`, strip the monomial
/// `x^(m - n + |W|)` (multiplying instead when the exponent is negative, as
/// happens for forests), and halve all exponents. By construction this must
/// equal `principal_beta(g, V \ W)` exactly.
pub fn beta_via_subdivision(g: &Graph, w: &[usize]) -> Result<IntPoly> {
    let mut w = w.to_vec();
    w.sort_unstable();
    w.dedup();
    for &v in &w {
        if v >= g.n() {
            return Err(crate::error::Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let s = g.subdivision();
    let (sd, _) = s.graph().induced_delete(&w)?;
    let alpha = matching_polynomial(&sd);
    let exponent = g.m() as i64 - g.n() as i64 + w.len() as i64;
    let shifted = if exponent >= 0 {
        alpha.divide_by_power(exponent as usize)?
    } else {
        alpha.mul_by_power((-exponent) as usize)
    };
    shifted.even_part_unsquare()
}

/// Per-coefficient comparison of the Laplacian matching polynomial against
/// the matching counts of the subdivision graph.
#[derive(Debug, Clone)]
pub struct CoefficientsReport {
    pub rows: Vec<CoefficientRow>,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct CoefficientRow {
    pub r: usize,
    pub from_beta: BigInt,
    pub from_subdivision: BigInt,
    pub pass: bool,
}

/// Check that `beta(G, x) = sum_r (-1)^r a_r x^(n-r)` has `a_r` equal to
/// the number of r-matchings of the subdivision graph, for every r.
pub fn coefficients_check(g: &Graph) -> CoefficientsReport {
    let n = g.n();
    let beta = laplacian_matching_polynomial(g);
    let s = g.subdivision();
    let counts = match_counts(s.graph());
    let top = n.max((n + g.m()) / 2);
    let mut rows = Vec::with_capacity(top + 1);
    for r in 0..=top {
        let from_beta = if r <= n {
            let c = beta.coeff(n - r);
            if r % 2 == 0 {
                c
            } else {
                -c
            }
        } else {
            BigInt::zero()
        };
        let from_subdivision = counts.get(r);
        let pass = from_beta == from_subdivision;
        rows.push(CoefficientRow {
            r,
            from_beta,
            from_subdivision,
            pass,
        });
    }
    let pass = rows.iter().all(|row| row.pass);
    CoefficientsReport { rows, pass }
}
