//! Verifiers for the duality identities, the forest characterization, and
//! the root bounds.

use num::bigint::BigInt;
use num::traits::Pow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{laplacian_matching_polynomial, matching_polynomial, principal_beta};
use crate::poly::IntPoly;
use crate::roots::{real_roots, DEFAULT_ROOT_TOL};
use crate::spectra::{adjacency, char_poly, principal_char_poly, signless_laplacian, signless_spectrum};

/// Exact identity between two polynomials; `pass` iff the residual
/// `left - right` is the zero polynomial.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub name: String,
    pub left: IntPoly,
    pub right: IntPoly,
    pub pass: bool,
    pub residual: IntPoly,
}

impl IdentityReport {
    fn new(name: &str, left: IntPoly, right: IntPoly) -> Self {
        let residual = &left - &right;
        IdentityReport {
            name: name.to_owned(),
            pass: residual.is_zero(),
            left,
            right,
            residual,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualityDirection {
    /// Characteristic polynomial from the matching side.
    PhiFromMatching,
    /// Matching side from the characteristic polynomial.
    MatchingFromPhi,
}

fn signed_power(base: i64, omega: usize) -> BigInt {
    BigInt::from(base).pow(omega as u32)
}

/// Duality between the matching polynomial and the adjacency
/// characteristic polynomial: either
/// `phi(A) = alpha + sum_C (-2)^omega(C) alpha(G - C)` or
/// `alpha = phi(A) + sum_C 2^omega(C) phi(A(G - C))`, the sums running over
/// all 2-regular subgraphs C.
pub fn adjacency_duality(g: &Graph, direction: DualityDirection) -> IdentityReport {
    let cycles = g.enumerate_two_regular();
    match direction {
        DualityDirection::PhiFromMatching => {
            let left = char_poly(&adjacency(g));
            let mut right = matching_polynomial(g);
            for c in &cycles {
                let (rest, _) = g.induced_delete(&c.vertices()).unwrap();
                right = &right + &matching_polynomial(&rest).scale(&signed_power(-2, c.omega));
            }
            IdentityReport::new("adjacency-duality:phi-from-alpha", left, right)
        }
        DualityDirection::MatchingFromPhi => {
            let left = matching_polynomial(g);
            let mut right = char_poly(&adjacency(g));
            for c in &cycles {
                let (rest, _) = g.induced_delete(&c.vertices()).unwrap();
                right = &right + &char_poly(&adjacency(&rest)).scale(&signed_power(2, c.omega));
            }
            IdentityReport::new("adjacency-duality:alpha-from-phi", left, right)
        }
    }
}

/// The signless Laplacian analogue: either
/// `phi(Q) = beta + sum_C (-2)^omega(C) beta(G, x)_[G-C]` or
/// `beta = phi(Q) + sum_C 2^omega(C) phi(Q(G)_[G-C], x)`.
pub fn signless_laplacian_duality(g: &Graph, direction: DualityDirection) -> IdentityReport {
    let cycles = g.enumerate_two_regular();
    match direction {
        DualityDirection::PhiFromMatching => {
            let left = char_poly(&signless_laplacian(g));
            let mut right = laplacian_matching_polynomial(g);
            for c in &cycles {
                let keep: Vec<usize> = complement_of(g, &c.vertices());
                let term = principal_beta(g, &keep).unwrap();
                right = &right + &term.scale(&signed_power(-2, c.omega));
            }
            IdentityReport::new("q-duality:phi-from-beta", left, right)
        }
        DualityDirection::MatchingFromPhi => {
            let left = laplacian_matching_polynomial(g);
            let mut right = char_poly(&signless_laplacian(g));
            for c in &cycles {
                let term = principal_char_poly(g, &c.vertices()).unwrap();
                right = &right + &term.scale(&signed_power(2, c.omega));
            }
            IdentityReport::new("q-duality:beta-from-phi", left, right)
        }
    }
}

fn complement_of(g: &Graph, w: &[usize]) -> Vec<usize> {
    let mut drop = vec![false; g.n()];
    for &v in w {
        drop[v] = true;
    }
    (0..g.n()).filter(|&v| !drop[v]).collect()
}

/// `G` is a forest iff its Laplacian matching polynomial equals the
/// characteristic polynomial of its signless Laplacian.
#[derive(Debug, Clone)]
pub struct ForestReport {
    pub is_forest: bool,
    pub polynomials_equal: bool,
    pub pass: bool,
}

pub fn forest_characterization(g: &Graph) -> ForestReport {
    let is_forest = g.is_forest();
    let polynomials_equal =
        laplacian_matching_polynomial(g) == char_poly(&signless_laplacian(g));
    ForestReport {
        is_forest,
        polynomials_equal,
        pass: is_forest == polynomials_equal,
    }
}

/// A one-sided numeric bound with an equality-case predicate: `pass` iff
/// the bound holds within tolerance and the equality flag matches the
/// structural expectation.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub holds: bool,
    pub equality: bool,
    pub equality_expected: bool,
    pub pass: bool,
}

impl BoundReport {
    fn new(name: &str, value: f64, bound: f64, expected: bool, tol: f64) -> Self {
        let holds = value <= bound + tol;
        let equality = (value - bound).abs() <= tol;
        BoundReport {
            name: name.to_owned(),
            value,
            bound,
            holds,
            equality,
            equality_expected: expected,
            pass: holds && equality == expected,
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::BadParameter("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// Smallest root of the Laplacian matching polynomial is at most the
/// minimum degree, with equality exactly for the one-vertex graph.
pub fn min_root_bound_check(g: &Graph, tol: f64) -> Result<BoundReport> {
    require_connected(g)?;
    let roots = real_roots(&laplacian_matching_polynomial(g), DEFAULT_ROOT_TOL)?;
    let min = roots.min().expect("connected nonempty graph has roots");
    Ok(BoundReport::new(
        "min-root-bound",
        min,
        g.min_degree() as f64,
        g.n() == 1,
        tol,
    ))
}

/// Largest root of the Laplacian matching polynomial is at most the
/// spectral radius of the signless Laplacian, with equality exactly for
/// trees.
pub fn spectral_bound_check(g: &Graph, tol: f64) -> Result<BoundReport> {
    require_connected(g)?;
    let roots = real_roots(&laplacian_matching_polynomial(g), DEFAULT_ROOT_TOL)?;
    let max = roots.max().expect("connected nonempty graph has roots");
    let rho = signless_spectrum(g).max().unwrap_or(0.0);
    Ok(BoundReport::new(
        "spectral-bound",
        max,
        rho,
        g.is_tree(),
        tol,
    ))
}

/// Largest root is at most the maximum over edges of the endpoint degree
/// sum, with equality exactly for stars.
pub fn degree_sum_bound_check(g: &Graph, tol: f64) -> Result<BoundReport> {
    require_connected(g)?;
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let roots = real_roots(&laplacian_matching_polynomial(g), DEFAULT_ROOT_TOL)?;
    let max = roots.max().expect("graph with an edge has roots");
    let bound = g
        .edges()
        .iter()
        .map(|&(u, v)| g.degree(u) + g.degree(v))
        .max()
        .unwrap() as f64;
    Ok(BoundReport::new(
        "degree-sum-bound",
        max,
        bound,
        g.is_star(),
        tol,
    ))
}

/// All roots lie in `[0, Delta + 2 sqrt(Delta - 1))`, the Heilmann-Lieb
/// style interval shifted for degree factors. Needs maximum degree at
/// least 2.
#[derive(Debug, Clone)]
pub struct IntervalReport {
    pub min_root: f64,
    pub max_root: f64,
    pub bound: f64,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub pass: bool,
}

pub fn root_interval_check(g: &Graph, tol: f64) -> Result<IntervalReport> {
    let delta = g.max_degree();
    if delta < 2 {
        return Err(Error::MaxDegreeTooSmall(delta));
    }
    let roots = real_roots(&laplacian_matching_polynomial(g), DEFAULT_ROOT_TOL)?;
    let min_root = roots.min().unwrap();
    let max_root = roots.max().unwrap();
    let bound = delta as f64 + 2.0 * ((delta - 1) as f64).sqrt();
    let lower_ok = min_root >= -tol;
    let upper_ok = max_root < bound;
    Ok(IntervalReport {
        min_root,
        max_root,
        bound,
        lower_ok,
        upper_ok,
        pass: lower_ok && upper_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Graph;

    fn p(desc: &[i64]) -> IntPoly {
        IntPoly::from_descending(desc)
    }

    const TOL: f64 = 1e-7;

    #[test]
    fn adjacency_duality_examples() {
        // forests: no 2-regular subgraphs, phi(A) = alpha
        let p4 = generate::path(4).unwrap();
        let rep = adjacency_duality(&p4, DualityDirection::PhiFromMatching);
        assert!(rep.pass);
        assert_eq!(rep.left, matching_polynomial(&p4));

        // C3: phi(A) = (x-2)(x+1)^2 = alpha - 2
        let c3 = generate::cycle(3).unwrap();
        let rep = adjacency_duality(&c3, DualityDirection::PhiFromMatching);
        assert!(rep.pass);
        assert_eq!(rep.left, p(&[1, 0, -3, -2]));

        // C4: alpha = phi(A) + 2
        let c4 = generate::cycle(4).unwrap();
        let rep = adjacency_duality(&c4, DualityDirection::MatchingFromPhi);
        assert!(rep.pass);
        assert_eq!(rep.left, p(&[1, 0, -4, 0, 2]));
        assert_eq!(rep.right, p(&[1, 0, -4, 0, 2]));
    }

    #[test]
    fn q_duality_examples() {
        // C3: phi(Q) = beta - 2
        let c3 = generate::cycle(3).unwrap();
        let rep = signless_laplacian_duality(&c3, DualityDirection::PhiFromMatching);
        assert!(rep.pass);
        assert_eq!(rep.left, p(&[1, -6, 9, -4]));

        let rep = signless_laplacian_duality(&c3, DualityDirection::MatchingFromPhi);
        assert!(rep.pass);
        assert_eq!(rep.left, p(&[1, -6, 9, -2]));

        // C4: phi(Q) = beta - 2, both sides written out
        let c4 = generate::cycle(4).unwrap();
        let rep = signless_laplacian_duality(&c4, DualityDirection::PhiFromMatching);
        assert!(rep.pass);
        assert_eq!(rep.left, p(&[1, -8, 20, -16, 0]));
        assert_eq!(
            laplacian_matching_polynomial(&c4),
            p(&[1, -8, 20, -16, 2])
        );

        // trees: both sums empty
        let t = generate::star(3).unwrap();
        let rep = signless_laplacian_duality(&t, DualityDirection::PhiFromMatching);
        assert!(rep.pass);
        assert_eq!(rep.left, rep.right);
    }

    #[test]
    fn forest_examples() {
        assert!(forest_characterization(&generate::path(5).unwrap()).is_forest);
        assert!(forest_characterization(&generate::path(5).unwrap()).pass);

        let c3 = generate::cycle(3).unwrap();
        let rep = forest_characterization(&c3);
        assert!(!rep.is_forest);
        assert!(!rep.polynomials_equal);
        assert!(rep.pass);
        // the gap is the constant 2
        let diff = &laplacian_matching_polynomial(&c3) - &char_poly(&signless_laplacian(&c3));
        assert_eq!(diff, IntPoly::constant(2));

        let e3 = Graph::new(3, []).unwrap();
        let rep = forest_characterization(&e3);
        assert!(rep.is_forest && rep.polynomials_equal && rep.pass);
    }

    #[test]
    fn min_root_examples() {
        let k1 = Graph::new(1, []).unwrap();
        let rep = min_root_bound_check(&k1, TOL).unwrap();
        assert!(rep.pass && rep.equality);

        let p3 = generate::path(3).unwrap();
        let rep = min_root_bound_check(&p3, TOL).unwrap();
        assert!(rep.pass && !rep.equality);
        assert!(rep.value.abs() < 1e-7);

        let c3 = generate::cycle(3).unwrap();
        let rep = min_root_bound_check(&c3, TOL).unwrap();
        assert!(rep.pass);
        assert!(rep.value < 0.5);

        let two = Graph::new(2, []).unwrap();
        assert!(matches!(
            min_root_bound_check(&two, TOL),
            Err(Error::NotConnected)
        ));
    }

    #[test]
    fn spectral_bound_examples() {
        let star = generate::star(3).unwrap();
        let rep = spectral_bound_check(&star, TOL).unwrap();
        assert!(rep.pass && rep.equality);

        let c3 = generate::cycle(3).unwrap();
        let rep = spectral_bound_check(&c3, TOL).unwrap();
        assert!(rep.pass && !rep.equality);
        assert!(rep.value > 3.5 && rep.value < 4.0);
        assert!((rep.bound - 4.0).abs() < 1e-8);

        let k2 = generate::complete(2).unwrap();
        let rep = spectral_bound_check(&k2, TOL).unwrap();
        assert!(rep.pass && rep.equality);
        assert!((rep.value - 2.0).abs() < 1e-7);
    }

    #[test]
    fn degree_sum_examples() {
        let star = generate::star(3).unwrap();
        let rep = degree_sum_bound_check(&star, TOL).unwrap();
        assert!(rep.pass && rep.equality);
        assert!((rep.value - 4.0).abs() < 1e-7);

        let c3 = generate::cycle(3).unwrap();
        let rep = degree_sum_bound_check(&c3, TOL).unwrap();
        assert!(rep.pass && !rep.equality);

        let k2 = generate::complete(2).unwrap();
        let rep = degree_sum_bound_check(&k2, TOL).unwrap();
        assert!(rep.pass && rep.equality);
        assert!((rep.value - 2.0).abs() < 1e-7);

        let k1 = Graph::new(1, []).unwrap();
        assert!(matches!(
            degree_sum_bound_check(&k1, TOL),
            Err(Error::NoEdges)
        ));
    }

    #[test]
    fn interval_examples() {
        let c3 = generate::cycle(3).unwrap();
        let rep = root_interval_check(&c3, TOL).unwrap();
        assert!(rep.pass);
        assert!((rep.bound - 4.0).abs() < 1e-12);

        let c4 = generate::cycle(4).unwrap();
        assert!(root_interval_check(&c4, TOL).unwrap().pass);

        let k4 = generate::complete(4).unwrap();
        let rep = root_interval_check(&k4, TOL).unwrap();
        assert!(rep.pass);
        assert!((rep.bound - (3.0 + 2.0 * 2.0f64.sqrt())).abs() < 1e-12);

        let k2 = generate::complete(2).unwrap();
        assert!(matches!(
            root_interval_check(&k2, TOL),
            Err(Error::MaxDegreeTooSmall(1))
        ));
    }
}
