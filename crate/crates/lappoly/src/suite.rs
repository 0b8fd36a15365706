//! Named verification checks over a single graph, feeding the CLI and the
//! batch runner. Each check aggregates one identity family; preconditions
//! that do not apply are reported as skips, not failures.

use std::str::FromStr;

use crate::analysis;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::identities::{self, DualityDirection};
use crate::matching;
use crate::poly::IntPoly;
use crate::report::CheckResult;
use crate::spectra;
use crate::tu;

/// Default tolerance for numeric comparisons between root lists.
pub const DEFAULT_CHECK_TOL: f64 = 1e-7;

/// Exhaustive subset sweeps (all W, all H) stay feasible only for small
/// graphs; beyond this many vertices the checks fall back to the full
/// vertex set.
const FULL_SWEEP_MAX_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Subdivision,
    Coefficients,
    Tu,
    Fibers,
    QDuality,
    ADuality,
    Forest,
    Interlacing,
    Majorization,
    Grone,
    Bounds,
    ZeroSum,
}

impl CheckKind {
    pub const ALL: [CheckKind; 12] = [
        CheckKind::Subdivision,
        CheckKind::Coefficients,
        CheckKind::Tu,
        CheckKind::Fibers,
        CheckKind::QDuality,
        CheckKind::ADuality,
        CheckKind::Forest,
        CheckKind::Interlacing,
        CheckKind::Majorization,
        CheckKind::Grone,
        CheckKind::Bounds,
        CheckKind::ZeroSum,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Subdivision => "subdivision",
            CheckKind::Coefficients => "coefficients",
            CheckKind::Tu => "tu",
            CheckKind::Fibers => "fibers",
            CheckKind::QDuality => "q-duality",
            CheckKind::ADuality => "a-duality",
            CheckKind::Forest => "forest",
            CheckKind::Interlacing => "interlacing",
            CheckKind::Majorization => "majorization",
            CheckKind::Grone => "grone",
            CheckKind::Bounds => "bounds",
            CheckKind::ZeroSum => "zero-sum",
        }
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .iter()
            .find(|k| k.name() == s)
            .copied()
            .ok_or_else(|| Error::BadParameter(format!("unknown check {s:?}")))
    }
}

/// Parse a comma-separated check list; `all` expands to every check.
pub fn parse_checks(spec: &str) -> Result<Vec<CheckKind>> {
    let mut out = Vec::new();
    for token in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if token == "all" {
            out.extend(CheckKind::ALL);
        } else {
            out.push(token.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::BadParameter("no checks selected".into()));
    }
    out.dedup();
    Ok(out)
}

fn poly_strings(p: &IntPoly) -> Option<Vec<String>> {
    Some(p.decimal_coefficients_desc())
}

fn identity_result(rep: identities::IdentityReport) -> CheckResult {
    let mut r = CheckResult::new(&rep.name);
    r.pass = rep.pass;
    r.left = poly_strings(&rep.left);
    r.right = poly_strings(&rep.right);
    r.residual = poly_strings(&rep.residual);
    r
}

fn bound_result(rep: identities::BoundReport) -> CheckResult {
    let mut r = CheckResult::new(&rep.name);
    r.pass = rep.pass;
    r.value = Some(rep.value);
    r.bound = Some(rep.bound);
    r.equality = Some(rep.equality);
    r.equality_expected = Some(rep.equality_expected);
    r
}

/// Every vertex subset of `g`, smallest first. Only used under the sweep
/// cap.
fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1 << n)).map(move |mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
}

/// Run one named check; most kinds produce a single aggregated result,
/// the duality and bound kinds produce one result per identity.
pub fn run_check(g: &Graph, kind: CheckKind, tol: f64) -> Vec<CheckResult> {
    match kind {
        CheckKind::Subdivision => vec![subdivision_check(g)],
        CheckKind::Coefficients => vec![coefficients_check(g)],
        CheckKind::Tu => vec![tu_check(g)],
        CheckKind::Fibers => vec![fibers_check(g)],
        CheckKind::QDuality => vec![
            identity_result(identities::signless_laplacian_duality(
                g,
                DualityDirection::PhiFromMatching,
            )),
            identity_result(identities::signless_laplacian_duality(
                g,
                DualityDirection::MatchingFromPhi,
            )),
        ],
        CheckKind::ADuality => vec![
            identity_result(identities::adjacency_duality(
                g,
                DualityDirection::PhiFromMatching,
            )),
            identity_result(identities::adjacency_duality(
                g,
                DualityDirection::MatchingFromPhi,
            )),
        ],
        CheckKind::Forest => {
            let rep = identities::forest_characterization(g);
            let mut r = CheckResult::new("forest");
            r.pass = rep.pass;
            r.detail = Some(format!(
                "forest: {}, beta==phiQ: {}",
                rep.is_forest, rep.polynomials_equal
            ));
            vec![r]
        }
        CheckKind::Interlacing => vec![interlacing_check(g, tol)],
        CheckKind::Majorization => vec![majorization_check(g, tol)],
        CheckKind::Grone => vec![grone_check(g, tol)],
        CheckKind::Bounds => bounds_checks(g, tol),
        CheckKind::ZeroSum => vec![zero_sum_check(g)],
    }
}

/// Run several checks back to back.
pub fn run_checks(g: &Graph, kinds: &[CheckKind], tol: f64) -> Vec<CheckResult> {
    kinds.iter().flat_map(|&k| run_check(g, k, tol)).collect()
}

/// Subdivision route vs. direct principal polynomial (and the spectra
/// analogue) for every vertex subset W, or W = empty beyond the sweep cap.
fn subdivision_check(g: &Graph) -> CheckResult {
    let mut r = CheckResult::new("subdivision");
    let subsets: Vec<Vec<usize>> = if g.n() <= FULL_SWEEP_MAX_N {
        all_subsets(g.n()).collect()
    } else {
        r.detail = Some(format!(
            "n > {FULL_SWEEP_MAX_N}: checked W = empty set only"
        ));
        vec![Vec::new()]
    };
    for w in &subsets {
        let keep: Vec<usize> = (0..g.n()).filter(|v| !w.contains(v)).collect();
        let via = match matching::beta_via_subdivision(g, w) {
            Ok(p) => p,
            Err(e) => {
                r.pass = false;
                r.detail = Some(format!("W = {w:?}: {e}"));
                return r;
            }
        };
        let direct = matching::principal_beta(g, &keep).expect("subset is in range");
        let spectra_side = spectra::subdivision_spectra_check(g, w).expect("subset is in range");
        if via != direct || !spectra_side.pass {
            r.pass = false;
            r.left = poly_strings(&via);
            r.right = poly_strings(&direct);
            r.residual = poly_strings(&(&via - &direct));
            r.detail = Some(format!("counterexample W = {w:?}"));
            return r;
        }
    }
    r.detail
        .get_or_insert_with(|| format!("{} subsets checked", subsets.len()));
    r
}

fn coefficients_check(g: &Graph) -> CheckResult {
    let rep = matching::coefficients_check(g);
    let mut r = CheckResult::new("coefficients");
    r.pass = rep.pass;
    r.left = Some(rep.rows.iter().map(|row| row.from_beta.to_string()).collect());
    r.right = Some(
        rep.rows
            .iter()
            .map(|row| row.from_subdivision.to_string())
            .collect(),
    );
    if let Some(bad) = rep.rows.iter().find(|row| !row.pass) {
        r.detail = Some(format!(
            "first mismatch at r = {}: {} vs {}",
            bad.r, bad.from_beta, bad.from_subdivision
        ));
    }
    r
}

/// Coefficients of the Laplacian matching polynomial against TU-subgraph
/// weight sums, all r at once.
fn tu_check(g: &Graph) -> CheckResult {
    let beta = matching::laplacian_matching_polynomial(g);
    let n = g.n();
    let sums = tu::tu_weight_sums(g);
    let mut r = CheckResult::new("tu");
    let mut left = Vec::new();
    let mut right = Vec::new();
    for k in 0..=n {
        let a_r = {
            let c = beta.coeff(n - k);
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        };
        let w = sums.get(k).cloned().unwrap_or_default();
        if a_r != w && r.pass {
            r.pass = false;
            r.detail = Some(format!("first mismatch at r = {k}: {a_r} vs {w}"));
        }
        left.push(a_r.to_string());
        right.push(w.to_string());
    }
    r.left = Some(left);
    r.right = Some(right);
    r
}

fn fibers_check(g: &Graph) -> CheckResult {
    let mut r = CheckResult::new("fibers");
    let reports = tu::fiber_size_check_all(g);
    let fibers: usize = reports.iter().map(|rep| rep.fibers.len()).sum();
    for rep in &reports {
        if !rep.pass {
            r.pass = false;
            let bad = rep.fibers.iter().find(|f| !f.pass);
            r.detail = Some(match bad {
                Some(f) => format!(
                    "r = {}: fiber over {:?} has size {} but weight {}",
                    rep.r, f.edges, f.size, f.weight
                ),
                None => format!("r = {}: TU-subgraphs missing from the image", rep.r),
            });
            return r;
        }
    }
    r.detail = Some(format!("{fibers} fibers checked"));
    r
}

fn interlacing_check(g: &Graph, tol: f64) -> CheckResult {
    let mut r = CheckResult::new("interlacing");
    let full: Vec<usize> = (0..g.n()).collect();
    let mut pairs: Vec<(Vec<usize>, usize)> = Vec::new();
    if g.n() <= FULL_SWEEP_MAX_N {
        for h in all_subsets(g.n()).filter(|h| !h.is_empty()) {
            for &v in &h {
                pairs.push((h.clone(), v));
            }
        }
    } else {
        r.detail = Some(format!("n > {FULL_SWEEP_MAX_N}: checked H = V(G) only"));
        for v in 0..g.n() {
            pairs.push((full.clone(), v));
        }
    }
    let total = pairs.len();
    for (h, v) in pairs {
        match analysis::vertex_interlacing_check(g, &h, v, tol) {
            Ok(rep) if rep.pass => {}
            Ok(_) => {
                r.pass = false;
                r.detail = Some(format!("counterexample H = {h:?}, v = {v}"));
                return r;
            }
            Err(e) => {
                r.pass = false;
                r.detail = Some(format!("H = {h:?}, v = {v}: {e}"));
                return r;
            }
        }
    }
    r.detail
        .get_or_insert_with(|| format!("{total} (H, v) pairs checked"));
    r
}

fn majorization_check(g: &Graph, tol: f64) -> CheckResult {
    let mut r = CheckResult::new("majorization");
    match analysis::degree_majorization_check(g, tol, g.n() <= FULL_SWEEP_MAX_N) {
        Ok(rep) => {
            r.pass = rep.pass;
            r.detail = Some(format!(
                "weak: {}, exact total: {}{}",
                rep.verdict.weak,
                rep.total_exact,
                match &rep.trace {
                    Some(t) => format!(", trace prefixes: {}", t.len()),
                    None => String::new(),
                }
            ));
        }
        Err(e) => {
            r.pass = false;
            r.detail = Some(e.to_string());
        }
    }
    r
}

fn grone_check(g: &Graph, tol: f64) -> CheckResult {
    match analysis::grone_sequence_check(g, tol) {
        Ok(rep) => {
            let mut r = CheckResult::new("grone");
            r.pass = rep.pass;
            r.detail = Some(format!(
                "tree: {}, majorizes shifted degrees: {}",
                rep.is_tree, rep.majorizes
            ));
            r
        }
        Err(e @ (Error::NotConnected | Error::MinDegreeNotOne(_) | Error::BadParameter(_))) => {
            CheckResult::skipped("grone", e.to_string())
        }
        Err(e) => {
            let mut r = CheckResult::new("grone");
            r.pass = false;
            r.detail = Some(e.to_string());
            r
        }
    }
}

fn bounds_checks(g: &Graph, tol: f64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let skippable = |name: &str, res: Result<identities::BoundReport>| match res {
        Ok(rep) => bound_result(rep),
        Err(
            e @ (Error::NotConnected
            | Error::NoEdges
            | Error::MaxDegreeTooSmall(_)
            | Error::BadParameter(_)),
        ) => CheckResult::skipped(name, e.to_string()),
        Err(e) => {
            let mut r = CheckResult::new(name);
            r.pass = false;
            r.detail = Some(e.to_string());
            r
        }
    };
    out.push(skippable(
        "min-root-bound",
        identities::min_root_bound_check(g, tol),
    ));
    out.push(skippable(
        "spectral-bound",
        identities::spectral_bound_check(g, tol),
    ));
    out.push(skippable(
        "degree-sum-bound",
        identities::degree_sum_bound_check(g, tol),
    ));
    match identities::root_interval_check(g, tol) {
        Ok(rep) => {
            let mut r = CheckResult::new("root-interval");
            r.pass = rep.pass;
            r.value = Some(rep.max_root);
            r.bound = Some(rep.bound);
            r.detail = Some(format!(
                "roots in [{:.3e}, {:.6}), bound {:.6}",
                rep.min_root, rep.max_root, rep.bound
            ));
            out.push(r);
        }
        Err(e @ (Error::MaxDegreeTooSmall(_) | Error::BadParameter(_))) => {
            out.push(CheckResult::skipped("root-interval", e.to_string()));
        }
        Err(e) => {
            let mut r = CheckResult::new("root-interval");
            r.pass = false;
            r.detail = Some(e.to_string());
            out.push(r);
        }
    }
    out
}

fn zero_sum_check(g: &Graph) -> CheckResult {
    let mut r = CheckResult::new("zero-sum");
    let subsets: Vec<Vec<usize>> = if g.n() <= FULL_SWEEP_MAX_N {
        all_subsets(g.n()).collect()
    } else {
        r.detail = Some(format!("n > {FULL_SWEEP_MAX_N}: checked H = V(G) only"));
        vec![(0..g.n()).collect()]
    };
    let total = subsets.len();
    for h in subsets {
        let rep = analysis::principal_zero_sum_check(g, &h).expect("subset is in range");
        if !rep.pass {
            r.pass = false;
            r.detail = Some(format!(
                "H = {h:?}: coefficient {} vs degree sum {}",
                rep.coefficient_sum, rep.degree_sum
            ));
            return r;
        }
    }
    r.detail
        .get_or_insert_with(|| format!("{total} subsets checked"));
    r
}
