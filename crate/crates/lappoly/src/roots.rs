//! Certified real-root extraction for real-rooted polynomials.
//!
//! Square-free factorization by repeated exact gcds with the derivative,
//! Sturm-sequence isolation over exact rationals, then rational bisection
//! down to the requested width. The Sturm count doubles as a certificate:
//! if the number of real roots (with multiplicity) falls short of the
//! degree, the input was not real-rooted and the caller gets an error
//! instead of a silently truncated root list.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{rat_gcd_monic, IntPoly, RatPoly};

/// Default isolation width for root intervals.
pub const DEFAULT_ROOT_TOL: f64 = 1e-10;

/// One distinct real root: a float approximation, its multiplicity, and the
/// exact rational interval certifying it.
#[derive(Debug, Clone)]
pub struct Root {
    pub value: f64,
    pub multiplicity: usize,
    pub low: BigRational,
    pub high: BigRational,
}

/// All real roots of a polynomial, nonincreasing, with multiplicities.
#[derive(Debug, Clone, Default)]
pub struct RootList {
    pub roots: Vec<Root>,
    pub error_bound: f64,
}

impl RootList {
    /// Number of roots counted with multiplicity.
    pub fn count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Values expanded by multiplicity, nonincreasing.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.count());
        for r in &self.roots {
            out.extend(std::iter::repeat(r.value).take(r.multiplicity));
        }
        out
    }

    pub fn max(&self) -> Option<f64> {
        self.roots.first().map(|r| r.value)
    }

    pub fn min(&self) -> Option<f64> {
        self.roots.last().map(|r| r.value)
    }

    /// Multiplicity of the largest root.
    pub fn max_multiplicity(&self) -> Option<usize> {
        self.roots.first().map(|r| r.multiplicity)
    }
}

/// Extract all real roots of `p`, certifying real-rootedness on the way.
///
/// Returns `NotRealRooted` when the Sturm-certified real-root count (with
/// multiplicity, via the square-free decomposition) is less than `deg p`.
pub fn real_roots(p: &IntPoly, tol: f64) -> Result<RootList> {
    if p.is_zero() {
        return Err(Error::BadParameter(
            "real_roots requires a nonzero polynomial".into(),
        ));
    }
    if !(tol > 0.0) {
        return Err(Error::BadParameter("tolerance must be positive".into()));
    }
    let degree = p.deg().unwrap();
    if degree == 0 {
        return Ok(RootList {
            roots: Vec::new(),
            error_bound: 0.0,
        });
    }

    let factors = squarefree_factors(&p.to_rational().monic());
    debug_assert_eq!(
        factors
            .iter()
            .map(|(f, m)| m * f.deg().unwrap())
            .sum::<usize>(),
        degree
    );

    let tol_rat = BigRational::from_float(tol).unwrap();
    let mut pending: Vec<Isolated> = Vec::new();
    for (factor, multiplicity) in &factors {
        let chain = SturmChain::new(factor);
        let bound = cauchy_bound(factor);
        let lo = -&bound;
        let hi = bound.clone();
        let vl = chain.variations_at(&lo);
        let vh = chain.variations_at(&hi);
        let mut intervals = Vec::new();
        isolate(&chain, factor, lo, hi, vl, vh, &mut intervals);
        for (l, h) in intervals {
            pending.push(Isolated {
                factor: factor.clone(),
                multiplicity: *multiplicity,
                low: l,
                high: h,
            });
        }
    }

    let found: usize = pending.iter().map(|r| r.multiplicity).sum();
    if found < degree {
        return Err(Error::NotRealRooted { found, degree });
    }

    for root in &mut pending {
        root.refine_to(&tol_rat);
    }
    separate(&mut pending);
    pending.sort_by(|a, b| {
        let ma = &a.low + &a.high;
        let mb = &b.low + &b.high;
        mb.cmp(&ma)
    });

    let two = BigRational::from(BigInt::from(2));
    let mut error_bound = 0.0f64;
    let roots = pending
        .into_iter()
        .map(|r| {
            let mid = (&r.low + &r.high) / &two;
            let half = (&r.high - &r.low) / &two;
            error_bound = error_bound.max(half.to_f64().unwrap_or(0.0));
            Root {
                value: mid.to_f64().expect("root midpoint fits in f64"),
                multiplicity: r.multiplicity,
                low: r.low,
                high: r.high,
            }
        })
        .collect();

    Ok(RootList { roots, error_bound })
}

struct Isolated {
    factor: RatPoly,
    multiplicity: usize,
    low: BigRational,
    high: BigRational,
}

impl Isolated {
    /// Shrink `[low, high]` (which contains exactly one simple root of
    /// `factor`, not equal to `low`) until `high - low <= width`.
    fn refine_to(&mut self, width: &BigRational) {
        let two = BigRational::from(BigInt::from(2));
        let fh = self.factor.evaluate(&self.high);
        if fh.is_zero() {
            self.low = self.high.clone();
            return;
        }
        let mut hi_sign = fh.is_positive();
        while &self.high - &self.low > *width {
            let mid = (&self.low + &self.high) / &two;
            let fm = self.factor.evaluate(&mid);
            if fm.is_zero() {
                self.low = mid.clone();
                self.high = mid;
                return;
            }
            if fm.is_positive() == hi_sign {
                self.high = mid;
                hi_sign = fm.is_positive();
            } else {
                self.low = mid;
            }
        }
    }

    fn overlaps(&self, other: &Isolated) -> bool {
        !(self.high < other.low || other.high < self.low)
    }
}

/// Repeatedly halve intervals from distinct square-free factors until they
/// are pairwise disjoint, so sorting by interval yields the true root order.
fn separate(pending: &mut [Isolated]) {
    loop {
        let mut clash = None;
        'outer: for i in 0..pending.len() {
            for j in i + 1..pending.len() {
                if pending[i].overlaps(&pending[j]) {
                    clash = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = clash else { break };
        let two = BigRational::from(BigInt::from(2));
        for k in [i, j] {
            let target = (&pending[k].high - &pending[k].low) / &two;
            pending[k].refine_to(&target);
        }
    }
}

/// Square-free factors with their multiplicities, via the gcd chain
/// `a_0 = f, a_{k+1} = gcd(a_k, a_k')`.
fn squarefree_factors(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut chain = vec![f.monic()];
    while chain.last().unwrap().deg().unwrap_or(0) >= 1 {
        let last = chain.last().unwrap();
        chain.push(rat_gcd_monic(last, &last.derivative()));
    }
    // b_i = a_{i-1} / a_i collects factors of multiplicity >= i; the factor
    // of exact multiplicity i is b_i / b_{i+1}.
    let mut b = Vec::new();
    for w in chain.windows(2) {
        b.push(w[0].div_exact(&w[1]));
    }
    let mut out = Vec::new();
    for i in 0..b.len() {
        let next = if i + 1 < b.len() {
            b[i].div_exact(&b[i + 1])
        } else {
            b[i].clone()
        };
        if next.deg().unwrap_or(0) >= 1 {
            out.push((next.monic(), i + 1));
        }
    }
    out
}

struct SturmChain {
    chain: Vec<RatPoly>,
}

impl SturmChain {
    /// Sturm sequence of a square-free polynomial. Every element is scaled
    /// by a positive constant (|leading coefficient|) to keep sizes down;
    /// positive scaling preserves the sign-variation counts.
    fn new(f: &RatPoly) -> Self {
        let normalize = |p: RatPoly| -> RatPoly {
            match p.leading() {
                None => p,
                Some(lc) => {
                    let s = lc.abs().recip();
                    p.scale(&s)
                }
            }
        };
        let mut chain = vec![normalize(f.clone()), normalize(f.derivative())];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(normalize(-&r));
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut prev: Option<bool> = None;
        for p in &self.chain {
            let v = p.evaluate(x);
            if v.is_zero() {
                continue;
            }
            let sign = v.is_positive();
            if let Some(ps) = prev {
                if ps != sign {
                    count += 1;
                }
            }
            prev = Some(sign);
        }
        count
    }
}

/// 1 + max |a_i| / |a_n|: every real root lies strictly inside (-B, B).
fn cauchy_bound(f: &RatPoly) -> BigRational {
    let lc = f.leading().expect("nonzero polynomial").abs();
    let mut m = BigRational::zero();
    let d = f.deg().unwrap();
    for c in &f.coeffs()[..d] {
        let a = c.abs() / &lc;
        if a > m {
            m = a;
        }
    }
    m + BigRational::one()
}

/// Recursively split `(lo, hi]` until every interval holds exactly one root.
/// Split points are chosen off the roots of `f` so that Sturm counts stay
/// valid; any root hit exactly lands in the left half and is recovered
/// during refinement.
fn isolate(
    chain: &SturmChain,
    f: &RatPoly,
    lo: BigRational,
    hi: BigRational,
    vl: usize,
    vh: usize,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    let count = vl - vh;
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push((lo, hi));
        return;
    }
    let two = BigRational::from(BigInt::from(2));
    let mid = (&lo + &hi) / &two;
    let mut split = mid.clone();
    let mut step = (&hi - &lo) / BigRational::from(BigInt::from(4));
    while f.evaluate(&split).is_zero() {
        split = &mid + &step;
        step = step / &two;
    }
    let vm = chain.variations_at(&split);
    isolate(chain, f, lo, split.clone(), vl, vm, out);
    isolate(chain, f, split, hi, vm, vh, out);
}
