//! Numerical verification of the zero-location statements: the
//! four-constraint containment region, the minimum-modulus coefficient
//! bound, the remainder sandwich, convergence of zeros to the limit
//! curve, the singular-point prediction via the first zero of erfc, the
//! Szego-curve limit for small r/n, and the half-line limit for r near n.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::BigComplex;
use crate::error::{Error, Result};
use crate::exactpoly::{self, SectionParams};
use crate::geometry::{self, Alpha, Branch};
use crate::real::{self, RM};
use crate::solver::{self, ZeroSet};

pub use crate::erfc::erfc_zero;

/// Absolute tolerance for direct inequality checks on exact coefficients.
const INEQ_TOL_EXP: i64 = -64;

fn cmp(a: &BigFloat, b: &BigFloat) -> std::cmp::Ordering {
    a.partial_cmp(b).expect("finite comparison")
}

fn is_lt(a: &BigFloat, b: &BigFloat) -> bool {
    cmp(a, b) == std::cmp::Ordering::Less
}

// ---------------------------------------------------------------------------
// Containment region
// ---------------------------------------------------------------------------

/// Signed margins of one zero against the four containment constraints;
/// positive means strictly inside the allowed region.
#[derive(Clone, Debug)]
pub struct ZeroMargins {
    pub zero: BigComplex,
    /// `r/(n+1-r) - |z|`: distance inside the outer modulus bound.
    pub margin_outer: BigFloat,
    /// `rho - |z - c|` for the circle with `c = g^2/(1-g^2)`,
    /// `rho = g/(1-g^2)`, `g = r/(n-1)`.
    pub margin_circle: BigFloat,
    /// `Re z + 1/2`: distance right of the vertical line.
    pub margin_halfplane: BigFloat,
    /// `|z|^b / |1+z| - K_b` with `b = r/n`: positive means exterior to
    /// the limit curve's level set.
    pub margin_curve: BigFloat,
    pub pass: bool,
}

/// Containment check over a full zero set.
#[derive(Debug)]
pub struct RegionReport {
    pub params: SectionParams,
    pub precision_bits: usize,
    /// Margins are accepted down to `-2^tolerance_exp` (root error only).
    pub tolerance_exp: i64,
    pub records: Vec<ZeroMargins>,
    pub pass: bool,
}

#[derive(Serialize)]
struct MarginJson {
    re: String,
    im: String,
    margin_outer: String,
    margin_circle: String,
    margin_halfplane: String,
    margin_curve: String,
    pass: bool,
}

#[derive(Serialize)]
struct RegionJson {
    r: u64,
    n: u64,
    precision_bits: usize,
    tolerance_exp: i64,
    pass: bool,
    zeros: Vec<MarginJson>,
}

impl RegionReport {
    fn rows(&self) -> Vec<MarginJson> {
        self.records
            .iter()
            .map(|m| {
                let (re, im) = m.zero.fmt_pair();
                MarginJson {
                    re,
                    im,
                    margin_outer: real::fmt_dec(&m.margin_outer),
                    margin_circle: real::fmt_dec(&m.margin_circle),
                    margin_halfplane: real::fmt_dec(&m.margin_halfplane),
                    margin_curve: real::fmt_dec(&m.margin_curve),
                    pass: m.pass,
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let record = RegionJson {
            r: self.params.r(),
            n: self.params.n(),
            precision_bits: self.precision_bits,
            tolerance_exp: self.tolerance_exp,
            pass: self.pass,
            zeros: self.rows(),
        };
        serde_json::to_string(&record).expect("region report serialization")
    }

    pub fn write_csv<W: std::io::Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(
            w,
            "re,im,margin_outer,margin_circle,margin_halfplane,margin_curve,pass"
        )?;
        for row in self.rows() {
            writeln!(
                w,
                "{},{},{},{},{},{},{}",
                row.re,
                row.im,
                row.margin_outer,
                row.margin_circle,
                row.margin_halfplane,
                row.margin_curve,
                row.pass
            )?;
        }
        Ok(())
    }
}

/// Check every zero against the four containment constraints.
///
/// Requires `1 <= r <= n-2`; the containment statement excludes the two
/// top indices (for `r = n` there are no finite constraints and for
/// `r = n-1` the zeros sit exactly on the boundary line).
pub fn check_region(zs: &ZeroSet) -> Result<RegionReport> {
    let r = zs.params.r();
    let n = zs.params.n();
    if r < 1 || r + 1 >= n {
        return Err(Error::Hypothesis(format!(
            "containment region needs 1 <= r <= n-2, got r={r}, n={n}"
        )));
    }
    let p = real::align(zs.precision_bits);
    let wp = p + 32;
    let tolerance_exp = -((p / 4) as i64);
    let neg_tol = real::pow2(tolerance_exp, 64).neg();

    let outer = real::ratio(r as i64, (n + 1 - r) as i64, wp);
    let gamma = real::ratio(r as i64, (n - 1) as i64, wp);
    let gamma_sq = gamma.mul(&gamma, wp, RM);
    let one = real::from_u64(1, wp);
    let denom = one.sub(&gamma_sq, wp, RM);
    let center = BigComplex::from_real(gamma_sq.div(&denom, wp, RM), wp);
    let radius = gamma.div(&denom, wp, RM);
    let half = real::ratio(1, 2, wp);
    let beta = zs.params.beta(wp);
    let k_beta = geometry::k_alpha(&Alpha::new(beta.clone(), wp)?);
    let one_c = BigComplex::one(wp);

    let mut records = Vec::with_capacity(zs.zeros.len());
    let mut all_pass = true;
    for z in &zs.zeros {
        let zw = z.round_to(wp);
        let abs = zw.abs();
        let margin_outer = outer.sub(&abs, wp, RM);
        let margin_circle = radius.sub(&zw.sub(&center).abs(), wp, RM);
        let margin_halfplane = zw.re().add(&half, wp, RM);
        let level = real::powf(&abs, &beta, wp).div(&one_c.add(&zw).abs(), wp, RM);
        let margin_curve = level.sub(&k_beta, wp, RM);
        let pass = !is_lt(&margin_outer, &neg_tol)
            && !is_lt(&margin_circle, &neg_tol)
            && !is_lt(&margin_halfplane, &neg_tol)
            && !is_lt(&margin_curve, &neg_tol);
        all_pass &= pass;
        records.push(ZeroMargins {
            zero: z.clone(),
            margin_outer,
            margin_circle,
            margin_halfplane,
            margin_curve,
            pass,
        });
    }
    Ok(RegionReport {
        params: zs.params,
        precision_bits: p,
        tolerance_exp,
        records,
        pass: all_pass,
    })
}

// ---------------------------------------------------------------------------
// Minimum-modulus coefficient bound
// ---------------------------------------------------------------------------

/// Result of sampling `|f|` on the unit circle against the coefficient
/// bound `(b_0 - b_1)/(b_0 + b_1) * f(1)`.
#[derive(Debug)]
pub struct MinModulusReport {
    pub bound: BigFloat,
    pub min_modulus: BigFloat,
    pub trials: usize,
    pub pass: bool,
}

/// Validate the admissibility of a coefficient sequence for the
/// minimum-modulus bound: `b_0 > b_1 >= 0`, all `b_k >= 0`, and
/// `b_1 b_{k-1} - b_0 b_k >= 0` for `k >= 1`.
fn validate_sequence(b: &[BigRational]) -> Result<()> {
    if b.len() < 2 {
        return Err(Error::Domain(
            "coefficient sequence needs at least two terms".into(),
        ));
    }
    for (k, bk) in b.iter().enumerate() {
        if bk.is_negative() {
            return Err(Error::Domain(format!(
                "coefficient at index {k} is negative"
            )));
        }
    }
    if b[0] <= b[1] {
        return Err(Error::Domain(
            "coefficient at index 1 must be strictly below index 0".into(),
        ));
    }
    for k in 1..b.len() {
        let lhs = &b[1] * &b[k - 1];
        let rhs = &b[0] * &b[k];
        if lhs < rhs {
            return Err(Error::Domain(format!(
                "ratio condition fails at index {k}: b1*b[k-1] < b0*b[k]"
            )));
        }
    }
    Ok(())
}

fn rational_to_bigfloat(q: &BigRational, p: usize) -> BigFloat {
    real::ratio_big(q.numer(), q.denom(), p)
}

/// Check `min_{|z|=1} |f(z)| >= (b_0-b_1)/(b_0+b_1) * f(1)` by dense
/// boundary sampling (`f` has no zeros to hide inside the disk by the
/// minimum-modulus principle, so the boundary minimum is the disk
/// minimum).
pub fn check_min_modulus_bound(b: &[BigRational], trials: usize) -> Result<MinModulusReport> {
    validate_sequence(b)?;
    if trials < 8 {
        return Err(Error::Domain(format!(
            "boundary sampling needs at least 8 trials, got {trials}"
        )));
    }
    let wp = real::align(192);
    let f1: BigRational = b.iter().sum();
    let bound_q = (&b[0] - &b[1]) / (&b[0] + &b[1]) * &f1;
    let bound = rational_to_bigfloat(&bound_q, wp);
    let coeffs: Vec<BigComplex> = b
        .iter()
        .map(|q| BigComplex::from_real(rational_to_bigfloat(q, wp), wp))
        .collect();
    // Walk the boundary by repeated rotation instead of per-point trig; the
    // multiplicative drift after `trials` steps is below 2^(-wp+2)*trials,
    // many orders under the decision tolerance.
    let step_angle = real::two_pi(wp).mul(&real::ratio(1, trials as i64, wp), wp, RM);
    let step = BigComplex::new(
        real::cos(&step_angle, wp),
        real::sin(&step_angle, wp),
        wp,
    );
    let mut z = BigComplex::one(wp);

    let mut min_modulus: Option<BigFloat> = None;
    for j in 0..trials {
        if j > 0 {
            z = z.mul(&step);
        }
        let mut acc = BigComplex::zero(wp);
        for c in coeffs.iter().rev() {
            acc = acc.mul(&z).add(c);
        }
        let m = acc.abs();
        min_modulus = Some(match min_modulus {
            None => m,
            Some(cur) => {
                if is_lt(&m, &cur) {
                    m
                } else {
                    cur
                }
            }
        });
    }
    let min_modulus = min_modulus.expect("at least one trial");
    let tol = real::pow2(INEQ_TOL_EXP, 64);
    let pass = !is_lt(&min_modulus, &bound.sub(&tol, wp, RM));
    Ok(MinModulusReport {
        bound,
        min_modulus,
        trials,
        pass,
    })
}

/// The coefficient sequence `b_k = C(n, r+1+k) (r/(n-r))^k` of the
/// normalized remainder on the circle of radius `r/(n-r)`; it satisfies
/// the admissibility conditions of the minimum-modulus bound.
pub fn remainder_coefficient_sequence(params: &SectionParams) -> Result<Vec<BigRational>> {
    let r = params.r();
    let n = params.n();
    if r + 1 >= n {
        return Err(Error::Hypothesis(format!(
            "remainder sequence needs r <= n-2, got r={r}, n={n}"
        )));
    }
    let z_beta = BigRational::new(BigInt::from(r), BigInt::from(n - r));
    let mut out = Vec::with_capacity((n - r) as usize);
    let mut power = BigRational::from_integer(BigInt::from(1));
    for k in 0..(n - r) {
        let c = BigRational::from_integer(exactpoly::binomial(n, r + 1 + k));
        out.push(c * &power);
        power *= &z_beta;
    }
    Ok(out)
}

/// Closed form of `(b_0-b_1)/(b_0+b_1)` for the remainder sequence:
/// `(2n-r) / (2r(n-r) + 2n - 3r)`.
pub fn remainder_head_ratio(params: &SectionParams) -> Result<BigRational> {
    let r = params.r();
    let n = params.n();
    if r + 1 >= n {
        return Err(Error::Hypothesis(format!(
            "remainder sequence needs r <= n-2, got r={r}, n={n}"
        )));
    }
    Ok(BigRational::new(
        BigInt::from(2 * n - r),
        BigInt::from(2 * r * (n - r) + 2 * n - 3 * r),
    ))
}

// ---------------------------------------------------------------------------
// Remainder sandwich
// ---------------------------------------------------------------------------

/// Result of sampling the remainder sandwich on the disk
/// `|z| <= r/(n-r)`: `lower(z) <= |R(z)| <= bound` with
/// `lower(z) = |z| * (b0-b1)/(b0+b1) * (n-r)/r * bound`, where `b_k` is
/// the normalized remainder coefficient sequence. This is the constant
/// the minimum-modulus argument actually delivers; it is tight at
/// `r = n-2` and implies the weaker `|z|/(r+1) * bound` whenever
/// `r/n <= 1/2` (for `r/n > 1/2` that weaker form is simply false:
/// at (38,40), z = -19 the true ratio is 0.356 against its 0.487).
/// Excess/deficit are normalized by the bound so tolerances are
/// scale-free.
#[derive(Debug)]
pub struct RemainderReport {
    pub params: SectionParams,
    pub samples: usize,
    /// `max |R|/bound - 1` over samples; nonpositive up to tolerance.
    pub worst_upper_excess: BigFloat,
    /// `max (lower(z)/bound - |R|/bound)` over samples; nonpositive up
    /// to tolerance.
    pub worst_lower_deficit: BigFloat,
    pub pass: bool,
}

/// The exact value `sum_{k>r} C(n,k) (r/(n-r))^{k-r}` shared by both
/// sides of the sandwich; equals the remainder evaluated at the positive
/// real point of the sampling circle.
pub fn remainder_bound_exact(params: &SectionParams) -> Result<BigRational> {
    let r = params.r();
    let n = params.n();
    if r >= n {
        return Err(Error::Hypothesis(format!(
            "remainder bound needs r < n, got r={r}, n={n}"
        )));
    }
    let z_beta = BigRational::new(BigInt::from(r), BigInt::from(n - r));
    Ok(exactpoly::build_remainder(params)?.evaluate_rational(&z_beta))
}

/// Check the remainder sandwich at deterministic corner cases plus
/// seeded random points of the closed disk `|z| <= r/(n-r)`.
pub fn check_remainder_bounds(params: &SectionParams, z_samples: usize) -> Result<RemainderReport> {
    let r = params.r();
    let n = params.n();
    if r >= n {
        return Err(Error::Hypothesis(format!(
            "remainder sandwich needs r < n, got r={r}, n={n}"
        )));
    }
    if z_samples < 4 {
        return Err(Error::Domain(format!(
            "need at least 4 samples, got {z_samples}"
        )));
    }
    // Coefficients up to 2^n convert exactly once wp comfortably exceeds n.
    let wp = real::align(256 + n as usize);
    let remainder = exactpoly::build_remainder(params)?;
    let bound = rational_to_bigfloat(&remainder_bound_exact(params)?, wp);
    let z_beta = params.z_beta(wp)?;
    let z_beta_f = real::to_f64(&z_beta);
    // Lower-bound constant from the minimum-modulus bound applied to the
    // normalized remainder with coefficients b_k = C(n,r+1+k) (r/(n-r))^k:
    // |R(z)| >= |z| * (b0-b1)/(b0+b1) * (n-r)/r * bound.
    let b0 = BigRational::from(exactpoly::binomial(n, r + 1));
    let b1 = if r + 2 <= n {
        BigRational::from(exactpoly::binomial(n, r + 2))
            * BigRational::new(BigInt::from(r), BigInt::from(n - r))
    } else {
        BigRational::zero()
    };
    let c_low = (&b0 - &b1) / (&b0 + &b1)
        * BigRational::new(BigInt::from(n - r), BigInt::from(r));
    let lower_factor = rational_to_bigfloat(&c_low, wp);
    let tol = real::pow2(INEQ_TOL_EXP, 64);

    let mut rng = ChaCha8Rng::seed_from_u64(0x00b1_5a2d_7e11_0a42);
    let mut points: Vec<BigComplex> = vec![
        // Positive real boundary point: the upper bound is an equality.
        BigComplex::from_real(z_beta.clone(), wp),
        // Origin: the lower bound degenerates to 0 <= 0.
        BigComplex::zero(wp),
        // Negative real boundary point.
        BigComplex::from_real(z_beta.neg(), wp),
    ];
    while points.len() < z_samples {
        let u: f64 = rng.random();
        let v: f64 = rng.random();
        let rad = z_beta_f * u.sqrt();
        let ang = 2.0 * std::f64::consts::PI * v;
        points.push(BigComplex::from_f64(
            rad * ang.cos(),
            rad * ang.sin(),
            wp,
        ));
    }

    let mut worst_upper_excess: Option<BigFloat> = None;
    let mut worst_lower_deficit: Option<BigFloat> = None;
    for z in &points {
        let ratio = remainder.evaluate(z).abs().div(&bound, wp, RM);
        let excess = ratio.sub(&real::from_u64(1, wp), wp, RM);
        let deficit = z.abs().mul(&lower_factor, wp, RM).sub(&ratio, wp, RM);
        let track_max = |cur: &mut Option<BigFloat>, v: BigFloat| {
            *cur = Some(match cur.take() {
                None => v,
                Some(old) => {
                    if is_lt(&old, &v) {
                        v
                    } else {
                        old
                    }
                }
            });
        };
        track_max(&mut worst_upper_excess, excess);
        track_max(&mut worst_lower_deficit, deficit);
    }
    let worst_upper_excess = worst_upper_excess.expect("samples nonempty");
    let worst_lower_deficit = worst_lower_deficit.expect("samples nonempty");
    let pass = !is_lt(&tol, &worst_upper_excess) && !is_lt(&tol, &worst_lower_deficit);
    Ok(RemainderReport {
        params: *params,
        samples: points.len(),
        worst_upper_excess,
        worst_lower_deficit,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Binomial tail
// ---------------------------------------------------------------------------

/// Exact tail `sum_{k=r+1}^{n} C(n,k) (r/n)^k (1-r/n)^{n-k}` as a
/// rational number.
pub fn tail_sum_exact(params: &SectionParams) -> Result<BigRational> {
    let r = params.r();
    let n = params.n();
    if r >= n {
        return Err(Error::Hypothesis(format!(
            "tail needs r < n, got r={r}, n={n}"
        )));
    }
    let mut numer = BigInt::zero();
    let rr = BigInt::from(r);
    let nr = BigInt::from(n - r);
    for k in (r + 1)..=n {
        numer += exactpoly::binomial(n, k) * rr.pow(k as u32) * nr.pow((n - k) as u32);
    }
    Ok(BigRational::new(numer, BigInt::from(n).pow(n as u32)))
}

/// The tail rounded to `precision_bits`.
pub fn tail_sum(params: &SectionParams, precision_bits: usize) -> Result<BigFloat> {
    let p = real::align(precision_bits);
    Ok(rational_to_bigfloat(&tail_sum_exact(params)?, p))
}

// ---------------------------------------------------------------------------
// Convergence to the limit curve
// ---------------------------------------------------------------------------

/// Distance and scaling statistics of one zero set against its limit
/// curve at `b = r/n`.
#[derive(Debug)]
pub struct ConvergenceRecord {
    pub params: SectionParams,
    pub precision_bits: usize,
    /// `max_z d(z, curve)`.
    pub sup_distance: BigFloat,
    /// `max_z | |z|^b / |1+z| - K_b |`: proximity in the level-set value.
    ///
    /// The Euclidean sup is dominated by the zeros closest to the corner
    /// z_b, whose gap shrinks like n^(-1/2), so it decays like
    /// ln n / sqrt(n). The level residual degenerates at exactly that
    /// corner and decays at the uniform ln n / n rate.
    pub sup_level_residual: BigFloat,
    /// `max_z d(z, curve) * |z - r/(n-r)| * n / ln n`.
    pub rate_statistic: BigFloat,
    /// `min_z |z - r/(n-r)| * sqrt(n)`.
    pub singular_gap: BigFloat,
}

#[derive(Serialize)]
struct ConvergenceJson {
    r: u64,
    n: u64,
    precision_bits: usize,
    sup_distance: String,
    sup_level_residual: String,
    rate_statistic: String,
    singular_gap: String,
}

impl ConvergenceRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ConvergenceJson {
            r: self.params.r(),
            n: self.params.n(),
            precision_bits: self.precision_bits,
            sup_distance: real::fmt_dec(&self.sup_distance),
            sup_level_residual: real::fmt_dec(&self.sup_level_residual),
            rate_statistic: real::fmt_dec(&self.rate_statistic),
            singular_gap: real::fmt_dec(&self.singular_gap),
        })
        .expect("convergence record serialization")
    }

    pub fn csv_header() -> &'static str {
        "n,r,sup_distance,sup_level_residual,rate_statistic,singular_gap"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.params.n(),
            self.params.r(),
            real::fmt_dec(&self.sup_distance),
            real::fmt_dec(&self.sup_level_residual),
            real::fmt_dec(&self.rate_statistic),
            real::fmt_dec(&self.singular_gap)
        )
    }
}

/// Statistics precision: distances are refined well past double range
/// but the statistics themselves only need a comfortable margin.
const STAT_PRECISION: usize = 192;

/// Curve samples used for distance statistics: the sample only seeds the
/// coarse nearest-arc search (refinement re-solves the true curve), so a
/// moderate density and precision suffice and keep ray bisection cheap.
const STAT_CURVE_POINTS: usize = 512;
const STAT_CURVE_PRECISION: usize = 96;

/// Cache of statistic curve samples keyed by the reduced ratio r/n;
/// sweeps at a fixed ratio reuse one sample across every n.
fn curve_sample_for(r: u64, n: u64) -> Result<std::sync::Arc<geometry::CurveSample>> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<geometry::CurveSample>>>> =
        OnceLock::new();
    let g = num_integer::gcd(r, n);
    let key = (r / g, n / g);
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("curve cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let alpha = Alpha::from_ratio(key.0 as i64, key.1 as i64, STAT_CURVE_PRECISION)?;
    let sample = Arc::new(geometry::sample_curve(
        &alpha,
        Branch::Inner,
        STAT_CURVE_POINTS,
    )?);
    cache
        .lock()
        .expect("curve cache lock")
        .insert(key, sample.clone());
    Ok(sample)
}

/// Process-wide sample of the exponential curve shared by rescaled-zero
/// checks.
fn szego_sample() -> Result<std::sync::Arc<Vec<BigComplex>>> {
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<Option<Arc<Vec<BigComplex>>>>> = OnceLock::new();
    let cell = CACHE.get_or_init(|| Mutex::new(None));
    let mut guard = cell.lock().expect("szego cache lock");
    if let Some(hit) = guard.as_ref() {
        return Ok(hit.clone());
    }
    let pts = Arc::new(geometry::szego_curve(1024, STAT_CURVE_PRECISION)?);
    *guard = Some(pts.clone());
    Ok(pts)
}

/// Compute curve-distance statistics for an already-solved zero set.
pub fn convergence_record(zs: &ZeroSet) -> Result<ConvergenceRecord> {
    let r = zs.params.r();
    let n = zs.params.n();
    if r < 1 || r + 1 >= n {
        return Err(Error::Hypothesis(format!(
            "convergence statistics need 1 <= r <= n-2, got r={r}, n={n}"
        )));
    }
    let wp = real::align(STAT_PRECISION);
    let sample = curve_sample_for(r, n)?;
    let alpha = Alpha::from_ratio(r as i64, n as i64, wp)?;
    let z_beta = BigComplex::from_real(zs.params.z_beta(wp)?, wp);

    let mut sup_distance = real::from_u64(0, wp);
    let mut sup_level_residual = real::from_u64(0, wp);
    let mut rate_statistic = real::from_u64(0, wp);
    let mut min_gap: Option<BigFloat> = None;
    for z in &zs.zeros {
        let zw = z.round_to(wp);
        let d = geometry::distance_to_curve(&zw, sample.as_ref())?;
        let level = geometry::level_residual_signed(&alpha, &zw, wp)?.abs();
        let gap = zw.sub(&z_beta).abs();
        let rate = d.mul(&gap, wp, RM);
        if is_lt(&sup_distance, &d) {
            sup_distance = d;
        }
        if is_lt(&sup_level_residual, &level) {
            sup_level_residual = level;
        }
        if is_lt(&rate_statistic, &rate) {
            rate_statistic = rate;
        }
        min_gap = Some(match min_gap.take() {
            None => gap,
            Some(old) => {
                if is_lt(&gap, &old) {
                    gap
                } else {
                    old
                }
            }
        });
    }
    let min_gap = min_gap.ok_or_else(|| Error::Numeric("empty zero set".into()))?;
    let n_f = real::from_u64(n, wp);
    let scale = n_f.div(&real::ln(&n_f, wp), wp, RM);
    let sqrt_n = n_f.sqrt(wp, RM);
    Ok(ConvergenceRecord {
        params: zs.params,
        precision_bits: zs.precision_bits,
        sup_distance,
        sup_level_residual,
        rate_statistic: rate_statistic.mul(&scale, wp, RM),
        singular_gap: min_gap.mul(&sqrt_n, wp, RM),
    })
}

/// Solve each `(round(alpha*n), n)` section and collect convergence
/// statistics across the sweep.
pub fn convergence_sweep(alpha: f64, ns: &[u64]) -> Result<Vec<ConvergenceRecord>> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain(format!(
            "sweep ratio must lie in (0,1), got {alpha}"
        )));
    }
    let mut out = Vec::with_capacity(ns.len());
    for &n in ns {
        let r = (alpha * n as f64).round() as u64;
        if r < 1 || r + 1 >= n {
            return Err(Error::Hypothesis(format!(
                "sweep target r=round({alpha}*{n})={r} outside 1 <= r <= n-2"
            )));
        }
        let params = SectionParams::new(r, n)?;
        let zs = solver::find_zeros(&params, solver::default_precision(n))?;
        out.push(convergence_record(&zs)?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Singular-point prediction
// ---------------------------------------------------------------------------

/// Deviation of the zero nearest the predicted singular approach point
/// `r/(n-r) + sqrt(2b/(1-b)^3) * chi / sqrt(n)`, `b = r/n`.
#[derive(Debug)]
pub struct SingularReport {
    pub params: SectionParams,
    pub predicted: BigComplex,
    pub nearest_zero: BigComplex,
    /// `|nearest_zero - predicted|`.
    pub gap: BigFloat,
    /// `gap * sqrt(n)`; shrinks with n when the prediction captures the
    /// approach.
    pub deviation_statistic: BigFloat,
}

/// The predicted nearest-approach point for the section, given the
/// minimal zero `chi` of erfc.
pub fn singular_prediction(params: &SectionParams, chi: &BigComplex) -> Result<BigComplex> {
    let r = params.r();
    let n = params.n();
    if r >= n {
        return Err(Error::Hypothesis(format!(
            "prediction needs r < n, got r={r}, n={n}"
        )));
    }
    let wp = real::align(STAT_PRECISION);
    // amp^2 = 2b/(1-b)^3 = 2 r n^2 / (n-r)^3, exactly rational.
    let amp_sq = real::ratio_big(
        &(BigInt::from(2u32) * r * n * n),
        &BigInt::from(n - r).pow(3),
        wp,
    );
    let amp = amp_sq.sqrt(wp, RM);
    let scale = amp.div(&real::from_u64(n, wp).sqrt(wp, RM), wp, RM);
    let z_beta = BigComplex::from_real(params.z_beta(wp)?, wp);
    Ok(z_beta.add(&chi.round_to(wp).scale(&scale)))
}

/// Evaluate the prediction against an already-solved zero set.
pub fn singular_check_zeros(zs: &ZeroSet, chi: &BigComplex) -> Result<SingularReport> {
    let predicted = singular_prediction(&zs.params, chi)?;
    let wp = real::align(STAT_PRECISION);
    let mut best: Option<(BigFloat, BigComplex)> = None;
    for z in &zs.zeros {
        let d = z.round_to(wp).sub(&predicted).abs();
        best = Some(match best.take() {
            None => (d, z.clone()),
            Some((old_d, old_z)) => {
                if is_lt(&d, &old_d) {
                    (d, z.clone())
                } else {
                    (old_d, old_z)
                }
            }
        });
    }
    let (gap, nearest_zero) = best.ok_or_else(|| Error::Numeric("empty zero set".into()))?;
    let sqrt_n = real::from_u64(zs.params.n(), wp).sqrt(wp, RM);
    Ok(SingularReport {
        params: zs.params,
        predicted,
        nearest_zero,
        gap: gap.clone(),
        deviation_statistic: gap.mul(&sqrt_n, wp, RM),
    })
}

/// Solve the section at default precision and evaluate the prediction.
pub fn singular_check(params: &SectionParams, chi: &BigComplex) -> Result<SingularReport> {
    let zs = solver::find_zeros(params, solver::default_precision(params.n()))?;
    singular_check_zeros(&zs, chi)
}

// ---------------------------------------------------------------------------
// Szego limit for small r/n
// ---------------------------------------------------------------------------

/// Zeros rescaled by `(n-r)/r` against the curve `|z e^(1-z)| = 1`,
/// `|z| <= 1`.
#[derive(Debug)]
pub struct SzegoReport {
    pub params: SectionParams,
    /// `max_z d((n-r)/r * z, curve)`.
    pub sup_distance: BigFloat,
    /// Smallest rescaled modulus (bounded away from 0 in the limit).
    pub min_modulus: BigFloat,
    /// Largest rescaled modulus (at most 1 in the limit).
    pub max_modulus: BigFloat,
}

#[derive(Serialize)]
struct SzegoJson {
    r: u64,
    n: u64,
    sup_distance: String,
    min_modulus: String,
    max_modulus: String,
}

impl SzegoReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SzegoJson {
            r: self.params.r(),
            n: self.params.n(),
            sup_distance: real::fmt_dec(&self.sup_distance),
            min_modulus: real::fmt_dec(&self.min_modulus),
            max_modulus: real::fmt_dec(&self.max_modulus),
        })
        .expect("szego report serialization")
    }
}

/// Evaluate the rescaled zeros of an already-solved set against a dense
/// sample of the exponential curve.
pub fn szego_check_zeros(zs: &ZeroSet) -> Result<SzegoReport> {
    let r = zs.params.r();
    let n = zs.params.n();
    if r < 1 || r >= n {
        return Err(Error::Hypothesis(format!(
            "rescaled check needs 1 <= r < n, got r={r}, n={n}"
        )));
    }
    let wp = real::align(STAT_PRECISION);
    let curve = szego_sample()?;
    let scale = real::ratio((n - r) as i64, r as i64, wp);
    let mut sup_distance = real::from_u64(0, wp);
    let mut min_modulus: Option<BigFloat> = None;
    let mut max_modulus = real::from_u64(0, wp);
    for z in &zs.zeros {
        let w = z.round_to(wp).scale(&scale);
        let d = geometry::distance_to_polyline(&w, curve.as_slice());
        let m = w.abs();
        if is_lt(&sup_distance, &d) {
            sup_distance = d;
        }
        if is_lt(&max_modulus, &m) {
            max_modulus = m.clone();
        }
        min_modulus = Some(match min_modulus.take() {
            None => m,
            Some(old) => {
                if is_lt(&m, &old) {
                    m
                } else {
                    old
                }
            }
        });
    }
    Ok(SzegoReport {
        params: zs.params,
        sup_distance,
        min_modulus: min_modulus.ok_or_else(|| Error::Numeric("empty zero set".into()))?,
        max_modulus,
    })
}

/// Solve `(r, n)` at default precision and evaluate the rescaled zeros
/// against the exponential curve.
pub fn szego_check(r: u64, n: u64) -> Result<SzegoReport> {
    let params = SectionParams::new(r, n)?;
    let zs = solver::find_zeros(&params, solver::default_precision(n))?;
    szego_check_zeros(&zs)
}

// ---------------------------------------------------------------------------
// Half-line limit for r near n
// ---------------------------------------------------------------------------

/// Deviation of one zero set from the vertical line `Re z = -1/2`.
///
/// Convergence to the line is locally uniform but not global: a few
/// large-modulus zeros escape to infinity with real parts growing
/// linearly in n.  The deviation statistic is therefore taken over the
/// compact window `|Im z| <= 2`, where it does shrink with n.
#[derive(Debug)]
pub struct HalflineRecord {
    pub params: SectionParams,
    /// `max |Re z + 1/2|` over zeros with `|Im z| <= 2`.
    pub max_deviation: BigFloat,
    /// `max |Re z + 1/2|` over all zeros (grows with n; reported for
    /// transparency).
    pub max_deviation_all: BigFloat,
    /// `min_z (Re z + 1/2)` over all zeros; positive when every zero
    /// lies strictly right of the line.
    pub min_margin: BigFloat,
}

#[derive(Serialize)]
struct HalflineJson {
    r: u64,
    n: u64,
    max_deviation: String,
    max_deviation_all: String,
    min_margin: String,
}

impl HalflineRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&HalflineJson {
            r: self.params.r(),
            n: self.params.n(),
            max_deviation: real::fmt_dec(&self.max_deviation),
            max_deviation_all: real::fmt_dec(&self.max_deviation_all),
            min_margin: real::fmt_dec(&self.min_margin),
        })
        .expect("halfline record serialization")
    }

    pub fn csv_header() -> &'static str {
        "r,n,max_deviation,max_deviation_all,min_margin"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.params.r(),
            self.params.n(),
            real::fmt_dec(&self.max_deviation),
            real::fmt_dec(&self.max_deviation_all),
            real::fmt_dec(&self.min_margin)
        )
    }
}

/// Line deviation of an already-solved zero set.
pub fn halfline_record(zs: &ZeroSet) -> Result<HalflineRecord> {
    let wp = real::align(STAT_PRECISION);
    let half = real::ratio(1, 2, wp);
    let window = real::from_u64(2, wp);
    let mut max_deviation = real::from_u64(0, wp);
    let mut max_deviation_all = real::from_u64(0, wp);
    let mut min_margin: Option<BigFloat> = None;
    for z in &zs.zeros {
        let margin = z.re().add(&half, wp, RM);
        let dev = margin.abs();
        if is_lt(&max_deviation_all, &dev) {
            max_deviation_all = dev.clone();
        }
        if !is_lt(&window, &z.im().abs()) && is_lt(&max_deviation, &dev) {
            max_deviation = dev;
        }
        min_margin = Some(match min_margin.take() {
            None => margin,
            Some(old) => {
                if is_lt(&margin, &old) {
                    margin
                } else {
                    old
                }
            }
        });
    }
    Ok(HalflineRecord {
        params: zs.params,
        max_deviation,
        max_deviation_all,
        min_margin: min_margin.ok_or_else(|| Error::Numeric("empty zero set".into()))?,
    })
}

/// For each n solve the `r = n-3` section (the simplest family with
/// `r/n -> 1` that avoids the exactly-solvable `r = n-1` case) and
/// report the deviation from `Re z = -1/2`.
pub fn halfline_check(ns: &[u64]) -> Result<Vec<HalflineRecord>> {
    let mut out = Vec::with_capacity(ns.len());
    for &n in ns {
        if n < 4 {
            return Err(Error::Hypothesis(format!(
                "half-line family needs n >= 4, got n={n}"
            )));
        }
        let params = SectionParams::new(n - 3, n)?;
        let zs = solver::find_zeros(&params, solver::default_precision(n))?;
        out.push(halfline_record(&zs)?);
    }
    Ok(out)
}
