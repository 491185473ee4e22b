//! Limit-curve constructions: the constant K_alpha, the bounded curve
//! family |z|^alpha / |1+z| = K_alpha (inner and outer branches), its
//! negative-axis crossing X_alpha, the constant nu, angle-quantized points
//! on the curve, the exponential (Szego) curve |z e^(1-z)| = 1, and
//! distance queries against sampled curves.
//!
//! Every curve point is produced by bisection along a ray from the origin:
//! for fixed angle theta the profile c_theta(rho) = rho^alpha / |1 + rho
//! e^(i theta)| is unimodal in rho, increasing up to a peak radius that is
//! a root of a quadratic, so each ray carries exactly one inner-branch
//! point (before the peak) and one outer-branch point (after it).  All
//! solving happens on log form, which needs only two `ln` evaluations per
//! bisection step.

use astro_float::BigFloat;
use serde::Serialize;

use crate::complex::BigComplex;
use crate::error::{Error, Result};
use crate::real::{self, RM};

/// Ratio parameter in the open interval (0,1) with an attached working
/// precision; every derived quantity (K_alpha, z_alpha, curve samples) is
/// computed at this precision.
#[derive(Clone, Debug)]
pub struct Alpha {
    value: BigFloat,
    precision: usize,
}

impl Alpha {
    pub fn new(value: BigFloat, precision_bits: usize) -> Result<Self> {
        let p = real::align(precision_bits);
        let v = real::rounded(&value, p);
        let zero = real::from_u64(0, 64);
        let one = real::from_u64(1, 64);
        let inside = v.partial_cmp(&zero) == Some(std::cmp::Ordering::Greater)
            && v.partial_cmp(&one) == Some(std::cmp::Ordering::Less);
        if !inside {
            return Err(Error::Domain(format!(
                "alpha must lie strictly inside (0,1), got {}",
                real::fmt_dec(&v)
            )));
        }
        Ok(Self {
            value: v,
            precision: p,
        })
    }

    pub fn from_f64(value: f64, precision_bits: usize) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::Domain("alpha must be finite".into()));
        }
        Self::new(real::from_f64(value, real::align(precision_bits)), precision_bits)
    }

    /// Exact rational alpha = num/den, correctly rounded to precision.
    pub fn from_ratio(num: i64, den: i64, precision_bits: usize) -> Result<Self> {
        if den <= 0 || num <= 0 || num >= den {
            return Err(Error::Domain(format!(
                "alpha ratio must satisfy 0 < num < den, got {num}/{den}"
            )));
        }
        Self::new(real::ratio(num, den, real::align(precision_bits)), precision_bits)
    }

    pub fn value(&self) -> &BigFloat {
        &self.value
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    /// 1 - alpha at working precision.
    fn complement(&self, wp: usize) -> BigFloat {
        real::from_u64(1, wp).sub(&self.value, wp, RM)
    }
}

/// K_alpha = alpha^alpha (1-alpha)^(1-alpha), in [1/2, 1).
pub fn k_alpha(alpha: &Alpha) -> BigFloat {
    let p = alpha.precision();
    let wp = p + 32;
    real::rounded(&ln_k_alpha(alpha, wp).map(|l| real::exp(&l, wp)).expect("alpha validated"), p)
}

/// ln K_alpha = alpha ln alpha + (1-alpha) ln(1-alpha).
fn ln_k_alpha(alpha: &Alpha, wp: usize) -> Result<BigFloat> {
    let a = real::rounded(alpha.value(), wp);
    let b = alpha.complement(wp);
    let la = real::ln(&a, wp);
    let lb = real::ln(&b, wp);
    Ok(a.mul(&la, wp, RM).add(&b.mul(&lb, wp, RM), wp, RM))
}

/// z_alpha = alpha / (1 - alpha), the positive real point of the curve.
pub fn z_alpha(alpha: &Alpha) -> BigFloat {
    let p = alpha.precision();
    let wp = p + 32;
    let v = real::rounded(alpha.value(), wp);
    real::rounded(&v.div(&alpha.complement(wp), wp, RM), p)
}

/// The unique positive root of x e^(1+x) = 1 (equivalently ln x + 1 + x =
/// 0), the innermost point of the Szego curve; leading digits 0.278...
pub fn nu_constant(precision_bits: usize) -> BigFloat {
    let p = real::align(precision_bits.max(64));
    let wp = p + 64;
    // Newton iteration on f(x) = ln x + 1 + x from x0 = 1/4; the error
    // roughly squares each step, so a fixed count covering wp bits keeps
    // the result deterministic.
    let mut x = real::ratio(1, 4, wp);
    let one = real::from_u64(1, wp);
    let iters = (usize::BITS - wp.leading_zeros()) as usize + 3;
    for _ in 0..iters {
        let f = real::ln(&x, wp).add(&one, wp, RM).add(&x, wp, RM);
        let fp = x.reciprocal(wp, RM).add(&one, wp, RM);
        x = x.sub(&f.div(&fp, wp, RM), wp, RM);
    }
    real::rounded(&x, p)
}

/// X_alpha: the intersection of the inner branch with the negative real
/// axis, i.e. the root t in (0, 1/2) of t^alpha = K_alpha (1 - t).
pub fn x_alpha(alpha: &Alpha) -> BigFloat {
    let p = alpha.precision();
    let wp = p + 32;
    let ln_k = ln_k_alpha(alpha, wp).expect("alpha validated");
    let a = real::rounded(alpha.value(), wp);
    let one = real::from_u64(1, wp);
    // f(t) = alpha ln t - ln(1-t) - ln K is strictly increasing on (0,1),
    // negative near 0 and positive at 1/2 (since K_alpha < 1 <= 2^(1-alpha)).
    let f = |t: &BigFloat| -> BigFloat {
        let lt = real::ln(t, wp);
        let l1t = real::ln(&one.sub(t, wp, RM), wp);
        a.mul(&lt, wp, RM).sub(&l1t, wp, RM).sub(&ln_k, wp, RM)
    };
    let mut lo = real::ratio(1, 4, wp);
    let zero = real::from_u64(0, 64);
    while f(&lo).partial_cmp(&zero) != Some(std::cmp::Ordering::Less) {
        lo = lo.mul(&real::pow2(-1, 64), wp, RM);
    }
    let mut hi = real::ratio(1, 2, wp);
    let half = real::pow2(-1, wp);
    for _ in 0..(p + 8) {
        let mid = lo.add(&hi, wp, RM).mul(&half, wp, RM);
        if f(&mid).partial_cmp(&zero) == Some(std::cmp::Ordering::Less) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    real::rounded(&lo.add(&hi, wp, RM).mul(&half, wp, RM), p)
}

/// Which solution of the level equation a ray carries: the branch inside
/// the peak radius (modulus <= z_alpha) or beyond it (modulus >= z_alpha).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Inner,
    Outer,
}

/// A polyline of points on one branch, ordered by angle theta in [0, 2pi),
/// with the per-point level-set residual | |z|^alpha / |1+z| - K_alpha |.
#[derive(Clone, Debug)]
pub struct CurveSample {
    pub alpha: Alpha,
    pub branch: Branch,
    pub precision_bits: usize,
    pub thetas: Vec<BigFloat>,
    pub points: Vec<BigComplex>,
    pub residuals: Vec<BigFloat>,
}

#[derive(Serialize)]
struct CurvePointJson {
    theta: String,
    re: String,
    im: String,
    residual: String,
}

#[derive(Serialize)]
struct CurveSampleJson {
    alpha: String,
    branch: Branch,
    precision_bits: usize,
    points: Vec<CurvePointJson>,
}

impl CurveSample {
    pub fn to_json(&self) -> String {
        let record = CurveSampleJson {
            alpha: real::fmt_dec(self.alpha.value()),
            branch: self.branch,
            precision_bits: self.precision_bits,
            points: self
                .thetas
                .iter()
                .zip(&self.points)
                .zip(&self.residuals)
                .map(|((t, z), res)| {
                    let (re, im) = z.fmt_pair();
                    CurvePointJson {
                        theta: real::fmt_dec(t),
                        re,
                        im,
                        residual: real::fmt_dec(res),
                    }
                })
                .collect(),
        };
        serde_json::to_string(&record).expect("curve sample serialization")
    }

    pub fn write_csv<W: std::io::Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "theta,re,im,residual")?;
        for ((t, z), res) in self.thetas.iter().zip(&self.points).zip(&self.residuals) {
            let (re, im) = z.fmt_pair();
            writeln!(w, "{},{},{},{}", real::fmt_dec(t), re, im, real::fmt_dec(res))?;
        }
        Ok(())
    }
}

/// Ray solver for one (alpha, branch) pair: caches ln K_alpha, the axis
/// crossings, and the working precision so repeated `point_at` calls stay
/// cheap.
pub struct RaySolver {
    alpha: Alpha,
    branch: Branch,
    precision: usize,
    wp: usize,
    steps: usize,
    ln_k: BigFloat,
    k: BigFloat,
    z_alpha: BigFloat,
    x_alpha: BigFloat,
    /// Universal inner lower bracket: every inner-branch radius is at
    /// least X_alpha, so X_alpha/2 sits strictly below the level set on
    /// every ray.
    inner_lo: BigFloat,
}

impl RaySolver {
    pub fn new(alpha: &Alpha, branch: Branch, precision_bits: usize) -> Result<Self> {
        let p = real::align(precision_bits);
        let wp = p + 32;
        let mut a = alpha.clone();
        if a.precision() < wp {
            a = Alpha::new(a.value().clone(), wp)?;
        }
        let ln_k = ln_k_alpha(&a, wp)?;
        let k = real::exp(&ln_k, wp);
        let za = {
            let v = real::rounded(a.value(), wp);
            v.div(&a.complement(wp), wp, RM)
        };
        let xa = {
            let local = Alpha::new(a.value().clone(), p)?;
            real::rounded(&x_alpha(&local), wp)
        };
        let inner_lo = xa.mul(&real::pow2(-1, wp), wp, RM);
        // Enough bisection steps that the level-set residual clears the
        // 2^(-precision/2) certificate with headroom.
        let steps = (p / 2 + 48).max(80);
        Ok(Self {
            alpha: a,
            branch,
            precision: p,
            wp,
            steps,
            ln_k,
            k,
            z_alpha: za,
            x_alpha: xa,
            inner_lo,
        })
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn k(&self) -> BigFloat {
        real::rounded(&self.k, self.precision)
    }

    pub fn z_alpha_value(&self) -> BigFloat {
        real::rounded(&self.z_alpha, self.precision)
    }

    pub fn x_alpha_value(&self) -> BigFloat {
        real::rounded(&self.x_alpha, self.precision)
    }

    /// Radius profile on log form: g(rho) = alpha ln rho - ln|1 + rho
    /// e^(i theta)| - ln K, with |1+z|^2 expanded as 1 + 2 rho cos(theta)
    /// + rho^2.
    fn g(&self, rho: &BigFloat, cos_t: &BigFloat) -> BigFloat {
        let wp = self.wp;
        let a = self.alpha.value();
        let one = real::from_u64(1, wp);
        let two = real::from_u64(2, wp);
        let sq = one
            .add(&two.mul(rho, wp, RM).mul(cos_t, wp, RM), wp, RM)
            .add(&rho.mul(rho, wp, RM), wp, RM);
        let half_ln_sq = real::ln(&sq, wp).mul(&real::pow2(-1, wp), wp, RM);
        a.mul(&real::ln(rho, wp), wp, RM)
            .sub(&half_ln_sq, wp, RM)
            .sub(&self.ln_k, wp, RM)
    }

    /// Peak radius of the profile on the ray with cos(theta) = c: the
    /// positive root of (1-alpha) rho^2 - (2 alpha - 1) c rho - alpha = 0.
    fn peak(&self, cos_t: &BigFloat) -> BigFloat {
        let wp = self.wp;
        let a = self.alpha.value();
        let one = real::from_u64(1, wp);
        let two = real::from_u64(2, wp);
        let one_minus_a = self.alpha.complement(wp);
        let b = two.mul(a, wp, RM).sub(&one, wp, RM).mul(cos_t, wp, RM);
        let four_a = real::from_u64(4, wp).mul(a, wp, RM);
        let disc = b
            .mul(&b, wp, RM)
            .add(&four_a.mul(&one_minus_a, wp, RM), wp, RM);
        b.add(&disc.sqrt(wp, RM), wp, RM)
            .div(&two.mul(&one_minus_a, wp, RM), wp, RM)
    }

    /// Radius of the branch point on the ray at `theta` (radians in
    /// [0, 2pi); only cos(theta) matters).  `theta` exactly 0 or pi is
    /// answered analytically with z_alpha and X_alpha.
    pub fn radius_at(&self, theta: &BigFloat) -> Result<BigFloat> {
        let wp = self.wp;
        if theta.is_zero() {
            // Both branches meet the positive axis tangentially at z_alpha.
            return Ok(self.z_alpha.clone());
        }
        let pi = real::pi(wp);
        if theta.partial_cmp(&pi) == Some(std::cmp::Ordering::Equal) {
            return Ok(match self.branch {
                Branch::Inner => self.x_alpha.clone(),
                Branch::Outer => {
                    // Decreasing tail of g on (1, infinity); bracket just
                    // past the pole at 1 and double outward.
                    let lo = real::from_u64(1, wp).add(&real::pow2(-40, wp), wp, RM);
                    return self.bisect_decreasing(lo, &real::from_i64(-1, wp));
                }
            });
        }
        let cos_t = real::cos(theta, wp);
        let peak = self.peak(&cos_t);
        let zero = real::from_u64(0, 64);
        let shave = real::from_u64(1, wp).sub(&real::pow2(-40, wp), wp, RM);
        match self.branch {
            Branch::Inner => {
                let lo = self.inner_lo.clone();
                let hi = peak.mul(&shave, wp, RM);
                if !(self.g(&lo, &cos_t).partial_cmp(&zero) == Some(std::cmp::Ordering::Less)) {
                    return Err(Error::Numeric("inner ray bracket failed at low end".into()));
                }
                if !(self.g(&hi, &cos_t).partial_cmp(&zero) == Some(std::cmp::Ordering::Greater)) {
                    return Err(Error::Numeric(
                        "inner ray bracket failed below peak radius".into(),
                    ));
                }
                Ok(self.bisect(lo, hi, &cos_t, true))
            }
            Branch::Outer => {
                let lo = peak.div(&shave, wp, RM);
                self.bisect_decreasing(lo, &cos_t)
            }
        }
    }

    /// Bisection on an increasing (inner) or decreasing (outer) stretch of
    /// the profile; `increasing` selects the sign convention.
    fn bisect(&self, mut lo: BigFloat, mut hi: BigFloat, cos_t: &BigFloat, increasing: bool) -> BigFloat {
        let wp = self.wp;
        let zero = real::from_u64(0, 64);
        let half = real::pow2(-1, wp);
        for _ in 0..self.steps {
            let mid = lo.add(&hi, wp, RM).mul(&half, wp, RM);
            let below = self.g(&mid, cos_t).partial_cmp(&zero) == Some(std::cmp::Ordering::Less);
            if below == increasing {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo.add(&hi, wp, RM).mul(&half, wp, RM)
    }

    /// Outer-branch solve: g decreases past the peak, so double the upper
    /// end until the profile drops below the level, then bisect.
    fn bisect_decreasing(&self, lo: BigFloat, cos_t: &BigFloat) -> Result<BigFloat> {
        let wp = self.wp;
        let zero = real::from_u64(0, 64);
        if !(self.g(&lo, cos_t).partial_cmp(&zero) == Some(std::cmp::Ordering::Greater)) {
            return Err(Error::Numeric("outer ray bracket failed above peak".into()));
        }
        let two = real::from_u64(2, wp);
        let mut hi = lo.mul(&two, wp, RM);
        let mut grew = 0;
        while self.g(&hi, cos_t).partial_cmp(&zero) != Some(std::cmp::Ordering::Less) {
            hi = hi.mul(&two, wp, RM);
            grew += 1;
            if grew > 200 {
                return Err(Error::Numeric("outer ray bracket did not close".into()));
            }
        }
        Ok(self.bisect(lo, hi, cos_t, false))
    }

    /// The curve point at `theta`, at the solver's stated precision.
    pub fn point_at(&self, theta: &BigFloat) -> Result<BigComplex> {
        let wp = self.wp;
        let rho = self.radius_at(theta)?;
        let pi = real::pi(wp);
        let z = if theta.is_zero() {
            BigComplex::from_real(rho, wp)
        } else if theta.partial_cmp(&pi) == Some(std::cmp::Ordering::Equal) {
            BigComplex::from_real(rho.neg(), wp)
        } else {
            BigComplex::new(
                rho.mul(&real::cos(theta, wp), wp, RM),
                rho.mul(&real::sin(theta, wp), wp, RM),
                wp,
            )
        };
        Ok(z.round_to(self.precision))
    }

    /// Signed level residual |z|^alpha / |1+z| - K_alpha at the solver's
    /// working precision.
    pub fn residual_signed(&self, z: &BigComplex) -> Result<BigFloat> {
        level_residual_signed(&self.alpha, z, self.precision)
    }
}

/// Signed level residual |z|^alpha / |1+z| - K_alpha; negative inside the
/// level set, positive outside (on rays below the peak radius).
pub fn level_residual_signed(alpha: &Alpha, z: &BigComplex, precision_bits: usize) -> Result<BigFloat> {
    let p = real::align(precision_bits);
    let wp = p + 32;
    let zw = z.round_to(wp);
    let abs_z = zw.abs();
    let one = BigComplex::one(wp);
    let abs_1z = one.add(&zw).abs();
    let zero = real::from_u64(0, 64);
    if !(abs_z.partial_cmp(&zero) == Some(std::cmp::Ordering::Greater))
        || !(abs_1z.partial_cmp(&zero) == Some(std::cmp::Ordering::Greater))
    {
        return Err(Error::Domain(
            "level residual undefined at z = 0 and z = -1".into(),
        ));
    }
    let a = real::rounded(alpha.value(), wp);
    let ln_c = a
        .mul(&real::ln(&abs_z, wp), wp, RM)
        .sub(&real::ln(&abs_1z, wp), wp, RM);
    let local = Alpha::new(alpha.value().clone(), wp)?;
    let ln_k = ln_k_alpha(&local, wp)?;
    let c = real::exp(&ln_c, wp);
    let k = real::exp(&ln_k, wp);
    Ok(real::rounded(&c.sub(&k, wp, RM), p))
}

/// Sample one branch at `m` equally spaced angles theta_k = 2 pi k / m.
///
/// `m` must be even and at least 16 so the grid contains both axis
/// crossings (z_alpha at theta = 0, -X_alpha at theta = pi); the lower
/// half k > m/2 is mirrored from the upper half by conjugation.
pub fn sample_curve(alpha: &Alpha, branch: Branch, m: usize) -> Result<CurveSample> {
    if m < 16 {
        return Err(Error::Domain(format!("need at least 16 sample points, got {m}")));
    }
    if m % 2 != 0 {
        return Err(Error::Domain(format!(
            "point count must be even so the grid contains theta = pi, got {m}"
        )));
    }
    let p = alpha.precision();
    let solver = RaySolver::new(alpha, branch, p)?;
    let wp = p + 32;
    let two_pi = real::two_pi(wp);

    let half = m / 2;
    let mut thetas = Vec::with_capacity(m);
    let mut points = Vec::with_capacity(m);
    let mut residuals = Vec::with_capacity(m);
    for k in 0..=half {
        let theta = if k == 0 {
            real::from_u64(0, wp)
        } else if k == half {
            real::pi(wp)
        } else {
            two_pi.mul(&real::ratio(k as i64, m as i64, wp), wp, RM)
        };
        let z = solver.point_at(&theta)?;
        let res = solver.residual_signed(&z)?.abs();
        thetas.push(real::rounded(&theta, p));
        points.push(z);
        residuals.push(res);
    }
    for k in (half + 1)..m {
        let src = m - k;
        let theta = two_pi.mul(&real::ratio(k as i64, m as i64, wp), wp, RM);
        thetas.push(real::rounded(&theta, p));
        points.push(points[src].conj());
        residuals.push(residuals[src].clone());
    }

    let bound = real::pow2(-((p / 2) as i64), 64);
    for (i, res) in residuals.iter().enumerate() {
        if !(res.partial_cmp(&bound) == Some(std::cmp::Ordering::Less)) {
            return Err(Error::Residual(format!(
                "curve point {i} residual {} exceeds 2^-{}",
                real::fmt_dec(res),
                p / 2
            )));
        }
    }

    Ok(CurveSample {
        alpha: alpha.clone(),
        branch,
        precision_bits: p,
        thetas,
        points,
        residuals,
    })
}

/// Golden-section refinement precision: distances only need absolute
/// accuracy far above the curve-sampling certificates, so the refinement
/// solves rays at a reduced fixed precision.
const REFINE_BITS: usize = 64;

/// Distance from `z` to the sampled curve at the default resolution
/// z_alpha / 16.
pub fn distance_to_curve(z: &BigComplex, sample: &CurveSample) -> Result<BigFloat> {
    let za = z_alpha(&sample.alpha);
    let resolution = za.mul(&real::ratio(1, 16, 64), 64, RM);
    distance_to_curve_at(z, sample, &resolution)
}

/// Distance from `z` to the curve: coarse minimum over the sample
/// polyline, then golden-section search over the two arcs adjacent to the
/// best vertex, solving the true ray equation at each probe.
///
/// Errors with the required point count when the sample's adjacent-point
/// spacing exceeds `resolution`.
pub fn distance_to_curve_at(
    z: &BigComplex,
    sample: &CurveSample,
    resolution: &BigFloat,
) -> Result<BigFloat> {
    let m = sample.points.len();
    if m < 3 {
        return Err(Error::Domain("curve sample has fewer than 3 points".into()));
    }
    let cp = 192usize;
    let mut max_spacing = real::from_u64(0, 64);
    for k in 0..m {
        let d = sample.points[k].dist(&sample.points[(k + 1) % m]);
        if d.partial_cmp(&max_spacing) == Some(std::cmp::Ordering::Greater) {
            max_spacing = d;
        }
    }
    if max_spacing.partial_cmp(resolution) != Some(std::cmp::Ordering::Less) {
        let ratio = max_spacing.div(resolution, 64, RM);
        let factor = real::to_f64(&ratio).ceil().max(2.0);
        let required = ((m as f64) * factor).ceil() as usize;
        let required_m = required + (required % 2);
        return Err(Error::InsufficientDensity {
            required_m,
            have_m: m,
        });
    }

    let zc = z.round_to(cp);
    let mut best_k = 0usize;
    let mut best = zc.dist(&sample.points[0].round_to(cp));
    for (k, pt) in sample.points.iter().enumerate().skip(1) {
        let d = zc.dist(&pt.round_to(cp));
        if d.partial_cmp(&best) == Some(std::cmp::Ordering::Less) {
            best = d;
            best_k = k;
        }
    }

    // Refine over the two adjacent arcs in theta, evaluating true curve
    // points along rays at reduced precision.
    let solver = RaySolver::new(&sample.alpha, sample.branch, REFINE_BITS)?;
    let zr = z.round_to(REFINE_BITS + 32);
    let theta_of = |k: isize| -> f64 {
        let kk = k.rem_euclid(m as isize) as f64;
        let base = 2.0 * std::f64::consts::PI * kk / (m as f64);
        // Unwrap around the best vertex so the window is contiguous.
        let center = 2.0 * std::f64::consts::PI * (best_k as f64) / (m as f64);
        let mut t = base;
        while t - center > std::f64::consts::PI {
            t -= 2.0 * std::f64::consts::PI;
        }
        while center - t > std::f64::consts::PI {
            t += 2.0 * std::f64::consts::PI;
        }
        t
    };
    let eval = |t: f64| -> Result<BigFloat> {
        let two_pi = 2.0 * std::f64::consts::PI;
        let wrapped = t.rem_euclid(two_pi);
        let wp = REFINE_BITS + 32;
        let theta = real::from_f64(wrapped, wp);
        // Mirror the lower half onto the solved upper half.
        let (theta, mirror) = if wrapped > std::f64::consts::PI {
            (
                real::two_pi(wp).sub(&theta, wp, RM),
                true,
            )
        } else {
            (theta, false)
        };
        let mut pt = solver.point_at(&theta)?;
        if mirror {
            pt = pt.conj();
        }
        Ok(zr.dist(&pt.round_to(REFINE_BITS + 32)))
    };

    let mut a = theta_of(best_k as isize - 1);
    let mut b = theta_of(best_k as isize + 1);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = eval(x1)?;
    let mut f2 = eval(x2)?;
    while b - a > 2f64.powi(-24) {
        if f1.partial_cmp(&f2) == Some(std::cmp::Ordering::Less) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = eval(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = eval(x2)?;
        }
    }
    let refined = if f1.partial_cmp(&f2) == Some(std::cmp::Ordering::Less) {
        f1
    } else {
        f2
    };
    let coarse = real::rounded(&best, REFINE_BITS);
    let refined = real::rounded(&refined, REFINE_BITS);
    Ok(
        if refined.partial_cmp(&coarse) == Some(std::cmp::Ordering::Less) {
            refined
        } else {
            coarse
        },
    )
}

/// Boundary-correspondence angle of the inner branch: phi(theta) =
/// arg(K_alpha^(-1) z(theta)^alpha / (1 + z(theta))) with arg z taken in
/// [0, 2pi).  Increases from 0 at theta = 0 to 2 pi alpha at theta = 2 pi.
fn phi_at(solver: &RaySolver, alpha: &Alpha, theta: &BigFloat, wp: usize) -> Result<BigFloat> {
    let pi = real::pi(wp);
    let two_pi = real::two_pi(wp);
    // Mirror the lower half: phi(2 pi - t) = 2 pi alpha - phi(t).
    if theta.partial_cmp(&pi) == Some(std::cmp::Ordering::Greater) {
        let mirrored = two_pi.sub(theta, wp, RM);
        let inner = phi_at(solver, alpha, &mirrored, wp)?;
        let full = two_pi.mul(&real::rounded(alpha.value(), wp), wp, RM);
        return Ok(full.sub(&inner, wp, RM));
    }
    let z = solver.point_at(theta)?.round_to(wp);
    let one_plus = BigComplex::one(wp).add(&z);
    let a = real::rounded(alpha.value(), wp);
    let arg_1z = real::atan2(one_plus.im(), one_plus.re(), wp);
    Ok(a.mul(theta, wp, RM).sub(&arg_1z, wp, RM))
}

/// The angle-quantized points zeta_p on the inner branch: for every
/// integer p with 0 < 2 pi p / n < 2 pi alpha, the curve point whose
/// boundary-correspondence angle equals 2 pi p / n.
pub fn curve_points(alpha: &Alpha, n: u64) -> Result<Vec<BigComplex>> {
    if n < 2 {
        return Err(Error::Domain(format!("need n >= 2 for curve points, got {n}")));
    }
    let p = alpha.precision();
    // The correspondence angle only needs modest accuracy; each probe
    // solves a full ray, so the angle search runs reduced while the final
    // point is re-solved at full precision.
    let wp_phi = real::align(64.max(p / 4));
    let search = RaySolver::new(alpha, Branch::Inner, wp_phi)?;
    let finish = RaySolver::new(alpha, Branch::Inner, p)?;
    let wp = wp_phi + 32;
    let two_pi = real::two_pi(wp);
    let alpha_n = real::rounded(alpha.value(), wp).mul(&real::from_u64(n, wp), wp, RM);

    let mut out = Vec::new();
    let mut lo_prev = real::from_u64(0, wp);
    for pp in 1..n {
        let pf = real::from_u64(pp, wp);
        if pf.partial_cmp(&alpha_n) != Some(std::cmp::Ordering::Less) {
            break;
        }
        let target = two_pi.mul(&real::ratio(pp as i64, n as i64, wp), wp, RM);
        // phi is increasing, so successive targets bracket from the last
        // solution.  The upper end stays a safe distance short of the
        // full turn: at angles within ~2^-38 of a multiple of 2 pi the
        // profile peak sits too close to the level set for the ray
        // bracket, so probes must not mirror into that sliver.
        let mut lo = lo_prev.clone();
        let mut hi = two_pi.mul(
            &real::from_u64(1, wp).sub(&real::pow2(-16, wp), wp, RM),
            wp,
            RM,
        );
        let zero = real::from_u64(0, 64);
        let f_hi = phi_at(&search, alpha, &hi, wp)?.sub(&target, wp, RM);
        if f_hi.partial_cmp(&zero) != Some(std::cmp::Ordering::Greater) {
            return Err(Error::Numeric(format!(
                "curve point {pp}/{n} target angle too close to the full sweep"
            )));
        }
        let half = real::pow2(-1, wp);
        for _ in 0..60 {
            let mid = lo.add(&hi, wp, RM).mul(&half, wp, RM);
            let f_mid = phi_at(&search, alpha, &mid, wp)?.sub(&target, wp, RM);
            if f_mid.partial_cmp(&zero) == Some(std::cmp::Ordering::Less) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let theta = lo.add(&hi, wp, RM).mul(&half, wp, RM);
        lo_prev = lo;
        // Re-solve the ray at full precision for the emitted point.
        let pi_wp = real::pi(wp);
        let point = if theta.partial_cmp(&pi_wp) == Some(std::cmp::Ordering::Greater) {
            let mirrored = two_pi.sub(&theta, wp, RM);
            finish.point_at(&real::rounded(&mirrored, p + 32))?.conj()
        } else {
            finish.point_at(&real::rounded(&theta, p + 32))?
        };
        out.push(point);
    }
    Ok(out)
}

/// Sample the exponential curve |z e^(1-z)| = 1 (|z| <= 1) at `m` equally
/// spaced angles; on the ray at theta the radius solves ln t + 1 -
/// t cos(theta) = 0, increasing in t on the relevant range, with exact
/// endpoints t = 1 at theta = 0 and t = nu at theta = pi.
pub fn szego_curve(m: usize, precision_bits: usize) -> Result<Vec<BigComplex>> {
    if m < 16 || m % 2 != 0 {
        return Err(Error::Domain(format!(
            "szego sample needs an even point count >= 16, got {m}"
        )));
    }
    let p = real::align(precision_bits);
    let wp = p + 32;
    let nu = real::rounded(&nu_constant(wp), wp);
    let lo0 = nu.mul(&real::pow2(-1, wp), wp, RM);
    let one = real::from_u64(1, wp);
    let two_pi = real::two_pi(wp);
    let zero = real::from_u64(0, 64);
    let half = real::pow2(-1, wp);
    let steps = (p / 2 + 48).max(80);

    let half_m = m / 2;
    let mut points: Vec<BigComplex> = Vec::with_capacity(m);
    for k in 0..=half_m {
        if k == 0 {
            points.push(BigComplex::from_real(real::from_u64(1, wp), wp).round_to(p));
            continue;
        }
        if k == half_m {
            points.push(BigComplex::from_real(nu.neg(), wp).round_to(p));
            continue;
        }
        let theta = two_pi.mul(&real::ratio(k as i64, m as i64, wp), wp, RM);
        let cos_t = real::cos(&theta, wp);
        let h = |t: &BigFloat| -> BigFloat {
            real::ln(t, wp)
                .add(&one, wp, RM)
                .sub(&t.mul(&cos_t, wp, RM), wp, RM)
        };
        if h(&lo0).partial_cmp(&zero) != Some(std::cmp::Ordering::Less) {
            return Err(Error::Numeric("szego ray bracket failed at low end".into()));
        }
        let mut lo = lo0.clone();
        let mut hi = one.clone();
        for _ in 0..steps {
            let mid = lo.add(&hi, wp, RM).mul(&half, wp, RM);
            if h(&mid).partial_cmp(&zero) == Some(std::cmp::Ordering::Less) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let t = lo.add(&hi, wp, RM).mul(&half, wp, RM);
        points.push(
            BigComplex::new(
                t.mul(&cos_t, wp, RM),
                t.mul(&real::sin(&theta, wp), wp, RM),
                wp,
            )
            .round_to(p),
        );
    }
    for k in (half_m + 1)..m {
        points.push(points[m - k].conj());
    }
    Ok(points)
}

/// Minimum distance from `z` to the closed polyline through `pts`
/// (point-to-segment, cyclic).
pub fn distance_to_polyline(z: &BigComplex, pts: &[BigComplex]) -> BigFloat {
    let p = 192usize;
    let zc = z.round_to(p);
    let mut best: Option<BigFloat> = None;
    let m = pts.len();
    for k in 0..m {
        let a = pts[k].round_to(p);
        let b = pts[(k + 1) % m].round_to(p);
        let v = b.sub(&a);
        let w = zc.sub(&a);
        let vv = v.norm_sqr();
        let d = if vv.is_zero() {
            w.abs()
        } else {
            // Projection parameter clamped to the segment.
            let dot = w.re().mul(v.re(), p, RM).add(&w.im().mul(v.im(), p, RM), p, RM);
            let t = dot.div(&vv, p, RM);
            let zero = real::from_u64(0, 64);
            let one = real::from_u64(1, 64);
            let t = if t.partial_cmp(&zero) == Some(std::cmp::Ordering::Less) {
                real::from_u64(0, p)
            } else if t.partial_cmp(&one) == Some(std::cmp::Ordering::Greater) {
                real::from_u64(1, p)
            } else {
                t
            };
            w.sub(&v.scale(&t)).abs()
        };
        best = Some(match best {
            None => d,
            Some(cur) => {
                if d.partial_cmp(&cur) == Some(std::cmp::Ordering::Less) {
                    d
                } else {
                    cur
                }
            }
        });
    }
    best.expect("nonempty polyline")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::abs_below_pow2;
    use std::cmp::Ordering;

    fn below(a: &BigFloat, b: &BigFloat) -> bool {
        a.partial_cmp(b) == Some(Ordering::Less)
    }

    #[test]
    fn alpha_rejects_endpoints() {
        assert!(Alpha::from_f64(0.0, 128).is_err());
        assert!(Alpha::from_f64(1.0, 128).is_err());
        assert!(Alpha::from_f64(-0.3, 128).is_err());
        assert!(Alpha::from_ratio(3, 3, 128).is_err());
        assert!(Alpha::from_ratio(0, 5, 128).is_err());
        assert!(Alpha::from_f64(0.5, 128).is_ok());
    }

    #[test]
    fn k_half_is_exactly_half() {
        let alpha = Alpha::from_ratio(1, 2, 256).unwrap();
        let k = k_alpha(&alpha);
        assert_eq!(k, real::ratio(1, 2, 256));
    }

    #[test]
    fn k_third_matches_fixture() {
        // Independently computed value of (1/3)^(1/3) (2/3)^(2/3).
        let fixture = real::parse_dec(
            "0.52913368398939982491723521309076942013049777596661766993609525394173883520807306",
            320,
        )
        .unwrap();
        let alpha = Alpha::from_ratio(1, 3, 256).unwrap();
        let k = k_alpha(&alpha);
        assert!(abs_below_pow2(&k.sub(&fixture, 320, RM), -248));
    }

    #[test]
    fn k_near_endpoints_exceeds_099() {
        for v in [0.001, 0.999] {
            let alpha = Alpha::from_f64(v, 128).unwrap();
            let k = k_alpha(&alpha);
            assert!(below(&real::from_f64(0.99, 64), &k), "K({v}) too small");
        }
    }

    #[test]
    fn k_range_and_derivative_sign() {
        // K in [1/2, 1), minimized at 1/2; finite-difference slope matches
        // K_alpha ln(alpha/(1-alpha)) to relative 1e-6.
        let p = 256;
        let half = real::ratio(1, 2, 64);
        let one = real::from_u64(1, 64);
        for v in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let k = k_alpha(&Alpha::from_f64(v, p).unwrap());
            assert!(!below(&k, &half));
            assert!(below(&k, &one));
        }
        let h = 1e-8;
        for v in [0.2, 0.35, 0.6, 0.85] {
            let kp = k_alpha(&Alpha::from_f64(v + h, p).unwrap());
            let km = k_alpha(&Alpha::from_f64(v - h, p).unwrap());
            let fd = kp.sub(&km, p, RM).div(&real::from_f64(2.0 * h, p), p, RM);
            let k = k_alpha(&Alpha::from_f64(v, p).unwrap());
            let formula = k.mul(
                &real::ln(&real::from_f64(v / (1.0 - v), p), p),
                p,
                RM,
            );
            let rel = fd.sub(&formula, p, RM).div(&formula, p, RM).abs();
            assert!(
                below(&rel, &real::from_f64(1e-6, 64)),
                "slope mismatch at alpha={v}: {}",
                real::fmt_dec(&rel)
            );
        }
    }

    #[test]
    fn nu_constant_fixture_and_equation() {
        let p = 256;
        let nu = nu_constant(p);
        // Leading digits from an independent high-precision root solve.
        let fixture = real::parse_dec(
            "0.2784645427610737951093587390229801554394774886197457654531781055350293754599499",
            320,
        )
        .unwrap();
        assert!(abs_below_pow2(&nu.sub(&fixture, 320, RM), -248));
        // Defining equation x e^(1+x) = 1.
        let wp = p + 32;
        let e_term = real::exp(&real::from_u64(1, wp).add(&nu, wp, RM), wp);
        let res = nu.mul(&e_term, wp, RM).sub(&real::from_u64(1, wp), wp, RM);
        assert!(abs_below_pow2(&res, -(p as i64) + 8));
        // Monotone bracket for f(x) = x e^(1+x) - 1.
        let f = |x: f64| x * (1.0 + x).exp() - 1.0;
        assert!(f(0.2) < 0.0 && f(0.4) > 0.0);
    }

    #[test]
    fn x_half_closed_form() {
        // At alpha = 1/2 the crossing solves sqrt(t) = (1-t)/2, whose root
        // is t = 3 - 2 sqrt(2).
        let p = 256;
        let alpha = Alpha::from_ratio(1, 2, p).unwrap();
        let x = x_alpha(&alpha);
        let wp = p + 32;
        let closed = real::from_u64(3, wp).sub(
            &real::from_u64(2, wp).mul(&real::from_u64(2, wp).sqrt(wp, RM), wp, RM),
            wp,
            RM,
        );
        assert!(abs_below_pow2(&x.sub(&closed, wp, RM), -(p as i64) + 8));
    }

    #[test]
    fn x_third_matches_fixture() {
        let fixture = real::parse_dec(
            "0.105892543025017715330791878400477257830011758405680208512814",
            256,
        )
        .unwrap();
        let alpha = Alpha::from_ratio(1, 3, 192).unwrap();
        let x = x_alpha(&alpha);
        assert!(abs_below_pow2(&x.sub(&fixture, 256, RM), -184));
    }

    #[test]
    fn x_bounds_and_defining_equation() {
        let p = 128;
        for tenth in 1..=9i64 {
            let alpha = Alpha::from_ratio(tenth, 10, p).unwrap();
            let x = x_alpha(&alpha);
            let nu_a = nu_constant(p).mul(alpha.value(), p, RM);
            assert!(below(&nu_a, &x), "nu*alpha < X failed at alpha={tenth}/10");
            assert!(below(&x, &real::ratio(1, 2, 64)), "X < 1/2 failed at alpha={tenth}/10");
            // t^alpha + K (t - 1) = 0 at t = X.
            let wp = p + 32;
            let k = k_alpha(&alpha);
            let t_pow = real::exp(
                &real::rounded(alpha.value(), wp).mul(&real::ln(&x, wp), wp, RM),
                wp,
            );
            let res = t_pow.add(
                &k.mul(&x.sub(&real::from_u64(1, wp), wp, RM), wp, RM),
                wp,
                RM,
            );
            assert!(abs_below_pow2(&res, -(p as i64) + 16));
        }
    }

    #[test]
    fn sample_curve_endpoints_and_invariants() {
        let p = 128;
        let alpha = Alpha::from_ratio(1, 3, p).unwrap();
        let m = 32;
        let sample = sample_curve(&alpha, Branch::Inner, m).unwrap();
        assert_eq!(sample.points.len(), m);

        // theta = 0 is z_alpha and theta = pi is -X_alpha, to the bit.
        let za = z_alpha(&alpha);
        assert_eq!(*sample.points[0].re(), za);
        assert!(sample.points[0].im().is_zero());
        let xa = x_alpha(&alpha);
        assert_eq!(*sample.points[m / 2].re(), xa.neg());
        assert!(sample.points[m / 2].im().is_zero());

        // Residual certificate and modulus bounds X_alpha <= |z| <= z_alpha.
        let tol = real::pow2(-((p / 2) as i64) + 8, 64);
        let za_hi = za.add(&tol, p, RM);
        let xa_lo = xa.sub(&tol, p, RM);
        for (z, res) in sample.points.iter().zip(&sample.residuals) {
            assert!(abs_below_pow2(res, -((p / 2) as i64)));
            let abs = z.abs();
            assert!(!below(&za_hi, &abs), "|z| > z_alpha");
            assert!(!below(&abs, &xa_lo), "|z| < X_alpha");
        }

        // Conjugate symmetry is exact by construction.
        for k in 1..m / 2 {
            assert_eq!(sample.points[m - k], sample.points[k].conj());
        }
    }

    #[test]
    fn sample_curve_rejects_bad_counts() {
        let alpha = Alpha::from_ratio(1, 3, 128).unwrap();
        assert!(matches!(
            sample_curve(&alpha, Branch::Inner, 8),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            sample_curve(&alpha, Branch::Inner, 33),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn starlike_radius_decreases() {
        for (num, den) in [(1i64, 3i64), (2, 3)] {
            let alpha = Alpha::from_ratio(num, den, 128).unwrap();
            let sample = sample_curve(&alpha, Branch::Inner, 32).unwrap();
            for k in 0..16 {
                let r0 = sample.points[k].abs();
                let r1 = sample.points[k + 1].abs();
                assert!(
                    below(&r1, &r0),
                    "radius not decreasing at alpha={num}/{den}, k={k}"
                );
            }
        }
    }

    #[test]
    fn outer_branch_and_reciprocal_duality() {
        let p = 128;
        let m = 32;
        let a13 = Alpha::from_ratio(1, 3, p).unwrap();
        let a23 = Alpha::from_ratio(2, 3, p).unwrap();
        let inner = sample_curve(&a13, Branch::Inner, m).unwrap();
        let outer = sample_curve(&a23, Branch::Outer, m).unwrap();

        // Outer branch stays outside its z_alpha and meets it at theta=0.
        let za23 = z_alpha(&a23);
        let tol = real::pow2(-((p / 2) as i64) + 8, 64);
        let za_lo = za23.sub(&tol, p, RM);
        for z in &outer.points {
            assert!(!below(&z.abs(), &za_lo), "outer point inside z_alpha");
        }
        assert_eq!(*outer.points[0].re(), za23);

        // 1/z maps the inner branch of alpha to the outer branch of
        // 1 - alpha, with angles negated.
        let tol_pt = real::pow2(-90, 64);
        for k in 0..m {
            let w = inner.points[k].round_to(p + 32).recip();
            let mate = &outer.points[(m - k) % m];
            assert!(
                below(&w.dist(mate), &tol_pt),
                "duality mismatch at k={k}: {} vs {}",
                w,
                mate
            );
        }
    }

    #[test]
    fn distance_fixtures_at_half() {
        let p = 128;
        let alpha = Alpha::from_ratio(1, 2, p).unwrap();
        let sample = sample_curve(&alpha, Branch::Inner, 256).unwrap();

        // d(0) = X_{1/2} = 3 - 2 sqrt(2): the closest point is the
        // negative-axis crossing because the radius shrinks with angle.
        let origin = BigComplex::zero(p);
        let d0 = distance_to_curve(&origin, &sample).unwrap();
        let x = x_alpha(&alpha);
        let diff = d0.sub(&x, 192, RM).abs();
        assert!(below(&diff, &real::from_f64(1e-12, 64)), "{}", real::fmt_dec(&diff));

        // d(2 z_alpha) = z_alpha: closest point is z_alpha itself.
        let two_za = BigComplex::from_f64(2.0, 0.0, p);
        let d2 = distance_to_curve(&two_za, &sample).unwrap();
        let za = z_alpha(&alpha);
        let diff2 = d2.sub(&za, 192, RM).abs();
        assert!(below(&diff2, &real::from_f64(1e-12, 64)), "{}", real::fmt_dec(&diff2));

        // A point of the sample itself is at distance zero.
        let on = sample.points[37].clone();
        let don = distance_to_curve(&on, &sample).unwrap();
        assert!(abs_below_pow2(&don, -40));
    }

    #[test]
    fn distance_agrees_with_dense_vertex_oracle() {
        let p = 128;
        let alpha = Alpha::from_ratio(1, 3, p).unwrap();
        let sample = sample_curve(&alpha, Branch::Inner, 256).unwrap();
        // The oracle needs only coarse accuracy, so the dense polyline is
        // sampled at low precision.
        let alpha_lo = Alpha::from_ratio(1, 3, 64).unwrap();
        let dense = sample_curve(&alpha_lo, Branch::Inner, 1024).unwrap();
        for (re, im) in [(0.3, 0.4), (-0.3, 0.1), (0.05, -0.2)] {
            let z = BigComplex::from_f64(re, im, p);
            let fast = distance_to_curve(&z, &sample).unwrap();
            let mut oracle: Option<BigFloat> = None;
            for pt in &dense.points {
                let d = z.dist(pt);
                oracle = Some(match oracle {
                    None => d,
                    Some(cur) => {
                        if below(&d, &cur) {
                            d
                        } else {
                            cur
                        }
                    }
                });
            }
            let oracle = oracle.unwrap();
            let diff = fast.sub(&oracle, 128, RM).abs();
            assert!(
                below(&diff, &real::from_f64(2e-3, 64)),
                "distance mismatch at ({re},{im}): {}",
                real::fmt_dec(&diff)
            );
        }
    }

    #[test]
    fn distance_reports_insufficient_density() {
        let p = 128;
        let alpha = Alpha::from_ratio(1, 2, p).unwrap();
        let sample = sample_curve(&alpha, Branch::Inner, 16).unwrap();
        let z = BigComplex::zero(p);
        match distance_to_curve(&z, &sample) {
            Err(Error::InsufficientDensity { required_m, have_m }) => {
                assert_eq!(have_m, 16);
                assert!(required_m > 16);
            }
            other => panic!("expected density error, got {other:?}"),
        }
    }

    #[test]
    fn curve_points_count_pairing_and_residuals() {
        // alpha = 1/2, n = 12: points at angles 2 pi p / 12 for p = 1..5,
        // paired by conjugation as p <-> 6 - p, with p = 3 on the
        // negative axis.
        let p = 128;
        let alpha = Alpha::from_ratio(1, 2, p).unwrap();
        let n = 12;
        let pts = curve_points(&alpha, n).unwrap();
        assert_eq!(pts.len(), 5);

        let tol = real::pow2(-50, 64);
        let wp = p + 32;
        let two_pi = real::two_pi(wp);
        for (i, z) in pts.iter().enumerate() {
            let pp = (i + 1) as i64;
            // On the curve.
            let res = level_residual_signed(&alpha, z, p).unwrap().abs();
            assert!(abs_below_pow2(&res, -((p / 2) as i64)), "point {pp} off curve");
            // Correct correspondence angle, with arg z taken in [0, 2pi).
            let zw = z.round_to(wp);
            let arg_z = {
                let raw = real::atan2(zw.im(), zw.re(), wp);
                if raw.is_negative() {
                    raw.add(&two_pi, wp, RM)
                } else {
                    raw
                }
            };
            let one_plus = BigComplex::one(wp).add(&zw);
            let arg_1z = real::atan2(one_plus.im(), one_plus.re(), wp);
            let phi = real::rounded(alpha.value(), wp)
                .mul(&arg_z, wp, RM)
                .sub(&arg_1z, wp, RM);
            let target = two_pi.mul(&real::ratio(pp, n as i64, wp), wp, RM);
            let miss = phi.sub(&target, wp, RM).abs();
            assert!(below(&miss, &tol), "angle miss at p={pp}: {}", real::fmt_dec(&miss));
        }

        // Conjugate pairing p <-> 2*alpha*n - p = 6 - p.
        for ppp in 1..=2usize {
            let a = &pts[ppp - 1];
            let b = &pts[6 - ppp - 1];
            assert!(below(&a.dist(&b.conj()), &tol), "pairing broken at p={ppp}");
        }
        // Middle point p = 3 sits at -X_alpha.
        let x = x_alpha(&alpha);
        let mid = &pts[2];
        assert!(below(&mid.re().sub(&x.neg(), p, RM).abs(), &tol));
        assert!(below(&mid.im().abs(), &tol));
    }

    #[test]
    fn szego_curve_endpoints_and_residuals() {
        let p = 128;
        let m = 64;
        let pts = szego_curve(m, p).unwrap();
        assert_eq!(pts.len(), m);
        assert_eq!(*pts[0].re(), real::from_u64(1, p));
        assert!(pts[0].im().is_zero());
        let nu = nu_constant(p);
        assert_eq!(*pts[m / 2].re(), nu.neg());

        let wp = p + 32;
        let one = real::from_u64(1, 64);
        for z in &pts {
            // |z e^(1-z)| = |z| e^(1 - Re z).
            let zw = z.round_to(wp);
            let level = zw.abs().mul(
                &real::exp(&real::from_u64(1, wp).sub(zw.re(), wp, RM), wp),
                wp,
                RM,
            );
            let res = level.sub(&real::from_u64(1, wp), wp, RM).abs();
            assert!(abs_below_pow2(&res, -((p / 2) as i64)));
            // Inside the closed unit disk (up to certificate tolerance).
            let slack = zw.abs().sub(&one, wp, RM);
            assert!(abs_below_pow2(&slack, -((p / 2) as i64)) || slack.is_negative());
        }
        // Conjugate symmetry.
        for k in 1..m / 2 {
            assert_eq!(pts[m - k], pts[k].conj());
        }
    }

    #[test]
    fn polyline_distance_basics() {
        let p = 128;
        // Square with corners at (+-1, +-1): each side is at distance 1
        // from the center.
        let pts = vec![
            BigComplex::from_f64(1.0, 1.0, p),
            BigComplex::from_f64(-1.0, 1.0, p),
            BigComplex::from_f64(-1.0, -1.0, p),
            BigComplex::from_f64(1.0, -1.0, p),
        ];
        let center = BigComplex::zero(p);
        let d = distance_to_polyline(&center, &pts);
        let diff = d.sub(&real::from_u64(1, 192), 192, RM).abs();
        assert!(abs_below_pow2(&diff, -100));
        // A vertex is at distance zero.
        let d0 = distance_to_polyline(&pts[0], &pts);
        assert!(d0.is_zero());
    }
}
