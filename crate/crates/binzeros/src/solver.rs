//! All-roots solver for section polynomials at arbitrary precision.
//!
//! The binomial sections become severely ill-conditioned as the degree
//! grows (root condition numbers beyond 2^290 already at degree ~200), so
//! double-precision root finders produce garbage well below desk scale.
//! This module runs Ehrlich–Aberth simultaneous iteration with adaptive
//! internal guard precision: a localization pass at a small fixed guard,
//! then a finishing pass whose guard is sized from the measured per-root
//! condition number, so the stopping tolerance is actually reachable.
//! Quality is certified by scale-free backward-error residuals recomputed
//! at doubled precision from the exact coefficients.

use astro_float::BigFloat;
use serde::Serialize;

use crate::complex::BigComplex;
use crate::error::{Error, Result};
use crate::exactpoly::{self, ExactPolynomial, SectionParams};
use crate::real::{self, RM};

/// Default working precision in bits for a section with upper index `n`.
///
/// `log2 C(n, n/2) ~ n`, so ~n bits are consumed by coefficient dynamic
/// range alone; doubling that plus headroom keeps root output meaningful
/// across the families exercised here.
pub fn default_precision(n: u64) -> usize {
    real::align((2 * n as usize + 64).max(128))
}

/// Tuning knobs for the iteration; the defaults are used everywhere except
/// tests that exercise the failure paths.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Total sweep budget across all phases (then a non-convergence error).
    pub max_iterations: usize,
    /// Initial-guess circle radius as a fraction of the outer root bound.
    pub guess_radius_factor: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_iterations: 500,
            guess_radius_factor: 0.9,
        }
    }
}

/// All roots of one section polynomial with per-root residual certificates.
#[derive(Clone, Debug)]
pub struct ZeroSet {
    pub params: SectionParams,
    pub precision_bits: usize,
    /// Roots sorted by (Re, Im) ascending.
    pub zeros: Vec<BigComplex>,
    /// Per-root `|B(z)| / sum_k C(n,k)|z|^k`, computed at doubled precision.
    pub residuals: Vec<BigFloat>,
    /// Set when roots are closer than `2^(-precision_bits/4)` (the only
    /// exact multiple-root case, r = n, is solved analytically).
    pub multiple_root: bool,
    /// Sweeps used by the iteration (0 for analytic special cases).
    pub iterations: usize,
}

#[derive(Serialize)]
struct PointJson {
    re: String,
    im: String,
}

#[derive(Serialize)]
struct ZeroSetJson {
    r: u64,
    n: u64,
    precision_bits: usize,
    multiple_root: bool,
    iterations: usize,
    zeros: Vec<PointJson>,
    residuals: Vec<String>,
}

impl ZeroSet {
    pub fn to_json(&self) -> String {
        let record = ZeroSetJson {
            r: self.params.r(),
            n: self.params.n(),
            precision_bits: self.precision_bits,
            multiple_root: self.multiple_root,
            iterations: self.iterations,
            zeros: self
                .zeros
                .iter()
                .map(|z| {
                    let (re, im) = z.fmt_pair();
                    PointJson { re, im }
                })
                .collect(),
            residuals: self.residuals.iter().map(real::fmt_dec).collect(),
        };
        serde_json::to_string(&record).expect("zero set serialization")
    }

    pub fn write_csv<W: std::io::Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "re,im,residual")?;
        for (z, res) in self.zeros.iter().zip(&self.residuals) {
            let (re, im) = z.fmt_pair();
            writeln!(w, "{},{},{}", re, im, real::fmt_dec(res))?;
        }
        Ok(())
    }
}

/// Find all `r` zeros of `B_{r,n}` at the given precision.
pub fn find_zeros(params: &SectionParams, precision_bits: usize) -> Result<ZeroSet> {
    find_zeros_with(params, precision_bits, &SolverConfig::default())
}

pub fn find_zeros_with(
    params: &SectionParams,
    precision_bits: usize,
    config: &SolverConfig,
) -> Result<ZeroSet> {
    if precision_bits < 53 {
        return Err(Error::Domain(format!(
            "precision_bits must be at least 53, got {precision_bits}"
        )));
    }
    let p = real::align(precision_bits);
    let r = params.r();
    let n = params.n();
    let section = exactpoly::build_section(params);

    let (zeros, iterations, multiple_root) = if r == n {
        // (1+z)^n: an n-fold root at -1, handled analytically.
        let minus_one = BigComplex::from_real(real::from_i64(-1, p), p);
        (vec![minus_one; r as usize], 0, true)
    } else if r == 1 {
        // 1 + nz: the single zero -1/n, correctly rounded.
        let z = BigComplex::from_real(real::ratio(-1, n as i64, p), p);
        (vec![z], 0, false)
    } else {
        let (mut zs, iters) = aberth(&section, params, p, config)?;
        sort_canonical(&mut zs)?;
        let multiple = has_cluster(&zs, p);
        (zs, iters, multiple)
    };

    let mut zeros = zeros;
    if iterations == 0 {
        sort_canonical(&mut zeros)?;
    }
    let residuals = residuals_for(&section, &zeros, p);
    let bound = real::pow2(-((p / 2) as i64), 64);
    for (i, res) in residuals.iter().enumerate() {
        if !(res.partial_cmp(&bound) == Some(std::cmp::Ordering::Less)) {
            return Err(Error::Residual(format!(
                "root {i} residual {} exceeds 2^-{}",
                real::fmt_dec(res),
                p / 2
            )));
        }
    }

    Ok(ZeroSet {
        params: *params,
        precision_bits: p,
        zeros,
        residuals,
        multiple_root,
        iterations,
    })
}

/// Re-evaluate the exact polynomial at each stored zero at doubled
/// precision; returns the worst relative backward-error residual and
/// whether all residuals sit below `2^(-precision_bits/2)`.
pub fn verify_residuals(zs: &ZeroSet) -> (bool, BigFloat) {
    let section = exactpoly::build_section(&zs.params);
    let residuals = residuals_for(&section, &zs.zeros, zs.precision_bits);
    let bound = real::pow2(-((zs.precision_bits / 2) as i64), 64);
    let mut worst = real::from_u64(0, 64);
    let mut all_ok = true;
    for res in &residuals {
        if res.partial_cmp(&worst) == Some(std::cmp::Ordering::Greater) {
            worst = res.clone();
        }
        if !(res.partial_cmp(&bound) == Some(std::cmp::Ordering::Less)) {
            all_ok = false;
        }
    }
    (all_ok, worst)
}

/// Backward-error residuals `|B(z)| / sum_k a_k |z|^k` at precision `2p`.
fn residuals_for(section: &ExactPolynomial, zeros: &[BigComplex], p: usize) -> Vec<BigFloat> {
    let p2 = 2 * p;
    let coeffs = section.to_bigfloat_coeffs(p2);
    zeros
        .iter()
        .map(|z| {
            let z2 = z.round_to(p2);
            let val = section.evaluate(&z2).abs();
            let scale = eval_positive(&coeffs, &z2.abs(), p2);
            val.div(&scale, p, RM)
        })
        .collect()
}

/// Horner evaluation of a positive-coefficient polynomial at `x >= 0`.
fn eval_positive(coeffs: &[BigFloat], x: &BigFloat, p: usize) -> BigFloat {
    let mut acc = real::from_u64(0, p);
    for c in coeffs.iter().rev() {
        acc = acc.mul(x, p, RM).add(c, p, RM);
    }
    acc
}

fn sort_canonical(zeros: &mut [BigComplex]) -> Result<()> {
    for z in zeros.iter() {
        if !z.is_finite() {
            return Err(Error::Numeric("non-finite root iterate".into()));
        }
    }
    zeros.sort_by(|a, b| {
        a.re()
            .partial_cmp(b.re())
            .expect("finite ordering")
            .then_with(|| a.im().partial_cmp(b.im()).expect("finite ordering"))
    });
    Ok(())
}

fn has_cluster(zeros: &[BigComplex], p: usize) -> bool {
    let tol = real::pow2(-((p / 4) as i64), 64);
    for i in 0..zeros.len() {
        for j in (i + 1)..zeros.len() {
            if zeros[i].dist(&zeros[j]).partial_cmp(&tol) == Some(std::cmp::Ordering::Less) {
                return true;
            }
        }
    }
    false
}

/// Simultaneous evaluation of the polynomial and its derivative by Horner.
fn horner2(coeffs: &[BigFloat], z: &BigComplex) -> (BigComplex, BigComplex) {
    let p = z.precision();
    let top = coeffs.last().expect("nonempty coefficients");
    let mut pv = BigComplex::from_real(real::rounded(top, p), p);
    let mut dv = BigComplex::zero(p);
    for c in coeffs[..coeffs.len() - 1].iter().rev() {
        dv = dv.mul(z).add(&pv);
        pv = pv
            .mul(z)
            .add(&BigComplex::from_real(real::rounded(c, p), p));
    }
    (pv, dv)
}

struct Phase {
    /// Working precision for this phase.
    precision: usize,
    /// Stop when every relative correction is below `2^stop_exp`.
    stop_exp: i64,
    /// Sweep budget for this phase.
    sweeps: usize,
}

fn aberth(
    section: &ExactPolynomial,
    params: &SectionParams,
    p: usize,
    config: &SolverConfig,
) -> Result<(Vec<BigComplex>, usize)> {
    let r = params.r() as usize;
    let n = params.n();

    // Initial guesses: a circle strictly inside the outer root bound
    // r/(n+1-r), with a half-step angular offset so no guess starts on the
    // real axis.
    let p_loc = p + 64;
    let rho = real::from_f64(config.guess_radius_factor, p_loc).mul(
        &real::ratio(r as i64, (n + 1 - r as u64) as i64, p_loc),
        p_loc,
        RM,
    );
    let two_pi = real::two_pi(p_loc);
    let mut zs: Vec<BigComplex> = (0..r)
        .map(|i| {
            let angle = two_pi.mul(&real::ratio(2 * i as i64 + 1, 2 * r as i64, p_loc), p_loc, RM);
            BigComplex::new(
                rho.mul(&real::cos(&angle, p_loc), p_loc, RM),
                rho.mul(&real::sin(&angle, p_loc), p_loc, RM),
                p_loc,
            )
        })
        .collect();

    let final_stop = -(p as i64) + 16;
    let mut used = 0usize;

    // Localization phase: small fixed guard, loose milestone.  For
    // well-conditioned inputs this already reaches the final tolerance.
    // It keeps sweeping until progress stalls, with only a short tail of
    // the budget reserved for the finishing phases (their endgame is
    // quadratic, so a few dozen sweeps suffice once roots are localized).
    let loc = Phase {
        precision: p_loc,
        stop_exp: final_stop,
        sweeps: config.max_iterations.saturating_sub(64).max(1),
    };
    let milestone = -32i64;
    match run_phase(section, &mut zs, &loc, Some(milestone), &mut used)? {
        PhaseOutcome::Converged => return Ok((zs, used)),
        PhaseOutcome::Milestone | PhaseOutcome::Exhausted => {}
    }

    // Finishing phase: guard precision sized from the measured per-root
    // condition number so the final tolerance is reachable despite the
    // forward ill-conditioning of these polynomials.  The measurement
    // runs at the localization precision: the derivative at a root is
    // smaller than the coefficient scale by the full condition number, so
    // measuring at lower precision would saturate at the measurement's
    // own noise floor and undersize the guard.
    for escalation in 0..2 {
        let kappa_bits = condition_bits(section, &zs, p_loc);
        let slack = 48 + (usize::BITS - (r + 1).leading_zeros()) as usize + kappa_bits
            + escalation * 128;
        if trace_enabled() {
            eprintln!("finish {escalation}: used={used} kappa_bits={kappa_bits} wp={}", p + slack);
        }
        let fin = Phase {
            precision: p + slack,
            stop_exp: final_stop,
            sweeps: config.max_iterations.saturating_sub(used).max(1),
        };
        for z in zs.iter_mut() {
            *z = z.round_to(fin.precision);
        }
        if used >= config.max_iterations {
            break;
        }
        match run_phase(section, &mut zs, &fin, None, &mut used)? {
            PhaseOutcome::Converged => return Ok((zs, used)),
            PhaseOutcome::Milestone | PhaseOutcome::Exhausted => {}
        }
    }

    let best = zs
        .iter()
        .map(|z| {
            let (re, im) = z.fmt_pair();
            (re, im)
        })
        .collect();
    Err(Error::NonConvergence {
        iterations: used,
        worst_correction: "above stopping tolerance".into(),
        best,
    })
}

enum PhaseOutcome {
    Converged,
    Milestone,
    Exhausted,
}

/// Diagnostics for iteration tuning, enabled with BINZEROS_TRACE=1.
fn trace_enabled() -> bool {
    static FLAG: std::sync::OnceLock<bool> = std::sync::OnceLock::new();
    *FLAG.get_or_init(|| std::env::var("BINZEROS_TRACE").is_ok_and(|v| v == "1"))
}

/// Run Ehrlich–Aberth sweeps at one working precision.
///
/// Sequential (Gauss–Seidel style) updates: each root's correction uses the
/// already-updated positions of earlier roots, which speeds convergence and
/// keeps the iteration deterministic.  If `milestone` is set, the phase also
/// ends once every relative correction drops below `2^milestone` while
/// progress has stalled (the signal that rounding noise, not distance to the
/// roots, dominates the corrections).
fn run_phase(
    section: &ExactPolynomial,
    zs: &mut [BigComplex],
    phase: &Phase,
    milestone: Option<i64>,
    used: &mut usize,
) -> Result<PhaseOutcome> {
    let wp = phase.precision;
    let r = zs.len();
    let coeffs = section.to_bigfloat_coeffs(wp);
    let lead = coeffs.last().expect("nonempty").clone();
    let monic: Vec<BigFloat> = coeffs.iter().map(|c| c.div(&lead, wp, RM)).collect();
    for z in zs.iter_mut() {
        *z = z.round_to(wp);
    }

    let stop = real::pow2(phase.stop_exp, 64);
    let milestone_tol = milestone.map(|m| real::pow2(m, 64));
    let mut prev_worst: Option<BigFloat> = None;
    let mut stalled = 0usize;

    for _ in 0..phase.sweeps {
        *used += 1;
        let mut worst_rel = real::from_u64(0, 64);
        let mut all_converged = true;

        for i in 0..r {
            let (pv, dv) = horner2(&monic, &zs[i]);
            if !pv.is_finite() || !dv.is_finite() {
                return Err(Error::Numeric("overflow during Aberth sweep".into()));
            }
            if pv.re().is_zero() && pv.im().is_zero() {
                continue; // exactly on a root of the rounded polynomial
            }
            if dv.re().is_zero() && dv.im().is_zero() {
                // At a critical point; nudge deterministically and retry
                // next sweep.
                let nudge = real::pow2(-(wp as i64) / 3, wp);
                zs[i] = zs[i].add(&BigComplex::from_real(nudge, wp));
                all_converged = false;
                continue;
            }
            let newton = pv.div(&dv);
            let mut s = BigComplex::zero(wp);
            for j in 0..r {
                if j == i {
                    continue;
                }
                let d = zs[i].sub(&zs[j]);
                if d.re().is_zero() && d.im().is_zero() {
                    // Coincident iterates: separate them and keep sweeping.
                    let nudge = real::pow2(-(wp as i64) / 3, wp);
                    zs[i] = zs[i].add(&BigComplex::from_real(nudge, wp));
                    continue;
                }
                s = s.add(&d.recip());
            }
            let denom = BigComplex::one(wp).sub(&newton.mul(&s));
            let w = if denom.re().is_zero() && denom.im().is_zero() {
                newton.clone()
            } else {
                newton.div(&denom)
            };
            zs[i] = zs[i].sub(&w);
            if !zs[i].is_finite() {
                return Err(Error::Numeric("overflow during Aberth update".into()));
            }

            let z_abs = zs[i].abs();
            let rel = if z_abs.is_zero() {
                w.abs()
            } else {
                w.abs().div(&z_abs, 64, RM)
            };
            if rel.partial_cmp(&stop) != Some(std::cmp::Ordering::Less) {
                all_converged = false;
            }
            if rel.partial_cmp(&worst_rel) == Some(std::cmp::Ordering::Greater) {
                worst_rel = rel;
            }
        }

        if trace_enabled() {
            let e = worst_rel.exponent().unwrap_or(0);
            eprintln!("sweep {used}: wp={wp} worst_rel~2^{e}");
        }
        if all_converged {
            return Ok(PhaseOutcome::Converged);
        }

        if let Some(tol) = &milestone_tol {
            let localized = worst_rel.partial_cmp(tol) == Some(std::cmp::Ordering::Less);
            // Stalled: the worst correction no longer halves sweep-to-sweep.
            let halved = prev_worst
                .as_ref()
                .map(|prev| {
                    let half = prev.mul(&real::pow2(-1, 64), 64, RM);
                    worst_rel.partial_cmp(&half) == Some(std::cmp::Ordering::Less)
                })
                .unwrap_or(true);
            stalled = if halved { 0 } else { stalled + 1 };
            if localized && stalled >= 4 {
                return Ok(PhaseOutcome::Milestone);
            }
            prev_worst = Some(worst_rel);
        }
    }
    Ok(PhaseOutcome::Exhausted)
}

/// Upper estimate of `log2` of the worst per-root condition number
/// `sum_k |b_k||z|^k / (|z| |p'(z)|)`, measured at the current iterates
/// at precision `p` (which must comfortably exceed the condition number
/// itself for the derivative to rise above evaluation noise).
fn condition_bits(section: &ExactPolynomial, zs: &[BigComplex], p: usize) -> usize {
    let coeffs = section.to_bigfloat_coeffs(p);
    let mut worst: i64 = 0;
    for z in zs {
        let zp = z.round_to(p);
        let (_, dv) = horner2(&coeffs, &zp);
        let z_abs = zp.abs();
        let denom = z_abs.mul(&dv.abs(), p, RM);
        if denom.is_zero() {
            continue;
        }
        let scale = eval_positive(&coeffs, &z_abs, p);
        let kappa = scale.div(&denom, 64, RM);
        if let Some(e) = kappa.exponent() {
            worst = worst.max(e as i64);
        }
    }
    worst.max(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::{abs_below_pow2, pow2};
    use std::cmp::Ordering;

    fn below(a: &BigFloat, b: &BigFloat) -> bool {
        a.partial_cmp(b) == Some(Ordering::Less)
    }

    #[test]
    fn degree_one_is_exact_ratio() {
        for n in [7u64, 30, 50] {
            let params = SectionParams::new(1, n).unwrap();
            let p = default_precision(n);
            let zs = find_zeros(&params, p).unwrap();
            assert_eq!(zs.zeros.len(), 1);
            assert_eq!(*zs.zeros[0].re(), real::ratio(-1, n as i64, p));
            assert!(zs.zeros[0].im().is_zero());
            assert!(!zs.multiple_root);
        }
    }

    #[test]
    fn full_section_is_repeated_minus_one() {
        let params = SectionParams::new(3, 3).unwrap();
        let zs = find_zeros(&params, 128).unwrap();
        assert_eq!(zs.zeros.len(), 3);
        for z in &zs.zeros {
            assert_eq!(*z.re(), real::from_i64(-1, 128));
            assert!(z.im().is_zero());
        }
        assert!(zs.multiple_root);
        for res in &zs.residuals {
            assert!(res.is_zero(), "exact integer cancellation expected");
        }
    }

    #[test]
    fn quadratic_section_matches_quadratic_formula() {
        // 1 + 3z + 3z^2 has roots (-3 +/- i sqrt(3)) / 6.
        const P: usize = 256;
        let params = SectionParams::new(2, 3).unwrap();
        let zs = find_zeros(&params, P).unwrap();
        assert_eq!(zs.zeros.len(), 2);

        let sqrt3 = real::from_u64(3, P + 16).sqrt(P + 16, RM);
        let re = real::ratio(-1, 2, P + 16);
        let im = sqrt3.reciprocal(P + 16, RM).mul(&real::ratio(1, 2, P + 16), P + 16, RM);
        let expect_lower = BigComplex::new(re.clone(), im.neg(), P);
        let expect_upper = BigComplex::new(re, im, P);

        assert!(abs_below_pow2(&zs.zeros[0].dist(&expect_lower), -(P as i64) + 16));
        assert!(abs_below_pow2(&zs.zeros[1].dist(&expect_upper), -(P as i64) + 16));
    }

    #[test]
    fn near_half_line_section() {
        // B_{n-1,n} zeros all lie on Re z = -1/2.
        let params = SectionParams::new(5, 6).unwrap();
        let p = 192;
        let zs = find_zeros(&params, p).unwrap();
        assert_eq!(zs.zeros.len(), 5);
        let half = real::ratio(-1, 2, p);
        for z in &zs.zeros {
            let dev = z.re().sub(&half, p, RM).abs();
            assert!(
                abs_below_pow2(&dev, -((p / 2) as i64)),
                "Re deviation {}",
                real::fmt_dec(&dev)
            );
        }
    }

    #[test]
    fn vieta_identities_at_moderate_size() {
        let params = SectionParams::new(10, 30).unwrap();
        let p = default_precision(30);
        let zs = find_zeros(&params, p).unwrap();
        assert_eq!(zs.zeros.len(), 10);

        let mut sum = BigComplex::zero(p);
        let mut prod = BigComplex::one(p);
        for z in &zs.zeros {
            sum = sum.add(z);
            prod = prod.mul(z);
        }
        // sum = -C(30,9)/C(30,10) = -10/21, product = 1/C(30,10).
        let expect_sum = real::ratio(-10, 21, p);
        let d_sum = sum.re().sub(&expect_sum, p, RM).abs();
        assert!(abs_below_pow2(&d_sum, -((p / 2) as i64) + 8));
        assert!(abs_below_pow2(&sum.im().abs(), -((p / 2) as i64) + 8));

        let expect_prod = real::ratio(1, 30_045_015, p);
        let d_prod = prod.re().sub(&expect_prod, p, RM).abs();
        assert!(abs_below_pow2(&d_prod, -((p / 2) as i64) + 8));
    }

    #[test]
    fn matches_reference_extreme_zeros() {
        // The two largest-Re zeros of B_{10,30}, cross-checked against an
        // independent double-precision eigenvalue root finder.
        let params = SectionParams::new(10, 30).unwrap();
        let zs = find_zeros(&params, 128).unwrap();
        let last = &zs.zeros[9];
        let (re, im) = last.to_f64s();
        assert!((re - 0.115531001763).abs() < 1e-9, "re={re}");
        assert!((im.abs() - 0.258742856357).abs() < 1e-9, "im={im}");
    }

    #[test]
    fn conjugate_symmetry_and_residuals() {
        let params = SectionParams::new(10, 30).unwrap();
        let p = 256;
        let zs = find_zeros(&params, p).unwrap();
        let (ok, worst) = verify_residuals(&zs);
        assert!(ok, "worst residual {}", real::fmt_dec(&worst));

        let tol = pow2(-((p / 2) as i64), 64);
        for z in &zs.zeros {
            if z.im().is_zero() {
                continue;
            }
            let conj = z.conj();
            let best = zs
                .zeros
                .iter()
                .map(|w| w.dist(&conj))
                .min_by(|a, b| a.partial_cmp(b).unwrap())
                .unwrap();
            assert!(below(&best, &tol));
        }
    }

    #[test]
    fn determinism_bytewise() {
        let params = SectionParams::new(7, 19).unwrap();
        let a = find_zeros(&params, 192).unwrap().to_json();
        let b = find_zeros(&params, 192).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn perturbed_zero_fails_verification() {
        let params = SectionParams::new(10, 30).unwrap();
        let mut zs = find_zeros(&params, 256).unwrap();
        let bump = BigComplex::from_f64(1e-3, 0.0, 256);
        zs.zeros[3] = zs.zeros[3].add(&bump);
        let (ok, worst) = verify_residuals(&zs);
        assert!(!ok);
        assert!(below(&pow2(-64, 64), &worst));
    }

    #[test]
    fn iteration_cap_produces_nonconvergence() {
        let params = SectionParams::new(8, 20).unwrap();
        let config = SolverConfig {
            max_iterations: 2,
            ..Default::default()
        };
        match find_zeros_with(&params, 192, &config) {
            Err(Error::NonConvergence { iterations, best, .. }) => {
                assert!(iterations <= 2);
                assert_eq!(best.len(), 8);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn rejects_tiny_precision() {
        let params = SectionParams::new(3, 9).unwrap();
        assert!(matches!(find_zeros(&params, 32), Err(Error::Domain(_))));
    }

    #[test]
    fn json_contains_schema_fields() {
        let params = SectionParams::new(2, 3).unwrap();
        let zs = find_zeros(&params, 128).unwrap();
        let json = zs.to_json();
        for key in ["\"r\":2", "\"n\":3", "\"precision_bits\":128", "\"zeros\"", "\"residuals\""] {
            assert!(json.contains(key), "missing {key} in {json}");
        }
    }
}
