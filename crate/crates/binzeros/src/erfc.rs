//! Complementary error function on the complex plane, and its zero
//! nearest the origin.
//!
//! erf is evaluated by its entire Maclaurin series.  The series suffers
//! cancellation that grows like e^(|z|^2), so the working precision adds
//! ~3|z|^2 guard bits; in the range used here (|z| <= ~4) that stays
//! cheap.  The minimal-modulus zero is located by Newton iteration seeded
//! from a coarse grid over the upper-left rectangle where the first zeros
//! live, certified complete by an argument-principle winding count around
//! the rectangle, then polished along a precision ladder.

use crate::complex::BigComplex;
use crate::error::{Error, Result};
use crate::real::{self, RM};

/// Guard bits needed against the series' internal cancellation at `z`.
fn series_guard(z: &BigComplex) -> usize {
    let nsq = real::to_f64(&z.norm_sqr());
    if !nsq.is_finite() || nsq > 64.0 {
        // Callers stay within a small disk; clamp rather than explode.
        return 64 + 3 * 64;
    }
    64 + (3.0 * nsq).ceil() as usize
}

/// erf(z) = (2/sqrt(pi)) sum_{k>=0} (-1)^k z^(2k+1) / (k! (2k+1)).
pub fn erf(z: &BigComplex, precision_bits: usize) -> BigComplex {
    let p = real::align(precision_bits);
    let wp = real::align(p + series_guard(z));
    let zw = z.round_to(wp);
    let minus_zsq = zw.mul(&zw).neg();
    let nsq = real::to_f64(&zw.norm_sqr()).max(0.0);

    // term_k = (-1)^k z^(2k+1) / k!; accumulate term_k / (2k+1).
    let mut term = zw.clone();
    let mut sum = zw.clone();
    let stop = real::pow2(-(wp as i64) - 16, 64);
    let mut k: u64 = 1;
    loop {
        term = term.mul(&minus_zsq).scale(&real::ratio(1, k as i64, wp));
        let contrib = term.scale(&real::ratio(1, 2 * k as i64 + 1, wp));
        sum = sum.add(&contrib);
        // Terms grow until k ~ |z|^2 and decay factorially afterwards.
        if (k as f64) > nsq
            && term.abs().partial_cmp(&stop) == Some(std::cmp::Ordering::Less)
        {
            break;
        }
        k += 1;
        // Past k = 2|z|^2 each term at least halves, so wp extra steps
        // certainly reach the stopping threshold; this cap is defensive.
        if k > wp as u64 + 16 * (nsq.ceil() as u64 + 4) {
            break;
        }
    }
    let two_over_sqrt_pi = real::from_u64(2, wp).div(&real::pi(wp).sqrt(wp, RM), wp, RM);
    sum.scale(&two_over_sqrt_pi).round_to(p)
}

/// erfc(z) = 1 - erf(z).
pub fn erfc(z: &BigComplex, precision_bits: usize) -> BigComplex {
    let p = real::align(precision_bits);
    let wp = p + 64;
    let e = erf(z, wp);
    BigComplex::one(wp).sub(&e).round_to(p)
}

/// One Newton step for erfc: since erfc'(z) = -(2/sqrt(pi)) e^(-z^2), the
/// update is z <- z + (sqrt(pi)/2) e^(z^2) erfc(z).
fn newton_step(z: &BigComplex, precision_bits: usize) -> BigComplex {
    let wp = real::align(precision_bits);
    let zw = z.round_to(wp);
    let f = erfc(&zw, wp);
    let e = zw.mul(&zw).exp();
    let half_sqrt_pi = real::pi(wp).sqrt(wp, RM).mul(&real::pow2(-1, wp), wp, RM);
    zw.add(&f.mul(&e).scale(&half_sqrt_pi)).round_to(wp)
}

/// Winding number of erfc around the rectangle [x0,x1] x [y0,y1],
/// counting zeros inside (erfc has no poles).
fn winding(x0: f64, x1: f64, y0: f64, y1: f64, samples_per_side: usize) -> i64 {
    let p = 96;
    let corners = [(x0, y0), (x1, y0), (x1, y1), (x0, y1), (x0, y0)];
    let mut total = 0.0f64;
    let mut prev: Option<f64> = None;
    for w in corners.windows(2) {
        let (ax, ay) = w[0];
        let (bx, by) = w[1];
        for s in 0..samples_per_side {
            let t = s as f64 / samples_per_side as f64;
            let z = BigComplex::from_f64(ax + t * (bx - ax), ay + t * (by - ay), p);
            let v = erfc(&z, p);
            let (re, im) = v.to_f64s();
            let arg = im.atan2(re);
            if let Some(prev_arg) = prev {
                let mut d = arg - prev_arg;
                while d > std::f64::consts::PI {
                    d -= 2.0 * std::f64::consts::PI;
                }
                while d < -std::f64::consts::PI {
                    d += 2.0 * std::f64::consts::PI;
                }
                total += d;
            }
            prev = Some(arg);
        }
    }
    // Close the loop back to the starting sample.
    let z = BigComplex::from_f64(x0, y0, p);
    let v = erfc(&z, p);
    let (re, im) = v.to_f64s();
    let arg = im.atan2(re);
    if let Some(prev_arg) = prev {
        let mut d = arg - prev_arg;
        while d > std::f64::consts::PI {
            d -= 2.0 * std::f64::consts::PI;
        }
        while d < -std::f64::consts::PI {
            d += 2.0 * std::f64::consts::PI;
        }
        total += d;
    }
    (total / (2.0 * std::f64::consts::PI)).round() as i64
}

/// The zero of erfc closest to the origin, in the upper half-plane.
///
/// erfc is positive on the real axis and its zeros come in conjugate
/// pairs in the left half-plane, so the search rectangle is
/// [-3, 0] x [0, 3]: Newton runs from a 4x4 grid of seeds, the distinct
/// converged zeros are checked against the rectangle's winding count, and
/// the minimal-modulus one is polished to full precision.
pub fn erfc_zero(precision_bits: usize) -> Result<BigComplex> {
    if precision_bits < 53 {
        return Err(Error::Domain(format!(
            "precision_bits must be at least 53, got {precision_bits}"
        )));
    }
    let p = real::align(precision_bits);
    let (x0, x1, y0, y1) = (-3.0, 0.0, 0.0, 3.0);

    let seed_p = 128;
    let mut found: Vec<BigComplex> = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            let cx = x0 + (i as f64 + 0.5) * (x1 - x0) / 4.0;
            let cy = y0 + (j as f64 + 0.5) * (y1 - y0) / 4.0;
            let mut z = BigComplex::from_f64(cx, cy, seed_p);
            let mut ok = false;
            for _ in 0..48 {
                let next = newton_step(&z, seed_p);
                if !next.is_finite() {
                    break;
                }
                let moved = next.dist(&z);
                z = next;
                if real::abs_below_pow2(&moved, -80) {
                    ok = true;
                    break;
                }
                // Abandon seeds that wander far out of the search area.
                let (zx, zy) = z.to_f64s();
                if !(-8.0..=8.0).contains(&zx) || !(-8.0..=8.0).contains(&zy) {
                    break;
                }
            }
            if !ok {
                continue;
            }
            let (zx, zy) = z.to_f64s();
            let margin = 1e-6;
            if zx < x0 - margin || zx > x1 + margin || zy < y0 + margin || zy > y1 + margin {
                continue;
            }
            let dup = found
                .iter()
                .any(|w| real::to_f64(&w.dist(&z)) < 1e-6);
            if !dup {
                found.push(z);
            }
        }
    }

    let count = winding(x0, x1, y0, y1, 96);
    if count != found.len() as i64 {
        return Err(Error::NonConvergence {
            iterations: 48,
            worst_correction: format!(
                "winding count {count} does not match {} converged zeros",
                found.len()
            ),
            best: found.iter().map(|z| z.fmt_pair()).collect(),
        });
    }
    let mut best = found
        .into_iter()
        .min_by(|a, b| a.abs().partial_cmp(&b.abs()).expect("finite moduli"))
        .ok_or_else(|| Error::NonConvergence {
            iterations: 48,
            worst_correction: "no zero located in the search rectangle".into(),
            best: Vec::new(),
        })?;

    // Precision ladder: each Newton step squares the error, so doubling
    // the working precision and taking two steps per rung is ample.
    let mut rung = seed_p;
    while rung < p + 64 {
        rung = real::align((rung * 2).min(p + 64));
        for _ in 0..2 {
            best = newton_step(&best, rung);
        }
    }
    let best = best.round_to(p);

    let residual = erfc(&best, p + 64).abs();
    if !real::abs_below_pow2(&residual, -((p / 2) as i64)) {
        return Err(Error::Residual(format!(
            "erfc zero residual {} exceeds 2^-{}",
            real::fmt_dec(&residual),
            p / 2
        )));
    }
    Ok(best)
}
