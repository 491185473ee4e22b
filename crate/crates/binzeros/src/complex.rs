//! Complex arithmetic over [`BigFloat`] components at explicit precision.

use astro_float::BigFloat;

use crate::real::{self, RM};

/// A complex number with both components held at `prec` bits.
///
/// Binary operations work at the larger of the two operand precisions; each
/// component operation rounds to nearest-even, so results are deterministic.
#[derive(Clone, Debug)]
pub struct BigComplex {
    re: BigFloat,
    im: BigFloat,
    prec: usize,
}

impl BigComplex {
    /// Precisions are word-aligned on entry (see [`real::align`]).
    pub fn new(re: BigFloat, im: BigFloat, prec: usize) -> Self {
        let prec = real::align(prec);
        Self {
            re: real::rounded(&re, prec),
            im: real::rounded(&im, prec),
            prec,
        }
    }

    pub fn zero(prec: usize) -> Self {
        Self::from_f64(0.0, 0.0, prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_f64(1.0, 0.0, prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        let prec = real::align(prec);
        Self {
            re: real::from_f64(re, prec),
            im: real::from_f64(im, prec),
            prec,
        }
    }

    pub fn from_real(re: BigFloat, prec: usize) -> Self {
        Self::new(re, real::from_u64(0, prec), prec)
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    fn wp(&self, other: &Self) -> usize {
        self.prec.max(other.prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.wp(other);
        Self {
            re: self.re.add(&other.re, p, RM),
            im: self.im.add(&other.im, p, RM),
            prec: p,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.wp(other);
        Self {
            re: self.re.sub(&other.re, p, RM),
            im: self.im.sub(&other.im, p, RM),
            prec: p,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.wp(other);
        let ac = self.re.mul(&other.re, p, RM);
        let bd = self.im.mul(&other.im, p, RM);
        let ad = self.re.mul(&other.im, p, RM);
        let bc = self.im.mul(&other.re, p, RM);
        Self {
            re: ac.sub(&bd, p, RM),
            im: ad.add(&bc, p, RM),
            prec: p,
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        let p = self.wp(other);
        let wp = p + 8;
        let c2 = other.re.mul(&other.re, wp, RM);
        let d2 = other.im.mul(&other.im, wp, RM);
        let denom = c2.add(&d2, wp, RM);
        let ac = self.re.mul(&other.re, wp, RM);
        let bd = self.im.mul(&other.im, wp, RM);
        let bc = self.im.mul(&other.re, wp, RM);
        let ad = self.re.mul(&other.im, wp, RM);
        Self {
            re: ac.add(&bd, wp, RM).div(&denom, p, RM),
            im: bc.sub(&ad, wp, RM).div(&denom, p, RM),
            prec: p,
        }
    }

    pub fn recip(&self) -> Self {
        Self::one(self.prec).div(self)
    }

    pub fn neg(&self) -> Self {
        Self {
            re: self.re.neg(),
            im: self.im.neg(),
            prec: self.prec,
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: self.im.neg(),
            prec: self.prec,
        }
    }

    pub fn scale(&self, factor: &BigFloat) -> Self {
        Self {
            re: self.re.mul(factor, self.prec, RM),
            im: self.im.mul(factor, self.prec, RM),
            prec: self.prec,
        }
    }

    /// `re^2 + im^2` at `prec` bits.
    pub fn norm_sqr(&self) -> BigFloat {
        let wp = self.prec + 8;
        let a = self.re.mul(&self.re, wp, RM);
        let b = self.im.mul(&self.im, wp, RM);
        real::rounded(&a.add(&b, wp, RM), self.prec)
    }

    pub fn abs(&self) -> BigFloat {
        let wp = self.prec + 8;
        let a = self.re.mul(&self.re, wp, RM);
        let b = self.im.mul(&self.im, wp, RM);
        a.add(&b, wp, RM).sqrt(self.prec, RM)
    }

    /// Principal argument in `(-pi, pi]`.
    pub fn arg(&self) -> BigFloat {
        real::atan2(&self.im, &self.re, self.prec)
    }

    pub fn dist(&self, other: &Self) -> BigFloat {
        self.sub(other).abs()
    }

    /// `e^z = e^re (cos im + i sin im)`.
    pub fn exp(&self) -> Self {
        let p = self.prec;
        let wp = p + 16;
        let mag = real::exp(&self.re, wp);
        Self {
            re: mag.mul(&real::cos(&self.im, wp), p, RM),
            im: mag.mul(&real::sin(&self.im, wp), p, RM),
            prec: p,
        }
    }

    pub fn is_finite(&self) -> bool {
        !(self.re.is_nan() || self.re.is_inf() || self.im.is_nan() || self.im.is_inf())
    }

    pub fn round_to(&self, p: usize) -> Self {
        Self::new(self.re.clone(), self.im.clone(), p)
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (real::to_f64(&self.re), real::to_f64(&self.im))
    }

    /// Decimal strings for the two components.
    pub fn fmt_pair(&self) -> (String, String) {
        (real::fmt_dec(&self.re), real::fmt_dec(&self.im))
    }
}

impl PartialEq for BigComplex {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl std::fmt::Display for BigComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (re, im) = self.to_f64s();
        write!(f, "{re:e}{im:+e}i")
    }
}
