//! Helpers over [`astro_float::BigFloat`]: a fixed rounding mode, a
//! thread-local constants cache, exact integer imports, and decimal I/O.
//!
//! All arithmetic in this crate uses round-to-nearest-even at an explicit
//! precision, so identical inputs always produce identical bits.

use std::cell::RefCell;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_traits::Zero;

/// Rounding mode used everywhere in the crate.
pub const RM: RoundingMode = RoundingMode::ToEven;

/// Round a precision up to the word granularity of the underlying library.
///
/// `astro-float` stores mantissas in 64-bit words and rounds arithmetic
/// results at the word-aligned precision, while `set_precision` rounds at
/// the exact requested bit.  Aligning every stated precision to a word
/// multiple keeps those two paths bit-identical.
pub fn align(p: usize) -> usize {
    p.div_ceil(astro_float::WORD_BIT_SIZE) * astro_float::WORD_BIT_SIZE
}

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Run `f` with the thread-local constants cache.
pub fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

pub fn from_i64(v: i64, p: usize) -> BigFloat {
    BigFloat::from_i64(v, p)
}

pub fn from_u64(v: u64, p: usize) -> BigFloat {
    BigFloat::from_u64(v, p)
}

pub fn from_f64(v: f64, p: usize) -> BigFloat {
    BigFloat::from_f64(v, p)
}

/// `num / den` correctly rounded to `p` bits (operands are exact in 64 bits).
pub fn ratio(num: i64, den: i64, p: usize) -> BigFloat {
    from_i64(num, p.max(64)).div(&from_i64(den, p.max(64)), p, RM)
}

/// Exact power of two `2^k`.
pub fn pow2(k: i64, p: usize) -> BigFloat {
    let mut one = BigFloat::from_u64(1, p);
    // `1` is stored as fraction 1/2 with exponent 1; shifting the exponent
    // multiplies by a power of two exactly.
    let e = i32::try_from(k + 1).expect("pow2 exponent out of range");
    one.set_exponent(e);
    one
}

pub fn pi(p: usize) -> BigFloat {
    with_consts(|cc| cc.pi(p, RM))
}

pub fn two_pi(p: usize) -> BigFloat {
    pi(p + 2).mul(&from_u64(2, p), p, RM)
}

pub fn ln(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.ln(p, RM, cc))
}

pub fn exp(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.exp(p, RM, cc))
}

pub fn sin(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.sin(p, RM, cc))
}

pub fn cos(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.cos(p, RM, cc))
}

pub fn atan(x: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| x.atan(p, RM, cc))
}

pub fn powf(base: &BigFloat, exponent: &BigFloat, p: usize) -> BigFloat {
    with_consts(|cc| base.pow(exponent, p, RM, cc))
}

/// Principal-value two-argument arctangent in `(-pi, pi]`.
pub fn atan2(y: &BigFloat, x: &BigFloat, p: usize) -> BigFloat {
    let wp = p + 16;
    if x.is_zero() {
        if y.is_zero() {
            return BigFloat::from_u64(0, p);
        }
        let half_pi = pi(wp).mul(&pow2(-1, wp), p, RM);
        return if y.is_negative() { half_pi.neg() } else { half_pi };
    }
    let t = atan(&y.div(x, wp, RM), wp);
    if !x.is_negative() {
        let mut t = t;
        t.set_precision(p, RM).expect("set_precision");
        t
    } else if y.is_negative() {
        t.sub(&pi(wp), p, RM)
    } else {
        t.add(&pi(wp), p, RM)
    }
}

/// Exact conversion of an arbitrary-size integer, rounded to `p` bits.
pub fn from_bigint(v: &BigInt, p: usize) -> BigFloat {
    if v.is_zero() {
        return BigFloat::from_u64(0, p);
    }
    let s = format!("{v:b}");
    with_consts(|cc| BigFloat::parse(&s, Radix::Bin, p, RM, cc))
}

/// `num / den` for arbitrary-size integers, rounded to `p` bits.
///
/// The operands are first rounded to `p + 64` bits, so the result is within
/// a small fraction of an ulp of the correctly rounded quotient.
pub fn ratio_big(num: &BigInt, den: &BigInt, p: usize) -> BigFloat {
    let wp = p + 64;
    from_bigint(num, wp).div(&from_bigint(den, wp), p, RM)
}

/// Round a copy of `x` to `p` bits (word-aligned; see [`align`]).
pub fn rounded(x: &BigFloat, p: usize) -> BigFloat {
    let mut y = x.clone();
    y.set_precision(align(p), RM).expect("set_precision");
    y
}

/// Nearest `f64` (approximate; used for diagnostics and coarse decisions).
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf() {
        return if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
    }
    let (words, _bits, sign, e, _inexact) = x.as_raw_parts().expect("finite raw parts");
    let len = words.len();
    let hi = words[len - 1] as f64;
    let lo = if len >= 2 { words[len - 2] as f64 } else { 0.0 };
    const TWO64: f64 = 1.8446744073709552e19;
    let frac = (hi + lo / TWO64) / TWO64;
    let mag = frac * 2f64.powi(e);
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

/// Decimal scientific representation with the full stored precision.
pub fn fmt_dec(x: &BigFloat) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_inf() {
        return if x.is_negative() { "-inf" } else { "inf" }.to_string();
    }
    with_consts(|cc| x.format(Radix::Dec, RM, cc).expect("decimal format"))
}

/// Parse a decimal string at `p` bits; `None` if the string is not a finite
/// number.
pub fn parse_dec(s: &str, p: usize) -> Option<BigFloat> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return None;
    }
    let v = with_consts(|cc| BigFloat::parse(trimmed, Radix::Dec, p, RM, cc));
    if v.is_nan() || v.is_inf() {
        None
    } else {
        Some(v)
    }
}

/// `|x| < 2^k`.
pub fn abs_below_pow2(x: &BigFloat, k: i64) -> bool {
    let p = x.mantissa_max_bit_len().unwrap_or(64).max(64);
    matches!(
        x.abs().partial_cmp(&pow2(k, p)),
        Some(std::cmp::Ordering::Less)
    )
}
