//! Exact integer-coefficient layer: binomial coefficients, section
//! polynomials of the binomial expansion, and their algebraic identities.
//!
//! Everything here is computed in exact integer or rational arithmetic;
//! rounding enters only when coefficients are exported to floating point.

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::BigComplex;
use crate::error::{Error, Result};
use crate::real;

/// Section indices `(r, n)` with `1 <= r <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectionParams {
    r: u64,
    n: u64,
}

impl SectionParams {
    pub fn new(r: u64, n: u64) -> Result<Self> {
        if r < 1 || r > n {
            return Err(Error::Domain(format!(
                "section indices need 1 <= r <= n, got r={r}, n={n}"
            )));
        }
        Ok(Self { r, n })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `r/n` rounded to `p` bits.
    pub fn beta(&self, p: usize) -> BigFloat {
        real::ratio(self.r as i64, self.n as i64, p)
    }

    /// `r/(n-1)` rounded to `p` bits; requires `n >= 2`.
    pub fn gamma(&self, p: usize) -> Result<BigFloat> {
        if self.n < 2 {
            return Err(Error::Hypothesis("gamma needs n >= 2".into()));
        }
        Ok(real::ratio(self.r as i64, (self.n - 1) as i64, p))
    }

    /// `r/(n-r)` rounded to `p` bits; requires `r < n`.
    pub fn z_beta(&self, p: usize) -> Result<BigFloat> {
        if self.r >= self.n {
            return Err(Error::Hypothesis("z_beta needs r < n".into()));
        }
        Ok(real::ratio(self.r as i64, (self.n - self.r) as i64, p))
    }
}

/// Dense integer-coefficient polynomial, constant term first.
///
/// Trailing zero coefficients are trimmed on construction, so the last
/// stored coefficient is nonzero; the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: Vec<BigInt>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn evaluate_rational(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Horner evaluation at a complex point.  Coefficients are rounded to the
    /// precision of `z` and every operation rounds at that precision.
    pub fn evaluate(&self, z: &BigComplex) -> BigComplex {
        let p = z.precision();
        let mut acc = BigComplex::zero(p);
        for c in self.coeffs.iter().rev() {
            let cf = BigComplex::from_real(real::from_bigint(c, p), p);
            acc = acc.mul(z).add(&cf);
        }
        acc
    }

    /// Coefficients rounded to `p` bits, constant term first.
    pub fn to_bigfloat_coeffs(&self, p: usize) -> Vec<BigFloat> {
        self.coeffs.iter().map(|c| real::from_bigint(c, p)).collect()
    }
}

/// Binomial coefficient `C(n, k)` by the multiplicative formula; every
/// intermediate division is exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut res = BigInt::one();
    for i in 0..k {
        res = res * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    res
}

/// The section `B_{r,n}(z) = sum_{k=0}^{r} C(n,k) z^k`.
pub fn build_section(params: &SectionParams) -> ExactPolynomial {
    let coeffs = (0..=params.r).map(|k| binomial(params.n, k)).collect();
    ExactPolynomial::new(coeffs)
}

/// The normalized remainder `sum_{k=r+1}^{n} C(n,k) z^{k-r}`; requires `r < n`.
pub fn build_remainder(params: &SectionParams) -> Result<ExactPolynomial> {
    if params.r >= params.n {
        return Err(Error::Hypothesis("remainder needs r < n".into()));
    }
    let mut coeffs = vec![BigInt::zero()];
    for j in 1..=(params.n - params.r) {
        coeffs.push(binomial(params.n, params.r + j));
    }
    Ok(ExactPolynomial::new(coeffs))
}

/// The reliability form `sum_{k=0}^{r} C(n,k) q^k (1-q)^{r-k}` expanded into
/// a degree-`r` polynomial in `q`.
pub fn reliability_form(params: &SectionParams) -> ExactPolynomial {
    let r = params.r as usize;
    let mut acc = vec![BigInt::zero(); r + 1];
    for k in 0..=r {
        let cnk = binomial(params.n, k as u64);
        // expand C(n,k) q^k (1-q)^{r-k}
        for j in 0..=(r - k) {
            let term = &cnk * binomial((r - k) as u64, j as u64);
            if j % 2 == 0 {
                acc[k + j] += term;
            } else {
                acc[k + j] -= term;
            }
        }
    }
    ExactPolynomial::new(acc)
}

#[derive(Serialize)]
struct SectionJson {
    r: u64,
    n: u64,
    coeffs: Vec<String>,
}

/// JSON record of the section polynomial with decimal-string coefficients.
pub fn section_to_json(params: &SectionParams) -> String {
    let poly = build_section(params);
    let record = SectionJson {
        r: params.r,
        n: params.n,
        coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
    };
    serde_json::to_string(&record).expect("section serialization")
}

/// Largest absolute coefficient, as a float at `p` bits (scale estimate).
pub fn max_coeff_bigfloat(poly: &ExactPolynomial, p: usize) -> BigFloat {
    let mut best = BigInt::zero();
    for c in poly.coeffs() {
        let a = c.abs();
        if a > best {
            best = a;
        }
    }
    real::from_bigint(&best, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::{abs_below_pow2, RM};
    use num_traits::FromPrimitive;

    /// Independent oracle: Pascal's triangle by repeated addition.
    fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
        let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for i in 1..rows {
            let prev = &t[i - 1];
            let mut row = vec![BigInt::one()];
            for j in 1..i {
                row.push(&prev[j - 1] + &prev[j]);
            }
            row.push(BigInt::one());
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let t = pascal(61);
        for n in 0..61u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), t[n as usize][k as usize], "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_known_values() {
        assert_eq!(binomial(30, 10), BigInt::from_u64(30_045_015).unwrap());
        assert_eq!(binomial(10, 11), BigInt::zero());
        assert_eq!(binomial(7, 0), BigInt::one());
        assert_eq!(binomial(200, 100), binomial(200, 100).clone());
        // symmetry on a larger row
        for k in 0..=200u64 {
            assert_eq!(binomial(200, k), binomial(200, 200 - k));
        }
    }

    #[test]
    fn params_reject_bad_indices() {
        assert!(SectionParams::new(0, 5).is_err());
        assert!(SectionParams::new(6, 5).is_err());
        assert!(SectionParams::new(5, 5).is_ok());
    }

    #[test]
    fn section_shapes() {
        let p = SectionParams::new(1, 9).unwrap();
        let b = build_section(&p);
        assert_eq!(b.coeffs(), &[BigInt::one(), BigInt::from(9)]);

        let p = SectionParams::new(4, 4).unwrap();
        let b = build_section(&p);
        assert_eq!(
            b.coeffs(),
            &[1, 4, 6, 4, 1].map(BigInt::from)
        );
        assert_eq!(b.degree(), Some(4));
    }

    #[test]
    fn remainder_is_reversed_complementary_section() {
        // sum_{k>r} C(n,k) z^{k-r} has j-th coefficient C(n, r+j), which is
        // the reversal of the section with index n-r-1.
        for (r, n) in [(3u64, 8u64), (1, 5), (5, 7), (10, 30)] {
            let params = SectionParams::new(r, n).unwrap();
            let rem = build_remainder(&params).unwrap();
            let comp = build_section(&SectionParams::new(n - r - 1, n).unwrap());
            assert_eq!(rem.degree(), Some((n - r) as usize));
            for j in 1..=(n - r) {
                assert_eq!(
                    rem.coeff(j as usize),
                    comp.coeff((n - r - j) as usize),
                    "r={r} n={n} j={j}"
                );
                assert_eq!(rem.coeff(j as usize), binomial(n, r + j));
            }
            assert_eq!(rem.coeff(0), BigInt::zero());
        }
        // boundary case r = n-1: remainder is the single monomial C(n,n) z.
        let params = SectionParams::new(6, 7).unwrap();
        let rem = build_remainder(&params).unwrap();
        assert_eq!(rem.coeffs(), &[BigInt::zero(), BigInt::one()]);
    }

    #[test]
    fn section_plus_remainder_times_z_pow_r_is_full_expansion() {
        // B_{r,n}(z) + z^r R_{r,n}(z) = (1+z)^n, checked at rational points.
        let qs = [
            BigRational::new(BigInt::from(1), BigInt::from(3)),
            BigRational::new(BigInt::from(-2), BigInt::from(7)),
            BigRational::new(BigInt::from(9), BigInt::from(5)),
        ];
        for (r, n) in [(3u64, 8u64), (5, 9), (1, 6)] {
            let params = SectionParams::new(r, n).unwrap();
            let b = build_section(&params);
            let rem = build_remainder(&params).unwrap();
            for q in &qs {
                let lhs = b.evaluate_rational(q)
                    + q.pow(r as i32) * rem.evaluate_rational(q);
                let one_plus = BigRational::one() + q.clone();
                let rhs = one_plus.pow(n as i32);
                assert_eq!(lhs, rhs, "r={r} n={n} q={q}");
            }
        }
    }

    #[test]
    fn reliability_form_identity() {
        // H(q) = (1-q)^r B(q/(1-q)) exactly, at rational q != 1.
        let qs = [
            BigRational::new(BigInt::from(1), BigInt::from(3)),
            BigRational::new(BigInt::from(2), BigInt::from(7)),
            BigRational::new(BigInt::from(9), BigInt::from(10)),
            BigRational::new(BigInt::from(-1), BigInt::from(4)),
        ];
        for (r, n) in [(2u64, 5u64), (4, 9), (7, 7), (3, 12)] {
            let params = SectionParams::new(r, n).unwrap();
            let h = reliability_form(&params);
            let b = build_section(&params);
            for q in &qs {
                let one_minus = BigRational::one() - q.clone();
                let transformed = q.clone() / one_minus.clone();
                let rhs = one_minus.pow(r as i32) * b.evaluate_rational(&transformed);
                assert_eq!(h.evaluate_rational(q), rhs, "r={r} n={n} q={q}");
            }
        }
    }

    #[test]
    fn reliability_form_endpoints() {
        for (r, n) in [(2u64, 5u64), (4, 9), (1, 3)] {
            let params = SectionParams::new(r, n).unwrap();
            let h = reliability_form(&params);
            assert_eq!(
                h.evaluate_rational(&BigRational::zero()),
                BigRational::one()
            );
            assert_eq!(
                h.evaluate_rational(&BigRational::one()),
                BigRational::from_integer(binomial(n, r))
            );
        }
    }

    /// Complex rational arithmetic for the evaluation oracle.
    #[derive(Clone)]
    struct QC {
        re: BigRational,
        im: BigRational,
    }

    impl QC {
        fn mul(&self, o: &QC) -> QC {
            QC {
                re: &self.re * &o.re - &self.im * &o.im,
                im: &self.re * &o.im + &self.im * &o.re,
            }
        }
        fn add_int(&self, c: &BigInt) -> QC {
            QC {
                re: &self.re + BigRational::from_integer(c.clone()),
                im: self.im.clone(),
            }
        }
    }

    fn eval_exact(poly: &ExactPolynomial, z: &QC) -> QC {
        let mut acc = QC {
            re: BigRational::zero(),
            im: BigRational::zero(),
        };
        for c in poly.coeffs().iter().rev() {
            acc = acc.mul(z).add_int(c);
        }
        acc
    }

    fn rational_to_bigfloat(q: &BigRational, p: usize) -> BigFloat {
        real::ratio_big(q.numer(), q.denom(), p)
    }

    #[test]
    fn float_evaluation_matches_exact_oracle() {
        const P: usize = 192;
        // Points with |z| <= 1/(2n) keep the evaluation well conditioned, so
        // a near-ulp relative bound is meaningful.
        let cases = [
            (10u64, 30u64, (1i64, 100i64), (1i64, 90i64)),
            (5, 12, (-1, 40), (1, 30)),
            (8, 20, (1, 80), (-1, 50)),
        ];
        for (r, n, (an, ad), (bn, bd)) in cases {
            let params = SectionParams::new(r, n).unwrap();
            let poly = build_section(&params);
            let zq = QC {
                re: BigRational::new(BigInt::from(an), BigInt::from(ad)),
                im: BigRational::new(BigInt::from(bn), BigInt::from(bd)),
            };
            let exact = eval_exact(&poly, &zq);
            let z = BigComplex::new(
                rational_to_bigfloat(&zq.re, P),
                rational_to_bigfloat(&zq.im, P),
                P,
            );
            let got = poly.evaluate(&z);
            let expect = BigComplex::new(
                rational_to_bigfloat(&exact.re, P + 32),
                rational_to_bigfloat(&exact.im, P + 32),
                P + 32,
            );
            let err = got.dist(&expect);
            let scale = expect.abs().add(&real::from_u64(1, P), P, RM);
            let rel = err.div(&scale, 64, RM);
            assert!(
                abs_below_pow2(&rel, -(P as i64) + 8),
                "r={r} n={n}: relative error {}",
                real::fmt_dec(&rel)
            );
        }
    }

    #[test]
    fn degree_one_evaluation_near_root() {
        const P: usize = 128;
        let params = SectionParams::new(1, 7).unwrap();
        let poly = build_section(&params);
        let z = BigComplex::from_real(real::ratio(-1, 7, P), P);
        let v = poly.evaluate(&z);
        // -1/7 is not a binary-representable point, so the value is only
        // zero to working precision.
        assert!(abs_below_pow2(&v.abs(), -(P as i64) + 8));
    }

    #[test]
    fn trailing_zeros_trimmed_and_zero_poly() {
        let p = ExactPolynomial::new(vec![BigInt::from(3), BigInt::zero(), BigInt::zero()]);
        assert_eq!(p.degree(), Some(0));
        let z = ExactPolynomial::new(vec![BigInt::zero()]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.coeff(5), BigInt::zero());
    }

    #[test]
    fn json_shape() {
        let params = SectionParams::new(2, 4).unwrap();
        assert_eq!(
            section_to_json(&params),
            r#"{"r":2,"n":4,"coeffs":["1","4","6"]}"#
        );
    }

    #[test]
    fn ratio_helpers() {
        const P: usize = 128;
        let params = SectionParams::new(10, 30).unwrap();
        assert_eq!(params.beta(P), real::ratio(1, 3, P));
        assert_eq!(params.z_beta(P).unwrap(), real::ratio(1, 2, P));
        assert_eq!(params.gamma(P).unwrap(), real::ratio(10, 29, P));
        let top = SectionParams::new(5, 5).unwrap();
        assert!(top.z_beta(P).is_err());
    }
}
