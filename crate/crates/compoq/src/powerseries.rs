//! Exact truncated formal power series over the integers.
//!
//! A [`TruncatedSeries`] stores coefficients c_0..c_N of a series known
//! through order N. Arithmetic never silently extends the order: mixed-order
//! operations truncate to the smaller order. Coefficients are arbitrary
//! precision integers; there is no rational or floating fallback, so
//! reciprocals exist exactly when the constant term is +1 or -1.
//!
//! [`ProductSpec`] describes truncated infinite products built from
//! q-Pochhammer style factors and expands them with [`product_expand`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A formal power series with exact integer coefficients, truncated at a
/// fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Wrap a dense coefficient vector c_0..c_N. Must be non-empty.
    pub fn new(coeffs: Vec<BigInt>) -> TruncatedSeries {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// c * q^exp as a series of the given order (zero if exp > order).
    pub fn monomial(c: BigInt, exp: usize, order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Truncation order N: coefficients are known for q^0..q^N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^n; n must be <= order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, exp: usize, c: BigInt) {
        if exp < self.coeffs.len() {
            self.coeffs[exp] = c;
        }
    }

    pub fn add_to_coeff(&mut self, exp: usize, c: &BigInt) {
        if exp < self.coeffs.len() {
            self.coeffs[exp] += c;
        }
    }

    /// Drop coefficients beyond `order` (or keep all if already shorter).
    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        let end = order.min(self.order());
        TruncatedSeries { coeffs: self.coeffs[..=end].to_vec() }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect();
        TruncatedSeries { coeffs }
    }

    pub fn neg(&self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Cauchy product truncated to the smaller operand order.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiply in place by the sparse binomial (1 + c q^exp).
    pub fn mul_binomial(&mut self, c: &BigInt, exp: usize) {
        if c.is_zero() || exp == 0 {
            if exp == 0 {
                let f = BigInt::one() + c;
                for x in &mut self.coeffs {
                    *x *= &f;
                }
            }
            return;
        }
        let n = self.order();
        for i in (exp..=n).rev() {
            let t = &self.coeffs[i - exp] * c;
            self.coeffs[i] += t;
        }
    }

    /// Multiplicative inverse through the truncation order.
    ///
    /// Requires a unit constant term a_0 in {+1, -1}; then
    /// b_0 = a_0 and b_n = -a_0 * sum_{k=1..n} a_k b_{n-k}.
    pub fn recip(&self) -> Result<TruncatedSeries> {
        let a0 = &self.coeffs[0];
        if !a0.is_one() && !(-a0).is_one() {
            return Err(Error::NonInvertible { constant_term: a0.to_string() });
        }
        let n = self.order();
        let mut b = vec![BigInt::zero(); n + 1];
        b[0] = a0.clone();
        for m in 1..=n {
            let mut s = BigInt::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    s += &self.coeffs[k] * &b[m - k];
                }
            }
            b[m] = -(a0 * s);
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Integer power; negative exponents reciprocate first.
    pub fn pow(&self, e: i32) -> Result<TruncatedSeries> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut result = TruncatedSeries::one(self.order());
        let mut power = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&power);
            }
            exp >>= 1;
            if exp > 0 {
                power = power.mul(&power);
            }
        }
        Ok(result)
    }

    /// Formal substitution q -> -q: negates the odd coefficients.
    pub fn substitute_neg_q(&self) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Exponents with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl std::fmt::Display for TruncatedSeries {
    /// Sparse text form, e.g. `1 - q - q^4 + q^5 + 2*q^10`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// One q-Pochhammer style factor: the product over j >= 0 of
/// (1 - coeff * ratio^j * q^(first + j*step)).
///
/// With ratio = +1 this is the ordinary (z q^first; q^step)_inf with z =
/// coeff. ratio = -1 arises when the base of the Pochhammer symbol is a
/// negative power of q, which alternates the sign of successive terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerFactor {
    pub coeff: BigInt,
    pub ratio: i8,
    pub first: u64,
    pub step: u64,
}

impl PochhammerFactor {
    pub fn new(coeff: impl Into<BigInt>, first: u64, step: u64) -> PochhammerFactor {
        PochhammerFactor { coeff: coeff.into(), ratio: 1, first, step }
    }

    pub fn with_ratio(mut self, ratio: i8) -> PochhammerFactor {
        self.ratio = ratio;
        self
    }

    /// Expand the factor as a truncated polynomial. Terms whose exponent
    /// exceeds the order contribute nothing and are skipped.
    fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        if self.step == 0 {
            return Err(Error::InvalidParameter(
                "Pochhammer factor needs a positive exponent step".into(),
            ));
        }
        let mut poly = TruncatedSeries::one(order);
        let mut z = -self.coeff.clone();
        let mut e = self.first;
        while e <= order as u64 {
            poly.mul_binomial(&z, e as usize);
            if self.ratio == -1 {
                z = -z;
            }
            e += self.step;
        }
        Ok(poly)
    }
}

/// A finite list of Pochhammer factors, each raised to an integer power
/// (negative powers reciprocate the factor).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductSpec {
    factors: Vec<(PochhammerFactor, i32)>,
}

impl ProductSpec {
    /// The empty product (constant series 1).
    pub fn new() -> ProductSpec {
        ProductSpec::default()
    }

    pub fn factor(mut self, f: PochhammerFactor, power: i32) -> ProductSpec {
        self.factors.push((f, power));
        self
    }

    /// (q^m; q^m)_inf raised to a power; the building block of eta quotients.
    pub fn eta_factor(self, m: u64, power: i32) -> ProductSpec {
        self.factor(PochhammerFactor::new(1, m, m), power)
    }

    pub fn factors(&self) -> &[(PochhammerFactor, i32)] {
        &self.factors
    }
}

/// Expand all factors of the spec to the requested order and combine them.
///
/// A factor with a negative power is expanded and then reciprocated, which
/// requires its constant term to be a unit over the integers.
pub fn product_expand(spec: &ProductSpec, order: usize) -> Result<TruncatedSeries> {
    let mut result = TruncatedSeries::one(order);
    for (factor, power) in &spec.factors {
        if *power == 0 {
            continue;
        }
        let poly = factor.expand(order)?;
        result = result.mul(&poly.pow(*power)?);
    }
    Ok(result)
}
