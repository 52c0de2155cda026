//! The named generating functions, built both from the theta-sum side and
//! the infinite-product side so the two can be compared coefficientwise.
//!
//! - [`theta_sum`] / [`theta_product`]: the two sides of the triple product
//!   identity for f(a, b) with a = s_a q^alpha, b = s_b q^beta
//! - [`named_gf`]: product-side generating functions (partitions, S_k
//!   partitions, pod, overpartitions, colored variants, Rogers-Ramanujan)
//! - [`jacobi_cube`]: sum side of prod (1-q^j)^3
//! - [`rr_theta_factor`]: f(-q^2, -q^3), the theta factor in the
//!   Rogers-Ramanujan reciprocal
//! - [`pentagonal_weighted_series`] / [`u_weighted_series`]: lacunary series
//!   with integer weights whose reciprocals generate the three-colored
//!   overpartition counts

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::powerseries::{product_expand, PochhammerFactor, ProductSpec, TruncatedSeries};

/// f(s_a q^alpha, s_b q^beta): a Ramanujan theta function with monomial
/// arguments. Signs are +1 or -1; exponents are >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaSpec {
    pub a_sign: i8,
    pub a_exp: u64,
    pub b_sign: i8,
    pub b_exp: u64,
}

impl ThetaSpec {
    pub fn new(a_sign: i8, a_exp: u64, b_sign: i8, b_exp: u64) -> Result<ThetaSpec> {
        if !matches!(a_sign, 1 | -1) || !matches!(b_sign, 1 | -1) {
            return Err(Error::InvalidParameter("theta signs must be +1 or -1".into()));
        }
        if a_exp < 1 || b_exp < 1 {
            return Err(Error::InvalidParameter("theta exponents must be >= 1".into()));
        }
        Ok(ThetaSpec { a_sign, a_exp, b_sign, b_exp })
    }

    /// psi(q) = f(q, q^3): sum of q^(n(n+1)/2) over n >= 0.
    pub fn psi() -> ThetaSpec {
        ThetaSpec { a_sign: 1, a_exp: 1, b_sign: 1, b_exp: 3 }
    }

    /// phi(q) = f(q, q): bilateral sum of q^(n^2).
    pub fn phi() -> ThetaSpec {
        ThetaSpec { a_sign: 1, a_exp: 1, b_sign: 1, b_exp: 1 }
    }

    /// f(-q, -q^2) = (q;q)_inf, the Euler product.
    pub fn euler() -> ThetaSpec {
        ThetaSpec { a_sign: -1, a_exp: 1, b_sign: -1, b_exp: 2 }
    }

    /// f(-q^2, -q^3), the numerator of the Rogers-Ramanujan reciprocal.
    pub fn rr_factor() -> ThetaSpec {
        ThetaSpec { a_sign: -1, a_exp: 2, b_sign: -1, b_exp: 3 }
    }

    /// f(q, q^(k-3)): all-plus coefficients supported on the k-gonal numbers.
    pub fn gonal_plus(k: u64) -> Result<ThetaSpec> {
        if k < 5 {
            return Err(Error::InvalidParameter(format!("requires k >= 5, got {k}")));
        }
        ThetaSpec::new(1, 1, 1, k - 3)
    }

    /// f(q, -q^(k-3)): mixed signs, the odd-k theta.
    pub fn gonal_mixed(k: u64) -> Result<ThetaSpec> {
        if k < 5 {
            return Err(Error::InvalidParameter(format!("requires k >= 5, got {k}")));
        }
        ThetaSpec::new(1, 1, -1, k - 3)
    }

    /// f(-q, -q^(k-3)) = (q, q^(k-3), q^(k-2); q^(k-2))_inf.
    pub fn gonal_minus(k: u64) -> Result<ThetaSpec> {
        if k < 5 {
            return Err(Error::InvalidParameter(format!("requires k >= 5, got {k}")));
        }
        ThetaSpec::new(-1, 1, -1, k - 3)
    }
}

fn sign_pow(sign: i8, exp: u128) -> i64 {
    if sign == -1 && exp % 2 == 1 {
        -1
    } else {
        1
    }
}

/// Bilateral theta sum: term j carries exponent
/// alpha*j(j+1)/2 + beta*j(j-1)/2 and sign s_a^(j(j+1)/2) s_b^(j(j-1)/2).
/// Indices run symmetrically outward until both branch exponents pass the
/// truncation order.
pub fn theta_sum(spec: &ThetaSpec, order: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::zero(order);
    series.add_to_coeff(0, &BigInt::from(1));
    let n = order as u128;
    let (a_exp, b_exp) = (spec.a_exp as u128, spec.b_exp as u128);
    let mut j: u128 = 1;
    loop {
        let t_hi = j * (j + 1) / 2;
        let t_lo = j * (j - 1) / 2;
        // index +j: a^(t_hi) b^(t_lo); index -j: a^(t_lo) b^(t_hi)
        let exp_pos = a_exp * t_hi + b_exp * t_lo;
        let exp_neg = a_exp * t_lo + b_exp * t_hi;
        if exp_pos > n && exp_neg > n {
            break;
        }
        if exp_pos <= n {
            let s = sign_pow(spec.a_sign, t_hi) * sign_pow(spec.b_sign, t_lo);
            series.add_to_coeff(exp_pos as usize, &BigInt::from(s));
        }
        if exp_neg <= n {
            let s = sign_pow(spec.a_sign, t_lo) * sign_pow(spec.b_sign, t_hi);
            series.add_to_coeff(exp_neg as usize, &BigInt::from(s));
        }
        j += 1;
    }
    series
}

/// Product side of the triple product identity:
/// f(a, b) = (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.
/// When ab has a negative sign the factor terms alternate, which the
/// Pochhammer ratio field encodes.
pub fn theta_product(spec: &ThetaSpec, order: usize) -> Result<TruncatedSeries> {
    let step = spec.a_exp + spec.b_exp;
    let sab = spec.a_sign * spec.b_sign;
    let prod = ProductSpec::new()
        .factor(
            PochhammerFactor::new(-(spec.a_sign as i64), spec.a_exp, step).with_ratio(sab),
            1,
        )
        .factor(
            PochhammerFactor::new(-(spec.b_sign as i64), spec.b_exp, step).with_ratio(sab),
            1,
        )
        .factor(PochhammerFactor::new(sab as i64, step, step).with_ratio(sab), 1);
    product_expand(&prod, order)
}

/// The generating functions exposed by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GfName {
    /// 1/(q;q)_inf: unrestricted partitions.
    Partition,
    /// 1/(q, q^(k-3), q^(k-2); q^(k-2))_inf: partitions with parts in S_k.
    PSk(u64),
    /// 1/(q, q^3, q^4; q^4)_inf: odd parts distinct.
    Pod,
    /// (-q;q)_inf / (q;q)_inf: overpartitions.
    Overpartition,
    /// 1/(q;q)_inf^3: three-colored partitions.
    P3,
    /// (-q;q)_inf^2 / (q;q)_inf^3: three-colored overpartitions with no
    /// overlined third color.
    R,
    /// (-q;q)_inf / ((q;q)_inf (q^4;q^4)_inf^2): the second Ono-Robins
    /// overpartition variant.
    S,
    /// 1/(q, q^4; q^5)_inf: parts congruent to +-1 mod 5.
    Rr,
}

impl GfName {
    pub fn label(&self) -> String {
        match self {
            GfName::Partition => "partition".into(),
            GfName::PSk(k) => format!("p_S{k}"),
            GfName::Pod => "pod".into(),
            GfName::Overpartition => "overpartition".into(),
            GfName::P3 => "p3".into(),
            GfName::R => "r".into(),
            GfName::S => "s".into(),
            GfName::Rr => "rr".into(),
        }
    }
}

/// Build the product-side generating function as a truncated series.
pub fn named_gf(name: GfName, order: usize) -> Result<TruncatedSeries> {
    let spec = match name {
        GfName::Partition => ProductSpec::new().eta_factor(1, -1),
        GfName::PSk(k) => {
            if k < 5 {
                return Err(Error::InvalidParameter(format!("p_Sk requires k >= 5, got {k}")));
            }
            let m = k - 2;
            ProductSpec::new()
                .factor(PochhammerFactor::new(1, 1, m), -1)
                .factor(PochhammerFactor::new(1, k - 3, m), -1)
                .factor(PochhammerFactor::new(1, m, m), -1)
        }
        GfName::Pod => return named_gf(GfName::PSk(6), order),
        GfName::Overpartition => ProductSpec::new()
            .factor(PochhammerFactor::new(-1, 1, 1), 1)
            .eta_factor(1, -1),
        GfName::P3 => ProductSpec::new().eta_factor(1, -3),
        GfName::R => ProductSpec::new()
            .factor(PochhammerFactor::new(-1, 1, 1), 2)
            .eta_factor(1, -3),
        GfName::S => ProductSpec::new()
            .factor(PochhammerFactor::new(-1, 1, 1), 1)
            .eta_factor(1, -1)
            .eta_factor(4, -2),
        GfName::Rr => ProductSpec::new()
            .factor(PochhammerFactor::new(1, 1, 5), -1)
            .factor(PochhammerFactor::new(1, 4, 5), -1),
    };
    product_expand(&spec, order)
}

/// An eta-style quotient prod_m (q^m; q^m)_inf^(e_m) given as (m, e_m) pairs.
pub fn eta_quotient(factors: &[(u64, i32)], order: usize) -> Result<TruncatedSeries> {
    let mut spec = ProductSpec::new();
    for &(m, power) in factors {
        spec = spec.eta_factor(m, power);
    }
    product_expand(&spec, order)
}

/// Sum side of the Jacobi cube identity:
/// sum_{n>=0} (-1)^n (2n+1) q^(n(n+1)/2).
pub fn jacobi_cube(order: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::zero(order);
    let mut n: u64 = 0;
    loop {
        let t = n * (n + 1) / 2;
        if t > order as u64 {
            break;
        }
        let c = if n.is_multiple_of(2) { 2 * n as i64 + 1 } else { -(2 * n as i64 + 1) };
        series.set_coeff(t as usize, BigInt::from(c));
        n += 1;
    }
    series
}

/// f(-q^2, -q^3) = sum_j (-1)^j q^(j(5j-1)/2). Its nonzero coefficients are
/// +1 on exponents 10j^2 +- j and -1 on exponents 10j^2 +- 9j + 2.
pub fn rr_theta_factor(order: usize) -> TruncatedSeries {
    theta_sum(&ThetaSpec::rr_factor(), order)
}

/// sum_j (1-6j) q^(j(3j-1)/2) over all signed j: the lacunary series whose
/// reciprocal generates the r(n) overpartition counts.
pub fn pentagonal_weighted_series(order: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::zero(order);
    series.add_to_coeff(0, &BigInt::from(1));
    for dir in [1i64, -1] {
        let mut j = dir;
        loop {
            let e = j * (3 * j - 1) / 2;
            if e > order as i64 {
                break;
            }
            if e >= 0 {
                series.add_to_coeff(e as usize, &BigInt::from(1 - 6 * j));
            }
            j += dir;
        }
    }
    series
}

/// sum_j (3j+1) q^(j(3j+2)) over all signed j: the lacunary series whose
/// reciprocal generates the s(n) overpartition counts.
pub fn u_weighted_series(order: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::zero(order);
    series.add_to_coeff(0, &BigInt::from(1));
    for dir in [1i64, -1] {
        let mut j = dir;
        loop {
            let e = j * (3 * j + 2);
            if e > order as i64 {
                break;
            }
            if e >= 0 {
                series.add_to_coeff(e as usize, &BigInt::from(3 * j + 1));
            }
            j += dir;
        }
    }
    series
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn dense(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn psi_expansion() {
        let psi = theta_sum(&ThetaSpec::psi(), 10);
        assert_eq!(psi.coeffs(), &dense(&[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1])[..]);
    }

    #[test]
    fn phi_expansion() {
        let phi = theta_sum(&ThetaSpec::phi(), 9);
        assert_eq!(phi.coeffs(), &dense(&[1, 2, 0, 0, 2, 0, 0, 0, 0, 2])[..]);
    }

    #[test]
    fn euler_theta_is_pentagonal_series() {
        let e = theta_sum(&ThetaSpec::euler(), 7);
        assert_eq!(e.coeffs(), &dense(&[1, -1, -1, 0, 0, 1, 0, 1])[..]);
        // and matches the product (q;q)_inf
        let prod = eta_quotient(&[(1, 1)], 100).unwrap();
        assert_eq!(theta_sum(&ThetaSpec::euler(), 100), prod);
    }

    #[test]
    fn triple_product_identity_small_grid() {
        for a_sign in [1i8, -1] {
            for b_sign in [1i8, -1] {
                for a_exp in 1..=4u64 {
                    for b_exp in 1..=4u64 {
                        let spec = ThetaSpec::new(a_sign, a_exp, b_sign, b_exp).unwrap();
                        let sum = theta_sum(&spec, 120);
                        let prod = theta_product(&spec, 120).unwrap();
                        assert_eq!(sum, prod, "spec {spec:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn psi_product_form() {
        // psi(q) = prod (1-q^k)(1+q^k)^2
        let n = 80;
        let mut expected = TruncatedSeries::one(n);
        for k in 1..=n as u64 {
            expected.mul_binomial(&BigInt::from(-1), k as usize);
            expected.mul_binomial(&BigInt::from(1), k as usize);
            expected.mul_binomial(&BigInt::from(1), k as usize);
        }
        assert_eq!(theta_product(&ThetaSpec::psi(), n).unwrap(), expected);
    }

    #[test]
    fn phi_product_form() {
        // phi(q) = prod (1-q^(2k))(1+q^(2k-1))^2
        let n = 80;
        let mut expected = TruncatedSeries::one(n);
        for k in 1..=n as u64 {
            if 2 * k <= n as u64 {
                expected.mul_binomial(&BigInt::from(-1), 2 * k as usize);
            }
            if 2 * k - 1 <= n as u64 {
                expected.mul_binomial(&BigInt::from(1), (2 * k - 1) as usize);
                expected.mul_binomial(&BigInt::from(1), (2 * k - 1) as usize);
            }
        }
        assert_eq!(theta_product(&ThetaSpec::phi(), n).unwrap(), expected);
    }

    #[test]
    fn psi_reciprocal_first_coefficients() {
        // 1/psi = 1 - q + q^2 - q^3 + 2q^4 - ...: the q^2 coefficient is +1,
        // the lone composition (1,1) of 2 into triangular parts with sign
        // (-1)^2.
        let r = theta_sum(&ThetaSpec::psi(), 6).recip().unwrap();
        assert_eq!(r.coeff(0), &BigInt::from(1));
        assert_eq!(r.coeff(1), &BigInt::from(-1));
        assert_eq!(r.coeff(2), &BigInt::from(1));
    }

    #[test]
    fn named_gf_partition() {
        let p = named_gf(GfName::Partition, 5).unwrap();
        assert_eq!(p.coeffs(), &dense(&[1, 1, 2, 3, 5, 7])[..]);
    }

    #[test]
    fn named_gf_p3_at_five() {
        let p3 = named_gf(GfName::P3, 5).unwrap();
        assert_eq!(p3.coeff(5), &BigInt::from(108));
    }

    #[test]
    fn named_gf_overpartition() {
        let op = named_gf(GfName::Overpartition, 2).unwrap();
        assert_eq!(op.coeffs(), &dense(&[1, 2, 4])[..]);
    }

    #[test]
    fn pod_gf_agrees_with_classical_form() {
        // 1/(q, q^3, q^4; q^4)_inf = (-q; q^2)_inf / (q^2; q^2)_inf
        let n = 120;
        let lhs = named_gf(GfName::Pod, n).unwrap();
        let rhs = product_expand(
            &ProductSpec::new()
                .factor(PochhammerFactor::new(-1, 1, 2), 1)
                .factor(PochhammerFactor::new(1, 2, 2), -1),
            n,
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn psk_gf_sign_flip() {
        // Replacing q by -q in the p_Sk generating function gives the
        // reciprocal of f(q, q^(k-3)) for even k; for odd k the exponent
        // k-3 is even, so the substitution lands on the mixed-sign theta
        // f(q, -q^(k-3)) instead.
        for k in [6u64, 7, 9, 10] {
            let n = 60;
            let gf = named_gf(GfName::PSk(k), n).unwrap();
            let flipped = gf.substitute_neg_q();
            let spec = if k % 2 == 0 {
                ThetaSpec::gonal_plus(k).unwrap()
            } else {
                ThetaSpec::gonal_mixed(k).unwrap()
            };
            let recip = theta_sum(&spec, n).recip().unwrap();
            assert_eq!(flipped, recip, "k={k}");
        }
    }

    #[test]
    fn jacobi_cube_sum_and_product() {
        let s = jacobi_cube(6);
        assert_eq!(s.coeffs(), &dense(&[1, -3, 0, 5, 0, 0, -7])[..]);
        assert_eq!(jacobi_cube(100), eta_quotient(&[(1, 3)], 100).unwrap());
    }

    #[test]
    fn rr_theta_factor_support() {
        let f = rr_theta_factor(12);
        assert_eq!(f.coeffs(), &dense(&[1, 0, -1, -1, 0, 0, 0, 0, 0, 1, 0, 1, 0])[..]);

        // piecewise description: +1 at 10j^2 +- j, -1 at 10j^2 +- 9j + 2,
        // checked directly against both quadratic families
        let n = 400;
        let f = rr_theta_factor(n);
        let mut expected = TruncatedSeries::zero(n);
        for j in 0..=10i64 {
            for e in [10 * j * j + j, 10 * j * j - j] {
                if (0..=n as i64).contains(&e) {
                    expected.set_coeff(e as usize, BigInt::from(1));
                }
            }
            for e in [10 * j * j + 9 * j + 2, 10 * j * j - 9 * j + 2] {
                if (0..=n as i64).contains(&e) {
                    expected.set_coeff(e as usize, BigInt::from(-1));
                }
            }
        }
        assert_eq!(f, expected);
    }

    #[test]
    fn ono_robins_lacunary_series_match_eta_quotients() {
        // (q;q)^5 / (q^2;q^2)^2 = sum (1-6j) q^(j(3j-1)/2)
        let n = 100;
        let lhs = eta_quotient(&[(1, 5), (2, -2)], n).unwrap();
        assert_eq!(lhs, pentagonal_weighted_series(n));
        // (q;q)^2 (q^4;q^4)^2 / (q^2;q^2) = sum (3j+1) q^(j(3j+2))
        let rhs = eta_quotient(&[(1, 2), (4, 2), (2, -1)], n).unwrap();
        assert_eq!(rhs, u_weighted_series(n));
    }

    #[test]
    fn rr_gf_first_values() {
        let rr = named_gf(GfName::Rr, 10).unwrap();
        assert_eq!(rr.coeffs(), &dense(&[1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6])[..]);
    }

    #[test]
    fn psk_rejects_small_k() {
        assert!(named_gf(GfName::PSk(4), 10).is_err());
        assert!(matches!(
            named_gf(GfName::PSk(3), 10),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn theta_sum_truncation_is_tight() {
        // no nonzero coefficient may appear past the order, and regenerating
        // at a larger order preserves the prefix
        let spec = ThetaSpec::new(-1, 3, 1, 4).unwrap();
        let small = theta_sum(&spec, 50);
        let large = theta_sum(&spec, 300);
        assert_eq!(small.coeffs(), &large.coeffs()[..=50]);
        assert!(!small.coeffs().iter().all(Zero::is_zero));
    }
}
