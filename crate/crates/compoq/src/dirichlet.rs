//! Truncated Dirichlet-series algebra over composition norms: the
//! norm-indexed analogue of series reciprocation, the Mobius identity, and
//! numeric zeta evaluations with explicit tail bounds.
//!
//! Exact and approximate layers are kept apart: [`comp_zeta_coeffs`] and
//! [`mobius_via_compositions`] are exact big-integer computations, while
//! [`comp_zeta_value`] and [`partition_zeta_value`] produce floats together
//! with an integral-test bound on everything that was truncated away.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::compositions;
use crate::error::{Error, Result};
use crate::partsets::PartSet;

/// Coefficients d(1)..d(B) of a truncated Dirichlet series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCoeffs {
    // index n holds d(n); index 0 is unused
    coeffs: Vec<BigInt>,
}

impl DirichletCoeffs {
    pub fn unit(bound: u64) -> DirichletCoeffs {
        let mut coeffs = vec![BigInt::zero(); bound as usize + 1];
        coeffs[1] = BigInt::one();
        DirichletCoeffs { coeffs }
    }

    /// d(n) = 1 for all n <= bound (the zeta coefficient vector).
    pub fn ones(bound: u64) -> DirichletCoeffs {
        let mut coeffs = vec![BigInt::one(); bound as usize + 1];
        coeffs[0] = BigInt::zero();
        DirichletCoeffs { coeffs }
    }

    pub fn from_coeffs(d: Vec<BigInt>) -> DirichletCoeffs {
        assert!(d.len() >= 2, "need at least d(1)");
        let mut coeffs = d;
        coeffs[0] = BigInt::zero();
        DirichletCoeffs { coeffs }
    }

    pub fn bound(&self) -> u64 {
        (self.coeffs.len() - 1) as u64
    }

    pub fn d(&self, n: u64) -> &BigInt {
        &self.coeffs[n as usize]
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[1].is_one() && self.coeffs[2..].iter().all(Zero::is_zero)
    }

    /// Dirichlet convolution (e*f)(n) = sum over k | n of e(k) f(n/k),
    /// truncated to the smaller bound.
    pub fn convolve(&self, rhs: &DirichletCoeffs) -> DirichletCoeffs {
        let bound = self.bound().min(rhs.bound()) as usize;
        let mut out = vec![BigInt::zero(); bound + 1];
        for i in 1..=bound {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 1..=bound / i {
                if !rhs.coeffs[j].is_zero() {
                    out[i * j] += &self.coeffs[i] * &rhs.coeffs[j];
                }
            }
        }
        DirichletCoeffs { coeffs: out }
    }
}

/// Coefficients of 1 / (1 - z sum_{n in T*} n^-s) as a Dirichlet series:
/// d(1) = 1 and d(n) = z sum over parts k in T* dividing n of d(n/k).
/// These are the composition-side values sum_{N(c) = n} z^(length).
///
/// Rejects sets containing 1: appending parts equal to 1 never changes the
/// norm, so every coefficient would be an infinite sum.
pub fn comp_zeta_coeffs(set: &PartSet, z: i64, bound: u64) -> Result<DirichletCoeffs> {
    if bound < 1 {
        return Err(Error::InvalidParameter("bound must be >= 1".into()));
    }
    set.require_bound(bound)?;
    if set.contains(1) {
        return Err(Error::Divergent(
            "unbounded 1-multiplicity: part 1 preserves the norm".into(),
        ));
    }
    let z = BigInt::from(z);
    let mut d = vec![BigInt::zero(); bound as usize + 1];
    d[1] = BigInt::one();
    // d(q) is final when the outer loop reaches q: every contribution to q
    // comes from a strictly smaller quotient.
    for q in 1..=bound as usize {
        if d[q].is_zero() {
            continue;
        }
        let contribution = &d[q] * &z;
        for &k in set.members_up_to(bound / q as u64) {
            d[q * k as usize] += &contribution;
        }
    }
    Ok(DirichletCoeffs { coeffs: d })
}

/// mu(n) as the signed count of ordered factorizations into parts >= 2,
/// by brute-force enumeration.
pub fn mobius_via_compositions(n: u64) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for c in compositions::ordered_factorizations(n)? {
        if c.len() % 2 == 0 {
            total += 1;
        } else {
            total -= 1;
        }
    }
    Ok(total)
}

/// mu(n) by trial factorization: 0 for non-squarefree n, else (-1)^(number
/// of prime factors). OEIS A008683.
pub fn mobius_trial(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let mut m = n;
    let mut omega = 0u32;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            omega += 1;
        }
        p += 1;
    }
    if m > 1 {
        omega += 1;
    }
    if omega.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A numeric zeta evaluation: the closed form, the truncated Dirichlet (or
/// product) partial sum, their difference, and a rigorous bound on that
/// difference from the integral test.
#[derive(Clone, Copy, Debug)]
pub struct ZetaEvaluation {
    pub closed_form: f64,
    pub partial_sum: f64,
    pub difference: f64,
    pub tail_bound: f64,
}

fn power_sum(members: &[u64], s: f64) -> f64 {
    // summed smallest-term first for accuracy
    members.iter().rev().map(|&n| (n as f64).powf(-s)).sum()
}

/// Integral-test bound on sum_{n > bound} n^-s for s > 1.
fn integral_tail(bound: u64, s: f64) -> f64 {
    (bound as f64).powf(1.0 - s) / (s - 1.0)
}

/// Candidate intermediate exponents for the norm-tail estimate.
fn s0_grid(s: f64) -> Vec<f64> {
    let mut grid = vec![2.0, 1.5, 1.25, (1.0 + s) / 2.0, s - 0.5, s - 1.0, 3.0];
    grid.retain(|s0| *s0 > 1.0 && *s0 < s);
    grid.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    grid.dedup();
    grid
}

/// Bound on the mass of compositions (or partitions) with norm beyond the
/// bound: for any 1 < s0 < s with |z| T(s0) < 1,
///   sum_{N(c) > B} |z|^l N(c)^-s  <=  B^(s0-s) / (1 - |z| T(s0)).
/// `full_weight(s0)` must return an upper bound on the total weighted mass
/// at exponent s0.
fn norm_tail_bound(bound: u64, s: f64, full_weight: impl Fn(f64) -> Option<f64>) -> Option<f64> {
    let mut best: Option<f64> = None;
    for s0 in s0_grid(s) {
        if let Some(total) = full_weight(s0) {
            let b = (bound as f64).powf(s0 - s) * total;
            best = Some(match best {
                Some(prev) => prev.min(b),
                None => b,
            });
        }
    }
    best
}

/// Evaluate 1 / (1 - z sum_{n in T*} n^-s) two ways: the closed form from
/// the truncated inner sum, and the partial Dirichlet sum of the exact
/// coefficients. The tail bound covers both truncations.
pub fn comp_zeta_value(set: &PartSet, z: i64, s: f64, bound: u64) -> Result<ZetaEvaluation> {
    if s <= 1.0 {
        return Err(Error::InvalidParameter(format!("need s > 1, got {s}")));
    }
    set.require_bound(bound)?;
    if set.contains(1) {
        return Err(Error::Divergent(
            "unbounded 1-multiplicity: part 1 preserves the norm".into(),
        ));
    }
    let members = set.members_up_to(bound);
    let zf = z as f64;
    let za = zf.abs();
    let t = power_sum(members, s);
    let tau = integral_tail(bound, s);
    if za * (t + tau) >= 1.0 {
        return Err(Error::Divergent(format!(
            "|z| * sum n^-s = {} >= 1 for set {} at s = {s}",
            za * (t + tau),
            set.name()
        )));
    }
    let closed_form = 1.0 / (1.0 - zf * t);

    let coeffs = comp_zeta_coeffs(set, z, bound)?;
    let mut partial_sum = 0.0;
    for n in (1..=bound).rev() {
        let c = coeffs.d(n);
        if !c.is_zero() {
            partial_sum += bigint_to_f64(c) * (n as f64).powf(-s);
        }
    }

    // (i) perturbation of the closed form by the truncated inner sum
    let denom = (1.0 - za * t) * (1.0 - za * (t + tau));
    let closed_err = za * tau / denom;
    // (ii) Dirichlet coefficients with norm beyond the bound
    let weight = |s0: f64| {
        let total = za * (power_sum(members, s0) + integral_tail(bound, s0));
        if total < 1.0 {
            Some(1.0 / (1.0 - total))
        } else {
            None
        }
    };
    let norm_tail = norm_tail_bound(bound, s, weight).ok_or_else(|| {
        Error::Divergent(format!("no valid tail exponent for set {} at s = {s}", set.name()))
    })?;

    let difference = (closed_form - partial_sum).abs();
    Ok(ZetaEvaluation { closed_form, partial_sum, difference, tail_bound: closed_err + norm_tail })
}

/// Evaluate the Euler-product form prod_{n in T*} (1 - n^-s)^-1 against the
/// partial sum of the partitions-by-norm coefficients (multisets of parts in
/// T* with product n, the unordered factorizations).
pub fn partition_zeta_value(set: &PartSet, s: f64, bound: u64) -> Result<ZetaEvaluation> {
    if s <= 1.0 {
        return Err(Error::InvalidParameter(format!("need s > 1, got {s}")));
    }
    set.require_bound(bound)?;
    if set.contains(1) {
        return Err(Error::Divergent(
            "unbounded 1-multiplicity: part 1 preserves the norm".into(),
        ));
    }
    let members = set.members_up_to(bound);
    let closed_form: f64 = members
        .iter()
        .rev()
        .map(|&n| 1.0 / (1.0 - (n as f64).powf(-s)))
        .product();

    // multiplicative coin DP: h(n) = number of multisets with product n
    let mut h = vec![BigInt::zero(); bound as usize + 1];
    h[1] = BigInt::one();
    for &m in members {
        let m = m as usize;
        let mut j = 1usize;
        while m * j <= bound as usize {
            let add = h[j].clone();
            h[m * j] += add;
            j += 1;
        }
    }
    let mut partial_sum = 0.0;
    for n in (1..=bound as usize).rev() {
        if !h[n].is_zero() {
            partial_sum += bigint_to_f64(&h[n]) * (n as f64).powf(-s);
        }
    }

    // (i) factors beyond the bound: -log(1-x) <= 2x for x <= 1/2
    let tau = integral_tail(bound, s);
    let product_err = closed_form * ((2.0 * tau).exp() - 1.0);
    // (ii) multisets with norm beyond the bound
    let weight = |s0: f64| {
        let log_prod: f64 = members
            .iter()
            .map(|&n| -(1.0 - (n as f64).powf(-s0)).ln())
            .sum();
        Some((log_prod + 2.0 * integral_tail(bound, s0)).exp())
    };
    let norm_tail = norm_tail_bound(bound, s, weight)
        .ok_or_else(|| Error::Divergent(format!("no valid tail exponent at s = {s}")))?;

    let difference = (closed_form - partial_sum).abs();
    Ok(ZetaEvaluation {
        closed_form,
        partial_sum,
        difference,
        tail_bound: product_err + norm_tail,
    })
}

/// Exact-to-float conversion for tails and reports.
pub fn bigint_to_f64(v: &BigInt) -> f64 {
    // digits fit comfortably: values used here stay far below f64 range
    v.to_string().parse::<f64>().unwrap_or(if v.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}
