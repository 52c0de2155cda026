//! Part sets: the allowed-part alphabets for restricted partitions and
//! compositions.
//!
//! Every set is materialized eagerly as a sorted, deduplicated list of members
//! up to an explicit bound, together with a formula-based membership predicate
//! that is independent of the materialized list (the two are cross-checked in
//! tests). Provided families:
//!
//! - [`polygonal_set`]: k-gonal numbers n((k-2)n +- (k-4))/2
//! - [`polygonal_star_set`]: the signed-index subset of the k-gonal numbers
//!   whose theta-series terms carry a plus sign (odd k)
//! - [`residue_set_sk`]: the residues 0 and +-1 modulo k-2
//! - [`pentagonal_hat_set`]: generalized pentagonal numbers with even index
//! - [`general_r_set`] / [`general_t_set`]: the two-parameter generalizations
//! - [`second_hexagonal_set`]: the values n(2n+1)
//! - [`u_set`]: j(3j+2) over nonzero integers j
//! - [`naturals`], [`naturals_ge2`], [`primes_set`], [`explicit_set`]

use crate::error::{Error, Result};

/// How a set's members are defined. Carries the defining parameters so that
/// membership can be decided from the formula alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartSetKind {
    /// n((k-2)n +- (k-4))/2 over n >= 1, both sign branches.
    Polygonal { k: u64 },
    /// n((k-2)n - (k-4))/2 over signed n != 0 with n == 0, 1 (mod 4).
    PolygonalStar { k: u64 },
    /// Values v with v mod modulus in `residues`.
    Residues { modulus: u64, residues: Vec<u64> },
    /// m(3m +- 1)/2 for even m >= 2.
    PentagonalHat,
    /// n(2n+1) for n >= 1.
    SecondHexagonal,
    /// j((alpha+beta)j + (alpha-beta))/2 over signed j != 0.
    GeneralR { alpha: u64, beta: u64 },
    /// j(3j+2) over signed j != 0.
    U,
    /// All integers >= min.
    Naturals { min: u64 },
    /// Prime numbers.
    Primes,
    /// An arbitrary finite list; membership is list lookup by definition.
    Explicit(Vec<u64>),
}

/// A named set of allowed parts, materialized up to `bound`.
///
/// Members are strictly increasing, all in `1..=bound`, each value stored
/// once even when produced by several index branches. Values are immutable
/// after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSet {
    name: String,
    kind: PartSetKind,
    bound: u64,
    members: Vec<u64>,
}

impl PartSet {
    fn build(name: String, kind: PartSetKind, bound: u64) -> Result<PartSet> {
        if bound < 1 {
            return Err(Error::InvalidParameter("bound must be >= 1".into()));
        }
        let members = generate(&kind, bound);
        Ok(PartSet {
            name,
            kind,
            bound,
            members,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &PartSetKind {
        &self.kind
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Sorted list of members in `1..=bound`.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// Members that are <= n (a prefix of `members`).
    pub fn members_up_to(&self, n: u64) -> &[u64] {
        let end = self.members.partition_point(|&m| m <= n);
        &self.members[..end]
    }

    pub fn min_member(&self) -> Option<u64> {
        self.members.first().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Formula-based membership test, valid for any v >= 1 (not just v <=
    /// bound). For `Explicit` sets the list itself is the definition.
    pub fn contains(&self, v: u64) -> bool {
        if v == 0 {
            return false;
        }
        match &self.kind {
            PartSetKind::Polygonal { k } => {
                both_branch_hit(v, |n| polygonal_value(*k, n, 1), |n| polygonal_value(*k, n, -1))
            }
            PartSetKind::PolygonalStar { k } => signed_index_hit(v, |j| star_value(*k, j), star_index_admissible),
            PartSetKind::Residues { modulus, residues } => residues.contains(&(v % modulus)),
            PartSetKind::PentagonalHat => {
                signed_index_hit(v, pentagonal_signed, |j| j.rem_euclid(2) == 0)
            }
            PartSetKind::SecondHexagonal => {
                single_branch_hit(v, |n| n * (2 * n + 1))
            }
            PartSetKind::GeneralR { alpha, beta } => {
                signed_index_hit(v, |j| general_r_value(*alpha, *beta, j), |_| true)
            }
            PartSetKind::U => signed_index_hit(v, |j| j * (3 * j + 2), |_| true),
            PartSetKind::Naturals { min } => v >= *min,
            PartSetKind::Primes => is_prime(v),
            PartSetKind::Explicit(list) => list.binary_search(&v).is_ok(),
        }
    }

    /// Rebuild the same set with a different bound. The member list of the
    /// smaller-bound set is always a prefix of the larger-bound one.
    pub fn regenerate(&self, bound: u64) -> Result<PartSet> {
        PartSet::build(self.name.clone(), self.kind.clone(), bound)
    }

    /// Errors unless the set is materialized at least up to `required`.
    pub fn require_bound(&self, required: u64) -> Result<()> {
        if self.bound < required {
            Err(Error::BoundTooSmall {
                bound: self.bound,
                required,
            })
        } else {
            Ok(())
        }
    }
}

fn polygonal_value(k: u64, n: i128, sign: i128) -> i128 {
    let k = k as i128;
    n * ((k - 2) * n + sign * (k - 4)) / 2
}

fn star_value(k: u64, j: i128) -> i128 {
    let k = k as i128;
    j * ((k - 2) * j - (k - 4)) / 2
}

/// Theta-term indices whose coefficient is +1: j == 0, 1 (mod 4).
/// This holds uniformly for f(q, -q^(k-3)) with odd k; the residue pattern is
/// independent of k because the sign (-1)^(j(j-1)/2) depends only on j mod 4.
fn star_index_admissible(j: i128) -> bool {
    let r = j.rem_euclid(4);
    r == 0 || r == 1
}

fn pentagonal_signed(j: i128) -> i128 {
    j * (3 * j - 1) / 2
}

fn general_r_value(alpha: u64, beta: u64, j: i128) -> i128 {
    let (a, b) = (alpha as i128, beta as i128);
    j * ((a + b) * j + (a - b)) / 2
}

/// Scan a single increasing index branch until it passes v.
fn single_branch_hit(v: u64, f: impl Fn(i128) -> i128) -> bool {
    let v = v as i128;
    let mut n = 1;
    loop {
        let val = f(n);
        if val == v {
            return true;
        }
        if val > v {
            return false;
        }
        n += 1;
    }
}

fn both_branch_hit(v: u64, plus: impl Fn(i128) -> i128, minus: impl Fn(i128) -> i128) -> bool {
    let v = v as i128;
    let mut n = 1;
    loop {
        let (p, m) = (plus(n), minus(n));
        if p == v || m == v {
            return true;
        }
        if p > v && m > v {
            return false;
        }
        n += 1;
    }
}

/// Scan both signed index directions; each direction is monotone in |j|.
fn signed_index_hit(v: u64, f: impl Fn(i128) -> i128, admissible: impl Fn(i128) -> bool) -> bool {
    let v = v as i128;
    for dir in [1i128, -1] {
        let mut j = dir;
        loop {
            let val = f(j);
            if val > v {
                break;
            }
            if val == v && val >= 1 && admissible(j) {
                return true;
            }
            j += dir;
        }
    }
    false
}

fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= v {
        if v.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn generate(kind: &PartSetKind, bound: u64) -> Vec<u64> {
    let mut values: Vec<u64> = Vec::new();
    let b = bound as i128;
    let mut push = |v: i128| {
        if v >= 1 && v <= b {
            values.push(v as u64);
        }
    };
    match kind {
        PartSetKind::Polygonal { k } => {
            let mut n = 1;
            loop {
                let p = polygonal_value(*k, n, 1);
                let m = polygonal_value(*k, n, -1);
                if p > b && m > b {
                    break;
                }
                push(p);
                push(m);
                n += 1;
            }
        }
        PartSetKind::PolygonalStar { k } => {
            for dir in [1i128, -1] {
                let mut j = dir;
                loop {
                    let val = star_value(*k, j);
                    if val > b {
                        break;
                    }
                    if star_index_admissible(j) {
                        push(val);
                    }
                    j += dir;
                }
            }
        }
        PartSetKind::Residues { modulus, residues } => {
            for v in 1..=bound {
                if residues.contains(&(v % modulus)) {
                    values.push(v);
                }
            }
        }
        PartSetKind::PentagonalHat => {
            let mut m = 2;
            loop {
                let lo = pentagonal_signed(m);
                let hi = m * (3 * m + 1) / 2;
                if lo > b {
                    break;
                }
                push(lo);
                push(hi);
                m += 2;
            }
        }
        PartSetKind::SecondHexagonal => {
            let mut n = 1;
            loop {
                let val = n * (2 * n + 1);
                if val > b {
                    break;
                }
                push(val);
                n += 1;
            }
        }
        PartSetKind::GeneralR { alpha, beta } => {
            for dir in [1i128, -1] {
                let mut j = dir;
                loop {
                    let val = general_r_value(*alpha, *beta, j);
                    if val > b {
                        break;
                    }
                    push(val);
                    j += dir;
                }
            }
        }
        PartSetKind::U => {
            for dir in [1i128, -1] {
                let mut j = dir;
                loop {
                    let val = j * (3 * j + 2);
                    if val > b {
                        break;
                    }
                    push(val);
                    j += dir;
                }
            }
        }
        PartSetKind::Naturals { min } => {
            for v in *min..=bound {
                values.push(v);
            }
        }
        PartSetKind::Primes => {
            for v in 2..=bound {
                if is_prime(v) {
                    values.push(v);
                }
            }
        }
        PartSetKind::Explicit(list) => {
            values = list.iter().copied().filter(|&v| v >= 1 && v <= bound).collect();
        }
    }
    values.sort_unstable();
    values.dedup();
    values
}

/// Positive extended k-gonal numbers up to `bound`: both sign branches of
/// n((k-2)n +- (k-4))/2, deduplicated. P_3 is the triangular numbers
/// (OEIS A000217), P_4 the squares, P_5 the generalized pentagonal numbers.
pub fn polygonal_set(k: u64, bound: u64) -> Result<PartSet> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("polygonal k must be >= 3, got {k}")));
    }
    PartSet::build(format!("P_{k}"), PartSetKind::Polygonal { k }, bound)
}

/// The subset of the k-gonal numbers (odd k >= 5) whose terms appear with a
/// plus sign in the theta expansion of f(q, -q^(k-3)): values
/// n((k-2)n - (k-4))/2 over signed indices n == 0, 1 (mod 4).
pub fn polygonal_star_set(k: u64, bound: u64) -> Result<PartSet> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "star set is defined for odd k >= 5, got {k}"
        )));
    }
    PartSet::build(format!("P*_{k}"), PartSetKind::PolygonalStar { k }, bound)
}

/// S_k: natural numbers congruent to 0 or +-1 modulo k-2. S_5 is all of N.
pub fn residue_set_sk(k: u64, bound: u64) -> Result<PartSet> {
    if k < 5 {
        return Err(Error::InvalidParameter(format!("S_k requires k >= 5, got {k}")));
    }
    let m = k - 2;
    let mut residues = vec![0, 1 % m];
    let neg = (m - 1) % m;
    if !residues.contains(&neg) {
        residues.push(neg);
    }
    residues.sort_unstable();
    residues.dedup();
    PartSet::build(format!("S_{k}"), PartSetKind::Residues { modulus: m, residues }, bound)
}

/// Generalized pentagonal numbers m(3m +- 1)/2 with even index m >= 2:
/// 5, 7, 22, 26, 51, 57, ...
pub fn pentagonal_hat_set(bound: u64) -> Result<PartSet> {
    PartSet::build("Phat".into(), PartSetKind::PentagonalHat, bound)
}

fn check_ab(alpha: u64, beta: u64) -> Result<()> {
    if alpha == 0 || alpha >= beta || (alpha % 2) != (beta % 2) {
        return Err(Error::InvalidParameter(format!(
            "require 0 < alpha < beta with matching parity, got ({alpha}, {beta})"
        )));
    }
    Ok(())
}

/// R*_{alpha,beta}: values j((alpha+beta)j + (alpha-beta))/2 over nonzero
/// signed j, intersected with [1, bound] (zero excluded).
pub fn general_r_set(alpha: u64, beta: u64, bound: u64) -> Result<PartSet> {
    check_ab(alpha, beta)?;
    PartSet::build(
        format!("R*_{{{alpha},{beta}}}"),
        PartSetKind::GeneralR { alpha, beta },
        bound,
    )
}

/// T_{alpha,beta}: natural numbers congruent to 0 or +-alpha modulo alpha+beta.
pub fn general_t_set(alpha: u64, beta: u64, bound: u64) -> Result<PartSet> {
    check_ab(alpha, beta)?;
    let m = alpha + beta;
    let mut residues = vec![0, alpha % m, (m - alpha % m) % m];
    residues.sort_unstable();
    residues.dedup();
    PartSet::build(
        format!("T_{{{alpha},{beta}}}"),
        PartSetKind::Residues { modulus: m, residues },
        bound,
    )
}

/// Second hexagonal numbers n(2n+1): 3, 10, 21, 36, 55, 78, ...
pub fn second_hexagonal_set(bound: u64) -> Result<PartSet> {
    PartSet::build("hex2".into(), PartSetKind::SecondHexagonal, bound)
}

/// U: values j(3j+2) over nonzero signed j: 1, 5, 8, 16, 21, 33, ...
pub fn u_set(bound: u64) -> Result<PartSet> {
    PartSet::build("U".into(), PartSetKind::U, bound)
}

/// All of N up to the bound.
pub fn naturals(bound: u64) -> Result<PartSet> {
    PartSet::build("N".into(), PartSetKind::Naturals { min: 1 }, bound)
}

/// N*: natural numbers >= 2 (no part equal to 1).
pub fn naturals_ge2(bound: u64) -> Result<PartSet> {
    PartSet::build("N*".into(), PartSetKind::Naturals { min: 2 }, bound)
}

/// Parts congruent to +-1 modulo 5 (the Rogers-Ramanujan residue classes).
pub fn rr_residue_set(bound: u64) -> Result<PartSet> {
    PartSet::build(
        "pm1mod5".into(),
        PartSetKind::Residues { modulus: 5, residues: vec![1, 4] },
        bound,
    )
}

/// Parts divisible by m.
pub fn multiples_set(m: u64, bound: u64) -> Result<PartSet> {
    if m < 1 {
        return Err(Error::InvalidParameter("modulus must be >= 1".into()));
    }
    PartSet::build(
        format!("{m}Z"),
        PartSetKind::Residues { modulus: m, residues: vec![0] },
        bound,
    )
}

/// Primes up to the bound.
pub fn primes_set(bound: u64) -> Result<PartSet> {
    PartSet::build("primes".into(), PartSetKind::Primes, bound)
}

/// An arbitrary finite set given by an explicit list of values.
pub fn explicit_set(name: &str, values: &[u64], bound: u64) -> Result<PartSet> {
    if values.contains(&0) {
        return Err(Error::InvalidParameter("explicit set values must be >= 1".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    PartSet::build(name.into(), PartSetKind::Explicit(sorted), bound)
}

/// The signed-index view of R_{alpha,beta}: pairs (j, value) for all nonzero
/// j with value in [1, bound], sorted by value. Exposes which theta-series
/// index produced each member; used by the weight rules that depend on index
/// parity.
pub fn general_r_indexed(alpha: u64, beta: u64, bound: u64) -> Result<Vec<(i64, u64)>> {
    check_ab(alpha, beta)?;
    let b = bound as i128;
    let mut out = Vec::new();
    for dir in [1i128, -1] {
        let mut j = dir;
        loop {
            let val = general_r_value(alpha, beta, j);
            if val > b {
                break;
            }
            if val >= 1 {
                out.push((j as i64, val as u64));
            }
            j += dir;
        }
    }
    out.sort_by_key(|&(_, v)| v);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute evaluation of a signed-index formula over a wide index window;
    /// independent of the generators' early-termination logic.
    fn brute_signed(f: impl Fn(i128) -> i128, admissible: impl Fn(i128) -> bool, bound: i128) -> Vec<u64> {
        let mut v: Vec<u64> = (-100..=100i128)
            .filter(|&j| j != 0 && admissible(j))
            .map(&f)
            .filter(|&x| x >= 1 && x <= bound)
            .map(|x| x as u64)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    #[test]
    fn polygonal_examples() {
        assert_eq!(polygonal_set(3, 12).unwrap().members(), &[1, 3, 6, 10]);
        assert_eq!(polygonal_set(4, 10).unwrap().members(), &[1, 4, 9]);
        assert_eq!(polygonal_set(5, 15).unwrap().members(), &[1, 2, 5, 7, 12, 15]);
        assert!(polygonal_set(2, 10).is_err());
        assert!(polygonal_set(5, 0).is_err());
    }

    #[test]
    fn triangular_equals_extended_hexagonal() {
        for bound in [1, 7, 50, 333, 2000] {
            let p3 = polygonal_set(3, bound).unwrap();
            let p6 = polygonal_set(6, bound).unwrap();
            assert_eq!(p3.members(), p6.members(), "bound {bound}");
        }
    }

    #[test]
    fn star_set_examples() {
        // Oracle: minus-branch values over indices == 0, 1 (mod 4).
        let oracle5 = brute_signed(|j| star_value(5, j), star_index_admissible, 30);
        assert_eq!(polygonal_star_set(5, 30).unwrap().members(), &oracle5[..]);
        assert_eq!(polygonal_star_set(5, 30).unwrap().members(), &[1, 15, 22, 26]);
        assert_eq!(polygonal_star_set(5, 1).unwrap().members(), &[1]);
        assert_eq!(polygonal_star_set(7, 5).unwrap().members(), &[1]);
        assert!(polygonal_star_set(6, 10).is_err());
        assert!(polygonal_star_set(3, 10).is_err());
    }

    #[test]
    fn star_subset_of_polygonal() {
        for k in [5, 7, 9, 11] {
            let star = polygonal_star_set(k, 500).unwrap();
            let full = polygonal_set(k, 500).unwrap();
            for &v in star.members() {
                assert!(full.members().binary_search(&v).is_ok(), "k={k} v={v}");
            }
        }
    }

    #[test]
    fn residue_sk_examples() {
        let s5 = residue_set_sk(5, 10).unwrap();
        assert_eq!(s5.members(), &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
        assert_eq!(residue_set_sk(6, 10).unwrap().members(), &[1, 3, 4, 5, 7, 8, 9]);
        assert_eq!(residue_set_sk(8, 7).unwrap().members(), &[1, 5, 6, 7]);
        assert!(residue_set_sk(4, 10).is_err());
    }

    #[test]
    fn s5_is_all_naturals() {
        for bound in [1, 13, 200] {
            let s5 = residue_set_sk(5, bound).unwrap();
            let n: Vec<u64> = (1..=bound).collect();
            assert_eq!(s5.members(), &n[..]);
        }
    }

    #[test]
    fn pentagonal_hat_examples() {
        assert_eq!(pentagonal_hat_set(30).unwrap().members(), &[5, 7, 22, 26]);
        assert!(pentagonal_hat_set(4).unwrap().members().is_empty());
        assert_eq!(pentagonal_hat_set(5).unwrap().members(), &[5]);
        // subset of the pentagonal numbers
        let p5 = polygonal_set(5, 1000).unwrap();
        for &v in pentagonal_hat_set(1000).unwrap().members() {
            assert!(p5.members().binary_search(&v).is_ok());
        }
    }

    #[test]
    fn general_r_examples() {
        // Oracle: evaluate the defining quadratic over a wide index window.
        let oracle13 = brute_signed(|j| general_r_value(1, 3, j), |_| true, 10);
        assert_eq!(general_r_set(1, 3, 10).unwrap().members(), &oracle13[..]);
        // R*_{1,3} is the triangular numbers: the (1, k-3) instance collapses
        // to the extended hexagonal case.
        assert_eq!(general_r_set(1, 3, 10).unwrap().members(), &[1, 3, 6, 10]);
        assert_eq!(general_r_set(1, 5, 4).unwrap().members(), &[1]);
        assert_eq!(general_r_set(1, 5, 20).unwrap().members(), &[1, 5, 8, 16]);
        assert_eq!(general_r_set(2, 4, 20).unwrap().members(), &[2, 4, 10, 14]);
        assert!(general_r_set(3, 1, 10).is_err());
        assert!(general_r_set(1, 2, 10).is_err());
        assert!(general_r_set(0, 2, 10).is_err());
    }

    #[test]
    fn general_r_matches_polygonal_for_alpha_one() {
        // R*_{1,k-3} = P_k for even k.
        for k in [6u64, 8, 10, 12] {
            let r = general_r_set(1, k - 3, 400).unwrap();
            let p = polygonal_set(k, 400).unwrap();
            assert_eq!(r.members(), p.members(), "k={k}");
        }
    }

    #[test]
    fn general_t_examples() {
        // 9 == 1 (mod 4), so it belongs alongside 1, 3, 4, 5, 7, 8
        assert_eq!(general_t_set(1, 3, 9).unwrap().members(), &[1, 3, 4, 5, 7, 8, 9]);
        let t24 = general_t_set(2, 4, 12).unwrap();
        assert_eq!(t24.members(), &[2, 4, 6, 8, 10, 12]);
        assert_eq!(general_t_set(3, 5, 16).unwrap().members(), &[3, 5, 8, 11, 13, 16]);
    }

    #[test]
    fn second_hexagonal_examples() {
        assert_eq!(second_hexagonal_set(36).unwrap().members(), &[3, 10, 21, 36]);
        assert!(second_hexagonal_set(2).unwrap().members().is_empty());
        assert_eq!(second_hexagonal_set(100).unwrap().members(), &[3, 10, 21, 36, 55, 78]);
    }

    #[test]
    fn u_set_examples() {
        assert_eq!(u_set(20).unwrap().members(), &[1, 5, 8, 16]);
        assert!(u_set(0).is_err());
        assert_eq!(u_set(1).unwrap().members(), &[1]);
    }

    #[test]
    fn predicate_agrees_with_list() {
        let sets = vec![
            polygonal_set(3, 10_000).unwrap(),
            polygonal_set(4, 10_000).unwrap(),
            polygonal_set(5, 10_000).unwrap(),
            polygonal_set(7, 10_000).unwrap(),
            polygonal_star_set(5, 10_000).unwrap(),
            polygonal_star_set(9, 10_000).unwrap(),
            pentagonal_hat_set(10_000).unwrap(),
            second_hexagonal_set(10_000).unwrap(),
            general_r_set(2, 4, 10_000).unwrap(),
            general_r_set(3, 5, 10_000).unwrap(),
            u_set(10_000).unwrap(),
            residue_set_sk(8, 10_000).unwrap(),
            rr_residue_set(10_000).unwrap(),
            primes_set(10_000).unwrap(),
        ];
        for set in &sets {
            let mut iter = set.members().iter().peekable();
            for v in 1..=10_000u64 {
                let in_list = iter.peek() == Some(&&v);
                if in_list {
                    iter.next();
                }
                assert_eq!(set.contains(v), in_list, "{} at {v}", set.name());
            }
        }
    }

    #[test]
    fn regeneration_is_prefix_stable() {
        let sets = vec![
            polygonal_set(5, 100).unwrap(),
            polygonal_star_set(7, 100).unwrap(),
            pentagonal_hat_set(100).unwrap(),
            u_set(100).unwrap(),
            general_r_set(1, 5, 100).unwrap(),
            residue_set_sk(6, 100).unwrap(),
        ];
        for set in &sets {
            let big = set.regenerate(1000).unwrap();
            let prefix = big.members_up_to(100);
            assert_eq!(set.members(), prefix, "{}", set.name());
        }
    }

    #[test]
    fn members_are_sorted_distinct_in_range() {
        for set in [
            polygonal_set(4, 777).unwrap(),
            polygonal_set(9, 777).unwrap(),
            u_set(777).unwrap(),
            pentagonal_hat_set(777).unwrap(),
        ] {
            let m = set.members();
            assert!(m.windows(2).all(|w| w[0] < w[1]));
            assert!(m.iter().all(|&v| (1..=777).contains(&v)));
        }
    }

    #[test]
    fn explicit_and_bound_checks() {
        let e = explicit_set("demo", &[9, 2, 2, 40], 10).unwrap();
        assert_eq!(e.members(), &[2, 9]);
        // membership answers from the defining list, which extends past the
        // materialization bound; regeneration picks 40 up
        assert!(e.contains(9) && e.contains(40) && !e.contains(3));
        assert_eq!(e.regenerate(100).unwrap().members(), &[2, 9, 40]);
        assert!(explicit_set("bad", &[0], 10).is_err());
        assert!(e.require_bound(10).is_ok());
        assert!(e.require_bound(11).is_err());
    }
}
