//! Compositions (ordered sums) with parts restricted to a [`PartSet`], the
//! statistics attached to them, and the generic weighted composition sum.
//!
//! The weighted sum is the workhorse: every identity in [`crate::verify`]
//! instantiates it with a [`WeightRule`] built by [`stat_weight`]. Brute-force
//! enumeration (exponential) is kept as the oracle; [`weighted_sum_dp`] is the
//! fast path and uses the same recurrence as series reciprocation, indexed by
//! size instead of exponent.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partsets::{self, PartSet};
use crate::partitions;

/// An ordered finite sequence of positive integers (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Composition {
        assert!(parts.iter().all(|&p| p >= 1), "composition parts are positive");
        Composition { parts }
    }

    pub fn empty() -> Composition {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Size |c|: the sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Length l(c): the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity m_v(c): how many parts equal v.
    pub fn multiplicity(&self, v: u64) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// All multiplicities, keyed by part value.
    pub fn multiplicities(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Norm N(c): the product of the parts (empty product = 1).
    pub fn norm(&self) -> u128 {
        self.parts.iter().map(|&p| p as u128).product()
    }
}

/// Lazy lexicographic stream over the compositions of `n` with parts in a
/// fixed sorted alphabet.
pub struct Compositions<'a> {
    members: &'a [u64],
    parts: Vec<u64>,
    idxs: Vec<usize>,
    remaining: u64,
    state: IterState,
}

#[derive(PartialEq)]
enum IterState {
    Descend,
    Backtrack,
    Done,
}

impl<'a> Iterator for Compositions<'a> {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        loop {
            match self.state {
                IterState::Done => return None,
                IterState::Descend => {
                    if self.remaining == 0 {
                        self.state = IterState::Backtrack;
                        return Some(Composition { parts: self.parts.clone() });
                    }
                    if !self.members.is_empty() && self.members[0] <= self.remaining {
                        self.push_part(0);
                    } else {
                        self.state = IterState::Backtrack;
                    }
                }
                IterState::Backtrack => match self.idxs.pop() {
                    None => {
                        self.state = IterState::Done;
                        return None;
                    }
                    Some(i) => {
                        self.remaining += self.parts.pop().expect("stacks stay in sync");
                        let j = i + 1;
                        if j < self.members.len() && self.members[j] <= self.remaining {
                            self.push_part(j);
                            self.state = IterState::Descend;
                        }
                    }
                },
            }
        }
    }
}

impl<'a> Compositions<'a> {
    fn push_part(&mut self, idx: usize) {
        self.idxs.push(idx);
        self.parts.push(self.members[idx]);
        self.remaining -= self.members[idx];
    }
}

/// Every composition of `n` with all parts in `set`, each exactly once, in
/// lexicographic order of the part sequence. For n = 0 the stream holds
/// exactly the empty composition.
pub fn compositions<'a>(set: &'a PartSet, n: u64) -> Result<Compositions<'a>> {
    set.require_bound(n.max(1))?;
    Ok(Compositions {
        members: set.members_up_to(n),
        parts: Vec::new(),
        idxs: Vec::new(),
        remaining: n,
        state: IterState::Descend,
    })
}

/// A multiplicative weight on parts: the weight of a composition is the
/// product of the weights of its parts (empty composition has weight 1).
/// Parts missing from the explicit map fall back to the default weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRule {
    weights: BTreeMap<u64, BigInt>,
    default_weight: BigInt,
}

impl WeightRule {
    /// Every part carries the same weight.
    pub fn uniform(w: impl Into<BigInt>) -> WeightRule {
        WeightRule { weights: BTreeMap::new(), default_weight: w.into() }
    }

    pub fn from_parts<I, W>(pairs: I, default_weight: W) -> WeightRule
    where
        I: IntoIterator<Item = (u64, BigInt)>,
        W: Into<BigInt>,
    {
        WeightRule {
            weights: pairs.into_iter().collect(),
            default_weight: default_weight.into(),
        }
    }

    pub fn weight(&self, part: u64) -> &BigInt {
        self.weights.get(&part).unwrap_or(&self.default_weight)
    }

    pub fn composition_weight(&self, parts: &[u64]) -> BigInt {
        let mut w = BigInt::one();
        for &p in parts {
            w *= self.weight(p);
        }
        w
    }
}

/// The named per-part weight patterns used by the identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatKind {
    /// (-1)^length: every part weighs -1.
    Length,
    /// z^length: every part weighs z.
    Scaled(i64),
    /// (-1)^(number of parts in P*_k); other k-gonal parts weigh +1.
    StarLength(u64),
    /// (-1)^(number of parts in Phat); other pentagonal parts weigh +1.
    HatLength,
    /// Triangular part j(j+1)/2 weighs (-1)^(j+1) (2j+1): 3, -5, 7, -9, ...
    P3,
    /// Pentagonal part j(3j-1)/2 weighs 6j-1 over signed j: 5, -7, 11, -13, ...
    R,
    /// Part j(3j+2) in U weighs -(1+3j) over signed j: 2, -4, 5, -7, ...
    S,
}

/// Materialize the weight rule for a named statistic, covering parts up to
/// `bound`.
pub fn stat_weight(kind: StatKind, bound: u64) -> Result<WeightRule> {
    match kind {
        StatKind::Length => Ok(WeightRule::uniform(-1)),
        StatKind::Scaled(z) => Ok(WeightRule::uniform(z)),
        StatKind::StarLength(k) => {
            let star = partsets::polygonal_star_set(k, bound)?;
            Ok(WeightRule::from_parts(
                star.members().iter().map(|&v| (v, BigInt::from(-1))),
                1,
            ))
        }
        StatKind::HatLength => {
            let hat = partsets::pentagonal_hat_set(bound)?;
            Ok(WeightRule::from_parts(
                hat.members().iter().map(|&v| (v, BigInt::from(-1))),
                1,
            ))
        }
        StatKind::P3 => {
            let mut pairs = Vec::new();
            let mut j: i64 = 1;
            loop {
                let t = j * (j + 1) / 2;
                if t > bound as i64 {
                    break;
                }
                let w = if j % 2 == 1 { 2 * j + 1 } else { -(2 * j + 1) };
                pairs.push((t as u64, BigInt::from(w)));
                j += 1;
            }
            Ok(WeightRule::from_parts(pairs, 0))
        }
        StatKind::R => {
            let mut pairs = Vec::new();
            for dir in [1i64, -1] {
                let mut j = dir;
                loop {
                    let v = j * (3 * j - 1) / 2;
                    if v > bound as i64 {
                        break;
                    }
                    if v >= 1 {
                        pairs.push((v as u64, BigInt::from(6 * j - 1)));
                    }
                    j += dir;
                }
            }
            Ok(WeightRule::from_parts(pairs, 0))
        }
        StatKind::S => {
            let mut pairs = Vec::new();
            for dir in [1i64, -1] {
                let mut j = dir;
                loop {
                    let v = j * (3 * j + 2);
                    if v > bound as i64 {
                        break;
                    }
                    if v >= 1 {
                        pairs.push((v as u64, BigInt::from(-1 - 3 * j)));
                    }
                    j += dir;
                }
            }
            Ok(WeightRule::from_parts(pairs, 0))
        }
    }
}

/// Brute-force weighted composition sum: enumerates every composition of `n`
/// with parts in `set` and sums the products of part weights. Exponential in
/// n; this is the oracle, not the fast path.
pub fn weighted_sum(set: &PartSet, rule: &WeightRule, n: u64) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for c in compositions(set, n)? {
        total += rule.composition_weight(c.parts());
    }
    Ok(total)
}

/// Fast path: d_0 = 1, d_m = sum over parts p <= m of w(p) d_{m-p}. This is
/// the series-reciprocal recurrence indexed by composition size; it equals
/// the brute-force sum for every m.
pub fn weighted_sum_dp(set: &PartSet, rule: &WeightRule, n_max: u64) -> Result<Vec<BigInt>> {
    set.require_bound(n_max.max(1))?;
    let members = set.members_up_to(n_max);
    let weights: Vec<BigInt> = members.iter().map(|&p| rule.weight(p).clone()).collect();
    let mut d = vec![BigInt::zero(); n_max as usize + 1];
    d[0] = BigInt::one();
    for m in 1..=n_max as usize {
        let mut acc = BigInt::zero();
        for (&p, w) in members.iter().zip(&weights) {
            let p = p as usize;
            if p > m {
                break;
            }
            if !w.is_zero() {
                acc += w * &d[m - p];
            }
        }
        d[m] = acc;
    }
    Ok(d)
}

/// Number of distinct rearrangements of the parts: l(c)! / prod m_v(c)!.
pub fn multinomial_count(c: &Composition) -> BigInt {
    let mut num = factorial(c.len() as u64);
    for (_, m) in c.multiplicities() {
        num /= factorial(m as u64);
    }
    num
}

pub fn factorial(n: u64) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= i;
    }
    f
}

/// Check the symmetric-function transfer between partition sums and
/// composition sums, truncated by size.
///
/// For g(lambda) = prod of per-part weights, the transfer weights each
/// composition c with the same part multiset as lambda by
/// g(lambda) * (prod_v m_v!) / l!. Both sides are summed over sizes 0..=bound
/// and scaled by the common factor bound! so the comparison stays in exact
/// integers; returns whether they agree.
pub fn symm_transfer_check(rule: &WeightRule, bound: u64) -> Result<bool> {
    let scale = factorial(bound);
    let mut partition_side = BigInt::zero();
    for n in 0..=bound {
        partitions::for_each_partition(n, |parts| {
            partition_side += rule.composition_weight(parts) * &scale;
        });
    }

    let alphabet = partsets::naturals(bound.max(1))?;
    let mut composition_side = BigInt::zero();
    for n in 0..=bound {
        for c in compositions(&alphabet, n)? {
            let mut term = rule.composition_weight(c.parts()) * &scale;
            for (_, m) in c.multiplicities() {
                term *= factorial(m as u64);
            }
            term /= factorial(c.len() as u64);
            composition_side += term;
        }
    }
    Ok(partition_side == composition_side)
}

/// Lazy stream over ordered factorizations of `n`: sequences of integers
/// >= 2 whose product is n, in lexicographic order. n = 1 yields exactly the
/// > empty factorization. Counts are OEIS A074206.
pub struct OrderedFactorizations<'a> {
    parts: Vec<u64>,
    quotient: u64,
    state: IterState,
    set: Option<&'a PartSet>,
}

impl<'a> OrderedFactorizations<'a> {
    fn admissible(&self, d: u64) -> bool {
        match self.set {
            Some(s) => s.contains(d),
            None => true,
        }
    }

    /// Smallest admissible divisor of `quotient` that is > `from` (and >= 2).
    fn next_divisor(&self, from: u64) -> Option<u64> {
        let mut d = from.max(1) + 1;
        while d <= self.quotient {
            if self.quotient.is_multiple_of(d) && self.admissible(d) {
                return Some(d);
            }
            d += 1;
        }
        None
    }
}

impl<'a> Iterator for OrderedFactorizations<'a> {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        loop {
            match self.state {
                IterState::Done => return None,
                IterState::Descend => {
                    if self.quotient == 1 {
                        self.state = IterState::Backtrack;
                        return Some(Composition { parts: self.parts.clone() });
                    }
                    match self.next_divisor(1) {
                        Some(d) => {
                            self.parts.push(d);
                            self.quotient /= d;
                        }
                        None => self.state = IterState::Backtrack,
                    }
                }
                IterState::Backtrack => match self.parts.pop() {
                    None => {
                        self.state = IterState::Done;
                        return None;
                    }
                    Some(d) => {
                        self.quotient *= d;
                        if let Some(d2) = self.next_divisor(d) {
                            self.parts.push(d2);
                            self.quotient /= d2;
                            self.state = IterState::Descend;
                        }
                    }
                },
            }
        }
    }
}

/// Ordered factorizations of n into factors >= 2.
pub fn ordered_factorizations(n: u64) -> Result<OrderedFactorizations<'static>> {
    if n < 1 {
        return Err(Error::InvalidParameter("norm must be >= 1".into()));
    }
    Ok(OrderedFactorizations { parts: Vec::new(), quotient: n, state: IterState::Descend, set: None })
}

/// Ordered factorizations of n with every factor in `set` (factors are
/// >= 2 regardless; a set containing 1 would make the stream infinite).
pub fn ordered_factorizations_in<'a>(set: &'a PartSet, n: u64) -> Result<OrderedFactorizations<'a>> {
    if n < 1 {
        return Err(Error::InvalidParameter("norm must be >= 1".into()));
    }
    if set.contains(1) {
        return Err(Error::Divergent("unbounded 1-multiplicity: the part 1 preserves the norm".into()));
    }
    Ok(OrderedFactorizations { parts: Vec::new(), quotient: n, state: IterState::Descend, set: Some(set) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partsets::{naturals, polygonal_set};

    fn collect(set: &PartSet, n: u64) -> Vec<Vec<u64>> {
        compositions(set, n).unwrap().map(|c| c.parts().to_vec()).collect()
    }

    #[test]
    fn counts_are_two_to_n_minus_one() {
        let set = naturals(16).unwrap();
        for n in 1..=16u64 {
            let count = compositions(&set, n).unwrap().count();
            assert_eq!(count as u64, 1 << (n - 1), "n={n}");
        }
    }

    #[test]
    fn triangular_compositions_of_four() {
        let p3 = polygonal_set(3, 4).unwrap();
        assert_eq!(collect(&p3, 4), vec![vec![1, 1, 1, 1], vec![1, 3], vec![3, 1]]);
    }

    #[test]
    fn empty_composition_for_zero() {
        let set = naturals(5).unwrap();
        let all = collect(&set, 0);
        assert_eq!(all, vec![Vec::<u64>::new()]);
    }

    #[test]
    fn lexicographic_order() {
        let set = naturals(6).unwrap();
        let all = collect(&set, 6);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all.len(), 32);
    }

    #[test]
    fn bound_too_small_errors() {
        let set = naturals(3).unwrap();
        assert!(compositions(&set, 4).is_err());
    }

    #[test]
    fn statistics() {
        let c = Composition::new(vec![1, 3, 1]);
        assert_eq!(c.size(), 5);
        assert_eq!(c.len(), 3);
        assert_eq!(c.multiplicity(1), 2);
        assert_eq!(c.norm(), 3);
        assert_eq!(Composition::empty().norm(), 1);
        assert_eq!(Composition::empty().size(), 0);
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial_count(&Composition::new(vec![1, 3, 1])), BigInt::from(3));
        assert_eq!(multinomial_count(&Composition::empty()), BigInt::from(1));
        assert_eq!(multinomial_count(&Composition::new(vec![2, 2, 2])), BigInt::from(1));
    }

    #[test]
    fn partition_classes_have_multinomial_size() {
        // Group the compositions of n by part multiset; each class holds
        // exactly multinomial_count members.
        let set = naturals(9).unwrap();
        for n in [5u64, 8] {
            let mut classes: BTreeMap<Vec<u64>, (u64, BigInt)> = BTreeMap::new();
            for c in compositions(&set, n).unwrap() {
                let mut key = c.parts().to_vec();
                key.sort_unstable();
                let m = multinomial_count(&c);
                let e = classes.entry(key).or_insert((0, m.clone()));
                e.0 += 1;
                assert_eq!(e.1, m);
            }
            for (key, (count, m)) in classes {
                assert_eq!(BigInt::from(count), m, "class {key:?}");
            }
        }
    }

    #[test]
    fn weighted_sum_examples() {
        let p3 = polygonal_set(3, 4).unwrap();
        let minus_one = stat_weight(StatKind::Length, 4).unwrap();
        assert_eq!(weighted_sum(&p3, &minus_one, 4).unwrap(), BigInt::from(3));

        let p4 = polygonal_set(4, 2).unwrap();
        let minus_two = stat_weight(StatKind::Scaled(-2), 2).unwrap();
        assert_eq!(weighted_sum(&p4, &minus_two, 2).unwrap(), BigInt::from(4));

        let any = naturals(3).unwrap();
        assert_eq!(weighted_sum(&any, &minus_one, 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn stat_weight_tables() {
        let p3 = stat_weight(StatKind::P3, 20).unwrap();
        assert_eq!(p3.weight(1), &BigInt::from(3));
        assert_eq!(p3.weight(3), &BigInt::from(-5));
        assert_eq!(p3.weight(6), &BigInt::from(7));
        assert_eq!(p3.weight(10), &BigInt::from(-9));
        assert_eq!(p3.weight(15), &BigInt::from(11));

        let r = stat_weight(StatKind::R, 20).unwrap();
        assert_eq!(r.weight(1), &BigInt::from(5));
        assert_eq!(r.weight(2), &BigInt::from(-7));
        assert_eq!(r.weight(5), &BigInt::from(11));
        assert_eq!(r.weight(7), &BigInt::from(-13));
        assert_eq!(r.weight(12), &BigInt::from(17));
        assert_eq!(r.weight(15), &BigInt::from(-19));

        let s = stat_weight(StatKind::S, 40).unwrap();
        assert_eq!(s.weight(1), &BigInt::from(2));
        assert_eq!(s.weight(5), &BigInt::from(-4));
        assert_eq!(s.weight(8), &BigInt::from(5));
        assert_eq!(s.weight(16), &BigInt::from(-7));
        assert_eq!(s.weight(21), &BigInt::from(8));
        assert_eq!(s.weight(33), &BigInt::from(-10));
    }

    #[test]
    fn dp_equals_brute_force() {
        let p3 = polygonal_set(3, 18).unwrap();
        let rule = stat_weight(StatKind::Length, 18).unwrap();
        let dp = weighted_sum_dp(&p3, &rule, 18).unwrap();
        for n in 0..=18u64 {
            assert_eq!(dp[n as usize], weighted_sum(&p3, &rule, n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn ordered_factorization_examples() {
        let of = |n: u64| -> Vec<Vec<u64>> {
            ordered_factorizations(n).unwrap().map(|c| c.parts().to_vec()).collect()
        };
        assert_eq!(of(6), vec![vec![2, 3], vec![3, 2], vec![6]]);
        assert_eq!(of(1), vec![Vec::<u64>::new()]);
        assert_eq!(of(4), vec![vec![2, 2], vec![4]]);
        assert_eq!(of(12).len(), 8);
    }

    #[test]
    fn ordered_factorizations_reject_part_one() {
        let bad = naturals(10).unwrap();
        assert!(ordered_factorizations_in(&bad, 10).is_err());
    }

    #[test]
    fn all_plus_counts_match_reciprocal() {
        // 1 / (1 - sum over triangular t of q^t) counts the compositions
        // into triangular parts.
        use crate::powerseries::TruncatedSeries;
        let n_max = 15u64;
        let p3 = polygonal_set(3, n_max).unwrap();
        let mut phi = TruncatedSeries::one(n_max as usize);
        for &t in p3.members() {
            phi.set_coeff(t as usize, BigInt::from(-1));
        }
        let recip = phi.recip().unwrap();
        for n in 0..=n_max {
            let count = compositions(&p3, n).unwrap().count();
            assert_eq!(recip.coeff(n as usize), &BigInt::from(count), "n={n}");
        }
    }

    #[test]
    fn transfer_check_configs() {
        // all-ones weights: both sides total the partition numbers
        assert!(symm_transfer_check(&WeightRule::uniform(1), 6).unwrap());
        // support only on part 1: both sides reduce to the all-ones partitions
        let only_one = WeightRule::from_parts([(1u64, BigInt::one())], 0);
        assert!(symm_transfer_check(&only_one, 5).unwrap());
        assert!(symm_transfer_check(&WeightRule::uniform(1), 0).unwrap());
    }
}
