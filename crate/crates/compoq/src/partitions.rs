//! Partition-side counting: dynamic programming over restricted part sets,
//! plus small-range direct enumerations used as ground truth.
//!
//! - [`count_ps`] / [`count_ps_table`]: partitions with parts in a set
//! - [`count_pod`]: odd parts distinct, OEIS A006950
//! - [`count_overpartitions`]: overpartitions, OEIS A015128
//! - [`count_colored`]: c-colored partitions (c = 3 is OEIS A000716)
//! - [`count_rr`]: parts congruent to +-1 mod 5 (OEIS A003114), with the
//!   gap-of-two enumeration as a cross-check

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::partsets::{self, PartSet};
use crate::qgen;

/// p_S(n) for n = 0..=n_max: coin-style DP over the members of the set.
pub fn count_ps_table(set: &PartSet, n_max: u64) -> Result<Vec<BigInt>> {
    set.require_bound(n_max.max(1))?;
    let mut ways = vec![BigInt::zero(); n_max as usize + 1];
    ways[0] = BigInt::one();
    for &p in set.members_up_to(n_max) {
        let p = p as usize;
        for v in p..=n_max as usize {
            let add = ways[v - p].clone();
            ways[v] += add;
        }
    }
    Ok(ways)
}

/// Number of partitions of n with all parts in the set; p_S(0) = 1.
pub fn count_ps(set: &PartSet, n: u64) -> Result<BigInt> {
    Ok(count_ps_table(set, n)?.pop().expect("table is non-empty"))
}

/// Unrestricted partition numbers p(0)..p(n_max).
pub fn partition_table(n_max: u64) -> Vec<BigInt> {
    let set = partsets::naturals(n_max.max(1)).expect("bound >= 1");
    count_ps_table(&set, n_max).expect("bound matches")
}

/// pod(n) for n = 0..=n_max: even parts unrestricted, odd parts at most once.
pub fn count_pod_table(n_max: u64) -> Vec<BigInt> {
    let n_max = n_max as usize;
    let mut ways = vec![BigInt::zero(); n_max + 1];
    ways[0] = BigInt::one();
    for p in 1..=n_max {
        if p % 2 == 0 {
            for v in p..=n_max {
                let add = ways[v - p].clone();
                ways[v] += add;
            }
        } else {
            // 0/1 item: descend so each odd part is used at most once
            for v in (p..=n_max).rev() {
                let add = ways[v - p].clone();
                ways[v] += add;
            }
        }
    }
    ways
}

pub fn count_pod(n: u64) -> BigInt {
    count_pod_table(n).pop().expect("table is non-empty")
}

/// Odd-distinct partitions counted by filtering a full enumeration; the
/// slow cross-check for the DP.
pub fn count_pod_enumerated(n: u64) -> BigInt {
    let mut total = BigInt::zero();
    for_each_partition(n, |parts| {
        let mut ok = true;
        let mut i = 0;
        while i < parts.len() {
            let mut run = 1;
            while i + run < parts.len() && parts[i + run] == parts[i] {
                run += 1;
            }
            if parts[i] % 2 == 1 && run > 1 {
                ok = false;
                break;
            }
            i += run;
        }
        if ok {
            total += 1;
        }
    });
    total
}

/// Overpartition numbers via the generating function (-q;q)/(q;q).
pub fn overpartition_table(n_max: u64) -> Vec<BigInt> {
    let gf = qgen::named_gf(qgen::GfName::Overpartition, n_max as usize)
        .expect("overpartition gf is always defined");
    gf.coeffs().to_vec()
}

/// Overpartitions of n. Small n are counted by direct enumeration (each
/// partition contributes 2^(number of distinct part values), one factor of
/// two per choice of overlining the first occurrence); larger n fall back to
/// the series coefficient.
pub fn count_overpartitions(n: u64) -> BigInt {
    if n <= 30 {
        count_overpartitions_enumerated(n)
    } else {
        overpartition_table(n).pop().expect("table is non-empty")
    }
}

pub fn count_overpartitions_enumerated(n: u64) -> BigInt {
    let mut total = BigInt::zero();
    for_each_partition(n, |parts| {
        let mut distinct = 0u32;
        for (i, &p) in parts.iter().enumerate() {
            if i == 0 || parts[i - 1] != p {
                distinct += 1;
            }
        }
        total += BigInt::one() << distinct;
    });
    total
}

/// c-colored partitions of 0..=n_max: DP for 1/(q;q)_inf^c, one coin pass
/// per color per part value.
pub fn colored_table(n_max: u64, colors: u32) -> Vec<BigInt> {
    let n_max = n_max as usize;
    let mut ways = vec![BigInt::zero(); n_max + 1];
    ways[0] = BigInt::one();
    for _ in 0..colors {
        for p in 1..=n_max {
            for v in p..=n_max {
                let add = ways[v - p].clone();
                ways[v] += add;
            }
        }
    }
    ways
}

pub fn count_colored(n: u64, colors: u32) -> BigInt {
    colored_table(n, colors).pop().expect("table is non-empty")
}

/// Colored partitions by direct enumeration: each partition contributes the
/// number of ways to assign colors per part value, a multiset choice
/// C(m_v + colors - 1, colors - 1) for each value v.
pub fn count_colored_enumerated(n: u64, colors: u32) -> BigInt {
    let mut total = BigInt::zero();
    for_each_partition(n, |parts| {
        let mut ways = BigInt::one();
        let mut i = 0;
        while i < parts.len() {
            let mut run: u64 = 1;
            while i + (run as usize) < parts.len() && parts[i + run as usize] == parts[i] {
                run += 1;
            }
            ways *= binomial(run + colors as u64 - 1, colors as u64 - 1);
            i += run as usize;
        }
        total += ways;
    });
    total
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// rr(n) for n = 0..=n_max: partitions into parts congruent to +-1 mod 5.
pub fn rr_table(n_max: u64) -> Vec<BigInt> {
    let set = partsets::rr_residue_set(n_max.max(1)).expect("bound >= 1");
    count_ps_table(&set, n_max).expect("bound matches")
}

pub fn count_rr(n: u64) -> BigInt {
    rr_table(n).pop().expect("table is non-empty")
}

/// Partitions of n whose parts pairwise differ by at least 2, counted by
/// recursion on the smallest part. Equals `count_rr` (the two sides of the
/// first Rogers-Ramanujan identity).
pub fn count_rr_gap_condition(n: u64) -> BigInt {
    // memo[(remaining, min_part)] with min_part clamped to remaining + 1
    let n = n as usize;
    let mut memo = vec![vec![None::<BigInt>; n + 3]; n + 1];
    fn go(remaining: usize, min_part: usize, memo: &mut Vec<Vec<Option<BigInt>>>) -> BigInt {
        if remaining == 0 {
            return BigInt::one();
        }
        if min_part > remaining {
            return BigInt::zero();
        }
        if let Some(v) = &memo[remaining][min_part] {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for p in min_part..=remaining {
            total += go(remaining - p, p + 2, memo);
        }
        memo[remaining][min_part] = Some(total.clone());
        total
    }
    go(n, 1, &mut memo)
}

/// Visit every partition of n (parts weakly decreasing) once.
pub fn for_each_partition<F: FnMut(&[u64])>(n: u64, mut f: F) {
    let mut stack = Vec::new();
    fn go<F: FnMut(&[u64])>(remaining: u64, max_part: u64, stack: &mut Vec<u64>, f: &mut F) {
        if remaining == 0 {
            f(stack);
            return;
        }
        let mut p = max_part.min(remaining);
        while p >= 1 {
            stack.push(p);
            go(remaining - p, p, stack, f);
            stack.pop();
            p -= 1;
        }
    }
    go(n, n.max(1), &mut stack, &mut f);
}

/// Visit every partition of n with all parts in the set.
pub fn for_each_partition_in<F: FnMut(&[u64])>(set: &PartSet, n: u64, mut f: F) -> Result<()> {
    set.require_bound(n.max(1))?;
    fn go<F: FnMut(&[u64])>(
        members: &[u64],
        remaining: u64,
        max_idx: usize,
        stack: &mut Vec<u64>,
        f: &mut F,
    ) {
        if remaining == 0 {
            f(stack);
            return;
        }
        for i in (0..max_idx).rev() {
            if members[i] <= remaining {
                stack.push(members[i]);
                go(members, remaining - members[i], i + 1, stack, f);
                stack.pop();
            }
        }
    }
    let members = set.members_up_to(n);
    let mut stack = Vec::new();
    go(members, n, members.len(), &mut stack, &mut f);
    Ok(())
}
