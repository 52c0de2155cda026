//! Machine-checkable verification of every identity in scope: each identity
//! is evaluated along several independent computation paths (partition-side
//! DP, product-side series, reciprocal series, composition-side DP, and
//! brute-force enumeration on a short prefix) and a cell passes only when
//! all paths agree exactly.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::compositions::{self, stat_weight, StatKind, WeightRule};
use crate::error::{Error, Result};
use crate::partitions;
use crate::partsets;
use crate::powerseries::{product_expand, PochhammerFactor, ProductSpec};
use crate::qgen::{self, GfName, ThetaSpec};

/// Which composition-side oracle(s) to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// Brute-force enumeration only (capped at `brute_n_max`).
    Brute,
    /// Dynamic programming only.
    Dp,
    /// Both, cross-checked on the overlap.
    Both,
}

/// Range and oracle settings for a verification run.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Largest n checked; None = the identity's default range.
    pub n_max: Option<u64>,
    /// Largest n on which the exponential brute-force path participates.
    pub brute_n_max: u64,
    pub oracle: OracleMode,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n_max: None, brute_n_max: 25, oracle: OracleMode::Both }
    }
}

impl VerifyConfig {
    fn use_dp(&self) -> bool {
        matches!(self.oracle, OracleMode::Dp | OracleMode::Both)
    }

    fn brute_limit(&self, n_max: u64) -> Option<u64> {
        match self.oracle {
            OracleMode::Dp => None,
            _ => Some(self.brute_n_max.min(n_max)),
        }
    }
}

/// The identities the verifier knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityId {
    /// Partitions into S_k vs (-1)^n-signed compositions into k-gonal parts,
    /// k even.
    EvenK(u64),
    /// The odd-k variant with the starred length statistic.
    OddK(u64),
    /// Odd-parts-distinct partitions vs compositions into triangular parts.
    Pod,
    /// Overpartitions vs (-2)^length compositions into squares.
    Overpartition,
    /// p(n) as hat-signed compositions into pentagonal parts (no (-1)^n).
    Pofn2,
    /// The two-parameter generalization over R*/T sets.
    GeneralAB(u64, u64),
    /// Three-colored partitions vs weighted compositions into triangular
    /// parts.
    P3,
    /// Three-colored overpartition variant r(n) over pentagonal parts.
    R,
    /// Overpartition variant s(n) over the set U.
    S,
    /// Rogers-Ramanujan counts via the Cauchy product with the theta factor.
    Rr,
}

impl IdentityId {
    pub fn label(&self) -> String {
        match self {
            IdentityId::EvenK(k) => format!("even-k({k})"),
            IdentityId::OddK(k) => format!("odd-k({k})"),
            IdentityId::Pod => "pod".into(),
            IdentityId::Overpartition => "overpartition".into(),
            IdentityId::Pofn2 => "pofn2".into(),
            IdentityId::GeneralAB(a, b) => format!("general-ab({a},{b})"),
            IdentityId::P3 => "p3".into(),
            IdentityId::R => "r".into(),
            IdentityId::S => "s".into(),
            IdentityId::Rr => "rr".into(),
        }
    }

    /// Default check range: the DP paths are cheap, the constraining factor
    /// is how fast the composition weights grow.
    pub fn default_n_max(&self) -> u64 {
        match self {
            IdentityId::P3 | IdentityId::R | IdentityId::S => 40,
            IdentityId::GeneralAB(..) => 30,
            _ => 60,
        }
    }
}

/// One checked value of n with the values computed along each path.
#[derive(Clone, Debug)]
pub struct CellReport {
    pub n: u64,
    pub values: Vec<(String, BigInt)>,
    pub pass: bool,
}

/// A full verification report for one identity instance.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub params: Vec<(String, u64)>,
    pub n_max: u64,
    pub cells: Vec<CellReport>,
    pub pass: bool,
}

impl IdentityReport {
    pub fn failures(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.pass)
    }
}

type Path = (String, Vec<Option<BigInt>>);

fn dense(name: &str, values: Vec<BigInt>) -> Path {
    (name.into(), values.into_iter().map(Some).collect())
}

fn limited(name: &str, values: Vec<BigInt>, n_max: u64) -> Path {
    let mut out: Vec<Option<BigInt>> = values.into_iter().map(Some).collect();
    out.resize(n_max as usize + 1, None);
    (name.into(), out)
}

/// Apply the (-1)^n sign that converts reciprocal-series coefficients into
/// partition counts.
fn alternating(values: Vec<BigInt>) -> Vec<BigInt> {
    values
        .into_iter()
        .enumerate()
        .map(|(n, v)| if n % 2 == 1 { -v } else { v })
        .collect()
}

fn assemble(
    id: &IdentityId,
    params: Vec<(String, u64)>,
    n_max: u64,
    paths: Vec<Path>,
) -> IdentityReport {
    let mut cells = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max as usize {
        let values: Vec<(String, BigInt)> = paths
            .iter()
            .filter_map(|(name, vals)| vals[n].clone().map(|v| (name.clone(), v)))
            .collect();
        let pass = values.windows(2).all(|w| w[0].1 == w[1].1);
        cells.push(CellReport { n: n as u64, values, pass });
    }
    let pass = cells.iter().all(|c| c.pass);
    IdentityReport { id: id.label(), params, n_max, cells, pass }
}

fn brute_path(
    name: &str,
    set: &partsets::PartSet,
    rule: &WeightRule,
    limit: Option<u64>,
    n_max: u64,
    signed: bool,
) -> Result<Option<Path>> {
    let Some(limit) = limit else { return Ok(None) };
    let mut vals = Vec::with_capacity(limit as usize + 1);
    for n in 0..=limit {
        vals.push(compositions::weighted_sum(set, rule, n)?);
    }
    if signed {
        vals = alternating(vals);
    }
    Ok(Some(limited(name, vals, n_max)))
}

/// The even-k identity: p_{S_k}(n) = (-1)^n sum over compositions into
/// k-gonal parts of (-1)^length, for even k >= 6.
pub fn verify_even_k(k: u64, cfg: &VerifyConfig) -> Result<IdentityReport> {
    if k < 6 || k % 2 == 1 {
        return Err(Error::InvalidParameter(format!("even-k requires even k >= 6, got {k}")));
    }
    let id = IdentityId::EvenK(k);
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let sk = partsets::residue_set_sk(k, n_max.max(1))?;
    let pk = partsets::polygonal_set(k, n_max.max(1))?;
    let rule = stat_weight(StatKind::Length, n_max)?;

    let mut paths = vec![
        dense("partition_dp", partitions::count_ps_table(&sk, n_max)?),
        dense("product_gf", qgen::named_gf(GfName::PSk(k), order)?.coeffs().to_vec()),
        dense(
            "series_recip",
            alternating(qgen::theta_sum(&ThetaSpec::gonal_plus(k)?, order).recip()?.coeffs().to_vec()),
        ),
    ];
    if cfg.use_dp() {
        paths.push(dense(
            "composition_dp",
            alternating(compositions::weighted_sum_dp(&pk, &rule, n_max)?),
        ));
    }
    if let Some(p) = brute_path("composition_brute", &pk, &rule, cfg.brute_limit(n_max), n_max, true)? {
        paths.push(p);
    }
    Ok(assemble(&id, vec![("k".into(), k)], n_max, paths))
}

/// The odd-k identity: same shape with the starred length statistic,
/// for odd k >= 5.
/// At k = 5 the set S_5 is all of N, so the unrestricted partition numbers
/// join as one more path.
pub fn verify_odd_k(k: u64, cfg: &VerifyConfig) -> Result<IdentityReport> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("odd-k requires odd k >= 5, got {k}")));
    }
    let id = IdentityId::OddK(k);
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let sk = partsets::residue_set_sk(k, n_max.max(1))?;
    let pk = partsets::polygonal_set(k, n_max.max(1))?;
    let rule = stat_weight(StatKind::StarLength(k), n_max)?;

    let mut paths = vec![
        dense("partition_dp", partitions::count_ps_table(&sk, n_max)?),
        dense("product_gf", qgen::named_gf(GfName::PSk(k), order)?.coeffs().to_vec()),
        dense(
            "series_recip",
            alternating(qgen::theta_sum(&ThetaSpec::gonal_mixed(k)?, order).recip()?.coeffs().to_vec()),
        ),
    ];
    if k == 5 {
        paths.push(dense("unrestricted_p", partitions::partition_table(n_max)));
    }
    if cfg.use_dp() {
        paths.push(dense(
            "composition_dp",
            alternating(compositions::weighted_sum_dp(&pk, &rule, n_max)?),
        ));
    }
    if let Some(p) = brute_path("composition_brute", &pk, &rule, cfg.brute_limit(n_max), n_max, true)? {
        paths.push(p);
    }
    Ok(assemble(&id, vec![("k".into(), k)], n_max, paths))
}

/// pod(n) = (-1)^n sum over compositions into triangular parts of
/// (-1)^length.
pub fn verify_pod(cfg: &VerifyConfig) -> Result<IdentityReport> {
    let id = IdentityId::Pod;
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let p3 = partsets::polygonal_set(3, n_max.max(1))?;
    let rule = stat_weight(StatKind::Length, n_max)?;

    let mut paths = vec![
        dense("pod_dp", partitions::count_pod_table(n_max)),
        dense("product_gf", qgen::named_gf(GfName::Pod, order)?.coeffs().to_vec()),
    ];
    let enum_limit = n_max.min(30);
    let enumerated: Vec<BigInt> = (0..=enum_limit).map(partitions::count_pod_enumerated).collect();
    paths.push(limited("enumeration", enumerated, n_max));
    if cfg.use_dp() {
        paths.push(dense(
            "composition_dp",
            alternating(compositions::weighted_sum_dp(&p3, &rule, n_max)?),
        ));
    }
    if let Some(p) = brute_path("composition_brute", &p3, &rule, cfg.brute_limit(n_max), n_max, true)? {
        paths.push(p);
    }
    Ok(assemble(&id, vec![], n_max, paths))
}

/// Overpartitions: p-bar(n) = (-1)^n sum over compositions into squares of
/// (-2)^length.
pub fn verify_overpartition(cfg: &VerifyConfig) -> Result<IdentityReport> {
    let id = IdentityId::Overpartition;
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let p4 = partsets::polygonal_set(4, n_max.max(1))?;
    let rule = stat_weight(StatKind::Scaled(-2), n_max)?;

    let mut paths = vec![
        dense("product_gf", partitions::overpartition_table(n_max)),
        dense(
            "series_recip",
            alternating(qgen::theta_sum(&ThetaSpec::phi(), order).recip()?.coeffs().to_vec()),
        ),
    ];
    let enum_limit = n_max.min(30);
    let enumerated: Vec<BigInt> =
        (0..=enum_limit).map(partitions::count_overpartitions_enumerated).collect();
    paths.push(limited("enumeration", enumerated, n_max));
    if cfg.use_dp() {
        paths.push(dense(
            "composition_dp",
            alternating(compositions::weighted_sum_dp(&p4, &rule, n_max)?),
        ));
    }
    if let Some(p) = brute_path("composition_brute", &p4, &rule, cfg.brute_limit(n_max), n_max, true)? {
        paths.push(p);
    }
    Ok(assemble(&id, vec![], n_max, paths))
}

/// p(n) as a hat-signed composition sum over pentagonal parts, with no
/// (-1)^n factor: the reciprocal of the Euler product.
pub fn verify_pofn2(cfg: &VerifyConfig) -> Result<IdentityReport> {
    let id = IdentityId::Pofn2;
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let p5 = partsets::polygonal_set(5, n_max.max(1))?;
    let rule = stat_weight(StatKind::HatLength, n_max)?;

    let mut paths = vec![
        dense("partition_dp", partitions::partition_table(n_max)),
        dense(
            "series_recip",
            qgen::theta_sum(&ThetaSpec::euler(), order).recip()?.coeffs().to_vec(),
        ),
    ];
    if cfg.use_dp() {
        paths.push(dense("composition_dp", compositions::weighted_sum_dp(&p5, &rule, n_max)?));
    }
    if let Some(p) = brute_path("composition_brute", &p5, &rule, cfg.brute_limit(n_max), n_max, false)? {
        paths.push(p);
    }
    Ok(assemble(&id, vec![], n_max, paths))
}

/// Weight rule for the signed-index form of the general identity: the part
/// produced by theta index j weighs (-1)^(j+1), so parts from even indices
/// carry -1. This is the rule the reciprocal of f(-q^a, -q^b) induces
/// directly, for either parity of alpha and beta.
fn general_signed_index_rule(alpha: u64, beta: u64, bound: u64) -> Result<WeightRule> {
    let indexed = partsets::general_r_indexed(alpha, beta, bound)?;
    Ok(WeightRule::from_parts(
        indexed.into_iter().map(|(j, v)| {
            let w = if j.rem_euclid(2) == 0 { -1 } else { 1 };
            (v, BigInt::from(w))
        }),
        0,
    ))
}

/// The two-parameter identity: p_{T_{a,b}}(n) as a weighted composition sum
/// over R*_{a,b}.
///
/// For odd alpha, beta the printed form (-1)^n sum (-1)^length holds and is
/// checked alongside. For even alpha, beta that form fails (the q -> -q
/// substitution fixes f(-q^a, -q^b) instead of removing its signs), so the
/// check uses the signed-index rule, which is exact for every parity.
pub fn verify_general_ab(alpha: u64, beta: u64, cfg: &VerifyConfig) -> Result<IdentityReport> {
    let id = IdentityId::GeneralAB(alpha, beta);
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let t_set = partsets::general_t_set(alpha, beta, n_max.max(1))?;
    let r_set = partsets::general_r_set(alpha, beta, n_max.max(1))?;
    let step = alpha + beta;
    let product = ProductSpec::new()
        .factor(PochhammerFactor::new(1, alpha, step), -1)
        .factor(PochhammerFactor::new(1, beta, step), -1)
        .factor(PochhammerFactor::new(1, step, step), -1);
    let signed_rule = general_signed_index_rule(alpha, beta, n_max)?;
    let odd_parity = alpha % 2 == 1;

    let mut paths = vec![
        dense("partition_dp", partitions::count_ps_table(&t_set, n_max)?),
        dense("product_gf", product_expand(&product, order)?.coeffs().to_vec()),
        dense(
            "series_recip",
            qgen::theta_sum(&ThetaSpec::new(-1, alpha, -1, beta)?, order).recip()?.coeffs().to_vec(),
        ),
    ];
    if cfg.use_dp() {
        paths.push(dense(
            "composition_dp_signed_index",
            compositions::weighted_sum_dp(&r_set, &signed_rule, n_max)?,
        ));
        if odd_parity {
            let length_rule = stat_weight(StatKind::Length, n_max)?;
            paths.push(dense(
                "composition_dp_length",
                alternating(compositions::weighted_sum_dp(&r_set, &length_rule, n_max)?),
            ));
        }
    }
    if let Some(p) =
        brute_path("composition_brute", &r_set, &signed_rule, cfg.brute_limit(n_max), n_max, false)?
    {
        paths.push(p);
    }
    Ok(assemble(&id, vec![("alpha".into(), alpha), ("beta".into(), beta)], n_max, paths))
}

/// Three-colored partitions: p3(n) as compositions into triangular parts
/// with weights 3, -5, 7, -9, ... (no sign factor).
pub fn verify_p3(cfg: &VerifyConfig) -> Result<IdentityReport> {
    let id = IdentityId::P3;
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let p3_set = partsets::polygonal_set(3, n_max.max(1))?;
    let rule = stat_weight(StatKind::P3, n_max)?;

    let mut paths = vec![
        dense("colored_dp", partitions::colored_table(n_max, 3)),
        dense("product_gf", qgen::named_gf(GfName::P3, order)?.coeffs().to_vec()),
        dense("series_recip", qgen::jacobi_cube(order).recip()?.coeffs().to_vec()),
    ];
    let enum_limit = n_max.min(15);
    let enumerated: Vec<BigInt> =
        (0..=enum_limit).map(|n| partitions::count_colored_enumerated(n, 3)).collect();
    paths.push(limited("enumeration", enumerated, n_max));
    if cfg.use_dp() {
        paths.push(dense("composition_dp", compositions::weighted_sum_dp(&p3_set, &rule, n_max)?));
    }
    if let Some(p) = brute_path("composition_brute", &p3_set, &rule, cfg.brute_limit(n_max), n_max, false)? {
        paths.push(p);
    }
    Ok(assemble(&id, vec![], n_max, paths))
}

fn convolve3(a: &[BigInt], b: &[BigInt], c: &[BigInt], n_max: u64) -> Vec<BigInt> {
    let n_max = n_max as usize;
    let mut out = vec![BigInt::zero(); n_max + 1];
    for i in 0..=n_max.min(a.len() - 1) {
        for j in 0..=(n_max - i).min(b.len() - 1) {
            let ab = &a[i] * &b[j];
            if ab.is_zero() {
                continue;
            }
            for k in 0..=(n_max - i - j).min(c.len() - 1) {
                out[i + j + k] += &ab * &c[k];
            }
        }
    }
    out
}

/// r(n): three-colored overpartitions with no overlined third color, as
/// compositions into pentagonal parts with weights 5, -7, 11, -13, ...
pub fn verify_r(cfg: &VerifyConfig) -> Result<IdentityReport> {
    let id = IdentityId::R;
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let p5 = partsets::polygonal_set(5, n_max.max(1))?;
    let rule = stat_weight(StatKind::R, n_max)?;

    let mut paths = vec![
        dense("product_gf", qgen::named_gf(GfName::R, order)?.coeffs().to_vec()),
        dense("series_recip", qgen::pentagonal_weighted_series(order).recip()?.coeffs().to_vec()),
    ];
    // decorated convolution: overpartition x overpartition x partition,
    // all three factors from direct enumeration
    let enum_limit = n_max.min(15);
    let op: Vec<BigInt> =
        (0..=enum_limit).map(partitions::count_overpartitions_enumerated).collect();
    let p: Vec<BigInt> = partitions::partition_table(enum_limit);
    let conv = convolve3(&op, &op, &p, enum_limit);
    paths.push(limited("enumeration_convolution", conv, n_max));
    if cfg.use_dp() {
        paths.push(dense("composition_dp", compositions::weighted_sum_dp(&p5, &rule, n_max)?));
    }
    if let Some(p) = brute_path("composition_brute", &p5, &rule, cfg.brute_limit(n_max), n_max, false)? {
        paths.push(p);
    }
    Ok(assemble(&id, vec![], n_max, paths))
}

/// s(n): the second overpartition variant, as compositions into the set U
/// with weights 2, -4, 5, -7, ...
pub fn verify_s(cfg: &VerifyConfig) -> Result<IdentityReport> {
    let id = IdentityId::S;
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let u = partsets::u_set(n_max.max(1))?;
    let rule = stat_weight(StatKind::S, n_max)?;

    let mut paths = vec![
        dense("product_gf", qgen::named_gf(GfName::S, order)?.coeffs().to_vec()),
        dense("series_recip", qgen::u_weighted_series(order).recip()?.coeffs().to_vec()),
    ];
    // overpartitions x two colors of parts divisible by 4
    let enum_limit = n_max.min(15);
    let op: Vec<BigInt> =
        (0..=enum_limit).map(partitions::count_overpartitions_enumerated).collect();
    let mult4 = partsets::multiples_set(4, enum_limit.max(1))?;
    let p4 = partitions::count_ps_table(&mult4, enum_limit)?;
    let conv = convolve3(&op, &p4, &p4, enum_limit);
    paths.push(limited("enumeration_convolution", conv, n_max));
    if cfg.use_dp() {
        paths.push(dense("composition_dp", compositions::weighted_sum_dp(&u, &rule, n_max)?));
    }
    if let Some(p) = brute_path("composition_brute", &u, &rule, cfg.brute_limit(n_max), n_max, false)? {
        paths.push(p);
    }
    Ok(assemble(&id, vec![], n_max, paths))
}

/// Rogers-Ramanujan counts rr(n), three ways: the restricted-partition DP,
/// the reciprocal of (q, q^4; q^5)_inf, and the Cauchy product of the theta
/// factor f(-q^2, -q^3) with the hat-signed composition sums. The
/// gap-condition enumeration joins on its prefix.
pub fn verify_rr(cfg: &VerifyConfig) -> Result<IdentityReport> {
    let id = IdentityId::Rr;
    let n_max = cfg.n_max.unwrap_or_else(|| id.default_n_max());
    let order = n_max as usize;

    let mut paths = vec![
        dense("partition_dp", partitions::rr_table(n_max)),
        dense("product_gf", qgen::named_gf(GfName::Rr, order)?.coeffs().to_vec()),
    ];

    // Cauchy product: rr(n) = sum_i a_i * (hat-signed composition sum at n-i)
    let p5 = partsets::polygonal_set(5, n_max.max(1))?;
    let hat_rule = stat_weight(StatKind::HatLength, n_max)?;
    if cfg.use_dp() {
        let a = qgen::rr_theta_factor(order);
        let hat = compositions::weighted_sum_dp(&p5, &hat_rule, n_max)?;
        let mut cauchy = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = BigInt::zero();
            for i in 0..=n {
                if !a.coeff(i).is_zero() {
                    acc += a.coeff(i) * &hat[n - i];
                }
            }
            cauchy.push(acc);
        }
        paths.push(dense("cauchy_theta", cauchy));
    }
    if let Some(limit) = cfg.brute_limit(n_max) {
        // same Cauchy formula with the inner sums enumerated
        let a = qgen::rr_theta_factor(limit as usize);
        let mut vals = Vec::with_capacity(limit as usize + 1);
        for n in 0..=limit {
            let mut acc = BigInt::zero();
            for i in 0..=n {
                if !a.coeff(i as usize).is_zero() {
                    acc += a.coeff(i as usize)
                        * compositions::weighted_sum(&p5, &hat_rule, n - i)?;
                }
            }
            vals.push(acc);
        }
        paths.push(limited("cauchy_brute", vals, n_max));
    }
    let gap_limit = n_max.min(30);
    let gap: Vec<BigInt> = (0..=gap_limit).map(partitions::count_rr_gap_condition).collect();
    paths.push(limited("gap_enumeration", gap, n_max));

    Ok(assemble(&id, vec![], n_max, paths))
}

/// The default instances run by `verify all`: every identity, with the
/// parameter choices the library commits to checking.
pub fn registry() -> Vec<IdentityId> {
    vec![
        IdentityId::EvenK(6),
        IdentityId::EvenK(8),
        IdentityId::EvenK(10),
        IdentityId::EvenK(12),
        IdentityId::OddK(5),
        IdentityId::OddK(7),
        IdentityId::OddK(9),
        IdentityId::Pod,
        IdentityId::Overpartition,
        IdentityId::Pofn2,
        IdentityId::GeneralAB(1, 3),
        IdentityId::GeneralAB(1, 5),
        IdentityId::GeneralAB(2, 4),
        IdentityId::GeneralAB(3, 5),
        IdentityId::P3,
        IdentityId::R,
        IdentityId::S,
        IdentityId::Rr,
    ]
}

pub fn verify_identity(id: &IdentityId, cfg: &VerifyConfig) -> Result<IdentityReport> {
    match id {
        IdentityId::EvenK(k) => verify_even_k(*k, cfg),
        IdentityId::OddK(k) => verify_odd_k(*k, cfg),
        IdentityId::Pod => verify_pod(cfg),
        IdentityId::Overpartition => verify_overpartition(cfg),
        IdentityId::Pofn2 => verify_pofn2(cfg),
        IdentityId::GeneralAB(a, b) => verify_general_ab(*a, *b, cfg),
        IdentityId::P3 => verify_p3(cfg),
        IdentityId::R => verify_r(cfg),
        IdentityId::S => verify_s(cfg),
        IdentityId::Rr => verify_rr(cfg),
    }
}

/// Run every registry instance. All reports are produced even when some
/// fail; the caller decides how to surface failures.
pub fn verify_all(cfg: &VerifyConfig) -> Result<Vec<IdentityReport>> {
    registry().iter().map(|id| verify_identity(id, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(n_max: u64) -> VerifyConfig {
        VerifyConfig { n_max: Some(n_max), brute_n_max: 14, oracle: OracleMode::Both }
    }

    #[test]
    fn even_k_six_small() {
        let report = verify_even_k(6, &quick(20)).unwrap();
        assert!(report.pass, "{:?}", report.failures().next());
        // spot value: p_{S_6}(4) = 3
        let cell = &report.cells[4];
        assert!(cell.values.iter().all(|(_, v)| v == &BigInt::from(3)));
        assert!(cell.values.len() >= 4);
    }

    #[test]
    fn even_k_rejects_odd() {
        assert!(verify_even_k(7, &quick(5)).is_err());
        assert!(verify_even_k(4, &quick(5)).is_err());
    }

    #[test]
    fn odd_k_five_recovers_p() {
        let report = verify_odd_k(5, &quick(20)).unwrap();
        assert!(report.pass, "{:?}", report.failures().next());
        let cell = &report.cells[5];
        assert!(cell.values.iter().all(|(_, v)| v == &BigInt::from(7)));
        assert!(cell.values.iter().any(|(name, _)| name == "unrestricted_p"));
    }

    #[test]
    fn odd_k_rejects_even() {
        assert!(verify_odd_k(6, &quick(5)).is_err());
    }

    #[test]
    fn pod_small() {
        let report = verify_pod(&quick(20)).unwrap();
        assert!(report.pass, "{:?}", report.failures().next());
        assert_eq!(report.cells[3].values[0].1, BigInt::from(2));
    }

    #[test]
    fn overpartition_small() {
        let report = verify_overpartition(&quick(18)).unwrap();
        assert!(report.pass, "{:?}", report.failures().next());
        assert_eq!(report.cells[2].values[0].1, BigInt::from(4));
    }

    #[test]
    fn pofn2_small() {
        let report = verify_pofn2(&quick(20)).unwrap();
        assert!(report.pass, "{:?}", report.failures().next());
        assert_eq!(report.cells[0].values[0].1, BigInt::from(1));
    }

    #[test]
    fn general_ab_all_parities() {
        for (a, b) in [(1, 3), (2, 4)] {
            let report = verify_general_ab(a, b, &quick(16)).unwrap();
            assert!(report.pass, "({a},{b}): {:?}", report.failures().next());
        }
        assert!(verify_general_ab(2, 3, &quick(5)).is_err());
    }

    #[test]
    fn length_rule_fails_for_even_parity_pair() {
        // The printed (-1)^n (-1)^length form is wrong for alpha, beta both
        // even: at (2,4), n = 4 it yields 0 while p_{T_{2,4}}(4) = 2. Pin the
        // discrepancy so the corrected signed-index rule stays justified.
        let r24 = partsets::general_r_set(2, 4, 4).unwrap();
        let length_rule = stat_weight(StatKind::Length, 4).unwrap();
        let wrong = compositions::weighted_sum(&r24, &length_rule, 4).unwrap();
        assert_eq!(wrong, BigInt::from(0));
        let t24 = partsets::general_t_set(2, 4, 4).unwrap();
        assert_eq!(partitions::count_ps(&t24, 4).unwrap(), BigInt::from(2));
    }

    #[test]
    fn p3_small() {
        let report = verify_p3(&quick(12)).unwrap();
        assert!(report.pass, "{:?}", report.failures().next());
        assert_eq!(report.cells[5].values[0].1, BigInt::from(108));
    }

    #[test]
    fn r_and_s_small() {
        let r = verify_r(&quick(14)).unwrap();
        assert!(r.pass, "{:?}", r.failures().next());
        let s = verify_s(&quick(14)).unwrap();
        assert!(s.pass, "{:?}", s.failures().next());
    }

    #[test]
    fn rr_small() {
        let report = verify_rr(&quick(20)).unwrap();
        assert!(report.pass, "{:?}", report.failures().next());
        assert_eq!(report.cells[4].values[0].1, BigInt::from(2));
        assert_eq!(report.cells[0].values[0].1, BigInt::from(1));
    }

    #[test]
    fn registry_covers_every_identity() {
        let reg = registry();
        // one arm per variant: adding a variant forces this match (and the
        // registry) to be revisited
        let mut seen = [false; 10];
        for id in &reg {
            let slot = match id {
                IdentityId::EvenK(_) => 0,
                IdentityId::OddK(_) => 1,
                IdentityId::Pod => 2,
                IdentityId::Overpartition => 3,
                IdentityId::Pofn2 => 4,
                IdentityId::GeneralAB(..) => 5,
                IdentityId::P3 => 6,
                IdentityId::R => 7,
                IdentityId::S => 8,
                IdentityId::Rr => 9,
            };
            seen[slot] = true;
        }
        assert!(seen.iter().all(|&s| s), "registry misses an identity kind");
    }

    #[test]
    fn comparator_detects_disagreement() {
        // sanity check that assemble() is not vacuous
        let id = IdentityId::Pod;
        let paths = vec![
            dense("a", vec![BigInt::from(1), BigInt::from(2)]),
            dense("b", vec![BigInt::from(1), BigInt::from(3)]),
        ];
        let report = assemble(&id, vec![], 1, paths);
        assert!(!report.pass);
        assert!(report.cells[0].pass);
        assert!(!report.cells[1].pass);
    }

    #[test]
    fn dp_and_brute_agree_on_overlap() {
        let cfg = VerifyConfig { n_max: Some(16), brute_n_max: 16, oracle: OracleMode::Both };
        for id in [IdentityId::P3, IdentityId::Rr, IdentityId::EvenK(8)] {
            let report = verify_identity(&id, &cfg).unwrap();
            assert!(report.pass, "{}: {:?}", report.id, report.failures().next());
        }
    }
}
