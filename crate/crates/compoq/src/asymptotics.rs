//! Closed-form asymptotic growth rates and exact-vs-asymptotic ratio
//! reports.
//!
//! Formulas are evaluated in 256-bit floating point (roughly 77 decimal
//! digits) so that exp(pi sqrt(2n)) stays representable far past the range
//! of f64 and the exact-count conversion loses nothing that matters at the
//! reported precision. Only leading-order forms are implemented; the ratio
//! report is the tool for watching them approach the exact counts.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions;
use crate::partsets;
use crate::qgen;

const PRECISION: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

/// Counting functions with a stated leading-order growth rate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AsymptoticId {
    /// p_{S_k}(n) ~ csc(pi/(k-2)) exp(pi sqrt(2n/(k-2))) / (8n)
    PSk(u64),
    /// p3(n) ~ exp(pi sqrt(2n)) / (8 sqrt(2) n^(3/2))
    P3,
    /// r(n) ~ exp(2 pi sqrt(2n/3)) / (12 sqrt(2) n^(3/2))
    R,
    /// s(n) ~ exp(2 pi sqrt(n/3)) / (6 n^(3/2))
    S,
    /// rr(n) ~ exp(2 pi sqrt(n/15)) / (4 15^(1/4) sqrt((5-sqrt 5)/8) n^(3/4))
    Rr,
}

impl AsymptoticId {
    pub fn label(&self) -> String {
        match self {
            AsymptoticId::PSk(k) => format!("p_S{k}"),
            AsymptoticId::P3 => "p3".into(),
            AsymptoticId::R => "r".into(),
            AsymptoticId::S => "s".into(),
            AsymptoticId::Rr => "rr".into(),
        }
    }
}

fn int(v: u64) -> BigFloat {
    BigFloat::from_u64(v, PRECISION)
}

fn validate(id: &AsymptoticId, n: u64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParameter("asymptotic forms need n >= 1".into()));
    }
    if let AsymptoticId::PSk(k) = id {
        if *k < 5 {
            return Err(Error::InvalidParameter(format!("p_Sk requires k >= 5, got {k}")));
        }
    }
    Ok(())
}

fn evaluate(id: &AsymptoticId, n: u64, cc: &mut Consts) -> Result<BigFloat> {
    validate(id, n)?;
    let p = PRECISION;
    let pi = cc.pi(p, RM);
    let nf = int(n);
    let value = match id {
        AsymptoticId::PSk(k) => {
            let km2 = int(k - 2);
            let arg = int(2).mul(&nf, p, RM).div(&km2, p, RM).sqrt(p, RM);
            let exp = pi.mul(&arg, p, RM).exp(p, RM, cc);
            let csc = int(1).div(&pi.div(&km2, p, RM).sin(p, RM, cc), p, RM);
            exp.mul(&csc, p, RM).div(&int(8).mul(&nf, p, RM), p, RM)
        }
        AsymptoticId::P3 => {
            let arg = int(2).mul(&nf, p, RM).sqrt(p, RM);
            let exp = pi.mul(&arg, p, RM).exp(p, RM, cc);
            let denom = int(8).mul(&int(2).sqrt(p, RM), p, RM).mul(&pow_3_2(&nf), p, RM);
            exp.div(&denom, p, RM)
        }
        AsymptoticId::R => {
            let arg = int(2).mul(&nf, p, RM).div(&int(3), p, RM).sqrt(p, RM);
            let exp = int(2).mul(&pi, p, RM).mul(&arg, p, RM).exp(p, RM, cc);
            let denom = int(12).mul(&int(2).sqrt(p, RM), p, RM).mul(&pow_3_2(&nf), p, RM);
            exp.div(&denom, p, RM)
        }
        AsymptoticId::S => {
            let arg = nf.div(&int(3), p, RM).sqrt(p, RM);
            let exp = int(2).mul(&pi, p, RM).mul(&arg, p, RM).exp(p, RM, cc);
            exp.div(&int(6).mul(&pow_3_2(&nf), p, RM), p, RM)
        }
        AsymptoticId::Rr => {
            let arg = nf.div(&int(15), p, RM).sqrt(p, RM);
            let exp = int(2).mul(&pi, p, RM).mul(&arg, p, RM).exp(p, RM, cc);
            // 4 * 15^(1/4) * sqrt((5 - sqrt 5)/8) * n^(3/4)
            let root15 = int(15).sqrt(p, RM).sqrt(p, RM);
            let inner = int(5).sub(&int(5).sqrt(p, RM), p, RM).div(&int(8), p, RM).sqrt(p, RM);
            let denom = int(4)
                .mul(&root15, p, RM)
                .mul(&inner, p, RM)
                .mul(&pow_3_2(&nf).sqrt(p, RM), p, RM);
            exp.div(&denom, p, RM)
        }
    };
    Ok(value)
}

fn pow_3_2(nf: &BigFloat) -> BigFloat {
    nf.mul(&nf.sqrt(PRECISION, RM), PRECISION, RM)
}

/// Evaluate the stated closed form at n, as f64 (infinite when the value
/// exceeds the f64 range, which happens near n = 6*10^4 for the pi sqrt(2n)
/// exponents).
pub fn asymptotic_value(id: &AsymptoticId, n: u64) -> Result<f64> {
    let mut cc = consts();
    let v = evaluate(id, n, &mut cc)?;
    Ok(bigfloat_to_f64(&v))
}

/// One row of a ratio report.
#[derive(Clone, Debug)]
pub struct RatioRow {
    pub n: u64,
    /// Exact count, as a decimal integer.
    pub exact: BigInt,
    /// Asymptotic value in scientific notation (15 significant digits).
    pub asymptotic: String,
    /// exact / asymptotic.
    pub ratio: f64,
}

/// Largest n for which exact counts are computed by default.
pub const MAX_EXACT_N: u64 = 100_000;

/// Exact counts against the closed form at each requested n. Ratios are
/// carried out in high precision and reported as f64.
pub fn ratio_report(id: &AsymptoticId, ns: &[u64]) -> Result<Vec<RatioRow>> {
    let max_n = ns.iter().copied().max().ok_or_else(|| {
        Error::InvalidParameter("ratio report needs at least one n".into())
    })?;
    if max_n > MAX_EXACT_N {
        return Err(Error::InvalidParameter(format!(
            "n = {max_n} exceeds the feasible exact computation bound {MAX_EXACT_N}"
        )));
    }
    validate(id, ns.iter().copied().min().unwrap_or(1).max(1))?;
    let exact_table: Vec<BigInt> = match id {
        AsymptoticId::PSk(k) => {
            let set = partsets::residue_set_sk(*k, max_n.max(1))?;
            partitions::count_ps_table(&set, max_n)?
        }
        AsymptoticId::P3 => partitions::colored_table(max_n, 3),
        AsymptoticId::R => qgen::named_gf(qgen::GfName::R, max_n as usize)?.coeffs().to_vec(),
        AsymptoticId::S => qgen::named_gf(qgen::GfName::S, max_n as usize)?.coeffs().to_vec(),
        AsymptoticId::Rr => partitions::rr_table(max_n),
    };
    let mut cc = consts();
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let asym = evaluate(id, n, &mut cc)?;
        let exact = exact_table[n as usize].clone();
        let exact_hp = bigint_to_bigfloat(&exact, &mut cc);
        let ratio = bigfloat_to_f64(&exact_hp.div(&asym, PRECISION, RM));
        rows.push(RatioRow { n, exact, asymptotic: format_sci(&asym, 15), ratio });
    }
    Ok(rows)
}

fn consts() -> Consts {
    Consts::new().expect("constant cache")
}

fn bigint_to_bigfloat(v: &BigInt, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&v.to_string(), Radix::Dec, PRECISION, RM, cc)
}

pub fn bigfloat_to_f64(v: &BigFloat) -> f64 {
    format!("{v}").parse::<f64>().unwrap_or(f64::NAN)
}

/// Trim a BigFloat to scientific notation with the given number of
/// significant digits.
pub fn format_sci(v: &BigFloat, digits: usize) -> String {
    let s = format!("{v}");
    match s.split_once('e') {
        Some((mantissa, exp)) => {
            let keep = if mantissa.starts_with('-') { digits + 2 } else { digits + 1 };
            let m: String = mantissa.chars().take(keep).collect();
            format!("{m}e{exp}")
        }
        None => s,
    }
}
