use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::AbShift;
use crate::language;
use crate::surgery;
use crate::thermo::configuration::Configuration;
use crate::thermo::partition::{Constraints, Engine};
use crate::thermo::potential::Potential;
use crate::word::Digit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PressureMethod {
    /// Sum over all padded words of length `2n + 1` centred at 0.
    CentredSum,
    /// Sum over all of `L_m`.
    FullSum,
    /// Sum over words of `L_m` that end at the graph origin.
    Restricted,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PressureReport {
    pub method: PressureMethod,
    /// Word length summed over.
    pub length: usize,
    /// `ln` of the partition sum.
    pub log_partition: f64,
    /// `log_partition / length`.
    pub value: f64,
    /// Number of words in the sum.
    #[serde(serialize_with = "decimal")]
    pub term_count: BigUint,
}

fn decimal<S: serde::Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

fn check_potential(shift: &AbShift, phi: &Potential) -> Result<()> {
    if phi.lambda() != shift.lambda() {
        return Err(Error::Potential(format!(
            "potential tabulated over digits 0..={}, shift uses 0..={}",
            phi.lambda(),
            shift.lambda()
        )));
    }
    Ok(())
}

fn report(
    shift: &AbShift,
    phi: &Potential,
    m: usize,
    method: PressureMethod,
    final_origin: bool,
) -> Result<PressureReport> {
    shift.params().require_main_mode()?;
    check_potential(shift, phi)?;
    if m == 0 {
        return Err(Error::InvalidArgument(
            "word length must be at least 1".into(),
        ));
    }
    let engine = Engine::new(shift, phi, m);
    let c = Constraints {
        final_origin,
        ..Constraints::default()
    };
    let log_partition = engine.log_sum(c);
    Ok(PressureReport {
        method,
        length: m,
        log_partition,
        value: log_partition / m as f64,
        term_count: engine.count(c),
    })
}

/// The configurations whose cores are the words of `L_{2n+1}` on `[-n, n]`,
/// each with `g` of its core at `n + 1`.
pub fn build_en(shift: &AbShift, n: usize) -> Result<impl Iterator<Item = Configuration> + '_> {
    shift.params().require_main_mode()?;
    let start = -(n as i64);
    Ok(language::enumerate(shift, 2 * n + 1)
        .map(move |w| surgery::sharp(shift, &w, start).expect("enumerated words are admissible")))
}

/// `ln Xi^n(phi) / (2n + 1)`.
pub fn pressure_estimate(shift: &AbShift, phi: &Potential, n: usize) -> Result<PressureReport> {
    report(shift, phi, 2 * n + 1, PressureMethod::CentredSum, false)
}

/// `(1/m) ln` of the padded-word sum over all of `L_m`.
pub fn full_pressure_estimate(
    shift: &AbShift,
    phi: &Potential,
    m: usize,
) -> Result<PressureReport> {
    report(shift, phi, m, PressureMethod::FullSum, false)
}

/// `(1/m) ln` of the padded-word sum over `{w in L_m : s(w) = eps}`.
pub fn restricted_pressure_estimate(
    shift: &AbShift,
    phi: &Potential,
    m: usize,
) -> Result<PressureReport> {
    report(shift, phi, m, PressureMethod::Restricted, true)
}

/// Brute-force `ln Xi^n(phi)` by enumerating every configuration.
pub fn log_partition_naive(shift: &AbShift, phi: &Potential, n: usize) -> Result<f64> {
    check_potential(shift, phi)?;
    let ni = n as i64;
    Ok(super::partition::log_sum_exp(
        build_en(shift, n)?.map(|x| phi.birkhoff_window(&x, -ni, ni)),
    ))
}

/// Comparison of `m * p_hat` with the restricted log-sum at length `m`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RestrictedDeviation {
    pub m: usize,
    pub epsilon: f64,
    /// Pressure estimate standing in for the true pressure.
    pub pressure_used: f64,
    pub log_restricted_sum: f64,
    /// `m * pressure_used - log_restricted_sum`.
    pub log_ratio: f64,
    /// `|log_ratio| <= m * epsilon`.
    pub within: bool,
}

/// Checks `e^{-m eps} <= e^{m p} / sum <= e^{m eps}` with `p` replaced by
/// the supplied estimate.
pub fn restricted_deviation(
    shift: &AbShift,
    phi: &Potential,
    m: usize,
    epsilon: f64,
    pressure_used: f64,
) -> Result<RestrictedDeviation> {
    let r = restricted_pressure_estimate(shift, phi, m)?;
    let log_ratio = m as f64 * pressure_used - r.log_partition;
    Ok(RestrictedDeviation {
        m,
        epsilon,
        pressure_used,
        log_restricted_sum: r.log_partition,
        log_ratio,
        within: log_ratio.abs() <= m as f64 * epsilon,
    })
}

/// `ln Xi^n_{[k, k+|v|-1]}(v)`: configurations of `E^n` showing `v` at
/// coordinates `k ..`. With `star`, only those whose left part
/// `x_{-n} .. x_{k-1}` ends at the graph origin.
pub fn window_log_partition(
    shift: &AbShift,
    phi: &Potential,
    n: usize,
    k: i64,
    v: &[Digit],
    star: bool,
) -> Result<f64> {
    shift.params().require_main_mode()?;
    check_potential(shift, phi)?;
    let ni = n as i64;
    let l = k + v.len() as i64 - 1;
    if v.is_empty() || k < -ni || l > ni {
        return Err(Error::InvalidArgument(format!(
            "window [{k}, {l}] not inside [-{n}, {n}]"
        )));
    }
    let p = (k + ni + 1) as usize;
    let engine = Engine::new(shift, phi, 2 * n + 1);
    Ok(engine.log_sum(Constraints {
        fixed: Some((p, v)),
        origin_after: star.then_some(p - 1),
        final_origin: false,
    }))
}
