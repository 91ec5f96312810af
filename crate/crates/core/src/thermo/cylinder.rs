use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::AbShift;
use crate::language;
use crate::rational::Rational;
use crate::thermo::partition::{Constraints, Engine};
use crate::thermo::potential::Potential;
use crate::word::Digit;

fn validate(shift: &AbShift, phi: Option<&Potential>, u: &[Digit], n: usize) -> Result<()> {
    shift.params().require_main_mode()?;
    if let Some(phi) = phi {
        if phi.lambda() != shift.lambda() {
            return Err(Error::Potential(
                "potential alphabet does not match the shift".into(),
            ));
        }
    }
    if !language::is_admissible(shift, u)? {
        return Err(Error::Inadmissible(u.into()));
    }
    if u.is_empty() || u.len() > 2 * n + 1 {
        return Err(Error::InvalidArgument(format!(
            "cylinder length {} must lie in 1..={}",
            u.len(),
            2 * n + 1
        )));
    }
    Ok(())
}

/// Window starts `p` (1-based digit positions) of the length-`m` windows
/// inside a core of length `2n + 1`.
fn window_positions(n: usize, m: usize) -> std::ops::RangeInclusive<usize> {
    1..=(2 * n + 2 - m)
}

/// Finite-`n` cylinder estimate: the average over all windows `[k, l]`
/// inside `[-n, n]` of the share of `Xi^n` carried by configurations that
/// show `u` on `[k, l]`, divided by `2n + 1`.
pub fn cylinder_estimate(shift: &AbShift, phi: &Potential, u: &[Digit], n: usize) -> Result<f64> {
    validate(shift, Some(phi), u, n)?;
    let engine = Engine::new(shift, phi, 2 * n + 1);
    let total = engine.log_sum(Constraints::default());
    let sum: f64 = window_positions(n, u.len())
        .map(|p| {
            let part = engine.log_sum(Constraints {
                fixed: Some((p, u)),
                ..Constraints::default()
            });
            (part - total).exp()
        })
        .sum();
    Ok(sum / (2 * n + 1) as f64)
}

/// The same estimate for `phi = 0`, in exact rational arithmetic.
pub fn cylinder_estimate_exact(shift: &AbShift, u: &[Digit], n: usize) -> Result<Rational> {
    validate(shift, None, u, n)?;
    let zero = Potential::zero(shift.lambda());
    let engine = Engine::new(shift, &zero, 2 * n + 1);
    let total = engine.count(Constraints::default());
    let hits: num_bigint::BigUint = window_positions(n, u.len())
        .map(|p| {
            engine.count(Constraints {
                fixed: Some((p, u)),
                ..Constraints::default()
            })
        })
        .sum();
    Rational::new(
        BigInt::from(hits),
        BigInt::from(total) * BigInt::from(2 * n + 1),
    )
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurvePoint {
    pub n: usize,
    pub nu_hat: f64,
}

/// Cylinder estimates over a range of `n`, for judging stabilization.
pub fn cylinder_curve(
    shift: &AbShift,
    phi: &Potential,
    u: &[Digit],
    ns: impl IntoIterator<Item = usize>,
) -> Result<Vec<CurvePoint>> {
    ns.into_iter()
        .filter(|&n| 2 * n + 1 >= u.len())
        .map(|n| {
            Ok(CurvePoint {
                n,
                nu_hat: cylinder_estimate(shift, phi, u, n)?,
            })
        })
        .collect()
}
