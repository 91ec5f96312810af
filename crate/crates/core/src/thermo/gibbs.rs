use serde::Serialize;

use crate::criterion;
use crate::error::{Error, Result};
use crate::expansion::AbShift;
use crate::graph;
use crate::language;
use crate::surgery;
use crate::thermo::cylinder::cylinder_estimate;
use crate::thermo::potential::Potential;
use crate::thermo::pressure::pressure_estimate;
use crate::word::{Digit, Word};

/// Lower and upper constants bracketing cylinder masses.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GibbsBounds {
    pub m: usize,
    pub epsilon: f64,
    pub p1: usize,
    /// Obstruction length of the cylinder word.
    pub z: usize,
    pub total_oscillation: f64,
    pub alphabet_size: usize,
    pub k_minus: f64,
    pub k_plus: f64,
}

/// `K+ = (2 p1 + 7) e^{11 |phi|} e^{5 m eps}` and
/// `K- = |A|^{-(z+3)} e^{-(z+5) |phi|} / ((2 p1 + 7)^2 e^{5 m eps + 8 |phi|})`
/// with `m = |u|` and `|phi|` the total oscillation.
pub fn gibbs_bounds(
    shift: &AbShift,
    phi: &Potential,
    u: &[Digit],
    epsilon: f64,
) -> Result<GibbsBounds> {
    shift.params().require_main_mode()?;
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "epsilon = {epsilon} must be positive"
        )));
    }
    let p1 = criterion::p1(shift)?;
    let z = criterion::z_of_word(shift, u)?;
    let osc = phi.total_oscillation();
    let m = u.len();
    let alphabet = shift.params().alphabet_size();
    let c = (2 * p1 + 7) as f64;
    let me = 5.0 * m as f64 * epsilon;
    let k_plus = c * (11.0 * osc).exp() * me.exp();
    let zf = z as f64;
    let k_minus = (alphabet as f64).powf(-(zf + 3.0)) * (-(zf + 5.0) * osc).exp()
        / (c * c * (me + 8.0 * osc).exp());
    Ok(GibbsBounds {
        m,
        epsilon,
        p1,
        z,
        total_oscillation: osc,
        alphabet_size: alphabet,
        k_minus,
        k_plus,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GibbsReport {
    pub word: Word,
    pub m: usize,
    pub n: usize,
    pub nu_hat: f64,
    /// `sum_{j=1}^{m} phi(sigma^j y)` for `y` the word placed at 1 with its extension.
    pub birkhoff: f64,
    /// Finite-`n` pressure estimate used in place of the pressure.
    pub pressure_used: f64,
    pub pressure_is_estimate: bool,
    pub bounds: GibbsBounds,
    /// `K- exp(birkhoff - m p)`.
    pub lower: f64,
    /// `K+ exp(birkhoff - m p)`.
    pub upper: f64,
    /// `(1/m) ln nu_hat - (1/m) (birkhoff - m p)`.
    pub log_gap_per_symbol: f64,
    pub within_bounds: bool,
}

/// Cylinder estimate, Birkhoff sum and bound constants for one word.
pub fn gibbs_diagnostic(
    shift: &AbShift,
    phi: &Potential,
    u: &[Digit],
    n: usize,
    epsilon: f64,
) -> Result<GibbsReport> {
    let bounds = gibbs_bounds(shift, phi, u, epsilon)?;
    let nu_hat = cylinder_estimate(shift, phi, u, n)?;
    let m = u.len();
    let y = surgery::sharp(shift, u, 1)?;
    let birkhoff = phi.birkhoff_window(&y, 1, m as i64);
    let pressure_used = pressure_estimate(shift, phi, n)?.value;
    let psi = birkhoff - m as f64 * pressure_used;
    let lower = bounds.k_minus * psi.exp();
    let upper = bounds.k_plus * psi.exp();
    Ok(GibbsReport {
        word: Word::from(u),
        m,
        n,
        nu_hat,
        birkhoff,
        pressure_used,
        pressure_is_estimate: true,
        lower,
        upper,
        log_gap_per_symbol: (nu_hat.ln() - psi) / m as f64,
        within_bounds: lower <= nu_hat && nu_hat <= upper,
        bounds,
    })
}

/// Shortest word `c` with `v c` ending at the graph origin, least in
/// lexicographic order among the shortest. Its length never exceeds `z(v) + 2`.
pub fn complete_to_zero(shift: &AbShift, v: &[Digit]) -> Result<Word> {
    shift.params().require_main_mode()?;
    let start = language::follower_vertex(shift, v)?;
    let bound = criterion::z_of_word(shift, v)? + 2;
    if let Some(c) = graph::shortest_path_to_origin(shift, start, bound) {
        return Ok(c);
    }
    match graph::shortest_path_to_origin(shift, start, 4 * bound + 64) {
        Some(c) => Err(Error::CompletionBound {
            word: Word::from(v),
            found: c.len(),
            bound,
        }),
        None => Err(Error::Invariant(format!(
            "no path from {start} back to the origin"
        ))),
    }
}
