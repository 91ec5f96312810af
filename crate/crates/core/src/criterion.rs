//! Obstruction lengths and the `zbar(n)/n` series.
//!
//! For a prefix `u` of `b`, `z(u)` is how many digits of `a`, continuing from
//! position `k1(u) + 1`, can be appended to `u` while the result stays a
//! prefix of `b`. `zbar(n)` is the running maximum of `z` over the first `n`
//! prefixes of `b`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::{AbShift, Bounds};
use crate::language;
use crate::rational::Rational;
use crate::word::{Digit, Word};

/// Default cap on the number of continuation digits examined by one scan.
pub const DEFAULT_SCAN_LIMIT: usize = 1 << 14;

/// The `zbar` series over `n = 1..=horizon`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionSeries {
    pub horizon: usize,
    /// `z(b_1..b_n)` for each `n`.
    pub z: Vec<usize>,
    /// Running maximum of `z`.
    pub zbar: Vec<usize>,
    /// `zbar(n) / n`, exact.
    pub ratios: Vec<Rational>,
    /// Largest ratio over the last quarter of the horizon.
    pub last_quartile_max_ratio: Rational,
}

impl CriterionSeries {
    /// `zbar(n)` with 1-based `n`.
    pub fn zbar_at(&self, n: usize) -> usize {
        self.zbar[n - 1]
    }
}

fn bounds_covering(shift: &AbShift, cur: &mut Bounds, need: usize) {
    if cur.len() < need {
        *cur = shift.bounds(need.next_power_of_two().max(64));
    }
}

/// Continuation scan for a `b`-prefix of length `l` whose `k1` is `k`.
fn scan(
    shift: &AbShift,
    l: usize,
    k: usize,
    limit: usize,
    word: &dyn Fn() -> Word,
) -> Result<usize> {
    let main_mode = shift.params().main_mode();
    let alpha = shift.params().alpha().clone();
    let mut bounds = shift.bounds((l + 64).next_power_of_two());
    let mut z = 0usize;
    loop {
        if z >= limit {
            return Err(Error::ScanLimit(limit));
        }
        let ai = k + z + 1;
        let bi = l + z + 1;
        bounds_covering(shift, &mut bounds, ai.max(bi));
        if bounds.a(ai) != bounds.b(bi) {
            return Ok(z);
        }
        // In the reciprocal family a is 0111..., and the upper orbit sitting
        // on alpha reads 1 forever, so the match never ends.
        if main_mode && ai >= 2 && shift.one_orbit_point(bi) == alpha {
            return Err(Error::UnboundedObstruction(word()));
        }
        z += 1;
    }
}

/// `z(u)` for a prefix `u` of `b` (0 for the empty word), with a custom scan cap.
pub fn z_of_b_prefix_with_limit(shift: &AbShift, u: &[Digit], limit: usize) -> Result<usize> {
    if u.is_empty() {
        return Ok(0);
    }
    let b = shift.expansion_of_one(u.len());
    if b.digits() != u {
        return Err(Error::NotAPrefix {
            word: Word::from(u),
            which: "b",
        });
    }
    let bounds = shift.bounds(u.len());
    let (k1, _) = bounds.k_values(u);
    scan(shift, u.len(), k1, limit, &|| Word::from(u))
}

/// `z(u)` for a prefix `u` of `b` (0 for the empty word).
pub fn z_of_b_prefix(shift: &AbShift, u: &[Digit]) -> Result<usize> {
    z_of_b_prefix_with_limit(shift, u, DEFAULT_SCAN_LIMIT)
}

/// `z` of the `b`-suffix of `w` when `k1(w) < k2(w)`, else 0.
pub fn z_of_word(shift: &AbShift, w: &[Digit]) -> Result<usize> {
    let d = language::suffix_decompose(shift, w)?;
    if d.k1 < d.k2 {
        z_of_b_prefix(shift, &d.suffix)
    } else {
        Ok(0)
    }
}

/// `z(b_1)`, the constant entering the multiplicity bounds.
pub fn p1(shift: &AbShift) -> Result<usize> {
    shift.params().require_main_mode()?;
    z_of_b_prefix(shift, &shift.expansion_of_one(1))
}

/// The `b`-prefix `u` extended by its maximal `a`-continuation, and the same
/// with one more continuation digit (which is no longer a `b`-prefix).
pub fn continuation_witness(shift: &AbShift, u: &[Digit]) -> Result<(Word, Word)> {
    let z = z_of_b_prefix(shift, u)?;
    let k1 = if u.is_empty() {
        0
    } else {
        shift.bounds(u.len()).k_values(u).0
    };
    let a = shift.expansion_of_zero(k1 + z + 1);
    let kept = Word::from(u).concat(&a[k1..k1 + z]);
    let broken = Word::from(u).concat(&a[k1..k1 + z + 1]);
    Ok((kept, broken))
}

/// Exact `zbar(n)` and `zbar(n)/n` for `n = 1..=horizon`.
pub fn zbar_series(shift: &AbShift, horizon: usize) -> Result<CriterionSeries> {
    if horizon == 0 {
        return Err(Error::InvalidArgument("horizon must be at least 1".into()));
    }
    let b = shift.expansion_of_one(horizon);
    let bounds = shift.bounds(horizon);
    let mut z = Vec::with_capacity(horizon);
    let mut zbar = Vec::with_capacity(horizon);
    let mut ratios = Vec::with_capacity(horizon);
    let mut best = 0usize;
    for n in 1..=horizon {
        let u = &b[..n];
        let (k1, _) = bounds.k_values(u);
        let zn = scan(shift, n, k1, DEFAULT_SCAN_LIMIT, &|| Word::from(u))?;
        best = best.max(zn);
        z.push(zn);
        zbar.push(best);
        ratios.push(Rational::new(BigInt::from(best), BigInt::from(n))?);
    }
    let start = horizon - horizon.div_ceil(4);
    let last_quartile_max_ratio = ratios[start..]
        .iter()
        .max()
        .cloned()
        .unwrap_or_else(Rational::zero);
    Ok(CriterionSeries {
        horizon,
        z,
        zbar,
        ratios,
        last_quartile_max_ratio,
    })
}
