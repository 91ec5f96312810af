//! Shared fixtures for the benchmarks.

use abshift::thermo::Potential;
use abshift::{AbShift, Rational};

/// `alpha = 2/7`, `beta = 7/2`.
pub fn reference_shift() -> AbShift {
    AbShift::reciprocal(Rational::new(7, 2).expect("nonzero denominator"))
        .expect("valid parameters")
}

/// The reciprocal shift for `beta = p/q`.
pub fn reciprocal_shift(p: i64, q: i64) -> AbShift {
    AbShift::reciprocal(Rational::new(p, q).expect("nonzero denominator"))
        .expect("valid parameters")
}

/// Range-2 potential over digits `0..=lambda`.
pub fn pair_potential(lambda: u8) -> Potential {
    Potential::from_fn(lambda, 2, |x| {
        0.3 * x[0] as f64 - 0.1 * (x[0] * x[1]) as f64
    })
    .expect("finite table")
}
