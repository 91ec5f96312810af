//! Thermodynamic quantities for locally constant potentials: partition sums
//! over padded words, pressure and cylinder estimates, and the constants
//! that bracket cylinder masses.

pub mod configuration;
pub mod cylinder;
pub mod gibbs;
mod partition;
pub mod potential;
pub mod pressure;

pub use configuration::{config_hamming, Configuration};
pub use cylinder::{cylinder_curve, cylinder_estimate, cylinder_estimate_exact, CurvePoint};
pub use gibbs::{complete_to_zero, gibbs_bounds, gibbs_diagnostic, GibbsBounds, GibbsReport};
pub use partition::{log_add, log_sum_exp};
pub use potential::Potential;
pub use pressure::{
    build_en, full_pressure_estimate, log_partition_naive, pressure_estimate, restricted_deviation,
    restricted_pressure_estimate, window_log_partition, PressureMethod, PressureReport,
    RestrictedDeviation,
};
