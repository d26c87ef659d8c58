//! Degradation ordering of binary-input memoryless output-symmetric (BMS)
//! channels, and the least degraded / least upgraded channels of the family
//! of all BMS channels with a given capacity.
//!
//! Channels are handled in the |D| domain as finite sums of point masses.
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channel;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod lambda;
pub mod numerics;
pub mod sampler;

pub use channel::{binary_entropy, kernel_h, DiscreteChannel, MassPoint};
pub use error::{Error, Result};
pub use extremal::{
    capacity_star, capacity_under, epsilon_bsc, gap_row, gap_row_with, least_degraded_channel,
    lambda_opt_bruteforce, x_of_z, z_of_x, CapacityGapRow, ExtremalProfile, FixedPoint,
};
pub use lambda::{
    compare, entropy_from_lambda, is_degraded, lambda_eval, lambda_profile, Ordering,
    PiecewiseLinear,
};
pub use numerics::{bisect, integrate_open, SolverConfig};
pub use sampler::{sample_batch, sample_channel, Sampler, SamplerConfig};
