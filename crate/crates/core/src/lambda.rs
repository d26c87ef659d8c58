//! The Λ function `Λ(z) = ∫_z^1 |A|(x) dx` of a discrete channel and the
//! degradation order it induces.
//!
//! For a discrete channel `Λ(z) = Σ α_i (1 - max(z, x_i))`, which is
//! linear between consecutive mass positions. Channel `b` is degraded with
//! respect to channel `a` exactly when `Λ_a(z) <= Λ_b(z)` for every `z`.

use std::f64::consts::LN_2;

use crate::channel::{DiscreteChannel, POSITION_MERGE_TOL};
use crate::error::{Error, Result};

/// Pointwise tolerance for degradation decisions.
pub const ORDER_TOL: f64 = 1e-10;
const SHAPE_TOL: f64 = 1e-12;

/// A continuous piecewise-linear function on `[0, 1]` given by its values
/// at strictly increasing breakpoints `0 = z_0 < ... < z_m = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    breaks: Vec<f64>,
    values: Vec<f64>,
}

impl PiecewiseLinear {
    /// Validates the breakpoints and the Λ shape: nonincreasing and
    /// convex-∩ (slopes nonincreasing) within `1e-12`.
    pub fn new(breaks: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if breaks.len() != values.len() || breaks.len() < 2 {
            return Err(Error::InvalidProfile(
                "need at least two breakpoints with one value each".into(),
            ));
        }
        if breaks[0] != 0.0 || *breaks.last().unwrap() != 1.0 {
            return Err(Error::InvalidProfile("breakpoints must span [0, 1]".into()));
        }
        if breaks.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidProfile(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidProfile("non-finite value".into()));
        }
        if values.windows(2).any(|w| w[1] > w[0] + SHAPE_TOL) {
            return Err(Error::InvalidProfile("profile must be nonincreasing".into()));
        }
        let pl = PiecewiseLinear { breaks, values };
        let slopes: Vec<f64> = pl.slopes().collect();
        if slopes.windows(2).any(|w| w[1] > w[0] + SHAPE_TOL) {
            return Err(Error::InvalidProfile("profile must be convex-∩".into()));
        }
        Ok(pl)
    }

    pub fn breaks(&self) -> &[f64] {
        &self.breaks
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn slopes(&self) -> impl Iterator<Item = f64> + '_ {
        self.breaks
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(z, v)| (v[1] - v[0]) / (z[1] - z[0]))
    }

    /// Linear interpolation between breakpoints.
    pub fn eval(&self, z: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&z) {
            return Err(Error::DomainError {
                value: z,
                domain: "[0, 1]",
            });
        }
        Ok(self.eval_unchecked(z))
    }

    fn eval_unchecked(&self, z: f64) -> f64 {
        let k = self.breaks.partition_point(|&b| b <= z);
        if k == 0 {
            return self.values[0];
        }
        if k >= self.breaks.len() {
            return *self.values.last().unwrap();
        }
        let (z0, z1) = (self.breaks[k - 1], self.breaks[k]);
        let (v0, v1) = (self.values[k - 1], self.values[k]);
        if z == z0 {
            return v0;
        }
        v0 + (v1 - v0) * (z - z0) / (z1 - z0)
    }

    /// Entropy of the channel whose Λ function this is, from
    /// `H = ∫_0^1 Λ(z) / (ln 2 (1 - z²)) dz`, integrated exactly segment by
    /// segment.
    pub fn entropy(&self) -> Result<f64> {
        let tail = *self.values.last().unwrap();
        if tail.abs() > ORDER_TOL {
            return Err(Error::NonZeroTail { value: tail });
        }
        let m = self.breaks.len();
        let mut total = 0.0;
        for k in 0..m - 1 {
            let (z0, z1) = (self.breaks[k], self.breaks[k + 1]);
            let (v0, v1) = (self.values[k], self.values[k + 1]);
            let slope = (v1 - v0) / (z1 - z0);
            if k == m - 2 {
                // Λ(z) = -slope (1 - z) here, so the integrand is -slope / (ln2 (1 + z))
                total += -slope * (LN_2 - z0.ln_1p());
            } else {
                let intercept = v0 - slope * z0;
                let anti = |z: f64| intercept * z.atanh() - 0.5 * slope * (-z * z).ln_1p();
                total += anti(z1) - anti(z0);
            }
        }
        Ok(total / LN_2)
    }
}

/// `Λ(z) = Σ α_i (1 - max(z, x_i))`.
pub fn lambda_eval(ch: &DiscreteChannel, z: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::DomainError {
            value: z,
            domain: "[0, 1]",
        });
    }
    Ok(lambda_eval_unchecked(ch, z))
}

pub(crate) fn lambda_eval_unchecked(ch: &DiscreteChannel, z: f64) -> f64 {
    ch.masses()
        .iter()
        .map(|p| p.alpha * (1.0 - z.max(p.x)))
        .sum()
}

/// Exact piecewise-linear Λ of a discrete channel, with breakpoints at 0,
/// every mass position and 1.
pub fn lambda_profile(ch: &DiscreteChannel) -> PiecewiseLinear {
    let mut breaks = vec![0.0];
    for p in ch.masses() {
        let last = *breaks.last().unwrap();
        if p.x - last >= POSITION_MERGE_TOL && 1.0 - p.x >= POSITION_MERGE_TOL {
            breaks.push(p.x);
        }
    }
    breaks.push(1.0);
    let mut values: Vec<f64> = breaks.iter().map(|&z| lambda_eval_unchecked(ch, z)).collect();
    *values.last_mut().unwrap() = 0.0;
    PiecewiseLinear { breaks, values }
}

/// Entropy recovered from a Λ profile; see [`PiecewiseLinear::entropy`].
pub fn entropy_from_lambda(pl: &PiecewiseLinear) -> Result<f64> {
    pl.entropy()
}

/// Relation of channel `a` to channel `b` in the degradation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ordering {
    Equivalent,
    /// `a` is degraded with respect to `b`: `Λ_b <= Λ_a` everywhere.
    DegradedOf,
    /// `a` is upgraded with respect to `b`: `Λ_a <= Λ_b` everywhere.
    UpgradedOf,
    Incomparable,
}

impl Ordering {
    pub fn label(self) -> &'static str {
        match self {
            Ordering::Equivalent => "equivalent",
            Ordering::DegradedOf => "A_degraded_wrt_B",
            Ordering::UpgradedOf => "A_upgraded_wrt_B",
            Ordering::Incomparable => "incomparable",
        }
    }
}

fn union_breaks(a: &PiecewiseLinear, b: &PiecewiseLinear) -> Vec<f64> {
    let mut zs: Vec<f64> = a.breaks.iter().chain(&b.breaks).copied().collect();
    zs.sort_by(f64::total_cmp);
    zs.dedup();
    zs
}

/// Largest values of `a - b` and `b - a` over the union of breakpoints.
/// The difference of two piecewise-linear functions attains its extrema there.
fn max_excess(a: &PiecewiseLinear, b: &PiecewiseLinear) -> (f64, f64) {
    union_breaks(a, b)
        .into_iter()
        .fold((f64::NEG_INFINITY, f64::NEG_INFINITY), |(ab, ba), z| {
            let d = a.eval_unchecked(z) - b.eval_unchecked(z);
            (ab.max(d), ba.max(-d))
        })
}

/// True when the channel with profile `candidate` is degraded with respect
/// to the channel with profile `reference`.
pub fn is_degraded(candidate: &PiecewiseLinear, reference: &PiecewiseLinear) -> bool {
    let (_, reference_excess) = max_excess(candidate, reference);
    reference_excess <= ORDER_TOL
}

pub fn compare(a: &PiecewiseLinear, b: &PiecewiseLinear) -> Ordering {
    let (a_over, b_over) = max_excess(a, b);
    match (a_over <= ORDER_TOL, b_over <= ORDER_TOL) {
        (true, true) => Ordering::Equivalent,
        (false, true) => Ordering::DegradedOf,
        (true, false) => Ordering::UpgradedOf,
        (false, false) => Ordering::Incomparable,
    }
}
