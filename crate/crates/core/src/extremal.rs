//! Extremal channels of the family of all BMS channels with capacity `c`.
//!
//! * `lambda_bar` is the pointwise maximum of Λ over the family and
//!   `lambda_star` its concave envelope, the Λ function of the least
//!   degraded channel.
//! * `lambda_under` is the pointwise minimum of Λ over the family, which is
//!   already concave and is the Λ function of the least upgraded channel.
//!
//! Everything is parameterised by the crossover probability `ε` of the BSC
//! with capacity `c` and by the threshold `z_bsc` at which the minimiser
//! switches from that BSC to a two-mass channel with one mass at 0.

use std::cell::RefCell;
use std::f64::consts::LN_2;
use std::sync::OnceLock;

use crate::channel::{binary_entropy, kernel_h_complement, kernel_h_unchecked, DiscreteChannel};
use crate::error::{Error, Result};
use crate::numerics::{bisect, integrate_open, SolverConfig};

fn check_capacity(c: f64) -> Result<()> {
    if c > 0.0 && c < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "capacity",
            value: c,
            reason: "capacity must lie in (0, 1)",
        })
    }
}

fn check_unit(z: f64) -> Result<()> {
    if (0.0..=1.0).contains(&z) {
        Ok(())
    } else {
        Err(Error::DomainError {
            value: z,
            domain: "[0, 1]",
        })
    }
}

/// Crossover probability `ε ∈ (0, 1/2)` of the BSC with capacity `c`,
/// i.e. the root of `1 - h2(ε) = c`.
pub fn epsilon_bsc(c: f64) -> Result<f64> {
    check_capacity(c)?;
    // bisect down to floating-point resolution; h2 is steep near 0
    let cfg = SolverConfig {
        root_tol: f64::MIN_POSITIVE,
        max_iter: 2200,
        ..SolverConfig::default()
    };
    bisect(|e| binary_entropy(e) - (1.0 - c), 0.0, 0.5, &cfg)
}

/// `z(x) = [log2(1-x) + log2(1+x)] / [log2(1-x) - log2(1+x)]` on `(0, 1)`.
pub fn z_of_x(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::DomainError {
            value: x,
            domain: "(0, 1)",
        });
    }
    if x <= 0.5 {
        Ok((-x * x).ln_1p() / ((-x).ln_1p() - x.ln_1p()))
    } else {
        // 1 - x is exact here
        Ok(z_of_log2_complement(-(1.0 - x).log2()))
    }
}

/// `z` as a function of `s = -log2(1 - x)`.
///
/// Written in `s` so that positions whose distance to 1 is below `f64`
/// resolution (or underflows) are still handled exactly.
fn z_of_log2_complement(s: f64) -> f64 {
    let ln_t = -s * LN_2;
    if s < 1.0 {
        let x = -(ln_t).exp_m1();
        let num = (-x * x).ln_1p();
        let den = ln_t - x.ln_1p();
        num / den
    } else {
        let t = (-s).exp2();
        let ln_two_minus_t = LN_2 + (-0.5 * t).ln_1p();
        (ln_t + ln_two_minus_t) / (ln_t - ln_two_minus_t)
    }
}

/// Solution of the stationarity condition `(1+z) log2(1+x) + (1-z) log2(1-x) = 0`,
/// i.e. the fixed point `x = (1-x)^((z-1)/(z+1)) - 1`, for `z ∈ (0, 1)`.
///
/// Stored through `s = -log2(1 - x)` so that `1 - x` stays meaningful for `z`
/// close to 1, where it decays like `2^(-2/(1-z))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoint {
    pub z: f64,
    log2_complement: f64,
}

impl FixedPoint {
    pub fn solve(z: f64, cfg: &SolverConfig) -> Result<Self> {
        if !(z > 0.0 && z < 1.0) {
            return Err(Error::DomainError {
                value: z,
                domain: "(0, 1)",
            });
        }
        monotonicity_guard()?;
        // z(s) = (s - L)/(s + L) with L = log2(2 - 2^-s) <= 1, so s <= (1+z)/(1-z)
        let hi = (1.0 + z) / (1.0 - z) + 1.0;
        let s = bisect(|s| z_of_log2_complement(s) - z, f64::MIN_POSITIVE, hi, cfg)?;
        Ok(FixedPoint {
            z,
            log2_complement: s,
        })
    }

    /// The position `x(z)`.
    pub fn position(&self) -> f64 {
        -(-self.log2_complement * LN_2).exp_m1()
    }

    /// `1 - x(z)`, possibly far below the resolution of `x(z)` itself.
    pub fn complement(&self) -> f64 {
        (-self.log2_complement).exp2()
    }

    /// `log2(1 - x(z))`, finite even when the complement underflows.
    pub fn log2_complement(&self) -> f64 {
        -self.log2_complement
    }

    /// `h(x(z))`.
    pub fn entropy_kernel(&self) -> f64 {
        kernel_h_complement(self.complement(), self.log2_complement())
    }
}

/// `x(z)`, the inverse of [`z_of_x`].
pub fn x_of_z(z: f64) -> Result<f64> {
    Ok(FixedPoint::solve(z, &SolverConfig::default())?.position())
}

const MONOTONE_GRID: usize = 10_000;

/// Strict monotonicity of `z(x)` on a uniform grid of `(0, 1)`; `x_of_z`
/// relies on it.
pub fn check_z_of_x_monotone() -> Result<()> {
    let mut prev = 0.0;
    for k in 1..MONOTONE_GRID {
        let x = k as f64 / MONOTONE_GRID as f64;
        let z = z_of_x(x)?;
        if !(z > prev) || !(z < 1.0) {
            return Err(Error::NonMonotone { at: x });
        }
        prev = z;
    }
    Ok(())
}

fn monotonicity_guard() -> Result<()> {
    static CHECK: OnceLock<Result<()>> = OnceLock::new();
    CHECK.get_or_init(check_z_of_x_monotone).clone()
}

/// Per-capacity parameters of the extremal Λ functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalProfile {
    pub c: f64,
    pub eps_bsc: f64,
    pub z_bsc: f64,
    cfg: SolverConfig,
}

impl ExtremalProfile {
    pub fn new(c: f64) -> Result<Self> {
        ExtremalProfile::with_config(c, SolverConfig::default())
    }

    pub fn with_config(c: f64, cfg: SolverConfig) -> Result<Self> {
        cfg.validate()?;
        monotonicity_guard()?;
        let eps_bsc = epsilon_bsc(c)?;
        let z_bsc = z_of_log2_complement(-(2.0 * eps_bsc).log2());
        Ok(ExtremalProfile {
            c,
            eps_bsc,
            z_bsc,
            cfg,
        })
    }

    /// Position `1 - 2ε` of the BSC mass.
    pub fn x_bsc(&self) -> f64 {
        1.0 - 2.0 * self.eps_bsc
    }

    pub fn config(&self) -> &SolverConfig {
        &self.cfg
    }

    /// Pointwise maximum of Λ over the family:
    /// `(1-c)(1-z)/h(z)` left of `1 - 2ε`, `1 - z` from there on.
    pub fn lambda_bar(&self, z: f64) -> Result<f64> {
        check_unit(z)?;
        if z < self.x_bsc() {
            Ok((1.0 - self.c) * (1.0 - z) / kernel_h_unchecked(z))
        } else {
            Ok(1.0 - z)
        }
    }

    /// Concave envelope of [`lambda_bar`](Self::lambda_bar): the chord from
    /// `(0, 1-c)` to `(1-2ε, 2ε)`, then `1 - z`.
    pub fn lambda_star(&self, z: f64) -> Result<f64> {
        check_unit(z)?;
        let x = self.x_bsc();
        if z < x {
            let slope = (1.0 - self.c - 2.0 * self.eps_bsc) / x;
            Ok(1.0 - self.c - slope * z)
        } else {
            Ok(1.0 - z)
        }
    }

    /// Mass `γ(z)` at position 0 in the optimal two-mass channel.
    pub fn gamma_of_z(&self, z: f64) -> Result<f64> {
        if !(z >= self.z_bsc && z < 1.0) {
            return Err(Error::DomainError {
                value: z,
                domain: "[z_bsc, 1)",
            });
        }
        let h = FixedPoint::solve(z, &self.cfg)?.entropy_kernel();
        let gamma = (1.0 - self.c - h) / (1.0 - h);
        Ok(gamma.clamp(0.0, 1.0 - self.c))
    }

    /// Pointwise minimum of Λ over the family.
    pub fn lambda_under(&self, z: f64) -> Result<f64> {
        check_unit(z)?;
        if z < self.z_bsc {
            return Ok(2.0 * self.eps_bsc);
        }
        if z == 1.0 {
            return Ok(0.0);
        }
        let fp = FixedPoint::solve(z, &self.cfg)?;
        let h = fp.entropy_kernel();
        let gamma = (1.0 - self.c - h) / (1.0 - h);
        Ok(gamma * (1.0 - z) + self.c * fp.complement() / (1.0 - h))
    }
}

pub fn lambda_bar(p: &ExtremalProfile, z: f64) -> Result<f64> {
    p.lambda_bar(z)
}

pub fn lambda_star(p: &ExtremalProfile, z: f64) -> Result<f64> {
    p.lambda_star(z)
}

pub fn lambda_under(p: &ExtremalProfile, z: f64) -> Result<f64> {
    p.lambda_under(z)
}

pub fn gamma_of_z(p: &ExtremalProfile, z: f64) -> Result<f64> {
    p.gamma_of_z(z)
}

/// The least degraded channel: mass `(1-c-2ε)/(1-2ε)` at 0 and `c/(1-2ε)`
/// at `1-2ε`. Its Λ function is `lambda_star`.
pub fn least_degraded_channel(c: f64) -> Result<DiscreteChannel> {
    let eps = epsilon_bsc(c)?;
    let x = 1.0 - 2.0 * eps;
    DiscreteChannel::new([((1.0 - c - 2.0 * eps) / x, 0.0), (c / x, x)])
}

/// Capacity `c² / (1 - 2ε)` of the least degraded channel.
pub fn capacity_star(c: f64) -> Result<f64> {
    let eps = epsilon_bsc(c)?;
    Ok(c * c / (1.0 - 2.0 * eps))
}

/// Direct minimisation of `γ(1-z) + (1-γ)(1-x̂)` over a uniform grid of
/// `x̂ ∈ [max(z, 1-2ε), 1)`, with `γ` fixed by the entropy constraint.
///
/// Shares no code with the fixed-point solution behind
/// [`ExtremalProfile::lambda_under`]; it serves as its oracle.
pub fn lambda_opt_bruteforce(c: f64, z: f64, grid_n: usize) -> Result<f64> {
    let p = ExtremalProfile::new(c)?;
    if !(z >= p.z_bsc && z < 1.0) {
        return Err(Error::DomainError {
            value: z,
            domain: "[z_bsc, 1)",
        });
    }
    if grid_n < 1000 {
        return Err(Error::InvalidParameter {
            name: "grid_n",
            value: grid_n as f64,
            reason: "grid needs at least 1000 points",
        });
    }
    let start = z.max(p.x_bsc());
    let mut best: Option<f64> = None;
    for k in 0..grid_n {
        let x = start + (1.0 - start) * k as f64 / grid_n as f64;
        let h = kernel_h_unchecked(x);
        if h >= 1.0 {
            continue;
        }
        let gamma = (1.0 - c - h) / (1.0 - h);
        if !(0.0..=1.0).contains(&gamma) {
            continue;
        }
        let value = gamma * (1.0 - z) + (1.0 - gamma) * (1.0 - x);
        best = Some(best.map_or(value, |b: f64| b.min(value)));
    }
    best.ok_or(Error::Infeasible)
}

/// Capacity of the least upgraded channel,
/// `1 - ∫_0^1 Λ_(z) / (ln 2 (1 - z²)) dz`.
///
/// The constant piece on `[0, z_bsc]` is integrated in closed form; the
/// smooth remainder on `(z_bsc, 1)` by open quadrature.
pub fn capacity_under(c: f64, cfg: &SolverConfig) -> Result<f64> {
    let p = ExtremalProfile::with_config(c, *cfg)?;
    let head = 2.0 * p.eps_bsc * p.z_bsc.atanh() / LN_2;
    let failure = RefCell::new(None);
    let tail = integrate_open(
        |z| match p.lambda_under(z) {
            Ok(v) => v / (LN_2 * (1.0 - z) * (1.0 + z)),
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        },
        p.z_bsc,
        1.0,
        cfg,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(1.0 - head - tail?)
}

/// One row of the capacity-gap table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityGapRow {
    pub c: f64,
    pub c_star: f64,
    pub c_under: f64,
    pub d_gap: f64,
    pub u_gap: f64,
}

pub fn gap_row(c: f64) -> Result<CapacityGapRow> {
    gap_row_with(c, &SolverConfig::default())
}

pub fn gap_row_with(c: f64, cfg: &SolverConfig) -> Result<CapacityGapRow> {
    let c_star = capacity_star(c)?;
    let c_under = capacity_under(c, cfg)?;
    Ok(CapacityGapRow {
        c,
        c_star,
        c_under,
        d_gap: c - c_star,
        u_gap: c_under - c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::{entropy_from_lambda, lambda_eval, lambda_profile};
    use approx::assert_abs_diff_eq;

    // 40-digit references from an independent arbitrary-precision computation
    const EPS_HALF: f64 = 0.110_027_864_438_359_55;
    const Z_BSC_HALF: f64 = 0.448_367_326_944_039_66;

    #[test]
    fn lambda_bar_inflection() {
        // (1-z)/h(z) changes curvature near z = 0.6075
        for k in 1..=9 {
            let p = ExtremalProfile::new(k as f64 / 10.0).unwrap();
            let d2 = |z: f64| {
                let s = 1e-3;
                p.lambda_bar(z - s).unwrap() - 2.0 * p.lambda_bar(z).unwrap() + p.lambda_bar(z + s).unwrap()
            };
            let x = p.x_bsc();
            let mut z = 0.001;
            while z < 0.6_f64.min(x - 0.001) {
                assert!(d2(z) > 0.0, "c={} z={z}", p.c);
                z += 0.001;
            }
            let mut z = 0.62;
            while z < x - 0.001 {
                assert!(d2(z) < 0.0, "c={} z={z}", p.c);
                z += 0.001;
            }
        }
    }

    #[test]
    fn epsilon_matches_grid_scan() {
        let mut best = (f64::INFINITY, 0.0);
        for k in 1..5_000_000u32 {
            let e = k as f64 * 1e-7;
            let d = (binary_entropy(e) - 0.5).abs();
            if d < best.0 {
                best = (d, e);
            }
        }
        let eps = epsilon_bsc(0.5).unwrap();
        assert_abs_diff_eq!(eps, best.1, epsilon = 1e-6);
        assert_abs_diff_eq!(eps, EPS_HALF, epsilon = 1e-15);
        assert_abs_diff_eq!(epsilon_bsc(0.188722).unwrap(), 0.25, epsilon = 1e-6);
        assert!(epsilon_bsc(0.0).is_err());
        assert!(epsilon_bsc(1.0).is_err());
    }

    #[test]
    fn profile_fields() {
        let p = ExtremalProfile::new(0.5).unwrap();
        assert_abs_diff_eq!(p.z_bsc, Z_BSC_HALF, epsilon = 1e-13);
        let e = p.eps_bsc;
        let closed = (4.0 * e * (1.0 - e)).log2() / (e / (1.0 - e)).log2();
        assert_abs_diff_eq!(p.z_bsc, closed, epsilon = 1e-13);
        assert!(p.z_bsc > 0.0 && p.z_bsc < p.x_bsc());
        assert!((1.0 - binary_entropy(e) - 0.5).abs() < 1e-10);
    }

    #[test]
    fn lambda_bar_examples() {
        let p = ExtremalProfile::new(0.5).unwrap();
        assert_abs_diff_eq!(p.lambda_bar(0.0).unwrap(), 0.5, epsilon = 1e-15);
        assert_eq!(p.lambda_bar(1.0).unwrap(), 0.0);
        let x = p.x_bsc();
        let left = (1.0 - p.c) * (1.0 - x) / kernel_h_unchecked(x);
        assert_abs_diff_eq!(left, 2.0 * p.eps_bsc, epsilon = 1e-12);
        assert_abs_diff_eq!(p.lambda_bar(x).unwrap(), 0.220_055_728_876_719_1, epsilon = 1e-12);
        assert!(p.lambda_bar(1.1).is_err());
    }

    #[test]
    fn lambda_star_examples() {
        let p = ExtremalProfile::new(0.5).unwrap();
        assert_abs_diff_eq!(p.lambda_star(0.0).unwrap(), 0.5, epsilon = 1e-15);
        assert_eq!(p.lambda_star(1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(p.lambda_star(0.5).unwrap(), 0.320_535_721_917_603_6, epsilon = 1e-12);
        let x = p.x_bsc();
        let below = p.lambda_star(x - 1e-12).unwrap();
        assert_abs_diff_eq!(below, p.lambda_star(x).unwrap(), epsilon = 1e-11);
        assert!(p.lambda_star(-0.1).is_err());
    }

    #[test]
    fn least_degraded_channel_matches_envelope() {
        let ch = least_degraded_channel(0.5).unwrap();
        let m = ch.masses();
        assert_abs_diff_eq!(m[0].alpha, 0.358_928_556_164_792_8, epsilon = 1e-12);
        assert_eq!(m[0].x, 0.0);
        assert_abs_diff_eq!(m[1].alpha, 0.641_071_443_835_207_2, epsilon = 1e-12);
        assert_abs_diff_eq!(m[1].x, 0.779_944_271_123_280_9, epsilon = 1e-12);
        let p = ExtremalProfile::new(0.5).unwrap();
        for k in 0..=1000 {
            let z = k as f64 / 1000.0;
            assert_abs_diff_eq!(lambda_eval(&ch, z).unwrap(), p.lambda_star(z).unwrap(), epsilon = 1e-12);
        }
        let eps = p.eps_bsc;
        let x = 1.0 - 2.0 * eps;
        assert_abs_diff_eq!(ch.entropy(), 1.0 - 0.25 / x, epsilon = 1e-12);
    }

    #[test]
    fn capacity_star_examples() {
        assert_abs_diff_eq!(capacity_star(0.5).unwrap(), 0.25 / 0.779_944_271_123_280_9, epsilon = 1e-12);
        assert_abs_diff_eq!(0.5 - capacity_star(0.5).unwrap(), 0.1795, epsilon = 5e-5);
        assert_abs_diff_eq!(0.1 - capacity_star(0.1).unwrap(), 0.0728, epsilon = 5e-5);
        assert_abs_diff_eq!(0.9 - capacity_star(0.9).unwrap(), 0.0684, epsilon = 5e-5);
        for c in [0.05, 0.3, 0.5, 0.77, 0.95] {
            let star = lambda_profile(&least_degraded_channel(c).unwrap());
            let h = entropy_from_lambda(&star).unwrap();
            assert_abs_diff_eq!(1.0 - h, capacity_star(c).unwrap(), epsilon = 1e-9);
        }
    }

    #[test]
    fn z_of_x_examples() {
        let x = 1.0 - 2.0 * EPS_HALF;
        assert_abs_diff_eq!(z_of_x(x).unwrap(), Z_BSC_HALF, epsilon = 1e-13);
        let direct = (0.5f64.log2() + 1.5f64.log2()) / (0.5f64.log2() - 1.5f64.log2());
        assert_abs_diff_eq!(z_of_x(0.5).unwrap(), direct, epsilon = 1e-15);
        assert_abs_diff_eq!(z_of_x(0.5).unwrap(), 0.261_859_507_142_914_9, epsilon = 1e-15);
        assert!(z_of_x(0.0).is_err());
        assert!(z_of_x(1.0).is_err());
        check_z_of_x_monotone().unwrap();
        // the two internal branches agree where they meet
        let s = -(0.5f64).log2();
        assert_abs_diff_eq!(z_of_log2_complement(s - 1e-12), z_of_log2_complement(s + 1e-12), epsilon = 1e-11);
    }

    #[test]
    fn x_of_z_examples() {
        assert_abs_diff_eq!(x_of_z(Z_BSC_HALF).unwrap(), 1.0 - 2.0 * EPS_HALF, epsilon = 1e-10);
        assert_abs_diff_eq!(x_of_z(0.261_859_507_142_914_9).unwrap(), 0.5, epsilon = 1e-10);
        assert_abs_diff_eq!(x_of_z(0.7).unwrap(), 0.979_106_660_333_584_1, epsilon = 1e-10);
        assert!(x_of_z(0.0).is_err());
        assert!(x_of_z(1.0).is_err());
        // close to 1 the complement underflows but stays finite in log form
        let fp = FixedPoint::solve(1.0 - 1e-6, &SolverConfig::default()).unwrap();
        assert_eq!(fp.position(), 1.0);
        assert!(fp.log2_complement() < -1.0e6);
    }

    #[test]
    fn gamma_examples() {
        let p = ExtremalProfile::new(0.5).unwrap();
        assert_abs_diff_eq!(p.gamma_of_z(p.z_bsc).unwrap(), 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(p.gamma_of_z(1.0 - 1e-6).unwrap(), 0.5, epsilon = 1e-10);
        let g = p.gamma_of_z(0.7).unwrap();
        assert!(g > 0.0 && g < 0.5);
        assert_abs_diff_eq!(g, 0.454_303_398_307_462_6, epsilon = 1e-10);
        assert!(p.gamma_of_z(p.z_bsc - 0.01).is_err());
        assert!(p.gamma_of_z(1.0).is_err());
    }

    #[test]
    fn lambda_under_examples() {
        let p = ExtremalProfile::new(0.5).unwrap();
        assert_abs_diff_eq!(p.lambda_under(0.0).unwrap(), 0.220_055_728_876_719_1, epsilon = 1e-12);
        assert_abs_diff_eq!(p.lambda_under(p.z_bsc).unwrap(), 2.0 * p.eps_bsc, epsilon = 1e-10);
        let left = p.lambda_under(p.z_bsc - 1e-13).unwrap();
        let right = p.lambda_under(p.z_bsc).unwrap();
        assert!((left - right).abs() < 1e-10);
        assert_eq!(p.lambda_under(1.0).unwrap(), 0.0);
        assert!(p.lambda_under(1.0 - 1e-8).unwrap() < 1e-6);
        assert_abs_diff_eq!(p.lambda_under(0.7).unwrap(), 0.147_692_443_946_209_8, epsilon = 1e-10);
        assert!(p.lambda_under(1.5).is_err());
    }

    #[test]
    fn bruteforce_oracle_agrees() {
        for (c, dz, fallback) in [(0.5, None, 0.7), (0.3, Some(0.01), 0.0), (0.7, None, 0.9)] {
            let p = ExtremalProfile::new(c).unwrap();
            let z = dz.map_or(fallback, |d| p.z_bsc + d);
            let oracle = lambda_opt_bruteforce(c, z, 100_000).unwrap();
            assert_abs_diff_eq!(oracle, p.lambda_under(z).unwrap(), epsilon = 1e-6);
            assert!(oracle >= p.lambda_under(z).unwrap() - 1e-12);
        }
        assert!(lambda_opt_bruteforce(0.5, 0.1, 100_000).is_err());
        assert!(lambda_opt_bruteforce(0.5, 0.7, 10).is_err());
    }

    #[test]
    fn bec_entropy_by_quadrature() {
        let cfg = SolverConfig::default();
        let c = 0.5;
        let v = integrate_open(|z| (1.0 - c) * (1.0 - z) / (LN_2 * (1.0 - z * z)), 0.0, 1.0, &cfg).unwrap();
        assert_abs_diff_eq!(v, 0.5, epsilon = 1e-9);
    }

    #[test]
    fn capacity_under_reference_values() {
        let cfg = SolverConfig::default();
        // high-precision references for u_gap
        for (c, u) in [
            (0.1, 0.068_590_383_159_4),
            (0.2, 0.100_952_027_307),
            (0.5, 0.124_323_558_484),
            (0.8, 0.076_156_412_286_5),
            (0.9, 0.044_580_697_079_7),
        ] {
            let cu = capacity_under(c, &cfg).unwrap();
            assert_abs_diff_eq!(cu - c, u, epsilon = 1e-9);
            assert!(cu > c && cu < 1.0);
        }
        let row = gap_row(0.4).unwrap();
        assert_abs_diff_eq!(row.d_gap, 0.1739, epsilon = 5e-5);
        assert_abs_diff_eq!(row.u_gap, 0.1257, epsilon = 5e-5);
        assert_eq!(row.d_gap, row.c - row.c_star);
        assert_eq!(row.u_gap, row.c_under - row.c);
        let row = gap_row(0.6).unwrap();
        assert_abs_diff_eq!(row.d_gap, 0.1721, epsilon = 5e-5);
        assert_abs_diff_eq!(row.u_gap, 0.1155, epsilon = 5e-5);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(100))]

            #[test]
            fn epsilon_inverts_binary_entropy(c in 1e-4f64..0.9999) {
                let e = epsilon_bsc(c).unwrap();
                prop_assert!(e > 0.0 && e < 0.5);
                prop_assert!((1.0 - binary_entropy(e) - c).abs() < 1e-10);
            }

            #[test]
            fn least_degraded_capacity_closed_form(c in 1e-3f64..0.999) {
                let ch = least_degraded_channel(c).unwrap();
                let e = epsilon_bsc(c).unwrap();
                prop_assert!((ch.capacity() - c * c / (1.0 - 2.0 * e)).abs() < 1e-12);
                prop_assert!((ch.capacity() - capacity_star(c).unwrap()).abs() < 1e-12);
            }

            #[test]
            fn fixed_point_residual(z in 1e-3f64..0.999) {
                let fp = FixedPoint::solve(z, &SolverConfig::default()).unwrap();
                // 1 + x = (1 - x)^((z-1)/(z+1)), evaluated through log2(1 - x)
                let rhs = ((z - 1.0) / (z + 1.0) * fp.log2_complement()).exp2();
                let x = fp.position();
                prop_assert!((x - (rhs - 1.0)).abs() < 1e-9, "z={} x={} rhs={}", z, x, rhs);
                if fp.complement() > 1e-6 {
                    prop_assert!((z_of_x(x).unwrap() - z).abs() < 1e-9);
                }
            }
        }
    }
}
