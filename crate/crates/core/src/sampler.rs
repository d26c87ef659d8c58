//! Random discrete channels with capacity exactly `c`.
//!
//! Positions are drawn uniformly and the masses are solved from the
//! entropy constraint, so every sample has entropy `1 - c` up to rounding.
//! Draws are reproducible: the generator is ChaCha20 seeded from the
//! 64-bit `seed` through `SeedableRng::seed_from_u64`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::channel::{kernel_h_unchecked, DiscreteChannel, NEGLIGIBLE_MASS};
use crate::error::{Error, Result};
use crate::extremal::epsilon_bsc;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub capacity: f64,
    /// 2 or 3.
    pub n_masses: usize,
    pub seed: u64,
    pub max_rejects: usize,
}

impl SamplerConfig {
    pub fn new(capacity: f64, n_masses: usize, seed: u64) -> Self {
        SamplerConfig {
            capacity,
            n_masses,
            seed,
            max_rejects: 10_000,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.capacity > 0.0 && self.capacity < 1.0) {
            return Err(Error::InvalidParameter {
                name: "capacity",
                value: self.capacity,
                reason: "capacity must lie in (0, 1)",
            });
        }
        if !(self.n_masses == 2 || self.n_masses == 3) {
            return Err(Error::InvalidParameter {
                name: "n_masses",
                value: self.n_masses as f64,
                reason: "only 2 or 3 masses are supported",
            });
        }
        if self.max_rejects == 0 {
            return Err(Error::InvalidParameter {
                name: "max_rejects",
                value: 0.0,
                reason: "rejection cap must be positive",
            });
        }
        Ok(())
    }
}

/// Stateful generator of channels for one [`SamplerConfig`].
#[derive(Debug, Clone)]
pub struct Sampler {
    cfg: SamplerConfig,
    x_bsc: f64,
    rng: ChaCha20Rng,
}

impl Sampler {
    pub fn new(cfg: SamplerConfig) -> Result<Self> {
        cfg.validate()?;
        let x_bsc = 1.0 - 2.0 * epsilon_bsc(cfg.capacity)?;
        Ok(Sampler {
            cfg,
            x_bsc,
            rng: ChaCha20Rng::seed_from_u64(cfg.seed),
        })
    }

    pub fn next_channel(&mut self) -> Result<DiscreteChannel> {
        sample_with(&self.cfg, self.x_bsc, &mut self.rng)
    }
}

impl Iterator for Sampler {
    type Item = Result<DiscreteChannel>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.next_channel())
    }
}

/// Draws one channel from `rng`.
pub fn sample_channel<R: Rng + ?Sized>(cfg: &SamplerConfig, rng: &mut R) -> Result<DiscreteChannel> {
    cfg.validate()?;
    let x_bsc = 1.0 - 2.0 * epsilon_bsc(cfg.capacity)?;
    sample_with(cfg, x_bsc, rng)
}

/// The first `count` channels of the stream seeded by `cfg.seed`.
pub fn sample_batch(cfg: &SamplerConfig, count: usize) -> Result<Vec<DiscreteChannel>> {
    Sampler::new(*cfg)?.take(count).collect()
}

fn sample_with<R: Rng + ?Sized>(cfg: &SamplerConfig, x_bsc: f64, rng: &mut R) -> Result<DiscreteChannel> {
    for _ in 0..cfg.max_rejects {
        let draw = match cfg.n_masses {
            2 => draw_two(cfg.capacity, x_bsc, rng),
            _ => draw_three(cfg.capacity, x_bsc, rng),
        };
        if let Some(pairs) = draw {
            if pairs.iter().any(|&(a, _)| a < NEGLIGIBLE_MASS) {
                continue;
            }
            let ch = DiscreteChannel::new(pairs)?;
            if ch.len() == cfg.n_masses {
                return Ok(ch);
            }
        }
    }
    Err(Error::RejectionExhausted {
        attempts: cfg.max_rejects,
    })
}

/// `x1` uniform on `[0, x_bsc)`, `x2` uniform on `(x_bsc, 1]`; then
/// `h(x1) > 1 - c > h(x2)` and the mass split is always feasible.
fn draw_two<R: Rng + ?Sized>(c: f64, x_bsc: f64, rng: &mut R) -> Option<Vec<(f64, f64)>> {
    let x1 = x_bsc * rng.random::<f64>();
    let x2 = 1.0 - (1.0 - x_bsc) * rng.random::<f64>();
    let (h1, h2) = (kernel_h_unchecked(x1), kernel_h_unchecked(x2));
    if !(h1 > h2) {
        return None;
    }
    let a1 = (1.0 - c - h2) / (h1 - h2);
    if !(0.0..=1.0).contains(&a1) {
        return None;
    }
    Some(vec![(a1, x1), (1.0 - a1, x2)])
}

/// Three sorted uniform positions with the largest beyond `x_bsc`, a
/// uniform middle mass, and the outer masses solved from
/// `a1 + a3 = 1 - a2`, `a1 h(x1) + a3 h(x3) = 1 - c - a2 h(x2)`.
fn draw_three<R: Rng + ?Sized>(c: f64, x_bsc: f64, rng: &mut R) -> Option<Vec<(f64, f64)>> {
    let mut xs = [rng.random::<f64>(), rng.random::<f64>(), rng.random::<f64>()];
    xs.sort_by(f64::total_cmp);
    let a2 = rng.random::<f64>();
    if !(xs[2] > x_bsc) {
        return None;
    }
    let h = xs.map(kernel_h_unchecked);
    let det = h[0] - h[2];
    if det.abs() < 1e-12 {
        return None;
    }
    let a1 = (1.0 - c - a2 * h[1] - (1.0 - a2) * h[2]) / det;
    let a3 = 1.0 - a2 - a1;
    if !(0.0..=1.0).contains(&a1) || !(0.0..=1.0).contains(&a3) {
        return None;
    }
    Some(vec![(a1, xs[0]), (a2, xs[1]), (a3, xs[2])])
}
