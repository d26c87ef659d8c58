//! Discrete BMS channels in the |D| domain.
//!
//! A channel is a finite list of point masses `alpha_i` at positions
//! `x_i = |tanh(L/2)|` in `[0, 1]`. Position 0 carries no information
//! (an erasure), position 1 is a perfectly reliable output.

use serde::Deserialize;

use crate::error::{Error, Result};

/// Positions closer than this are merged on construction.
pub const POSITION_MERGE_TOL: f64 = 1e-12;
/// Masses smaller than this are dropped on construction.
pub const NEGLIGIBLE_MASS: f64 = 1e-15;
/// Accepted deviation of the raw mass sum from 1.
pub const MASS_SUM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct MassPoint {
    pub alpha: f64,
    pub x: f64,
}

/// A discrete BMS channel: point masses with strictly increasing positions
/// and total mass exactly 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteChannel {
    masses: Vec<MassPoint>,
}

impl DiscreteChannel {
    /// Builds a channel from `(alpha, x)` pairs.
    ///
    /// Pairs are sorted by position, positions within
    /// [`POSITION_MERGE_TOL`] are merged, masses below [`NEGLIGIBLE_MASS`]
    /// are dropped and the result is renormalised to sum to 1.
    pub fn new<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let mut points = Vec::new();
        let mut sum = 0.0;
        for (alpha, x) in pairs {
            if !(0.0..=1.0).contains(&alpha) {
                return Err(Error::InvalidMass { alpha });
            }
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::InvalidPosition { x });
            }
            sum += alpha;
            points.push(MassPoint { alpha, x });
        }
        if points.is_empty() {
            return Err(Error::EmptyChannel);
        }
        if (sum - 1.0).abs() >= MASS_SUM_TOL {
            return Err(Error::MassSum { sum });
        }

        points.sort_by(|a, b| a.x.total_cmp(&b.x));
        let mut merged: Vec<MassPoint> = Vec::with_capacity(points.len());
        for p in points {
            match merged.last_mut() {
                Some(last) if p.x - last.x < POSITION_MERGE_TOL => last.alpha += p.alpha,
                _ => merged.push(p),
            }
        }
        merged.retain(|p| p.alpha >= NEGLIGIBLE_MASS);
        if merged.is_empty() {
            return Err(Error::EmptyChannel);
        }
        let total: f64 = merged.iter().map(|p| p.alpha).sum();
        for p in &mut merged {
            p.alpha /= total;
        }
        Ok(DiscreteChannel { masses: merged })
    }

    /// Binary symmetric channel: a single mass at `1 - 2 epsilon`.
    pub fn bsc(epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon <= 0.5) {
            return Err(Error::InvalidParameter {
                name: "epsilon",
                value: epsilon,
                reason: "crossover probability must lie in (0, 0.5]",
            });
        }
        Ok(DiscreteChannel {
            masses: vec![MassPoint {
                alpha: 1.0,
                x: 1.0 - 2.0 * epsilon,
            }],
        })
    }

    /// Binary erasure channel: mass `erasure` at 0 and the rest at 1.
    pub fn bec(erasure: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&erasure) {
            return Err(Error::InvalidParameter {
                name: "erasure",
                value: erasure,
                reason: "erasure probability must lie in [0, 1]",
            });
        }
        DiscreteChannel::new([(erasure, 0.0), (1.0 - erasure, 1.0)])
    }

    pub fn masses(&self) -> &[MassPoint] {
        &self.masses
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masses.is_empty()
    }

    /// Largest mass position `x_n`.
    pub fn max_position(&self) -> f64 {
        self.masses.last().map_or(0.0, |p| p.x)
    }

    /// `sum alpha_i h(x_i)`, the conditional entropy in bits.
    pub fn entropy(&self) -> f64 {
        self.masses.iter().map(|p| p.alpha * kernel_h_unchecked(p.x)).sum()
    }

    pub fn capacity(&self) -> f64 {
        1.0 - self.entropy()
    }

    pub fn bhattacharyya(&self) -> f64 {
        self.masses
            .iter()
            .map(|p| p.alpha * ((1.0 - p.x) * (1.0 + p.x)).sqrt())
            .sum()
    }

    /// Bit error probability of the MAP decision, `sum alpha_i (1 - x_i) / 2`.
    pub fn error_probability(&self) -> f64 {
        self.masses.iter().map(|p| p.alpha * (1.0 - p.x)).sum::<f64>() / 2.0
    }

    /// Serialises to `{"masses": [{"alpha": .., "x": ..}, ...]}` with 17
    /// significant digits per number.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self
            .masses
            .iter()
            .map(|p| {
                format!(
                    "{{\"alpha\": {}, \"x\": {}}}",
                    format_sig17(p.alpha),
                    format_sig17(p.x)
                )
            })
            .collect();
        format!("{{\"masses\": [{}]}}", body.join(", "))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ChannelFile = serde_json::from_str(text)
            .map_err(|e| Error::InvalidProfile(format!("channel JSON: {e}")))?;
        DiscreteChannel::new(file.masses.into_iter().map(|p| (p.alpha, p.x)))
    }
}

#[derive(Deserialize)]
struct ChannelFile {
    masses: Vec<MassPoint>,
}

/// Formats `v` in positional notation with 17 significant digits.
pub fn format_sig17(v: f64) -> String {
    if v == 0.0 {
        return "0.0".to_string();
    }
    let sci = format!("{:.16e}", v.abs());
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let sign = if v < 0.0 { "-" } else { "" };
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    } else {
        let int_len = exp as usize + 1;
        if int_len >= digits.len() {
            format!("{}{}.0", digits, "0".repeat(int_len - digits.len()))
        } else {
            format!("{}.{}", &digits[..int_len], &digits[int_len..])
        }
    };
    format!("{sign}{body}")
}

/// Binary entropy `h2(p)` in bits, with `h2(0) = h2(1) = 0`.
pub fn binary_entropy(p: f64) -> f64 {
    if p <= 0.0 || p >= 1.0 {
        return 0.0;
    }
    -(p * p.log2() + (1.0 - p) * (1.0 - p).log2())
}

/// Entropy kernel in the |D| domain, `h(x) = h2((1 - x) / 2)`.
pub fn kernel_h(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::DomainError {
            value: x,
            domain: "[0, 1]",
        });
    }
    Ok(kernel_h_unchecked(x))
}

pub(crate) fn kernel_h_unchecked(x: f64) -> f64 {
    if x <= 0.0 {
        return 1.0;
    }
    binary_entropy((1.0 - x) / 2.0)
}

/// `h(1 - t)` for a mass at distance `t` below 1, given `log2_t = log2(t)`.
///
/// Stays accurate when `t` is far below the resolution of `1 - t`, and
/// returns the exact limit 0 once `t` underflows.
pub(crate) fn kernel_h_complement(t: f64, log2_t: f64) -> f64 {
    if t >= 1e-3 {
        return kernel_h_unchecked(1.0 - t);
    }
    if t <= 0.0 {
        return 0.0;
    }
    let p = 0.5 * t;
    // -p log2 p - (1 - p) log2(1 - p), with log2 p = log2_t - 1
    -p * (log2_t - 1.0) - (1.0 - p) * (-p).ln_1p() / std::f64::consts::LN_2
}
