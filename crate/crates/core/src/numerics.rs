//! Scalar root finding and open-interval quadrature.
//!
//! Both routines are deterministic and allocation free apart from the
//! Gauss–Legendre table, which is built once per process.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Tolerances and iteration caps shared by every numeric solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Absolute width of the final bracket returned by [`bisect`].
    pub root_tol: f64,
    /// Absolute difference between successive quadrature estimates.
    pub quad_tol: f64,
    pub max_iter: usize,
    pub max_panels: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            root_tol: 1e-12,
            quad_tol: 1e-10,
            max_iter: 200,
            max_panels: 1 << 16,
        }
    }
}

impl SolverConfig {
    pub fn new(root_tol: f64, quad_tol: f64, max_iter: usize, max_panels: usize) -> Result<Self> {
        let cfg = SolverConfig {
            root_tol,
            quad_tol,
            max_iter,
            max_panels,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_quad_tol(mut self, quad_tol: f64) -> Result<Self> {
        self.quad_tol = quad_tol;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.root_tol > 0.0 && self.root_tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "root_tol must be positive, got {}",
                self.root_tol
            )));
        }
        if !(self.quad_tol > 0.0 && self.quad_tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "quad_tol must be positive, got {}",
                self.quad_tol
            )));
        }
        if self.max_iter == 0 || self.max_panels == 0 {
            return Err(Error::InvalidConfig(
                "iteration and panel caps must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Finds a root of a continuous, strictly monotone `f` on `[lo, hi]`.
///
/// The bracket is halved until its width is at most `cfg.root_tol`; the
/// midpoint of the final bracket is returned. An endpoint that evaluates to
/// exactly zero is returned immediately.
pub fn bisect<F>(f: F, lo: f64, hi: f64, cfg: &SolverConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(lo < hi) {
        return Err(Error::DomainError {
            value: lo,
            domain: "bracket with lo < hi",
        });
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo * f_hi < 0.0) {
        return Err(Error::NoBracket { lo, hi, f_lo, f_hi });
    }

    let rising = f_lo < 0.0;
    let (mut a, mut b) = (lo, hi);
    for _ in 0..cfg.max_iter {
        if b - a <= cfg.root_tol {
            return Ok(0.5 * (a + b));
        }
        let mid = a + 0.5 * (b - a);
        // bracket can no longer shrink in floating point
        if mid <= a || mid >= b {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.is_nan() {
            return Err(Error::NonFinite { at: mid });
        }
        if (fm < 0.0) == rising {
            a = mid;
        } else {
            b = mid;
        }
    }
    if b - a <= cfg.root_tol {
        Ok(0.5 * (a + b))
    } else {
        Err(Error::NoConvergence {
            what: "bisection",
            limit: cfg.max_iter,
        })
    }
}

const GL_ORDER: usize = 32;

/// Nodes and weights of the 32-point Gauss–Legendre rule on [-1, 1].
fn gauss_legendre() -> &'static [(f64, f64); GL_ORDER] {
    static TABLE: OnceLock<[(f64, f64); GL_ORDER]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = GL_ORDER;
        let mut table = [(0.0, 0.0); GL_ORDER];
        for i in 0..n / 2 {
            // Tricomi initial guess, then Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            table[i] = (-x, w);
            table[n - 1 - i] = (x, w);
        }
        table
    })
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    let d = n * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn composite<F>(f: &F, a: f64, b: f64, panels: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let rule = gauss_legendre();
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let left = a + width * p as f64;
        let half = 0.5 * width;
        let centre = left + half;
        let mut acc = 0.0;
        for &(node, weight) in rule.iter() {
            let z = centre + half * node;
            let v = f(z);
            if !v.is_finite() {
                return Err(Error::NonFinite { at: z });
            }
            acc += weight * v;
        }
        total += half * acc;
    }
    Ok(total)
}

/// Integrates `f` over `(a, b)` without evaluating either endpoint.
///
/// Composite 32-point Gauss–Legendre panels are doubled until two
/// successive estimates differ by less than `cfg.quad_tol`.
pub fn integrate_open<F>(f: F, a: f64, b: f64, cfg: &SolverConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(a < b) {
        return Err(Error::DomainError {
            value: a,
            domain: "interval with a < b",
        });
    }
    let mut panels = 1;
    let mut previous = composite(&f, a, b, panels)?;
    while panels < cfg.max_panels {
        panels = (panels * 2).min(cfg.max_panels);
        let current = composite(&f, a, b, panels)?;
        if (current - previous).abs() < cfg.quad_tol {
            return Ok(current);
        }
        previous = current;
    }
    Err(Error::NoConvergence {
        what: "quadrature",
        limit: cfg.max_panels,
    })
}
