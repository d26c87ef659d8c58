use thiserror::Error;

/// Errors raised by channel construction, root finding, quadrature and sampling.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("{what} did not converge after {limit} steps")]
    NoConvergence { what: &'static str, limit: usize },
    #[error("integrand is not finite at z = {at}")]
    NonFinite { at: f64 },
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("mass {alpha} outside [0, 1]")]
    InvalidMass { alpha: f64 },
    #[error("position {x} outside [0, 1]")]
    InvalidPosition { x: f64 },
    #[error("masses sum to {sum}, expected 1")]
    MassSum { sum: f64 },
    #[error("channel has no mass points")]
    EmptyChannel,
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("argument {value} outside the domain {domain}")]
    DomainError { value: f64, domain: &'static str },

    #[error("invalid piecewise-linear profile: {0}")]
    InvalidProfile(String),
    #[error("profile does not vanish at z = 1 (value {value})")]
    NonZeroTail { value: f64 },

    #[error("no grid point admits a feasible mass split")]
    Infeasible,
    #[error("sampler rejected {attempts} consecutive draws")]
    RejectionExhausted { attempts: usize },
    #[error("z(x) failed the monotonicity check near x = {at}")]
    NonMonotone { at: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short stable identifier, used on the CLI diagnostic line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NoBracket { .. } => "no_bracket",
            Error::NoConvergence { .. } => "no_convergence",
            Error::NonFinite { .. } => "non_finite",
            Error::InvalidConfig(_) => "invalid_config",
            Error::InvalidMass { .. } => "invalid_mass",
            Error::InvalidPosition { .. } => "invalid_position",
            Error::MassSum { .. } => "mass_sum",
            Error::EmptyChannel => "empty_channel",
            Error::InvalidParameter { .. } => "invalid_parameter",
            Error::DomainError { .. } => "domain_error",
            Error::InvalidProfile(_) => "invalid_profile",
            Error::NonZeroTail { .. } => "non_zero_tail",
            Error::Infeasible => "infeasible",
            Error::RejectionExhausted { .. } => "rejection_exhausted",
            Error::NonMonotone { .. } => "non_monotone",
        }
    }
}
