//! Strategy parameterization, named equilibrium strategies, and the
//! focal coalition angles for GHZ blocks.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hilbert::LocalUnitary;

/// A rational multiple of pi, kept exact until matrix construction so that
/// angle comparisons against tabulated values do not drift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiFraction {
    pub num: i64,
    pub den: i64,
}

impl PiFraction {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0);
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        let sign = if den < 0 { -1 } else { 1 };
        PiFraction { num: sign * num / g, den: sign * den / g }
    }

    pub fn radians(&self) -> f64 {
        self.num as f64 * PI / self.den as f64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a.max(1) } else { gcd(b, a % b) }
}

impl std::fmt::Display for PiFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (n, 1) => write!(f, "{n}*pi"),
            (1, d) => write!(f, "pi/{d}"),
            (n, d) => write!(f, "{n}*pi/{d}"),
        }
    }
}

/// The (theta, alpha, beta) triple of the single-qubit strategy
/// parameterization, with theta in [0, pi] and alpha, beta in [-pi, pi].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyParams {
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl StrategyParams {
    pub fn new(theta: f64, alpha: f64, beta: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::arg(format!("theta {theta} outside [0, pi]")));
        }
        if !(-PI..=PI).contains(&alpha) {
            return Err(Error::arg(format!("alpha {alpha} outside [-pi, pi]")));
        }
        if !(-PI..=PI).contains(&beta) {
            return Err(Error::arg(format!("beta {beta} outside [-pi, pi]")));
        }
        Ok(StrategyParams { theta, alpha, beta })
    }

    pub fn identity() -> Self {
        StrategyParams { theta: 0.0, alpha: 0.0, beta: 0.0 }
    }
}

/// Parameters of the symmetric Nash-equilibrium family on an N-player GHZ
/// game: delta = (4 n + 1) pi / (4 N) for branch index n, with eta the
/// common phase offset (the focal choice is branch 0, eta = 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeFamilyParams {
    pub n_players: usize,
    pub branch_index: i64,
    pub eta: f64,
}

impl NeFamilyParams {
    pub fn delta(&self) -> PiFraction {
        PiFraction::new(4 * self.branch_index + 1, 4 * self.n_players as i64)
    }

    pub fn strategy(&self) -> Result<StrategyParams> {
        let d = self.delta().radians();
        StrategyParams::new(PI / 2.0, self.eta - d, self.eta + d)
    }
}

/// The move matrix
/// `[[e^{i a} cos(t/2), i e^{i b} sin(t/2)], [i e^{-i b} sin(t/2), e^{-i a} cos(t/2)]]`.
pub fn unitary_from_params(p: &StrategyParams) -> LocalUnitary {
    let (c, s) = ((p.theta / 2.0).cos(), (p.theta / 2.0).sin());
    let i = Complex64::new(0.0, 1.0);
    LocalUnitary::new(
        Complex64::from_polar(c, p.alpha),
        i * Complex64::from_polar(s, p.beta),
        i * Complex64::from_polar(s, -p.beta),
        Complex64::from_polar(c, -p.alpha),
    )
}

/// The focal-point Nash equilibrium strategy `M(pi/2, -pi/(4N), pi/(4N))`
/// for an even number of players sharing a GHZ state.
pub fn ne_strategy(n_players: usize) -> Result<StrategyParams> {
    if n_players < 4 || n_players % 2 != 0 {
        return Err(Error::unsupported(format!(
            "the GHZ-game equilibrium needs an even player count >= 4, got {n_players}; \
             odd-player GHZ games offer no improvement over the classical game"
        )));
    }
    let d = PiFraction::new(1, 4 * n_players as i64).radians();
    StrategyParams::new(PI / 2.0, -d, d)
}

/// The focal coalition angle for an n-qubit GHZ block: `3 pi/(4n)` when
/// n is divisible by 4 and `pi/(4n)` when n mod 4 = 2, kept exact as a
/// rational multiple of pi.
pub fn coalition_delta(n: usize) -> Result<PiFraction> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::unsupported(format!(
            "no symmetric strategy profile collapses an odd GHZ block (n = {n})"
        )));
    }
    Ok(if n % 4 == 0 {
        PiFraction::new(3, 4 * n as i64)
    } else {
        PiFraction::new(1, 4 * n as i64)
    })
}
