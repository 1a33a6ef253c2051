//! Minority-game payoff evaluation: exact expected payoffs in the
//! computational basis and exact averages over the randomized measurement
//! basis.
//!
//! The randomized average is computed on a uniform phi grid. Each rotated
//! amplitude is a trigonometric polynomial in phi of degree at most N, so
//! each outcome probability has degree at most 2N, and an M-point uniform
//! rectangle rule over one period integrates it exactly whenever M >= 2N+1.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hilbert::{apply_gate_inplace, logical_basis_unitary, MixedState, StateVector};

/// Per-player expected payoffs, each in [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffVector {
    per_player: Vec<f64>,
}

impl PayoffVector {
    pub fn zeros(n_players: usize) -> Self {
        PayoffVector { per_player: vec![0.0; n_players] }
    }

    pub fn per_player(&self) -> &[f64] {
        &self.per_player
    }

    pub fn n_players(&self) -> usize {
        self.per_player.len()
    }

    pub fn player(&self, k: usize) -> f64 {
        self.per_player[k - 1]
    }

    pub fn total(&self) -> f64 {
        self.per_player.iter().sum()
    }

    /// Arithmetic mean over the given 1-based player indices.
    pub fn mean_over(&self, players: &[usize]) -> f64 {
        players.iter().map(|k| self.player(*k)).sum::<f64>() / players.len() as f64
    }

    fn add_scaled(&mut self, other: &PayoffVector, w: f64) {
        for (a, b) in self.per_player.iter_mut().zip(&other.per_player) {
            *a += w * b;
        }
    }

    fn scale(&mut self, w: f64) {
        for a in &mut self.per_player {
            *a *= w;
        }
    }
}

/// Number of equally spaced phi samples used for the randomized average.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub points: usize,
    /// Permit point counts below the exactness threshold 2N+1.
    pub allow_inexact: bool,
}

impl QuadratureSpec {
    pub fn new(points: usize) -> Self {
        QuadratureSpec { points, allow_inexact: false }
    }

    /// Explicitly permits an inexact grid.
    pub fn inexact(points: usize) -> Self {
        QuadratureSpec { points, allow_inexact: true }
    }

    /// The default grid for an N-qubit state: 4N+2 points, double the
    /// exactness threshold.
    pub fn default_for(n_qubits: usize) -> Self {
        QuadratureSpec::new(4 * n_qubits + 2)
    }

    fn check(&self, n_qubits: usize) -> Result<()> {
        let needed = 2 * n_qubits + 1;
        if self.points < needed && !self.allow_inexact {
            return Err(Error::validation(format!(
                "{} quadrature points are below the exactness threshold {needed} for {n_qubits} qubits",
                self.points
            )));
        }
        Ok(())
    }
}

/// Scores an outcome bitstring: players whose bit value occurs strictly
/// fewer times than the other value score 1; balanced and unanimous
/// outcomes score 0 for everyone.
pub fn minority_payoffs(n_players: usize, outcome: usize) -> Vec<u8> {
    debug_assert!(n_players >= 2);
    let ones = (outcome & ((1usize << n_players) - 1)).count_ones() as usize;
    let zeros = n_players - ones;
    let mut scores = vec![0u8; n_players];
    if ones == zeros || ones == 0 || zeros == 0 {
        return scores;
    }
    let minority = if ones < zeros { 1u8 } else { 0u8 };
    for k in 1..=n_players {
        if StateVector::player_bit(n_players, outcome, k) == minority {
            scores[k - 1] = 1;
        }
    }
    scores
}

fn accumulate_payoffs(amps: &[Complex64], n: usize, weight: f64, acc: &mut [f64]) {
    for (b, amp) in amps.iter().enumerate() {
        let p = amp.norm_sqr();
        if p == 0.0 {
            continue;
        }
        let ones = b.count_ones() as usize;
        let zeros = n - ones;
        if ones == zeros || ones == 0 || zeros == 0 {
            continue;
        }
        let minority = if ones < zeros { 1 } else { 0 };
        for k in 1..=n {
            if StateVector::player_bit(n, b, k) as usize == minority {
                acc[k - 1] += weight * p;
            }
        }
    }
}

/// Expected payoff of every player for a measurement in the computational
/// basis: `payoff_k = sum_b p(b) * minority_payoffs(b)_k`.
pub fn expected_payoffs(state: &StateVector) -> PayoffVector {
    let n = state.n_qubits();
    let mut acc = vec![0.0; n];
    accumulate_payoffs(state.amplitudes(), n, 1.0, &mut acc);
    PayoffVector { per_player: acc }
}

fn payoffs_at_phi(state: &StateVector, phi: f64, scratch: &mut Vec<Complex64>, weight: f64, acc: &mut [f64]) {
    let n = state.n_qubits();
    scratch.clear();
    scratch.extend_from_slice(state.amplitudes());
    let u = logical_basis_unitary(phi).dagger();
    for player in 1..=n {
        apply_gate_inplace(scratch, n, player, &u);
    }
    accumulate_payoffs(scratch, n, weight, acc);
}

/// Expected payoffs averaged over the randomized measurement basis:
/// `(1/M) sum_j expected_payoffs(rotate(state, 2 pi j / M))`. With
/// `quad.points >= 2N+1` this equals the continuous uniform average exactly.
pub fn expected_payoffs_randomized(state: &StateVector, quad: &QuadratureSpec) -> Result<PayoffVector> {
    let n = state.n_qubits();
    quad.check(n)?;
    let m = quad.points;
    let mut acc = vec![0.0; n];
    let mut scratch = Vec::with_capacity(state.dim());
    for j in 0..m {
        let phi = 2.0 * PI * j as f64 / m as f64;
        payoffs_at_phi(state, phi, &mut scratch, 1.0, &mut acc);
    }
    let mut pv = PayoffVector { per_player: acc };
    pv.scale(1.0 / m as f64);
    Ok(pv)
}

/// Weight-averaged payoffs over the mixture's pure terms.
pub fn expected_payoffs_mixed(mix: &MixedState, randomized: bool, quad: &QuadratureSpec) -> Result<PayoffVector> {
    let n = mix.n_qubits();
    let mut out = PayoffVector::zeros(n);
    for (w, st) in mix.terms() {
        let pv = if randomized {
            expected_payoffs_randomized(st, quad)?
        } else {
            expected_payoffs(st)
        };
        out.add_scaled(&pv, *w);
    }
    Ok(out)
}

/// A Monte-Carlo estimate with its per-player standard errors.
#[derive(Debug, Clone)]
pub struct McEstimate {
    pub payoffs: PayoffVector,
    pub std_errors: Vec<f64>,
    pub samples: u64,
}

/// Independent oracle for the phi-average: draws phi uniformly on [0, 2pi)
/// with a seeded generator and returns the sample mean (and standard error)
/// of the per-phi expected payoffs. Deterministic for a fixed seed.
pub fn monte_carlo_randomized(mix: &MixedState, samples: u64, seed: u64) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::arg("at least one sample is required"));
    }
    let n = mix.n_qubits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = vec![0.0; n];
    let mut sum_sq = vec![0.0; n];
    let mut per_sample = vec![0.0; n];
    let mut scratch = Vec::new();
    for _ in 0..samples {
        let phi = rng.gen::<f64>() * 2.0 * PI;
        per_sample.iter_mut().for_each(|x| *x = 0.0);
        for (w, st) in mix.terms() {
            payoffs_at_phi(st, phi, &mut scratch, *w, &mut per_sample);
        }
        for k in 0..n {
            sum[k] += per_sample[k];
            sum_sq[k] += per_sample[k] * per_sample[k];
        }
    }
    let m = samples as f64;
    let mean: Vec<f64> = sum.iter().map(|s| s / m).collect();
    let std_errors = sum_sq
        .iter()
        .zip(&mean)
        .map(|(sq, mu)| {
            let var = (sq / m - mu * mu).max(0.0);
            (var / m).sqrt()
        })
        .collect();
    Ok(McEstimate { payoffs: PayoffVector { per_player: mean }, std_errors, samples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::rotate_measurement_basis;
    use crate::states::{ghz, mixed_balanced, w_star, w_state};
    use crate::moves::{ne_strategy, unitary_from_params};
    use crate::hilbert::apply_local_moves;
    use approx::assert_relative_eq;

    #[test]
    fn minority_rule_examples() {
        assert_eq!(minority_payoffs(4, 0b0111), vec![1, 0, 0, 0]);
        assert_eq!(minority_payoffs(4, 0b0011), vec![0, 0, 0, 0]);
        assert_eq!(minority_payoffs(5, 0b00111), vec![1, 1, 0, 0, 0]);
        assert_eq!(minority_payoffs(3, 0b000), vec![0, 0, 0]);
        assert_eq!(minority_payoffs(3, 0b111), vec![0, 0, 0]);
    }

    #[test]
    fn ghz_ne_payoffs() {
        let mv = unitary_from_params(&ne_strategy(4).unwrap());
        let st = apply_local_moves(&ghz(4).unwrap(), &[mv; 4]).unwrap();
        for p in expected_payoffs(&st).per_player() {
            assert_relative_eq!(*p, 0.25, epsilon = 1e-12);
        }

        let mv = unitary_from_params(&ne_strategy(6).unwrap());
        let st = apply_local_moves(&ghz(6).unwrap(), &[mv; 6]).unwrap();
        for p in expected_payoffs(&st).per_player() {
            assert_relative_eq!(*p, 5.0 / 16.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn w3_identity_payoffs() {
        let pv = expected_payoffs(&w_state(3, false).unwrap());
        for p in pv.per_player() {
            assert_relative_eq!(*p, 1.0 / 3.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn w_star_randomized_third_and_constant_in_phi() {
        let st = w_star(3).unwrap();
        let pv = expected_payoffs_randomized(&st, &QuadratureSpec::default_for(3)).unwrap();
        for p in pv.per_player() {
            assert_relative_eq!(*p, 1.0 / 3.0, epsilon = 1e-12);
        }
        for j in 0..101 {
            let phi = 2.0 * PI * j as f64 / 101.0;
            let pv = expected_payoffs(&rotate_measurement_basis(&st, phi));
            for p in pv.per_player() {
                assert_relative_eq!(*p, 1.0 / 3.0, epsilon = 1e-12);
            }
        }
    }

    /// The balanced mixture under the randomized basis comes out at 7/24
    /// per player: each per-term payoff is (1/3)(1 - sin^2 cos^2) whose
    /// uniform average is 1/3 - 1/24.
    #[test]
    fn mixed_balanced_randomized_payoff() {
        let mix = mixed_balanced(3).unwrap();
        let quad = QuadratureSpec::default_for(3);
        let pv = expected_payoffs_mixed(&mix, true, &quad).unwrap();
        for p in pv.per_player() {
            assert_relative_eq!(*p, 7.0 / 24.0, epsilon = 1e-12);
        }
        let pv = expected_payoffs_mixed(&mix, false, &quad).unwrap();
        for p in pv.per_player() {
            assert_relative_eq!(*p, 1.0 / 3.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn point_mixture_matches_pure_evaluation() {
        let st = w_state(3, false).unwrap();
        let mix = MixedState::pure(st.clone());
        let quad = QuadratureSpec::default_for(3);
        let a = expected_payoffs_mixed(&mix, true, &quad).unwrap();
        let b = expected_payoffs_randomized(&st, &quad).unwrap();
        for (x, y) in a.per_player().iter().zip(b.per_player()) {
            assert_relative_eq!(x, y, epsilon = 1e-15);
        }
    }

    #[test]
    fn quadrature_threshold_enforced() {
        let st = ghz(4).unwrap();
        assert!(expected_payoffs_randomized(&st, &QuadratureSpec::new(8)).is_err());
        assert!(expected_payoffs_randomized(&st, &QuadratureSpec::inexact(8)).is_ok());
        assert!(expected_payoffs_randomized(&st, &QuadratureSpec::new(9)).is_ok());
    }

    #[test]
    fn single_sample_equals_payoff_at_drawn_phi() {
        let mix = MixedState::pure(w_state(3, false).unwrap());
        let est = monte_carlo_randomized(&mix, 1, 12345).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12345);
        let phi = rng.gen::<f64>() * 2.0 * PI;
        let direct = expected_payoffs(&rotate_measurement_basis(mix.terms()[0].1.clone().into(), phi));
        fn conv(s: &StateVector) -> &StateVector { s }
        let _ = conv; // silence unused helper pattern
        for (a, b) in est.payoffs.per_player().iter().zip(direct.per_player()) {
            assert_relative_eq!(a, b, epsilon = 1e-15);
        }
    }

    #[test]
    fn monte_carlo_agrees_with_quadrature() {
        let mix = mixed_balanced(3).unwrap();
        let est = monte_carlo_randomized(&mix, 200_000, 7).unwrap();
        let exact = expected_payoffs_mixed(&mix, true, &QuadratureSpec::default_for(3)).unwrap();
        for k in 0..3 {
            let d = (est.payoffs.per_player()[k] - exact.per_player()[k]).abs();
            assert!(d <= 3.0 * est.std_errors[k].max(1e-9), "player {k}: diff {d}");
        }
    }

    #[test]
    fn monte_carlo_reproducible() {
        let mix = MixedState::pure(ghz(3).unwrap());
        let a = monte_carlo_randomized(&mix, 1000, 42).unwrap();
        let b = monte_carlo_randomized(&mix, 1000, 42).unwrap();
        assert_eq!(a.payoffs.per_player(), b.payoffs.per_player());
    }
}
