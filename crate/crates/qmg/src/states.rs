//! Library of initial states: GHZ, W and its variants, roots-of-unity
//! W*, balanced-phase superpositions with the zero-column-sum property,
//! and the unentangled balanced mixture.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hilbert::{MixedState, StateVector};
use crate::{ASSERT_TOL, MAX_QUBITS};

fn check_qubits(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::arg(format!("need at least {min} qubits, got {n}")));
    }
    if n > MAX_QUBITS {
        return Err(Error::arg(format!("{n} qubits exceeds the cap of {MAX_QUBITS}")));
    }
    Ok(())
}

/// GHZ state `(|0...0> + i|1...1>)/sqrt(2)`.
pub fn ghz(n: usize) -> Result<StateVector> {
    check_qubits(n, 1)?;
    let dim = 1usize << n;
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    let r = 0.5f64.sqrt();
    amps[0] = Complex64::new(r, 0.0);
    amps[dim - 1] = Complex64::new(0.0, r);
    Ok(StateVector::from_amplitudes(amps).expect("ghz is normalized"))
}

/// Indices of all weight-`m` bitstrings on `n` bits in ascending order.
pub(crate) fn weight_class(n: usize, m: usize) -> Vec<usize> {
    (0..1usize << n).filter(|i| i.count_ones() as usize == m).collect()
}

/// W state: equal amplitudes on all weight-1 strings. With `conjugate`,
/// the bit complement (weight n-1 strings) instead.
pub fn w_state(n: usize, conjugate: bool) -> Result<StateVector> {
    check_qubits(n, 2)?;
    let weight = if conjugate { n - 1 } else { 1 };
    let idxs = weight_class(n, weight);
    let amp = Complex64::new(1.0 / (idxs.len() as f64).sqrt(), 0.0);
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    for i in idxs {
        amps[i] = amp;
    }
    Ok(StateVector::from_amplitudes(amps).expect("w state is normalized"))
}

/// W* state: the weight-1 superposition whose amplitudes are the n-th roots
/// of unity, placed so that the printed three-player state and the
/// two-player singlet come out exactly: the string whose single 1 sits at
/// the k-th position from the right carries phase `exp(2(k-1)pi i/n)`.
pub fn w_star(n: usize) -> Result<StateVector> {
    check_qubits(n, 2)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    let r = 1.0 / (n as f64).sqrt();
    for k in 1..=n {
        let phase = 2.0 * (k as f64 - 1.0) * PI / n as f64;
        amps[1usize << (k - 1)] = Complex64::from_polar(r, phase);
    }
    Ok(StateVector::from_amplitudes(amps).expect("w* is normalized"))
}

/// How phases are assigned to the weight-m basis strings.
#[derive(Debug, Clone, PartialEq)]
pub enum PhaseRule {
    /// `exp(2 j pi i / c)` for j = 0..c-1 over the strings in ascending
    /// lexicographic order, c = C(n, m).
    RootsOfUnity,
    /// `(-1)^j` in the same order; requires C(n, m) even.
    AlternatingSign,
    /// Explicit coefficients over the weight class, given in ascending
    /// lexicographic order. Must be normalized and sum to zero.
    Explicit(Vec<Complex64>),
}

/// Specification of a balanced-phase state: a superposition over the
/// weight-m class of n qubits whose coefficients sum to zero in the complex
/// plane (the closed-polygon condition), guaranteeing zero probability of
/// all-equal outcomes in any rotated product basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BalancedPhaseSpec {
    pub n_qubits: usize,
    pub ones_count: usize,
    pub phase_rule: PhaseRule,
}

/// Builds the state described by `spec`.
pub fn balanced_phase_state(spec: &BalancedPhaseSpec) -> Result<StateVector> {
    let (n, m) = (spec.n_qubits, spec.ones_count);
    check_qubits(n, 1)?;
    if m == 0 || m >= n {
        return Err(Error::arg(format!(
            "ones count {m} must satisfy 0 < m < n = {n} for a closed polygon"
        )));
    }
    let idxs = weight_class(n, m);
    let c = idxs.len();
    let coeffs: Vec<Complex64> = match &spec.phase_rule {
        PhaseRule::RootsOfUnity => {
            let r = 1.0 / (c as f64).sqrt();
            (0..c)
                .map(|j| Complex64::from_polar(r, 2.0 * PI * j as f64 / c as f64))
                .collect()
        }
        PhaseRule::AlternatingSign => {
            if c % 2 != 0 {
                return Err(Error::arg(format!(
                    "alternating signs need an even class size, C({n},{m}) = {c}"
                )));
            }
            let r = 1.0 / (c as f64).sqrt();
            (0..c)
                .map(|j| Complex64::new(if j % 2 == 0 { r } else { -r }, 0.0))
                .collect()
        }
        PhaseRule::Explicit(list) => {
            if list.len() != c {
                return Err(Error::arg(format!(
                    "explicit coefficient list has {} entries, class size is {c}",
                    list.len()
                )));
            }
            let total: Complex64 = list.iter().sum();
            if total.norm() > ASSERT_TOL {
                return Err(Error::validation(format!(
                    "coefficients sum to {total}, violating the closed-polygon condition"
                )));
            }
            list.clone()
        }
    };
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    for (j, idx) in idxs.iter().enumerate() {
        amps[*idx] = coeffs[j];
    }
    StateVector::from_amplitudes(amps)
}

/// Uniform mixture over all weight-1 computational basis states; for n = 3
/// this is exactly the unentangled counterpart of the W state.
pub fn mixed_balanced(n: usize) -> Result<MixedState> {
    check_qubits(n, 2)?;
    let w = 1.0 / n as f64;
    let terms = (1..=n)
        .map(|k| Ok((w, StateVector::basis(n, 1usize << (n - k))?)))
        .collect::<Result<Vec<_>>>()?;
    MixedState::new(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{equal_up_to_global_phase, outcome_probabilities, rotate_measurement_basis};
    use approx::assert_relative_eq;

    #[test]
    fn ghz_amplitudes() {
        let st = ghz(2).unwrap();
        let r = 0.5f64.sqrt();
        assert_relative_eq!(st.amplitudes()[0].re, r, epsilon = 1e-15);
        assert_relative_eq!(st.amplitudes()[3].im, r, epsilon = 1e-15);

        let p = outcome_probabilities(&ghz(4).unwrap());
        assert_relative_eq!(p[0], 0.5, epsilon = 1e-15);
        assert_relative_eq!(p[15], 0.5, epsilon = 1e-15);
        assert!(ghz(0).is_err());
    }

    #[test]
    fn w3_and_conjugate() {
        let st = w_state(3, false).unwrap();
        let r = 1.0 / 3f64.sqrt();
        for idx in [0b001, 0b010, 0b100] {
            assert_relative_eq!(st.amplitudes()[idx].re, r, epsilon = 1e-15);
        }
        let st = w_state(3, true).unwrap();
        for idx in [0b110, 0b101, 0b011] {
            assert_relative_eq!(st.amplitudes()[idx].re, r, epsilon = 1e-15);
        }
        let st = w_state(2, false).unwrap();
        assert_relative_eq!(st.amplitudes()[0b01].re, 0.5f64.sqrt(), epsilon = 1e-15);
        assert!(w_state(1, false).is_err());
    }

    /// The printed three-player phases: |001> + e^{2pi i/3}|010> + e^{-2pi i/3}|100>.
    #[test]
    fn w_star_matches_printed_phases() {
        let st = w_star(3).unwrap();
        let r = 1.0 / 3f64.sqrt();
        let om = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        assert_relative_eq!((st.amplitudes()[0b001] - Complex64::new(r, 0.0)).norm(), 0.0, epsilon = 1e-12);
        assert_relative_eq!((st.amplitudes()[0b010] - om * r).norm(), 0.0, epsilon = 1e-12);
        assert_relative_eq!((st.amplitudes()[0b100] - om.conj() * r).norm(), 0.0, epsilon = 1e-12);
    }

    /// w_star(2) is the printed singlet (|01> - |10>)/sqrt(2), exactly.
    #[test]
    fn w_star_two_is_singlet() {
        let st = w_star(2).unwrap();
        let r = 0.5f64.sqrt();
        assert_relative_eq!((st.amplitudes()[0b01] - Complex64::new(r, 0.0)).norm(), 0.0, epsilon = 1e-12);
        assert_relative_eq!((st.amplitudes()[0b10] - Complex64::new(-r, 0.0)).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn w_star_all_equal_outcome_probability_is_zero() {
        let st = w_star(3).unwrap();
        for j in 0..101 {
            let phi = 2.0 * PI * j as f64 / 101.0;
            let p = outcome_probabilities(&rotate_measurement_basis(&st, phi));
            assert!(p[0] < 1e-12 && p[7] < 1e-12, "phi={phi}: p000={} p111={}", p[0], p[7]);
        }
    }

    #[test]
    fn balanced_phase_singlet_and_coefficient_sum() {
        let spec = BalancedPhaseSpec {
            n_qubits: 2,
            ones_count: 1,
            phase_rule: PhaseRule::RootsOfUnity,
        };
        let st = balanced_phase_state(&spec).unwrap();
        assert!(equal_up_to_global_phase(&st, &w_star(2).unwrap(), 1e-12));

        for (n, m) in [(3, 1), (4, 2), (5, 2), (6, 3)] {
            let spec = BalancedPhaseSpec { n_qubits: n, ones_count: m, phase_rule: PhaseRule::RootsOfUnity };
            let st = balanced_phase_state(&spec).unwrap();
            let total: Complex64 = st.amplitudes().iter().sum();
            assert!(total.norm() < 1e-12);
        }
    }

    #[test]
    fn balanced_phase_zero_aligned_outcomes_on_grid() {
        let spec = BalancedPhaseSpec { n_qubits: 4, ones_count: 2, phase_rule: PhaseRule::RootsOfUnity };
        let st = balanced_phase_state(&spec).unwrap();
        for j in 0..101 {
            let phi = 2.0 * PI * j as f64 / 101.0;
            let p = outcome_probabilities(&rotate_measurement_basis(&st, phi));
            assert!(p[0] < 1e-12 && p[15] < 1e-12);
        }
    }

    #[test]
    fn balanced_phase_rejections() {
        let bad = BalancedPhaseSpec { n_qubits: 3, ones_count: 0, phase_rule: PhaseRule::RootsOfUnity };
        assert!(balanced_phase_state(&bad).is_err());
        let bad = BalancedPhaseSpec { n_qubits: 3, ones_count: 3, phase_rule: PhaseRule::RootsOfUnity };
        assert!(balanced_phase_state(&bad).is_err());
        // C(4,2) = 6 is even: fine. C(3,1) = 3 is odd: rejected.
        let bad = BalancedPhaseSpec { n_qubits: 3, ones_count: 1, phase_rule: PhaseRule::AlternatingSign };
        assert!(balanced_phase_state(&bad).is_err());
        let ok = BalancedPhaseSpec { n_qubits: 4, ones_count: 2, phase_rule: PhaseRule::AlternatingSign };
        assert!(balanced_phase_state(&ok).is_ok());
        // explicit coefficients must close the polygon
        let r = 0.5f64.sqrt();
        let bad = BalancedPhaseSpec {
            n_qubits: 2,
            ones_count: 1,
            phase_rule: PhaseRule::Explicit(vec![Complex64::new(r, 0.0), Complex64::new(r, 0.0)]),
        };
        assert!(matches!(balanced_phase_state(&bad), Err(Error::Validation(_))));
    }

    #[test]
    fn mixed_balanced_terms() {
        let mix = mixed_balanced(3).unwrap();
        assert_eq!(mix.terms().len(), 3);
        for (w, st) in mix.terms() {
            assert_relative_eq!(*w, 1.0 / 3.0, epsilon = 1e-15);
            assert_eq!(outcome_probabilities(st).iter().filter(|p| **p > 0.5).count(), 1);
        }
        // ordering: player 1's excitation first
        assert_eq!(mix.terms()[0].1.amplitudes()[0b100].re, 1.0);
        assert_eq!(mix.terms()[2].1.amplitudes()[0b001].re, 1.0);

        let mix = mixed_balanced(2).unwrap();
        assert_eq!(mix.terms().len(), 2);
        assert!(mixed_balanced(1).is_err());
    }
}
