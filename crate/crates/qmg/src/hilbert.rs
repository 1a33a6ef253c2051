//! Dense statevector core: construction, local unitary application, basis
//! rotation, and outcome probabilities.
//!
//! Basis convention: player `k` (1-based) owns bit `k` of the index with
//! player 1 the most significant bit, so index `b` encodes the bitstring
//! `b1 b2 ... bN` read left to right.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::{ASSERT_TOL, MAX_QUBITS, VALIDATION_TOL};

/// Pure state of `n_qubits` qubits as 2^n complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Builds a state from raw amplitudes, checking the dimension is a power
    /// of two within the qubit cap and the norm is 1 within `VALIDATION_TOL`.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let dim = amps.len();
        if dim < 2 || !dim.is_power_of_two() {
            return Err(Error::arg(format!(
                "amplitude vector length {dim} is not a power of two >= 2"
            )));
        }
        let n_qubits = dim.trailing_zeros() as usize;
        if n_qubits > MAX_QUBITS {
            return Err(Error::arg(format!(
                "{n_qubits} qubits exceeds the cap of {MAX_QUBITS}"
            )));
        }
        let state = StateVector { n_qubits, amps };
        let norm = state.norm();
        if (norm - 1.0).abs() > VALIDATION_TOL {
            return Err(Error::validation(format!(
                "state norm {norm} deviates from 1 beyond {VALIDATION_TOL}"
            )));
        }
        Ok(state)
    }

    /// Computational basis state `|index>` on `n_qubits` qubits.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::arg(format!(
                "qubit count {n_qubits} outside 1..={MAX_QUBITS}"
            )));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::arg(format!(
                "basis index {index} out of range for {n_qubits} qubits"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector { n_qubits, amps })
    }

    /// Builds a basis state from a bitstring such as `"0111"`.
    pub fn from_bitstring(bits: &str) -> Result<Self> {
        let n = bits.len();
        let mut index = 0usize;
        for c in bits.chars() {
            index <<= 1;
            match c {
                '0' => {}
                '1' => index |= 1,
                other => return Err(Error::arg(format!("invalid bit character {other:?}"))),
            }
        }
        Self::basis(n, index)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Bit of player `k` (1-based, player 1 = most significant) in `index`.
    pub fn player_bit(n_qubits: usize, index: usize, player: usize) -> u8 {
        debug_assert!((1..=n_qubits).contains(&player));
        ((index >> (n_qubits - player)) & 1) as u8
    }

    pub(crate) fn from_parts_unchecked(n_qubits: usize, amps: Vec<Complex64>) -> Self {
        debug_assert_eq!(amps.len(), 1 << n_qubits);
        StateVector { n_qubits, amps }
    }
}

/// Single-qubit move as an explicit 2x2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalUnitary {
    pub u00: Complex64,
    pub u01: Complex64,
    pub u10: Complex64,
    pub u11: Complex64,
}

impl LocalUnitary {
    pub fn new(u00: Complex64, u01: Complex64, u10: Complex64, u11: Complex64) -> Self {
        LocalUnitary { u00, u01, u10, u11 }
    }

    pub fn identity() -> Self {
        LocalUnitary::new(
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        )
    }

    /// Largest entrywise deviation of `U†U` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        // U†U entries
        let a = self.u00.conj() * self.u00 + self.u10.conj() * self.u10;
        let b = self.u00.conj() * self.u01 + self.u10.conj() * self.u11;
        let c = self.u01.conj() * self.u00 + self.u11.conj() * self.u10;
        let d = self.u01.conj() * self.u01 + self.u11.conj() * self.u11;
        let one = Complex64::new(1.0, 0.0);
        [(a - one).norm(), b.norm(), c.norm(), (d - one).norm()]
            .into_iter()
            .fold(0.0, f64::max)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    /// Hermitian conjugate.
    pub fn dagger(&self) -> Self {
        LocalUnitary::new(
            self.u00.conj(),
            self.u10.conj(),
            self.u01.conj(),
            self.u11.conj(),
        )
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &LocalUnitary) -> Self {
        LocalUnitary::new(
            self.u00 * other.u00 + self.u01 * other.u10,
            self.u00 * other.u01 + self.u01 * other.u11,
            self.u10 * other.u00 + self.u11 * other.u10,
            self.u10 * other.u01 + self.u11 * other.u11,
        )
    }
}

/// Finite probability-weighted list of pure states. Handles the classical
/// randomness in the model: random outsider bits and explicit mixtures.
#[derive(Debug, Clone)]
pub struct MixedState {
    terms: Vec<(f64, StateVector)>,
}

impl MixedState {
    /// Builds a mixture, checking weights are positive and sum to 1 within
    /// `ASSERT_TOL`, and that all terms share a qubit count.
    pub fn new(terms: Vec<(f64, StateVector)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::arg("mixture must have at least one term"));
        }
        let n = terms[0].1.n_qubits();
        let mut total = 0.0;
        for (w, st) in &terms {
            if *w <= 0.0 {
                return Err(Error::validation(format!("mixture weight {w} is not positive")));
            }
            if st.n_qubits() != n {
                return Err(Error::arg("mixture terms differ in qubit count"));
            }
            total += w;
        }
        if (total - 1.0).abs() > ASSERT_TOL {
            return Err(Error::validation(format!(
                "mixture weights sum to {total}, not 1"
            )));
        }
        Ok(MixedState { terms })
    }

    /// A point mixture holding a single pure state.
    pub fn pure(state: StateVector) -> Self {
        MixedState { terms: vec![(1.0, state)] }
    }

    pub fn terms(&self) -> &[(f64, StateVector)] {
        &self.terms
    }

    pub fn n_qubits(&self) -> usize {
        self.terms[0].1.n_qubits()
    }
}

/// Applies one single-qubit gate to player `k` (1-based) in place.
pub(crate) fn apply_gate_inplace(amps: &mut [Complex64], n_qubits: usize, player: usize, u: &LocalUnitary) {
    let bit = n_qubits - player; // bit position from the LSB
    let mask = 1usize << bit;
    let dim = amps.len();
    let mut i0 = 0usize;
    while i0 < dim {
        if i0 & mask == 0 {
            let i1 = i0 | mask;
            let a0 = amps[i0];
            let a1 = amps[i1];
            amps[i0] = u.u00 * a0 + u.u01 * a1;
            amps[i1] = u.u10 * a0 + u.u11 * a1;
        }
        i0 += 1;
    }
}

/// Applies `moves[k-1]` to player `k`'s qubit for every player, returning
/// `(M1 ⊗ M2 ⊗ ... ⊗ MN)|psi>`. The input is not modified.
pub fn apply_local_moves(state: &StateVector, moves: &[LocalUnitary]) -> Result<StateVector> {
    if moves.len() != state.n_qubits() {
        return Err(Error::arg(format!(
            "{} moves supplied for {} qubits",
            moves.len(),
            state.n_qubits()
        )));
    }
    for (i, u) in moves.iter().enumerate() {
        if !u.is_unitary(VALIDATION_TOL) {
            return Err(Error::validation(format!(
                "move for player {} is not unitary (defect {:.3e})",
                i + 1,
                u.unitarity_defect()
            )));
        }
    }
    let mut amps = state.amplitudes().to_vec();
    for (i, u) in moves.iter().enumerate() {
        apply_gate_inplace(&mut amps, state.n_qubits(), i + 1, u);
    }
    Ok(StateVector::from_parts_unchecked(state.n_qubits(), amps))
}

/// The basis-change matrix `U(phi)` whose columns are the logical states
/// `|0>_L = cos(phi)|0> + i sin(phi)|1>` and `|1>_L = i sin(phi)|0> + cos(phi)|1>`.
pub fn logical_basis_unitary(phi: f64) -> LocalUnitary {
    let c = Complex64::new(phi.cos(), 0.0);
    let is = Complex64::new(0.0, phi.sin());
    LocalUnitary::new(c, is, is, c)
}

/// Returns `U(phi)†^⊗N |psi>`: measuring the result in the computational
/// basis is the same as measuring the input in the logical basis of angle
/// `phi`.
pub fn rotate_measurement_basis(state: &StateVector, phi: f64) -> StateVector {
    let u = logical_basis_unitary(phi).dagger();
    let mut amps = state.amplitudes().to_vec();
    for player in 1..=state.n_qubits() {
        apply_gate_inplace(&mut amps, state.n_qubits(), player, &u);
    }
    StateVector::from_parts_unchecked(state.n_qubits(), amps)
}

/// Squared moduli of the amplitudes.
pub fn outcome_probabilities(state: &StateVector) -> Vec<f64> {
    state.amplitudes().iter().map(|a| a.norm_sqr()).collect()
}

/// Kronecker composite of the given states in player order.
pub fn tensor(states: &[StateVector]) -> Result<StateVector> {
    if states.is_empty() {
        return Err(Error::arg("tensor of an empty state list"));
    }
    let n_total: usize = states.iter().map(|s| s.n_qubits()).sum();
    if n_total > MAX_QUBITS {
        return Err(Error::arg(format!(
            "tensor product spans {n_total} qubits, above the cap of {MAX_QUBITS}"
        )));
    }
    let mut amps = vec![Complex64::new(1.0, 0.0)];
    for s in states {
        let mut next = Vec::with_capacity(amps.len() * s.dim());
        for a in &amps {
            for b in s.amplitudes() {
                next.push(a * b);
            }
        }
        amps = next;
    }
    Ok(StateVector::from_parts_unchecked(n_total, amps))
}

/// True when `a` and `b` agree entrywise after factoring a single global
/// phase, within `tol`.
pub fn equal_up_to_global_phase(a: &StateVector, b: &StateVector, tol: f64) -> bool {
    if a.n_qubits() != b.n_qubits() {
        return false;
    }
    // anchor the phase on the largest amplitude of a
    let (idx, mag) = a
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, z)| (i, z.norm()))
        .fold((0, 0.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
    if mag < tol {
        return b.amplitudes().iter().all(|z| z.norm() < tol);
    }
    let zb = b.amplitudes()[idx];
    if (zb.norm() - mag).abs() > tol {
        return false;
    }
    let phase = zb / a.amplitudes()[idx];
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .all(|(x, y)| (x * phase - y).norm() <= tol)
}
