//! Dense 2^n state-vector simulation.
//!
//! Basis convention: qubit k (1-indexed) owns bit (n - k) of the amplitude
//! index, so qubit 1 is the most significant bit and the ket |q1 q2 ... qn>
//! reads left-to-right as the binary index. Gate application returns a new
//! vector; internally the owned buffer is mutated.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::pauli::PauliString;

/// Qubit limit for dense vectors (16 MiB of amplitudes).
pub const STATE_QUBIT_LIMIT: usize = 20;

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

fn phase_factor(k: u8) -> Complex64 {
    match k % 4 {
        0 => C_ONE,
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n < 1 || n > STATE_QUBIT_LIMIT {
        return Err(Error::Capacity { what: "state-vector qubits", limit: STATE_QUBIT_LIMIT, requested: n });
    }
    Ok(())
}

/// A single-qubit factor of a product state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QubitKet {
    Zero,
    One,
    Plus,
    Minus,
}

impl QubitKet {
    fn amplitude(self, bit: usize) -> f64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        match (self, bit) {
            (QubitKet::Zero, 0) | (QubitKet::One, 1) => 1.0,
            (QubitKet::Zero, 1) | (QubitKet::One, 0) => 0.0,
            (QubitKet::Plus, _) | (QubitKet::Minus, 0) => s,
            (QubitKet::Minus, _) => -s,
        }
    }
}

/// Elementwise comparison of two state vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EqualityReport {
    pub equal: bool,
    /// Infinity norm of the amplitude difference.
    pub max_dev: f64,
    /// Diagnostic only: whether the vectors agree after removing one global
    /// phase. The `equal` verdict never uses this.
    pub equal_up_to_global_phase: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// |+>^n: every amplitude 2^(-n/2).
    pub fn plus_state(n: usize) -> Result<StateVector> {
        check_capacity(n)?;
        let amp = Complex64::new(0.5f64.powf(n as f64 / 2.0), 0.0);
        Ok(StateVector { n, amps: vec![amp; 1 << n] })
    }

    /// (|0...0> + |1...1>) / sqrt(2).
    pub fn ghz_state(n: usize) -> Result<StateVector> {
        if n < 2 {
            return Err(Error::Domain { reason: format!("GHZ state needs n >= 2, got {n}") });
        }
        check_capacity(n)?;
        let mut amps = vec![C_ZERO; 1 << n];
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        amps[0] = s;
        amps[(1 << n) - 1] = s;
        Ok(StateVector { n, amps })
    }

    /// Tensor product of single-qubit kets, qubit 1 first.
    pub fn from_qubit_kets(kets: &[QubitKet]) -> Result<StateVector> {
        let n = kets.len();
        check_capacity(n)?;
        let amps = (0..1usize << n)
            .map(|idx| {
                let mut a = 1.0;
                for (k, ket) in kets.iter().enumerate() {
                    let bit = (idx >> (n - 1 - k)) & 1;
                    a *= ket.amplitude(bit);
                }
                Complex64::new(a, 0.0)
            })
            .collect();
        Ok(StateVector { n, amps })
    }

    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<StateVector> {
        check_capacity(n)?;
        if amps.len() != 1 << n {
            return Err(Error::Domain {
                reason: format!("expected {} amplitudes, got {}", 1usize << n, amps.len()),
            });
        }
        Ok(StateVector { n, amps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    /// Index mask of qubit k under the qubit-1-is-MSB convention.
    pub fn qubit_index_mask(&self, k: VertexId) -> Result<usize> {
        self.check_qubit(k)?;
        Ok(1 << (self.n - k))
    }

    fn check_qubit(&self, k: VertexId) -> Result<()> {
        if k < 1 || k > self.n {
            return Err(Error::VertexOutOfRange { v: k, n: self.n });
        }
        Ok(())
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// CZ on qubits i, j: negates amplitudes whose i and j bits are both 1.
    pub fn apply_cz(&self, i: VertexId, j: VertexId) -> Result<StateVector> {
        let mut out = self.clone();
        out.cz_in_place(i, j)?;
        Ok(out)
    }

    pub(crate) fn cz_in_place(&mut self, i: VertexId, j: VertexId) -> Result<()> {
        if i == j {
            return Err(Error::DuplicateQubit { q: i });
        }
        let mi = self.qubit_index_mask(i)?;
        let mj = self.qubit_index_mask(j)?;
        let both = mi | mj;
        for (idx, amp) in self.amps.iter_mut().enumerate() {
            if idx & both == both {
                *amp = -*amp;
            }
        }
        Ok(())
    }

    /// Hadamard on qubit i.
    pub fn apply_h(&self, i: VertexId) -> Result<StateVector> {
        let mut out = self.clone();
        out.h_in_place(i)?;
        Ok(out)
    }

    pub(crate) fn h_in_place(&mut self, i: VertexId) -> Result<()> {
        let mask = self.qubit_index_mask(i)?;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for idx in 0..self.amps.len() {
            if idx & mask == 0 {
                let lo = self.amps[idx];
                let hi = self.amps[idx | mask];
                self.amps[idx] = (lo + hi) * s;
                self.amps[idx | mask] = (lo - hi) * s;
            }
        }
        Ok(())
    }

    /// Applies the full operator, phase prefactor included: the Z block acts
    /// on the source index, the X block flips bits, i^phase_exp scales.
    pub fn apply_pauli(&self, p: &PauliString) -> Result<StateVector> {
        if p.n() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: p.n() });
        }
        let (mx, mz) = self.pauli_index_masks(p);
        let phase = phase_factor(p.phase_exp());
        let mut amps = vec![C_ZERO; self.amps.len()];
        for (idx, amp) in self.amps.iter().enumerate() {
            let sign = if (idx & mz).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            amps[idx ^ mx] = phase * sign * amp;
        }
        Ok(StateVector { n: self.n, amps })
    }

    /// Translates qubit-numbered Pauli masks into index masks.
    pub(crate) fn pauli_index_masks(&self, p: &PauliString) -> (usize, usize) {
        let mut mx = 0usize;
        let mut mz = 0usize;
        for i in 1..=self.n {
            let bit = 1u64 << (i - 1);
            let idx_bit = 1usize << (self.n - i);
            if p.x_mask() & bit != 0 {
                mx |= idx_bit;
            }
            if p.z_mask() & bit != 0 {
                mz |= idx_bit;
            }
        }
        (mx, mz)
    }

    /// Eigenvalue-(+1) test: ||P|psi> - |psi>||_inf <= tol.
    pub fn is_stabilized(&self, p: &PauliString, tol: f64) -> Result<bool> {
        let image = self.apply_pauli(p)?;
        let dev = self
            .amps
            .iter()
            .zip(&image.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        Ok(dev <= tol)
    }

    /// Exact elementwise comparison; no global-phase allowance in the
    /// verdict, with an up-to-phase diagnostic alongside.
    pub fn states_equal(&self, other: &StateVector, tol: f64) -> Result<EqualityReport> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let max_dev = self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        Ok(EqualityReport {
            equal: max_dev <= tol,
            max_dev,
            equal_up_to_global_phase: self.equal_up_to_phase(other, tol),
        })
    }

    fn equal_up_to_phase(&self, other: &StateVector, tol: f64) -> bool {
        let (k, largest) = self
            .amps
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.norm().total_cmp(&b.norm()))
            .expect("state vectors are nonempty");
        if largest.norm() < tol {
            return other.amps.iter().all(|b| b.norm() <= tol);
        }
        let phase = other.amps[k] / largest;
        if (phase.norm() - 1.0).abs() > tol {
            return false;
        }
        self.amps
            .iter()
            .zip(&other.amps)
            .all(|(a, b)| (a * phase - b).norm() <= tol)
    }

    /// JSON form `{n, convention: "q1-msb", amps: [[re, im], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "convention": "q1-msb",
            "amps": self.amps.iter().map(|a| vec![a.re, a.im]).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<StateVector> {
        let bad = |reason: &str| Error::JsonFormat { reason: reason.into() };
        let n = value["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        match value["convention"].as_str() {
            Some("q1-msb") => {}
            _ => return Err(bad("convention must be \"q1-msb\"")),
        }
        let raw = value["amps"].as_array().ok_or_else(|| bad("missing amps"))?;
        let mut amps = Vec::with_capacity(raw.len());
        for entry in raw {
            let pair = entry.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("each amplitude must be [re, im]"))?;
            let re = pair[0].as_f64().ok_or_else(|| bad("amplitude parts must be numbers"))?;
            let im = pair[1].as_f64().ok_or_else(|| bad("amplitude parts must be numbers"))?;
            amps.push(Complex64::new(re, im));
        }
        StateVector::from_amplitudes(n, amps)
    }

    /// One line per amplitude above the display threshold:
    /// `bitstring  re  im`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (idx, amp) in self.amps.iter().enumerate() {
            if amp.norm() > 1e-12 {
                out.push_str(&format!(
                    "{idx:0width$b}  {re:.16e}  {im:.16e}\n",
                    width = self.n,
                    re = amp.re,
                    im = amp.im
                ));
            }
        }
        out
    }
}

/// Builds the graph state by applying one CZ per canonical edge to |+>^n.
/// Edge order is irrelevant because the CZ gates all commute.
pub fn build_graph_state(g: &Graph) -> Result<StateVector> {
    let mut state = StateVector::plus_state(g.n())?;
    for e in g.edges() {
        state.cz_in_place(e.a(), e.b())?;
    }
    Ok(state)
}
