// Copyright 2026 The qhash Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! A small real-amplitude state-vector simulator.
//!
//! Every gate used by the hash constructions (`H`, `R_y` and controlled
//! `R_y`) has a real orthogonal matrix, so amplitudes are kept as `f64`.
//!
//! Basis indices are big-endian in the qubit order: qubit 0 is the most
//! significant bit of the index, so `|q_0 q_1 … q_{m-1}⟩` is the binary
//! expansion of the index read left to right.

mod angle;
mod circuit;

pub use angle::Angle;
pub use circuit::{Circuit, Gate};

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest register the simulator will allocate.
pub const MAX_QUBITS: usize = 24;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Which control value activates a controlled gate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Polarity {
    /// Filled dot: the gate fires when the control qubit is `|1⟩`.
    OnOne,
    /// Open dot: the gate fires when the control qubit is `|0⟩`.
    OnZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Control {
    pub qubit: usize,
    pub polarity: Polarity,
}

/// The control qubits of a multi-controlled gate.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ControlSpec(Vec<Control>);

impl ControlSpec {
    pub fn new(controls: impl IntoIterator<Item = (usize, Polarity)>) -> Self {
        ControlSpec(
            controls
                .into_iter()
                .map(|(qubit, polarity)| Control { qubit, polarity })
                .collect(),
        )
    }

    /// A single control firing on `|1⟩`.
    pub fn on_one(qubit: usize) -> Self {
        Self::new([(qubit, Polarity::OnOne)])
    }

    /// Controls on `qubits`, with polarities read from the bits of `pattern`
    /// (first qubit is the most significant bit, a set bit means on-one).
    pub fn from_pattern(qubits: &[usize], pattern: usize) -> Self {
        let n = qubits.len();
        Self::new(qubits.iter().enumerate().map(|(k, &q)| {
            let bit = (pattern >> (n - 1 - k)) & 1;
            (
                q,
                if bit == 1 {
                    Polarity::OnOne
                } else {
                    Polarity::OnZero
                },
            )
        }))
    }

    pub fn controls(&self) -> &[Control] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn validate(&self, num_qubits: usize, target: usize) -> Result<()> {
        let qubits: Vec<usize> = self.0.iter().map(|c| c.qubit).collect();
        check_disjoint(&qubits, num_qubits, target)
    }
}

/// An `m`-qubit pure state with real amplitudes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<f64>,
}

impl StateVector {
    /// `|0…0⟩` on `num_qubits` qubits.
    pub fn zero_state(num_qubits: usize) -> Result<Self> {
        Self::basis_state(num_qubits, 0)
    }

    /// The computational basis state `|index⟩`.
    pub fn basis_state(num_qubits: usize, index: usize) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&num_qubits) {
            return Err(Error::QubitCount(num_qubits));
        }
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::QubitIndex { index, num_qubits });
        }
        let mut amplitudes = vec![0.0; dim];
        amplitudes[index] = 1.0;
        Ok(StateVector {
            num_qubits,
            amplitudes,
        })
    }

    /// Wraps a raw amplitude vector. The length must be `2^m` with
    /// `1 ≤ m ≤ MAX_QUBITS`; normalization is not checked.
    pub fn from_amplitudes(amplitudes: Vec<f64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::AmplitudeLength(len));
        }
        let num_qubits = len.trailing_zeros() as usize;
        if num_qubits > MAX_QUBITS {
            return Err(Error::QubitCount(num_qubits));
        }
        Ok(StateVector {
            num_qubits,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<f64> {
        self.amplitudes
    }

    /// `Σ a_i²`.
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }

    /// Applies the Hadamard gate to `target`.
    pub fn apply_h(&mut self, target: usize) -> Result<&mut Self> {
        let tmask = self.mask(target)?;
        for i in 0..self.amplitudes.len() {
            if i & tmask == 0 {
                let (a0, a1) = (self.amplitudes[i], self.amplitudes[i | tmask]);
                self.amplitudes[i] = FRAC_1_SQRT_2 * (a0 + a1);
                self.amplitudes[i | tmask] = FRAC_1_SQRT_2 * (a0 - a1);
            }
        }
        Ok(self)
    }

    /// Applies `R_y(theta)` to `target`.
    pub fn apply_ry(&mut self, target: usize, theta: Angle) -> Result<&mut Self> {
        let tmask = self.mask(target)?;
        let (c, s) = theta.half_cos_sin();
        self.rotate_pairs(tmask, c, s, |_| true);
        Ok(self)
    }

    /// Applies `R_y(theta)` to `target` on the subspace where every control
    /// qubit matches its polarity.
    pub fn apply_controlled_ry(
        &mut self,
        controls: &ControlSpec,
        target: usize,
        theta: Angle,
    ) -> Result<&mut Self> {
        controls.validate(self.num_qubits, target)?;
        let tmask = self.mask(target)?;
        let mut care = 0usize;
        let mut want = 0usize;
        for control in controls.controls() {
            let m = self.mask(control.qubit)?;
            care |= m;
            if control.polarity == Polarity::OnOne {
                want |= m;
            }
        }
        let (c, s) = theta.half_cos_sin();
        self.rotate_pairs(tmask, c, s, |i| i & care == want);
        Ok(self)
    }

    /// Uniformly controlled rotation: when the control register holds the
    /// value `j` (with `controls[0]` as the most significant bit), applies
    /// `R_y(thetas[j])` to `target`.
    pub fn apply_ucr(
        &mut self,
        controls: &[usize],
        target: usize,
        thetas: &[Angle],
    ) -> Result<&mut Self> {
        check_disjoint(controls, self.num_qubits, target)?;
        let expected = 1usize << controls.len();
        if thetas.len() != expected {
            return Err(Error::AngleCount {
                expected,
                actual: thetas.len(),
            });
        }
        let tmask = self.mask(target)?;
        let masks: Vec<usize> = controls
            .iter()
            .map(|&q| self.mask(q))
            .collect::<Result<_>>()?;
        let rotations: Vec<(f64, f64)> = thetas.iter().map(|t| t.half_cos_sin()).collect();
        for i in 0..self.amplitudes.len() {
            if i & tmask != 0 {
                continue;
            }
            let j = masks
                .iter()
                .fold(0usize, |acc, &m| (acc << 1) | usize::from(i & m != 0));
            let (c, s) = rotations[j];
            self.rotate_pair(i, i | tmask, c, s);
        }
        Ok(self)
    }

    /// `⟨self|other⟩ = Σ a_i·b_i`.
    pub fn inner_product(&self, other: &StateVector) -> Result<f64> {
        self.check_same_size(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Largest component-wise absolute difference.
    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        self.check_same_size(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Distance from a product state across the cut after the first `k`
    /// qubits.
    ///
    /// The amplitudes are read as a `2^k × 2^(m-k)` matrix. Each row is
    /// projected onto the row of largest norm; the result is the largest
    /// norm of what remains. The state is a product across the cut exactly
    /// when the matrix has rank one, i.e. when this is zero.
    pub fn separability_residual(&self, k: usize) -> Result<f64> {
        if k == 0 || k >= self.num_qubits {
            return Err(Error::QubitIndex {
                index: k,
                num_qubits: self.num_qubits,
            });
        }
        let cols = 1usize << (self.num_qubits - k);
        let rows: Vec<&[f64]> = self.amplitudes.chunks(cols).collect();
        let norm_sqr = |row: &[f64]| row.iter().map(|a| a * a).sum::<f64>();
        let pivot = rows
            .iter()
            .copied()
            .max_by(|a, b| norm_sqr(a).total_cmp(&norm_sqr(b)))
            .unwrap_or(rows[0]);
        let pivot_norm = norm_sqr(pivot);
        if pivot_norm == 0.0 {
            return Ok(0.0);
        }
        let worst = rows
            .iter()
            .map(|row| {
                let coeff = row.iter().zip(pivot).map(|(a, p)| a * p).sum::<f64>() / pivot_norm;
                row.iter()
                    .zip(pivot)
                    .map(|(a, p)| (a - coeff * p).powi(2))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max);
        Ok(worst)
    }

    fn check_same_size(&self, other: &StateVector) -> Result<()> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::SizeMismatch(self.num_qubits, other.num_qubits));
        }
        Ok(())
    }

    fn mask(&self, qubit: usize) -> Result<usize> {
        if qubit >= self.num_qubits {
            return Err(Error::QubitIndex {
                index: qubit,
                num_qubits: self.num_qubits,
            });
        }
        Ok(1usize << (self.num_qubits - 1 - qubit))
    }

    fn rotate_pairs(&mut self, tmask: usize, c: f64, s: f64, active: impl Fn(usize) -> bool) {
        for i in 0..self.amplitudes.len() {
            if i & tmask == 0 && active(i) {
                self.rotate_pair(i, i | tmask, c, s);
            }
        }
    }

    #[inline]
    fn rotate_pair(&mut self, i0: usize, i1: usize, c: f64, s: f64) {
        let (a0, a1) = (self.amplitudes[i0], self.amplitudes[i1]);
        self.amplitudes[i0] = c * a0 - s * a1;
        self.amplitudes[i1] = s * a0 + c * a1;
    }
}

fn check_disjoint(controls: &[usize], num_qubits: usize, target: usize) -> Result<()> {
    if target >= num_qubits {
        return Err(Error::QubitIndex {
            index: target,
            num_qubits,
        });
    }
    for (k, &q) in controls.iter().enumerate() {
        if q >= num_qubits {
            return Err(Error::QubitIndex {
                index: q,
                num_qubits,
            });
        }
        if q == target || controls[..k].contains(&q) {
            return Err(Error::OverlappingQubits(q));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
