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

//! The three amplitude-form hash constructions.
//!
//! For a parameter set `S = {s_0, …, s_{n-1}} ⊆ Z_q` and input `x ∈ Z_q`:
//!
//! - **standard**: `(1/√d) Σ_j |j⟩ ⊗ R_y(4π b_j x/q)|0⟩` for a set
//!   `B = {b_0, …, b_{d-1}}`, prepared by Hadamards on the address register
//!   followed by one uniformly controlled rotation;
//! - **shallow**: the standard form with `b_j = Σ_k j_k s_k`, where the UCR
//!   is replaced by `n` two-qubit controlled rotations `R_y(4π s_k x/q)`;
//! - **single-qubit**: `⊗_j R_y(2π s_j x/q)|0⟩`, optionally followed by a
//!   qubit rotated by `R_y(2π x Σ s_l / q)`.
//!
//! In `j = j_0 j_1 … j_{n-1}`, `j_0` is the most significant bit. All angles
//! are reduced modulo the period of `R_y` in exact integer arithmetic before
//! they are converted to floating point.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::statevec::{Angle, Circuit, ControlSpec, Gate, StateVector, MAX_QUBITS};

/// Largest supported parameter set.
pub const MAX_PARAMS: usize = 20;

/// A parameter set `S ⊆ Z_q`, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParamSet {
    q: u64,
    s: Vec<u64>,
}

impl ParamSet {
    /// Requires `q ≥ 2`, `1 ≤ |S| ≤ 20` and every element reduced mod `q`.
    pub fn new(q: u64, s: Vec<u64>) -> Result<Self> {
        check_modulus(q)?;
        if s.is_empty() || s.len() > MAX_PARAMS {
            return Err(Error::SetSize(s.len()));
        }
        check_reduced(q, &s)?;
        Ok(ParamSet { q, s })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn values(&self) -> &[u64] {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// `Σ s_l` as an integer, not reduced.
    pub fn sum(&self) -> u128 {
        self.s.iter().map(|&v| v as u128).sum()
    }

    /// Duplicated parameters are allowed but never help collision resistance.
    pub fn has_duplicates(&self) -> bool {
        let mut sorted = self.s.clone();
        sorted.sort_unstable();
        sorted.windows(2).any(|w| w[0] == w[1])
    }

    /// `f(S, j) = Σ_k j_k s_k mod q`, where `j_0` is the most significant of
    /// the `n` bits of `j`.
    pub fn linear_combination(&self, j: u64) -> Result<u64> {
        let n = self.s.len();
        if j >> n != 0 {
            return Err(Error::IndexRange { j, n });
        }
        let total: u128 = self
            .s
            .iter()
            .enumerate()
            .filter(|&(k, _)| (j >> (n - 1 - k)) & 1 == 1)
            .map(|(_, &v)| v as u128)
            .sum();
        Ok((total % self.q as u128) as u64)
    }

    /// The set `B` of all `2^n` linear combinations, `b_j = f(S, j)`.
    pub fn derive_biased_set(&self) -> BiasedSet {
        let b = (0..1u64 << self.s.len())
            .map(|j| self.linear_combination(j).expect("j < 2^n"))
            .collect();
        BiasedSet { q: self.q, b }
    }
}

/// A multiset `B ⊆ Z_q`, in order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BiasedSet {
    q: u64,
    b: Vec<u64>,
}

impl BiasedSet {
    pub fn new(q: u64, b: Vec<u64>) -> Result<Self> {
        check_modulus(q)?;
        if b.is_empty() {
            return Err(Error::EmptySet);
        }
        check_reduced(q, &b)?;
        Ok(BiasedSet { q, b })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn values(&self) -> &[u64] {
        &self.b
    }

    /// `d = |B|`.
    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }
}

/// Which construction to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum HashForm {
    Standard,
    Shallow,
    SingleQubit { sum_qubit: bool },
}

impl HashForm {
    /// Single-qubit form with the extra sum qubit, the one whose inner
    /// products coincide with the shallow form.
    pub const SINGLE_QUBIT_WITH_SUM: HashForm = HashForm::SingleQubit { sum_qubit: true };
    pub const SINGLE_QUBIT_PLAIN: HashForm = HashForm::SingleQubit { sum_qubit: false };
}

/// The set a hash is built from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HashInput<'a> {
    Params(&'a ParamSet),
    Biased(&'a BiasedSet),
}

impl HashInput<'_> {
    pub fn q(&self) -> u64 {
        match self {
            HashInput::Params(s) => s.q(),
            HashInput::Biased(b) => b.q(),
        }
    }
}

/// Hadamards on `log d` address qubits followed by a UCR with
/// `θ_j = 4π b_j x / q`.
pub fn standard_circuit(b: &BiasedSet, x: u64) -> Result<Circuit> {
    check_residue(x, b.q)?;
    let d = b.len();
    if !d.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(d));
    }
    let n = d.trailing_zeros() as usize;
    check_width(n + 1)?;
    let mut circuit = Circuit::new(n + 1);
    for k in 0..n {
        circuit.push(Gate::H { target: k });
    }
    circuit.push(Gate::Ucr {
        controls: (0..n).collect(),
        target: n,
        angles: b
            .values()
            .iter()
            .map(|&bj| double_angle(bj, x, b.q))
            .collect(),
    });
    Ok(circuit)
}

pub fn build_standard_hash(b: &BiasedSet, x: u64) -> Result<StateVector> {
    standard_circuit(b, x)?.run()
}

/// Hadamards on `n` address qubits, then one `R_y(4π s_k x / q)` on the
/// target per address qubit `k`, controlled on `|1⟩`.
pub fn shallow_circuit(s: &ParamSet, x: u64) -> Result<Circuit> {
    shallow_circuit_scaled(s, x, 4)
}

/// Shallow circuit with rotation `R_y(scale·π s_k x / q)`. Only `scale = 4`
/// gives the shallow hash; other values exist for negative controls.
pub(crate) fn shallow_circuit_scaled(s: &ParamSet, x: u64, scale: i128) -> Result<Circuit> {
    check_residue(x, s.q)?;
    let n = s.len();
    check_width(n + 1)?;
    let mut circuit = Circuit::new(n + 1);
    for k in 0..n {
        circuit.push(Gate::H { target: k });
    }
    for (k, &sk) in s.values().iter().enumerate() {
        let product = (sk as u128 * x as u128) % (s.q as u128 * 4);
        circuit.push(Gate::ControlledRy {
            controls: ControlSpec::on_one(k),
            target: n,
            angle: Angle::pi_ratio(scale * product as i128, s.q),
        });
    }
    Ok(circuit)
}

pub fn build_shallow_hash(s: &ParamSet, x: u64) -> Result<StateVector> {
    shallow_circuit(s, x)?.run()
}

/// One `R_y(2π s_j x / q)` per qubit, plus `R_y(2π x Σ s_l / q)` on an extra
/// qubit when `sum_qubit` is set. No gate touches more than one qubit.
pub fn single_qubit_circuit(s: &ParamSet, x: u64, sum_qubit: bool) -> Result<Circuit> {
    check_residue(x, s.q)?;
    let n = s.len();
    let width = n + usize::from(sum_qubit);
    check_width(width)?;
    let mut circuit = Circuit::new(width);
    for (j, &sj) in s.values().iter().enumerate() {
        circuit.push(Gate::Ry {
            target: j,
            angle: single_angle(sj as u128, x, s.q),
        });
    }
    if sum_qubit {
        circuit.push(Gate::Ry {
            target: n,
            angle: single_angle(s.sum(), x, s.q),
        });
    }
    Ok(circuit)
}

pub fn build_single_qubit_hash(s: &ParamSet, x: u64, sum_qubit: bool) -> Result<StateVector> {
    single_qubit_circuit(s, x, sum_qubit)?.run()
}

/// Circuit for `form`. A `ParamSet` given to the standard form is expanded
/// with [`ParamSet::derive_biased_set`]; the shallow and single-qubit forms
/// need a `ParamSet`.
pub fn hash_circuit(form: HashForm, input: HashInput<'_>, x: u64) -> Result<Circuit> {
    match (form, input) {
        (HashForm::Standard, HashInput::Biased(b)) => standard_circuit(b, x),
        (HashForm::Standard, HashInput::Params(s)) => standard_circuit(&s.derive_biased_set(), x),
        (HashForm::Shallow, HashInput::Params(s)) => shallow_circuit(s, x),
        (HashForm::SingleQubit { sum_qubit }, HashInput::Params(s)) => {
            single_qubit_circuit(s, x, sum_qubit)
        }
        (_, HashInput::Biased(_)) => Err(Error::InvalidConfig(
            "shallow and single-qubit forms are built from a parameter set".into(),
        )),
    }
}

pub fn build_hash(form: HashForm, input: HashInput<'_>, x: u64) -> Result<StateVector> {
    hash_circuit(form, input, x)?.run()
}

/// `4π·v·x/q`, with `v·x` reduced mod `q` (a shift by `4π`).
fn double_angle(v: u64, x: u64, q: u64) -> Angle {
    let product = (v as u128 * x as u128) % q as u128;
    Angle::pi_ratio(4 * product as i128, q)
}

/// `2π·v·x/q`, with `v·x` reduced mod `2q` (a shift by `4π`).
fn single_angle(v: u128, x: u64, q: u64) -> Angle {
    let product = (v % (2 * q as u128)) * x as u128 % (2 * q as u128);
    Angle::pi_ratio(2 * product as i128, q)
}

/// Largest modulus; keeps every intermediate product inside `u128`.
pub const MAX_MODULUS: u64 = 1 << 62;

fn check_modulus(q: u64) -> Result<()> {
    if !(2..=MAX_MODULUS).contains(&q) {
        return Err(Error::Modulus(q));
    }
    Ok(())
}

fn check_reduced(q: u64, values: &[u64]) -> Result<()> {
    match values.iter().find(|&&v| v >= q) {
        Some(&value) => Err(Error::Unreduced { value, q }),
        None => Ok(()),
    }
}

pub(crate) fn check_residue(x: u64, q: u64) -> Result<()> {
    if x >= q {
        return Err(Error::ResidueRange { x, q });
    }
    Ok(())
}

fn check_width(num_qubits: usize) -> Result<()> {
    if num_qubits > MAX_QUBITS {
        return Err(Error::QubitCount(num_qubits));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
