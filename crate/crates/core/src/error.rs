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

use thiserror::Error;

/// Errors raised by the simulator, the hash builders and the analysis routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("qubit count {0} outside supported range 1..={max}", max = crate::statevec::MAX_QUBITS)]
    QubitCount(usize),
    #[error("qubit index {index} out of range for a {num_qubits}-qubit register")]
    QubitIndex { index: usize, num_qubits: usize },
    #[error("qubit {0} used more than once in a gate")]
    OverlappingQubits(usize),
    #[error("expected {expected} rotation angles, got {actual}")]
    AngleCount { expected: usize, actual: usize },
    #[error("amplitude vector of length {0} is not a power of two")]
    AmplitudeLength(usize),
    #[error("state vectors have different sizes ({0} and {1} qubits)")]
    SizeMismatch(usize, usize),
    #[error("angle must be finite, got {0}")]
    NonFiniteAngle(f64),
    #[error("modulus q must be in [2, 2^62], got {0}")]
    Modulus(u64),
    #[error("parameter set size {0} outside supported range 1..=20")]
    SetSize(usize),
    #[error("set is empty")]
    EmptySet,
    #[error("element {value} is not reduced modulo {q}")]
    Unreduced { value: u64, q: u64 },
    #[error("input x = {x} is not in [0, {q})")]
    ResidueRange { x: u64, q: u64 },
    #[error("index j = {j} out of range for a set of size {n} (needs j < 2^{n})")]
    IndexRange { j: u64, n: usize },
    #[error("set size {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("x must be nonzero")]
    ZeroShift,
    #[error("modulus {q} exceeds the exhaustive sweep cap of {cap}")]
    SweepTooLarge { q: u64, cap: u64 },
    #[error("search cost {cost} exceeds budget of {budget} evaluations")]
    BudgetExceeded { cost: u128, budget: u128 },
    #[error("search space q^n = {size} exceeds cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("certification mismatch: search reported {reported}, recomputation gave {recomputed}")]
    Certification { reported: f64, recomputed: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
