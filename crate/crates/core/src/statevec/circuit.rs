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

use serde::Serialize;

use super::{Angle, ControlSpec, StateVector};
use crate::error::Result;

/// One gate of a hash circuit.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "gate", rename_all = "snake_case")]
pub enum Gate {
    H {
        target: usize,
    },
    Ry {
        target: usize,
        angle: Angle,
    },
    ControlledRy {
        controls: ControlSpec,
        target: usize,
        angle: Angle,
    },
    /// Uniformly controlled rotation; `angles[j]` fires when the control
    /// register holds `j`, most significant control first.
    Ucr {
        controls: Vec<usize>,
        target: usize,
        angles: Vec<Angle>,
    },
}

impl Gate {
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H { target } | Gate::Ry { target, .. } => vec![*target],
            Gate::ControlledRy {
                controls, target, ..
            } => controls
                .controls()
                .iter()
                .map(|c| c.qubit)
                .chain(std::iter::once(*target))
                .collect(),
            Gate::Ucr {
                controls, target, ..
            } => controls
                .iter()
                .copied()
                .chain(std::iter::once(*target))
                .collect(),
        }
    }

    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        match self {
            Gate::H { target } => state.apply_h(*target),
            Gate::Ry { target, angle } => state.apply_ry(*target, *angle),
            Gate::ControlledRy {
                controls,
                target,
                angle,
            } => state.apply_controlled_ry(controls, *target, *angle),
            Gate::Ucr {
                controls,
                target,
                angles,
            } => state.apply_ucr(controls, *target, angles),
        }?;
        Ok(())
    }
}

/// A gate list on a fixed-width register, run from `|0…0⟩`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            gates: Vec::new(),
        }
    }

    pub fn push(&mut self, gate: Gate) -> &mut Self {
        self.gates.push(gate);
        self
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Number of gates acting on two or more qubits.
    pub fn multi_qubit_gate_count(&self) -> usize {
        self.gates.iter().filter(|g| g.qubits().len() > 1).count()
    }

    /// Circuit depth with greedy as-soon-as-possible layering.
    pub fn depth(&self) -> usize {
        let mut level = vec![0usize; self.num_qubits];
        for gate in &self.gates {
            let qubits = gate.qubits();
            let next = qubits
                .iter()
                .filter_map(|&q| level.get(q))
                .max()
                .copied()
                .unwrap_or(0)
                + 1;
            for q in qubits {
                if let Some(l) = level.get_mut(q) {
                    *l = next;
                }
            }
        }
        level.into_iter().max().unwrap_or(0)
    }

    pub fn apply_to(&self, state: &mut StateVector) -> Result<()> {
        self.gates.iter().try_for_each(|g| g.apply(state))
    }

    pub fn run(&self) -> Result<StateVector> {
        let mut state = StateVector::zero_state(self.num_qubits)?;
        self.apply_to(&mut state)?;
        Ok(state)
    }
}
