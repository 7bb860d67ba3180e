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

//! Cross-checks between the circuits and the closed-form inner products.
//!
//! Each check sweeps seeded random parameter sets and reports the largest
//! deviation seen:
//!
//! - single-qubit hashing: simulated `⟨ψ(x_1)|ψ(x_2)⟩` against
//!   `Π_j cos(π s_j (x_1 - x_2)/q)`;
//! - UCR decomposition: a UCR with `θ_j = γ + Σ_k j_k γ_k` against one
//!   `R_y(γ)` plus `n` two-qubit controlled rotations, on every basis input;
//! - shallow hashing: simulated inner products against the cosine product
//!   with the extra sum factor;
//! - collision equivalence: the shallow and the single-qubit-with-sum
//!   closed forms agree bit for bit, their reports agree, and their
//!   simulated overlaps agree in magnitude.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{closed_inner_shallow, closed_inner_single, collision_resistance};
use crate::error::{Error, Result};
use crate::hashing::{
    build_single_qubit_hash, shallow_circuit_scaled, HashForm, ParamSet, MAX_PARAMS,
};
use crate::statevec::{Angle, ControlSpec, StateVector};

/// Tolerance for simulated-versus-closed-form comparisons.
pub const TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    /// Every modulus in `2..=q_max` is tested.
    pub q_max: u64,
    /// Parameter sets have between 1 and `n_max` elements; UCR checks use
    /// `n = 1..=n_max` control qubits.
    pub n_max: usize,
    pub seed: u64,
    /// Random parameter sets per modulus, and random angle vectors per `n`.
    pub trials: usize,
    /// Builds the shallow hash with `R_y(2π s_k x/q)` instead of
    /// `R_y(4π s_k x/q)`. A negative control: the shallow checks must fail.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub corrupt_angles: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            q_max: 64,
            n_max: 5,
            seed: 0,
            trials: 20,
            corrupt_angles: false,
        }
    }
}

impl VerifyConfig {
    fn validate(&self) -> Result<()> {
        if !(2..=256).contains(&self.q_max) {
            return Err(Error::InvalidConfig(format!(
                "q_max must lie in [2, 256], got {}",
                self.q_max
            )));
        }
        if self.n_max == 0 || self.n_max > MAX_PARAMS.min(10) {
            return Err(Error::InvalidConfig(format!(
                "n_max must lie in [1, 10], got {}",
                self.n_max
            )));
        }
        if self.trials == 0 || self.trials > 1000 {
            return Err(Error::InvalidConfig(format!(
                "trials must lie in [1, 1000], got {}",
                self.trials
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub passed: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub cases: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub checks: Vec<LemmaCheck>,
}

impl VerificationReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub const SINGLE_QUBIT_CHECK: &str = "single-qubit-inner-product";
pub const UCR_CHECK: &str = "ucr-decomposition";
pub const SHALLOW_CHECK: &str = "shallow-inner-product";
pub const EQUIVALENCE_CHECK: &str = "collision-equivalence";

/// Runs all four checks.
pub fn run_verification(cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let sets = random_sets(cfg)?;
    let checks = vec![
        check_single_qubit(&sets)?,
        check_ucr(cfg)?,
        check_shallow(&sets, cfg.corrupt_angles)?,
        check_equivalence(&sets, cfg.corrupt_angles)?,
    ];
    Ok(VerificationReport {
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

/// `trials` random parameter sets for every modulus `2..=q_max`, elements
/// drawn from all of `Z_q`.
fn random_sets(cfg: &VerifyConfig) -> Result<Vec<ParamSet>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut sets = Vec::new();
    for q in 2..=cfg.q_max {
        for _ in 0..cfg.trials {
            let n = rng.random_range(1..=cfg.n_max);
            let values = (0..n).map(|_| rng.random_range(0..q)).collect();
            sets.push(ParamSet::new(q, values)?);
        }
    }
    Ok(sets)
}

/// Largest deviation and case count over all sets, computed in parallel.
/// `max` is order independent, so the result is deterministic.
fn sweep_sets(
    sets: &[ParamSet],
    per_set: impl Fn(&ParamSet) -> Result<(f64, u64)> + Sync + Send,
) -> Result<(f64, u64)> {
    let results = sets.par_iter().map(per_set).collect::<Result<Vec<_>>>()?;
    Ok(results
        .into_iter()
        .fold((0.0, 0), |(d, c), (d2, c2)| (f64::max(d, d2), c + c2)))
}

fn finish(name: &str, (max_deviation, cases): (f64, u64), tolerance: f64) -> LemmaCheck {
    LemmaCheck {
        name: name.to_string(),
        passed: max_deviation <= tolerance,
        max_deviation,
        tolerance,
        cases,
    }
}

/// Deviation between simulated inner products of `states` and a closed form
/// over all ordered pairs.
fn pairwise_deviation(
    states: &[StateVector],
    closed: impl Fn(u64, u64) -> Result<f64>,
) -> Result<(f64, u64)> {
    let mut worst = 0.0f64;
    for (x1, a) in states.iter().enumerate() {
        for (x2, b) in states.iter().enumerate() {
            let sim = a.inner_product(b)?;
            worst = worst.max((sim - closed(x1 as u64, x2 as u64)?).abs());
        }
    }
    let q = states.len() as u64;
    Ok((worst, q * q))
}

fn shallow_states(s: &ParamSet, corrupt: bool) -> Result<Vec<StateVector>> {
    let scale = if corrupt { 2 } else { 4 };
    (0..s.q())
        .map(|x| shallow_circuit_scaled(s, x, scale)?.run())
        .collect()
}

fn single_states(s: &ParamSet, sum_qubit: bool) -> Result<Vec<StateVector>> {
    (0..s.q())
        .map(|x| build_single_qubit_hash(s, x, sum_qubit))
        .collect()
}

fn check_single_qubit(sets: &[ParamSet]) -> Result<LemmaCheck> {
    let swept = sweep_sets(sets, |s| {
        let states = single_states(s, false)?;
        pairwise_deviation(&states, |x1, x2| closed_inner_single(s, x1, x2, false))
    })?;
    Ok(finish(SINGLE_QUBIT_CHECK, swept, TOLERANCE))
}

fn check_shallow(sets: &[ParamSet], corrupt: bool) -> Result<LemmaCheck> {
    let swept = sweep_sets(sets, |s| {
        let states = shallow_states(s, corrupt)?;
        pairwise_deviation(&states, |x1, x2| closed_inner_shallow(s, x1, x2))
    })?;
    Ok(finish(SHALLOW_CHECK, swept, TOLERANCE))
}

fn check_equivalence(sets: &[ParamSet], corrupt: bool) -> Result<LemmaCheck> {
    let swept = sweep_sets(sets, |s| {
        let q = s.q();
        let mut worst = 0.0f64;
        for x1 in 0..q {
            for x2 in 0..q {
                let shallow = closed_inner_shallow(s, x1, x2)?;
                let single = closed_inner_single(s, x1, x2, true)?;
                if shallow.to_bits() != single.to_bits() {
                    worst = worst.max((shallow - single).abs().max(f64::MIN_POSITIVE));
                }
            }
        }
        let a = collision_resistance(s, HashForm::Shallow)?;
        let b = collision_resistance(s, HashForm::SINGLE_QUBIT_WITH_SUM)?;
        if a.epsilon.to_bits() != b.epsilon.to_bits() || a.worst_x != b.worst_x {
            worst = worst.max((a.epsilon - b.epsilon).abs().max(f64::MIN_POSITIVE));
        }
        let shallow = shallow_states(s, corrupt)?;
        let single = single_states(s, true)?;
        for x1 in 0..q as usize {
            for x2 in 0..q as usize {
                let lhs = shallow[x1].inner_product(&shallow[x2])?.abs();
                let rhs = single[x1].inner_product(&single[x2])?.abs();
                worst = worst.max((lhs - rhs).abs());
            }
        }
        Ok((worst, 2 * q * q + 1))
    })?;
    Ok(finish(EQUIVALENCE_CHECK, swept, TOLERANCE))
}

fn check_ucr(cfg: &VerifyConfig) -> Result<LemmaCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(1);
    let period = 4.0 * std::f64::consts::PI;
    let mut cases = Vec::new();
    for n in 1..=cfg.n_max {
        for _ in 0..cfg.trials {
            let gamma = rng.random_range(-period..period);
            let gammas: Vec<f64> = (0..n).map(|_| rng.random_range(-period..period)).collect();
            cases.push((gamma, gammas));
        }
    }
    let results = cases
        .par_iter()
        .map(|(gamma, gammas)| ucr_deviation(*gamma, gammas))
        .collect::<Result<Vec<_>>>()?;
    let swept = results
        .into_iter()
        .fold((0.0, 0), |(d, c), (d2, c2)| (f64::max(d, d2), c + c2));
    Ok(finish(UCR_CHECK, swept, TOLERANCE))
}

/// Compares the UCR with `θ_j = γ + Σ_k j_k γ_k` against `R_y(γ)` followed by
/// `n` controlled `R_y(γ_k)`, on all `2^{n+1}` basis inputs.
pub fn ucr_deviation(gamma: f64, gammas: &[f64]) -> Result<(f64, u64)> {
    let n = gammas.len();
    let controls: Vec<usize> = (0..n).collect();
    let thetas = (0..1usize << n)
        .map(|j| {
            let extra: f64 = (0..n)
                .filter(|&k| (j >> (n - 1 - k)) & 1 == 1)
                .map(|k| gammas[k])
                .sum();
            Angle::radians(gamma + extra)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut worst = 0.0f64;
    for basis in 0..1usize << (n + 1) {
        let input = StateVector::basis_state(n + 1, basis)?;
        let mut ucr = input.clone();
        ucr.apply_ucr(&controls, n, &thetas)?;
        let mut shallow = input;
        shallow.apply_ry(n, Angle::radians(gamma)?)?;
        for (k, &g) in gammas.iter().enumerate() {
            shallow.apply_controlled_ry(&ControlSpec::on_one(k), n, Angle::radians(g)?)?;
        }
        worst = worst.max(ucr.max_abs_diff(&shallow)?);
    }
    Ok((worst, 1 << (n + 1)))
}
