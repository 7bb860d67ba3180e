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

//! Bias, closed-form inner products and collision-resistance certificates.
//!
//! Every ε reported here comes from an exhaustive sweep over
//! `x = 1, …, q-1`; moduli above [`MAX_SWEEP_MODULUS`] are refused rather
//! than sampled. All inner products between hashes of `x_1` and `x_2` depend
//! only on `x = x_1 - x_2`, so a sweep with `x_2 = 0` covers every pair.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hashing::{build_hash, check_residue, BiasedSet, HashForm, ParamSet};
use crate::statevec::StateVector;
use crate::trig::{cos_pi_ratio, cos_sin_pi_ratio};

pub use crate::hashing::HashInput;

/// Largest modulus accepted by the exhaustive sweeps.
pub const MAX_SWEEP_MODULUS: u64 = 1 << 20;

/// One row of a sweep: the signed value at `x` and its magnitude.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TableEntry {
    pub x: u64,
    pub value: f64,
    pub magnitude: f64,
}

/// Result of an exhaustive sweep over `x ≠ 0`.
///
/// `epsilon` is the largest magnitude in `table` and `worst_x` the smallest
/// `x` attaining it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResistanceReport {
    pub epsilon: f64,
    pub worst_x: u64,
    pub table: Vec<TableEntry>,
}

impl ResistanceReport {
    fn from_table(table: Vec<TableEntry>) -> Self {
        let (epsilon, worst_x) = max_with_first_argmax(table.iter().map(|e| (e.x, e.magnitude)));
        ResistanceReport {
            epsilon,
            worst_x,
            table,
        }
    }
}

/// Maximum value and the first key reaching it. Ties keep the earlier key,
/// so the result does not depend on how the values were computed.
fn max_with_first_argmax(values: impl Iterator<Item = (u64, f64)>) -> (f64, u64) {
    let mut best = (f64::NEG_INFINITY, 0);
    for (x, v) in values {
        if v > best.0 {
            best = (v, x);
        }
    }
    best
}

fn check_sweep(q: u64) -> Result<()> {
    if q > MAX_SWEEP_MODULUS {
        return Err(Error::SweepTooLarge {
            q,
            cap: MAX_SWEEP_MODULUS,
        });
    }
    Ok(())
}

fn sweep(q: u64, value_at: impl Fn(u64) -> f64 + Sync) -> ResistanceReport {
    let table = (1..q)
        .into_par_iter()
        .map(|x| {
            // Adding +0.0 turns a -0.0 into +0.0.
            let value = value_at(x) + 0.0;
            TableEntry {
                x,
                value,
                magnitude: value.abs(),
            }
        })
        .collect();
    ResistanceReport::from_table(table)
}

/// `bias(B, x) = |Σ_b e^{2πi b x / q}| / |B|`.
pub fn bias(b: &BiasedSet, x: u64) -> Result<f64> {
    check_residue(x, b.q())?;
    Ok(bias_unchecked(b, x))
}

fn bias_unchecked(b: &BiasedSet, x: u64) -> f64 {
    let q = b.q();
    let sum: Complex64 = b
        .values()
        .iter()
        .map(|&v| {
            let (re, im) = cos_sin_pi_ratio(2 * mul_mod(v, x, q) as i128, q);
            Complex64::new(re, im)
        })
        .sum();
    (sum.norm() / b.len() as f64).min(1.0)
}

/// `B' = {0, b_1 - b_0, …, b_{d-1} - b_0}`, which has the same bias as `B`
/// at every `x`.
pub fn shift_normalize(b: &BiasedSet) -> BiasedSet {
    let q = b.q();
    let first = b.values()[0];
    let shifted = b.values().iter().map(|&v| (v + q - first) % q).collect();
    BiasedSet::new(q, shifted).expect("shift keeps elements reduced")
}

/// `max_{x ≠ 0} bias(B, x)` by exhaustive sweep.
pub fn epsilon_of_biased_set(b: &BiasedSet) -> Result<ResistanceReport> {
    check_sweep(b.q())?;
    Ok(sweep(b.q(), |x| bias_unchecked(b, x)))
}

/// The pair `((1/d)|Σ_j cos(2π b_j x/q)|, (1/d)|Σ_j e^{2πi b_j x/q}|)`.
/// The first never exceeds the second.
pub fn cosine_sum_check(b: &BiasedSet, x: u64) -> Result<(f64, f64)> {
    check_residue(x, b.q())?;
    if x == 0 {
        return Err(Error::ZeroShift);
    }
    let d = b.len() as f64;
    let cosines: f64 = b
        .values()
        .iter()
        .map(|&v| cos_pi_ratio(2 * mul_mod(v, x, b.q()) as i128, b.q()))
        .sum();
    Ok((cosines.abs() / d, bias_unchecked(b, x)))
}

/// `Π_j cos(π s_j (x_1 - x_2)/q)`, times `cos(π (x_1 - x_2) Σ s_l / q)` when
/// `sum_qubit` is set.
pub fn closed_inner_single(s: &ParamSet, x1: u64, x2: u64, sum_qubit: bool) -> Result<f64> {
    check_residue(x1, s.q())?;
    check_residue(x2, s.q())?;
    Ok(cosine_product(s, x1 as i128 - x2 as i128, sum_qubit))
}

/// `cos(π (x_1 - x_2) Σ s_l / q) · Π_k cos(π s_k (x_1 - x_2)/q)`.
///
/// This is evaluated by the same expression as [`closed_inner_single`] with
/// the sum qubit, so the two agree bit for bit.
pub fn closed_inner_shallow(s: &ParamSet, x1: u64, x2: u64) -> Result<f64> {
    closed_inner_single(s, x1, x2, true)
}

/// `(1/d) Σ_j cos(2π b_j (x_1 - x_2)/q)`, the inner product of two standard
/// hashes.
pub fn closed_inner_standard(b: &BiasedSet, x1: u64, x2: u64) -> Result<f64> {
    check_residue(x1, b.q())?;
    check_residue(x2, b.q())?;
    Ok(cosine_mean(b, x1 as i128 - x2 as i128))
}

/// Closed-form inner product for any form.
pub fn closed_inner(form: HashForm, input: HashInput<'_>, x1: u64, x2: u64) -> Result<f64> {
    match (form, input) {
        (HashForm::Standard, HashInput::Biased(b)) => closed_inner_standard(b, x1, x2),
        (HashForm::Standard, HashInput::Params(s)) => {
            closed_inner_standard(&s.derive_biased_set(), x1, x2)
        }
        (HashForm::Shallow, HashInput::Params(s)) => closed_inner_shallow(s, x1, x2),
        (HashForm::SingleQubit { sum_qubit }, HashInput::Params(s)) => {
            closed_inner_single(s, x1, x2, sum_qubit)
        }
        (_, HashInput::Biased(_)) => Err(Error::InvalidConfig(
            "shallow and single-qubit forms are built from a parameter set".into(),
        )),
    }
}

/// Inner product of two hash states built by simulating their circuits.
pub fn simulated_inner(form: HashForm, input: HashInput<'_>, x1: u64, x2: u64) -> Result<f64> {
    let a = build_hash(form, input, x1)?;
    let b = build_hash(form, input, x2)?;
    a.inner_product(&b)
}

/// Collision resistance `ε = max_{x ≠ 0} |⟨ψ(x)|ψ(0)⟩|` from the closed form.
///
/// The standard form expands `S` into its `2^n` linear combinations and uses
/// the cosine mean directly.
pub fn collision_resistance(s: &ParamSet, form: HashForm) -> Result<ResistanceReport> {
    check_sweep(s.q())?;
    Ok(match form {
        HashForm::Standard => {
            let b = s.derive_biased_set();
            sweep(s.q(), |x| cosine_mean(&b, x as i128))
        }
        HashForm::Shallow => sweep(s.q(), |x| cosine_product(s, x as i128, true)),
        HashForm::SingleQubit { sum_qubit } => {
            sweep(s.q(), |x| cosine_product(s, x as i128, sum_qubit))
        }
    })
}

/// The ε of [`collision_resistance`] without building the table.
/// Runs on the calling thread.
pub fn resistance_epsilon(s: &ParamSet, form: HashForm) -> Result<f64> {
    check_sweep(s.q())?;
    let value_at: Box<dyn Fn(u64) -> f64> = match form {
        HashForm::Standard => {
            let b = s.derive_biased_set();
            Box::new(move |x| cosine_mean(&b, x as i128))
        }
        HashForm::Shallow => Box::new(|x| cosine_product(s, x as i128, true)),
        HashForm::SingleQubit { sum_qubit } => {
            Box::new(move |x| cosine_product(s, x as i128, sum_qubit))
        }
    };
    Ok(max_with_first_argmax((1..s.q()).map(|x| (x, value_at(x).abs()))).0)
}

/// Acceptance probability of the SWAP test on `a` and `b`:
/// `(1 + ⟨a|b⟩²) / 2`, clamped to at most 1 against rounding in the overlap.
pub fn equality_test_prob(a: &StateVector, b: &StateVector) -> Result<f64> {
    let overlap = a.inner_product(b)?;
    Ok(((1.0 + overlap * overlap) / 2.0).min(1.0))
}

fn cosine_product(s: &ParamSet, diff: i128, sum_qubit: bool) -> f64 {
    let q = s.q();
    let product: f64 = s
        .values()
        .iter()
        .map(|&v| cos_pi_ratio(v as i128 * diff, q))
        .product();
    if sum_qubit {
        let total = (s.sum() % (2 * q as u128)) as i128;
        product * cos_pi_ratio(total * diff, q)
    } else {
        product
    }
}

fn cosine_mean(b: &BiasedSet, diff: i128) -> f64 {
    let q = b.q() as i128;
    let total: f64 = b
        .values()
        .iter()
        .map(|&v| cos_pi_ratio(2 * (v as i128 * diff).rem_euclid(q), b.q()))
        .sum();
    total / b.len() as f64
}

fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    (a as u128 * b as u128 % q as u128) as u64
}
