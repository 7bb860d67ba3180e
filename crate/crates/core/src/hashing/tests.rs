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

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use proptest::prelude::*;

use super::*;

fn params(q: u64, s: &[u64]) -> ParamSet {
    ParamSet::new(q, s.to_vec()).unwrap()
}

/// Termwise evaluation of `(1/√2^n) Σ_j |j⟩ ⊗ (cos(2π f x/q)|0⟩ + sin(2π f x/q)|1⟩)`
/// with `f = Σ_k j_k s_k` computed without modular reduction.
fn shallow_oracle(s: &[u64], q: u64, x: u64) -> Vec<f64> {
    let n = s.len();
    let norm = 1.0 / ((1u64 << n) as f64).sqrt();
    let mut amps = vec![0.0; 1 << (n + 1)];
    for j in 0..1usize << n {
        let f: u64 = (0..n)
            .filter(|&k| (j >> (n - 1 - k)) & 1 == 1)
            .map(|k| s[k])
            .sum();
        let phase = 2.0 * PI * (f * x) as f64 / q as f64;
        amps[j << 1] = norm * phase.cos();
        amps[(j << 1) | 1] = norm * phase.sin();
    }
    amps
}

/// Tensor product of `cos(π s_j x/q)|0⟩ + sin(π s_j x/q)|1⟩`.
fn single_qubit_oracle(s: &[u64], q: u64, x: u64, sum_qubit: bool) -> Vec<f64> {
    let mut halves: Vec<f64> = s
        .iter()
        .map(|&sj| PI * (sj * x) as f64 / q as f64)
        .collect();
    if sum_qubit {
        halves.push(PI * (s.iter().sum::<u64>() * x) as f64 / q as f64);
    }
    let mut amps = vec![1.0];
    for h in halves {
        amps = amps
            .iter()
            .flat_map(|a| [a * h.cos(), a * h.sin()])
            .collect();
    }
    amps
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

#[test]
fn param_set_validation() {
    assert_eq!(ParamSet::new(1, vec![0]), Err(Error::Modulus(1)));
    assert_eq!(ParamSet::new(5, vec![]), Err(Error::SetSize(0)));
    assert_eq!(ParamSet::new(5, vec![1; 21]), Err(Error::SetSize(21)));
    assert_eq!(
        ParamSet::new(5, vec![1, 5]),
        Err(Error::Unreduced { value: 5, q: 5 })
    );
    assert!(params(5, &[1, 1]).has_duplicates());
    assert!(!params(5, &[1, 2]).has_duplicates());
    assert_eq!(BiasedSet::new(5, vec![]), Err(Error::EmptySet));
}

#[test]
fn linear_combination_examples() {
    let s = params(8, &[1, 2]);
    assert_eq!(s.linear_combination(0).unwrap(), 0);
    // j = 1 has bits j_0 j_1 = 01, so only s_1 = 2 contributes.
    assert_eq!(s.linear_combination(1).unwrap(), 2);
    assert_eq!(s.linear_combination(2).unwrap(), 1);
    assert_eq!(s.linear_combination(3).unwrap(), 3);
    assert_eq!(
        s.linear_combination(4),
        Err(Error::IndexRange { j: 4, n: 2 })
    );
    assert_eq!(params(8, &[5, 7]).linear_combination(3).unwrap(), 4);
}

#[test]
fn derive_biased_set_examples() {
    assert_eq!(
        params(8, &[1, 2]).derive_biased_set().values(),
        &[0, 2, 1, 3]
    );
    assert_eq!(params(5, &[0]).derive_biased_set().values(), &[0, 0]);
    assert_eq!(params(4, &[3]).derive_biased_set().values(), &[0, 3]);
}

#[test]
fn standard_hash_examples() {
    let b = BiasedSet::new(8, vec![0, 2, 1, 3]).unwrap();
    let zero = build_standard_hash(&b, 0).unwrap();
    let mut uniform = vec![0.0; 8];
    for j in 0..4 {
        uniform[j << 1] = 0.5;
    }
    assert!(max_diff(zero.amplitudes(), &uniform) <= 1e-15);

    // (1/√2)·[cos 0, sin 0, cos(π/2), sin(π/2)]
    let b = BiasedSet::new(8, vec![0, 2]).unwrap();
    let state = build_standard_hash(&b, 1).unwrap();
    assert!(
        max_diff(
            state.amplitudes(),
            &[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]
        ) <= 1e-15
    );

    let b = BiasedSet::new(8, vec![0, 2, 1]).unwrap();
    assert_eq!(build_standard_hash(&b, 1), Err(Error::NotPowerOfTwo(3)));
    let b = BiasedSet::new(8, vec![0, 2]).unwrap();
    assert_eq!(
        build_standard_hash(&b, 8),
        Err(Error::ResidueRange { x: 8, q: 8 })
    );
}

#[test]
fn standard_hash_of_singleton_set() {
    let b = BiasedSet::new(8, vec![3]).unwrap();
    let state = build_standard_hash(&b, 1).unwrap();
    assert_eq!(state.num_qubits(), 1);
    let phase = 2.0 * PI * 3.0 / 8.0;
    assert!(max_diff(state.amplitudes(), &[phase.cos(), phase.sin()]) <= 1e-15);
}

#[test]
fn shallow_hash_examples() {
    let s = params(8, &[1, 2]);
    let zero = build_shallow_hash(&s, 0).unwrap();
    assert!(max_diff(zero.amplitudes(), &[0.5, 0.0, 0.5, 0.0, 0.5, 0.0, 0.5, 0.0]) <= 1e-15);

    let state = build_shallow_hash(&s, 1).unwrap();
    assert_eq!(state.num_qubits(), 3);
    let amps = state.amplitudes();
    // j = 3 is the last address value: f = 3, angle 2π·3/8 = 3π/4.
    assert!((amps[6] - 0.5 * (3.0 * PI / 4.0).cos()).abs() <= 1e-15);
    assert!((amps[7] - 0.5 * (3.0 * PI / 4.0).sin()).abs() <= 1e-15);
    assert!(max_diff(amps, &shallow_oracle(&[1, 2], 8, 1)) <= 1e-15);

    let standard = build_standard_hash(&s.derive_biased_set(), 1).unwrap();
    assert!(standard.max_abs_diff(&state).unwrap() <= 1e-12);
}

#[test]
fn single_qubit_hash_examples() {
    let s = params(4, &[1]);
    assert_eq!(
        build_single_qubit_hash(&s, 0, false).unwrap().amplitudes(),
        &[1.0, 0.0]
    );
    assert_eq!(
        build_single_qubit_hash(&s, 0, true).unwrap().amplitudes(),
        &[1.0, 0.0, 0.0, 0.0]
    );
    let state = build_single_qubit_hash(&s, 1, false).unwrap();
    assert!(max_diff(state.amplitudes(), &[(PI / 4.0).cos(), (PI / 4.0).sin()]) <= 1e-15);

    let s = params(8, &[1, 2]);
    let circuit = single_qubit_circuit(&s, 1, true).unwrap();
    assert_eq!(circuit.num_qubits(), 3);
    match circuit.gates().last().unwrap() {
        Gate::Ry { target, angle } => {
            assert_eq!(*target, 2);
            assert!((angle.to_radians() - 2.0 * PI * 3.0 / 8.0).abs() < 1e-15);
        }
        other => panic!("unexpected gate {other:?}"),
    }
    let state = circuit.run().unwrap();
    assert!(
        max_diff(
            state.amplitudes(),
            &single_qubit_oracle(&[1, 2], 8, 1, true)
        ) <= 1e-15
    );
}

#[test]
fn single_qubit_reduction_keeps_sign() {
    // s·x = 6 ≥ q: reducing modulo q instead of 2q would flip the sign of the qubit.
    let built = build_single_qubit_hash(&params(4, &[3]), 2, false).unwrap();
    let oracle = single_qubit_oracle(&[3], 4, 2, false);
    assert!(max_diff(built.amplitudes(), &oracle) <= 1e-15);
}

#[test]
fn form_dispatch() {
    let s = params(8, &[1, 2]);
    let b = s.derive_biased_set();
    let via_params = build_hash(HashForm::Standard, HashInput::Params(&s), 3).unwrap();
    let via_set = build_hash(HashForm::Standard, HashInput::Biased(&b), 3).unwrap();
    assert_eq!(via_params, via_set);
    assert!(build_hash(HashForm::Shallow, HashInput::Biased(&b), 3).is_err());
}

fn set_strategy(max_n: usize, max_q: u64) -> impl Strategy<Value = (u64, Vec<u64>)> {
    (2..=max_q).prop_flat_map(move |q| (Just(q), prop::collection::vec(0..q, 1..=max_n)))
}

proptest! {
    #[test]
    fn standard_equals_shallow((q, s) in set_strategy(6, 64)) {
        let s = params(q, &s);
        let b = s.derive_biased_set();
        for x in 0..q {
            let standard = build_standard_hash(&b, x).unwrap();
            let shallow = build_shallow_hash(&s, x).unwrap();
            prop_assert!(standard.max_abs_diff(&shallow).unwrap() <= 1e-12);
        }
    }

    #[test]
    fn shallow_matches_termwise_formula((q, s) in set_strategy(6, 64), x_seed in any::<u64>()) {
        let x = x_seed % q;
        let built = build_shallow_hash(&params(q, &s), x).unwrap();
        prop_assert!(max_diff(built.amplitudes(), &shallow_oracle(&s, q, x)) <= 1e-10);
    }

    #[test]
    fn single_qubit_matches_tensor_product(
        (q, s) in set_strategy(8, 64),
        x_seed in any::<u64>(),
        sum_qubit in any::<bool>(),
    ) {
        let x = x_seed % q;
        let built = build_single_qubit_hash(&params(q, &s), x, sum_qubit).unwrap();
        prop_assert!(max_diff(built.amplitudes(), &single_qubit_oracle(&s, q, x, sum_qubit)) <= 1e-10);
    }

    #[test]
    fn built_states_are_normalized((q, s) in set_strategy(6, 1000), x_seed in any::<u64>()) {
        let x = x_seed % q;
        let s = params(q, &s);
        for form in [HashForm::Standard, HashForm::Shallow, HashForm::SINGLE_QUBIT_PLAIN, HashForm::SINGLE_QUBIT_WITH_SUM] {
            let state = build_hash(form, HashInput::Params(&s), x).unwrap();
            prop_assert!((state.norm_sqr() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn single_qubit_hash_is_a_product_state((q, s) in set_strategy(8, 64), x_seed in any::<u64>()) {
        let x = x_seed % q;
        let state = build_single_qubit_hash(&params(q, &s), x, true).unwrap();
        for cut in 1..state.num_qubits() {
            prop_assert!(state.separability_residual(cut).unwrap() <= 1e-10);
        }
    }

    #[test]
    fn hash_is_periodic_in_x((q, s) in set_strategy(5, 64), x_seed in any::<u64>()) {
        let x = x_seed % q;
        let set = params(q, &s);
        let shallow = build_shallow_hash(&set, x).unwrap();
        let shifted = StateVector::from_amplitudes(shallow_oracle(&s, q, x + q)).unwrap();
        prop_assert!((shallow.inner_product(&shifted).unwrap().abs() - 1.0).abs() <= 1e-10);
        for sum_qubit in [false, true] {
            let single = build_single_qubit_hash(&set, x, sum_qubit).unwrap();
            let shifted = StateVector::from_amplitudes(single_qubit_oracle(&s, q, x + q, sum_qubit)).unwrap();
            prop_assert!((single.inner_product(&shifted).unwrap().abs() - 1.0).abs() <= 1e-10);
        }
    }
}
