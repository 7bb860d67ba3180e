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

fn rad(v: f64) -> Angle {
    Angle::radians(v).unwrap()
}

fn assert_amps(state: &StateVector, expected: &[f64], tol: f64) {
    assert_eq!(state.amplitudes().len(), expected.len());
    for (i, (a, e)) in state.amplitudes().iter().zip(expected).enumerate() {
        assert!((a - e).abs() <= tol, "amplitude {i}: {a} vs {e}");
    }
}

#[test]
fn zero_state_examples() {
    assert_eq!(
        StateVector::zero_state(1).unwrap().amplitudes(),
        &[1.0, 0.0]
    );
    assert_eq!(
        StateVector::zero_state(2).unwrap().amplitudes(),
        &[1.0, 0.0, 0.0, 0.0]
    );
    assert_eq!(StateVector::zero_state(25), Err(Error::QubitCount(25)));
    assert_eq!(StateVector::zero_state(0), Err(Error::QubitCount(0)));
}

#[test]
fn ry_examples() {
    let mut s = StateVector::zero_state(1).unwrap();
    s.apply_ry(0, rad(0.0)).unwrap();
    assert_amps(&s, &[1.0, 0.0], 0.0);

    let mut s = StateVector::zero_state(1).unwrap();
    s.apply_ry(0, rad(PI)).unwrap();
    assert_amps(&s, &[0.0, 1.0], 1e-15);

    let mut s = StateVector::zero_state(1).unwrap();
    s.apply_ry(0, rad(PI / 2.0)).unwrap();
    // Matrix entries cos(π/4), sin(π/4) evaluated directly.
    assert_amps(&s, &[(PI / 4.0).cos(), (PI / 4.0).sin()], 1e-15);

    let mut s = StateVector::zero_state(1).unwrap();
    assert_eq!(
        s.apply_ry(1, rad(1.0)).unwrap_err(),
        Error::QubitIndex {
            index: 1,
            num_qubits: 1
        }
    );
}

#[test]
fn exact_ry_of_pi_is_exact() {
    let mut s = StateVector::zero_state(1).unwrap();
    s.apply_ry(0, Angle::pi_ratio(1, 1)).unwrap();
    assert_eq!(s.amplitudes(), &[0.0, 1.0]);
}

#[test]
fn hadamard_examples() {
    let mut s = StateVector::zero_state(1).unwrap();
    s.apply_h(0).unwrap();
    assert_amps(&s, &[FRAC_1_SQRT_2, FRAC_1_SQRT_2], 0.0);

    let mut s = StateVector::basis_state(1, 1).unwrap();
    s.apply_h(0).unwrap();
    assert_amps(&s, &[FRAC_1_SQRT_2, -FRAC_1_SQRT_2], 0.0);

    let mut s = StateVector::zero_state(1).unwrap();
    s.apply_h(0).unwrap().apply_h(0).unwrap();
    assert_amps(&s, &[1.0, 0.0], 1e-15);

    assert!(StateVector::zero_state(2).unwrap().apply_h(2).is_err());
}

#[test]
fn controlled_ry_examples() {
    // |10⟩ is index 2 with qubit 0 as the most significant bit.
    let mut s = StateVector::basis_state(2, 0b10).unwrap();
    s.apply_controlled_ry(&ControlSpec::on_one(0), 1, rad(PI))
        .unwrap();
    assert_amps(&s, &[0.0, 0.0, 0.0, 1.0], 1e-15);

    let mut s = StateVector::zero_state(2).unwrap();
    s.apply_controlled_ry(&ControlSpec::on_one(0), 1, rad(PI))
        .unwrap();
    assert_amps(&s, &[1.0, 0.0, 0.0, 0.0], 0.0);

    let mut s = StateVector::zero_state(2).unwrap();
    s.apply_controlled_ry(&ControlSpec::new([(0, Polarity::OnZero)]), 1, rad(PI))
        .unwrap();
    assert_amps(&s, &[0.0, 1.0, 0.0, 0.0], 1e-15);
}

#[test]
fn controlled_ry_rejects_bad_controls() {
    let mut s = StateVector::zero_state(3).unwrap();
    assert_eq!(
        s.apply_controlled_ry(&ControlSpec::on_one(1), 1, rad(1.0))
            .unwrap_err(),
        Error::OverlappingQubits(1)
    );
    let dup = ControlSpec::new([(0, Polarity::OnOne), (0, Polarity::OnZero)]);
    assert_eq!(
        s.apply_controlled_ry(&dup, 2, rad(1.0)).unwrap_err(),
        Error::OverlappingQubits(0)
    );
    assert!(s
        .apply_controlled_ry(&ControlSpec::on_one(3), 2, rad(1.0))
        .is_err());
}

#[test]
fn ucr_examples() {
    let thetas = [Angle::ZERO, rad(PI)];
    let mut s = StateVector::basis_state(2, 0b10).unwrap();
    s.apply_ucr(&[0], 1, &thetas).unwrap();
    assert_amps(&s, &[0.0, 0.0, 0.0, 1.0], 1e-15);

    let mut s = StateVector::zero_state(2).unwrap();
    s.apply_ucr(&[0], 1, &thetas).unwrap();
    assert_amps(&s, &[1.0, 0.0, 0.0, 0.0], 0.0);

    let mut s = StateVector::zero_state(2).unwrap();
    assert_eq!(
        s.apply_ucr(&[0], 1, &[Angle::ZERO]).unwrap_err(),
        Error::AngleCount {
            expected: 2,
            actual: 1
        }
    );
    assert_eq!(
        s.apply_ucr(&[1], 1, &thetas).unwrap_err(),
        Error::OverlappingQubits(1)
    );
}

#[test]
fn ucr_control_order_is_msb_first() {
    // Controls listed as [1, 0]: qubit 1 carries the most significant bit of j.
    // Basis |q0 q1 q2⟩ = |0 1 0⟩ therefore selects j = 0b10 = 2.
    let thetas = [Angle::ZERO, Angle::ZERO, rad(PI), Angle::ZERO];
    let mut s = StateVector::basis_state(3, 0b010).unwrap();
    s.apply_ucr(&[1, 0], 2, &thetas).unwrap();
    assert_amps(
        &s,
        StateVector::basis_state(3, 0b011).unwrap().amplitudes(),
        1e-15,
    );
}

#[test]
fn inner_product_examples() {
    let zero = StateVector::zero_state(1).unwrap();
    let one = StateVector::basis_state(1, 1).unwrap();
    assert_eq!(zero.inner_product(&zero).unwrap(), 1.0);
    assert_eq!(zero.inner_product(&one).unwrap(), 0.0);
    let mut rotated = zero.clone();
    rotated.apply_ry(0, rad(PI / 2.0)).unwrap();
    // ⟨Ry(π/2)0|0⟩ = cos(π/4).
    assert!((rotated.inner_product(&zero).unwrap() - (PI / 4.0).cos()).abs() < 1e-15);
    assert_eq!(
        zero.inner_product(&StateVector::zero_state(2).unwrap()),
        Err(Error::SizeMismatch(1, 2))
    );
}

#[test]
fn from_amplitudes_checks_length() {
    assert!(StateVector::from_amplitudes(vec![1.0, 0.0, 0.0]).is_err());
    assert!(StateVector::from_amplitudes(vec![1.0]).is_err());
    assert_eq!(
        StateVector::from_amplitudes(vec![1.0, 0.0, 0.0, 0.0])
            .unwrap()
            .num_qubits(),
        2
    );
}

#[test]
fn separability_residual_detects_entanglement() {
    let h = FRAC_1_SQRT_2;
    let bell = StateVector::from_amplitudes(vec![h, 0.0, 0.0, h]).unwrap();
    assert!(bell.separability_residual(1).unwrap() > 0.5);
    let mut product = StateVector::zero_state(3).unwrap();
    product
        .apply_ry(0, rad(0.3))
        .unwrap()
        .apply_ry(1, rad(1.1))
        .unwrap()
        .apply_ry(2, rad(2.9))
        .unwrap();
    for k in 1..3 {
        assert!(product.separability_residual(k).unwrap() < 1e-15);
    }
}

/// Gate-by-gate oracle for a UCR: one multi-controlled rotation per control
/// pattern.
fn ucr_by_patterns(
    state: &StateVector,
    controls: &[usize],
    target: usize,
    thetas: &[Angle],
) -> StateVector {
    let mut out = state.clone();
    for (pattern, &theta) in thetas.iter().enumerate() {
        out.apply_controlled_ry(&ControlSpec::from_pattern(controls, pattern), target, theta)
            .unwrap();
    }
    out
}

#[test]
fn ucr_n2_matches_four_controlled_rotations() {
    let thetas: Vec<Angle> = [0.4, -1.3, 2.2, 5.9].iter().map(|&t| rad(t)).collect();
    for basis in 0..8 {
        let input = StateVector::basis_state(3, basis).unwrap();
        let mut ucr = input.clone();
        ucr.apply_ucr(&[0, 1], 2, &thetas).unwrap();
        let oracle = ucr_by_patterns(&input, &[0, 1], 2, &thetas);
        assert!(ucr.max_abs_diff(&oracle).unwrap() <= 1e-12);
    }
}

fn angle_strategy() -> impl Strategy<Value = f64> {
    -4.0 * PI..4.0 * PI
}

#[derive(Clone, Debug)]
enum Op {
    H(usize),
    Ry(usize, f64),
    Cry(usize, bool, usize, f64),
}

fn op_strategy(m: usize) -> impl Strategy<Value = Op> {
    prop_oneof![
        (0..m).prop_map(Op::H),
        (0..m, angle_strategy()).prop_map(|(t, a)| Op::Ry(t, a)),
        (0..m, any::<bool>(), 1..m, angle_strategy()).prop_map(move |(c, p, off, a)| Op::Cry(
            c,
            p,
            (c + off) % m,
            a
        )),
    ]
}

proptest! {
    #[test]
    fn gates_preserve_norm(ops in prop::collection::vec(op_strategy(4), 1..40)) {
        let mut s = StateVector::zero_state(4).unwrap();
        for op in ops {
            match op {
                Op::H(t) => { s.apply_h(t).unwrap(); }
                Op::Ry(t, a) => { s.apply_ry(t, rad(a)).unwrap(); }
                Op::Cry(c, on_one, t, a) => {
                    let pol = if on_one { Polarity::OnOne } else { Polarity::OnZero };
                    s.apply_controlled_ry(&ControlSpec::new([(c, pol)]), t, rad(a)).unwrap();
                }
            }
        }
        prop_assert!((s.norm_sqr() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn ry_is_additive(a in angle_strategy(), b in angle_strategy(), prep in angle_strategy()) {
        let mut s = StateVector::zero_state(2).unwrap();
        s.apply_h(0).unwrap().apply_ry(1, rad(prep)).unwrap();
        let mut two_step = s.clone();
        two_step.apply_ry(1, rad(a)).unwrap().apply_ry(1, rad(b)).unwrap();
        let mut one_step = s.clone();
        one_step.apply_ry(1, rad(a) + rad(b)).unwrap();
        prop_assert!(two_step.max_abs_diff(&one_step).unwrap() <= 1e-12);
    }

    #[test]
    fn ucr_matches_pattern_composition(
        n in 1usize..=4,
        raw in prop::collection::vec(angle_strategy(), 16),
        basis in 0usize..32,
    ) {
        let thetas: Vec<Angle> = raw[..1 << n].iter().map(|&t| rad(t)).collect();
        let controls: Vec<usize> = (0..n).collect();
        let input = StateVector::basis_state(n + 1, basis % (1 << (n + 1))).unwrap();
        let mut ucr = input.clone();
        ucr.apply_ucr(&controls, n, &thetas).unwrap();
        let oracle = ucr_by_patterns(&input, &controls, n, &thetas);
        prop_assert!(ucr.max_abs_diff(&oracle).unwrap() <= 1e-12);
    }

    #[test]
    fn ucr_with_linear_angles_matches_two_qubit_decomposition(
        n in 1usize..=6,
        gamma in angle_strategy(),
        gammas in prop::collection::vec(angle_strategy(), 6),
    ) {
        let controls: Vec<usize> = (0..n).collect();
        let thetas: Vec<Angle> = (0..1usize << n)
            .map(|j| {
                let extra: f64 = (0..n)
                    .filter(|&k| (j >> (n - 1 - k)) & 1 == 1)
                    .map(|k| gammas[k])
                    .sum();
                rad(gamma + extra)
            })
            .collect();
        for basis in 0..1usize << (n + 1) {
            let input = StateVector::basis_state(n + 1, basis).unwrap();
            let mut ucr = input.clone();
            ucr.apply_ucr(&controls, n, &thetas).unwrap();
            let mut shallow = input.clone();
            shallow.apply_ry(n, rad(gamma)).unwrap();
            for (k, &g) in gammas.iter().take(n).enumerate() {
                shallow.apply_controlled_ry(&ControlSpec::on_one(k), n, rad(g)).unwrap();
            }
            prop_assert!(ucr.max_abs_diff(&shallow).unwrap() <= 1e-10);
        }
    }
}
