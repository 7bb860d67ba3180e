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

//! Cosine and sine of rational multiples of π.
//!
//! Angles in the hash constructions are always of the form `π·k/q` for
//! integers `k` and `q`. Reducing `k` exactly in integer arithmetic and
//! folding into the first octant keeps large `k` from losing precision, and
//! makes multiples of `π/2` come out as exact zeros and ones.

use std::f64::consts::PI;

/// Returns `(cos(π·num/den), sin(π·num/den))`.
///
/// Panics if `den == 0`.
pub fn cos_sin_pi_ratio(num: i128, den: u64) -> (f64, f64) {
    assert!(den > 0, "zero denominator");
    let den = den as i128;
    // Measure the angle in units of π/(2·den); a full turn is 4·den units.
    let units = (2 * num).rem_euclid(4 * den);
    let quadrant = units / den;
    let offset = units - quadrant * den;
    let (c, s) = if 2 * offset <= den {
        let phi = PI * offset as f64 / (2 * den) as f64;
        (phi.cos(), phi.sin())
    } else {
        let phi = PI * (den - offset) as f64 / (2 * den) as f64;
        (phi.sin(), phi.cos())
    };
    match quadrant {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    }
}

/// `cos(π·num/den)`.
pub fn cos_pi_ratio(num: i128, den: u64) -> f64 {
    cos_sin_pi_ratio(num, den).0
}
