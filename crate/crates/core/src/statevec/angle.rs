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

use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::trig::cos_sin_pi_ratio;

/// A rotation angle in radians.
///
/// Angles are stored either as a plain floating-point value or, when built by
/// the hash constructions, exactly as `π·num/den`. The exact form is reduced
/// modulo `4π`, the period of `R_y`, so it never grows with the input.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Angle(Repr);

#[derive(Clone, Copy, Debug, PartialEq)]
enum Repr {
    Radians(f64),
    PiRatio { num: i128, den: u64 },
}

impl Angle {
    pub const ZERO: Angle = Angle(Repr::PiRatio { num: 0, den: 1 });

    pub fn radians(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFiniteAngle(value));
        }
        Ok(Angle(Repr::Radians(value)))
    }

    /// The angle `π·num/den`, reduced into `[0, 4π)`.
    ///
    /// Panics if `den == 0`.
    pub fn pi_ratio(num: i128, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den as u128);
        let den = den / g as u64;
        let num = (num / g as i128).rem_euclid(4 * den as i128);
        Angle(Repr::PiRatio { num, den })
    }

    pub fn to_radians(self) -> f64 {
        match self.0 {
            Repr::Radians(v) => v,
            Repr::PiRatio { num, den } => std::f64::consts::PI * num as f64 / den as f64,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self.0, Repr::PiRatio { .. })
    }

    /// Canonical representative in `[0, 4π)`.
    pub fn canonical(self) -> Self {
        match self.0 {
            Repr::Radians(v) => {
                let period = 4.0 * std::f64::consts::PI;
                Angle(Repr::Radians(v.rem_euclid(period)))
            }
            exact => Angle(exact),
        }
    }

    /// `(cos(θ/2), sin(θ/2))`, the entries of the `R_y(θ)` matrix.
    pub fn half_cos_sin(self) -> (f64, f64) {
        match self.0 {
            Repr::Radians(v) => {
                let half = v / 2.0;
                (half.cos(), half.sin())
            }
            Repr::PiRatio { num, den } => cos_sin_pi_ratio(num, 2 * den),
        }
    }
}

impl Add for Angle {
    type Output = Angle;

    fn add(self, rhs: Angle) -> Angle {
        if let (Repr::PiRatio { num: a, den: da }, Repr::PiRatio { num: b, den: db }) =
            (self.0, rhs.0)
        {
            let g = gcd(da as u128, db as u128) as u64;
            let lcm = (da / g).checked_mul(db);
            if let Some(lcm) = lcm {
                let lhs = a.checked_mul((lcm / da) as i128);
                let rhs = b.checked_mul((lcm / db) as i128);
                if let Some(sum) = lhs.zip(rhs).and_then(|(x, y)| x.checked_add(y)) {
                    return Angle::pi_ratio(sum, lcm);
                }
            }
        }
        Angle(Repr::Radians(self.to_radians() + rhs.to_radians()))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Repr::Radians(v) => write!(f, "{v}"),
            Repr::PiRatio { num: 0, .. } => write!(f, "0"),
            Repr::PiRatio { num, den: 1 } => write!(f, "{num}π"),
            Repr::PiRatio { num, den } => write!(f, "{num}π/{den}"),
        }
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.to_radians())
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}
