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

//! Amplitude-form quantum hashing over `Z_q`.
//!
//! The crate builds three families of hash states from a parameter set
//! `S ⊆ Z_q` (or an ε-biased set `B ⊆ Z_q`), computes their pairwise inner
//! products both by simulation and in closed form, and certifies collision
//! resistance by exhaustive sweeps over `x ∈ Z_q \ {0}`.
//!
//! - [`statevec`]: a real-amplitude state-vector simulator for `H`, `R_y`,
//!   multi-controlled `R_y` and uniformly controlled rotations.
//! - [`hashing`]: the standard, shallow and single-qubit constructions.
//! - [`analysis`]: bias, closed-form inner products, ε certification.
//! - [`search`]: seeded random and exhaustive search for good parameter sets.
//! - [`verify`]: the cross-check suite relating circuits and closed forms.
//!
//! ```
//! use qhash::analysis::{closed_inner_shallow, simulated_inner, HashInput};
//! use qhash::hashing::{HashForm, ParamSet};
//!
//! let s = ParamSet::new(8, vec![1, 2]).unwrap();
//! assert_eq!(closed_inner_shallow(&s, 1, 0).unwrap(), 0.25);
//! let simulated = simulated_inner(HashForm::Shallow, HashInput::Params(&s), 1, 0).unwrap();
//! assert!((simulated - 0.25).abs() < 1e-10);
//! ```

pub mod analysis;
mod error;
pub mod hashing;
pub mod search;
pub mod statevec;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/simulator.md")]
    mod simulator {}
    #[doc = include_str!("../../../book/src/hash-forms.md")]
    mod hash_forms {}
    #[doc = include_str!("../../../book/src/collision-resistance.md")]
    mod collision_resistance {}
    #[doc = include_str!("../../../book/src/biased-sets.md")]
    mod biased_sets {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
}
