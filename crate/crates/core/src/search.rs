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

//! Seeded search for parameter sets with small collision resistance.
//!
//! Good sets of size `O(log q)` exist by a probabilistic argument but no
//! explicit recipe is known, so [`random_search`] draws sets uniformly from
//! `[1, q)^n` and keeps the best certified one. [`exhaustive_search`] is the
//! ground truth for small `q` and `n`.
//!
//! Trial `t` draws from its own ChaCha stream keyed by `(seed, t)`. Trials are
//! evaluated in parallel in fixed-size blocks and reduced in trial order, so
//! results do not depend on the number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    collision_resistance, resistance_epsilon, ResistanceReport, MAX_SWEEP_MODULUS,
};
use crate::error::{Error, Result};
use crate::hashing::{HashForm, ParamSet, MAX_PARAMS};

/// Upper bound on elementary cosine evaluations for one search.
pub const MAX_SEARCH_COST: u128 = 10_000_000_000;

/// Upper bound on `q^n` for [`exhaustive_search`].
pub const MAX_EXHAUSTIVE_SPACE: u128 = 10_000_000;

const BLOCK: u64 = 512;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchConfig {
    pub q: u64,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    /// Stop as soon as a set with `ε ≤ target_epsilon` is found.
    pub target_epsilon: Option<f64>,
}

impl SearchConfig {
    pub fn validate(&self, form: HashForm) -> Result<()> {
        if self.q < 2 {
            return Err(Error::Modulus(self.q));
        }
        if self.q > MAX_SWEEP_MODULUS {
            return Err(Error::SweepTooLarge {
                q: self.q,
                cap: MAX_SWEEP_MODULUS,
            });
        }
        if self.n == 0 || self.n > MAX_PARAMS {
            return Err(Error::SetSize(self.n));
        }
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be positive".into()));
        }
        if let Some(target) = self.target_epsilon {
            if !(target > 0.0 && target <= 1.0) {
                return Err(Error::InvalidConfig(format!(
                    "target epsilon must lie in (0, 1], got {target}"
                )));
            }
        }
        let cost = self.trials as u128 * per_set_cost(self.q, self.n, form);
        if cost > MAX_SEARCH_COST {
            return Err(Error::BudgetExceeded {
                cost,
                budget: MAX_SEARCH_COST,
            });
        }
        Ok(())
    }
}

/// An improvement of the best ε, in the order it was found.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Improvement {
    pub trial: u64,
    pub epsilon: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchResult {
    pub best_set: ParamSet,
    pub report: ResistanceReport,
    pub trials_run: u64,
    /// Strictly decreasing ε values.
    pub history: Vec<Improvement>,
}

/// Cosine evaluations needed to certify one set.
fn per_set_cost(q: u64, n: usize, form: HashForm) -> u128 {
    let terms = match form {
        HashForm::Standard => 1u128 << n,
        HashForm::Shallow => n as u128 + 1,
        HashForm::SingleQubit { sum_qubit } => n as u128 + u128::from(sum_qubit),
    };
    q as u128 * terms
}

/// The parameter set drawn by trial `trial` of a search seeded with `seed`:
/// `n` independent uniform draws from `[1, q)`.
pub fn draw_params(q: u64, n: usize, seed: u64, trial: u64) -> Result<ParamSet> {
    if q < 2 {
        return Err(Error::Modulus(q));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let values = (0..n).map(|_| rng.random_range(1..q)).collect();
    ParamSet::new(q, values)
}

#[derive(Default)]
struct Tracker {
    best: Option<(f64, ParamSet)>,
    history: Vec<Improvement>,
}

impl Tracker {
    fn offer(&mut self, trial: u64, set: ParamSet, epsilon: f64) {
        if self.best.as_ref().is_none_or(|(e, _)| epsilon < *e) {
            self.history.push(Improvement { trial, epsilon });
            self.best = Some((epsilon, set));
        }
    }

    fn finish(self, form: HashForm, trials_run: u64) -> Result<SearchResult> {
        let (epsilon, best_set) = self.best.expect("at least one trial");
        let report = certify(&best_set, form, epsilon)?;
        Ok(SearchResult {
            best_set,
            report,
            trials_run,
            history: self.history,
        })
    }
}

/// Recomputes the full report for `set` and checks it against the ε the
/// search recorded.
fn certify(set: &ParamSet, form: HashForm, reported: f64) -> Result<ResistanceReport> {
    let report = collision_resistance(set, form)?;
    if report.epsilon.to_bits() != reported.to_bits() {
        return Err(Error::Certification {
            reported,
            recomputed: report.epsilon,
        });
    }
    Ok(report)
}

/// Best of `cfg.trials` uniformly drawn parameter sets.
///
/// Ties keep the earliest trial. With a target, the search stops at the
/// first trial whose ε is at most the target.
pub fn random_search(cfg: &SearchConfig, form: HashForm) -> Result<SearchResult> {
    cfg.validate(form)?;
    let mut tracker = Tracker::default();
    let mut trials_run = 0;
    let mut start = 0;
    'blocks: while start < cfg.trials {
        let end = (start + BLOCK).min(cfg.trials);
        let evaluated = (start..end)
            .into_par_iter()
            .map(|trial| {
                let set = draw_params(cfg.q, cfg.n, cfg.seed, trial)?;
                let epsilon = resistance_epsilon(&set, form)?;
                Ok((trial, set, epsilon))
            })
            .collect::<Result<Vec<_>>>()?;
        for (trial, set, epsilon) in evaluated {
            trials_run = trial + 1;
            tracker.offer(trial, set, epsilon);
            if cfg.target_epsilon.is_some_and(|t| epsilon <= t) {
                break 'blocks;
            }
        }
        start = end;
    }
    tracker.finish(form, trials_run)
}

/// Globally optimal parameter set over `[1, q)^n`, enumerated in
/// lexicographic order; ties keep the lexicographically smallest set.
pub fn exhaustive_search(q: u64, n: usize, form: HashForm) -> Result<SearchResult> {
    if q < 2 {
        return Err(Error::Modulus(q));
    }
    if n == 0 || n > MAX_PARAMS {
        return Err(Error::SetSize(n));
    }
    let space = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if space > MAX_EXHAUSTIVE_SPACE {
        return Err(Error::SearchSpaceTooLarge {
            size: space,
            cap: MAX_EXHAUSTIVE_SPACE,
        });
    }
    if q > MAX_SWEEP_MODULUS {
        return Err(Error::SweepTooLarge {
            q,
            cap: MAX_SWEEP_MODULUS,
        });
    }
    let cost = space * per_set_cost(q, n, form);
    if cost > MAX_SEARCH_COST {
        return Err(Error::BudgetExceeded {
            cost,
            budget: MAX_SEARCH_COST,
        });
    }

    let base = q - 1;
    let total = base.pow(n as u32);
    let set_at = |index: u64| {
        let mut digits = vec![0u64; n];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = rest % base + 1;
            rest /= base;
        }
        ParamSet::new(q, digits)
    };

    let mut tracker = Tracker::default();
    let mut start = 0;
    while start < total {
        let end = (start + BLOCK * 8).min(total);
        let evaluated = (start..end)
            .into_par_iter()
            .map(|index| {
                let set = set_at(index)?;
                let epsilon = resistance_epsilon(&set, form)?;
                Ok((index, set, epsilon))
            })
            .collect::<Result<Vec<_>>>()?;
        for (index, set, epsilon) in evaluated {
            tracker.offer(index, set, epsilon);
        }
        start = end;
    }
    tracker.finish(form, total)
}
