// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use alloc::vec::Vec;

use libm::sqrt;

use super::{mean_std, Verdict};
use crate::error::{Error, Result};
use crate::math::ModelParams;

pub const MIN_TAU_VALUES: usize = 100;

/// Largest admissible frequency of `|tau - (lambda - mu)| >= 4 / sqrt(n)`.
pub const TAU_GAMMA4_LIMIT: f64 = 0.05;

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TauReport {
    pub center: f64,
    pub mean: f64,
    pub std: f64,
    /// `(gamma, frequency of |tau - center| >= gamma / sqrt(n))`.
    pub exceedance: Vec<(f64, f64)>,
    pub monotone: bool,
    pub gamma4_exceedance: f64,
    pub verdict: Verdict,
}

/// Exceedance frequencies of the cut-off position around `lambda - mu`.
pub fn tau_concentration(taus: &[f64], params: &ModelParams, gamma_grid: &[f64]) -> Result<TauReport> {
    if taus.len() < MIN_TAU_VALUES {
        return Err(Error::DatasetTooSmall {
            got: taus.len(),
            need: MIN_TAU_VALUES,
        });
    }
    let center = params.lambda0;
    let scale = 1.0 / sqrt(params.n as f64);
    let frequency = |gamma: f64| {
        let hits = taus
            .iter()
            .filter(|&&t| (t - center).abs() >= gamma * scale)
            .count();
        hits as f64 / taus.len() as f64
    };
    let mut grid: Vec<f64> = gamma_grid.to_vec();
    grid.sort_by(f64::total_cmp);
    let exceedance: Vec<(f64, f64)> = grid.iter().map(|&g| (g, frequency(g))).collect();
    let monotone = exceedance.windows(2).all(|w| w[1].1 <= w[0].1);
    let gamma4_exceedance = frequency(4.0);
    let (mean, std) = mean_std(taus);
    Ok(TauReport {
        center,
        mean,
        std,
        exceedance,
        monotone,
        gamma4_exceedance,
        verdict: Verdict::from_bool(monotone && gamma4_exceedance <= TAU_GAMMA4_LIMIT),
    })
}
