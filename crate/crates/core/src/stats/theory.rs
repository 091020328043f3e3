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

use super::{mean_std, median, normal_two_sided, z_ratio, AnatomySummary, Metric, MetricRow, Verdict};
use crate::error::{Error, Result};
use crate::math::{moments, ModelParams};

/// Largest admissible `|z|` of a sample mean against its prediction.
pub const THEORY_Z_LIMIT: f64 = 4.0;

/// Allowed distance of the median longest path from `log_{1/mu} n`. The
/// limit theory only says `O(1)`; the width is a chosen constant.
pub const LONGEST_PATH_WINDOW: f64 = 5.0;

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LongestPathCheck {
    pub median: f64,
    pub mean: f64,
    pub predicted: f64,
    pub window: f64,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TheoryReport {
    pub params: ModelParams,
    pub rows: usize,
    pub z_limit: f64,
    pub metrics: Vec<MetricRow>,
    pub longest_two_path: LongestPathCheck,
    pub verdict: Verdict,
}

fn prediction(metric: Metric, params: &ModelParams) -> f64 {
    let m = moments(params);
    let n = params.n as f64;
    match metric {
        Metric::CoreSize => m.b1 * n,
        Metric::GiantMinusCore => m.b2 * n,
        Metric::CoreExcess => m.b3 * n,
        Metric::KernelSize => m.kernel_vertices,
        Metric::KernelEdges => m.kernel_edges,
        Metric::CoreEdges => m.core_edges,
        Metric::GiantSize => m.giant_vertices(params.n),
        Metric::LongestTwoPath => params.longest_two_path_scale(),
    }
}

/// z-scores of the dataset means against the closed-form predictions at
/// `params`, using the empirical standard error, and the longest-path
/// window check.
pub fn theory_check(dataset: &[AnatomySummary], params: &ModelParams) -> Result<TheoryReport> {
    if dataset.is_empty() {
        return Err(Error::DatasetTooSmall { got: 0, need: 1 });
    }
    let k = dataset.len() as f64;
    let metrics: Vec<MetricRow> = Metric::THEORY
        .iter()
        .map(|&metric| {
            let xs = metric.column(dataset);
            let (mean, std) = mean_std(&xs);
            let predicted = prediction(metric, params);
            let z = z_ratio(mean - predicted, std / sqrt(k));
            MetricRow {
                metric,
                mean_a: mean,
                mean_b: predicted,
                std_a: std,
                std_b: 0.0,
                z,
                ks: None,
                p: normal_two_sided(z),
                verdict: Verdict::from_bool(z.abs() <= THEORY_Z_LIMIT),
            }
        })
        .collect();

    let paths = Metric::LongestTwoPath.column(dataset);
    let predicted = params.longest_two_path_scale();
    let med = median(&paths);
    let longest_two_path = LongestPathCheck {
        median: med,
        mean: mean_std(&paths).0,
        predicted,
        window: LONGEST_PATH_WINDOW,
        verdict: Verdict::from_bool((med - predicted).abs() <= LONGEST_PATH_WINDOW),
    };
    let verdict =
        Verdict::from_bool(metrics.iter().all(|r| r.verdict.passed()) && longest_two_path.verdict.passed());
    Ok(TheoryReport {
        params: *params,
        rows: dataset.len(),
        z_limit: THEORY_Z_LIMIT,
        metrics,
        longest_two_path,
        verdict,
    })
}
