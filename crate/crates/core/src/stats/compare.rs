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

use super::{ks_p_value, ks_statistic, mean_std, z_ratio, AnatomySummary, Metric, MetricRow, Verdict};
use crate::error::{Error, Result};

pub const MIN_COMPARE_ROWS: usize = 50;

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComparisonReport {
    /// Family-wise significance.
    pub significance: f64,
    /// Per-metric threshold after Bonferroni correction.
    pub threshold: f64,
    pub rows_a: usize,
    pub rows_b: usize,
    pub metrics: Vec<MetricRow>,
    pub verdict: Verdict,
}

/// Two-sample comparison of datasets `a` and `b` on `metrics`.
///
/// Each metric gets a KS statistic with its asymptotic p-value and a Welch
/// z-score on the means. A metric passes when its KS p-value exceeds
/// `significance / metrics.len()`; the report passes when all do.
pub fn compare(
    a: &[AnatomySummary],
    b: &[AnatomySummary],
    metrics: &[Metric],
    significance: f64,
) -> Result<ComparisonReport> {
    for rows in [a.len(), b.len()] {
        if rows < MIN_COMPARE_ROWS {
            return Err(Error::DatasetTooSmall {
                got: rows,
                need: MIN_COMPARE_ROWS,
            });
        }
    }
    if !(significance > 0.0 && significance < 1.0) {
        return Err(Error::Parameter {
            name: "significance",
            value: significance,
            reason: "must lie in (0, 1)",
        });
    }
    let threshold = significance / metrics.len().max(1) as f64;
    let rows: Vec<MetricRow> = metrics
        .iter()
        .map(|&metric| {
            let xa = metric.column(a);
            let xb = metric.column(b);
            let (mean_a, std_a) = mean_std(&xa);
            let (mean_b, std_b) = mean_std(&xb);
            let se = sqrt(std_a * std_a / xa.len() as f64 + std_b * std_b / xb.len() as f64);
            let ks = ks_statistic(&xa, &xb);
            let p = ks_p_value(ks, xa.len(), xb.len());
            MetricRow {
                metric,
                mean_a,
                mean_b,
                std_a,
                std_b,
                z: z_ratio(mean_a - mean_b, se),
                ks: Some(ks),
                p,
                verdict: Verdict::from_bool(p > threshold),
            }
        })
        .collect();
    let verdict = Verdict::from_bool(rows.iter().all(|r| r.verdict.passed()));
    Ok(ComparisonReport {
        significance,
        threshold,
        rows_a: a.len(),
        rows_b: b.len(),
        metrics: rows,
        verdict,
    })
}
