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

//! Per-sample metrics and the Monte-Carlo analyses built on them.

use alloc::vec::Vec;

use libm::sqrt;

use crate::anatomy::Anatomy;

mod compare;
mod ks;
mod monte_carlo;
mod tau;
mod theory;

pub use compare::{compare, ComparisonReport, MIN_COMPARE_ROWS};
pub use ks::{kolmogorov_q, ks_p_value, ks_statistic};
pub use monte_carlo::{cola_replicate, monte_carlo, replicate_stream, Pipeline, SamplerSpec};
pub use tau::{tau_concentration, TauReport, MIN_TAU_VALUES};
pub use theory::{theory_check, LongestPathCheck, TheoryReport, LONGEST_PATH_WINDOW, THEORY_Z_LIMIT};

/// Scalar view of one sampled giant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AnatomySummary {
    pub giant_size: u64,
    pub core_size: u64,
    pub core_edges: u64,
    pub kernel_size: u64,
    pub kernel_edges: u64,
    /// Degree-2 vertices of the 2-core.
    pub n2: u64,
    /// Longest kernel-edge path, i.e. the longest run of degree-2 vertices
    /// plus one.
    pub longest_two_path: u64,
    pub max_tree_size: u64,
    pub disjoint_cycle_vertices: u64,
}

pub fn summarize(anatomy: &Anatomy) -> AnatomySummary {
    let n2 = anatomy.core.degrees().iter().filter(|&&d| d == 2).count();
    AnatomySummary {
        giant_size: anatomy.giant.vertex_count() as u64,
        core_size: anatomy.core.vertex_count() as u64,
        core_edges: anatomy.core.edge_count() as u64,
        kernel_size: anatomy.kernel.vertex_count() as u64,
        kernel_edges: anatomy.kernel.edge_count() as u64,
        n2: n2 as u64,
        longest_two_path: anatomy.path_lengths.iter().copied().max().unwrap_or(0) as u64,
        max_tree_size: anatomy.tree_sizes.iter().copied().max().unwrap_or(0) as u64,
        disjoint_cycle_vertices: anatomy.disjoint_cycles.iter().map(|&c| c as u64).sum(),
    }
}

/// Scalar extracted from an [`AnatomySummary`] for testing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Metric {
    CoreSize,
    GiantMinusCore,
    CoreExcess,
    KernelSize,
    KernelEdges,
    CoreEdges,
    GiantSize,
    LongestTwoPath,
}

impl Metric {
    /// The three coordinates whose joint law is asymptotically Gaussian.
    pub const LIMIT_TRIPLE: [Metric; 3] = [Metric::CoreSize, Metric::GiantMinusCore, Metric::CoreExcess];

    pub const THEORY: [Metric; 6] = [
        Metric::CoreSize,
        Metric::GiantMinusCore,
        Metric::CoreExcess,
        Metric::KernelSize,
        Metric::KernelEdges,
        Metric::CoreEdges,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::CoreSize => "core_size",
            Metric::GiantMinusCore => "giant_minus_core",
            Metric::CoreExcess => "core_excess",
            Metric::KernelSize => "kernel_size",
            Metric::KernelEdges => "kernel_edges",
            Metric::CoreEdges => "core_edges",
            Metric::GiantSize => "giant_size",
            Metric::LongestTwoPath => "longest_two_path",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        [
            Metric::CoreSize,
            Metric::GiantMinusCore,
            Metric::CoreExcess,
            Metric::KernelSize,
            Metric::KernelEdges,
            Metric::CoreEdges,
            Metric::GiantSize,
            Metric::LongestTwoPath,
        ]
        .into_iter()
        .find(|m| m.name() == name)
    }

    pub fn value(self, s: &AnatomySummary) -> f64 {
        match self {
            Metric::CoreSize => s.core_size as f64,
            Metric::GiantMinusCore => s.giant_size as f64 - s.core_size as f64,
            Metric::CoreExcess => s.core_edges as f64 - s.core_size as f64,
            Metric::KernelSize => s.kernel_size as f64,
            Metric::KernelEdges => s.kernel_edges as f64,
            Metric::CoreEdges => s.core_edges as f64,
            Metric::GiantSize => s.giant_size as f64,
            Metric::LongestTwoPath => s.longest_two_path as f64,
        }
    }

    pub fn column(self, dataset: &[AnatomySummary]) -> Vec<f64> {
        dataset.iter().map(|s| self.value(s)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

/// One metric of a theory check or a two-sample comparison. In a theory
/// check `b` is the closed-form prediction, `std_b` is 0 and `ks` is unset.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MetricRow {
    pub metric: Metric,
    pub mean_a: f64,
    pub mean_b: f64,
    pub std_a: f64,
    pub std_b: f64,
    pub z: f64,
    pub ks: Option<f64>,
    pub p: f64,
    pub verdict: Verdict,
}

/// Sample mean and sample standard deviation (n - 1 denominator).
pub fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = xs.iter().map(|x| (x - mean) * (x - mean)).sum();
    (mean, sqrt(ss / (n - 1.0)))
}

pub fn median(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        0.5 * (v[mid - 1] + v[mid])
    }
}

/// Ratio that treats `0 / 0` as 0 and `x / 0` as signed infinity.
pub(crate) fn z_ratio(diff: f64, se: f64) -> f64 {
    if se > 0.0 {
        diff / se
    } else if diff == 0.0 {
        0.0
    } else {
        diff.signum() * f64::INFINITY
    }
}

/// Two-sided normal tail probability of `z`.
pub(crate) fn normal_two_sided(z: f64) -> f64 {
    libm::erfc(z.abs() / core::f64::consts::SQRT_2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{contract_kernel, MultiGraph};

    #[test]
    fn theta_summary() {
        let core =
            MultiGraph::from_edges(6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1)]).unwrap();
        let a = Anatomy::from_core(core).unwrap();
        let s = summarize(&a);
        assert_eq!(s.kernel_size, 2);
        assert_eq!(s.kernel_edges, 3);
        assert_eq!(s.core_size, 6);
        assert_eq!(s.longest_two_path, 3);
        assert_eq!(s.n2, 4);
        assert_eq!(s.max_tree_size, 1);
    }

    #[test]
    fn cycle_summary() {
        let core = MultiGraph::from_edges(9, (0..9).map(|i| (i, (i + 1) % 9))).unwrap();
        assert!(contract_kernel(&core).is_ok());
        let s = summarize(&Anatomy::from_core(core).unwrap());
        assert_eq!((s.kernel_size, s.n2, s.giant_size), (0, 9, 9));
        assert_eq!(s.disjoint_cycle_vertices, 9);
        assert_eq!(s.longest_two_path, 0);
    }

    #[test]
    fn helpers() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
        let (m, s) = mean_std(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m, 2.5);
        assert!((s - 1.290_994_448_735_805_6).abs() < 1e-15);
        assert_eq!(z_ratio(0.0, 0.0), 0.0);
        assert_eq!(z_ratio(1.0, 0.0), f64::INFINITY);
        assert!((normal_two_sided(1.959_963_984_540_054) - 0.05).abs() < 1e-12);
        for m in Metric::THEORY {
            assert_eq!(Metric::parse(m.name()), Some(m));
        }
    }
}
