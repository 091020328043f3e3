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

//! The three-step model of the giant (random kernel, geometric
//! subdivision, Poisson Galton-Watson trees) and the two 2-core models it
//! is built from.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::anatomy::Anatomy;
use crate::dists::{standard_normal, Poisson};
use crate::error::{Error, Result};
use crate::graph::{attach_trees, pair_stubs, subdivide_edges, MultiGraph};
use crate::math::ModelParams;
use crate::rng::RngStream;

/// Consecutive failures of the simplicity check before giving up.
pub const SIMPLE_RESAMPLE_LIMIT: u32 = 1000;

/// How an odd stub total among the retained vertices is resolved.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum ParityPolicy {
    /// Redraw the degree vector (keeping the Gaussian rate) until even.
    #[default]
    Reject,
    /// Pick a retained vertex with probability proportional to its degree
    /// and turn one of its stubs into a half-loop.
    SelfLoop,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeDraw {
    /// The realised Gaussian rate.
    pub lambda_draw: f64,
    pub degrees: Vec<u32>,
    /// `counts[k]` = number of vertices of degree `k`.
    pub counts: BTreeMap<u32, usize>,
    /// Rejection rounds plus non-positive rate redraws.
    pub parity_fixups: u32,
    /// Vertex given a half-loop under [`ParityPolicy::SelfLoop`].
    pub self_loop_vertex: Option<u32>,
    pub threshold: u32,
}

impl DegreeDraw {
    /// `sum_u D_u 1{D_u >= threshold}`.
    pub fn retained_stubs(&self) -> u64 {
        retained_stubs(&self.degrees, self.threshold)
    }
}

fn retained_stubs(degrees: &[u32], threshold: u32) -> u64 {
    degrees
        .iter()
        .filter(|&&d| d >= threshold)
        .map(|&d| d as u64)
        .sum()
}

/// Draws the rate from `N(lambda - mu, 1/n)` once, then `n` i.i.d.
/// Poisson degrees, resolving parity of the retained stub total.
///
/// Rejection redraws only the degrees: the degrees are conditioned given
/// the rate, so redrawing the rate as well would change their law.
pub fn draw_degrees(
    stream: &mut RngStream,
    params: &ModelParams,
    threshold: u32,
    parity: ParityPolicy,
) -> Result<DegreeDraw> {
    if threshold != 2 && threshold != 3 {
        return Err(Error::Domain("degree threshold must be 2 or 3"));
    }
    let n = params.n;
    let sd = 1.0 / libm::sqrt(n as f64);
    let mut fixups = 0u32;
    let lambda_draw = loop {
        let x = params.lambda0 + sd * standard_normal(stream);
        if x > 0.0 {
            break x;
        }
        fixups += 1;
    };
    let poisson = Poisson::new(lambda_draw)?;
    let mut degrees = Vec::with_capacity(n);
    let mut self_loop_vertex = None;
    loop {
        degrees.clear();
        degrees.extend((0..n).map(|_| poisson.sample(stream)));
        let total = retained_stubs(&degrees, threshold);
        if total.is_multiple_of(2) {
            break;
        }
        match parity {
            ParityPolicy::Reject => fixups += 1,
            ParityPolicy::SelfLoop => {
                let mut target = stream.below(total);
                for (u, &d) in degrees.iter().enumerate() {
                    if d < threshold {
                        continue;
                    }
                    if target < d as u64 {
                        self_loop_vertex = Some(u as u32);
                        break;
                    }
                    target -= d as u64;
                }
                fixups += 1;
                break;
            }
        }
    }
    let mut dense: Vec<usize> = Vec::new();
    for &d in &degrees {
        let d = d as usize;
        if d >= dense.len() {
            dense.resize(d + 1, 0);
        }
        dense[d] += 1;
    }
    let counts: BTreeMap<u32, usize> = dense
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(d, c)| (d as u32, c))
        .collect();
    Ok(DegreeDraw {
        lambda_draw,
        degrees,
        counts,
        parity_fixups: fixups,
        self_loop_vertex,
        threshold,
    })
}

/// Pairs the stubs of the retained vertices of `draw`; returns the
/// multigraph on the retained vertices and their original indices.
fn pair_retained(stream: &mut RngStream, draw: &DegreeDraw) -> (MultiGraph, Vec<u32>) {
    let mut original = Vec::new();
    let mut stubs = Vec::with_capacity(draw.retained_stubs() as usize);
    let mut half_loop = None;
    for (u, &d) in draw.degrees.iter().enumerate() {
        if d < draw.threshold {
            continue;
        }
        let label = original.len() as u32;
        original.push(u as u32);
        let mut d = d;
        if draw.self_loop_vertex == Some(u as u32) {
            d -= 1;
            half_loop = Some(label);
        }
        stubs.extend(core::iter::repeat_n(label, d as usize));
    }
    let mut graph = MultiGraph::with_capacity(original.len(), stubs.len() / 2);
    pair_stubs(stream, &mut stubs, &mut graph);
    if let Some(v) = half_loop {
        graph.add_half_loop(v);
    }
    (graph, original)
}

/// A Poisson-configuration 2-core.
#[derive(Clone, Debug)]
pub struct ConfigurationSample {
    pub graph: MultiGraph,
    /// Index in `0..n` of each graph vertex.
    pub original: Vec<u32>,
    pub draw: DegreeDraw,
}

/// Uniform multigraph on the vertices with Poisson degree at least 2.
pub fn sample_poisson_configuration(
    stream: &mut RngStream,
    params: &ModelParams,
    parity: ParityPolicy,
) -> Result<ConfigurationSample> {
    let draw = draw_degrees(stream, params, 2, parity)?;
    let (graph, original) = pair_retained(stream, &draw);
    Ok(ConfigurationSample {
        graph,
        original,
        draw,
    })
}

/// A Poisson-geometric 2-core with its kernel.
#[derive(Clone, Debug)]
pub struct GeometricSample {
    pub kernel: MultiGraph,
    /// Kernel vertices keep labels `0..kernel.vertex_count()`.
    pub core: MultiGraph,
    /// Path length of each kernel edge, in kernel edge order.
    pub path_lengths: Vec<u32>,
    pub original: Vec<u32>,
    pub draw: DegreeDraw,
}

/// Uniform kernel on the vertices with Poisson degree at least 3, with
/// every edge stretched into a `Geom(1 - mu)` path.
pub fn sample_poisson_geometric(
    stream: &mut RngStream,
    params: &ModelParams,
    parity: ParityPolicy,
) -> Result<GeometricSample> {
    let draw = draw_degrees(stream, params, 3, parity)?;
    let (kernel, original) = pair_retained(stream, &draw);
    let (core, path_lengths) = subdivide_edges(stream, &kernel, params.mu)?;
    Ok(GeometricSample {
        kernel,
        core,
        path_lengths,
        original,
        draw,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GiantOptions {
    /// Resample the whole pipeline until the output is a simple graph.
    pub simple: bool,
    pub parity: ParityPolicy,
}

#[derive(Clone, Debug)]
pub struct GiantSample {
    pub anatomy: Anatomy,
    /// Pipeline runs consumed, 1 unless `simple` rejected some.
    pub attempts: u32,
    pub parity_fixups: u32,
    pub lambda_draw: f64,
}

impl GiantSample {
    pub fn graph(&self) -> &MultiGraph {
        &self.anatomy.giant
    }
}

/// Samples the giant from the three-step model.
///
/// Labels: kernel vertices first, then subdivision vertices, then tree
/// vertices, each in sampling order. The anatomy is recorded during
/// construction rather than recovered afterwards.
pub fn sample_giant(
    stream: &mut RngStream,
    params: &ModelParams,
    options: GiantOptions,
) -> Result<GiantSample> {
    for attempt in 1..=SIMPLE_RESAMPLE_LIMIT {
        let pg = sample_poisson_geometric(stream, params, options.parity)?;
        // trees add only pendant edges, so the core decides simplicity
        if options.simple && !pg.core.is_simple() {
            continue;
        }
        let (giant, tree_sizes) = attach_trees(stream, &pg.core, params.mu)?;
        let core_n = pg.core.vertex_count() as u32;
        let kernel_n = pg.kernel.vertex_count() as u32;
        return Ok(GiantSample {
            anatomy: Anatomy {
                giant,
                core: pg.core,
                core_labels: (0..core_n).collect(),
                kernel: pg.kernel,
                kernel_labels: (0..kernel_n).collect(),
                path_lengths: pg.path_lengths,
                disjoint_cycles: Vec::new(),
                tree_sizes,
            },
            attempts: attempt,
            parity_fixups: pg.draw.parity_fixups,
            lambda_draw: pg.draw.lambda_draw,
        });
    }
    Err(Error::ResampleLimit(SIMPLE_RESAMPLE_LIMIT))
}
