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

use alloc::vec;
use alloc::vec::Vec;

use super::MultiGraph;
use crate::dists::Geometric;
use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Kernel of a graph of minimum degree 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelContraction {
    pub kernel: MultiGraph,
    /// Core vertex of each kernel vertex, increasing.
    pub labels: Vec<u32>,
    /// Number of core edges on the path behind `kernel.edges()[i]`.
    pub path_lengths: Vec<u32>,
    /// Lengths of the components that are bare cycles.
    pub disjoint_cycles: Vec<u32>,
}

/// Contracts every maximal path of degree-2 vertices into one edge and
/// splits off the components that are cycles.
///
/// Branch vertices are those of degree at least 3 and those carrying a
/// half-loop. A figure-eight (two cycles through one vertex) therefore
/// yields a kernel vertex with two self-loops.
pub fn contract_kernel(core: &MultiGraph) -> Result<KernelContraction> {
    let n = core.vertex_count();
    let inc = core.incidence();
    let degree = core.degrees();
    if let Some((v, &d)) = degree.iter().enumerate().find(|(_, &d)| d < 2) {
        return Err(Error::DegreeTooSmall {
            vertex: v,
            degree: d as usize,
            required: 2,
        });
    }
    let mut branch = vec![false; n];
    for (v, &d) in degree.iter().enumerate() {
        branch[v] = d >= 3;
    }
    for &v in core.half_loops() {
        branch[v as usize] = true;
    }

    let mut kernel_index = vec![u32::MAX; n];
    let mut labels = Vec::new();
    for v in (0..n).filter(|&v| branch[v]) {
        kernel_index[v] = labels.len() as u32;
        labels.push(v as u32);
    }

    let mut kernel = MultiGraph::new(labels.len());
    let mut path_lengths = Vec::new();
    let mut edge_used = vec![false; core.edge_count()];
    let mut visited = vec![false; n];

    // step from a degree-2 vertex along the edge we did not arrive by
    let step = |cur: usize, came_by: u32| {
        let arcs = inc.arcs(cur);
        if arcs[0].edge != came_by {
            arcs[0]
        } else {
            arcs[1]
        }
    };

    for &b in &labels {
        let b = b as usize;
        for start in inc.arcs(b) {
            if edge_used[start.edge as usize] {
                continue;
            }
            edge_used[start.edge as usize] = true;
            let mut length = 1u32;
            let mut came_by = start.edge;
            let mut cur = start.to as usize;
            while !branch[cur] {
                visited[cur] = true;
                let next = step(cur, came_by);
                edge_used[next.edge as usize] = true;
                length += 1;
                came_by = next.edge;
                cur = next.to as usize;
            }
            kernel.add_edge(kernel_index[b], kernel_index[cur]);
            path_lengths.push(length);
        }
    }
    for &v in core.half_loops() {
        kernel.add_half_loop(kernel_index[v as usize]);
    }

    let mut disjoint_cycles = Vec::new();
    for v in 0..n {
        if branch[v] || visited[v] {
            continue;
        }
        visited[v] = true;
        let first = inc.arcs(v)[0];
        let mut length = 1u32;
        let mut came_by = first.edge;
        let mut cur = first.to as usize;
        while cur != v {
            visited[cur] = true;
            let next = step(cur, came_by);
            length += 1;
            came_by = next.edge;
            cur = next.to as usize;
        }
        disjoint_cycles.push(length);
    }

    Ok(KernelContraction {
        kernel,
        labels,
        path_lengths,
        disjoint_cycles,
    })
}

/// Replaces every kernel edge by a path of `Geom(1 - mu)` edges.
///
/// Kernel vertices keep their labels; the inserted degree-2 vertices
/// follow in edge order. A path of length 1 is the original edge, so a
/// length-1 self-loop stays a self-loop.
pub fn subdivide_edges(
    stream: &mut RngStream,
    kernel: &MultiGraph,
    mu: f64,
) -> Result<(MultiGraph, Vec<u32>)> {
    let geometric = Geometric::new(mu)?;
    let mut core = MultiGraph::with_capacity(kernel.vertex_count(), kernel.edge_count());
    let mut lengths = Vec::with_capacity(kernel.edge_count());
    for &[a, b] in kernel.edges() {
        let length = geometric.sample(stream);
        lengths.push(length);
        if length == 1 {
            core.add_edge(a, b);
            continue;
        }
        let first = core.add_vertices(length as usize - 1);
        core.add_edge(a, first);
        for i in 1..length - 1 {
            core.add_edge(first + i - 1, first + i);
        }
        core.add_edge(first + length - 2, b);
    }
    for &v in kernel.half_loops() {
        core.add_half_loop(v);
    }
    Ok((core, lengths))
}
