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

use super::MultiGraph;
use crate::dists::{grow_pgw_into, Poisson, DEFAULT_TREE_CAP};
use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Hangs an independent Poisson(`mu`) Galton-Watson tree off every vertex of
/// `core`, rooted at that vertex.
///
/// Core vertices keep their labels, tree vertices follow in sampling order.
/// `tree_sizes[v]` counts the root.
pub fn attach_trees(stream: &mut RngStream, core: &MultiGraph, mu: f64) -> Result<(MultiGraph, Vec<u32>)> {
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::Parameter {
            name: "mu",
            value: mu,
            reason: "subcritical offspring mean must lie in (0, 1)",
        });
    }
    let offspring = Poisson::new(mu)?;
    let n = core.vertex_count();
    let expected_extra = (n as f64 * mu / (1.0 - mu)) as usize;
    let mut graph = MultiGraph::with_capacity(n, core.edge_count() + expected_extra + 16);
    for &[u, v] in core.edges() {
        graph.add_edge(u, v);
    }
    for &v in core.half_loops() {
        graph.add_half_loop(v);
    }
    let mut tree_sizes = Vec::with_capacity(n);
    let mut parents = Vec::new();
    for root in 0..n as u32 {
        parents.clear();
        let size = grow_pgw_into(stream, &offspring, DEFAULT_TREE_CAP, &mut parents)?;
        tree_sizes.push(size as u32);
        if size == 1 {
            continue;
        }
        let first = graph.add_vertices(size - 1);
        for (i, &p) in parents.iter().enumerate() {
            let parent = if p == 0 { root } else { first + p - 1 };
            graph.add_edge(parent, first + i as u32);
        }
    }
    Ok((graph, tree_sizes))
}
