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

//! Reference pipeline: a plain `G(n, p)` sample dissected into the same
//! [`Anatomy`] record the three-step model produces.

use alloc::collections::VecDeque;
use alloc::vec;

use libm::{floor, log, log1p};

use crate::anatomy::Anatomy;
use crate::error::{Error, Result};
use crate::graph::{components, contract_kernel, largest_component, two_core, MultiGraph};
use crate::rng::RngStream;

/// `G(n, p)` by geometric skips over the pairs `(w, v)`, `w < v`, taken in
/// order of `v` then `w`. Expected time `O(n + m)`.
pub fn sample_gnp(stream: &mut RngStream, n: usize, p: f64) -> Result<MultiGraph> {
    if n == 0 {
        return Err(Error::Parameter {
            name: "n",
            value: 0.0,
            reason: "must be positive",
        });
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Parameter {
            name: "p",
            value: p,
            reason: "edge probability must lie in (0, 1)",
        });
    }
    let expected = p * n as f64 * (n as f64 - 1.0) / 2.0;
    let mut graph = MultiGraph::with_capacity(n, (expected * 1.05) as usize + 16);
    let log_q = log1p(-p);
    let n = n as u64;
    let mut v: u64 = 1;
    let mut w: i64 = -1;
    while v < n {
        let skip = floor(log(stream.uniform_open0()) / log_q);
        // jumps past the last pair end the scan
        if skip >= (n * n) as f64 {
            break;
        }
        w += 1 + skip as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            graph.add_edge(w as u32, v as u32);
        }
    }
    Ok(graph)
}

/// Dissects the largest component of `g`.
///
/// The 2-core is that of the giant itself. Every giant vertex outside the
/// core is charged to the unique core vertex its tree hangs from, found by
/// breadth-first search outward from the core. Multigraph input is
/// accepted; the contraction treats repeated edges and loops exactly.
pub fn extract_anatomy(g: &MultiGraph) -> Result<Anatomy> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let giant = largest_component(g).graph;
    let tc = two_core(&giant);
    let contraction = contract_kernel(&tc.core)?;

    let inc = giant.incidence();
    let mut owner = vec![u32::MAX; giant.vertex_count()];
    let mut queue = VecDeque::with_capacity(tc.labels.len());
    for (i, &v) in tc.labels.iter().enumerate() {
        owner[v as usize] = i as u32;
        queue.push_back(v);
    }
    let mut tree_sizes = vec![1u32; tc.labels.len()];
    while let Some(v) = queue.pop_front() {
        let root = owner[v as usize];
        for arc in inc.arcs(v as usize) {
            let w = arc.to as usize;
            if owner[w] == u32::MAX {
                owner[w] = root;
                tree_sizes[root as usize] += 1;
                queue.push_back(w as u32);
            }
        }
    }

    Ok(Anatomy {
        giant,
        core: tc.core,
        core_labels: tc.labels,
        kernel: contraction.kernel,
        kernel_labels: contraction.labels,
        path_lengths: contraction.path_lengths,
        disjoint_cycles: contraction.disjoint_cycles,
        tree_sizes,
    })
}

/// Number of vertices in unicyclic components other than the largest.
pub fn unicyclic_outside_giant(g: &MultiGraph) -> usize {
    let comps = components(g);
    let Some(giant) = comps
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.len().cmp(&b.1.len()).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
    else {
        return 0;
    };
    let mut comp_of = vec![0u32; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v as usize] = i as u32;
        }
    }
    let mut edges = vec![0usize; comps.len()];
    for &[u, _] in g.edges() {
        edges[comp_of[u as usize] as usize] += 1;
    }
    comps
        .iter()
        .enumerate()
        .filter(|&(i, c)| i != giant && edges[i] == c.len())
        .map(|(_, c)| c.len())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_checks() {
        let mut s = RngStream::new(0, 0);
        assert!(sample_gnp(&mut s, 0, 0.5).is_err());
        assert!(sample_gnp(&mut s, 10, 0.0).is_err());
        assert!(sample_gnp(&mut s, 10, 1.0).is_err());
        assert_eq!(extract_anatomy(&MultiGraph::new(4)), Err(Error::EmptyGraph));
    }

    #[test]
    fn tiny_p_is_empty() {
        let mut s = RngStream::new(1, 0);
        let g = sample_gnp(&mut s, 1000, 1e-12).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn output_is_simple_and_in_range() {
        let mut s = RngStream::new(2, 0);
        for _ in 0..50 {
            let g = sample_gnp(&mut s, 40, 0.3).unwrap();
            assert!(g.is_simple());
            assert!(g.edges().iter().all(|e| e[0] < e[1] && e[1] < 40));
        }
    }

    #[test]
    fn cycle_giant() {
        let g = MultiGraph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (5, 6)]).unwrap();
        let a = extract_anatomy(&g).unwrap();
        assert_eq!(a.giant.vertex_count(), 4);
        assert_eq!(a.kernel.vertex_count(), 0);
        assert_eq!(a.disjoint_cycles, vec![4]);
        assert_eq!(a.tree_sizes, vec![1; 4]);
    }

    #[test]
    fn trees_charged_to_their_core_vertex() {
        // triangle 0,1,2; 3-4 hang off 0, 5 off 2
        let g = MultiGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (2, 5)]).unwrap();
        let a = extract_anatomy(&g).unwrap();
        assert_eq!(a.core_labels, vec![0, 1, 2]);
        assert_eq!(a.tree_sizes, vec![3, 1, 2]);
        assert_eq!(a.check(), Ok(()));
    }

    #[test]
    fn unicyclic_count() {
        // big: path 0..5 + triangle 6,7,8 + tree 9-10
        let g = MultiGraph::from_edges(
            11,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (6, 7),
                (7, 8),
                (8, 6),
                (9, 10),
            ],
        )
        .unwrap();
        assert_eq!(unicyclic_outside_giant(&g), 3);
    }
}
