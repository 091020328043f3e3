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

/// The 2-core together with the survival mask of the input vertices.
#[derive(Clone, Debug)]
pub struct TwoCore {
    pub core: MultiGraph,
    pub keep: Vec<bool>,
    /// Input-graph label of each core vertex, increasing.
    pub labels: Vec<u32>,
}

/// Peels vertices of degree below 2 until none remain.
///
/// Work-queue peeling; the result is the unique maximal subgraph of
/// minimum degree 2 and does not depend on the queue order.
pub fn two_core(g: &MultiGraph) -> TwoCore {
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut degree = g.degrees();
    let mut keep = vec![true; n];
    let mut queue: Vec<u32> = (0..n as u32).filter(|&v| degree[v as usize] < 2).collect();
    while let Some(v) = queue.pop() {
        let v = v as usize;
        if !keep[v] {
            continue;
        }
        keep[v] = false;
        for arc in inc.arcs(v) {
            let w = arc.to as usize;
            if w != v && keep[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    queue.push(w as u32);
                }
            }
        }
    }
    let sub = g.induced(&keep);
    TwoCore {
        core: sub.graph,
        keep,
        labels: sub.labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> MultiGraph {
        MultiGraph::from_edges(n as usize, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: u32) -> MultiGraph {
        MultiGraph::from_edges(n as usize, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn path_has_empty_core() {
        let tc = two_core(&path(5));
        assert_eq!(tc.core.vertex_count(), 0);
        assert!(tc.keep.iter().all(|&k| !k));
    }

    #[test]
    fn cycle_is_its_own_core() {
        let c = cycle(7);
        let tc = two_core(&c);
        assert!(tc.core.same_multigraph(&c));
    }

    #[test]
    fn pendant_tree_removed() {
        // triangle 0-1-2 with a tail 2-3-4 and a leaf on 0
        let g = MultiGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (0, 5)]).unwrap();
        let tc = two_core(&g);
        assert_eq!(tc.labels, vec![0, 1, 2]);
        assert_eq!(tc.core.edge_count(), 3);
    }

    #[test]
    fn lone_self_loop_survives_half_loop_does_not() {
        let mut g = MultiGraph::from_edges(2, [(0, 0)]).unwrap();
        g.add_half_loop(1);
        let tc = two_core(&g);
        assert_eq!(tc.keep, vec![true, false]);
    }

    #[test]
    fn idempotent() {
        let g = MultiGraph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 3),
                (6, 7),
                (7, 7),
            ],
        )
        .unwrap();
        let once = two_core(&g);
        let twice = two_core(&once.core);
        assert!(once.core.same_multigraph(&twice.core));
    }
}
