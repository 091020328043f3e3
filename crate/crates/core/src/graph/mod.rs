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

//! Edge-list multigraphs and the deterministic pieces of the anatomy
//! pipeline: pairing, peeling, contraction, subdivision, tree attachment.

use alloc::vec;
use alloc::vec::Vec;

mod components;
mod kernel;
mod pairing;
mod peel;
mod trees;

pub use components::{components, largest_component};
pub use kernel::{contract_kernel, subdivide_edges, KernelContraction};
pub use pairing::configuration_pairing;
pub(crate) use pairing::pair_stubs;
pub use peel::{two_core, TwoCore};
pub use trees::attach_trees;

/// Undirected multigraph on `0..vertex_count`.
///
/// Edges are stored with `edge[0] <= edge[1]`. A self-loop `[v, v]`
/// contributes 2 to the degree of `v`. A half-loop is the special
/// self-loop of the cloning and configuration models that contributes 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<[u32; 2]>,
    half_loops: Vec<u32>,
}

/// A graph carved out of a larger one; `labels[i]` is the parent-graph
/// vertex of vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: MultiGraph,
    pub labels: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub to: u32,
    pub edge: u32,
}

/// Compressed incidence lists. A self-loop appears twice in the list of
/// its vertex; half-loops do not appear.
#[derive(Clone, Debug)]
pub struct Incidence {
    offsets: Vec<usize>,
    arcs: Vec<Arc>,
}

impl Incidence {
    #[inline]
    pub fn arcs(&self, v: usize) -> &[Arc] {
        &self.arcs[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn len(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }
}

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
            half_loops: Vec::new(),
        }
    }

    pub fn with_capacity(vertex_count: usize, edges: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::with_capacity(edges),
            half_loops: Vec::new(),
        }
    }

    /// Returns `None` if an endpoint is out of range.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Option<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            if u as usize >= vertex_count || v as usize >= vertex_count {
                return None;
            }
            g.add_edge(u, v);
        }
        Some(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[[u32; 2]] {
        &self.edges
    }

    #[inline]
    pub fn half_loops(&self) -> &[u32] {
        &self.half_loops
    }

    /// Appends `count` isolated vertices and returns the first new label.
    pub fn add_vertices(&mut self, count: usize) -> u32 {
        let first = self.vertex_count as u32;
        self.vertex_count += count;
        first
    }

    #[inline]
    pub fn add_edge(&mut self, u: u32, v: u32) {
        debug_assert!((u as usize) < self.vertex_count && (v as usize) < self.vertex_count);
        self.edges.push(if u <= v { [u, v] } else { [v, u] });
    }

    pub fn add_half_loop(&mut self, v: u32) {
        debug_assert!((v as usize) < self.vertex_count);
        self.half_loops.push(v);
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertex_count];
        for &[u, v] in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        for &v in &self.half_loops {
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn incidence(&self) -> Incidence {
        let mut offsets = vec![0usize; self.vertex_count + 1];
        for &[u, v] in &self.edges {
            offsets[u as usize + 1] += 1;
            offsets[v as usize + 1] += 1;
        }
        for i in 0..self.vertex_count {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut arcs = vec![Arc { to: 0, edge: 0 }; 2 * self.edges.len()];
        for (e, &[u, v]) in self.edges.iter().enumerate() {
            let e = e as u32;
            arcs[fill[u as usize]] = Arc { to: v, edge: e };
            fill[u as usize] += 1;
            arcs[fill[v as usize]] = Arc { to: u, edge: e };
            fill[v as usize] += 1;
        }
        Incidence { offsets, arcs }
    }

    pub fn self_loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e[0] == e[1]).count()
    }

    /// No self-loops, no half-loops, no repeated pairs.
    pub fn is_simple(&self) -> bool {
        if !self.half_loops.is_empty() || self.edges.iter().any(|e| e[0] == e[1]) {
            return false;
        }
        let sorted = self.sorted_edges();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Edges in lexicographic order; the canonical form for comparisons.
    pub fn sorted_edges(&self) -> Vec<[u32; 2]> {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges
    }

    /// Same vertex set and the same multiset of edges and half-loops.
    pub fn same_multigraph(&self, other: &Self) -> bool {
        let mut a = self.half_loops.clone();
        let mut b = other.half_loops.clone();
        a.sort_unstable();
        b.sort_unstable();
        self.vertex_count == other.vertex_count && a == b && self.sorted_edges() == other.sorted_edges()
    }

    /// Subgraph induced by the vertices with `keep[v]`, relabelled in
    /// increasing order.
    pub fn induced(&self, keep: &[bool]) -> Subgraph {
        assert_eq!(keep.len(), self.vertex_count);
        let mut index = vec![u32::MAX; self.vertex_count];
        let mut labels = Vec::new();
        for (v, _) in keep.iter().enumerate().filter(|(_, &k)| k) {
            index[v] = labels.len() as u32;
            labels.push(v as u32);
        }
        let mut graph = MultiGraph::new(labels.len());
        for &[u, v] in &self.edges {
            if keep[u as usize] && keep[v as usize] {
                graph.add_edge(index[u as usize], index[v as usize]);
            }
        }
        for &v in &self.half_loops {
            if keep[v as usize] {
                graph.add_half_loop(index[v as usize]);
            }
        }
        Subgraph { graph, labels }
    }
}
