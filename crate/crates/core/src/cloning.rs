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

//! Poisson cloning: every vertex receives a Poisson number of clones, each
//! with a coordinate on `(0, lambda]`, and clones are matched either all at
//! once or by the cut-off line algorithm, whose surviving clones form the
//! 2-core.

use alloc::vec;
use alloc::vec::Vec;

use crate::dists::Poisson;
use crate::error::{Error, Result};
use crate::graph::{pair_stubs, MultiGraph};
use crate::rng::RngStream;

/// Clone coordinates of every vertex, stored flat. Clone `c` belongs to
/// `owner(c)`; the clones of a vertex are contiguous and sorted in
/// decreasing coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonCell {
    n: usize,
    lambda: f64,
    offsets: Vec<usize>,
    coords: Vec<f64>,
    owner: Vec<u32>,
}

impl PoissonCell {
    /// Builds a cell from explicit per-vertex coordinates. Coordinates are
    /// sorted; returns `None` if one lies outside `(0, lambda]`.
    pub fn from_lists(lambda: f64, lists: &[Vec<f64>]) -> Option<Self> {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        let mut coords = Vec::new();
        let mut owner = Vec::new();
        offsets.push(0);
        for (v, list) in lists.iter().enumerate() {
            if list.iter().any(|&x| !(x > 0.0 && x <= lambda)) {
                return None;
            }
            let mut sorted = list.clone();
            sorted.sort_by(|a, b| b.total_cmp(a));
            coords.extend_from_slice(&sorted);
            owner.extend(core::iter::repeat_n(v as u32, sorted.len()));
            offsets.push(coords.len());
        }
        Some(Self {
            n: lists.len(),
            lambda,
            offsets,
            coords,
            owner,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn clone_count(&self) -> usize {
        self.coords.len()
    }

    pub fn clones(&self, v: usize) -> &[f64] {
        &self.coords[self.offsets[v]..self.offsets[v + 1]]
    }

    fn clone_ids(&self, v: usize) -> core::ops::Range<usize> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn coordinate(&self, clone: u32) -> f64 {
        self.coords[clone as usize]
    }

    pub fn owner(&self, clone: u32) -> u32 {
        self.owner[clone as usize]
    }

    /// Relabels vertices: vertex `v` of the result is vertex `perm[v]` here.
    pub fn permuted(&self, perm: &[u32]) -> Self {
        let lists: Vec<Vec<f64>> = perm.iter().map(|&v| self.clones(v as usize).to_vec()).collect();
        Self::from_lists(self.lambda, &lists).expect("coordinates already validated")
    }

    /// Contracts a clone matching (plus an optional half-loop clone) into a
    /// multigraph on all `n` vertices.
    pub fn contract<I>(&self, pairs: I, half_loop: Option<u32>) -> MultiGraph
    where
        I: IntoIterator<Item = [u32; 2]>,
    {
        let mut g = MultiGraph::new(self.n);
        for [a, b] in pairs {
            g.add_edge(self.owner(a), self.owner(b));
        }
        if let Some(c) = half_loop {
            g.add_half_loop(self.owner(c));
        }
        g
    }
}

/// Rate-1 Poisson process on `(0, lambda]` for each of `n` vertices.
pub fn sample_cell(stream: &mut RngStream, n: usize, lambda: f64) -> Result<PoissonCell> {
    if n == 0 {
        return Err(Error::Domain("cell needs at least one vertex"));
    }
    if !(lambda > 0.0) {
        return Err(Error::Parameter {
            name: "lambda",
            value: lambda,
            reason: "must be positive",
        });
    }
    let poisson = Poisson::new(lambda)?;
    let mut offsets = Vec::with_capacity(n + 1);
    let mut coords = Vec::with_capacity((n as f64 * lambda * 1.05) as usize + 16);
    let mut owner = Vec::with_capacity(coords.capacity());
    offsets.push(0);
    for v in 0..n {
        let count = poisson.sample(stream) as usize;
        let start = coords.len();
        for _ in 0..count {
            coords.push(lambda * stream.uniform_open0());
        }
        coords[start..].sort_by(|a, b| b.total_cmp(a));
        owner.extend(core::iter::repeat_n(v as u32, count));
        offsets.push(coords.len());
    }
    Ok(PoissonCell {
        n,
        lambda,
        offsets,
        coords,
        owner,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ColaResult {
    /// Final position of the cut-off line.
    pub tau: f64,
    /// `[light clone, partner]` in matching order.
    pub matched_pairs: Vec<[u32; 2]>,
    /// Unmatched clones at termination, increasing.
    pub surviving_clones: Vec<u32>,
    /// Surviving clones per vertex; 0 or at least 2.
    pub core_degree: Vec<u32>,
    /// Set when the line ran out of clones with a light clone still
    /// waiting; that clone is left here and `tau` is 0.
    pub unpaired: Option<u32>,
}

impl ColaResult {
    pub fn exhausted(&self) -> bool {
        self.unpaired.is_some()
    }

    pub fn core_size(&self) -> usize {
        self.core_degree.iter().filter(|&&d| d > 0).count()
    }
}

/// Cut-off line algorithm.
///
/// The line starts at `lambda`. While a light clone (the sole unmatched
/// clone of its vertex) is waiting, it is taken from the stack, the line
/// moves left to the highest unmatched clone other than it, and the two
/// are matched; vertices that become light push their last clone. The
/// stack is filled initially so that vertex 0 is on top; entries matched
/// in the meantime are discarded when popped.
pub fn cola(cell: &PoissonCell) -> ColaResult {
    let total = cell.clone_count();
    let mut order: Vec<u32> = (0..total as u32).collect();
    order.sort_by(|&a, &b| {
        cell.coords[b as usize]
            .total_cmp(&cell.coords[a as usize])
            .then(a.cmp(&b))
    });
    let mut matched = vec![false; total];
    let mut unmatched: Vec<u32> = (0..cell.n).map(|v| cell.clone_ids(v).len() as u32).collect();
    let mut stack: Vec<u32> = (0..cell.n)
        .rev()
        .filter(|&v| unmatched[v] == 1)
        .map(|v| cell.offsets[v] as u32)
        .collect();

    let mut line = cell.lambda;
    let mut cursor = 0usize;
    let mut pairs = Vec::new();
    let mut unpaired = None;

    let last_unmatched = |matched: &[bool], v: usize| {
        cell.clone_ids(v)
            .find(|&c| !matched[c])
            .map(|c| c as u32)
            .expect("light vertex has one unmatched clone")
    };

    while let Some(light) = stack.pop() {
        if matched[light as usize] {
            continue;
        }
        matched[light as usize] = true;
        while cursor < total && matched[order[cursor] as usize] {
            cursor += 1;
        }
        let u = cell.owner(light) as usize;
        unmatched[u] -= 1;
        if cursor == total {
            unpaired = Some(light);
            line = 0.0;
            break;
        }
        let partner = order[cursor];
        matched[partner as usize] = true;
        line = cell.coordinate(partner);
        pairs.push([light, partner]);
        let v = cell.owner(partner) as usize;
        unmatched[v] -= 1;
        if unmatched[v] == 1 {
            stack.push(last_unmatched(&matched, v));
        }
    }

    let surviving_clones: Vec<u32> = (0..total as u32).filter(|&c| !matched[c as usize]).collect();
    let mut core_degree = vec![0u32; cell.n];
    for &c in &surviving_clones {
        core_degree[cell.owner(c) as usize] += 1;
    }
    ColaResult {
        tau: line,
        matched_pairs: pairs,
        surviving_clones,
        core_degree,
        unpaired,
    }
}

/// The 2-core candidate built from the surviving clones.
#[derive(Clone, Debug)]
pub struct CloningCore {
    /// Multigraph on the vertices with surviving clones, relabelled in
    /// increasing order.
    pub graph: MultiGraph,
    pub labels: Vec<u32>,
    /// The uniform pairing of surviving clones that produced `graph`.
    pub clone_pairs: Vec<[u32; 2]>,
    /// Clone turned into a half-loop when the survivor count is odd.
    pub half_loop: Option<u32>,
}

/// Uniformly pairs the surviving clones of `result`.
pub fn core_from_cola(stream: &mut RngStream, cell: &PoissonCell, result: &ColaResult) -> CloningCore {
    let mut stubs = result.surviving_clones.clone();
    let half_loop = take_odd_clone(stream, &mut stubs);
    stream.shuffle(&mut stubs);
    let clone_pairs: Vec<[u32; 2]> = stubs.chunks_exact(2).map(|p| [p[0], p[1]]).collect();

    let mut index = vec![u32::MAX; cell.n];
    let mut labels = Vec::new();
    for (v, _) in result.core_degree.iter().enumerate().filter(|(_, &d)| d > 0) {
        index[v] = labels.len() as u32;
        labels.push(v as u32);
    }
    let mut graph = MultiGraph::with_capacity(labels.len(), clone_pairs.len());
    let vertex = |c: u32| index[cell.owner(c) as usize];
    for &[a, b] in &clone_pairs {
        graph.add_edge(vertex(a), vertex(b));
    }
    if let Some(c) = half_loop {
        graph.add_half_loop(vertex(c));
    }
    CloningCore {
        graph,
        labels,
        clone_pairs,
        half_loop,
    }
}

/// If `stubs` has odd length, removes a uniform element and returns it.
fn take_odd_clone(stream: &mut RngStream, stubs: &mut Vec<u32>) -> Option<u32> {
    if stubs.len().is_multiple_of(2) {
        return None;
    }
    let i = stream.below(stubs.len() as u64) as usize;
    Some(stubs.swap_remove(i))
}

/// `G_PC(n, lambda / n)`: Poisson(`lambda`) clones per vertex, one uniform
/// perfect matching, clones contracted to their vertices.
pub fn full_cloning_graph(stream: &mut RngStream, n: usize, lambda: f64) -> Result<MultiGraph> {
    if n == 0 {
        return Err(Error::Domain("cloning graph needs at least one vertex"));
    }
    if !(lambda > 0.0) {
        return Err(Error::Parameter {
            name: "lambda",
            value: lambda,
            reason: "must be positive",
        });
    }
    let poisson = Poisson::new(lambda)?;
    let mut stubs = Vec::with_capacity((n as f64 * lambda * 1.05) as usize + 16);
    for v in 0..n as u32 {
        let d = poisson.sample(stream) as usize;
        stubs.extend(core::iter::repeat_n(v, d));
    }
    let half_loop = take_odd_clone(stream, &mut stubs);
    let mut graph = MultiGraph::with_capacity(n, stubs.len() / 2);
    pair_stubs(stream, &mut stubs, &mut graph);
    if let Some(v) = half_loop {
        graph.add_half_loop(v);
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn two_light_vertices() {
        let cell = PoissonCell::from_lists(1.0, &[vec![0.7], vec![0.3]]).unwrap();
        let r = cola(&cell);
        assert_eq!(r.tau, 0.3);
        assert_eq!(r.matched_pairs, vec![[0, 1]]);
        assert!(r.surviving_clones.is_empty());
        assert!(!r.exhausted());
    }

    #[test]
    fn all_heavy_start() {
        let cell = PoissonCell::from_lists(2.0, &[vec![0.5, 1.5], vec![0.2, 1.9, 1.0], vec![]]).unwrap();
        let r = cola(&cell);
        assert_eq!(r.tau, 2.0);
        assert!(r.matched_pairs.is_empty());
        assert_eq!(r.surviving_clones.len(), 5);
        assert_eq!(r.core_degree, vec![2, 3, 0]);
    }

    #[test]
    fn lone_clone_exhausts() {
        let cell = PoissonCell::from_lists(1.0, &[vec![0.4]]).unwrap();
        let r = cola(&cell);
        assert_eq!(r.unpaired, Some(0));
        assert_eq!(r.tau, 0.0);
    }

    #[test]
    fn light_chain_peels_into_heavy() {
        // vertex 0 light at 0.9; vertex 1 has clones 0.95 and 0.5; vertex 2
        // has 0.8, 0.6, 0.4
        let cell = PoissonCell::from_lists(1.0, &[vec![0.9], vec![0.95, 0.5], vec![0.8, 0.6, 0.4]]).unwrap();
        let r = cola(&cell);
        // (0.9, v0) takes 0.95 of v1; v1 becomes light with 0.5, which
        // takes 0.8 of v2; v2 keeps 0.6 and 0.4
        assert_eq!(r.tau, 0.8);
        assert_eq!(r.core_degree, vec![0, 0, 2]);
        let mut s = RngStream::new(0, 0);
        let core = core_from_cola(&mut s, &cell, &r);
        assert_eq!(core.labels, vec![2]);
        assert_eq!(core.graph.edges(), &[[0, 0]]);
    }

    #[test]
    fn cell_validation() {
        assert!(PoissonCell::from_lists(1.0, &[vec![1.5]]).is_none());
        assert!(PoissonCell::from_lists(1.0, &[vec![0.0]]).is_none());
        let mut s = RngStream::new(1, 0);
        assert!(sample_cell(&mut s, 0, 1.0).is_err());
        assert!(sample_cell(&mut s, 3, 0.0).is_err());
    }

    #[test]
    fn tiny_lambda_is_empty() {
        let mut s = RngStream::new(2, 0);
        let cell = sample_cell(&mut s, 1000, 1e-9).unwrap();
        assert_eq!(cell.clone_count(), 0);
        let g = full_cloning_graph(&mut s, 1000, 1e-9).unwrap();
        assert_eq!(g.edge_count(), 0);
        let r = cola(&cell);
        assert_eq!(r.tau, 1e-9);
    }

    #[test]
    fn sampled_cells_are_sorted_and_in_range() {
        let mut s = RngStream::new(3, 0);
        let cell = sample_cell(&mut s, 500, 2.0).unwrap();
        for v in 0..500 {
            let c = cell.clones(v);
            assert!(c.windows(2).all(|w| w[0] >= w[1]));
            assert!(c.iter().all(|&x| x > 0.0 && x <= 2.0));
        }
    }

    #[test]
    fn survivors_are_heavy() {
        let mut s = RngStream::new(4, 0);
        for _ in 0..50 {
            let cell = sample_cell(&mut s, 300, 2.0).unwrap();
            let r = cola(&cell);
            assert!(r.core_degree.iter().all(|&d| d == 0 || d >= 2));
            let matched = 2 * r.matched_pairs.len() + r.unpaired.iter().count();
            assert_eq!(matched + r.surviving_clones.len(), cell.clone_count());
            assert!(r.tau <= cell.lambda());
            let core = core_from_cola(&mut s, &cell, &r);
            assert!(core.graph.degrees().iter().all(|&d| d >= 2));
        }
    }
}
