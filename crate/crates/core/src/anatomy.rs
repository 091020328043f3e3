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

use crate::error::Result;
use crate::graph::{contract_kernel, MultiGraph};

/// A giant component taken apart: 2-core, kernel, the path length behind
/// each kernel edge, cycles that are whole components of the core, and the
/// size of the tree hanging off each core vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anatomy {
    pub giant: MultiGraph,
    pub core: MultiGraph,
    /// Giant vertex of each core vertex.
    pub core_labels: Vec<u32>,
    pub kernel: MultiGraph,
    /// Core vertex of each kernel vertex.
    pub kernel_labels: Vec<u32>,
    pub path_lengths: Vec<u32>,
    pub disjoint_cycles: Vec<u32>,
    /// Indexed by core vertex; counts the root.
    pub tree_sizes: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnatomyDefect {
    KernelDegree,
    EdgeAccounting,
    TreeAccounting,
    LabelShape,
}

impl Anatomy {
    /// Treats a graph of minimum degree 2 as its own giant, with trivial
    /// trees. Used for the 2-core models.
    pub fn from_core(core: MultiGraph) -> Result<Self> {
        let contraction = contract_kernel(&core)?;
        let n = core.vertex_count();
        Ok(Self {
            giant: core.clone(),
            core,
            core_labels: (0..n as u32).collect(),
            kernel: contraction.kernel,
            kernel_labels: contraction.labels,
            path_lengths: contraction.path_lengths,
            disjoint_cycles: contraction.disjoint_cycles,
            tree_sizes: vec![1; n],
        })
    }

    /// Cheap structural checks; does not re-run the peeling.
    pub fn check(&self) -> core::result::Result<(), AnatomyDefect> {
        if self.core_labels.len() != self.core.vertex_count()
            || self.kernel_labels.len() != self.kernel.vertex_count()
            || self.path_lengths.len() != self.kernel.edge_count()
            || self.tree_sizes.len() != self.core.vertex_count()
        {
            return Err(AnatomyDefect::LabelShape);
        }
        if self.kernel.degrees().iter().any(|&d| d < 3) {
            return Err(AnatomyDefect::KernelDegree);
        }
        let path_edges: u64 = self.path_lengths.iter().map(|&l| l as u64).sum();
        let cycle_edges: u64 = self.disjoint_cycles.iter().map(|&l| l as u64).sum();
        if path_edges + cycle_edges != self.core.edge_count() as u64 {
            return Err(AnatomyDefect::EdgeAccounting);
        }
        let tree_total: u64 = self.tree_sizes.iter().map(|&t| t as u64).sum();
        if self.core.vertex_count() > 0 && tree_total != self.giant.vertex_count() as u64 {
            return Err(AnatomyDefect::TreeAccounting);
        }
        Ok(())
    }
}
