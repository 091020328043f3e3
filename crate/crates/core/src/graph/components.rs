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

use super::{MultiGraph, Subgraph};

struct DisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        // path halving
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a as usize] < self.size[b as usize] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b as usize] = a;
        self.size[a as usize] += self.size[b as usize];
    }
}

fn root_of_every_vertex(g: &MultiGraph) -> Vec<u32> {
    let mut sets = DisjointSet::new(g.vertex_count());
    for &[u, v] in g.edges() {
        sets.union(u, v);
    }
    (0..g.vertex_count() as u32).map(|v| sets.find(v)).collect()
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &MultiGraph) -> Vec<Vec<u32>> {
    let roots = root_of_every_vertex(g);
    let mut slot = vec![u32::MAX; g.vertex_count()];
    let mut out: Vec<Vec<u32>> = Vec::new();
    for (v, &r) in roots.iter().enumerate() {
        let r = r as usize;
        if slot[r] == u32::MAX {
            slot[r] = out.len() as u32;
            out.push(Vec::new());
        }
        out[slot[r] as usize].push(v as u32);
    }
    out
}

/// Largest connected component; ties go to the component with the
/// smallest minimum label. Vertices keep their relative order.
pub fn largest_component(g: &MultiGraph) -> Subgraph {
    let roots = root_of_every_vertex(g);
    let mut count = vec![0u32; g.vertex_count()];
    for &r in &roots {
        count[r as usize] += 1;
    }
    // first vertex seen of a maximal component has the smallest label
    let mut best: Option<u32> = None;
    for &r in &roots {
        match best {
            Some(b) if count[r as usize] <= count[b as usize] => {}
            _ => best = Some(r),
        }
    }
    let keep: Vec<bool> = match best {
        Some(b) => roots.iter().map(|&r| r == b).collect(),
        None => Vec::new(),
    };
    g.induced(&keep)
}
