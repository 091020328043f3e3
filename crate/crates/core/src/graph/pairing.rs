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
use crate::error::{Error, Result};
use crate::rng::RngStream;

/// Uniform configuration-model pairing of a degree sequence.
///
/// Every vertex `v` receives `degrees[v]` stubs; the stub array is shuffled
/// and consecutive stubs are joined.
pub fn configuration_pairing(stream: &mut RngStream, degrees: &[u32]) -> Result<MultiGraph> {
    let total: u64 = degrees.iter().map(|&d| d as u64).sum();
    if total % 2 == 1 {
        return Err(Error::OddDegreeSum(total));
    }
    let mut stubs = Vec::with_capacity(total as usize);
    for (v, &d) in degrees.iter().enumerate() {
        stubs.extend(core::iter::repeat_n(v as u32, d as usize));
    }
    let mut graph = MultiGraph::with_capacity(degrees.len(), stubs.len() / 2);
    pair_stubs(stream, &mut stubs, &mut graph);
    Ok(graph)
}

/// Shuffles `stubs` (even length) and adds one edge per consecutive pair.
pub(crate) fn pair_stubs(stream: &mut RngStream, stubs: &mut [u32], graph: &mut MultiGraph) {
    debug_assert!(stubs.len().is_multiple_of(2));
    stream.shuffle(stubs);
    for pair in stubs.chunks_exact(2) {
        graph.add_edge(pair[0], pair[1]);
    }
}
