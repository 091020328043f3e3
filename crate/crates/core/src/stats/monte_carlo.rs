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

use alloc::boxed::Box;
use alloc::vec::Vec;

use super::{summarize, AnatomySummary};
use crate::anatomy::Anatomy;
use crate::cloning::{cola, full_cloning_graph, sample_cell, ColaResult};
use crate::contiguous::{
    sample_giant, sample_poisson_configuration, sample_poisson_geometric, GiantOptions, ParityPolicy,
};
use crate::direct::{extract_anatomy, sample_gnp};
use crate::error::{Error, Result};
use crate::math::ModelParams;
use crate::rng::RngStream;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Pipeline {
    Contiguous(GiantOptions),
    Direct,
    Cloning,
    /// 2-core only; the anatomy has trivial trees.
    PoissonConfig(ParityPolicy),
    /// 2-core only; the anatomy has trivial trees.
    PoissonGeometric(ParityPolicy),
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SamplerSpec {
    pub pipeline: Pipeline,
    pub n: usize,
    pub lambda: f64,
}

impl SamplerSpec {
    pub fn params(&self) -> Result<ModelParams> {
        ModelParams::new(self.n, self.lambda)
    }

    pub fn anatomy(&self, stream: &mut RngStream) -> Result<Anatomy> {
        let params = self.params()?;
        match self.pipeline {
            Pipeline::Contiguous(options) => Ok(sample_giant(stream, &params, options)?.anatomy),
            Pipeline::Direct => {
                let g = sample_gnp(stream, self.n, self.lambda / self.n as f64)?;
                extract_anatomy(&g)
            }
            Pipeline::Cloning => {
                let g = full_cloning_graph(stream, self.n, self.lambda)?;
                extract_anatomy(&g)
            }
            Pipeline::PoissonConfig(parity) => {
                Anatomy::from_core(sample_poisson_configuration(stream, &params, parity)?.graph)
            }
            Pipeline::PoissonGeometric(parity) => {
                Anatomy::from_core(sample_poisson_geometric(stream, &params, parity)?.core)
            }
        }
    }

    /// Summary of replicate `index`, drawn from [`replicate_stream`].
    pub fn replicate(&self, base_seed: u64, index: u64) -> Result<AnatomySummary> {
        let mut stream = replicate_stream(base_seed, index);
        self.anatomy(&mut stream)
            .map(|a| summarize(&a))
            .map_err(|e| Error::Replicate {
                index,
                source: Box::new(e),
            })
    }
}

/// Stream of replicate `index`: key `base_seed`, stream id
/// `base_seed + index`.
pub fn replicate_stream(base_seed: u64, index: u64) -> RngStream {
    RngStream::new(base_seed, base_seed.wrapping_add(index))
}

/// Runs `reps` replicates in order.
pub fn monte_carlo(spec: &SamplerSpec, reps: u64, base_seed: u64) -> Result<Vec<AnatomySummary>> {
    if reps == 0 {
        return Err(Error::Domain("reps must be at least 1"));
    }
    (0..reps).map(|i| spec.replicate(base_seed, i)).collect()
}

/// One cut-off line run on a fresh cell, seeded like [`monte_carlo`].
pub fn cola_replicate(n: usize, lambda: f64, base_seed: u64, index: u64) -> Result<ColaResult> {
    let mut stream = replicate_stream(base_seed, index);
    let cell = sample_cell(&mut stream, n, lambda)?;
    Ok(cola(&cell))
}
