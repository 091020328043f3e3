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

use thiserror::Error;

/// Errors raised by the samplers and graph routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("parameter {name} = {value} is out of range: {reason}")]
    Parameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    #[error("degree sum {0} is odd; a perfect matching does not exist")]
    OddDegreeSum(u64),
    #[error("vertex {vertex} has degree {degree}, expected at least {required}")]
    DegreeTooSmall {
        vertex: usize,
        degree: usize,
        required: usize,
    },
    #[error("Galton-Watson tree exceeded the cap of {0} vertices")]
    TreeCapExceeded(usize),
    #[error("no simple sample after {0} consecutive attempts")]
    ResampleLimit(u32),
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("dataset has {got} rows, at least {need} required")]
    DatasetTooSmall { got: usize, need: usize },
    #[error("replicate {index}: {source}")]
    Replicate {
        index: u64,
        #[source]
        source: alloc::boxed::Box<Error>,
    },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
