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

//! Samplers, decompositions and statistics for the giant component of the
//! Erdős–Rényi graph `G(n, lambda / n)` with fixed `lambda > 1`.
//!
//! Three routes produce giant components or their 2-cores:
//!
//! - [`contiguous`]: a random kernel on Poisson degrees, edges stretched
//!   into geometric paths, Poisson Galton-Watson trees attached;
//! - [`direct`]: a plain `G(n, p)` sample, dissected;
//! - [`cloning`]: the Poisson cloning model and its cut-off line algorithm.
//!
//! [`stats`] compares them with each other and with the closed forms in
//! [`math`]. The crate is `no_std` and needs only `alloc`.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod anatomy;
pub mod cloning;
pub mod contiguous;
pub mod direct;
pub mod dists;
pub mod error;
pub mod graph;
pub mod math;
pub mod rng;
pub mod stats;

pub use anatomy::Anatomy;
pub use error::{Error, Result};
pub use graph::MultiGraph;
pub use math::{ModelParams, MomentVector};
pub use rng::RngStream;
