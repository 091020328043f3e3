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

//! Replicates on a rayon pool.
//!
//! Replicate `i` always draws from the stream the core assigns to index
//! `i`, and results are collected in index order, so output does not
//! depend on the number of threads.

use giant_anatomy_core::cloning::ColaResult;
use giant_anatomy_core::stats::{cola_replicate, AnatomySummary, SamplerSpec};
use giant_anatomy_core::Result;
use rayon::prelude::*;

/// Caps the worker count.
pub const THREADS_ENV: &str = "GIANT_ANATOMY_THREADS";

/// Worker count from [`THREADS_ENV`], else the available parallelism.
pub fn thread_count() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

fn in_pool<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
    {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

/// Parallel equivalent of `giant_anatomy_core::stats::monte_carlo`.
pub fn monte_carlo(
    spec: &SamplerSpec,
    reps: u64,
    base_seed: u64,
    threads: usize,
) -> Result<Vec<AnatomySummary>> {
    if reps == 0 {
        return giant_anatomy_core::stats::monte_carlo(spec, reps, base_seed);
    }
    in_pool(threads, || {
        (0..reps)
            .into_par_iter()
            .map(|i| spec.replicate(base_seed, i))
            .collect()
    })
}

/// `reps` independent cut-off line runs.
pub fn cola_runs(
    n: usize,
    lambda: f64,
    reps: u64,
    base_seed: u64,
    threads: usize,
) -> Result<Vec<ColaResult>> {
    in_pool(threads, || {
        (0..reps)
            .into_par_iter()
            .map(|i| cola_replicate(n, lambda, base_seed, i))
            .collect()
    })
}
