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

//! Closed-form quantities: the conjugate of `lambda`, the limiting moment
//! vector of the giant and its 2-core, and the Borel / geometric laws.

use libm::{exp, expm1, log};
use once_cell::race::OnceBox;

use crate::error::{Error, Result};

/// Smallest admissible `lambda`; at `lambda = 1` the conjugate degenerates to 1.
pub const LAMBDA_MIN: f64 = 1.0 + 1e-9;

const LOG_FACTORIAL_TABLE: usize = 10_000;

/// `(n, lambda)` together with the derived conjugate `mu` and the 2-core
/// Poisson rate `lambda0 = lambda - mu`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ModelParams {
    pub n: usize,
    pub lambda: f64,
    pub mu: f64,
    pub lambda0: f64,
}

impl ModelParams {
    pub fn new(n: usize, lambda: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parameter {
                name: "n",
                value: 0.0,
                reason: "must be positive",
            });
        }
        let mu = conjugate(lambda)?;
        Ok(Self {
            n,
            lambda,
            mu,
            lambda0: lambda - mu,
        })
    }

    /// `log_{1/mu} n`, the leading order of the longest run of degree-2
    /// vertices in the 2-core.
    pub fn longest_two_path_scale(&self) -> f64 {
        log(self.n as f64) / -log(self.mu)
    }
}

/// Per-vertex means `b1, b2, b3` of (2-core size, giant minus 2-core,
/// 2-core excess) and the expected 2-core / kernel counts at size `n`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MomentVector {
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub core_vertices: f64,
    pub core_edges: f64,
    pub kernel_vertices: f64,
    pub kernel_edges: f64,
}

impl MomentVector {
    pub fn giant_vertices(&self, n: usize) -> f64 {
        (self.b1 + self.b2) * n as f64
    }
}

#[inline]
fn conjugate_residual(m: f64, target: f64) -> f64 {
    m * exp(-m) - target
}

/// The unique `mu` in `(0, 1)` with `mu e^{-mu} = lambda e^{-lambda}`.
///
/// Bisection down to an interval of width 1e-14, followed by three Newton
/// steps. `x e^{-x}` is strictly increasing on `(0, 1)`, so the bracket
/// never loses the root.
pub fn conjugate(lambda: f64) -> Result<f64> {
    if !(lambda > LAMBDA_MIN) || !lambda.is_finite() {
        return Err(Error::Parameter {
            name: "lambda",
            value: lambda,
            reason: "conjugate requires lambda > 1",
        });
    }
    let target = lambda * exp(-lambda);
    let (mut lo, mut hi) = (1e-12_f64, 1.0 - 1e-12);
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if conjugate_residual(mid, target) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut mu = 0.5 * (lo + hi);
    for _ in 0..3 {
        let slope = (1.0 - mu) * exp(-mu);
        if slope <= 0.0 {
            break;
        }
        let step = conjugate_residual(mu, target) / slope;
        let next = mu - step;
        if next > 0.0 && next < 1.0 {
            mu = next;
        }
    }
    Ok(mu)
}

/// `P(Po(x) >= 2) = 1 - e^{-x} - x e^{-x}`.
pub fn p2_plus(x: f64) -> f64 {
    // -expm1(-x) keeps precision for small x
    -expm1(-x) - x * exp(-x)
}

pub fn moments(params: &ModelParams) -> MomentVector {
    let ModelParams {
        n,
        lambda,
        mu,
        lambda0,
    } = *params;
    let n = n as f64;
    let giant_fraction = 1.0 - mu / lambda;
    let b1 = (1.0 - mu) * giant_fraction;
    let b2 = mu * giant_fraction;
    let b3 = 0.5 * giant_fraction * (lambda + mu - 2.0);
    let tail = exp(-lambda0);
    MomentVector {
        b1,
        b2,
        b3,
        core_vertices: b1 * n,
        core_edges: 0.5 * n * lambda0 * (1.0 - tail),
        kernel_vertices: n * (1.0 - tail * (1.0 + lambda0 + 0.5 * lambda0 * lambda0)),
        kernel_edges: 0.5 * n * lambda0 * (1.0 - tail * (1.0 + lambda0)),
    }
}

fn log_factorial_table() -> &'static [f64] {
    static TABLE: OnceBox<alloc::vec::Vec<f64>> = OnceBox::new();
    TABLE.get_or_init(|| {
        let mut table = alloc::vec::Vec::with_capacity(LOG_FACTORIAL_TABLE + 1);
        let mut acc = 0.0;
        table.push(0.0);
        for k in 1..=LOG_FACTORIAL_TABLE {
            acc += log(k as f64);
            table.push(acc);
        }
        alloc::boxed::Box::new(table)
    })
}

/// `ln(k!)`: exact summation table up to 10^4, Stirling series beyond.
pub fn log_factorial(k: u64) -> f64 {
    if (k as usize) <= LOG_FACTORIAL_TABLE {
        return log_factorial_table()[k as usize];
    }
    let x = k as f64;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    const HALF_LN_TAU: f64 = 0.918_938_533_204_672_8;
    x * log(x) - x
        + 0.5 * log(x)
        + HALF_LN_TAU
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)))
}

/// Borel(`mu`) probability of total progeny `t`, evaluated in log space.
pub fn borel_pmf(mu: f64, t: u64) -> f64 {
    if t == 0 || !(mu > 0.0 && mu < 1.0) {
        return 0.0;
    }
    let tf = t as f64;
    let log_p = (tf - 1.0) * log(tf) - log_factorial(t) + tf * (log(mu) - mu) - log(mu);
    exp(log_p)
}

/// `P(Geom(1 - mu) = k) = mu^{k-1} (1 - mu)` on `k >= 1`.
pub fn geom_pmf(mu: f64, k: u64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    if mu == 0.0 {
        return if k == 1 { 1.0 } else { 0.0 };
    }
    exp((k - 1) as f64 * log(mu)) * (1.0 - mu)
}
