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

//! Variate generators used by every sampler in the crate.

use alloc::vec::Vec;
use libm::{cos, exp, floor, log, sqrt};

use crate::error::{Error, Result};
use crate::math::log_factorial;
use crate::rng::RngStream;

/// Default runaway guard for Galton-Watson trees.
pub const DEFAULT_TREE_CAP: usize = 100_000_000;

/// Rates below this use inversion by sequential search.
const INVERSION_LIMIT: f64 = 10.0;

/// Cumulative probabilities cached for inversion; the tail is searched on demand.
const CDF_TABLE: usize = 32;

/// Buckets of the inversion guide table.
const GUIDE: usize = 64;

/// Largest rate accepted by the Poisson sampler.
pub const MAX_POISSON_RATE: f64 = 100.0;

/// Poisson sampler with its setup cached.
#[derive(Clone, Copy, Debug)]
pub struct Poisson {
    rate: f64,
    method: PoissonMethod,
}

#[derive(Clone, Copy, Debug)]
#[allow(clippy::large_enum_variant)]
enum PoissonMethod {
    Zero,
    Inversion {
        cdf: [f64; CDF_TABLE],
        /// `guide[j]` is the first index with `cdf >= j / GUIDE`.
        guide: [u8; GUIDE],
        /// Mass of the last tabulated value.
        last: f64,
    },
    /// Hörmann's transformed rejection with squeeze (PTRS).
    Rejection {
        log_rate: f64,
        a: f64,
        b: f64,
        inv_alpha: f64,
        v_r: f64,
    },
}

impl Poisson {
    pub fn new(rate: f64) -> Result<Self> {
        if !(rate >= 0.0) || rate > MAX_POISSON_RATE {
            return Err(Error::Parameter {
                name: "rate",
                value: rate,
                reason: "Poisson rate must lie in [0, 100]",
            });
        }
        let method = if rate == 0.0 {
            PoissonMethod::Zero
        } else if rate < INVERSION_LIMIT {
            let mut cdf = [0.0; CDF_TABLE];
            let mut p = exp(-rate);
            let mut c = p;
            cdf[0] = c;
            for (k, slot) in cdf.iter_mut().enumerate().skip(1) {
                p *= rate / k as f64;
                c += p;
                *slot = c;
            }
            let mut guide = [0u8; GUIDE];
            for (j, slot) in guide.iter_mut().enumerate() {
                let t = j as f64 / GUIDE as f64;
                *slot = cdf.iter().position(|&c| c >= t).unwrap_or(CDF_TABLE) as u8;
            }
            PoissonMethod::Inversion { cdf, guide, last: p }
        } else {
            let b = 0.931 + 2.53 * sqrt(rate);
            PoissonMethod::Rejection {
                log_rate: log(rate),
                a: -0.059 + 0.02483 * b,
                b,
                inv_alpha: 1.1239 + 1.1328 / (b - 3.4),
                v_r: 0.9277 - 3.6224 / (b - 2.0),
            }
        };
        Ok(Self { rate, method })
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    #[inline]
    pub fn sample(&self, stream: &mut RngStream) -> u32 {
        match self.method {
            PoissonMethod::Zero => 0,
            PoissonMethod::Inversion {
                ref cdf,
                ref guide,
                last,
            } => loop {
                let u = stream.uniform();
                let mut k = guide[(u * GUIDE as f64) as usize] as usize;
                while k < CDF_TABLE && cdf[k] < u {
                    k += 1;
                }
                if k < CDF_TABLE {
                    return k as u32;
                }
                let mut k = CDF_TABLE as u32 - 1;
                let mut p = last;
                let mut c = cdf[CDF_TABLE - 1];
                while u > c {
                    k += 1;
                    p *= self.rate / k as f64;
                    c += p;
                    // mass exhausted in floating point; draw again
                    if p < 1e-300 && k as f64 > self.rate {
                        break;
                    }
                }
                if u <= c {
                    return k;
                }
            },
            PoissonMethod::Rejection {
                log_rate,
                a,
                b,
                inv_alpha,
                v_r,
            } => loop {
                let u = stream.uniform() - 0.5;
                let v = stream.uniform_open0();
                let us = 0.5 - u.abs();
                let k = floor((2.0 * a / us + b) * u + self.rate + 0.43);
                if us >= 0.07 && v <= v_r {
                    return k as u32;
                }
                if k < 0.0 || (us < 0.013 && v > us) {
                    continue;
                }
                let lhs = log(v) + log(inv_alpha) - log(a / (us * us) + b);
                let rhs = -self.rate + k * log_rate - log_factorial(k as u64);
                if lhs <= rhs {
                    return k as u32;
                }
            },
        }
    }
}

pub fn sample_poisson(stream: &mut RngStream, rate: f64) -> Result<u32> {
    Ok(Poisson::new(rate)?.sample(stream))
}

/// `Geom(1 - mu)` on `{1, 2, ...}` by inversion.
#[derive(Clone, Copy, Debug)]
pub struct Geometric {
    inv_log_mu: f64,
}

impl Geometric {
    pub fn new(mu: f64) -> Result<Self> {
        if !(mu > 0.0 && mu < 1.0) {
            return Err(Error::Parameter {
                name: "mu",
                value: mu,
                reason: "geometric parameter must lie in (0, 1)",
            });
        }
        Ok(Self {
            inv_log_mu: 1.0 / log(mu),
        })
    }

    #[inline]
    pub fn sample(&self, stream: &mut RngStream) -> u32 {
        let k = 1.0 + floor(log(stream.uniform_open0()) * self.inv_log_mu);
        if k >= u32::MAX as f64 {
            u32::MAX
        } else {
            k as u32
        }
    }
}

pub fn sample_geometric(stream: &mut RngStream, mu: f64) -> Result<u32> {
    Ok(Geometric::new(mu)?.sample(stream))
}

/// Box-Muller; one normal per call, the sine branch is discarded.
pub fn sample_gaussian(stream: &mut RngStream, mean: f64, variance: f64) -> Result<f64> {
    if !(variance > 0.0) || !variance.is_finite() {
        return Err(Error::Parameter {
            name: "variance",
            value: variance,
            reason: "must be positive",
        });
    }
    Ok(mean + sqrt(variance) * standard_normal(stream))
}

#[inline]
pub(crate) fn standard_normal(stream: &mut RngStream) -> f64 {
    let r = sqrt(-2.0 * log(stream.uniform_open0()));
    r * cos(core::f64::consts::TAU * stream.uniform())
}

/// Rooted tree labelled in breadth-first order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<u32>,
}

impl RootedTree {
    pub const ROOT: u32 = u32::MAX;

    /// Builds a tree from a parent array, checking `parent[i] < i`.
    pub fn from_parents(parent: Vec<u32>) -> Option<Self> {
        let ok = parent.first() == Some(&Self::ROOT)
            && parent.iter().enumerate().skip(1).all(|(i, &p)| (p as usize) < i);
        ok.then_some(Self { parent })
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn parents(&self) -> &[u32] {
        &self.parent
    }
}

/// Grows one Poisson-offspring Galton-Watson tree breadth-first and appends
/// the parent index of every non-root node (relative to the root at 0) to
/// `out`. Returns the tree size.
pub(crate) fn grow_pgw_into(
    stream: &mut RngStream,
    offspring: &Poisson,
    cap: usize,
    out: &mut Vec<u32>,
) -> Result<usize> {
    let base = out.len();
    let mut size = 1usize;
    let mut next = 0usize;
    while next < size {
        let children = offspring.sample(stream) as usize;
        if size + children > cap {
            out.truncate(base);
            return Err(Error::TreeCapExceeded(cap));
        }
        out.extend(core::iter::repeat_n(next as u32, children));
        size += children;
        next += 1;
    }
    Ok(size)
}

/// Family tree of a Galton-Watson process with Poisson(`mu`) offspring.
pub fn sample_pgw_tree(stream: &mut RngStream, mu: f64, cap: usize) -> Result<RootedTree> {
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::Parameter {
            name: "mu",
            value: mu,
            reason: "subcritical offspring mean must lie in (0, 1)",
        });
    }
    if cap == 0 {
        return Err(Error::Domain("tree cap must be at least 1"));
    }
    let offspring = Poisson::new(mu)?;
    let mut parent = Vec::with_capacity(4);
    parent.push(RootedTree::ROOT);
    grow_pgw_into(stream, &offspring, cap, &mut parent)?;
    Ok(RootedTree { parent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{borel_pmf, conjugate};

    fn moments_of(xs: impl Iterator<Item = f64>) -> (f64, f64) {
        let (mut n, mut s, mut s2) = (0.0, 0.0, 0.0);
        for x in xs {
            n += 1.0;
            s += x;
            s2 += x * x;
        }
        let mean = s / n;
        (mean, s2 / n - mean * mean)
    }

    #[test]
    fn poisson_zero_rate() {
        let mut s = RngStream::new(1, 0);
        assert!((0..100).all(|_| sample_poisson(&mut s, 0.0).unwrap() == 0));
        assert!(sample_poisson(&mut s, -1.0).is_err());
        assert!(sample_poisson(&mut s, 101.0).is_err());
    }

    #[test]
    fn poisson_mean_and_variance_rate_two() {
        let mut s = RngStream::new(11, 0);
        let p = Poisson::new(2.0).unwrap();
        let (mean, var) = moments_of((0..1_000_000).map(|_| p.sample(&mut s) as f64));
        assert!((mean - 2.0).abs() < 0.01, "mean {mean}");
        assert!((var - 2.0).abs() < 0.02, "var {var}");
    }

    #[test]
    fn poisson_rejection_branch() {
        let mut s = RngStream::new(12, 0);
        for rate in [10.0, 25.0, 80.0] {
            let p = Poisson::new(rate).unwrap();
            let (mean, var) = moments_of((0..400_000).map(|_| p.sample(&mut s) as f64));
            let band = 6.0 * sqrt(rate / 400_000.0);
            assert!((mean - rate).abs() < band, "rate {rate} mean {mean}");
            assert!((var / rate - 1.0).abs() < 0.02, "rate {rate} var {var}");
        }
    }

    #[test]
    fn geometric_domain_and_limits() {
        let mut s = RngStream::new(3, 0);
        assert!(sample_geometric(&mut s, 0.0).is_err());
        assert!(sample_geometric(&mut s, 1.0).is_err());
        let g = Geometric::new(1e-9).unwrap();
        let ones = (0..100_000).filter(|_| g.sample(&mut s) == 1).count();
        assert!(ones as f64 >= 100_000.0 * (1.0 - 1e-8));
    }

    #[test]
    fn geometric_mean_and_bin() {
        let mut s = RngStream::new(4, 0);
        let mu = 0.406_375_7;
        let g = Geometric::new(mu).unwrap();
        let (mean, _) = moments_of((0..1_000_000).map(|_| g.sample(&mut s) as f64));
        assert!((mean - 1.0 / (1.0 - mu)).abs() < 0.005, "mean {mean}");
        let half = Geometric::new(0.5).unwrap();
        let threes = (0..1_000_000).filter(|_| half.sample(&mut s) == 3).count();
        assert!((threes as f64 / 1e6 - 0.125).abs() < 0.002);
    }

    #[test]
    fn gaussian_concentrates() {
        let mut s = RngStream::new(5, 0);
        assert!(sample_gaussian(&mut s, 0.0, 0.0).is_err());
        let x = sample_gaussian(&mut s, 1.25, 1e-20).unwrap();
        assert!((x - 1.25).abs() <= 10.0 * 1e-10);
        let (mean, _) = moments_of((0..100_000).map(|_| sample_gaussian(&mut s, 1.593_624_3, 1e-5).unwrap()));
        assert!((mean - 1.593_624_3).abs() < 1e-4);
    }

    #[test]
    fn pgw_tree_shape_and_sizes() {
        let mu = conjugate(2.0).unwrap();
        let mut s = RngStream::new(6, 0);
        let mut singletons = 0usize;
        let mut total = 0usize;
        let mut hist = [0usize; 21];
        let reps = 1_000_000;
        for _ in 0..reps {
            let t = sample_pgw_tree(&mut s, mu, DEFAULT_TREE_CAP).unwrap();
            assert!(RootedTree::from_parents(t.parents().to_vec()).is_some());
            total += t.size();
            if t.size() == 1 {
                singletons += 1;
            }
            if t.size() <= 20 {
                hist[t.size()] += 1;
            }
        }
        assert!((singletons as f64 / reps as f64 - exp(-mu)).abs() < 0.002);
        assert!((total as f64 / reps as f64 - 1.0 / (1.0 - mu)).abs() < 0.01);
        for (t, &count) in hist.iter().enumerate().skip(1) {
            let p = borel_pmf(mu, t as u64);
            assert!((count as f64 / reps as f64 - p).abs() < 0.003, "t={t}");
        }
    }

    #[test]
    fn pgw_cap_guard() {
        let mut s = RngStream::new(7, 0);
        // supercritical misuse is rejected up front
        assert!(sample_pgw_tree(&mut s, 1.5, 10).is_err());
        let mut hit = false;
        for _ in 0..1000 {
            if let Err(Error::TreeCapExceeded(2)) = sample_pgw_tree(&mut s, 0.9, 2) {
                hit = true;
                break;
            }
        }
        assert!(hit);
    }

    #[test]
    fn samplers_are_deterministic() {
        let run = || {
            let mut s = RngStream::new(99, 5);
            let mut v = Vec::new();
            for _ in 0..100 {
                v.push(sample_poisson(&mut s, 1.7).unwrap() as u64);
                v.push(sample_geometric(&mut s, 0.3).unwrap() as u64);
                v.push(sample_gaussian(&mut s, 0.0, 1.0).unwrap().to_bits());
                v.push(sample_pgw_tree(&mut s, 0.5, 1000).unwrap().size() as u64);
            }
            v
        };
        assert_eq!(run(), run());
    }
}
