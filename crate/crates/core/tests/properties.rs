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

use giant_anatomy_core::graph::{configuration_pairing, contract_kernel, subdivide_edges, two_core};
use giant_anatomy_core::math::{conjugate, moments};
use giant_anatomy_core::stats::ks_statistic;
use giant_anatomy_core::{ModelParams, MultiGraph, RngStream};
use proptest::prelude::*;

fn brute_force_ks(a: &[f64], b: &[f64]) -> f64 {
    let cdf = |xs: &[f64], t: f64| xs.iter().filter(|&&x| x <= t).count() as f64 / xs.len() as f64;
    a.iter()
        .chain(b)
        .map(|&t| (cdf(a, t) - cdf(b, t)).abs())
        .fold(0.0, f64::max)
}

#[test]
fn ks_matches_brute_force_on_tied_datasets() {
    let mut s = RngStream::new(51, 0);
    for round in 0..50 {
        let spread = 5 + 10 * round as u64;
        let a: Vec<f64> = (0..200).map(|_| s.below(spread) as f64).collect();
        let b: Vec<f64> = (0..200)
            .map(|_| (s.below(spread) + round as u64 % 3) as f64)
            .collect();
        assert_eq!(ks_statistic(&a, &b), brute_force_ks(&a, &b));
    }
}

proptest! {
    #[test]
    fn ks_agrees_with_brute_force(
        a in prop::collection::vec(0u8..20, 1..60),
        b in prop::collection::vec(0u8..20, 1..60),
    ) {
        let a: Vec<f64> = a.into_iter().map(f64::from).collect();
        let b: Vec<f64> = b.into_iter().map(f64::from).collect();
        prop_assert_eq!(ks_statistic(&a, &b), brute_force_ks(&a, &b));
        prop_assert_eq!(ks_statistic(&a, &b), ks_statistic(&b, &a));
    }

    #[test]
    fn conjugate_is_a_fixed_point(lambda in 1.01f64..20.0) {
        let mu = conjugate(lambda).unwrap();
        prop_assert!(mu > 0.0 && mu < 1.0);
        prop_assert!((mu * (-mu).exp() - lambda * (-lambda).exp()).abs() <= 1e-12);
    }

    #[test]
    fn moment_identity_holds(lambda in 1.05f64..12.0) {
        let p = ModelParams::new(1_000_000, lambda).unwrap();
        let m = moments(&p);
        prop_assert!((m.core_edges - m.core_vertices - m.b3 * p.n as f64).abs() <= 1e-6 * p.n as f64);
        prop_assert!(m.kernel_vertices <= m.core_vertices && m.core_vertices <= m.giant_vertices(p.n));
    }

    #[test]
    fn pairing_preserves_degrees(degrees in prop::collection::vec(0u32..6, 1..40), seed: u64) {
        let mut degrees = degrees;
        if degrees.iter().sum::<u32>() % 2 == 1 {
            degrees[0] += 1;
        }
        let mut s = RngStream::new(seed, 0);
        let g = configuration_pairing(&mut s, &degrees).unwrap();
        prop_assert_eq!(g.degrees(), degrees);
    }

    #[test]
    fn two_core_is_idempotent_with_min_degree_two(
        n in 1usize..25,
        edges in prop::collection::vec((0u32..25, 0u32..25), 0..50),
    ) {
        let edges = edges.into_iter().map(|(a, b)| (a % n as u32, b % n as u32));
        let g = MultiGraph::from_edges(n, edges).unwrap();
        let tc = two_core(&g);
        prop_assert!(tc.core.degrees().iter().all(|&d| d >= 2));
        prop_assert!(two_core(&tc.core).core.same_multigraph(&tc.core));
        let k = contract_kernel(&tc.core).unwrap();
        let paths: u64 = k.path_lengths.iter().chain(&k.disjoint_cycles).map(|&l| l as u64).sum();
        prop_assert_eq!(paths, tc.core.edge_count() as u64);
        prop_assert!(k.kernel.degrees().iter().all(|&d| d >= 3));
    }

    #[test]
    fn subdivision_adds_one_vertex_per_extra_edge(seed: u64, mu in 0.05f64..0.9) {
        let mut s = RngStream::new(seed, 1);
        let kernel = configuration_pairing(&mut s, &[3, 3, 4, 5, 3]).unwrap();
        let (core, lengths) = subdivide_edges(&mut s, &kernel, mu).unwrap();
        let extra: u64 = lengths.iter().map(|&l| l as u64 - 1).sum();
        prop_assert_eq!(core.vertex_count() as u64, kernel.vertex_count() as u64 + extra);
        prop_assert_eq!(core.edge_count() as u64, lengths.iter().map(|&l| l as u64).sum::<u64>());
    }
}
