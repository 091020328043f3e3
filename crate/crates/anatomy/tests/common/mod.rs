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

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_giant-anatomy")
}

pub fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("spawning the binary")
}

pub fn run_with_threads(args: &[&str], threads: usize) -> Output {
    Command::new(bin())
        .args(args)
        .env("GIANT_ANATOMY_THREADS", threads.to_string())
        .output()
        .expect("spawning the binary")
}

/// Runs each golden command into `dir` and reports the files that differ
/// from their checked-in copies.
pub fn golden_mismatches(dir: &Path) -> Vec<String> {
    let theta = golden("theta.edgelist");
    let theta = theta.to_str().unwrap();
    let cases: [(&[&str], &str, &[&str]); 4] = [
        (
            &["sample", "--n", "300", "--seed", "7"],
            "sample_n300_seed7.edgelist",
            &[".anatomy.json"],
        ),
        (
            &["sample", "--n", "300", "--seed", "7", "--model", "direct"],
            "direct_n300_seed7.edgelist",
            &[".anatomy.json"],
        ),
        (
            &["cola", "--n", "300", "--reps", "6", "--seed", "3"],
            "cola_n300_seed3.csv",
            &[],
        ),
        (&["anatomy", theta], "theta.anatomy.json", &[]),
    ];
    let mut bad = Vec::new();
    for (args, name, extra) in cases {
        let out = dir.join(name);
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["-o", out.to_str().unwrap()]);
        let status = run(&full).status;
        if !status.success() {
            bad.push(format!("{name}: exit {status}"));
            continue;
        }
        for suffix in std::iter::once("").chain(extra.iter().copied()) {
            let file = format!("{name}{suffix}");
            let got = std::fs::read(dir.join(&file)).unwrap_or_default();
            let want = std::fs::read(golden(&file)).expect("golden file");
            if got != want {
                bad.push(file);
            }
        }
    }
    bad
}
