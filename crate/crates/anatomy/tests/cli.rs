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

mod common;

use common::{golden, golden_mismatches, run, run_with_threads};
use giant_anatomy::edgelist::read_edgelist;
use giant_anatomy::report::{from_json, Envelope};
use giant_anatomy_core::stats::{AnatomySummary, ComparisonReport, TheoryReport};

#[test]
fn golden_outputs_are_reproduced() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(golden_mismatches(dir.path()), Vec::<String>::new());
}

#[test]
fn sample_twice_is_byte_identical() {
    let args = [
        "sample",
        "--model",
        "contiguous",
        "--n",
        "1000",
        "--lambda",
        "2",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn theta_graph_fixture() {
    let text = std::fs::read_to_string(golden("theta.anatomy.json")).unwrap();
    let env: Envelope<AnatomySummary> = from_json(&text).unwrap();
    assert_eq!(env.report.kernel_size, 2);
    assert_eq!(env.report.kernel_edges, 3);
    assert_eq!(env.report.core_size, 5);
}

#[test]
fn anatomy_of_sample_equals_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let models = [
        "contiguous",
        "direct",
        "cloning",
        "poisson-config",
        "poisson-geometric",
    ];
    for (i, model) in models.iter().enumerate() {
        let path = dir.path().join(format!("{model}.txt"));
        let p = path.to_str().unwrap();
        let seed = (20 + i).to_string();
        let out = run(&[
            "sample", "--model", model, "--n", "2000", "--seed", &seed, "-o", p,
        ]);
        assert!(
            out.status.success(),
            "{model}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let again = run(&["anatomy", p]);
        assert!(again.status.success());
        let sidecar = std::fs::read(format!("{p}.anatomy.json")).unwrap();
        assert_eq!(again.stdout, sidecar, "{model}");
        let g = read_edgelist(std::fs::read(&path).unwrap().as_slice()).unwrap();
        assert!(g.edge_count() > 0);
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["sample", "--model", "cloning", "--simple"][..],
        &["sample", "--n", "9"],
        &["sample", "--lambda", "1"],
        &["theory", "--reps", "0"],
        &["compare", "--reps", "10"],
        &["compare", "--metrics", "nonsense", "--n", "100"],
        &["sample", "--format", "json"],
        &["no-such-command"],
        &["anatomy", "/nonexistent/file"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verdicts_set_the_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("cmp.json");
    let base = [
        "compare", "--n", "3000", "--reps", "60", "--seed", "4", "--simple", "false",
    ];
    let mut args: Vec<&str> = base.to_vec();
    args.extend(["-o", report.to_str().unwrap()]);
    assert_eq!(run(&args).status.code(), Some(0));
    let env: Envelope<ComparisonReport> = from_json(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(env.report.metrics.len(), 3);
    assert_eq!(env.run.unwrap().model_b.as_deref(), Some("direct"));

    let mut args: Vec<&str> = base.to_vec();
    args.extend(["--lambda-b", "3"]);
    assert_eq!(run(&args).status.code(), Some(1));
}

#[test]
fn theory_report_and_dataset() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("rows.csv");
    let out = run(&[
        "theory",
        "--n",
        "5000",
        "--reps",
        "40",
        "--seed",
        "9",
        "--dataset",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let env: Envelope<TheoryReport> = from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(env.schema_version, 1);
    assert_eq!(env.report.rows, 40);
    let rows = giant_anatomy::dataset::read_dataset(std::fs::File::open(&csv).unwrap()).unwrap();
    assert_eq!(rows.len(), 40);
}

#[test]
fn output_ignores_thread_count() {
    let args = ["theory", "--n", "2000", "--reps", "16", "--seed", "2"];
    let one = run_with_threads(&args, 1);
    let four = run_with_threads(&args, 4);
    assert_eq!(one.stdout, four.stdout);
    let cola = ["cola", "--n", "500", "--reps", "12"];
    assert_eq!(
        run_with_threads(&cola, 1).stdout,
        run_with_threads(&cola, 3).stdout
    );
}
