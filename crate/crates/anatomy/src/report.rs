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

//! JSON envelopes for summaries and reports.
//!
//! Every document carries `schema_version` and `kind`; the payload sits
//! under `report`. Field names inside the payloads are those of the core
//! types and are part of the format.

use serde::{de::DeserializeOwned, Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Anatomy,
    Theory,
    Compare,
    Tau,
}

/// How a report was produced.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunInfo {
    pub n: usize,
    pub lambda: f64,
    pub seed: u64,
    pub reps: u64,
    pub model: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model_b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_b: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema_version: u32,
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub run: Option<RunInfo>,
    pub report: T,
}

impl<T> Envelope<T> {
    pub fn new(kind: Kind, run: Option<RunInfo>, report: T) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            kind,
            run,
            report,
        }
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> serde_json::Result<Envelope<T>> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use giant_anatomy_core::stats::{compare, AnatomySummary, Metric, MetricRow, Verdict};

    #[test]
    fn anatomy_envelope_fields() {
        let env = Envelope::new(Kind::Anatomy, None, AnatomySummary::default());
        let v: serde_json::Value = serde_json::from_str(&to_json(&env).unwrap()).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["kind"], "anatomy");
        assert!(v.get("run").is_none());
        assert_eq!(v["report"]["longest_two_path"], 0);
        let back: Envelope<AnatomySummary> = from_json(&to_json(&env).unwrap()).unwrap();
        assert_eq!(back, env);
    }

    #[test]
    fn metric_rows_use_frozen_names() {
        let a: Vec<AnatomySummary> = (0..60)
            .map(|i| AnatomySummary {
                core_size: i,
                ..Default::default()
            })
            .collect();
        let r = compare(&a, &a, &[Metric::CoreSize], 0.001).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        let row = &v["metrics"][0];
        for key in [
            "metric", "mean_a", "mean_b", "std_a", "std_b", "z", "ks", "p", "verdict",
        ] {
            assert!(row.get(key).is_some(), "{key}");
        }
        assert_eq!(row["metric"], "core_size");
        assert_eq!(row["verdict"], "pass");
        let back: MetricRow = serde_json::from_value(row.clone()).unwrap();
        assert_eq!(back.verdict, Verdict::Pass);
    }
}
