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

//! Plain-text edge lists.
//!
//! One edge per line as `u v` with `u <= v`, 0-indexed, lines sorted by
//! `(u, v)` and each terminated by a newline. A half-loop (a self-loop
//! counting once toward the degree) is the single token `v` and sorts
//! before the edges at `v`. Blank lines and lines starting with `#` are
//! ignored when reading. The vertex count is not stored; readers take one
//! more than the largest label, so trailing isolated vertices are lost.

use std::io::{self, BufRead, Write};

use giant_anatomy_core::MultiGraph;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
}

fn lines(g: &MultiGraph) -> Vec<(u32, Option<u32>)> {
    let mut out: Vec<(u32, Option<u32>)> = g
        .edges()
        .iter()
        .map(|&[u, v]| (u, Some(v)))
        .chain(g.half_loops().iter().map(|&v| (v, None)))
        .collect();
    out.sort_unstable();
    out
}

pub fn write_edgelist<W: Write>(g: &MultiGraph, out: W) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    for (u, v) in lines(g) {
        match v {
            Some(v) => writeln!(out, "{u} {v}")?,
            None => writeln!(out, "{u}")?,
        }
    }
    out.flush()
}

pub fn to_string(g: &MultiGraph) -> String {
    let mut buf = Vec::new();
    write_edgelist(g, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("edge lists are ASCII")
}

pub fn read_edgelist<R: BufRead>(input: R) -> Result<MultiGraph, EdgeListError> {
    let mut edges = Vec::new();
    let mut half_loops = Vec::new();
    let mut max_label: Option<u32> = None;
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let syntax = |reason: String| EdgeListError::Syntax { line: i + 1, reason };
        let labels = text
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|e| syntax(format!("bad label {t:?}: {e}")))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        match labels[..] {
            [v] => half_loops.push(v),
            [u, v] => edges.push((u, v)),
            _ => return Err(syntax(format!("expected 1 or 2 labels, found {}", labels.len()))),
        }
        let top = labels.iter().copied().max();
        max_label = max_label.max(top);
    }
    let n = max_label.map_or(0, |m| m as usize + 1);
    let mut g = MultiGraph::from_edges(n, edges).expect("labels bounded by the maximum");
    for v in half_loops {
        g.add_half_loop(v);
    }
    Ok(g)
}
