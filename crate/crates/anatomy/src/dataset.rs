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

//! Monte-Carlo datasets as CSV, one [`AnatomySummary`] per row under a
//! fixed header.

use std::io::{Read, Write};

use giant_anatomy_core::stats::AnatomySummary;

pub const HEADER: [&str; 9] = [
    "giant_size",
    "core_size",
    "core_edges",
    "kernel_size",
    "kernel_edges",
    "n2",
    "longest_two_path",
    "max_tree_size",
    "disjoint_cycle_vertices",
];

pub fn write_dataset<W: Write>(rows: &[AnatomySummary], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(HEADER)?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_dataset<R: Read>(input: R) -> csv::Result<Vec<AnatomySummary>> {
    csv::Reader::from_reader(input).deserialize().collect()
}
