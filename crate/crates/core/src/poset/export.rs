use std::fmt::Write;

use super::OrbitPoset;
use crate::error::{Error, Result};

impl OrbitPoset {
    /// Graphviz text: closure edges point upward, duality pairs are dashed.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", self.case).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (i, l) in self.labels.iter().enumerate() {
            let shape = if self.duality[i] == i { "doublecircle" } else { "circle" };
            writeln!(
                out,
                "  n{i} [label=\"{l}\\n{}\", shape={shape}];",
                self.dims[i]
            )
            .unwrap();
        }
        for (a, b) in &self.covers {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        for (i, &j) in self.duality.iter().enumerate() {
            if i < j {
                writeln!(out, "  n{i} -> n{j} [style=dashed, dir=none, constraint=false];").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn export_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn import_json(text: &str) -> Result<OrbitPoset> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}
