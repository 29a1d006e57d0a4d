//! Text and JSON serialisation of rotation systems.
//!
//! The text form has one line per vertex, `label: n1 n2 n3 ...`, listing the
//! neighbours counter-clockwise by label. The JSON form carries the same data
//! as `{"vertices": [{"label": ..., "neighbors": [...]}, ...]}`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{build_map, PlanarMap};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonVertex {
    pub label: String,
    pub neighbors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonMap {
    pub vertices: Vec<JsonVertex>,
}

impl PlanarMap {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in 0..self.num_vertices() {
            s.push_str(&self.label(v));
            s.push(':');
            for w in self.neighbors(v) {
                s.push(' ');
                s.push_str(&self.label(w));
            }
            s.push('\n');
        }
        s
    }

    /// Parses the text form. Blank lines and lines starting with `#` are ignored.
    pub fn from_text(text: &str) -> Result<PlanarMap> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (label, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("line {}: missing ':'", lineno + 1)))?;
            rows.push(JsonVertex {
                label: label.trim().to_string(),
                neighbors: rest.split_whitespace().map(str::to_string).collect(),
            });
        }
        JsonMap { vertices: rows }.to_map()
    }

    /// Graphviz rendering with vertex labels, edges in vertex order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.num_vertices() {
            s.push_str(&format!("  {v} [label=\"{}\"];\n", self.label(v)));
        }
        for u in 0..self.num_vertices() {
            for w in self.neighbors(u).into_iter().filter(|&w| w > u) {
                s.push_str(&format!("  {u} -- {w};\n"));
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json_map(&self) -> JsonMap {
        JsonMap {
            vertices: (0..self.num_vertices())
                .map(|v| JsonVertex {
                    label: self.label(v),
                    neighbors: self.neighbors(v).into_iter().map(|w| self.label(w)).collect(),
                })
                .collect(),
        }
    }
}

impl JsonMap {
    pub fn to_map(&self) -> Result<PlanarMap> {
        let mut id = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if v.label.is_empty() || v.label.contains(char::is_whitespace) || v.label.contains(':')
            {
                return Err(Error::Parse(format!("bad label `{}`", v.label)));
            }
            if id.insert(v.label.as_str(), i).is_some() {
                return Err(Error::Parse(format!("duplicate label `{}`", v.label)));
            }
        }
        let rotations = self
            .vertices
            .iter()
            .map(|v| {
                v.neighbors
                    .iter()
                    .map(|n| {
                        id.get(n.as_str())
                            .copied()
                            .ok_or_else(|| Error::Parse(format!("unknown vertex `{n}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = self.vertices.iter().map(|v| v.label.clone()).collect();
        Ok(build_map(&rotations)?.with_labels(labels))
    }
}
