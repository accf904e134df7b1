//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 4            <- optional header: vertex count, alone on the first data line
//! a b          <- unit conductance
//! b c 2.5      <- explicit conductance
//! ```
//!
//! Labels are arbitrary non-whitespace tokens, numbered `0..n` in order of
//! first appearance. A header larger than the number of labels adds vertices
//! named by their id.

use std::collections::HashMap;
use std::fmt::Write as _;

use elnet_core::Network;

#[derive(Debug, thiserror::Error)]
pub enum EdgeListError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] elnet_core::Error),
}

fn parse_err(line: usize, reason: impl Into<String>) -> EdgeListError {
    EdgeListError::Parse { line, reason: reason.into() }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeRecord {
    pub a: String,
    pub b: String,
    pub conductance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EdgeListDocument {
    pub vertex_count: Option<usize>,
    pub records: Vec<EdgeRecord>,
}

impl EdgeListDocument {
    pub fn parse(text: &str) -> Result<Self, EdgeListError> {
        let mut doc = EdgeListDocument::default();
        let mut seen_data = false;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens.as_slice() {
                [] => continue,
                [count] if !seen_data => {
                    let n = count
                        .parse::<usize>()
                        .map_err(|_| parse_err(line, format!("expected vertex count, got {count:?}")))?;
                    doc.vertex_count = Some(n);
                }
                [a, b] | [a, b, _] => {
                    let conductance = match tokens.get(2) {
                        Some(c) => Some(
                            c.parse::<f64>()
                                .map_err(|_| parse_err(line, format!("bad conductance {c:?}")))?,
                        ),
                        None => None,
                    };
                    if a == b {
                        return Err(parse_err(line, format!("self-loop on {a:?}")));
                    }
                    doc.records.push(EdgeRecord {
                        a: a.to_string(),
                        b: b.to_string(),
                        conductance,
                    });
                }
                _ => {
                    return Err(parse_err(
                        line,
                        format!("expected `label label [conductance]`, got {} fields", tokens.len()),
                    ))
                }
            }
            seen_data = true;
        }
        Ok(doc)
    }
}

/// A network together with the external label of each vertex id.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledNetwork {
    pub network: Network,
    pub labels: Vec<String>,
}

impl LabeledNetwork {
    /// Labels are the decimal vertex ids.
    pub fn with_numeric_labels(network: Network) -> Self {
        let labels = (0..network.vertex_count()).map(|v| v.to_string()).collect();
        LabeledNetwork { network, labels }
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    /// Serialises with a vertex-count header. Conductances other than 1 are
    /// written in shortest round-trip form, so parsing the output recovers
    /// them bit for bit.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.network.vertex_count()).unwrap();
        for &(a, b, c) in self.network.edges() {
            if c == 1.0 {
                writeln!(out, "{} {}", self.labels[a], self.labels[b]).unwrap();
            } else {
                writeln!(out, "{} {} {}", self.labels[a], self.labels[b], c).unwrap();
            }
        }
        out
    }
}

/// Parses an edge list and validates the resulting network.
pub fn parse_edge_list(text: &str) -> Result<LabeledNetwork, EdgeListError> {
    let doc = EdgeListDocument::parse(text)?;
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut intern = |label: &str| -> usize {
        *ids.entry(label.to_string()).or_insert_with(|| {
            labels.push(label.to_string());
            labels.len() - 1
        })
    };
    let mut edges = Vec::with_capacity(doc.records.len());
    for r in &doc.records {
        edges.push((intern(&r.a), intern(&r.b), r.conductance.unwrap_or(1.0)));
    }

    let vertex_count = match doc.vertex_count {
        Some(n) if n < labels.len() => {
            return Err(parse_err(1, format!("header declares {n} vertices but {} labels appear", labels.len())))
        }
        Some(n) => n,
        None => labels.len(),
    };
    for id in labels.len()..vertex_count {
        let name = id.to_string();
        if ids.contains_key(&name) {
            return Err(parse_err(1, format!("cannot name unlabelled vertex {id}: label in use")));
        }
        labels.push(name);
    }
    if vertex_count == 0 {
        return Err(parse_err(1, "empty edge list"));
    }
    let network = Network::build(vertex_count, edges)?;
    Ok(LabeledNetwork { network, labels })
}
