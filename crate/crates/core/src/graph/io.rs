use serde::{Deserialize, Serialize};

use super::ExclusivityGraph;
use crate::error::{Error, Result};

/// Wire form: `{"n": 5, "weights": [1.0, ...], "edges": [[0, 1], ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    n: usize,
    weights: Vec<f64>,
    edges: Vec<[i64; 2]>,
}

pub fn parse_graph(text: &str) -> Result<ExclusivityGraph> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| Error::parse("graph document", e.to_string()))?;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (k, &[i, j]) in doc.edges.iter().enumerate() {
        if i < 0 || j < 0 {
            return Err(Error::parse(
                format!("edges[{k}]"),
                format!("negative vertex index in [{i}, {j}]"),
            ));
        }
        edges.push((i as usize, j as usize));
    }
    ExclusivityGraph::new(doc.n, doc.weights, edges)
}

pub fn serialize_graph(g: &ExclusivityGraph) -> String {
    let doc = GraphDoc {
        n: g.n(),
        weights: g.weights().to_vec(),
        edges: g
            .edges()
            .iter()
            .map(|&(i, j)| [i as i64, j as i64])
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph document serializes")
}
