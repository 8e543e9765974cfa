//! The persisted graph document: canonical JSON with sorted keys and a
//! canonically sorted edge list. Parsing validates the schema version, the
//! label ranges, the parity class, and rejects self-loops and duplicates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::edge::Edge;
use crate::graph::Cgg;
use crate::labelling::{Labelling, Parity};

pub const SCHEMA_VERSION: &str = "1";

/// Optional construction metadata carried alongside a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
}

impl Meta {
    pub fn is_empty(&self) -> bool {
        self.construction.is_none() && self.ell.is_none() && self.k.is_none() && self.q.is_none()
    }
}

// Field order is the canonical (alphabetical) key order of the emitted JSON.
#[derive(Serialize, Deserialize)]
struct RawDocument {
    edges: Vec<(i64, i64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
    n: u32,
    parity: Parity,
    #[serde(rename = "schemaVersion")]
    schema_version: String,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schemaVersion {found:?}, this reader handles {SCHEMA_VERSION:?}")]
    UnsupportedVersion { found: String },
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error("edge #{index} {pair:?}: {reason}")]
    BadEdge {
        index: usize,
        pair: (i64, i64),
        reason: String,
    },
}

/// Canonical JSON text for a graph: keys in sorted order, the edge list
/// canonically sorted with one `[a, b]` pair per line, two-space
/// indentation, trailing newline. Emitted by hand so the bytes are a single
/// well-defined normal form.
pub fn serialize(g: &Cgg, meta: Option<&Meta>) -> String {
    let mut out = String::from("{\n");
    out.push_str("  \"edges\": [");
    let mut first = true;
    for e in g.edges() {
        let (a, b) = e.endpoints();
        if !first {
            out.push(',');
        }
        first = false;
        out.push_str(&format!("\n    [{}, {}]", a.value(), b.value()));
    }
    if !first {
        out.push_str("\n  ");
    }
    out.push_str("],\n");

    if let Some(meta) = meta.filter(|m| !m.is_empty()) {
        out.push_str("  \"meta\": {\n");
        let mut fields: Vec<String> = Vec::new();
        if let Some(c) = &meta.construction {
            fields.push(format!(
                "    \"construction\": {}",
                serde_json::to_string(c).expect("strings serialize")
            ));
        }
        if let Some(ell) = meta.ell {
            fields.push(format!("    \"ell\": {ell}"));
        }
        if let Some(k) = meta.k {
            fields.push(format!("    \"k\": {k}"));
        }
        if let Some(q) = meta.q {
            fields.push(format!("    \"q\": {q}"));
        }
        out.push_str(&fields.join(",\n"));
        out.push_str("\n  },\n");
    }

    out.push_str(&format!("  \"n\": {},\n", g.n()));
    out.push_str(&format!("  \"parity\": \"{}\",\n", g.labelling().parity()));
    out.push_str(&format!("  \"schemaVersion\": \"{SCHEMA_VERSION}\"\n"));
    out.push_str("}\n");
    out
}

/// Parse and validate a document.
pub fn parse(text: &str) -> Result<(Cgg, Option<Meta>), ParseError> {
    let doc: RawDocument = serde_json::from_str(text)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(ParseError::UnsupportedVersion {
            found: doc.schema_version,
        });
    }
    let labelling =
        Labelling::new(doc.n, doc.parity).map_err(|e| ParseError::Invalid(e.to_string()))?;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (index, &(a, b)) in doc.edges.iter().enumerate() {
        let edge = Edge::new(&labelling, a, b).map_err(|e| ParseError::BadEdge {
            index,
            pair: (a, b),
            reason: e.to_string(),
        })?;
        if edges.contains(&edge) {
            return Err(ParseError::BadEdge {
                index,
                pair: (a, b),
                reason: "duplicate edge".into(),
            });
        }
        edges.push(edge);
    }
    let g = Cgg::new(labelling, edges).map_err(|e| ParseError::Invalid(e.to_string()))?;
    Ok((g, doc.meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::max_arc_graph;

    #[test]
    fn round_trip_is_lossless() {
        let g = max_arc_graph(10, 2).unwrap();
        let meta = Meta {
            construction: Some("max_arc".into()),
            k: Some(2),
            ..Meta::default()
        };
        let text = serialize(&g, Some(&meta));
        let (parsed, parsed_meta) = parse(&text).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(parsed_meta, Some(meta));
        // Serializing the parse result reproduces the text byte for byte.
        assert_eq!(serialize(&parsed, parsed_meta.as_ref()), text);
    }

    #[test]
    fn parity_violations_are_rejected() {
        let text = r#"{
  "edges": [[2, -3]],
  "n": 12,
  "parity": "odd",
  "schemaVersion": "1"
}"#;
        match parse(text) {
            Err(ParseError::BadEdge { index: 0, pair, .. }) => assert_eq!(pair, (2, -3)),
            other => panic!("expected a parity error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_schema_version_is_rejected() {
        let text = r#"{
  "edges": [],
  "n": 8,
  "parity": "odd",
  "schemaVersion": "999"
}"#;
        assert!(matches!(
            parse(text),
            Err(ParseError::UnsupportedVersion { .. })
        ));
    }

    #[test]
    fn duplicates_and_loops_are_rejected() {
        let dup = r#"{"edges": [[1, 3], [3, 1]], "n": 8, "parity": "odd", "schemaVersion": "1"}"#;
        assert!(matches!(
            parse(dup),
            Err(ParseError::BadEdge { index: 1, .. })
        ));
        let loop_ = r#"{"edges": [[3, 3]], "n": 8, "parity": "odd", "schemaVersion": "1"}"#;
        assert!(matches!(
            parse(loop_),
            Err(ParseError::BadEdge { index: 0, .. })
        ));
    }

    #[test]
    fn out_of_range_labels_are_rejected() {
        let text = r#"{"edges": [[1, 13]], "n": 12, "parity": "odd", "schemaVersion": "1"}"#;
        assert!(matches!(parse(text), Err(ParseError::BadEdge { .. })));
    }
}
