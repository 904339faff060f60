//! JSON certificates: the common envelope every decision procedure's answer
//! is wrapped in.

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::edgelist::digraph_hash;

pub const SCHEMA: &str = "diperfect-cert/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub query: String,
    /// SHA-256 of the canonical edge list of the input.
    #[serde(rename = "input-hash")]
    pub input_hash: String,
    /// True when the queried property holds or the searched-for witness
    /// exists.
    pub result: bool,
    pub witness: serde_json::Value,
}

impl Certificate {
    pub fn new<W: Serialize>(
        query: impl Into<String>,
        input: &Digraph,
        result: bool,
        witness: &W,
    ) -> Self {
        Certificate {
            schema: SCHEMA.to_string(),
            query: query.into(),
            input_hash: digraph_hash(input),
            result,
            witness: serde_json::to_value(witness).expect("witness types serialise"),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }
}
