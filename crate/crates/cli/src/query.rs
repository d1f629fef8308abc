//! The JSON payload shared by every command.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use lattika_core::discriminant::QmodTwoZ;
use lattika_core::{BigInt, BigRational, LatticeVector};

/// Result of one query: the command name, its inputs, its outputs and the
/// laws that produced them.
///
/// Integers that may exceed 64 bits are encoded as decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryResult {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub notes: Vec<String>,
}

impl QueryResult {
    pub fn new(command: &str) -> Self {
        QueryResult {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.outputs.insert(key.to_string(), value.into());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

pub fn int(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn ints(ns: &[BigInt]) -> Value {
    Value::Array(ns.iter().map(int).collect())
}

pub fn rational(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn qmod2(q: &QmodTwoZ) -> Value {
    rational(q.value())
}

pub fn vector(v: &LatticeVector) -> Value {
    ints(v.coords())
}
