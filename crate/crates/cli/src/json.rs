//! JSON encodings shared by the subcommands.

use serde_json::{json, Value};

use bmw_core::contentfn::WheelSignature;
use bmw_core::tableaux::LabeledPartition;

pub fn labeled_json(l: &LabeledPartition) -> Value {
    json!({"shape": l.shape.to_text(), "defect": l.defect})
}

pub fn labeled_pairs_json(pairs: &[(LabeledPartition, LabeledPartition)]) -> Value {
    Value::Array(pairs.iter().map(|(a, b)| json!([labeled_json(a), labeled_json(b)])).collect())
}

/// Nonzero exponents, sorted by content value.
pub fn signature_json(sig: &WheelSignature) -> Value {
    Value::Array(
        sig.exponents()
            .iter()
            .map(|(v, e)| json!({"value": v.to_text(), "exponent": e}))
            .collect(),
    )
}
