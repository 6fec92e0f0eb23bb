//! JSON scenario files and report documents.
//!
//! A scenario file looks like
//!
//! ```json
//! { "central": [2, 7], "cusps": [[2, 3], [2, 3], [2, 3]], "double_points": 0, "genus": 0 }
//! ```
//!
//! Unknown keys, missing keys, non-coprime pairs and negative counts are all
//! rejected with the line and column of the offending token. Reports mirror
//! [`ObstructionReport`]; every rational is written as an `"a/b"` string.

use thiserror::Error;

use crate::deformation::{DeformationScenario, ObstructionReport};
use crate::singularities::CuspDescriptor;

#[derive(Debug, Error)]
#[error("{message} (line {line}, column {column})")]
pub struct DocumentError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        // serde_json appends " at line L column C" to its Display; keep only
        // the message part.
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(i) => full[..i].to_string(),
            None => full,
        };
        DocumentError {
            message,
            line: e.line(),
            column: e.column(),
        }
    }
}

pub fn parse_scenario(text: &str) -> Result<DeformationScenario, DocumentError> {
    Ok(serde_json::from_str(text)?)
}

/// A bare JSON list of `[p, q]` pairs.
pub fn parse_cusp_list(text: &str) -> Result<Vec<CuspDescriptor>, DocumentError> {
    Ok(serde_json::from_str(text)?)
}

pub fn scenario_to_json(s: &DeformationScenario) -> String {
    serde_json::to_string_pretty(s).expect("scenario serialization is infallible")
}

pub fn report_to_json(r: &ObstructionReport) -> String {
    serde_json::to_string_pretty(r).expect("report serialization is infallible")
}

pub fn parse_report(text: &str) -> Result<ObstructionReport, DocumentError> {
    Ok(serde_json::from_str(text)?)
}
