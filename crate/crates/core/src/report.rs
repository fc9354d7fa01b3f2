//! Per-identity verification records.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub point: BTreeMap<String, f64>,
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub rel_discrepancy: f64,
    pub passed: bool,
}

impl IdentityReport {
    /// Compares `lhs` with `rhs`; below `|rhs| < rel_tol` the absolute
    /// difference is used instead.
    pub fn new(
        identity_id: impl Into<String>,
        point: BTreeMap<String, f64>,
        lhs: Scalar,
        rhs: Scalar,
        rel_tol: f64,
    ) -> Self {
        let diff = (lhs - rhs).norm();
        let scale = rhs.norm();
        let rel_discrepancy = if scale < rel_tol { diff } else { diff / scale };
        let passed = rel_discrepancy <= rel_tol && rel_discrepancy.is_finite();
        IdentityReport {
            identity_id: identity_id.into(),
            point,
            lhs,
            rhs,
            rel_discrepancy,
            passed,
        }
    }
}

/// Builds a parameter map from `(name, value)` pairs.
pub fn point(entries: &[(&str, f64)]) -> BTreeMap<String, f64> {
    entries.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}
