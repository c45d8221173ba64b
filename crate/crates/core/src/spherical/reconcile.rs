//! Cross-engine comparison of brute, closed and symmetric-function values.

use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use super::symfn::normalized_ch;
use super::{brute_table, closed_value, predicted_ch, Readings, Setup};
use crate::error::Result;
use crate::wreath::Caps;
use crate::CycNum;

/// One disagreement between engines.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub row: String,
    /// Column label for closed, monomial label for symfunc.
    pub at: String,
    /// "closed" or "symfunc".
    pub engine: String,
    pub brute: String,
    pub other: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReconcileReport {
    pub group: String,
    pub xi: String,
    pub pi: String,
    pub n: usize,
    pub rows: usize,
    pub closed_cells: usize,
    pub symfunc_terms: usize,
    /// Per row, LHS/RHS when the two sides are proportional.
    pub ratios: Vec<(String, Option<String>)>,
    /// Per row, the brute values at every column.
    pub cells: Vec<(String, Vec<String>)>,
    pub mismatches: Vec<Mismatch>,
}

impl ReconcileReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!(self)
    }
}

/// LHS/RHS if one constant relates all coefficients.
fn ratio(pairs: &[(CycNum, CycNum)]) -> Option<CycNum> {
    let mut r: Option<CycNum> = None;
    for (l, rhs) in pairs {
        match (l.is_zero(), rhs.is_zero()) {
            (true, true) => continue,
            (false, true) | (true, false) => return None,
            _ => {}
        }
        let q = l * &rhs.inverse()?;
        match &r {
            None => r = Some(q),
            Some(prev) if *prev != q => return None,
            _ => {}
        }
    }
    r
}

/// Runs all three engines on (G, ξ, π, n) and lists every disagreement.
pub fn reconcile(setup: &Setup, readings: &Readings, caps: &Caps) -> Result<ReconcileReport> {
    let brute = brute_table(setup, caps)?;
    let merged = setup.fusion.merged_names();
    let mut mismatches = Vec::new();
    let mut ratios = Vec::new();
    let mut closed_cells = 0;
    let mut symfunc_terms = 0;
    for (i, row) in setup.rows.iter().enumerate() {
        let name = &brute.row_names[i];
        for (j, col) in setup.cols.iter().enumerate() {
            if let Some(v) = closed_value(setup, row, col)? {
                closed_cells += 1;
                if v != brute.values[i][j] {
                    mismatches.push(Mismatch {
                        row: name.clone(),
                        at: brute.col_names[j].clone(),
                        engine: "closed".into(),
                        brute: brute.values[i][j].to_string(),
                        other: v.to_string(),
                    });
                }
            }
        }
        let lhs = normalized_ch(setup, &brute.values[i])?;
        let rhs = predicted_ch(setup, row, readings)?;
        let mut keys: Vec<_> = lhs.terms().map(|(k, _)| k.clone()).collect();
        keys.extend(rhs.terms().map(|(k, _)| k.clone()));
        keys.sort();
        keys.dedup();
        let mut pairs = Vec::new();
        for k in keys {
            symfunc_terms += 1;
            let (a, b) = (lhs.coeff(&k), rhs.coeff(&k));
            if a != b {
                mismatches.push(Mismatch {
                    row: name.clone(),
                    at: k.display_with(&merged),
                    engine: "symfunc".into(),
                    brute: a.to_string(),
                    other: b.to_string(),
                });
            }
            pairs.push((a, b));
        }
        ratios.push((name.clone(), ratio(&pairs).map(|r| r.to_string())));
    }
    Ok(ReconcileReport {
        group: brute.group.clone(),
        xi: brute.xi.clone(),
        pi: setup.pi().name().to_string(),
        n: setup.n(),
        rows: setup.rows.len(),
        closed_cells,
        symfunc_terms,
        ratios,
        cells: brute
            .row_names
            .iter()
            .zip(&brute.values)
            .map(|(r, v)| (r.clone(), v.iter().map(|c| c.to_string()).collect()))
            .collect(),
        mismatches,
    })
}
