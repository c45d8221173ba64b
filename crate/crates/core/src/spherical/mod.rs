//! Θ_{ξ,π}-spherical functions of (SG_{2n}, HG_n) by three independent
//! routes: direct convolution over HG_n, closed forms for single-orbit
//! labels, and coefficient extraction from the symmetric-function side.
//!
//! The brute value is Ω_{λ̲}(x) = |HG_n|⁻¹ Σ_h conj Θ(h) χ^{λ̲}(h x⁻¹), which
//! is (|SG_{2n}|/dim) e_{λ̲} e_Θ evaluated at x under the convolution
//! (f₁f₂)(x) = Σ_y f₁(y⁻¹) f₂(yx).

mod cache;
mod closed;
mod hecke;
mod reconcile;
mod symfn;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groups::{ClassFusion, GroupData};
use crate::partitions::MultiPartition;
use crate::wreath::{
    hecke_labels, irrep_labels, x_rho, Caps, HgContext, IrrepLabelInfo, PairShape, Pi,
    ThetaCharacter, WreathCharacters, WreathElement,
};
use crate::{CycNum, Rational};

pub use cache::SphericalCache;
pub use closed::{classical_spherical, closed_value, delta_pair_brute, delta_pair_spherical};
pub use hecke::{GroupAlgebra, HeckeElem};
pub use reconcile::{reconcile, Mismatch, ReconcileReport};
pub use symfn::{
    ch_map, coset_order, coset_order_brute, normalized_ch, predicted_ch, symfunc_value,
    IotaAlphabet, Prefactor, PsiReading, Readings,
};

/// Everything fixed by (G, ξ, π, n).
pub struct Setup<'a> {
    pub data: &'a GroupData,
    pub fusion: ClassFusion,
    pub theta: ThetaCharacter,
    pub shapes: Vec<PairShape>,
    pub rows: Vec<IrrepLabelInfo>,
    pub cols: Vec<MultiPartition>,
    pub reps: Vec<WreathElement>,
}

impl<'a> Setup<'a> {
    pub fn new(data: &'a GroupData, xi: usize, pi: Pi, n: usize) -> Result<Self> {
        data.check_linear(xi)?;
        let fusion = data.fusion(xi)?;
        let shapes = crate::wreath::orbit_shapes(data, &fusion, pi)?;
        let rows = irrep_labels(data, &fusion, pi, n)?;
        let cols = hecke_labels(data, &fusion, n, pi.epsilon());
        let reps = cols
            .iter()
            .map(|c| x_rho(&fusion, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Setup {
            data,
            fusion,
            theta: ThetaCharacter::new(xi, pi, n),
            shapes,
            rows,
            cols,
            reps,
        })
    }

    pub fn n(&self) -> usize {
        self.theta.n
    }

    pub fn pi(&self) -> Pi {
        self.theta.pi
    }

    pub fn xi(&self) -> usize {
        self.theta.xi
    }

    pub fn hg_order(&self) -> BigInt {
        BigInt::from(crate::wreath::hg_order(self.data.order(), self.n()))
    }

    /// Index of the column carrying (1ⁿ) on the identity class.
    pub fn identity_column(&self) -> Option<usize> {
        let id = self.fusion.merged_of_column(self.data.identity_column());
        self.cols
            .iter()
            .position(|c| c.get(id).len() == self.n() && c.get(id).size() == self.n())
    }
}

/// Which engine produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Brute,
    Closed,
    Symfunc,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Brute => "brute",
            Engine::Closed => "closed",
            Engine::Symfunc => "symfunc",
        })
    }
}

/// Ω_{λ̲}(x(ρ̲)) for λ̲ ∈ P^{**}_{ξ,π}(n), ρ̲ ∈ P^{ξ,±}_{**}(n).
#[derive(Clone, Debug, PartialEq)]
pub struct SphericalTable {
    pub group: String,
    pub xi: String,
    pub pi: Pi,
    pub n: usize,
    pub row_names: Vec<String>,
    pub col_names: Vec<String>,
    pub rows: Vec<MultiPartition>,
    pub cols: Vec<MultiPartition>,
    pub values: Vec<Vec<CycNum>>,
    pub engines: Vec<Vec<Engine>>,
}

impl SphericalTable {
    fn assemble(setup: &Setup, values: Vec<Vec<CycNum>>, engines: Vec<Vec<Engine>>) -> Self {
        let char_names = setup.data.char_names();
        let merged = setup.fusion.merged_names();
        SphericalTable {
            group: setup.data.name().to_string(),
            xi: char_names[setup.xi()].clone(),
            pi: setup.pi(),
            n: setup.n(),
            row_names: setup
                .rows
                .iter()
                .map(|r| r.label.display_with(char_names))
                .collect(),
            col_names: setup.cols.iter().map(|c| c.display_with(&merged)).collect(),
            rows: setup.rows.iter().map(|r| r.label.clone()).collect(),
            cols: setup.cols.clone(),
            values,
            engines,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
        out.push_str("label");
        for c in &self.col_names {
            out.push(',');
            out.push_str(&quote(c));
        }
        out.push('\n');
        for (name, row) in self.row_names.iter().zip(&self.values) {
            out.push_str(&quote(name));
            for v in row {
                out.push(',');
                out.push_str(&quote(&v.to_string()));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .values
            .iter()
            .zip(&self.engines)
            .map(|(row, eng)| {
                Value::Array(
                    row.iter()
                        .zip(eng)
                        .map(|(v, e)| json!({"value": v.to_string(), "engine": e}))
                        .collect(),
                )
            })
            .collect();
        json!({
            "version": 1,
            "group": self.group,
            "xi": self.xi,
            "pi": self.pi.name(),
            "n": self.n,
            "rows": self.row_names,
            "columns": self.col_names,
            "values": cells,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse("malformed spherical table".into());
        let strs = |v: &Value| -> Result<Vec<String>> {
            v.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|s| s.as_str().map(str::to_string).ok_or_else(bad))
                .collect()
        };
        let mut values = Vec::new();
        let mut engines = Vec::new();
        for row in value["values"].as_array().ok_or_else(bad)? {
            let mut vr = Vec::new();
            let mut er = Vec::new();
            for cell in row.as_array().ok_or_else(bad)? {
                vr.push(cell["value"].as_str().ok_or_else(bad)?.parse::<CycNum>()?);
                er.push(match cell["engine"].as_str() {
                    Some("brute") => Engine::Brute,
                    Some("closed") => Engine::Closed,
                    Some("symfunc") => Engine::Symfunc,
                    _ => return Err(bad()),
                });
            }
            values.push(vr);
            engines.push(er);
        }
        Ok(SphericalTable {
            group: value["group"].as_str().ok_or_else(bad)?.to_string(),
            xi: value["xi"].as_str().ok_or_else(bad)?.to_string(),
            pi: value["pi"].as_str().ok_or_else(bad)?.parse()?,
            n: value["n"].as_u64().ok_or_else(bad)? as usize,
            row_names: strs(&value["rows"])?,
            col_names: strs(&value["columns"])?,
            rows: Vec::new(),
            cols: Vec::new(),
            values,
            engines,
        })
    }
}

/// Brute evaluation engine: HG_n with Θ, plus the characters of SG_{2n}.
pub struct Brute<'a> {
    pub ctx: HgContext<'a>,
    pub chars: WreathCharacters<'a>,
}

impl<'a> Brute<'a> {
    pub fn new(data: &'a GroupData, theta: ThetaCharacter, caps: &Caps) -> Result<Self> {
        Ok(Brute {
            ctx: HgContext::new(data, theta, caps)?,
            chars: WreathCharacters::new(data),
        })
    }

    /// Ω_{λ̲}(x) for each label, sharing one pass over HG_n.
    pub fn values(
        &self,
        labels: &[MultiPartition],
        x: &WreathElement,
        caps: &Caps,
    ) -> Result<Vec<CycNum>> {
        let sums = self.ctx.class_sums(x);
        caps.check_class_work(
            "label x class evaluations",
            (labels.len() * sums.len()) as u128,
        )?;
        let inv =
            CycNum::from_rational(Rational::new(BigInt::one(), BigInt::from(self.ctx.order())));
        labels
            .iter()
            .map(|l| {
                let mut s = CycNum::zero();
                for (t, c) in &sums {
                    let v = self.chars.value(l, t)?;
                    if !v.is_zero() {
                        s += &(v * c);
                    }
                }
                Ok(s * &inv)
            })
            .collect()
    }

    pub fn value(&self, label: &MultiPartition, x: &WreathElement) -> Result<CycNum> {
        Ok(self
            .values(std::slice::from_ref(label), x, &Caps::default())?
            .remove(0))
    }
}

/// The spherical table by brute convolution. Every row is checked to satisfy
/// Ω(1) = 1 first.
pub fn brute_table(setup: &Setup, caps: &Caps) -> Result<SphericalTable> {
    let brute = Brute::new(setup.data, setup.theta, caps)?;
    let labels: Vec<MultiPartition> = setup.rows.iter().map(|r| r.label.clone()).collect();
    let at_one = brute.values(&labels, &WreathElement::identity(2 * setup.n()), caps)?;
    if let Some((l, v)) = labels
        .iter()
        .zip(&at_one)
        .find(|(_, v)| **v != CycNum::one())
    {
        return Err(Error::NotInSupport(format!(
            "{l}: value {v} at the identity; the label does not occur in the induced representation"
        )));
    }
    let cols: Vec<Vec<CycNum>> = setup
        .reps
        .par_iter()
        .map(|x| brute.values(&labels, x, caps))
        .collect::<Result<Vec<_>>>()?;
    let values = (0..labels.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let engines = vec![vec![Engine::Brute; setup.cols.len()]; labels.len()];
    Ok(SphericalTable::assemble(setup, values, engines))
}

/// The table from closed forms where they apply, brute values elsewhere.
pub fn closed_table(setup: &Setup, caps: &Caps) -> Result<SphericalTable> {
    let mut values = Vec::new();
    let mut engines = Vec::new();
    let mut brute: Option<SphericalTable> = None;
    for (i, row) in setup.rows.iter().enumerate() {
        let mut vr = Vec::new();
        let mut er = Vec::new();
        for (j, col) in setup.cols.iter().enumerate() {
            match closed_value(setup, row, col)? {
                Some(v) => {
                    vr.push(v);
                    er.push(Engine::Closed);
                }
                None => {
                    if brute.is_none() {
                        brute = Some(brute_table(setup, caps)?);
                    }
                    vr.push(brute.as_ref().unwrap().values[i][j].clone());
                    er.push(Engine::Brute);
                }
            }
        }
        values.push(vr);
        engines.push(er);
    }
    Ok(SphericalTable::assemble(setup, values, engines))
}

/// The table by coefficient extraction from the symmetric-function side.
pub fn symfunc_table(setup: &Setup, readings: &Readings) -> Result<SphericalTable> {
    let mut values = Vec::new();
    for row in &setup.rows {
        let rhs = predicted_ch(setup, row, readings)?;
        values.push(
            setup
                .cols
                .iter()
                .map(|c| symfunc_value(setup, &rhs, c))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let engines = vec![vec![Engine::Symfunc; setup.cols.len()]; setup.rows.len()];
    Ok(SphericalTable::assemble(setup, values, engines))
}

#[cfg(test)]
mod tests;
