//! Character tables, their validation, linear characters and twisted
//! Frobenius–Schur indicators.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

use num_traits::{One, Zero};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::{ClassFusion, FiniteGroup};
use crate::error::{Error, Result};
use crate::CycNum;

/// Rows of irreducible characters, one value per listed class.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: String,
    class_reps: Vec<usize>,
    chars: Vec<Vec<CycNum>>,
    char_names: Vec<String>,
    class_names: Vec<String>,
}

impl CharacterTable {
    pub fn new(group: &str, class_reps: Vec<usize>, chars: Vec<Vec<CycNum>>) -> Self {
        let char_names = (1..=chars.len()).map(|i| format!("chi{i}")).collect();
        let class_names = (1..=class_reps.len()).map(|i| format!("C{i}")).collect();
        CharacterTable {
            group: group.to_string(),
            class_reps,
            chars,
            char_names,
            class_names,
        }
    }

    /// Parses `{"group", "classes": [reps], "chars": [[text, ...], ...]}`.
    pub fn from_json(value: &Value) -> Result<Self> {
        let group = value.get("group").and_then(Value::as_str).unwrap_or("G");
        let reps: Vec<usize> = serde_json::from_value(
            value
                .get("classes")
                .cloned()
                .ok_or_else(|| Error::InvalidTable("missing \"classes\"".into()))?,
        )?;
        let chars: Vec<Vec<CycNum>> = serde_json::from_value(
            value
                .get("chars")
                .cloned()
                .ok_or_else(|| Error::InvalidTable("missing \"chars\"".into()))?,
        )?;
        let mut t = CharacterTable::new(group, reps, chars);
        if let Some(names) = value.get("char_names") {
            t.char_names = serde_json::from_value(names.clone())?;
        }
        if let Some(names) = value.get("class_names") {
            t.class_names = serde_json::from_value(names.clone())?;
        }
        Ok(t)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "version": 1,
            "group": self.group,
            "classes": self.class_reps,
            "chars": self.chars,
        })
    }

    pub fn rows(&self) -> &[Vec<CycNum>] {
        &self.chars
    }

    pub fn set_value(&mut self, row: usize, col: usize, v: CycNum) {
        self.chars[row][col] = v;
    }
}

/// A failed relation found by [`validate_table`].
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    RowOrthogonality { i: usize, j: usize, value: CycNum },
    ColumnOrthogonality { i: usize, j: usize, value: CycNum },
    DegreeSum { value: CycNum, order: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowOrthogonality { i, j, value } => {
                write!(
                    f,
                    "row orthogonality fails for chi{} and chi{}: inner product {value}",
                    i + 1,
                    j + 1
                )
            }
            Violation::ColumnOrthogonality { i, j, value } => {
                write!(
                    f,
                    "column orthogonality fails for C{} and C{}: sum {value}",
                    i + 1,
                    j + 1
                )
            }
            Violation::DegreeSum { value, order } => {
                write!(f, "sum of squared degrees is {value}, expected {order}")
            }
        }
    }
}

/// A group with a character table whose columns are matched to its classes.
///
/// Columns follow the order of the table file; all class-indexed data in
/// the crate uses this column order.
#[derive(Clone, Debug)]
pub struct GroupData {
    group: FiniteGroup,
    table: CharacterTable,
    column_of_element: Vec<usize>,
    class_elements: Vec<Vec<usize>>,
    digest: String,
}

impl GroupData {
    /// Matches table columns to classes without checking orthogonality.
    pub fn assemble(group: FiniteGroup, table: CharacterTable) -> Result<Self> {
        let k = group.classes().len();
        if table.class_reps.len() != k {
            return Err(Error::InvalidTable(format!(
                "{} columns but the group has {k} classes",
                table.class_reps.len()
            )));
        }
        if table.chars.len() != k {
            return Err(Error::InvalidTable(format!(
                "{} rows but the group has {k} classes",
                table.chars.len()
            )));
        }
        if let Some(i) = table.chars.iter().position(|r| r.len() != k) {
            return Err(Error::InvalidTable(format!(
                "row {} has {} entries",
                i + 1,
                table.chars[i].len()
            )));
        }
        if table.char_names.len() != k || table.class_names.len() != k {
            return Err(Error::InvalidTable(
                "name lists do not match the table size".into(),
            ));
        }
        let mut column_of_class = vec![usize::MAX; k];
        for (col, &rep) in table.class_reps.iter().enumerate() {
            if rep >= group.order() {
                return Err(Error::InvalidTable(format!(
                    "class representative {rep} out of range"
                )));
            }
            let c = group.class_of(rep);
            if column_of_class[c] != usize::MAX {
                return Err(Error::InvalidTable(format!(
                    "representative {rep} repeats a class"
                )));
            }
            column_of_class[c] = col;
        }
        let column_of_element: Vec<usize> = (0..group.order())
            .map(|a| column_of_class[group.class_of(a)])
            .collect();
        let mut class_elements = vec![Vec::new(); k];
        for (a, &c) in column_of_element.iter().enumerate() {
            class_elements[c].push(a);
        }
        let mut hasher = Sha256::new();
        hasher.update(group.to_json().to_string().as_bytes());
        hasher.update(b"\n");
        hasher.update(table.to_json().to_string().as_bytes());
        let digest = format!("{:x}", hasher.finalize());
        Ok(GroupData {
            group,
            table,
            column_of_element,
            class_elements,
            digest,
        })
    }

    /// [`assemble`](Self::assemble) followed by full validation.
    pub fn new(group: FiniteGroup, table: CharacterTable) -> Result<Self> {
        let data = Self::assemble(group, table)?;
        let report = validate_table(&data);
        if !report.is_empty() {
            let text: Vec<String> = report.iter().map(ToString::to_string).collect();
            return Err(Error::InvalidTable(text.join("; ")));
        }
        Ok(data)
    }

    pub fn from_json(group: &Value, table: &Value, cap: usize) -> Result<Self> {
        Self::new(
            FiniteGroup::from_json(group, cap)?,
            CharacterTable::from_json(table)?,
        )
    }

    pub fn load(group: &Path, table: &Path, cap: usize) -> Result<Self> {
        let g = FiniteGroup::load(group, cap)?;
        let t =
            CharacterTable::from_json(&serde_json::from_str(&std::fs::read_to_string(table)?)?)?;
        Self::new(g, t)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    /// SHA-256 of the canonical group and table JSON.
    pub fn digest(&self) -> &str {
        &self.digest
    }

    pub fn name(&self) -> &str {
        self.group.name()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn num_classes(&self) -> usize {
        self.class_elements.len()
    }

    pub fn column(&self, element: usize) -> usize {
        self.column_of_element[element]
    }

    pub fn class_elements(&self, col: usize) -> &[usize] {
        &self.class_elements[col]
    }

    /// The minimal element of the class.
    pub fn class_rep(&self, col: usize) -> usize {
        self.class_elements[col][0]
    }

    pub fn class_size(&self, col: usize) -> usize {
        self.class_elements[col].len()
    }

    /// ζ_C = |G| / |C|, the order of the centraliser.
    pub fn zeta(&self, col: usize) -> usize {
        self.order() / self.class_size(col)
    }

    /// Column of C⁻¹.
    pub fn inverse_column(&self, col: usize) -> usize {
        self.column(self.group.inv(self.class_rep(col)))
    }

    pub fn identity_column(&self) -> usize {
        self.column(0)
    }

    pub fn value(&self, row: usize, col: usize) -> &CycNum {
        &self.table.chars[row][col]
    }

    /// χ(a) for an element a.
    pub fn chi(&self, row: usize, element: usize) -> &CycNum {
        self.value(row, self.column(element))
    }

    pub fn degree(&self, row: usize) -> i64 {
        self.value(row, self.identity_column())
            .try_integer()
            .expect("validated tables have integer degrees")
    }

    pub fn char_names(&self) -> &[String] {
        &self.table.char_names
    }

    pub fn class_names(&self) -> &[String] {
        &self.table.class_names
    }

    /// Accepts a character name ("chi2") or a 1-based row number.
    pub fn find_char(&self, name: &str) -> Result<usize> {
        if let Some(i) = self.table.char_names.iter().position(|n| n == name) {
            return Ok(i);
        }
        match name.parse::<usize>() {
            Ok(i) if (1..=self.num_classes()).contains(&i) => Ok(i - 1),
            _ => Err(Error::UnknownName(name.to_string())),
        }
    }

    /// Rows of degree one, each checked to be multiplicative.
    pub fn linear_characters(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for row in 0..self.num_classes() {
            if self.degree(row) != 1 {
                continue;
            }
            self.check_linear(row)?;
            out.push(row);
        }
        Ok(out)
    }

    /// Checks ξ(ab) = ξ(a)ξ(b) on class representatives.
    pub fn check_linear(&self, row: usize) -> Result<()> {
        let k = self.num_classes();
        for a in 0..k {
            for b in 0..k {
                let ra = self.class_rep(a);
                let rb = self.class_rep(b);
                let ab = self.group.mul(ra, rb);
                if self.chi(row, ab) != &(self.value(row, a) * self.value(row, b)) {
                    return Err(Error::NotLinear(self.char_names()[row].clone()));
                }
            }
        }
        Ok(())
    }

    /// The row equal to conj(χ)⊗ξ.
    pub fn conj_tensor(&self, chi: usize, xi: usize) -> usize {
        let target: Vec<CycNum> = (0..self.num_classes())
            .map(|c| self.value(chi, c).conjugate() * self.value(xi, c))
            .collect();
        self.table
            .chars
            .iter()
            .position(|r| *r == target)
            .expect("conj(χ)⊗ξ is irreducible")
    }

    /// ν₂^ξ(χ) = (1/|G|) Σ_x conj(ξ(x)) χ(x²).
    pub fn nu2(&self, xi: usize, chi: usize) -> Result<i64> {
        let mut counts: HashMap<(usize, usize), i64> = HashMap::new();
        for x in 0..self.order() {
            let sq = self.group.mul(x, x);
            *counts.entry((self.column(x), self.column(sq))).or_default() += 1;
        }
        let mut total = CycNum::zero();
        for ((cx, csq), m) in counts {
            total += &(self.value(xi, cx).conjugate() * self.value(chi, csq) * CycNum::from_int(m));
        }
        let total = total
            * CycNum::from_rational(crate::Rational::new(1.into(), (self.order() as i64).into()));
        let names = self.char_names();
        let value = total
            .try_integer()
            .filter(|v| (-1..=1).contains(v))
            .ok_or_else(|| Error::IndicatorOutOfRange {
                xi: names[xi].clone(),
                chi: names[chi].clone(),
                value: total.to_string(),
            })?;
        let paired = self.conj_tensor(chi, xi) == chi;
        if (value == 0) == paired {
            return Err(Error::InvalidTable(format!(
                "indicator of {} with ξ = {} is {value} but the pairing says otherwise",
                names[chi], names[xi]
            )));
        }
        Ok(value)
    }

    pub fn fusion(&self, eta: usize) -> Result<ClassFusion> {
        self.check_linear(eta)?;
        Ok(ClassFusion::new(self, eta))
    }

    pub fn trivial_char(&self) -> usize {
        (0..self.num_classes())
            .find(|&r| (0..self.num_classes()).all(|c| self.value(r, c).is_one()))
            .expect("validated tables contain the trivial character")
    }
}

/// Checks both orthogonality relations and Σ χ(1)² = |G|.
pub fn validate_table(data: &GroupData) -> Vec<Violation> {
    let k = data.num_classes();
    let order = data.order();
    let mut out = Vec::new();
    let inv_order = CycNum::from_rational(crate::Rational::new(1.into(), (order as i64).into()));
    for i in 0..k {
        for j in i..k {
            let mut s = CycNum::zero();
            for c in 0..k {
                s += &(data.value(i, c)
                    * &data.value(j, c).conjugate()
                    * CycNum::from_int(data.class_size(c) as i64));
            }
            let s = s * &inv_order;
            let expect = if i == j {
                CycNum::one()
            } else {
                CycNum::zero()
            };
            if s != expect {
                out.push(Violation::RowOrthogonality { i, j, value: s });
            }
        }
    }
    for a in 0..k {
        for b in a..k {
            let mut s = CycNum::zero();
            for r in 0..k {
                s += &(data.value(r, a) * &data.value(r, b).conjugate());
            }
            let expect = if a == b {
                CycNum::from_int(data.zeta(a) as i64)
            } else {
                CycNum::zero()
            };
            if s != expect {
                out.push(Violation::ColumnOrthogonality {
                    i: a,
                    j: b,
                    value: s,
                });
            }
        }
    }
    let id = data.identity_column();
    let mut s = CycNum::zero();
    let mut integral = true;
    for r in 0..k {
        let d = data.value(r, id);
        integral &= d.try_integer().is_some_and(|v| v > 0);
        s += &(d * d);
    }
    if !integral || s != CycNum::from_int(order as i64) {
        out.push(Violation::DegreeSum { value: s, order });
    }
    out
}
