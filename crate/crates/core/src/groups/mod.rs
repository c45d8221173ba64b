//! Finite groups given by a multiplication table or by permutation
//! generators, together with validated character tables.

mod fusion;
mod table;

use std::collections::{HashMap, VecDeque};
use std::path::Path;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::Perm;

pub use fusion::{ClassFusion, FusionStats, MergedClass};
pub use table::{validate_table, CharacterTable, GroupData, Violation};

/// Default cap on the number of elements produced by generator closure.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// Tables up to this order get a full associativity scan.
const FULL_SCAN_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Table,
    PermGens(Vec<Perm>),
}

/// A finite group on the index set 0..|G|, with 0 the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    source: GroupSource,
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table and checks the
    /// group axioms.
    pub fn from_table(name: &str, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::InvalidGroup(format!(
                        "entry {x} in row {i} out of range"
                    )));
                }
                flat.push(x as u32);
            }
        }
        let g = Self::finish(name, n, flat, GroupSource::Table)?;
        g.check_axioms()?;
        Ok(g)
    }

    /// Closes the given permutations (all of one degree) under composition.
    pub fn from_perm_gens(name: &str, gens: Vec<Perm>, cap: usize) -> Result<Self> {
        let degree = gens.first().map_or(0, Perm::degree);
        if gens.iter().any(|p| p.degree() != degree) {
            return Err(Error::InvalidGroup(
                "generators of different degrees".into(),
            ));
        }
        let mut elements = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = elements[i].compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "group closure",
                            value: elements.len() as u64 + 1,
                            cap: cap as u64,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        let n = elements.len();
        let mut flat = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                flat.push(index[&a.compose(b)] as u32);
            }
        }
        Self::finish(name, n, flat, GroupSource::PermGens(gens))
    }

    fn finish(name: &str, n: usize, mul: Vec<u32>, source: GroupSource) -> Result<Self> {
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b;
                    break;
                }
            }
        }
        if let Some(a) = inv.iter().position(|&x| x == usize::MAX) {
            return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
        }
        let mut g = FiniteGroup {
            name: name.to_string(),
            order: n,
            mul,
            inv,
            classes: Vec::new(),
            class_of: vec![usize::MAX; n],
            source,
        };
        for a in 0..n {
            if g.class_of[a] != usize::MAX {
                continue;
            }
            let id = g.classes.len();
            let mut cls: Vec<usize> = (0..n).map(|x| g.conjugate(a, x)).collect();
            cls.sort_unstable();
            cls.dedup();
            for &c in &cls {
                g.class_of[c] = id;
            }
            g.classes.push(cls);
        }
        Ok(g)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidGroup("element 0 is not the identity".into()));
            }
            if self.mul(self.inv[a], a) != 0 {
                return Err(Error::InvalidGroup(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
        }
        for a in 0..n {
            let mut row = vec![false; n];
            for b in 0..n {
                row[self.mul(a, b)] = true;
            }
            if row.iter().any(|x| !x) {
                return Err(Error::InvalidGroup(format!("row {a} is not a permutation")));
            }
        }
        let testers: Vec<usize> = if n <= FULL_SCAN_LIMIT {
            (0..n).collect()
        } else {
            self.generating_set()
        };
        // Light's test: associativity for a generating set implies it everywhere.
        for &g in &testers {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({x}, {g}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn generating_set(&self) -> Vec<usize> {
        let n = self.order;
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut gens = Vec::new();
        for g in 1..n {
            if inside[g] {
                continue;
            }
            gens.push(g);
            let mut queue: VecDeque<usize> = members.iter().copied().collect();
            while let Some(x) = queue.pop_front() {
                for &h in &gens {
                    let y = self.mul(x, h);
                    if !inside[y] {
                        inside[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        gens
    }

    /// Parses `{"name", "order", "mul"}` or `{"name", "perm_gens"}` with
    /// 1-indexed one-line permutations.
    pub fn from_json(value: &Value, cap: usize) -> Result<Self> {
        let name = value.get("name").and_then(Value::as_str).unwrap_or("G");
        if let Some(mul) = value.get("mul") {
            let mul: Vec<Vec<usize>> = serde_json::from_value(mul.clone())?;
            if let Some(order) = value.get("order").and_then(Value::as_u64) {
                if order as usize != mul.len() {
                    return Err(Error::InvalidGroup(format!(
                        "order {order} but table has {} rows",
                        mul.len()
                    )));
                }
            }
            if mul.len() > cap {
                return Err(Error::CapExceeded {
                    what: "group order",
                    value: mul.len() as u64,
                    cap: cap as u64,
                });
            }
            return Self::from_table(name, mul);
        }
        if let Some(gens) = value.get("perm_gens") {
            let gens: Vec<Vec<usize>> = serde_json::from_value(gens.clone())?;
            let perms = gens
                .into_iter()
                .map(|g| {
                    if g.contains(&0) {
                        return Err(Error::InvalidGroup("permutations are 1-indexed".into()));
                    }
                    Perm::from_images(g.into_iter().map(|x| x - 1).collect())
                })
                .collect::<Result<Vec<_>>>()?;
            return Self::from_perm_gens(name, perms, cap);
        }
        Err(Error::InvalidGroup(
            "expected a \"mul\" table or \"perm_gens\"".into(),
        ))
    }

    pub fn load(path: &Path, cap: usize) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&serde_json::from_str(&text)?, cap)
    }

    /// The table form of the group.
    pub fn to_json(&self) -> Value {
        let n = self.order;
        let rows: Vec<Vec<u32>> = (0..n)
            .map(|a| self.mul[a * n..(a + 1) * n].to_vec())
            .collect();
        json!({"version": 1, "name": self.name, "order": n, "mul": rows})
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn source(&self) -> &GroupSource {
        &self.source
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// x a x⁻¹.
    pub fn conjugate(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(x, a), self.inv[x])
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Conjugacy classes ordered by their minimal element.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order
    }
}
