//! The ring Λ[A] of symmetric functions in several alphabets, stored in the
//! power-sum basis only.
//!
//! A basis element p_ρ̲ is indexed by a [`MultiPartition`] over an ordered
//! list of label names; p_ρ̲ = Π_a Π_i p_{ρ_i(a)}(a).

mod characters;
mod jack;
mod schur;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::partitions::{MultiPartition, Partition};
use crate::scalar::{pow, Scalar};

pub use characters::{character_table, sym_character};
pub use jack::{alpha_inner, jack_m, jack_p, m_to_p, p_to_m_matrix};
pub use schur::{q_function, schur_p, schur_q};

#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc<K: Scalar> {
    alphabet: Vec<String>,
    terms: BTreeMap<MultiPartition, K>,
}

impl<K: Scalar> SymFunc<K> {
    pub fn zero(alphabet: Vec<String>) -> Self {
        SymFunc {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: Vec<String>) -> Self {
        let k = alphabet.len();
        let mut f = Self::zero(alphabet);
        f.terms.insert(MultiPartition::empty(k), K::one());
        f
    }

    /// c · p_ρ̲.
    pub fn monomial(alphabet: Vec<String>, rho: MultiPartition, c: K) -> Result<Self> {
        if rho.labels() != alphabet.len() {
            return Err(Error::AlphabetMismatch(format!(
                "{} labels for an alphabet of size {}",
                rho.labels(),
                alphabet.len()
            )));
        }
        let mut f = Self::zero(alphabet);
        f.add_term(rho, c);
        Ok(f)
    }

    /// c · p_ρ in the one-letter alphabet {x}.
    pub fn single(rho: Partition, c: K) -> Self {
        let mut f = Self::zero(vec!["x".to_string()]);
        f.add_term(MultiPartition::new(vec![rho]), c);
        f
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiPartition, &K)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, rho: &MultiPartition) -> K {
        self.terms.get(rho).cloned().unwrap_or_else(K::zero)
    }

    /// Coefficient of p_ρ in a one-letter function.
    pub fn coeff1(&self, rho: &Partition) -> K {
        self.coeff(&MultiPartition::new(vec![rho.clone()]))
    }

    /// Adds c·p_ρ̲ in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, rho: MultiPartition, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(rho) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_alphabet(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(format!(
                "{:?} vs {:?}",
                self.alphabet, other.alphabet
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-K::one()))
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Self::zero(self.alphabet.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    /// p_ρ̲ · p_σ̲ = p_{ρ̲ ∪ σ̲}, extended bilinearly.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_alphabet(other)?;
        let mut out = Self::zero(self.alphabet.clone());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.union(b)?, x.clone() * y.clone());
            }
        }
        Ok(out)
    }

    /// Degrees of the terms; `Some(d)` when homogeneous of degree d.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(MultiPartition::weight);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn map_coeffs<L: Scalar>(&self, f: impl Fn(&K) -> L) -> SymFunc<L> {
        let mut out = SymFunc::zero(self.alphabet.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    /// The ring map p_r ↦ c·p_r applied in every alphabet.
    pub fn psi_twist(&self, c: &K) -> Self {
        let mut out = Self::zero(self.alphabet.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * pow(c, k.total_len() as u32));
        }
        out
    }

    /// The ring homomorphism p_r(a) ↦ Σ_b coeff(a, b, r) p_r(b) into the
    /// alphabet `target`.
    pub fn change_alphabet(
        &self,
        target: Vec<String>,
        coeff: impl Fn(usize, usize, usize) -> K,
    ) -> Self {
        let nb = target.len();
        let mut images: HashMap<(usize, usize), Vec<(usize, K)>> = HashMap::new();
        let mut out = Self::zero(target.clone());
        for (rho, c) in &self.terms {
            // Expand Π p_r(a) one factor at a time.
            let mut partial: BTreeMap<MultiPartition, K> = BTreeMap::new();
            partial.insert(MultiPartition::empty(nb), c.clone());
            for (a, part) in rho.components().iter().enumerate() {
                for &r in part.parts() {
                    let img = images.entry((a, r)).or_insert_with(|| {
                        (0..nb)
                            .map(|b| (b, coeff(a, b, r)))
                            .filter(|(_, x)| !x.is_zero())
                            .collect()
                    });
                    let mut next: BTreeMap<MultiPartition, K> = BTreeMap::new();
                    for (key, val) in &partial {
                        for (b, x) in img.iter() {
                            let single =
                                MultiPartition::single(nb, *b, Partition::new(vec![r]).unwrap());
                            let nk = key.union(&single).expect("same label count");
                            let nv = val.clone() * x.clone();
                            let e = next.entry(nk).or_insert_with(K::zero);
                            *e = e.clone() + nv;
                        }
                    }
                    partial = next;
                }
            }
            for (k, v) in partial {
                out.add_term(k, v);
            }
        }
        out
    }

    /// JSON form: a list of {"labels": {name: partition}, "coeff": text}.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, v)| json!({"labels": k.to_json(&self.alphabet), "coeff": v.to_string()}))
            .collect();
        serde_json::Value::Array(items)
    }
}

impl<K: Scalar> fmt::Display for SymFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let items: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| format!("({v})*p[{}]", k.display_with(&self.alphabet)))
            .collect();
        write!(f, "{}", items.join(" + "))
    }
}
