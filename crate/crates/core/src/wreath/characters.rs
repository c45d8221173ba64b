//! Irreducible characters of SG_n, labelled by multipartitions over the
//! rows of the character table of G.
//!
//! S^{λ̲} is induced from Π_χ SG_{|λ(χ)|} acting on ⊗_χ (V_χ^{⊗|λ(χ)|} ⊗ S^{λ(χ)}).
//! On an element of class type τ the inner factor takes the value
//! χ^{λ}_{τ̂} Π_c χ(c)^{ℓ(τ(c))}; induction sums over the ways of splitting
//! the cycles of τ among the factors, each counted with the multinomial
//! ratio of centralisers.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::partitions::{enumerate_multi, factorial, MultiPartition, Partition};
use crate::symfunc::sym_character;
use crate::{CycNum, Rational};

/// Class types of SG_n: multipartitions of n over the table columns.
pub fn class_types(data: &GroupData, n: usize) -> Vec<MultiPartition> {
    enumerate_multi(data.num_classes(), n)
}

/// Z_τ = Π_c z_{τ(c)} ζ_c^{ℓ(τ(c))}, the centraliser order of class type τ.
pub fn type_centralizer(data: &GroupData, tau: &MultiPartition) -> BigInt {
    let mut z = BigInt::one();
    for (c, p) in tau.components().iter().enumerate() {
        z *= BigInt::from(p.z()) * BigInt::from(data.zeta(c)).pow(p.len() as u32);
    }
    z
}

type Key = (MultiPartition, MultiPartition);

/// Memoised character values of SG_n for one group.
pub struct WreathCharacters<'a> {
    data: &'a GroupData,
    cache: Mutex<HashMap<Key, CycNum>>,
}

impl<'a> WreathCharacters<'a> {
    pub fn new(data: &'a GroupData) -> Self {
        WreathCharacters {
            data,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn data(&self) -> &GroupData {
        self.data
    }

    /// Irreducible labels of SG_n.
    pub fn labels(&self, n: usize) -> Vec<MultiPartition> {
        enumerate_multi(self.data.num_classes(), n)
    }

    /// dim S^{λ̲} = n!/Π|λ(χ)|! · Π_χ (dim V_χ)^{|λ(χ)|} f^{λ(χ)}.
    pub fn dimension(&self, lambda: &MultiPartition) -> BigInt {
        let mut d = BigInt::from(factorial(lambda.weight()));
        for (chi, p) in lambda.components().iter().enumerate() {
            d *= BigInt::from(p.dim()) * BigInt::from(self.data.degree(chi)).pow(p.size() as u32);
            d /= BigInt::from(factorial(p.size()));
        }
        d
    }

    /// χ^{λ̲} at class type τ.
    pub fn value(&self, lambda: &MultiPartition, tau: &MultiPartition) -> Result<CycNum> {
        if lambda.labels() != self.data.num_classes() || tau.labels() != self.data.num_classes() {
            return Err(Error::AlphabetMismatch(format!(
                "label {lambda} or class type {tau} does not match {} classes",
                self.data.num_classes()
            )));
        }
        if lambda.weight() != tau.weight() {
            return Err(Error::WeightMismatch {
                expected: lambda.weight(),
                got: tau.weight(),
            });
        }
        let key = (lambda.clone(), tau.clone());
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = self.induced(lambda, tau)?;
        self.cache.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    // Value of V_χ^{⊗m} ⊗ S^μ on SG_m at class type τ.
    fn factor(&self, chi: usize, mu: &Partition, tau: &MultiPartition) -> Result<CycNum> {
        let s = sym_character(mu, &tau.hat())?;
        if s == 0 {
            return Ok(CycNum::zero());
        }
        let mut v = CycNum::from_int(s);
        for (c, p) in tau.components().iter().enumerate() {
            if !p.is_empty() {
                v = v * self.data.value(chi, c).pow(p.len() as u32);
            }
        }
        Ok(v)
    }

    fn induced(&self, lambda: &MultiPartition, tau: &MultiPartition) -> Result<CycNum> {
        let active: Vec<(usize, &Partition)> = lambda
            .components()
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_empty())
            .collect();
        if active.is_empty() {
            return Ok(CycNum::one());
        }
        if active.len() == 1 {
            return self.factor(active[0].0, active[0].1, tau);
        }
        // (column, part length, multiplicity) of τ.
        let mut entries = Vec::new();
        for (c, p) in tau.components().iter().enumerate() {
            for (r, m) in p.multiplicities() {
                entries.push((c, r, m));
            }
        }
        let k = self.data.num_classes();
        let mut split: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); k]; active.len()];
        let mut room: Vec<usize> = active.iter().map(|(_, p)| p.size()).collect();
        let mut total = CycNum::zero();
        self.distribute(
            &entries,
            0,
            &active,
            &mut split,
            &mut room,
            Rational::one(),
            &mut total,
        )?;
        Ok(total)
    }

    #[allow(clippy::too_many_arguments)]
    fn distribute(
        &self,
        entries: &[(usize, usize, usize)],
        at: usize,
        active: &[(usize, &Partition)],
        split: &mut Vec<Vec<Vec<usize>>>,
        room: &mut Vec<usize>,
        weight: Rational,
        total: &mut CycNum,
    ) -> Result<()> {
        if at == entries.len() {
            if room.iter().any(|&r| r != 0) {
                return Ok(());
            }
            let mut v = CycNum::from_rational(weight);
            for (j, (chi, mu)) in active.iter().enumerate() {
                let t = MultiPartition::new(
                    split[j]
                        .iter()
                        .map(|p| Partition::from_unsorted(p.clone()))
                        .collect(),
                );
                let f = self.factor(*chi, mu, &t)?;
                if f.is_zero() {
                    return Ok(());
                }
                v = v * f;
            }
            *total += &v;
            return Ok(());
        }
        let (c, r, m) = entries[at];
        for comp in crate::partitions::compositions(m, active.len()) {
            if comp.iter().zip(room.iter()).any(|(&a, &left)| a * r > left) {
                continue;
            }
            let mut w = weight.clone() * Rational::from_integer(BigInt::from(factorial(m)));
            for (j, &a) in comp.iter().enumerate() {
                w /= Rational::from_integer(BigInt::from(factorial(a)));
                room[j] -= a * r;
                split[j][c].extend(std::iter::repeat_n(r, a));
            }
            self.distribute(entries, at + 1, active, split, room, w, total)?;
            for (j, &a) in comp.iter().enumerate() {
                room[j] += a * r;
                let len = split[j][c].len();
                split[j][c].truncate(len - a);
            }
        }
        Ok(())
    }

    /// The full table of SG_n: rows are labels, columns class types.
    pub fn table(
        &self,
        n: usize,
    ) -> Result<(Vec<MultiPartition>, Vec<MultiPartition>, Vec<Vec<CycNum>>)> {
        let labels = self.labels(n);
        let types = class_types(self.data, n);
        let mut rows = Vec::with_capacity(labels.len());
        for l in &labels {
            rows.push(
                types
                    .iter()
                    .map(|t| self.value(l, t))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok((labels, types, rows))
    }
}
