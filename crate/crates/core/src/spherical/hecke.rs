//! Elements of the Hecke algebra e CSG_{2n} e, both as sparse group-algebra
//! elements and as functions on double-coset labels.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Setup;
use crate::error::Result;
use crate::groups::FiniteGroup;
use crate::partitions::MultiPartition;
use crate::wreath::{x_rho, HgContext, WreathElement};
use crate::{CycNum, Rational};

/// Σ_g f(g) g with finitely many nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GroupAlgebra {
    pub terms: HashMap<WreathElement, CycNum>,
}

impl GroupAlgebra {
    pub fn single(x: WreathElement) -> Self {
        let mut terms = HashMap::new();
        terms.insert(x, CycNum::one());
        GroupAlgebra { terms }
    }

    pub fn coeff(&self, x: &WreathElement) -> CycNum {
        self.terms.get(x).cloned().unwrap_or_else(CycNum::zero)
    }

    fn add(&mut self, x: WreathElement, c: CycNum) {
        let e = self.terms.entry(x).or_insert_with(CycNum::zero);
        *e += &c;
    }

    pub fn mul(&self, other: &Self, g: &FiniteGroup) -> Self {
        let mut out = GroupAlgebra::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add(a.mul(b, g), x * y);
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    /// f × g under the block embedding.
    pub fn cross(&self, other: &Self) -> Self {
        let mut out = GroupAlgebra::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add(a.direct_sum(b), x * y);
            }
        }
        out
    }

    /// e f e with e = |HG_n|⁻¹ Σ_h conj Θ(h) h.
    pub fn sandwich(&self, ctx: &HgContext) -> Self {
        let g = ctx.data.group();
        let mut left = GroupAlgebra::default();
        for (h, c) in ctx.elements.iter().zip(&ctx.conj_theta) {
            for (x, v) in &self.terms {
                left.add(h.mul(x, g), c * v);
            }
        }
        let mut out = GroupAlgebra::default();
        for (y, v) in &left.terms {
            if v.is_zero() {
                continue;
            }
            for (h, c) in ctx.elements.iter().zip(&ctx.conj_theta) {
                out.add(y.mul(h, g), v * c);
            }
        }
        let ord = BigInt::from(ctx.order());
        let scale = CycNum::from_rational(Rational::new(BigInt::one(), &ord * &ord));
        out.terms = out
            .terms
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, v * &scale))
            .collect();
        out
    }

    /// The basis element e x(ρ̲) e.
    pub fn basis(setup: &Setup, ctx: &HgContext, rho: &MultiPartition) -> Result<Self> {
        Ok(GroupAlgebra::single(x_rho(&setup.fusion, rho)?).sandwich(ctx))
    }

    /// Values at the representatives x(ρ̲) of every double coset of weight n.
    pub fn to_hecke(&self, setup: &Setup) -> Result<HeckeElem> {
        let mut values = BTreeMap::new();
        for rho in crate::partitions::enumerate_multi(setup.fusion.g_starstar.len(), setup.n()) {
            let v = self.coeff(&x_rho(&setup.fusion, &rho)?);
            if !v.is_zero() {
                values.insert(rho, v);
            }
        }
        Ok(HeckeElem {
            n: setup.n(),
            values,
        })
    }
}

/// A Θ-bi-equivariant function recorded by its values at the x(ρ̲).
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElem {
    pub n: usize,
    pub values: BTreeMap<MultiPartition, CycNum>,
}

impl HeckeElem {
    pub fn from_row(setup: &Setup, row: &[CycNum]) -> Self {
        HeckeElem {
            n: setup.n(),
            values: setup
                .cols
                .iter()
                .cloned()
                .zip(row.iter().cloned())
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }
}
