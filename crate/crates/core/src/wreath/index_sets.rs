//! The two label sets of the twisted Gelfand pair: double cosets HG_n\SG_{2n}/HG_n
//! (multipartitions over G_{**}) and the irreducibles of SG_{2n} containing
//! Θ_{ξ,π} (multipartitions over the characters of G).

use serde::Serialize;

use super::Pi;
use crate::error::{Error, Result};
use crate::groups::{ClassFusion, GroupData};
use crate::partitions::{
    enumerate, enumerate_multi_with, even_partitions, odd_partitions, strict_partitions,
    MultiPartition, Partition,
};
use crate::CycNum;

/// Double-coset labels P^{ξ,±}_{**}(n) carrying nonzero Hecke functions.
///
/// With `sign = 1`: real R with ξ(g_R) = −1 must be empty, everything else is
/// free. With `sign = −1`: real R with ξ(g_R) = 1 carry odd partitions, real R
/// with ξ(g_R) = −1 carry even partitions, complex R are free.
pub fn hecke_labels(
    data: &GroupData,
    fusion: &ClassFusion,
    n: usize,
    sign: i64,
) -> Vec<MultiPartition> {
    let minus_one = CycNum::from_int(-1);
    let kinds: Vec<(bool, bool)> = fusion
        .g_starstar
        .iter()
        .map(|r| (r.real, *data.chi(fusion.eta, r.rep) == minus_one))
        .collect();
    enumerate_multi_with(kinds.len(), n, |a, w| {
        let (real, xi_neg) = kinds[a];
        match (real, xi_neg, sign > 0) {
            (false, _, _) => enumerate(w),
            (true, true, true) => {
                if w == 0 {
                    vec![Partition::empty()]
                } else {
                    Vec::new()
                }
            }
            (true, false, true) => enumerate(w),
            (true, false, false) => odd_partitions(w),
            (true, true, false) => even_partitions(w),
        }
    })
}

/// How an orbit of G_ξ^{**} carries its parameter μ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairShape {
    /// χ = conj(χ)⊗ξ carrying 2μ.
    Double,
    /// χ = conj(χ)⊗ξ carrying (2μ)′.
    DoubleT,
    /// χ = conj(χ)⊗ξ carrying D(μ), μ strict.
    Shifted,
    /// χ = conj(χ)⊗ξ carrying D(μ)′, μ strict.
    ShiftedT,
    /// χ ≠ conj(χ)⊗ξ: both carry μ.
    Pair,
    /// χ ≠ conj(χ)⊗ξ: χ carries μ, its partner μ′.
    PairT,
}

impl PairShape {
    /// The shape for an orbit with indicator ν under π.
    pub fn of(nu: i64, pi: Pi) -> PairShape {
        let base = match (nu, pi.has_iota()) {
            (0, false) => return PairShape::Pair,
            (0, true) => return PairShape::PairT,
            (_, false) => PairShape::Double,
            (_, true) => PairShape::Shifted,
        };
        let transposed = (nu == -1) != pi.has_delta();
        match (base, transposed) {
            (PairShape::Double, true) => PairShape::DoubleT,
            (PairShape::Shifted, true) => PairShape::ShiftedT,
            (b, _) => b,
        }
    }

    pub fn is_pair(self) -> bool {
        matches!(self, PairShape::Pair | PairShape::PairT)
    }

    /// Admissible parameters μ ⊢ m.
    pub fn params(self, m: usize) -> Vec<Partition> {
        match self {
            PairShape::Shifted | PairShape::ShiftedT => strict_partitions(m),
            _ => enumerate(m),
        }
    }

    /// The partitions placed on the orbit's representative and partner.
    pub fn shapes(self, mu: &Partition) -> Result<(Partition, Partition)> {
        Ok(match self {
            PairShape::Double => {
                let p = mu.scale(2);
                (p.clone(), p)
            }
            PairShape::DoubleT => {
                let p = mu.scale(2).transpose();
                (p.clone(), p)
            }
            PairShape::Shifted => {
                let p = mu.doubling()?;
                (p.clone(), p)
            }
            PairShape::ShiftedT => {
                let p = mu.doubling()?.transpose();
                (p.clone(), p)
            }
            PairShape::Pair => (mu.clone(), mu.clone()),
            PairShape::PairT => (mu.clone(), mu.transpose()),
        })
    }
}

/// One irreducible of SG_{2n} containing Θ_{ξ,π}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrrepLabelInfo {
    /// λ̲ over the rows of the character table.
    pub label: MultiPartition,
    /// μ for each orbit of G_ξ^{**}, in orbit order.
    pub params: Vec<Partition>,
}

/// Shapes of every orbit of G_ξ^{**} under π.
pub fn orbit_shapes(data: &GroupData, fusion: &ClassFusion, pi: Pi) -> Result<Vec<PairShape>> {
    fusion
        .g_eta_starstar
        .iter()
        .map(|orbit| {
            let nu = if orbit.len() == 1 {
                data.nu2(fusion.eta, orbit[0])?
            } else {
                0
            };
            if orbit.len() == 1 && nu == 0 {
                return Err(Error::InvalidTable(format!(
                    "self-paired character {} has vanishing twisted indicator",
                    orbit[0] + 1
                )));
            }
            Ok(PairShape::of(nu, pi))
        })
        .collect()
}

/// The set P^{**}_{ξ,π}(n), ordered by the orbit parameters.
pub fn irrep_labels(
    data: &GroupData,
    fusion: &ClassFusion,
    pi: Pi,
    n: usize,
) -> Result<Vec<IrrepLabelInfo>> {
    let shapes = orbit_shapes(data, fusion, pi)?;
    let params = enumerate_multi_with(shapes.len(), n, |a, w| shapes[a].params(w));
    let mut out = Vec::with_capacity(params.len());
    for p in params {
        let mut comps = vec![Partition::empty(); data.num_classes()];
        for (a, orbit) in fusion.g_eta_starstar.iter().enumerate() {
            let (first, second) = shapes[a].shapes(p.get(a))?;
            comps[orbit[0]] = first;
            if orbit.len() == 2 {
                comps[orbit[1]] = second;
            }
        }
        out.push(IrrepLabelInfo {
            label: MultiPartition::new(comps),
            params: p.components().to_vec(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn shapes_table() {
        assert_eq!(PairShape::of(1, Pi::Trivial), PairShape::Double);
        assert_eq!(PairShape::of(-1, Pi::Trivial), PairShape::DoubleT);
        assert_eq!(PairShape::of(1, Pi::Delta), PairShape::DoubleT);
        assert_eq!(PairShape::of(-1, Pi::Delta), PairShape::Double);
        assert_eq!(PairShape::of(1, Pi::Iota), PairShape::Shifted);
        assert_eq!(PairShape::of(-1, Pi::Iota), PairShape::ShiftedT);
        assert_eq!(PairShape::of(1, Pi::DeltaIota), PairShape::ShiftedT);
        assert_eq!(PairShape::of(-1, Pi::DeltaIota), PairShape::Shifted);
        assert_eq!(PairShape::of(0, Pi::Delta), PairShape::Pair);
        assert_eq!(PairShape::of(0, Pi::DeltaIota), PairShape::PairT);
    }

    #[test]
    fn hecke_labels_c2() {
        let d = data::bundled("C2").unwrap();
        // Twisted by the sign character: R2 = {−1} is killed under +.
        let f = d.fusion(1).unwrap();
        let plus = hecke_labels(&d, &f, 3, 1);
        assert_eq!(plus.len(), 3);
        assert!(plus.iter().all(|r| r.get(1).is_empty()));
        let minus = hecke_labels(&d, &f, 3, -1);
        assert!(minus
            .iter()
            .all(|r| r.get(0).is_odd() && r.get(1).is_even()));
        // odd(3)=2, odd(1)·even(2)=1 → 3.
        assert_eq!(minus.len(), 3);
        let f0 = d.fusion(0).unwrap();
        assert_eq!(hecke_labels(&d, &f0, 3, 1).len(), 10);
    }

    #[test]
    fn trivial_group_labels() {
        let d = data::bundled("trivial").unwrap();
        let f = d.fusion(0).unwrap();
        let want: Vec<Vec<usize>> = vec![vec![6], vec![4, 2], vec![2, 2, 2]];
        let got: Vec<Vec<usize>> = irrep_labels(&d, &f, Pi::Trivial, 3)
            .unwrap()
            .iter()
            .map(|l| l.label.get(0).parts().to_vec())
            .collect();
        assert_eq!(got, want);
        let iota: Vec<String> = irrep_labels(&d, &f, Pi::Iota, 3)
            .unwrap()
            .iter()
            .map(|l| l.label.get(0).to_string())
            .collect();
        assert_eq!(iota.len(), 2);
    }

    #[test]
    fn counts_match_between_label_sets() {
        for name in data::NAMES {
            let d = data::bundled(name).unwrap();
            for xi in d.linear_characters().unwrap() {
                let f = d.fusion(xi).unwrap();
                for pi in Pi::ALL {
                    for n in 1..=3 {
                        let rows = irrep_labels(&d, &f, pi, n).unwrap().len();
                        let cols = hecke_labels(&d, &f, n, pi.epsilon()).len();
                        assert_eq!(rows, cols, "{name} xi={xi} {pi} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn pair_convention_puts_mu_on_the_minimal_row() {
        let d = data::bundled("C3").unwrap();
        let f = d.fusion(0).unwrap();
        let labels = irrep_labels(&d, &f, Pi::Iota, 2).unwrap();
        let l = labels
            .iter()
            .find(|l| l.params[1] == Partition::new(vec![2]).unwrap())
            .unwrap();
        assert_eq!(l.label.get(1).parts(), &[2]);
        assert_eq!(l.label.get(2).parts(), &[1, 1]);
    }
}
