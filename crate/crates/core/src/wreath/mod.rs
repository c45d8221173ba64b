//! Wreath products SG_n = G ≀ S_n, the subgroup HG_n ⊂ SG_{2n} and its
//! linear characters Θ_{ξ,π}.
//!
//! Elements multiply by (g; σ)(h; τ) = (g_i · h_{σ⁻¹(i)} ; στ), which is the
//! law of the action g_1 v_{σ⁻¹(1)} ⊗ ⋯ ⊗ g_n v_{σ⁻¹(n)} on tensor powers.

mod characters;
mod decompose;
mod index_sets;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groups::{ClassFusion, FiniteGroup, GroupData};
use crate::partitions::{MultiPartition, Partition};
use crate::perm::Perm;
use crate::CycNum;

pub use characters::{class_types, type_centralizer, WreathCharacters};
pub use decompose::{
    decompose_induced, hecke_coefficient, k_basis_sg2, multiplicities, theta_class_counts,
    HgContext, KBasisEntry,
};
pub use index_sets::{hecke_labels, irrep_labels, orbit_shapes, IrrepLabelInfo, PairShape};

/// Resource limits for enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group enumerated element by element.
    pub elements: u64,
    /// Largest number of (label, class) evaluations in one table.
    pub class_work: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: 1_000_000,
            class_work: 10_000_000,
        }
    }
}

impl Caps {
    pub fn check_elements(&self, what: &'static str, value: u128) -> Result<()> {
        if value > self.elements as u128 {
            return Err(Error::CapExceeded {
                what,
                value: value.min(u64::MAX as u128) as u64,
                cap: self.elements,
            });
        }
        Ok(())
    }

    pub fn check_class_work(&self, what: &'static str, value: u128) -> Result<()> {
        if value > self.class_work as u128 {
            return Err(Error::CapExceeded {
                what,
                value: value.min(u64::MAX as u128) as u64,
                cap: self.class_work,
            });
        }
        Ok(())
    }
}

/// (g_1, …, g_n ; σ) with g_i element indices of G.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    base: Vec<usize>,
    perm: Perm,
}

impl WreathElement {
    pub fn new(base: Vec<usize>, perm: Perm) -> Result<Self> {
        if base.len() != perm.degree() {
            return Err(Error::Parse(format!(
                "base of length {} with a permutation of degree {}",
                base.len(),
                perm.degree()
            )));
        }
        Ok(WreathElement { base, perm })
    }

    pub fn identity(n: usize) -> Self {
        WreathElement {
            base: vec![0; n],
            perm: Perm::identity(n),
        }
    }

    /// (1, …, 1 ; σ).
    pub fn from_perm(perm: Perm) -> Self {
        WreathElement {
            base: vec![0; perm.degree()],
            perm,
        }
    }

    pub fn degree(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn mul(&self, other: &Self, g: &FiniteGroup) -> Self {
        let sinv = self.perm.inverse();
        let base = (0..self.degree())
            .map(|i| g.mul(self.base[i], other.base[sinv.apply(i)]))
            .collect();
        WreathElement {
            base,
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn inverse(&self, g: &FiniteGroup) -> Self {
        let base = (0..self.degree())
            .map(|j| g.inv(self.base[self.perm.apply(j)]))
            .collect();
        WreathElement {
            base,
            perm: self.perm.inverse(),
        }
    }

    /// Block embedding of SG_a × SG_b in SG_{a+b}.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut base = self.base.clone();
        base.extend_from_slice(&other.base);
        WreathElement {
            base,
            perm: self.perm.direct_sum(&other.perm),
        }
    }

    /// (length, product) for every cycle of σ, where the product at a cycle
    /// through i is g_i g_{σ⁻¹(i)} ⋯ g_{σ^{-(L-1)}(i)}, the base entry of the
    /// L-th power at i.
    pub fn cycle_products(&self, g: &FiniteGroup) -> Vec<(usize, usize)> {
        let sinv = self.perm.inverse();
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut prod = 0;
            let mut len = 0;
            let mut i = start;
            loop {
                seen[i] = true;
                prod = g.mul(prod, self.base[i]);
                len += 1;
                i = sinv.apply(i);
                if i == start {
                    break;
                }
            }
            out.push((len, prod));
        }
        out
    }

    /// The multipartition over table columns recording the cycle lengths
    /// whose cycle products lie in each class.
    pub fn class_type(&self, data: &GroupData) -> MultiPartition {
        let mut parts = vec![Vec::new(); data.num_classes()];
        for (len, prod) in self.cycle_products(data.group()) {
            parts[data.column(prod)].push(len);
        }
        MultiPartition::new(parts.into_iter().map(Partition::from_unsorted).collect())
    }

    /// Whether the element lies in HG_n: paired base entries and a
    /// permutation centralising (12)(34)⋯.
    pub fn in_hg(&self) -> bool {
        self.degree().is_multiple_of(2)
            && self.base.chunks(2).all(|c| c[0] == c[1])
            && hyperoct_decompose(&self.perm).is_ok()
    }

    pub fn to_json(&self) -> Value {
        json!({"base": self.base, "perm": self.perm.images().iter().map(|x| x + 1).collect::<Vec<_>>()})
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base: Vec<String> = self.base.iter().map(ToString::to_string).collect();
        write!(f, "({} : {})", base.join(", "), self.perm)
    }
}

/// The four linear characters of H_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pi {
    Trivial,
    Delta,
    Iota,
    DeltaIota,
}

impl Pi {
    pub const ALL: [Pi; 4] = [Pi::Trivial, Pi::Delta, Pi::Iota, Pi::DeltaIota];

    pub fn name(self) -> &'static str {
        match self {
            Pi::Trivial => "triv",
            Pi::Delta => "delta",
            Pi::Iota => "iota",
            Pi::DeltaIota => "delta-iota",
        }
    }

    pub fn has_delta(self) -> bool {
        matches!(self, Pi::Delta | Pi::DeltaIota)
    }

    pub fn has_iota(self) -> bool {
        matches!(self, Pi::Iota | Pi::DeltaIota)
    }

    /// ε_π: 1 for π ∈ {1, δ}, −1 for π ∈ {ι, δ⊗ι}.
    pub fn epsilon(self) -> i64 {
        if self.has_iota() {
            -1
        } else {
            1
        }
    }

    /// π(σ) from δ(σ) and ι(σ).
    pub fn value(self, delta: i64, iota: i64) -> i64 {
        (if self.has_delta() { delta } else { 1 }) * (if self.has_iota() { iota } else { 1 })
    }

    pub fn twist_delta(self) -> Pi {
        match self {
            Pi::Trivial => Pi::Delta,
            Pi::Delta => Pi::Trivial,
            Pi::Iota => Pi::DeltaIota,
            Pi::DeltaIota => Pi::Iota,
        }
    }
}

impl fmt::Display for Pi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triv" | "1" | "trivial" => Ok(Pi::Trivial),
            "delta" => Ok(Pi::Delta),
            "iota" => Ok(Pi::Iota),
            "delta-iota" => Ok(Pi::DeltaIota),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// The hyperoctahedral data of σ ∈ H_n ⊂ S_{2n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperoctParts {
    /// ε_i ∈ {0, 1}: whether block i is swapped.
    pub eps: Vec<u8>,
    /// The induced permutation of blocks.
    pub tau: Perm,
}

impl HyperoctParts {
    /// δ(σ) = (−1)^{Σ ε_i}, the sign of σ in S_{2n}.
    pub fn delta(&self) -> i64 {
        if self.eps.iter().map(|&e| e as usize).sum::<usize>() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// ι(σ) = sgn(τ).
    pub fn iota(&self) -> i64 {
        self.tau.sign()
    }
}

/// Writes σ = Π (2i−1, 2i)^{ε_i} · φ_n(τ); fails when σ does not centralise
/// (12)(34)⋯(2n−1, 2n).
pub fn hyperoct_decompose(sigma: &Perm) -> Result<HyperoctParts> {
    let deg = sigma.degree();
    if !deg.is_multiple_of(2) {
        return Err(Error::NotInSubgroup(format!(
            "{sigma} has odd degree {deg}"
        )));
    }
    let n = deg / 2;
    let mut tau = vec![0; n];
    let mut eps = vec![0u8; n];
    for i in 0..n {
        let a = sigma.apply(2 * i);
        let b = sigma.apply(2 * i + 1);
        if a / 2 != b / 2 {
            return Err(Error::NotInSubgroup(format!(
                "{sigma} does not preserve the pairing"
            )));
        }
        tau[i] = a / 2;
        eps[a / 2] = (a % 2) as u8;
    }
    Ok(HyperoctParts {
        eps,
        tau: Perm::from_images(tau)?,
    })
}

/// φ_n(τ) composed with the block swaps ε, i.e. the inverse of
/// [`hyperoct_decompose`].
pub fn hyperoct_compose(eps: &[u8], tau: &Perm) -> Perm {
    let n = tau.degree();
    let mut images = vec![0; 2 * n];
    for i in 0..n {
        let t = tau.apply(i);
        for s in 0..2 {
            images[2 * i + s] = 2 * t + (s ^ eps[t] as usize);
        }
    }
    Perm::from_images(images).expect("block permutation")
}

/// All of H_n, |H_n| = 2ⁿ n!.
pub fn hyperoctahedral(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    for tau in Perm::all(n) {
        for mask in 0..(1u32 << n) {
            let eps: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
            out.push(hyperoct_compose(&eps, &tau));
        }
    }
    out
}

/// t_n = (12)(34)⋯(2n−1, 2n).
pub fn t_n(n: usize) -> Perm {
    Perm::from_images((0..2 * n).map(|i| i ^ 1).collect()).unwrap()
}

/// |HG_n| = |G|ⁿ 2ⁿ n!.
pub fn hg_order(group_order: usize, n: usize) -> u128 {
    (group_order as u128).pow(n as u32) * (1u128 << n) * crate::partitions::factorial(n)
}

/// |SG_m| = |G|^m m!.
pub fn sg_order(group_order: usize, m: usize) -> u128 {
    (group_order as u128).pow(m as u32) * crate::partitions::factorial(m)
}

/// Every element of HG_n ⊂ SG_{2n}.
pub fn hg_elements(g: &FiniteGroup, n: usize, caps: &Caps) -> Result<Vec<WreathElement>> {
    caps.check_elements("|HG_n|", hg_order(g.order(), n))?;
    let perms = hyperoctahedral(n);
    let mut out = Vec::with_capacity(hg_order(g.order(), n) as usize);
    let bases = tuples(g.order(), n);
    for sigma in &perms {
        for b in &bases {
            let base = b.iter().flat_map(|&x| [x, x]).collect();
            out.push(WreathElement {
                base,
                perm: sigma.clone(),
            });
        }
    }
    Ok(out)
}

/// Every element of SG_m.
pub fn sg_elements(g: &FiniteGroup, m: usize, caps: &Caps) -> Result<Vec<WreathElement>> {
    caps.check_elements("|SG_m|", sg_order(g.order(), m))?;
    let bases = tuples(g.order(), m);
    let mut out = Vec::new();
    for sigma in Perm::all(m) {
        for b in &bases {
            out.push(WreathElement {
                base: b.clone(),
                perm: sigma.clone(),
            });
        }
    }
    Ok(out)
}

fn tuples(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..k).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Θ_{ξ,π} on HG_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaCharacter {
    pub xi: usize,
    pub pi: Pi,
    pub n: usize,
}

impl ThetaCharacter {
    pub fn new(xi: usize, pi: Pi, n: usize) -> Self {
        ThetaCharacter { xi, pi, n }
    }

    /// ξ(g_1 ⋯ g_n) π(σ) for x = (g_1, g_1, …, g_n, g_n ; σ).
    pub fn value(&self, data: &GroupData, x: &WreathElement) -> Result<CycNum> {
        if x.degree() != 2 * self.n || !x.base.chunks(2).all(|c| c[0] == c[1]) {
            return Err(Error::NotInSubgroup(x.to_string()));
        }
        let parts = hyperoct_decompose(&x.perm)?;
        let g = data.group();
        let prod = x.base.iter().step_by(2).fold(0, |acc, &b| g.mul(acc, b));
        let sign = self.pi.value(parts.delta(), parts.iota());
        Ok(data.chi(self.xi, prod) * &CycNum::from_int(sign))
    }
}

/// x(ρ̲) for a multipartition over G_{**}: for each merged class R in order
/// and each part r of ρ(R) (decreasing), a block of length 2r carrying the
/// full cycle of the block and base (1, …, 1, g_R).
pub fn x_rho(fusion: &ClassFusion, rho: &MultiPartition) -> Result<WreathElement> {
    if rho.labels() != fusion.g_starstar.len() {
        return Err(Error::AlphabetMismatch(format!(
            "{} labels for {} merged classes",
            rho.labels(),
            fusion.g_starstar.len()
        )));
    }
    let mut x = WreathElement::identity(0);
    for (r, part) in rho.components().iter().enumerate() {
        let g_r = fusion.g_starstar[r].rep;
        for &len in part.parts() {
            let m = 2 * len;
            let images: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
            let mut base = vec![0; m];
            base[m - 1] = g_r;
            let block = WreathElement {
                base,
                perm: Perm::from_images(images).unwrap(),
            };
            x = x.direct_sum(&block);
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn hyperoct_examples() {
        let s = Perm::from_cycles(4, &[&[1, 2]]).unwrap();
        let p = hyperoct_decompose(&s).unwrap();
        assert_eq!((p.eps.clone(), p.delta(), p.iota()), (vec![1, 0], -1, 1));
        let s = Perm::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        let p = hyperoct_decompose(&s).unwrap();
        assert_eq!((p.eps.clone(), p.delta(), p.iota()), (vec![0, 0], 1, -1));
        assert!(hyperoct_decompose(&Perm::from_cycles(4, &[&[2, 3]]).unwrap()).is_err());
    }

    #[test]
    fn hyperoctahedral_is_the_centraliser() {
        for n in 1..=4 {
            let h = hyperoctahedral(n);
            assert_eq!(
                h.len() as u128,
                (1u128 << n) * crate::partitions::factorial(n)
            );
            let t = t_n(n);
            let central = Perm::all(2 * n)
                .into_iter()
                .filter(|s| s.compose(&t) == t.compose(s))
                .count();
            assert_eq!(central, h.len());
            for s in &h {
                let p = hyperoct_decompose(s).unwrap();
                assert_eq!(hyperoct_compose(&p.eps, &p.tau), *s);
                assert_eq!(p.delta(), s.sign());
            }
        }
    }

    #[test]
    fn wreath_law_matches_tensor_action() {
        // (g; σ) acting on position i of v_1 ⊗ ⋯ ⊗ v_n places g_i v_{σ⁻¹(i)};
        // track the G-label of each tensor factor as a word.
        let d = data::bundled("Q8").unwrap();
        let g = d.group();
        let x = WreathElement::new(vec![1, 4, 6], Perm::from_cycles(3, &[&[1, 2, 3]]).unwrap())
            .unwrap();
        let y =
            WreathElement::new(vec![3, 2, 5], Perm::from_cycles(3, &[&[1, 2]]).unwrap()).unwrap();
        let act = |e: &WreathElement, v: &[(usize, usize)]| -> Vec<(usize, usize)> {
            let sinv = e.perm().inverse();
            (0..3)
                .map(|i| {
                    let (lab, src) = v[sinv.apply(i)];
                    (g.mul(e.base()[i], lab), src)
                })
                .collect()
        };
        let v: Vec<(usize, usize)> = (0..3).map(|i| (0, i)).collect();
        assert_eq!(act(&x, &act(&y, &v)), act(&x.mul(&y, g), &v));
        let e = x.mul(&x.inverse(g), g);
        assert_eq!(e, WreathElement::identity(3));
    }

    #[test]
    fn class_type_of_long_cycle() {
        let d = data::bundled("C4").unwrap();
        let sigma = Perm::from_images((0..6).map(|i| (i + 1) % 6).collect()).unwrap();
        let x = WreathElement::new(vec![0, 0, 0, 0, 0, 1], sigma).unwrap();
        let t = x.class_type(&d);
        assert_eq!(t.get(d.column(1)).parts(), &[6]);
        assert_eq!(t.weight(), 6);
        let id = WreathElement::identity(3).class_type(&d);
        assert_eq!(id.get(0).parts(), &[1, 1, 1]);
    }

    #[test]
    fn theta_examples() {
        let d = data::bundled("C2").unwrap();
        let swap =
            WreathElement::new(vec![1, 1], Perm::from_cycles(2, &[&[1, 2]]).unwrap()).unwrap();
        let th = |pi| ThetaCharacter::new(1, pi, 1).value(&d, &swap).unwrap();
        assert_eq!(th(Pi::Iota), CycNum::from_int(-1));
        assert_eq!(th(Pi::Delta), CycNum::from_int(1));
        let id = WreathElement::identity(2);
        assert_eq!(
            ThetaCharacter::new(1, Pi::Delta, 1).value(&d, &id).unwrap(),
            CycNum::from_int(1)
        );
        let flip = WreathElement::new(vec![1, 1], Perm::identity(2)).unwrap();
        assert_eq!(
            ThetaCharacter::new(1, Pi::Trivial, 1)
                .value(&d, &flip)
                .unwrap(),
            CycNum::from_int(-1)
        );
        let bad = WreathElement::new(vec![0, 1], Perm::identity(2)).unwrap();
        assert!(ThetaCharacter::new(1, Pi::Trivial, 1)
            .value(&d, &bad)
            .is_err());
    }

    #[test]
    fn x_rho_example_c4() {
        let d = data::bundled("C4").unwrap();
        let f = d.fusion(0).unwrap();
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        let rho = MultiPartition::new(vec![p(&[]), p(&[1]), p(&[2, 1])]);
        let x = x_rho(&f, &rho).unwrap();
        assert_eq!(x.base(), &[0, 1, 0, 0, 0, 2, 0, 2]);
        assert_eq!(x.perm().to_string(), "(1 2)(3 4 5 6)(7 8)");
    }

    #[test]
    fn x_rho_identity_label_is_t_n() {
        let d = data::bundled("Q8").unwrap();
        let f = d.fusion(0).unwrap();
        let mut parts = vec![Partition::empty(); f.g_starstar.len()];
        parts[0] = Partition::new(vec![1, 1, 1]).unwrap();
        let x = x_rho(&f, &MultiPartition::new(parts)).unwrap();
        assert_eq!(x, WreathElement::from_perm(t_n(3)));
    }

    #[test]
    fn block_embedding_example() {
        let x = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let y = Perm::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        let z = Perm::from_cycles(2, &[&[1, 2]]).unwrap();
        assert_eq!(
            x.direct_sum(&y).direct_sum(&z).to_string(),
            "(1 2)(4 6)(5 7)(8 9)"
        );
        let r = Perm::from_cycles(4, &[&[1, 2, 3, 4]])
            .unwrap()
            .direct_sum(&Perm::from_cycles(2, &[&[1, 2]]).unwrap())
            .direct_sum(&Perm::from_cycles(2, &[&[1, 2]]).unwrap());
        assert_eq!(r.to_string(), "(1 2 3 4)(5 6)(7 8)");
    }

    #[test]
    fn hg_counts() {
        let d = data::bundled("C2").unwrap();
        let h = hg_elements(d.group(), 2, &Caps::default()).unwrap();
        assert_eq!(h.len(), 32);
        assert!(h.iter().all(WreathElement::in_hg));
        let tiny = Caps {
            elements: 10,
            class_work: 10,
        };
        assert!(matches!(
            hg_elements(d.group(), 2, &tiny),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn pi_names() {
        for p in Pi::ALL {
            assert_eq!(p.name().parse::<Pi>().unwrap(), p);
        }
        assert!("sgn".parse::<Pi>().is_err());
    }
}
