//! Θ↑ from HG_n to SG_{2n} by Frobenius reciprocity, Hecke coefficients of
//! e x e, and the K elements spanning the SG_2 Hecke algebra.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{hg_elements, Caps, Pi, ThetaCharacter, WreathCharacters, WreathElement};
use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::partitions::MultiPartition;
use crate::perm::Perm;
use crate::{CycNum, Rational};

/// HG_n with the values conj Θ(h) precomputed.
pub struct HgContext<'a> {
    pub data: &'a GroupData,
    pub theta: ThetaCharacter,
    pub elements: Vec<WreathElement>,
    pub conj_theta: Vec<CycNum>,
}

impl<'a> HgContext<'a> {
    pub fn new(data: &'a GroupData, theta: ThetaCharacter, caps: &Caps) -> Result<Self> {
        data.check_linear(theta.xi)?;
        let elements = hg_elements(data.group(), theta.n, caps)?;
        let conj_theta = elements
            .iter()
            .map(|h| theta.value(data, h).map(|v| v.conjugate()))
            .collect::<Result<Vec<_>>>()?;
        Ok(HgContext {
            data,
            theta,
            elements,
            conj_theta,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Σ_{h : type(h x⁻¹) = τ} conj Θ(h), for every class type τ met.
    pub fn class_sums(&self, x: &WreathElement) -> HashMap<MultiPartition, CycNum> {
        let g = self.data.group();
        let xinv = x.inverse(g);
        let mut out: HashMap<MultiPartition, CycNum> = HashMap::new();
        for (h, c) in self.elements.iter().zip(&self.conj_theta) {
            let t = h.mul(&xinv, g).class_type(self.data);
            *out.entry(t).or_insert_with(CycNum::zero) += c;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// Σ_{h ∈ HG_n of type τ} conj Θ(h) per class type τ of SG_{2n}.
pub fn theta_class_counts(ctx: &HgContext) -> HashMap<MultiPartition, CycNum> {
    ctx.class_sums(&WreathElement::identity(2 * ctx.theta.n))
}

/// ⟨χ^{λ̲}|_{HG_n}, Θ⟩ for each label.
pub fn multiplicities(
    ctx: &HgContext,
    chars: &WreathCharacters,
    labels: &[MultiPartition],
    caps: &Caps,
) -> Result<Vec<CycNum>> {
    let sums = theta_class_counts(ctx);
    caps.check_class_work(
        "label x class evaluations",
        (labels.len() * sums.len()) as u128,
    )?;
    let inv_order = CycNum::from_rational(Rational::new(BigInt::one(), BigInt::from(ctx.order())));
    labels
        .par_iter()
        .map(|l| {
            let mut s = CycNum::zero();
            for (t, c) in &sums {
                let v = chars.value(l, t)?;
                if !v.is_zero() {
                    s += &(v * c);
                }
            }
            Ok(s * &inv_order)
        })
        .collect()
}

/// Multiplicities of the irreducibles of SG_{2n} in Θ↑, nonzero entries only.
pub fn decompose_induced(
    data: &GroupData,
    theta: ThetaCharacter,
    caps: &Caps,
) -> Result<Vec<(MultiPartition, i64)>> {
    let ctx = HgContext::new(data, theta, caps)?;
    let chars = WreathCharacters::new(data);
    let labels = chars.labels(2 * theta.n);
    let mults = multiplicities(&ctx, &chars, &labels, caps)?;
    let mut out = Vec::new();
    for (l, m) in labels.into_iter().zip(mults) {
        let k = m.try_integer().ok_or_else(|| {
            Error::InvalidTable(format!("multiplicity of {l} is not an integer: {m}"))
        })?;
        if k < 0 {
            return Err(Error::InvalidTable(format!(
                "negative multiplicity {k} for {l}"
            )));
        }
        if k != 0 {
            out.push((l, k));
        }
    }
    Ok(out)
}

/// The coefficient of x in e x e, e = |HG_n|⁻¹ Σ_h conj Θ(h) h.
pub fn hecke_coefficient(ctx: &HgContext, x: &WreathElement) -> Result<CycNum> {
    let g = ctx.data.group();
    let xinv = x.inverse(g);
    let mut s = CycNum::zero();
    for (h, c) in ctx.elements.iter().zip(&ctx.conj_theta) {
        // h x h' = x with h' = x⁻¹ h⁻¹ x.
        let hp = xinv.mul(&h.inverse(g), g).mul(x, g);
        if hp.in_hg() {
            let v = ctx.theta.value(ctx.data, &hp)?.conjugate();
            s += &(c * &v);
        }
    }
    let ord = BigInt::from(ctx.order());
    Ok(s * CycNum::from_rational(Rational::new(BigInt::one(), &ord * &ord)))
}

/// The coefficient of (1, g; σ) in K_{(1,g;σ)} = Σ_{x,y ∈ HG_1} ε(xy)ξ(xy) x(1,g;σ)y.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KBasisEntry {
    pub element: usize,
    pub swapped: bool,
    pub coefficient: CycNum,
}

/// K elements of SG_2 for every g ∈ G and σ ∈ {1, (12)}, with ε ∈ {1, δ}.
pub fn k_basis_sg2(data: &GroupData, xi: usize, eps: Pi) -> Result<Vec<KBasisEntry>> {
    if eps.has_iota() {
        return Err(Error::UnknownName(format!(
            "{eps} is trivial on H_1; use triv or delta"
        )));
    }
    let theta = ThetaCharacter::new(xi, eps, 1);
    let ctx = HgContext::new(data, theta, &Caps::default())?;
    let g = data.group();
    let mut out = Vec::new();
    for swapped in [false, true] {
        let sigma = if swapped {
            Perm::from_cycles(2, &[&[1, 2]])?
        } else {
            Perm::identity(2)
        };
        for elem in 0..data.order() {
            let z = WreathElement::new(vec![0, elem], sigma.clone())?;
            let zinv = z.inverse(g);
            let mut s = CycNum::zero();
            for (x, cx) in ctx.elements.iter().zip(&ctx.conj_theta) {
                // x z y = z  ⇔  y = z⁻¹ x⁻¹ z.
                let y = zinv.mul(&x.inverse(g), g).mul(&z, g);
                if y.in_hg() {
                    let v = cx.conjugate() * theta.value(data, &y)?;
                    s += &v;
                }
            }
            out.push(KBasisEntry {
                element: elem,
                swapped,
                coefficient: s,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::partitions::{enumerate, strict_partitions, Partition};
    use crate::wreath::{hecke_labels, irrep_labels, sg_elements, x_rho};

    fn support(d: &GroupData, xi: usize, pi: Pi, n: usize) -> Vec<(MultiPartition, i64)> {
        decompose_induced(d, ThetaCharacter::new(xi, pi, n), &Caps::default()).unwrap()
    }

    #[test]
    fn littlewood_trivial_group() {
        let d = data::bundled("trivial").unwrap();
        for n in 1..=3 {
            for pi in Pi::ALL {
                let got: Vec<Partition> = support(&d, 0, pi, n)
                    .into_iter()
                    .map(|(l, m)| {
                        assert_eq!(m, 1);
                        l.get(0).clone()
                    })
                    .collect();
                let mut want: Vec<Partition> = match pi {
                    Pi::Trivial => enumerate(n).iter().map(|l| l.scale(2)).collect(),
                    Pi::Delta => enumerate(n)
                        .iter()
                        .map(|l| l.scale(2).transpose())
                        .collect(),
                    Pi::Iota => strict_partitions(n)
                        .iter()
                        .map(|l| l.doubling().unwrap())
                        .collect(),
                    Pi::DeltaIota => strict_partitions(n)
                        .iter()
                        .map(|l| l.doubling().unwrap().transpose())
                        .collect(),
                };
                let mut got = got;
                got.sort();
                want.sort();
                assert_eq!(got, want, "{pi} n={n}");
            }
        }
    }

    #[test]
    fn support_is_the_label_set_small() {
        for name in ["C2", "C3"] {
            let d = data::bundled(name).unwrap();
            for xi in d.linear_characters().unwrap() {
                let f = d.fusion(xi).unwrap();
                for pi in Pi::ALL {
                    for n in 1..=2 {
                        let got: Vec<MultiPartition> = support(&d, xi, pi, n)
                            .into_iter()
                            .map(|(l, m)| {
                                assert_eq!(m, 1);
                                l
                            })
                            .collect();
                        let mut want: Vec<MultiPartition> = irrep_labels(&d, &f, pi, n)
                            .unwrap()
                            .into_iter()
                            .map(|i| i.label)
                            .collect();
                        let mut got = got;
                        got.sort();
                        want.sort();
                        assert_eq!(got, want, "{name} xi={xi} {pi} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_bookkeeping() {
        let d = data::bundled("C4").unwrap();
        let chars = WreathCharacters::new(&d);
        for pi in Pi::ALL {
            let total: BigInt = support(&d, 1, pi, 2)
                .iter()
                .map(|(l, _)| chars.dimension(l))
                .sum();
            // [SG_4 : HG_2] = 4^4·24 / (4^2·8)
            assert_eq!(total, BigInt::from(48));
        }
    }

    #[test]
    fn hecke_support_c4() {
        let d = data::bundled("C4").unwrap();
        for xi in d.linear_characters().unwrap() {
            let f = d.fusion(xi).unwrap();
            for pi in Pi::ALL {
                for n in 1..=2 {
                    let ctx = HgContext::new(&d, ThetaCharacter::new(xi, pi, n), &Caps::default())
                        .unwrap();
                    let good = hecke_labels(&d, &f, n, pi.epsilon());
                    for rho in crate::partitions::enumerate_multi(f.g_starstar.len(), n) {
                        let c = hecke_coefficient(&ctx, &x_rho(&f, &rho).unwrap()).unwrap();
                        assert_eq!(!c.is_zero(), good.contains(&rho), "xi={xi} {pi} {rho}");
                    }
                }
            }
        }
    }

    #[test]
    fn k_basis_case_table() {
        for name in ["GL2F3", "Q8", "C3", "C4"] {
            let d = data::bundled(name).unwrap();
            for xi in d.linear_characters().unwrap() {
                for eps in [Pi::Trivial, Pi::Delta] {
                    for e in k_basis_sg2(&d, xi, eps).unwrap() {
                        let col = d.column(e.element);
                        let real = d.inverse_column(col) == col;
                        let zeta = CycNum::from_int(d.zeta(col) as i64);
                        let xi_g = d.chi(xi, e.element).clone();
                        let want = if !real {
                            zeta
                        } else if xi_g == CycNum::from_int(-1) {
                            CycNum::zero()
                        } else {
                            zeta * CycNum::from_int(2)
                        };
                        assert_eq!(
                            e.coefficient, want,
                            "{name} xi={xi} {eps} g={} swapped={}",
                            e.element, e.swapped
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gl2f3_k_basis_vanishes_on_c6() {
        let d = data::bundled("GL2F3").unwrap();
        let xi = d.find_char("chi2").unwrap();
        let vanishing: Vec<usize> = k_basis_sg2(&d, xi, Pi::Trivial)
            .unwrap()
            .iter()
            .filter(|e| !e.swapped && e.coefficient.is_zero())
            .map(|e| d.column(e.element))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(vanishing, vec![5]);
        assert!(k_basis_sg2(&d, xi, Pi::Iota).is_err());
    }

    #[test]
    fn inverse_double_cosets_coincide() {
        for name in ["C3", "Q8"] {
            let d = data::bundled(name).unwrap();
            let g = d.group();
            for n in 1..=2 {
                let h = crate::wreath::hg_elements(g, n, &Caps::default()).unwrap();
                let elems = sg_elements(g, 2 * n, &Caps::default()).unwrap();
                for x in elems.iter().step_by(if n == 1 { 1 } else { 97 }) {
                    // x⁻¹ = a x b with a, b ∈ HG_n  ⇔  (a x)⁻¹ x⁻¹ ∈ HG_n for some a.
                    let xinv = x.inverse(g);
                    let found = h
                        .iter()
                        .any(|a| a.mul(x, g).inverse(g).mul(&xinv, g).in_hg());
                    assert!(found, "{name} {x}");
                }
            }
        }
    }

    #[test]
    fn hyperoctahedral_identities() {
        for m in 1..=4usize {
            let deg = 2 * m;
            let mut xc: Vec<Vec<usize>> = (1..m)
                .map(|k| vec![k, 2 * m - 1 - k])
                .filter(|c| c[0] != c[1])
                .collect();
            xc.push(vec![2 * m - 1, 2 * m]);
            let xs: Vec<&[usize]> = xc.iter().map(Vec::as_slice).collect();
            let x = Perm::from_cycles(deg, &xs).unwrap();
            let odd: Vec<usize> = (1..=m).rev().map(|i| 2 * i - 1).collect();
            let even: Vec<usize> = (1..=m).rev().map(|i| 2 * i).collect();
            let y = Perm::from_cycles(deg, &[&odd, &even]).unwrap();
            let t_even: Vec<usize> = (1..=m).map(|i| 2 * i).collect();
            let t_odd: Vec<usize> = (1..=m).map(|i| 2 * i - 1).collect();
            let tau = Perm::from_cycles(deg, &[&t_even, &t_odd]).unwrap();
            assert_eq!(x.compose(&y).compose(&x), tau, "m={m}");
            let parts = crate::wreath::hyperoct_decompose(&tau).unwrap();
            assert_eq!(parts.iota(), if m % 2 == 1 { 1 } else { -1 });
            let sigma = Perm::from_images((0..deg).map(|i| (i + 1) % deg).collect()).unwrap();
            assert_eq!(x.compose(&sigma).compose(&y).compose(&x), sigma, "m={m}");
        }
    }
}
