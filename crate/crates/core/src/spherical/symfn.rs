//! Double-coset orders, the characteristic map CH_π into Λ[G_{**}], and the
//! product of Jack / Schur-Q / Schur factors predicted for CH_π(Ω).

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{HeckeElem, Setup};
use crate::error::{Error, Result};
use crate::groups::{ClassFusion, GroupData};
use crate::partitions::{MultiPartition, Partition};
use crate::symfunc::{jack_p, schur_p, schur_q, SymFunc};
use crate::wreath::{HgContext, IrrepLabelInfo, PairShape, WreathElement};
use crate::{CycNum, Rational};

fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// |D_ρ| = |HG_n|² Π_{R real} 1/(z_{2ρ(R)} ζ_R^{ℓ}) Π_{R complex} 1/(z_{ρ(R)} ζ_R^{ℓ}).
pub fn coset_order(data: &GroupData, fusion: &ClassFusion, rho: &MultiPartition) -> BigInt {
    let h = BigInt::from(crate::wreath::hg_order(data.order(), rho.weight()));
    let mut num = &h * &h;
    let mut den = BigInt::one();
    for (r, p) in rho.components().iter().enumerate() {
        let class = &fusion.g_starstar[r];
        let zeta = BigInt::from(data.zeta(class.columns[0])).pow(p.len() as u32);
        let z = if class.real { p.scale(2).z() } else { p.z() };
        den *= BigInt::from(z) * zeta;
    }
    let g = num.gcd(&den);
    num /= &g;
    den /= &g;
    debug_assert!(den.is_one(), "coset order is an integer");
    num
}

/// |HG_n x HG_n| by listing the products h x h′.
pub fn coset_order_brute(ctx: &HgContext, x: &WreathElement) -> usize {
    let g = ctx.data.group();
    let mut seen = HashSet::new();
    for a in &ctx.elements {
        let ax = a.mul(x, g);
        for b in &ctx.elements {
            seen.insert(ax.mul(b, g));
        }
    }
    seen.len()
}

/// Π_{R real} 2^{ℓ(ρ(R))} under π ∈ {ι, δ⊗ι}, 1 otherwise.
fn radical(setup: &Setup, rho: &MultiPartition) -> BigInt {
    if setup.pi().epsilon() == 1 {
        return BigInt::one();
    }
    let l: usize = rho
        .components()
        .iter()
        .zip(&setup.fusion.g_starstar)
        .filter(|(_, r)| r.real)
        .map(|(p, _)| p.len())
        .sum();
    BigInt::from(2).pow(l as u32)
}

/// CH_π(f) = Σ_ρ |D_ρ| f(x(ρ̲)) CH_π(e x(ρ̲) e).
pub fn ch_map(setup: &Setup, f: &HeckeElem) -> Result<SymFunc<CycNum>> {
    if f.n != setup.n() {
        return Err(Error::WeightMismatch {
            expected: setup.n(),
            got: f.n,
        });
    }
    let mut out = SymFunc::zero(setup.fusion.merged_names());
    for (rho, v) in &f.values {
        if v.is_zero() {
            continue;
        }
        if !setup.cols.contains(rho) {
            return Err(Error::SupportViolation(format!(
                "value {v} at {rho}, outside the nonvanishing double cosets"
            )));
        }
        let scale = coset_order(setup.data, &setup.fusion, rho) * radical(setup, rho);
        out.add_term(rho.clone(), v * &CycNum::from_rational(rat(scale)));
    }
    Ok(out)
}

/// Which power of |G|/dim V_χ multiplies each factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prefactor {
    /// (|G| / dim V_χ)^m.
    GroupOverDim,
    /// (dim V_χ / |G|)^m.
    DimOverGroup,
}

/// The ν = −1, π = 1 factor, with ψ: p_r ↦ p_r/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiReading {
    /// ψ(J^{(1/2)}_μ).
    Untransposed,
    /// ψ(J^{(1/2)}_{μ′}).
    Transposed,
    /// 2^{|μ|} ψ(J^{(1/2)}_{μ′}).
    TransposedDoubled,
}

/// Denominators in p_r(χ) = Σ_R a_R(r)/(c ζ_R) p_r(R) when ε_π = −1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IotaAlphabet {
    /// c = 2 on real R, 1 on complex R, for every factor.
    ByReality,
    /// c = 2 on every R for the Q factors, c = 1 on every R for the Schur
    /// factors. This matches CH_π with its radical taken on real R.
    Matched,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Readings {
    pub prefactor: Prefactor,
    pub psi: PsiReading,
    pub iota_alphabet: IotaAlphabet,
}

impl Default for Readings {
    fn default() -> Self {
        Readings {
            prefactor: Prefactor::GroupOverDim,
            psi: PsiReading::TransposedDoubled,
            iota_alphabet: IotaAlphabet::Matched,
        }
    }
}

fn one_letter_factor(
    shape: PairShape,
    mu: &Partition,
    psi: PsiReading,
) -> Result<SymFunc<Rational>> {
    Ok(match shape {
        PairShape::Double => jack_p(mu, &rat(2)),
        PairShape::DoubleT => {
            let half = Rational::new(1.into(), 2.into());
            let (idx, scale) = match psi {
                PsiReading::Untransposed => (mu.clone(), 1u64),
                PsiReading::Transposed => (mu.transpose(), 1),
                PsiReading::TransposedDoubled => (mu.transpose(), 1 << mu.size()),
            };
            jack_p(&idx, &half).psi_twist(&half).scale(&rat(scale))
        }
        PairShape::Shifted | PairShape::ShiftedT => {
            schur_q(mu)?.scale(&rat(mu.shifted_hook_product()?))
        }
        PairShape::Pair | PairShape::PairT => schur_p(mu).scale(&rat(mu.hook_product())),
    })
}

/// p_r(χ) = Σ_R (conj ξ(g_R) χ(g_R) + ε^{r−1} conj χ(g_R)) / (2ζ_R or ζ_R) p_r(R).
fn alphabet_coeff(
    setup: &Setup,
    eps: i64,
    pair: bool,
    iota: IotaAlphabet,
    chi: usize,
    r_idx: usize,
    r: usize,
) -> CycNum {
    let data = setup.data;
    let class = &setup.fusion.g_starstar[r_idx];
    let g = class.rep;
    let a = data.chi(setup.xi(), g).conjugate() * data.chi(chi, g);
    let b = data.chi(chi, g).conjugate();
    let num = if eps == 1 || r % 2 == 1 { a + b } else { a - b };
    let c = match (eps, iota) {
        (-1, IotaAlphabet::Matched) => {
            if pair {
                1
            } else {
                2
            }
        }
        _ => {
            if class.real {
                2
            } else {
                1
            }
        }
    };
    let zeta = data.zeta(class.columns[0]) as i64 * c;
    num * CycNum::from_rational(Rational::new(1.into(), zeta.into()))
}

/// Π over orbits of G_ξ^{**} of the predicted factors, pushed to Λ[G_{**}].
/// Under δ the prediction is taken for π⊗δ at the transposed label and then
/// p_r ↦ −p_r is applied, matching Ω^π_{λ̲}(x) = sgn(x) Ω^{π⊗δ}_{λ̲′}(x).
pub fn predicted_ch(
    setup: &Setup,
    row: &IrrepLabelInfo,
    readings: &Readings,
) -> Result<SymFunc<CycNum>> {
    let pi = setup.pi();
    let (base_pi, twist) = if pi.has_delta() {
        (pi.twist_delta(), true)
    } else {
        (pi, false)
    };
    let shapes = if twist {
        crate::wreath::orbit_shapes(setup.data, &setup.fusion, base_pi)?
    } else {
        setup.shapes.clone()
    };
    let target = setup.fusion.merged_names();
    let mut out = SymFunc::one(target.clone());
    let order = setup.data.order() as i64;
    for (a, orbit) in setup.fusion.g_eta_starstar.iter().enumerate() {
        let mu = &row.params[a];
        if mu.is_empty() {
            continue;
        }
        let mu = if twist && shapes[a].is_pair() {
            mu.transpose()
        } else {
            mu.clone()
        };
        let chi = orbit[0];
        let m = mu.size() as u32;
        let d = setup.data.degree(chi);
        let pre = match readings.prefactor {
            Prefactor::GroupOverDim => {
                Rational::new(BigInt::from(order).pow(m), BigInt::from(d).pow(m))
            }
            Prefactor::DimOverGroup => {
                Rational::new(BigInt::from(d).pow(m), BigInt::from(order).pow(m))
            }
        };
        let f = one_letter_factor(shapes[a], &mu, readings.psi)?.scale(&pre);
        let f = f.map_coeffs(|q| CycNum::from_rational(q.clone()));
        let eps = base_pi.epsilon();
        let pushed = f.change_alphabet(target.clone(), |_, b, r| {
            alphabet_coeff(
                setup,
                eps,
                shapes[a].is_pair(),
                readings.iota_alphabet,
                chi,
                b,
                r,
            )
        });
        out = out.multiply(&pushed)?;
    }
    if twist {
        out = out.psi_twist(&CycNum::from_int(-1));
    }
    Ok(out)
}

/// Ω(x(ρ̲)) read off a prediction for |HG_n|⁻¹ CH_π(Ω).
pub fn symfunc_value(setup: &Setup, rhs: &SymFunc<CycNum>, rho: &MultiPartition) -> Result<CycNum> {
    let c = rhs.coeff(rho);
    if c.is_zero() {
        return Ok(c);
    }
    let den = coset_order(setup.data, &setup.fusion, rho) * radical(setup, rho);
    Ok(c * CycNum::from_rational(Rational::new(setup.hg_order(), den)))
}

/// |HG_n|⁻¹ CH_π of a table row.
pub fn normalized_ch(setup: &Setup, row: &[CycNum]) -> Result<SymFunc<CycNum>> {
    let f = ch_map(setup, &HeckeElem::from_row(setup, row))?;
    Ok(f.scale(&CycNum::from_rational(Rational::new(
        BigInt::one(),
        setup.hg_order(),
    ))))
}
