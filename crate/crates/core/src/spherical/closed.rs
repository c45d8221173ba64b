//! Closed forms for labels supported on a single orbit of G_ξ^{**}, and the
//! spherical functions of (G × G, ΔG, η̂).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Setup;
use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::partitions::{MultiPartition, Partition};
use crate::perm::Perm;
use crate::symfunc::sym_character;
use crate::wreath::{hyperoct_decompose, hyperoctahedral, IrrepLabelInfo, PairShape, Pi};
use crate::{CycNum, Rational};

/// [2ρ]: consecutive blocks of lengths 2ρ_1, 2ρ_2, … each carrying its full cycle.
pub fn doubled_block_perm(rho: &Partition) -> Perm {
    let mut p = Perm::identity(0);
    for &r in rho.parts() {
        let m = 2 * r;
        p = p.direct_sum(&Perm::from_images((0..m).map(|i| (i + 1) % m).collect()).unwrap());
    }
    p
}

/// The (S_{2n}, H_n, π)-spherical function of S^W at [2ρ], by direct sum
/// over H_n: |H_n|⁻¹ Σ_σ π(σ) χ^W(σ [2ρ]⁻¹).
pub fn classical_spherical(shape: &Partition, pi: Pi, rho: &Partition) -> Result<Rational> {
    let n = rho.size();
    if shape.size() != 2 * n {
        return Err(Error::WeightMismatch {
            expected: 2 * n,
            got: shape.size(),
        });
    }
    let xinv = doubled_block_perm(rho).inverse();
    let h = hyperoctahedral(n);
    let mut s: i64 = 0;
    for sigma in &h {
        let parts = hyperoct_decompose(sigma)?;
        let sign = pi.value(parts.delta(), parts.iota());
        let ct = Partition::from_unsorted(sigma.compose(&xinv).cycle_type());
        s += sign * sym_character(shape, &ct)?;
    }
    Ok(Rational::new(BigInt::from(s), BigInt::from(h.len())))
}

fn cyc_rat(q: Rational) -> CycNum {
    CycNum::from_rational(q)
}

/// The closed-form value at x(ρ̲) when the row is supported on one orbit;
/// `None` for rows spread over several orbits.
pub fn closed_value(
    setup: &Setup,
    row: &IrrepLabelInfo,
    col: &MultiPartition,
) -> Result<Option<CycNum>> {
    let active: Vec<usize> = (0..row.params.len())
        .filter(|&a| !row.params[a].is_empty())
        .collect();
    if active.is_empty() {
        return Ok(Some(CycNum::one()));
    }
    if active.len() != 1 {
        return Ok(None);
    }
    let a = active[0];
    let chi = setup.fusion.g_eta_starstar[a][0];
    let mu = &row.params[a];
    let shape = setup.shapes[a];
    let v = if shape.is_pair() {
        split_value(setup, chi, mu, col)?
    } else {
        self_paired_value(setup, chi, shape, mu, col)?
    };
    Ok(Some(v))
}

/// ν^n ω(ρ̂) Π_R conj χ(g_R)^{ℓ(ρ(R))} / (dim V_χ)^n for χ = conj(χ)⊗ξ, with ω
/// the classical spherical function of the shape W(μ). On a complex class
/// where ξ ≠ 1, conj χ(g_R) = ξ(g_R) χ(g_R) differs from χ(g_R) and only the
/// conjugate agrees with the convolution.
fn self_paired_value(
    setup: &Setup,
    chi: usize,
    shape: PairShape,
    mu: &Partition,
    col: &MultiPartition,
) -> Result<CycNum> {
    let data = setup.data;
    let n = setup.n() as u32;
    let nu = data.nu2(setup.xi(), chi)?;
    let (w, _) = shape.shapes(mu)?;
    let pi_eff = if nu == -1 {
        setup.pi().twist_delta()
    } else {
        setup.pi()
    };
    let omega = classical_spherical(&w, pi_eff, &col.hat())?;
    let mut v = cyc_rat(omega * Rational::from_integer(BigInt::from(nu).pow(n)));
    v = v * cyc_rat(Rational::new(
        BigInt::one(),
        BigInt::from(data.degree(chi)).pow(n),
    ));
    for (r, p) in col.components().iter().enumerate() {
        if !p.is_empty() {
            v = v * data
                .chi(chi, setup.fusion.g_starstar[r].rep)
                .conjugate()
                .pow(p.len() as u32);
        }
    }
    Ok(v)
}

/// χ^μ_{ρ̂} / (2ⁿ dim S^μ(χ)) Π_R Π_i (conj ξ(g_R) χ(g_R) + ε_π^{ρ_i−1} conj χ(g_R)),
/// with dim S^μ(χ) = (dim V_χ)ⁿ f^μ. Under δ the value is sgn(x(ρ̲)) times
/// the value for π⊗δ at μ′, since tensoring with the sign of S_{2n}
/// exchanges the two and transposes every component.
fn split_value(setup: &Setup, chi: usize, mu: &Partition, col: &MultiPartition) -> Result<CycNum> {
    let data = setup.data;
    let n = setup.n();
    let pi = setup.pi();
    let (param, sign) = if pi.has_delta() {
        let sign = if col.total_len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        (mu.transpose(), sign)
    } else {
        (mu.clone(), 1)
    };
    let eps = pi.epsilon();
    let ch = sym_character(&param, &col.hat())?;
    if ch == 0 {
        return Ok(CycNum::zero());
    }
    let denom = BigInt::from(2).pow(n as u32)
        * BigInt::from(data.degree(chi)).pow(n as u32)
        * BigInt::from(param.dim());
    let mut v = cyc_rat(Rational::new(BigInt::from(ch * sign), denom));
    let xi = setup.xi();
    for (r, p) in col.components().iter().enumerate() {
        let g = setup.fusion.g_starstar[r].rep;
        let a = data.chi(xi, g).conjugate() * data.chi(chi, g);
        let b = data.chi(chi, g).conjugate();
        for &part in p.parts() {
            let factor = if eps == 1 || part % 2 == 1 {
                &a + &b
            } else {
                &a - &b
            };
            v = v * factor;
        }
    }
    Ok(v)
}

/// η(y⁻¹) χ(x⁻¹y) / χ(1).
pub fn delta_pair_spherical(
    data: &GroupData,
    eta: usize,
    chi: usize,
    x: usize,
    y: usize,
) -> CycNum {
    let g = data.group();
    let v = data.chi(eta, g.inv(y)) * data.chi(chi, g.mul(g.inv(x), y));
    v * cyc_rat(Rational::new(BigInt::one(), BigInt::from(data.degree(chi))))
}

/// |G|⁻¹ Σ_g conj η(g) · χ(g x⁻¹) (η⊗conj χ)(g y⁻¹), the convolution over ΔG.
pub fn delta_pair_brute(data: &GroupData, eta: usize, chi: usize, x: usize, y: usize) -> CycNum {
    let g = data.group();
    let mut s = CycNum::zero();
    for e in 0..g.order() {
        let a = g.mul(e, g.inv(x));
        let b = g.mul(e, g.inv(y));
        let term = data.chi(eta, e).conjugate()
            * data.chi(chi, a)
            * data.chi(eta, b)
            * data.chi(chi, b).conjugate();
        s += &term;
    }
    s * cyc_rat(Rational::new(BigInt::one(), BigInt::from(g.order())))
}
