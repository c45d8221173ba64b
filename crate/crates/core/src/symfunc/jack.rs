//! Jack symmetric functions J^{(α)}_λ by Gram–Schmidt in the monomial basis.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::SymFunc;
use crate::partitions::{enumerate, factorial, MultiPartition, Partition};
use crate::Rational;

type Matrix = Vec<Vec<Rational>>;

fn rat(n: u128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

// Ways to place the parts of ρ into ℓ(μ) labelled boxes with box sums μ.
fn fillings(parts: &[usize], room: &mut [usize]) -> u128 {
    let Some((&first, rest)) = parts.split_first() else {
        return room.iter().all(|&x| x == 0) as u128;
    };
    let mut total = 0;
    for j in 0..room.len() {
        if room[j] >= first {
            room[j] -= first;
            total += fillings(rest, room);
            room[j] += first;
        }
    }
    total
}

/// [R_{ρμ}] with p_ρ = Σ_μ R_{ρμ} m_μ, indexed by reverse-lex partitions of n.
pub fn p_to_m_matrix(n: usize) -> Matrix {
    let parts = enumerate(n);
    parts
        .iter()
        .map(|rho| {
            parts
                .iter()
                .map(|mu| rat(fillings(rho.parts(), &mut mu.parts().to_vec())))
                .collect()
        })
        .collect()
}

fn invert(m: &Matrix) -> Matrix {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("invertible transition matrix");
        a.swap(col, pivot);
        let inv = Rational::one() / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = a[col][c].clone() * f.clone();
                    a[r][c] -= v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn m_to_p_cache() -> &'static Mutex<HashMap<usize, Matrix>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Matrix>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// [M_{μρ}] with m_μ = Σ_ρ M_{μρ} p_ρ.
pub fn m_to_p(n: usize) -> Matrix {
    if let Some(m) = m_to_p_cache().lock().unwrap().get(&n) {
        return m.clone();
    }
    let m = invert(&p_to_m_matrix(n));
    m_to_p_cache().lock().unwrap().insert(n, m.clone());
    m
}

fn to_p(m_coeffs: &[Rational], conv: &Matrix) -> Vec<Rational> {
    let n = m_coeffs.len();
    (0..n)
        .map(|rho| {
            let mut s = Rational::zero();
            for (mu, c) in m_coeffs.iter().enumerate() {
                if !c.is_zero() && !conv[mu][rho].is_zero() {
                    s += c.clone() * conv[mu][rho].clone();
                }
            }
            s
        })
        .collect()
}

fn weights(n: usize, alpha: &Rational) -> Vec<Rational> {
    enumerate(n)
        .iter()
        .map(|rho| {
            let mut w = rho.z_rational();
            for _ in 0..rho.len() {
                w *= alpha.clone();
            }
            w
        })
        .collect()
}

fn dot(a: &[Rational], b: &[Rational], w: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for i in 0..a.len() {
        if !a[i].is_zero() && !b[i].is_zero() {
            s += a[i].clone() * b[i].clone() * w[i].clone();
        }
    }
    s
}

type JackKey = (usize, Rational);

fn jack_cache() -> &'static Mutex<HashMap<JackKey, Vec<Vec<Rational>>>> {
    static CACHE: OnceLock<Mutex<HashMap<JackKey, Vec<Vec<Rational>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

// All J^{(α)}_λ for λ ⊢ n in the monomial basis, rows indexed like enumerate(n).
fn jack_all(n: usize, alpha: &Rational) -> Vec<Vec<Rational>> {
    let key = (n, alpha.clone());
    if let Some(v) = jack_cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let parts = enumerate(n);
    let k = parts.len();
    let conv = m_to_p(n);
    let w = weights(n, alpha);
    // Reverse-lex order lists λ before everything it dominates, so walk it
    // backwards: each m_λ is orthogonalised against the lower J's.
    let mut jm: Vec<Option<Vec<Rational>>> = vec![None; k];
    let mut jp: Vec<Option<Vec<Rational>>> = vec![None; k];
    for i in (0..k).rev() {
        let mut v: Vec<Rational> = (0..k)
            .map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let vp = to_p(&v, &conv);
        let mut vp_acc = vp.clone();
        for j in (i + 1)..k {
            let (Some(bm), Some(bp)) = (&jm[j], &jp[j]) else {
                continue;
            };
            let coef = dot(&vp, bp, &w) / dot(bp, bp, &w);
            if coef.is_zero() {
                continue;
            }
            for t in 0..k {
                v[t] -= coef.clone() * bm[t].clone();
                vp_acc[t] -= coef.clone() * bp[t].clone();
            }
        }
        jm[i] = Some(v);
        jp[i] = Some(vp_acc);
    }
    let target = rat(factorial(n));
    let out: Vec<Vec<Rational>> = jm
        .into_iter()
        .map(|v| {
            let v = v.unwrap();
            let scale = target.clone() / v[k - 1].clone();
            v.into_iter().map(|x| x * scale.clone()).collect()
        })
        .collect();
    jack_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// Monomial coefficients of J^{(α)}_λ, indexed like `enumerate(|λ|)`,
/// normalised so the coefficient of m_{1^n} is n!.
pub fn jack_m(lambda: &Partition, alpha: &Rational) -> Vec<Rational> {
    let n = lambda.size();
    let idx = enumerate(n).iter().position(|p| p == lambda).unwrap();
    jack_all(n, alpha)[idx].clone()
}

/// J^{(α)}_λ in the power-sum basis.
pub fn jack_p(lambda: &Partition, alpha: &Rational) -> SymFunc<Rational> {
    let n = lambda.size();
    let coeffs = to_p(&jack_m(lambda, alpha), &m_to_p(n));
    let mut f = SymFunc::zero(vec!["x".to_string()]);
    for (rho, c) in enumerate(n).into_iter().zip(coeffs) {
        f.add_term(MultiPartition::new(vec![rho]), c);
    }
    f
}

/// ⟨f, g⟩_α = Σ_ρ f_ρ g_ρ z_ρ α^{ℓ(ρ)} for one-letter functions.
pub fn alpha_inner(f: &SymFunc<Rational>, g: &SymFunc<Rational>, alpha: &Rational) -> Rational {
    let mut s = Rational::zero();
    for (k, c) in f.terms() {
        let d = g.coeff(k);
        if d.is_zero() {
            continue;
        }
        let rho = k.get(0);
        let mut w = rho.z_rational();
        for _ in 0..rho.len() {
            w *= alpha.clone();
        }
        s += c.clone() * d * w;
    }
    s
}
