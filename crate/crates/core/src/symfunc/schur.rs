//! Schur functions and Schur Q-functions in the power-sum basis.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::characters::sym_character;
use super::SymFunc;
use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};
use crate::Rational;

type RFun = SymFunc<Rational>;

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// s_λ = Σ_ρ z_ρ^{-1} χ^λ_ρ p_ρ.
pub fn schur_p(lambda: &Partition) -> RFun {
    let mut f = RFun::zero(vec!["x".to_string()]);
    for rho in enumerate(lambda.size()) {
        let chi = sym_character(lambda, &rho).expect("same size");
        if chi != 0 {
            let c = rat(chi) / rho.z_rational();
            f.add_term(crate::partitions::MultiPartition::new(vec![rho]), c);
        }
    }
    f
}

fn q_cache() -> &'static Mutex<Vec<RFun>> {
    static CACHE: OnceLock<Mutex<Vec<RFun>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![RFun::one(vec!["x".to_string()])]))
}

/// q_r, defined by Σ_r q_r t^r = exp(2 Σ_{r odd} p_r t^r / r).
///
/// Differentiating the series gives r q_r = Σ_{k odd} 2 p_k q_{r−k}.
pub fn q_function(r: usize) -> RFun {
    let mut cache = q_cache().lock().unwrap();
    while cache.len() <= r {
        let m = cache.len();
        let mut acc = RFun::zero(vec!["x".to_string()]);
        for k in (1..=m).step_by(2) {
            let pk = RFun::single(Partition::new(vec![k]).unwrap(), rat(2));
            acc = acc.add(&pk.multiply(&cache[m - k]).unwrap()).unwrap();
        }
        let q = acc.scale(&(Rational::one() / rat(m as i64)));
        cache.push(q);
    }
    cache[r].clone()
}

// Q_(a,b) for a > b ≥ 0.
fn q_two(a: usize, b: usize) -> RFun {
    let mut f = q_function(a).multiply(&q_function(b)).unwrap();
    for i in 1..=b {
        let sign = if i % 2 == 0 { 2 } else { -2 };
        let term = q_function(a + i).multiply(&q_function(b - i)).unwrap();
        f = f.add(&term.scale(&rat(sign))).unwrap();
    }
    f
}

fn schur_q_cache() -> &'static Mutex<HashMap<Vec<usize>, RFun>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, RFun>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

// Pfaffian expansion along the first row of [Q_(λ_i, λ_j)].
fn pfaffian(parts: &[usize]) -> RFun {
    if parts.is_empty() {
        return RFun::one(vec!["x".to_string()]);
    }
    if let Some(f) = schur_q_cache().lock().unwrap().get(parts) {
        return f.clone();
    }
    let mut total = RFun::zero(vec!["x".to_string()]);
    for j in 1..parts.len() {
        let rest: Vec<usize> = parts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != 0 && k != j)
            .map(|(_, &x)| x)
            .collect();
        let term = q_two(parts[0], parts[j])
            .multiply(&pfaffian(&rest))
            .unwrap();
        let sign = if j % 2 == 1 { 1 } else { -1 };
        total = total.add(&term.scale(&rat(sign))).unwrap();
    }
    schur_q_cache()
        .lock()
        .unwrap()
        .insert(parts.to_vec(), total.clone());
    total
}

/// Schur's Q-function Q_λ for a strict partition λ.
pub fn schur_q(lambda: &Partition) -> Result<RFun> {
    if !lambda.is_strict() {
        return Err(Error::NotStrict(lambda.to_string()));
    }
    let mut parts = lambda.parts().to_vec();
    if parts.len() == 1 {
        return Ok(q_function(parts[0]));
    }
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    Ok(pfaffian(&parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{strict_partitions, MultiPartition};
    use num_integer::Integer;
    use num_traits::Zero;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn schur_examples() {
        let s1 = schur_p(&p(&[1]));
        assert_eq!(s1.coeff1(&p(&[1])), r(1, 1));
        assert_eq!(s1.len(), 1);
        let s2 = schur_p(&p(&[2]));
        assert_eq!(s2.coeff1(&p(&[1, 1])), r(1, 2));
        assert_eq!(s2.coeff1(&p(&[2])), r(1, 2));
        let s11 = schur_p(&p(&[1, 1]));
        assert_eq!(s11.coeff1(&p(&[1, 1])), r(1, 2));
        assert_eq!(s11.coeff1(&p(&[2])), r(-1, 2));
    }

    // Oracle: expand exp(X) = Σ X^k / k! directly, truncated at degree r.
    fn q_by_exp(r: usize) -> RFun {
        let x = vec!["x".to_string()];
        let mut gen = RFun::zero(x.clone());
        for k in (1..=r).step_by(2) {
            gen.add_term(
                MultiPartition::new(vec![p(&[k])]),
                Rational::new(2.into(), (k as i64).into()),
            );
        }
        let mut total = RFun::one(x.clone());
        let mut power = RFun::one(x);
        let mut fact = Rational::one();
        for k in 1..=r {
            power = power.multiply(&gen).unwrap();
            fact *= rat(k as i64);
            total = total
                .add(&power.scale(&(Rational::one() / fact.clone())))
                .unwrap();
        }
        let mut out = RFun::zero(vec!["x".to_string()]);
        for (key, c) in total.terms() {
            if key.weight() == r {
                out.add_term(key.clone(), c.clone());
            }
        }
        out
    }

    #[test]
    fn q_series_examples() {
        assert_eq!(schur_q(&p(&[1])).unwrap(), RFun::single(p(&[1]), rat(2)));
        let q2 = schur_q(&p(&[2])).unwrap();
        assert_eq!(q2, RFun::single(p(&[1, 1]), rat(2)));
        let q3 = q_function(3);
        assert_eq!(q3.coeff1(&p(&[1, 1, 1])), r(4, 3));
        assert_eq!(q3.coeff1(&p(&[3])), r(2, 3));
        for n in 0..=7 {
            assert_eq!(q_function(n), q_by_exp(n), "q_{n}");
        }
        assert!(schur_q(&p(&[1, 1])).is_err());
    }

    #[test]
    fn q_functions_supported_on_odd_partitions() {
        for n in 1..=6 {
            for l in strict_partitions(n) {
                let f = schur_q(&l).unwrap();
                assert_eq!(f.degree(), Some(n));
                for (k, _) in f.terms() {
                    assert!(k.get(0).is_odd(), "Q_{l} has p_{}", k.get(0));
                }
            }
        }
    }

    // ⟨p_ρ, p_σ⟩ = δ z_ρ 2^{−ℓ(ρ)} makes ⟨Q_λ, Q_μ⟩ = 2^{ℓ(λ)} δ_{λμ}.
    #[test]
    fn q_functions_orthogonal() {
        for n in 1..=6 {
            let strict = strict_partitions(n);
            let qs: Vec<RFun> = strict.iter().map(|l| schur_q(l).unwrap()).collect();
            for (i, a) in qs.iter().enumerate() {
                for (j, b) in qs.iter().enumerate() {
                    let mut s = Rational::zero();
                    for (k, c) in a.terms() {
                        let rho = k.get(0);
                        let w = rho.z_rational() / rat(1i64 << rho.len());
                        s += c.clone() * b.coeff(k) * w;
                    }
                    let expect = if i == j {
                        rat(1i64 << strict[i].len())
                    } else {
                        rat(0)
                    };
                    assert_eq!(s, expect, "<Q_{}, Q_{}>", strict[i], strict[j]);
                }
            }
        }
    }

    // Every coefficient of Q_λ is 2^{ℓ(λ)} times a rational with odd denominator.
    #[test]
    fn q_coefficients_two_adic() {
        for n in 1..=6 {
            for l in strict_partitions(n) {
                let f = schur_q(&l).unwrap();
                for (k, c) in f.terms() {
                    let scaled = c.clone() / rat(1i64 << l.len());
                    assert!(
                        scaled.denom().is_odd(),
                        "Q_{l} coefficient {c} at {}",
                        k.get(0)
                    );
                }
            }
        }
    }
}
