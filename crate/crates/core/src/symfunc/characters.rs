//! Irreducible characters of S_n by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};

type Key = (Vec<usize>, Vec<usize>);

fn cache() -> &'static Mutex<HashMap<Key, i64>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// χ^λ_ρ.
pub fn sym_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::WeightMismatch {
            expected: lambda.size(),
            got: rho.size(),
        });
    }
    Ok(mn(lambda.parts(), rho.parts()))
}

// Strip rim hooks of length ρ_1 using beta numbers: a hook of length r is a
// bead moving from β to β − r onto a free position, with sign (−1)^(beads
// jumped over).
fn mn(lambda: &[usize], rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = cache().lock().unwrap().get(&key) {
        return v;
    }
    let r = rho[0];
    let rest = &rho[1..];
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let len = nb.len();
        let mut parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (len - 1 - j))
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&parts, rest);
    }
    cache().lock().unwrap().insert(key, total);
    total
}

/// The full table [χ^λ_ρ], rows and columns in reverse-lexicographic order.
pub fn character_table(n: usize) -> Vec<Vec<i64>> {
    let parts = enumerate(n);
    parts
        .iter()
        .map(|l| parts.iter().map(|r| mn(l.parts(), r.parts())).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use num_rational::BigRational;
    use num_traits::Zero;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        for rho in enumerate(5) {
            assert_eq!(sym_character(&p(&[5]), &rho).unwrap(), 1);
        }
        assert_eq!(sym_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(sym_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(sym_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(sym_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn degrees_match_hook_formula() {
        for n in 1..=8 {
            let ones = Partition::new(vec![1; n]).unwrap();
            for l in enumerate(n) {
                assert_eq!(sym_character(&l, &ones).unwrap() as u128, l.dim());
            }
        }
    }

    // Oracle: the sign character and the permutation character minus one.
    #[test]
    fn small_characters_by_direct_count() {
        for n in 2..=6 {
            let sign = Partition::new(vec![1; n]).unwrap();
            let mut std = vec![n - 1];
            std.push(1);
            let std = Partition::new(std).unwrap();
            for perm in Perm::all(n) {
                let rho = Partition::new(perm.cycle_type()).unwrap();
                assert_eq!(sym_character(&sign, &rho).unwrap(), perm.sign());
                let fixed = perm
                    .images()
                    .iter()
                    .enumerate()
                    .filter(|(i, &x)| *i == x)
                    .count() as i64;
                assert_eq!(sym_character(&std, &rho).unwrap(), fixed - 1);
            }
        }
    }

    #[test]
    fn orthogonality_up_to_seven() {
        for n in 1..=7 {
            let parts = enumerate(n);
            let table = character_table(n);
            for (a, ra) in table.iter().enumerate() {
                for (b, rb) in table.iter().enumerate() {
                    let mut s = BigRational::zero();
                    for (k, rho) in parts.iter().enumerate() {
                        s += BigRational::new((ra[k] * rb[k]).into(), (rho.z() as i64).into());
                    }
                    let expect = if a == b { 1 } else { 0 };
                    assert_eq!(s, BigRational::from_integer(expect.into()));
                }
            }
        }
    }
}
