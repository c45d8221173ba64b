//! Integer partitions, multipartitions and the statistics built on them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// m_i(λ).
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// (part, multiplicity) pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn transpose(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// m_i(λ ∪ μ) = m_i(λ) + m_i(μ).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }

    /// Every part multiplied by `k` (so `scale(2)` is 2λ).
    pub fn scale(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Hook lengths of every cell, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let t = self.transpose();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + t.0[j] - i - 1);
            }
        }
        out
    }

    /// h_λ, the product of hook lengths.
    pub fn hook_product(&self) -> u128 {
        self.hooks().iter().map(|&h| h as u128).product()
    }

    /// f^λ = |λ|!/h_λ, the number of standard tableaux.
    pub fn dim(&self) -> u128 {
        factorial(self.size()) / self.hook_product()
    }

    /// z_λ = Π r^{m_r} m_r!.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .iter()
            .map(|&(r, m)| (r as u128).pow(m as u32) * factorial(m))
            .product()
    }

    pub fn z_rational(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.z()))
    }

    fn require_strict(&self) -> Result<()> {
        if self.is_strict() {
            Ok(())
        } else {
            Err(Error::NotStrict(self.to_string()))
        }
    }

    /// g^λ, the number of standard shifted tableaux of a strict shape.
    pub fn shifted_tableaux(&self) -> Result<u128> {
        self.require_strict()?;
        Ok(count_shifted(&self.0))
    }

    /// h̄_λ = |λ|!/g^λ, the product of shifted hook lengths.
    pub fn shifted_hook_product(&self) -> Result<u128> {
        Ok(factorial(self.size()) / self.shifted_tableaux()?)
    }

    /// D(μ): the partition with Frobenius symbol (μ_1 … μ_d | μ_1−1 … μ_d−1).
    pub fn doubling(&self) -> Result<Partition> {
        self.require_strict()?;
        let d = self.len();
        let mut rows: Vec<usize> = Vec::new();
        let set = |i: usize, j: usize, rows: &mut Vec<usize>| {
            if rows.len() <= i {
                rows.resize(i + 1, 0);
            }
            rows[i] = rows[i].max(j + 1);
        };
        for k in 0..d {
            let arm = self.0[k];
            let leg = self.0[k] - 1;
            set(k, k + arm, &mut rows);
            for i in k..=k + leg {
                set(i, k, &mut rows);
            }
        }
        Ok(Partition(rows))
    }

    /// Removes one cell from row `i`, if the result is a partition.
    pub fn remove_cell(&self, i: usize) -> Option<Partition> {
        let p = self.0.get(i)?;
        if self.0.get(i + 1).is_some_and(|&q| q == *p) {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        if v[i] == 0 {
            v.pop();
        }
        Some(Partition(v))
    }

    /// Dominance order: λ ≥ μ iff every partial sum of λ dominates.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }
}

fn shifted_cache() -> &'static Mutex<HashMap<Vec<usize>, u128>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, u128>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

// Remove the largest entry (a corner of the shifted diagram) in every
// possible position.
fn count_shifted(parts: &[usize]) -> u128 {
    if parts.iter().sum::<usize>() <= 1 {
        return 1;
    }
    if let Some(&v) = shifted_cache().lock().unwrap().get(parts) {
        return v;
    }
    let mut total = 0;
    for i in 0..parts.len() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        if parts[i] - 1 > next || (parts[i] == 1 && next == 0) {
            let mut v = parts.to_vec();
            v[i] -= 1;
            if v[i] == 0 {
                v.pop();
            }
            total += count_shifted(&v);
        }
    }
    shifted_cache()
        .lock()
        .unwrap()
        .insert(parts.to_vec(), total);
    total
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let items: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", items.join("+"))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition text '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` with parts at most `max`, in reverse-lexicographic order.
fn partitions_bounded(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(prefix.clone()));
        return;
    }
    for first in (1..=n.min(max)).rev() {
        prefix.push(first);
        partitions_bounded(n - first, first, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_bounded(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn strict_partitions(n: usize) -> Vec<Partition> {
    enumerate(n)
        .into_iter()
        .filter(Partition::is_strict)
        .collect()
}

pub fn odd_partitions(n: usize) -> Vec<Partition> {
    enumerate(n).into_iter().filter(Partition::is_odd).collect()
}

pub fn even_partitions(n: usize) -> Vec<Partition> {
    enumerate(n)
        .into_iter()
        .filter(Partition::is_even)
        .collect()
}

/// Glaisher's bijection SP_n → OP_n: a part 2^k·m (m odd) becomes 2^k parts m.
pub fn glaisher(strict: &Partition) -> Result<Partition> {
    strict.require_strict()?;
    let mut parts = Vec::new();
    for &p in strict.parts() {
        let k = p.trailing_zeros();
        let m = p >> k;
        parts.extend(std::iter::repeat_n(m, 1 << k));
    }
    Ok(Partition::from_unsorted(parts))
}

/// Inverse of [`glaisher`]: merge equal odd parts along the binary expansion
/// of their multiplicity.
pub fn glaisher_inverse(odd: &Partition) -> Result<Partition> {
    if !odd.is_odd() {
        return Err(Error::Parse(format!("{odd} is not an odd partition")));
    }
    let mut parts = Vec::new();
    for (m, mult) in odd.multiplicities() {
        for bit in 0..usize::BITS {
            if mult >> bit & 1 == 1 {
                parts.push(m << bit);
            }
        }
    }
    Ok(Partition::from_unsorted(parts))
}

/// P_n → EP × OP: split a partition into its even and odd parts.
pub fn split_parity(p: &Partition) -> (Partition, Partition) {
    let even = p.parts().iter().copied().filter(|x| x % 2 == 0).collect();
    let odd = p.parts().iter().copied().filter(|x| x % 2 == 1).collect();
    (Partition(even), Partition(odd))
}

/// A tuple of partitions indexed by positions of an ordered label alphabet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(parts: Vec<Partition>) -> Self {
        MultiPartition(parts)
    }

    pub fn empty(labels: usize) -> Self {
        MultiPartition(vec![Partition::empty(); labels])
    }

    /// A single partition at label `at`, empty elsewhere.
    pub fn single(labels: usize, at: usize, p: Partition) -> Self {
        let mut v = vec![Partition::empty(); labels];
        v[at] = p;
        MultiPartition(v)
    }

    pub fn labels(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, label: usize) -> &Partition {
        &self.0[label]
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn union(&self, other: &MultiPartition) -> Result<MultiPartition> {
        if self.labels() != other.labels() {
            return Err(Error::AlphabetMismatch(format!(
                "{} labels vs {} labels",
                self.labels(),
                other.labels()
            )));
        }
        Ok(MultiPartition(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.union(b))
                .collect(),
        ))
    }

    /// ρ̂ = ∪_a ρ(a).
    pub fn hat(&self) -> Partition {
        Partition::from_unsorted(
            self.0
                .iter()
                .flat_map(|p| p.parts().iter().copied())
                .collect(),
        )
    }

    /// Total number of parts Σ ℓ(ρ(a)).
    pub fn total_len(&self) -> usize {
        self.0.iter().map(Partition::len).sum()
    }

    /// Π_a z_{ρ(a)}.
    pub fn z(&self) -> u128 {
        self.0.iter().map(Partition::z).product()
    }

    pub fn map(&self, f: impl Fn(&Partition) -> Partition) -> MultiPartition {
        MultiPartition(self.0.iter().map(f).collect())
    }

    /// Text form with label names: "a:2+1, b:1"; empty components omitted.
    pub fn display_with(&self, names: &[String]) -> String {
        let items: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(p, _)| !p.is_empty())
            .map(|(p, n)| format!("{n}:{p}"))
            .collect();
        if items.is_empty() {
            "0".to_string()
        } else {
            items.join(", ")
        }
    }

    /// JSON object keyed by label name (every label present).
    pub fn to_json(&self, names: &[String]) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .0
            .iter()
            .zip(names)
            .map(|(p, n)| (n.clone(), serde_json::json!(p.parts())))
            .collect();
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(Partition::to_string).collect();
        write!(f, "({})", items.join(", "))
    }
}

/// Weight vectors of length `k` summing to `n`, first coordinate largest first.
pub fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=n).rev() {
            prefix.push(first);
            go(n - first, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// All multipartitions of total weight `n` over `k` labels, choosing from
/// each label's admissible partitions via `allowed(label, size)`.
pub fn enumerate_multi_with(
    k: usize,
    n: usize,
    allowed: impl Fn(usize, usize) -> Vec<Partition>,
) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    for weights in compositions(n, k) {
        let choices: Vec<Vec<Partition>> = weights
            .iter()
            .enumerate()
            .map(|(a, &w)| allowed(a, w))
            .collect();
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        let mut idx = vec![0usize; k];
        loop {
            out.push(MultiPartition(
                idx.iter()
                    .enumerate()
                    .map(|(a, &i)| choices[a][i].clone())
                    .collect(),
            ));
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || k == 0 {
                break;
            }
        }
    }
    out
}

/// All multipartitions of total weight `n` over `k` labels.
pub fn enumerate_multi(k: usize, n: usize) -> Vec<MultiPartition> {
    enumerate_multi_with(k, n, |_, w| enumerate(w))
}
