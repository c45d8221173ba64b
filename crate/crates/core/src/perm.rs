//! Permutations of {0, …, n−1} in one-line form.
//!
//! Composition follows function notation: `p.compose(q)` is x ↦ p(q(x)).
//! Input and output use 1-indexed cycle notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm(Vec<usize>);

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Perm::from_images(v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.0
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Validates a 0-indexed one-line image vector.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of degree `n` from 1-indexed cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || touched[a - 1] {
                    return Err(Error::Parse(format!("bad cycle {cycle:?} for degree {n}")));
                }
                touched[a - 1] = true;
                let b = cycle[(k + 1) % cycle.len()];
                if b == 0 || b > n {
                    return Err(Error::Parse(format!("bad cycle {cycle:?} for degree {n}")));
                }
                images[a - 1] = b - 1;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// x ↦ self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles (including fixed points), each starting at its least element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i64 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Direct sum: `self` acts on the first block, `other` on the next.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let k = self.degree();
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + k));
        Perm(v)
    }

    /// All permutations of degree `n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles() {
            if c.len() < 2 {
                continue;
            }
            any = true;
            let items: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", items.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
