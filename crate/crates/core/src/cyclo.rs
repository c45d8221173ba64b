//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! A [`Cyclotomic`] stores a conductor `N` and the coefficients of a
//! polynomial in ζ_N of degree below φ(N), reduced modulo the N-th
//! cyclotomic polynomial Φ_N. Reduction modulo Φ_N (rather than x^N − 1)
//! makes the representation unique for a fixed conductor, so equality is a
//! coefficient comparison after embedding both operands into Q(ζ_L) with
//! L = lcm of the conductors.
//!
//! Conductors are normalised so that N ≢ 2 (mod 4) (Q(ζ_{2m}) = Q(ζ_m) for
//! odd m), and any value that turns out to be rational is stored with
//! conductor 1. No further subfield descent is attempted.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{Coefficient, Scalar};

/// An element of Q(ζ_N) with exact rational coefficients of type `Q`.
#[derive(Clone, Debug)]
pub struct Cyclotomic<Q> {
    conductor: u32,
    coeffs: Vec<Q>,
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn poly_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the monic integer polynomial Φ_n.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = exact_div(&num, &div);
        }
    }
    let arc = Arc::new(num);
    poly_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qn = num.len() - 1 - dn;
    let mut quot = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Normalised conductor for `n`: Q(ζ_{2m}) is identified with Q(ζ_m) for odd m.
fn normal_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

/// Rewrites ζ_n^k in the normalised conductor: returns (negate?, exponent).
fn normal_exponent(n: u32, k: i64) -> (bool, u32) {
    let k = k.rem_euclid(n as i64) as u32;
    if n % 4 == 2 {
        let m = n / 2;
        // ζ_{2m} = −ζ_m^{(m+1)/2} for odd m.
        let e = ((k as u64 * (m as u64).div_ceil(2)) % m as u64) as u32;
        (k % 2 == 1, e)
    } else {
        (false, k)
    }
}

/// Reduces a dense polynomial modulo Φ_n, returning φ(n) coefficients.
fn reduce<Q: Coefficient>(mut poly: Vec<Q>, n: u32) -> Vec<Q> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if poly.len() < deg {
        poly.resize(deg, Q::zero());
        return poly;
    }
    for i in (deg..poly.len()).rev() {
        if poly[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[i], Q::zero());
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                let t = c.clone() * Q::from_int(pj);
                poly[i - deg + j] = poly[i - deg + j].clone() - t;
            }
        }
    }
    poly.truncate(deg);
    poly
}

impl<Q: Coefficient> Cyclotomic<Q> {
    fn finish(conductor: u32, coeffs: Vec<Q>) -> Self {
        debug_assert_eq!(coeffs.len() as u32, euler_phi(conductor));
        if conductor > 1 && coeffs[1..].iter().all(Zero::is_zero) {
            let c = coeffs.into_iter().next().unwrap();
            return Cyclotomic {
                conductor: 1,
                coeffs: vec![c],
            };
        }
        Cyclotomic { conductor, coeffs }
    }

    /// Builds Σ c_k ζ_N^k from arbitrary integer exponents and reduces it.
    pub fn canonicalize<I>(conductor: u32, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Q)>,
    {
        if conductor < 1 {
            return Err(Error::InvalidConductor(conductor as i64));
        }
        let m = normal_conductor(conductor);
        let mut dense = vec![Q::zero(); m as usize];
        for (k, c) in raw {
            let (neg, e) = normal_exponent(conductor, k);
            let slot = &mut dense[e as usize];
            *slot = if neg {
                slot.clone() - c
            } else {
                slot.clone() + c
            };
        }
        Ok(Self::finish(m, reduce(dense, m)))
    }

    pub fn from_rational(q: Q) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Q::from_int(v))
    }

    /// ζ_n^k.
    pub fn zeta(n: u32, k: i64) -> Self {
        Self::canonicalize(n.max(1), [(k, Q::one())]).expect("positive conductor")
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients on the power basis 1, ζ, …, ζ^{φ(N)−1}.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn try_rational(&self) -> Option<Q> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Integer value, when the number is a rational integer.
    pub fn try_integer(&self) -> Option<i64> {
        let q = self.try_rational()?;
        let big = q.to_big();
        if !big.is_integer() {
            return None;
        }
        i64::try_from(big.to_integer()).ok()
    }

    /// Coefficient vector after embedding into Q(ζ_target); `target` must be
    /// a multiple of the conductor.
    fn embed(&self, target: u32) -> Vec<Q> {
        if target == self.conductor {
            return self.coeffs.clone();
        }
        debug_assert_eq!(target % self.conductor, 0);
        let step = (target / self.conductor) as usize;
        let mut dense = vec![Q::zero(); target as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[k * step] = c.clone();
            }
        }
        reduce(dense, target)
    }

    fn common(&self, other: &Self) -> u32 {
        self.conductor.lcm(&other.conductor)
    }

    /// Galois automorphism ζ_N ↦ ζ_N^a (gcd(a, N) = 1).
    pub fn galois(&self, a: i64) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let raw = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64 * a, c.clone()));
        Self::canonicalize(n, raw).expect("positive conductor")
    }

    pub fn conjugate(&self) -> Self {
        self.galois(self.conductor as i64 - 1)
    }

    /// Multiplicative inverse via the product of the nontrivial Galois
    /// conjugates; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.try_rational() {
            return Some(Self::from_rational(Q::one() / q));
        }
        let n = self.conductor as i64;
        let mut others = Self::one();
        for a in 2..n {
            if a.gcd(&n) == 1 {
                others = others * self.galois(a);
            }
        }
        let norm = (self.clone() * others.clone())
            .try_rational()
            .expect("field norm is rational");
        Some(others * Self::from_rational(Q::one() / norm))
    }

    pub fn pow(&self, exp: u32) -> Self {
        crate::scalar::pow(self, exp)
    }
}

impl<Q: Coefficient> PartialEq for Cyclotomic<Q> {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        // Distinct conductors can still agree (only rationality is detected
        // on construction), so compare in the common field.
        let l = self.common(other);
        self.embed(l) == other.embed(l)
    }
}

impl<Q: Coefficient> Eq for Cyclotomic<Q> {}

impl<Q: Coefficient> Zero for Cyclotomic<Q> {
    fn zero() -> Self {
        Self::from_rational(Q::zero())
    }

    fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }
}

impl<Q: Coefficient> One for Cyclotomic<Q> {
    fn one() -> Self {
        Self::from_rational(Q::one())
    }
}

fn add_impl<Q: Coefficient>(a: &Cyclotomic<Q>, b: &Cyclotomic<Q>, negate_b: bool) -> Cyclotomic<Q> {
    if a.conductor == 1 && b.conductor == 1 {
        let v = if negate_b {
            a.coeffs[0].clone() - b.coeffs[0].clone()
        } else {
            a.coeffs[0].clone() + b.coeffs[0].clone()
        };
        return Cyclotomic::from_rational(v);
    }
    let l = a.common(b);
    let mut x = a.embed(l);
    let y = b.embed(l);
    for (xi, yi) in x.iter_mut().zip(y) {
        *xi = if negate_b {
            xi.clone() - yi
        } else {
            xi.clone() + yi
        };
    }
    Cyclotomic::finish(l, x)
}

fn mul_impl<Q: Coefficient>(a: &Cyclotomic<Q>, b: &Cyclotomic<Q>) -> Cyclotomic<Q> {
    if a.conductor == 1 || b.conductor == 1 {
        let (r, other) = if a.conductor == 1 { (a, b) } else { (b, a) };
        let r = &r.coeffs[0];
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        let coeffs = other.coeffs.iter().map(|c| c.clone() * r.clone()).collect();
        return Cyclotomic::finish(other.conductor, coeffs);
    }
    let l = a.common(b);
    let x = a.embed(l);
    let y = b.embed(l);
    let mut prod = vec![Q::zero(); x.len() + y.len() - 1];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                prod[i + j] = prod[i + j].clone() + xi.clone() * yj.clone();
            }
        }
    }
    Cyclotomic::finish(l, reduce(prod, l))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<Q: Coefficient> $trait<&Cyclotomic<Q>> for &Cyclotomic<Q> {
            type Output = Cyclotomic<Q>;
            fn $method(self, rhs: &Cyclotomic<Q>) -> Cyclotomic<Q> {
                $body(self, rhs)
            }
        }
        impl<Q: Coefficient> $trait<Cyclotomic<Q>> for Cyclotomic<Q> {
            type Output = Cyclotomic<Q>;
            fn $method(self, rhs: Cyclotomic<Q>) -> Cyclotomic<Q> {
                $body(&self, &rhs)
            }
        }
        impl<Q: Coefficient> $trait<&Cyclotomic<Q>> for Cyclotomic<Q> {
            type Output = Cyclotomic<Q>;
            fn $method(self, rhs: &Cyclotomic<Q>) -> Cyclotomic<Q> {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);

impl<Q: Coefficient> AddAssign<&Cyclotomic<Q>> for Cyclotomic<Q> {
    fn add_assign(&mut self, rhs: &Cyclotomic<Q>) {
        *self = add_impl(self, rhs, false);
    }
}

impl<Q: Coefficient> SubAssign<&Cyclotomic<Q>> for Cyclotomic<Q> {
    fn sub_assign(&mut self, rhs: &Cyclotomic<Q>) {
        *self = add_impl(self, rhs, true);
    }
}

impl<Q: Coefficient> MulAssign<&Cyclotomic<Q>> for Cyclotomic<Q> {
    fn mul_assign(&mut self, rhs: &Cyclotomic<Q>) {
        *self = mul_impl(self, rhs);
    }
}

impl<Q: Coefficient> Neg for Cyclotomic<Q> {
    type Output = Cyclotomic<Q>;
    fn neg(self) -> Cyclotomic<Q> {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<Q: Coefficient> Neg for &Cyclotomic<Q> {
    type Output = Cyclotomic<Q>;
    fn neg(self) -> Cyclotomic<Q> {
        -self.clone()
    }
}

impl<Q: Coefficient> std::iter::Sum for Cyclotomic<Q> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<Q: Coefficient> Scalar for Cyclotomic<Q> {
    type Rational = Q;

    fn from_rational(q: Q) -> Self {
        Cyclotomic::from_rational(q)
    }

    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn as_rational(&self) -> Option<Q> {
        self.try_rational()
    }
}

// Text form: "c0 + c1*z(N)^k1 - z(N)^k2 ...".

impl<Q: Coefficient> fmt::Display for Cyclotomic<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "z({})", self.conductor)?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

fn parse_term<Q: Coefficient>(term: &str, negative: bool) -> Result<Cyclotomic<Q>> {
    let bad = || Error::Parse(format!("malformed cyclotomic term '{term}'"));
    let (coef, root) = match term.find("z(") {
        None => (term, None),
        Some(0) => ("1", Some(term)),
        Some(pos) => {
            let head = term[..pos].strip_suffix('*').ok_or_else(bad)?;
            (head, Some(&term[pos..]))
        }
    };
    let mut c: Q = coef.parse().map_err(|_| bad())?;
    if negative {
        c = -c;
    }
    match root {
        None => Ok(Cyclotomic::from_rational(c)),
        Some(root) => {
            let rest = root.strip_prefix("z(").ok_or_else(bad)?;
            let close = rest.find(')').ok_or_else(bad)?;
            let n: u32 = rest[..close].parse().map_err(|_| bad())?;
            let tail = &rest[close + 1..];
            let k: i64 = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?
            };
            if n < 1 {
                return Err(Error::InvalidConductor(n as i64));
            }
            Cyclotomic::canonicalize(n, [(k, c)])
        }
    }
}

impl<Q: Coefficient> FromStr for Cyclotomic<Q> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cyclotomic text".into()));
        }
        let mut total = Cyclotomic::zero();
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut negative = false;
        let mut i = 0;
        if bytes[0] == b'-' || bytes[0] == b'+' {
            negative = bytes[0] == b'-';
            i = 1;
            start = 1;
        }
        while i <= bytes.len() {
            let at_end = i == bytes.len();
            // A sign directly after '^' is an exponent sign, not a separator.
            let sep = !at_end
                && (bytes[i] == b'+' || bytes[i] == b'-')
                && i > start
                && bytes[i - 1] != b'^';
            if at_end || sep {
                let term = &compact[start..i];
                if term.is_empty() {
                    return Err(Error::Parse(format!("malformed cyclotomic text '{s}'")));
                }
                total += &parse_term::<Q>(term, negative)?;
                if !at_end {
                    negative = bytes[i] == b'-';
                    start = i + 1;
                }
            }
            i += 1;
        }
        Ok(total)
    }
}

impl<Q: Coefficient> Serialize for Cyclotomic<Q> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de, Q: Coefficient> Deserialize<'de> for Cyclotomic<Q> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
