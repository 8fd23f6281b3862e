//! Arithmetic in GF(p^k).
//!
//! Elements are integers in `[0, q)`: the base-`p` digits of an index are the
//! coefficients of the polynomial representative, lowest degree first. All
//! multiplicative work goes through log/antilog tables and addition goes
//! through a Zech-logarithm table, so every operation is a handful of lookups.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order accepted.
pub const MAX_ORDER: u64 = 1 << 20;

const NO_LOG: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum 2^20")]
    TooLarge(u64),
    #[error("modulus must be monic of degree {expected} with coefficients below p, got {got:?}")]
    BadModulus { expected: u32, got: Vec<u32> },
    #[error("modulus {0:?} is reducible")]
    Reducible(Vec<u32>),
    #[error("element {0} is not primitive")]
    NotPrimitive(u32),
    #[error("element {0} is out of range")]
    OutOfRange(u32),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("square classes of zero are undefined")]
    ZeroSquareClass,
    #[error("square classes need odd characteristic")]
    EvenCharacteristic,
    #[error("operands belong to different fields")]
    Mismatch,
    #[error("no primitive polynomial of degree {k} over GF({p})")]
    NoPrimitivePolynomial { p: u32, k: u32 },
}

/// Plan-file form of a field: `{"p": 23, "k": 2, "modulus": [19, 22, 1], "eta": 23}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldParams {
    pub p: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<u32>,
}

/// A validated finite field with its tables.
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, lowest coefficient first, length `k + 1`.
    modulus: Vec<u32>,
    eta: u32,
    /// `exp[i] = eta^i` for `i < 2(q-1)`.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[i] = log(1 + eta^i)`, or `NO_LOG` when `1 + eta^i = 0`.
    zech: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .field("eta", &self.eta)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Decomposes `q` as `p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

// Dense polynomial helpers over GF(p), lowest coefficient first. Only used
// while building tables.

fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(k as usize);
    for _ in 0..k {
        d.push(x % p);
        x /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Remainder of `a` modulo `m` (m nonzero, trimmed).
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p) as u64;
    while r.len() > dm && !r.is_empty() {
        let shift = r.len() - 1 - dm;
        let c = (*r.last().unwrap() as u64 * lead_inv) % p as u64;
        for (i, &mc) in m.iter().enumerate() {
            let idx = shift + i;
            r[idx] = ((r[idx] as u64 + (p as u64 - c) * mc as u64) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    poly_rem(&prod, m, p)
}

/// Irreducibility by trial division with every monic polynomial of degree
/// at most `deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let n = m.len() - 1;
    if n <= 1 {
        return n == 1;
    }
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for c in 0..count {
            let mut f = digits(c as u32, p, d as u32);
            f.push(1);
            if poly_rem(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^k). Without a modulus the lexicographically least monic
    /// primitive polynomial is used (coefficients compared as the base-`p`
    /// integer `c_0 + c_1 p + ...`). Without `eta` the least primitive
    /// element is chosen.
    pub fn new(
        p: u32,
        k: u32,
        modulus: Option<Vec<u32>>,
        eta: Option<u32>,
    ) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q64 = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q64 > MAX_ORDER {
            return Err(FieldError::TooLarge(q64));
        }
        let q = q64 as u32;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(FieldError::BadModulus { expected: k, got: m });
                }
                if !is_irreducible(&m, p) {
                    return Err(FieldError::Reducible(m));
                }
                m
            }
            None => Self::default_modulus(p, k)?,
        };
        let eta = match eta {
            Some(e) => {
                if e >= q {
                    return Err(FieldError::OutOfRange(e));
                }
                if Self::powers(e, p, k, &modulus).is_none() {
                    return Err(FieldError::NotPrimitive(e));
                }
                e
            }
            None => (1..q)
                .find(|&e| Self::powers(e, p, k, &modulus).is_some())
                .ok_or(FieldError::NoPrimitivePolynomial { p, k })?,
        };
        let powers = Self::powers(eta, p, k, &modulus).expect("eta checked primitive");
        Ok(Self::from_powers(p, k, q, modulus, eta, powers))
    }

    /// GF(p^k) whose primitive element is a root of `min_poly`
    /// (monic, lowest coefficient first). The element `x` of the quotient
    /// ring becomes `eta`.
    pub fn with_primitive_min_poly(p: u32, k: u32, min_poly: Vec<u32>) -> Result<Field, FieldError> {
        let x = if k == 1 {
            // In a prime field the root of x - c is c itself.
            (p - min_poly.first().copied().unwrap_or(0) % p) % p
        } else {
            p
        };
        Field::new(p, k, Some(min_poly), Some(x))
    }

    pub fn from_params(params: &FieldParams) -> Result<Field, FieldError> {
        Field::new(params.p, params.k, params.modulus.clone(), params.eta)
    }

    /// Shorthand for the default field of order `q`.
    pub fn of_order(q: u32) -> Result<Field, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
        Field::new(p, k, None, None)
    }

    pub fn params(&self) -> FieldParams {
        FieldParams {
            p: self.p,
            k: self.k,
            modulus: Some(self.modulus.clone()),
            eta: Some(self.eta),
        }
    }

    fn default_modulus(p: u32, k: u32) -> Result<Vec<u32>, FieldError> {
        if k == 1 {
            return Ok(vec![0, 1]);
        }
        let count = p.pow(k);
        for c in 0..count {
            let mut m = digits(c, p, k);
            m.push(1);
            if m[0] == 0 || !is_irreducible(&m, p) {
                continue;
            }
            if Self::powers(p, p, k, &m).is_some() {
                return Ok(m);
            }
        }
        Err(FieldError::NoPrimitivePolynomial { p, k })
    }

    /// Successive powers of `g` if `g` has multiplicative order `q - 1`.
    fn powers(g: u32, p: u32, k: u32, modulus: &[u32]) -> Option<Vec<u32>> {
        let q = p.pow(k);
        if g == 0 {
            return None;
        }
        if q == 2 {
            return (g == 1).then(|| vec![1]);
        }
        let gd = trim(digits(g, p, k));
        let mut out = Vec::with_capacity(q as usize - 1);
        let mut cur = vec![1u32];
        for i in 0..q - 1 {
            let idx = undigits(&cur, p);
            if i > 0 && idx == 1 {
                return None;
            }
            out.push(idx);
            cur = if k == 1 {
                vec![((cur.first().copied().unwrap_or(0) as u64 * g as u64) % p as u64) as u32]
            } else {
                poly_mul_mod(&cur, &gd, modulus, p)
            };
            cur = trim(cur);
        }
        (undigits(&cur, p) == 1).then_some(out)
    }

    fn from_powers(p: u32, k: u32, q: u32, modulus: Vec<u32>, eta: u32, powers: Vec<u32>) -> Field {
        let n = (q - 1) as usize;
        let mut log = vec![NO_LOG; q as usize];
        let mut exp = Vec::with_capacity(2 * n);
        for (i, &e) in powers.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        exp.extend_from_slice(&powers);
        exp.extend_from_slice(&powers);
        let add_one = |x: u32| -> u32 {
            // digit 0 is the constant coefficient
            let c0 = x % p;
            x - c0 + (c0 + 1) % p
        };
        let zech = powers
            .iter()
            .map(|&e| {
                let s = add_one(e);
                if s == 0 {
                    NO_LOG
                } else {
                    log[s as usize]
                }
            })
            .collect();
        Field { p, k, q, modulus, eta, exp, log, zech }
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed primitive element.
    #[inline]
    pub fn eta(&self) -> u32 {
        self.eta
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        if self.p == 2 {
            return a ^ b;
        }
        let n = self.q - 1;
        let la = self.log[a as usize];
        let lb = self.log[b as usize];
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[d as usize];
        if z == NO_LOG {
            0
        } else {
            self.exp[(la + z) as usize]
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 || self.p == 2 {
            return a;
        }
        // -1 = eta^((q-1)/2) in odd characteristic
        let h = (self.q - 1) / 2;
        self.exp[(self.log[a as usize] + h) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let n = self.q - 1;
        Ok(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    /// `a / b`; panics on `b = 0`.
    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        assert!(b != 0, "division by zero in GF({})", self.q);
        if a == 0 {
            return 0;
        }
        let n = self.q - 1;
        let l = self.log[a as usize] + n - self.log[b as usize];
        self.exp[(l % n) as usize]
    }

    /// `a^e`; negative exponents need `a != 0`. `0^0 = 1`.
    pub fn pow(&self, a: u32, e: i64) -> Result<u32, FieldError> {
        if e == 0 {
            return Ok(1);
        }
        if a == 0 {
            return if e > 0 { Ok(0) } else { Err(FieldError::ZeroInverse) };
        }
        let n = (self.q - 1) as i64;
        let l = (self.log[a as usize] as i64 * e).rem_euclid(n);
        Ok(self.exp[l as usize])
    }

    /// `eta^i` for any integer `i`.
    #[inline]
    pub fn eta_pow(&self, i: i64) -> u32 {
        let n = (self.q - 1) as i64;
        self.exp[i.rem_euclid(n) as usize]
    }

    /// Discrete log to base `eta`; `None` for zero.
    #[inline]
    pub fn log(&self, a: u32) -> Option<u32> {
        let l = self.log[a as usize];
        (l != NO_LOG).then_some(l)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.q - 1;
        Some(n / gcd(n, l))
    }

    /// Frobenius map `a -> a^p`.
    #[inline]
    pub fn frobenius(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] as u64 * self.p as u64) % n as u64) as usize]
    }

    /// True iff `a` is a nonzero square; defined for odd characteristic.
    pub fn is_square(&self, a: u32) -> Result<bool, FieldError> {
        if self.p == 2 {
            return Err(FieldError::EvenCharacteristic);
        }
        if a == 0 {
            return Err(FieldError::ZeroSquareClass);
        }
        if a >= self.q {
            return Err(FieldError::OutOfRange(a));
        }
        // a^((q-1)/2) = 1 exactly when log(a) is even
        Ok(self.log[a as usize] % 2 == 0)
    }

    /// Embeds an integer via its residue mod `p`.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    pub fn element(self: &Arc<Self>, index: u32) -> Result<FieldElement, FieldError> {
        if index >= self.q {
            return Err(FieldError::OutOfRange(index));
        }
        Ok(FieldElement { field: Arc::clone(self), index })
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An element tied to its field. Mixing elements of different fields is an
/// error, never a coercion. Hot loops use the raw `u32` methods on [`Field`].
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<Field>,
    index: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@GF({})", self.index, self.field.q)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && *self.field == *other.field
    }
}

impl FieldElement {
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    fn same(&self, other: &FieldElement) -> Result<(), FieldError> {
        if Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field {
            Ok(())
        } else {
            Err(FieldError::Mismatch)
        }
    }

    fn wrap(&self, index: u32) -> FieldElement {
        FieldElement { field: Arc::clone(&self.field), index }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same(other)?;
        Ok(self.wrap(self.field.add(self.index, other.index)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same(other)?;
        Ok(self.wrap(self.field.sub(self.index, other.index)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same(other)?;
        Ok(self.wrap(self.field.mul(self.index, other.index)))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.index))
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        Ok(self.wrap(self.field.inv(self.index)?))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement, FieldError> {
        Ok(self.wrap(self.field.pow(self.index, e)?))
    }

    pub fn is_square(&self) -> Result<bool, FieldError> {
        self.field.is_square(self.index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_defaults() {
        let f = Field::new(2, 1, None, None).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.eta(), 1);
        assert_eq!(f.add(1, 1), 0);
    }

    #[test]
    fn gf5_inverse_and_squares() {
        let f = Field::of_order(5).unwrap();
        assert_eq!(f.inv(2).unwrap(), 3);
        assert!(f.is_square(4).unwrap());
        assert!(!f.is_square(2).unwrap());
        assert_eq!(f.inv(0), Err(FieldError::ZeroInverse));
        assert_eq!(f.is_square(0), Err(FieldError::ZeroSquareClass));
    }

    #[test]
    fn gf8_default_modulus_is_x3_x_1() {
        let f = Field::of_order(8).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
        // x = 0b010, x^2 = 0b100, x^3 = x + 1 = 0b011
        assert_eq!(f.mul(2, 4), 3);
    }

    #[test]
    fn gf9_eta_has_order_eight() {
        let f = Field::of_order(9).unwrap();
        let eta = f.eta();
        assert_eq!(f.pow(eta, 8).unwrap(), 1);
        assert_eq!(f.pow(eta, 4).unwrap(), f.neg(1));
        assert_eq!(f.mult_order(eta), Some(8));
        assert!(f.is_square(f.mul(eta, eta)).unwrap());
        assert!(f.is_square(2).is_ok());
    }

    #[test]
    fn gf529_accepts_root_of_x2_minus_x_minus_4() {
        // x^2 - x - 4 over GF(23): coefficients (-4, -1, 1) = (19, 22, 1)
        let f = Field::with_primitive_min_poly(23, 2, vec![19, 22, 1]).unwrap();
        let eta = f.eta();
        assert_eq!(f.mul(eta, eta), f.add(eta, 4));
        assert_eq!(f.mult_order(eta), Some(528));
        // The same eta found inside the default GF(529) is also accepted.
        let g = Field::of_order(529).unwrap();
        let root = (0..529)
            .find(|&x| g.mul(x, x) == g.add(x, 4) && g.mult_order(x) == Some(528))
            .unwrap();
        let h = Field::new(23, 2, None, Some(root)).unwrap();
        assert_eq!(h.eta(), root);
    }

    #[test]
    fn errors() {
        assert_eq!(Field::new(4, 1, None, None).unwrap_err(), FieldError::NotPrime(4));
        assert!(matches!(Field::new(2, 21, None, None), Err(FieldError::TooLarge(_))));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(
            Field::new(2, 2, Some(vec![1, 0, 1]), None),
            Err(FieldError::Reducible(_))
        ));
        // x^2 + 1 is irreducible over GF(3) but x has order 4
        assert!(matches!(
            Field::new(3, 2, Some(vec![1, 0, 1]), Some(3)),
            Err(FieldError::NotPrimitive(3))
        ));
        let f = Arc::new(Field::of_order(5).unwrap());
        let g = Arc::new(Field::of_order(7).unwrap());
        let a = f.element(2).unwrap();
        let b = g.element(2).unwrap();
        assert_eq!(a.add(&b), Err(FieldError::Mismatch));
        assert_eq!(a.mul(&a).unwrap().index(), 4);
    }

    #[test]
    fn square_classes_split_evenly() {
        for q in [3u32, 5, 7, 9, 25, 27, 49, 121] {
            let f = Field::of_order(q).unwrap();
            let sq = (1..q).filter(|&a| f.is_square(a).unwrap()).count();
            assert_eq!(sq as u32, (q - 1) / 2, "q={q}");
            // the exponent test agrees with explicit squaring
            let explicit: std::collections::HashSet<u32> = (1..q).map(|b| f.mul(b, b)).collect();
            assert_eq!(explicit.len(), sq);
        }
    }

    #[test]
    fn eta_generates() {
        for q in [2u32, 3, 4, 8, 16, 27, 32, 125, 256] {
            let f = Field::of_order(q).unwrap();
            let orbit: std::collections::HashSet<u32> = (0..q as i64 - 1).map(|i| f.eta_pow(i)).collect();
            assert_eq!(orbit.len() as u32, q - 1);
        }
    }
}
