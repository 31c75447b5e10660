//! Arithmetic in `F_q`, `q = p^m <= 2^16`, backed by discrete log / antilog
//! tables with respect to a fixed primitive element.
//!
//! An element is stored as its integer representation in `[0, q)`: the base-`p`
//! digits of the representation are the coefficients (low degree first) of the
//! residue polynomial modulo the defining irreducible polynomial. For `m = 1`
//! the representation is simply the residue mod `p`.

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest supported field order.
pub const MAX_Q: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("modulus {0:?} is reducible over F_p")]
    ReducibleModulus(Vec<u32>),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("unsupported field order q = {0} (need 3 <= q <= 65536)")]
    UnsupportedQ(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element representation {repr} does not belong to F_{q}")]
    FieldMismatch { repr: u64, q: u64 },
}

/// An element of `F_q`, identified by its representation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn repr(self) -> u32 {
        self.0 as u32
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u32(self.repr())
    }
}

#[derive(Debug)]
enum Addition {
    /// `m = 1`: residues mod p.
    Prime,
    /// `p = 2`: digit-wise addition is XOR.
    Binary,
    /// Small odd-characteristic extension: full `q x q` table.
    Table(Vec<u16>),
    /// Larger odd-characteristic extension: digit-wise mod p.
    Digits,
}

#[derive(Debug)]
struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: FieldElem,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    /// `exp[k] = generator^k` for `k < 2(q-1)`, doubled to avoid a reduction
    /// after adding two logs.
    exp: Vec<u16>,
    neg: Vec<u16>,
    addition: Addition,
}

/// A validated finite field together with its log/antilog tables.
///
/// Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Tables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p())
            .field("m", &self.m())
            .field("modulus", &self.modulus())
            .field("generator", &self.generator())
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p() && self.m() == other.m() && self.modulus() == other.modulus()
    }
}

impl Eq for FieldSpec {}

/// Serialized shape of a field inside reports.
#[derive(Debug, Clone, Serialize)]
pub struct FieldSummary {
    pub p: u32,
    pub m: u32,
    pub q: u32,
    pub modulus: Vec<u32>,
    pub generator: u32,
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.summary().serialize(serializer)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Polynomials over F_p, coefficient vectors low degree first.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime and small: Fermat.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = poly_trim(b.to_vec());
    let mut r = poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p - (c * bi) % p) % p;
        }
        r = poly_trim(r);
    }
    r
}

/// Trial division of a monic polynomial by every monic polynomial of degree
/// `1..=deg/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = digits(idx, p, d);
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits(mut x: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((x % p as u64) as u32);
        x /= p as u64;
    }
    out
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// Slow multiplication by schoolbook product and reduction; used only while
/// building the tables.
fn slow_mul(a: u32, b: u32, p: u32, m: u32, modulus: &[u32]) -> u32 {
    if m == 1 {
        return ((a as u64 * b as u64) % p as u64) as u32;
    }
    let m = m as usize;
    let da = digits(a as u64, p, m);
    let db = digits(b as u64, p, m);
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&prod, modulus, p);
    r.resize(m, 0);
    from_digits(&r, p)
}

fn digit_add(a: u32, b: u32, p: u32, m: u32) -> u32 {
    let da = digits(a as u64, p, m as usize);
    let db = digits(b as u64, p, m as usize);
    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
    from_digits(&sum, p)
}

fn digit_neg(a: u32, p: u32, m: u32) -> u32 {
    let da = digits(a as u64, p, m as usize);
    let n: Vec<u32> = da.iter().map(|&x| (p - x) % p).collect();
    from_digits(&n, p)
}

impl FieldSpec {
    /// Builds `F_{p^m}`.
    ///
    /// `modulus`, when given, lists the coefficients `c_0, ..., c_m` of a monic
    /// degree-`m` polynomial (low degree first; `c_m` must be 1). When omitted
    /// and `m > 1`, the smallest monic irreducible polynomial is chosen, with
    /// candidates ordered lexicographically by `(c_0, c_1, ..., c_{m-1})`.
    /// The generator is the smallest representation of multiplicative order
    /// `q - 1`.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrime(p));
        }
        if m == 0 {
            return Err(FieldError::BadModulus("extension degree must be >= 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_Q)
            .ok_or(FieldError::UnsupportedQ(p.saturating_pow(m)))?;
        if q < 3 {
            return Err(FieldError::UnsupportedQ(q));
        }
        let p32 = p as u32;
        let modulus: Vec<u32> = if m == 1 {
            if let Some(md) = modulus {
                if !md.is_empty() && md.len() != 2 {
                    return Err(FieldError::BadModulus(format!(
                        "expected no modulus or a degree-1 polynomial for m = 1, got {md:?}"
                    )));
                }
            }
            Vec::new()
        } else {
            match modulus {
                Some(md) => {
                    if md.len() != m as usize + 1 {
                        return Err(FieldError::BadModulus(format!(
                            "expected {} coefficients, got {}",
                            m + 1,
                            md.len()
                        )));
                    }
                    if md[m as usize] != 1 {
                        return Err(FieldError::BadModulus("modulus must be monic".into()));
                    }
                    if md.iter().any(|&c| c >= p32) {
                        return Err(FieldError::BadModulus(format!(
                            "coefficients must lie in [0, {p})"
                        )));
                    }
                    if !is_irreducible(md, p32) {
                        return Err(FieldError::ReducibleModulus(md.to_vec()));
                    }
                    md.to_vec()
                }
                None => smallest_irreducible(p32, m),
            }
        };

        let q32 = q as u32;
        let order = q32 - 1;
        let generator = (2..q32)
            .chain(std::iter::once(1))
            .find(|&g| multiplicative_order(g, p32, m, &modulus) == order)
            .expect("the unit group of a finite field is cyclic");

        let mut exp = vec![0u16; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for k in 0..order {
            exp[k as usize] = x as u16;
            exp[(k + order) as usize] = x as u16;
            log[x as usize] = k;
            x = slow_mul(x, generator, p32, m, &modulus);
        }

        let neg: Vec<u16> = (0..q32)
            .map(|a| if m == 1 { ((p32 - a) % p32) as u16 } else { digit_neg(a, p32, m) as u16 })
            .collect();

        let addition = if m == 1 {
            Addition::Prime
        } else if p32 == 2 {
            Addition::Binary
        } else if q32 <= 256 {
            let mut table = vec![0u16; (q32 * q32) as usize];
            for a in 0..q32 {
                for b in 0..q32 {
                    table[(a * q32 + b) as usize] = digit_add(a, b, p32, m) as u16;
                }
            }
            Addition::Table(table)
        } else {
            Addition::Digits
        };

        Ok(FieldSpec {
            inner: Arc::new(Tables {
                p: p32,
                m,
                q: q32,
                modulus,
                generator: FieldElem(generator as u16),
                log,
                exp,
                neg,
                addition,
            }),
        })
    }

    /// Convenience constructor for a prime field.
    pub fn prime(p: u64) -> Result<FieldSpec, FieldError> {
        FieldSpec::new(p, 1, None)
    }

    /// Builds the field of order `q`, factoring `q` as a prime power.
    pub fn of_order(q: u64) -> Result<FieldSpec, FieldError> {
        let (p, m) = prime_power(q).ok_or(FieldError::UnsupportedQ(q))?;
        FieldSpec::new(p, m, None)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Order of the unit group, `q - 1`.
    pub fn unit_order(&self) -> u32 {
        self.inner.q - 1
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn generator(&self) -> FieldElem {
        self.inner.generator
    }

    pub fn summary(&self) -> FieldSummary {
        FieldSummary {
            p: self.p(),
            m: self.m(),
            q: self.q(),
            modulus: self.modulus().to_vec(),
            generator: self.generator().repr(),
        }
    }

    /// Validates a representation as an element of this field.
    pub fn elem(&self, repr: u32) -> Result<FieldElem, FieldError> {
        if repr < self.q() {
            Ok(FieldElem(repr as u16))
        } else {
            Err(FieldError::FieldMismatch { repr: repr as u64, q: self.q() as u64 })
        }
    }

    fn check(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        self.elem(a.repr())
    }

    /// Returns `generator^k` for any integer `k` (taken mod `q - 1`).
    #[inline]
    pub fn exp(&self, k: u64) -> FieldElem {
        FieldElem(self.inner.exp[(k % self.unit_order() as u64) as usize])
    }

    /// Discrete logarithm of a nonzero element.
    #[inline]
    pub fn log(&self, a: FieldElem) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(self.inner.log[a.0 as usize])
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let t = &self.inner;
        match &t.addition {
            Addition::Prime => {
                let s = a.0 as u32 + b.0 as u32;
                FieldElem(if s >= t.p { s - t.p } else { s } as u16)
            }
            Addition::Binary => FieldElem(a.0 ^ b.0),
            Addition::Table(table) => FieldElem(table[a.0 as usize * t.q as usize + b.0 as usize]),
            Addition::Digits => FieldElem(digit_add(a.repr(), b.repr(), t.p, t.m) as u16),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.inner.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.is_zero() || b.is_zero() {
            return FieldElem::ZERO;
        }
        let t = &self.inner;
        FieldElem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        let l = self.log(self.check(a)?).ok_or(FieldError::DivisionByZero)?;
        Ok(self.exp((self.unit_order() - l) as u64))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        match self.log(a) {
            None => FieldElem::ZERO,
            Some(l) => {
                let k = (l as u64 * (e % self.unit_order() as u64)) % self.unit_order() as u64;
                self.exp(k)
            }
        }
    }

    /// Checked variants that reject elements from a larger field.
    pub fn checked_add(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.add(self.check(a)?, self.check(b)?))
    }

    pub fn checked_mul(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }

    /// The `q - 1` nonzero elements in antilog order: `g^0, g^1, ..., g^(q-2)`.
    pub fn units(&self) -> Vec<FieldElem> {
        (0..self.unit_order() as usize).map(|k| FieldElem(self.inner.exp[k])).collect()
    }

    /// All `q` elements by representation.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q()).map(|r| FieldElem(r as u16))
    }
}

fn multiplicative_order(g: u32, p: u32, m: u32, modulus: &[u32]) -> u32 {
    let mut x = g;
    let mut k = 1;
    while x != 1 {
        x = slow_mul(x, g, p, m, modulus);
        k += 1;
        if x == 0 {
            return 0;
        }
    }
    k
}

fn smallest_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    // Lexicographic in (c_0, ..., c_{m-1}): c_0 is the most significant key.
    for idx in 0..count {
        let mut coeffs = digits(idx, p, m as usize);
        coeffs.reverse();
        coeffs.push(1);
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Factors `q = p^m` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(f: &FieldSpec, x: FieldElem) -> u32 {
        let mut y = x;
        let mut k = 1;
        while y != FieldElem::ONE {
            y = f.mul(y, x);
            k += 1;
        }
        k
    }

    #[test]
    fn f5_generator_is_two() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.q(), 5);
        // brute force: the smallest element of order 4
        let smallest = (1..5).map(|r| f.elem(r).unwrap()).find(|&x| brute_order(&f, x) == 4).unwrap();
        assert_eq!(smallest.repr(), 2);
        assert_eq!(f.generator().repr(), 2);
    }

    #[test]
    fn f4_with_given_modulus() {
        let f = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f.q(), 4);
        // alpha = x has repr 2; alpha^2 = alpha + 1 has repr 3
        let alpha = f.elem(2).unwrap();
        assert_eq!(f.mul(alpha, alpha).repr(), 3);
    }

    #[test]
    fn default_modulus_choice() {
        assert_eq!(FieldSpec::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::new(2, 3, None).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(FieldSpec::new(2, 1, None).unwrap_err(), FieldError::UnsupportedQ(2));
        assert_eq!(FieldSpec::new(4, 1, None).unwrap_err(), FieldError::NonPrime(4));
        assert!(matches!(FieldSpec::new(2, 17, None), Err(FieldError::UnsupportedQ(_))));
        assert!(matches!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])),
            Err(FieldError::ReducibleModulus(_))
        ));
        assert!(matches!(FieldSpec::new(2, 2, Some(&[1, 1, 0])), Err(FieldError::BadModulus(_))));
        assert!(FieldSpec::new(2, 16, None).is_ok());
    }

    #[test]
    fn small_prime_arithmetic() {
        let f = FieldSpec::prime(5).unwrap();
        let e = |r| f.elem(r).unwrap();
        assert_eq!(f.add(e(2), e(3)), e(0));
        assert_eq!(f.inv(e(2)).unwrap(), e(3));
        assert_eq!(f.sub(e(1), e(3)), e(3));
        assert_eq!(f.inv(e(0)), Err(FieldError::DivisionByZero));
        assert!(matches!(f.elem(5), Err(FieldError::FieldMismatch { .. })));
        assert!(f.checked_add(FieldElem(7), e(1)).is_err());
    }

    #[test]
    fn units_order_and_product() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.units().iter().map(|x| x.repr()).collect::<Vec<_>>(), vec![1, 2]);
        let f5 = FieldSpec::prime(5).unwrap();
        let u = f5.units();
        assert_eq!(u.len(), 4);
        assert_eq!(u[0], FieldElem::ONE);
        let f4 = FieldSpec::of_order(4).unwrap();
        let u4 = f4.units();
        assert_eq!(u4.len(), 3);
        let prod = u4.iter().fold(FieldElem::ONE, |acc, &x| f4.mul(acc, x));
        // In characteristic 2, -1 = 1.
        assert_eq!(prod, FieldElem::ONE);
        // Wilson: product of units of F_5 is -1.
        let prod5 = u.iter().fold(FieldElem::ONE, |acc, &x| f5.mul(acc, x));
        assert_eq!(prod5, f5.neg(FieldElem::ONE));
    }

    #[test]
    fn exhaustive_axioms_small_fields() {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldSpec::of_order(q).unwrap();
            let all: Vec<_> = f.elements().collect();
            for &a in &all {
                assert_eq!(f.add(a, f.neg(a)), FieldElem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
                    assert_eq!(f.pow(a, (q - 1) as u64), FieldElem::ONE);
                    assert_eq!(f.exp(f.log(a).unwrap() as u64), a);
                }
                for &b in &all {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &all {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
            assert_eq!(brute_order(&f, f.generator()), f.unit_order());
        }
    }

    #[test]
    fn inverse_exhaustive_all_test_orders() {
        for q in [3u64, 4, 5, 8, 9, 25, 27, 32, 49, 81, 121, 125, 243, 256, 343, 625, 729, 1024] {
            let f = FieldSpec::of_order(q).unwrap();
            for a in f.units() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE, "q = {q}");
            }
        }
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(65536), Some((2, 16)));
    }
}
