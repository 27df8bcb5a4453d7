//! Exact coefficient fields.
//!
//! A [`Field`] value is a small handle that knows how to combine its
//! elements. Prime fields carry their modulus, the rationals are a unit
//! struct, and [`GaloisField`] tabulates GF(q) for small prime powers.

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Default prime for exact computations.
pub const DEFAULT_PRIME: u64 = 32003;

pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Zero for the rationals.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` when infinite.
    fn order(&self) -> Option<u64>;
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Image of a rational number; `None` if the denominator vanishes.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn name(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Whether `format` would print a leading minus sign.
    fn is_negative_repr(&self, a: &Self::Elem) -> bool {
        self.format(a).starts_with('-')
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// GF(p) with elements stored canonically in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::InvalidParams(format!("{p} is not a prime below 2^31")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let e = (*a as i64).extended_gcd(&(self.p as i64));
        Some(self.from_i64(e.x))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64()?;
        let den = q.denom().mod_floor(&p).to_u64()?;
        let inv = self.inv(&den)?;
        Some(self.mul(&num, &inv))
    }
    fn format(&self, a: &u64) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn name(&self) -> String {
        format!("GF({})", self.p)
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let num: i64 = rng.gen_range(-20..=20);
        let den: i64 = rng.gen_range(1..=7);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
    fn is_negative_repr(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

#[derive(Debug, PartialEq, Eq)]
struct GfTables {
    p: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// GF(q) for a prime power q ≤ 256, backed by full operation tables.
///
/// Elements are the integers `0..q`; an element's base-p digits are the
/// coefficients of its residue modulo a fixed irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    tables: Arc<GfTables>,
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let (mut e, mut t) = (0, q);
    while t % p == 0 {
        t /= p;
        e += 1;
    }
    (t == 1).then_some((p, e))
}

fn digits(x: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    let mut x = x;
    for _ in 0..e {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Product of two residues, reduced modulo the monic `modulus` (low-order first, degree e).
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * e.max(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for t in 0..=e {
            let idx = deg - e + t;
            prod[idx] = (prod[idx] + p * p - c * modulus[t] % p) % p;
        }
    }
    prod.truncate(e);
    prod
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let e = modulus.len() - 1;
    if e <= 1 {
        return true;
    }
    for d in 1..=e / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut div = digits(low, p, d as u32);
            div.push(1);
            if divides(&div, modulus, p) {
                return false;
            }
        }
    }
    true
}

fn divides(div: &[u32], f: &[u32], p: u32) -> bool {
    let mut rem = f.to_vec();
    let d = div.len() - 1;
    for deg in (d..rem.len()).rev() {
        let c = rem[deg];
        if c == 0 {
            continue;
        }
        for t in 0..=d {
            let idx = deg - d + t;
            rem[idx] = (rem[idx] + p * p - c * div[t] % p) % p;
        }
    }
    rem[..d].iter().all(|&c| c == 0)
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q)
            .filter(|_| q <= 256)
            .ok_or_else(|| Error::InvalidParams(format!("{q} is not a prime power ≤ 256")))?;
        let mut modulus = None;
        for low in 0..p.pow(e) {
            let mut m = digits(low, p, e);
            m.push(1);
            if (e == 1 || m[0] != 0) && is_irreducible(&m, p) {
                modulus = Some(m);
                break;
            }
        }
        let modulus = modulus.expect("an irreducible polynomial exists in every degree");
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            let da = digits(a, p, e);
            for b in 0..q {
                let db = digits(b, p, e);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * n + b as usize] = undigits(&s, p);
                mul[a as usize * n + b as usize] = undigits(&poly_mulmod(&da, &db, &modulus, p), p);
            }
        }
        let mut neg = vec![0; n];
        let mut inv = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if add[a * n + b] == 0 {
                    neg[a] = b as u32;
                }
                if mul[a * n + b] == 1 {
                    inv[a] = b as u32;
                }
            }
        }
        Ok(Self {
            tables: Arc::new(GfTables { p, q, add, mul, neg, inv }),
        })
    }

    pub fn size(&self) -> u32 {
        self.tables.q
    }

    /// All elements in increasing code order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.tables.q
    }
}

impl Field for GaloisField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.tables.p as i64) as u32
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.tables.add[*a as usize * self.tables.q as usize + *b as usize]
    }
    fn neg(&self, a: &u32) -> u32 {
        self.tables.neg[*a as usize]
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.tables.mul[*a as usize * self.tables.q as usize + *b as usize]
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        (*a != 0).then(|| self.tables.inv[*a as usize])
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.tables.p as u64
    }
    fn order(&self) -> Option<u64> {
        Some(self.tables.q as u64)
    }
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.tables.q)
    }
    fn from_rational(&self, q: &BigRational) -> Option<u32> {
        let p = BigInt::from(self.tables.p);
        let num = q.numer().mod_floor(&p).to_i64()?;
        let den = q.denom().mod_floor(&p).to_i64()?;
        let inv = self.inv(&self.from_i64(den))?;
        Some(self.mul(&self.from_i64(num), &inv))
    }
    fn format(&self, a: &u32) -> String {
        let p = self.tables.p;
        if self.tables.q == p && *a > p / 2 {
            format!("-{}", p - a)
        } else {
            a.to_string()
        }
    }
    fn name(&self) -> String {
        format!("GF({})", self.tables.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u64, 2, 17, 32002] {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert!(f.inv(&0).is_none());
        assert!(PrimeField::new(32001).is_err());
    }

    #[test]
    fn prime_field_six_is_one_mod_five() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.mul(&2, &3), 1);
        assert_eq!(f.format(&4), "-1");
    }

    #[test]
    fn galois_fields_are_fields() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = GaloisField::new(q).unwrap();
            for a in 1..q {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1, "q={q} a={a}");
                assert_eq!(f.add(&a, &f.neg(&a)), 0);
            }
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q.min(5) {
                        let lhs = f.mul(&a, &f.add(&b, &c));
                        let rhs = f.add(&f.mul(&a, &b), &f.mul(&a, &c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
        assert!(GaloisField::new(6).is_err());
    }

    #[test]
    fn rational_images() {
        let f = PrimeField::new(7).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half), Some(4));
        let seventh = BigRational::new(1.into(), 7.into());
        assert_eq!(f.from_rational(&seventh), None);
    }
}
