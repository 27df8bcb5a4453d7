//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::field::Field;
use crate::error::{Error, Result};

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, ascending.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur.push(left);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(nvars, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(nvars, 0, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Polynomial in `nvars` variables with nonzero coefficients only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn zero(field: &F, nvars: usize) -> Self {
        Self { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(field: &F, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn var(field: &F, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::var(nvars, i), field.one());
        p
    }

    /// Linear form `Σ coeffs[i]·z_i`.
    pub fn linear(field: &F, coeffs: &[F::Elem]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(field, nvars);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(nvars, i), c.clone());
        }
        p
    }

    pub fn from_terms(field: &F, nvars: usize, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn add_term(&mut self, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = self.field.add(old, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(&self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field, self.nvars);
        }
        Self {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &F::Elem) -> Self {
        let mut out = Self::zero(&self.field, self.nvars);
        for (m, a) in &self.terms {
            out.add_term(m.mul(mono), self.field.mul(a, c));
        }
        out
    }

    fn neg_ref(&self) -> Self {
        Self {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), self.field.neg(a))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.field, self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Value at a point of the affine space.
    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: point.len() });
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = f.mul(&t, x);
                }
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Replaces variable `z_i` by `images[i]`; all images share one arity.
    pub fn substitute(&self, images: &[Poly<F>]) -> Result<Poly<F>> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: images.len() });
        }
        let target = images.first().map_or(0, |p| p.nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::ArityMismatch { left: target, right: bad.nvars });
        }
        let mut out = Poly::zero(&self.field, target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&self.field, target, c.clone());
            for (img, &e) in images.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = t.checked_mul(img)?;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Coefficients of `z_0..z_{nvars-1}` of a linear form; `None` if not homogeneous linear.
    pub fn linear_coeffs(&self) -> Option<Vec<F::Elem>> {
        if !self.is_homogeneous_of_degree(1) {
            return None;
        }
        Some((0..self.nvars).map(|i| self.coeff(&Monomial::var(self.nvars, i))).collect())
    }

    /// Highest term first, using `names` for the variables.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = f.is_negative_repr(c);
            let abs = if negative { f.neg(c) } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = names.get(i).cloned().unwrap_or_else(|| format!("z{i}"));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&f.format(&abs));
            } else {
                if !f.is_one(&abs) {
                    out.push_str(&f.format(&abs));
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (0..nvars).map(|i| format!("z{i}")).collect()
    }

    /// Parses expressions such as `2*z0 - 3/2*z1^2 + x_1_2` with the given variable names.
    pub fn parse(field: &F, names: &[String], text: &str) -> Result<Self> {
        let nvars = names.len();
        let mut out = Poly::zero(field, nvars);
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && !cur.ends_with('^') {
                if i > 0 {
                    if cur.is_empty() {
                        return Err(Error::Parse(format!("dangling sign in {text:?}")));
                    }
                    terms.push((negative, std::mem::take(&mut cur)));
                }
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {text:?}")));
        }
        terms.push((negative, cur));
        for (negative, term) in terms {
            let mut coeff = BigRational::from_integer(BigInt::from(if negative { -1 } else { 1 }));
            let mut exps = vec![0u32; nvars];
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {text:?}")));
                }
                let first = factor.chars().next().unwrap();
                if first.is_ascii_digit() {
                    coeff *= parse_rational(factor)?;
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (
                            n,
                            e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?,
                        ),
                        None => (factor, 1),
                    };
                    let idx = names
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                    exps[idx] += exp;
                }
            }
            let c = field
                .from_rational(&coeff)
                .ok_or_else(|| Error::Parse(format!("coefficient {coeff} undefined in {}", field.name())))?;
            out.add_term(Monomial(exps), c);
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad number {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|_| bad())?;
            let b: BigInt = b.parse().map_err(|_| bad())?;
            if b == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&Self::default_names(self.nvars)))
    }
}

/// Arithmetic operators panic on arity mismatch; use the `checked_*` forms to recover.
impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.neg_ref()
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Poly<F>) -> Poly<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Poly<F>) -> Poly<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Poly<F>) -> Poly<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{PrimeField, Rationals};

    fn z(i: usize) -> Poly<Rationals> {
        Poly::var(&Rationals, 2, i)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&z(0) + &z(1)) * &(&z(0) - &z(1));
        assert_eq!(p.to_string(), "z0^2 - z1^2");
    }

    #[test]
    fn product_with_zero_is_empty() {
        let p = &(&z(0) + &z(1)) * &Poly::zero(&Rationals, 2);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn six_is_one_mod_five() {
        let f = PrimeField::new(5).unwrap();
        let a = Poly::var(&f, 1, 0).scale(&2);
        let b = Poly::var(&f, 1, 0).scale(&3);
        assert_eq!(&a * &b, Poly::var(&f, 1, 0).pow(2));
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = Poly::var(&Rationals, 2, 0);
        let b = Poly::var(&Rationals, 3, 0);
        assert!(matches!(a.checked_add(&b), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn graded_lex_printing() {
        let names = Poly::<Rationals>::default_names(3);
        let p = Poly::parse(&Rationals, &names, "z2 + z0*z1 - 3/2*z0^2 + 4").unwrap();
        assert_eq!(p.to_string(), "-3/2*z0^2 + z0*z1 + z2 + 4");
        let back = Poly::parse(&Rationals, &names, &p.to_string()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn substitution() {
        let names = Poly::<Rationals>::default_names(2);
        let p = Poly::parse(&Rationals, &names, "z0^2 - z1").unwrap();
        let img = vec![&z(0) + &z(1), z(0)];
        assert_eq!(p.substitute(&img).unwrap().to_string(), "z0^2 + 2*z0*z1 + z1^2 - z0");
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
    }
}
