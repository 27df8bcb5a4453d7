//! Polynomials whose coefficients are affine-linear in a set of unknowns.

use std::collections::BTreeMap;

use super::field::Field;
use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};

/// `constant + Σ coeffs[u]·u` over the unknowns `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinForm<F: Field> {
    pub constant: F::Elem,
    pub coeffs: BTreeMap<usize, F::Elem>,
}

impl<F: Field> LinForm<F> {
    fn zero(field: &F) -> Self {
        Self { constant: field.zero(), coeffs: BTreeMap::new() }
    }

    fn is_zero(&self, field: &F) -> bool {
        field.is_zero(&self.constant) && self.coeffs.is_empty()
    }

    fn has_unknowns(&self) -> bool {
        !self.coeffs.is_empty()
    }

    fn add_assign(&mut self, field: &F, other: &Self, scale: &F::Elem) {
        self.constant = field.add(&self.constant, &field.mul(&other.constant, scale));
        for (u, c) in &other.coeffs {
            let add = field.mul(c, scale);
            let entry = self.coeffs.entry(*u).or_insert_with(|| field.zero());
            *entry = field.add(entry, &add);
            if field.is_zero(entry) {
                self.coeffs.remove(u);
            }
        }
    }
}

/// A polynomial in the z-variables with [`LinForm`] coefficients.
///
/// Degree in the unknowns never exceeds one: multiplying two values that
/// both carry unknowns fails with [`Error::NonLinearUnknowns`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinUnknownPoly<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Monomial, LinForm<F>>,
}

impl<F: Field> LinUnknownPoly<F> {
    pub fn zero(field: &F, nvars: usize) -> Self {
        Self { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn from_poly(p: &Poly<F>) -> Self {
        let mut out = Self::zero(p.field(), p.nvars());
        for (m, c) in p.terms() {
            let mut form = LinForm::zero(p.field());
            form.constant = c.clone();
            out.terms.insert(m.clone(), form);
        }
        out
    }

    /// `unknown · mono`.
    pub fn unknown_times_monomial(field: &F, nvars: usize, unknown: usize, mono: Monomial) -> Self {
        let mut form = LinForm::zero(field);
        form.coeffs.insert(unknown, field.one());
        let mut terms = BTreeMap::new();
        terms.insert(mono, form);
        Self { field: field.clone(), nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_unknowns(&self) -> bool {
        self.terms.values().any(LinForm::has_unknowns)
    }

    /// Coefficient forms in ascending graded-lex order of the z-monomial.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &LinForm<F>)> {
        self.terms.iter()
    }

    fn add_scaled_term(&mut self, m: Monomial, form: &LinForm<F>, scale: &F::Elem) {
        let entry = self.terms.entry(m.clone()).or_insert_with(|| LinForm::zero(&self.field));
        entry.add_assign(&self.field, form, scale);
        if entry.is_zero(&self.field) {
            self.terms.remove(&m);
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: other.nvars });
        }
        let mut out = self.clone();
        let one = self.field.one();
        for (m, f) in &other.terms {
            out.add_scaled_term(m.clone(), f, &one);
        }
        Ok(out)
    }

    /// In-place `self += p · other` for a scalar polynomial `p`.
    pub fn add_product(&mut self, p: &Poly<F>, other: &Self) -> Result<()> {
        if p.nvars() != self.nvars || other.nvars != self.nvars {
            return Err(Error::ArityMismatch { left: self.nvars, right: p.nvars().max(other.nvars) });
        }
        for (mp, cp) in p.terms() {
            for (mo, fo) in &other.terms {
                self.add_scaled_term(mp.mul(mo), fo, cp);
            }
        }
        Ok(())
    }

    pub fn mul_poly(&self, p: &Poly<F>) -> Result<Self> {
        let mut out = Self::zero(&self.field, self.nvars);
        out.add_product(p, self)?;
        Ok(out)
    }

    /// Product of two values; at most one side may carry unknowns.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (scalar, linear) = match (self.has_unknowns(), other.has_unknowns()) {
            (true, true) => return Err(Error::NonLinearUnknowns),
            (true, false) => (other, self),
            _ => (self, other),
        };
        let p = Poly::from_terms(
            &self.field,
            self.nvars,
            scalar.terms.iter().map(|(m, f)| (m.clone(), f.constant.clone())),
        );
        linear.mul_poly(&p)
    }
}
