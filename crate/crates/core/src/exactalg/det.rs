//! Determinants of polynomial matrices by memoized cofactor expansion.

use std::collections::HashMap;

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Largest square size expanded.
pub const MAX_DET_SIZE: usize = 12;

/// Minors of a fixed matrix, cached by (row set, column set) bitmasks.
pub struct MinorCache<'a, F: Field> {
    matrix: &'a [Vec<Poly<F>>],
    field: F,
    nvars: usize,
    cache: HashMap<(u64, u64), Poly<F>>,
}

impl<'a, F: Field> MinorCache<'a, F> {
    pub fn new(field: &F, nvars: usize, matrix: &'a [Vec<Poly<F>>]) -> Result<Self> {
        let cols = matrix.first().map_or(0, Vec::len);
        if matrix.len() > 64 || cols > 64 {
            return Err(Error::SizeLimit("matrices above 64 rows or columns".into()));
        }
        for row in matrix {
            if row.len() != cols {
                return Err(Error::Shape("ragged matrix".into()));
            }
            for p in row {
                if p.nvars() != nvars {
                    return Err(Error::ArityMismatch { left: nvars, right: p.nvars() });
                }
            }
        }
        Ok(Self { matrix, field: field.clone(), nvars, cache: HashMap::new() })
    }

    /// Determinant of the submatrix on sorted `rows` × `cols`.
    pub fn minor(&mut self, rows: &[usize], cols: &[usize]) -> Result<Poly<F>> {
        if rows.len() != cols.len() {
            return Err(Error::Shape(format!("{}×{} minor is not square", rows.len(), cols.len())));
        }
        if rows.len() > MAX_DET_SIZE {
            return Err(Error::SizeLimit(format!("determinant of size {} exceeds {MAX_DET_SIZE}", rows.len())));
        }
        let rmask = rows.iter().fold(0u64, |m, &r| m | 1 << r);
        let cmask = cols.iter().fold(0u64, |m, &c| m | 1 << c);
        Ok(self.minor_masks(rmask, cmask))
    }

    fn minor_masks(&mut self, rmask: u64, cmask: u64) -> Poly<F> {
        if rmask == 0 {
            return Poly::one(&self.field, self.nvars);
        }
        if let Some(p) = self.cache.get(&(rmask, cmask)) {
            return p.clone();
        }
        let r0 = rmask.trailing_zeros() as usize;
        let rest = rmask & !(1 << r0);
        let mut acc = Poly::zero(&self.field, self.nvars);
        let mut sign_negative = false;
        let mut cm = cmask;
        while cm != 0 {
            let c = cm.trailing_zeros() as usize;
            cm &= cm - 1;
            let entry = &self.matrix[r0][c];
            if !entry.is_zero() {
                let sub = self.minor_masks(rest, cmask & !(1 << c));
                if !sub.is_zero() {
                    let term = entry * &sub;
                    acc = if sign_negative { &acc - &term } else { &acc + &term };
                }
            }
            sign_negative = !sign_negative;
        }
        self.cache.insert((rmask, cmask), acc.clone());
        acc
    }
}

/// Exact determinant of a square matrix of polynomials.
pub fn det_polymat<F: Field>(field: &F, nvars: usize, m: &[Vec<Poly<F>>]) -> Result<Poly<F>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    let idx: Vec<usize> = (0..n).collect();
    MinorCache::new(field, nvars, m)?.minor(&idx, &idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Rationals;

    #[test]
    fn identity_determinant_is_one() {
        let f = Rationals;
        let m: Vec<Vec<Poly<Rationals>>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| if i == j { Poly::one(&f, 2) } else { Poly::zero(&f, 2) })
                    .collect()
            })
            .collect();
        assert_eq!(det_polymat(&f, 2, &m).unwrap(), Poly::one(&f, 2));
    }

    #[test]
    fn two_by_two() {
        let f = Rationals;
        let z = |i| Poly::var(&f, 3, i);
        let m = vec![vec![z(0), z(1)], vec![z(2), z(0)]];
        assert_eq!(det_polymat(&f, 3, &m).unwrap().to_string(), "z0^2 - z1*z2");
    }

    #[test]
    fn size_cap() {
        let f = Rationals;
        let m = vec![vec![Poly::one(&f, 0); 13]; 13];
        assert!(matches!(det_polymat(&f, 0, &m), Err(Error::SizeLimit(_))));
    }
}
