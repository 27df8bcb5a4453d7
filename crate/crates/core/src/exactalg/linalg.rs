//! Exact Gaussian elimination with leftmost pivots.

use super::field::Field;

/// Row space built one row at a time.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, ncols: usize) -> Self {
        Self { field: field.clone(), ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    fn reduce(&self, row: &mut [F::Elem]) {
        let f = &self.field;
        for (pivot, base) in &self.rows {
            if f.is_zero(&row[*pivot]) {
                continue;
            }
            let c = row[*pivot].clone();
            for (x, b) in row.iter_mut().zip(base).skip(*pivot) {
                if !f.is_zero(b) {
                    *x = f.sub(x, &f.mul(&c, b));
                }
            }
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<F::Elem>) -> bool {
        assert_eq!(row.len(), self.ncols, "row length");
        self.reduce(&mut row);
        let f = &self.field;
        let Some(pivot) = row.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&row[pivot]).expect("nonzero pivot");
        for x in row.iter_mut().skip(pivot) {
            *x = f.mul(x, &inv);
        }
        self.rows.push((pivot, row));
        true
    }

    pub fn contains(&self, row: &[F::Elem]) -> bool {
        let mut row = row.to_vec();
        self.reduce(&mut row);
        row.iter().all(|x| self.field.is_zero(x))
    }

    /// Whether `v` is orthogonal to every row, i.e. lies in the right kernel.
    pub fn annihilates(&self, v: &[F::Elem]) -> bool {
        let f = &self.field;
        self.rows.iter().all(|(_, row)| {
            let dot = row
                .iter()
                .zip(v)
                .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            f.is_zero(&dot)
        })
    }

    /// Reduced row echelon form of the accumulated rows, sorted by pivot.
    pub fn rref(&self) -> Vec<Vec<F::Elem>> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        let f = &self.field;
        for i in (0..rows.len()).rev() {
            let (pivot, pivot_row) = rows[i].clone();
            for (_, row) in rows.iter_mut().take(i) {
                if f.is_zero(&row[pivot]) {
                    continue;
                }
                let c = row[pivot].clone();
                for (x, b) in row.iter_mut().zip(&pivot_row).skip(pivot) {
                    *x = f.sub(x, &f.mul(&c, b));
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        p.sort_unstable();
        p
    }

    /// Basis of the right kernel, one vector per free column in increasing order.
    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let rref = self.rref();
        let pivots = self.pivots();
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![f.zero(); self.ncols];
            v[free] = f.one();
            for (row, &p) in rref.iter().zip(&pivots) {
                v[p] = f.neg(&row[free]);
            }
            basis.push(v);
        }
        basis
    }
}

/// Rank and right-kernel basis of `rows` (each of length `ncols`).
pub fn rank_nullspace<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> (usize, Vec<Vec<F::Elem>>) {
    let mut ech = Echelon::new(field, ncols);
    for row in rows {
        ech.insert(row.clone());
    }
    (ech.rank(), ech.nullspace())
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    let mut ech = Echelon::new(field, ncols);
    for row in rows {
        if ech.is_full() {
            break;
        }
        ech.insert(row.clone());
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        Rationals.from_i64(v)
    }

    #[test]
    fn zero_matrix() {
        let rows = vec![vec![q(0); 4]; 3];
        let (r, ns) = rank_nullspace(&Rationals, &rows, 4);
        assert_eq!((r, ns.len()), (0, 4));
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let f = PrimeField::default();
        let rows: Vec<Vec<u64>> = (0..4).map(|i| (0..4).map(|j| u64::from(i == j)).collect()).collect();
        let (r, ns) = rank_nullspace(&f, &rows, 4);
        assert_eq!(r, 4);
        assert!(ns.is_empty());
    }

    #[test]
    fn rank_one_kernel() {
        let rows = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        let (r, ns) = rank_nullspace(&Rationals, &rows, 2);
        assert_eq!(r, 1);
        assert_eq!(ns, vec![vec![q(-2), q(1)]]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let rows = vec![vec![q(1), q(2), q(3), q(4)], vec![q(2), q(4), q(7), q(1)], vec![q(3), q(6), q(10), q(5)]];
        let mut ech = Echelon::new(&Rationals, 4);
        for r in &rows {
            ech.insert(r.clone());
        }
        assert_eq!(ech.rank(), 2);
        for v in ech.nullspace() {
            for row in &rows {
                let dot: BigRational = row.iter().zip(&v).map(|(a, b)| a * b).sum();
                assert_eq!(dot, q(0));
            }
            assert!(ech.annihilates(&v));
        }
    }
}
