use crate::exactalg::{Echelon, GaloisField};

/// The `d`-dimensional subspaces of `GF(q)^n`, each once, as reduced row
/// echelon bases. Order: pivot sets lexicographically, then the free entries
/// as a base-q odometer with the last free entry running fastest.
pub struct Subspaces {
    q: u32,
    n: usize,
    pivot_sets: std::vec::IntoIter<Vec<usize>>,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    active: bool,
    fresh: bool,
}

impl Subspaces {
    pub fn new(field: &GaloisField, n: usize, d: usize) -> Self {
        Self {
            q: field.size(),
            n,
            pivot_sets: crate::exactalg::combinations(n, d).into_iter(),
            pivots: Vec::new(),
            free: Vec::new(),
            digits: Vec::new(),
            active: false,
            fresh: false,
        }
    }

    fn load_next_pivot_set(&mut self) -> bool {
        let Some(pivots) = self.pivot_sets.next() else {
            return false;
        };
        self.free = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (p + 1..self.n).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
            .collect();
        self.digits = vec![0; self.free.len()];
        self.pivots = pivots;
        self.active = true;
        self.fresh = true;
        true
    }

    fn advance(&mut self) -> bool {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.q {
                return true;
            }
            *d = 0;
        }
        false
    }

    fn current(&self) -> Vec<Vec<u32>> {
        let mut rows = vec![vec![0u32; self.n]; self.pivots.len()];
        for (i, &p) in self.pivots.iter().enumerate() {
            rows[i][p] = 1;
        }
        for (&(i, c), &v) in self.free.iter().zip(&self.digits) {
            rows[i][c] = v;
        }
        rows
    }
}

impl Iterator for Subspaces {
    type Item = Vec<Vec<u32>>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.active {
                if std::mem::take(&mut self.fresh) || self.advance() {
                    return Some(self.current());
                }
                self.active = false;
            }
            if !self.load_next_pivot_set() {
                return None;
            }
        }
    }
}

/// Canonical reduced row echelon basis of the row space of `rows`.
pub fn rref_basis(field: &GaloisField, n: usize, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut ech = Echelon::new(field, n);
    for r in rows {
        ech.insert(r.clone());
    }
    ech.rref()
}

/// Combination `Σ coeffs[i]·basis[i]`.
pub fn combine(field: &GaloisField, coeffs: &[u32], basis: &[Vec<u32>], n: usize) -> Vec<u32> {
    use crate::exactalg::Field;
    let mut out = vec![0u32; n];
    for (c, b) in coeffs.iter().zip(basis) {
        if *c == 0 {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o = field.add(o, &field.mul(c, x));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gaussian_binomial;
    use num_bigint::BigInt;
    use std::collections::BTreeSet;

    #[test]
    fn counts_match_gaussian_binomials() {
        for q in [2, 3, 4, 5] {
            let f = GaloisField::new(q).unwrap();
            for n in 0..=4 {
                for d in 0..=n {
                    let all: Vec<_> = Subspaces::new(&f, n, d).collect();
                    assert_eq!(BigInt::from(all.len()), gaussian_binomial(n as u32, d as u32, u64::from(q)), "q={q} n={n} d={d}");
                    let distinct: BTreeSet<_> = all.iter().cloned().collect();
                    assert_eq!(distinct.len(), all.len());
                    for b in &all {
                        assert_eq!(&rref_basis(&f, n, b), b);
                    }
                }
            }
        }
    }

    #[test]
    fn lines_in_six_space_over_gf3() {
        let f = GaloisField::new(3).unwrap();
        assert_eq!(Subspaces::new(&f, 6, 2).count(), 11011);
    }
}
