//! Staircase supports: recognition of Borel-fixed spaces and enumeration of
//! those lying on a Fano scheme.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::constructors::standard_shape;
use super::{LinMatrixSpace, Symmetry};
use crate::exactalg::{Field, Poly};
use crate::invariants::{Params, Variant};

/// Up-left closed support given by row lengths.
///
/// For alternating patterns the diagonal cells are never free; a diagonal
/// cell is kept in `lambda` exactly when its row has a free cell to the right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct StaircasePattern {
    pub rows: usize,
    pub cols: usize,
    pub symmetry: Symmetry,
    pub lambda: Vec<usize>,
    /// Values of s whose standard compression space contains the pattern.
    pub fits: Vec<u32>,
}

impl StaircasePattern {
    /// Free positions in row-major order.
    pub fn free_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &len) in self.lambda.iter().enumerate() {
            for j in 0..len {
                let free = match self.symmetry {
                    Symmetry::Symmetric => i <= j,
                    Symmetry::Alternating => i < j,
                    Symmetry::None => true,
                };
                if free {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The space with a fresh variable `z_t` on the t-th free cell.
    pub fn to_space<F: Field>(&self, field: &F) -> LinMatrixSpace<F> {
        let cells = self.free_cells();
        let nv = cells.len();
        let var = |i: usize, j: usize| match cells.iter().position(|&c| c == (i, j)) {
            Some(t) => Poly::var(field, nv, t),
            None => Poly::zero(field, nv),
        };
        let vars = Poly::<F>::default_names(nv);
        let space = if self.symmetry == Symmetry::None {
            let entries = (0..self.rows).map(|i| (0..self.cols).map(|j| var(i, j)).collect()).collect();
            LinMatrixSpace::new(field, Symmetry::None, vars, entries)
        } else {
            LinMatrixSpace::from_upper(field, self.symmetry, vars, self.rows, var)
        };
        space.expect("staircase spaces are well formed")
    }
}

/// Whether the nonzero free entries are distinct single variables and the zero set is down-right closed.
pub fn is_borel_pattern<F: Field>(space: &LinMatrixSpace<F>) -> bool {
    let mut seen = BTreeSet::new();
    for (i, j) in space.free_positions() {
        let p = space.entry(i, j);
        if p.is_zero() {
            continue;
        }
        if p.len() != 1 {
            return false;
        }
        let (mono, _) = p.terms().next().expect("one term");
        let Some(t) = mono.exponents().iter().position(|&e| e == 1) else {
            return false;
        };
        if !seen.insert(t) {
            return false;
        }
    }
    let skip_diag = space.symmetry() == Symmetry::Alternating;
    let (rows, cols) = (space.rows(), space.cols());
    for i in 0..rows {
        for j in 0..cols {
            if (skip_diag && i == j) || !space.entry(i, j).is_zero() {
                continue;
            }
            for i2 in i..rows {
                for j2 in j..cols {
                    if !(skip_diag && i2 == j2) && !space.entry(i2, j2).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn is_self_conjugate(lambda: &[usize]) -> bool {
    (0..lambda.len()).all(|j| lambda.iter().filter(|&&l| l > j).count() == lambda[j])
}

fn free_count(symmetry: Symmetry, lambda: &[usize]) -> usize {
    lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| match symmetry {
            Symmetry::Symmetric => l.saturating_sub(i),
            Symmetry::Alternating => l.saturating_sub(i + 1),
            Symmetry::None => l,
        })
        .sum()
}

/// Partitions inside `shape` (row lengths) with exactly `target` free cells.
fn sub_partitions(symmetry: Symmetry, shape: &[usize], target: usize, out: &mut BTreeSet<Vec<usize>>) {
    fn rec(symmetry: Symmetry, shape: &[usize], target: usize, cur: &mut Vec<usize>, count: usize, out: &mut BTreeSet<Vec<usize>>) {
        let i = cur.len();
        if i == shape.len() {
            if count == target {
                out.insert(cur.clone());
            }
            return;
        }
        let cap = shape[i].min(cur.last().copied().unwrap_or(usize::MAX));
        for l in 0..=cap {
            let add = match symmetry {
                Symmetry::Symmetric => l.saturating_sub(i),
                Symmetry::Alternating => l.saturating_sub(i + 1),
                Symmetry::None => l,
            };
            if count + add > target {
                break;
            }
            cur.push(l);
            rec(symmetry, shape, target, cur, count + add, out);
            cur.pop();
        }
    }
    rec(symmetry, shape, target, &mut Vec::new(), 0, out);
}

/// Staircase supports with `k+1` free cells inside some standard s-compression space.
pub fn enumerate_borel_fixed(params: &Params) -> Vec<StaircasePattern> {
    let symmetry = match params.variant {
        Variant::Symmetric => Symmetry::Symmetric,
        Variant::Alternating => Symmetry::Alternating,
        Variant::Rectangular { .. } => Symmetry::None,
    };
    let target = params.k as usize + 1;
    let shapes: Vec<Vec<usize>> =
        (0..=params.s_max()).map(|s| standard_shape(params, s).expect("s in range")).collect();
    let mut candidates = BTreeSet::new();
    for shape in &shapes {
        sub_partitions(symmetry, shape, target, &mut candidates);
    }
    let mut found: BTreeMap<Vec<usize>, Vec<u32>> = BTreeMap::new();
    for lambda in candidates {
        if symmetry != Symmetry::None && !is_self_conjugate(&lambda) {
            continue;
        }
        if symmetry == Symmetry::Alternating && lambda.iter().enumerate().any(|(i, &l)| l == i + 1) {
            continue;
        }
        debug_assert_eq!(free_count(symmetry, &lambda), target);
        let fits: Vec<u32> = shapes
            .iter()
            .enumerate()
            .filter(|(_, shape)| lambda.iter().zip(shape.iter()).all(|(l, c)| l <= c))
            .map(|(s, _)| s as u32)
            .collect();
        found.insert(lambda, fits);
    }
    found
        .into_iter()
        .map(|(lambda, fits)| StaircasePattern {
            rows: params.rows() as usize,
            cols: params.n as usize,
            symmetry,
            lambda,
            fits,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rationals;
    use crate::spaces::{generic_matrix, standard_compression};

    fn space(rows: &[[&str; 4]]) -> LinMatrixSpace<Rationals> {
        let json = super::super::MatrixJson {
            rows: 4,
            cols: 4,
            symmetry: Symmetry::Symmetric,
            entries: rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
            vars: Some((0..5).map(|i| format!("z{i}")).collect()),
        };
        LinMatrixSpace::from_json(&Rationals, &json).unwrap()
    }

    #[test]
    fn example_matrices() {
        let right = space(&[["z0", "z1", "z2", "z3"], ["z1", "z4", "0", "0"], ["z2", "0", "0", "0"], ["z3", "0", "0", "0"]]);
        assert!(is_borel_pattern(&right));
        let left = space(&[["z0", "z1", "z2", "z3"], ["z1", "z4", "z3", "0"], ["z2", "z3", "0", "0"], ["z3", "0", "0", "0"]]);
        assert!(!is_borel_pattern(&left));
        assert!(is_borel_pattern(&generic_matrix(&Rationals, Variant::Symmetric, 4)));
    }

    #[test]
    fn net_of_conics_patterns() {
        let p = Params::symmetric(3, 3, 2).unwrap();
        let pats = enumerate_borel_fixed(&p);
        let got: Vec<(Vec<usize>, Vec<u32>)> = pats.iter().map(|p| (p.lambda.clone(), p.fits.clone())).collect();
        assert_eq!(got, vec![(vec![2, 2, 0], vec![0]), (vec![3, 1, 1], vec![1])]);
    }

    #[test]
    fn example_pattern_is_enumerated() {
        let p = Params::symmetric(4, 4, 4).unwrap();
        let pats = enumerate_borel_fixed(&p);
        assert!(pats.iter().any(|p| p.lambda == vec![4, 2, 1, 1]));
    }

    #[test]
    fn too_large_k_is_empty() {
        let p = Params::symmetric(3, 3, 3).unwrap();
        assert!(enumerate_borel_fixed(&p).is_empty());
    }

    #[test]
    fn standard_spaces_are_borel() {
        let f = Rationals;
        for p in [Params::symmetric(5, 4, 0).unwrap(), Params::alternating(6, 4, 0).unwrap(), Params::rectangular(3, 5, 3, 0).unwrap()] {
            for s in 0..=p.s_max() {
                let q = standard_compression(&f, &p, s).unwrap().reparametrized();
                assert!(is_borel_pattern(&q), "{p} s={s}");
            }
        }
    }

    #[test]
    fn alternating_diagonal_is_canonical() {
        let p = Params::alternating(4, 4, 0).unwrap();
        let pats = enumerate_borel_fixed(&p);
        assert_eq!(pats.len(), 1);
        assert_eq!(pats[0].lambda, vec![2, 1, 0, 0]);
        assert_eq!(pats[0].free_cells(), vec![(0, 1)]);
    }
}
