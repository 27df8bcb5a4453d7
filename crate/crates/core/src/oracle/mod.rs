//! Brute force over small finite fields: orthogonal flag search, exhaustive
//! enumeration of `GF(q)`-points of small Fano schemes, and classification of
//! points by the compression types they admit.
//!
//! Absence of a flag over `GF(q)` is evidence about the algebraic closure,
//! never a proof; every negative result here is qualified by its field.

mod subspaces;

use std::io::Write;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{combinations, gaussian_binomial, Echelon, Field, GaloisField, MinorCache, Poly};
use crate::invariants::{Params, Variant};
use crate::spaces::{LinMatrixSpace, MatrixJson, Symmetry};

pub use subspaces::{combine, rref_basis, Subspaces};

/// Largest field size accepted by the flag search.
pub const MAX_Q: u32 = 9;
/// Largest matrix side accepted by the flag search.
pub const MAX_SIDE: usize = 5;
/// Default cap on the number of subspaces a point scan may visit.
pub const DEFAULT_MAX_SUBSPACES: u64 = 250_000;

/// Whether every `r×r` minor of the matrix is the zero polynomial.
pub fn verify_all_rank_lt<F: Field>(space: &LinMatrixSpace<F>, r: usize) -> bool {
    let (rows, cols) = (space.rows(), space.cols());
    if r > rows || r > cols {
        return true;
    }
    let mut cache = MinorCache::new(space.field(), space.nvars(), space.entries()).expect("well-formed space");
    let row_sets = combinations(rows, r);
    let col_sets = combinations(cols, r);
    row_sets
        .iter()
        .all(|i| col_sets.iter().all(|j| cache.minor(i, j).expect("minor within size limit").is_zero()))
}

/// A pair `U ⊂ GF(q)^cols`, `W ⊂ GF(q)^rows` with `W·M(z)·U ≡ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FqFlag {
    pub s: u32,
    pub q: u32,
    /// Reduced row echelon basis, `s+1+cols−r` rows.
    pub u: Vec<Vec<u32>>,
    /// Reduced row echelon basis, `rows−s` rows.
    pub w: Vec<Vec<u32>>,
}

impl FqFlag {
    /// Whether every row of `u` lies in the row space of `w`.
    pub fn is_nested(&self, field: &GaloisField) -> bool {
        let n = self.w.first().map_or(0, Vec::len);
        let mut ech = Echelon::new(field, n);
        for row in &self.w {
            ech.insert(row.clone());
        }
        self.u.iter().all(|row| row.len() == n && ech.contains(row))
    }
}

fn check_field(field: &GaloisField, symmetry: Symmetry) -> Result<()> {
    if field.size() > MAX_Q {
        return Err(Error::SizeLimit(format!("q={} exceeds {MAX_Q}", field.size())));
    }
    if symmetry == Symmetry::Symmetric && field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    Ok(())
}

/// `Σ left_i·M_ij(z)·right_j` as a polynomial.
pub fn bilinear(space: &LinMatrixSpace<GaloisField>, left: &[u32], right: &[u32]) -> Poly<GaloisField> {
    let f = space.field();
    let mut acc = Poly::zero(f, space.nvars());
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            let c = f.mul(a, b);
            if c != 0 {
                acc = &acc + &space.entry(i, j).scale(&c);
            }
        }
    }
    acc
}

/// Symbolic check `w·M(z)·u ≡ 0` for all basis pairs.
pub fn flag_is_orthogonal(space: &LinMatrixSpace<GaloisField>, flag: &FqFlag) -> bool {
    flag.w.iter().all(|w| flag.u.iter().all(|u| bilinear(space, w, u).is_zero()))
}

/// Symbolic check with the roles of `U` and `W` exchanged: `u·M(z)·w ≡ 0`.
pub fn swapped_is_orthogonal(space: &LinMatrixSpace<GaloisField>, flag: &FqFlag) -> bool {
    flag.u.iter().all(|u| flag.w.iter().all(|w| bilinear(space, u, w).is_zero()))
}

/// All flags `(U, W)` witnessing an s-compression over `GF(q)`, with `U ⊆ W` when `nested`.
///
/// For each `U` the admissible `W` lie in `W_max = {w : w·M_t·u = 0 ∀ t, u ∈ U}`,
/// so only subspaces of `W_max` (containing `U` if nested) are visited.
pub fn find_flags(space: &LinMatrixSpace<GaloisField>, r: usize, s: u32, nested: bool) -> Result<Vec<FqFlag>> {
    let field = space.field();
    check_field(field, space.symmetry())?;
    let (rows, cols) = (space.rows(), space.cols());
    if rows > MAX_SIDE || cols > MAX_SIDE {
        return Err(Error::SizeLimit(format!("{rows}×{cols} exceeds the {MAX_SIDE}×{MAX_SIDE} search limit")));
    }
    if nested && rows != cols {
        return Err(Error::Domain("nested flags need square matrices".into()));
    }
    let su = s as usize;
    if r > rows.min(cols) || su + 1 > r {
        return Err(Error::Domain(format!("need s+1 ≤ r ≤ min(rows, cols), got s={s}, r={r}")));
    }
    let du = su + 1 + cols - r;
    let dw = rows - su;
    let mats: Vec<Vec<Vec<u32>>> = (0..space.nvars()).map(|t| space.coefficient_matrix(t)).collect();
    let mut flags = Vec::new();
    for u in Subspaces::new(field, cols, du) {
        let mut cons = Echelon::new(field, rows);
        for urow in &u {
            for m in &mats {
                let v: Vec<u32> = (0..rows)
                    .map(|i| (0..cols).fold(0, |acc, j| field.add(&acc, &field.mul(&m[i][j], &urow[j]))))
                    .collect();
                cons.insert(v);
            }
        }
        let w_max = cons.nullspace();
        if w_max.len() < dw {
            continue;
        }
        if nested {
            if !u.iter().all(|row| cons.annihilates(row)) {
                continue;
            }
            let mut ext = Echelon::new(field, rows);
            for row in &u {
                ext.insert(row.clone());
            }
            let complement: Vec<Vec<u32>> = w_max.iter().filter(|b| ext.insert((*b).clone())).cloned().collect();
            for coeffs in Subspaces::new(field, complement.len(), dw - du) {
                let mut basis = u.clone();
                basis.extend(coeffs.iter().map(|c| combine(field, c, &complement, rows)));
                flags.push(FqFlag { s, q: field.size(), u: u.clone(), w: rref_basis(field, rows, &basis) });
            }
        } else {
            for coeffs in Subspaces::new(field, w_max.len(), dw) {
                let basis: Vec<Vec<u32>> = coeffs.iter().map(|c| combine(field, c, &w_max, rows)).collect();
                flags.push(FqFlag { s, q: field.size(), u: u.clone(), w: rref_basis(field, rows, &basis) });
            }
        }
    }
    flags.sort();
    Ok(flags)
}

/// The s values admitting a flag over `GF(q)`; nested for square symmetric/alternating spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub q: u32,
    pub nested: bool,
    pub s_values: Vec<u32>,
    /// `(s, number of flags)` for every tested s.
    pub flag_counts: Vec<(u32, usize)>,
    pub caveat: String,
}

pub fn classify_point(space: &LinMatrixSpace<GaloisField>, params: &Params) -> Result<Classification> {
    let nested = space.symmetry() != Symmetry::None;
    let mut flag_counts = Vec::new();
    for s in 0..=params.s_max() {
        let flags = find_flags(space, params.r as usize, s, nested)?;
        flag_counts.push((s, flags.len()));
    }
    let q = space.field().size();
    Ok(Classification {
        q,
        nested,
        s_values: flag_counts.iter().filter(|(_, c)| *c > 0).map(|(s, _)| *s).collect(),
        flag_counts,
        caveat: format!("flags searched over GF({q}) only; absence does not rule out flags over the algebraic closure"),
    })
}

fn free_positions(params: &Params) -> Vec<(usize, usize)> {
    let (rows, n) = (params.rows() as usize, params.n as usize);
    (0..rows)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| match params.variant {
            Variant::Symmetric => i <= j,
            Variant::Alternating => i < j,
            Variant::Rectangular { .. } => true,
        })
        .collect()
}

/// The matrix space spanned by the coordinate vectors in `basis`.
pub fn space_from_coordinates(params: &Params, field: &GaloisField, basis: &[Vec<u32>]) -> Result<LinMatrixSpace<GaloisField>> {
    let positions = free_positions(params);
    let nv = basis.len();
    let vars = Poly::<GaloisField>::default_names(nv);
    let form = |p: usize| {
        let coeffs: Vec<u32> = basis.iter().map(|b| b[p]).collect();
        Poly::linear(field, &coeffs)
    };
    let n = params.n as usize;
    match params.variant {
        Variant::Rectangular { m } => {
            let entries = (0..m as usize).map(|i| (0..n).map(|j| form(i * n + j)).collect()).collect();
            LinMatrixSpace::new(field, Symmetry::None, vars, entries)
        }
        variant => {
            let symmetry = if variant == Variant::Symmetric { Symmetry::Symmetric } else { Symmetry::Alternating };
            LinMatrixSpace::from_upper(field, symmetry, vars, n, |i, j| {
                positions.iter().position(|&c| c == (i, j)).map_or_else(|| Poly::zero(field, nv), form)
            })
        }
    }
}

/// Number of (k+1)-subspaces a scan of `params` over `GF(q)` visits.
pub fn scan_size(params: &Params, q: u32) -> BigInt {
    gaussian_binomial(free_positions(params).len() as u32, params.k + 1, u64::from(q))
}

/// Visits every `GF(q)`-point of `F_k` in enumeration order; returns the number of subspaces tested.
pub fn scan_fano_points(
    params: &Params,
    field: &GaloisField,
    max_subspaces: u64,
    mut visit: impl FnMut(&LinMatrixSpace<GaloisField>) -> Result<()>,
) -> Result<u64> {
    let symmetry = match params.variant {
        Variant::Symmetric => Symmetry::Symmetric,
        Variant::Alternating => Symmetry::Alternating,
        Variant::Rectangular { .. } => Symmetry::None,
    };
    check_field(field, symmetry)?;
    let size = scan_size(params, field.size());
    if size > BigInt::from(max_subspaces) {
        return Err(Error::SizeLimit(format!("{size} subspaces exceed the cap {max_subspaces}")));
    }
    let ambient = free_positions(params).len();
    let mut tested = 0;
    for basis in Subspaces::new(field, ambient, params.k as usize + 1) {
        tested += 1;
        let space = space_from_coordinates(params, field, &basis)?;
        if verify_all_rank_lt(&space, params.r as usize) {
            visit(&space)?;
        }
    }
    Ok(tested)
}

#[derive(Clone, Debug)]
pub struct FanoScan {
    pub tested: u64,
    pub points: Vec<LinMatrixSpace<GaloisField>>,
}

/// All `GF(q)`-points of `F_k` with their canonical echelon representatives.
pub fn enumerate_fano_points(params: &Params, field: &GaloisField, max_subspaces: u64) -> Result<FanoScan> {
    let mut points = Vec::new();
    let tested = scan_fano_points(params, field, max_subspaces, |p| {
        points.push(p.clone());
        Ok(())
    })?;
    Ok(FanoScan { tested, points })
}

/// One line of a JSON-lines point scan.
#[derive(Clone, Debug, Serialize)]
pub struct PointRecord {
    pub index: u64,
    pub matrix: MatrixJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
}

/// Writes one record followed by a newline.
pub fn write_json_line<W: Write + ?Sized, T: Serialize>(out: &mut W, record: &T) -> Result<()> {
    let line = serde_json::to_string(record).map_err(|e| Error::Parse(e.to_string()))?;
    writeln!(out, "{line}").map_err(|e| Error::Parse(format!("write failed: {e}")))
}

/// A random symmetric space with `nvars` uniformly random coefficient matrices.
pub fn random_symmetric_space(field: &GaloisField, n: usize, nvars: usize, seed: u64) -> LinMatrixSpace<GaloisField> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut upper = vec![vec![Poly::zero(field, nvars); n]; n];
    for (i, row) in upper.iter_mut().enumerate() {
        for cell in row.iter_mut().skip(i) {
            let coeffs: Vec<u32> = (0..nvars).map(|_| field.random_elem(&mut rng)).collect();
            *cell = Poly::linear(field, &coeffs);
        }
    }
    LinMatrixSpace::from_upper(field, Symmetry::Symmetric, Poly::<GaloisField>::default_names(nvars), n, |i, j| {
        upper[i][j].clone()
    })
    .expect("well-formed symmetric space")
}
