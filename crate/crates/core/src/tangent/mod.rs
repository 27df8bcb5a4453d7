//! Tangent spaces of `F_k(SD^r_n)` at a point `[Q]`.
//!
//! Two independent routes: [`tangent_dim_chart`] linearizes every `r×r` minor
//! of the generic symmetric matrix along a first-order perturbation `Q + εN`,
//! while [`tangent_dim_blocks`] reads the answer off the block decomposition
//! `Q = [[B, C, D], [Cᵗ, E, 0], [Dᵗ, 0, 0]]` of a nested s-compression point.

mod points;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{combinations, det_polymat, Echelon, Field, LinUnknownPoly, MinorCache, Monomial, Poly};
use crate::invariants::{binom, kappa, to_usize, Params, Variant};
use crate::spaces::{LinMatrixSpace, Symmetry};

pub use points::{
    cross_method_grid, random_block_point, structured_points, CrossCase, PointKind, RandomPoint, MAX_ATTEMPTS,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Chart,
    Blocks,
}

/// Which formula the block method used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// `r−2s−1 > 0` and `det E ≡ 0`.
    DegenerateE,
    Anchored,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentReport {
    pub method: Method,
    pub field: String,
    pub n: u32,
    pub r: u32,
    pub k: u32,
    pub s: Option<u32>,
    /// `(k+1)(N−k)` with `N = C(n+1,2)−1`.
    #[serde(with = "crate::invariants::bigint_json")]
    pub ambient_grassmannian_dim: BigInt,
    pub lift_unknowns: usize,
    pub constraint_rows: usize,
    pub rank: usize,
    pub tangent_dim: usize,
    pub seed: Option<u64>,
    pub a_det: Option<usize>,
    pub branch: Option<Branch>,
    pub notes: Vec<String>,
}

fn check_field<F: Field>(field: &F) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    Ok(())
}

/// Brings `q` to independent variables and checks `span = k+1`.
fn prepare<F: Field>(q: &LinMatrixSpace<F>, params: &Params) -> Result<LinMatrixSpace<F>> {
    if params.variant != Variant::Symmetric {
        return Err(Error::Domain("tangent computations are implemented for symmetric matrices".into()));
    }
    if q.symmetry() != Symmetry::Symmetric {
        return Err(Error::Shape("tangent computations need a symmetric matrix space".into()));
    }
    let n = params.n as usize;
    if q.rows() != n || q.cols() != n {
        return Err(Error::Shape(format!("expected a {n}×{n} matrix, got {}×{}", q.rows(), q.cols())));
    }
    let span = q.span_dim();
    let expected = params.k as usize + 1;
    if span != expected {
        return Err(Error::SpanMismatch { expected, found: span });
    }
    Ok(if q.nvars() == span { q.clone() } else { q.reparametrized() })
}

/// Fails with [`Error::NotOnScheme`] at the first nonzero `r×r` minor.
pub fn check_on_scheme<F: Field>(q: &LinMatrixSpace<F>, r: usize) -> Result<()> {
    let (rows, cols) = (q.rows(), q.cols());
    if r > rows || r > cols {
        return Ok(());
    }
    let mut cache = MinorCache::new(q.field(), q.nvars(), q.entries())?;
    for i in combinations(rows, r) {
        for j in combinations(cols, r) {
            let m = cache.minor(&i, &j)?;
            if !m.is_zero() {
                return Err(Error::NotOnScheme { rows: i, cols: j, value: m.display_with(q.vars()) });
            }
        }
    }
    Ok(())
}

fn upper_slots(size: usize) -> Vec<(usize, usize)> {
    (0..size).flat_map(|i| (i..size).map(move |j| (i, j))).collect()
}

fn slot_index(size: usize, a: usize, b: usize) -> usize {
    let (i, j) = if a <= b { (a, b) } else { (b, a) };
    i * size - i * (i + 1) / 2 + j
}

/// First-order linear system: for each minor `f` of `base + εA`, the coefficient of ε.
///
/// The perturbation puts `A_slot = Σ_t u[slot·nvars + t]·z_t` on the positions
/// reported by `slot_of`; every z-monomial of `Σ ∂f/∂A_slot · A_slot` gives one row.
struct Linearization<F: Field> {
    ech: Echelon<F>,
    rows: usize,
}

fn linearize<F: Field>(
    field: &F,
    nvars: usize,
    base: &[Vec<Poly<F>>],
    nslots: usize,
    slot_of: impl Fn(usize, usize) -> Option<usize>,
    minors: impl Iterator<Item = (Vec<usize>, Vec<usize>)>,
) -> Result<Linearization<F>> {
    let nunk = nslots * nvars;
    let perturbation: Vec<LinUnknownPoly<F>> = (0..nslots)
        .map(|slot| {
            (0..nvars).fold(LinUnknownPoly::zero(field, nvars), |acc, t| {
                let term = LinUnknownPoly::unknown_times_monomial(field, nvars, slot * nvars + t, Monomial::var(nvars, t));
                acc.checked_add(&term).expect("same arity")
            })
        })
        .collect();
    let mut cache = MinorCache::new(field, nvars, base)?;
    let mut ech = Echelon::new(field, nunk);
    let mut rows = 0;
    for (ri, ci) in minors {
        let mut grad: BTreeMap<usize, Poly<F>> = BTreeMap::new();
        for (pa, &a) in ri.iter().enumerate() {
            for (pb, &b) in ci.iter().enumerate() {
                let Some(slot) = slot_of(a, b) else { continue };
                let sub_r: Vec<usize> = ri.iter().copied().filter(|&x| x != a).collect();
                let sub_c: Vec<usize> = ci.iter().copied().filter(|&x| x != b).collect();
                let cof = cache.minor(&sub_r, &sub_c)?;
                if cof.is_zero() {
                    continue;
                }
                let g = grad.entry(slot).or_insert_with(|| Poly::zero(field, nvars));
                *g = if (pa + pb) % 2 == 0 { &*g + &cof } else { &*g - &cof };
            }
        }
        let mut constraint = LinUnknownPoly::zero(field, nvars);
        for (slot, g) in &grad {
            constraint.add_product(g, &perturbation[*slot])?;
        }
        for (_, form) in constraint.terms() {
            let mut row = vec![field.zero(); nunk];
            for (u, c) in &form.coeffs {
                row[*u] = c.clone();
            }
            rows += 1;
            ech.insert(row);
        }
    }
    Ok(Linearization { ech, rows })
}

fn grassmannian_dim(n: u32, k: u32) -> BigInt {
    let big_n = binom(i64::from(n) + 1, 2) - 1;
    (big_n - i64::from(k)) * (i64::from(k) + 1)
}

/// Tangent dimension by linearizing all `C(n,r)²` minors of the generic symmetric matrix.
pub fn tangent_dim_chart<F: Field>(q: &LinMatrixSpace<F>, params: &Params) -> Result<TangentReport> {
    check_field(q.field())?;
    let q = prepare(q, params)?;
    let (n, r, kp1) = (params.n as usize, params.r as usize, params.k as usize + 1);
    check_on_scheme(&q, r)?;
    let field = q.field();
    let nslots = n * (n + 1) / 2;
    let minors = combinations(n, r)
        .into_iter()
        .flat_map(|i| combinations(n, r).into_iter().map(move |j| (i.clone(), j)));
    let lin = linearize(field, kp1, q.entries(), nslots, |a, b| Some(slot_index(n, a, b)), minors)?;
    let lift_unknowns = nslots * kp1;
    let rank = lin.ech.rank();
    let nullity = lift_unknowns - rank;
    // Trivial deformations N = Q∘φ for the (k+1)² elementary maps φ: z_a ↦ z_b.
    let coeffs: Vec<Vec<F::Elem>> =
        upper_slots(n).iter().map(|&(i, j)| q.entry(i, j).linear_coeffs().expect("linear")).collect();
    for a in 0..kp1 {
        for b in 0..kp1 {
            let mut v = vec![field.zero(); lift_unknowns];
            for (slot, c) in coeffs.iter().enumerate() {
                v[slot * kp1 + b] = c[a].clone();
            }
            if !lin.ech.annihilates(&v) {
                return Err(Error::IdentityViolated(format!("trivial deformation z{a} -> z{b} violates the constraints")));
            }
        }
    }
    if nullity < kp1 * kp1 {
        return Err(Error::IdentityViolated("nullity below the trivial deformations".into()));
    }
    Ok(TangentReport {
        method: Method::Chart,
        field: field.name(),
        n: params.n,
        r: params.r,
        k: params.k,
        s: None,
        ambient_grassmannian_dim: grassmannian_dim(params.n, params.k),
        lift_unknowns,
        constraint_rows: lin.rows,
        rank,
        tangent_dim: nullity - kp1 * kp1,
        seed: None,
        a_det: None,
        branch: None,
        notes: Vec::new(),
    })
}

fn a_system<F: Field>(field: &F, nvars: usize, c: usize, d: &[Vec<Poly<F>>]) -> Result<Linearization<F>> {
    let s = d.len();
    if d.iter().any(|row| row.len() != c) {
        return Err(Error::Shape(format!("D must be {s}×{c}")));
    }
    if d.iter().flatten().any(|p| p.nvars() != nvars || !p.is_homogeneous_of_degree(1)) {
        return Err(Error::Shape(format!("D must have linear entries in {nvars} variables")));
    }
    let size = s + c;
    let base: Vec<Vec<Poly<F>>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| match (i < s, j < s) {
                    (true, false) => d[i][j - s].clone(),
                    (false, true) => d[j][i - s].clone(),
                    _ => Poly::zero(field, nvars),
                })
                .collect()
        })
        .collect();
    let anchor: Vec<usize> = (0..s).collect();
    let extend = |set: Vec<usize>| anchor.iter().copied().chain(set.into_iter().map(|x| s + x)).collect::<Vec<_>>();
    let sets: Vec<Vec<usize>> = combinations(c, s + 1).into_iter().map(extend).collect();
    let minors = sets.iter().flat_map(|i| sets.iter().map(move |j| (i.clone(), j.clone())));
    let slot_of = |a: usize, b: usize| (a >= s && b >= s).then(|| slot_index(c, a - s, b - s));
    linearize(field, nvars, &base, c * (c + 1) / 2, slot_of, minors)
}

/// Dimension of the symmetric `c×c` blocks `A` of linear forms killing every
/// s-anchored `(2s+1)`-minor of `[[0, D], [Dᵗ, A]]`; `D` is `s×c`.
pub fn a_det<F: Field>(field: &F, nvars: usize, c: usize, d: &[Vec<Poly<F>>]) -> Result<usize> {
    let lin = a_system(field, nvars, c, d)?;
    Ok(lin.ech.ncols() - lin.ech.rank())
}

/// Outcome of the row-span membership test on the `A`-solutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Membership {
    Verified,
    Skipped(String),
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ASolutions<F: Field> {
    pub dim: usize,
    /// Each basis element as a symmetric `c×c` matrix of linear forms.
    pub basis: Vec<Vec<Vec<Poly<F>>>>,
    pub membership: Membership,
}

/// Basis of the `A`-solution space, tested against the span of `D̃ + D̃ᵗ`
/// where `D̃` runs over `c×c` matrices whose rows are rows of `D`.
pub fn solution_space_a<F: Field>(field: &F, nvars: usize, c: usize, d: &[Vec<Poly<F>>]) -> Result<ASolutions<F>> {
    let s = d.len();
    let lin = a_system(field, nvars, c, d)?;
    let null = lin.ech.nullspace();
    let slots = upper_slots(c);
    let to_matrix = |v: &[F::Elem]| -> Vec<Vec<Poly<F>>> {
        let mut m = vec![vec![Poly::zero(field, nvars); c]; c];
        for (slot, &(i, j)) in slots.iter().enumerate() {
            let p = Poly::linear(field, &v[slot * nvars..(slot + 1) * nvars]);
            m[i][j] = p.clone();
            m[j][i] = p;
        }
        m
    };
    let basis: Vec<_> = null.iter().map(|v| to_matrix(v)).collect();
    let mut gens = Echelon::new(field, slots.len() * nvars);
    for i in 0..c {
        for l in 0..s {
            let mut v = vec![field.zero(); slots.len() * nvars];
            for j in 0..c {
                let coeffs = d[l][j].linear_coeffs().expect("linear");
                // (D̃ + D̃ᵗ)[i][j] gains D[l][j]; the diagonal gets it twice.
                let slot = slot_index(c, i, j);
                for (t, x) in coeffs.iter().enumerate() {
                    let cur = &v[slot * nvars + t];
                    let add = if i == j { field.add(x, x) } else { x.clone() };
                    v[slot * nvars + t] = field.add(cur, &add);
                }
            }
            gens.insert(v);
        }
    }
    let expected = s * c;
    let membership = if gens.rank() < expected || null.len() != expected {
        Membership::Skipped(format!(
            "D not general: generator rank {}, solution dimension {}, expected {expected}",
            gens.rank(),
            null.len()
        ))
    } else if let Some(pos) = null.iter().position(|v| !gens.contains(v)) {
        Membership::Failed(format!("basis element {pos} is not of the form D̃ + D̃ᵗ"))
    } else {
        Membership::Verified
    };
    Ok(ASolutions { dim: null.len(), basis, membership })
}

/// Blocks of a point in nested s-compression block form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm<F: Field> {
    pub s: usize,
    /// `s×(s+1+n−r)`, rows `0..s`, columns `r−s−1..n`.
    pub d: Vec<Vec<Poly<F>>>,
    /// `(r−2s−1)×(r−2s−1)`, rows and columns `s..r−s−1`.
    pub e: Vec<Vec<Poly<F>>>,
}

/// Splits `q` into blocks, failing if the required zero blocks are not zero.
pub fn block_form<F: Field>(q: &LinMatrixSpace<F>, params: &Params, s: u32) -> Result<BlockForm<F>> {
    if s > params.s_max() {
        return Err(Error::Domain(format!("s={s} exceeds s_max={}", params.s_max())));
    }
    let (n, r, s) = (params.n as usize, params.r as usize, s as usize);
    if q.rows() != n || q.cols() != n {
        return Err(Error::Shape(format!("expected a {n}×{n} matrix")));
    }
    let mid = r - s - 1;
    for i in 0..n {
        for j in 0..n {
            let must_vanish = (i >= s && j >= mid) || (i >= mid && j >= s);
            if must_vanish && !q.entry(i, j).is_zero() {
                return Err(Error::Shape(format!("entry ({i},{j}) must vanish in s={s} block form")));
            }
        }
    }
    let d = (0..s).map(|i| (mid..n).map(|j| q.entry(i, j).clone()).collect()).collect();
    let e = (s..mid).map(|i| (s..mid).map(|j| q.entry(i, j).clone()).collect()).collect();
    Ok(BlockForm { s, d, e })
}

/// Tangent dimension from the block decomposition of a nested s-compression point.
pub fn tangent_dim_blocks<F: Field>(q: &LinMatrixSpace<F>, params: &Params, s: u32) -> Result<TangentReport> {
    check_field(q.field())?;
    let q = prepare(q, params)?;
    let blocks = block_form(&q, params, s)?;
    let field = q.field();
    let (n, k) = (i64::from(params.n), i64::from(params.k));
    let kp1 = params.k as usize + 1;
    let e_size = blocks.e.len();
    let c = params.kernel_dim(s) as usize;
    let mut report = TangentReport {
        method: Method::Blocks,
        field: field.name(),
        n: params.n,
        r: params.r,
        k: params.k,
        s: Some(s),
        ambient_grassmannian_dim: grassmannian_dim(params.n, params.k),
        lift_unknowns: 0,
        constraint_rows: 0,
        rank: 0,
        tangent_dim: 0,
        seed: None,
        a_det: None,
        branch: None,
        notes: Vec::new(),
    };
    if e_size > 0 && det_polymat(field, kp1, &blocks.e)?.is_zero() {
        report.branch = Some(Branch::DegenerateE);
        report.tangent_dim = to_usize(&((binom(n + 1, 2) - 1 - k) * (k + 1)))?;
        return Ok(report);
    }
    let lin = a_system(field, kp1, c, &blocks.d)?;
    let adet = lin.ech.ncols() - lin.ech.rank();
    let kap = kappa(params, s)?;
    let total = BigInt::from(adet) + BigInt::from(c * e_size * kp1) + (kap - k) * (k + 1);
    report.branch = Some(Branch::Anchored);
    report.lift_unknowns = lin.ech.ncols();
    report.constraint_rows = lin.rows;
    report.rank = lin.ech.rank();
    report.a_det = Some(adet);
    report.tangent_dim = to_usize(&total)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{PrimeField, Rationals};
    use crate::spaces::{generic_matrix, middle_point_for, standard_compression};

    #[test]
    fn slot_indices_are_row_major() {
        for size in 1..7 {
            for (t, &(i, j)) in upper_slots(size).iter().enumerate() {
                assert_eq!(slot_index(size, i, j), t);
                assert_eq!(slot_index(size, j, i), t);
            }
        }
    }

    #[test]
    fn middle_point_n3() {
        let f = Rationals;
        let q = middle_point_for(&f, 3, 1).unwrap();
        let p = Params::symmetric(3, 3, 1).unwrap();
        let chart = tangent_dim_chart(&q, &p).unwrap();
        assert_eq!(chart.lift_unknowns, 12);
        assert_eq!(chart.tangent_dim, 4);
        let blocks = tangent_dim_blocks(&q, &p, 1).unwrap();
        assert_eq!(blocks.a_det, Some(2));
        assert_eq!(blocks.tangent_dim, 4);
    }

    #[test]
    fn a_det_small_cases() {
        let f = Rationals;
        let z = |t| Poly::var(&f, 2, t);
        assert_eq!(a_det(&f, 2, 2, &[vec![z(0), z(1)]]).unwrap(), 2);
        let zero = vec![vec![Poly::zero(&f, 2); 2]];
        assert_eq!(a_det(&f, 2, 2, &zero).unwrap(), 2 * 3);
        assert_eq!(a_det(&f, 2, 3, &[]).unwrap(), 0);
    }

    #[test]
    fn solution_space_for_pencil_row() {
        let f = Rationals;
        let z = |t| Poly::var(&f, 2, t);
        let sol = solution_space_a(&f, 2, 2, &[vec![z(0), z(1)]]).unwrap();
        assert_eq!(sol.dim, 2);
        assert_eq!(sol.membership, Membership::Verified);
        let zero_row = vec![vec![Poly::zero(&f, 2); 2]];
        let sol = solution_space_a(&f, 2, 2, &zero_row).unwrap();
        assert!(sol.dim > 2);
        assert!(matches!(sol.membership, Membership::Skipped(_)));
    }

    #[test]
    fn rejects_points_off_the_scheme() {
        let f = PrimeField::new(101).unwrap();
        let p = Params::symmetric(2, 2, 2);
        assert!(p.is_err());
        let g = generic_matrix(&f, Variant::Symmetric, 3);
        let p = Params::symmetric(3, 3, 5).unwrap();
        assert!(matches!(tangent_dim_chart(&g, &p), Err(Error::NotOnScheme { .. })));
    }

    #[test]
    fn span_must_match_k() {
        let f = Rationals;
        let q = standard_compression(&f, &Params::symmetric(3, 3, 0).unwrap(), 1).unwrap();
        let p = Params::symmetric(3, 3, 1).unwrap();
        assert_eq!(tangent_dim_chart(&q, &p), Err(Error::SpanMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn characteristic_two_is_refused() {
        let f = PrimeField::new(2).unwrap();
        let q = middle_point_for(&f, 3, 1).unwrap();
        let p = Params::symmetric(3, 3, 1).unwrap();
        assert_eq!(tangent_dim_chart(&q, &p), Err(Error::CharacteristicTwo));
    }
}
