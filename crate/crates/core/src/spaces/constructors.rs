use super::{LinMatrixSpace, Symmetry};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Poly};
use crate::invariants::{kappa, to_usize, Params, Variant};

fn symmetry_of(variant: Variant) -> Symmetry {
    match variant {
        Variant::Symmetric => Symmetry::Symmetric,
        Variant::Alternating => Symmetry::Alternating,
        Variant::Rectangular { .. } => Symmetry::None,
    }
}

fn is_free(symmetry: Symmetry, i: usize, j: usize) -> bool {
    match symmetry {
        Symmetry::Symmetric => i <= j,
        Symmetry::Alternating => i < j,
        Symmetry::None => true,
    }
}

/// Matrix with one fresh variable `x_i_j` (1-based) per free position inside `shape`.
fn staircase_space<F: Field>(field: &F, symmetry: Symmetry, rows: usize, cols: usize, shape: &[usize]) -> LinMatrixSpace<F> {
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .filter(|&(i, j)| is_free(symmetry, i, j) && j < shape[i])
        .collect();
    let vars: Vec<String> = cells.iter().map(|(i, j)| format!("x_{}_{}", i + 1, j + 1)).collect();
    let nv = vars.len();
    let var_of = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j)).map(|t| Poly::var(field, nv, t));
    let space = if symmetry == Symmetry::None {
        let entries = (0..rows)
            .map(|i| (0..cols).map(|j| var_of(i, j).unwrap_or_else(|| Poly::zero(field, nv))).collect())
            .collect();
        LinMatrixSpace::new(field, symmetry, vars, entries)
    } else {
        LinMatrixSpace::from_upper(field, symmetry, vars, rows, |i, j| {
            var_of(i, j).unwrap_or_else(|| Poly::zero(field, nv))
        })
    };
    space.expect("staircase construction is well formed")
}

/// The generic symmetric, alternating or rectangular matrix.
pub fn generic_matrix<F: Field>(field: &F, variant: Variant, n: usize) -> LinMatrixSpace<F> {
    let rows = match variant {
        Variant::Rectangular { m } => m as usize,
        _ => n,
    };
    staircase_space(field, symmetry_of(variant), rows, n, &vec![n; rows])
}

/// Row lengths of the star region of the standard s-compression space.
pub fn standard_shape(params: &Params, s: u32) -> Result<Vec<usize>> {
    if s > params.s_max() {
        return Err(Error::Domain(format!("s={s} exceeds s_max={}", params.s_max())));
    }
    let (n, r, s) = (params.n as usize, params.r as usize, s as usize);
    Ok(match params.variant {
        Variant::Rectangular { m } => (0..m as usize).map(|i| if i < s { n } else { r - s - 1 }).collect(),
        _ => (0..n)
            .map(|i| {
                if i < s {
                    n
                } else if i < r - s - 1 {
                    r - s - 1
                } else {
                    s
                }
            })
            .collect(),
    })
}

/// Standard s-compression space with generic names on the star blocks.
pub fn standard_compression<F: Field>(field: &F, params: &Params, s: u32) -> Result<LinMatrixSpace<F>> {
    let shape = standard_shape(params, s)?;
    Ok(staircase_space(field, symmetry_of(params.variant), params.rows() as usize, params.n as usize, &shape))
}

/// The s×(s+1) band with `z[0]`, `z[1]`, `z[2]` on the diagonal and two superdiagonals.
pub fn block_d<F: Field>(field: &F, s: usize, z: &[Poly<F>; 3]) -> Result<Vec<Vec<Poly<F>>>> {
    if s == 0 {
        return Err(Error::Domain("D_s needs s ≥ 1".into()));
    }
    let nv = z[0].nvars();
    if z.iter().any(|p| p.nvars() != nv) {
        return Err(Error::ArityMismatch { left: nv, right: z.iter().map(Poly::nvars).max().unwrap_or(0) });
    }
    let mut d = vec![vec![Poly::zero(field, nv); s + 1]; s];
    for (i, row) in d.iter_mut().enumerate() {
        for (t, zt) in z.iter().enumerate() {
            if i + t <= s {
                row[i + t] = zt.clone();
            }
        }
    }
    Ok(d)
}

/// `[[0, B], [Bᵗ, 0]]` with `B` the s×(n'−s) bidiagonal `z0`/`z1` band.
pub fn kronecker_pencil<F: Field>(field: &F, s: usize, n_prime: usize) -> Result<LinMatrixSpace<F>> {
    if s == 0 || n_prime < 2 * s + 1 {
        return Err(Error::Domain(format!("kronecker pencil needs s ≥ 1 and n' ≥ 2s+1, got s={s}, n'={n_prime}")));
    }
    let vars = Poly::<F>::default_names(2);
    LinMatrixSpace::from_upper(field, Symmetry::Symmetric, vars, n_prime, |i, j| {
        if i < s && j >= s {
            let col = j - s;
            if col == i {
                return Poly::var(field, 2, 0);
            }
            if col == i + 1 {
                return Poly::var(field, 2, 1);
            }
        }
        Poly::zero(field, 2)
    })
}

/// `[[z0, z1, 0…], [z1, 0, …], …]`, a pencil lying in every nested compression locus.
pub fn intersection_point<F: Field>(field: &F, n: usize) -> Result<LinMatrixSpace<F>> {
    if n < 2 {
        return Err(Error::Domain("intersection point needs n ≥ 2".into()));
    }
    LinMatrixSpace::from_upper(field, Symmetry::Symmetric, Poly::<F>::default_names(2), n, |i, j| match (i, j) {
        (0, 0) => Poly::var(field, 2, 0),
        (0, 1) => Poly::var(field, 2, 1),
        _ => Poly::zero(field, 2),
    })
}

/// `[[B, D], [Dᵗ, 0]]` for odd `n = 2s+1`; the entries must span a (k+1)-dimensional space.
pub fn middle_point<F: Field>(
    field: &F,
    n: usize,
    k: usize,
    d: &[Vec<Poly<F>>],
    b: &[Vec<Poly<F>>],
) -> Result<LinMatrixSpace<F>> {
    if n.is_multiple_of(2) {
        return Err(Error::Domain("middle point needs n odd".into()));
    }
    let s = (n - 1) / 2;
    if d.len() != s || d.iter().any(|r| r.len() != s + 1) {
        return Err(Error::Shape(format!("D must be {s}×{}", s + 1)));
    }
    if b.len() != s || b.iter().any(|r| r.len() != s) {
        return Err(Error::Shape(format!("B must be {s}×{s}")));
    }
    let nv = d.first().and_then(|r| r.first()).map_or(k + 1, Poly::nvars);
    let entries: Vec<Vec<Poly<F>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i < s, j < s) {
                    (true, true) => b[i][j].clone(),
                    (true, false) => d[i][j - s].clone(),
                    (false, true) => d[j][i - s].clone(),
                    (false, false) => Poly::zero(field, nv),
                })
                .collect()
        })
        .collect();
    let q = LinMatrixSpace::new(field, Symmetry::Symmetric, Poly::<F>::default_names(nv), entries)?;
    let span = q.span_dim();
    if span != k + 1 {
        return Err(Error::SpanMismatch { expected: k + 1, found: span });
    }
    Ok(q)
}

/// The standard middle point for `n = r` odd and `1 ≤ k ≤ κ(s)`, `s = (n−1)/2`.
///
/// Uses `D = D_s(z0, z1, z2)` (with `z2 = 0` when `k = 1`); the remaining
/// variables fill `B`, then the off-band slots of `D`, then are added onto the band.
pub fn middle_point_for<F: Field>(field: &F, n: usize, k: usize) -> Result<LinMatrixSpace<F>> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::Domain("middle point needs odd n ≥ 3".into()));
    }
    let s = (n - 1) / 2;
    let params = Params::symmetric(n as u32, n as u32, k as u32)?;
    let kap = to_usize(&kappa(&params, s as u32)?)?;
    if k == 0 || k > kap {
        return Err(Error::Domain(format!("middle point needs 1 ≤ k ≤ κ(s) = {kap}")));
    }
    let nv = k + 1;
    let z = |t: usize| Poly::var(field, nv, t);
    let z2 = if k >= 2 && s >= 2 { z(2) } else { Poly::zero(field, nv) };
    let mut d = block_d(field, s, &[z(0), z(1), z2])?;
    let mut b = vec![vec![Poly::zero(field, nv); s]; s];
    let mut next = if k >= 2 && s >= 2 { 3 } else { 2 };
    let mut b_slots = Vec::new();
    for i in 0..s {
        for j in i..s {
            b_slots.push((i, j));
        }
    }
    let in_band = |i: usize, j: usize| j >= i && j <= i + 2;
    let off_band: Vec<(usize, usize)> = (0..s).flat_map(|i| (0..=s).map(move |j| (i, j))).filter(|&(i, j)| !in_band(i, j)).collect();
    let band: Vec<(usize, usize)> = (0..s).flat_map(|i| (0..=s).map(move |j| (i, j))).filter(|&(i, j)| in_band(i, j)).collect();
    for &(i, j) in &b_slots {
        if next > k {
            break;
        }
        b[i][j] = z(next);
        b[j][i] = z(next);
        next += 1;
    }
    for &(i, j) in off_band.iter().chain(&band) {
        if next > k {
            break;
        }
        d[i][j] = &d[i][j] + &z(next);
        next += 1;
    }
    middle_point(field, n, k, &d, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rationals;

    #[test]
    fn generic_matrices() {
        let f = Rationals;
        let g = generic_matrix(&f, Variant::Symmetric, 2);
        assert_eq!(g.span_dim(), 3);
        assert_eq!(g.entry(0, 1).display_with(g.vars()), "x_1_2");
        assert_eq!(g.entry(1, 0), g.entry(0, 1));
        let a = generic_matrix(&f, Variant::Alternating, 3);
        assert_eq!(a.span_dim(), 3);
        assert!(a.entry(1, 1).is_zero());
        assert_eq!(a.entry(1, 0), &-a.entry(0, 1));
        let r = generic_matrix(&f, Variant::Rectangular { m: 2 }, 3);
        assert_eq!((r.rows(), r.cols(), r.span_dim()), (2, 3, 6));
    }

    #[test]
    fn standard_compression_spans() {
        let f = Rationals;
        let p = Params::symmetric(6, 6, 0).unwrap();
        assert_eq!(standard_compression(&f, &p, 0).unwrap().span_dim(), 15);
        let p = Params::rectangular(3, 4, 3, 0).unwrap();
        let q = standard_compression(&f, &p, 0).unwrap();
        assert_eq!(q.span_dim(), 6);
        for i in 0..3 {
            for j in 2..4 {
                assert!(q.entry(i, j).is_zero());
            }
        }
        let p = Params::symmetric(4, 4, 0).unwrap();
        assert_eq!(standard_shape(&p, 1).unwrap(), vec![4, 2, 1, 1]);
    }

    #[test]
    fn banded_blocks() {
        let f = Rationals;
        let z = |t| Poly::var(&f, 3, t);
        let d = block_d(&f, 2, &[z(0), z(1), z(2)]).unwrap();
        let shown: Vec<Vec<String>> = d.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
        assert_eq!(shown, vec![vec!["z0", "z1", "z2"], vec!["0", "z0", "z1"]]);
        let d = block_d(&f, 3, &[z(0), z(1), z(2)]).unwrap();
        assert!(d[2][0].is_zero() && d[2][1].is_zero());
        assert_eq!((d[2][2].clone(), d[2][3].clone()), (z(0), z(1)));
        let d = block_d(&f, 1, &[z(0), z(1), z(2)]).unwrap();
        assert_eq!(d, vec![vec![z(0), z(1)]]);
    }

    #[test]
    fn pencils() {
        let f = Rationals;
        let p = kronecker_pencil(&f, 1, 3).unwrap();
        assert_eq!(p.entry(0, 1).to_string(), "z0");
        assert_eq!(p.entry(0, 2).to_string(), "z1");
        assert_eq!(p.span_dim(), 2);
        let p = kronecker_pencil(&f, 2, 5).unwrap();
        assert_eq!(p.entry(1, 3).to_string(), "z0");
        assert_eq!(p.entry(1, 4).to_string(), "z1");
        assert!(p.entry(0, 4).is_zero());
    }

    #[test]
    fn middle_points_have_requested_span() {
        let f = Rationals;
        for n in [3usize, 5, 7] {
            let s = (n - 1) / 2;
            let kap = s * (s + 1) + (s + 1) * s / 2 - 1;
            for k in 1..=kap {
                let q = middle_point_for(&f, n, k).unwrap();
                assert_eq!(q.span_dim(), k + 1, "n={n} k={k}");
            }
            assert!(middle_point_for(&f, n, kap + 1).is_err());
        }
        assert!(middle_point_for(&f, 4, 1).is_err());
    }
}
