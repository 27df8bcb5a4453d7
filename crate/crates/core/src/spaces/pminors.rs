use crate::error::{Error, Result};
use crate::exactalg::{det_polymat, Field, Monomial, Poly};
use crate::invariants::binom;

/// Closed form of the maximal minor of `D_s(z0,z1,z2)` with column `i` (1-based) deleted.
pub fn p_closed<F: Field>(field: &F, s: usize, i: usize) -> Result<Poly<F>> {
    if s == 0 || i == 0 || i > s + 1 {
        return Err(Error::Domain(format!("p_closed needs s ≥ 1 and 1 ≤ i ≤ s+1, got s={s}, i={i}")));
    }
    let mut p = Poly::zero(field, 3);
    let top = s + 1 - i;
    for l in 0..=top / 2 {
        let c = binom((s + 1 - i - l) as i64, l as i64);
        let c = num_rational::BigRational::from_integer(if l % 2 == 1 { -c } else { c });
        let c = field.from_rational(&c).expect("integer coefficient");
        let mono = Monomial::new(vec![(i + l - 1) as u32, (top - 2 * l) as u32, l as u32]);
        p.add_term(mono, c);
    }
    Ok(p)
}

/// Determinant of the s×s matrix left after deleting column `i` (1-based) of `d`.
pub fn p_minor<F: Field>(field: &F, d: &[Vec<Poly<F>>], i: usize) -> Result<Poly<F>> {
    let s = d.len();
    if d.iter().any(|r| r.len() != s + 1) {
        return Err(Error::Shape(format!("expected an {s}×{} matrix", s + 1)));
    }
    if i == 0 || i > s + 1 {
        return Err(Error::Domain(format!("column {i} out of range")));
    }
    let nv = d.first().map_or(0, |r| r[0].nvars());
    let sub: Vec<Vec<Poly<F>>> =
        d.iter().map(|row| row.iter().enumerate().filter(|(j, _)| *j + 1 != i).map(|(_, p)| p.clone()).collect()).collect();
    det_polymat(field, nv, &sub)
}

/// `(−1)^s Σ (−1)^{i+j} a_ij p_i p_j`, checked against the determinant of `[[0, D], [Dᵗ, A]]`.
/// For odd `s` this is `−Σ (−1)^{i+j} a_ij p_i p_j`.
pub fn bordered_expand<F: Field>(field: &F, a: &[Vec<Poly<F>>], d: &[Vec<Poly<F>>]) -> Result<Poly<F>> {
    let s = d.len();
    if s == 0 || d.iter().any(|r| r.len() != s + 1) {
        return Err(Error::Shape(format!("D must be s×(s+1) with s ≥ 1, got {} rows", s)));
    }
    if a.len() != s + 1 || a.iter().any(|r| r.len() != s + 1) {
        return Err(Error::Shape(format!("A must be {0}×{0}", s + 1)));
    }
    for i in 0..=s {
        for j in 0..i {
            if a[i][j] != a[j][i] {
                return Err(Error::Shape("A must be symmetric".into()));
            }
        }
    }
    let nv = d[0][0].nvars();
    let p: Vec<Poly<F>> = (1..=s + 1).map(|i| p_minor(field, d, i)).collect::<Result<_>>()?;
    let mut expansion = Poly::zero(field, nv);
    for i in 0..=s {
        for j in 0..=s {
            let term = &(&a[i][j] * &p[i]) * &p[j];
            expansion = if (i + j + s) % 2 == 1 { &expansion - &term } else { &expansion + &term };
        }
    }
    let size = 2 * s + 1;
    let bordered: Vec<Vec<Poly<F>>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| match (i < s, j < s) {
                    (true, true) => Poly::zero(field, nv),
                    (true, false) => d[i][j - s].clone(),
                    (false, true) => d[j][i - s].clone(),
                    (false, false) => a[i - s][j - s].clone(),
                })
                .collect()
        })
        .collect();
    let direct = det_polymat(field, nv, &bordered)?;
    if direct != expansion {
        return Err(Error::IdentityViolated(format!("bordered determinant {direct} differs from expansion {expansion}")));
    }
    Ok(expansion)
}
