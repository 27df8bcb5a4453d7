use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{block_form, tangent_dim_blocks, tangent_dim_chart, Branch};
use crate::error::{Error, Result};
use crate::exactalg::{det_polymat, Field, Poly};
use crate::invariants::{kappa, to_usize, Params};
use crate::spaces::{enumerate_borel_fixed, standard_shape, LinMatrixSpace, Symmetry};

/// Resampling budget for random points.
pub const MAX_ATTEMPTS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    /// Every block entry a random linear form; `det E ≢ 0` enforced.
    General,
    /// Each entry zero with probability 1/2; `det E ≡ 0` allowed.
    Sparse,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomPoint<F: Field> {
    pub space: LinMatrixSpace<F>,
    pub seed: u64,
    pub attempts: usize,
}

fn random_form<F: Field, R: Rng>(field: &F, nvars: usize, rng: &mut R) -> Poly<F> {
    let coeffs: Vec<F::Elem> = (0..nvars).map(|_| field.random_elem(rng)).collect();
    Poly::linear(field, &coeffs)
}

/// A random (k+1)-dimensional subspace of the standard s-compression space.
pub fn random_block_point<F: Field>(field: &F, params: &Params, s: u32, seed: u64, kind: PointKind) -> Result<RandomPoint<F>> {
    let kap = to_usize(&kappa(params, s)?)?;
    let k = params.k as usize;
    if k > kap {
        return Err(Error::Domain(format!("k={k} exceeds κ({s})={kap}")));
    }
    let shape = standard_shape(params, s)?;
    let n = params.n as usize;
    let nv = k + 1;
    let e_range = s as usize..(params.r - s - 1) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_ATTEMPTS {
        let mut upper = vec![vec![Poly::zero(field, nv); n]; n];
        for (i, row) in upper.iter_mut().enumerate() {
            for cell in row.iter_mut().take(shape[i]).skip(i) {
                if kind == PointKind::General || rng.gen_bool(0.5) {
                    *cell = random_form(field, nv, &mut rng);
                }
            }
        }
        let space = LinMatrixSpace::from_upper(field, Symmetry::Symmetric, Poly::<F>::default_names(nv), n, |i, j| {
            upper[i][j].clone()
        })?;
        if space.span_dim() != nv {
            continue;
        }
        if kind == PointKind::General && !e_range.is_empty() {
            let e: Vec<Vec<Poly<F>>> =
                e_range.clone().map(|i| e_range.clone().map(|j| space.entry(i, j).clone()).collect()).collect();
            if det_polymat(field, nv, &e)?.is_zero() {
                continue;
            }
        }
        return Ok(RandomPoint { space, seed, attempts: attempt });
    }
    Err(Error::SizeLimit(format!("no admissible point after {MAX_ATTEMPTS} attempts with seed {seed}")))
}

/// Staircase (Borel-fixed) points of `F_k` lying in the standard s-compression space.
pub fn structured_points<F: Field>(field: &F, params: &Params, s: u32) -> Vec<(String, LinMatrixSpace<F>)> {
    enumerate_borel_fixed(params)
        .into_iter()
        .filter(|p| p.fits.contains(&s))
        .map(|p| (format!("borel{:?}", p.lambda), p.to_space(field)))
        .collect()
}

/// One comparison of the two tangent methods.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCase {
    pub n: u32,
    pub r: u32,
    pub k: u32,
    pub s: u32,
    pub point: String,
    pub seed: Option<u64>,
    pub chart: usize,
    pub blocks: usize,
    pub branch: Option<Branch>,
}

impl CrossCase {
    pub fn agrees(&self) -> bool {
        self.chart == self.blocks
    }
}

/// Both methods on general, sparse and staircase points for all
/// `3 ≤ r ≤ n ≤ max_n`, `s ≤ s_max`, `1 ≤ k ≤ min(κ(s), max_k)`.
pub fn cross_method_grid<F: Field>(
    field: &F,
    max_n: u32,
    max_k: u32,
    seed: u64,
    borel_per_case: usize,
) -> Result<Vec<CrossCase>> {
    let mut out = Vec::new();
    let mut counter = 0u64;
    for n in 3..=max_n {
        for r in 3..=n {
            let base = Params::symmetric(n, r, 0)?;
            for s in 0..=base.s_max() {
                let kap = to_usize(&kappa(&base, s)?)? as u32;
                for k in 1..=kap.min(max_k) {
                    let params = base.with_k(k)?;
                    let mut points: Vec<(String, Option<u64>, LinMatrixSpace<F>)> = Vec::new();
                    for kind in [PointKind::General, PointKind::Sparse] {
                        counter += 1;
                        let case_seed = seed.wrapping_mul(1_000_003).wrapping_add(counter);
                        let p = random_block_point(field, &params, s, case_seed, kind)?;
                        let label = match kind {
                            PointKind::General => "general",
                            PointKind::Sparse => "sparse",
                        };
                        points.push((label.to_string(), Some(case_seed), p.space));
                    }
                    for (label, space) in structured_points(field, &params, s).into_iter().take(borel_per_case) {
                        points.push((label, None, space));
                    }
                    for (label, case_seed, space) in points {
                        block_form(&space, &params, s)?;
                        let chart = tangent_dim_chart(&space, &params)?;
                        let blocks = tangent_dim_blocks(&space, &params, s)?;
                        out.push(CrossCase {
                            n,
                            r,
                            k,
                            s,
                            point: label,
                            seed: case_seed,
                            chart: chart.tangent_dim,
                            blocks: blocks.tangent_dim,
                            branch: blocks.branch,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::PrimeField;
    use crate::invariants::{dim_component, nonreduced_gap, tangent_formula_general};

    #[test]
    fn general_point_n5_r4() {
        let f = PrimeField::default();
        let p = Params::symmetric(5, 4, 1).unwrap();
        let pt = random_block_point(&f, &p, 0, 7, PointKind::General).unwrap();
        let chart = tangent_dim_chart(&pt.space, &p).unwrap();
        assert_eq!(chart.tangent_dim, 20);
        let dim = num_bigint::BigInt::from(chart.tangent_dim);
        assert_eq!(tangent_formula_general(&p, 0).unwrap(), dim);
        assert_eq!(dim - dim_component(&p, 0).unwrap(), nonreduced_gap(&p, 0).unwrap());
    }

    #[test]
    fn same_seed_same_point() {
        let f = PrimeField::default();
        let p = Params::symmetric(5, 4, 2).unwrap();
        let a = random_block_point(&f, &p, 0, 11, PointKind::Sparse).unwrap();
        let b = random_block_point(&f, &p, 0, 11, PointKind::Sparse).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_branch_value() {
        let f = PrimeField::default();
        let p = Params::symmetric(5, 4, 1).unwrap();
        let (_, q) = structured_points(&f, &p, 0).into_iter().next().unwrap();
        let blocks = tangent_dim_blocks(&q, &p, 0).unwrap();
        assert_eq!(blocks.branch, Some(Branch::DegenerateE));
        assert_eq!(blocks.tangent_dim, 26);
        assert_eq!(tangent_dim_chart(&q, &p).unwrap().tangent_dim, 26);
    }
}
