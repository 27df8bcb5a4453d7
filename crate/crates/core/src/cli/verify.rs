use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{jensen_check, Echelon, Field, GaloisField, Monomial, Poly, PrimeField, Rationals};
use crate::invariants::{build_graph, connected_components, cycle_disconnected, is_nonempty, kappa_table, Params};
use crate::oracle::{classify_point, find_flags, scan_fano_points};
use crate::spaces::{block_d, bordered_expand, enumerate_borel_fixed, is_borel_pattern, kronecker_pencil, p_closed, p_minor};
use crate::spaces::{LinMatrixSpace, MatrixJson, Symmetry};
use crate::tangent::cross_method_grid;

pub const SUITES: [&str; 6] = ["graph-equivalence", "jensen", "p-minors", "borel", "lines-gf3", "tangent-cross"];

const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_n: Option<u32>,
    pub seed: u64,
    pub max_subspaces: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_n: None, seed: 0, max_subspaces: crate::oracle::DEFAULT_MAX_SUBSPACES }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub checks: u64,
    pub failures: Vec<String>,
    pub summary: String,
}

struct Tally {
    checks: u64,
    failures: Vec<String>,
    failed: u64,
}

impl Tally {
    fn new() -> Self {
        Self { checks: 0, failures: Vec::new(), failed: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn finish(self, suite: &str, summary: String) -> SuiteResult {
        SuiteResult { suite: suite.to_string(), passed: self.failed == 0, checks: self.checks, failures: self.failures, summary }
    }
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteResult> {
    match name {
        "graph-equivalence" => graph_equivalence(opts.max_n.unwrap_or(12)),
        "jensen" => jensen(opts.seed),
        "p-minors" => p_minors(opts.seed),
        "borel" => borel(opts.max_n.unwrap_or(8)),
        "lines-gf3" => lines_gf3(opts.max_subspaces),
        "tangent-cross" => tangent_cross(opts.max_n.unwrap_or(6), opts.seed),
        other => Err(Error::Domain(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", ")))),
    }
}

/// Every valid `Params` shape with `n ≤ max_n`, at `k = 0`.
pub fn all_shapes(max_n: u32) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for r in 3..=n {
            out.push(Params::symmetric(n, r, 0).expect("valid"));
            if r % 2 == 0 {
                out.push(Params::alternating(n, r, 0).expect("valid"));
            }
        }
        for m in 2..=n {
            for r in 2..=m {
                out.push(Params::rectangular(m, n, r, 0).expect("valid"));
            }
        }
    }
    out
}

fn max_kappa(params: &Params) -> u32 {
    let top = kappa_table(params).into_iter().max().expect("s_max ≥ 0");
    u32::try_from(top).expect("small kappa")
}

fn graph_equivalence(max_n: u32) -> Result<SuiteResult> {
    let mut t = Tally::new();
    for base in all_shapes(max_n) {
        for k in 0..=max_kappa(&base) {
            let p = base.with_k(k)?;
            let graph = build_graph(&p);
            let comps = connected_components(&graph).len();
            t.check(cycle_disconnected(&p) == (comps >= 2), || format!("{p}: cycle test disagrees with {comps} components"));
            t.check(is_nonempty(&p) == !graph.is_empty(), || format!("{p}: emptiness disagrees with the graph"));
        }
    }
    let summary = format!("{} checks over n ≤ {max_n}", t.checks);
    Ok(t.finish("graph-equivalence", summary))
}

fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-20i64..=20)), BigInt::from(rng.gen_range(1i64..=10)))
}

fn jensen(seed: u64) -> Result<SuiteResult> {
    let mut t = Tally::new();
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    for a in -5..=5 {
        for b in -5..=5 {
            for c in -5..=5 {
                for l in 0..=8 {
                    t.check(jensen_check(&int(a), &int(b), &int(c), l), || format!("α={a} β={b} γ={c} L={l}"));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let (a, b, c) = (random_rational(&mut rng), random_rational(&mut rng), random_rational(&mut rng));
        let l = rng.gen_range(0..=8);
        t.check(jensen_check(&a, &b, &c, l), || format!("α={a} β={b} γ={c} L={l}"));
    }
    let summary = format!("{} evaluations agree", t.checks - t.failed);
    Ok(t.finish("jensen", summary))
}

/// Rank of the products `p_i p_j`, `i ≤ j`, as vectors of coefficients.
pub fn p_product_rank(s: usize) -> Result<usize> {
    let f = Rationals;
    let p: Vec<Poly<Rationals>> = (1..=s + 1).map(|i| p_closed(&f, s, i)).collect::<Result<_>>()?;
    let mut products = Vec::new();
    for i in 0..=s {
        for j in i..=s {
            products.push(&p[i] * &p[j]);
        }
    }
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for prod in &products {
        for (m, _) in prod.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut ech = Echelon::new(&f, index.len());
    for prod in &products {
        let mut row = vec![f.zero(); index.len()];
        for (m, c) in prod.terms() {
            row[index[m]] = c.clone();
        }
        ech.insert(row);
    }
    Ok(ech.rank())
}

fn p_minors(seed: u64) -> Result<SuiteResult> {
    let mut t = Tally::new();
    let f = Rationals;
    let z = |i| Poly::var(&f, 3, i);
    for s in 1..=6 {
        let d = block_d(&f, s, &[z(0), z(1), z(2)])?;
        for i in 1..=s + 1 {
            t.check(p_closed(&f, s, i)? == p_minor(&f, &d, i)?, || format!("closed form differs at s={s}, i={i}"));
        }
    }
    for s in 1..=5 {
        let want = (s + 2) * (s + 1) / 2;
        let got = p_product_rank(s)?;
        t.check(got == want, || format!("s={s}: products have rank {got}, expected {want}"));
    }
    let gf = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for s in 1..=4 {
        for _ in 0..10 {
            let form = |rng: &mut ChaCha8Rng| {
                let c: Vec<u64> = (0..3).map(|_| gf.random_elem(rng)).collect();
                Poly::linear(&gf, &c)
            };
            let d: Vec<Vec<Poly<PrimeField>>> = (0..s).map(|_| (0..=s).map(|_| form(&mut rng)).collect()).collect();
            let mut a = vec![vec![Poly::zero(&gf, 3); s + 1]; s + 1];
            for i in 0..=s {
                for j in i..=s {
                    let v = form(&mut rng);
                    a[i][j] = v.clone();
                    a[j][i] = v;
                }
            }
            let ok = bordered_expand(&gf, &a, &d).is_ok();
            t.check(ok, || format!("bordered expansion fails at s={s}"));
        }
    }
    let summary = format!("{} identities checked", t.checks);
    Ok(t.finish("p-minors", summary))
}

/// The two 4×4 example matrices: a staircase and a near-staircase.
pub fn borel_example_matrices() -> (LinMatrixSpace<Rationals>, LinMatrixSpace<Rationals>) {
    let make = |rows: [[&str; 4]; 4]| {
        let json = MatrixJson {
            rows: 4,
            cols: 4,
            symmetry: Symmetry::Symmetric,
            entries: rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
            vars: Some((0..5).map(|i| format!("z{i}")).collect()),
        };
        LinMatrixSpace::from_json(&Rationals, &json).expect("well-formed example")
    };
    let left = make([["z0", "z1", "z2", "z3"], ["z1", "z4", "z3", "0"], ["z2", "z3", "0", "0"], ["z3", "0", "0", "0"]]);
    let right = make([["z0", "z1", "z2", "z3"], ["z1", "z4", "0", "0"], ["z2", "0", "0", "0"], ["z3", "0", "0", "0"]]);
    (left, right)
}

fn borel(max_n: u32) -> Result<SuiteResult> {
    let mut t = Tally::new();
    let (left, right) = borel_example_matrices();
    t.check(is_borel_pattern(&right), || "right example rejected".into());
    t.check(!is_borel_pattern(&left), || "left example accepted".into());
    for base in all_shapes(max_n) {
        let top = max_kappa(&base);
        let ambient = u32::try_from(base.ambient_dim()).expect("small");
        for k in 0..=ambient.min(top + 2) {
            let p = base.with_k(k)?;
            let empty = enumerate_borel_fixed(&p).is_empty();
            t.check(empty == (k > top), || format!("{p}: staircase list empty={empty}, max kappa {top}"));
        }
    }
    let summary = format!("{} checks over n ≤ {max_n}", t.checks);
    Ok(t.finish("borel", summary))
}

fn lines_gf3(max_subspaces: u64) -> Result<SuiteResult> {
    let mut t = Tally::new();
    let f = GaloisField::new(3)?;
    let params = Params::symmetric(3, 3, 1)?;
    let mut on_scheme = 0u64;
    let mut unclassified = 0u64;
    let tested = scan_fano_points(&params, &f, max_subspaces, |line| {
        on_scheme += 1;
        if classify_point(line, &params)?.s_values.is_empty() {
            unclassified += 1;
        }
        Ok(())
    })?;
    t.check(tested == 11_011, || format!("{tested} subspaces tested, expected 11011"));
    t.check(unclassified == 0, || format!("{unclassified} lines admit no nested flag over GF(3)"));
    let diag = LinMatrixSpace::from_upper(&f, Symmetry::Symmetric, Poly::<GaloisField>::default_names(2), 3, |i, j| {
        match (i, j) {
            (0, 0) => Poly::var(&f, 2, 0),
            (1, 1) => Poly::var(&f, 2, 1),
            _ => Poly::zero(&f, 2),
        }
    })?;
    let c = classify_point(&diag, &params)?;
    t.check(c.s_values == vec![0], || format!("diag(z0,z1,0) classifies as {:?}", c.s_values));
    let pencil = kronecker_pencil(&f, 1, 3)?;
    let c = classify_point(&pencil, &params)?;
    t.check(c.s_values == vec![1], || format!("Kronecker pencil classifies as {:?}", c.s_values));
    let flags = find_flags(&pencil, 3, 1, true)?.len();
    t.check(flags == 1, || format!("Kronecker pencil has {flags} flags"));
    let summary = format!("{tested} subspaces tested, {on_scheme} lines on the scheme, {unclassified} unclassified");
    Ok(t.finish("lines-gf3", summary))
}

fn tangent_cross(max_n: u32, seed: u64) -> Result<SuiteResult> {
    let mut t = Tally::new();
    let cases = cross_method_grid(&PrimeField::default(), max_n, 3, seed, 2)?;
    for c in &cases {
        t.check(c.agrees(), || format!("n={} r={} s={} k={} {}: chart {} vs blocks {}", c.n, c.r, c.s, c.k, c.point, c.chart, c.blocks));
    }
    let degenerate = cases.iter().filter(|c| c.branch == Some(crate::tangent::Branch::DegenerateE)).count();
    let summary = format!("{} cases ({degenerate} with det E ≡ 0), {} mismatches", cases.len(), t.failed);
    Ok(t.finish("tangent-cross", summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::Variant;

    #[test]
    fn quick_suites_pass() {
        let opts = VerifyOptions { max_n: Some(6), ..VerifyOptions::default() };
        for suite in ["graph-equivalence", "jensen", "p-minors", "borel"] {
            let r = run_suite(suite, &opts).unwrap();
            assert!(r.passed, "{suite}: {:?}", r.failures);
        }
        assert!(run_suite("nonsense", &opts).is_err());
    }

    #[test]
    fn variant_shapes_are_valid() {
        let shapes = all_shapes(4);
        assert!(shapes.iter().any(|p| matches!(p.variant, Variant::Alternating)));
        assert!(shapes.iter().all(|p| p.k == 0));
    }
}
