use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fano::exactalg::{
    det_polymat, gaussian_binomial, jensen_check, rank, Field, Monomial, Poly, PrimeField, Rationals,
};
use fano::invariants::{
    build_graph, connected_components, cycle_disconnected, dim_component, is_irreducible, is_nonempty, kappa,
    kappa_table, nonreduced_gap, tangent_formula_general, Params, Variant,
};
use fano::spaces::bordered_expand;

fn params_strategy(max_n: u32) -> impl Strategy<Value = Params> {
    (3..=max_n, 0u32..3, any::<u32>(), any::<u32>(), 0u32..40).prop_filter_map("valid shape", |(n, v, a, b, k)| {
        let r = 3 + a % (n - 2);
        let variant = match v {
            0 => Variant::Symmetric,
            1 if r % 2 == 0 => Variant::Alternating,
            1 => return None,
            _ => Variant::Rectangular { m: r + b % (n - r + 1) },
        };
        Params::new(variant, n, r, k).ok()
    })
}

fn symmetric_strategy(max_n: u32) -> impl Strategy<Value = Params> {
    (3..=max_n, any::<u32>(), 0u32..60)
        .prop_filter_map("valid shape", |(n, a, k)| Params::symmetric(n, 3 + a % (n - 2), k).ok())
}

fn poly_strategy(nvars: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), -20i64..=20), 0..6)
}

fn build_poly<F: Field>(f: &F, nvars: usize, terms: &[(Vec<u32>, i64)]) -> Poly<F> {
    let mut p = Poly::zero(f, nvars);
    for (e, c) in terms {
        p.add_term(Monomial::new(e.clone()), f.from_i64(*c));
    }
    p
}

proptest! {
    #[test]
    fn kappa_is_convex(p in params_strategy(14)) {
        let table = kappa_table(&p);
        for w in table.windows(3) {
            prop_assert!(&w[0] + &w[2] >= BigInt::from(2) * &w[1], "{p}: {table:?}");
        }
    }

    #[test]
    fn cycle_criterion_matches_components(p in params_strategy(14)) {
        let graph = build_graph(&p);
        prop_assert_eq!(is_nonempty(&p), !graph.vertices.is_empty());
        if !graph.is_empty() {
            prop_assert_eq!(cycle_disconnected(&p), connected_components(&graph).len() >= 2);
        }
    }

    #[test]
    fn gap_closes_the_dimension(p in symmetric_strategy(14)) {
        for s in 0..=p.s_max() {
            if kappa(&p, s).unwrap() < BigInt::from(p.k) {
                prop_assert!(dim_component(&p, s).is_err());
                continue;
            }
            let total = dim_component(&p, s).unwrap() + nonreduced_gap(&p, s).unwrap();
            prop_assert_eq!(total, tangent_formula_general(&p, s).unwrap());
        }
    }

    #[test]
    fn irreducible_means_single_vertex(p in symmetric_strategy(14)) {
        if is_nonempty(&p) && is_irreducible(&p).unwrap() {
            let big_k = BigInt::from(p.k);
            let survivors = kappa_table(&p).into_iter().filter(|v| *v >= big_k).count();
            prop_assert_eq!(survivors, 1);
        }
    }

    #[test]
    fn ring_laws(a in poly_strategy(3), b in poly_strategy(3), c in poly_strategy(3)) {
        let f = PrimeField::default();
        let (a, b, c) = (build_poly(&f, 3, &a), build_poly(&f, 3, &b), build_poly(&f, 3, &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(3), b in poly_strategy(3), x in prop::collection::vec(-50i64..50, 3)) {
        let f = Rationals;
        let (a, b) = (build_poly(&f, 3, &a), build_poly(&f, 3, &b));
        let pt: Vec<BigRational> = x.iter().map(|&v| f.from_i64(v)).collect();
        let (va, vb) = (a.evaluate(&pt).unwrap(), b.evaluate(&pt).unwrap());
        prop_assert_eq!((&a * &b).evaluate(&pt).unwrap(), &va * &vb);
        prop_assert_eq!((&a + &b).evaluate(&pt).unwrap(), va + vb);
    }

    #[test]
    fn alternating_determinants(vals in prop::collection::vec(-9i64..=9, 10)) {
        let f = Rationals;
        let build = |n: usize| {
            let mut m = vec![vec![Poly::zero(&f, 0); n]; n];
            let mut it = vals.iter();
            for i in 0..n {
                for j in i + 1..n {
                    let v = *it.next().unwrap();
                    m[i][j] = Poly::constant(&f, 0, f.from_i64(v));
                    m[j][i] = Poly::constant(&f, 0, f.from_i64(-v));
                }
            }
            m
        };
        prop_assert!(det_polymat(&f, 0, &build(5)).unwrap().is_zero());
        prop_assert!(det_polymat(&f, 0, &build(3)).unwrap().is_zero());
        let m = build(4);
        let e = |i: usize, j: usize| m[i][j].evaluate(&[]).unwrap();
        let pf = e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2);
        prop_assert_eq!(det_polymat(&f, 0, &m).unwrap().evaluate(&[]).unwrap(), &pf * &pf);
    }

    #[test]
    fn modular_rank_never_exceeds_rational_rank(rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 1..6), p in prop::sample::select(vec![2u64, 3, 5, 7, 32003])) {
        let q = Rationals;
        let fp = PrimeField::new(p).unwrap();
        let over_q: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&v| q.from_i64(v)).collect()).collect();
        let over_p: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|&v| fp.from_i64(v)).collect()).collect();
        prop_assert!(rank(&fp, &over_p, 5) <= rank(&q, &over_q, 5));
    }

    #[test]
    fn bordered_expansion_matches_determinant(s in 1usize..=4, seed in any::<u64>()) {
        let f = PrimeField::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut form = || {
            let c: Vec<_> = (0..3).map(|_| f.random_elem(&mut rng)).collect();
            Poly::linear(&f, &c)
        };
        let d: Vec<Vec<_>> = (0..s).map(|_| (0..=s).map(|_| form()).collect()).collect();
        let mut a = vec![vec![Poly::zero(&f, 3); s + 1]; s + 1];
        for i in 0..=s {
            for j in i..=s {
                let v = form();
                a[i][j] = v.clone();
                a[j][i] = v;
            }
        }
        prop_assert!(bordered_expand(&f, &a, &d).is_ok());
    }

    #[test]
    fn gaussian_binomials_are_symmetric_and_satisfy_pascal(n in 1u32..9, d in 0u32..9, q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 9])) {
        prop_assume!(d <= n);
        prop_assert_eq!(gaussian_binomial(n, d, q), gaussian_binomial(n, n - d, q));
        if d >= 1 && d < n {
            let pascal = gaussian_binomial(n - 1, d - 1, q) + BigInt::from(q).pow(d) * gaussian_binomial(n - 1, d, q);
            prop_assert_eq!(gaussian_binomial(n, d, q), pascal);
        }
    }

    #[test]
    fn jensen_on_random_rationals(a in -60i64..60, b in -60i64..60, c in -60i64..60, den in 1i64..12, l in 0u32..9) {
        let r = |v: i64| BigRational::new(BigInt::from(v), BigInt::from(den));
        prop_assert!(jensen_check(&r(a), &r(b), &r(c), l));
    }
}
