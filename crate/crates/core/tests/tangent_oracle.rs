use fano::exactalg::{Field, GaloisField, PrimeField, Rationals};
use fano::invariants::{dim_component, Params};
use fano::oracle::{classify_point, enumerate_fano_points, find_flags, flag_is_orthogonal};
use fano::spaces::{intersection_point, kronecker_pencil, standard_compression};
use fano::tangent::{tangent_dim_blocks, tangent_dim_chart};

/// Points of the symmetric determinantal cubic over GF(q), counted from all q^6 matrices.
fn brute_force_singular_3x3(q: u32) -> u64 {
    let f = GaloisField::new(q).unwrap();
    let elems: Vec<u32> = f.elements().collect();
    let mut singular = 0u64;
    let n = elems.len();
    for code in 1..n.pow(6) {
        let mut c = code;
        let mut v = [0u32; 6];
        for slot in &mut v {
            *slot = elems[c % n];
            c /= n;
        }
        let [a, b, cc, d, e, g] = v;
        // det [[a b c], [b d e], [c e g]]
        let t1 = f.mul(&a, &f.sub(&f.mul(&d, &g), &f.mul(&e, &e)));
        let t2 = f.mul(&b, &f.sub(&f.mul(&b, &g), &f.mul(&e, &cc)));
        let t3 = f.mul(&cc, &f.sub(&f.mul(&b, &e), &f.mul(&d, &cc)));
        if f.is_zero(&f.add(&f.sub(&t1, &t2), &t3)) {
            singular += 1;
        }
    }
    singular / u64::from(q - 1)
}

#[test]
fn point_count_matches_brute_force() {
    for q in [3, 5] {
        let f = GaloisField::new(q).unwrap();
        let scan = enumerate_fano_points(&Params::symmetric(3, 3, 0).unwrap(), &f, 100_000).unwrap();
        assert_eq!(scan.points.len() as u64, brute_force_singular_3x3(q), "q={q}");
    }
}

#[test]
fn standard_points_agree_across_fields_and_methods() {
    for (n, r) in [(4, 3), (4, 4), (5, 4), (5, 5)] {
        let base = Params::symmetric(n, r, 0).unwrap();
        for s in 0..=base.s_max() {
            let k = u32::try_from(fano::invariants::kappa(&base, s).unwrap()).unwrap();
            let p = base.with_k(k).unwrap();
            let over_q = tangent_dim_chart(&standard_compression(&Rationals, &p, s).unwrap(), &p).unwrap();
            let gf = standard_compression(&PrimeField::default(), &p, s).unwrap();
            let over_p = tangent_dim_chart(&gf, &p).unwrap();
            let blocks = tangent_dim_blocks(&gf, &p, s).unwrap();
            assert_eq!(over_q.tangent_dim, over_p.tangent_dim, "{p} s={s}");
            assert_eq!(over_p.tangent_dim, blocks.tangent_dim, "{p} s={s}");
        }
    }
}

#[test]
fn kronecker_pencils_sit_on_their_own_component() {
    let f = GaloisField::new(5).unwrap();
    for (s, n) in [(1, 3), (1, 4), (2, 5)] {
        let pencil = kronecker_pencil(&f, s, n).unwrap();
        let r = 2 * s + 1;
        let p = Params::symmetric(n as u32, r as u32, 1).unwrap();
        let c = classify_point(&pencil, &p).unwrap();
        assert_eq!(c.s_values, vec![s as u32]);
        let flags = find_flags(&pencil, r, s as u32, true).unwrap();
        assert!(flags.iter().all(|fl| flag_is_orthogonal(&pencil, fl) && fl.is_nested(&f)));
        let big = PrimeField::default();
        let t = tangent_dim_chart(&kronecker_pencil(&big, s, n).unwrap(), &p).unwrap().tangent_dim;
        assert!(num_bigint::BigInt::from(t) >= dim_component(&p, s as u32).unwrap(), "{p}: {t}");
    }
}

#[test]
fn intersection_point_lies_on_every_component() {
    let f = GaloisField::new(3).unwrap();
    let q = intersection_point(&f, 5).unwrap();
    let c = classify_point(&q, &Params::symmetric(5, 5, 1).unwrap()).unwrap();
    assert_eq!(c.s_values, vec![0, 1, 2]);
}
