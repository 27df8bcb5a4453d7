//! Generalized binomial coefficients and the Jensen convolution identity.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `x(x−1)…(x−ℓ+1)/ℓ!` for rational `x`.
pub fn gen_binomial(x: &BigRational, l: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..l {
        let i = BigRational::from_integer(BigInt::from(i));
        acc = acc * (x - &i) / (&i + BigRational::one());
    }
    acc
}

/// Both sides of the identity
/// `Σ_ℓ C(α+βℓ, ℓ)·C(γ−βℓ, L−ℓ) = Σ_ℓ C(α+γ−ℓ, L−ℓ)·β^ℓ`.
pub fn jensen_sides(alpha: &BigRational, beta: &BigRational, gamma: &BigRational, big_l: u32) -> (BigRational, BigRational) {
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    let mut beta_pow = BigRational::one();
    for l in 0..=big_l {
        let lq = BigRational::from_integer(BigInt::from(l));
        let shift = beta * &lq;
        lhs += gen_binomial(&(alpha + &shift), l) * gen_binomial(&(gamma - &shift), big_l - l);
        rhs += gen_binomial(&(alpha + gamma - &lq), big_l - l) * &beta_pow;
        beta_pow *= beta;
    }
    (lhs, rhs)
}

/// Whether the two sides agree exactly.
pub fn jensen_check(alpha: &BigRational, beta: &BigRational, gamma: &BigRational, big_l: u32) -> bool {
    let (lhs, rhs) = jensen_sides(alpha, beta, gamma, big_l);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(gen_binomial(&q(-1, 1), 3), q(-1, 1));
        assert_eq!(gen_binomial(&q(7, 3), 0), q(1, 1));
        assert_eq!(gen_binomial(&q(1, 2), 2), q(-1, 8));
        assert_eq!(gen_binomial(&q(5, 1), 2), q(10, 1));
        assert_eq!(gen_binomial(&q(2, 1), 3), q(0, 1));
    }

    #[test]
    fn unit_case_is_three() {
        let one = q(1, 1);
        assert_eq!(jensen_sides(&one, &one, &one, 1), (q(3, 1), q(3, 1)));
    }

    #[test]
    fn beta_zero_is_vandermonde() {
        for (a, g, l) in [(2, 3, 4), (-3, 5, 3), (0, 0, 2)] {
            let (lhs, rhs) = jensen_sides(&q(a, 1), &q(0, 1), &q(g, 1), l);
            let v = gen_binomial(&q(a + g, 1), l);
            assert_eq!(lhs, v);
            assert_eq!(rhs, v);
        }
    }
}
