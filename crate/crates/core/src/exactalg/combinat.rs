//! Subsets and subspace counts.

use num_bigint::BigInt;

/// All r-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| cur[i] < n - r + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Number of d-dimensional subspaces of an n-dimensional space over GF(q).
pub fn gaussian_binomial(n: u32, d: u32, q: u64) -> BigInt {
    if d > n {
        return BigInt::from(0);
    }
    let q = BigInt::from(q);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..d {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).len(), 0);
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(gaussian_binomial(6, 2, 3), BigInt::from(11011));
        assert_eq!(gaussian_binomial(4, 2, 3), BigInt::from(130));
        assert_eq!(gaussian_binomial(5, 0, 7), BigInt::from(1));
    }
}
