//! Closed-form invariants of the Fano schemes `F_k(SD^r_n)`, `F_k(Pf^r_n)`
//! and `F_k(D^r_{m,n})`.
//!
//! Everything here is an exact integer function of `(variant, n, m, r, k, s)`.

mod graph;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use graph::{build_graph, connected_components, cycle_disconnected, FanoGraph};

/// Which ambient matrix space the rank condition lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
pub enum Variant {
    Symmetric,
    Alternating,
    Rectangular { m: u32 },
}

impl Variant {
    pub fn short_name(&self) -> &'static str {
        match self {
            Variant::Symmetric => "sym",
            Variant::Alternating => "alt",
            Variant::Rectangular { .. } => "rect",
        }
    }
}

/// A validated problem instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    pub variant: Variant,
    pub n: u32,
    pub r: u32,
    pub k: u32,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::Symmetric => write!(f, "F_{}(SD^{}_{})", self.k, self.r, self.n),
            Variant::Alternating => write!(f, "F_{}(Pf^{}_{})", self.k, self.r, self.n),
            Variant::Rectangular { m } => write!(f, "F_{}(D^{}_{{{},{}}})", self.k, self.r, m, self.n),
        }
    }
}

pub(crate) fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

impl Params {
    /// Checks the variant bounds and `k ≤ ambient projective dimension`.
    pub fn new(variant: Variant, n: u32, r: u32, k: u32) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        match variant {
            Variant::Symmetric if !(3 <= r && r <= n) => return bad(format!("symmetric needs 3 ≤ r ≤ n, got r={r}, n={n}")),
            Variant::Alternating if !r.is_multiple_of(2) || !(2 < r && r <= n) => {
                return bad(format!("alternating needs r even with 2 < r ≤ n, got r={r}, n={n}"))
            }
            Variant::Rectangular { m } if !(2 <= r && r <= m && m <= n) => {
                return bad(format!("rectangular needs 2 ≤ r ≤ m ≤ n, got r={r}, m={m}, n={n}"))
            }
            _ => {}
        }
        let p = Self { variant, n, r, k };
        if big(k) > p.ambient_dim() {
            return bad(format!("k={k} exceeds the ambient projective dimension {}", p.ambient_dim()));
        }
        Ok(p)
    }

    pub fn symmetric(n: u32, r: u32, k: u32) -> Result<Self> {
        Self::new(Variant::Symmetric, n, r, k)
    }

    pub fn alternating(n: u32, r: u32, k: u32) -> Result<Self> {
        Self::new(Variant::Alternating, n, r, k)
    }

    pub fn rectangular(m: u32, n: u32, r: u32, k: u32) -> Result<Self> {
        Self::new(Variant::Rectangular { m }, n, r, k)
    }

    /// Same instance with a different `k`.
    pub fn with_k(&self, k: u32) -> Result<Self> {
        Self::new(self.variant, self.n, self.r, k)
    }

    /// Number of rows of the matrices (m for rectangular, n otherwise).
    pub fn rows(&self) -> u32 {
        match self.variant {
            Variant::Rectangular { m } => m,
            _ => self.n,
        }
    }

    /// Projective dimension of the ambient matrix space.
    pub fn ambient_dim(&self) -> BigInt {
        let n = i64::from(self.n);
        match self.variant {
            Variant::Symmetric => binom(n + 1, 2) - 1,
            Variant::Alternating => binom(n, 2) - 1,
            Variant::Rectangular { m } => big(i64::from(m) * n - 1),
        }
    }

    /// Largest s with a standard s-compression space.
    pub fn s_max(&self) -> u32 {
        match self.variant {
            Variant::Rectangular { .. } => self.r - 1,
            _ => (self.r - 1) / 2,
        }
    }

    /// `s+1+n−r`, the dimension of the subspace a compression space kills.
    pub fn kernel_dim(&self, s: u32) -> i64 {
        i64::from(s) + 1 + i64::from(self.n) - i64::from(self.r)
    }

    fn check_s(&self, s: u32) -> Result<()> {
        if s > self.s_max() {
            return Err(Error::Domain(format!("s={s} exceeds s_max={}", self.s_max())));
        }
        Ok(())
    }

    fn require_symmetric(&self, what: &str) -> Result<()> {
        if self.variant != Variant::Symmetric {
            return Err(Error::Domain(format!("{what} is only defined for the symmetric variant")));
        }
        Ok(())
    }

    fn require_k_at_most_kappa(&self, s: u32) -> Result<BigInt> {
        let kap = kappa(self, s)?;
        if big(self.k) > kap {
            return Err(Error::Domain(format!("k={} exceeds κ({s})={kap}", self.k)));
        }
        Ok(kap)
    }
}

/// Projective dimension of the standard s-compression space.
pub fn kappa(params: &Params, s: u32) -> Result<BigInt> {
    params.check_s(s)?;
    let (n, r, si) = (i64::from(params.n), i64::from(params.r), i64::from(s));
    let c = params.kernel_dim(s);
    Ok(match params.variant {
        Variant::Symmetric => big(si * c) + binom(r - si, 2) - 1,
        Variant::Alternating => big(si * c) + binom(r - si - 1, 2) - 1,
        Variant::Rectangular { m } => {
            let m = i64::from(m);
            big(m * n) - big(c) * big(m - si) - 1
        }
    })
}

/// The table `κ(0), …, κ(s_max)`.
pub fn kappa_table(params: &Params) -> Vec<BigInt> {
    (0..=params.s_max()).map(|s| kappa(params, s).expect("s in range")).collect()
}

pub fn s_max(params: &Params) -> u32 {
    params.s_max()
}

/// Dimension of `SD^r_n`.
pub fn variety_dim(params: &Params) -> Result<BigInt> {
    params.require_symmetric("variety_dim")?;
    let (n, r) = (i64::from(params.n), i64::from(params.r));
    Ok(big(n * (r - 1)) - binom(r - 1, 2) - 1)
}

/// Whether the Fano scheme has a point: `k ≤ max{κ(0), κ(s_max)}`.
pub fn is_nonempty(params: &Params) -> bool {
    let a = kappa(params, 0).expect("s=0 valid");
    let b = kappa(params, params.s_max()).expect("s_max valid");
    big(params.k) <= a.max(b)
}

/// Edge label `g({s,s'}) = κ(s') − (s+1+n−r)(s'−s)` for `s < s'`.
pub fn edge_label(params: &Params, s: u32, s2: u32) -> Result<BigInt> {
    if s >= s2 {
        return Err(Error::Domain(format!("edge label needs s < s', got {s} ≥ {s2}")));
    }
    let kap = kappa(params, s2)?;
    Ok(kap - big(params.kernel_dim(s)) * big(i64::from(s2 - s)))
}

/// Irreducibility criterion for the symmetric variant.
pub fn is_irreducible(params: &Params) -> Result<bool> {
    params.require_symmetric("is_irreducible")?;
    if !is_nonempty(params) {
        return Err(Error::Domain(format!("{params} is empty")));
    }
    let sm = params.s_max();
    let kap = |s| kappa(params, s).expect("s in range");
    let k = big(params.k);
    let first = kap(1).max(kap(sm)) < k && k <= kap(0);
    let second = kap(0).max(kap(sm - 1)) < k && k <= kap(sm);
    Ok(first || second)
}

/// Dimension of the locus of nested s-compression spaces.
pub fn dim_component(params: &Params, s: u32) -> Result<BigInt> {
    params.require_symmetric("dim_component")?;
    let kap = params.require_k_at_most_kappa(s)?;
    let (n, r, si, k) = (i64::from(params.n), i64::from(params.r), i64::from(s), i64::from(params.k));
    let c = params.kernel_dim(s);
    Ok(big(c * (r - 2 * si - 1)) + big(si * (n - si)) + (kap - k) * (k + 1))
}

/// Expected dimension `(k+1)(N−k) − C(k+n, k)` of the Fano scheme of the hypersurface `r = n`.
pub fn expected_dim_hypersurface(params: &Params) -> Result<BigInt> {
    params.require_symmetric("expected_dim_hypersurface")?;
    if params.r != params.n {
        return Err(Error::Domain("expected_dim_hypersurface needs r = n".into()));
    }
    let (n, k) = (i64::from(params.n), i64::from(params.k));
    let big_n = binom(n + 1, 2) - 1;
    Ok((big_n - k) * (k + 1) - binom(k + n, k))
}

/// Generic tangent dimension minus component dimension: `(r−2s−1)((s+1+n−r)k − s)`.
pub fn nonreduced_gap(params: &Params, s: u32) -> Result<BigInt> {
    params.require_symmetric("nonreduced_gap")?;
    params.require_k_at_most_kappa(s)?;
    let (r, si, k) = (i64::from(params.r), i64::from(s), i64::from(params.k));
    Ok(big(r - 2 * si - 1) * (big(params.kernel_dim(s)) * k - si))
}

/// Tangent dimension at a general nested s-compression point.
pub fn tangent_formula_general(params: &Params, s: u32) -> Result<BigInt> {
    params.require_symmetric("tangent_formula_general")?;
    let kap = params.require_k_at_most_kappa(s)?;
    let (r, si, k) = (i64::from(params.r), i64::from(s), i64::from(params.k));
    let c = params.kernel_dim(s);
    Ok(big(si * c) + big(c * (r - 2 * si - 1) * (k + 1)) + (kap - k) * (k + 1))
}

/// Tangent dimension `s(s+1) + (κ(s)−k)(k+1)` at the special middle point, `r = n` odd.
pub fn tangent_formula_middle(params: &Params) -> Result<BigInt> {
    params.require_symmetric("tangent_formula_middle")?;
    if params.r != params.n || params.r.is_multiple_of(2) {
        return Err(Error::Domain("tangent_formula_middle needs r = n odd".into()));
    }
    let s = (params.r - 1) / 2;
    let kap = params.require_k_at_most_kappa(s)?;
    if params.k == 0 {
        return Err(Error::Domain("tangent_formula_middle needs k ≥ 1".into()));
    }
    let (si, k) = (i64::from(s), i64::from(params.k));
    Ok(big(si * (si + 1)) + (kap - k) * (k + 1))
}

/// Conjectural smoothness criterion; never a theorem.
pub fn smoothness_conjecture(params: &Params) -> Result<bool> {
    params.require_symmetric("smoothness_conjecture")?;
    if params.r.is_multiple_of(2) {
        return Ok(false);
    }
    let top = (params.r - 1) / 2;
    let below = (params.r - 3) / 2;
    let k = big(params.k);
    let lo = kappa(params, 0)?.max(kappa(params, below)?);
    Ok(lo < k && k <= kappa(params, top)?)
}

/// Serializes a `BigInt` as a JSON number when it fits in `i64`, else as a string.
pub mod bigint_json {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(b) => super::serialize(b, s),
                None => s.serialize_none(),
            }
        }
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for b in v {
                match b.to_i64() {
                    Some(x) => seq.serialize_element(&x)?,
                    None => seq.serialize_element(&b.to_string())?,
                }
            }
            seq.end()
        }
    }
}

pub(crate) fn to_usize(v: &BigInt) -> Result<usize> {
    use num_traits::ToPrimitive;
    if v.is_negative() {
        return Err(Error::Domain(format!("negative value {v}")));
    }
    v.to_usize().ok_or_else(|| Error::SizeLimit(format!("{v} does not fit in usize")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: u32, r: u32, k: u32) -> Params {
        Params::symmetric(n, r, k).unwrap()
    }

    #[test]
    fn kappa_values() {
        let p = sym(6, 6, 0);
        assert_eq!(kappa_table(&p), vec![big(14), big(11), big(11)]);
        assert_eq!(kappa(&sym(3, 3, 0), 1).unwrap(), big(2));
        for n in 2..8 {
            let p = Params::rectangular(n, n, n, 0).unwrap();
            assert_eq!(kappa(&p, 0).unwrap(), big(i64::from(n * (n - 1)) - 1));
        }
        assert!(kappa(&p, 3).is_err());
    }

    #[test]
    fn s_max_values() {
        assert_eq!(sym(6, 6, 0).s_max(), 2);
        assert_eq!(Params::rectangular(3, 4, 3, 0).unwrap().s_max(), 2);
        assert_eq!(Params::alternating(4, 4, 0).unwrap().s_max(), 1);
    }

    #[test]
    fn params_validation() {
        assert!(Params::symmetric(3, 2, 0).is_err());
        assert!(Params::alternating(5, 3, 0).is_err());
        assert!(Params::alternating(5, 2, 0).is_err());
        assert!(Params::rectangular(4, 3, 2, 0).is_err());
        assert!(Params::symmetric(3, 3, 5).is_ok());
        assert!(Params::symmetric(3, 3, 6).is_err());
        assert!(Params::alternating(4, 4, 5).is_ok());
        assert!(Params::alternating(4, 4, 6).is_err());
    }

    #[test]
    fn variety_dimensions() {
        assert_eq!(variety_dim(&sym(3, 3, 0)).unwrap(), big(4));
        assert_eq!(variety_dim(&sym(6, 6, 0)).unwrap(), big(19));
        assert_eq!(variety_dim(&sym(4, 3, 0)).unwrap(), big(6));
        assert!(variety_dim(&Params::alternating(4, 4, 0).unwrap()).is_err());
    }

    #[test]
    fn emptiness() {
        assert!(is_nonempty(&sym(6, 6, 14)));
        assert!(!is_nonempty(&sym(6, 6, 15)));
        assert!(is_nonempty(&sym(3, 3, 2)));
        assert!(!is_nonempty(&sym(3, 3, 3)));
        assert!(is_nonempty(&Params::rectangular(3, 3, 3, 5).unwrap()));
    }

    #[test]
    fn edge_labels() {
        let p = sym(6, 6, 0);
        assert_eq!(edge_label(&p, 0, 1).unwrap(), big(10));
        assert_eq!(edge_label(&p, 0, 2).unwrap(), big(9));
        assert_eq!(edge_label(&p, 1, 2).unwrap(), big(9));
        assert_eq!(edge_label(&sym(7, 6, 0), 0, 2).unwrap(), big(9));
        assert!(edge_label(&p, 1, 1).is_err());
        for s in 0..2 {
            let lhs = edge_label(&p, s, s + 1).unwrap();
            assert_eq!(lhs, kappa(&p, s + 1).unwrap() - big(s + 1));
        }
    }

    #[test]
    fn irreducibility() {
        for k in [12, 13, 14] {
            assert!(is_irreducible(&sym(6, 6, k)).unwrap());
        }
        assert!(!is_irreducible(&sym(6, 6, 9)).unwrap());
        // κ(0) = κ(1) = 2, so both loci survive at k = 2.
        assert!(!is_irreducible(&sym(3, 3, 2)).unwrap());
        assert!(is_irreducible(&sym(4, 3, 3)).unwrap());
        assert!(is_irreducible(&sym(6, 6, 15)).is_err());
    }

    #[test]
    fn component_dimensions() {
        for s in 0..=2 {
            assert_eq!(dim_component(&sym(6, 6, 1), s).unwrap(), big(31));
        }
        assert_eq!(dim_component(&sym(6, 4, 1), 1).unwrap(), big(19));
        assert_eq!(dim_component(&sym(3, 3, 1), 1).unwrap(), big(4));
        assert!(dim_component(&sym(3, 3, 3), 1).is_err());
    }

    #[test]
    fn hypersurface_expected_dimension() {
        assert_eq!(expected_dim_hypersurface(&sym(6, 6, 1)).unwrap(), big(31));
        assert_eq!(expected_dim_hypersurface(&sym(3, 3, 1)).unwrap(), big(4));
        assert_eq!(expected_dim_hypersurface(&sym(4, 4, 1)).unwrap(), big(11));
        assert!(expected_dim_hypersurface(&sym(4, 3, 1)).is_err());
    }

    #[test]
    fn gaps_and_tangent_formulas() {
        assert_eq!(nonreduced_gap(&sym(5, 4, 1), 0).unwrap(), big(6));
        let gaps: Vec<_> = (0..=2).map(|s| nonreduced_gap(&sym(6, 6, 1), s).unwrap()).collect();
        assert_eq!(gaps, vec![big(5), big(3), big(1)]);
        assert_eq!(nonreduced_gap(&sym(5, 5, 3), 2).unwrap(), big(0));
        assert_eq!(tangent_formula_general(&sym(5, 4, 1), 0).unwrap(), big(20));
        assert_eq!(tangent_formula_general(&sym(5, 5, 2), 2).unwrap(), big(24));
        assert_eq!(tangent_formula_middle(&sym(3, 3, 1)).unwrap(), big(4));
        assert_eq!(tangent_formula_middle(&sym(5, 5, 1)).unwrap(), big(20));
        assert_eq!(tangent_formula_middle(&sym(5, 5, 8)).unwrap(), big(6));
        assert!(tangent_formula_middle(&sym(4, 4, 1)).is_err());
    }

    #[test]
    fn conjecture_predicate() {
        assert!(!smoothness_conjecture(&sym(3, 3, 2)).unwrap());
        assert!(!smoothness_conjecture(&sym(6, 6, 11)).unwrap());
        // n=7, r=3: κ(0)=2, κ(1)=6, so exactly k ∈ {3,…,6} qualify.
        let hits: Vec<u32> = (0..=10).filter(|&k| smoothness_conjecture(&sym(7, 3, k)).unwrap()).collect();
        assert_eq!(hits, vec![3, 4, 5, 6]);
    }
}
