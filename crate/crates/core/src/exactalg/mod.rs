//! Exact arithmetic: fields, sparse polynomials, linear algebra, determinants
//! and generalized binomials.

pub mod binomial;
pub mod combinat;
pub mod det;
pub mod field;
pub mod linalg;
pub mod linunknown;
pub mod poly;

pub use binomial::{gen_binomial, jensen_check, jensen_sides};
pub use combinat::{combinations, gaussian_binomial};
pub use det::{det_polymat, MinorCache, MAX_DET_SIZE};
pub use field::{Field, GaloisField, PrimeField, Rationals, DEFAULT_PRIME};
pub use linalg::{rank, rank_nullspace, Echelon};
pub use linunknown::{LinForm, LinUnknownPoly};
pub use poly::{monomials_of_degree, Monomial, Poly};
