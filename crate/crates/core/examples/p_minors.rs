//! Maximal minors of the band matrix D_s, the linear independence of their
//! products, and the binomial identity behind the closed forms.

use num_bigint::BigInt;
use num_rational::BigRational;

use fano::cli::p_product_rank;
use fano::exactalg::{jensen_sides, Rationals};
use fano::spaces::p_closed;

fn main() -> fano::Result<()> {
    let f = Rationals;
    for s in 1..=4 {
        let minors: Vec<String> = (1..=s + 1).map(|i| p_closed(&f, s, i).map(|p| p.to_string())).collect::<fano::Result<_>>()?;
        println!("s={s}: {}", minors.join(" | "));
        println!("      products p_i p_j span {} of {}", p_product_rank(s)?, (s + 1) * (s + 2) / 2);
    }
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let (lhs, rhs) = jensen_sides(&r(3, 2), &r(-1, 3), &r(5, 7), 6);
    println!("Jensen at (3/2, -1/3, 5/7), L=6: {lhs} = {rhs}");
    Ok(())
}
