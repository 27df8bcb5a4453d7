//! Tangent dimension at random general points of the s = 0 line component of
//! rank < 4 symmetric 5×5 matrices, and the gap over the component dimension.

use fano::exactalg::PrimeField;
use fano::invariants::{dim_component, nonreduced_gap, tangent_formula_general, Params};
use fano::tangent::{random_block_point, tangent_dim_chart, PointKind};

fn main() -> fano::Result<()> {
    let field = PrimeField::default();
    let params = Params::symmetric(5, 4, 1)?;
    let dim = dim_component(&params, 0)?;
    for seed in 0..5 {
        let point = random_block_point(&field, &params, 0, seed, PointKind::General)?;
        let t = tangent_dim_chart(&point.space, &params)?.tangent_dim;
        println!("seed {seed} (attempts {}): tangent {t}, component {dim}, gap {}", point.attempts, num_bigint::BigInt::from(t) - &dim);
    }
    println!(
        "formula: tangent {}, gap {}",
        tangent_formula_general(&params, 0)?,
        nonreduced_gap(&params, 0)?
    );
    Ok(())
}
