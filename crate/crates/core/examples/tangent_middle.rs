//! Tangent space at the middle compression point of the 3×3 symmetric cubic,
//! computed by both methods over GF(32003) and over Q.

use fano::exactalg::{Field, PrimeField, Rationals};
use fano::invariants::{dim_component, tangent_formula_middle, Params};
use fano::spaces::middle_point_for;
use fano::tangent::{tangent_dim_blocks, tangent_dim_chart};

fn show<F: Field>(field: &F, params: &Params) -> fano::Result<()> {
    let q = middle_point_for(field, 3, 1)?;
    let chart = tangent_dim_chart(&q, params)?;
    let blocks = tangent_dim_blocks(&q, params, 1)?;
    println!("over {}:\n{q}chart {} (rank {} of {} rows), blocks {} (a_det {:?})",
        field.name(), chart.tangent_dim, chart.rank, chart.constraint_rows, blocks.tangent_dim, blocks.a_det);
    Ok(())
}

fn main() -> fano::Result<()> {
    let params = Params::symmetric(3, 3, 1)?;
    show(&PrimeField::default(), &params)?;
    show(&Rationals, &params)?;
    println!("formula {}, component dimension {}", tangent_formula_middle(&params)?, dim_component(&params, 1)?);
    Ok(())
}
