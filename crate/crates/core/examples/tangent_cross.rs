//! Compares the chart and block tangent methods over a small parameter grid.

use fano::exactalg::PrimeField;
use fano::tangent::cross_method_grid;

fn main() -> fano::Result<()> {
    let field = PrimeField::default();
    let cases = cross_method_grid(&field, 6, 3, 2024, 2)?;
    let mismatches: Vec<_> = cases.iter().filter(|c| !c.agrees()).collect();
    for c in &cases {
        println!(
            "n={} r={} s={} k={} {:<22} chart={:>4} blocks={:>4} {:?}",
            c.n, c.r, c.s, c.k, c.point, c.chart, c.blocks, c.branch
        );
    }
    println!("{} cases, {} mismatches", cases.len(), mismatches.len());
    Ok(())
}
