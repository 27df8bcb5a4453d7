//! Staircase supports of Borel-fixed points and the emptiness threshold.

use fano::cli::borel_example_matrices;
use fano::invariants::{kappa, Params};
use fano::spaces::{enumerate_borel_fixed, is_borel_pattern};

fn main() -> fano::Result<()> {
    let (left, right) = borel_example_matrices();
    println!("{left}staircase: {}\n", is_borel_pattern(&left));
    println!("{right}staircase: {}\n", is_borel_pattern(&right));

    let base = Params::symmetric(4, 4, 0)?;
    let top = kappa(&base, 0)?.max(kappa(&base, base.s_max())?);
    println!("{base}: largest kappa at the ends is {top}");
    for k in 0..=u32::try_from(top).unwrap_or(0) + 1 {
        let patterns = enumerate_borel_fixed(&base.with_k(k)?);
        println!("k={k}: {} staircase patterns", patterns.len());
    }
    Ok(())
}
