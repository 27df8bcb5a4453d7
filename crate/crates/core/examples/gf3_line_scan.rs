//! Scans all lines of 3×3 symmetric matrices over GF(3) and classifies those
//! lying on the determinantal cubic by their nested compression types.

use std::collections::BTreeMap;

use fano::exactalg::GaloisField;
use fano::invariants::Params;
use fano::oracle::{classify_point, scan_fano_points, DEFAULT_MAX_SUBSPACES};

fn main() -> fano::Result<()> {
    let field = GaloisField::new(3)?;
    let params = Params::symmetric(3, 3, 1)?;
    let mut by_type: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let tested = scan_fano_points(&params, &field, DEFAULT_MAX_SUBSPACES, |line| {
        let c = classify_point(line, &params)?;
        *by_type.entry(c.s_values).or_default() += 1;
        Ok(())
    })?;
    println!("subspaces tested: {tested}");
    for (types, count) in &by_type {
        println!("s-types {types:?}: {count} lines");
    }
    let unclassified = by_type.get(&Vec::new()).copied().unwrap_or(0);
    println!("lines without a nested flag over GF(3): {unclassified}");
    Ok(())
}
