//! Tabulates connected components against the cycle criterion for every
//! variant up to n = 8.

use fano::cli::all_shapes;
use fano::invariants::{build_graph, connected_components, cycle_disconnected, kappa_table};

fn main() -> fano::Result<()> {
    let mut disconnected = 0usize;
    let mut total = 0usize;
    for base in all_shapes(8) {
        let top = kappa_table(&base).into_iter().max().unwrap_or_default();
        let top = u32::try_from(top).unwrap_or(0);
        for k in 0..=top {
            let params = base.with_k(k)?;
            let graph = build_graph(&params);
            if graph.is_empty() {
                continue;
            }
            total += 1;
            let components = connected_components(&graph);
            assert_eq!(components.len() >= 2, cycle_disconnected(&params));
            if components.len() >= 2 {
                disconnected += 1;
                println!("{params}: components {components:?}");
            }
        }
    }
    println!("{disconnected} of {total} nonempty schemes are disconnected");
    Ok(())
}
