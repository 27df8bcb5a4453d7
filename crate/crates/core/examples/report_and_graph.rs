//! Closed-form report and DOT graph for the 6×6 symmetric determinantal
//! hypersurface at the three k where its component structure changes.

use fano::cli::{build_report, render_dot, render_report_text};
use fano::invariants::Params;

fn main() -> fano::Result<()> {
    for k in [9, 10, 12] {
        let params = Params::symmetric(6, 6, k)?;
        print!("{}", render_report_text(&build_report(&params, None)));
        print!("{}", render_dot(&params));
        println!();
    }
    Ok(())
}
