//! Finds the nested flags witnessing compression types of small pencils over
//! GF(5), and checks a matrix-space JSON round trip.

use fano::exactalg::GaloisField;
use fano::invariants::Params;
use fano::oracle::{classify_point, find_flags};
use fano::spaces::{intersection_point, kronecker_pencil, LinMatrixSpace};

fn main() -> fano::Result<()> {
    let f = GaloisField::new(5)?;
    let pencil = kronecker_pencil(&f, 2, 5)?;
    println!("{pencil}");
    for flag in find_flags(&pencil, 5, 2, true)? {
        println!("U = {:?}\nW = {:?}", flag.u, flag.w);
    }
    let c = classify_point(&pencil, &Params::symmetric(5, 5, 1)?)?;
    println!("types {:?} ({})", c.s_values, c.caveat);

    let meet = intersection_point(&f, 5)?;
    let c = classify_point(&meet, &Params::symmetric(5, 5, 1)?)?;
    println!("\n{meet}types {:?}", c.s_values);

    let json = serde_json::to_string(&meet.to_json()).expect("serializable");
    let back = LinMatrixSpace::from_json_str(&f, &json)?;
    println!("json round trip: {json} -> equal {}", back.to_json() == meet.to_json());
    Ok(())
}
