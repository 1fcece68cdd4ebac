//! The same constructions over prime fields. Sweedler's algebra is refused
//! in characteristic 2.

use algebroid::constructions::{cyclic_group_table, group_algebra, heisenberg_double, sweedler_h4, Orientation};
use algebroid::hopf_algebroid::verify_hopf_algebroid;
use algebroid::{Field, Fp};

fn double_z3<F: Field>() {
    match group_algebra::<F>(&cyclic_group_table(3)).and_then(|a| heisenberg_double(&a, Orientation::BaseIsInput)) {
        Ok(h) => {
            let r = verify_hopf_algebroid(&h);
            println!("{}: k[Z3] double, {} checks, passed {}", F::field_name(), r.checks.len(), r.passed());
        }
        Err(e) => println!("{}: {e}", F::field_name()),
    }
}

fn main() {
    // F_3 divides the group order; the double is still a Hopf algebroid
    double_z3::<Fp<3>>();
    double_z3::<Fp<7>>();
    double_z3::<Fp<65521>>();
    println!("H4 over prime 2: {}", sweedler_h4::<Fp<2>>().err().map(|e| e.to_string()).unwrap_or_default());
    println!("H4 over prime 3: built {}", sweedler_h4::<Fp<3>>().is_ok());
}
