//! Flipping single structure constants of a valid Hopf algebroid and
//! reading which axioms notice, with witnesses.

use algebroid::constructions::{cyclic_group_table, group_algebra, heisenberg_double, Orientation};
use algebroid::format::{decode, encode, Structure};
use algebroid::hopf_algebroid::verify_hopf_algebroid;
use algebroid::Rational;

fn main() {
    let z2 = group_algebra::<Rational>(&cyclic_group_table(2)).unwrap();
    let file = encode(&Structure::HopfAlgebroid(heisenberg_double(&z2, Orientation::BaseIsInput).unwrap()));
    for (map, i, j, value) in [("antipode", 0, 0, "2"), ("eps_L", 0, 1, "1"), ("delta_L", 0, 0, "1"), ("beta_R", 0, 1, "1")] {
        let mut f = file.clone();
        let m = f.maps.get_mut(map).unwrap();
        m.entries.retain(|e| (e.0, e.1) != (i, j));
        m.entries.push((i, j, value.to_string()));
        m.entries.sort();
        let Ok(Structure::HopfAlgebroid(h)) = decode::<Rational>(&f) else { panic!("decodes") };
        let r = verify_hopf_algebroid(&h);
        println!("{map}[{i},{j}] := {value}: {} of {} checks fail", r.failed().count(), r.checks.len());
        let first = r.failed().next().cloned();
        if let Some(c) = first {
            println!("  first: {}", c.name);
            if let Some(w) = &c.witness {
                println!("  on basis vector {}: {:?} vs {:?}", w.input, w.lhs, w.rhs);
            }
        }
    }
}
