//! A right bialgebroid obtained by transporting a left one along the
//! antipode, checked by the mirrored axiom table.

use algebroid::bialgebroid::{right_takeuchi_summary, verify_right_bialgebroid};
use algebroid::constructions::{cyclic_group_table, group_algebra, heisenberg_double, sweedler_h4, Orientation};
use algebroid::Rational;

fn main() {
    let z2 = group_algebra::<Rational>(&cyclic_group_table(2)).unwrap();
    let h4 = sweedler_h4::<Rational>().unwrap();
    for (name, src) in [("k[Z2]", z2), ("H4", h4)] {
        let r = heisenberg_double(&src, Orientation::BaseIsDual).unwrap().right;
        let t = right_takeuchi_summary(&r).unwrap();
        println!("{name}: H⊗_R H has dim {}, image of Δ_R has dim {}", t.balanced_dim, t.image_dim);
        print!("{}", verify_right_bialgebroid(&r));
    }
}
