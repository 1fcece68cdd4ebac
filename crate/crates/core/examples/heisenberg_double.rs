//! Builds the Heisenberg double of Sweedler's H_4 (dimension 16) and runs
//! the full Hopf algebroid checker on it.

use std::time::Instant;

use algebroid::constructions::{heisenberg_datum, scalar_extension_unchecked, sweedler_h4, Orientation};
use algebroid::hopf_algebroid::verify_hopf_algebroid;
use algebroid::Rational;

fn main() {
    let h4 = sweedler_h4::<Rational>().expect("characteristic zero");
    for orientation in [Orientation::BaseIsInput, Orientation::BaseIsDual] {
        let t = Instant::now();
        let d = scalar_extension_unchecked(&heisenberg_datum(&h4, orientation)).expect("structure maps");
        let report = verify_hopf_algebroid(&d);
        println!("{orientation:?}: total dim {}, base dim {}", d.left.total.dim(), d.left.base.dim());
        println!("{report}");
        println!("verified in {:.2?}", t.elapsed());
    }
}
