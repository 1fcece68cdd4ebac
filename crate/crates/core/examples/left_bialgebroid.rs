//! The left bialgebroid checker: induced actions ρ and λ, the Takeuchi
//! condition, and the full axiom table.

use algebroid::bialgebroid::{induced_lambda, induced_rho, takeuchi_summary, verify_left_bialgebroid};
use algebroid::constructions::{cyclic_group_table, group_algebra, heisenberg_double, Orientation};
use algebroid::Rational;

fn main() {
    let z3 = group_algebra::<Rational>(&cyclic_group_table(3)).unwrap();
    let d = heisenberg_double(&z3, Orientation::BaseIsInput).unwrap().left;
    let rho = induced_rho(&d).expect("ρ is well defined");
    let lambda = induced_lambda(&d, &rho).expect("Takeuchi condition holds");
    println!("ρ: {}x{}, λ: {}x{}", rho.mat.rows(), rho.mat.cols(), lambda.mat.rows(), lambda.mat.cols());
    let t = takeuchi_summary(&d, &rho);
    println!(
        "H⊗_L H: {}, Takeuchi subspace: {}, image of Δ: {}, contained: {}",
        t.balanced_dim, t.takeuchi_dim, t.image_dim, t.contained
    );
    print!("{}", verify_left_bialgebroid(&d));
}
