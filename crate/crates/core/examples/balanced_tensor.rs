//! Monoids from structure constants, bimodules from a source and target, and
//! the balanced tensor product over the base.

use algebroid::constructions::{cyclic_group_table, group_algebra, heisenberg_double, HopfAlgebraData, Orientation};
use algebroid::monoid_alg::{balanced_tensor, check_monoid, opposite, tensor_monoid, BimoduleData};
use algebroid::Rational;

fn main() {
    let z2: HopfAlgebraData<Rational> = group_algebra(&cyclic_group_table(2)).unwrap();
    let m = &z2.monoid;
    print!("k[Z2]:\n{}", check_monoid(m));
    let mm = tensor_monoid(m, m);
    println!("k[Z2]⊗k[Z2] has dim {}, commutative {}", mm.dim(), mm.is_commutative());
    println!("k[Z2] equals its opposite: {}", opposite(m).mu == m.mu);

    let reg = BimoduleData::regular(m);
    let bt = balanced_tensor(&reg.right_module(), &reg.left_module());
    println!("k[Z2] ⊗_k[Z2] k[Z2] has dim {} ({} relations)", bt.dim(), bt.coeq.relations().dim());

    // the balanced square of a Heisenberg double over its base
    let d = heisenberg_double(&z2, Orientation::BaseIsInput).unwrap();
    let l = &d.left;
    println!(
        "double: H has dim {}, L has dim {}, H⊗H has dim {}, H⊗_L H has dim {}",
        l.total.dim(),
        l.base.dim(),
        l.total.dim() * l.total.dim(),
        l.bt.dim()
    );
}
