//! Braided commutative Yetter–Drinfeld module algebras, their smash
//! products, and the scalar extension Hopf algebroid built on them.

use algebroid::constructions::{
    check_yetter_drinfeld, cyclic_group_table, group_algebra, heisenberg_datum, scalar_extension_hopf_algebroid,
    smash_product, Orientation,
};
use algebroid::exactlin::kernel;
use algebroid::fvect::LinMap;
use algebroid::monoid_alg::{check_monoid, MonoidData};
use algebroid::{Error, Matrix, Rational, SparseVec};

fn center_dim(m: &MonoidData<Rational>) -> usize {
    let n = m.dim();
    let mut stacked = Matrix::zeros(0, n);
    for i in 0..n {
        let e = SparseVec::unit(i);
        stacked = stacked.vstack(&m.left_mult(&e).sub(&m.right_mult(&e)));
    }
    kernel(&stacked).dim()
}

fn main() {
    let z3 = group_algebra::<Rational>(&cyclic_group_table(3)).unwrap();
    let y = heisenberg_datum(&z3, Orientation::BaseIsDual);
    print!("{}", check_yetter_drinfeld(&y));

    let m = smash_product(&y);
    println!("smash product: dim {}, associative and unital {}, center dim {}", m.dim(), check_monoid(&m).passed(), center_dim(&m));

    let h = scalar_extension_hopf_algebroid(&y).unwrap();
    println!("scalar extension: total {}, left base {}, right base {}", h.left.total.dim(), h.left.base.dim(), h.right.base.dim());

    // break compatibility: forget the coaction on the last basis vector
    let mut broken = y.clone();
    let n = broken.algebra.dim();
    let mat = Matrix::from_col_fn(broken.coaction.mat.rows(), n, |j| {
        if j + 1 == n { SparseVec::zero() } else { y.coaction.mat.col(j).clone() }
    });
    broken.coaction = LinMap::new(y.coaction.src.clone(), y.coaction.dst.clone(), mat).unwrap();
    match scalar_extension_hopf_algebroid(&broken) {
        Err(Error::AxiomFailure(rep)) => println!("rejected, failing: {:?}", rep.failed_names()),
        other => println!("unexpected: {:?}", other.map(|_| ())),
    }
}
