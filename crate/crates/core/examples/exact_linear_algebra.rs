//! Row reduction, kernels, cokernels and unique factorization over the
//! rationals and a prime field.

use algebroid::exactlin::{cokernel, kernel, rref, solve_factor};
use algebroid::{Field, Fp, Matrix, Rational};

fn show<F: Field>(name: &str, m: &Matrix<F>) {
    println!("{name} ({}x{}):", m.rows(), m.cols());
    for row in m.to_dense() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>5}")).collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn main() {
    let m = Matrix::<Rational>::from_i64_rows(&[&[1, 2, 3], &[2, 4, 7], &[1, 2, 4]]);
    let (r, pivots, rank) = rref(&m);
    show("m", &m);
    show("rref(m)", &r);
    println!("pivots {pivots:?}, rank {rank}");

    let k = kernel(&m);
    println!("kernel has dim {}", k.dim());
    for v in k.basis() {
        println!("  {}", v.to_dense(3).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    }

    let c = cokernel(&m);
    println!("cokernel has dim {}, free positions {:?}", c.dim(), c.free_positions());
    show("projection", &c.proj());

    // x ∘ through = target has a solution only when target kills ker(through)
    let through = Matrix::<Rational>::from_i64_rows(&[&[1, 1, 0], &[0, 1, 1]]);
    let target = Matrix::from_i64_rows(&[&[1, 2, 1]]);
    match solve_factor(&through, &target) {
        Ok(x) => show("factor", &x),
        Err(e) => println!("no factor: {e}"),
    }
    let bad = Matrix::from_i64_rows(&[&[1, 0, 0]]);
    println!("factoring [1 0 0]: {}", solve_factor(&through, &bad).map(|_| "ok".to_string()).unwrap_or_else(|e| e.to_string()));

    // the same matrix mod 7 has the same rank, the same mod 2 drops it
    let m7 = Matrix::<Fp<7>>::from_i64_rows(&[&[1, 2], &[3, 4]]);
    let m2 = Matrix::<Fp<2>>::from_i64_rows(&[&[1, 2], &[3, 4]]);
    println!("rank of [[1,2],[3,4]]: mod 7 {}, mod 2 {}", m7.rank(), m2.rank());

    // exact arithmetic does not overflow
    let big = Rational::from_i64(i64::MAX);
    let x = big.clone() * big.clone() * big.inv().unwrap();
    println!("(2^63-1)^2 / (2^63-1) = {x}");
}
