//! Coequalizers of linear maps, factorization through them, and the check
//! that tensoring with a fixed space preserves them.

use algebroid::fvect::{check_coeq_tensor_commute, coequalizer, LinMap, Obj};
use algebroid::{Matrix, Rational};

fn main() {
    let x = Obj::new(2);
    let y = Obj::labeled(3, "Y");
    let f = LinMap::<Rational>::new(x.clone(), y.clone(), Matrix::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
    let g = LinMap::new(x, y.clone(), Matrix::from_i64_rows(&[&[0, 0], &[1, 1], &[0, 1]])).unwrap();
    let c = coequalizer(&f, &g);
    println!("Y / im(f - g) has dim {}", c.dim());
    println!("ξ∘f = ξ∘g: {}", c.xi().compose(&f) == c.xi().compose(&g));

    // a map killing the relations factors uniquely
    let h = LinMap::from_matrix(Matrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 1]]));
    match c.factor_through(&h) {
        Ok(u) => println!("h = u∘ξ with u = {:?}", u.mat.to_dense().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()),
        Err(e) => println!("h does not factor: {e}"),
    }
    // one that does not
    let bad = LinMap::from_matrix(Matrix::from_i64_rows(&[&[1, 0, 0]]));
    println!("[1 0 0] factors: {}", c.factor_through(&bad).is_ok());

    // any other section gives the same factorization
    let s = c.perturbed_section(&Matrix::from_i64_rows(&[&[5, -3]]));
    println!("factorization is section independent: {}", c.factor_with_section(&h, &s).ok() == c.factor_through(&h).ok());

    for w in [1, 2, 3] {
        let r = check_coeq_tensor_commute(&f, &g, &Obj::new(w));
        println!("W of dim {w}: {}", if r.passed() { "ξ⊗id_W and id_W⊗ξ are coequalizers" } else { "FAILED" });
    }
    print!("{}", check_coeq_tensor_commute(&f, &g, &Obj::new(2)));
}
