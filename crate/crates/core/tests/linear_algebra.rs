mod common;

use algebroid::exactlin::{cokernel, image, kernel, kron, rref, solve_factor};
use algebroid::{Error, Field, Fp, Matrix, SparseVec, Subspace};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn m(rows: &[&[i64]]) -> Matrix<Q> {
    Matrix::from_i64_rows(rows)
}

#[test]
fn rref_small_cases() {
    assert_eq!(rref(&Matrix::<Q>::zeros(2, 2)).2, 0);
    let (r, piv, rank) = rref(&Matrix::<Q>::identity(3));
    assert_eq!((piv, rank), (vec![0, 1, 2], 3));
    assert!(r.is_identity());
    let (r, piv, rank) = rref(&m(&[&[1, 2], &[2, 4]]));
    assert_eq!((piv, rank), (vec![0], 1));
    assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
}

#[test]
fn kernel_small_cases() {
    assert_eq!(kernel(&Matrix::<Q>::identity(4)).dim(), 0);
    assert_eq!(kernel(&Matrix::<Q>::zeros(2, 3)), Subspace::full(3));
    let k = kernel(&m(&[&[1, 2], &[2, 4]]));
    assert_eq!(k.dim(), 1);
    assert!(k.contains(&SparseVec::from_dense(&[q(-2), q(1)])));
}

#[test]
fn cokernel_small_cases() {
    assert_eq!(cokernel(&Matrix::<Q>::identity(3)).dim(), 0);
    let c = cokernel(&Matrix::<Q>::zeros(3, 2));
    assert!(c.proj().is_identity());
    let col = m(&[&[1], &[1]]);
    let c = cokernel(&col);
    assert_eq!(c.dim(), 1);
    assert!(c.proj().compose(&col).is_zero());
    assert!(c.proj().compose(&c.section()).is_identity());
}

#[test]
fn kron_small_cases() {
    assert!(kron(&Matrix::<Q>::identity(2), &Matrix::identity(3)).is_identity());
    assert!(kron(&m(&[&[1, 2], &[3, 4]]), &Matrix::zeros(2, 3)).is_zero());
    assert_eq!(kron(&m(&[&[2]]), &m(&[&[3]])), m(&[&[6]]));
    // e_i ⊗ e_j sits at i·dim B + j
    let a = m(&[&[0], &[1]]);
    let b = m(&[&[0], &[0], &[1]]);
    assert_eq!(kron(&a, &b).col(0), &SparseVec::unit(5));
}

#[test]
fn solve_factor_small_cases() {
    let t = m(&[&[1, 2, 3], &[4, 5, 6]]);
    assert_eq!(solve_factor(&Matrix::identity(3), &t).unwrap(), t);
    let proj = cokernel(&m(&[&[1], &[1]])).proj();
    assert!(matches!(solve_factor(&proj, &m(&[&[1, 0]])), Err(Error::NoSolution(_))));
    assert_eq!(solve_factor(&proj, &m(&[&[1, -1]])).unwrap().compose(&proj), m(&[&[1, -1]]));
    assert_eq!(solve_factor(&m(&[&[1, 1]]), &m(&[&[2, 2]])).unwrap(), m(&[&[2]]));
}

#[test]
fn rank_nullity_and_cokernel_laws_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for r in 0..=12 {
        for c in [0, 1, 5, 12] {
            let a = random_matrix(&mut rng, r, c);
            assert_eq!(a.rank() + kernel(&a).dim(), c);
            let co = cokernel(&a);
            assert_eq!(co.dim(), r - a.rank());
            assert!(co.proj().compose(&a).is_zero());
            assert!(co.proj().compose(&co.section()).is_identity());
        }
    }
}

#[test]
fn kron_is_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..10 {
        let (a, b, c) = (random_matrix(&mut rng, 2, 3), random_matrix(&mut rng, 3, 1), random_matrix(&mut rng, 2, 2));
        assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
    }
}

#[test]
fn surjective_factorization_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut seen = 0;
    while seen < 20 {
        let through = random_matrix(&mut rng, 3, 5);
        if through.rank() < 3 {
            continue;
        }
        let x = random_matrix(&mut rng, 2, 3);
        assert_eq!(solve_factor(&through, &x.compose(&through)).unwrap(), x);
        seen += 1;
    }
}

#[test]
fn inverse_and_rational_edge_values() {
    let a = m(&[&[2, 1], &[1, 1]]);
    assert!(a.inverse().unwrap().compose(&a).is_identity());
    assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    // entries large enough to leave machine integers
    let big = Q::from_i64(i64::MAX);
    let sq = big.clone() * big.clone();
    assert_eq!(sq.clone() * big.inv().unwrap(), big);
    assert_eq!(Q::parse_scalar(&sq.to_string()).unwrap(), sq);
    assert!((sq.clone() - sq).is_zero());
}

type F7 = Fp<7>;

fn fp_matrix(rows: usize, cols: usize, raw: &[i64]) -> Matrix<F7> {
    Matrix::from_fn(rows, cols, |i, j| F7::from_i64(raw[i * cols + j]))
}

proptest! {
    #[test]
    fn equal_spans_have_identical_bases(raw in proptest::collection::vec(-3i64..=3, 12), mix in proptest::collection::vec(-3i64..=3, 9)) {
        let a = fp_matrix(4, 3, &raw);
        let g = fp_matrix(3, 3, &mix);
        let s = image(&a);
        let t = image(&a.compose(&g));
        // column operations never enlarge the span, and preserve it when invertible
        prop_assert!(s.contains_subspace(&t));
        if g.rank() == 3 {
            prop_assert_eq!(&s, &t);
            prop_assert_eq!(s.basis(), t.basis());
        }
    }

    #[test]
    fn rref_is_idempotent_and_rank_stable(raw in proptest::collection::vec(-5i64..=5, 20)) {
        let a = fp_matrix(4, 5, &raw);
        let (r, piv, rank) = rref(&a);
        prop_assert_eq!(rank, a.rank());
        prop_assert_eq!(piv.len(), rank);
        let (r2, piv2, _) = rref(&r);
        prop_assert_eq!(r, r2);
        prop_assert_eq!(piv, piv2);
    }
}
