//! Exact linear algebra: fields, sparse vectors and matrices, canonical
//! subspaces, quotients and factorization.

mod field;
mod matrix;
mod subspace;
mod vector;

pub use field::{sum, Field, Fp, Rational};
pub use matrix::Matrix;
pub use subspace::Subspace;
pub use vector::SparseVec;

use crate::error::{Error, Result};

/// Reduced row echelon form, pivot columns and rank.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>, usize) {
    let t = m.transpose();
    let rows = Subspace::span(m.cols(), t.columns().iter().cloned());
    let rank = rows.dim();
    let pivots = rows.pivots().to_vec();
    let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); m.cols()];
    for (r, b) in rows.basis().iter().enumerate() {
        for (j, x) in b.iter() {
            cols[j].push((r, x.clone()));
        }
    }
    let out = Matrix::from_columns(m.rows(), cols.into_iter().map(SparseVec::from_pairs).collect());
    (out, pivots, rank)
}

/// Canonical basis of the null space.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let rows = Subspace::span(m.cols(), m.transpose().columns().iter().cloned());
    let pivots = rows.pivots();
    let gens = rows.free_positions().into_iter().map(|f| {
        let mut e = vec![(f, F::one())];
        for (r, b) in rows.basis().iter().enumerate() {
            let c = b.get(f);
            if !c.is_zero() {
                e.push((pivots[r], -c));
            }
        }
        SparseVec::from_pairs(e)
    });
    Subspace::span(m.cols(), gens)
}

pub fn image<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::span(m.rows(), m.columns().iter().cloned())
}

/// Quotient `F^n / S`. Quotient coordinates are the non-pivot positions of
/// the canonical basis of `S`, which makes the section (inclusion of those
/// coordinates) canonical as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient<F> {
    relations: Subspace<F>,
    free: Vec<usize>,
    slot: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl<F: Field> Quotient<F> {
    pub fn new(relations: Subspace<F>) -> Self {
        let free = relations.free_positions();
        let mut slot = vec![NONE; relations.ambient()];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        Quotient { relations, free, slot }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient(&self) -> usize {
        self.relations.ambient()
    }

    pub fn relations(&self) -> &Subspace<F> {
        &self.relations
    }

    pub fn free_positions(&self) -> &[usize] {
        &self.free
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let r = self.relations.reduce(v);
        SparseVec::from_sorted(r.iter().map(|(i, x)| (self.slot[i], x.clone())).collect())
    }

    /// The projection as a `dim x ambient` matrix.
    pub fn proj(&self) -> Matrix<F> {
        let mut cols = vec![SparseVec::zero(); self.ambient()];
        for (k, &f) in self.free.iter().enumerate() {
            cols[f] = SparseVec::unit(k);
        }
        for b in self.relations.basis() {
            let (p, _) = b.first().unwrap();
            let e = b.iter().skip(1).map(|(i, x)| (self.slot[i], -x.clone())).collect();
            cols[p] = SparseVec::from_sorted(e);
        }
        Matrix::from_columns(self.dim(), cols)
    }

    /// The canonical section, `ambient x dim`.
    pub fn section(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient(), self.free.iter().map(|&f| SparseVec::unit(f)).collect())
    }

    /// `h ∘ section` after checking that `h` kills every relation.
    pub fn factor(&self, h: &Matrix<F>) -> Result<Matrix<F>> {
        if h.cols() != self.ambient() {
            return Err(Error::DimensionMismatch(format!(
                "map has {} columns, quotient ambient is {}",
                h.cols(),
                self.ambient()
            )));
        }
        for (k, b) in self.relations.basis().iter().enumerate() {
            let img = h.apply(b);
            if !img.is_zero() {
                return Err(Error::NotBalanced(format!(
                    "relation {k} (pivot {}) maps to a nonzero vector with {} entries",
                    b.first().unwrap().0,
                    img.nnz()
                )));
            }
        }
        Ok(h.select_columns(&self.free))
    }

    pub fn tensor_right(&self, w: usize) -> Quotient<F> {
        Quotient::new(self.relations.tensor_right(w))
    }

    pub fn tensor_left(&self, w: usize) -> Quotient<F> {
        Quotient::new(self.relations.tensor_left(w))
    }
}

/// Cokernel of `m`: the quotient of its codomain by its image.
pub fn cokernel<F: Field>(m: &Matrix<F>) -> Quotient<F> {
    Quotient::new(image(m))
}

/// Solves `x ∘ through = target`. Fails with `NoSolution` when `target`
/// does not vanish on the kernel of `through`. When `through` is not
/// surjective, `x` is taken to be zero on a fixed complement of its image.
pub fn solve_factor<F: Field>(through: &Matrix<F>, target: &Matrix<F>) -> Result<Matrix<F>> {
    if through.cols() != target.cols() {
        return Err(Error::DimensionMismatch(format!(
            "solve_factor: {} vs {} columns",
            through.cols(),
            target.cols()
        )));
    }
    for (k, v) in kernel(through).basis().iter().enumerate() {
        if !target.apply(v).is_zero() {
            return Err(Error::NoSolution(format!("target does not vanish on kernel vector {k}")));
        }
    }
    let q = through.rows();
    let mut span = Subspace::zero(q);
    let mut chosen = Vec::new();
    for j in 0..through.cols() {
        if span.insert(through.col(j)) {
            chosen.push(j);
        }
    }
    let mut basis: Vec<SparseVec<F>> = chosen.iter().map(|&j| through.col(j).clone()).collect();
    let mut images: Vec<SparseVec<F>> = chosen.iter().map(|&j| target.col(j).clone()).collect();
    for i in 0..q {
        let e = SparseVec::unit(i);
        if span.insert(&e) {
            basis.push(e);
            images.push(SparseVec::zero());
        }
    }
    let b = Matrix::from_columns(q, basis);
    let binv = b.inverse().expect("completed basis is invertible");
    Ok(Matrix::from_columns(target.rows(), images).compose(&binv))
}

pub fn kron<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.kron(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Rational;
    type M = Matrix<Q>;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn rref_examples() {
        assert_eq!(rref(&M::zeros(2, 2)).2, 0);
        let (r, p, k) = rref(&M::identity(3));
        assert_eq!((p, k), (vec![0, 1, 2], 3));
        assert!(r.is_identity());
        let (r, p, k) = rref(&M::from_i64_rows(&[&[1, 2], &[2, 4]]));
        assert_eq!((p, k), (vec![0], 1));
        assert_eq!(r, M::from_i64_rows(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&M::identity(4)).dim(), 0);
        assert_eq!(kernel(&M::zeros(2, 3)).dim(), 3);
        let k = kernel(&M::from_i64_rows(&[&[1, 2], &[2, 4]]));
        assert_eq!(k.dim(), 1);
        // canonical form of span{(-2, 1)} is (1, -1/2)
        assert!(k.contains(&SparseVec::from_dense(&[q(-2), q(1)])));
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&M::identity(3)).dim(), 0);
        let c = cokernel(&M::zeros(3, 2));
        assert!(c.proj().is_identity());
        let m = M::from_i64_rows(&[&[1], &[1]]);
        let c = cokernel(&m);
        assert_eq!(c.dim(), 1);
        assert!(c.proj().compose(&m).is_zero());
        assert!(c.proj().compose(&c.section()).is_identity());
    }

    #[test]
    fn solve_factor_examples() {
        let t = M::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(solve_factor(&M::identity(2), &t).unwrap(), t);
        let proj = cokernel(&M::from_i64_rows(&[&[1], &[1]])).proj();
        let bad = M::from_i64_rows(&[&[1, 0]]);
        assert!(matches!(solve_factor(&proj, &bad), Err(Error::NoSolution(_))));
        let x = solve_factor(&M::from_i64_rows(&[&[1, 1]]), &M::from_i64_rows(&[&[2, 2]])).unwrap();
        assert_eq!(x, M::from_i64_rows(&[&[2]]));
    }

    #[test]
    fn quotient_factor_rejects_unbalanced() {
        let c = cokernel(&M::from_i64_rows(&[&[1], &[1]]));
        assert!(c.factor(&M::from_i64_rows(&[&[1, 0]])).is_err());
        let u = c.factor(&M::from_i64_rows(&[&[1, -1]])).unwrap();
        assert_eq!(u.compose(&c.proj()), M::from_i64_rows(&[&[1, -1]]));
    }
}
