use super::field::Field;
use super::matrix::Matrix;
use super::vector::{Accumulator, SparseVec};

/// A subspace of `F^ambient` held in canonical reduced echelon form: each
/// basis vector starts with a 1 at its pivot, every other basis vector is
/// zero at that pivot, and vectors are ordered by pivot. Equal subspaces
/// therefore have identical representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: (0..ambient).map(SparseVec::unit).collect(), pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vecs: impl IntoIterator<Item = SparseVec<F>>) -> Self {
        let mut s = Self::zero(ambient);
        let mut acc = Accumulator::new(ambient);
        for v in vecs {
            s.insert_with(&v, &mut acc);
        }
        s
    }

    /// Wraps a basis the caller already knows to be canonical. Checked in
    /// debug builds.
    pub(crate) fn from_canonical(ambient: usize, basis: Vec<SparseVec<F>>) -> Self {
        let pivots: Vec<usize> = basis.iter().map(|b| b.first().expect("nonzero basis vector").0).collect();
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(basis.iter().all(|b| b.first().unwrap().1.is_one()));
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates that are not pivots, in increasing order.
    pub fn free_positions(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut p = self.pivots.iter().peekable();
        for i in 0..self.ambient {
            if p.peek() == Some(&&i) {
                p.next();
            } else {
                out.push(i);
            }
        }
        out
    }

    fn pivot_slot(&self, i: usize) -> Option<usize> {
        self.pivots.binary_search(&i).ok()
    }

    fn reduce_with(&self, v: &SparseVec<F>, acc: &mut Accumulator<F>) -> SparseVec<F> {
        // Basis vectors vanish at each other's pivots, so one pass suffices.
        if !v.iter().any(|(i, _)| self.pivot_slot(i).is_some()) {
            return v.clone();
        }
        for (i, x) in v.iter() {
            acc.add(i, x.clone());
            if let Some(k) = self.pivot_slot(i) {
                acc.add_scaled(&-x.clone(), &self.basis[k]);
            }
        }
        acc.drain()
    }

    /// Normal form of `v` modulo the subspace: zero at every pivot.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new(self.ambient);
        self.reduce_with(v, &mut acc)
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        self.ambient == other.ambient && other.basis.iter().all(|b| self.contains(b))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let mut acc = Accumulator::new(self.ambient);
        self.insert_with(v, &mut acc)
    }

    fn insert_with(&mut self, v: &SparseVec<F>, acc: &mut Accumulator<F>) -> bool {
        debug_assert!(v.max_index().map_or(true, |m| m < self.ambient));
        let r = self.reduce_with(v, acc);
        let Some((p, lead)) = r.first() else {
            return false;
        };
        let r = r.scale(&lead.inv().expect("nonzero lead"));
        for b in self.basis.iter_mut() {
            let c = b.get(p);
            if !c.is_zero() {
                *b = b.add_scaled(&-c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient, self.basis.clone())
    }

    /// The subspace `S ⊗ F^w` inside `F^(ambient * w)`. The result is
    /// canonical without elimination: `b ⊗ e_j` has pivot `p * w + j` and
    /// vanishes on every other such pivot.
    pub fn tensor_right(&self, w: usize) -> Subspace<F> {
        let mut basis = Vec::with_capacity(self.dim() * w);
        for b in &self.basis {
            for j in 0..w {
                basis.push(b.kron(&SparseVec::unit(j), w));
            }
        }
        Subspace::from_canonical(self.ambient * w, basis)
    }

    /// The subspace `F^w ⊗ S`.
    pub fn tensor_left(&self, w: usize) -> Subspace<F> {
        let n = self.ambient;
        let mut basis = Vec::with_capacity(self.dim() * w);
        for j in 0..w {
            for b in &self.basis {
                basis.push(SparseVec::unit(j).kron(b, n));
            }
        }
        Subspace::from_canonical(n * w, basis)
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn join(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        let mut s = self.clone();
        let mut acc = Accumulator::new(self.ambient);
        for b in &other.basis {
            s.insert_with(b, &mut acc);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;

    fn v(xs: &[i64]) -> SparseVec<Rational> {
        SparseVec::from_dense(&xs.iter().map(|&x| Rational::from_i64(x)).collect::<Vec<_>>())
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let a = Subspace::span(3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, vec![v(&[1, 3, 4]), v(&[2, 4, 6]), v(&[1, 2, 3])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.pivots(), &[0, 1]);
        assert_eq!(a.free_positions(), vec![2]);
        assert!(a.contains(&v(&[2, 5, 7])));
        assert!(!a.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn tensored_subspace_matches_elimination() {
        let s = Subspace::span(3, vec![v(&[1, -1, 0]), v(&[0, 2, 2])]);
        let direct = s.tensor_right(2);
        let gens = s.basis().iter().flat_map(|b| (0..2).map(move |j| b.kron(&SparseVec::unit(j), 2)));
        assert_eq!(direct, Subspace::span(6, gens));
        let left = s.tensor_left(2);
        let gens = (0..2).flat_map(|j| s.basis().iter().map(move |b| SparseVec::unit(j).kron(b, 3)));
        assert_eq!(left, Subspace::span(6, gens));
    }
}
