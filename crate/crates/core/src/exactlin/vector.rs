use super::field::Field;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec<F> {
    entries: Vec<(usize, F)>,
}

impl<F> SparseVec<F> {
    pub fn entries(&self) -> &[(usize, F)] {
        &self.entries
    }
}

impl<F: Field> SparseVec<F> {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, F::one())] }
    }

    /// Builds from arbitrary pairs: sorts, merges duplicates, drops zeros.
    pub fn from_pairs(mut pairs: Vec<(usize, F)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut entries: Vec<(usize, F)> = Vec::with_capacity(pairs.len());
        for (i, x) in pairs {
            match entries.last_mut() {
                Some((j, y)) if *j == i => *y = y.clone() + x,
                _ => entries.push((i, x)),
            }
        }
        entries.retain(|(_, x)| !x.is_zero());
        SparseVec { entries }
    }

    /// Trusted constructor: caller guarantees sorted, distinct, non-zero.
    pub(crate) fn from_sorted(entries: Vec<(usize, F)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, x)| !x.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(v: &[F]) -> Self {
        let entries = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        SparseVec { entries }
    }

    pub fn to_dense(&self, n: usize) -> Vec<F> {
        let mut out = vec![F::zero(); n];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> F {
        match self.entries.binary_search_by_key(&i, |p| p.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn first(&self) -> Option<(usize, &F)> {
        self.entries.first().map(|(i, x)| (*i, x))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &F)> + '_ {
        self.entries.iter().map(|(i, x)| (*i, x))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|p| p.0)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, x.clone() * c.clone())).collect(),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &F, other: &Self) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, c.clone() * b[j].1.clone()));
                j += 1;
            } else {
                let v = a[i].1.clone() + c.clone() * b[j].1.clone();
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&-F::one(), other)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&F::one(), other)
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_pairs(self.entries.iter().map(|(i, x)| (f(*i), x.clone())).collect())
    }

    /// Tensor product of coordinate vectors, index `i * dim_b + j`.
    pub fn kron(&self, other: &Self, dim_b: usize) -> Self {
        let mut out = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                out.push((i * dim_b + j, x.clone() * y.clone()));
            }
        }
        SparseVec { entries: out }
    }
}

/// Dense scratch vector that remembers which slots were touched, so it can
/// be drained into a [`SparseVec`] and reset in time proportional to the
/// touched set.
pub(crate) struct Accumulator<F> {
    vals: Vec<F>,
    mark: Vec<bool>,
    touched: Vec<usize>,
}

impl<F: Field> Accumulator<F> {
    pub fn new(n: usize) -> Self {
        Accumulator { vals: vec![F::zero(); n], mark: vec![false; n], touched: Vec::new() }
    }

    pub fn add(&mut self, i: usize, x: F) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
            self.vals[i] = x;
        } else {
            let v = std::mem::replace(&mut self.vals[i], F::zero());
            self.vals[i] = v + x;
        }
    }

    pub fn add_scaled(&mut self, c: &F, v: &SparseVec<F>) {
        for (i, x) in v.iter() {
            self.add(i, c.clone() * x.clone());
        }
    }

    pub fn drain(&mut self) -> SparseVec<F> {
        let mut idx = std::mem::take(&mut self.touched);
        idx.sort_unstable();
        let mut out = Vec::with_capacity(idx.len());
        for i in idx {
            self.mark[i] = false;
            let v = std::mem::replace(&mut self.vals[i], F::zero());
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        SparseVec::from_sorted(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn add_scaled_cancels() {
        let a = SparseVec::from_pairs(vec![(0, q(1)), (3, q(2))]);
        let b = SparseVec::from_pairs(vec![(3, q(1)), (5, q(1))]);
        let c = a.add_scaled(&q(-2), &b);
        assert_eq!(c, SparseVec::from_pairs(vec![(0, q(1)), (5, q(-2))]));
    }

    #[test]
    fn from_pairs_merges() {
        let v = SparseVec::from_pairs(vec![(2, q(1)), (0, q(4)), (2, q(-1))]);
        assert_eq!(v.entries(), &[(0, q(4))]);
    }

    #[test]
    fn accumulator_round_trip() {
        let mut acc = Accumulator::new(6);
        acc.add(4, q(2));
        acc.add(1, q(3));
        acc.add(4, q(-2));
        assert_eq!(acc.drain(), SparseVec::unit(1).scale(&q(3)));
        assert!(acc.drain().is_zero());
    }
}
