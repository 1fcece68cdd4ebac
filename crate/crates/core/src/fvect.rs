//! Finite-dimensional vector spaces as a symmetric monoidal category with
//! coequalizers.
//!
//! The tensor basis convention is fixed globally: `e_i ⊗ e_j` has index
//! `i * dim(Y) + j` in `X ⊗ Y`. Under it, unitors and associators are
//! identity matrices, but they are still exposed as maps so that composites
//! can be written out in full.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{cokernel, image, kernel, Field, Matrix, Quotient, SparseVec, Subspace};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obj {
    pub dim: usize,
    pub label: Option<String>,
}

impl Obj {
    pub fn new(dim: usize) -> Obj {
        Obj { dim, label: None }
    }

    pub fn labeled(dim: usize, label: &str) -> Obj {
        Obj { dim, label: Some(label.to_string()) }
    }

    /// The monoidal unit `k`.
    pub fn unit() -> Obj {
        Obj::labeled(1, "k")
    }

    fn name(&self) -> String {
        self.label.clone().unwrap_or_else(|| format!("k^{}", self.dim))
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

pub fn tensor_obj(x: &Obj, y: &Obj) -> Obj {
    let label = match (&x.label, &y.label) {
        (None, None) => None,
        _ => Some(format!("{}⊗{}", x.name(), y.name())),
    };
    Obj { dim: x.dim * y.dim, label }
}

/// A morphism `src → dst`. Equality compares matrices only.
#[derive(Clone, Debug)]
pub struct LinMap<F> {
    pub src: Obj,
    pub dst: Obj,
    pub mat: Matrix<F>,
}

impl<F: PartialEq> PartialEq for LinMap<F> {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl<F: Field> LinMap<F> {
    pub fn new(src: Obj, dst: Obj, mat: Matrix<F>) -> Result<Self> {
        if mat.rows() != dst.dim || mat.cols() != src.dim {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map {} -> {}",
                mat.rows(),
                mat.cols(),
                src.dim,
                dst.dim
            )));
        }
        Ok(LinMap { src, dst, mat })
    }

    /// Wraps a matrix with unlabeled objects of matching dimension.
    pub fn from_matrix(mat: Matrix<F>) -> Self {
        LinMap { src: Obj::new(mat.cols()), dst: Obj::new(mat.rows()), mat }
    }

    pub fn id(x: &Obj) -> Self {
        LinMap { src: x.clone(), dst: x.clone(), mat: Matrix::identity(x.dim) }
    }

    pub fn zero(src: &Obj, dst: &Obj) -> Self {
        LinMap { src: src.clone(), dst: dst.clone(), mat: Matrix::zeros(dst.dim, src.dim) }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinMap<F>) -> LinMap<F> {
        assert_eq!(self.src.dim, other.dst.dim, "composing {} after {}", self.src, other.dst);
        LinMap { src: other.src.clone(), dst: self.dst.clone(), mat: self.mat.compose(&other.mat) }
    }

    pub fn sub(&self, other: &LinMap<F>) -> LinMap<F> {
        LinMap { src: self.src.clone(), dst: self.dst.clone(), mat: self.mat.sub(&other.mat) }
    }

    pub fn add(&self, other: &LinMap<F>) -> LinMap<F> {
        LinMap { src: self.src.clone(), dst: self.dst.clone(), mat: self.mat.add(&other.mat) }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.mat
    }
}

pub fn tensor_map<F: Field>(f: &LinMap<F>, g: &LinMap<F>) -> LinMap<F> {
    LinMap { src: tensor_obj(&f.src, &g.src), dst: tensor_obj(&f.dst, &g.dst), mat: f.mat.kron(&g.mat) }
}

/// Permutation matrix `X ⊗ Y → Y ⊗ X`.
pub fn symmetry_matrix<F: Field>(dx: usize, dy: usize) -> Matrix<F> {
    Matrix::from_col_fn(dx * dy, dx * dy, |c| {
        let (i, j) = (c / dy, c % dy);
        SparseVec::unit(j * dx + i)
    })
}

pub fn symmetry<F: Field>(x: &Obj, y: &Obj) -> LinMap<F> {
    LinMap { src: tensor_obj(x, y), dst: tensor_obj(y, x), mat: symmetry_matrix(x.dim, y.dim) }
}

/// `l_X: k ⊗ X → X`
pub fn left_unitor<F: Field>(x: &Obj) -> LinMap<F> {
    LinMap { src: tensor_obj(&Obj::unit(), x), dst: x.clone(), mat: Matrix::identity(x.dim) }
}

/// `r_X: X ⊗ k → X`
pub fn right_unitor<F: Field>(x: &Obj) -> LinMap<F> {
    LinMap { src: tensor_obj(x, &Obj::unit()), dst: x.clone(), mat: Matrix::identity(x.dim) }
}

pub fn left_unitor_inv<F: Field>(x: &Obj) -> LinMap<F> {
    let l = left_unitor::<F>(x);
    LinMap { src: l.dst, dst: l.src, mat: l.mat }
}

pub fn right_unitor_inv<F: Field>(x: &Obj) -> LinMap<F> {
    let r = right_unitor::<F>(x);
    LinMap { src: r.dst, dst: r.src, mat: r.mat }
}

/// `a: (X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`
pub fn associator<F: Field>(x: &Obj, y: &Obj, z: &Obj) -> LinMap<F> {
    LinMap {
        src: tensor_obj(&tensor_obj(x, y), z),
        dst: tensor_obj(x, &tensor_obj(y, z)),
        mat: Matrix::identity(x.dim * y.dim * z.dim),
    }
}

/// A coequalizer `ξ: Y → Q` of a parallel pair, held as the quotient of `Y`
/// by the image of `f − g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeq<F> {
    pub source: Obj,
    pub q: Obj,
    quotient: Quotient<F>,
}

impl<F: Field> Coeq<F> {
    /// Quotient of `source` by an explicit relation subspace.
    pub fn from_relations(source: Obj, relations: Subspace<F>) -> Self {
        assert_eq!(source.dim, relations.ambient());
        let quotient = Quotient::new(relations);
        let q = Obj::new(quotient.dim());
        Coeq { source, q, quotient }
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.q.label = Some(label.to_string());
        self
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn relations(&self) -> &Subspace<F> {
        self.quotient.relations()
    }

    pub fn quotient(&self) -> &Quotient<F> {
        &self.quotient
    }

    /// The coequalizer morphism `ξ`.
    pub fn xi(&self) -> LinMap<F> {
        LinMap { src: self.source.clone(), dst: self.q.clone(), mat: self.quotient.proj() }
    }

    pub fn section(&self) -> LinMap<F> {
        LinMap { src: self.q.clone(), dst: self.source.clone(), mat: self.quotient.section() }
    }

    /// Images under `ξ` of ambient vectors, without building `ξ`.
    pub fn project(&self, v: &SparseVec<F>) -> SparseVec<F> {
        self.quotient.project(v)
    }

    /// Projects every column of a matrix valued in the source.
    pub fn project_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        Matrix::from_col_fn(self.dim(), m.cols(), |j| self.project(m.col(j)))
    }

    /// A different section: `s + R ∘ c` where the columns of `R` are the
    /// relation basis and `c` is any `rank x dim(Q)` matrix.
    pub fn perturbed_section(&self, c: &Matrix<F>) -> LinMap<F> {
        let r = self.relations().to_matrix();
        let s = self.quotient.section().add(&r.compose(c));
        LinMap { src: self.q.clone(), dst: self.source.clone(), mat: s }
    }

    /// The unique `u` with `u ∘ ξ = h`.
    pub fn factor_through(&self, h: &LinMap<F>) -> Result<LinMap<F>> {
        let mat = self.quotient.factor(&h.mat)?;
        Ok(LinMap { src: self.q.clone(), dst: h.dst.clone(), mat })
    }

    /// Same as [`factor_through`](Self::factor_through) but composes with a
    /// caller-supplied section; the result must not depend on it.
    pub fn factor_with_section(&self, h: &LinMap<F>, section: &LinMap<F>) -> Result<LinMap<F>> {
        self.quotient.factor(&h.mat)?;
        Ok(h.compose(section))
    }

    /// `ξ ⊗ id_W`, as the coequalizer of the tensored pair. Its relations
    /// are `S ⊗ W`, already canonical.
    pub fn tensor_right(&self, w: &Obj) -> Coeq<F> {
        Coeq {
            source: tensor_obj(&self.source, w),
            q: tensor_obj(&self.q, w),
            quotient: self.quotient.tensor_right(w.dim),
        }
    }

    /// `id_W ⊗ ξ`
    pub fn tensor_left(&self, w: &Obj) -> Coeq<F> {
        Coeq {
            source: tensor_obj(w, &self.source),
            q: tensor_obj(w, &self.q),
            quotient: self.quotient.tensor_left(w.dim),
        }
    }
}

pub fn coequalizer<F: Field>(f: &LinMap<F>, g: &LinMap<F>) -> Coeq<F> {
    assert_eq!((f.src.dim, f.dst.dim), (g.src.dim, g.dst.dim), "coequalizer of non-parallel maps");
    let c = cokernel(&f.mat.sub(&g.mat));
    let q = Obj::new(c.dim());
    Coeq { source: f.dst.clone(), q, quotient: c }
}

pub fn factor_through<F: Field>(c: &Coeq<F>, h: &LinMap<F>) -> Result<LinMap<F>> {
    c.factor_through(h)
}

/// Checks that `ξ ⊗ id_W` and `id_W ⊗ ξ` are coequalizers of the tensored
/// pairs, by fresh elimination, and that the structured tensor of the
/// coequalizer agrees with them.
pub fn check_coeq_tensor_commute<F: Field>(f: &LinMap<F>, g: &LinMap<F>, w: &Obj) -> Report {
    let c = coequalizer(f, g);
    let id_w = LinMap::id(w);
    let xi = c.xi();
    let mut rep = Report::new();
    for (side, fw, gw, xiw, structured) in [
        ("right", tensor_map(f, &id_w), tensor_map(g, &id_w), tensor_map(&xi, &id_w), c.tensor_right(w)),
        ("left", tensor_map(&id_w, f), tensor_map(&id_w, g), tensor_map(&id_w, &xi), c.tensor_left(w)),
    ] {
        rep.check_eq(
            format!("{side} tensored coequalizer coequalizes the pair"),
            &xiw.mat.compose(&fw.mat),
            &xiw.mat.compose(&gw.mat),
        );
        let surjective = xiw.mat.rank() == xiw.dst.dim;
        rep.record(format!("{side} tensored coequalizer is surjective"), surjective, None);
        let ker = kernel(&xiw.mat);
        let rel = image(&fw.mat.sub(&gw.mat));
        rep.record(
            format!("{side} tensored coequalizer kernel equals image of the tensored difference"),
            ker == rel,
            (ker != rel).then(|| format!("kernel dim {}, image dim {}", ker.dim(), rel.dim())),
        );
        rep.check_eq(format!("{side} structured tensor of the quotient agrees"), &structured.xi().mat, &xiw.mat);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;

    type Q = Rational;

    fn m(rows: &[&[i64]]) -> LinMap<Q> {
        LinMap::from_matrix(Matrix::from_i64_rows(rows))
    }

    #[test]
    fn tensor_examples() {
        let x = Obj::new(2);
        let y = Obj::new(3);
        assert_eq!(tensor_obj(&x, &y).dim, 6);
        assert_eq!(tensor_obj(&Obj::unit(), &x).dim, 2);
        assert!(left_unitor::<Q>(&x).mat.is_identity());
        assert!(tensor_map(&LinMap::<Q>::id(&x), &LinMap::id(&y)).mat.is_identity());
    }

    #[test]
    fn symmetry_examples() {
        let one = Obj::new(1);
        assert!(symmetry::<Q>(&one, &one).mat.is_identity());
        assert!(symmetry::<Q>(&Obj::unit(), &Obj::new(3)).mat.is_identity());
        let s = symmetry::<Q>(&Obj::new(2), &Obj::new(2));
        assert_eq!(s.mat, Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]));
        let t = symmetry::<Q>(&Obj::new(2), &Obj::new(3));
        assert!(symmetry::<Q>(&Obj::new(3), &Obj::new(2)).compose(&t).mat.is_identity());
    }

    #[test]
    fn coequalizer_examples() {
        let f = m(&[&[1, 2], &[0, 1]]);
        assert_eq!(coequalizer(&f, &f).dim(), 2);
        let d = Obj::new(3);
        assert_eq!(coequalizer(&LinMap::<Q>::id(&d), &LinMap::zero(&d, &d)).dim(), 0);
        let f = m(&[&[1], &[0]]);
        let g = m(&[&[0], &[1]]);
        assert_eq!(coequalizer(&f, &g).dim(), 1);
    }

    #[test]
    fn factor_through_examples() {
        let f = m(&[&[1], &[0]]);
        let g = m(&[&[0], &[1]]);
        let c = coequalizer(&f, &g);
        assert!(c.factor_through(&c.xi()).unwrap().mat.is_identity());
        let zero = LinMap::zero(&Obj::new(2), &Obj::new(3));
        assert!(c.factor_through(&zero).unwrap().mat.is_zero());
        let d = Obj::new(2);
        let c = coequalizer(&LinMap::<Q>::id(&d), &LinMap::zero(&d, &d));
        assert!(matches!(c.factor_through(&LinMap::id(&d)), Err(Error::NotBalanced(_))));
    }

    #[test]
    fn coeq_commutes_with_tensor_examples() {
        let f = m(&[&[1, 0], &[2, 1], &[0, 3]]);
        let g = m(&[&[0, 0], &[1, 1], &[1, 0]]);
        assert!(check_coeq_tensor_commute(&f, &g, &Obj::unit()).passed());
        assert!(check_coeq_tensor_commute(&f, &f, &Obj::new(2)).passed());
        assert!(check_coeq_tensor_commute(&f, &g, &Obj::new(3)).passed());
    }
}
