//! Monoids in vector spaces (unital associative algebras given by structure
//! constants), their bimodules, balanced tensor products and comonoids in
//! bimodule categories.

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, SparseVec, Subspace};
use crate::fvect::{
    left_unitor_inv, right_unitor_inv, symmetry, tensor_map, tensor_obj, Coeq, LinMap, Obj,
};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq)]
pub struct MonoidData<F> {
    pub carrier: Obj,
    /// `carrier ⊗ carrier → carrier`
    pub mu: LinMap<F>,
    /// `k → carrier`
    pub eta: LinMap<F>,
}

impl<F: Field> MonoidData<F> {
    pub fn new(carrier: Obj, mu: Matrix<F>, eta: Matrix<F>) -> Result<Self> {
        let mu = LinMap::new(tensor_obj(&carrier, &carrier), carrier.clone(), mu)?;
        let eta = LinMap::new(Obj::unit(), carrier.clone(), eta)?;
        Ok(MonoidData { carrier, mu, eta })
    }

    /// Builds from a product on basis vectors and a unit vector.
    pub fn from_fn(carrier: Obj, prod: impl Fn(usize, usize) -> SparseVec<F>, unit: SparseVec<F>) -> Self {
        let d = carrier.dim;
        let mu = Matrix::from_col_fn(d, d * d, |c| prod(c / d, c % d));
        let eta = Matrix::from_columns(d, vec![unit]);
        MonoidData::new(carrier, mu, eta).expect("shapes are consistent by construction")
    }

    /// The ground field `k` as a monoid.
    pub fn ground() -> Self {
        MonoidData::new(Obj::unit(), Matrix::identity(1), Matrix::identity(1)).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn unit_vec(&self) -> &SparseVec<F> {
        self.eta.mat.col(0)
    }

    pub fn product(&self, a: &SparseVec<F>, b: &SparseVec<F>) -> SparseVec<F> {
        self.mu.mat.apply(&a.kron(b, self.dim()))
    }

    /// Product of two basis vectors.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec<F> {
        self.mu.mat.col(i * self.dim() + j)
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &SparseVec<F>) -> Matrix<F> {
        let d = self.dim();
        Matrix::from_col_fn(d, d, |j| self.product(a, &SparseVec::unit(j)))
    }

    /// Matrix of `x ↦ x b`.
    pub fn right_mult(&self, b: &SparseVec<F>) -> Matrix<F> {
        let d = self.dim();
        Matrix::from_col_fn(d, d, |j| self.product(&SparseVec::unit(j), b))
    }

    pub fn id(&self) -> LinMap<F> {
        LinMap::id(&self.carrier)
    }

    pub fn is_commutative(&self) -> bool {
        self.mu == opposite(self).mu
    }
}

#[derive(Clone, Debug)]
pub struct MonoidMor<F> {
    pub src: MonoidData<F>,
    pub dst: MonoidData<F>,
    pub map: LinMap<F>,
}

impl<F: Field> MonoidMor<F> {
    pub fn new(src: &MonoidData<F>, dst: &MonoidData<F>, map: Matrix<F>) -> Result<Self> {
        let map = LinMap::new(src.carrier.clone(), dst.carrier.clone(), map)?;
        Ok(MonoidMor { src: src.clone(), dst: dst.clone(), map })
    }
}

pub fn check_monoid<F: Field>(m: &MonoidData<F>) -> Report {
    let mut rep = Report::new();
    let id = m.id();
    rep.check_eq(
        "associativity",
        &m.mu.compose(&tensor_map(&m.mu, &id)).mat,
        &m.mu.compose(&tensor_map(&id, &m.mu)).mat,
    );
    rep.check_eq("left unit", &m.mu.compose(&tensor_map(&m.eta, &id)).mat, &id.mat);
    rep.check_eq("right unit", &m.mu.compose(&tensor_map(&id, &m.eta)).mat, &id.mat);
    rep
}

pub fn check_monoid_mor<F: Field>(f: &MonoidMor<F>) -> Report {
    let mut rep = Report::new();
    rep.check_eq(
        "preserves multiplication",
        &f.map.compose(&f.src.mu).mat,
        &f.dst.mu.compose(&tensor_map(&f.map, &f.map)).mat,
    );
    rep.check_eq("preserves unit", &f.map.compose(&f.src.eta).mat, &f.dst.eta.mat);
    rep
}

/// `μ_op = μ ∘ τ`, same unit.
pub fn opposite<F: Field>(m: &MonoidData<F>) -> MonoidData<F> {
    let mu = m.mu.compose(&symmetry(&m.carrier, &m.carrier));
    let carrier = Obj { dim: m.dim(), label: m.carrier.label.as_ref().map(|l| format!("{l}^op")) };
    MonoidData::new(carrier, mu.mat, m.eta.mat.clone()).unwrap()
}

/// Componentwise product on `R ⊗ S`: `(μ_R ⊗ μ_S) ∘ (id ⊗ τ ⊗ id)`.
pub fn tensor_monoid<F: Field>(r: &MonoidData<F>, s: &MonoidData<F>) -> MonoidData<F> {
    let (dr, ds) = (r.dim(), s.dim());
    let d = dr * ds;
    let mu = Matrix::from_col_fn(d, d * d, |c| {
        let (x, y) = (c / d, c % d);
        let (r1, s1, r2, s2) = (x / ds, x % ds, y / ds, y % ds);
        r.basis_product(r1, r2).kron(s.basis_product(s1, s2), ds)
    });
    let eta = Matrix::from_columns(d, vec![r.unit_vec().kron(s.unit_vec(), ds)]);
    MonoidData::new(tensor_obj(&r.carrier, &s.carrier), mu, eta).unwrap()
}

/// A left module `L ⊗ M → M`.
#[derive(Clone, Debug)]
pub struct LeftModule<F> {
    pub base: MonoidData<F>,
    pub carrier: Obj,
    pub act: LinMap<F>,
}

/// A right module `M ⊗ R → M`.
#[derive(Clone, Debug)]
pub struct RightModule<F> {
    pub base: MonoidData<F>,
    pub carrier: Obj,
    pub act: LinMap<F>,
}

#[derive(Clone, Debug)]
pub struct BimoduleData<F> {
    pub base_left: MonoidData<F>,
    pub base_right: MonoidData<F>,
    pub carrier: Obj,
    /// `L ⊗ M → M`
    pub lact: LinMap<F>,
    /// `M ⊗ R → M`
    pub ract: LinMap<F>,
}

impl<F: Field> BimoduleData<F> {
    pub fn left_module(&self) -> LeftModule<F> {
        LeftModule { base: self.base_left.clone(), carrier: self.carrier.clone(), act: self.lact.clone() }
    }

    pub fn right_module(&self) -> RightModule<F> {
        RightModule { base: self.base_right.clone(), carrier: self.carrier.clone(), act: self.ract.clone() }
    }

    /// The regular bimodule of a monoid over itself.
    pub fn regular(m: &MonoidData<F>) -> Self {
        BimoduleData {
            base_left: m.clone(),
            base_right: m.clone(),
            carrier: m.carrier.clone(),
            lact: m.mu.clone(),
            ract: m.mu.clone(),
        }
    }
}

pub fn check_left_action<F: Field>(m: &LeftModule<F>) -> Report {
    let mut rep = Report::new();
    let idl = m.base.id();
    let idm = LinMap::id(&m.carrier);
    rep.check_eq(
        "left action associative",
        &m.act.compose(&tensor_map(&m.base.mu, &idm)).mat,
        &m.act.compose(&tensor_map(&idl, &m.act)).mat,
    );
    rep.check_eq("left action unital", &m.act.compose(&tensor_map(&m.base.eta, &idm)).mat, &idm.mat);
    rep
}

pub fn check_right_action<F: Field>(m: &RightModule<F>) -> Report {
    let mut rep = Report::new();
    let idr = m.base.id();
    let idm = LinMap::id(&m.carrier);
    rep.check_eq(
        "right action associative",
        &m.act.compose(&tensor_map(&idm, &m.base.mu)).mat,
        &m.act.compose(&tensor_map(&m.act, &idr)).mat,
    );
    rep.check_eq("right action unital", &m.act.compose(&tensor_map(&idm, &m.base.eta)).mat, &idm.mat);
    rep
}

pub fn check_bimodule<F: Field>(b: &BimoduleData<F>) -> Report {
    let mut rep = check_left_action(&b.left_module());
    rep.extend(check_right_action(&b.right_module()));
    let idl = b.base_left.id();
    let idr = b.base_right.id();
    rep.check_eq(
        "left and right actions commute",
        &b.lact.compose(&tensor_map(&idl, &b.ract)).mat,
        &b.ract.compose(&tensor_map(&b.lact, &idr)).mat,
    );
    rep
}

/// `μ_H ∘ τ ∘ (α ⊗ β) = μ_H ∘ (α ⊗ β)` as maps `L ⊗ L → H`. Returns the
/// first offending basis pair on failure.
pub fn source_target_commute<F: Field>(alpha: &LinMap<F>, beta: &LinMap<F>, h: &MonoidData<F>) -> Option<(usize, usize)> {
    let ab = tensor_map(alpha, beta);
    let lhs = h.mu.compose(&symmetry(&h.carrier, &h.carrier)).compose(&ab);
    let rhs = h.mu.compose(&ab);
    lhs.mat.first_difference(&rhs.mat).map(|c| (c / beta.src.dim, c % beta.src.dim))
}

/// The bimodule structure on `H` from a source `α: L → H` and target
/// `β: L^op → H`: `l·h = α(l)h` and `h·l = β(l)h`.
pub fn bimodule_from_source_target<F: Field>(alpha: &MonoidMor<F>, beta: &MonoidMor<F>) -> Result<BimoduleData<F>> {
    if let Some((i, j)) = source_target_commute(&alpha.map, &beta.map, &alpha.dst) {
        return Err(Error::CommutationFailed(format!("alpha(e{i}) and beta(e{j}) do not commute")));
    }
    Ok(source_target_bimodule(alpha, beta))
}

/// The same actions without the commutation check, so that checkers can
/// report a failed commutation instead of refusing the input.
pub fn source_target_bimodule<F: Field>(alpha: &MonoidMor<F>, beta: &MonoidMor<F>) -> BimoduleData<F> {
    let h = &alpha.dst;
    let idh = h.id();
    let lact = h.mu.compose(&tensor_map(&alpha.map, &idh));
    let ract = h.mu.compose(&symmetry(&h.carrier, &h.carrier)).compose(&tensor_map(&idh, &beta.map));
    let base = alpha.src.clone();
    BimoduleData { base_left: base.clone(), base_right: base, carrier: h.carrier.clone(), lact, ract }
}

/// `M ⊗_L N`: the coequalizer of `ract ⊗ id` and `id ⊗ lact` on `M ⊗ L ⊗ N`.
#[derive(Clone, Debug)]
pub struct BalancedTensor<F> {
    pub left: RightModule<F>,
    pub right: LeftModule<F>,
    pub coeq: Coeq<F>,
}

impl<F: Field> BalancedTensor<F> {
    pub fn dim(&self) -> usize {
        self.coeq.dim()
    }

    /// `π`
    pub fn pi(&self) -> LinMap<F> {
        self.coeq.xi()
    }

    pub fn obj(&self) -> &Obj {
        &self.coeq.q
    }

    /// Relation generators `m·l ⊗ n − m ⊗ l·n`, one per basis triple.
    pub fn relation_generators(left: &RightModule<F>, right: &LeftModule<F>) -> Vec<SparseVec<F>> {
        let (dm, dl, dn) = (left.carrier.dim, left.base.dim(), right.carrier.dim);
        let mut out = Vec::with_capacity(dm * dl * dn);
        for m in 0..dm {
            for l in 0..dl {
                let ml = left.act.mat.col(m * dl + l);
                for n in 0..dn {
                    let ln = right.act.mat.col(l * dn + n);
                    let a = ml.kron(&SparseVec::unit(n), dn);
                    let b = SparseVec::unit(m).kron(ln, dn);
                    let v = a.sub(&b);
                    if !v.is_zero() {
                        out.push(v);
                    }
                }
            }
        }
        out
    }
}

pub fn balanced_tensor<F: Field>(mr: &RightModule<F>, nl: &LeftModule<F>) -> BalancedTensor<F> {
    assert_eq!(mr.base.dim(), nl.base.dim(), "modules over different bases");
    let ambient = mr.carrier.dim * nl.carrier.dim;
    let rel = Subspace::span(ambient, BalancedTensor::relation_generators(mr, nl));
    let coeq = Coeq::from_relations(tensor_obj(&mr.carrier, &nl.carrier), rel);
    BalancedTensor { left: mr.clone(), right: nl.clone(), coeq }
}

/// `ᾶ(l) = 1_H ⊗ α(l)`, i.e. `(η_H ⊗ α) ∘ l_L^{-1}`.
pub fn alpha_tilde<F: Field>(alpha: &MonoidMor<F>) -> LinMap<F> {
    tensor_map(&alpha.dst.eta, &alpha.map).compose(&left_unitor_inv(&alpha.src.carrier))
}

/// `β̃(l) = β(l) ⊗ 1_H`
pub fn beta_tilde<F: Field>(beta: &MonoidMor<F>) -> LinMap<F> {
    tensor_map(&beta.map, &beta.dst.eta).compose(&right_unitor_inv(&beta.src.carrier))
}

/// Induced left action of the base on `M ⊗_L N` through the first factor,
/// when `M` is a bimodule: factor `π ∘ (lact_M ⊗ id_N)` through `id ⊗ π`.
pub fn induced_left_action<F: Field>(bt: &BalancedTensor<F>, lact_m: &LinMap<F>, base: &Obj) -> Result<LinMap<F>> {
    let h = bt.pi().compose(&tensor_map(lact_m, &LinMap::id(&bt.right.carrier)));
    bt.coeq.tensor_left(base).factor_through(&h)
}

/// Induced right action on `M ⊗_L N` through the second factor:
/// factor `π ∘ (id_M ⊗ ract_N)` through `π ⊗ id`.
pub fn induced_right_action<F: Field>(bt: &BalancedTensor<F>, ract_n: &LinMap<F>, base: &Obj) -> Result<LinMap<F>> {
    let h = bt.pi().compose(&tensor_map(&LinMap::id(&bt.left.carrier), ract_n));
    bt.coeq.tensor_right(base).factor_through(&h)
}

/// The canonical map `A ⊗_? (B ⊗_? C) → (A ⊗_? B) ⊗_? C` induced by the
/// identity of `A ⊗ B ⊗ C`. `ab` and `bc` are the inner quotients, `t1` the
/// outer quotient of `AB ⊗ C` and `t2` that of `A ⊗ BC`.
pub fn iterated_comparison<F: Field>(
    ab: &Coeq<F>,
    t1: &Coeq<F>,
    bc: &Coeq<F>,
    t2: &Coeq<F>,
    a: &Obj,
    c: &Obj,
) -> Result<LinMap<F>> {
    let q1 = t1.xi().compose(&tensor_map(&ab.xi(), &LinMap::id(c)));
    let step = bc.tensor_left(a).factor_through(&q1)?;
    t2.factor_through(&step)
}

/// The map `(A ⊗_? B) ⊗_? C → A ⊗_? (B ⊗_? C)` in the other direction.
pub fn iterated_comparison_back<F: Field>(
    ab: &Coeq<F>,
    t1: &Coeq<F>,
    bc: &Coeq<F>,
    t2: &Coeq<F>,
    a: &Obj,
    c: &Obj,
) -> Result<LinMap<F>> {
    let q2 = t2.xi().compose(&tensor_map(&LinMap::id(a), &bc.xi()));
    let step = ab.tensor_right(c).factor_through(&q2)?;
    t1.factor_through(&step)
}

/// Comonoid `(Δ, ε)` in `L`-bimodules; `Δ` is valued in `H ⊗_L H`.
#[derive(Clone, Debug)]
pub struct ComonoidInBimod<F> {
    pub bimod: BimoduleData<F>,
    pub bt: BalancedTensor<F>,
    pub delta: LinMap<F>,
    pub eps: LinMap<F>,
}

/// Checks bimodule-morphism properties, both counit laws and coassociativity
/// in the iterated quotient.
pub fn check_comonoid_in_bimod<F: Field>(c: &ComonoidInBimod<F>) -> Report {
    let mut rep = Report::new();
    let b = &c.bimod;
    let l = &b.base_left;
    let h_obj = &b.carrier;
    let idh = LinMap::id(h_obj);
    let idl = l.id();
    let x = &c.bt;

    // actions on H ⊗_L H: left through the first factor, right through the second
    let lact_x = induced_left_action(x, &b.lact, &l.carrier);
    let ract_x = induced_right_action(x, &b.ract, &l.carrier);
    match &lact_x {
        Ok(lx) => {
            rep.check_eq(
                "coproduct is a left module map",
                &c.delta.compose(&b.lact).mat,
                &lx.compose(&tensor_map(&idl, &c.delta)).mat,
            );
        }
        Err(e) => rep.fail("coproduct is a left module map", format!("induced action: {e}")),
    }
    match &ract_x {
        Ok(rx) => {
            rep.check_eq(
                "coproduct is a right module map",
                &c.delta.compose(&b.ract).mat,
                &rx.compose(&tensor_map(&c.delta, &idl)).mat,
            );
        }
        Err(e) => rep.fail("coproduct is a right module map", format!("induced action: {e}")),
    }
    rep.check_eq(
        "counit is a left module map",
        &c.eps.compose(&b.lact).mat,
        &l.mu.compose(&tensor_map(&idl, &c.eps)).mat,
    );
    rep.check_eq(
        "counit is a right module map",
        &c.eps.compose(&b.ract).mat,
        &l.mu.compose(&tensor_map(&c.eps, &idl)).mat,
    );

    // (ε ⊗_L id) ∘ Δ = id, through L ⊗_L H ≅ H
    let left_counit = b.lact.compose(&tensor_map(&c.eps, &idh));
    match x.coeq.factor_through(&left_counit) {
        Ok(u) => {
            rep.check_eq("left counit", &u.compose(&c.delta).mat, &idh.mat);
        }
        Err(e) => rep.fail("left counit", format!("does not descend: {e}")),
    }
    let right_counit = b.ract.compose(&tensor_map(&idh, &c.eps));
    match x.coeq.factor_through(&right_counit) {
        Ok(u) => {
            rep.check_eq("right counit", &u.compose(&c.delta).mat, &idh.mat);
        }
        Err(e) => rep.fail("right counit", format!("does not descend: {e}")),
    }

    match (&lact_x, &ract_x) {
        (Ok(lx), Ok(rx)) => coassociativity(&mut rep, c, lx, rx),
        _ => rep.fail("coassociativity", "induced actions on the balanced tensor unavailable"),
    }
    rep
}

/// `(Δ ⊗_L id) ∘ Δ = (id ⊗_L Δ) ∘ Δ`, compared in `(H ⊗_L H) ⊗_L H` along
/// the canonical comparison map from `H ⊗_L (H ⊗_L H)`.
fn coassociativity<F: Field>(
    rep: &mut Report,
    c: &ComonoidInBimod<F>,
    lact_x: &LinMap<F>,
    ract_x: &LinMap<F>,
) {
    let name = "coassociativity";
    let base = &c.bimod.base_left;
    let h = &c.bimod.carrier;
    let idh = LinMap::id(h);
    let x = &c.bt;
    let xr = RightModule { base: base.clone(), carrier: x.obj().clone(), act: ract_x.clone() };
    let xl = LeftModule { base: base.clone(), carrier: x.obj().clone(), act: lact_x.clone() };
    let t1 = balanced_tensor(&xr, &c.bimod.left_module());
    let t2 = balanced_tensor(&c.bimod.right_module(), &xl);
    let d = &c.delta;
    let lhs_map = x.coeq.factor_through(&t1.pi().compose(&tensor_map(d, &idh)));
    let rhs_map = x.coeq.factor_through(&t2.pi().compose(&tensor_map(&idh, d)));
    let cmp = iterated_comparison(&x.coeq, &t1.coeq, &x.coeq, &t2.coeq, h, h);
    match (lhs_map, rhs_map, cmp) {
        (Ok(l), Ok(r), Ok(cm)) => {
            rep.check_eq(name, &l.compose(d).mat, &cm.compose(&r).compose(d).mat);
        }
        (l, r, cm) => {
            let why: Vec<String> =
                [l.err(), r.err(), cm.err()].into_iter().flatten().map(|e| e.to_string()).collect();
            rep.fail(name, why.join("; "));
        }
    }
}
