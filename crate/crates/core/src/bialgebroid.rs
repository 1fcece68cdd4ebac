//! Left and right bialgebroids: the induced actions `ρ` and `λ` on the
//! balanced tensor square, and the full axiom checkers.
//!
//! Conventions for a left `L`-bialgebroid on `H`: `l·h = α(l)h`,
//! `h·l = β(l)h`, so `H ⊗_L H` is `H ⊗ H` modulo `β(l)x ⊗ y − x ⊗ α(l)y`.
//! `ρ` is right multiplication by `H ⊗ H` and `λ(h ⊗ x) = Δ(h)·x`.
//!
//! A right `R`-bialgebroid `(H, α, β, Δ, ε)` is checked as the left
//! `R`-bialgebroid `(H^op, β, α, Δ, ε)`: both have the same balanced tensor
//! square, the left/right roles of the induced actions swap, and every axiom
//! of one is literally an axiom of the other.

use serde::Serialize;

use crate::error::Result;
use crate::exactlin::{kernel, image, Field, Matrix, SparseVec};
use crate::fvect::{symmetry_matrix, tensor_map, LinMap};
use crate::monoid_alg::{
    alpha_tilde, balanced_tensor, beta_tilde, check_bimodule, check_comonoid_in_bimod, check_monoid,
    check_monoid_mor, opposite, source_target_bimodule, source_target_commute, tensor_monoid,
    BalancedTensor, BimoduleData, ComonoidInBimod, MonoidData, MonoidMor,
};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct LeftBialgebroidData<F> {
    pub base: MonoidData<F>,
    pub total: MonoidData<F>,
    pub alpha: MonoidMor<F>,
    /// from `L^op`
    pub beta: MonoidMor<F>,
    /// valued in `H ⊗_L H`
    pub delta: LinMap<F>,
    pub eps: LinMap<F>,
    pub bimod: BimoduleData<F>,
    pub bt: BalancedTensor<F>,
}

impl<F: Field> LeftBialgebroidData<F> {
    /// `delta_lift` is any lift `H → H ⊗ H` of the coproduct; only its class
    /// in `H ⊗_L H` is kept.
    pub fn new(
        base: MonoidData<F>,
        total: MonoidData<F>,
        alpha: Matrix<F>,
        beta: Matrix<F>,
        delta_lift: Matrix<F>,
        eps: Matrix<F>,
    ) -> Result<Self> {
        let alpha = MonoidMor::new(&base, &total, alpha)?;
        let beta = MonoidMor::new(&opposite(&base), &total, beta)?;
        let bimod = source_target_bimodule(&alpha, &beta);
        let bt = balanced_tensor(&bimod.right_module(), &bimod.left_module());
        let hh = crate::fvect::tensor_obj(&total.carrier, &total.carrier);
        let lift = LinMap::new(total.carrier.clone(), hh, delta_lift)?;
        let delta = bt.pi().compose(&lift);
        let eps = LinMap::new(total.carrier.clone(), base.carrier.clone(), eps)?;
        Ok(LeftBialgebroidData { base, total, alpha, beta, delta, eps, bimod, bt })
    }

    /// The canonical lift `section ∘ Δ`.
    pub fn delta_lift(&self) -> LinMap<F> {
        self.bt.coeq.section().compose(&self.delta)
    }

    pub fn comonoid(&self) -> ComonoidInBimod<F> {
        ComonoidInBimod { bimod: self.bimod.clone(), bt: self.bt.clone(), delta: self.delta.clone(), eps: self.eps.clone() }
    }
}

#[derive(Clone, Debug)]
pub struct RightBialgebroidData<F> {
    pub base: MonoidData<F>,
    pub total: MonoidData<F>,
    pub alpha: MonoidMor<F>,
    /// from `R^op`
    pub beta: MonoidMor<F>,
    /// valued in `H ⊗_R H`
    pub delta: LinMap<F>,
    pub eps: LinMap<F>,
    /// `r·h = hβ(r)`, `h·r = hα(r)`
    pub bimod: BimoduleData<F>,
    pub bt: BalancedTensor<F>,
}

impl<F: Field> RightBialgebroidData<F> {
    pub fn new(
        base: MonoidData<F>,
        total: MonoidData<F>,
        alpha: Matrix<F>,
        beta: Matrix<F>,
        delta_lift: Matrix<F>,
        eps: Matrix<F>,
    ) -> Result<Self> {
        let op = LeftBialgebroidData::new(base.clone(), opposite(&total), beta.clone(), alpha.clone(), delta_lift, eps)?;
        let alpha = MonoidMor::new(&base, &total, alpha)?;
        let beta = MonoidMor::new(&opposite(&base), &total, beta)?;
        let mut bimod = op.bimod;
        bimod.carrier = total.carrier.clone();
        Ok(RightBialgebroidData { base, total, alpha, beta, delta: op.delta, eps: op.eps, bimod, bt: op.bt })
    }

    pub fn delta_lift(&self) -> LinMap<F> {
        self.bt.coeq.section().compose(&self.delta)
    }

    /// The left bialgebroid `(H^op, β, α, Δ, ε)` over the same base.
    pub fn as_opposite_left(&self) -> LeftBialgebroidData<F> {
        let total = opposite(&self.total);
        let alpha = MonoidMor { src: self.base.clone(), dst: total.clone(), map: self.beta.map.clone() };
        let beta = MonoidMor { src: opposite(&self.base), dst: total.clone(), map: self.alpha.map.clone() };
        LeftBialgebroidData {
            base: self.base.clone(),
            total,
            alpha,
            beta,
            delta: self.delta.clone(),
            eps: self.eps.clone(),
            bimod: self.bimod.clone(),
            bt: self.bt.clone(),
        }
    }

    pub fn comonoid(&self) -> ComonoidInBimod<F> {
        self.as_opposite_left().comonoid()
    }
}

/// `π ∘ μ_{H⊗H}` on `(H ⊗ H) ⊗ (H ⊗ H)`.
fn rho_target<F: Field>(d: &LeftBialgebroidData<F>, hh: &MonoidData<F>) -> LinMap<F> {
    let mat = d.bt.coeq.project_matrix(&hh.mu.mat);
    LinMap { src: hh.mu.src.clone(), dst: d.bt.obj().clone(), mat }
}

/// The unique `ρ` with `ρ ∘ (π ⊗ id) = π ∘ μ_{H⊗H}`.
pub fn induced_rho<F: Field>(d: &LeftBialgebroidData<F>) -> Result<LinMap<F>> {
    let hh = tensor_monoid(&d.total, &d.total);
    induced_rho_in(d, &hh)
}

fn induced_rho_in<F: Field>(d: &LeftBialgebroidData<F>, hh: &MonoidData<F>) -> Result<LinMap<F>> {
    d.bt.coeq.tensor_right(&hh.carrier).factor_through(&rho_target(d, hh))
}

/// `ρ` built from a caller-chosen section of `π`.
pub fn induced_rho_with_section<F: Field>(d: &LeftBialgebroidData<F>, section: &LinMap<F>) -> Result<LinMap<F>> {
    let hh = tensor_monoid(&d.total, &d.total);
    let c = d.bt.coeq.tensor_right(&hh.carrier);
    c.factor_with_section(&rho_target(d, &hh), &tensor_map(section, &hh.id()))
}

fn lambda_target<F: Field>(d: &LeftBialgebroidData<F>, rho: &LinMap<F>) -> LinMap<F> {
    let hh = crate::fvect::tensor_obj(&d.total.carrier, &d.total.carrier);
    rho.compose(&tensor_map(&d.delta, &LinMap::id(&hh)))
}

/// The unique `λ` with `λ ∘ (id ⊗ π) = ρ ∘ (Δ ⊗ id)`. Fails exactly when
/// the Takeuchi condition fails.
pub fn induced_lambda<F: Field>(d: &LeftBialgebroidData<F>, rho: &LinMap<F>) -> Result<LinMap<F>> {
    d.bt.coeq.tensor_left(&d.total.carrier).factor_through(&lambda_target(d, rho))
}

pub fn induced_lambda_with_section<F: Field>(
    d: &LeftBialgebroidData<F>,
    rho: &LinMap<F>,
    section: &LinMap<F>,
) -> Result<LinMap<F>> {
    let c = d.bt.coeq.tensor_left(&d.total.carrier);
    c.factor_with_section(&lambda_target(d, rho), &tensor_map(&d.total.id(), section))
}

/// `x ↦ act(x ⊗ v)` for an action `X ⊗ A → X`.
pub(crate) fn right_operator<F: Field>(act: &Matrix<F>, dx: usize, da: usize, v: &SparseVec<F>) -> Matrix<F> {
    Matrix::from_col_fn(dx, dx, |x| act.apply(&SparseVec::unit(x).kron(v, da)))
}

/// `x ↦ act(v ⊗ x)` for an action `A ⊗ X → X`.
pub(crate) fn left_operator<F: Field>(act: &Matrix<F>, dx: usize, v: &SparseVec<F>) -> Matrix<F> {
    Matrix::from_col_fn(dx, dx, |x| act.apply(&v.kron(&SparseVec::unit(x), dx)))
}

/// Unit and associativity of `ρ`. Associativity `R_{ab} = R_b R_a` is
/// checked for `a` in the generating set `{h⊗1} ∪ {1⊗h}` of `H ⊗ H` and all
/// basis `b`; with the unit law this implies it for all `a`, because the set
/// of `a` satisfying it for every `b` is closed under products and sums.
fn check_rho_action<F: Field>(rep: &mut Report, names: &Names, d: &LeftBialgebroidData<F>, rho: &LinMap<F>, hh: &MonoidData<F>) {
    let dx = d.bt.dim();
    let dh = d.total.dim();
    let da = hh.dim();
    rep.check_eq(names.rho_unit, &right_operator(&rho.mat, dx, da, hh.unit_vec()), &Matrix::identity(dx));
    let ops: Vec<Matrix<F>> = (0..da).map(|b| right_operator(&rho.mat, dx, da, &SparseVec::unit(b))).collect();
    let one = d.total.unit_vec();
    let gens: Vec<SparseVec<F>> = (0..dh)
        .map(|h| SparseVec::unit(h).kron(one, dh))
        .chain((0..dh).map(|h| one.kron(&SparseVec::unit(h), dh)))
        .collect();
    let mut bad = None;
    'outer: for (gi, a) in gens.iter().enumerate() {
        let ra = right_operator(&rho.mat, dx, da, a);
        for (b, rb) in ops.iter().enumerate() {
            let ab = hh.product(a, &SparseVec::unit(b));
            if rb.compose(&ra) != right_operator(&rho.mat, dx, da, &ab) {
                bad = Some(format!("generator {gi}, basis element {b}"));
                break 'outer;
            }
        }
    }
    rep.record(names.rho_assoc, bad.is_none(), bad);
}

/// Dimensions reported by the Takeuchi analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TakeuchiSummary {
    pub balanced_dim: usize,
    pub takeuchi_dim: usize,
    pub image_dim: usize,
    pub contained: bool,
}

/// `x ↦ (ρ(x, β̃(l)) − ρ(x, ᾶ(l)))_l`, a map `H⊗_L H → (H⊗_L H)^{dim L}`;
/// its kernel is the Takeuchi subspace.
fn takeuchi_map<F: Field>(d: &LeftBialgebroidData<F>, rho: &LinMap<F>) -> Matrix<F> {
    let dx = d.bt.dim();
    let dl = d.base.dim();
    let diff = beta_tilde(&d.beta).sub(&alpha_tilde(&d.alpha));
    let m = rho.mat.compose(&Matrix::identity(dx).kron(&diff.mat));
    Matrix::from_col_fn(dl * dx, dx, |x| {
        let mut e = Vec::new();
        for l in 0..dl {
            e.extend(m.col(x * dl + l).iter().map(|(y, c)| (l * dx + y, c.clone())));
        }
        SparseVec::from_pairs(e)
    })
}

pub fn takeuchi_summary<F: Field>(d: &LeftBialgebroidData<F>, rho: &LinMap<F>) -> TakeuchiSummary {
    let t = kernel(&takeuchi_map(d, rho));
    let im = image(&d.delta.mat);
    TakeuchiSummary { balanced_dim: d.bt.dim(), takeuchi_dim: t.dim(), image_dim: im.dim(), contained: t.contains_subspace(&im) }
}

/// `ρ(Δ(h), β̃(l)) = ρ(Δ(h), ᾶ(l))` on `H ⊗ L`, and `im Δ ⊆` Takeuchi
/// subspace.
pub fn check_takeuchi<F: Field>(d: &LeftBialgebroidData<F>, rho: &LinMap<F>) -> Report {
    let mut rep = Report::new();
    takeuchi_into(&mut rep, &Names::LEFT, d, rho);
    rep
}

fn takeuchi_into<F: Field>(rep: &mut Report, names: &Names, d: &LeftBialgebroidData<F>, rho: &LinMap<F>) {
    let lhs = rho.compose(&tensor_map(&d.delta, &beta_tilde(&d.beta)));
    let rhs = rho.compose(&tensor_map(&d.delta, &alpha_tilde(&d.alpha)));
    rep.check_eq(names.takeuchi, &lhs.mat, &rhs.mat);
    let s = takeuchi_summary(d, rho);
    rep.record(
        names.takeuchi_image,
        s.contained,
        Some(format!("balanced dim {}, Takeuchi dim {}, image dim {}", s.balanced_dim, s.takeuchi_dim, s.image_dim)),
    );
}

/// Both formulations of multiplicativity of `Δ`, plus the agreement of
/// their verdicts.
pub fn check_delta_mult<F: Field>(d: &LeftBialgebroidData<F>, lambda: Option<&LinMap<F>>) -> Report {
    let mut rep = Report::new();
    delta_mult_into(&mut rep, &Names::LEFT, d, lambda);
    rep
}

fn delta_mult_into<F: Field>(rep: &mut Report, names: &Names, d: &LeftBialgebroidData<F>, lambda: Option<&LinMap<F>>) {
    let h = &d.total;
    let hh = tensor_monoid(h, h);
    let unit_ok = rep.check_eq(names.delta_unit, &d.delta.compose(&h.eta).mat, &d.bt.pi().compose(&hh.eta).mat);
    let Some(lam) = lambda else {
        for n in [names.delta_mult, names.lambda_assoc, names.lambda_unit, names.equivalence] {
            rep.fail(n, "induced action unavailable");
        }
        return;
    };
    let idx = LinMap::id(d.bt.obj());
    let mult_ok = rep.check_eq(
        names.delta_mult,
        &d.delta.compose(&h.mu).mat,
        &lam.compose(&tensor_map(&h.id(), &d.delta)).mat,
    );
    let assoc_ok = rep.check_eq(
        names.lambda_assoc,
        &lam.compose(&tensor_map(&h.mu, &idx)).mat,
        &lam.compose(&tensor_map(&h.id(), lam)).mat,
    );
    let lunit_ok = rep.check_eq(names.lambda_unit, &lam.compose(&tensor_map(&h.eta, &idx)).mat, &idx.mat);
    let agree = (assoc_ok && lunit_ok) == (unit_ok && mult_ok);
    rep.record(
        names.equivalence,
        agree,
        (!agree).then(|| format!("action verdict {}, coproduct verdict {}", assoc_ok && lunit_ok, unit_ok && mult_ok)),
    );
}

/// `ε∘η_H = η_L` and `ε(hα(ε(h'))) = ε(hh') = ε(hβ(ε(h')))`.
pub fn check_counit_left<F: Field>(d: &LeftBialgebroidData<F>) -> Report {
    let mut rep = Report::new();
    counit_into(&mut rep, &Names::LEFT, d);
    rep
}

fn counit_into<F: Field>(rep: &mut Report, names: &Names, d: &LeftBialgebroidData<F>) {
    let h = &d.total;
    let e_mu = d.eps.compose(&h.mu);
    rep.check_eq(names.counit_unit, &d.eps.compose(&h.eta).mat, &d.base.eta.mat);
    let via_alpha = e_mu.compose(&tensor_map(&h.id(), &d.alpha.map.compose(&d.eps)));
    let via_beta = e_mu.compose(&tensor_map(&h.id(), &d.beta.map.compose(&d.eps)));
    rep.check_eq(names.counit_source, &via_alpha.mat, &e_mu.mat);
    rep.check_eq(names.counit_target, &via_beta.mat, &e_mu.mat);
}

/// `λ(h ⊗ ρ(x ⊗ a)) = ρ(λ(h ⊗ x) ⊗ a)` for all basis `h`, `a`.
fn check_actions_commute<F: Field>(rep: &mut Report, names: &Names, d: &LeftBialgebroidData<F>, rho: &LinMap<F>, lam: &LinMap<F>) {
    let dx = d.bt.dim();
    let dh = d.total.dim();
    let da = dh * dh;
    let rs: Vec<Matrix<F>> = (0..da).map(|a| right_operator(&rho.mat, dx, da, &SparseVec::unit(a))).collect();
    let mut bad = None;
    'outer: for h in 0..dh {
        let lh = left_operator(&lam.mat, dx, &SparseVec::unit(h));
        for (a, ra) in rs.iter().enumerate() {
            if lh.compose(ra) != ra.compose(&lh) {
                bad = Some(format!("basis element {h} against {a}"));
                break 'outer;
            }
        }
    }
    rep.record(names.actions_commute, bad.is_none(), bad);
}

/// Check names. The right-bialgebroid report reuses the left checker on the
/// opposite algebra, where `ρ` and `λ`, and source and target, trade roles.
struct Names {
    source_mor: &'static str,
    target_mor: &'static str,
    commute: &'static str,
    rho_exists: &'static str,
    rho_unit: &'static str,
    rho_assoc: &'static str,
    takeuchi: &'static str,
    takeuchi_image: &'static str,
    lambda_exists: &'static str,
    delta_unit: &'static str,
    delta_mult: &'static str,
    lambda_assoc: &'static str,
    lambda_unit: &'static str,
    equivalence: &'static str,
    counit_unit: &'static str,
    counit_source: &'static str,
    counit_target: &'static str,
    actions_commute: &'static str,
}

impl Names {
    const LEFT: Names = Names {
        source_mor: "source is a monoid morphism",
        target_mor: "target is a monoid morphism from the opposite base",
        commute: "source and target images commute",
        rho_exists: "right (H⊗H)-action ρ is well defined",
        rho_unit: "ρ is unital",
        rho_assoc: "ρ is associative",
        takeuchi: "Takeuchi condition",
        takeuchi_image: "image of the coproduct lies in the Takeuchi subspace",
        lambda_exists: "left H-action λ is well defined",
        delta_unit: "coproduct preserves the unit",
        delta_mult: "coproduct is multiplicative: Δ∘μ = λ∘(id⊗Δ)",
        lambda_assoc: "λ is associative",
        lambda_unit: "λ is unital",
        equivalence: "λ is an action iff the coproduct is unital and multiplicative",
        counit_unit: "counit preserves the unit",
        counit_source: "counit absorbs the source: ε(hα(ε(h'))) = ε(hh')",
        counit_target: "counit absorbs the target: ε(hβ(ε(h'))) = ε(hh')",
        actions_commute: "λ and ρ commute",
    };

    const RIGHT: Names = Names {
        source_mor: "target is a monoid morphism from the opposite base",
        target_mor: "source is a monoid morphism",
        commute: "source and target images commute",
        rho_exists: "left (H⊗H)-action λ is well defined",
        rho_unit: "λ is unital",
        rho_assoc: "λ is associative",
        takeuchi: "Takeuchi condition",
        takeuchi_image: "image of the coproduct lies in the Takeuchi subspace",
        lambda_exists: "right H-action ρ is well defined",
        delta_unit: "coproduct preserves the unit",
        delta_mult: "coproduct is multiplicative: Δ∘μ = ρ∘(Δ⊗id)",
        lambda_assoc: "ρ is associative",
        lambda_unit: "ρ is unital",
        equivalence: "ρ is an action iff the coproduct is unital and multiplicative",
        counit_unit: "counit preserves the unit",
        counit_source: "counit absorbs the target: ε(β(ε(h))h') = ε(hh')",
        counit_target: "counit absorbs the source: ε(α(ε(h))h') = ε(hh')",
        actions_commute: "λ and ρ commute",
    };
}

/// Everything computed while verifying a left bialgebroid.
pub struct LeftInduced<F> {
    pub rho: Option<LinMap<F>>,
    pub lambda: Option<LinMap<F>>,
}

fn verify_left_with(d: &LeftBialgebroidData<impl Field>, names: &Names) -> Report {
    verify_left_full(d, names).0
}

fn verify_left_full<F: Field>(d: &LeftBialgebroidData<F>, names: &Names) -> (Report, LeftInduced<F>) {
    let mut rep = Report::new();
    rep.extend_prefixed("base monoid", check_monoid(&d.base));
    rep.extend_prefixed("total monoid", check_monoid(&d.total));
    rep.extend_prefixed(names.source_mor, check_monoid_mor(&d.alpha));
    rep.extend_prefixed(names.target_mor, check_monoid_mor(&d.beta));
    let commute = source_target_commute(&d.alpha.map, &d.beta.map, &d.total);
    rep.record(names.commute, commute.is_none(), commute.map(|(i, j)| format!("source e{i}, target e{j}")));
    rep.extend_prefixed("base bimodule", check_bimodule(&d.bimod));
    rep.extend_prefixed("comonoid", check_comonoid_in_bimod(&d.comonoid()));

    let hh = tensor_monoid(&d.total, &d.total);
    let rho = match induced_rho_in(d, &hh) {
        Ok(r) => {
            rep.pass(names.rho_exists);
            check_rho_action(&mut rep, names, d, &r, &hh);
            Some(r)
        }
        Err(e) => {
            rep.fail(names.rho_exists, e.to_string());
            rep.fail(names.rho_unit, "ρ unavailable");
            rep.fail(names.rho_assoc, "ρ unavailable");
            None
        }
    };
    let lambda = match &rho {
        Some(r) => {
            takeuchi_into(&mut rep, names, d, r);
            match induced_lambda(d, r) {
                Ok(l) => {
                    rep.pass(names.lambda_exists);
                    Some(l)
                }
                Err(e) => {
                    rep.fail(names.lambda_exists, e.to_string());
                    None
                }
            }
        }
        None => {
            for n in [names.takeuchi, names.takeuchi_image, names.lambda_exists] {
                rep.fail(n, "ρ unavailable");
            }
            None
        }
    };
    delta_mult_into(&mut rep, names, d, lambda.as_ref());
    counit_into(&mut rep, names, d);
    match (&rho, &lambda) {
        (Some(r), Some(l)) => check_actions_commute(&mut rep, names, d, r, l),
        _ => rep.fail(names.actions_commute, "induced actions unavailable"),
    }
    (rep, LeftInduced { rho, lambda })
}

pub fn verify_left_bialgebroid<F: Field>(d: &LeftBialgebroidData<F>) -> Report {
    verify_left_with(d, &Names::LEFT)
}

/// Verifies and also returns the induced actions for reuse.
pub fn verify_left_bialgebroid_full<F: Field>(d: &LeftBialgebroidData<F>) -> (Report, LeftInduced<F>) {
    verify_left_full(d, &Names::LEFT)
}

pub fn verify_right_bialgebroid<F: Field>(d: &RightBialgebroidData<F>) -> Report {
    verify_left_with(&d.as_opposite_left(), &Names::RIGHT)
}

/// The left action `λ: (H⊗H) ⊗ (H⊗_R H) → H⊗_R H` of a right bialgebroid.
pub fn right_induced_lambda<F: Field>(d: &RightBialgebroidData<F>) -> Result<LinMap<F>> {
    let op = d.as_opposite_left();
    let rho = induced_rho(&op)?;
    let dx = d.bt.dim();
    let dhh = d.total.dim() * d.total.dim();
    Ok(LinMap::from_matrix(rho.mat.compose(&symmetry_matrix(dhh, dx))))
}

/// The right action `ρ: (H⊗_R H) ⊗ H → H⊗_R H` of a right bialgebroid.
pub fn right_induced_rho<F: Field>(d: &RightBialgebroidData<F>) -> Result<LinMap<F>> {
    let op = d.as_opposite_left();
    let rho_op = induced_rho(&op)?;
    let lam = induced_lambda(&op, &rho_op)?;
    let dx = d.bt.dim();
    Ok(LinMap::from_matrix(lam.mat.compose(&symmetry_matrix(dx, d.total.dim()))))
}

pub fn right_takeuchi_summary<F: Field>(d: &RightBialgebroidData<F>) -> Result<TakeuchiSummary> {
    let op = d.as_opposite_left();
    let rho = induced_rho(&op)?;
    Ok(takeuchi_summary(&op, &rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;
    use crate::fvect::Obj;

    type Q = Rational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    /// Sweedler's algebra over `L = k`: basis 1, x, g, gx.
    fn h4_over_k() -> LeftBialgebroidData<Q> {
        let prod = |a: usize, b: usize| {
            let (j, i) = (a & 1, a >> 1);
            let (l, k) = (b & 1, b >> 1);
            if j + l > 1 {
                return SparseVec::zero();
            }
            let sign = if j * k == 1 { -1 } else { 1 };
            SparseVec::unit(((i + k) % 2) * 2 + j + l).scale(&q(sign))
        };
        let h = MonoidData::from_fn(Obj::labeled(4, "H4"), prod, SparseVec::unit(0));
        let k = MonoidData::ground();
        let t = |a: usize, b: usize| a * 4 + b;
        let delta = Matrix::from_columns(
            16,
            vec![
                SparseVec::unit(t(0, 0)),
                SparseVec::from_pairs(vec![(t(1, 0), q(1)), (t(2, 1), q(1))]),
                SparseVec::unit(t(2, 2)),
                SparseVec::from_pairs(vec![(t(3, 2), q(1)), (t(0, 3), q(1))]),
            ],
        );
        let eps = Matrix::from_i64_rows(&[&[1, 0, 1, 0]]);
        let unit = h.eta.mat.clone();
        LeftBialgebroidData::new(k, h, unit.clone(), unit, delta, eps).unwrap()
    }

    #[test]
    fn bialgebra_over_ground_field_passes() {
        let d = h4_over_k();
        let rep = verify_left_bialgebroid(&d);
        assert!(rep.passed(), "{rep}");
        let rho = induced_rho(&d).unwrap();
        let hh = tensor_monoid(&d.total, &d.total);
        assert_eq!(rho.mat, hh.mu.mat);
        let s = takeuchi_summary(&d, &rho);
        assert_eq!((s.balanced_dim, s.takeuchi_dim), (16, 16));
        assert!(s.contained);
    }

    #[test]
    fn counit_mutation_is_isolated() {
        let d = h4_over_k();
        let mut bad = d.clone();
        bad.eps = LinMap::from_matrix(d.eps.mat.with_entry(0, 1, q(1)));
        let rep = verify_left_bialgebroid(&bad);
        assert!(!rep.passed());
        assert!(rep.failed_names().iter().any(|n| n.contains("counit")), "{rep}");
    }
}
