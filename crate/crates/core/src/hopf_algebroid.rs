//! Hopf algebroids: a left `L`-bialgebroid and a right `R`-bialgebroid on the
//! same monoid `H`, tied together by base compatibility, mixed
//! coassociativity and an antipode.

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::fvect::{symmetry, tensor_map, LinMap, Obj};
use crate::bialgebroid::{verify_left_bialgebroid, verify_right_bialgebroid, LeftBialgebroidData, RightBialgebroidData};
use crate::monoid_alg::{
    balanced_tensor, induced_left_action, induced_right_action, iterated_comparison, iterated_comparison_back, BalancedTensor, LeftModule,
    RightModule,
};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct HopfAlgebroidData<F> {
    pub left: LeftBialgebroidData<F>,
    pub right: RightBialgebroidData<F>,
    pub antipode: LinMap<F>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    L,
    R,
}

/// `H ⊗'_L H` or `H ⊗'_R H`: `H ⊗ H` modulo `hα(b) ⊗ h' − h ⊗ α(b)h'` with
/// `α` the source of that side, and the multiplication induced by `μ_H`.
#[derive(Clone, Debug)]
pub struct PrimedTensor<F> {
    pub bt: BalancedTensor<F>,
    pub mu_prime: Option<LinMap<F>>,
}

/// `α_L∘ε_L∘β_R = β_R`, `β_L∘ε_L∘α_R = α_R`, `α_R∘ε_R∘β_L = β_L`,
/// `β_R∘ε_R∘α_L = α_L`.
pub fn check_base_compat<F: Field>(h: &HopfAlgebroidData<F>) -> Report {
    let (l, r) = (&h.left, &h.right);
    let mut rep = Report::new();
    let (al, bl, el) = (&l.alpha.map, &l.beta.map, &l.eps);
    let (ar, br, er) = (&r.alpha.map, &r.beta.map, &r.eps);
    rep.check_eq("α_L∘ε_L∘β_R = β_R", &al.compose(el).compose(br).mat, &br.mat);
    rep.check_eq("β_L∘ε_L∘α_R = α_R", &bl.compose(el).compose(ar).mat, &ar.mat);
    rep.check_eq("α_R∘ε_R∘β_L = β_L", &ar.compose(er).compose(bl).mat, &bl.mat);
    rep.check_eq("β_R∘ε_R∘α_L = α_L", &br.compose(er).compose(al).mat, &al.mat);
    rep
}

/// Induced cross-base actions.
#[derive(Clone, Debug)]
pub struct BaseActions<F> {
    /// `R ⊗ (H⊗_L H) → H⊗_L H`, `r·(x ⊗ y) = xβ_R(r) ⊗ y`
    pub nu_r_left: LinMap<F>,
    /// `(H⊗_L H) ⊗ R → H⊗_L H`, `(x ⊗ y)·r = x ⊗ yα_R(r)`
    pub nu_r_right: LinMap<F>,
    /// `L ⊗ (H⊗_R H) → H⊗_R H`, `l·(x ⊗ y) = α_L(l)x ⊗ y`
    pub nu_l_left: LinMap<F>,
    /// `(H⊗_R H) ⊗ L → H⊗_R H`, `(x ⊗ y)·l = x ⊗ β_L(l)y`
    pub nu_l_right: LinMap<F>,
}

pub fn induced_base_actions<F: Field>(h: &HopfAlgebroidData<F>) -> Result<BaseActions<F>> {
    let (l, r) = (&h.left, &h.right);
    let wrap = |e: Error| Error::NotBalanced(format!("cross-base bimodule structure broken: {e}"));
    Ok(BaseActions {
        nu_r_left: induced_left_action(&l.bt, &r.bimod.lact, &r.base.carrier).map_err(wrap)?,
        nu_r_right: induced_right_action(&l.bt, &r.bimod.ract, &r.base.carrier).map_err(wrap)?,
        nu_l_left: induced_left_action(&r.bt, &l.bimod.lact, &l.base.carrier).map_err(wrap)?,
        nu_l_right: induced_right_action(&r.bt, &l.bimod.ract, &l.base.carrier).map_err(wrap)?,
    })
}

/// `Δ_L` is an `R`-bimodule map and `Δ_R` an `L`-bimodule map.
pub fn check_delta_cross_bimodule<F: Field>(h: &HopfAlgebroidData<F>) -> Report {
    let mut rep = Report::new();
    let names = [
        "Δ_L is a left R-module map",
        "Δ_L is a right R-module map",
        "Δ_R is a left L-module map",
        "Δ_R is a right L-module map",
    ];
    let nu = match induced_base_actions(h) {
        Ok(nu) => nu,
        Err(e) => {
            for n in names {
                rep.fail(n, e.to_string());
            }
            return rep;
        }
    };
    let (l, r) = (&h.left, &h.right);
    let (idl, idr) = (l.base.id(), r.base.id());
    rep.check_eq(
        names[0],
        &l.delta.compose(&r.bimod.lact).mat,
        &nu.nu_r_left.compose(&tensor_map(&idr, &l.delta)).mat,
    );
    rep.check_eq(
        names[1],
        &l.delta.compose(&r.bimod.ract).mat,
        &nu.nu_r_right.compose(&tensor_map(&l.delta, &idr)).mat,
    );
    rep.check_eq(
        names[2],
        &r.delta.compose(&l.bimod.lact).mat,
        &nu.nu_l_left.compose(&tensor_map(&idl, &r.delta)).mat,
    );
    rep.check_eq(
        names[3],
        &r.delta.compose(&l.bimod.ract).mat,
        &nu.nu_l_right.compose(&tensor_map(&r.delta, &idl)).mat,
    );
    rep
}

/// One mixed coassociativity law `(Δ₁ ⊗ id)∘Δ₂ = (id ⊗ Δ₂)∘Δ₁`, where
/// `Δ₂: H → X₂` is applied first on the left-hand side. `t1` is `X₁ ⊗ H`
/// balanced over the base of `X₂`, `t2` is `H ⊗ X₂` balanced over the base
/// of `X₁`.
#[allow(clippy::too_many_arguments)]
fn mixed_law<F: Field>(
    rep: &mut Report,
    name: &str,
    h_obj: &Obj,
    d1: &LinMap<F>,
    x1: &BalancedTensor<F>,
    d2: &LinMap<F>,
    x2: &BalancedTensor<F>,
    t1: &BalancedTensor<F>,
    t2: &BalancedTensor<F>,
) {
    let idh = LinMap::id(h_obj);
    let lhs = x2.coeq.factor_through(&t1.pi().compose(&tensor_map(d1, &idh)));
    let rhs = x1.coeq.factor_through(&t2.pi().compose(&tensor_map(&idh, d2)));
    let cmp = iterated_comparison(&x1.coeq, &t1.coeq, &x2.coeq, &t2.coeq, h_obj, h_obj);
    let back = iterated_comparison_back(&x1.coeq, &t1.coeq, &x2.coeq, &t2.coeq, h_obj, h_obj);
    let iso_name = format!("{name}: comparison of iterated quotients is an isomorphism");
    match (&cmp, &back) {
        (Ok(c), Ok(b)) => {
            let ok = c.compose(b).mat.is_identity() && b.compose(c).mat.is_identity();
            rep.record(iso_name, ok, None);
        }
        _ => rep.fail(iso_name, "comparison map does not descend"),
    }
    match (lhs, rhs, cmp) {
        (Ok(l), Ok(r), Ok(c)) => {
            rep.check_eq(name, &l.compose(d2).mat, &c.compose(&r).compose(d1).mat);
        }
        (l, r, c) => {
            let mut why = Vec::new();
            if let Err(e) = l {
                why.push(format!("left side not well defined: {e}"));
            }
            if let Err(e) = r {
                why.push(format!("right side not well defined: {e}"));
            }
            if let Err(e) = c {
                why.push(format!("comparison: {e}"));
            }
            rep.fail(name, why.join("; "));
        }
    }
}

/// `(Δ_R ⊗_L id)∘Δ_L = (id ⊗_R Δ_L)∘Δ_R` and
/// `(Δ_L ⊗_R id)∘Δ_R = (id ⊗_L Δ_R)∘Δ_L`, each compared in one fixed
/// iterated quotient of `H ⊗ H ⊗ H`.
pub fn check_mixed_coassoc<F: Field>(h: &HopfAlgebroidData<F>) -> Report {
    let mut rep = Report::new();
    let n1 = "(Δ_R⊗_L id)∘Δ_L = (id⊗_R Δ_L)∘Δ_R";
    let n2 = "(Δ_L⊗_R id)∘Δ_R = (id⊗_L Δ_R)∘Δ_L";
    let nu = match induced_base_actions(h) {
        Ok(nu) => nu,
        Err(e) => {
            for n in [n1, n2] {
                rep.fail(format!("{n}: comparison of iterated quotients is an isomorphism"), e.to_string());
                rep.fail(n, e.to_string());
            }
            return rep;
        }
    };
    let (l, r) = (&h.left, &h.right);
    let hc = &l.total.carrier;
    // (H⊗_R H)⊗_L H and H⊗_R(H⊗_L H)
    let xr_as_right_l = RightModule { base: l.base.clone(), carrier: r.bt.obj().clone(), act: nu.nu_l_right.clone() };
    let xl_as_left_r = LeftModule { base: r.base.clone(), carrier: l.bt.obj().clone(), act: nu.nu_r_left.clone() };
    let ta = balanced_tensor(&xr_as_right_l, &l.bimod.left_module());
    let tb = balanced_tensor(&r.bimod.right_module(), &xl_as_left_r);
    mixed_law(&mut rep, n1, hc, &r.delta, &r.bt, &l.delta, &l.bt, &ta, &tb);
    // (H⊗_L H)⊗_R H and H⊗_L(H⊗_R H)
    let xl_as_right_r = RightModule { base: r.base.clone(), carrier: l.bt.obj().clone(), act: nu.nu_r_right.clone() };
    let xr_as_left_l = LeftModule { base: l.base.clone(), carrier: r.bt.obj().clone(), act: nu.nu_l_left.clone() };
    let tc = balanced_tensor(&xl_as_right_r, &r.bimod.left_module());
    let td = balanced_tensor(&l.bimod.right_module(), &xr_as_left_l);
    mixed_law(&mut rep, n2, hc, &l.delta, &l.bt, &r.delta, &r.bt, &tc, &td);
    rep
}

pub fn primed_tensor<F: Field>(h: &HopfAlgebroidData<F>, side: Side) -> PrimedTensor<F> {
    let total = &h.left.total;
    let (base, alpha) = match side {
        Side::L => (&h.left.base, &h.left.alpha.map),
        Side::R => (&h.right.base, &h.right.alpha.map),
    };
    let idh = total.id();
    let right = RightModule { base: base.clone(), carrier: total.carrier.clone(), act: total.mu.compose(&tensor_map(&idh, alpha)) };
    let left = LeftModule { base: base.clone(), carrier: total.carrier.clone(), act: total.mu.compose(&tensor_map(alpha, &idh)) };
    let bt = balanced_tensor(&right, &left);
    let mu_prime = bt.coeq.factor_through(&total.mu).ok();
    PrimedTensor { bt, mu_prime }
}

/// `τ ⊗ id: H⊗_L H → H⊗'_L H` or `id ⊗ τ: H⊗_R H → H⊗'_R H`.
fn antipode_descent<F: Field>(h: &HopfAlgebroidData<F>, side: Side, p: &PrimedTensor<F>) -> Result<LinMap<F>> {
    let idh = h.left.total.id();
    match side {
        Side::L => h.left.bt.coeq.factor_through(&p.bt.pi().compose(&tensor_map(&h.antipode, &idh))),
        Side::R => h.right.bt.coeq.factor_through(&p.bt.pi().compose(&tensor_map(&idh, &h.antipode))),
    }
}

pub fn check_antipode<F: Field>(h: &HopfAlgebroidData<F>) -> Report {
    let mut rep = Report::new();
    let total = &h.left.total;
    let tau = &h.antipode;
    let (l, r) = (&h.left, &h.right);
    rep.check_eq(
        "antipode is an antihomomorphism",
        &tau.compose(&total.mu).mat,
        &total.mu.compose(&tensor_map(tau, tau)).compose(&symmetry(&total.carrier, &total.carrier)).mat,
    );
    rep.check_eq("antipode preserves the unit", &tau.compose(&total.eta).mat, &total.eta.mat);
    rep.check_eq("τ∘β_L = α_L", &tau.compose(&l.beta.map).mat, &l.alpha.map.mat);
    rep.check_eq("τ∘β_R = α_R", &tau.compose(&r.beta.map).mat, &r.alpha.map.mat);

    for (side, tag, delta, target, descent) in [
        (Side::L, "L", &l.delta, r.alpha.map.compose(&r.eps), "τ⊗id descends to H⊗'_L H"),
        (Side::R, "R", &r.delta, l.alpha.map.compose(&l.eps), "id⊗τ descends to H⊗'_R H"),
    ] {
        let p = primed_tensor(h, side);
        let mu_name = format!("multiplication descends to H⊗'_{tag} H");
        rep.record(mu_name, p.mu_prime.is_some(), None);
        let law = match side {
            Side::L => "μ'_L∘(τ⊗id)∘Δ_L = α_R∘ε_R",
            Side::R => "μ'_R∘(id⊗τ)∘Δ_R = α_L∘ε_L",
        };
        match antipode_descent(h, side, &p) {
            Ok(t) => {
                rep.pass(descent);
                match &p.mu_prime {
                    Some(m) => {
                        rep.check_eq(law, &m.compose(&t).compose(delta).mat, &target.mat);
                    }
                    None => rep.fail(law, "induced multiplication unavailable"),
                }
            }
            Err(e) => {
                rep.fail(descent, format!("antipode/source incompatibility: {e}"));
                rep.fail(law, "antipode map on the balanced tensor unavailable");
            }
        }
    }
    rep
}

/// Identities that hold in every bialgebroid or Hopf algebroid, checked as
/// matrix equalities.
pub fn check_derived<F: Field>(h: &HopfAlgebroidData<F>) -> Report {
    let mut rep = Report::new();
    let (l, r) = (&h.left, &h.right);
    for (tag, alpha, beta, eps, base) in [
        ("L", &l.alpha.map, &l.beta.map, &l.eps, &l.base),
        ("R", &r.alpha.map, &r.beta.map, &r.eps, &r.base),
    ] {
        let id = base.id();
        rep.check_eq(format!("ε_{tag}∘α_{tag} = id"), &eps.compose(alpha).mat, &id.mat);
        rep.check_eq(format!("ε_{tag}∘β_{tag} = id"), &eps.compose(beta).mat, &id.mat);
        let ae = alpha.compose(eps);
        let be = beta.compose(eps);
        rep.check_eq(format!("α_{tag}∘ε_{tag} is idempotent"), &ae.compose(&ae).mat, &ae.mat);
        rep.check_eq(format!("β_{tag}∘ε_{tag} is idempotent"), &be.compose(&be).mat, &be.mat);
    }
    let f = r.eps.compose(&l.beta.map);
    let g = l.eps.compose(&r.alpha.map);
    rep.check_eq("(ε_R∘β_L)∘(ε_L∘α_R) = id_R", &f.compose(&g).mat, &r.base.id().mat);
    rep.check_eq("(ε_L∘α_R)∘(ε_R∘β_L) = id_L", &g.compose(&f).mat, &l.base.id().mat);
    let f = l.eps.compose(&r.beta.map);
    let g = r.eps.compose(&l.alpha.map);
    rep.check_eq("(ε_L∘β_R)∘(ε_R∘α_L) = id_L", &f.compose(&g).mat, &l.base.id().mat);
    rep.check_eq("(ε_R∘α_L)∘(ε_L∘β_R) = id_R", &g.compose(&f).mat, &r.base.id().mat);
    rep
}

pub fn verify_hopf_algebroid<F: Field>(h: &HopfAlgebroidData<F>) -> Report {
    let mut rep = Report::new();
    let same = h.left.total.mu == h.right.total.mu && h.left.total.eta == h.right.total.eta;
    rep.record("left and right structures share the monoid", same, None);
    rep.extend_prefixed("left bialgebroid", verify_left_bialgebroid(&h.left));
    rep.extend_prefixed("right bialgebroid", verify_right_bialgebroid(&h.right));
    rep.extend_prefixed("base compatibility", check_base_compat(h));
    rep.extend_prefixed("cross-base bimodule", check_delta_cross_bimodule(h));
    rep.extend_prefixed("mixed coassociativity", check_mixed_coassoc(h));
    rep.extend_prefixed("antipode", check_antipode(h));
    rep.extend_prefixed("derived", check_derived(h));
    rep
}
