//! Builders for concrete instances: group algebras, Sweedler's `H_4`, duals,
//! Yetter–Drinfeld module algebras, smash products, scalar extensions and
//! Heisenberg doubles.

use crate::bialgebroid::{LeftBialgebroidData, RightBialgebroidData};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, SparseVec};
use crate::fvect::{symmetry, tensor_map, tensor_obj, LinMap, Obj};
use crate::hopf_algebroid::{verify_hopf_algebroid, HopfAlgebroidData};
use crate::monoid_alg::{check_monoid, opposite, tensor_monoid, MonoidData};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebraData<F> {
    pub monoid: MonoidData<F>,
    /// `A → A ⊗ A`
    pub delta: LinMap<F>,
    /// `A → k`
    pub eps: LinMap<F>,
    pub antipode: LinMap<F>,
}

impl<F: Field> HopfAlgebraData<F> {
    pub fn new(monoid: MonoidData<F>, delta: Matrix<F>, eps: Matrix<F>, antipode: Matrix<F>) -> Result<Self> {
        let c = monoid.carrier.clone();
        let delta = LinMap::new(c.clone(), tensor_obj(&c, &c), delta)?;
        let eps = LinMap::new(c.clone(), Obj::unit(), eps)?;
        let antipode = LinMap::new(c.clone(), c, antipode)?;
        Ok(HopfAlgebraData { monoid, delta, eps, antipode })
    }

    pub fn dim(&self) -> usize {
        self.monoid.dim()
    }

    pub fn carrier(&self) -> &Obj {
        &self.monoid.carrier
    }
}

fn tensor3<F: Field>(a: &LinMap<F>, b: &LinMap<F>, c: &LinMap<F>) -> LinMap<F> {
    tensor_map(&tensor_map(a, b), c)
}

pub fn check_hopf_algebra<F: Field>(a: &HopfAlgebraData<F>) -> Report {
    let mut rep = Report::new();
    rep.extend_prefixed("algebra", check_monoid(&a.monoid));
    let m = &a.monoid;
    let id = m.id();
    let (d, e, s) = (&a.delta, &a.eps, &a.antipode);
    rep.check_eq(
        "coassociativity",
        &tensor_map(d, &id).compose(d).mat,
        &tensor_map(&id, d).compose(d).mat,
    );
    rep.check_eq("left counit", &tensor_map(e, &id).compose(d).mat, &id.mat);
    rep.check_eq("right counit", &tensor_map(&id, e).compose(d).mat, &id.mat);
    let aa = tensor_monoid(m, m);
    rep.check_eq(
        "coproduct is multiplicative",
        &d.compose(&m.mu).mat,
        &aa.mu.compose(&tensor_map(d, d)).mat,
    );
    rep.check_eq("coproduct preserves the unit", &d.compose(&m.eta).mat, &aa.eta.mat);
    rep.check_eq("counit is multiplicative", &e.compose(&m.mu).mat, &tensor_map(e, e).mat);
    rep.check_eq("counit preserves the unit", &e.compose(&m.eta).mat, &Matrix::identity(1));
    let unit_eps = m.eta.compose(e);
    rep.check_eq("left antipode law", &m.mu.compose(&tensor_map(s, &id)).compose(d).mat, &unit_eps.mat);
    rep.check_eq("right antipode law", &m.mu.compose(&tensor_map(&id, s)).compose(d).mat, &unit_eps.mat);
    rep
}

/// `table[i][j]` is the index of `g_i g_j`.
pub fn group_algebra<F: Field>(table: &[Vec<usize>]) -> Result<HopfAlgebraData<F>> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {i} has length {}, expected {n}", row.len())));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return Err(Error::NotAGroup(format!("row {i} contains out-of-range element {x}")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("associativity fails on ({a}, {b}, {c})")));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let mut inv = vec![0; n];
    for g in 0..n {
        inv[g] = (0..n)
            .find(|&h| table[g][h] == e && table[h][g] == e)
            .ok_or_else(|| Error::NotAGroup(format!("element {g} has no inverse")))?;
    }
    let carrier = Obj::new(n);
    let monoid = MonoidData::from_fn(carrier, |i, j| SparseVec::unit(table[i][j]), SparseVec::unit(e));
    let delta = Matrix::from_col_fn(n * n, n, |g| SparseVec::unit(g * n + g));
    let eps = Matrix::from_col_fn(1, n, |_| SparseVec::unit(0));
    let s = Matrix::from_col_fn(n, n, |g| SparseVec::unit(inv[g]));
    HopfAlgebraData::new(monoid, delta, eps, s)
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// `S_3` with elements listed as permutations of `{0, 1, 2}` in
/// lexicographic order; index 0 is the identity.
pub fn symmetric_group_s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms
        .iter()
        .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
        .collect()
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, x, g, gx`
/// (indices 0..4): `g² = 1`, `x² = 0`, `xg = −gx`, `Δg = g⊗g`,
/// `Δx = x⊗1 + g⊗x`.
pub fn sweedler_h4<F: Field>() -> Result<HopfAlgebraData<F>> {
    if F::characteristic() == 2 {
        return Err(Error::BadCharacteristic(2, "Sweedler's H_4 needs characteristic different from 2".into()));
    }
    let idx = |i: usize, j: usize| 2 * i + j;
    let carrier = Obj::labeled(4, "H4");
    // g^i x^j · g^k x^l = (−1)^{jk} g^{i+k} x^{j+l}
    let prod = |a: usize, b: usize| {
        let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
        if j + l >= 2 {
            return SparseVec::zero();
        }
        let sign = if j * k == 1 { -F::one() } else { F::one() };
        SparseVec::from_pairs(vec![(idx((i + k) % 2, j + l), sign)])
    };
    let monoid = MonoidData::from_fn(carrier, prod, SparseVec::unit(0));
    let t = |a: usize, b: usize| a * 4 + b;
    let one = F::one();
    let delta = Matrix::from_columns(
        16,
        vec![
            SparseVec::unit(t(0, 0)),
            SparseVec::from_pairs(vec![(t(1, 0), one.clone()), (t(2, 1), one.clone())]),
            SparseVec::unit(t(2, 2)),
            SparseVec::from_pairs(vec![(t(3, 2), one.clone()), (t(0, 3), one.clone())]),
        ],
    );
    let eps = Matrix::from_i64_rows(&[&[1, 0, 1, 0]]);
    let s = Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0]]);
    HopfAlgebraData::new(monoid, delta, eps, s)
}

/// The dual Hopf algebra on the dual basis: every structure map is
/// transposed.
pub fn dual_hopf<F: Field>(a: &HopfAlgebraData<F>) -> HopfAlgebraData<F> {
    let label = a.carrier().label.as_ref().map(|l| {
        l.strip_suffix('*').map_or_else(|| format!("{l}*"), str::to_string)
    });
    let carrier = Obj { dim: a.dim(), label };
    let monoid = MonoidData::new(carrier, a.delta.mat.transpose(), a.eps.mat.transpose()).expect("transposed shapes");
    HopfAlgebraData::new(monoid, a.monoid.mu.mat.transpose(), a.monoid.eta.mat.transpose(), a.antipode.mat.transpose())
        .expect("transposed shapes")
}

/// A left-left Yetter–Drinfeld module algebra `A` over a Hopf algebra `H`.
#[derive(Clone, Debug)]
pub struct YDModuleAlgebra<F> {
    pub hopf: HopfAlgebraData<F>,
    pub algebra: MonoidData<F>,
    /// `H ⊗ A → A`
    pub action: LinMap<F>,
    /// `A → H ⊗ A`
    pub coaction: LinMap<F>,
}

pub fn check_yetter_drinfeld<F: Field>(y: &YDModuleAlgebra<F>) -> Report {
    let mut rep = Report::new();
    let h = &y.hopf;
    let (hc, ac) = (h.carrier(), &y.algebra.carrier);
    let (idh, ida) = (h.monoid.id(), y.algebra.id());
    let (act, co) = (&y.action, &y.coaction);
    let (mu_h, mu_a) = (&h.monoid.mu, &y.algebra.mu);
    let (eta_h, eta_a) = (&h.monoid.eta, &y.algebra.eta);
    let sym_ha = symmetry::<F>(hc, ac);
    let sym_ah = symmetry::<F>(ac, hc);

    rep.check_eq(
        "module algebra: action is associative",
        &act.compose(&tensor_map(&idh, act)).mat,
        &act.compose(&tensor_map(mu_h, &ida)).mat,
    );
    rep.check_eq("module algebra: unit acts trivially", &act.compose(&tensor_map(eta_h, &ida)).mat, &ida.mat);
    let rhs = mu_a
        .compose(&tensor_map(act, act))
        .compose(&tensor3(&idh, &sym_ha, &ida))
        .compose(&tensor3(&h.delta, &ida, &ida));
    rep.check_eq("module algebra: multiplicativity", &act.compose(&tensor_map(&idh, mu_a)).mat, &rhs.mat);
    rep.check_eq(
        "module algebra: action on the unit",
        &act.compose(&tensor_map(&idh, eta_a)).mat,
        &eta_a.compose(&h.eps).mat,
    );

    rep.check_eq(
        "comodule algebra: coassociativity",
        &tensor_map(&h.delta, &ida).compose(co).mat,
        &tensor_map(&idh, co).compose(co).mat,
    );
    rep.check_eq("comodule algebra: counit", &tensor_map(&h.eps, &ida).compose(co).mat, &ida.mat);
    let rhs = tensor_map(mu_h, mu_a).compose(&tensor3(&idh, &sym_ah, &ida)).compose(&tensor_map(co, co));
    rep.check_eq("comodule algebra: multiplicativity", &co.compose(mu_a).mat, &rhs.mat);
    rep.check_eq("comodule algebra: unit", &co.compose(eta_a).mat, &tensor_map(eta_h, eta_a).mat);

    // h₁a₋₁ ⊗ h₂▷a₀ = (h₁▷a)₋₁h₂ ⊗ (h₁▷a)₀
    let sym_hh = symmetry::<F>(hc, hc);
    let lhs = tensor_map(mu_h, act).compose(&tensor3(&idh, &sym_hh, &ida)).compose(&tensor_map(&h.delta, co));
    let rhs = tensor_map(mu_h, &ida)
        .compose(&tensor_map(&idh, &sym_ah))
        .compose(&tensor_map(co, &idh))
        .compose(&tensor_map(act, &idh))
        .compose(&tensor_map(&idh, &sym_ha))
        .compose(&tensor_map(&h.delta, &ida));
    rep.check_eq("Yetter–Drinfeld compatibility", &lhs.mat, &rhs.mat);

    // ab = (a₋₁▷b)a₀
    let sym_aa = symmetry::<F>(ac, ac);
    let rhs = mu_a.compose(&tensor_map(act, &ida)).compose(&tensor_map(&idh, &sym_aa)).compose(&tensor_map(co, &ida));
    rep.check_eq("braided commutativity", &mu_a.mat, &rhs.mat);
    rep
}

/// The trivial datum: `H` acts through its counit and coacts by `a ↦ 1 ⊗ a`.
pub fn trivial_datum<F: Field>(hopf: HopfAlgebraData<F>, algebra: MonoidData<F>) -> YDModuleAlgebra<F> {
    let ida = algebra.id();
    let action = tensor_map(&hopf.eps, &ida);
    let coaction = tensor_map(&hopf.monoid.eta, &ida);
    YDModuleAlgebra { hopf, algebra, action, coaction }
}

/// `H` acting on `A = H*` by the hit action `⟨h ⇀ φ, y⟩ = ⟨φ, yh⟩`, with
/// the coaction `⟨φ₀, y⟩ φ₋₁ = φ(y₂) S(y₁) y₃`. The action convention is
/// fixed here and only here.
pub fn hit_datum<F: Field>(h: &HopfAlgebraData<F>) -> YDModuleAlgebra<F> {
    let n = h.dim();
    let dual = dual_hopf(h);
    let mu = &h.monoid.mu.mat;
    // (h ⇀ e^b) = Σ_k ⟨e^b, e_k e_h⟩ e^k
    let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); n * n];
    for hh in 0..n {
        for k in 0..n {
            for (b, x) in mu.col(k * n + hh).iter() {
                cols[hh * n + b].push((k, x.clone()));
            }
        }
    }
    let act = Matrix::from_columns(n, cols.into_iter().map(SparseVec::from_pairs).collect());
    let idh = h.monoid.id();
    let d2 = tensor_map(&h.delta, &idh).compose(&h.delta).mat;
    let s = &h.antipode.mat;
    let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); n];
    for j in 0..n {
        for (ix, c) in d2.col(j).iter() {
            let (p, i, r) = (ix / (n * n), (ix / n) % n, ix % n);
            let v = h.monoid.product(s.col(p), &SparseVec::unit(r));
            for (cc, x) in v.iter() {
                cols[i].push((cc * n + j, c.clone() * x.clone()));
            }
        }
    }
    let coact = Matrix::from_columns(n * n, cols.into_iter().map(SparseVec::from_pairs).collect());
    let a = dual.monoid;
    let action = LinMap::new(tensor_obj(h.carrier(), &a.carrier), a.carrier.clone(), act).unwrap();
    let coaction = LinMap::new(a.carrier.clone(), tensor_obj(h.carrier(), &a.carrier), coact).unwrap();
    YDModuleAlgebra { hopf: h.clone(), algebra: a, action, coaction }
}

/// Which factor of the Heisenberg double is the base.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Orientation {
    /// `A ♯ A*`: the input algebra is the base, its dual acts.
    #[default]
    BaseIsInput,
    /// `A* ♯ A`: the dual is the base, the input acts.
    BaseIsDual,
}

/// The Yetter–Drinfeld datum behind the Heisenberg double of `a`.
pub fn heisenberg_datum<F: Field>(a: &HopfAlgebraData<F>, orientation: Orientation) -> YDModuleAlgebra<F> {
    match orientation {
        Orientation::BaseIsInput => hit_datum(&dual_hopf(a)),
        Orientation::BaseIsDual => hit_datum(a),
    }
}

/// `A ⊗ H` with `(a♯h)(b♯k) = a(h₁▷b) ♯ h₂k`; basis index `a·dim H + h`.
pub fn smash_product<F: Field>(y: &YDModuleAlgebra<F>) -> MonoidData<F> {
    let h = &y.hopf;
    let (hc, ac) = (h.carrier(), &y.algebra.carrier);
    let (idh, ida) = (h.monoid.id(), y.algebra.id());
    let carrier = tensor_obj(ac, hc);
    let step1 = tensor_map(&tensor3(&ida, &h.delta, &ida), &idh);
    let step2 = tensor_map(&tensor3(&ida, &idh, &symmetry(hc, ac)), &idh);
    let step3 = tensor_map(&tensor3(&ida, &y.action, &idh), &idh);
    let mu = tensor_map(&y.algebra.mu, &h.monoid.mu).compose(&step3).compose(&step2).compose(&step1);
    let eta = tensor_map(&y.algebra.eta, &h.monoid.eta);
    MonoidData::new(carrier, mu.mat, eta.mat).expect("smash product shapes")
}

/// The scalar extension without the final verification.
pub fn scalar_extension_unchecked<F: Field>(y: &YDModuleAlgebra<F>) -> Result<HopfAlgebroidData<F>> {
    let h = &y.hopf;
    let (hc, ac) = (h.carrier(), &y.algebra.carrier);
    let (idh, ida) = (h.monoid.id(), y.algebra.id());
    let total = smash_product(y);
    let base = y.algebra.clone();
    let s_inv = h
        .antipode
        .mat
        .inverse()
        .ok_or_else(|| Error::NoSolution("antipode of the acting Hopf algebra is not invertible".into()))?;
    let s_inv = LinMap::from_matrix(s_inv);
    // α_L(a) = a♯1, β_L(b) = b₀♯S⁻¹(b₋₁)
    let alpha_l = tensor_map(&ida, &h.monoid.eta);
    let beta_l = tensor_map(&ida, &s_inv).compose(&symmetry(hc, ac)).compose(&y.coaction);
    // Δ_L(a♯h) = (a♯h₁) ⊗ (1♯h₂)
    let delta_l = tensor_map(&tensor3(&ida, &idh, &y.algebra.eta), &idh).compose(&tensor_map(&ida, &h.delta));
    let eps_l = tensor_map(&ida, &h.eps);
    // τ(a♯h) = (1♯S(h)) · β_L(S(a₋₁)▷a₀)
    let theta = y.action.compose(&tensor_map(&h.antipode, &ida)).compose(&y.coaction);
    let tau = total
        .mu
        .compose(&tensor_map(&tensor_map(&y.algebra.eta, &h.antipode), &beta_l.compose(&theta)))
        .compose(&symmetry(ac, hc));
    let tau = LinMap { src: total.carrier.clone(), dst: total.carrier.clone(), mat: tau.mat };
    let tau_inv = LinMap::from_matrix(
        tau.mat.inverse().ok_or_else(|| Error::NoSolution("candidate antipode is not invertible".into()))?,
    );
    let left = LeftBialgebroidData::new(
        base.clone(),
        total.clone(),
        alpha_l.mat.clone(),
        beta_l.mat.clone(),
        delta_l.mat.clone(),
        eps_l.mat.clone(),
    )?;
    let right = right_from_antipode(&left, &tau, &tau_inv)?;
    Ok(HopfAlgebroidData { left, right, antipode: tau })
}

/// Transports a left `L`-bialgebroid along an invertible antihomomorphism
/// `τ` and flips the coproduct, giving a right bialgebroid over `L^op`:
/// `α_R = τα_L`, `β_R = τβ_L`, `Δ_R = flip∘(τ⊗τ)∘Δ_L∘τ⁻¹`, `ε_R = ε_L∘τ⁻¹`.
pub fn right_from_antipode<F: Field>(
    left: &LeftBialgebroidData<F>,
    tau: &LinMap<F>,
    tau_inv: &LinMap<F>,
) -> Result<RightBialgebroidData<F>> {
    let hc = &left.total.carrier;
    let alpha = tau.compose(&left.alpha.map);
    let beta = tau.compose(&left.beta.map);
    let delta = symmetry(hc, hc).compose(&tensor_map(tau, tau)).compose(&left.delta_lift()).compose(tau_inv);
    let eps = left.eps.compose(tau_inv);
    RightBialgebroidData::new(opposite(&left.base), left.total.clone(), alpha.mat, beta.mat, delta.mat, eps.mat)
}

/// The scalar extension `A ♯ H` over `L = A`, `R = A^op`. Accepted only if
/// the Yetter–Drinfeld datum and the full Hopf algebroid checker pass.
pub fn scalar_extension_hopf_algebroid<F: Field>(y: &YDModuleAlgebra<F>) -> Result<HopfAlgebroidData<F>> {
    let yd = check_yetter_drinfeld(y);
    if !yd.passed() {
        return Err(Error::AxiomFailure(Box::new(yd)));
    }
    let h = scalar_extension_unchecked(y)?;
    let rep = verify_hopf_algebroid(&h);
    if !rep.passed() {
        return Err(Error::AxiomFailure(Box::new(rep)));
    }
    Ok(h)
}

pub fn heisenberg_double<F: Field>(a: &HopfAlgebraData<F>, orientation: Orientation) -> Result<HopfAlgebroidData<F>> {
    scalar_extension_hopf_algebroid(&heisenberg_datum(a, orientation))
}

/// A Hopf algebra as a Hopf algebroid over the ground field: both sides use
/// `η` as source and target and the same coproduct and counit.
pub fn hopf_algebra_as_algebroid<F: Field>(a: &HopfAlgebraData<F>) -> Result<HopfAlgebroidData<F>> {
    let k = MonoidData::ground();
    let m = &a.monoid;
    let left = LeftBialgebroidData::new(
        k.clone(),
        m.clone(),
        m.eta.mat.clone(),
        m.eta.mat.clone(),
        a.delta.mat.clone(),
        a.eps.mat.clone(),
    )?;
    let right = RightBialgebroidData::new(k, m.clone(), m.eta.mat.clone(), m.eta.mat.clone(), a.delta.mat.clone(), a.eps.mat.clone())?;
    Ok(HopfAlgebroidData { left, right, antipode: a.antipode.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{Fp, Rational};
    use crate::hopf_algebroid::verify_hopf_algebroid;

    type Q = Rational;

    #[test]
    fn group_algebras_pass() {
        for n in 1..=4 {
            let a = group_algebra::<Q>(&cyclic_group_table(n)).unwrap();
            assert!(check_hopf_algebra(&a).passed());
        }
        let s3 = group_algebra::<Q>(&symmetric_group_s3_table()).unwrap();
        assert!(!s3.monoid.is_commutative());
        assert!(check_hopf_algebra(&s3).passed());
    }

    #[test]
    fn not_a_group() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(group_algebra::<Q>(&bad), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn sweedler() {
        let h = sweedler_h4::<Q>().unwrap();
        assert!(check_hopf_algebra(&h).passed(), "{}", check_hopf_algebra(&h));
        assert!(!h.antipode.compose(&h.antipode).mat.is_identity());
        assert!(matches!(sweedler_h4::<Fp<2>>(), Err(Error::BadCharacteristic(2, _))));
        let d = dual_hopf(&h);
        assert!(check_hopf_algebra(&d).passed());
        assert_eq!(dual_hopf(&d), h);
    }

    #[test]
    fn hit_datum_is_yd() {
        let h = sweedler_h4::<Q>().unwrap();
        let y = hit_datum(&h);
        let r = check_yetter_drinfeld(&y);
        assert!(r.passed(), "{r}");
        assert!(check_monoid(&smash_product(&y)).passed());
    }

    #[test]
    fn hopf_algebra_over_ground() {
        let h = sweedler_h4::<Q>().unwrap();
        let r = verify_hopf_algebroid(&hopf_algebra_as_algebroid(&h).unwrap());
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn z2_double() {
        let a = group_algebra::<Q>(&cyclic_group_table(2)).unwrap();
        for o in [Orientation::BaseIsInput, Orientation::BaseIsDual] {
            let h = scalar_extension_unchecked(&heisenberg_datum(&a, o)).unwrap();
            let r = verify_hopf_algebroid(&h);
            assert!(r.passed(), "{r}");
        }
    }
}
