mod common;

use algebroid::bialgebroid::RightBialgebroidData;
use algebroid::constructions::Orientation;
use algebroid::fvect::{tensor_map, LinMap};
use algebroid::hopf_algebroid::{
    check_antipode, check_base_compat, check_delta_cross_bimodule, check_derived, check_mixed_coassoc,
    induced_base_actions, primed_tensor, verify_hopf_algebroid, HopfAlgebroidData, Side,
};
use algebroid::Matrix;
use common::*;

fn all_valid() -> Vec<(String, HopfAlgebroidData<Q>)> {
    degenerate_corpus().into_iter().chain(small_doubles()).collect()
}

fn with_antipode(h: &HopfAlgebroidData<Q>, tau: Matrix<Q>) -> HopfAlgebroidData<Q> {
    HopfAlgebroidData { antipode: LinMap::from_matrix(tau), ..h.clone() }
}

#[test]
fn hopf_algebras_over_the_ground_field_pass() {
    for (name, h) in degenerate_corpus() {
        let r = verify_hopf_algebroid(&h);
        assert!(r.passed(), "{name}\n{r}");
    }
}

#[test]
fn small_doubles_pass() {
    for (name, h) in small_doubles() {
        let r = verify_hopf_algebroid(&h);
        assert!(r.passed(), "{name}\n{r}");
        assert_eq!(r.checks.len(), 111, "{name}");
    }
}

#[test]
fn report_sections_are_all_present() {
    let r = verify_hopf_algebroid(&double(&cyclic(2), Orientation::BaseIsInput));
    for prefix in [
        "left bialgebroid: ",
        "right bialgebroid: ",
        "base compatibility: ",
        "cross-base bimodule: ",
        "mixed coassociativity: ",
        "antipode: ",
        "derived: ",
    ] {
        assert!(r.checks.iter().any(|c| c.name.starts_with(prefix)), "{prefix}");
    }
}

#[test]
fn base_compatibility_over_the_ground_field() {
    for (name, h) in degenerate_corpus() {
        let eta = &h.left.total.eta.mat;
        assert_eq!((&h.left.alpha.map.mat, &h.right.beta.map.mat), (eta, eta));
        assert!(check_base_compat(&h).passed(), "{name}");
    }
}

#[test]
fn twisted_right_target_breaks_base_compatibility() {
    // functions on Z2: swapping the idempotents is an automorphism
    let h = double(&cyclic(2), Orientation::BaseIsDual);
    let r = &h.right;
    let swap = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
    let right = RightBialgebroidData::new(
        r.base.clone(),
        r.total.clone(),
        r.alpha.map.mat.clone(),
        r.beta.map.mat.compose(&swap),
        r.delta_lift().mat,
        r.eps.mat.clone(),
    )
    .unwrap();
    let bad = HopfAlgebroidData { right, ..h.clone() };
    let rep = check_base_compat(&bad);
    assert!(!rep.passed());
    assert!(rep.failed().all(|c| c.witness.is_some()));
    assert!(!verify_hopf_algebroid(&bad).passed());
}

#[test]
fn cross_base_actions_over_the_ground_field_are_multiplications() {
    let h = over_ground(&h4());
    let nu = induced_base_actions(&h).unwrap();
    // R = k, so ⊗ R and R ⊗ are unitors
    assert!(nu.nu_r_right.mat.is_identity());
    assert!(nu.nu_r_left.mat.is_identity());
    assert!(check_delta_cross_bimodule(&h).passed());
}

#[test]
fn cross_base_actions_of_the_doubles_are_unital_and_associative() {
    for (name, h) in small_doubles() {
        let nu = induced_base_actions(&h).unwrap();
        let (l, r) = (&h.left, &h.right);
        for (act, bt, base, on_right) in [
            (&nu.nu_r_right, &l.bt, &r.base, true),
            (&nu.nu_r_left, &l.bt, &r.base, false),
            (&nu.nu_l_right, &r.bt, &l.base, true),
            (&nu.nu_l_left, &r.bt, &l.base, false),
        ] {
            let x = LinMap::id(bt.obj());
            let id_b = base.id();
            if on_right {
                assert_eq!(act.compose(&tensor_map(&x, &base.eta)).mat, x.mat, "{name}");
                let lhs = act.compose(&tensor_map(act, &id_b));
                let rhs = act.compose(&tensor_map(&x, &base.mu));
                assert_eq!(lhs.mat, rhs.mat, "{name}");
            } else {
                assert_eq!(act.compose(&tensor_map(&base.eta, &x)).mat, x.mat, "{name}");
                let lhs = act.compose(&tensor_map(&id_b, act));
                let rhs = act.compose(&tensor_map(&base.mu, &x));
                assert_eq!(lhs.mat, rhs.mat, "{name}");
            }
        }
        assert!(check_delta_cross_bimodule(&h).passed(), "{name}");
    }
}

#[test]
fn mixed_coassociativity_holds() {
    for (name, h) in all_valid() {
        let r = check_mixed_coassoc(&h);
        assert!(r.passed(), "{name}\n{r}");
        assert_eq!(r.checks.len(), 4, "{name}");
    }
}

#[test]
fn primed_tensor_over_the_ground_field_is_the_plain_tensor() {
    let h = over_ground(&s3());
    for side in [Side::L, Side::R] {
        let p = primed_tensor(&h, side);
        assert_eq!(p.bt.dim(), 36);
        assert_eq!(p.mu_prime.unwrap().mat, h.left.total.mu.mat);
    }
}

#[test]
fn primed_tensor_sizes_for_the_doubles() {
    // the total algebra is free of rank dim H over the base on either side,
    // so H ⊗'_B H has dimension dim(total)² / dim(base)
    for (name, h) in small_doubles() {
        let n = h.left.total.dim();
        for (side, b) in [(Side::L, h.left.base.dim()), (Side::R, h.right.base.dim())] {
            let p = primed_tensor(&h, side);
            assert_eq!(p.bt.dim(), n * n / b, "{name} {side:?}");
            assert!(p.mu_prime.is_some());
        }
    }
    let r = check_antipode(&double(&cyclic(2), Orientation::BaseIsDual));
    assert!(r.check_passed("τ⊗id descends to H⊗'_L H") && r.check_passed("id⊗τ descends to H⊗'_R H"));
}

#[test]
fn classical_antipode_checks() {
    let h = over_ground(&h4());
    let r = check_antipode(&h);
    assert!(r.passed(), "{r}");
    // S² ≠ id on H4, yet S is still an antihomomorphism
    let s = &h.antipode.mat;
    assert!(!s.compose(s).is_identity());
}

#[test]
fn identity_antipode_on_noncommutative_algebras_is_rejected() {
    for h in [over_ground(&s3()), over_ground(&h4()), double(&cyclic(2), Orientation::BaseIsInput)] {
        let n = h.left.total.dim();
        let bad = with_antipode(&h, Matrix::identity(n));
        let r = check_antipode(&bad);
        let c = r.get("antipode is an antihomomorphism").unwrap();
        assert!(!c.passed && c.witness.is_some());
    }
}

#[test]
fn derived_identities_hold() {
    for (name, h) in all_valid() {
        let r = check_derived(&h);
        assert!(r.passed(), "{name}\n{r}");
        assert_eq!(r.checks.len(), 12);
    }
}

#[test]
fn mutation_catalog_is_detected_deterministically() {
    let base = z2_double_file();
    for (map, i, j, v) in MUTATIONS {
        let f = mutate(&base, map, *i, *j, v);
        let a = verify_hopf_algebroid(&decode_hopf(&f));
        let b = verify_hopf_algebroid(&decode_hopf(&f));
        assert!(!a.passed(), "{map}[{i},{j}] := {v}");
        assert_eq!(a, b);
    }
}

#[test]
fn every_antipode_entry_matters() {
    let h = double(&cyclic(2), Orientation::BaseIsInput);
    let s = &h.antipode.mat;
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            let bumped = s.with_entry(i, j, s.get(i, j) + q(1));
            assert!(!verify_hopf_algebroid(&with_antipode(&h, bumped)).passed(), "S[{i},{j}]");
        }
    }
}

#[test]
fn counit_mutation_reaches_derived_rows() {
    // ε_L(1) := 2 breaks ε_L∘α_L = id
    let h = double(&cyclic(2), Orientation::BaseIsInput);
    let l = &h.left;
    let unit_col = l.total.unit_vec().first().unwrap().0;
    let mut eps = l.eps.mat.clone();
    for (row, _) in l.eps.mat.col(unit_col).entries().to_vec() {
        eps = eps.with_entry(row, unit_col, q(2) * l.eps.mat.get(row, unit_col));
    }
    let left = algebroid::bialgebroid::LeftBialgebroidData::new(
        l.base.clone(),
        l.total.clone(),
        l.alpha.map.mat.clone(),
        l.beta.map.mat.clone(),
        l.delta_lift().mat,
        eps,
    )
    .unwrap();
    let bad = HopfAlgebroidData { left, ..h.clone() };
    assert!(!check_derived(&bad).check_passed("ε_L∘α_L = id"));
}
