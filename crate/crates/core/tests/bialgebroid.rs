mod common;

use algebroid::bialgebroid::{
    check_counit_left, check_delta_mult, check_takeuchi, induced_lambda, induced_lambda_with_section, induced_rho,
    induced_rho_with_section, right_induced_lambda, right_induced_rho, takeuchi_summary, verify_left_bialgebroid,
    verify_right_bialgebroid, LeftBialgebroidData, RightBialgebroidData,
};
use algebroid::constructions::Orientation;
use algebroid::fvect::{tensor_map, LinMap};
use algebroid::monoid_alg::tensor_monoid;
use algebroid::{Error, Matrix, SparseVec};
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rebuild(d: &LeftBialgebroidData<Q>, beta: Matrix<Q>, lift: Matrix<Q>, eps: Matrix<Q>) -> LeftBialgebroidData<Q> {
    LeftBialgebroidData::new(d.base.clone(), d.total.clone(), d.alpha.map.mat.clone(), beta, lift, eps).unwrap()
}

/// k[Z2] with `g − 1` primitive: coassociative and counital, not multiplicative.
fn primitive_z2() -> LeftBialgebroidData<Q> {
    let d = over_ground(&cyclic(2)).left;
    let lift = Matrix::from_columns(4, vec![SparseVec::unit(0), SparseVec::from_dense(&[q(-1), q(1), q(1), q(0)])]);
    rebuild(&d, d.beta.map.mat.clone(), lift, d.eps.mat.clone())
}

#[test]
fn bialgebras_over_the_ground_field_pass() {
    for (name, h) in degenerate_corpus() {
        assert!(verify_left_bialgebroid(&h.left).passed(), "{name}");
        assert!(verify_right_bialgebroid(&h.right).passed(), "{name}");
    }
}

#[test]
fn doubles_pass_on_both_sides() {
    for (name, h) in small_doubles() {
        let r = verify_left_bialgebroid(&h.left);
        assert!(r.passed(), "{name}\n{r}");
        let r = verify_right_bialgebroid(&h.right);
        assert!(r.passed(), "{name}\n{r}");
    }
}

#[test]
fn rho_over_the_ground_field_is_the_product() {
    let h = over_ground(&h4()).left;
    let rho = induced_rho(&h).unwrap();
    assert_eq!(rho.mat, tensor_monoid(&h.total, &h.total).mu.mat);
}

#[test]
fn rho_is_a_unital_right_action() {
    let d = double(&cyclic(2), Orientation::BaseIsInput).left;
    let rho = induced_rho(&d).unwrap();
    let hh = tensor_monoid(&d.total, &d.total);
    let x = d.bt.obj();
    let one = LinMap::id(x);
    assert_eq!(rho.compose(&tensor_map(&one, &hh.eta)).mat, one.mat);
    let lhs = rho.compose(&tensor_map(&rho, &hh.id()));
    let rhs = rho.compose(&tensor_map(&one, &hh.mu));
    assert_eq!(lhs.mat, rhs.mat);
    assert_eq!(rho.compose(&tensor_map(&d.bt.pi(), &hh.id())).mat, d.bt.pi().compose(&hh.mu).mat);
}

#[test]
fn lambda_over_the_ground_field_multiplies_by_the_coproduct() {
    let d = over_ground(&h4()).left;
    let rho = induced_rho(&d).unwrap();
    let lambda = induced_lambda(&d, &rho).unwrap();
    let hh = tensor_monoid(&d.total, &d.total);
    let expected = hh.mu.compose(&tensor_map(&d.delta, &LinMap::id(&hh.carrier)));
    assert_eq!(lambda.mat, expected.mat);
    // λ(1 ⊗ −) = id
    let unit = lambda.compose(&tensor_map(&d.total.eta, &LinMap::id(d.bt.obj())));
    assert!(unit.mat.is_identity());
}

#[test]
fn rho_and_lambda_ignore_the_section() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let corpus: Vec<_> = small_doubles().into_iter().chain(degenerate_corpus()).collect();
    for (name, h) in &corpus {
        for d in [h.left.clone(), h.right.as_opposite_left()] {
            let rho = induced_rho(&d).unwrap();
            let lambda = induced_lambda(&d, &rho).unwrap();
            let c = &d.bt.coeq;
            for _ in 0..3 {
                let s = c.perturbed_section(&random_matrix(&mut rng, c.relations().dim(), c.dim()));
                assert_eq!(induced_rho_with_section(&d, &s).unwrap(), rho, "{name}");
                assert_eq!(induced_lambda_with_section(&d, &rho, &s).unwrap(), lambda, "{name}");
            }
        }
    }
}

#[test]
fn right_structure_maps_exist_for_the_doubles() {
    for (name, h) in small_doubles() {
        assert!(right_induced_lambda(&h.right).is_ok(), "{name}");
        assert!(right_induced_rho(&h.right).is_ok(), "{name}");
    }
}

#[test]
fn takeuchi_over_the_ground_field_always_holds() {
    let d = primitive_z2();
    let r = check_takeuchi(&d, &induced_rho(&d).unwrap());
    assert!(r.passed());
}

#[test]
fn takeuchi_sizes_for_the_doubles() {
    let d = double(&cyclic(2), Orientation::BaseIsInput).left;
    let t = takeuchi_summary(&d, &induced_rho(&d).unwrap());
    assert!(t.contained);
    assert_eq!((t.balanced_dim, t.image_dim), (8, 4));
    assert!(t.takeuchi_dim >= t.image_dim && t.takeuchi_dim <= t.balanced_dim);
}

#[test]
fn target_twisted_by_an_automorphism_breaks_takeuchi() {
    // base k[Z3], β := α ∘ (g ↦ g²) on a noncommutative total algebra
    let d = double(&cyclic(3), Orientation::BaseIsInput).left;
    assert!(!d.total.is_commutative());
    let square = Matrix::from_i64_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    let bad = rebuild(&d, d.alpha.map.mat.compose(&square), d.delta_lift().mat, d.eps.mat.clone());
    let rho = induced_rho(&bad).unwrap();
    let r = check_takeuchi(&bad, &rho);
    assert!(!r.check_passed("Takeuchi condition"));
    assert!(r.get("Takeuchi condition").unwrap().witness.is_some());
    assert!(!r.check_passed("image of the coproduct lies in the Takeuchi subspace"));
    assert!(matches!(induced_lambda(&bad, &rho), Err(Error::NotBalanced(_))));
    let full = verify_left_bialgebroid(&bad);
    assert!(!full.check_passed("left H-action λ is well defined"));
}

#[test]
fn coproduct_of_the_unit_is_one_tensor_one() {
    for (name, h) in small_doubles() {
        let d = &h.left;
        let one_one = d.bt.pi().compose(&tensor_monoid(&d.total, &d.total).eta);
        assert_eq!(d.delta.compose(&d.total.eta).mat, one_one.mat, "{name}");
    }
}

#[test]
fn grouplike_coproducts_are_multiplicative() {
    let d = over_ground(&s3()).left;
    let r = check_delta_mult(&d, Some(&induced_lambda(&d, &induced_rho(&d).unwrap()).unwrap()));
    assert!(r.passed(), "{r}");
}

#[test]
fn primitive_mutation_isolates_multiplicativity() {
    let r = verify_left_bialgebroid(&primitive_z2());
    assert_eq!(r.failed_names(), vec!["coproduct is multiplicative: Δ∘μ = λ∘(id⊗Δ)", "λ is associative"]);
    assert!(r.check_passed("λ is an action iff the coproduct is unital and multiplicative"));
}

#[test]
fn counit_mutation_is_reported_with_a_witness() {
    let d = over_ground(&h4()).left;
    assert!(check_counit_left(&d).passed());
    // ε(g) := 0, basis 1, x, g, gx
    let bad = rebuild(&d, d.beta.map.mat.clone(), d.delta_lift().mat, d.eps.mat.with_entry(0, 2, q(0)));
    let r = check_counit_left(&bad);
    assert!(r.check_passed("counit preserves the unit"));
    let c = r.get("counit absorbs the source: ε(hα(ε(h'))) = ε(hh')").unwrap();
    assert!(!c.passed && c.witness.is_some());
}

fn right_of(d: &LeftBialgebroidData<Q>) -> RightBialgebroidData<Q> {
    RightBialgebroidData::new(
        d.base.clone(),
        d.total.clone(),
        d.alpha.map.mat.clone(),
        d.beta.map.mat.clone(),
        d.delta_lift().mat,
        d.eps.mat.clone(),
    )
    .unwrap()
}

#[test]
fn right_mutations_mirror_the_left_ones() {
    let d = primitive_z2();
    let left = verify_left_bialgebroid(&d);
    let right = verify_right_bialgebroid(&right_of(&d));
    assert_eq!(left.failed_names().len(), right.failed_names().len());
    let h = over_ground(&h4()).left;
    let bad = rebuild(&h, h.beta.map.mat.clone(), h.delta_lift().mat, h.eps.mat.with_entry(0, 2, q(0)));
    let (l, r) = (verify_left_bialgebroid(&bad), verify_right_bialgebroid(&right_of(&bad)));
    assert!(!l.passed() && !r.passed());
    assert_eq!(l.failed_names().len(), r.failed_names().len());
}

#[test]
fn lambda_and_rho_commute_on_valid_instances() {
    for (name, h) in small_doubles() {
        assert!(verify_left_bialgebroid(&h.left).check_passed("λ and ρ commute"), "{name}");
    }
}

#[test]
fn action_verdicts_match_multiplicativity_verdicts() {
    let cases = [over_ground(&cyclic(3)).left, over_ground(&h4()).left, primitive_z2()];
    for d in &cases {
        let r = verify_left_bialgebroid(d);
        let action = r.check_passed("λ is associative") && r.check_passed("λ is unital");
        let displayed =
            r.check_passed("coproduct preserves the unit") && r.check_passed("coproduct is multiplicative: Δ∘μ = λ∘(id⊗Δ)");
        assert_eq!(action, displayed);
    }
}
