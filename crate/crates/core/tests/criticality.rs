use rankcrit::criticality::{
    ad_space, certify_theorem1, generic_rank_semisimple, mg_space_sampled, rep_image_space,
    rnd_multiplicities, unipotent_rnd_check, Verdict,
};
use rankcrit::lie::classical::{so, sl, symmetric_power_poly_rep};
use rankcrit::lie::forms::killing_form;
use rankcrit::lie::octonion::{g2_module_27, g2_module_7};
use rankcrit::lie::Representation;
use rankcrit::space::{certify_rank_critical, generic_rank, SamplingOptions};
use rankcrit::{Error, Matrix, Subspace};

fn opts() -> SamplingOptions {
    SamplingOptions::default()
}

#[test]
fn image_and_rank() {
    let cubics = symmetric_power_poly_rep(3, 3);
    let img = rep_image_space(&cubics);
    assert_eq!(img.dim(), 8);
    let (r, _) = generic_rank_semisimple(&cubics, &opts()).unwrap();
    assert_eq!(r, 9);
    assert_eq!(generic_rank(&img, &opts()).0, 9);

    let (g, _) = sl(3);
    let ad = Representation::adjoint(g.clone());
    assert_eq!(generic_rank_semisimple(&ad, &opts()).unwrap().0, 6);
    assert_eq!(rep_image_space(&Representation::trivial(g, 3)).dim(), 0);
}

#[test]
fn g2_27_generic_rank() {
    let m = g2_module_27().unwrap();
    assert_eq!(m.weights().unwrap().zero_weight_dim(), 3);
    assert_eq!(generic_rank_semisimple(&m, &opts()).unwrap().0, 24);
}

#[test]
fn sl2_adjoint_report() {
    let ad = Representation::adjoint(sl(2).0);
    let rep = rnd_multiplicities(&ad, &opts(), 3).unwrap();
    assert_eq!(rep.verdict, Verdict::Certified);
    assert_eq!(rep.rnd_highest_weights(), vec![(vec!["2".to_string()], 1)]);
    for row in &rep.rows {
        assert!(row.mult_rnd >= row.mult_image);
        assert!(row.samples >= row.hw_dim + 3);
    }
    // Certified reports agree with the generic tangent-space computation.
    let img = rep_image_space(&ad);
    assert!(certify_rank_critical(&img, &opts()).unwrap().is_certified());
    assert_eq!(rep.rnd, img.span());
}

#[test]
fn g2_seven_report() {
    let m = g2_module_7().unwrap();
    let rep = rnd_multiplicities(&m, &opts(), 3).unwrap();
    assert_eq!(rep.verdict, Verdict::UpperBound);
    assert_eq!(rep.rnd_dim, 21);
    assert_eq!(rep.image_dim, 14);
    let json = rep.to_json();
    assert_eq!(json["verdict"], "UpperBound");
    assert_eq!(json, rnd_multiplicities(&m, &opts(), 3).unwrap().to_json());
}

#[test]
fn theorem_one_small() {
    let c = certify_theorem1(3, 1, &opts()).unwrap();
    assert_eq!(c.report.n, 10);
    assert_eq!(c.report.image_dim, 8);
    assert_eq!(c.report.generic_rank, 9);
    assert!(c.is_maximal_singular());
    assert!(matches!(certify_theorem1(2, 1, &opts()), Err(Error::InvalidInput(_))));
    assert!(matches!(certify_theorem1(3, 0, &opts()), Err(Error::InvalidInput(_))));
}

#[test]
fn certified_verdict_is_seed_independent() {
    let cubics = symmetric_power_poly_rep(3, 3);
    for seed in [1, 17, 12345] {
        let o = SamplingOptions::with_seed(seed);
        let rep = rnd_multiplicities(&cubics, &o, 3).unwrap();
        assert_eq!(rep.verdict, Verdict::Certified, "seed {seed}");
    }
}

#[test]
fn mg_examples() {
    for m in [2, 3] {
        let (g, _) = sl(m);
        let mg = mg_space_sampled(&g, 20, 0).unwrap();
        assert_eq!(mg, ad_space(&g));
    }
    // Only the (x, x) pairs: o(kappa), of dimension d(d-1)/2.
    let (g, _) = sl(3);
    let o = mg_space_sampled(&g, 0, 0).unwrap();
    assert_eq!(o.dim(), 8 * 7 / 2);
    let k = killing_form(&g);
    for a in o.basis_vectors() {
        let ka = k.mul(&Matrix::from_flat(8, &a));
        assert!(ka.add(&ka.transpose()).is_zero());
    }
    assert!(o.contains_subspace(&ad_space(&g)).unwrap());
}

#[test]
fn unipotent_checks() {
    let (g, _) = sl(2);
    let ad = Representation::adjoint(g.clone());
    let img = rep_image_space(&ad).span();
    assert!(unipotent_rnd_check(&ad, &img, 10, 3, 0).unwrap());

    // o_3 plus a direction sending the zero weight vector to a nonzero weight:
    // fine at g = 1, caught after conjugating by root exponentials.
    let (_, std) = so(3).unwrap();
    let wd = std.weights().unwrap();
    let z = (0..3).find(|&i| wd.weights[i].iter().all(|x| *x == rankcrit::rat::int(0))).unwrap();
    let a = (0..3).find(|&i| i != z).unwrap();
    let y = wd.from_weight_basis(&Matrix::unit(3, a, z));
    let o3 = rep_image_space(&std).span();
    assert!(!o3.contains(y.entries()));
    let mut bigger = o3.clone();
    bigger.insert(y.entries());
    assert!(unipotent_rnd_check(&std, &bigger, 10, 0, 0).unwrap());
    assert!(!unipotent_rnd_check(&std, &bigger, 10, 3, 0).unwrap());
    assert!(unipotent_rnd_check(&std, &o3, 10, 3, 0).unwrap());
    assert!(unipotent_rnd_check(&std, &Subspace::zero(9), 10, 3, 0).unwrap());
}
