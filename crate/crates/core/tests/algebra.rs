use starr_core::arr::Arrangement;
use starr_core::gb::FreeResolution;
use starr_core::logder::{all_log_derivations, freeness_of, is_tame, log_derivations};
use starr_core::poly::IntPoly;
use starr_core::stalg::{
    analyze, default_eta, restriction_map_check, st_algebra_with, st_macaulay_dual, strong_lefschetz, Slp,
};

fn i(dim: usize, forms: &[&[i64]]) -> Arrangement {
    Arrangement::from_int_forms(dim, forms).unwrap()
}

fn ex4() -> Arrangement {
    i(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]])
}

/// The braid arrangement in essential coordinates.
fn a3() -> Arrangement {
    i(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1], &[0, 1, -1]])
}

fn generic5() -> Arrangement {
    i(3, &[&[1, 0, 0], &[1, 1, 1], &[1, 2, 4], &[1, 3, 9], &[1, 4, 16]])
}

#[test]
fn resolutions_account_for_the_hilbert_series() {
    for a in [ex4(), a3(), generic5()] {
        for m in all_log_derivations(&a).unwrap() {
            let res = FreeResolution::of_submodule(&m.module, &m.generators).unwrap();
            assert_eq!(res.euler_series(), m.hilbert, "{a} p = {}", m.p);
            assert_eq!(res.length(), m.projective_dimension().unwrap());
        }
    }
}

#[test]
fn extreme_degrees() {
    let a = ex4();
    let mods = all_log_derivations(&a).unwrap();
    // D^0 is the ring, D^l is generated by Q
    assert_eq!(mods[0].degrees, vec![0]);
    assert_eq!(mods[3].degrees, vec![a.len() as i32]);
}

#[test]
fn free_and_not_free() {
    let d1 = log_derivations(&a3(), 1).unwrap();
    assert_eq!(d1.projective_dimension().unwrap(), 0);
    let f = freeness_of(&a3(), &d1);
    assert!(f.free);
    assert_eq!(f.exponents, vec![1, 2, 3]);
    for a in [ex4(), generic5()] {
        let f = freeness_of(&a, &log_derivations(&a, 1).unwrap());
        assert!(!f.free, "{a}");
        assert!(log_derivations(&a, 1).unwrap().projective_dimension().unwrap() > 0);
        assert!(is_tame(&a).unwrap());
    }
}

#[test]
fn free_quotients_are_gorenstein_with_lefschetz() {
    let a = a3();
    let st = st_algebra_with(&a, &default_eta(&a, 2).unwrap(), &log_derivations(&a, 1).unwrap()).unwrap();
    let an = analyze(&st).unwrap();
    let expected = [2, 3, 4].iter().fold(IntPoly::one(), |acc, &n| acc.mul(&IntPoly::quantum(n)));
    assert_eq!(an.hilbert_vector, expected.coeffs());
    assert!(an.gorenstein && an.palindromic && an.complete_intersection);
    assert_eq!(an.recovered_exponents, Some(vec![1, 2, 3]));
    assert!(matches!(strong_lefschetz(&st.quotient), Slp::Holds(_)));
    assert!(st_macaulay_dual(&st).unwrap().annihilated);
}

#[test]
fn higher_degree_eta() {
    // degree-3 eta: the top degree moves to |A| + l
    let a = a3();
    let spec = default_eta(&a, 3).unwrap();
    let st = st_algebra_with(&a, &spec, &log_derivations(&a, 1).unwrap()).unwrap();
    let an = analyze(&st).unwrap();
    assert_eq!(an.top_degree, Some(a.len() + a.dim()));
    assert!(an.socle_degree.holds);
    assert_eq!(an.recovered_exponents, Some(vec![1, 2, 3]));
}

#[test]
fn restriction_maps() {
    for a in [ex4(), a3()] {
        for h in 0..a.len() {
            let eta = default_eta(&a, 2).unwrap().eta;
            let c = restriction_map_check(&a, h, &eta).unwrap();
            assert!(c.holds(), "{a} at {h}: {c:?}");
        }
    }
}

#[test]
fn scaling_eta_does_not_change_the_ideal() {
    use starr_core::scalar::Scalar;
    use starr_core::stalg::verify_eta;
    let a = ex4();
    let d1 = log_derivations(&a, 1).unwrap();
    let spec = default_eta(&a, 2).unwrap();
    let st = st_algebra_with(&a, &spec, &d1).unwrap();
    let scaled = verify_eta(&a, &spec.eta.scale(&Scalar::ratio(-7, 3))).unwrap();
    let other = st_algebra_with(&a, &scaled, &d1).unwrap();
    assert_eq!(st.hilbert_vector(), other.hilbert_vector());
    assert!(other.ideal_generators.iter().all(|g| st.contains(g)));
    assert!(st.ideal_generators.iter().all(|g| other.contains(g)));
}
