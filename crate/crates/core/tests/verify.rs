use gradedtor_core::verify::{
    default_campaign, run_campaign, verify_counterexample, verify_induced_induction,
    verify_pi1_ranks, verify_poincare, verify_torsion_free, verify_x4_divisibility, ClaimStatus,
    VerifyError,
};

#[test]
fn counterexample_and_x4() {
    let r = verify_counterexample().unwrap();
    assert_eq!(r.status, ClaimStatus::Pass, "{:?}", r.details);
    let r = verify_x4_divisibility().unwrap();
    assert_eq!(r.status, ClaimStatus::Pass, "{:?}", r.details);
}

#[test]
fn counterexample_implies_unclosed_torsion() {
    assert!(verify_counterexample().unwrap().passed());
    let open = verify_torsion_free("BGU(2,1)", 8, false).unwrap();
    assert_eq!(open.status, ClaimStatus::ExpectedFail);
    assert_eq!(open.witness.as_deref(), Some("degree 8: torsion [2]"));
}

#[test]
fn torsion_and_series() {
    for (name, d) in [("BGU(2,1)", 20), ("SO3", 20)] {
        assert!(
            verify_torsion_free(name, d, true).unwrap().passed(),
            "{name}"
        );
    }
    for (name, d) in [("BGU(2,1)", 20), ("loopU(3)", 16), ("Spinc4(1)", 16)] {
        let r = verify_poincare(name, d).unwrap();
        assert!(r.passed(), "{name}: {:?}", r.details);
    }
    assert!(matches!(
        verify_torsion_free("SO5", 8, true),
        Err(VerifyError::Catalog(_))
    ));
}

#[test]
fn induction_endpoints() {
    for k in -3..=3 {
        assert!(verify_induced_induction(k, 0, 10).unwrap().passed());
    }
    assert!(verify_induced_induction(2, -1, 12).unwrap().passed());
    assert!(verify_pi1_ranks().unwrap().passed());
}

#[test]
fn campaign_order_and_errors() {
    let ids = vec![
        "pi1-ranks".to_string(),
        "counterexample".to_string(),
        "torsion:BGU(2,1):no-closure".to_string(),
    ];
    let rs = run_campaign(&ids, 8).unwrap();
    let got: Vec<_> = rs.iter().map(|r| (r.claim_id.as_str(), r.status)).collect();
    assert_eq!(
        got,
        [
            ("pi1-ranks", ClaimStatus::Pass),
            ("counterexample", ClaimStatus::Pass),
            ("torsion:BGU(2,1):no-closure", ClaimStatus::ExpectedFail)
        ]
    );
    assert!(matches!(
        run_campaign(&["bogus".to_string()], 8),
        Err(VerifyError::UnknownClaim(_))
    ));
    assert!(default_campaign().len() > 20);
}
