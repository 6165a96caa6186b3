use super::*;
use crate::error::Error;
use crate::field::Field;
use crate::syntax::Vars;
use crate::towers::ExtKind;
use crate::{Algebra, EElem, RatFunc};
use num_traits::{One, Zero};

fn a() -> RatFunc {
    RatFunc::var(0)
}
fn b() -> RatFunc {
    RatFunc::var(1)
}
fn ab() -> Algebra {
    Algebra::new(a(), b()).unwrap()
}

fn certificate(gamma: RatFunc, r: &crate::Elem) -> LinkageCertificate {
    match build_certificate(&a(), &b(), &gamma, r).unwrap() {
        BuildOutcome::Certificate(c) => *c,
        BuildOutcome::Degenerate(d) => panic!("unexpected degenerate {d:?}"),
    }
}

#[test]
fn r_equals_y() {
    let alg = ab();
    let w = NormWitness::new(alg.y(), b()).unwrap();
    let Construction::Slot(slot) = construct_inseparable_subfield(&w).unwrap() else {
        panic!("degenerate");
    };
    assert!(matches!(slot.ext.kind(), ExtKind::Trivial));
    assert!(slot.form.is_zero());
    assert_eq!(slot.lambda.coords()[0], EElem::one());
    assert!(slot.lambda.coords()[1].is_zero() && slot.lambda.coords()[2].is_zero());
    assert_eq!(slot.zc, EElem::from_base(b()));
    let z_coords: Vec<RatFunc> = slot.z.coords().iter().map(|c| c.c0().clone()).collect();
    let y_coords: Vec<RatFunc> = alg.y().coords().to_vec();
    assert_eq!(z_coords, y_coords);
}

#[test]
fn r_equals_x_is_degenerate() {
    let alg = ab();
    let w = NormWitness::new(alg.x(), a()).unwrap();
    let Construction::Degenerate(deg) = construct_inseparable_subfield(&w).unwrap() else {
        panic!("expected degenerate");
    };
    match deg.reason {
        DegenerateReason::Central {
            scalar,
            norm_confirmed,
        } => {
            assert!(norm_confirmed);
            assert!(scalar.in_base());
            // lambda is proportional to 1 - x^2, and (1 - x^2) x = -a
            let l = deg.lambda.coords();
            assert!(l[1].is_zero());
            assert_eq!(l[0].clone() + l[2].clone(), EElem::zero());
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        build_certificate(&a(), &b(), &a(), &alg.x()).unwrap(),
        BuildOutcome::Degenerate(_)
    ));
}

#[test]
fn witness_preconditions() {
    let alg = ab();
    assert!(matches!(
        NormWitness::new(alg.one(), RatFunc::one()),
        Err(Error::Precondition(_))
    ));
    assert!(NormWitness::new(alg.y(), a()).is_err());
}

#[test]
fn y_certificate_verifies_and_round_trips() {
    let alg = ab();
    let cert = certificate(b(), &alg.y());
    assert!(cert.e_datum.is_none());
    let c = cert.complement.as_ref().unwrap();
    assert_eq!(c.u, cert.z.algebra().x());
    assert_eq!(c.delta, EElem::from_base(a()));
    let report = verify_certificate(&cert);
    assert!(report.is_verified(), "{}", report.render());

    let vars = Vars::default();
    let text = cert.to_text(&vars);
    let (back, vars2) = LinkageCertificate::from_text(&text).unwrap();
    assert_eq!(vars2, vars);
    assert_eq!(back, cert);
    assert_eq!(back.to_text(&vars), text);
}

#[test]
fn scaled_witness() {
    let alg = ab();
    let lam = &alg.x() + &alg.one();
    let r = &lam * &alg.y();
    let n = crate::symbolalg::char_forms(&lam).unwrap().norm;
    let gamma = n * b();
    let cert = certificate(gamma, &r);
    let report = verify_certificate(&cert);
    assert!(report.is_verified(), "{}", report.render());
}

#[test]
fn tampering_is_refuted() {
    let alg = ab();
    let cert = certificate(b(), &alg.y());
    let vars = Vars::default();
    let text = cert.to_text(&vars).replace("z3 = b", "z3 = a*b");
    let (bad, _) = LinkageCertificate::from_text(&text).unwrap();
    let report = verify_certificate(&bad);
    assert!(!report.is_verified());
    assert_eq!(
        report.transcript.last().unwrap(),
        "FAIL  z^3 = N(lambda)*gamma"
    );

    let text = cert
        .to_text(&vars)
        .replace("E = trivial", "E = quad(d=a^2)");
    let (bad, _) = LinkageCertificate::from_text(&text).unwrap();
    let report = verify_certificate(&bad);
    assert_eq!(report.transcript.len(), 1);
    assert!(report.transcript[0].starts_with("FAIL  E descriptor"));
}

#[test]
fn complement_examples() {
    let alg = ab();
    let c = find_separable_complement(&alg.y()).unwrap();
    assert_eq!(c.u, alg.x());
    assert_eq!(c.delta, a());
    let y2 = &alg.y() * &alg.y();
    let c = find_separable_complement(&y2).unwrap();
    assert_eq!(c.u, alg.x().scale_by(&RatFunc::from_int(2)));
    assert_eq!(c.delta, a().scale(crate::Gf3::TWO));
    assert!(matches!(
        find_separable_complement(&alg.scalar(a())),
        Err(Error::Precondition(_))
    ));
}
