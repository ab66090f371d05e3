mod common;

use proptest::prelude::*;
use superdual_core::rational::{q, qf};
use superdual_core::*;

use common::{random_unitary_label, rng};

fn diag(tau: &[u32], bl: Q, br: Q, r: Realization) -> NonCompactYoungDiagram {
    let l = RepLabel::new(2, 2, 4, vec![0, 0], tau.to_vec(), vec![0, 0], bl, br).unwrap();
    realize(&l, superdual_core::Strategy::Explicit(r), false).unwrap()
}

#[test]
fn doubleton_is_half_bps_and_protected() {
    let d = diag(&[1, 1, 0, 0], q(0), q(0), Realization::plain(0, 1));
    assert_eq!(dolan_osborn(&d).unwrap().to_string(), "B[0,1,0](0,0)^(1/2,1/2)");
    assert!(!can_recombine(&d).unwrap());
    let b = bps_type_22_4(&d).unwrap();
    assert_eq!((b.s, b.s_bar), (qf(1, 2), qf(1, 2)));
}

#[test]
fn quarter_bps_with_large_charge_can_recombine() {
    // [P, P−k, k, 0] with k = 2, P = 4
    let d = diag(&[4, 2, 2, 0], q(0), q(0), Realization::plain(0, 4));
    let dl = dolan_osborn(&d).unwrap();
    assert_eq!(dl.class, DoClass::B);
    assert_eq!(dl.to_string(), "B[2,0,2](0,0)^(1/4,1/4)");
    assert!(can_recombine(&d).unwrap());
}

#[test]
fn long_multiplet_has_no_profile() {
    let d = diag(&[0, 0, 0, 0], qf(5, 2), qf(5, 2), Realization::new(qf(-1, 2), qf(-1, 2), 3, 6));
    assert!(!superdual_core::shortening::profile_of(&d).is_short());
    assert_eq!(dolan_osborn(&d).unwrap().class, DoClass::A);
    assert!(matches!(can_recombine(&d), Err(Error::Misuse(_))));
}

#[test]
fn superconformal_labels_need_su224() {
    let l = RepLabel::new(1, 1, 2, vec![0], vec![0, 0], vec![0], q(0), q(0)).unwrap();
    let d = realize(&l, superdual_core::Strategy::MinimalP, false).unwrap();
    assert!(matches!(dolan_osborn(&d), Err(Error::Dims(_))));
}

proptest! {
    #[test]
    fn monomial_shortening_matches_the_verdict(seed in any::<u64>()) {
        let l = random_unitary_label(&mut rng(seed), 6);
        prop_assume!(l.m > 0 && l.p + l.q > 0);
        let short = shortening_profile(&l).unwrap().is_short();
        prop_assert_eq!(short, classify_supqm(&l).status == Status::UnitaryShort, "{}", l);
    }
}
