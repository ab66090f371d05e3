use proptest::prelude::*;
use proptest::strategy::Strategy;
use superdual_core::rational::{q, qf};
use superdual_core::*;

fn slot_grading() -> impl Strategy<Value = Grading> {
    prop::collection::vec((0u8..2, 0u8..2), 2..8).prop_map(|v| {
        let blocks: Vec<(usize, u8, u8)> = v.into_iter().map(|(p, c)| (1, p, c)).collect();
        Grading::from_blocks(&blocks).unwrap()
    })
}

fn weight_in(g: Grading) -> impl Strategy<Value = FundamentalWeight> {
    let n = g.len();
    prop::collection::vec((-6i64..7, 1i64..4), n).prop_map(move |v| {
        FundamentalWeight::new(g.clone(), v.into_iter().map(|(a, b)| qf(a, b)).collect()).unwrap()
    })
}

#[test]
fn notation_examples() {
    let g = parse_grading("su(2,2|4)").unwrap();
    assert_eq!(g.counts(), (2, 2, 4, 0));
    assert_eq!(render_grading(&g), "su(2,2|4)");
    let g = parse_grading("su(2,|4|2)").unwrap();
    assert_eq!(render_grading(&g), "su(2,|4|2)");
    assert_eq!(g, Grading::supmq(2, 4, 2).unwrap());
    assert!(parse_grading("su(2,,2)").is_err());
    assert!(parse_grading("sl(2|2)").is_err());
}

#[test]
fn unitary_real_forms() {
    assert!(admits_nontrivial_unitary(RealFormName::Su { p: 2, q: 2, r: 4, s: 0 }));
    assert!(!admits_nontrivial_unitary(RealFormName::Su { p: 1, q: 1, r: 1, s: 1 }));
    assert!(!admits_nontrivial_unitary(RealFormName::SuStar { n: 2, m: 1 }));
}

#[test]
fn dynkin_labels_of_the_doubleton() {
    let w = weight_from_label(
        &RepLabel::new(2, 2, 4, vec![0, 0], vec![1, 1, 0, 0], vec![0, 0], q(0), q(0)).unwrap(),
        &Grading::supmq(2, 4, 2).unwrap(),
        false,
    )
    .unwrap();
    let d = dynkin_from_fundamental(&w);
    assert_eq!(d.omega.len(), 7);
    // compact su(4) part reads the antisymmetric square
    assert_eq!(d.omega[2..5], [q(0), q(1), q(0)]);
}

proptest! {
    #[test]
    fn render_parse_round_trip(g in slot_grading()) {
        let text = render_grading(&g);
        let back = parse_grading(&text).unwrap();
        let first = g.slots()[0];
        prop_assert_eq!(&back, &g.shifted(first.p, first.c));
        prop_assert_eq!(render_grading(&back), text);
    }

    #[test]
    fn signature_ignores_order_and_shift(g in slot_grading(), seed in any::<u64>(), dp in 0u8..2, dc in 0u8..2) {
        let n = g.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm).unwrap().shifted(Parity::from_u8(dp), Parity::from_u8(dc));
        prop_assert_eq!(signature(&h), signature(&g));
    }

    #[test]
    fn canonical_form_is_idempotent(g in slot_grading()) {
        let (c, perm) = canonical_form(&g);
        prop_assert_eq!(canonical_form(&c).0, c.clone());
        prop_assert_eq!(perm.len(), g.len());
        prop_assert_eq!(signature(&c), signature(&g));
    }

    #[test]
    fn outer_dual_is_an_involution(w in slot_grading().prop_flat_map(weight_in)) {
        prop_assert_eq!(outer_dual(&outer_dual(&w)), w);
    }

    #[test]
    fn weight_json_round_trip(w in slot_grading().prop_flat_map(weight_in)) {
        let text = serde_json::to_string(&w).unwrap();
        let back: FundamentalWeight = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back, w);
    }
}
