mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use superdual_core::diagrams::{iso_move_lower_inverse, iso_move_upper_inverse};
use superdual_core::rational::{q, qf};
use superdual_core::*;

use common::{random_unitary_label, rng};

fn ym() -> RepLabel {
    RepLabel::new(2, 2, 4, vec![0, 0], vec![1, 1, 0, 0], vec![0, 0], q(0), q(0)).unwrap()
}

#[test]
fn minimal_realization_of_deformed_labels() {
    let l = RepLabel::new(1, 1, 1, vec![0], vec![0], vec![0], q(0), qf(3, 2)).unwrap();
    let d = realize(&l, superdual_core::Strategy::MinimalP, false).unwrap();
    assert_eq!(d.realization, Realization::new(q(0), qf(-1, 2), 2, 2));
    assert!(d.check_admissible().is_ok());
}

#[test]
fn inadmissible_layouts_are_rejected() {
    // acting with |A_Δ| = 1 deformed colour needs |F_Δ| ≥ 1
    let l = RepLabel::new(0, 1, 1, vec![], vec![0], vec![0], q(0), qf(1, 2)).unwrap();
    let r = Realization::new(q(0), qf(1, 2), 0, 1);
    assert!(matches!(realize(&l, superdual_core::Strategy::Explicit(r), false), Err(Error::Inadmissible(_))));
}

#[test]
fn renderings() {
    let d = realize(&ym(), superdual_core::Strategy::MinimalP, false).unwrap();
    let ascii = render(&d, RenderFormat::Ascii);
    assert_eq!(ascii.lines().count(), 5);
    let svg = render(&d, RenderFormat::Svg);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let hook = diagrams::render_fat_hook(
        &fat_hook(&Partition::new(vec![1, 0]).unwrap(), &Partition::new(vec![3, 1, 0, 0]).unwrap(), &q(2), 4, 2).unwrap(),
        RenderFormat::Svg,
    );
    assert!(hook.contains("<svg"));
}

#[test]
fn fat_hook_shading_counts_shortening_plaquettes() {
    let (tau, mu) = (Partition::new(vec![1, 0]).unwrap(), Partition::new(vec![3, 1, 0, 0]).unwrap());
    assert_eq!(fat_hook(&tau, &mu, &q(2), 4, 2).unwrap().shaded.len(), 3);
    assert_eq!(fat_hook(&tau, &mu, &q(3), 4, 2).unwrap().shaded.len(), 1);
    assert!(fat_hook(&tau, &mu, &q(4), 4, 2).unwrap().shaded.is_empty());
}

proptest! {
    #[test]
    fn diagram_reads_the_weight_of_every_path(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_unitary_label(&mut r, 6);
        prop_assume!(l.m > 0);
        let d = realize(&l, superdual_core::Strategy::MinimalP, false).unwrap();
        let g = lattice_gradings(l.p, l.m, l.q).choose(&mut r).unwrap().clone();
        prop_assert_eq!(read_weight(&d, &g).unwrap(), weight_from_label(&l, &g, false).unwrap());
    }

    #[test]
    fn extend_carve_and_thook_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = random_unitary_label(&mut r, 6);
        let d = realize(&l, superdual_core::Strategy::MinimalP, false).unwrap();
        prop_assume!(d.realization.gamma_l == q(0) && d.realization.gamma_r == q(0));
        prop_assert_eq!(&carve(&extend(&d).unwrap(), l.p, l.q, l.m).unwrap(), &d);
        let split = r.gen_range(0..=l.m);
        prop_assert_eq!(&from_thook(&to_thook(&d, split).unwrap(), d.colours()).unwrap(), &d);
    }

    #[test]
    fn iso_moves_keep_the_label(seed in any::<u64>()) {
        let l = random_unitary_label(&mut rng(seed), 6);
        let d = realize(&l, superdual_core::Strategy::MinimalP, false).unwrap();
        if let Ok(e) = iso_move_lower(&d) {
            prop_assert_eq!(&e.label, &l);
            prop_assert_eq!(&iso_move_lower_inverse(&e).unwrap(), &d);
        }
        if let Ok(e) = iso_move_upper(&d) {
            prop_assert_eq!(&e.label, &l);
            prop_assert_eq!(&iso_move_upper_inverse(&e).unwrap(), &d);
            prop_assert_eq!(e.supmq_weight().unwrap(), d.supmq_weight().unwrap());
        }
    }

    #[test]
    fn diagram_json_round_trip(seed in any::<u64>()) {
        let l = random_unitary_label(&mut rng(seed), 6);
        let d = realize(&l, superdual_core::Strategy::MinimalP, false).unwrap();
        let text = serde_json::to_string(&d).unwrap();
        let back: NonCompactYoungDiagram = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back, d);
    }
}
