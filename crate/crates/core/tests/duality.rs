mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use superdual_core::rational::{q, qf};
use superdual_core::*;

use common::{random_label, rng};

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn every_path_is_listed_once() {
    for (p, m, q_) in [(1, 1, 1), (2, 4, 2), (0, 3, 2), (3, 2, 0)] {
        let gs = lattice_gradings(p, m, q_);
        assert_eq!(gs.len(), binomial(p + m + q_, m));
        let texts: std::collections::BTreeSet<String> = gs.iter().map(render_grading).collect();
        assert_eq!(texts.len(), gs.len());
        assert!(gs.iter().all(|g| SuperShape::of(g).unwrap().is_lattice_path()));
    }
}

#[test]
fn reflection_through_a_zero_sum() {
    let g = parse_grading("su(1|1)").unwrap();
    let w = FundamentalWeight::new(g.clone(), vec![q(2), q(-2)]).unwrap();
    let r = duality_step(&w, 0).unwrap();
    assert_eq!(r.m, vec![q(-2), q(2)]);
    let w = FundamentalWeight::new(g, vec![q(2), q(1)]).unwrap();
    assert_eq!(duality_step(&w, 0).unwrap().m, vec![q(2), q(1)]);
    let b = FundamentalWeight::new(parse_grading("su(1,1)").unwrap(), vec![q(0), q(0)]).unwrap();
    assert_eq!(duality_step(&b, 0), Err(Error::NotFermionic(0)));
}

proptest! {
    #[test]
    fn odd_reflection_is_an_involution(bits in prop::collection::vec(0u8..2, 2..7), vals in prop::collection::vec((-5i64..6, 1i64..3), 7), node in 0usize..6) {
        let blocks: Vec<(usize, u8, u8)> = bits.iter().map(|&p| (1, p, p)).collect();
        let g = Grading::from_blocks(&blocks).unwrap();
        let n = g.len();
        prop_assume!(node + 1 < n && g.p(node) != g.p(node + 1));
        let w = FundamentalWeight::new(g, vals[..n].iter().map(|&(a, b)| qf(a, b)).collect()).unwrap();
        let once = duality_step(&w, node).unwrap();
        prop_assert_eq!(duality_step(&once, node).unwrap(), w);
    }

    #[test]
    fn lattice_is_path_and_order_independent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let l = loop {
            let l = random_label(&mut r, 6);
            if l.m > 0 {
                break l;
            }
        };
        let paths = lattice_gradings(l.p, l.m, l.q);
        let reference = build_weight_lattice(&weight_from_label(&l, &l.grading().unwrap(), true).unwrap()).unwrap();
        let g = paths.choose(&mut r).unwrap();
        let w = weight_from_label(&l, g, true).unwrap();
        let mut order: Vec<usize> = (0..l.m * (l.p + l.q)).collect();
        order.shuffle(&mut r);
        prop_assert_eq!(&build_weight_lattice_with_order(&w, Some(&order)).unwrap(), &reference);
        prop_assert_eq!(&weight_in_grading(&reference, g).unwrap(), &w);
        let json = serde_json::to_string(&reference).unwrap();
        prop_assert_eq!(serde_json::from_str::<WeightLattice>(&json).unwrap(), reference);
    }
}
