use std::path::PathBuf;

use superdual_core::tables::{doubleton, table, two_colour, Doubleton};

fn golden(n: usize) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/table{n}.txt"));
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

#[test]
fn tables_match_goldens() {
    for n in 1..=7 {
        assert_eq!(table(n, 2, 1).unwrap().to_text(), golden(n), "table {n}");
    }
}

#[test]
fn b_squared_times_b_gives_two_multiplets() {
    let labels = two_colour(Doubleton::B(2), Doubleton::B(1)).unwrap();
    let names: Vec<String> = labels.iter().map(|l| l.compact()).collect();
    assert_eq!(names, ["[3,000,0;2,0]", "[1,000,0;3,0]"]);
}

#[test]
fn telescoping_sum_has_min_plus_one_terms() {
    for (m, n) in [(1, 1), (2, 1), (3, 2)] {
        let labels = two_colour(Doubleton::A(m), Doubleton::A(n)).unwrap();
        assert_eq!(labels.len() as u32, m.min(n) + 1);
        assert_eq!(labels[0].compact(), format!("[0,000,{};0,2]", m + n));
    }
}

#[test]
fn parametric_rows_are_affine() {
    for k in 1..5 {
        let (w, d) = doubleton(Doubleton::B(k)).unwrap();
        assert_eq!(w.m[1], superdual_core::rational::q(-(1 + k as i64)));
        assert_eq!(d.label.mu_l.first(), k);
    }
    assert!(table(8, 1, 1).is_err());
}
