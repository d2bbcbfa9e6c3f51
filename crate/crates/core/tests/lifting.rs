use proptest::prelude::*;

use tritrop_core::classcomplex::{analyze_classes, TritangentLocus};
use tritrop_core::curve33::build_curve;
use tritrop_core::lifting::{
    member_info, report_for_locus, table_entry, table_matches, table_rows, LiftingPartition, TableEntry, PARTITIONS,
};
use tritrop_core::tangency::{compute_mu, is_tritangent, Catalog, Flavor};

mod common;
use common::{matrix, sample_loci};

const FLAVORS: [Flavor; 4] = [Flavor::Horizontal, Flavor::Vertical, Flavor::Diagonal, Flavor::None];

#[test]
fn table_values() {
    use TableEntry::*;
    let cases: [(&str, Flavor, TableEntry); 14] = [
        ("(1a)", Flavor::None, Value(0)),
        ("(2a)", Flavor::Horizontal, Value(1)),
        ("(2b)", Flavor::None, Value(0)),
        ("(3a)", Flavor::Vertical, Value(2)),
        ("(3f)", Flavor::None, Value(4)),
        ("(4a)", Flavor::Horizontal, Value(1)),
        ("(4a)", Flavor::Diagonal, Mu),
        ("(4b)", Flavor::None, Value(0)),
        ("(6a)", Flavor::Vertical, Value(1)),
        ("(6a)", Flavor::Diagonal, Mu),
        ("(4a')", Flavor::Horizontal, Mu),
        ("(6b')", Flavor::None, Value(1)),
        ("(3c')", Flavor::None, Value(2)),
        ("(8)", Flavor::None, Value(8)),
    ];
    for (l, f, want) in cases {
        assert_eq!(table_entry(l, f), Some(want), "{l} {f:?}");
    }
    assert_eq!(table_entry("(9z)", Flavor::None), None);
}

#[test]
fn every_catalog_label_has_an_entry() {
    for l in Catalog::builtin().labels() {
        for f in FLAVORS {
            assert!(table_entry(l, f).is_some(), "{l}");
        }
    }
}

#[test]
fn partitions_are_the_weighted_splittings_of_eight() {
    for p in PARTITIONS {
        assert_eq!(LiftingPartition(p).total(), 8);
        assert!(LiftingPartition(p).is_admissible());
    }
    assert!(!LiftingPartition([2, 1, 1, 0]).is_admissible());
    assert!(!LiftingPartition([0, 0, 1, 0]).is_admissible());
    assert_eq!(LiftingPartition([0, 2, 1, 0]).to_string(), "(0,2,1,0)");
    let mut rows: Vec<[u32; 4]> = (-1..=3).flat_map(|d| {
        let (a, b) = table_rows(d);
        a.iter().chain(b).copied().collect::<Vec<_>>()
    }).collect();
    rows.sort_unstable();
    let mut all = PARTITIONS.to_vec();
    all.sort_unstable();
    assert_eq!(rows, all);
}

#[test]
fn table_rows_with_the_four_b_condition() {
    let p = |a| LiftingPartition(a);
    assert!(table_matches(0, &p([0, 0, 0, 1]), false));
    assert!(table_matches(0, &p([0, 0, 0, 1]), true));
    assert!(table_matches(1, &p([0, 0, 2, 0]), false));
    assert!(!table_matches(1, &p([0, 0, 2, 0]), true));
    assert!(table_matches(1, &p([0, 2, 1, 0]), true));
    assert!(!table_matches(1, &p([0, 2, 1, 0]), false));
    assert!(table_matches(2, &p([4, 2, 0, 0]), true));
    assert!(!table_matches(2, &p([4, 2, 0, 0]), false));
    assert!(table_matches(2, &p([0, 4, 0, 0]), false));
    assert!(!table_matches(2, &p([0, 4, 0, 0]), true));
    assert!(table_matches(3, &p([8, 0, 0, 0]), false));
    assert!(!table_matches(3, &p([0, 4, 0, 0]), false));
    assert!(!table_matches(0, &p([0, 0, 2, 0]), false));
    assert!(!table_matches(-1, &p([0, 0, 0, 1]), false));
}

/// Value of a label in the lifting table, written out independently; `None`
/// stands for `μ`.
fn oracle_value(label: &str, flavor: Flavor) -> Option<u32> {
    let zero = ["(1a)", "(1b)", "(2b)", "(3ab)", "(3cb)", "(3bb)", "(3bb1)", "(3bb2)", "(4b)", "(7)", "(1')", "(3a')"];
    let one = ["(2a)", "(4a)", "(5b)", "(6a)", "(6b)", "(2a')", "(4b')", "(6b')"];
    let two = ["(3a)", "(3c)", "(3aa)", "(3ac)", "(3cc)", "(3d)", "(3h)", "(5a)", "(3c')"];
    if ["(4a')", "(6a')"].contains(&label) || (["(4a)", "(6a)"].contains(&label) && flavor == Flavor::Diagonal) {
        return None;
    }
    if zero.contains(&label) {
        Some(0)
    } else if one.contains(&label) {
        Some(1)
    } else if two.contains(&label) {
        Some(2)
    } else if label == "(3f)" {
        Some(4)
    } else {
        assert_eq!(label, "(8)");
        Some(8)
    }
}

#[test]
fn partitions_recount_independently() {
    let catalog = Catalog::builtin();
    for (g, locus) in sample_loci() {
        let report = report_for_locus(&catalog, g, locus).unwrap();
        assert!(report.flags.all_pass(), "{:?}", report.flags);
        assert_eq!(report.total_lifts(), 120);
        for (class, rep) in analyze_classes(locus).unwrap().iter().zip(&report.classes) {
            let mut counts = [0u32; 4];
            for &i in &class.nonspecial {
                let t = is_tritangent(&locus.cells[i].curve(), g).unwrap().unwrap();
                let mut m = 1;
                for (k, (_, ty)) in t.components.iter().enumerate() {
                    m *= oracle_value(ty.label, ty.flavor).unwrap_or_else(|| compute_mu(&t, g, k).unwrap() as u32);
                }
                if m > 0 {
                    assert_eq!(locus.cells[i].dim(), 0);
                    counts[m.trailing_zeros() as usize] += 1;
                }
            }
            assert_eq!(rep.lifting.as_ref().unwrap().partition.0, counts, "class {}", class.id);
        }
    }
}

const LEG_SHARING: [i64; 16] = [3, -4, -21, -57, -19, -22, -44, -87, -65, -80, -101, -142, -139, -161, -194, -239];

#[test]
fn special_members_do_not_lift() {
    let catalog = Catalog::builtin();
    let g = build_curve(&matrix(&LEG_SHARING)).unwrap();
    let locus = TritangentLocus::build(&g);
    let special: Vec<usize> = (0..locus.cells.len()).filter(|&i| locus.special[i]).collect();
    assert!(!special.is_empty());
    for &i in &special {
        assert_eq!(member_info(&catalog, &g, &locus, i).unwrap().mult, 0);
    }
    assert!(report_for_locus(&catalog, &g, &locus).unwrap().flags.all_pass());
}

proptest! {
    #[test]
    fn add_tracks_the_total(ms in proptest::collection::vec(prop_oneof![Just(0u32), Just(1), Just(2), Just(4), Just(8)], 0..20)) {
        let mut p = LiftingPartition([0; 4]);
        for &m in &ms {
            p.add(m);
        }
        prop_assert_eq!(p.total(), ms.iter().sum::<u32>());
        prop_assert_eq!(p.0.iter().sum::<u32>() as usize, ms.iter().filter(|&&m| m > 0).count());
    }

    #[test]
    fn admissible_means_listed(a in 0u32..9, b in 0u32..5, c in 0u32..3, d in 0u32..2) {
        let p = LiftingPartition([a, b, c, d]);
        prop_assert_eq!(p.is_admissible(), PARTITIONS.contains(&[a, b, c, d]));
        if p.is_admissible() {
            prop_assert_eq!(p.total(), 8);
        }
    }
}
