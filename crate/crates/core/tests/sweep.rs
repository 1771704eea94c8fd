//! Sweep outcomes against an exhaustive recomputation of the exhausted classes.

use weyl_racks::conjugacy::{enumerate_class, representatives};
use weyl_racks::rack::{conjugate_within_generated, type_d_any_pair, type_d_certificate, SearchOptions};
use weyl_racks::verify::{class_sweep, recheck_exhausted, SweepOptions, SweepOutcome, SweepReport};
use weyl_racks::GroupSpec;

fn exhausted(report: &SweepReport) -> Vec<String> {
    let mut v: Vec<String> = report
        .rows
        .iter()
        .filter(|r| r.outcome == SweepOutcome::Exhausted)
        .map(|r| r.representative.to_string())
        .collect();
    v.sort();
    v
}

fn sweep(spec: GroupSpec) -> SweepReport {
    class_sweep(spec, &SweepOptions::for_degree(spec.degree).unwrap()).unwrap()
}

#[test]
fn degree_five_b() {
    let report = sweep(GroupSpec::b(5));
    eprintln!("{:?}", exhausted(&report));
    assert!(report.complete);
    assert_eq!(report.invalid_certificates, 0);
    // (1³,2) and (1²,3) with all fixed signs equal: 4 classes each
    let ex: Vec<_> = report.rows.iter().filter(|r| r.outcome == SweepOutcome::Exhausted).collect();
    assert_eq!(ex.len(), 8);
    for row in &ex {
        assert!(row.sigma_type == [1, 1, 1, 2] || row.sigma_type == [1, 1, 3], "{}", row.representative);
        let g = &row.representative;
        let fixed: Vec<u8> = (1..=5).filter(|&i| g.perm().image(i) == i).map(|i| g.sign().get(i)).collect();
        assert!(fixed.iter().all(|&v| v == fixed[0]), "{g}");
        assert!(recheck_exhausted(GroupSpec::b(5), g).unwrap());
    }
    // every (2,3) class is certified
    assert!(report
        .rows
        .iter()
        .filter(|r| r.sigma_type == [2, 3])
        .all(|r| r.outcome == SweepOutcome::Certificate));
}

#[test]
fn degree_five_d() {
    let report = sweep(GroupSpec::d(5));
    eprintln!("{:?}", exhausted(&report));
    assert!(report.complete);
    assert_eq!(report.invalid_certificates, 0);
    let ex: Vec<_> = report.rows.iter().filter(|r| r.outcome == SweepOutcome::Exhausted).collect();
    assert_eq!(ex.len(), 4);
    for row in &ex {
        assert!(recheck_exhausted(GroupSpec::d(5), &row.representative).unwrap());
    }
}

#[test]
fn representative_scan_matches_all_pairs_at_degree_4() {
    for spec in [GroupSpec::b(4), GroupSpec::d(4)] {
        for (label, rep) in representatives(spec) {
            let class = enumerate_class(spec, &rep).unwrap();
            let fixed = type_d_certificate(&class, SearchOptions::default());
            let any = type_d_any_pair(class.elements(), SearchOptions::default());
            assert_eq!(fixed.certificate().is_some(), any.is_some(), "{spec} {label}");
        }
    }
}

#[test]
fn certificates_are_nonconjugate_both_ways() {
    for spec in [GroupSpec::b(5), GroupSpec::d(5)] {
        for row in sweep(spec).rows {
            if let Some(c) = row.certificate {
                assert!(!conjugate_within_generated(&c.r, &c.s), "{}", row.label);
                assert!(!conjugate_within_generated(&c.s, &c.r), "{}", row.label);
            }
        }
    }
}

#[test]
fn exhausted_classes_have_no_pair_for_any_r() {
    for spec in [GroupSpec::b(5), GroupSpec::d(5)] {
        for row in sweep(spec).rows.iter().filter(|r| r.outcome == SweepOutcome::Exhausted) {
            let class = enumerate_class(spec, &row.representative).unwrap();
            assert!(type_d_any_pair(class.elements(), SearchOptions::default()).is_none(), "{}", row.representative);
        }
    }
}
