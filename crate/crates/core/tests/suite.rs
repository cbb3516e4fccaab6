use hyperderiv::suite::{export, run_suite, ExportKind, Format, Mode, PitConfig, Status};

#[test]
fn genus_one_report_passes() {
    let r = run_suite(1, Mode::Exact, PitConfig::default()).unwrap();
    assert!(r.entries.len() >= 12, "{} entries", r.entries.len());
    assert!(r.passed(), "{}", r.to_text());
    assert!(r.pit.is_none());
    let ids: Vec<&str> = r.entries.iter().map(|e| e.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(r.entry("g1_discriminant").is_some());
}

#[test]
fn genus_three_reports_the_constant() {
    let r = run_suite(3, Mode::Exact, PitConfig::default()).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    let det = r.entry("detT_eq_c_R").unwrap();
    assert_eq!(det.status, Status::Pass);
    assert_eq!(det.detail.as_deref(), Some("c = -64/7"));
    assert!(r.entry("g3_field_det").is_some());
    assert!(r.entry("g3_jacobi").is_some());
}

#[test]
fn pit_results_do_not_depend_on_the_seed() {
    let pattern = |seed| {
        let r = run_suite(2, Mode::Pit, PitConfig::new(2, 1 << 16, seed).unwrap()).unwrap();
        r.entries.iter().map(|e| (e.id.clone(), e.status)).collect::<Vec<_>>()
    };
    let a = pattern(1);
    assert_eq!(a, pattern(2));
    assert!(a.iter().all(|(_, s)| *s == Status::Pass));
}

#[test]
fn bad_arguments_are_rejected() {
    assert!(run_suite(4, Mode::Exact, PitConfig::default()).is_err());
    assert!(PitConfig::new(0, 10, 0).is_err());
    assert!(export(ExportKind::Fields, 0, Format::Json).is_err());
    assert!("nonsense".parse::<ExportKind>().is_err());
    assert!("exact".parse::<Mode>().is_ok());
}

#[test]
fn exports_are_deterministic() {
    for kind in [ExportKind::Fields, ExportKind::Map, ExportKind::Brackets] {
        for fmt in [Format::Json, Format::Latex] {
            assert_eq!(export(kind, 2, fmt).unwrap(), export(kind, 2, fmt).unwrap());
        }
    }
}
