use wflag::catalog::{
    bundled_catalog, catalog_to_string, load_catalog, parse_catalog, save_catalog, verify_catalog,
    CatalogEntry, Status,
};
use wflag::Error;

#[test]
fn bundled_catalog_has_six_families_and_one_note() {
    let c = bundled_catalog();
    assert_eq!(c.families().count(), 6);
    assert_eq!(c.notes().count(), 1);
    let ids: Vec<&str> = c.entries.iter().map(|e| e.id()).collect();
    let mut unique = ids.clone();
    unique.sort_unstable();
    unique.dedup();
    assert_eq!(unique.len(), ids.len());
}

#[test]
fn every_recomputable_field_matches() {
    let c = bundled_catalog();
    let reports = verify_catalog(&c);
    assert_eq!(reports.len(), c.entries.len());
    for r in &reports {
        for f in &r.fields {
            assert_ne!(
                f.status,
                Status::Mismatch,
                "{} {}: printed {} computed {}",
                r.id,
                f.field,
                f.printed,
                f.computed
            );
        }
    }
    let notes: usize = reports.iter().map(|r| r.count(Status::Note)).sum();
    assert_eq!(notes, 1);
    let matched: usize = reports.iter().map(|r| r.count(Status::Match)).sum();
    assert!(matched >= 30, "only {matched} fields matched");
}

#[test]
fn note_reports_positive_top_coefficient() {
    let c = bundled_catalog();
    let note = c.notes().next().unwrap();
    let report = wflag::catalog::verify_note(note);
    assert_eq!(report.fields.len(), 1);
    assert_eq!(report.fields[0].status, Status::Note);
    assert!(
        report.fields[0].computed.contains("+1t^11"),
        "{}",
        report.fields[0].computed
    );
}

#[test]
fn round_trip_through_disk() {
    let c = bundled_catalog();
    let dir = std::env::temp_dir().join(format!("wflag-catalog-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.json");
    save_catalog(&c, &path).unwrap();
    let back = load_catalog(&path).unwrap();
    assert_eq!(back, c);
    assert_eq!(catalog_to_string(&back), catalog_to_string(&c));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_rational_names_the_field() {
    let text = catalog_to_string(&bundled_catalog()).replacen("\"9/8\"", "\"9//8\"", 1);
    match parse_catalog(&text) {
        Err(Error::Catalog(msg)) => {
            assert!(msg.contains("entries[0].family.invariants.d3"), "{msg}");
            assert!(msg.contains("line"), "{msg}");
        }
        other => panic!("expected catalog error, got {other:?}"),
    }
}

#[test]
fn unknown_fields_and_versions_are_rejected() {
    let text = catalog_to_string(&bundled_catalog());
    let extra = text.replacen("\"title\"", "\"colour\": 1,\n  \"title\"", 1);
    assert!(matches!(parse_catalog(&extra), Err(Error::Catalog(_))));
    let v2 = text.replacen("\"version\": 1", "\"version\": 2", 1);
    match parse_catalog(&v2) {
        Err(Error::Catalog(msg)) => assert!(msg.contains("version 2")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn bad_lie_type_is_reported() {
    let text = catalog_to_string(&bundled_catalog()).replacen("\"G2\"", "\"E8\"", 1);
    match parse_catalog(&text) {
        Err(Error::Catalog(msg)) => assert!(msg.contains("lie_type"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn records_carry_display_only_invariants() {
    let c = bundled_catalog();
    let CatalogEntry::Family(first) = &c.entries[0] else {
        panic!()
    };
    let report = wflag::catalog::verify_record(first);
    assert!(report.count(Status::NotRecomputable) >= 4);
    assert!(report
        .fields
        .iter()
        .any(|f| f.field == "D3" && f.printed == "9/8"));
}

#[test]
fn bundled_file_is_in_canonical_form() {
    let text = include_str!("../data/known_families.json");
    assert_eq!(catalog_to_string(&parse_catalog(text).unwrap()), text);
}
