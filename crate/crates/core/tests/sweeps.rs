use std::path::Path;

use locring::oracle::verify::{expand_catalog, verify_expanded};
use locring::oracle::{verify, Budgets, Catalog, THEOREM_IDS};
use locring::Error;

fn catalog() -> Catalog {
    Catalog::load_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")).unwrap()
}

#[test]
fn every_theorem_holds_on_small_pairs() {
    let data = expand_catalog(&catalog()).unwrap();
    let budgets = Budgets {
        max_dim: 4,
        ..Budgets::default()
    };
    for id in THEOREM_IDS {
        let report = verify_expanded(id, &data, budgets).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.count("pass") > 0, "{id} had no applicable case");
    }
}

#[test]
fn unknown_theorem_is_rejected() {
    assert!(matches!(
        verify("satz99", &catalog(), Budgets::default()),
        Err(Error::UnknownTheorem(_))
    ));
}

#[test]
fn tsv_has_one_line_per_case() {
    let report = verify("beisp1", &catalog(), Budgets::default()).unwrap();
    let tsv = report.to_tsv();
    assert_eq!(tsv.lines().count(), report.cases.len());
    assert!(tsv.lines().all(|l| l.split('\t').count() == 5));
}
