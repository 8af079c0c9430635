use symalg::fixtures::FixtureFile;
use symalg::Error;

#[test]
fn builtin_matrices_match_their_documented_mismatches() {
    let report = FixtureFile::builtin().compare_all().unwrap();
    assert_eq!(report.len(), 8);
    for c in &report {
        assert!(c.matches_documentation, "{}: {:?}", c.name, c.mismatches);
        let stray: &[[usize; 2]] = if c.name == "left-unit-params" { &[[3, 5]] } else { &[] };
        assert_eq!(c.stray_parameters, stray, "{}", c.name);
    }
    let cells: usize = report.iter().map(|c| c.mismatches.len()).sum();
    assert_eq!(cells, 10);
}

#[test]
fn documented_mismatch_cells() {
    let report = FixtureFile::builtin().compare_all().unwrap();
    let cells = |name: &str| -> Vec<[usize; 2]> {
        let c = report.iter().find(|c| c.name == name).unwrap();
        c.mismatches.iter().map(|m| [m.row, m.col]).collect()
    };
    assert_eq!(cells("left-general"), vec![[2, 6]]);
    assert_eq!(cells("right-general"), vec![[2, 6]]);
    assert_eq!(cells("right-generator-y"), vec![[1, 8], [2, 6]]);
    assert_eq!(cells("left-unit-params-twisted"), (3..9).map(|r| [r, 0]).collect::<Vec<_>>());
    assert!(cells("left-unit-params").is_empty());
}

#[test]
fn corrupted_entry_is_detected() {
    let mut f = FixtureFile::builtin();
    let m = f.matrices.iter_mut().find(|m| m.name == "left-unit-params").unwrap();
    m.entries.as_mut().unwrap()[0] = "c1".into();
    let c = f.compare(m_ref(&f, "left-unit-params")).unwrap();
    assert!(!c.matches_documentation);
    assert_eq!(c.mismatches.len(), 1);
    assert_eq!((c.mismatches[0].row, c.mismatches[0].col), (0, 0));
}

#[test]
fn undocumented_fix_is_detected() {
    let mut f = FixtureFile::builtin();
    let m = f.matrices.iter_mut().find(|m| m.name == "right-generator-y").unwrap();
    m.known_mismatches.pop();
    assert!(!f.compare_all().unwrap().iter().all(|c| c.matches_documentation));
}

#[test]
fn malformed_fixture_files() {
    assert!(matches!(FixtureFile::parse("{}"), Err(Error::Fixture(_))));
    let mut f = FixtureFile::builtin();
    f.matrices[0].entries.as_mut().unwrap().pop();
    assert!(matches!(f.compare(&f.matrices[0]), Err(Error::Fixture(_))));
}

fn m_ref<'a>(f: &'a FixtureFile, name: &str) -> &'a symalg::fixtures::PrintedMatrix {
    f.matrices.iter().find(|m| m.name == name).unwrap()
}
