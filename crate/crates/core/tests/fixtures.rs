use std::path::PathBuf;

use bhk_mirror::battery::battery;
use bhk_mirror::verify::{Datum, InputSpec};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn battery_fixtures_match_the_battery() {
    let dir = fixtures().join("battery");
    let mut names: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    let mut expected = Vec::new();
    for (i, entry) in battery(3).unwrap().iter().enumerate() {
        for g in &entry.groups {
            let name = format!("b{i:02}_order{}.json", g.order());
            let text =
                std::fs::read_to_string(dir.join(&name)).unwrap_or_else(|e| panic!("{name}: {e}"));
            let Datum::Bh(d) = InputSpec::parse(&text).unwrap().resolve().unwrap() else {
                panic!("{name}: bh mode")
            };
            assert_eq!(
                d.potential.exponents(),
                entry.potential.exponents(),
                "{name}"
            );
            assert!(d.group.same_elements(g), "{name}");
            expected.push(name);
        }
    }
    expected.sort();
    assert_eq!(names, expected);
}

#[test]
fn every_fixture_parses() {
    for e in std::fs::read_dir(fixtures()).unwrap() {
        let path = e.unwrap().path();
        if path.extension().is_some_and(|x| x == "json") {
            let text = std::fs::read_to_string(&path).unwrap();
            InputSpec::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        }
    }
}
