//! Golden SHA-256 hashes of every catalog fixture's canonical JSON.
//!
//! Regenerate with `SSCAT_UPDATE_GOLDEN=1 cargo test --test fixture_hashes`.

use std::path::PathBuf;

use sha2::{Digest, Sha256};
use sscat_core::fixtures::{build, catalog, FixtureOptions};
use sscat_core::Limits;

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/fixtures.sha256")
}

fn current() -> String {
    let limits = Limits::default();
    let mut out = String::new();
    for name in catalog() {
        let doc = build(&name, FixtureOptions::default(), &limits).unwrap();
        let digest = Sha256::digest(doc.to_json().as_bytes());
        out.push_str(&format!("{}  {name}\n", hex::encode(digest)));
    }
    out
}

#[test]
fn fixtures_match_golden_hashes() {
    let now = current();
    if std::env::var_os("SSCAT_UPDATE_GOLDEN").is_some() {
        std::fs::write(golden_path(), &now).unwrap();
        return;
    }
    let golden = std::fs::read_to_string(golden_path()).expect("golden file present");
    for (want, got) in golden.lines().zip(now.lines()) {
        assert_eq!(got, want, "fixture changed");
    }
    assert_eq!(golden.lines().count(), now.lines().count(), "catalog size changed");
}

#[test]
fn fixtures_round_trip_through_json() {
    let limits = Limits::default();
    let resolve = |n: &str| sscat_core::fixtures::category(n);
    for name in catalog() {
        let doc = build(&name, FixtureOptions::default(), &limits).unwrap();
        let json = doc.to_json();
        let back = sscat_core::io::parse_document(&json, &resolve).unwrap();
        assert_eq!(back, doc, "{name}");
        assert_eq!(back.to_json(), json, "{name}");
    }
}
