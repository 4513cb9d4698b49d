//! Shared fixtures for the criterion benchmarks.

use hintgen::composer::HintBundle;
use hintgen::dataset::read_records_from_path;

/// Loads the workspace fixture corpus relative to this crate.
pub fn fixture_bundles() -> Vec<HintBundle> {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures/bundles.jsonl");
    read_records_from_path(&path).expect("fixture corpus loads")
}
