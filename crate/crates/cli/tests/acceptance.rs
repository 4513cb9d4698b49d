//! CLI acceptance: the golden template hint (byte comparison) and the
//! end-to-end latency bound. One PASS line per criterion.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hintgen"))
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn c1_golden_template_hint_bytes() {
    let start = Instant::now();
    let out = bin()
        .args(["hint", "--mode", "tb", "--pattern", "0"])
        .arg("--bundles")
        .arg(fixtures().join("golden/ronaldo.jsonl"))
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let expected = std::fs::read(fixtures().join("golden/tb_expected.txt")).unwrap();
    assert_eq!(out.stdout, expected, "template hint bytes diverge from the golden file");
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "took {elapsed:?}, expected under a second"
    );

    // same bundle through the full pipeline, also pinned byte-for-byte
    let out = bin()
        .args(["hint", "--mode", "full", "--pattern", "0", "--conj", "or"])
        .arg("--bundles")
        .arg(fixtures().join("golden/ronaldo.jsonl"))
        .output()
        .unwrap();
    let expected = std::fs::read(fixtures().join("golden/full_expected.txt")).unwrap();
    assert_eq!(out.stdout, expected);
    println!("ACCEPTANCE C1 PASS: golden template hint reproduced byte-for-byte in under 1s");
}

#[test]
fn c10_full_pipeline_latency_under_budget() {
    let out = bin()
        .args(["bench", "--min-bundles", "1000"])
        .arg("--bundles")
        .arg(fixtures().join("bundles.jsonl"))
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let p99: f64 = stdout
        .split_whitespace()
        .find_map(|field| field.strip_prefix("p99_ms=").map(|v| v.parse().unwrap()))
        .expect("bench output carries p99_ms");
    assert!(
        p99 < 150.0,
        "p99 per-hint latency {p99} ms exceeds the 150 ms budget\n{stdout}"
    );
    println!("ACCEPTANCE C10 PASS: bench p99 {p99:.4} ms per hint, under the 150 ms budget");
}
