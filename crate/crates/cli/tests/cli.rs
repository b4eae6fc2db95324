use std::path::PathBuf;
use std::process::Command;

use proptest::prelude::*;

use starr_cli::corpus;
use starr_cli::file::ArrangementFile;
use starr_core::arr::Arrangement;
use starr_core::stalg::power_sum;

fn starr(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_starr")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("starr-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn st_on_ex4() {
    let (code, out, _) = starr(&["st", "--example", "ex4"]);
    assert_eq!(code, 0);
    assert!(out.contains("hilbert_vector: [1,3,5,4,1]"), "{out}");
    assert!(out.contains("gorenstein: false"));
}

#[test]
fn json_report_is_versioned() {
    let (code, out, _) = starr(&["free", "--example", "notsplit", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["results"]["free"], false);
    assert_eq!(v["results"]["minimal_generator_degrees"], serde_json::json!([1, 2, 5, 5]));
}

#[test]
fn coxeter_commands() {
    let (code, out, _) = starr(&["coxeter", "inversion", "4123"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("bruhat_interval_size: 8"));
    let (code, out, _) = starr(&["coxeter", "ideal", "A", "3", "--roots", "0,1,2", "--json"]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"]["dual_partition_exponents"], serde_json::json!([0, 1, 1, 1]));
    assert_eq!(v["results"]["free"], true);
    let (code, _, _) = starr(&["coxeter", "ideal", "A", "3", "--roots", "3"]);
    assert_eq!(code, 2, "a root without the roots below it is not an ideal");
}

#[test]
fn file_input_and_explicit_eta() {
    let path = scratch("three-lines.json");
    let a = corpus::lookup("three-lines").unwrap().arrangement;
    std::fs::write(&path, ArrangementFile::from_arrangement(&a, None).render()).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = starr(&["analyze", p, "--eta", "x^2+y^2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("hilbert_vector: [1,2,2,1]"), "{out}");
    // x*y has a degenerate restriction to the line x = 0
    let (code, _, err) = starr(&["st", p, "--eta", "x*y"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(starr(&["st"]).0, 2);
    assert_eq!(starr(&["st", "--example", "no-such-thing"]).0, 2);
    assert_eq!(starr(&["frobnicate"]).0, 2);
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{\"field\": {\"type\": \"rational\"}, \"variables\": [\"x\"], \"hyperplanes\": [[0]]}").unwrap();
    let (code, _, err) = starr(&["lattice", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("hyperplanes[0]"), "{err}");
    assert_eq!(starr(&["--help"]).0, 0);
}

#[test]
fn verify_all_passes() {
    let (code, out, _) = starr(&["verify", "--suite", "all"]);
    assert_eq!(code, 0, "{}", out.lines().filter(|l| l.contains("FAIL")).collect::<Vec<_>>().join("\n"));
}

#[test]
fn search_is_reproducible() {
    let args = ["search", "--generator", "random", "--count", "4", "--seed", "11", "--out"];
    let dir = scratch("counterexamples");
    let d = dir.to_str().unwrap();
    let (c1, o1, _) = starr(&[&args[..], &[d]].concat());
    let (c2, o2, _) = starr(&[&args[..], &[d]].concat());
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
    assert_eq!(o1.lines().filter(|l| l.starts_with('{')).count(), 4);
}

#[test]
fn export_round_trips_through_the_binary() {
    let (code, out, _) = starr(&["export", "--example", "notsplit"]);
    assert_eq!(code, 0);
    let (a, _) = ArrangementFile::parse(&out).unwrap().to_arrangement().unwrap();
    assert_eq!(a.to_string(), corpus::notsplit().to_string());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arrangement_files_round_trip(
        forms in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 1..7),
        eta_coeffs in prop::collection::vec(1i64..=4, 3),
    ) {
        let forms: Vec<Vec<i64>> = forms.into_iter().filter(|f| f.iter().any(|&c| c != 0)).collect();
        prop_assume!(!forms.is_empty());
        let refs: Vec<&[i64]> = forms.iter().map(Vec::as_slice).collect();
        let a = Arrangement::from_int_forms(3, &refs).unwrap();
        let eta = power_sum(&eta_coeffs, 2);
        let text = ArrangementFile::from_arrangement(&a, Some(&eta)).render();
        let (b, eta_back) = ArrangementFile::parse(&text).unwrap().to_arrangement().unwrap();
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert_eq!(a.names(), b.names());
        prop_assert_eq!(Some(eta), eta_back);
    }
}
