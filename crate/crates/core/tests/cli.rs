//! End-to-end tests of the `dwigner` binary: exit codes, output formats,
//! and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dwigner"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("dwigner-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn toy_state_json() -> String {
    let t = 1.0 / 3.0;
    format!(
        r#"{{"n":3,"re":[[{t},{t},{t}],[{t},{t},{t}],[{t},{t},{t}]],"im":[[0,0,0],[0,0,0],[0,0,0]]}}"#
    )
}

fn parse_csv_grid(text: &str) -> Vec<(i64, i64, f64)> {
    text.lines()
        .skip(1)
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let mut parts = l.split(',');
            let mu = parts.next().unwrap().parse().unwrap();
            let nu = parts.next().unwrap().parse().unwrap();
            let w = parts.next().unwrap().parse().unwrap();
            (mu, nu, w)
        })
        .collect()
}

#[test]
fn wigner_csv_for_the_saturated_toy_state() {
    let path = write_temp("toy.json", &toy_state_json());
    let out = run(&["wigner", "--n", "3", "--rho", path.to_str().unwrap(), "--out", "csv"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("mu,nu,w\n"));
    let rows = parse_csv_grid(&text);
    assert_eq!(rows.len(), 9);
    // kernel-route grid of the saturated equal-rate state: each row (1,0,0)
    for (_, nu, w) in rows {
        let want = if nu == 0 { 1.0 } else { 0.0 };
        assert!((w - want).abs() < 1e-12, "nu={nu} w={w}");
    }
}

#[test]
fn wigner_mixed_qubit_is_flat() {
    let path = write_temp(
        "mixed2.json",
        r#"{"n":2,"re":[[0.5,0],[0,0.5]],"im":[[0,0],[0,0]]}"#,
    );
    let out = run(&["wigner", "--n", "2", "--rho", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for (_, _, w) in parse_csv_grid(&text) {
        assert!((w - 0.5).abs() < 1e-12);
    }
}

#[test]
fn wigner_rejects_even_n_delta_with_exit_4() {
    let path = write_temp(
        "mixed4.json",
        r#"{"n":4,"re":[[0.25,0,0,0],[0,0.25,0,0],[0,0,0.25,0],[0,0,0,0.25]],"im":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}"#,
    );
    let out = run(&[
        "wigner", "--n", "4", "--rho", path.to_str().unwrap(), "--basis", "delta",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn wigner_rejects_invalid_state_with_exit_2() {
    // trace 2: not a state
    let path = write_temp("bad.json", r#"{"n":2,"re":[[1,0],[0,1]],"im":[[0,0],[0,0]]}"#);
    let out = run(&["wigner", "--n", "2", "--rho", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wigner_rejects_malformed_file_with_exit_3() {
    let path = write_temp("garbage.json", "{not json");
    let out = run(&["wigner", "--n", "2", "--rho", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    // dimension mismatch between flag and file is malformed input too
    let path = write_temp("dim.json", r#"{"n":2,"re":[[1,0],[0,0]],"im":[[0,0],[0,0]]}"#);
    let out = run(&["wigner", "--n", "3", "--rho", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn generators_dump_contains_diagonal_entries() {
    let out = run(&["generators", "--n", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let arr = parsed.as_array().unwrap();
    assert_eq!(arr.len(), 8);
    // eighth matrix diag(0.577..., 0.577..., -1.154...)
    let l8 = &arr[7];
    let re = l8["re"].as_array().unwrap();
    let d0 = re[0][0].as_f64().unwrap();
    let d2 = re[2][2].as_f64().unwrap();
    assert!((d0 - 0.5773502691896258).abs() < 1e-15);
    assert!((d2 + 1.1547005383792515).abs() < 1e-15);
}

#[test]
fn constants_f_contains_first_triple_and_d_empty_for_qubit() {
    let out = run(&["constants", "--n", "3", "--tensor", "f"]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let found = parsed.as_array().unwrap().iter().any(|r| {
        r["i"] == 1 && r["j"] == 2 && r["k"] == 3 && (r["value"].as_f64().unwrap() - 1.0).abs() < 1e-15
    });
    assert!(found);

    let out = run(&["constants", "--n", "2", "--tensor", "d"]);
    assert!(out.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(parsed.as_array().unwrap().is_empty());
}

#[test]
fn toy_saturated_extrema_and_metadata() {
    let t = "0.3333333333333333";
    let out = run(&["toy", "--p1", t, "--p2", t, "--p3", t]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1,0,1.8888888888888888"), "{text}");
    assert!(text.contains("1,1,-0.444444444444444"), "{text}");
    assert!(text.contains("# purity,"));
    assert!(text.contains("# min_eigenvalue,"));
}

#[test]
fn toy_zero_rates_flat_and_inadmissible_exit_2() {
    let out = run(&["toy", "--p1", "0", "--p2", "0", "--p3", "0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0,0,0.3333333333333333"));

    let out = run(&["toy", "--p1", "0.5", "--p2", "0.5", "--p3", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_passes_for_odd_and_even_dimensions() {
    for n in ["2", "3", "4", "5"] {
        let out = run(&["check", "--n", n, "--seed", "42"]);
        assert!(
            out.status.success(),
            "n={n}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
    let out = run(&["check", "--n", "5", "--seed", "7"]);
    assert!(out.status.success());
}

#[test]
fn check_rejects_dimension_one_with_exit_3() {
    let out = run(&["check", "--n", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn identical_flags_produce_byte_identical_output() {
    let path = write_temp("toy-det.json", &toy_state_json());
    let a = run(&["wigner", "--n", "3", "--rho", path.to_str().unwrap(), "--out", "json"]);
    let b = run(&["wigner", "--n", "3", "--rho", path.to_str().unwrap(), "--out", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["check", "--n", "3", "--seed", "9"]);
    let b = run(&["check", "--n", "3", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_and_json_encode_identical_doubles() {
    let path = write_temp("toy-enc.json", &toy_state_json());
    let csv = run(&["wigner", "--n", "3", "--rho", path.to_str().unwrap(), "--out", "csv"]);
    let json = run(&["wigner", "--n", "3", "--rho", path.to_str().unwrap(), "--out", "json"]);
    let csv_text = String::from_utf8(csv.stdout).unwrap();
    let json_text = String::from_utf8(json.stdout).unwrap();
    let csv_vals: Vec<f64> = csv_text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    let parsed: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    let json_vals: Vec<f64> = parsed["values"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|row| row.as_array().unwrap().iter().map(|v| v.as_f64().unwrap()))
        .collect();
    assert_eq!(csv_vals.len(), json_vals.len());
    // decode to values equal within one unit in the last place
    for (a, b) in csv_vals.iter().zip(&json_vals) {
        let ulps = (a.to_bits() as i128 - b.to_bits() as i128).unsigned_abs();
        assert!(ulps <= 1, "{a} vs {b}");
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("dwigner-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("gens.json");
    let _ = std::fs::remove_file(&out_path);
    let out = run(&["generators", "--n", "2", "--output", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 3);
}
