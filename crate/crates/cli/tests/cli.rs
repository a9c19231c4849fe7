//! End-to-end checks of the `vlab` binary: exit codes, text output,
//! golden JSON files, determinism, and cross-prime agreement.

use assert_cmd::Command;
use predicates::str::contains;

fn vlab() -> Command {
    Command::cargo_bin("vlab").expect("binary builds")
}

/// Replaces the timing field so outputs compare byte-for-byte.
fn normalize(raw: &[u8]) -> String {
    let text = String::from_utf8(raw.to_vec()).expect("utf8 output");
    let mut result = String::with_capacity(text.len());
    for line in text.lines() {
        if line.trim_start().starts_with("\"timing_ms\":") {
            let indent = &line[..line.len() - line.trim_start().len()];
            result.push_str(&format!("{indent}\"timing_ms\": 0"));
            if line.trim_end().ends_with(',') {
                result.push(',');
            }
        } else {
            result.push_str(line);
        }
        result.push('\n');
    }
    result
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("golden file")
}

#[test]
fn classify_outside_form_is_koszul() {
    vlab()
        .args(["classify", "y0*y1*y2"])
        .assert()
        .success()
        .stdout(contains("stratum: outside-secants"))
        .stdout(contains("prediction: Koszul"));
}

#[test]
fn classify_fermat_matches_golden_json() {
    let out = vlab()
        .args(["classify", "y0^3+y1^3+y2^3", "--format", "json"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    assert_eq!(normalize(&out), golden("classify_fermat.json"));
}

#[test]
fn classify_monomial_cube_is_on_the_veronese() {
    vlab()
        .args(["classify", "y2^3"])
        .assert()
        .success()
        .stdout(contains("stratum: on-veronese"))
        .stdout(contains("prediction: G-quadratic"));
}

#[test]
fn classify_exit_codes() {
    vlab().args(["classify", "y0^2*y1 +"]).assert().code(2);
    vlab().args(["classify", "y0^2"]).assert().code(2);
    vlab().args(["classify", "0"]).assert().code(3);
    vlab()
        .args(["classify", "y0^3", "--field", "gf:4"])
        .assert()
        .code(2);
}

#[test]
fn classify_is_deterministic_modulo_timing() {
    let run = || {
        let out = vlab()
            .args(["classify", "--preset", "f4", "--format", "json"])
            .assert()
            .success()
            .get_output()
            .stdout
            .clone();
        normalize(&out)
    };
    assert_eq!(run(), run());
}

#[test]
fn classify_cross_prime_agrees() {
    vlab()
        .args([
            "classify",
            "--preset",
            "f2",
            "--check-prime",
            "31991",
            "--format",
            "json",
        ])
        .assert()
        .success()
        .stdout(contains("\"agrees\": true"));
}

#[test]
fn project_lists_nine_generators() {
    vlab()
        .args(["project", "--preset", "f5"])
        .assert()
        .success()
        .stdout(contains("count: 9"));
}

#[test]
fn present_counts_the_fermat_relations() {
    vlab()
        .args(["present", "--preset", "f5"])
        .assert()
        .success()
        .stdout(contains("2: 17"))
        .stdout(contains("3: 1"))
        .stdout(contains("quadratic: false"));
}

#[test]
fn betti_over_the_polynomial_ring_shows_the_relation_counts() {
    vlab()
        .args(["betti", "--ring", "A_F5", "--over", "poly"])
        .assert()
        .success()
        .stdout(contains("j: 2"))
        .stdout(contains("value: 17"))
        .stdout(contains("value: 1"));
}

#[test]
fn koszul_probe_f5_matches_golden_json() {
    let out = vlab()
        .args(["koszul-probe", "--preset", "f5", "--s", "3", "--format", "json"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    assert_eq!(normalize(&out), golden("probe_f5.json"));
}

#[test]
fn lemma_check_squares_matches_golden_json() {
    let out = vlab()
        .args(["lemma-check", "--preset", "squares", "--format", "json"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    assert_eq!(normalize(&out), golden("lemma_squares.json"));
}

#[test]
fn lemma_check_accepts_explicit_quadrics() {
    vlab()
        .args(["lemma-check", "--quadrics", "x1^2, x2^2, x3^2"])
        .assert()
        .success()
        .stdout(contains("all_hold: true"));
}

#[test]
fn rees_reports_linear_type() {
    vlab()
        .args(["rees", "--preset", "squares"])
        .assert()
        .success()
        .stdout(contains("linear_type: true"))
        .stdout(contains("rows_are_syzygies: true"));
}

#[test]
fn complex_f_verifies_its_window() {
    vlab()
        .args(["complex-f", "--preset", "squares", "--deg-cap", "5"])
        .assert()
        .success()
        .stdout(contains("composition_zero: true"))
        .stdout(contains("homology_mismatches: []"))
        .stdout(contains("vanishes: true"));
}

#[test]
fn hilbert_squares_equals_h_matrix_through_eight() {
    vlab()
        .args(["hilbert", "--preset", "squares", "--versus", "h-matrix"])
        .assert()
        .success()
        .stdout(contains("match: true"));
}

#[test]
fn hilbert_pinched_agrees_with_the_rees_diagonal() {
    vlab()
        .args(["hilbert", "--preset", "pinched", "--versus", "squares", "--deg-cap", "5"])
        .assert()
        .success()
        .stdout(contains("match: true"))
        .stdout(contains("dims: [1, 9, 28, 55, 91, 136]"));
}

#[test]
fn aronhold_round_trips_through_classify() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("invariant.json");
    vlab()
        .args(["aronhold-build", "--out"])
        .arg(&path)
        .args(["--samples", "780"])
        .assert()
        .success()
        .stdout(contains("terms: 25"));
    vlab()
        .args(["classify", "--preset", "f1", "--invariant"])
        .arg(&path)
        .assert()
        .success()
        .stdout(contains("invariant_consistent: true"));
}

#[test]
fn field_flag_accepts_the_rationals() {
    vlab()
        .args(["classify", "y0*y1*y2", "--field", "q"])
        .assert()
        .success()
        .stdout(contains("outside-secants"));
}

#[test]
fn env_variable_overrides_the_field() {
    vlab()
        .env("VLAB_FIELD", "q")
        .args(["classify", "y0*y1*y2", "--format", "json"])
        .assert()
        .success()
        .stdout(contains("\"field\": \"q\""));
}

#[test]
fn caps_below_the_minima_are_rejected() {
    vlab()
        .args(["koszul-probe", "--preset", "f5", "--deg-cap", "3"])
        .assert()
        .code(2);
    vlab()
        .args(["koszul-probe", "--preset", "f5", "--s", "1"])
        .assert()
        .code(2);
}
