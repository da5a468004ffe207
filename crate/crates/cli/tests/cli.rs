use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn limag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_limag")).args(args).env_remove("LIMAG_MAX_BITS").output().unwrap()
}

fn limag_env(args: &[&str], bits: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_limag")).args(args).env("LIMAG_MAX_BITS", bits).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("{e}: stdout {:?} stderr {:?}", String::from_utf8_lossy(&o.stdout), String::from_utf8_lossy(&o.stderr))
    })
}

fn payload(o: &Output) -> Value {
    let mut v = json(o);
    v.as_object_mut().unwrap().remove("manifest");
    v
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn assert_valid(schema_name: &str, doc: &Value) {
    let s = schema(schema_name);
    if let Err(errors) = s.validate(doc) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{schema_name} schema rejects {doc}: {msgs:?}");
    }
    assert_valid_manifest(&doc["manifest"]);
}

fn assert_valid_manifest(m: &Value) {
    let s = schema("manifest");
    assert!(s.is_valid(m), "manifest {m}");
}

fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn construct_examples() {
    let o = limag(&["construct", "--n", "3", "--ell", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_valid("sequence", &v);
    assert_eq!(v["group"]["factors"], serde_json::json!([7]));
    assert_eq!(v["elements"], serde_json::json!([[1], [2], [4]]));
    assert_eq!((v["t"].as_u64(), v["ell"].as_u64()), (Some(2), Some(1)));
    assert_eq!(v["l_properties"], serde_json::json!({"p1": true, "p2": true, "p3": true}));

    let v = json(&limag(&["construct", "--n", "2", "--ell", "2"]));
    assert_eq!(v["group"]["factors"], serde_json::json!([5]));
    assert_eq!(v["elements"], serde_json::json!([[1], [4]]));

    let v = json(&limag(&["construct", "--n", "2", "--ell", "1", "--t", "2"]));
    assert_valid("sequence", &v);
    assert_eq!(v["group"]["factors"], serde_json::json!([2, 2]));
    assert_eq!(v["construction"], "full-cube");
}

#[test]
fn construct_overflow_names_the_bound() {
    let o = limag(&["construct", "--n", "200", "--ell", "9"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).contains("127-bit"), "{}", stderr(&o));
}

#[test]
fn construct_rejects_other_t() {
    assert_eq!(code(&limag(&["construct", "--n", "4", "--ell", "1", "--t", "2"])), 2);
    assert_eq!(code(&limag(&["construct", "--n", "1", "--ell", "1"])), 2);
}

#[test]
fn wide_values_are_strings() {
    let v = json(&limag(&["construct", "--n", "100", "--ell", "1"]));
    assert_valid("sequence", &v);
    assert_eq!(v["group"]["factors"][0], Value::String(((1u128 << 100) - 1).to_string()));
    assert_eq!(v["elements"][1][0], 2);
    assert_eq!(v["elements"][99][0], Value::String((1u128 << 99).to_string()));
}

#[test]
fn verify_exit_code_matrix() {
    let cases: &[(&str, i32, Option<&str>)] = &[
        ("perfect_seq.json", 0, Some("perfect")),
        ("bh_seq.json", 0, Some("bh")),
        ("noncyclic_seq.json", 0, Some("perfect")),
        ("not_bh_seq.json", 1, Some("not-bh")),
        ("perfect_lattice.json", 0, Some("perfect")),
        ("packing_lattice.json", 0, Some("packing")),
        ("not_packing_lattice.json", 1, Some("not-packing")),
        ("truncated.json", 2, None),
        ("wrong_type.json", 2, None),
        ("bad_element.json", 2, None),
        ("not_chain.json", 2, None),
        ("singular_lattice.json", 2, None),
        ("ragged_lattice.json", 2, None),
        ("ambiguous.json", 2, None),
        ("no_such_file.json", 2, None),
    ];
    for &(name, expected, verdict) in cases {
        let o = limag(&["verify", &f(name)]);
        assert_eq!(code(&o), expected, "{name}: {}", stderr(&o));
        match verdict {
            Some(v) => {
                let doc = json(&o);
                assert_valid("verdict", &doc);
                assert_eq!(doc["verdict"], v, "{name}");
            }
            None => {
                assert!(o.stdout.is_empty(), "{name}");
                assert!(!stderr(&o).is_empty(), "{name}");
            }
        }
    }
}

#[test]
fn verify_reports_witness_pair() {
    let v = json(&limag(&["verify", &f("not_bh_seq.json")]));
    assert_eq!(v["witness"], serde_json::json!([[1, 0], [0, 1]]));
    let v = json(&limag(&["verify", &f("not_packing_lattice.json")]));
    assert_eq!(v["witness"], serde_json::json!([[0, 1], [0, 0]]));
}

#[test]
fn malformed_input_reports_location() {
    let err = stderr(&limag(&["verify", &f("truncated.json")]));
    assert!(err.contains("truncated.json:1:"), "{err}");
    let err = stderr(&limag(&["verify", &f("wrong_type.json")]));
    assert!(err.contains("wrong_type.json:1:"), "{err}");
    let err = stderr(&limag(&["verify", &f("bad_element.json")]));
    assert!(err.contains("elements[1]"), "{err}");
}

#[test]
fn verify_overrides() {
    // {1,2,4} in Z_7 is not B_2[2].
    let o = limag(&["verify", &f("perfect_seq.json"), "--ell", "2"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["verdict"], "not-bh");
    let o = limag(&["verify", &f("perfect_seq.json"), "--t", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["verdict"], "bh");
    assert_eq!(code(&limag(&["verify", &f("perfect_seq.json"), "--t", "4"])), 2);
}

#[test]
fn decode_examples() {
    let seq = f("perfect_seq.json");
    let o = limag(&["decode", "--code", &seq, "--sigma", "4", "2,1,1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_valid("decode", &v);
    assert_eq!(v["status"], "corrected");
    assert_eq!(v["codeword"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["error"], serde_json::json!([1, 0, 0]));

    let o = limag(&["decode", "--code", &seq, "--sigma", "4", "--offset", "1,0,0", "0,0,0"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_valid("decode", &v);
    assert_eq!(v["status"], "uncorrectable");

    assert_eq!(code(&limag(&["decode", "--code", &seq, "--sigma", "4", "4,0,0"])), 2);
    assert_eq!(code(&limag(&["decode", "--code", &seq, "--sigma", "4", "1,x,0"])), 2);
    assert_eq!(code(&limag(&["decode", "--code", &f("not_bh_seq.json"), "--sigma", "4", "1,0"])), 2);
}

#[test]
fn decode_accepts_lattice_files() {
    let o = limag(&["decode", "--code", &f("perfect_lattice.json"), "--sigma", "6", "4,5"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["codeword"], serde_json::json!([3, 3]));
    assert_eq!(v["error"], serde_json::json!([1, 2]));
}

#[test]
fn simulate_perfect_code_never_fails() {
    let o = limag(&["simulate", "--code", &f("perfect_seq.json"), "--sigma", "4", "--trials", "1000", "--seed", "42"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = json(&o);
    assert_valid("simulate", &v);
    assert_eq!(v["decode_successes"], 1000);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["manifest"]["seed"], 42);
}

#[test]
fn simulate_requires_seed() {
    let o = limag(&["simulate", "--code", &f("perfect_seq.json"), "--sigma", "4"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--seed"));
}

#[test]
fn payloads_are_deterministic() {
    let runs: &[&[&str]] = &[
        &["construct", "--n", "4", "--ell", "2"],
        &["verify", &f("not_bh_seq.json")],
        &["simulate", "--code", &f("noncyclic_seq.json"), "--sigma", "3", "--trials", "200", "--seed", "7"],
        &["convert", "--to", "lattice", &f("perfect_seq.json")],
    ];
    for args in runs {
        let (a, b) = (limag(args), limag(args));
        assert_eq!(payload(&a), payload(&b), "{args:?}");
        assert_eq!(json(&a)["manifest"]["payload_sha256"], json(&b)["manifest"]["payload_sha256"], "{args:?}");
    }
    let a = payload(&limag(&[
        "simulate",
        "--code",
        &f("noncyclic_seq.json"),
        "--sigma",
        "3",
        "--trials",
        "200",
        "--seed",
        "7",
    ]));
    let b = payload(&limag(&[
        "simulate",
        "--code",
        &f("noncyclic_seq.json"),
        "--sigma",
        "3",
        "--trials",
        "200",
        "--seed",
        "8",
    ]));
    assert_eq!(a["decode_successes"], 200);
    assert_eq!(b["decode_successes"], 200);
    assert_ne!(a["seed"], b["seed"]);
}

#[test]
fn payload_hash_matches_payload() {
    let o = limag(&["construct", "--n", "3", "--ell", "2"]);
    let v = json(&o);
    let bytes = serde_json::to_vec(&payload(&o)).unwrap();
    assert_eq!(v["manifest"]["payload_sha256"], limag_cli::manifest::sha256_hex(&bytes));
    assert_eq!(v["manifest"]["command"], "construct");
    assert_eq!(v["manifest"]["parameters"], serde_json::json!({"n": 3, "ell": 2}));
}

#[test]
fn survey_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("survey.csv");
    let o = limag(&["survey", "--max-n", "4", "--max-ell", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    let golden = std::fs::read_to_string(fixture("../golden/survey_header.csv")).unwrap();
    assert_eq!(text.lines().next(), golden.lines().next());
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().any(|r| r.starts_with("4,2,1,necessary-condition-fails,")), "{text}");
    assert!(rows.iter().any(|r| r.starts_with("3,2,1,perfect-constructed,")), "{text}");

    let side = dir.path().join("survey.csv.manifest.json");
    let m: Value = serde_json::from_str(&std::fs::read_to_string(side).unwrap()).unwrap();
    assert_valid_manifest(&m);
    assert_eq!(m["payload_sha256"], limag_cli::manifest::sha256_hex(text.as_bytes()));
}

#[test]
fn survey_to_stdout_puts_manifest_on_stderr() {
    let o = limag(&["survey", "--max-n", "3", "--max-ell", "2"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout.clone()).unwrap();
    assert!(text.starts_with("n,t,ell,status,witness\n"));
    let m: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_valid_manifest(&m);
    let again = limag(&["survey", "--max-n", "3", "--max-ell", "2"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn survey_caps_are_reported() {
    let o = limag(&["survey", "--max-n", "4", "--max-ell", "2", "--group-cap", "8"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    // |S(4,1,2)| = 9 exceeds the cap.
    assert!(text.lines().any(|r| r.starts_with("4,1,2,unknown-within-bounds,") && r.contains("cap")), "{text}");
}

#[test]
fn convert_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["perfect_seq.json", "noncyclic_seq.json", "bh_seq.json"] {
        let lat = dir.path().join(format!("{name}.lattice.json"));
        let o = limag(&["convert", "--to", "lattice", &f(name), "--out", lat.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        let lv: Value = serde_json::from_str(&std::fs::read_to_string(&lat).unwrap()).unwrap();
        assert_valid("lattice", &lv);

        let back = limag(&["convert", "--to", "sequence", lat.to_str().unwrap()]);
        assert_eq!(code(&back), 0);
        let sv = json(&back);
        assert_valid("sequence", &sv);

        let before = limag(&["verify", &f(name)]);
        let after = limag(&["verify", lat.to_str().unwrap()]);
        assert_eq!(json(&before)["order"], json(&after)["order"], "{name}");
        let order: u128 =
            sv["group"]["factors"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap() as u128).product();
        assert_eq!(Value::from(order as u64), json(&before)["order"], "{name}");
    }
    let o = limag(&["convert", "--to", "sequence", &f("perfect_seq.json")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn lowered_bound_is_honored() {
    let ok = limag_env(&["construct", "--n", "12", "--ell", "1"], "20");
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));
    let o = limag_env(&["construct", "--n", "21", "--ell", "1"], "20");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("20-bit"), "{}", stderr(&o));
    assert_eq!(code(&limag(&["construct", "--n", "21", "--ell", "1"])), 0);
    // The bound can be lowered, never raised.
    let o = limag_env(&["construct", "--n", "200", "--ell", "9"], "4000");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("127-bit"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&limag(&[])), 2);
    assert_eq!(code(&limag(&["frobnicate"])), 2);
    assert_eq!(code(&limag(&["construct", "--n", "three", "--ell", "1"])), 2);
    assert_eq!(code(&limag(&["convert", "--to", "matrix", &f("perfect_seq.json")])), 2);
    assert_eq!(code(&limag(&["--help"])), 0);
}

#[test]
fn schemas_reject_malformed_documents() {
    let bad = [
        (
            "verdict",
            serde_json::json!({"kind": "sequence", "verdict": "not-bh", "n": 2, "t": 1, "ell": 1, "order": 3, "sphere_size": 3}),
        ),
        (
            "verdict",
            serde_json::json!({"kind": "sequence", "verdict": "perfect", "n": 2, "t": 1, "ell": 1, "order": 3, "sphere_size": 3, "witness": [[0], [1]]}),
        ),
        ("sequence", serde_json::json!({"group": {"factors": [-7]}, "elements": [], "t": 1, "ell": 1})),
        ("sequence", serde_json::json!({"group": {"factors": ["7x"]}, "elements": [], "t": 1, "ell": 1})),
        ("lattice", serde_json::json!({"generator": [[1.5]], "t": 1, "ell": 1})),
        ("decode", serde_json::json!({"status": "corrected", "word": [1], "syndrome": [1]})),
        ("simulate", serde_json::json!({"trials": 1})),
        (
            "manifest",
            serde_json::json!({"command": "construct", "parameters": {}, "versions": "x", "timestamp": "yesterday", "payload_sha256": "00"}),
        ),
    ];
    for (name, doc) in bad {
        assert!(!schema(name).is_valid(&doc), "{name} schema accepts {doc}");
    }
}
