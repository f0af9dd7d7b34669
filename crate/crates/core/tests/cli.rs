use std::path::Path;
use std::process::{Command, Output};

use sixops::config::{ContextSpec, SpecKind};
use sixops::report::validate_report_json;

fn sixops(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sixops")).args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn report(out: &Output) -> serde_json::Value {
    let doc = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    validate_report_json(&doc).expect("report matches the schema");
    doc
}

#[test]
fn toml_and_json_specs_agree() {
    let toml =
        ContextSpec::parse("kind = \"wirthmueller\"\ngroup = \"S3\"\nsubgroup = \"C3\"\nfield = \"F3\"\n").unwrap();
    let json = ContextSpec::parse(r#"{"kind":"wirthmueller","group":"S3","subgroup":"C3","field":"F3"}"#).unwrap();
    assert_eq!(toml, json);
    assert_eq!(toml.kind, SpecKind::Wirthmueller);
    assert_eq!(ContextSpec::parse(r#"{"kind":"twist","group":"S3"}"#).unwrap().field, "Q");
    assert!(ContextSpec::parse(r#"{"kind":"twist","grup":"S3"}"#).is_err());
}

#[test]
fn verify_passes_and_emits_a_valid_report() {
    let dir = tempfile::tempdir().unwrap();
    let spec =
        write(dir.path(), "w.toml", "kind = \"wirthmueller\"\ngroup = \"C4\"\nsubgroup = \"C2\"\nfield = \"F2\"\n");
    let out = sixops(&["verify", "wirthmueller", "--spec", &spec, "--samples", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = report(&out);
    assert_eq!(doc["battery"], "wirthmueller");
    assert_eq!(doc["summary"]["failed"], 0);
}

#[test]
fn identical_seeds_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "t.json", r#"{"kind":"twist","group":"S3","object":"standard"}"#);
    let args = ["verify", "conjugation", "--spec", &spec, "--samples", "3", "--seed", "11"];
    let (a, b) = (sixops(&args), sixops(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = sixops(&["verify", "conjugation", "--spec", &spec, "--samples", "3", "--seed", "12"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn configuration_errors_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "bad.json", r#"{"kind":"twist","group":"S3"}"#);
    let out = sixops(&["verify", "twist", "--spec", &spec]);
    assert_eq!(out.status.code(), Some(2));
    let doc = report(&out);
    assert_eq!(doc["entries"][0]["name"], "error");
    assert_eq!(doc["entries"][0]["at"][0], "ConfigError");

    let spec = write(dir.path(), "w.json", r#"{"kind":"twist","group":"S3","object":"char:sign"}"#);
    let out = sixops(&["verify", "wirthmueller", "--spec", &spec]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(sixops(&["verify", "nonsense", "--spec", &spec]).status.code(), Some(2));
}

#[test]
fn object_files_resolve_next_to_the_spec() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "sign.json", r#"{"dim": 1, "action": {"1": [[-1]]}, "label": "flip"}"#);
    let spec = write(dir.path(), "t.toml", "kind = \"twist\"\ngroup = \"C2\"\nobject_file = \"sign.json\"\n");
    let out = sixops(&["verify", "vg-omega", "--spec", &spec, "--samples", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = report(&out);
    assert!(doc["context"].as_str().unwrap().contains("flip"));
}

#[test]
fn markdown_output_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "h.json", r#"{"kind":"identity","algebra":"truncated:3","field":"F3"}"#);
    let md = dir.path().join("r.md");
    let out = sixops(&["verify", "hopf-axioms", "--spec", &spec, "--format", "md", "--out", md.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(md).unwrap();
    assert!(text.contains("hopf-axioms"));
}

#[test]
fn list_names_builtins() {
    let out = String::from_utf8(sixops(&["list", "groups"]).stdout).unwrap();
    assert!(out.lines().any(|l| l.starts_with("Q8\torder 8")));
    let out = String::from_utf8(sixops(&["list", "batteries"]).stdout).unwrap();
    assert_eq!(out.lines().count(), 9);
}
