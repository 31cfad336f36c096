use std::fs;
use std::path::PathBuf;

use miquel_cli::{run, Outcome, EXIT_GEOMETRY, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
use miquel_core::scene::{emit_scene, parse_scene};
use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace { dir: TempDir::new().unwrap() }
    }

    fn file(&self, name: &str, body: &str) -> String {
        let path = self.dir.path().join(name);
        fs::write(&path, body).unwrap();
        path.to_str().unwrap().to_owned()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

fn miquel(args: &[&str]) -> Outcome {
    run(std::iter::once("miquel").chain(args.iter().copied()))
}

const RIGHT: &str = r#"{"A":[0,0],"B":[4,0],"C":[0,3]}"#;
const SCALENE: &str = r#"{"A":[0,0],"B":[5,0],"C":[1.2,3.4]}"#;

#[test]
fn classify_circumcenter_of_right_triangle() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", RIGHT);
    let out = miquel(&["classify", "--in", &tri, "--point", "2,1.5"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout.lines().next().unwrap(), "circumcenter; Miquel triangle similar to host, permutation XYZ");
}

#[test]
fn classify_point_on_circumcircle_reports_simson_line() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", RIGHT);
    // (4,3) is the antipode of A on the circumcircle
    let out = miquel(&["classify", "--in", &tri, "--point", "4,3"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.lines().next().unwrap().contains("Simson line"), "{}", out.stdout);
}

#[test]
fn point_can_come_from_the_scene() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", r#"{"A":[0,0],"B":[4,0],"C":[0,3],"P":[2,1.5]}"#);
    let out = miquel(&["classify", "--in", &tri]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("circumcenter;"));
}

#[test]
fn miquel_point_of_equal_triad() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", SCALENE);
    let out = miquel(&["miquel", "--in", &tri, "--triad", "0.3,0.3,0.3", "--json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(doc["relative_residual"].as_f64().unwrap() < 1e-8);
    assert!(doc["miquel_point"]["x"].is_f64());
}

#[test]
fn centers_lists_the_catalog() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", SCALENE);
    let out = miquel(&["centers", "--in", &tri]);
    assert_eq!(out.code, EXIT_OK);
    for label in ["O ", "H ", "Ω₁", "S_A", "M_C", "S_B*"] {
        assert!(out.stdout.contains(label), "missing {label}");
    }
    let doc: serde_json::Value = serde_json::from_str(&miquel(&["centers", "--in", &tri, "--json"]).stdout).unwrap();
    assert_eq!(doc["catalog"].as_array().unwrap().len(), 11);
}

#[test]
fn family_and_chain() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", SCALENE);
    let out = miquel(&["family", "--in", &tri, "--point", "2,1.2", "--thetas", "0,0.3,-0.4", "--json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let members: Vec<serde_json::Value> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(members.len(), 3);
    let angles = |m: &serde_json::Value| m["angles_deg"].as_array().unwrap().iter().map(|a| a.as_f64().unwrap()).collect::<Vec<_>>();
    for m in &members[1..] {
        for (a, b) in angles(m).iter().zip(angles(&members[0])) {
            assert!((a - b).abs() < 1e-7);
        }
    }

    let out = miquel(&["chain", "--in", &tri, "--point", "2,1.2", "--steps", "6"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("mod-3 similarity holds"), "{}", out.stdout);
}

#[test]
fn geometric_errors_exit_one_with_error_name() {
    let ws = Workspace::new();
    let flat = ws.file("flat.json", r#"{"A":[0,0],"B":[1,1],"C":[2,2]}"#);
    let out = miquel(&["centers", "--in", &flat]);
    assert_eq!(out.code, EXIT_GEOMETRY);
    assert!(out.stderr.contains("DegenerateTriangle"));

    let tri = ws.file("tri.json", RIGHT);
    let out = miquel(&["chain", "--in", &tri, "--point", "2,0"]);
    assert_eq!(out.code, EXIT_GEOMETRY);
    assert!(out.stderr.contains("DegenerateStep"));
}

#[test]
fn usage_errors_exit_two_naming_the_flag() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", RIGHT);
    let cases: &[(&[&str], &str)] = &[
        (&["classify", "--in", "/no/such/file.json", "--point", "1,1"], "--in"),
        (&["classify", "--in", &tri, "--point", "1"], "--point"),
        (&["classify", "--in", &tri], "--point"),
        (&["miquel", "--in", &tri], "--triad"),
        (&["verify", "--suite", "nonexistent"], "--suite"),
        (&["verify", "--trials", "0"], "--trials"),
        (&["figure", "--in", &tri, "--elements", "teapot"], "--elements"),
        (&["figure", "--in", &tri, "--elements", "triangle", "--vertex", "D"], "--vertex"),
        (&["frobnicate"], "frobnicate"),
    ];
    for (args, flag) in cases {
        let out = miquel(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(out.stderr.contains(flag), "{args:?}: {}", out.stderr);
    }
    let bad = ws.file("bad.json", r#"{"A":[0,0],"B":[4,0]"#);
    let out = miquel(&["centers", "--in", &bad]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("--in"));
}

#[test]
fn verify_single_suite() {
    let out = miquel(&["verify", "--suite", "eleven-points", "--seed", "7", "--trials", "50"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("suite eleven-points  seed 7  trials 50  PASS"));
    assert!(!out.stdout.contains("FAIL"));
    assert!(out.stderr.contains("total:"));
}

#[test]
fn verify_failure_code_is_distinct() {
    assert_eq!(EXIT_VERIFY_FAILED, 3);
    assert!(![EXIT_OK, EXIT_GEOMETRY, EXIT_USAGE].contains(&EXIT_VERIFY_FAILED));
}

#[test]
fn verify_is_deterministic_and_seeded() {
    let a = miquel(&["verify", "--suite", "all", "--seed", "7"]);
    let b = miquel(&["verify", "--suite", "all", "--seed", "7"]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
    let c = miquel(&["verify", "--suite", "all", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);

    let json = miquel(&["verify", "--suite", "concurrency", "--seed", "7", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(doc["seed"], 7);
    assert_eq!(doc["reports"][0]["trials"], 1000);
}

#[test]
fn verify_lists_suites() {
    let out = miquel(&["verify", "--list"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.lines().count() >= 18);
    assert!(out.stdout.contains("simson"));
}

#[test]
fn figure_to_file_is_byte_stable() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", SCALENE);
    let out_a = ws.path("a.svg");
    let out_b = ws.path("b.svg");
    let args = |out: &PathBuf| {
        vec![
            "figure".to_string(),
            "--in".into(),
            tri.clone(),
            "--point".into(),
            "2,1.2".into(),
            "--elements".into(),
            "triangle,circumcircle,miquel-circles,centers,pedal".into(),
            "--out".into(),
            out.to_str().unwrap().into(),
        ]
    };
    for out in [&out_a, &out_b] {
        let res = run(std::iter::once("miquel".to_string()).chain(args(out)));
        assert_eq!(res.code, EXIT_OK, "{}", res.stderr);
        assert!(res.stdout.is_empty());
    }
    let a = fs::read(&out_a).unwrap();
    assert_eq!(a, fs::read(&out_b).unwrap());
    let svg = String::from_utf8(a).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains(r#"<g id="miquel-circles">"#));
}

#[test]
fn simson_figure_needs_point_on_circumcircle() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", RIGHT);
    let ok = miquel(&["figure", "--in", &tri, "--point", "4,3", "--elements", "triangle,simson"]);
    assert_eq!(ok.code, EXIT_OK, "{}", ok.stderr);
    assert!(ok.stdout.contains("simson"));
    let off = miquel(&["figure", "--in", &tri, "--point", "1,1", "--elements", "simson"]);
    assert_eq!(off.code, EXIT_GEOMETRY);
}

#[test]
fn empty_figure_selection_is_rejected() {
    let ws = Workspace::new();
    let tri = ws.file("tri.json", RIGHT);
    let out = miquel(&["figure", "--in", &tri, "--elements", ","]);
    assert_eq!(out.code, EXIT_GEOMETRY);
    assert!(out.stderr.contains("EmptySelection"));
}

#[test]
fn scene_json_round_trip_is_a_fixed_point() {
    let doc = r#"{"A":[0.1,-0.25],"B":[4.75,0.5],"C":[1.0000000000000002,3.3],"P":[1.5,1.25],"triad":[0.1,-0.5,1.9],"theta":-0.7}"#;
    let once = emit_scene(&parse_scene(doc).unwrap());
    let twice = emit_scene(&parse_scene(&once).unwrap());
    assert_eq!(once, twice);
    assert_eq!(parse_scene(&once).unwrap(), parse_scene(doc).unwrap());
}

#[test]
fn seed_comes_from_environment_when_flag_absent() {
    // only this test touches MIQUEL_SEED
    std::env::set_var("MIQUEL_SEED", "11");
    let out = miquel(&["verify", "--suite", "simson", "--json"]);
    std::env::remove_var("MIQUEL_SEED");
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["seed"], 11);
}
