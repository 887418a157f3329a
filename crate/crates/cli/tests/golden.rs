//! Golden-file tests of the JSON output. Set `LIOUVILLE_BLESS=1` to rewrite
//! the expected files.

use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &[&str], i32)] = &[
    ("solve_airy", &["solve", "x", "--json"], 0),
    ("solve_qho3", &["solve", "x^2+3", "--json"], 0),
    ("solve_qho2", &["solve", "x^2+2", "--json"], 0),
    ("solve_dihedral", &["solve", "1/x-3/(16*x^2)", "--json"], 0),
    ("solve_torus", &["solve", "4", "--json"], 0),
    ("reduce", &["reduce", "--a", "1/x", "--b", "-1", "--json"], 0),
    ("singularities_mathieu", &["singularities", "1/x", "(2*x^2+x+2)/(2*x^3)", "--json"], 0),
    ("algebrize_mathieu", &["algebrize", "1/3+2*cos(t)", "--json"], 0),
    ("algebrize_mathieu_solve", &["algebrize", "1/3+2*cos(t)", "--solve", "--json"], 0),
    ("family_qho", &["family", "qho", "--params", "1,2,3,5,7", "--json"], 0),
    ("family_mathieu_curved", &["family", "mathieu_curved", "--params", "0,1,2,1,-2,1/2", "--json"], 0),
    ("enk_3", &["enk", "--n", "3", "--json"], 0),
    ("verdict_polynomial", &["verdict", "polynomial", "--poly", "x", "--json"], 0),
    ("verdict_qho", &["verdict", "qho", "--params", "0,0,2,1,0", "--json"], 0),
    ("verdict_mathieu_flat", &["verdict", "mathieu_flat", "--params", "0,1,2,1,3", "--json"], 0),
    ("error_parse", &["solve", "2x", "--json"], 2),
    ("error_math", &["solve", "1/(x-x)", "--json"], 1),
    ("error_commensurate", &["algebrize", "exp(t)+cos(t)", "--json"], 1),
    ("error_genericity", &["family", "airy", "--params", "1,1,0", "--json"], 1),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

#[test]
fn json_outputs_match_golden_files() {
    let bless = std::env::var_os("LIOUVILLE_BLESS").is_some();
    for (name, args, code) in CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_liouville")).args(*args).output().unwrap();
        assert_eq!(out.status.code(), Some(*code), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let stdout = String::from_utf8(out.stdout).unwrap();
        serde_json::from_str::<serde_json::Value>(&stdout).unwrap_or_else(|e| panic!("{name}: not JSON: {e}"));
        let path = golden_dir().join(format!("{name}.json"));
        if bless {
            std::fs::write(&path, &stdout).unwrap();
        } else {
            let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
            assert_eq!(stdout, expected, "{name}");
        }
    }
}

fn json_of(args: &[&str]) -> serde_json::Value {
    let out = Command::new(env!("CARGO_BIN_EXE_liouville")).args(args).output().unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn report_fields_are_always_present() {
    let v = json_of(&["solve", "x^2+3", "--json"]);
    for key in [
        "r",
        "case",
        "liouvillian",
        "group",
        "group_identity_component_abelian",
        "m",
        "omega",
        "p_m",
        "solutions",
        "case1",
        "case2",
        "case3",
        "notes",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let v = json_of(&["verdict", "qho", "--params", "1,2,3,5,7", "--json"]);
    for key in ["family", "hypotheses", "conclusion", "citations", "samples", "notes"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let v = json_of(&["algebrize", "1+cos(t)", "--json"]);
    assert_eq!(v["change"]["substitution"]["kind"], "exponential");
    assert!(v["change"].get("f").is_some() && v["change"].get("alpha").is_some());
}

#[test]
fn documented_examples() {
    let v = json_of(&["solve", "x", "--json"]);
    assert_eq!(v["case"], 4);
    assert_eq!(v["group"], "SL2");
    assert_eq!(v["liouvillian"], false);
    let v = json_of(&["solve", "x^2+3", "--json"]);
    assert_eq!(v["group"], "Borel_CstarSemidirectCplus");
    assert_eq!(v["solutions"][0]["expr"], "x*exp(x^2/2)");
    let out = Command::new(env!("CARGO_BIN_EXE_liouville")).args(["enk", "--n", "2"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("E_{2,2} = α⁽²⁾"));
    assert!(text.contains("E_{2,0} = -φ⁽¹⁾α⁽¹⁾"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["solve"][..], &["frobnicate"], &["family", "qho", "--params", "1,2"], &["solve", "t"]] {
        let out = Command::new(env!("CARGO_BIN_EXE_liouville")).args(args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}
