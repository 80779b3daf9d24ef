use std::io::Write;

use tildebraid::btilde::parse_nf;
use tildebraid::extension::{parse_g0, parse_gn};
use tildebraid::monodromy::parse_factorization;
use tildebraid::vankampen::parse_presentation;
use tildebraid::words::{parse_braid, parse_free};
use tildebraid_cli::run;

fn cli(args: &[&str]) -> (i32, String) {
    let mut v = vec!["tildebraid"];
    v.extend_from_slice(args);
    run(v)
}

fn file(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

const DELTA3: &str = r#"{"strands": 3, "factors": [
  {"conjugator": "", "base": 1, "power": 1}, {"conjugator": "", "base": 2, "power": 1},
  {"conjugator": "", "base": 1, "power": 1}, {"conjugator": "", "base": 2, "power": 1},
  {"conjugator": "", "base": 1, "power": 1}, {"conjugator": "", "base": 2, "power": 1}]}"#;

#[test]
fn braid_commands() {
    assert_eq!(cli(&["braid", "eq", "--strands", "3", "x1 x2 x1", "x2 x1 x2"]), (0, "true\n".into()));
    assert_eq!(cli(&["braid", "eq", "--strands", "3", "x1 x2", "x2 x1"]), (0, "false\n".into()));
    assert_eq!(cli(&["braid", "eq", "--strands", "3", "x1 x2", "x2 x1", "--assert"]).0, 1);
    assert_eq!(cli(&["braid", "act", "--strands", "3", "x1", "g2"]), (0, "g1\n".into()));
    assert_eq!(cli(&["braid", "psi", "--strands", "3", "x1 x2 x1"]), (0, "[3,2,1]\n".into()));
    assert_eq!(cli(&["braid", "degree", "--strands", "9", "t3 x1^-1 x1^-1"]), (0, "-1\n".into()));
}

#[test]
fn quotient_commands() {
    assert_eq!(cli(&["btilde", "eq", "--strands", "9", "t4 t3", "t3 t4"]), (0, "true\n".into()));
    let (code, nf) = cli(&["btilde", "nf", "--strands", "4", "x1 x2 x1 x1"]);
    assert_eq!(code, 0);
    let parsed = parse_nf(nf.trim(), 4).unwrap();
    assert_eq!(parsed.to_string(), nf.trim());
    let (code, out) = cli(&["btilde", "comb", "--strands", "3", "x1 x1 x2 x2"]);
    assert_eq!((code, out.as_str()), (0, "z1_2^2 z2_3^2\n"));
    let (_, out) = cli(&["btilde", "lambda", "--strands", "3", "x1 x1"]);
    assert_eq!(out, "v^0 s1^1 u1^0 u2^0\n");
    assert_eq!(cli(&["btilde", "comb", "--strands", "3", "x1"]).0, 2);
}

#[test]
fn extension_commands() {
    let (_, out) = cli(&["gn", "mul", "--strands", "3", "u2", "u1"]);
    assert_eq!(parse_gn(out.trim(), 3).unwrap(), parse_gn("u2 u1", 3).unwrap());
    let (_, out) = cli(&["gn", "act", "--strands", "3", "x1", "u1"]);
    assert_eq!(out, "v^1 s1^0 u1^-1 u2^0\n");
    let (_, out) = cli(&["gn", "sij", "--strands", "9", "1", "2"]);
    assert_eq!(out, "v^0 s1^1 u1^0 u2^0 u3^0 u4^0 u5^0 u6^0 u7^0 u8^0\n");
    let (_, out) = cli(&["g0", "act", "t2", "g1"]);
    assert_eq!(parse_g0(out.trim()).unwrap(), parse_g0("g2 g1").unwrap());
    let (_, out) = cli(&["g0", "mul", "g2", "g1"]);
    assert_eq!(out, "t^1 g1^1 g2^1 g3^0 g5^0 g6^0 g7^0 g8^0 g9^0\n");
    assert_eq!(cli(&["g0", "mul", "g4", "g1"]).0, 2);
}

#[test]
fn structured_output_is_json() {
    let (code, out) = cli(&["--format", "structured", "braid", "eq", "--strands", "3", "x1", "x1"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], true);
    let (_, out) = cli(&["braid", "psi", "--strands", "3", "x1", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["permutation"], serde_json::json!([2, 1, 3]));
}

#[test]
fn factorization_commands() {
    let f = file(DELTA3);
    let path = f.path().to_str().unwrap();
    assert_eq!(cli(&["fact", "validate", path]), (0, "true\n".into()));
    let (code, moved) = cli(&["fact", "move", path, "1", "-1"]);
    assert_eq!(code, 0);
    let moved_expr = parse_factorization(&moved).unwrap();
    assert_eq!(moved_expr.len(), 6);
    let g = file(&moved);
    assert_eq!(cli(&["fact", "validate", g.path().to_str().unwrap()]), (0, "true\n".into()));
    let (code, out) = cli(&["fact", "invariance", path, "x1", "--assert"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("\"result\":\"equivalent\""));
    assert_eq!(cli(&["fact", "move", path, "6", "1"]).0, 2);
    assert_eq!(cli(&["fact", "move", path, "1", "2"]).0, 2);
    let half = file(r#"{"strands": 3, "factors": [{"conjugator": "", "base": 1, "power": 1}]}"#);
    assert_eq!(cli(&["fact", "validate", half.path().to_str().unwrap(), "--assert"]), (1, "false\n".into()));
    assert_eq!(cli(&["fact", "validate", "/nonexistent/file.json"]).0, 2);
}

#[test]
fn presentation_commands() {
    let node = file(r#"{"strands": 2, "factors": [{"conjugator": "", "base": 1, "power": 3}]}"#);
    let (code, p) = cli(&["vk", "present", node.path().to_str().unwrap()]);
    assert_eq!((code, p.as_str()), (0, "gens: 2\nrel: g1 g2 g1 g2^-1 g1^-1 g2^-1\n"));
    let pf = file(&p);
    let pp = pf.path().to_str().unwrap();
    assert_eq!(cli(&["vk", "abelianize", pp]), (0, "Z\n".into()));
    let (_, proj) = cli(&["vk", "projectivize", pp]);
    let projected = parse_presentation(&proj).unwrap();
    assert_eq!(projected.relators().len(), 2);
    assert_eq!(projected.relators()[1], parse_free("g1 g2", 2).unwrap());
    let ident = file("gens: 2\nrel: g1 g2^-1\n");
    let (_, s) = cli(&["vk", "simplify", ident.path().to_str().unwrap()]);
    assert_eq!(s, "gens: 1\n");
    let json = file(r#"{"generators": 2, "relators": ["g1 g2 g1^-1 g2^-1"]}"#);
    assert_eq!(cli(&["vk", "abelianize", json.path().to_str().unwrap()]), (0, "Z^2\n".into()));
    let (_, general) = cli(&["vk", "present", node.path().to_str().unwrap(), "--mode", "general"]);
    assert!(general.starts_with("gens: 2\n"));
}

#[test]
fn tower_commands() {
    let (code, dict) = cli(&["g9", "dict"]);
    assert_eq!(code, 0);
    assert!(dict.contains("a4 = unsupported"));
    assert!(dict.lines().any(|l| l.starts_with("v1 = ")));
    let (_, rels) = cli(&["g9", "relators"]);
    assert!(rels.starts_with("tau c^-1 = "));
    assert!(rels.lines().next().unwrap().ends_with("(identity)"));
    let (_, pres) = cli(&["g9", "presentation"]);
    assert!(pres.contains("g1 g5 g1^-1 g5^-1"));
    assert!(pres.contains("(g1 xi1^-1)^3"));
    let (_, json) = cli(&["g9", "presentation", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 18);
}

#[test]
fn suite_commands() {
    let (code, out) = cli(&["verify", "paper-suite", "--filter", "b9-word-problem"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("pass b9-word-problem"));
    let (code, out) = cli(&["verify", "paper-suite", "--filter", "t4-conjugations"]);
    assert_eq!(code, 1, "{out}");
    let a = cli(&["verify", "paper-suite", "--filter", "xi-catalog", "--threads", "1", "--format", "structured"]);
    let b = cli(&["verify", "paper-suite", "--filter", "xi-catalog", "--format", "structured"]);
    assert_eq!(a, b);
    assert_eq!(cli(&["verify", "paper-suite", "--filter", "nope"]).0, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(cli(&["braid", "eq", "x1", "x1"]).0, 2);
    assert_eq!(cli(&["braid", "eq", "--strands", "3", "x1 y2", "x1"]).0, 2);
    assert_eq!(cli(&["nope"]).0, 2);
    let (code, help) = cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(help.contains("verify"));
}

#[test]
fn printed_values_reparse() {
    let (_, w) = cli(&["braid", "act", "--strands", "4", "x1 x2^-1 x3", "g1 g4^-1"]);
    assert_eq!(parse_free(w.trim(), 4).unwrap().to_string(), w.trim());
    let b = parse_braid("x1 x2^-1", 3).unwrap();
    assert_eq!(parse_braid(&b.to_string(), 3).unwrap(), b);
}
