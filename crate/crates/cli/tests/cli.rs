use std::process::Command;

use angulated::{FamilyParams, IndecObject, Morphism};
use angulated_cli::doc::{parse_angle_json, AngleDoc};
use angulated_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use proptest::prelude::*;
use serde_json::Value;

fn call(args: &str) -> angulated_cli::Outcome {
    run(std::iter::once("angulated").chain(args.split_whitespace()))
}

fn p449(args: &str) -> angulated_cli::Outcome {
    call(&format!("--d 4 --l 4 --m 9 {args}"))
}

#[test]
fn exit_codes() {
    assert_eq!(p449("params").code, EXIT_OK);
    for domain in ["hom f1 f13x", "compose f1 f6 f7", "ar --sub 1,2 f1", "ar --sub 1,5,9 f2", "dexact f3 f3"] {
        let o = p449(domain);
        let expect = if domain.contains("f13x") { EXIT_USAGE } else { EXIT_DOMAIN };
        assert_eq!(o.code, expect, "{domain}: {}", o.stderr);
        let err: Value = serde_json::from_str(&o.stderr).unwrap();
        assert!(err["error"].is_string() && err["message"].is_string());
    }
    assert_eq!(serde_json::from_str::<Value>(&p449("dexact f3 f3").stderr).unwrap()["error"], "BadDistance");
    assert_eq!(serde_json::from_str::<Value>(&p449("ar --sub 1,5,9 f2").stderr).unwrap()["error"], "NotMember");
    for usage in [
        "",
        "bogus",
        "params --format svg",
        "verify nothing",
        "params --format dot",
        "cover f1",
        "quiver --from 5 --to 1",
    ] {
        assert_eq!(p449(usage).code, EXIT_USAGE, "{usage}");
    }
    assert_eq!(call("params").code, EXIT_USAGE);
    assert_eq!(call("--d 4 --l 4 --m 8 params").code, EXIT_USAGE);
    assert_eq!(call("--help").code, EXIT_OK);
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = std::env::temp_dir().join(format!("angulated-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("family.conf");
    std::fs::write(&path, "# small family\nd=4\nl=4\nm=9\nformat=text\nsub=1,2,5,6,9,10\n").unwrap();
    let cfg = path.display();
    assert_eq!(call(&format!("--config {cfg} params")).stdout, "d=4 l=4 m=9 period=12\n");
    assert_eq!(call(&format!("--config {cfg} cover s-1:f4")).stdout, "s-1:f2 -> s-1:f4 [1]\n");
    let json = call(&format!("--config {cfg} --format json params"));
    assert_eq!(serde_json::from_str::<Value>(&json.stdout).unwrap()["period"], 12);
    let overridden = call(&format!("--config {cfg} --d 2 --l 2 --m 3 --sub 1,3 params"));
    assert_eq!(overridden.stdout, "d=2 l=2 m=3 period=4\n");
    std::fs::write(&path, "d=4\nl=4\nm=9\nflavour=sweet\n").unwrap();
    assert_eq!(call(&format!("--config {cfg} params")).code, EXIT_USAGE);
    assert_eq!(call(&format!("--config {}/missing params", dir.display())).code, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn golden_documents() {
    let ar: Value = serde_json::from_str(&p449("ar f5").stdout).unwrap();
    let labels: Vec<(i64, i64)> = ar["objects"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| (o[0]["shift"].as_i64().unwrap(), o[0]["index"].as_i64().unwrap()))
        .collect();
    assert_eq!(labels, [(-1, 8), (-1, 9), (-1, 12), (0, 1), (0, 4), (0, 5)]);
    let cover: Value = serde_json::from_str(&p449("cover --sub 1,2,5,6,9,10 s-1:f4").stdout).unwrap();
    assert_eq!(cover["source"], serde_json::json!([{ "shift": -1, "index": 2 }]));
    let wide: Value = serde_json::from_str(&call("--d 2 --l 2 --m 3 wide list").stdout).unwrap();
    assert_eq!(wide["count"], 8);
    assert_eq!(wide["specs"].as_array().unwrap().len(), 8);
    let check: Value = serde_json::from_str(&p449("wide check 1,2").stdout).unwrap();
    assert_eq!(check["wide"], false);
    assert_eq!(check["oracle"], false);
    assert!(check["witness"]["escaping"].is_object());
}

#[test]
fn verify_suites_pass() {
    for target in ["golden", "hom", "angles", "chains", "ar", "cover-ar", "wide"] {
        let o = p449(&format!("verify {target}"));
        assert_eq!(o.code, EXIT_OK, "{target}: {}", o.stdout);
        let doc: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(doc["passed"], true);
    }
}

#[test]
fn binary_matches_in_process_run() {
    let out = Command::new(env!("CARGO_BIN_EXE_angulated"))
        .args(["--d", "4", "--l", "4", "--m", "9", "ar", "f10"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), p449("ar f10").stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_angulated"))
        .args(["--d", "4", "--l", "4", "--m", "9", "compose", "f1", "f6", "f7"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_DOMAIN));
    let usage = Command::new(env!("CARGO_BIN_EXE_angulated")).args(["frobnicate"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}

/// Parses a DOT quiver into node names, member flags and edges.
fn parse_dot(dot: &str) -> (Vec<String>, Vec<String>, Vec<(String, String)>) {
    let mut nodes = Vec::new();
    let mut members = Vec::new();
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        if let Some((a, b)) = line.split_once(" -> ") {
            edges.push((a.trim_matches('"').to_string(), b.trim_end_matches(';').trim_matches('"').to_string()));
        } else if let Some(rest) = line.strip_prefix('"') {
            let name = rest.split('"').next().unwrap().to_string();
            if line.contains("member=true") {
                members.push(name.clone());
            }
            nodes.push(name);
        }
    }
    (nodes, members, edges)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn angle_documents_round_trip(t in 0usize..4, x in -20i64..20, delta in 0i64..4) {
        let (d, l, m) = [(2, 2, 3), (2, 3, 4), (4, 4, 9), (6, 2, 7)][t];
        let p = FamilyParams::new(d, l, m).unwrap();
        let delta = delta % l;
        let mu = Morphism::basis(&p, IndecObject::at(x), IndecObject::at(x + delta)).unwrap();
        let out = call(&format!("--d {d} --l {l} --m {m} angle p{x} p{}", x + delta));
        prop_assert_eq!(out.code, EXIT_OK);
        let angle = parse_angle_json(&out.stdout).unwrap();
        prop_assert_eq!(&angle, &angulated::min_angle(&mu).unwrap());
        let mut again = AngleDoc::new(&angle).to_json();
        again.push('\n');
        prop_assert_eq!(again, out.stdout);
    }

    #[test]
    fn quiver_dot_is_a_labelled_chain(lo in -30i64..30, len in 0i64..30, mask in any::<u16>()) {
        let sub: Vec<String> = (1..=12).filter(|i| mask >> (i - 1) & 1 == 1).map(|i| i.to_string()).collect();
        let hi = lo + len;
        let args = format!("quiver --from {lo} --to {hi} --format dot --sub {}", sub.join(","));
        let out = p449(&args);
        // Non-wide index sets are still drawn; membership is just marked.
        prop_assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        let (nodes, members, edges) = parse_dot(&out.stdout);
        let p = FamilyParams::new(4, 4, 9).unwrap();
        let name = |q: i64| { let (k, i) = p.split(q); format!("s{k}_f{i}") };
        prop_assert_eq!(nodes.len() as i64, len + 1);
        for (k, q) in (lo..=hi).enumerate() {
            prop_assert_eq!(&nodes[k], &name(q));
        }
        prop_assert_eq!(edges.len() as i64, len);
        // Every edge goes one step right, so the graph is acyclic.
        for (a, b) in &edges {
            let ia = nodes.iter().position(|n| n == a).unwrap();
            let ib = nodes.iter().position(|n| n == b).unwrap();
            prop_assert_eq!(ib, ia + 1);
        }
        let want: Vec<String> = (lo..=hi).filter(|&q| mask >> (p.index_of(q) - 1) & 1 == 1).map(name).collect();
        prop_assert_eq!(members, want);
    }
}
