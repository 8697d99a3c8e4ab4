//! The command-line surface: outputs, structured records and exit codes.

use std::process::Command;

use nilorb::cli::{run, EXIT_PARSE, EXIT_VALIDATION, EXIT_VERIFY_FAILED};
use nilorb::duality::MarkedOrbit;
use nilorb::springer::WeylIrrep;
use nilorb::{DecoratedPartition, Partition};
use serde_json::Value;

fn nilorb(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nilorb").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = nilorb(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

fn json(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = nilorb(&full);
    assert!(code == 0 || code == EXIT_VERIFY_FAILED, "{args:?}: {err}");
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["dual", "-t", "B", "3,1,1"]), "2,2");
    assert_eq!(ok(&["wf", "-t", "C", "--az-dual-orbit", "5"]), "zero orbit | ∅");
    assert_eq!(ok(&["exceptional", "F4", "A_2"]), "F4 A_2: J = {α0,α1,α2,α3} (B_4), O(φ) = (7,1,1)");
}

#[test]
fn partition_verbs() {
    assert_eq!(ok(&["collapse", "-t", "C", "3,1"]), "2,2");
    assert_eq!(ok(&["collapse", "-t", "C", "5,3"]), "4,4");
    assert_eq!(ok(&["dual", "-t", "C", "2^2"]), "3,1,1");
    assert_eq!(ok(&["special", "-t", "D", "2,2,1,1"]), "true");
    assert_eq!(ok(&["markable", "-t", "B", "3,1,1"]), "3,1");
    assert_eq!(ok(&["reduce", "-t", "B", "3,1,1", "1"]), "1");
    assert_eq!(ok(&["enumerate", "-t", "B", "-n", "2"]).lines().count(), 4);
    assert_eq!(ok(&["da", "-t", "C", "3,1,1"]), "2,2 | ∅");
    assert_eq!(ok(&["sbar", "-t", "C", "∅;2,2"]), "2,2 | ∅");
    assert_eq!(ok(&["ds", "-t", "B", ";3,1,1"]), "2,2");
    assert_eq!(ok(&["lea", "-t", "C", "2,2|∅", "4|∅"]), "true");
}

#[test]
fn representation_verbs() {
    assert!(ok(&["springer", "-t", "B", "3,1,1"]).starts_with("1;1"));
    assert_eq!(ok(&["springer", "-t", "B", "--support", "--side", "dual", "2;∅"]), "4");
    assert!(ok(&["family", "-t", "B", "1;1"]).starts_with("special 1;1"));
    assert_eq!(ok(&["restrict-mult", "-t", "C", "-k", "1", "1;1", "1;∅", "∅;1"]), "1");
    assert_eq!(ok(&["jinduce", "-t", "C", "-k", "1", "1;∅", "1;∅"]).is_empty(), false);
    assert_eq!(ok(&["wf-wrep", "-t", "B", "2;∅"]), "zero orbit | ∅");
    assert!(ok(&["wf-wrep", "-t", "D", "2;2:0", "--by-definition"]).contains("by definition"));
}

#[test]
fn faithful_verbs() {
    assert!(ok(&["faithful", "-t", "C", "3,3,1"]).starts_with("J = C2 × C1"));
    let lines = ok(&["verify-faithful", "-t", "C", "--all", "-n", "3"]);
    assert!(lines.lines().all(|l| l.contains("condition (i) pass") && l.contains("condition (ii) pass")));
}

#[test]
fn negative_control_exits_with_the_failing_witness() {
    let (code, out, _) = nilorb(&["verify-faithful", "-t", "B", "--all", "-n", "3", "--untwisted"]);
    assert_eq!(code, EXIT_VERIFY_FAILED);
    assert!(out.contains("FAIL") && out.contains("no member of the family meets"));
}

#[test]
fn exit_codes() {
    assert_eq!(nilorb(&["dual", "-t", "B", "3,1"]).0, EXIT_VALIDATION);
    assert_eq!(nilorb(&["dual", "-t", "B", "x"]).0, EXIT_PARSE);
    assert_eq!(nilorb(&["dual", "-t", "Q", "3"]).0, EXIT_PARSE);
    assert_eq!(nilorb(&["frobnicate"]).0, EXIT_PARSE);
    assert_eq!(nilorb(&["dual", "-t", "B"]).0, EXIT_PARSE);
    assert_eq!(nilorb(&["--help"]).0, 0);
    assert_eq!(nilorb(&["verify-faithful", "-t", "B", "--max-rank", "2", "3,1,1,1"]).0, EXIT_VALIDATION);
    let (code, _, err) = nilorb(&["exceptional", "F4", "Q"]);
    assert_eq!(code, EXIT_VALIDATION);
    assert!(err.contains("A_2") && err.contains("F_4(a_2)"), "{err}");
    assert_eq!(ok(&["exceptional", "E6", "D_4(a_1)"]), "use-default: (Δ, φ(E(O∨,1)))");
}

#[test]
fn structured_records_round_trip() {
    let rec = &json(&["dual", "-t", "B", "3,1,1"])[0];
    assert_eq!(rec["kind"], "partition");
    let p: Partition = serde_json::from_value(rec["value"].clone()).unwrap();
    assert_eq!(p.to_string(), "2,2");

    let rec = &json(&["da", "-t", "B", "2,2"])[0];
    assert_eq!(rec["kind"], "marked_orbit");
    let m: MarkedOrbit = serde_json::from_value(rec["value"].clone()).unwrap();
    assert_eq!(m.to_string().parse::<MarkedOrbit>().unwrap(), m);

    let rec = &json(&["springer", "-t", "D", "2,2,2,2:1"])[0];
    let e: WeylIrrep = serde_json::from_value(rec["value"].clone()).unwrap();
    assert_eq!(WeylIrrep::parse(e.letter(), &e.to_string()).unwrap(), e);

    for rec in json(&["enumerate", "-t", "D", "-n", "4"]) {
        let o: DecoratedPartition = serde_json::from_value(rec["value"].clone()).unwrap();
        assert_eq!(o.to_string().parse::<DecoratedPartition>().unwrap(), o);
    }

    let reports = json(&["verify-faithful", "-t", "D", "--all", "-n", "4"]);
    assert!(reports.iter().all(|r| r["kind"] == "faithful_report" && r["condition_ii"] == true));
    let rows = json(&["exceptional", "E8"]);
    assert_eq!(rows.len(), 10);
}

#[test]
fn sampling_is_reproducible() {
    let a = ok(&["enumerate", "-t", "C", "-n", "5", "--sample", "4", "--seed", "11"]);
    let b = ok(&["enumerate", "-t", "C", "-n", "5", "--sample", "4", "--seed", "11"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 4);
}

#[test]
fn binary_reads_the_rank_bound_from_the_environment() {
    let bin = env!("CARGO_BIN_EXE_nilorb");
    let status = Command::new(bin)
        .args(["verify-faithful", "-t", "C", "3,3,1"])
        .env("NILORB_VERIFY_MAX_RANK", "2")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_VALIDATION));
    let status = Command::new(bin).args(["verify-faithful", "-t", "C", "3,3,1"]).env_remove("NILORB_VERIFY_MAX_RANK").output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    let status = Command::new(bin).args(["dual", "-t", "B", "3,1"]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_VALIDATION));
}

#[test]
fn table_override_is_checksummed() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let good = dir.join("tables_good.txt");
    std::fs::write(&good, nilorb::faithful::exceptional::BUILTIN_TABLE).unwrap();
    assert!(ok(&["--table-path", good.to_str().unwrap(), "exceptional", "F4", "B_2"]).contains("(5,3,1)"));
    let bad = dir.join("tables_tampered.txt");
    std::fs::write(&bad, nilorb::faithful::exceptional::BUILTIN_TABLE.replace("(5,3,1)", "(5,3,3)")).unwrap();
    assert_eq!(nilorb(&["--table-path", bad.to_str().unwrap(), "exceptional", "F4", "B_2"]).0, EXIT_VALIDATION);
}
