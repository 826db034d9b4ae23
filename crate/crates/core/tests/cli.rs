use std::process::{Command, Output};

use serde_json::Value;

fn sparing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sparing"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn sparing_of_a_corona() {
    let v = json(&sparing(&["sparing", "corona(cycle:3,cycle:3)"]));
    assert_eq!(v["sparing"], 10);
    assert_eq!(v["method"], "corona");
    assert_eq!(v["vertices"], 12);
    assert_eq!(v["edges"], 21);
    assert_eq!(v["optimal"], true);
    assert_eq!(v["graph"], "corona(cycle:3,cycle:3)");
    assert_eq!(v["witness"].as_object().unwrap().len(), 12);
    for method in ["bf", "mwis"] {
        let w = json(&sparing(&[
            "sparing",
            "corona(cycle:3,cycle:3)",
            "--method",
            method,
        ]));
        assert_eq!(w["sparing"], 10, "{method}");
    }
}

#[test]
fn bf_witness_is_lexicographically_first() {
    let v = json(&sparing(&["sparing", "cycle:4", "--method", "bf"]));
    assert_eq!(v["sparing"], 0);
    let marks: Vec<&str> = (0..4)
        .map(|i| v["witness"][i.to_string()].as_str().unwrap())
        .collect();
    assert_eq!(marks, ["nonmono", "mono", "nonmono", "mono"]);
}

#[test]
fn witness_file_validates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let v = json(&sparing(&[
        "sparing",
        "corona(complete:3,path:2)",
        "--witness",
        path.to_str().unwrap(),
    ]));
    let lab = sparing_core::Labeling::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let g = sparing_core::build_family(&sparing_core::FamilySpec::corona(
        sparing_core::FamilySpec::Complete(3),
        sparing_core::FamilySpec::Path(2),
    ))
    .unwrap();
    let rep = sparing_core::validate_labeling(&g, &lab).unwrap();
    assert!(rep.is_weak_iasi());
    assert_eq!(v["sparing"], rep.mono_edges);
}

#[test]
fn formula_values() {
    assert_eq!(stdout(&sparing(&["formula", "KK", "3", "2"])), "4\n");
    assert_eq!(stdout(&sparing(&["formula", "pp", "2", "1"])), "2.5\n");
    assert_eq!(
        stdout(&sparing(&[
            "formula",
            "PP",
            "2",
            "1",
            "--variant",
            "derived"
        ])),
        "3\n"
    );
    assert_eq!(stdout(&sparing(&["formula", "CP", "3", "3"])), "6.75\n");
}

#[test]
fn gen_then_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        "path:4",
        "cycle:5",
        "complete:4",
        "biclique:2,3",
        "corona(cycle:3,path:2)",
        "corona(biclique:1,2,complete:3)",
    ] {
        let path = dir.path().join("g.txt");
        let o = sparing(&["gen", spec, "--out", path.to_str().unwrap()]);
        assert!(o.status.success());
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("p edge "), "{text}");
        assert_eq!(stdout(&sparing(&["gen", spec])), text);

        let direct = json(&sparing(&["sparing", spec, "--method", "mwis"]));
        let file = json(&sparing(&["sparing", &format!("file:{}", path.display())]));
        for key in ["sparing", "vertices", "edges", "witness"] {
            assert_eq!(direct[key], file[key], "{spec} {key}");
        }
    }
}

#[test]
fn verify_outputs() {
    let o = sparing(&["verify", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 638);
    let ck = rows
        .iter()
        .find(|r| r["theorem"] == "CK" && r["params"] == "m=3;n=2")
        .unwrap();
    assert_eq!(ck["status"], "Underestimate");
    assert_eq!(ck["oracle"], 4);
    let summary = String::from_utf8(o.stderr).unwrap();
    assert!(summary.contains("all closed forms hold: no"), "{summary}");

    let o = sparing(&["verify"]);
    let csv = stdout(&o);
    assert!(csv.starts_with(
        "theorem,params,graph,vertices,edges,oracle,as_printed,proof_derived,status,"
    ));
    assert_eq!(csv.lines().count(), 639);
}

#[test]
fn verify_with_a_grid_file() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("grid.json");
    std::fs::write(&grid, r#"{"theorems": ["CC"], "cycle_lengths": [3, 4]}"#).unwrap();
    let witnesses = dir.path().join("w");
    let o = sparing(&[
        "verify",
        "--strict",
        "--grid",
        grid.to_str().unwrap(),
        "--witness-dir",
        witnesses.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o).lines().count(), 5);
    assert_eq!(std::fs::read_dir(&witnesses).unwrap().count(), 4);

    std::fs::write(&grid, r#"{"theorems": ["CC"], "max_vertices": 10}"#).unwrap();
    let o = sparing(&["verify", "--grid", grid.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(sparing(&["verify", "--strict"]).status.code(), Some(3));
    assert_eq!(sparing(&["sparing", "star:3"]).status.code(), Some(1));
    assert_eq!(sparing(&["sparing", "cycle:2"]).status.code(), Some(1));
    assert_eq!(sparing(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(sparing(&["formula", "XX", "1", "2"]).status.code(), Some(1));
    assert_eq!(sparing(&["formula", "KK", "1"]).status.code(), Some(1));
    assert_eq!(sparing(&["formula", "CC", "2", "3"]).status.code(), Some(2));
    assert_eq!(
        sparing(&["sparing", "file:/nonexistent/g.txt"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sparing(&["sparing", "corona(cycle:5,cycle:5)", "--method", "bf"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sparing(&["sparing", "cycle:5", "--method", "corona"])
            .status
            .code(),
        Some(1)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("iso.txt");
    std::fs::write(&bad, "p edge 3 1\ne 1 2\n").unwrap();
    let o = sparing(&["sparing", &format!("file:{}", bad.display())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_shows_the_spec_grammar() {
    let o = sparing(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(sparing_core::spec_string::GRAMMAR));
}

#[test]
fn theorem_registry() {
    let v = json(&sparing(&["theorems"]));
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 15);
    assert_eq!(list[0]["id"], "PP");
}

#[test]
fn search_budget_is_reported() {
    let v = json(&sparing(&[
        "sparing",
        "corona(cycle:7,cycle:7)",
        "--method",
        "mwis",
        "--node-limit",
        "2",
    ]));
    assert_eq!(v["optimal"], false);
}
