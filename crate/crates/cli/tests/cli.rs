use geodekit::codec;
use geodekit::solver::CertificateJson;
use serde_json::Value;
use std::process::{Command, Output};

fn geodekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geodekit"))
        .args(args)
        .env_remove("GEODEKIT_BUDGET_CLASS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = geodekit(&all);
    let code = out.status.code().unwrap();
    (
        serde_json::from_str(&stdout(&out)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&out))),
        code,
    )
}

#[test]
fn construct_formats() {
    let g6 = geodekit(&["construct", "hat(K4)", "--format", "g6"]);
    assert!(g6.status.success());
    let g = codec::parse_graph6(stdout(&g6).trim()).unwrap();
    assert_eq!((g.order(), g.size()), (10, 27));

    let edges = stdout(&geodekit(&["construct", "cex(4,2)"]));
    assert_eq!(edges.lines().next(), Some("17"));
    let prod =
        codec::parse_edge_list(&stdout(&geodekit(&["construct", "product(P4,P3)"]))).unwrap();
    assert_eq!(prod.order(), 12);

    let dot = stdout(&geodekit(&["construct", "P3", "--format", "dot"]));
    assert!(dot.starts_with("graph G {") && dot.contains("0 -- 1;"));
}

#[test]
fn solve_sg_with_checkable_certificate() {
    let (v, code) = json(&["solve", "sg", "hat(K4)"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 4);
    assert_eq!(v["status"], "proved");
    let cert: CertificateJson = serde_json::from_value(v.clone()).unwrap();
    let g = geodekit::FamilySpec::parse("hat(K4)")
        .unwrap()
        .build()
        .unwrap();
    assert!(cert.into_sg(10).unwrap().verify(&g).is_ok());
}

#[test]
fn solve_cores() {
    let (v, code) = json(&["solve", "sgc", "H(3,2,4)"]);
    assert_eq!((v["value"].as_u64(), code), (Some(3), 0));
    let (v, _) = json(&["solve", "sgc-of-set", "K(7,11)", "--set", "0-4,7..9"]);
    assert_eq!(v["value"], 4);
    assert_eq!(v["set"], serde_json::json!([0, 1, 2, 3, 4, 7, 8, 9]));
    let (v, _) = json(&["solve", "g", "C6"]);
    assert_eq!(v["value"], 2);
    let (v, _) = json(&["solve", "enumerate-sg-sets", "K(7,11)"]);
    assert_eq!(v["sets"], serde_json::json!([[0, 1, 2, 3, 4, 5, 6]]));
}

#[test]
fn bounds_reports() {
    let (v, code) = json(&["bounds", "cocktail(6)"]);
    assert_eq!(code, 0);
    assert_eq!(v["sgc_bounds"], serde_json::json!([1, 2]));
    assert_eq!(v["sgc"]["value"], 2);
    let (v, _) = json(&["bounds", "hat(K4)"]);
    assert_eq!(v["sgc_bounds"][0], v["sgc"]["value"]);
    let (v, _) = json(&["bounds", "K5"]);
    assert_eq!(v["exempt"], true);
    let text = stdout(&geodekit(&["bounds", "P4"]));
    assert!(text.contains("sgc >= counting lower bound  tight"));
}

#[test]
fn products() {
    let (v, _) = json(&["product", "K3", "K3", "--solve", "sg"]);
    assert_eq!(v["sg"]["value"], 5);
    assert_eq!(v["product_upper_sgc"], 5);
    assert_eq!(v["product_upper_old"], 7);
    let (v, _) = json(&["product", "P4", "P3", "--solve", "sg"]);
    assert_eq!(v["sg"]["value"], 4);
    let (v, _) = json(&["product", "K4", "K2", "--solve", "sg"]);
    assert_eq!(v["sg"]["value"], 4);
}

#[test]
fn exit_codes() {
    let capped = geodekit(&["solve", "sg", "K(7,11)", "--node-budget", "10"]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(stdout(&capped).contains("inconclusive"));
    assert_eq!(geodekit(&["solve", "sg", "nope("]).status.code(), Some(1));
    assert_eq!(geodekit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        geodekit(&["solve", "sg", "file:/no/such/file"])
            .status
            .code(),
        Some(1)
    );

    let dir = std::env::temp_dir().join(format!("geodekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let two_edges = dir.join("split.txt");
    std::fs::write(&two_edges, "4\n0 1\n2 3\n").unwrap();
    let out = geodekit(&["solve", "sg", &format!("file:{}", two_edges.display())]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("disconnected"));

    let c5 = dir.join("c5.g6");
    std::fs::write(&c5, "Dhc\n").unwrap();
    let (v, code) = json(&["solve", "sg", &format!("file:{}", c5.display())]);
    assert_eq!((v["value"].as_u64(), code), (Some(3), 0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn claim_registry() {
    let fast = geodekit(&["verify-paper", "fast"]);
    assert_eq!(fast.status.code(), Some(0), "{}", stdout(&fast));

    let (v, code) = json(&["verify-paper", "C-COUNTEREXAMPLE"]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["measured"]["sg(G_4_2)"], 10);
    assert_eq!(v[0]["measured"]["explicit_set_size"], 9);

    let (v, _) = json(&["verify-paper", "C-711"]);
    assert_eq!(v[0]["measured"]["sgc_S"], 2);
    assert_eq!(v[0]["measured"]["sgc_T"], 4);

    let env = Command::new(env!("CARGO_BIN_EXE_geodekit"))
        .args(["verify-paper", "--list"])
        .env("GEODEKIT_BUDGET_CLASS", "C-HAT-K4,C-711")
        .output()
        .unwrap();
    assert_eq!(stdout(&env).lines().count(), 2);
    assert_eq!(geodekit(&["verify-paper", "C-NOPE"]).status.code(), Some(1));
}

#[test]
fn failed_claims_exit_nonzero() {
    // The complete-graph product claim does not reproduce: sg(K4 x K4) = 6.
    let (v, code) = json(&["verify-paper", "C-KNKN"]);
    assert_eq!(code, 1);
    assert_eq!(v[0]["status"], "fail");
    assert_eq!(v[0]["measured"]["sg(K4 x K4)"], 6);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "solve", "sgc", "cocktail(9)"];
    let one = geodekit(&args);
    let two = geodekit(&["--workers", "1", "--json", "solve", "sgc", "cocktail(9)"]);
    assert_eq!(one.stdout, two.stdout);
}
