use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use turanp::constructions as c;

fn turanp(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_turanp"))
        .args(args)
        .env_remove("TURANP_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn turanp");
    let mut pipe = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).unwrap();
    }
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = turanp(args, None);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn temp_config(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("turanp-{}-{name}.conf", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn construct_prints_one_graph6_line() {
    let out = ok(&["construct", "--family", "h-path:n=10,ell=6", "--out", "g6"]);
    assert_eq!(out, format!("{}\n", turanp::g6_encode(&c::h_path(10, 6).unwrap())));
}

#[test]
fn construct_json_and_csv() {
    let v: Value = serde_json::from_str(&ok(&["construct", "--family", "k-join-matching:n=7,k=2"])).unwrap();
    assert_eq!(v["n"], 7);
    assert_eq!(v["m"], 9);
    assert_eq!(v["degrees"].as_array().unwrap().len(), 7);
    let csv = ok(&["construct", "--family", "star:r=3", "--out", "csv"]);
    assert_eq!(csv.lines().next(), Some("family,n,m,graph6"));
    assert!(csv.lines().nth(1).unwrap().starts_with("star:r=3,4,3,"));
}

#[test]
fn formula_example_value() {
    let out = ok(&["formula", "--name", "exp_path", "--n", "10", "--ell", "6", "--p", "2"]);
    assert!(out.starts_with(r#"{"value":"194","in_window":false,"#), "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["window"].is_string() && v["source"].is_string());
}

#[test]
fn formula_ranges_emit_one_record_per_cell() {
    let out = ok(&["formula", "--name", "exp_star", "--n-range", "5:8", "--r", "3", "--p-range", "1:3"]);
    assert_eq!(out.lines().count(), 12);
    let csv = ok(&["formula", "--name", "ex_kP3", "--n", "12", "--k", "2", "--out", "csv"]);
    assert_eq!(csv.lines().count(), 2);
}

#[test]
fn broom5_partial_reports_and_chains() {
    let v: Value = serde_json::from_str(&ok(&["formula", "--name", "ex_broom5_partial", "--n", "11", "--s", "1"])).unwrap();
    assert_eq!(v["kind"], "unspecified");
    assert_eq!(v["base_n"], 6);
    let v: Value =
        serde_json::from_str(&ok(&["formula", "--name", "ex_broom5_partial", "--n", "11", "--s", "1", "--chain-oracle"]))
            .unwrap();
    // known = C(5,2) from one K_5, plus ex(6, B_{5,1}) = 10 from K_5 + K_1.
    assert_eq!(v["chained_value"], "20");
}

#[test]
fn free_reads_graph6_from_stdin() {
    let h = turanp::g6_encode(&c::h_path(20, 6).unwrap());
    let o = turanp(&["free", "--pattern", "broom:6,3", "--in", "-"], Some(&format!("{h}\n")));
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "{\"free\":true}\n");
    let k = turanp::g6_encode(&c::complete(8).unwrap());
    let o = turanp(&["free", "--pattern", "path:6", "--in", "-", "--out", "g6"], Some(&format!("{h}\n{k}\n")));
    assert_eq!(stdout(&o), format!("{h}\n"));
}

#[test]
fn ep_above_the_vertex_cap_uses_the_degree_multiset() {
    let v: Value = serde_json::from_str(&ok(&["ep", "--family", "turan:n=100,r=2", "--p", "4"])).unwrap();
    assert_eq!(v["value"], "625000000");
}

#[test]
fn rewrite_demo_raises_every_power_sum() {
    for kind in ["edge", "triangle", "diamond", "spindle:2", "spindle-plus:3"] {
        let v: Value = serde_json::from_str(&ok(&["rewrite", "--demo", "--kind", kind, "--ell", "6", "--s", "1"])).unwrap();
        assert_eq!(v["site"]["kind"], kind);
        for row in v["ep"].as_array().unwrap() {
            let before: u64 = row["before"].as_str().unwrap().parse().unwrap();
            let after: u64 = row["after"].as_str().unwrap().parse().unwrap();
            assert!(after > before, "{kind}: {row}");
        }
    }
}

#[test]
fn rewrite_lists_sites_of_graph6_input() {
    let (g, site) = turanp::transforms::planted_instance(turanp::SiteKind::Triangle, 4).unwrap();
    let g6 = format!("{}\n", turanp::g6_encode(&g));
    let o = turanp(&["rewrite", "--in", "-", "--ell", "5", "--s", "0", "--list"], Some(&g6));
    assert!(o.status.success(), "{}", stderr(&o));
    let listed: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(listed.iter().any(|v| v["site"] == serde_json::to_value(&site).unwrap()));
    let o = turanp(&["rewrite", "--in", "-", "--ell", "5", "--s", "0", "--kind", "triangle", "--out", "g6"], Some(&g6));
    assert!(o.status.success(), "{}", stderr(&o));
    let h = turanp::g6_decode(stdout(&o).trim()).unwrap();
    assert!(h.ep_value(2) > g.ep_value(2));
}

#[test]
fn oracle_outputs() {
    let v: Value = serde_json::from_str(&ok(&["oracle", "--pattern", "path:3", "--n", "5", "--p", "2"])).unwrap();
    assert_eq!(v["max_value"], "4");
    assert_eq!(v["unique"], true);
    assert!(v["meta"]["nodes"].as_u64().unwrap() > 0);
    let v: Value = serde_json::from_str(&ok(&["oracle", "--pattern", "path:4", "--n", "6", "--classical"])).unwrap();
    assert_eq!(v["edges"], "6");
    let rows = ok(&["oracle", "--pattern", "path:3", "--n-range", "3:6", "--p", "2", "--compare"]);
    for line in rows.lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["agree"], true, "{line}");
    }
}

#[test]
fn oracle_cap_is_a_domain_error() {
    let o = turanp(&["oracle", "--pattern", "path:4", "--n", "10"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("n <= 8"));
    let o = turanp(&["oracle", "--pattern", "path:4", "--n", "10", "--override-cap"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("n <= 9"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["construct", "--family", "h-path:n=10"],
        &["construct", "--family", "octahedron:n=6"],
        &["free", "--pattern", "cycle:5", "--family", "complete:t=4"],
        &["free", "--pattern", "path:3"],
        &["formula", "--name", "exp_path", "--n", "10", "--p", "2"],
        &["formula", "--name", "exp_nothing", "--n", "10", "--p", "2"],
        &["oracle", "--pattern", "path:3", "--n", "5", "--threads", "0"],
        &["construct", "--family", "complete:t=3", "--no-such-flag"],
    ] {
        let o = turanp(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(stdout(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["construct", "--family", "h-path:n=3,ell=6"][..],
        &["formula", "--name", "ex_broom4", "--n", "3", "--s", "2"],
        &["lemmas", "--lemma", "superadd", "--ell", "5", "--p", "1", "--n1", "5", "--n2", "5"],
        &["construct", "--family", "complete:t=70"],
    ] {
        let o = turanp(args, None);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
    }
    let o = turanp(&["free", "--pattern", "path:3", "--in", "-"], Some("not graph6 at all ~~~~\n"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lemma_instances() {
    let v: Value = serde_json::from_str(&ok(&[
        "lemmas", "--lemma", "absorb", "--ell", "6", "--s", "1", "--h", "200", "--hstar", "10", "--p", "2",
    ]))
    .unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["params"]["d"], 7);
}

#[test]
fn verify_only_lemmas() {
    let v: Value = serde_json::from_str(&ok(&["verify", "--only", "lemmas"])).unwrap();
    assert_eq!(v["pass"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["suite"] == "lemmas" && c["cases"].as_u64().unwrap() > 0));
}

#[test]
fn verify_small_config_passes_every_suite() {
    let path = temp_config(
        "small",
        "n_max = 20\nlarge_n = 100\np_range = 1:3\nlemma_span = 4\nabsorb_tuples = 5\nrewrite_instances = 5\n\
         oracle = path:3 n=3:6 p=2:2 unique\n",
    );
    let v: Value = serde_json::from_str(&ok(&["verify", "--config", path.to_str().unwrap()])).unwrap();
    assert_eq!(v["pass"], true, "{v}");
    let suites: std::collections::BTreeSet<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["suite"].as_str().unwrap()).collect();
    assert_eq!(suites.len(), 4);
    assert_eq!(v["meta"]["oracle_cells"], 4);
}

#[test]
fn verify_rejects_an_oracle_row_above_the_cap() {
    let path = temp_config("cap", "suites = oracle lemmas\noracle = path:4 n=5:10 p=2:2\n");
    let o = turanp(&["verify", "--config", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("n <= 8"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn verify_rejects_malformed_configs() {
    let path = temp_config("bad", "n_max = sixty\n");
    let o = turanp(&["verify", "--config", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    let o = turanp(&["verify", "--only", "lemmas,plots"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_a_failing_check() {
    // No classical closed form covers B_{6,1}, so agreement cannot be shown.
    let path = temp_config("fail", "suites = oracle\noracle = broom:6,1 n=7:7 p=1:1\n");
    let o = turanp(&["verify", "--config", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], false);
    assert_eq!(v["checks"][0]["failures"], 1);
    assert!(v["checks"][0]["first_failure"].as_str().unwrap().contains("no closed form"));
    assert!(stderr(&o).contains("FAIL oracle"));
}

#[test]
fn print_config_round_trips() {
    let text = ok(&["verify", "--print-config"]);
    let path = temp_config("printed", &text);
    let v: Value = serde_json::from_str(&ok(&["verify", "--config", path.to_str().unwrap(), "--only", "oracle"])).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn outputs_are_byte_stable() {
    let runs = [
        vec!["oracle", "--pattern", "linear:3,2", "--n-range", "5:7", "--p", "2"],
        vec!["oracle", "--pattern", "path:4", "--n", "7", "--p", "3", "--threads", "3"],
        vec!["formula", "--name", "exp_broom", "--n-range", "8:30", "--ell", "6", "--s", "2", "--p", "3", "--out", "csv"],
        vec!["verify", "--only", "rewrite,lemmas"],
    ];
    for args in runs {
        assert_eq!(ok(&args), ok(&args), "{args:?}");
    }
    let one = ok(&["oracle", "--pattern", "path:5", "--n", "7", "--p", "2", "--threads", "1"]);
    let four = ok(&["oracle", "--pattern", "path:5", "--n", "7", "--p", "2", "--threads", "4"]);
    assert_eq!(one, four);
}
