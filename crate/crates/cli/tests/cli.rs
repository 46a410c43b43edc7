use std::collections::BTreeSet;
use std::fs;
use std::process::{Command, Output};

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Serialize, Deserialize)]
struct Record {
    canonical: String,
    size: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    members: Option<Vec<String>>,
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commclass"))
        .args(args)
        .env_remove("COMMCLASS_THREADS")
        .output()
        .expect("spawn commclass")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_classes_small_ranks() {
    for (n, want) in [(1, "1"), (4, "8"), (6, "908")] {
        let o = run(&["count", "classes", "--n", &n.to_string()]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), want);
        assert!(String::from_utf8_lossy(&o.stderr).contains("[match]"));
    }
}

#[test]
fn count_reduced_reports_unknown_rank() {
    let o = run(&["count", "reduced", "--n", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"], "16");
    assert_eq!(v["status"], "unknown-rank");
    assert_eq!(v["authoritative"], true);
}

#[test]
fn count_for_arbitrary_permutation() {
    // 4231: 12321 and 32123 sit alone; 13213 commutes into three more words.
    let o = run(&["count", "classes", "--perm", "[4,2,3,1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3");
    let o = run(&["count", "reduced", "--perm", "[4,2,3,1]"]);
    assert_eq!(stdout(&o).trim(), "6");
    let listed = stdout(&run(&["enumerate", "reduced", "--perm", "[4,2,3,1]"]));
    assert_eq!(listed.lines().count(), 6);
}

#[test]
fn threads_do_not_change_counts() {
    let counts: BTreeSet<String> =
        ["1", "3", "8"].iter().map(|t| stdout(&run(&["count", "classes", "--n", "6", "--threads", t]))).collect();
    assert_eq!(counts.len(), 1);
}

#[test]
fn threads_default_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_commclass"))
        .args(["count", "classes", "--n", "5", "--json"])
        .env("COMMCLASS_THREADS", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["threads"], 3);
    assert_eq!(v["result"], "62");
}

#[test]
fn time_limit_exits_one_with_partial_report() {
    let o = run(&["count", "classes", "--n", "10", "--time-limit", "0.05", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "incomplete");
    assert_eq!(v["authoritative"], false);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["count", "classes"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["count", "classes", "--n", "x"]).status.code(), Some(1));
    assert_eq!(run(&["count", "classes", "--perm", "[1,1]"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn list_json_round_trips_byte_identical() {
    let o = run(&["list", "--n", "4", "--members", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let parsed: Vec<Record> = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), text.trim_end());
    assert_eq!(parsed.len(), 8);
    let sizes: Vec<u64> = parsed.iter().map(|r| r.size.parse().unwrap()).collect();
    assert_eq!(sizes.iter().sum::<u64>(), 16);
}

#[test]
fn list_members_match_table() {
    let o = run(&["list", "--n", "4", "--members", "--format", "json"]);
    let parsed: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    let sets: BTreeSet<BTreeSet<String>> = parsed
        .iter()
        .map(|r| r["members"].as_array().unwrap().iter().map(|m| m.as_str().unwrap().to_string()).collect())
        .collect();
    assert!(sets.contains(&BTreeSet::from(["312312".into(), "132312".into(), "312132".into(), "132132".into()])));
    assert!(sets.contains(&BTreeSet::from(["321323".into(), "323123".into()])));
    let canon: Vec<&str> = parsed.iter().map(|r| r["canonical"].as_str().unwrap()).collect();
    let mut sorted = canon.clone();
    sorted.sort();
    assert_eq!(canon, sorted);
}

#[test]
fn list_rank_two_and_five() {
    assert_eq!(stdout(&run(&["list", "--n", "2", "--format", "json"])).trim(), r#"[{"canonical":"1","size":"1"}]"#);
    assert_eq!(stdout(&run(&["list", "--n", "5"])).lines().count(), 62);
}

#[test]
fn list_csv_has_header() {
    let text = stdout(&run(&["list", "--n", "3", "--members", "--format", "csv"]));
    assert_eq!(text, "canonical,size,members\n121,1,121\n212,1,212\n");
}

#[test]
fn members_over_budget_is_refused() {
    let o = run(&["list", "--n", "9", "--members"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn enumerate_reduced_words_in_order() {
    let text = stdout(&run(&["enumerate", "reduced", "--n", "3"]));
    assert_eq!(text, "121\n212\n");
    let json: Vec<String> =
        serde_json::from_slice(&run(&["enumerate", "reduced", "--n", "4", "--format", "json"]).stdout).unwrap();
    assert_eq!(json.len(), 16);
}

#[test]
fn verify_passes_through_rank_six() {
    let o = run(&["verify", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().all(|l| l.ends_with("PASS")));
    assert!(text.contains("s4-classes=ok"));
}

#[test]
fn oracle_verify_matches() {
    let o = run(&["oracle", "verify", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("match"));
    let o = run(&["oracle", "verify", "--perm", "[3,4,1,2]"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn oracle_budget_is_enforced() {
    let o = run(&["oracle", "verify", "--n", "6", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn render_single_heap_square() {
    let o = run(&["render", "--kind", "heap", "--word", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<path").count(), 1);
}

#[test]
fn render_invalid_word_fails() {
    assert_eq!(run(&["render", "--kind", "heap", "--word", "11"]).status.code(), Some(1));
    assert_eq!(run(&["render", "--kind", "heap", "--word", "1a"]).status.code(), Some(1));
    assert_eq!(run(&["render", "--kind", "tiling", "--word", "12"]).status.code(), Some(1));
}

#[test]
fn render_all_tilings() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["render", "--all", "--kind", "tiling", "--n", "4", "--outdir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let mut names: Vec<String> =
        fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names.len(), 8);
    assert!(names.contains(&"321323.svg".to_string()));
    for name in names {
        let svg = fs::read_to_string(dir.path().join(name)).unwrap();
        assert_eq!(svg.matches(r#"class="rhombus""#).count(), 6);
    }
}

#[test]
fn render_all_networks_as_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "render",
        "--all",
        "--coords",
        "--kind",
        "network",
        "--n",
        "4",
        "--outdir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 8);
    for path in files {
        let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        // Simulate the rungs on (1,2,3,4).
        let mut state = vec![1, 2, 3, 4];
        let rungs = v["rungs"].as_array().unwrap();
        assert_eq!(rungs.len(), 6);
        for r in rungs {
            let row = r["row"].as_u64().unwrap() as usize;
            state.swap(row - 1, row);
        }
        assert_eq!(state, [4, 3, 2, 1], "{}", path.display());
    }
}

#[test]
fn render_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.svg");
    let o = run(&["render", "--kind", "tiling", "--word", "321323", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(fs::read_to_string(path).unwrap().contains("outline"));
}

#[test]
fn render_tiling_coordinates() {
    let o = run(&["render", "--kind", "tiling", "--coords", "--word", "321323"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["rhombi"].as_array().unwrap().len(), 6);
    assert!(v["rhombi"][0]["anchor"].is_array());
}
