use metric_dimension::cli::{run, EXIT_FAILURE, EXIT_INTERVAL, EXIT_OK, EXIT_USAGE};
use metric_dimension::graph::{andrasfai, cartesian_product, path};
use metric_dimension::Graph;
use serde_json::Value;

fn metdim(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("metdim").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("timing");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn gen_graph6_round_trip() {
    let (code, out, err) = metdim(&["gen", "andrasfai", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        err.contains("n=11") && err.contains("regular=4") && err.contains("diameter=2"),
        "{err}"
    );
    let g = Graph::from_graph6(out.trim(), "x").unwrap();
    assert_eq!(
        g.edges().collect::<Vec<_>>(),
        andrasfai(4).unwrap().edges().collect::<Vec<_>>()
    );
}

#[test]
fn gen_json_to_file_then_dim_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("prism.json");
    let file_str = file.to_str().unwrap();
    let (code, out, _) = metdim(&[
        "gen",
        "product:andrasfai:3,path:2",
        "--format",
        "json",
        "--out",
        file_str,
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("n=16"), "{out}");
    let loaded = Graph::from_json(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let built = cartesian_product(&andrasfai(3).unwrap(), &path(2).unwrap());
    assert_eq!(loaded.edges().collect::<Vec<_>>(), built.edges().collect::<Vec<_>>());

    let (code, out, _) = metdim(&["dim", "--input", file_str]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("dim = 3"), "{out}");
    let (code, out, _) = metdim(&["dim", &format!("file:{file_str}")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("dim = 3"), "{out}");
}

#[test]
fn gen_csv_is_distance_matrix() {
    let (code, out, _) = metdim(&["gen", "cycle:5", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 5);
    assert_eq!(out.lines().next().unwrap(), "0,1,2,2,1");
}

#[test]
fn disconnected_gen_warns_and_dim_fails() {
    let (code, _, err) = metdim(&["gen", "complement", "andrasfai", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning"), "{err}");
    let (code, _, err) = metdim(&["dim", "complement", "andrasfai", "1"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.contains("disconnected"), "{err}");
}

#[test]
fn check_reports_witness() {
    let (code, out, _) = metdim(&["check", "andrasfai", "3", "--set", "1,4,7"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "RESOLVING"));
    let (code, out, _) = metdim(&["check", "andrasfai:3", "--set", "0,1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["certificate"]["verdict"], "NOT_RESOLVING");
    let (code, _, _) = metdim(&["check", "andrasfai:3", "--set", "0,99"]);
    assert_eq!(code, EXIT_FAILURE);
}

#[test]
fn exit_codes() {
    assert_eq!(metdim(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(metdim(&["dim", "andrasfai:3", "--format", "xml"]).0, EXIT_USAGE);
    assert_eq!(metdim(&["--help"]).0, EXIT_OK);
    assert_eq!(metdim(&["dim", "andrasfai:0"]).0, EXIT_FAILURE);
    assert_eq!(metdim(&["dim", "nope:3"]).0, EXIT_FAILURE);
    // One search node is not enough to settle And(5).
    let (code, out, _) = metdim(&["dim", "andrasfai", "5", "--budget-subsets", "1"]);
    assert_eq!(code, EXIT_INTERVAL, "{out}");
    assert!(out.contains("budget exhausted"), "{out}");
}

#[test]
fn dim_json_is_reproducible_across_threads() {
    let run_with = |threads: &str| {
        let (code, out, _) = metdim(&[
            "dim",
            "product",
            "andrasfai:4",
            "path:3",
            "--format",
            "json",
            "--threads",
            threads,
        ]);
        assert_eq!(code, EXIT_OK);
        let mut v: Value = serde_json::from_str(&out).unwrap();
        strip_timing(&mut v);
        v
    };
    let one = run_with("1");
    assert_eq!(one["dim"], 4);
    assert_eq!(one, run_with("4"));
    assert_eq!(one, run_with("4"));
}

#[test]
fn verify_json_is_reproducible() {
    let run_once = || {
        let (code, out, _) = metdim(&[
            "verify",
            "diameter-two-rule",
            "--k",
            "2..4",
            "--samples",
            "50",
            "--format",
            "json",
        ]);
        assert_eq!(code, EXIT_OK);
        let mut v: Value = serde_json::from_str(&out).unwrap();
        strip_timing(&mut v);
        v
    };
    let a = run_once();
    assert_eq!(a["passed"], true);
    assert_eq!(a, run_once());
}

#[test]
fn verify_failure_and_evidence_file() {
    let dir = tempfile::tempdir().unwrap();
    let evidence = dir.path().join("ev.json");
    let (code, out, err) = metdim(&[
        "verify",
        "prism",
        "--k",
        "1",
        "--n",
        "2",
        "--evidence",
        evidence.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(out.contains("FAIL"), "{out}");
    assert!(err.contains("failed: PRISM_PATH k=1 n=2"), "{err}");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(evidence).unwrap()).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(metdim(&["verify", "nope"]).0, EXIT_FAILURE);
}

#[test]
fn table_csv() {
    let (code, out, _) = metdim(&["table", "k2-cycle", "--n", "3..6"]);
    assert_eq!(code, EXIT_OK);
    let dims: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').nth(3).unwrap()).collect();
    assert_eq!(dims, ["2", "3", "2", "3"]);
    assert!(out.starts_with("family,params,n,dim_lo,dim_hi,exact,witness,ms\n"));
}
