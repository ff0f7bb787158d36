use super::*;

fn cmd(line: &str) -> Outcome {
    run(std::iter::once("bhmirror").chain(line.split_whitespace()))
}

#[test]
fn analyze_reports_tilting_length() {
    let o = cmd("analyze loop:5,3 --index 2 --json");
    assert_eq!(o.code, EXIT_PASS, "{}", o.stderr);
    assert!(o.stdout.contains("\"tilting_length\": 9"), "{}", o.stdout);
}

#[test]
fn analyze_x2_plus_y2() {
    let o = cmd("analyze bp:2,2 --index 1");
    assert_eq!(o.code, EXIT_PASS);
    assert!(o.stdout.lines().any(|l| l.starts_with("Gorenstein param.") && l.trim_end().ends_with(" 0")), "{}", o.stdout);
}

#[test]
fn analyze_defaults_to_index_one() {
    let o = cmd("analyze chain:3,3 --json");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["ell"], 1);
    assert_eq!(v["milnor_number"], 7);
}

#[test]
fn exit_codes() {
    assert_eq!(cmd("analyze spiral:3,3").code, EXIT_USAGE);
    assert_eq!(cmd("analyze loop:5,3 --index 3").code, EXIT_INPUT);
    assert_eq!(cmd("frobnicate").code, EXIT_USAGE);
    assert_eq!(cmd("analyze").code, EXIT_USAGE);
    assert_eq!(cmd("--help").code, EXIT_PASS);
}

#[test]
fn verify_and_its_negative_control() {
    let o = cmd("verify loop:3,3 --index 2");
    assert_eq!(o.code, EXIT_PASS, "{}", o.stdout);
    let o = cmd("verify loop:3,3 --index 2 --corrupt demo");
    assert_eq!(o.code, EXIT_FAIL);
    assert!(o.stdout.contains("FAIL mf K0(2,1)"), "{}", o.stdout);
}

#[test]
fn compare_reports_and_writes_dot() {
    let o = cmd("compare loop:5,3 --index 2 --json");
    assert_eq!(o.code, EXIT_PASS);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["pairs"].as_array().unwrap().len(), 81);
    let dir = std::env::temp_dir().join(format!("bhmirror-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.dot");
    let line = format!("compare bp:4,4 --index 2 --dot {}", path.display());
    assert_eq!(cmd(&line).code, EXIT_PASS);
    let first = std::fs::read_to_string(&path).unwrap();
    cmd(&line);
    assert_eq!(first, std::fs::read_to_string(&path).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn compare_reports_the_chain_reduction() {
    let o = cmd("compare chain:2,5 --index 2");
    assert_eq!(o.code, EXIT_PASS, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.contains("reduces to loop:2,3 --index 1"), "{}", o.stdout);
}

#[test]
fn identical_runs_give_identical_output() {
    assert_eq!(cmd("compare chain:4,3 --index 2"), cmd("compare chain:4,3 --index 2"));
    assert_eq!(cmd("export loop:3,3 --index 2 --format json"), cmd("export loop:3,3 --index 2 --format json"));
}

#[test]
fn config_round_trip_and_override() {
    let cfg = RunConfig {
        command: "verify".into(),
        family: Some("chain:4,3".into()),
        index: Some(2),
        json: true,
        dot: Some("q.dot".into()),
        window: Some(3),
        max: Some(5),
        corrupt: Some("demo".into()),
        format: Some(ExportFormat::Dot),
    };
    assert_eq!(RunConfig::from_config_string(&cfg.to_config_string()).unwrap(), cfg);
    assert!(RunConfig::from_config_string("colour = blue").is_err());

    let path = std::env::temp_dir().join(format!("bhmirror-cfg-{}.conf", std::process::id()));
    std::fs::write(&path, "# defaults\nfamily = loop:5,3\nindex = 2\njson = true\n").unwrap();
    let o = cmd(&format!("analyze --config {}", path.display()));
    assert!(o.stdout.contains("\"tilting_length\": 9"), "{}", o.stdout);
    let o = cmd(&format!("analyze loop:3,3 --config {}", path.display()));
    assert!(o.stdout.contains("\"tilting_length\": 6"), "{}", o.stdout);
    std::fs::remove_file(&path).unwrap();
}
