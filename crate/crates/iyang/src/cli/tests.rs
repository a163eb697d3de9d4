use super::*;

fn desc(text: &str) -> CaseDescriptor {
    parse_descriptor(text).unwrap()
}

fn run_default(command: Command, text: &str) -> Result<Report> {
    run(command, &desc(text), &Limits::default(), &Overrides::default())
}

#[test]
fn malformed_descriptors_are_schema_errors() {
    assert!(matches!(parse_descriptor("{\"lambda\": [1,"), Err(Error::Schema(_))));
    assert!(matches!(parse_descriptor("{\"colour\": 1}"), Err(Error::Schema(_))));
    let bad_tau = r#"{"diagram": {"kind": "A", "rank": 3, "tau": [[1, 3], [3, 2]]}, "lambda": [1, 0, 1], "mu": [0, 0, 0]}"#;
    assert!(matches!(run_default(Command::IgkloVerify, bad_tau), Err(Error::Schema(_))));
    let not_auto = r#"{"diagram": {"kind": "A", "rank": 3, "tau": [[1, 2]]}, "lambda": [1, 1, 0], "mu": [0, 0, 0]}"#;
    assert!(matches!(run_default(Command::IgkloVerify, not_auto), Err(Error::Schema(_))));
    let short = r#"{"diagram": {"kind": "A", "rank": 2}, "lambda": [2], "mu": [0, 0]}"#;
    assert!(matches!(run_default(Command::IgkloVerify, short), Err(Error::Schema(_))));
    let colour = r#"{"diagram": {"kind": "A", "rank": 1, "bipartite": [[1, "x"]]}, "lambda": [2], "mu": [0]}"#;
    assert!(matches!(run_default(Command::IgkloVerify, colour), Err(Error::Schema(_))));
}

#[test]
fn limits_are_enforced() {
    let big_k = r#"{"diagram": {"kind": "A", "rank": 1}, "lambda": [2], "mu": [0], "K": 9}"#;
    assert!(matches!(run_default(Command::IgkloVerify, big_k), Err(Error::Schema(_))));
    let big_v = r#"{"diagram": {"kind": "A", "rank": 1}, "lambda": [20], "mu": [0]}"#;
    assert!(matches!(run_default(Command::IgkloVerify, big_v), Err(Error::Schema(_))));
    let big_rank = r#"{"diagram": {"kind": "E", "rank": 9}, "lambda": [0,0,0,0,0,0,0,0,0], "mu": [0,0,0,0,0,0,0,0,0]}"#;
    assert!(matches!(run_default(Command::PbwCount, big_rank), Err(Error::Schema(_))));
}

#[test]
fn igklo_verify_split_a1() {
    let r = run_default(
        Command::IgkloVerify,
        r#"{"name": "a1", "diagram": {"kind": "A", "rank": 1}, "lambda": [2], "mu": [0]}"#,
    )
    .unwrap();
    assert!(r.pass);
    assert_eq!(r.case, "a1");
}

#[test]
fn islice_reports_worked_partition() {
    let r = run_default(Command::Islice, r#"{"n": 4, "lambda": [4, 3, 2], "mu": [0, 0, 0]}"#).unwrap();
    assert!(r.pass);
    let Outcome::Islice(res) = &r.result else {
        panic!("wrong payload");
    };
    assert_eq!(res.data.pi1.parts(), &[9, 5, 2]);
    assert_eq!(res.data.total, 16);
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("\"pi1\":[9,5,2]"));
}

#[test]
fn iquiverify_both_signs() {
    let text = r#"{"diagram": {"kind": "A", "rank": 3}, "lambda": [0, 0, 4], "mu": [0, 0, 0]}"#;
    let ov = Overrides {
        both_signs: true,
        ..Overrides::default()
    };
    let r = run(Command::Iquiverify, &desc(text), &Limits::default(), &ov).unwrap();
    let Outcome::Iquiver(v) = &r.result else {
        panic!("wrong payload");
    };
    assert_eq!(v.len(), 2);
    assert!(r.pass);
    assert_ne!(v[0].diagram.bipartite, v[1].diagram.bipartite);
    let gauge_rank = |x: &IquiverResult| x.groups.as_ref().unwrap().gauge_rank();
    assert_eq!(gauge_rank(&v[0]), gauge_rank(&v[1]));
}

#[test]
fn iquiverify_reports_violations() {
    let text = r#"{"diagram": {"kind": "A", "rank": 2}, "v": [1, 1], "w": [0, 0]}"#;
    let r = run_default(Command::Iquiverify, text).unwrap();
    assert!(!r.pass);
    let Outcome::Iquiver(v) = &r.result else {
        panic!("wrong payload");
    };
    assert_eq!(v[0].violations.len(), 1);
    assert!(v[0].groups.is_none());
}

#[test]
fn pbw_count_split_a1() {
    let r = run_default(Command::PbwCount, r#"{"diagram": {"kind": "A", "rank": 1}, "K": 3}"#).unwrap();
    let Outcome::Pbw(p) = &r.result else {
        panic!("wrong payload");
    };
    assert_eq!(p.generators, vec![0, 1, 2, 1]);
    assert_eq!(p.series, vec!["1", "1", "3", "4"]);
}

#[test]
fn reports_are_deterministic_and_ordered() {
    let descs: Vec<CaseDescriptor> = (2..=6)
        .map(|w| desc(&format!(r#"{{"name": "w{}", "n": 2, "lambda": [{}], "mu": [0]}}"#, w * 2, w * 2)))
        .collect();
    let a = run_many(Command::Islice, &descs, &Limits::default(), &Overrides::default(), 4).unwrap();
    let b = run_many(Command::Islice, &descs, &Limits::default(), &Overrides::default(), 1).unwrap();
    assert_eq!(a.render(), b.render());
    let names: Vec<&str> = a.reports.iter().map(|r| r.case.as_str()).collect();
    assert_eq!(names, vec!["w4", "w6", "w8", "w10", "w12"]);
}
