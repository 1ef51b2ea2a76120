use std::process::{Command, Output};

use spnil::cli::parse_report;

fn spnil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spnil")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn census_csv_for_n2() {
    let o = spnil(&["census", "-n", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "command,seed,name,parameters,expected,actual,pass");
    assert_eq!(lines.len(), 1 + 4);
    assert!(lines[1].contains("lambda=(4)") && lines[1].contains("xlambda_dim=12;component=true"));
    let odd = lines.iter().find(|l| l.contains("lambda=(2,1,1)")).unwrap();
    assert!(odd.contains("component=false"));
    assert!(lines[1..].iter().all(|l| l.ends_with(",true")));
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        &["verify", "equivariance", "-n", "2", "--seed", "11"][..],
        &["verify", "weyl", "-n", "2"][..],
        &["radial", "-n", "2"][..],
    ] {
        let (a, b) = (spnil(args), spnil(args));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        let r = parse_report(&stdout(&a)).unwrap();
        assert!(r.pass && r.wall_time_ms.is_none());
    }
    let timed = parse_report(&stdout(&spnil(&["radial", "-n", "1", "--timing"]))).unwrap();
    assert!(timed.wall_time_ms.is_some());
}

#[test]
fn exit_codes() {
    assert_eq!(spnil(&["verify", "minors", "-n", "2"]).status.code(), Some(0));
    assert_eq!(spnil(&["hilbert", "--max-degree", "3"]).status.code(), Some(0));
    assert_eq!(spnil(&["lemma-sl2", "--dim", "5", "-n", "2", "--trials", "3"]).status.code(), Some(0));
    // the Jacobian rank check is known to fail
    assert_eq!(spnil(&["verify", "lagrangian", "-n", "1", "--trials", "3"]).status.code(), Some(1));
    for bad in [
        &["verify", "minors", "-n", "9"][..],
        &["census", "-n", "0"][..],
        &["hilbert", "-n", "2", "--max-degree", "3"][..],
        &["hilbert", "--max-degree", "40"][..],
        &["verify", "nope", "-n", "1"][..],
        &["census"][..],
        &["census", "-n", "2", "--format", "xml"][..],
    ] {
        let o = spnil(bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn verify_all_is_the_union() {
    let all = parse_report(&stdout(&spnil(&["verify", "all", "-n", "1", "--trials", "4"]))).unwrap();
    let mut names = Vec::new();
    for s in ["theta1-hom", "theta0-hom", "minors", "weyl", "dunkl", "relation", "lagrangian", "equivariance", "embedding"] {
        let r = parse_report(&stdout(&spnil(&["verify", s, "-n", "1", "--trials", "4"]))).unwrap();
        assert!(!r.records.is_empty());
        names.extend(r.records);
    }
    assert_eq!(all.records, names);
}
