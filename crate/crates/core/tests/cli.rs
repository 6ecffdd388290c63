use std::io::Write;
use std::process::{Command, Output};

fn lerch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lerch")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn expand_f0() {
    let o = lerch(&["expand", "f0()", "--order", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().filter(|l| !l.starts_with('#')).map(String::from).collect();
    assert_eq!(
        lines,
        ["q^(0/1): 1", "q^(1/1): 1", "q^(2/1): -1", "q^(3/1): 1", "q^(6/1): -1", "q^(7/1): 1", "q^(9/1): 1"]
    );
}

#[test]
fn expand_with_binding() {
    let o = lerch(&["expand", "j(x)", "--order", "3", "--bind", "x=-q^(1/2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# D=2"), "{}", stdout(&o));
}

#[test]
fn verify_reports_canary_failure() {
    let path = std::env::temp_dir().join(format!("lerch-cli-{}.qid", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "id: canary\nlhs: m(x, q, z)\nrhs: m(x, q, q*z) + q^30\nbind: x=2*q, z=-q^(1/2)").unwrap();
    let o = lerch(&["verify", path.to_str().unwrap(), "--order", "40", "--jobs", "1"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("canary\tx=2*q, z=-q^(1/2)\tfail\tfirst difference at q^30"), "{out}");
    assert!(out.contains("total/pass/fail/nongeneric: 1/0/1/0"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lerch(&["expand"]).status.code(), Some(2));
    assert_eq!(lerch(&["expand", "j(", "--order", "3"]).status.code(), Some(2));
    assert_eq!(lerch(&["suite", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(lerch(&["verify", "/nonexistent/file.qid"]).status.code(), Some(2));
}

#[test]
fn suite_below_canary_order_flags_only_the_canary() {
    let o = lerch(&["suite", "--order", "8"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(1), "{out}");
    let unexpected: Vec<_> = out.lines().filter(|l| l.contains("UNEXPECTED")).collect();
    assert_eq!(unexpected.len(), 1, "{out}");
    assert!(unexpected[0].starts_with("canary\t"), "{out}");
    assert!(out.contains("unexpected: 1"), "{out}");
}

#[test]
fn suite_at_order_32() {
    let o = lerch(&["suite", "--order", "32"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("unexpected: 0"), "{out}");
}
