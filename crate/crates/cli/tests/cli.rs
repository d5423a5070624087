use std::io::Write;
use std::path::Path;
use std::process::Command;

use serde_json::Value;
use tempfile::NamedTempFile;

const A2TILDE: &str = "# affine A2\ngenerators: s t u\nm: s t 3\nm: t u 3\nm: s u 3\n";
const A3: &str = "generators: s1 s2 s3\nm: s1 s2 3\nm: s2 s3 3\n";

fn system_file(text: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".cox").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn coxeter(file: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_coxeter"))
        .args(&args[..1])
        .arg("--matrix")
        .arg(file)
        .args(&args[1..])
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn straightness_example() {
    let f = system_file(A2TILDE);
    let r = coxeter(f.path(), &["is-straight", "tustuts"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().next(), Some("false"));
    assert!(
        r.stdout.contains("non-torsion-free member stustut, I={t}"),
        "{}",
        r.stdout
    );
}

#[test]
fn length_of_cancelling_word() {
    let f = system_file(A2TILDE);
    let r = coxeter(f.path(), &["length", "ss"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "0\n"));
}

#[test]
fn unknown_conjugacy_exits_3() {
    let f = system_file(A3);
    let r = coxeter(f.path(), &["is-conjugate", "s1", "s3"]);
    assert_eq!(r.code, 3);
    assert_eq!(r.stdout.lines().next(), Some("unknown"));
    let r = coxeter(f.path(), &["is-conjugate", "s1", "s3", "--brute-force"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().next(), Some("conjugate"));
    let r = coxeter(f.path(), &["is-conjugate", "s1", "s1 s2", "--brute-force"]);
    assert_eq!(r.code, 0);
    assert!(
        r.stdout.starts_with("not-conjugate\nbasis: brute-force\n"),
        "{}",
        r.stdout
    );
}

#[test]
fn worked_example_commands() {
    let f = system_file(A2TILDE);
    let expect = |args: &[&str], out: &str| {
        let r = coxeter(f.path(), args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
        assert_eq!(r.stdout, out, "{args:?}");
    };
    expect(&["is-reduced", "tustuts"], "true\n");
    expect(&["is-cyclically-reduced", "tustuts"], "true\n");
    expect(&["is-torsion-free", "tustuts"], "true\n");
    expect(&["is-torsion-free", "stustut"], "false\nwitness: I={t}\n");
    expect(&["normaliser-decompose", "tstustu", "{t}"], "(t, stustu)\n");
    expect(&["power-profile", "tustuts", "2"], "7 12\n");
    expect(
        &[
            "length", "t", "u", "s", "t", "u", "s", "t", "u", "s", "t", "u", "s",
        ],
        "12\n",
    );
    let square = coxeter(f.path(), &["reduce", "tustustustus"]).stdout;
    expect(&["mult", "tustuts", "tustuts"], &square);
    expect(&["kappa-class", "stu"], "stu\ntus\nust\n");
    expect(&["coxeter-straight"], "true\n");
    expect(&["is-spherical", "{s,t}"], "true\n");
    expect(&["is-spherical", "stu"], "false\n");
    expect(&["components", "{s,t}"], "{s,t} A2\n");
    expect(&["oracle-is-reduced", "tustuts"], "true\n");
    expect(&["brute-order", "st", "10"], "3\n");
    expect(&["brute-order", "stu", "20"], "none\n");
}

#[test]
fn exit_codes_for_errors() {
    let f = system_file(A2TILDE);
    let r = coxeter(f.path(), &["length", "sx"]);
    assert_eq!(r.code, 1);
    assert!(
        r.stderr.contains("unknown generator `x` at column 2"),
        "{}",
        r.stderr
    );

    let r = coxeter(f.path(), &["no-such-command"]);
    assert_eq!(r.code, 1);

    let r = coxeter(f.path(), &["cent-prime", "sts"]);
    assert_eq!(r.code, 1);

    let r = coxeter(f.path(), &["kappa-class", "tustuts", "--cap", "3"]);
    assert_eq!(r.code, 2, "{}", r.stderr);
    assert!(r.stderr.contains("node cap of 3"));

    let bad = system_file("generators: s t\nm: s t 3\nm: s q 4\n");
    let r = coxeter(bad.path(), &["length", "s"]);
    assert_eq!(r.code, 1);
    assert!(
        r.stderr
            .contains("line 3, column 6: undeclared generator `q`"),
        "{}",
        r.stderr
    );

    let out = Command::new(env!("CARGO_BIN_EXE_coxeter"))
        .arg("length")
        .arg("s")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_coxeter"))
        .arg("--help")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_lines_round_trip() {
    let f = system_file(A2TILDE);
    for args in [
        vec!["reduce", "tustustustus"],
        vec!["kappa-class", "tustuts"],
        vec!["min-stratum", "stst"],
        vec!["cyclic-reduce", "stst"],
        vec!["enumerate", "3"],
        vec!["brute-class", "st", "3"],
    ] {
        let mut with_json = args.clone();
        with_json.push("--json");
        let r = coxeter(f.path(), &with_json);
        assert_eq!(r.code, 0, "{}", r.stderr);
        assert_eq!(r.stdout.lines().count(), 1);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["command"], args[0]);
        for key in ["inputs", "result", "witness", "basis", "certificate"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let words: Vec<String> = match &v["result"] {
            Value::String(s) => vec![s.clone()],
            Value::Array(items) => items
                .iter()
                .map(|x| x.as_str().unwrap().to_string())
                .collect(),
            other => panic!("unexpected result {other}"),
        };
        for word in words {
            let back = coxeter(f.path(), &["reduce", &word]);
            assert_eq!(
                back.stdout.trim(),
                word,
                "{word} does not read back as itself"
            );
        }
    }
}

#[test]
fn deterministic_output() {
    let f = system_file(A2TILDE);
    for args in [
        ["is-conjugate", "tustuts", "stustut"],
        ["is-straight", "tustuts", "--json"],
    ] {
        let a = coxeter(f.path(), &args);
        let b = coxeter(f.path(), &args);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn printed_certificates_replay() {
    let f = system_file(A2TILDE);
    let r = coxeter(f.path(), &["cyclic-reduce", "stust"]);
    assert_eq!(r.code, 0);
    let reduced = r.stdout.lines().next().unwrap().to_string();
    let header = r.stdout.lines().nth(1).unwrap();
    let start = header
        .trim_start_matches("# certificate ")
        .split(" -> ")
        .next()
        .unwrap()
        .to_string();
    let mut cert = NamedTempFile::new().unwrap();
    cert.write_all(
        r.stdout
            .lines()
            .skip(1)
            .collect::<Vec<_>>()
            .join("\n")
            .as_bytes(),
    )
    .unwrap();
    let cert_path = cert.path().to_str().unwrap();
    let replayed = coxeter(f.path(), &["replay", &start, cert_path, "--end", &reduced]);
    assert_eq!(replayed.code, 0, "{}", replayed.stderr);
    assert_eq!(replayed.stdout.trim(), reduced);

    let wrong = coxeter(f.path(), &["replay", &start, cert_path, "--end", "stu"]);
    assert_eq!(wrong.code, 1);
}
