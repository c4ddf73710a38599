use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn illation_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_illation"))
        .args(args)
        .env_remove("LC_ALL")
        .env_remove("LC_CTYPE")
        .env_remove("LANG")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn illation(args: &[&str]) -> (i32, String, String) {
    let out = illation_with_stdin(args, "");
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend(args);
    let (code, out, err) = illation(&all);
    assert!(code == 0 || code == 1, "{args:?}: exit {code}, {err}");
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}"))
}

#[test]
fn peirces_law_in_peano_russell() {
    let (code, out, _) = illation(&["check", "--notation", "peano-russell", "((A > B) > A) > A"]);
    assert_eq!(code, 0);
    assert_eq!(out, "tautology\n");
}

#[test]
fn contingent_is_success_unless_status_is_asked_for() {
    let (code, out, _) = illation(&["check", "a -> b"]);
    assert_eq!(code, 0);
    assert_eq!(out, "contingent\nfalsified by {a=t, b=f}\nsatisfied by {a=t, b=t}\n");
    assert_eq!(illation(&["check", "--status", "a -> b"]).0, 1);
    assert_eq!(illation(&["check", "--status", "a -> a"]).0, 0);
}

#[test]
fn barbara_translates_into_peirce() {
    let (code, out, _) =
        illation(&["translate", "--from", "peano-russell", "--to", "peirce", "(x > y) . (y > z) > (x > z)"]);
    assert_eq!(code, 0);
    assert_eq!(out, "((x -< y) * (y -< z)) -< (x -< z)\n");
    let (_, out, _) = illation(&[
        "translate",
        "--encoding",
        "unicode",
        "--from",
        "peano-russell",
        "--to",
        "peirce",
        "(x > y) . (y > z) > (x > z)",
    ]);
    assert_eq!(out, "((x ≺ y) · (y ≺ z)) ≺ (x ≺ z)\n");
}

#[test]
fn exit_codes() {
    let (code, _, err) = illation(&["check", "a &"]);
    assert_eq!(code, 2);
    assert!(err.contains("dangling operator"), "{err}");
    assert_eq!(illation(&["frobnicate"]).0, 2);
    assert_eq!(illation(&["triadic", "eval", "--assign", "a=L,b=V", "a -> b"]).0, 3);
    assert_eq!(illation(&["syllogism", "render", "A", "v", "b", "--notation", "peirce"]).0, 2);
    assert_eq!(illation(&["connectives", "enumerate", "--vars", "4"]).0, 4);
    let wide: Vec<String> = (0..21).map(|i| format!("v{i}")).collect();
    assert_eq!(illation(&["table", &wide.join(" & ")]).0, 4);
}

#[test]
fn errors_are_reported_as_json_too() {
    let (code, out, _) = illation(&["check", "a &", "--format", "json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["exit_code"], 2);
    assert!(v["error"].as_str().unwrap().contains("dangling"));
}

#[test]
fn formula_from_stdin_and_file() {
    let out = illation_with_stdin(&["check", "-"], "a | !a\n");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "tautology\n");
    let path = std::env::temp_dir().join(format!("illation-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, "a & !a\n").unwrap();
    let (code, out, _) = illation(&["check", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert!(out.starts_with("contradiction\n"), "{out}");
    assert_eq!(illation(&["check", "--file", "/nonexistent/illation", "a"]).0, 2);
}

#[test]
fn text_and_json_agree() {
    for f in ["a -> a", "a & !a", "a -> b", "((a -> b) -> a) -> a"] {
        let (_, text, _) = illation(&["check", f]);
        let v = json(&["check", f]);
        assert_eq!(text.lines().next().unwrap(), v["verdict"]["class"].as_str().unwrap(), "{f}");
        let (_, text, _) = illation(&["indirect", f]);
        let v = json(&["indirect", f]);
        let outcome = v["outcome"].as_str().unwrap();
        assert!(text.lines().any(|l| l == outcome), "{f}: {text}");
    }
    let (_, text, _) = illation(&["entails", "a -> b", "a", "b"]);
    assert_eq!(text, "valid\n");
    assert_eq!(json(&["entails", "a -> b", "a", "b"])["entailment"]["valid"], true);
    let (_, text, _) = illation(&["entails", "--", "a -> b", "!b", "!a"]);
    assert_eq!(text, "valid\n");
    let (_, text, _) = illation(&["entails", "a -> b", "b", "a"]);
    assert_eq!(text, "invalid\ncounterexample: {a=f, b=t}\n");
    let v = json(&["entails", "a -> b", "b", "a"]);
    assert_eq!(v["entailment"]["counterexample"], serde_json::json!({"a": "f", "b": "t"}));
}

#[test]
fn output_is_reproducible() {
    let args = ["connectives", "enumerate", "--slots", "2", "--limit", "50"];
    assert_eq!(illation(&args), illation(&args));
    let args = ["indirect", "--format", "json", "(((a -> b) -> c) -> d) -> e"];
    assert_eq!(illation(&args), illation(&args));
}

#[test]
fn chain_countermodel_uses_dashes_for_unconstrained_columns() {
    let (code, out, _) = illation(&["indirect", "--notation", "peirce", "(((a -< b) -< c) -< d) -< e"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines.contains(&"falsifiable"), "{out}");
    assert!(lines.contains(&"countermodel: {d=v, e=f}"), "{out}");
    assert!(lines.contains(&"unconstrained: a, b, c"), "{out}");
    let first_row: Vec<&str> = lines[1].split('|').map(str::trim).collect();
    assert_eq!(&first_row[..3], ["-", "-", "-"]);
}

#[test]
fn table_layouts_and_row_order() {
    let (_, out, _) = illation(&["table", "x -> y"]);
    assert_eq!(out, "x y | x -> y\nt t | t\nt f | f\nf t | t\nf f | t\n");
    let (_, out, _) = illation(&["table", "x -> y", "--row-order", "f-first"]);
    assert_eq!(out, "x y | x -> y\nf f | t\nf t | t\nt f | f\nt t | t\n");
    let v = json(&["table", "x -> y"]);
    assert_eq!(v["table"]["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn triadic_commands() {
    let (_, out, _) = illation(&["triadic", "eval", "--assign", "x=L,y=F", "x | y"]);
    assert_eq!(out, "L\n");
    let (_, out, _) = illation(&["triadic", "eval", "--assign", "x=L", "!x"]);
    assert_eq!(out, "L\n");
    let (_, out, _) = illation(&["triadic", "table", "x & !x"]);
    assert_eq!(out, "x | x & !x\nV | F\nL | L\nF | F\n");
    let (_, out, _) = illation(&["triadic", "check-restriction"]);
    assert_eq!(out, "10 cells checked, 0 mismatches\nrestriction: pass\n");
    let (_, out, _) = illation(&["triadic", "tables"]);
    assert!(out.starts_with("x\t-x\nV\tF\n"), "{out}");
}

#[test]
fn connectives_commands() {
    let (_, out, _) = illation(&["connectives", "catalog"]);
    assert_eq!(out.lines().count(), 16);
    assert!(out.lines().nth(12).unwrap().starts_with("13  tftt  implication"));
    let v = json(&["connectives", "catalog"]);
    assert_eq!(v[7]["name"], "equivalence");
    let (_, out, _) = illation(&["connectives", "identify", "tttf"]);
    assert_eq!(out, "disjunction (column 15)\n");
    let (_, out, _) = illation(&["connectives", "xframe", "implication"]);
    assert_eq!(out, "|  /|\n| + |\n|   |\nclosed: tf\n");
    assert_eq!(json(&["connectives", "xframe", "13"])["closed_pairs"], serde_json::json!(["tf"]));
    let (_, out, _) = illation(&["connectives", "enumerate", "--count-only"]);
    assert!(out.ends_with("total: 50886 tautologies, 9027 up to renaming\n"), "{out}");
    let v = json(&["connectives", "enumerate", "--slots", "1"]);
    assert_eq!(v["emitted"].as_array().unwrap().len(), 18);
    assert_eq!(v["truncated"], false);
    let (_, out, _) = illation(&["connectives", "enumerate", "--slots", "2", "--limit", "3"]);
    assert_eq!(out.lines().filter(|l| l.contains("->") || l.contains("<->")).count(), 3);
    assert!(out.contains("stopped after 3"));
}

#[test]
fn syllogism_commands() {
    let (_, out, _) = illation(&["syllogism", "render", "O", "a", "b", "--notation", "peirce", "--encoding", "unicode"]);
    assert_eq!(out, "a\u{30C} ≺ b\u{304}\n");
    let (_, out, _) = illation(&["syllogism", "barbara", "--notation", "peano-russell", "--encoding", "unicode"]);
    assert_eq!(
        out,
        "nested:      (x ⊃ y) ⊃ ((y ⊃ z) ⊃ (x ⊃ z))    tautology\n\
         conjunctive: (x ⊃ y) · (y ⊃ z) ⊃ (x ⊃ z)    tautology\n"
    );
    let v = json(&["syllogism", "aeio-table", "--notation", "peirce"]);
    assert_eq!(v[3]["rendered"], "?a -< -b");
    let v = json(&["syllogism", "render", "I", "a", "b"]);
    assert_eq!(v["formula"], Value::Null);
}

#[test]
fn parse_reports_structure() {
    let (_, out, _) = illation(&["parse", "--notation", "peirce", "x -< y -< z"]);
    assert_eq!(out, "x -< (y -< z)\nvariables: x, y, z\nconnectives: 2\ndepth: 2\n");
    let v = json(&["parse", "a & (b | c)"]);
    assert_eq!(v["formula"]["connective"], "conjunction");
}
