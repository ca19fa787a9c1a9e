use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stieltjes"))
        .args(args)
        .env_remove("STIELTJES_DEFAULT_DIGITS")
        .output()
        .expect("spawn stieltjes")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

fn field<'a>(line: &'a str, key: &str) -> &'a str {
    let prefix = format!("{key}=");
    line.split_whitespace()
        .find_map(|t| t.strip_prefix(prefix.as_str()))
        .unwrap_or_else(|| panic!("no {key} in {line:?}"))
}

/// Rounds a scientific decimal `d.ddd…e±x` to `digits` significant digits.
fn round_sci(s: &str, digits: usize) -> String {
    let (mantissa, exp) = s.split_once('e').expect("scientific notation");
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa),
    };
    let mut ds: Vec<u8> = mantissa.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    let mut exp: i32 = exp.parse().expect("exponent");
    let round_up = ds[digits] >= 5;
    ds.truncate(digits);
    if round_up {
        let mut i = digits;
        loop {
            if i == 0 {
                ds.insert(0, 1);
                ds.pop();
                exp += 1;
                break;
            }
            i -= 1;
            if ds[i] == 9 {
                ds[i] = 0;
            } else {
                ds[i] += 1;
                break;
            }
        }
    }
    let body: String = ds.iter().map(|d| char::from(b'0' + d)).collect();
    format!("{}{}.{}e{}{:02}", if neg { "-" } else { "" }, &body[..1], &body[1..], if exp < 0 { '-' } else { '+' }, exp.abs())
}

#[test]
fn compute_gamma0_half() {
    let o = run(&["compute", "--n", "0", "--p", "1", "--q", "2", "--digits", "30"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(out.trim(), "value"), "1.96351002602142347944097633300e+00");
    assert_eq!(field(out.trim(), "method"), "bell");
}

#[test]
fn compute_gamma0_one_is_euler() {
    let o = run(&["compute", "--n", "0", "--p", "1", "--q", "1"]);
    assert!(o.status.success());
    assert_eq!(field(stdout(&o).trim(), "value"), "5.77215664901532860606512090082e-01");
}

#[test]
fn compute_all_methods_agree() {
    let o = run(&["compute", "--n", "1", "--p", "1", "--q", "4", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let values: Vec<&str> = out.lines().filter(|l| l.starts_with("VALUE")).collect();
    let methods: Vec<&str> = values.iter().map(|l| field(l, "method")).collect();
    assert_eq!(methods, ["bell", "cck", "hasse", "cauchy"]);
    assert!(values.iter().all(|l| field(l, "value") == "-5.51807635019940375269401104478e+00"));
    assert!(out.contains("within combined error estimates"));
}

#[test]
fn compute_decimal_defaults_to_cauchy() {
    let o = run(&["compute", "--n", "0", "--x", "0.5", "--digits", "20"]);
    assert!(o.status.success());
    let line = stdout(&o);
    assert_eq!(field(line.trim(), "method"), "cauchy");
    assert_eq!(field(line.trim(), "value"), "1.9635100260214234794e+00");
}

#[test]
fn digits_round_consistently() {
    let lo = run(&["compute", "--n", "1", "--p", "2", "--q", "5", "--digits", "25"]);
    let hi = run(&["compute", "--n", "1", "--p", "2", "--q", "5", "--digits", "35"]);
    let lo_v = stdout(&lo);
    let hi_v = stdout(&hi);
    assert_eq!(field(lo_v.trim(), "value"), round_sci(field(hi_v.trim(), "value"), 25));
}

#[test]
fn env_var_sets_default_digits() {
    let o = Command::new(env!("CARGO_BIN_EXE_stieltjes"))
        .args(["compute", "--n", "0", "--p", "1", "--q", "1"])
        .env("STIELTJES_DEFAULT_DIGITS", "12")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(field(stdout(&o).trim(), "value"), "5.77215664902e-01");
}

#[test]
fn json_lines_parse() {
    let o = run(&["table", "--n-max", "0", "--q", "3", "--format", "json"]);
    assert!(o.status.success());
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["kind"], "TABLE_ROW");
    assert_eq!(rows[0]["value"], "3.13203378002080632299641907429e+00");
    assert_eq!(rows[1]["value"], "1.31823441578658847240234081665e+00");
    assert_eq!(rows[2]["x"], "1");
}

#[test]
fn table_row_order() {
    let o = run(&["table", "--n-max", "1", "--q", "4", "--format", "csv"]);
    assert!(o.status.success());
    let mut rd = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = rd.headers().unwrap().clone();
    assert_eq!(headers.get(0), Some("kind"));
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let (n, p) = (col("n"), col("p"));
    let keys: Vec<(String, String)> = rd.records().map(|r| {
        let r = r.unwrap();
        (r[n].to_string(), r[p].to_string())
    }).collect();
    let expect: Vec<(String, String)> = [("0", "1"), ("0", "3"), ("0", "4"), ("1", "1"), ("1", "3"), ("1", "4")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    assert_eq!(keys, expect);
}

#[test]
fn table_q_one_gives_classical_constants() {
    let o = run(&["table", "--n-max", "2", "--q", "1", "--digits", "20"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let values: Vec<&str> = out.lines().map(|l| field(l, "value")).collect();
    assert_eq!(values, ["5.7721566490153286061e-01", "-7.2815845483676724861e-02", "-9.6903631928723184845e-03"]);
}

#[test]
fn verify_prop_6_1() {
    let o = run(&["verify", "--suite", "prop-6-1", "--q-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("IDENTITY PASS")).count(), 11);
    assert!(out.ends_with("summary: 11/11 passed\n"));
}

#[test]
fn verify_unknown_identity() {
    let o = run(&["verify", "--suite", "no-such-identity"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown identity"));
}

#[test]
fn flag_errors_exit_2() {
    assert_eq!(run(&["compute", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--n", "0", "--p", "1", "--q", "2", "--digits", "0"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--n", "0", "--p", "0", "--q", "2"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--n", "0", "--x", "abc"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--n", "0", "--x", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--n", "0", "--x", "0.5", "--method", "cck"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--n-max", "1", "--q", "5", "--format", "csv", "--digits", "20"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn rounding_helper() {
    assert_eq!(round_sci("9.996e+00", 3), "1.00e+01");
    assert_eq!(round_sci("-1.234e-02", 3), "-1.23e-02");
}
