//! Golden cases shared by the golden and acceptance targets.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, code }
}

pub const CASES: &[Case] = &[
    case("solve_chain", &["solve", "tests/fixtures/chain.tsv", "--source", "A"], 0),
    case(
        "solve_chain_verify_json",
        &["solve", "tests/fixtures/chain.tsv", "--source", "A", "--method", "gauss-seidel", "--verify", "--format", "json"],
        0,
    ),
    case("solve_duplicate", &["solve", "tests/fixtures/duplicate.tsv", "--source", "A"], 0),
    case("closure_chain", &["closure", "tests/fixtures/chain.tsv"], 0),
    case("closure_boolean", &["closure", "tests/fixtures/reach.tsv"], 0),
    case("eigen_cycles", &["eigen", "tests/fixtures/cycles.tsv"], 0),
    case("integrate_grid", &["integrate", "tests/fixtures/grid.tsv"], 0),
    case("integrate_density", &["integrate", "tests/fixtures/grid.tsv", "--density", "tests/fixtures/density.tsv"], 0),
    case("integrate_minplus", &["integrate", "tests/fixtures/density.tsv", "--semiring", "minplus"], 0),
    case("legendre_quadratic", &["legendre", "tests/fixtures/quadratic.tsv", "--slopes", "-1:1:0.25"], 0),
    case("deform_sweep", &["deform", "--u", "3", "--v", "5", "--h", "1,0.1,0.01"], 0),
    case("deform_negative_h", &["deform", "--u", "3", "--v", "5", "--h", "-1,-0.01"], 0),
    case("interval_solve_chain", &["interval-solve", "tests/fixtures/interval_chain.tsv", "--source", "A"], 0),
    case("tropical_line", &["tropical", "tests/fixtures/line_tropical.txt", "--step", "0.25"], 0),
    case(
        "tropical_line_json",
        &["tropical", "tests/fixtures/line_tropical.txt", "--lo", "-1", "--hi", "1", "--step", "0.5", "--format", "json"],
        0,
    ),
    case("amoeba_line", &["amoeba", "tests/fixtures/line_complex.txt", "--samples", "40", "--seed", "7"], 0),
    case(
        "amoeba_line_json",
        &["amoeba", "tests/fixtures/line_complex.txt", "--samples", "8", "--seed", "7", "--h", "0.5", "--format", "json"],
        0,
    ),
    case(
        "converge_line",
        &["converge", "tests/fixtures/line_complex.txt", "--samples", "300", "--seed", "1", "--grid-step", "0.02"],
        0,
    ),
    // exit code 2: malformed input or flags
    case("err_malformed_line", &["solve", "tests/fixtures/malformed.tsv", "--source", "A"], 2),
    case("err_empty_graph", &["closure", "tests/fixtures/empty.tsv"], 2),
    case("err_unknown_semiring", &["closure", "tests/fixtures/chain.tsv", "--semiring", "bogus"], 2),
    case("err_unknown_node", &["solve", "tests/fixtures/chain.tsv", "--source", "Z"], 2),
    case("err_not_in_carrier", &["integrate", "tests/fixtures/grid.tsv", "--semiring", "unitmaxmin"], 2),
    case("err_zero_h", &["deform", "--u", "0", "--v", "0", "--h", "0"], 2),
    case("err_bad_slopes", &["legendre", "tests/fixtures/quadratic.tsv", "--slopes", "1:2"], 2),
    case("err_usage", &["solve", "tests/fixtures/chain.tsv"], 2),
    // exit code 3: missing capability
    case("err_nonneg_solve", &["solve", "tests/fixtures/nonneg.tsv", "--source", "A"], 3),
    case("err_nonneg_integral", &["integrate", "tests/fixtures/weights.tsv", "--semiring", "nonneg"], 3),
    case("err_interval_nonneg", &["interval-solve", "tests/fixtures/interval_nonneg.tsv", "--source", "A"], 3),
    case("err_interval_scalar_graph", &["interval-solve", "tests/fixtures/chain.tsv", "--source", "A"], 3),
    case("err_eigen_boolean", &["eigen", "tests/fixtures/chain.tsv", "--semiring", "boolean"], 3),
    case("err_converge_general", &["converge", "tests/fixtures/scaled_line.txt"], 3),
    // exit code 4: no fixpoint within the budget
    case("err_negative_cycle", &["solve", "tests/fixtures/negative_cycle.tsv", "--source", "A"], 4),
    case("err_closure_budget", &["closure", "tests/fixtures/negative_cycle.tsv", "--max-iter", "3"], 4),
    case("err_interval_divergence", &["interval-solve", "tests/fixtures/interval_negative_cycle.tsv", "--source", "A"], 4),
    // exit code 5: solvers disagree in the last bit on decimal weights
    case("err_verify_mismatch", &["solve", "tests/fixtures/decimal_chain.tsv", "--source", "A", "--verify"], 5),
    // exit code 1: everything else
    case("err_missing_file", &["closure", "tests/fixtures/no_such_file.tsv"], 1),
    case("err_acyclic_eigen", &["eigen", "tests/fixtures/acyclic.tsv"], 1),
];

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn tropos(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tropos"));
    cmd.current_dir(crate_dir()).args(args).env_remove("TROPOS_THREADS");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.out"))
}

/// Stdout, then stderr under a marker line when there is any.
pub fn transcript(out: &Output) -> String {
    let mut s = String::from_utf8(out.stdout.clone()).expect("utf-8 stdout");
    let err = String::from_utf8(out.stderr.clone()).expect("utf-8 stderr");
    if !err.is_empty() {
        s.push_str("--- stderr\n");
        s.push_str(&err);
    }
    s
}

/// Runs every case twice and compares against its golden file, or rewrites
/// the golden files when `bless` is set. Returns one message per failure.
pub fn check_goldens(bless: bool) -> Vec<String> {
    let mut failures = Vec::new();
    for c in CASES {
        let first = tropos(c.args, &[]);
        let second = tropos(c.args, &[]);
        let code = first.status.code();
        if code != Some(c.code) {
            failures.push(format!("{}: exit {code:?}, expected {}\n{}", c.name, c.code, transcript(&first)));
            continue;
        }
        if first.stdout != second.stdout || first.stderr != second.stderr || second.status.code() != code {
            failures.push(format!("{}: two runs differ", c.name));
            continue;
        }
        let text = transcript(&first);
        let path = golden_path(c.name);
        if bless {
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(expected) if expected == text => {}
            Ok(expected) => failures.push(format!("{}: output differs\n--- expected\n{expected}--- actual\n{text}", c.name)),
            Err(e) => failures.push(format!("{}: cannot read {}: {e}", c.name, path.display())),
        }
    }
    failures
}
