//! Every subcommand against checked-in expected output, plus the exit-code
//! contract. Set `TROPOS_BLESS=1` to rewrite the expectations.

mod common;

use common::{check_goldens, tropos};

#[test]
fn golden_outputs_and_exit_codes() {
    let failures = check_goldens(std::env::var_os("TROPOS_BLESS").is_some());
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn thread_count_does_not_change_results() {
    let args = ["amoeba", "tests/fixtures/line_complex.txt", "--samples", "500", "--seed", "3"];
    let one = tropos(&args, &[("TROPOS_THREADS", "1")]);
    let four = tropos(&args, &[("TROPOS_THREADS", "4")]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, tropos(&args, &[]).stdout);

    let bad = tropos(&args, &[("TROPOS_THREADS", "0")]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("tropos-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("closure.tsv");
    let target_str = target.to_str().unwrap();
    let written = tropos(&["closure", "tests/fixtures/chain.tsv", "--output", target_str], &[]);
    assert_eq!(written.status.code(), Some(0));
    assert!(written.stdout.is_empty());
    let printed = tropos(&["closure", "tests/fixtures/chain.tsv"], &[]);
    assert_eq!(std::fs::read(&target).unwrap(), printed.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
