use std::process::Command;

use pythgap_cli::output::{parse_json_lines, write_rows, Format};
use pythgap_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use pythgap_core::sequence::stitched_sequence;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pythgap").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn z_column(text: &str) -> Vec<String> {
    parse_json_lines(text).unwrap().iter().map(|r| r.z.to_string()).collect()
}

fn csv_z(text: &str) -> Vec<String> {
    text.lines().skip(1).map(|l| l.split(',').nth(7).unwrap().to_string()).collect()
}

#[test]
fn enumerate_seed_13() {
    let (code, out, _) = call(&["enumerate", "--gap", "7", "--seed", "13", "--count", "2", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(z_column(&out), ["13", "73"]);
}

#[test]
fn enumerate_stitched() {
    let (code, out, _) = call(&["enumerate", "--gap", "7", "--seed", "stitched", "--count", "2", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(z_column(&out), ["97", "17", "5", "13", "73"]);
}

#[test]
fn enumerate_gap_one_default_seed() {
    let (code, out, _) = call(&["enumerate", "--gap", "1", "--count", "3", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(csv_z(&out), ["5", "29", "169"]);
}

#[test]
fn enumerate_never_emits_degenerate_rows() {
    let (_, out, _) = call(&["enumerate", "--gap", "1", "--seed", "stitched", "--count", "3", "--format", "csv"]);
    // k = -1 and k = 0 are both the zero-leg (0,1,1) for gap 1
    assert_eq!(csv_z(&out), ["29", "5", "5", "29", "169"]);
}

#[test]
fn unknown_seed_is_usage_error() {
    let (code, _, err) = call(&["enumerate", "--gap", "7", "--seed", "19"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("unknown seed"));
    let (code, _, _) = call(&["enumerate", "--gap", "3", "--seed", "1"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = call(&["enumerate", "--gap", "7", "--seed", "banana"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn seeds_resolve_by_hypotenuse_or_position() {
    let (_, by_z, _) = call(&["enumerate", "--seed", "17", "--count", "3", "--format", "json"]);
    let (_, by_pos, _) = call(&["enumerate", "--seed", "2", "--count", "3", "--format", "json"]);
    assert_eq!(by_z, by_pos);
    assert_eq!(z_column(&by_z), ["17", "97", "565"]);
}

#[test]
fn verify_commands() {
    let (code, out, _) = call(&["verify", "--gap", "7", "--z-max", "10000000"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "EQUAL (16 triples)"));
    let (code, out, _) = call(&["verify", "--gap", "1", "--z-max", "1000000", "--workers", "4"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "EQUAL (7 triples)"));
    let (code, out, _) = call(&["verify", "--gap", "3", "--z-max", "1000"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "EQUAL (0 triples)"));
    let (code, _, _) = call(&["verify", "--gap", "6", "--z-max", "1000"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn pell_commands() {
    let (code, out, _) = call(&["pell", "7"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "(1,2) norm -7 -> (5,12,13)\n(3,1) norm +7 -> (8,15,17)\n");
    assert_eq!(call(&["pell", "1"]).1, "(1,1) norm -1 -> (3,4,5)\n");
    assert_eq!(call(&["pell", "3"]).1, "no solutions\n");
    assert_eq!(call(&["pell", "8"]).0, EXIT_USAGE);
}

#[test]
fn predict_commands() {
    let (code, out, _) = call(&["predict", "5", "13", "49"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "226/49 REJECT (a2=2693/49)\n6 ACCEPT\n");
    let (_, out, _) = call(&["predict", "5", "17", "49"]);
    // 309533/2401 reduces to 6317/49
    assert_eq!(out, "6 ACCEPT\n386/49 REJECT (a2=6317/49)\n");
    let (_, out, _) = call(&["predict", "1", "5", "1"]);
    assert_eq!(out, "6 ACCEPT\n34 ACCEPT-SUBSEQUENCE\n");
    let (code, out, _) = call(&["predict", "5", "6", "49"]);
    assert_eq!((code, out.trim()), (EXIT_MISMATCH, "no rational candidates"));
    assert_eq!(call(&["predict", "13", "5", "49"]).0, EXIT_USAGE);
}

#[test]
fn table_commands() {
    let (_, out, _) = call(&["table", "--gap", "7", "--seed", "13", "--from", "-4", "--to", "2", "--format", "csv"]);
    assert_eq!(csv_z(&out), ["3293", "565", "97", "17", "5", "13", "73"]);
    let (_, out, _) = call(&["table", "--gap", "7", "--seed", "17", "--from", "-4", "--to", "2", "--format", "csv"]);
    assert_eq!(csv_z(&out), ["2477", "425", "73", "13", "5", "17", "97"]);
    let (_, out, _) = call(&["table", "--gap", "1", "--from", "0", "--to", "3", "--format", "csv"]);
    assert_eq!(csv_z(&out), ["1", "5", "29", "169"]);
    assert!(out.lines().nth(1).unwrap().ends_with(",0,1,1,1,true"));
    assert_eq!(call(&["table", "--from", "3", "--to", "1"]).0, EXIT_USAGE);
}

#[test]
fn table_and_enumerate_agree() {
    let (_, e, _) = call(&["enumerate", "--gap", "7", "--seed", "17", "--count", "6", "--format", "json"]);
    let (_, t, _) = call(&["table", "--gap", "7", "--seed", "17", "--from", "1", "--to", "6", "--format", "json"]);
    assert_eq!(e, t);
}

#[test]
fn json_round_trip() {
    let rows = stitched_sequence(7, -40, 40).unwrap();
    let mut buf = Vec::new();
    write_rows(&mut buf, &rows, Format::Json).unwrap();
    assert_eq!(parse_json_lines(&String::from_utf8(buf).unwrap()).unwrap(), rows);
}

#[test]
fn golden_files() {
    let cases: [(&[&str], &str); 5] = [
        (
            &["enumerate", "--gap", "7", "--seed", "13", "--count", "4", "--format", "json"],
            include_str!("golden/enumerate_gap7_seed13.jsonl"),
        ),
        (
            &["enumerate", "--gap", "7", "--seed", "stitched", "--count", "3", "--format", "json"],
            include_str!("golden/enumerate_gap7_stitched.jsonl"),
        ),
        (
            &["table", "--gap", "7", "--seed", "17", "--from", "-4", "--to", "2", "--format", "csv"],
            include_str!("golden/table_gap7_seed17.csv"),
        ),
        (&["table", "--gap", "1", "--from", "0", "--to", "3", "--format", "csv"], include_str!("golden/table_gap1.csv")),
        (&["table", "--gap", "7", "--seed", "13", "--from", "-4", "--to", "2"], include_str!("golden/table_gap7_seed13.txt")),
    ];
    for (args, want) in cases {
        assert_eq!(call(args).1, want, "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_pythgap");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["pell", "7"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "(1,2) norm -7 -> (5,12,13)\n(3,1) norm +7 -> (8,15,17)\n");
    assert_eq!(status(&["pell", "4"]).status.code(), Some(2));
    assert_eq!(status(&["predict", "5", "6", "49"]).status.code(), Some(1));
    assert_eq!(status(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
