//! End-to-end checks of the command layer: file formats, state
//! validation, transformation driver, counting, and exit codes.

use idemperm::array::SemanticState;
use idemperm::bench::Distribution;
use idemperm::cli::{self, TransformOp};
use idemperm::io;
use idemperm::oracle::CountFamily;
use idemperm::sorting::Algorithm;

const GOLDEN_PERM: [i64; 10] = [3, -1, 6, 8, -4, 7, -5, -9, -10, 2];

#[test]
fn sort_command_writes_sorted_output() {
    cli::with_temp_dir(|dir| {
        let input = dir.join("in.txt");
        let output = dir.join("out.txt");
        let report = dir.join("report.txt");
        io::write_text(&input, &[2, 2, 7, 7, 5, 7, 7, 8, 9, 2]).unwrap();
        cli::cmd_sort(Algorithm::StableAux, &input, &output, Some(&report)).unwrap();
        let got = io::read_file(&output).unwrap();
        assert_eq!(got.values, vec![2, 2, 2, 5, 7, 7, 7, 7, 8, 9]);
        let rep = std::fs::read_to_string(&report).unwrap();
        assert!(rep.contains("op=sort-stable-aux"));
        assert!(rep.contains("n=10"));
    });
}

#[test]
fn sort_command_rejects_bad_keys() {
    cli::with_temp_dir(|dir| {
        let input = dir.join("in.txt");
        let output = dir.join("out.txt");
        io::write_text(&input, &[1, 9, 2]).unwrap();
        let err = cli::cmd_sort(Algorithm::UnstableInPlace, &input, &output, None).unwrap_err();
        assert_eq!(err.code, cli::EXIT_VALIDATION);
    });
}

#[test]
fn sort_command_missing_file_is_io_error() {
    cli::with_temp_dir(|dir| {
        let err = cli::cmd_sort(
            Algorithm::UnstableInPlace,
            &dir.join("nope.txt"),
            &dir.join("out.txt"),
            None,
        )
        .unwrap_err();
        assert_eq!(err.code, cli::EXIT_IO);
    });
}

#[test]
fn transform_chain_over_files() {
    cli::with_temp_dir(|dir| {
        let pi = dir.join("pi.txt");
        io::write_text(&pi, &GOLDEN_PERM).unwrap();
        let mut sink = Vec::new();

        let inv = dir.join("inv.txt");
        cli::cmd_transform(TransformOp::Invert, &pi, Some(&inv), &mut sink).unwrap();
        assert_eq!(
            io::read_file(&inv).unwrap().values,
            vec![-2, 10, 1, -5, -7, 3, 6, 4, -8, -9]
        );

        let gamma = dir.join("gamma.txt");
        cli::cmd_transform(TransformOp::AssocPermute, &pi, Some(&gamma), &mut sink).unwrap();
        assert_eq!(
            io::read_file(&gamma).unwrap().values,
            vec![-2, 2, 3, -5, -7, 6, 7, 8, -8, -9]
        );

        let sorted = dir.join("m.txt");
        cli::cmd_transform(TransformOp::FillForward, &gamma, Some(&sorted), &mut sink).unwrap();
        assert_eq!(
            io::read_file(&sorted).unwrap().values,
            vec![2, 2, 2, 5, 7, 7, 7, 7, 8, 9]
        );

        // binary output chosen from the extension, then read back
        let bin = dir.join("inv.bin");
        cli::cmd_transform(TransformOp::Invert, &pi, Some(&bin), &mut sink).unwrap();
        let data = std::fs::read(&bin).unwrap();
        assert_eq!(&data[..4], io::MAGIC);
        assert_eq!(
            io::read_file(&bin).unwrap().values,
            io::read_file(&inv).unwrap().values
        );

        // streaming writes one value per line to the sink
        let mut stream = Vec::new();
        cli::cmd_transform(TransformOp::MultisetStream, &inv, None, &mut stream).unwrap();
        let text = String::from_utf8(stream).unwrap();
        let values: Vec<i64> = text.lines().map(|l| l.parse().unwrap()).collect();
        assert_eq!(values, vec![2, 2, 2, 5, 7, 7, 7, 7, 8, 9]);
    });
}

#[test]
fn transform_validates_input_state() {
    cli::with_temp_dir(|dir| {
        let f = dir.join("notaperm.txt");
        io::write_text(&f, &[2, 3, 1]).unwrap();
        let mut sink = Vec::new();
        // a 3-cycle is not an idempotent map
        let err =
            cli::cmd_transform(TransformOp::ToPerm, &f, None, &mut sink).unwrap_err();
        assert_eq!(err.code, cli::EXIT_VALIDATION);
    });
}

#[test]
fn verify_prints_decomposition() {
    cli::with_temp_dir(|dir| {
        let f = dir.join("pi.txt");
        io::write_text(&f, &GOLDEN_PERM).unwrap();
        let mut out = Vec::new();
        cli::cmd_verify(SemanticState::IdempotentPerm, &f, &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "k=5 A=2,5,7,8,9 C=1,4,5,9,10 c'=3,1,4,1,1\n"
        );

        let g = dir.join("id.txt");
        io::write_text(&g, &[1, 2, 3]).unwrap();
        let mut out = Vec::new();
        cli::cmd_verify(SemanticState::IdempotentMap, &g, &mut out).unwrap();
        assert!(String::from_utf8(out).unwrap().starts_with("k=3"));

        let h = dir.join("cycle.txt");
        io::write_text(&h, &[2, 3, 1]).unwrap();
        let mut out = Vec::new();
        let err = cli::cmd_verify(SemanticState::IdempotentMap, &h, &mut out).unwrap_err();
        assert_eq!(err.code, cli::EXIT_VALIDATION);
        assert_eq!(err.message, "iota(iota(1)) != iota(1)");
    });
}

#[test]
fn count_tables_and_enumeration_cross_check() {
    let mut out = Vec::new();
    cli::cmd_count(4, None, CountFamily::Idempotent, true, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("n=4 total=41"));
    assert!(text.contains("enumerated=41 MATCH"));

    let mut out = Vec::new();
    cli::cmd_count(5, None, CountFamily::Multiset, true, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("n=5 total=126"));
    assert!(text.contains("MATCH"));

    let mut out = Vec::new();
    cli::cmd_count(1, None, CountFamily::Idempotent, false, &mut out).unwrap();
    assert!(String::from_utf8(out).unwrap().contains("n=1 total=1"));

    let mut out = Vec::new();
    let err = cli::cmd_count(0, None, CountFamily::Idempotent, false, &mut out).unwrap_err();
    assert_eq!(err.code, cli::EXIT_USAGE);
}

#[test]
fn bench_reports_trials() {
    let mut out = Vec::new();
    cli::cmd_bench(
        1000,
        2,
        Algorithm::UnstableInPlace,
        Distribution::Uniform,
        1,
        &mut out,
    )
    .unwrap();
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("trial=0 op=sort-unstable n=1000"));
    assert!(text.contains("trial=1"));
    assert!(text.contains("aggregate algo=unstable n=1000 trials=2"));
}

#[test]
fn header_state_is_not_trusted() {
    cli::with_temp_dir(|dir| {
        let f = dir.join("lies.txt");
        std::fs::write(&f, "# n=3 state=idempotent-perm\n1 2 3\n").unwrap();
        let mut out = Vec::new();
        let err = cli::cmd_verify(SemanticState::IdempotentPerm, &f, &mut out).unwrap_err();
        assert_eq!(err.code, cli::EXIT_VALIDATION);
    });
}
