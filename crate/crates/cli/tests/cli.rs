use std::path::PathBuf;
use std::process::{Command as Process, Output};

use splitkit::oracle::{Oracle, Sampler};
use splitkit::splittance::SplittanceMatrix;
use splitkit::{degree_sequence, splittance_matrix, Block, IntegerPairSequence};
use splitkit_cli::{exit, run, Command, Format, Options};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn splitkit(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_splitkit")).args(args).env_remove("SPLITKIT_ORACLE_MAX_N").output().unwrap()
}

fn sequence_text(d: &IntegerPairSequence) -> String {
    let mut s = String::from("seq\n");
    for p in d.pairs() {
        s.push_str(&format!("{} {}\n", p.out_deg, p.in_deg));
    }
    s
}

fn digraph_text(g: &splitkit::Digraph) -> String {
    let mut s = format!("digraph {}\n", g.vertex_count());
    for (u, v) in g.arcs() {
        s.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    s
}

fn parse_csv_matrix(text: &str) -> SplittanceMatrix {
    let rows = text.lines().map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    SplittanceMatrix::from_rows(rows)
}

#[test]
fn matrix_csv_round_trips() {
    let mut sampler = Sampler::new(9);
    for n in 0..=9 {
        for _ in 0..20 {
            let d = sampler.sequence(n);
            let out = run(Command::Matrix, &sequence_text(&d), &Options::default());
            assert_eq!(out.code, exit::OK);
            assert_eq!(parse_csv_matrix(&out.stdout), splittance_matrix(&d), "{d}");
        }
    }
}

#[test]
fn single_zero_vertex_matrix() {
    let out = run(Command::Matrix, "seq\n0 0\n", &Options::default());
    assert_eq!(out.stdout, "0,0\n0,0\n");
}

#[test]
fn empty_sequence_flows_through() {
    let out = run(Command::Matrix, "seq\n", &Options::default());
    assert_eq!((out.stdout.as_str(), out.code), ("0\n", exit::OK));
    let out = run(Command::Check, "seq\n", &Options::default());
    assert_eq!(out.stdout, "digraphic=true\nsplit=false\nsplittance=none\n");
    assert_eq!(out.code, exit::NOT_SPLIT);
}

#[test]
fn complete_digraph_lists_the_all_clique_partition() {
    let text = digraph_text(&splitkit::Digraph::complete(3));
    let out = run(Command::Partitions, &text, &Options::default());
    assert_eq!(out.code, exit::OK);
    assert!(out.stdout.lines().any(|l| l.ends_with("S+-={1,2,3} S+={} S-={} S0={}")), "{}", out.stdout);
}

#[test]
fn repair_of_single_vertex_is_empty() {
    let out = run(Command::Repair, "digraph 1\n", &Options::default());
    assert_eq!((out.stdout.as_str(), out.code), ("", exit::OK));
}

#[test]
fn repair_script_has_one_line_per_brute_force_edit() {
    let oracle = Oracle::default();
    for g in oracle.enumerate_digraphs(3).unwrap() {
        let brute = oracle.brute_splittance(&g).unwrap();
        let out = run(Command::Repair, &digraph_text(&g), &Options { oracle: true, ..Options::default() });
        assert_eq!(out.code, exit::OK, "{}", out.stderr);
        assert_eq!(out.stdout.lines().count() as u64, brute);
    }
}

#[test]
fn repaired_script_applies_and_then_vanishes() {
    let text = std::fs::read_to_string(fixture("cycle4.digraph")).unwrap();
    let out = run(Command::Repair, &text, &Options::default());
    let mut g = match splitkit_cli::parse(&text).unwrap() {
        splitkit_cli::InputDocument::Digraph(g) => g,
        _ => unreachable!(),
    };
    let mut edits = splitkit::EditSet::default();
    for line in out.stdout.lines() {
        let parts: Vec<&str> = line.split(' ').collect();
        let arc = (parts[1].parse::<usize>().unwrap() - 1, parts[2].parse::<usize>().unwrap() - 1);
        match parts[0] {
            "+" => edits.add.insert(arc),
            "-" => edits.remove.insert(arc),
            op => panic!("unknown op {op}"),
        };
    }
    g = edits.apply(&g);
    let again = run(Command::Repair, &digraph_text(&g), &Options::default());
    assert_eq!((again.stdout.as_str(), again.code), ("", exit::OK));
}

#[test]
fn oracle_flag_agrees_on_every_small_digraph() {
    let oracle = Oracle::default();
    let opts = Options { oracle: true, ..Options::default() };
    for n in 1..=3 {
        for g in oracle.enumerate_digraphs(n).unwrap() {
            let text = digraph_text(&g);
            for cmd in [Command::Check, Command::Matrix, Command::Partitions] {
                let out = run(cmd, &text, &opts);
                assert!(out.code <= exit::NOT_SPLIT, "{cmd:?} on {text}: {}", out.stderr);
                assert!(out.stderr.is_empty(), "{}", out.stderr);
            }
            let seq = sequence_text(&degree_sequence(&g));
            assert_eq!(run(Command::Check, &seq, &opts).code, run(Command::Check, &text, &opts).code);
        }
    }
}

#[test]
fn oracle_over_budget_is_skipped_with_a_note() {
    let text = std::fs::read_to_string(fixture("ex1.digraph")).unwrap();
    let out = run(Command::Repair, &text, &Options { oracle: true, ..Options::default() });
    assert_eq!(out.code, exit::OK);
    assert!(out.stderr.starts_with("oracle: skipped"), "{}", out.stderr);
}

#[test]
fn oracle_budget_env_var() {
    let path = fixture("ex1.digraph");
    let out = Process::new(env!("CARGO_BIN_EXE_splitkit"))
        .args(["repair", "--oracle", path.to_str().unwrap()])
        .env("SPLITKIT_ORACLE_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty(), "{}", String::from_utf8_lossy(&out.stderr));

    let out = Process::new(env!("CARGO_BIN_EXE_splitkit"))
        .args(["check", path.to_str().unwrap()])
        .env("SPLITKIT_ORACLE_MAX_N", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_formats() {
    let text = std::fs::read_to_string(fixture("ex1.seq")).unwrap();
    let csv = Options { format: Some(Format::Csv), ..Options::default() };
    let out = run(Command::Partitions, &text, &csv);
    assert_eq!(out.stdout.lines().next(), Some("k,l,S+-,S+,S-,S0"));
    assert!(out.stdout.contains("\n2,3,2 3,,5,1 4\n"));
    let out = run(Command::Repair, "digraph 4\n1 2\n2 3\n3 4\n4 1\n", &csv);
    assert_eq!(out.stdout, "op,u,v\n-,3,4\n");
    let kv = Options { format: Some(Format::Kv), extras: true, ..Options::default() };
    let out = run(Command::Matrix, "seq\n0 0\n", &kv);
    assert_eq!(out.stdout, "row_0=0,0\nrow_1=0,0\ns_bar=0,0\ns_under=0,0\nm_bar=1,1\nm_under=1,1\n");
}

#[test]
fn exit_codes_across_commands() {
    let cases: &[(&str, &str, i32)] = &[
        ("check", "ex1.seq", 0),
        ("check", "cycle4.digraph", 1),
        ("check", "malformed.seq", 2),
        ("check", "not_digraphic.seq", 3),
        ("check", "out_of_range.seq", 3),
        ("matrix", "ex1.seq", 0),
        ("matrix", "not_digraphic.seq", 0),
        ("matrix", "malformed.seq", 2),
        ("matrix", "out_of_range.seq", 3),
        ("partitions", "ex1.seq", 0),
        ("partitions", "cycle4.digraph", 1),
        ("partitions", "not_digraphic.seq", 3),
        ("repair", "ex1.digraph", 0),
        ("repair", "ex1.seq", 2),
        ("repair", "malformed.seq", 2),
    ];
    for &(cmd, file, code) in cases {
        let out = splitkit(&[cmd, fixture(file).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(code), "{cmd} {file}");
    }
    assert_eq!(splitkit(&["check"]).status.code(), Some(2));
    assert_eq!(splitkit(&["check", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(splitkit(&["frobnicate", "x"]).status.code(), Some(2));
}

#[test]
fn malformed_digraphs_are_usage_errors() {
    for text in ["digraph 3\n1 4\n", "digraph 3\n2 2\n", "digraph 3\n1 2\n1 2\n", "digraph\n"] {
        assert_eq!(run(Command::Check, text, &Options::default()).code, exit::USAGE, "{text}");
    }
    assert_eq!(run(Command::Check, "seq\n-1 0\n0 0\n", &Options::default()).code, exit::INVALID);
}

#[test]
fn partitions_report_one_line_per_noncorner_zero() {
    let mut sampler = Sampler::new(77);
    for n in 1..=7 {
        for _ in 0..20 {
            let d = degree_sequence(&sampler.digraph(n));
            let out = run(Command::Partitions, &sequence_text(&d), &Options::default());
            let zeros = splittance_matrix(&d).noncorner_zeros();
            assert_eq!(out.stdout.lines().count(), zeros.len());
            assert_eq!(out.code == exit::OK, !zeros.is_empty());
            for (line, (k, l)) in out.stdout.lines().zip(zeros) {
                assert!(line.starts_with(&format!("k={k} l={l} ")), "{line}");
            }
        }
    }
    // Blocks print in the fixed order S+-, S+, S-, S0.
    assert_eq!(Block::ALL, [Block::PlusMinus, Block::Plus, Block::Minus, Block::Zero]);
}
