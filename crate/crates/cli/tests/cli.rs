use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_denseregion"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const BITS: &[&str] = &[
    "scan", "--format", "bits", "--theta1", "1/4", "--theta2", "1/3",
];

fn bits<'a>(extra: &[&'a str]) -> Vec<&'a str> {
    BITS.iter().chain(extra).copied().collect()
}

#[test]
fn worked_example_longest() {
    let o = run(BITS, "1100010101\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-\tlongest\t3\t9\t7\t2\t2\t7\n");
}

#[test]
fn output_is_deterministic() {
    let a = run(&bits(&["--problem", "maximal"]), "1100010101");
    let b = run(&bits(&["--problem", "maximal"]), "1100010101");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn worked_example_maximal() {
    let o = run(&bits(&["--problem", "maximal", "--header"]), "1100010101");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "record\tproblem\tstart\tend\tlength\tones\tdens_num\tdens_den\n\
         -\tmaximal\t2\t4\t3\t1\t1\t3\n\
         -\tmaximal\t5\t7\t3\t1\t1\t3\n\
         -\tmaximal_k\t2\t7\t2\t2\t1\t3\n"
    );
}

#[test]
fn shortest_with_min_length_and_json() {
    let o = run(
        &bits(&["--problem", "shortest", "--min-len", "4", "--json"]),
        "1100010101",
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["length"], 4);
    assert_eq!(
        (v["dens_num"].as_u64(), v["dens_den"].as_u64()),
        (Some(1), Some(4))
    );
}

#[test]
fn no_solution_is_na_and_succeeds() {
    let o = run(BITS, "0000");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-\tlongest\t0\t0\t0\t0\tNA\tNA\n");
}

#[test]
fn oracle_flag_agrees() {
    let fast = run(&bits(&["--problem", "shortest"]), "0011101100110");
    let slow = run(
        &bits(&["--problem", "shortest", "--oracle"]),
        "0011101100110",
    );
    assert_eq!(fast.stdout, slow.stdout);
}

#[test]
fn fasta_records_keep_order_across_threads() {
    let mut fasta = String::new();
    for i in 0..9 {
        fasta.push_str(&format!(">r{i} sample\n{}\n", "ACGT".repeat(i + 1)));
        fasta.push_str("GGCC\n");
    }
    let args = [
        "scan",
        "--theta1",
        "1/3",
        "--theta2",
        "2/3",
        "--threads",
        "4",
    ];
    let o = run(&args, &fasta);
    assert_eq!(o.status.code(), Some(0));
    let ids: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split('\t').next().unwrap().to_string())
        .collect();
    let want: Vec<String> = (0..9).map(|i| format!("r{i}")).collect();
    assert_eq!(ids, want);
    let single = run(&["scan", "--theta1", "1/3", "--theta2", "2/3"], &fasta);
    assert_eq!(single.stdout, o.stdout);
}

#[test]
fn cpg_rows_carry_residue_coordinates() {
    let o = run(
        &[
            "scan", "--map", "cpg", "--theta1", "1/3", "--theta2", "2/3", "--header",
        ],
        ">x\nACGCGTTA\n",
    );
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().ends_with("\tres_start\tres_end"));
    assert_eq!(lines.next().unwrap(), "x\tlongest\t1\t6\t6\t2\t1\t3\t1\t7");
}

#[test]
fn input_file_and_ambiguity_warning() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, ">chr1 test\ngcNat\nGC").unwrap();
    let path = file.path().to_str().unwrap();
    let o = run(
        &[
            "scan", "--input", path, "--theta1", "1/4", "--theta2", "1/3",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1 ambiguous"));
    let strict = run(
        &[
            "scan",
            "--input",
            path,
            "--theta1",
            "1/4",
            "--theta2",
            "1/3",
            "--ambiguous",
            "error",
        ],
        "",
    );
    assert_eq!(strict.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&strict.stderr).contains("position 3"));
}

#[test]
fn input_errors_exit_3() {
    for (args, input) in [
        (
            vec!["scan", "--theta1", "1/4", "--theta2", "1/3"],
            ">a\n>b\nAC\n",
        ),
        (vec!["scan", "--theta1", "1/4", "--theta2", "1/3"], "ACGT\n"),
        (BITS.to_vec(), "10x"),
        (BITS.to_vec(), "11"),
        (
            vec![
                "scan",
                "--input",
                "/nonexistent/file.fa",
                "--theta1",
                "1/4",
                "--theta2",
                "1/3",
            ],
            "",
        ),
    ] {
        let o = run(&args, input);
        assert_eq!(o.status.code(), Some(3), "{args:?} {input:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec![
            "scan", "--format", "bits", "--map", "gc", "--theta1", "1/4", "--theta2", "1/3",
        ],
        vec!["scan", "--theta1", "1/3", "--theta2", "1/4"],
        vec!["scan", "--theta1", "0.25", "--theta2", "1/3"],
        vec![
            "scan",
            "--theta1",
            "1/4",
            "--theta2",
            "1/3",
            "--min-len",
            "3",
        ],
        vec![
            "scan",
            "--theta1",
            "1/4",
            "--theta2",
            "1/3",
            "--problem",
            "shortest",
            "--min-len",
            "5",
            "--max-len",
            "2",
        ],
        vec!["scan", "--theta1", "1/4"],
        vec!["frobnicate"],
    ] {
        let o = run(&args, "1100010101");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bench_is_deterministic() {
    let args = [
        "bench",
        "--sizes",
        "2000,20000",
        "--seed",
        "5",
        "--problem",
        "longest,shortest,maximal",
    ];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.status.code(), Some(0));
    let hashes = |o: &Output| -> Vec<String> {
        stdout(o)
            .lines()
            .skip(1)
            .map(|l| l.split('\t').nth(5).unwrap().to_string())
            .collect()
    };
    assert_eq!(hashes(&a).len(), 6);
    assert_eq!(hashes(&a), hashes(&b));
    assert!(String::from_utf8_lossy(&a.stderr).contains("longest: time ratio"));
}
