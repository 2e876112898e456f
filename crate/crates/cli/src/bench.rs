//! Synthetic timing runs. Peak heap is read from the counting allocator and
//! is an estimate: it covers Rust heap allocations only.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::io::{self, Write};
use std::sync::atomic::Ordering;
use std::time::Instant;

use denseregion::{
    longest_in_range, max_disjoint, parse_fraction, shortest_in_range, validate_bounds,
    BinarySequence,
};
use serde::Serialize;

use crate::{BenchArgs, Failure, Problem, HEAP_CURRENT, HEAP_PEAK};

#[derive(Debug, Serialize)]
struct BenchRow {
    n: usize,
    problem: &'static str,
    seconds: f64,
    peak_heap_bytes_est: usize,
    bytes_per_element: f64,
    seq_hash: String,
    /// Region length for longest and shortest, match count for maximal.
    result: usize,
}

pub fn run(args: &BenchArgs) -> Result<(), Failure> {
    let frac = |s: &str| parse_fraction(s).map_err(|e| Failure::usage(e.to_string()));
    let (pn, pd) = frac(&args.p_ones)?;
    if pn < 0 || pd <= 0 || pn > pd {
        return Err(Failure::usage(format!(
            "--p-ones {pn}/{pd} must lie in [0, 1]"
        )));
    }
    let (c1, d1) = frac(&args.theta1)?;
    let (c2, d2) = frac(&args.theta2)?;
    if args.sizes.contains(&0) {
        return Err(Failure::usage("--sizes entries must be positive"));
    }
    let max_n = args.sizes.iter().copied().max().unwrap_or(1);
    validate_bounds(c1, d1, c2, d2, max_n).map_err(|e| Failure::usage(e.to_string()))?;

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let write_err = |e: io::Error| Failure::input(format!("writing output: {e}"));
    if !args.json {
        writeln!(
            out,
            "n\tproblem\tseconds\tpeak_heap_bytes_est\tbytes_per_element\tseq_hash\tresult"
        )
        .map_err(write_err)?;
    }

    // Last time per problem, for the ratio between consecutive sizes.
    let mut previous: Vec<(Problem, f64)> = Vec::new();
    for &n in &args.sizes {
        for &problem in &args.problem {
            let row = measure(
                n,
                problem,
                args.seed,
                (pn as u64, pd as u64),
                (c1, d1, c2, d2),
            )?;
            if args.json {
                serde_json::to_writer(&mut out, &row).map_err(|e| write_err(e.into()))?;
                writeln!(out).map_err(write_err)?;
            } else {
                writeln!(
                    out,
                    "{}\t{}\t{:.6}\t{}\t{:.2}\t{}\t{}",
                    row.n,
                    row.problem,
                    row.seconds,
                    row.peak_heap_bytes_est,
                    row.bytes_per_element,
                    row.seq_hash,
                    row.result
                )
                .map_err(write_err)?;
            }
            match previous.iter_mut().find(|(p, _)| *p == problem) {
                Some((_, t)) => {
                    eprintln!("{}: time ratio {:.2}", problem.as_str(), row.seconds / *t);
                    *t = row.seconds;
                }
                None => previous.push((problem, row.seconds)),
            }
        }
    }
    Ok(())
}

fn measure(
    n: usize,
    problem: Problem,
    seed: u64,
    (pn, pd): (u64, u64),
    (c1, d1, c2, d2): (i64, i64, i64, i64),
) -> Result<BenchRow, Failure> {
    let seq = BinarySequence::random(n, seed, pn, pd).map_err(|e| Failure::usage(e.to_string()))?;
    let mut hasher = DefaultHasher::new();
    seq.digits().hash(&mut hasher);
    let bounds = validate_bounds(c1, d1, c2, d2, n.max(d1 as usize).max(d2 as usize))
        .map_err(|e| Failure::usage(e.to_string()))?;

    let base = HEAP_CURRENT.load(Ordering::Relaxed);
    HEAP_PEAK.store(base, Ordering::Relaxed);
    let start = Instant::now();
    let result = match problem {
        Problem::Longest => longest_in_range(&seq, &bounds).map_or(0, |m| m.length),
        Problem::Shortest => shortest_in_range(&seq, &bounds, None).map_or(0, |m| m.length),
        Problem::Maximal => max_disjoint(&seq, &bounds, None).k(),
    };
    let seconds = start.elapsed().as_secs_f64();
    // Count the input sequence along with the solver's working memory.
    let peak = HEAP_PEAK.load(Ordering::Relaxed) - base + seq.len();
    Ok(BenchRow {
        n,
        problem: problem.as_str(),
        seconds,
        peak_heap_bytes_est: peak,
        bytes_per_element: peak as f64 / n as f64,
        seq_hash: format!("{:016x}", hasher.finish()),
        result,
    })
}
