use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::thread;

use denseregion::oracle::Oracle;
use denseregion::{
    longest_in_range, map_residues, max_disjoint, parse_bits, parse_fraction, shortest_in_range,
    validate_bounds, AmbiguityPolicy, BinarySequence, FastaReader, LengthConstraint, MappingMode,
    MappingPolicy, SubstringMatch,
};

use crate::report::{write_header, Row};
use crate::{Ambiguous, Failure, Format, Map, Problem, ScanArgs};

/// Validated run settings.
struct Config {
    format: Format,
    policy: MappingPolicy,
    theta: (i64, i64, i64, i64),
    problem: Problem,
    constraint: Option<LengthConstraint>,
    json: bool,
    header: bool,
    threads: usize,
    oracle: bool,
}

struct Record {
    id: String,
    residues: Vec<u8>,
}

struct Outcome {
    rows: Vec<Row>,
    ambiguous: usize,
}

fn configure(args: &ScanArgs) -> Result<Config, Failure> {
    let frac = |s: &str| parse_fraction(s).map_err(|e| Failure::usage(e.to_string()));
    let (c1, d1) = frac(&args.theta1)?;
    let (c2, d2) = frac(&args.theta2)?;
    // Range and order do not depend on the input; denominators are checked
    // per record once its length is known.
    validate_bounds(c1, d1, c2, d2, usize::MAX).map_err(|e| Failure::usage(e.to_string()))?;

    if args.format == Format::Bits && args.map.is_some() {
        return Err(Failure::usage("--map applies only to --format fasta"));
    }
    let lengths = args.min_len.is_some() || args.max_len.is_some();
    if lengths && args.problem == Problem::Longest {
        return Err(Failure::usage(
            "--min-len/--max-len apply only to --problem shortest or maximal",
        ));
    }
    let constraint = if lengths {
        Some(
            LengthConstraint::new(args.min_len.unwrap_or(1), args.max_len)
                .map_err(|e| Failure::usage(e.to_string()))?,
        )
    } else {
        None
    };
    if args.threads == 0 {
        return Err(Failure::usage("--threads must be at least 1"));
    }

    let mode = match (args.format, args.map.unwrap_or(Map::Gc)) {
        (Format::Bits, _) | (Format::Fasta, Map::Raw) => MappingMode::Raw,
        (Format::Fasta, Map::Gc) => MappingMode::Gc,
        (Format::Fasta, Map::Cpg) => MappingMode::Cpg,
    };
    let ambiguous = match args.ambiguous {
        Ambiguous::Zero => AmbiguityPolicy::Zero,
        Ambiguous::Error => AmbiguityPolicy::Error,
    };
    Ok(Config {
        format: args.format,
        policy: MappingPolicy { mode, ambiguous },
        theta: (c1, d1, c2, d2),
        problem: args.problem,
        constraint,
        json: args.json,
        header: args.header,
        threads: args.threads,
        oracle: args.oracle,
    })
}

pub fn run(args: &ScanArgs) -> Result<(), Failure> {
    let config = configure(args)?;
    let source = args.input.as_deref().unwrap_or("-");
    let reader: Box<dyn BufRead> = if source == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let file = File::open(source).map_err(|e| Failure::input(format!("{source}: {e}")))?;
        Box::new(BufReader::with_capacity(1 << 16, file))
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let write_err = |e: io::Error| Failure::input(format!("writing output: {e}"));

    if config.header && !config.json {
        write_header(&mut out, config.policy.mode == MappingMode::Cpg).map_err(write_err)?;
    }

    match config.format {
        Format::Bits => {
            let seq = parse_bits(reader).map_err(|e| Failure::input(format!("{source}: {e}")))?;
            let rows = solve(&config, "-", &seq)?;
            emit(&config, &rows, &mut out).map_err(write_err)?;
        }
        Format::Fasta => {
            let mut records = FastaReader::new(reader);
            loop {
                let mut batch = Vec::with_capacity(config.threads);
                for rec in records.by_ref().take(config.threads) {
                    let rec = rec.map_err(|e| Failure::input(format!("{source}: {e}")))?;
                    batch.push(Record {
                        id: rec.id,
                        residues: rec.residues,
                    });
                }
                if batch.is_empty() {
                    break;
                }
                for (rec, outcome) in batch.iter().zip(process(&config, &batch)) {
                    let outcome = outcome?;
                    if outcome.ambiguous > 0 {
                        eprintln!(
                            "warning: record {}: {} ambiguous position(s) mapped to 0",
                            rec.id, outcome.ambiguous
                        );
                    }
                    emit(&config, &outcome.rows, &mut out).map_err(write_err)?;
                }
            }
        }
    }
    out.flush().map_err(write_err)
}

/// Maps and solves a batch, one record per worker, keeping input order.
fn process(config: &Config, batch: &[Record]) -> Vec<Result<Outcome, Failure>> {
    if batch.len() == 1 {
        return vec![process_one(config, &batch[0])];
    }
    thread::scope(|s| {
        let handles: Vec<_> = batch
            .iter()
            .map(|rec| s.spawn(move || process_one(config, rec)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn process_one(config: &Config, rec: &Record) -> Result<Outcome, Failure> {
    let mapped = map_residues(&rec.residues, config.policy)
        .map_err(|e| Failure::input(format!("record {}: {e}", rec.id)))?;
    let mut rows = solve(config, &rec.id, &mapped.sequence)?;
    if config.policy.mode == MappingMode::Cpg {
        rows = rows.into_iter().map(Row::with_residues).collect();
    }
    Ok(Outcome {
        rows,
        ambiguous: mapped.ambiguous,
    })
}

fn solve(config: &Config, record: &str, seq: &BinarySequence) -> Result<Vec<Row>, Failure> {
    let context = |e: denseregion::Error| Failure::input(format!("record {record}: {e}"));
    let (c1, d1, c2, d2) = config.theta;
    let bounds = validate_bounds(c1, d1, c2, d2, seq.len()).map_err(context)?;
    let name = config.problem.as_str();
    let single = |m: Option<SubstringMatch>| {
        vec![m.map_or_else(
            || Row::none(record, name),
            |m| Row::matched(record, name, &m),
        )]
    };
    let oracle = Oracle::default();
    Ok(match config.problem {
        Problem::Longest if config.oracle => single(oracle.longest(seq, &bounds).map_err(context)?),
        Problem::Longest => single(longest_in_range(seq, &bounds)),
        Problem::Shortest if config.oracle => single(
            oracle
                .shortest(seq, &bounds, config.constraint)
                .map_err(context)?,
        ),
        Problem::Shortest => single(shortest_in_range(seq, &bounds, config.constraint)),
        Problem::Maximal => {
            let set = if config.oracle {
                oracle
                    .max_disjoint(seq, &bounds, config.constraint)
                    .map_err(context)?
            } else {
                max_disjoint(seq, &bounds, config.constraint)
            };
            let mut rows: Vec<Row> = set
                .matches
                .iter()
                .map(|m| Row::matched(record, name, m))
                .collect();
            rows.push(Row::maximal_summary(record, &set.matches));
            rows
        }
    })
}

fn emit<W: Write>(config: &Config, rows: &[Row], out: &mut W) -> io::Result<()> {
    for row in rows {
        if config.json {
            row.write_json(out)?;
        } else {
            row.write_tsv(out)?;
        }
    }
    Ok(())
}
