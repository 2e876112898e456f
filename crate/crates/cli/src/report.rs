//! Output rows: TSV with a fixed column order, or one JSON object per row.

use std::io::{self, Write};

use denseregion::{Density, SubstringMatch};
use serde::Serialize;

pub const COLUMNS: [&str; 8] = [
    "record", "problem", "start", "end", "length", "ones", "dens_num", "dens_den",
];
pub const RESIDUE_COLUMNS: [&str; 2] = ["res_start", "res_end"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub record: String,
    pub problem: String,
    pub start: usize,
    pub end: usize,
    pub length: usize,
    pub ones: usize,
    pub dens_num: Option<u64>,
    pub dens_den: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub res_start: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub res_end: Option<usize>,
}

impl Row {
    pub fn matched(record: &str, problem: &str, m: &SubstringMatch) -> Self {
        Row {
            record: record.to_string(),
            problem: problem.to_string(),
            start: m.a,
            end: m.b,
            length: m.length,
            ones: m.ones,
            dens_num: Some(m.density.num),
            dens_den: Some(m.density.den),
            res_start: None,
            res_end: None,
        }
    }

    /// The "no solution" row.
    pub fn none(record: &str, problem: &str) -> Self {
        Row {
            record: record.to_string(),
            problem: problem.to_string(),
            start: 0,
            end: 0,
            length: 0,
            ones: 0,
            dens_num: None,
            dens_den: None,
            res_start: None,
            res_end: None,
        }
    }

    /// Summary after maximal matches: `length` holds the count `k`; the
    /// span and density cover all matches together.
    pub fn maximal_summary(record: &str, matches: &[SubstringMatch]) -> Self {
        let mut row = Row::none(record, "maximal_k");
        row.length = matches.len();
        if let (Some(first), Some(last)) = (matches.first(), matches.last()) {
            let ones: usize = matches.iter().map(|m| m.ones).sum();
            let total: usize = matches.iter().map(|m| m.length).sum();
            let d = Density::new(ones as u64, total as u64);
            row.start = first.a;
            row.end = last.b;
            row.ones = ones;
            row.dens_num = Some(d.num);
            row.dens_den = Some(d.den);
        }
        row
    }

    /// Adds residue coordinates for the dinucleotide mapping: mapped
    /// positions `[a, b]` cover residues `[a, b + 1]`.
    pub fn with_residues(mut self) -> Self {
        let (start, end) = if self.start == 0 {
            (0, 0)
        } else {
            (self.start, self.end + 1)
        };
        self.res_start = Some(start);
        self.res_end = Some(end);
        self
    }

    pub fn write_tsv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        let na = |v: Option<u64>| v.map_or_else(|| "NA".to_string(), |v| v.to_string());
        write!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.record,
            self.problem,
            self.start,
            self.end,
            self.length,
            self.ones,
            na(self.dens_num),
            na(self.dens_den)
        )?;
        if let (Some(s), Some(e)) = (self.res_start, self.res_end) {
            write!(out, "\t{s}\t{e}")?;
        }
        writeln!(out)
    }

    pub fn write_json<W: Write>(&self, out: &mut W) -> io::Result<()> {
        serde_json::to_writer(&mut *out, self)?;
        writeln!(out)
    }
}

pub fn write_header<W: Write>(out: &mut W, residues: bool) -> io::Result<()> {
    let mut cols: Vec<&str> = COLUMNS.to_vec();
    if residues {
        cols.extend(RESIDUE_COLUMNS);
    }
    writeln!(out, "{}", cols.join("\t"))
}
