//! FASTA and raw bit-string input, and nucleotide-to-bit mappings.

use std::io::BufRead;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequence::BinarySequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    pub id: String,
    pub description: String,
    pub residues: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MappingMode {
    #[default]
    Gc,
    Cpg,
    Raw,
}

impl FromStr for MappingMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "gc" => Ok(MappingMode::Gc),
            "cpg" => Ok(MappingMode::Cpg),
            "raw" => Ok(MappingMode::Raw),
            other => Err(format!("unknown mapping {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AmbiguityPolicy {
    #[default]
    Zero,
    Error,
}

impl FromStr for AmbiguityPolicy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "zero" => Ok(AmbiguityPolicy::Zero),
            "error" => Ok(AmbiguityPolicy::Error),
            other => Err(format!("unknown ambiguity policy {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MappingPolicy {
    pub mode: MappingMode,
    pub ambiguous: AmbiguityPolicy,
}

/// A mapped sequence and the number of ambiguous positions set to 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mapped {
    pub sequence: BinarySequence,
    pub ambiguous: usize,
}

/// Streaming FASTA reader yielding one record at a time.
pub struct FastaReader<R> {
    reader: R,
    line: String,
    line_no: usize,
    pending: Option<(String, String, usize)>,
    done: bool,
}

impl<R: BufRead> FastaReader<R> {
    pub fn new(reader: R) -> Self {
        FastaReader {
            reader,
            line: String::new(),
            line_no: 0,
            pending: None,
            done: false,
        }
    }

    fn read_line(&mut self) -> Result<bool> {
        self.line.clear();
        let n = self.reader.read_line(&mut self.line)?;
        if n > 0 {
            self.line_no += 1;
        }
        Ok(n > 0)
    }

    fn header(&self) -> Result<(String, String, usize)> {
        let text = self.line[1..].trim();
        let (id, desc) = match text.split_once(char::is_whitespace) {
            Some((id, desc)) => (id, desc.trim()),
            None => (text, ""),
        };
        if id.is_empty() {
            return Err(Error::MalformedFasta {
                line: self.line_no,
                reason: "header has no identifier".into(),
            });
        }
        Ok((id.to_string(), desc.to_string(), self.line_no))
    }

    fn next_record(&mut self) -> Result<Option<FastaRecord>> {
        if self.pending.is_none() {
            loop {
                if !self.read_line()? {
                    self.done = true;
                    return Ok(None);
                }
                if self.line.starts_with('>') {
                    self.pending = Some(self.header()?);
                    break;
                }
                if !self.line.trim().is_empty() {
                    return Err(Error::MalformedFasta {
                        line: self.line_no,
                        reason: "sequence data before the first header".into(),
                    });
                }
            }
        }
        let (id, description, header_line) = self.pending.take().expect("header read");
        let mut residues = Vec::new();
        loop {
            if !self.read_line()? {
                self.done = true;
                break;
            }
            if self.line.starts_with('>') {
                self.pending = Some(self.header()?);
                break;
            }
            residues.extend(self.line.bytes().filter(|b| !b.is_ascii_whitespace()));
        }
        if residues.is_empty() {
            return Err(Error::MalformedFasta {
                line: header_line,
                reason: format!("record {id:?} has no sequence"),
            });
        }
        Ok(Some(FastaRecord {
            id,
            description,
            residues,
        }))
    }
}

impl<R: BufRead> Iterator for FastaReader<R> {
    type Item = Result<FastaRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done && self.pending.is_none() {
            return None;
        }
        match self.next_record() {
            Ok(Some(r)) => Some(Ok(r)),
            Ok(None) => None,
            Err(e) => {
                self.done = true;
                self.pending = None;
                Some(Err(e))
            }
        }
    }
}

/// Reads every record of a FASTA stream.
pub fn parse_fasta<R: BufRead>(reader: R) -> Result<Vec<FastaRecord>> {
    FastaReader::new(reader).collect()
}

fn gc_bit(residue: u8) -> Option<u8> {
    match residue.to_ascii_uppercase() {
        b'G' | b'C' => Some(1),
        b'A' | b'T' => Some(0),
        _ => None,
    }
}

fn is_acgt(residue: u8) -> bool {
    gc_bit(residue).is_some()
}

/// G/C → 1, A/T → 0, case-insensitive.
pub fn map_gc(residues: &[u8], policy: AmbiguityPolicy) -> Result<Mapped> {
    let mut ambiguous = 0;
    let mut digits = Vec::with_capacity(residues.len());
    for (i, &r) in residues.iter().enumerate() {
        match gc_bit(r) {
            Some(bit) => digits.push(bit),
            None => {
                if policy == AmbiguityPolicy::Error {
                    return Err(Error::AmbiguousResidue {
                        position: i + 1,
                        residue: r as char,
                    });
                }
                ambiguous += 1;
                digits.push(0);
            }
        }
    }
    Ok(Mapped {
        sequence: BinarySequence::new(digits)?,
        ambiguous,
    })
}

/// Overlapping dinucleotides: position `i` is 1 iff residues `i, i+1` are
/// `C, G`. The output has one digit fewer than the input.
pub fn map_cpg(residues: &[u8], policy: AmbiguityPolicy) -> Result<Mapped> {
    if residues.len() < 2 {
        return Err(Error::TooShort(residues.len()));
    }
    let mut ambiguous = 0;
    let mut digits = Vec::with_capacity(residues.len() - 1);
    for (i, pair) in residues.windows(2).enumerate() {
        if let Some(k) = pair.iter().position(|&r| !is_acgt(r)) {
            if policy == AmbiguityPolicy::Error {
                return Err(Error::AmbiguousResidue {
                    position: i + k + 1,
                    residue: pair[k] as char,
                });
            }
            ambiguous += 1;
            digits.push(0);
            continue;
        }
        let cg = pair[0].eq_ignore_ascii_case(&b'C') && pair[1].eq_ignore_ascii_case(&b'G');
        digits.push(cg as u8);
    }
    Ok(Mapped {
        sequence: BinarySequence::new(digits)?,
        ambiguous,
    })
}

/// Residues taken literally as `0`/`1` digits.
pub fn map_raw(residues: &[u8]) -> Result<Mapped> {
    let mut digits = Vec::with_capacity(residues.len());
    for (offset, &r) in residues.iter().enumerate() {
        match r {
            b'0' | b'1' => digits.push(r - b'0'),
            _ => {
                return Err(Error::InvalidBit {
                    offset,
                    byte: r as char,
                })
            }
        }
    }
    Ok(Mapped {
        sequence: BinarySequence::new(digits)?,
        ambiguous: 0,
    })
}

pub fn map_residues(residues: &[u8], policy: MappingPolicy) -> Result<Mapped> {
    match policy.mode {
        MappingMode::Gc => map_gc(residues, policy.ambiguous),
        MappingMode::Cpg => map_cpg(residues, policy.ambiguous),
        MappingMode::Raw => map_raw(residues),
    }
}

/// Reads `0`/`1` characters, skipping whitespace. Offsets in errors count
/// every byte of the stream from 0.
pub fn parse_bits<R: BufRead>(mut reader: R) -> Result<BinarySequence> {
    let mut digits = Vec::new();
    let mut offset = 0;
    loop {
        let buf = reader.fill_buf()?;
        if buf.is_empty() {
            break;
        }
        for &byte in buf {
            match byte {
                b'0' | b'1' => digits.push(byte - b'0'),
                b if b.is_ascii_whitespace() => {}
                b => {
                    return Err(Error::InvalidBit {
                        offset,
                        byte: b as char,
                    })
                }
            }
            offset += 1;
        }
        let len = buf.len();
        reader.consume(len);
    }
    BinarySequence::new(digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(m: &Mapped) -> String {
        m.sequence.to_string()
    }

    #[test]
    fn single_record() {
        let recs = parse_fasta(">chr1 test\nACGT\nACGT\n".as_bytes()).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].id, "chr1");
        assert_eq!(recs[0].description, "test");
        assert_eq!(recs[0].residues, b"ACGTACGT");
    }

    #[test]
    fn records_in_order_with_crlf_and_blank_lines() {
        let recs = parse_fasta(">a\r\nAC GT\r\n\n>b desc here\nGG\n".as_bytes()).unwrap();
        let ids: Vec<_> = recs.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["a", "b"]);
        assert_eq!(recs[0].residues, b"ACGT");
        assert_eq!(recs[1].description, "desc here");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_fasta("ACGT".as_bytes()),
            Err(Error::MalformedFasta { line: 1, .. })
        ));
        assert!(matches!(
            parse_fasta(">a\n>b\nAC\n".as_bytes()),
            Err(Error::MalformedFasta { line: 1, .. })
        ));
        assert!(matches!(
            parse_fasta(">a\nAC\n>b\n".as_bytes()),
            Err(Error::MalformedFasta { line: 3, .. })
        ));
        assert_eq!(parse_fasta("".as_bytes()).unwrap(), vec![]);
    }

    #[test]
    fn gc_mapping() {
        assert_eq!(
            bits(&map_gc(b"GCAT", AmbiguityPolicy::Zero).unwrap()),
            "1100"
        );
        let m = map_gc(b"gcNat", AmbiguityPolicy::Zero).unwrap();
        assert_eq!((bits(&m).as_str(), m.ambiguous), ("11000", 1));
        assert_eq!(
            map_gc(b"gcNat", AmbiguityPolicy::Error),
            Err(Error::AmbiguousResidue {
                position: 3,
                residue: 'N'
            })
        );
    }

    #[test]
    fn cpg_mapping() {
        assert_eq!(
            bits(&map_cpg(b"ACGT", AmbiguityPolicy::Zero).unwrap()),
            "010"
        );
        assert_eq!(
            bits(&map_cpg(b"CGCG", AmbiguityPolicy::Zero).unwrap()),
            "101"
        );
        assert_eq!(bits(&map_cpg(b"cg", AmbiguityPolicy::Zero).unwrap()), "1");
        let m = map_cpg(b"CN", AmbiguityPolicy::Zero).unwrap();
        assert_eq!((bits(&m).as_str(), m.ambiguous), ("0", 1));
        assert!(matches!(
            map_cpg(b"CN", AmbiguityPolicy::Error),
            Err(Error::AmbiguousResidue { position: 2, .. })
        ));
        assert_eq!(
            map_cpg(b"C", AmbiguityPolicy::Zero),
            Err(Error::TooShort(1))
        );
    }

    #[test]
    fn raw_mapping() {
        assert_eq!(bits(&map_raw(b"0110").unwrap()), "0110");
        assert!(matches!(
            map_raw(b"01a"),
            Err(Error::InvalidBit { offset: 2, .. })
        ));
    }

    #[test]
    fn bits_parsing() {
        assert_eq!(
            parse_bits("1100010101".as_bytes()).unwrap().to_string(),
            "1100010101"
        );
        assert_eq!(
            parse_bits("1 1 0\n0".as_bytes()).unwrap().to_string(),
            "1100"
        );
        assert_eq!(
            parse_bits("10x".as_bytes()),
            Err(Error::InvalidBit {
                offset: 2,
                byte: 'x'
            })
        );
    }
}
