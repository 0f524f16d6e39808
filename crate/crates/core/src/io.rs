//! Reading and writing key arrays in the text and binary file formats.
//!
//! Text: whitespace-separated signed decimal integers, with an optional
//! header line `# n=<N> state=<state>`. Binary: magic `IPRM`, version
//! byte 1, little-endian u64 length, then that many little-endian i64
//! values. Canonical text output is a single line of values, so a
//! text -> binary -> text round trip is byte-exact.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::array::SemanticState;

pub const MAGIC: &[u8; 4] = b"IPRM";
pub const VERSION: u8 = 1;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("header declares n={declared} but file holds {actual} values")]
    CountMismatch { declared: usize, actual: usize },
    #[error("bad magic; expected IPRM")]
    BadMagic,
    #[error("unsupported version {0}")]
    BadVersion(u8),
}

/// A parsed data file: raw values plus whatever the header declared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataFile {
    pub values: Vec<i64>,
    pub declared_state: Option<SemanticState>,
}

/// Reads either format, sniffing the binary magic.
pub fn read_file(path: &Path) -> Result<DataFile, FileError> {
    let mut f = File::open(path)?;
    let mut magic = [0u8; 4];
    let got = read_up_to(&mut f, &mut magic)?;
    if got == 4 && &magic == MAGIC {
        return read_binary_body(&mut f);
    }
    drop(f);
    read_text(path)
}

fn read_up_to(f: &mut File, buf: &mut [u8]) -> Result<usize, FileError> {
    let mut filled = 0;
    while filled < buf.len() {
        let n = f.read(&mut buf[filled..])?;
        if n == 0 {
            break;
        }
        filled += n;
    }
    Ok(filled)
}

pub fn read_text(path: &Path) -> Result<DataFile, FileError> {
    let f = File::open(path)?;
    let reader = BufReader::new(f);
    let mut values = Vec::new();
    let mut declared_n: Option<usize> = None;
    let mut declared_state: Option<SemanticState> = None;
    for line in reader.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            for field in rest.split_whitespace() {
                if let Some(v) = field.strip_prefix("n=") {
                    declared_n = Some(
                        v.parse()
                            .map_err(|_| FileError::Parse(format!("bad header n `{v}`")))?,
                    );
                } else if let Some(v) = field.strip_prefix("state=") {
                    declared_state =
                        Some(v.parse().map_err(|e: String| FileError::Parse(e))?);
                }
            }
            continue;
        }
        for tok in trimmed.split_whitespace() {
            values.push(
                tok.parse::<i64>()
                    .map_err(|_| FileError::Parse(format!("bad integer `{tok}`")))?,
            );
        }
    }
    if let Some(n) = declared_n {
        if n != values.len() {
            return Err(FileError::CountMismatch {
                declared: n,
                actual: values.len(),
            });
        }
    }
    Ok(DataFile {
        values,
        declared_state,
    })
}

fn read_binary_body(f: &mut File) -> Result<DataFile, FileError> {
    let mut ver = [0u8; 1];
    if read_up_to(f, &mut ver)? != 1 {
        return Err(FileError::Parse("truncated binary header".into()));
    }
    if ver[0] != VERSION {
        return Err(FileError::BadVersion(ver[0]));
    }
    let mut nb = [0u8; 8];
    if read_up_to(f, &mut nb)? != 8 {
        return Err(FileError::Parse("truncated binary length".into()));
    }
    let n = u64::from_le_bytes(nb) as usize;
    let mut values = Vec::with_capacity(n);
    let mut buf = [0u8; 8];
    for _ in 0..n {
        if read_up_to(f, &mut buf)? != 8 {
            return Err(FileError::Parse("truncated binary values".into()));
        }
        values.push(i64::from_le_bytes(buf));
    }
    Ok(DataFile {
        values,
        declared_state: None,
    })
}

/// Writes the canonical text form: one line of space-separated values.
pub fn write_text(path: &Path, values: &[i64]) -> Result<(), FileError> {
    let f = File::create(path)?;
    let mut w = BufWriter::new(f);
    write_text_to(&mut w, values)?;
    w.flush()?;
    Ok(())
}

pub fn write_text_to(w: &mut impl Write, values: &[i64]) -> Result<(), FileError> {
    let mut first = true;
    for v in values {
        if first {
            write!(w, "{v}")?;
            first = false;
        } else {
            write!(w, " {v}")?;
        }
    }
    writeln!(w)?;
    Ok(())
}

pub fn write_binary(path: &Path, values: &[i64]) -> Result<(), FileError> {
    let f = File::create(path)?;
    let mut w = BufWriter::new(f);
    w.write_all(MAGIC)?;
    w.write_all(&[VERSION])?;
    w.write_all(&(values.len() as u64).to_le_bytes())?;
    for v in values {
        w.write_all(&v.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}
