//! Row serialization: JSON lines, CSV, and an aligned text table.
//!
//! Column order is fixed: `k,p,q,r,s,x,y,z,d,virtual`. Integers are written
//! in full; JSON numbers keep every digit (no float round trip).

use std::io::{self, Write};
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use pythgap_core::SequenceRow;
use serde::{Deserialize, Serialize};
use serde_json::Number;

pub const COLUMNS: [&str; 10] = ["k", "p", "q", "r", "s", "x", "y", "z", "d", "virtual"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// The JSON shape of one row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub k: i64,
    pub p: Number,
    pub q: Number,
    pub r: Number,
    pub s: Number,
    pub x: Number,
    pub y: Number,
    pub z: Number,
    pub d: Number,
    #[serde(rename = "virtual")]
    pub is_virtual: bool,
}

fn num(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("decimal integers are valid JSON numbers")
}

fn big(n: &Number) -> Result<BigInt, String> {
    BigInt::from_str(&n.to_string()).map_err(|e| format!("{n}: {e}"))
}

impl From<&SequenceRow> for Record {
    fn from(row: &SequenceRow) -> Self {
        Self {
            k: row.k,
            p: num(&row.p),
            q: num(&row.q),
            r: num(&row.r),
            s: num(&row.s),
            x: num(&row.x),
            y: num(&row.y),
            z: num(&row.z),
            d: num(&row.d),
            is_virtual: row.is_virtual,
        }
    }
}

impl Record {
    pub fn to_row(&self) -> Result<SequenceRow, String> {
        Ok(SequenceRow {
            k: self.k,
            p: big(&self.p)?,
            q: big(&self.q)?,
            r: big(&self.r)?,
            s: big(&self.s)?,
            x: big(&self.x)?,
            y: big(&self.y)?,
            z: big(&self.z)?,
            d: big(&self.d)?,
            is_virtual: self.is_virtual,
        })
    }
}

/// Parses JSON-lines output back into rows.
pub fn parse_json_lines(text: &str) -> Result<Vec<SequenceRow>, String> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str::<Record>(l).map_err(|e| e.to_string())?.to_row())
        .collect()
}

fn cells(row: &SequenceRow) -> [String; 10] {
    [
        row.k.to_string(),
        row.p.to_string(),
        row.q.to_string(),
        row.r.to_string(),
        row.s.to_string(),
        row.x.to_string(),
        row.y.to_string(),
        row.z.to_string(),
        row.d.to_string(),
        row.is_virtual.to_string(),
    ]
}

pub fn write_rows(out: &mut dyn Write, rows: &[SequenceRow], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            for row in rows {
                serde_json::to_writer(&mut *out, &Record::from(row))?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", COLUMNS.join(","))?;
            for row in rows {
                writeln!(out, "{}", cells(row).join(","))?;
            }
        }
        Format::Table => {
            let body: Vec<[String; 10]> = rows.iter().map(cells).collect();
            let mut width = COLUMNS.map(str::len);
            for line in &body {
                for (w, c) in width.iter_mut().zip(line) {
                    *w = (*w).max(c.len());
                }
            }
            let render = |line: &[String]| {
                line.iter()
                    .zip(width)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let header: Vec<String> = COLUMNS.iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", render(&header))?;
            for line in &body {
                writeln!(out, "{}", render(line))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pythgap_core::sequence::stitched_sequence;

    #[test]
    fn json_field_order_is_fixed() {
        let rows = stitched_sequence(7, 1, 1).unwrap();
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows, Format::Json).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"k\":1,\"p\":1,\"q\":2,\"r\":3,\"s\":2,\"x\":5,\"y\":12,\"z\":13,\"d\":17,\"virtual\":false}\n"
        );
    }

    #[test]
    fn large_integers_survive_json() {
        let rows = stitched_sequence(7, 60, 61).unwrap();
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows, Format::Json).unwrap();
        let text = String::from_utf8(buf).unwrap();
        for row in &rows {
            assert!(text.contains(&format!("\"z\":{},", row.z)));
        }
        assert_eq!(parse_json_lines(&text).unwrap(), rows);
    }

    #[test]
    fn csv_header_always_present() {
        let mut buf = Vec::new();
        write_rows(&mut buf, &[], Format::Csv).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "k,p,q,r,s,x,y,z,d,virtual\n");
    }
}
