//! File- and stdin-backed data sources.
//!
//! Both readers consume newline-delimited text: one value per line, blank
//! lines skipped, surrounding whitespace ignored. A line that fails to
//! parse aborts the run with an error naming the 1-based line number.
//! Bernoulli mode accepts exactly `0` or `1`; unit-interval mode accepts
//! any decimal in `[0, 1]`.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::distributions::{BernoulliSource, UnitIntervalSource};
use crate::error::{Error, Result};

/// Reads the next non-blank line, returning `(line_number, trimmed_text)`
/// or `None` at end of input.
fn next_line<R: BufRead>(reader: &mut R, line_no: &mut u64) -> Result<Option<(u64, String)>> {
    let mut buf = String::new();
    loop {
        buf.clear();
        let n = reader.read_line(&mut buf)?;
        if n == 0 {
            return Ok(None);
        }
        *line_no += 1;
        let trimmed = buf.trim();
        if !trimmed.is_empty() {
            return Ok(Some((*line_no, trimmed.to_owned())));
        }
    }
}

/// Bernoulli stream backed by a line reader: each line must be `0` or `1`.
#[derive(Debug)]
pub struct StreamBernoulli<R: BufRead> {
    reader: R,
    line_no: u64,
    draws: u64,
}

impl<R: BufRead> StreamBernoulli<R> {
    pub fn new(reader: R) -> Self {
        Self {
            reader,
            line_no: 0,
            draws: 0,
        }
    }
}

impl StreamBernoulli<BufReader<File>> {
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        Ok(Self::new(BufReader::new(File::open(path)?)))
    }
}

impl<R: BufRead> BernoulliSource for StreamBernoulli<R> {
    fn draw(&mut self) -> Result<bool> {
        let Some((line, text)) = next_line(&mut self.reader, &mut self.line_no)? else {
            return Err(Error::Exhausted { drawn: self.draws });
        };
        let value = match text.as_str() {
            "0" => false,
            "1" => true,
            other => {
                return Err(Error::data(
                    Some(line),
                    format!("expected 0 or 1, found {other:?}"),
                ))
            }
        };
        self.draws += 1;
        Ok(value)
    }

    fn draws(&self) -> u64 {
        self.draws
    }
}

/// `[0,1]`-valued stream backed by a line reader: each line must be a
/// decimal inside the unit interval.
#[derive(Debug)]
pub struct StreamUnitInterval<R: BufRead> {
    reader: R,
    line_no: u64,
}

impl<R: BufRead> StreamUnitInterval<R> {
    pub fn new(reader: R) -> Self {
        Self { reader, line_no: 0 }
    }
}

impl StreamUnitInterval<BufReader<File>> {
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        Ok(Self::new(BufReader::new(File::open(path)?)))
    }
}

impl<R: BufRead> UnitIntervalSource for StreamUnitInterval<R> {
    fn draw(&mut self) -> Result<f64> {
        let Some((line, text)) = next_line(&mut self.reader, &mut self.line_no)? else {
            return Err(Error::Exhausted { drawn: self.line_no });
        };
        let value: f64 = text.parse().map_err(|_| {
            Error::data(Some(line), format!("expected a decimal in [0,1], found {text:?}"))
        })?;
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::data(
                Some(line),
                format!("value {value} is outside [0,1]"),
            ));
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn bernoulli_stream_parses_and_counts() {
        let mut src = StreamBernoulli::new(Cursor::new("1\n0\n\n  1  \n"));
        assert!(src.draw().unwrap());
        assert!(!src.draw().unwrap());
        assert!(src.draw().unwrap()); // blank line skipped, whitespace trimmed
        assert_eq!(src.draws(), 3);
        assert!(matches!(src.draw(), Err(Error::Exhausted { drawn: 3 })));
    }

    #[test]
    fn bernoulli_stream_reports_offending_line() {
        let mut src = StreamBernoulli::new(Cursor::new("1\n0\ntwo\n1\n"));
        src.draw().unwrap();
        src.draw().unwrap();
        match src.draw() {
            Err(Error::Data { line, message }) => {
                assert_eq!(line, Some(3));
                assert!(message.contains("two"), "{message}");
            }
            other => panic!("expected data error, got {other:?}"),
        }
    }

    #[test]
    fn bernoulli_stream_rejects_decimals() {
        let mut src = StreamBernoulli::new(Cursor::new("0.5\n"));
        assert!(matches!(
            src.draw(),
            Err(Error::Data { line: Some(1), .. })
        ));
    }

    #[test]
    fn empty_input_exhausts_immediately() {
        let mut src = StreamBernoulli::new(Cursor::new(""));
        assert!(matches!(src.draw(), Err(Error::Exhausted { drawn: 0 })));
    }

    #[test]
    fn unit_stream_parses_decimals() {
        let mut src = StreamUnitInterval::new(Cursor::new("0.25\n1\n0\n0.999\n"));
        assert_eq!(src.draw().unwrap(), 0.25);
        assert_eq!(src.draw().unwrap(), 1.0);
        assert_eq!(src.draw().unwrap(), 0.0);
        assert_eq!(src.draw().unwrap(), 0.999);
    }

    #[test]
    fn unit_stream_rejects_out_of_range_with_line() {
        let mut src = StreamUnitInterval::new(Cursor::new("0.5\n\n1.75\n"));
        src.draw().unwrap();
        match src.draw() {
            Err(Error::Data { line, message }) => {
                assert_eq!(line, Some(3));
                assert!(message.contains("1.75"), "{message}");
            }
            other => panic!("expected data error, got {other:?}"),
        }
    }

    #[test]
    fn unit_stream_rejects_garbage_with_line() {
        let mut src = StreamUnitInterval::new(Cursor::new("abc\n"));
        assert!(matches!(
            src.draw(),
            Err(Error::Data { line: Some(1), .. })
        ));
    }
}
