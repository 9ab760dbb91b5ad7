//! The `ntt-vec` text format.
//!
//! ```text
//! ntt-vec 1 <p> <n>
//! <v_0>
//! ...
//! <v_{n-1}>
//! ```
//!
//! Every line, including the last, ends with a single `\n`. Values are
//! canonical decimals (no sign, no leading zeros) in `[0, p)`, so a parsed
//! file renders back byte for byte.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldParams};

const MAGIC: &str = "ntt-vec";
const VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFile {
    pub params: FieldParams,
    pub values: Vec<FieldElement>,
}

fn malformed(line: usize, reason: impl Into<String>) -> Error {
    Error::Malformed {
        line,
        reason: reason.into(),
    }
}

fn parse_decimal(s: &str, line: usize, what: &str) -> Result<u64> {
    let canonical =
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'));
    if !canonical {
        return Err(malformed(
            line,
            format!("{what} `{s}` is not a canonical decimal"),
        ));
    }
    s.parse()
        .map_err(|_| malformed(line, format!("{what} `{s}` is out of range")))
}

impl VectorFile {
    pub fn new(params: FieldParams, values: Vec<FieldElement>) -> Self {
        Self { params, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let body = text
            .strip_suffix('\n')
            .ok_or_else(|| malformed(text.lines().count().max(1), "missing final newline"))?;
        let mut lines = body.split('\n');
        let header = lines.next().unwrap_or_default();
        let fields: Vec<&str> = header.split(' ').collect();
        if fields.len() != 4 || fields[0] != MAGIC {
            return Err(malformed(
                1,
                format!("expected `{MAGIC} {VERSION} <p> <n>`"),
            ));
        }
        if fields[1] != VERSION {
            return Err(malformed(1, format!("unsupported version `{}`", fields[1])));
        }
        let p = parse_decimal(fields[2], 1, "modulus")?;
        let params = FieldParams::new(p).map_err(|e| malformed(1, e.to_string()))?;
        let n = parse_decimal(fields[3], 1, "length")?;
        if n == 0 {
            return Err(malformed(1, "length must be positive"));
        }

        let mut values = Vec::with_capacity(n.min(1 << 24) as usize);
        for (k, line) in lines.enumerate() {
            let lineno = k + 2;
            if values.len() as u64 == n {
                return Err(malformed(lineno, format!("more than {n} data lines")));
            }
            let v = parse_decimal(line, lineno, "value")?;
            let x = params
                .element(v)
                .map_err(|_| malformed(lineno, format!("value {v} is not below {p}")))?;
            values.push(x);
        }
        if (values.len() as u64) < n {
            return Err(malformed(
                values.len() + 2,
                format!("expected {n} data lines, found {}", values.len()),
            ));
        }
        Ok(Self { params, values })
    }
}

impl FromStr for VectorFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for VectorFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{MAGIC} {VERSION} {} {}",
            self.params.modulus(),
            self.values.len()
        )?;
        for v in &self.values {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}
