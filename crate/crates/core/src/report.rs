//! Flat `key = value` reports. See `docs/report-format.md` for the grammar.

use std::fmt::{self, Write};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Str(String),
    /// Integer tuple, used for field elements and `(d, l, alpha)` rows.
    Tuple(Vec<i64>),
    List(Vec<Value>),
}

impl Value {
    pub fn str(s: impl Into<String>) -> Self {
        Value::Str(s.into())
    }

    pub fn uint(n: u64) -> Self {
        Value::Int(n as i64)
    }

    pub fn tuple<I: IntoIterator<Item = u64>>(xs: I) -> Self {
        Value::Tuple(xs.into_iter().map(|x| x as i64).collect())
    }

    /// Coefficient vector of an algebra element; each coefficient is the tuple
    /// of its coordinates over the prime field.
    pub fn element(e: &AlgebraElement) -> Self {
        let f = e.ctx().base();
        Value::List(e.coeffs().iter().map(|&c| Value::tuple(f.coeffs(c))).collect())
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            Value::Str(s) => Some(s),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Str(s) => {
                f.write_char('"')?;
                for ch in s.chars() {
                    match ch {
                        '"' => f.write_str("\\\"")?,
                        '\\' => f.write_str("\\\\")?,
                        '\n' => f.write_str("\\n")?,
                        c => f.write_char(c)?,
                    }
                }
                f.write_char('"')
            }
            Value::Tuple(xs) => {
                f.write_char('(')?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_char(')')
            }
            Value::List(xs) => {
                f.write_char('[')?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_char(']')
            }
        }
    }
}

/// Ordered list of entries. Keys are unique; insertion order is output order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

fn valid_key(key: &str) -> bool {
    !key.is_empty()
        && key.split('.').all(|seg| {
            !seg.is_empty() && seg.bytes().all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
        })
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends an entry. Panics on a malformed or repeated key: keys are
    /// chosen by the program, never by input.
    pub fn push(&mut self, key: impl Into<String>, value: Value) {
        let key = key.into();
        assert!(valid_key(&key), "bad report key {key:?}");
        assert!(self.get(&key).is_none(), "duplicate report key {key:?}");
        self.entries.push((key, value));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            writeln!(out, "{k} = {v}").unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut report = Report::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("report line {}: {msg}", ln + 1));
            let (key, rest) = line.split_once('=').ok_or_else(|| err("missing `=`"))?;
            let key = key.trim();
            if !valid_key(key) {
                return Err(err("bad key"));
            }
            if report.get(key).is_some() {
                return Err(err("duplicate key"));
            }
            let mut p = Parser { s: rest.trim().as_bytes(), i: 0 };
            let value = p.value().map_err(|m| err(&m))?;
            p.ws();
            if p.i != p.s.len() {
                return Err(err("trailing characters"));
            }
            report.entries.push((key.to_string(), value));
        }
        Ok(report)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i] == b' ' {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn int(&mut self) -> std::result::Result<i64, String> {
        self.ws();
        let start = self.i;
        if self.peek() == Some(b'-') {
            self.i += 1;
        }
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .map_err(|_| format!("bad integer at column {}", start + 1))
    }

    /// Comma-separated items up to `close`; the opening bracket is already consumed.
    fn items<T>(
        &mut self,
        close: u8,
        mut item: impl FnMut(&mut Self) -> std::result::Result<T, String>,
    ) -> std::result::Result<Vec<T>, String> {
        let mut out = Vec::new();
        self.ws();
        if self.peek() == Some(close) {
            self.i += 1;
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            self.ws();
            match self.peek() {
                Some(b',') => self.i += 1,
                Some(b) if b == close => {
                    self.i += 1;
                    return Ok(out);
                }
                _ => return Err(format!("expected `,` or `{}` at column {}", close as char, self.i + 1)),
            }
        }
    }

    fn value(&mut self) -> std::result::Result<Value, String> {
        self.ws();
        match self.peek() {
            Some(b'"') => {
                self.i += 1;
                let mut bytes = Vec::new();
                loop {
                    match self.peek() {
                        None => return Err("unterminated string".into()),
                        Some(b'"') => {
                            self.i += 1;
                            break;
                        }
                        Some(b'\\') => {
                            self.i += 1;
                            bytes.push(match self.peek() {
                                Some(b'"') => b'"',
                                Some(b'\\') => b'\\',
                                Some(b'n') => b'\n',
                                _ => return Err(format!("bad escape at column {}", self.i + 1)),
                            });
                            self.i += 1;
                        }
                        Some(b) => {
                            bytes.push(b);
                            self.i += 1;
                        }
                    }
                }
                String::from_utf8(bytes).map(Value::Str).map_err(|_| "invalid UTF-8 in string".into())
            }
            Some(b'(') => {
                self.i += 1;
                self.items(b')', |p| p.int()).map(Value::Tuple)
            }
            Some(b'[') => {
                self.i += 1;
                self.items(b']', |p| p.value()).map(Value::List)
            }
            Some(_) => self.int().map(Value::Int),
            None => Err("missing value".into()),
        }
    }
}
