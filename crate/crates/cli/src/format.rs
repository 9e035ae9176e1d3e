//! Plain-text storage for a single finite operation table.
//!
//! A file is a sequence of `key: value` lines. The keys are `kind` (`ternar`
//! or `binary`), `n` (carrier size), an optional `name`, any number of
//! `meta.KEY` entries, and one `table` line listing the n³ (or n²) entries
//! row-major, 0-based. Blank lines and lines starting with `#` are ignored.
//! Rendering always emits the keys in that order with metadata sorted, so a
//! rendered file parses back to an identical value and re-renders to
//! identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use semiheaps_core::{BinaryTable, TernaryTable};

use crate::{input_failure, Failure};

/// Entry count ceiling for a parsed table line (side 256 for binary tables).
pub const MAX_TABLE_ENTRIES: usize = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Ternar,
    Binary,
}

impl AlgebraKind {
    pub fn word(self) -> &'static str {
        match self {
            AlgebraKind::Ternar => "ternar",
            AlgebraKind::Binary => "binary",
        }
    }

    fn arity(self) -> u32 {
        match self {
            AlgebraKind::Ternar => 3,
            AlgebraKind::Binary => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub kind: AlgebraKind,
    pub n: usize,
    pub name: Option<String>,
    pub metadata: BTreeMap<String, String>,
    pub entries: Vec<usize>,
}

impl AlgebraFile {
    pub fn from_ternary(t: &TernaryTable) -> Self {
        Self {
            kind: AlgebraKind::Ternar,
            n: t.n(),
            name: None,
            metadata: BTreeMap::new(),
            entries: t.entries().to_vec(),
        }
    }

    pub fn from_binary(b: &BinaryTable) -> Self {
        Self {
            kind: AlgebraKind::Binary,
            n: b.n(),
            name: None,
            metadata: BTreeMap::new(),
            entries: b.entries().to_vec(),
        }
    }

    pub fn ternary(&self) -> Result<TernaryTable, Failure> {
        if self.kind != AlgebraKind::Ternar {
            return Err(input_failure(
                "file holds a binary table but this operation needs a ternar",
            ));
        }
        Ok(TernaryTable::new(self.n, self.entries.clone()).expect("entries validated at parse"))
    }

    pub fn binary(&self) -> Result<BinaryTable, Failure> {
        if self.kind != AlgebraKind::Binary {
            return Err(input_failure(
                "file holds a ternar table but this operation needs a binary one",
            ));
        }
        Ok(BinaryTable::new(self.n, self.entries.clone()).expect("entries validated at parse"))
    }

    /// Element labels from `meta.labels`, when it carries exactly n tokens.
    pub fn labels(&self) -> Option<Vec<String>> {
        let tokens: Vec<String> = self
            .metadata
            .get("labels")?
            .split_whitespace()
            .map(str::to_string)
            .collect();
        (tokens.len() == self.n).then_some(tokens)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut kind = None;
        let mut n = None;
        let mut name = None;
        let mut metadata = BTreeMap::new();
        let mut entries: Option<Vec<usize>> = None;

        for (index, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |message: String| format!("line {}: {message}", index + 1);
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| at("expected `key: value`".to_string()))?;
            let key = key.trim();
            let value = value.trim();
            if value.is_empty() {
                return Err(at(format!("key `{key}` has an empty value")));
            }
            match key {
                "kind" => {
                    let parsed = match value {
                        "ternar" => AlgebraKind::Ternar,
                        "binary" => AlgebraKind::Binary,
                        other => return Err(at(format!("unknown kind `{other}`"))),
                    };
                    set_once(&mut kind, parsed).map_err(&at)?;
                }
                "n" => {
                    let parsed: usize = value
                        .parse()
                        .map_err(|_| at(format!("`{value}` is not a carrier size")))?;
                    set_once(&mut n, parsed).map_err(&at)?;
                }
                "name" => set_once(&mut name, value.to_string()).map_err(&at)?,
                "table" => {
                    let parsed = value
                        .split_whitespace()
                        .map(|tok| {
                            tok.parse::<usize>()
                                .map_err(|_| at(format!("table entry `{tok}` is not an integer")))
                        })
                        .collect::<Result<Vec<usize>, String>>()?;
                    set_once(&mut entries, parsed).map_err(&at)?;
                }
                meta if meta.starts_with("meta.") => {
                    let tail = &meta["meta.".len()..];
                    if tail.is_empty() || tail.contains(char::is_whitespace) {
                        return Err(at(format!("malformed metadata key `{meta}`")));
                    }
                    if metadata
                        .insert(tail.to_string(), value.to_string())
                        .is_some()
                    {
                        return Err(at(format!("duplicate key `{meta}`")));
                    }
                }
                other => return Err(at(format!("unknown key `{other}`"))),
            }
        }

        let kind = kind.ok_or("missing `kind` line")?;
        let n = n.ok_or("missing `n` line")?;
        let entries = entries.ok_or("missing `table` line")?;
        if n == 0 {
            return Err("carrier must contain at least one element".to_string());
        }
        let expected = n
            .checked_pow(kind.arity())
            .filter(|&len| len <= MAX_TABLE_ENTRIES)
            .ok_or_else(|| format!("a {} on {n} elements is too large for a file", kind.word()))?;
        if entries.len() != expected {
            return Err(format!(
                "table holds {} entries but a {} on {n} elements needs {expected}",
                entries.len(),
                kind.word(),
            ));
        }
        if let Some(&value) = entries.iter().find(|&&value| value >= n) {
            return Err(format!(
                "table entry {value} lies outside the carrier 0..{n}"
            ));
        }
        Ok(Self {
            kind,
            n,
            name,
            metadata,
            entries,
        })
    }

    pub fn render(&self) -> String {
        let mut text = String::new();
        writeln!(text, "kind: {}", self.kind.word()).unwrap();
        writeln!(text, "n: {}", self.n).unwrap();
        if let Some(name) = &self.name {
            writeln!(text, "name: {name}").unwrap();
        }
        for (key, value) in &self.metadata {
            writeln!(text, "meta.{key}: {value}").unwrap();
        }
        let table = self
            .entries
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(text, "table: {table}").unwrap();
        text
    }

    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = fs::read_to_string(path)
            .map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|m| input_failure(format!("{}: {m}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<(), Failure> {
        fs::write(path, self.render())
            .map_err(|e| input_failure(format!("{}: {e}", path.display())))
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T) -> Result<(), String> {
    if slot.is_some() {
        return Err("duplicate key".to_string());
    }
    *slot = Some(value);
    Ok(())
}
