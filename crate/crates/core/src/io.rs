//! Text formats for graphs, operation tables and tower dumps.
//!
//! ```text
//! # graph: "n m", then m lines "u v" with u < v < n
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! Tables start with `q n` (quandle), `g n` (group) or `ld n` (LD-monoid,
//! `∘` table then `∗` table), followed by rows of `n` entries; row `x` lists
//! `x·0 ... x·(n-1)`. Text after `#` is ignored, as are blank lines. Writers
//! emit the canonical form with sorted edges and no comments.

use std::fmt::Write as _;

use thiserror::Error;

use crate::field::TowerPresentation;
use crate::graph::{Graph, MAX_VERTICES};
use crate::ldmonoid::LdMonoid;
use crate::table::BinTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }

    fn number(&self) -> Result<usize, ParseError> {
        if !self.text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.error(format!("expected a decimal number, found {:?}", self.text)));
        }
        self.text.parse().map_err(|_| self.error(format!("number {:?} is too large", self.text)))
    }
}

/// Non-empty lines, each split into tokens with 1-based positions.
fn tokenize(src: &str) -> Vec<Vec<Token<'_>>> {
    src.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token { text: &content[s..pos], line: i + 1, column: s + 1 });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(tokens)
        })
        .collect()
}

struct Lines<'a> {
    lines: std::vec::IntoIter<Vec<Token<'a>>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(src: &'a str) -> Self {
        Lines { lines: tokenize(src).into_iter(), last_line: src.lines().count().max(1) }
    }

    fn next_line(&mut self, what: &str) -> Result<Vec<Token<'a>>, ParseError> {
        self.lines.next().ok_or_else(|| ParseError {
            line: self.last_line,
            column: 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    /// A line of exactly `count` numbers.
    fn numbers(&mut self, count: usize, what: &str) -> Result<(Vec<usize>, Vec<Token<'a>>), ParseError> {
        let line = self.next_line(what)?;
        if line.len() != count {
            let at = line.get(count).unwrap_or(&line[line.len() - 1]);
            return Err(at.error(format!("expected {count} entries for {what}, found {}", line.len())));
        }
        let values = line.iter().map(Token::number).collect::<Result<_, _>>()?;
        Ok((values, line))
    }

    fn finish(mut self) -> Result<(), ParseError> {
        match self.lines.next() {
            Some(line) => Err(line[0].error("unexpected trailing content")),
            None => Ok(()),
        }
    }
}

pub fn parse_graph(src: &str) -> Result<Graph, ParseError> {
    let mut lines = Lines::new(src);
    let (header, tokens) = lines.numbers(2, "the header \"n m\"")?;
    let (n, m) = (header[0], header[1]);
    if n > MAX_VERTICES {
        return Err(tokens[0].error(format!("at most {MAX_VERTICES} vertices are supported")));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (uv, tokens) = lines.numbers(2, "an edge \"u v\"")?;
        let (u, v) = (uv[0], uv[1]);
        if let Some(k) = uv.iter().position(|&w| w >= n) {
            return Err(tokens[k].error(format!("vertex {} out of range for n = {n}", uv[k])));
        }
        if u >= v {
            return Err(tokens[0].error(format!("edge \"{u} {v}\" must satisfy u < v")));
        }
        if edges.contains(&(u, v)) {
            return Err(tokens[0].error(format!("duplicate edge \"{u} {v}\"")));
        }
        edges.push((u, v));
    }
    lines.finish()?;
    Ok(Graph::new(n, &edges).expect("edges validated above"))
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

fn parse_header(lines: &mut Lines<'_>, keyword: &str) -> Result<usize, ParseError> {
    let line = lines.next_line(&format!("the header \"{keyword} n\""))?;
    if line.len() != 2 || line[0].text != keyword {
        return Err(line[0].error(format!("expected header \"{keyword} n\"")));
    }
    line[1].number()
}

fn parse_rows(lines: &mut Lines<'_>, n: usize) -> Result<BinTable, ParseError> {
    let mut entries = Vec::with_capacity(n * n);
    for x in 0..n {
        let (row, tokens) = lines.numbers(n, &format!("row {x}"))?;
        if let Some(k) = row.iter().position(|&e| e >= n) {
            return Err(tokens[k].error(format!("entry {} out of range for size {n}", row[k])));
        }
        entries.extend(row);
    }
    Ok(BinTable::new(n, entries).expect("entries validated above"))
}

/// A single table under the header `keyword n` (`q` or `g`).
pub fn parse_table(src: &str, keyword: &str) -> Result<BinTable, ParseError> {
    let mut lines = Lines::new(src);
    let n = parse_header(&mut lines, keyword)?;
    let table = parse_rows(&mut lines, n)?;
    lines.finish()?;
    Ok(table)
}

/// `(∘, ∗)` under the header `ld n`.
pub fn parse_ld_tables(src: &str) -> Result<(BinTable, BinTable), ParseError> {
    let mut lines = Lines::new(src);
    let n = parse_header(&mut lines, "ld")?;
    let comp = parse_rows(&mut lines, n)?;
    let star = parse_rows(&mut lines, n)?;
    lines.finish()?;
    Ok((comp, star))
}

fn write_rows(out: &mut String, t: &BinTable) {
    for x in 0..t.size() {
        let row: Vec<String> = t.row(x).iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

pub fn write_table(keyword: &str, t: &BinTable) -> String {
    let mut out = format!("{keyword} {}\n", t.size());
    write_rows(&mut out, t);
    out
}

pub fn write_ld(m: &LdMonoid) -> String {
    let mut out = format!("ld {}\n", m.size());
    write_rows(&mut out, m.comp());
    write_rows(&mut out, m.star());
    out
}

pub fn write_tower(t: &TowerPresentation) -> String {
    t.to_string()
}
