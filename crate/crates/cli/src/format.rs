//! File formats: the canonical sequence file, matrix output, and parsers
//! for the nested-brace and 0/1-table notations that circulate for these
//! sequences.
//!
//! Canonical sequence files are plain text and diff-friendly:
//!
//! ```text
//! p=47 blocks=4
//! +1 -1 +1 ...
//! ...
//! ```
//!
//! Lines starting with `#` are comments. The header may carry extra
//! `key=value` annotations after `blocks=`; they are preserved on parse but
//! the canonical writer emits none, so `write(parse(file))` is
//! byte-identical for canonical files.

use hadamard::{GaussInt, IntMatrix, QuarticMatrix, Sequence};
use serde::{Deserialize, Serialize};

/// A parse failure with its 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

/// A block of equal-length sequences with its header annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub p: usize,
    pub sequences: Vec<Sequence>,
    /// `key=value` pairs found after `blocks=` in the header.
    pub annotations: Vec<(String, String)>,
}

impl SequenceFile {
    pub fn new(sequences: Vec<Sequence>) -> Self {
        let p = sequences.first().map_or(0, Sequence::len);
        Self {
            p,
            sequences,
            annotations: Vec::new(),
        }
    }
}

/// Splits a line into whitespace-separated tokens with their 1-based
/// column positions.
fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..idx]));
            }
        } else if start.is_none() {
            start = Some(idx);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_entry(token: &str) -> Option<i8> {
    match token {
        "1" | "+1" => Some(1),
        "-1" => Some(-1),
        _ => None,
    }
}

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((idx + 1, line))
        }
    })
}

/// Parses the canonical sequence file format.
pub fn parse_sequence_file(text: &str) -> Result<SequenceFile, ParseError> {
    let mut lines = meaningful_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty file: expected a 'p=<n> blocks=<k>' header"))?;
    let tokens = tokens_with_columns(header);
    let (p, blocks, annotations) = parse_header(header_line, &tokens)?;

    let mut sequences = Vec::with_capacity(blocks);
    for _ in 0..blocks {
        let (line_no, line) = lines.next().ok_or_else(|| {
            ParseError::new(
                header_line,
                1,
                format!("expected {blocks} sequence rows, found {}", sequences.len()),
            )
        })?;
        let mut entries = Vec::with_capacity(p);
        for (column, token) in tokens_with_columns(line) {
            let entry = parse_entry(token).ok_or_else(|| {
                ParseError::new(line_no, column, format!("expected +1 or -1, found '{token}'"))
            })?;
            entries.push(entry);
        }
        if entries.len() != p {
            return Err(ParseError::new(
                line_no,
                1,
                format!("expected {p} entries, found {}", entries.len()),
            ));
        }
        let sequence = Sequence::new(entries)
            .map_err(|e| ParseError::new(line_no, 1, e.to_string()))?;
        sequences.push(sequence);
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(ParseError::new(line_no, 1, "unexpected content after the last row"));
    }
    Ok(SequenceFile {
        p,
        sequences,
        annotations,
    })
}

type Header = (usize, usize, Vec<(String, String)>);

fn parse_header(line_no: usize, tokens: &[(usize, &str)]) -> Result<Header, ParseError> {
    let mut fields = tokens.iter();
    let parse_kv = |expected: &str, slot: Option<&(usize, &str)>| -> Result<usize, ParseError> {
        let &(column, token) = slot.ok_or_else(|| {
            ParseError::new(line_no, 1, format!("header must start with 'p=<n> blocks=<k>'"))
        })?;
        let value = token
            .strip_prefix(expected)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(|| {
                ParseError::new(line_no, column, format!("expected '{expected}=<n>', found '{token}'"))
            })?;
        value.parse::<usize>().map_err(|_| {
            ParseError::new(line_no, column, format!("'{expected}' must be a nonnegative integer"))
        })
    };
    let p = parse_kv("p", fields.next())?;
    let blocks = parse_kv("blocks", fields.next())?;
    let mut annotations = Vec::new();
    for &(column, token) in fields {
        match token.split_once('=') {
            Some((key, value)) if !key.is_empty() => {
                annotations.push((key.to_string(), value.to_string()));
            }
            _ => {
                return Err(ParseError::new(
                    line_no,
                    column,
                    format!("expected a 'key=value' annotation, found '{token}'"),
                ));
            }
        }
    }
    Ok((p, blocks, annotations))
}

fn entry_token(value: i8) -> &'static str {
    if value > 0 {
        "+1"
    } else {
        "-1"
    }
}

/// Renders the canonical form: header, then one row per sequence.
pub fn write_sequence_file(file: &SequenceFile) -> String {
    write_sequence_file_with_comments(file, &[])
}

/// Canonical form preceded by `# `-prefixed comment lines after the header.
pub fn write_sequence_file_with_comments(file: &SequenceFile, comments: &[String]) -> String {
    let mut out = format!("p={} blocks={}\n", file.p, file.sequences.len());
    for comment in comments {
        out.push_str("# ");
        out.push_str(comment);
        out.push('\n');
    }
    for sequence in &file.sequences {
        let row: Vec<&str> = sequence.entries().iter().map(|&e| entry_token(e)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct SequenceFileJson {
    p: usize,
    blocks: usize,
    sequences: Vec<Vec<i8>>,
}

/// JSON mirror of the canonical format.
pub fn sequence_file_to_json(file: &SequenceFile) -> String {
    let json = SequenceFileJson {
        p: file.p,
        blocks: file.sequences.len(),
        sequences: file
            .sequences
            .iter()
            .map(|s| s.entries().to_vec())
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&json).expect("serializable");
    out.push('\n');
    out
}

pub fn sequence_file_from_json(text: &str) -> Result<SequenceFile, ParseError> {
    let json: SequenceFileJson = serde_json::from_str(text)
        .map_err(|e| ParseError::new(e.line(), e.column(), e.to_string()))?;
    if json.sequences.len() != json.blocks {
        return Err(ParseError::new(
            1,
            1,
            format!(
                "header says {} blocks but {} sequences are present",
                json.blocks,
                json.sequences.len()
            ),
        ));
    }
    let mut sequences = Vec::with_capacity(json.sequences.len());
    for entries in json.sequences {
        if entries.len() != json.p {
            return Err(ParseError::new(1, 1, format!("expected {} entries per row", json.p)));
        }
        sequences
            .push(Sequence::new(entries).map_err(|e| ParseError::new(1, 1, e.to_string()))?);
    }
    Ok(SequenceFile {
        p: json.p,
        sequences,
        annotations: Vec::new(),
    })
}

/// One row per line, entries `1` / `-1`.
pub fn write_real_matrix(m: &IntMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.order() {
        let row: Vec<String> = m.row(i).iter().map(i64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn quartic_token(e: GaussInt) -> &'static str {
    match (e.re, e.im) {
        (1, 0) => "1",
        (-1, 0) => "-1",
        (0, 1) => "i",
        (0, -1) => "-i",
        _ => panic!("entry {e} is not a fourth root of unity"),
    }
}

/// One row per line, entries from `{1, i, -1, -i}` as literal tokens.
pub fn write_complex_matrix(k: &QuarticMatrix) -> String {
    let mut out = String::new();
    for i in 0..k.order() {
        let row: Vec<&str> = (0..k.order()).map(|j| quartic_token(k.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct RealMatrixJson {
    order: usize,
    kind: &'static str,
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct ComplexMatrixJson {
    order: usize,
    kind: &'static str,
    rows: Vec<Vec<&'static str>>,
}

pub fn real_matrix_to_json(m: &IntMatrix) -> String {
    let json = RealMatrixJson {
        order: m.order(),
        kind: "real",
        rows: (0..m.order()).map(|i| m.row(i).to_vec()).collect(),
    };
    let mut out = serde_json::to_string_pretty(&json).expect("serializable");
    out.push('\n');
    out
}

pub fn complex_matrix_to_json(k: &QuarticMatrix) -> String {
    let json = ComplexMatrixJson {
        order: k.order(),
        kind: "complex",
        rows: (0..k.order())
            .map(|i| (0..k.order()).map(|j| quartic_token(k.get(i, j))).collect())
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&json).expect("serializable");
    out.push('\n');
    out
}

struct Cursor<'a> {
    rest: std::str::CharIndices<'a>,
    current: Option<(usize, char)>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let mut rest = text.char_indices();
        let current = rest.next();
        Self {
            rest,
            current,
            line: 1,
            column: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.current.map(|(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let (_, ch) = self.current?;
        if ch == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        self.current = self.rest.next();
        Some(ch)
    }

    fn skip_whitespace(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column, message)
    }

    fn expect(&mut self, expected: char) -> Result<(), ParseError> {
        self.skip_whitespace();
        match self.peek() {
            Some(ch) if ch == expected => {
                self.bump();
                Ok(())
            }
            Some(ch) => Err(self.error(format!("expected '{expected}', found '{ch}'"))),
            None => Err(self.error(format!("expected '{expected}', found end of input"))),
        }
    }

    fn parse_unit(&mut self) -> Result<i8, ParseError> {
        self.skip_whitespace();
        let sign = match self.peek() {
            Some('-') => {
                self.bump();
                -1
            }
            Some('+') => {
                self.bump();
                1
            }
            _ => 1,
        };
        match self.peek() {
            Some('1') => {
                self.bump();
                Ok(sign)
            }
            Some(ch) => Err(self.error(format!("expected '1', found '{ch}'"))),
            None => Err(self.error("expected '1', found end of input")),
        }
    }
}

/// Parses the nested-brace notation `{{1,-1,…},{…},…}` into raw rows.
/// Rows must all have the same length; no length or parity constraint
/// beyond that is applied here.
pub fn parse_brace_notation(text: &str) -> Result<Vec<Vec<i8>>, ParseError> {
    let mut cursor = Cursor::new(text);
    cursor.expect('{')?;
    let mut rows: Vec<Vec<i8>> = Vec::new();
    loop {
        cursor.expect('{')?;
        let row_line = cursor.line;
        let row_column = cursor.column;
        let mut row = Vec::new();
        loop {
            row.push(cursor.parse_unit()?);
            cursor.skip_whitespace();
            match cursor.peek() {
                Some(',') => {
                    cursor.bump();
                }
                Some('}') => {
                    cursor.bump();
                    break;
                }
                Some(ch) => return Err(cursor.error(format!("expected ',' or '}}', found '{ch}'"))),
                None => return Err(cursor.error("expected ',' or '}', found end of input")),
            }
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(ParseError::new(
                    row_line,
                    row_column,
                    format!("ragged rows: expected {} entries, found {}", first.len(), row.len()),
                ));
            }
        }
        rows.push(row);
        cursor.skip_whitespace();
        match cursor.peek() {
            Some(',') => {
                cursor.bump();
            }
            Some('}') => {
                cursor.bump();
                break;
            }
            Some(ch) => return Err(cursor.error(format!("expected ',' or '}}', found '{ch}'"))),
            None => return Err(cursor.error("expected ',' or '}', found end of input")),
        }
    }
    cursor.skip_whitespace();
    if let Some(ch) = cursor.peek() {
        return Err(cursor.error(format!("unexpected '{ch}' after the closing brace")));
    }
    Ok(rows)
}

/// Parses whitespace-separated rows, one per line. With
/// `zeros_as_minus_ones` the alphabet is `{0, 1}` with `0` read as `-1`;
/// otherwise it is `{+1, 1, -1}`.
pub fn parse_table_rows(text: &str, zeros_as_minus_ones: bool) -> Result<Vec<Vec<i8>>, ParseError> {
    let mut rows: Vec<Vec<i8>> = Vec::new();
    for (line_no, line) in meaningful_lines(text) {
        let mut row = Vec::new();
        for (column, token) in tokens_with_columns(line) {
            let entry = match token {
                "0" if zeros_as_minus_ones => Some(-1),
                "0" => {
                    return Err(ParseError::new(
                        line_no,
                        column,
                        "found '0'; pass --zeros-as-minus-ones to read 0/1 tables",
                    ))
                }
                other => parse_entry(other),
            };
            let entry = entry.ok_or_else(|| {
                ParseError::new(line_no, column, format!("unexpected symbol '{token}'"))
            })?;
            row.push(entry);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(ParseError::new(
                    line_no,
                    1,
                    format!("ragged rows: expected {} entries, found {}", first.len(), row.len()),
                ));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::new(1, 1, "no rows found"));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(entries: &[i8]) -> Sequence {
        Sequence::from_slice(entries).unwrap()
    }

    #[test]
    fn canonical_round_trip() {
        let file = SequenceFile::new(vec![seq(&[1, -1, -1]), seq(&[1, 1, 1])]);
        let text = write_sequence_file(&file);
        assert_eq!(text, "p=3 blocks=2\n+1 -1 -1\n+1 +1 +1\n");
        let parsed = parse_sequence_file(&text).unwrap();
        assert_eq!(parsed, file);
        assert_eq!(write_sequence_file(&parsed), text);
    }

    #[test]
    fn comments_and_annotations_are_tolerated() {
        let text = "p=3 blocks=1 sigma=3,-1,1,1 type=ssxx\n# a comment\n1 1 1\n";
        let parsed = parse_sequence_file(text).unwrap();
        assert_eq!(parsed.sequences.len(), 1);
        assert_eq!(
            parsed.annotations,
            vec![
                ("sigma".to_string(), "3,-1,1,1".to_string()),
                ("type".to_string(), "ssxx".to_string())
            ]
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_sequence_file("p=3 blocks=1\n+1 nope -1\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 4));

        let err = parse_sequence_file("q=3 blocks=1\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 1));

        let err = parse_sequence_file("p=3 blocks=1\n+1 -1\n").unwrap_err();
        assert_eq!(err.line, 2);

        let err = parse_sequence_file("p=4 blocks=1\n+1 -1 +1 -1\n").unwrap_err();
        assert!(err.message.contains("odd"));
    }

    #[test]
    fn json_mirror_round_trips() {
        let file = SequenceFile::new(vec![seq(&[1, -1, -1]), seq(&[1, 1, 1])]);
        let json = sequence_file_to_json(&file);
        let parsed = sequence_file_from_json(&json).unwrap();
        assert_eq!(parsed.sequences, file.sequences);
    }

    #[test]
    fn brace_notation_small() {
        let rows = parse_brace_notation("{{1,-1},{1,1}}").unwrap();
        assert_eq!(rows, vec![vec![1, -1], vec![1, 1]]);
    }

    #[test]
    fn brace_notation_whitespace_and_newlines() {
        let rows = parse_brace_notation("{ {1, -1,\n  1}, {-1, 1, -1} }\n").unwrap();
        assert_eq!(rows, vec![vec![1, -1, 1], vec![-1, 1, -1]]);
    }

    #[test]
    fn brace_notation_rejects_ragged_rows() {
        let err = parse_brace_notation("{{1,-1},{1}}").unwrap_err();
        assert!(err.message.contains("ragged"));
    }

    #[test]
    fn brace_notation_rejects_alien_symbols() {
        let err = parse_brace_notation("{{1,2}}").unwrap_err();
        assert_eq!((err.line, err.column), (1, 4));

        let err = parse_brace_notation("{{1,-1}} trailing").unwrap_err();
        assert!(err.message.contains("unexpected"));
    }

    #[test]
    fn table_rows_with_zero_flag() {
        let rows = parse_table_rows("1 0 1\n0 1 0\n", true).unwrap();
        assert_eq!(rows, vec![vec![1, -1, 1], vec![-1, 1, -1]]);

        let err = parse_table_rows("1 0 1\n", false).unwrap_err();
        assert!(err.message.contains("--zeros-as-minus-ones"));
    }

    #[test]
    fn complex_tokens() {
        let mut k = QuarticMatrix::zero(2);
        k.set(0, 0, GaussInt::new(1, 0));
        k.set(0, 1, GaussInt::new(0, 1));
        k.set(1, 0, GaussInt::new(0, -1));
        k.set(1, 1, GaussInt::new(-1, 0));
        assert_eq!(write_complex_matrix(&k), "1 i\n-i -1\n");
    }
}
