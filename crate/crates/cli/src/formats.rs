//! Text formats for diagrams: braid words (`.brd`) and sliced diagrams
//! (`.tng`).
//!
//! Both formats are line-oriented UTF-8 with `#` comments and free whitespace
//! between tokens; LF and CRLF both work. A braid file is a single header
//! `braid n=<strands>:` followed by signed generator indices. A sliced file
//! opens with `bottom: <signs>` and then carries one line per slice, each a
//! row of generator tokens read left to right:
//!
//! ```text
//! id+ id-          identity strand
//! cup+ cup-        local minimum creating (s, -s)
//! cap+ cap-        local maximum closing (s, -s)
//! x++ x+- x-+ x--  crossing, left strand over; suffix gives the input signs
//! y++ y+- y-+ y--  crossing, left strand under
//! ```
//!
//! [`serialize`] emits the canonical form (single spaces, no comments), and
//! `parse_sliced(serialize(d)) == d` for every valid diagram.

use std::fmt;

use tangle_core::tangle::TangleError;
use tangle_core::{Generator, Sign, SignWord, SlicedDiagram};

/// Whether a failure is lexical or a well-formedness violation in otherwise
/// readable input. The command line maps `Syntax` to exit code 1 and
/// `Validation` to exit code 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ErrorKind {
    Syntax,
    Validation,
}

/// A parse failure at an exact position: 1-based line and character column
/// of the offending token.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { kind: ErrorKind::Syntax, line, column, message: message.into() }
    }

    fn validation(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { kind: ErrorKind::Validation, line, column, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A parsed input: either format, ready for evaluation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Input {
    Braid { word: Vec<i64>, strands: usize },
    Sliced(SlicedDiagram),
}

impl Input {
    /// The diagram itself; braids are laid out with strands running upward.
    pub fn into_diagram(self) -> SlicedDiagram {
        match self {
            Input::Braid { word, strands } => SlicedDiagram::braid(&word, strands, true)
                .expect("parse_braid already checked the letters"),
            Input::Sliced(d) => d,
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Comment-stripped, tokenized lines; lines with no tokens are dropped.
fn significant_lines(text: &str) -> Vec<(usize, Vec<Token<'_>>)> {
    let mut out = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line_no = li + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let mut tokens = Vec::new();
        let mut start: Option<(usize, usize)> = None; // byte offset, char column
        let mut col = 0usize;
        for (b, c) in line.char_indices() {
            col += 1;
            if c.is_whitespace() {
                if let Some((sb, sc)) = start.take() {
                    tokens.push(Token { text: &line[sb..b], line: line_no, column: sc });
                }
            } else if start.is_none() {
                start = Some((b, col));
            }
        }
        if let Some((sb, sc)) = start {
            tokens.push(Token { text: &line[sb..], line: line_no, column: sc });
        }
        if !tokens.is_empty() {
            out.push((line_no, tokens));
        }
    }
    out
}

/// Parses a braid word: `braid n=<strands>: w1 w2 ...` with nonzero letters,
/// `|w| < n`. Returns the word and the strand count.
pub fn parse_braid(text: &str) -> Result<(Vec<i64>, usize), ParseError> {
    let tokens: Vec<Token> =
        significant_lines(text).into_iter().flat_map(|(_, toks)| toks).collect();
    let mut it = tokens.iter();
    let head = it
        .next()
        .ok_or_else(|| ParseError::syntax(1, 1, "empty input; expected `braid n=<strands>: ...`"))?;
    if head.text != "braid" {
        return Err(ParseError::syntax(
            head.line,
            head.column,
            format!("expected the keyword `braid`, got `{}`", head.text),
        ));
    }
    // The header runs to the first `:`; whitespace inside it is free, so
    // `n=2:`, `n = 2 :` and `n=2 :` all read the same.
    let mut header = String::new();
    let mut header_pos = (head.line, head.column);
    let mut first = true;
    loop {
        let tok = it.next().ok_or_else(|| {
            ParseError::syntax(header_pos.0, header_pos.1, "missing `:` after the strand count")
        })?;
        if first {
            header_pos = (tok.line, tok.column);
            first = false;
        }
        header.push_str(tok.text);
        if header.ends_with(':') {
            header.pop();
            break;
        }
    }
    let strands: usize = header
        .strip_prefix("n=")
        .and_then(|digits| digits.parse().ok())
        .ok_or_else(|| {
            ParseError::syntax(
                header_pos.0,
                header_pos.1,
                format!("expected `n=<strands>:`, got `{}:`", header),
            )
        })?;
    if strands == 0 {
        return Err(ParseError::validation(
            header_pos.0,
            header_pos.1,
            "a braid needs at least one strand",
        ));
    }
    let mut word = Vec::new();
    for tok in it {
        let letter: i64 = tok.text.parse().map_err(|_| {
            ParseError::syntax(
                tok.line,
                tok.column,
                format!("expected a signed generator index, got `{}`", tok.text),
            )
        })?;
        if letter == 0 || letter.unsigned_abs() as usize >= strands {
            return Err(ParseError::validation(
                tok.line,
                tok.column,
                format!(
                    "index {} out of range: letters are nonzero with |w| < {}",
                    letter, strands
                ),
            ));
        }
        word.push(letter);
    }
    Ok((word, strands))
}

fn sign_of(c: char) -> Option<Sign> {
    Sign::from_char(c)
}

fn generator_token(text: &str) -> Option<Generator> {
    let one = |head: &str| -> Option<Sign> {
        let mut cs = text.strip_prefix(head)?.chars();
        let s = sign_of(cs.next()?)?;
        cs.next().is_none().then_some(s)
    };
    let two = |head: &str| -> Option<(Sign, Sign)> {
        let mut cs = text.strip_prefix(head)?.chars();
        let s = sign_of(cs.next()?)?;
        let t = sign_of(cs.next()?)?;
        cs.next().is_none().then_some((s, t))
    };
    if let Some(s) = one("id") {
        Some(Generator::Id(s))
    } else if let Some(s) = one("cup") {
        Some(Generator::Cup(s))
    } else if let Some(s) = one("cap") {
        Some(Generator::Cap(s))
    } else if let Some((s, t)) = two("x") {
        Some(Generator::Over(s, t))
    } else if let Some((s, t)) = two("y") {
        Some(Generator::Under(s, t))
    } else {
        None
    }
}

/// Parses a sliced diagram and validates it; validation failures come back
/// as errors positioned on the offending slice line.
pub fn parse_sliced(text: &str) -> Result<SlicedDiagram, ParseError> {
    let lines = significant_lines(text);
    let mut it = lines.into_iter();
    let (_, header) = it
        .next()
        .ok_or_else(|| ParseError::syntax(1, 1, "empty input; expected a `bottom:` header"))?;
    let first = header[0];
    if !first.text.starts_with("bottom:") {
        return Err(ParseError::syntax(
            first.line,
            first.column,
            format!("expected `bottom: <signs>`, got `{}`", first.text),
        ));
    }
    let mut bottom = Vec::new();
    // signs may ride on the header token itself or follow as separate tokens
    let inline = &first.text["bottom:".len()..];
    for (k, c) in inline.chars().enumerate() {
        let s = sign_of(c).ok_or_else(|| {
            ParseError::syntax(
                first.line,
                first.column + "bottom:".len() + k,
                format!("expected `+` or `-` in the boundary word, got `{}`", c),
            )
        })?;
        bottom.push(s);
    }
    for tok in &header[1..] {
        for (k, c) in tok.text.chars().enumerate() {
            let s = sign_of(c).ok_or_else(|| {
                ParseError::syntax(
                    tok.line,
                    tok.column + k,
                    format!("expected `+` or `-` in the boundary word, got `{}`", c),
                )
            })?;
            bottom.push(s);
        }
    }
    let bottom = SignWord::new(bottom);

    let mut slices: Vec<Vec<Generator>> = Vec::new();
    // per slice: line number, then (column, input width) per token
    let mut meta: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for (line_no, tokens) in it {
        let mut slice = Vec::with_capacity(tokens.len());
        let mut cols = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let g = generator_token(tok.text).ok_or_else(|| {
                ParseError::syntax(
                    tok.line,
                    tok.column,
                    format!("unknown generator token `{}`", tok.text),
                )
            })?;
            cols.push((tok.column, g.input_len()));
            slice.push(g);
        }
        slices.push(slice);
        meta.push((line_no, cols));
    }

    SlicedDiagram::new(bottom, slices).map_err(|e| match e {
        TangleError::Validation(v) => {
            let (line, column) = position_of(&meta, v.slice, v.column);
            ParseError::validation(line, column, format!("slice {}: {}", v.slice, v.reason))
        }
        other => ParseError::validation(1, 1, other.to_string()),
    })
}

/// Maps a validation failure (1-based slice and strand position) back to the
/// line and the column of the generator token that consumes that strand.
fn position_of(meta: &[(usize, Vec<(usize, usize)>)], slice: usize, strand: usize) -> (usize, usize) {
    let (line, tokens) = &meta[slice - 1];
    let mut pos = 1usize; // first strand not yet consumed
    for &(column, width) in tokens {
        if width > 0 && strand < pos + width {
            return (*line, column);
        }
        pos += width;
    }
    // past every token: the slice left strands unconsumed
    (*line, tokens.last().map_or(1, |&(column, _)| column))
}

/// Detects the format from the leading keyword and parses accordingly.
pub fn parse_auto(text: &str) -> Result<Input, ParseError> {
    let is_braid = significant_lines(text)
        .first()
        .is_some_and(|(_, toks)| toks[0].text == "braid");
    if is_braid {
        let (word, strands) = parse_braid(text)?;
        Ok(Input::Braid { word, strands })
    } else {
        Ok(Input::Sliced(parse_sliced(text)?))
    }
}

fn generator_text(g: &Generator) -> String {
    match g {
        Generator::Id(s) => format!("id{}", s.as_char()),
        Generator::Cup(s) => format!("cup{}", s.as_char()),
        Generator::Cap(s) => format!("cap{}", s.as_char()),
        Generator::Over(s, t) => format!("x{}{}", s.as_char(), t.as_char()),
        Generator::Under(s, t) => format!("y{}{}", s.as_char(), t.as_char()),
    }
}

/// Canonical text for a diagram: `bottom:` header, one slice per line,
/// single spaces, no trailing newline.
pub fn serialize(d: &SlicedDiagram) -> String {
    let mut out = String::from("bottom:");
    if !d.source().is_empty() {
        out.push(' ');
        for s in d.source().iter() {
            out.push(s.as_char());
        }
    }
    for slice in d.slices() {
        out.push('\n');
        let mut first = true;
        for g in slice {
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&generator_text(g));
        }
    }
    out
}

/// Canonical text for a braid word.
pub fn serialize_braid(word: &[i64], strands: usize) -> String {
    let mut out = format!("braid n={}:", strands);
    for w in word {
        out.push(' ');
        out.push_str(&w.to_string());
    }
    out
}
