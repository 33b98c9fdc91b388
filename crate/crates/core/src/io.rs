//! Line-oriented text formats for complexes, covers and maps.
//!
//! Complex: one maximal face per line, vertices separated by commas, `#`
//! starts a comment, and an optional `order: v1 v2 ...` header fixes the
//! vertex order. Labels containing a comma are written in parentheses, so
//! `(0,1), (0,2), (1,2)` is a face of a product. Square brackets around a
//! face are accepted and ignored.
//!
//! Cover: `piece <name>` headers, each followed by face lines of the piece.
//!
//! Map: one `u -> v` line per source vertex.

use std::path::Path;
use std::sync::Arc;

use thiserror::Error;

use crate::complex::{ComplexBuilder, ComplexError, Cover, Label, SimplicialComplex, SimplicialMap, Subcomplex};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse { line, message: message.into() }
}

/// Lines with comments stripped, paired with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn strip_parens(token: &str) -> &str {
    let t = token.trim();
    if t.len() >= 2 && t.starts_with('(') && t.ends_with(')') {
        t[1..t.len() - 1].trim()
    } else {
        t
    }
}

/// Splits a vertex label token, normalising `(a, b)` to `a,b`.
fn label_of(token: &str, line: usize) -> Result<Label, IoError> {
    let inner = strip_parens(token);
    if inner.is_empty() {
        return Err(parse_err(line, "empty vertex label"));
    }
    let normalized: String = if token.trim().starts_with('(') {
        inner.split(',').map(str::trim).collect::<Vec<_>>().join(",")
    } else {
        inner.to_string()
    };
    Ok(Label::new(normalized))
}

/// Splits a face line on commas outside any brackets.
pub fn parse_face(line_text: &str, line: usize) -> Result<Vec<Label>, IoError> {
    let mut s = line_text.trim();
    if s.starts_with('[') && s.ends_with(']') {
        s = &s[1..s.len() - 1];
    }
    let mut tokens = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err(line, "unbalanced brackets"));
                }
            }
            ',' if depth == 0 => {
                tokens.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err(line, "unbalanced brackets"));
    }
    tokens.push(&s[start..]);
    tokens.into_iter().map(|t| label_of(t, line)).collect()
}

fn parse_order(rest: &str, line: usize) -> Result<Vec<Label>, IoError> {
    let order: Vec<Label> = rest.split_whitespace().map(|t| label_of(t, line)).collect::<Result<_, _>>()?;
    if order.is_empty() {
        return Err(parse_err(line, "empty order header"));
    }
    Ok(order)
}

/// Faces and optional explicit order of a complex file.
pub fn parse_complex_faces(text: &str) -> Result<(Option<Vec<Label>>, Vec<Vec<Label>>), IoError> {
    let mut order = None;
    let mut faces = Vec::new();
    for (n, l) in content_lines(text) {
        if let Some(rest) = l.strip_prefix("order:") {
            if order.is_some() || !faces.is_empty() {
                return Err(parse_err(n, "the order header must come first and only once"));
            }
            order = Some(parse_order(rest, n)?);
        } else {
            faces.push(parse_face(l, n)?);
        }
    }
    if faces.is_empty() {
        return Err(parse_err(0, "no faces"));
    }
    Ok((order, faces))
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, IoError> {
    let (order, faces) = parse_complex_faces(text)?;
    let mut builder = ComplexBuilder::new();
    if let Some(order) = order {
        builder = builder.order(order);
    }
    Ok(builder.build(faces)?)
}

fn render_label(l: &Label) -> String {
    if l.as_str().contains(',') {
        format!("({})", l.as_str())
    } else {
        l.as_str().to_string()
    }
}

fn render_face(face: &[Label]) -> String {
    face.iter().map(render_label).collect::<Vec<_>>().join(", ")
}

/// Writes the facets with an explicit order header, so reading the text
/// back gives the same vertex order even when labels would sort differently.
pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = String::from("order:");
    for l in k.labels() {
        out.push(' ');
        out.push_str(&render_label(l));
    }
    out.push('\n');
    for face in k.labeled_facets() {
        out.push_str(&render_face(&face));
        out.push('\n');
    }
    out
}

pub fn parse_cover(text: &str, parent: &Arc<SimplicialComplex>) -> Result<Cover, IoError> {
    let mut names: Vec<String> = Vec::new();
    let mut faces: Vec<Vec<Vec<Label>>> = Vec::new();
    let mut starts: Vec<usize> = Vec::new();
    for (n, l) in content_lines(text) {
        let header = l.strip_prefix("piece").filter(|r| r.is_empty() || r.starts_with(char::is_whitespace));
        if let Some(rest) = header {
            let name = rest.trim();
            names.push(if name.is_empty() { format!("K{}", names.len()) } else { name.to_string() });
            faces.push(Vec::new());
            starts.push(n);
        } else {
            let face = parse_face(l, n)?;
            faces.last_mut().ok_or_else(|| parse_err(n, "face before the first `piece` header"))?.push(face);
        }
    }
    if names.is_empty() {
        return Err(parse_err(0, "no pieces"));
    }
    let pieces = faces
        .into_iter()
        .zip(&starts)
        .map(|(f, &n)| {
            if f.is_empty() {
                return Err(parse_err(n, "empty piece"));
            }
            Subcomplex::from_labeled_faces(parent.clone(), f).map_err(|e| parse_err(n, e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Cover::with_names(parent.clone(), pieces, names)?)
}

pub fn write_cover(cover: &Cover) -> String {
    let mut out = String::new();
    for (i, (piece, name)) in cover.pieces().iter().zip(cover.names()).enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("piece {name}\n"));
        for face in piece.labeled_facets() {
            out.push_str(&render_face(&face));
            out.push('\n');
        }
    }
    out
}

pub fn parse_map(
    text: &str,
    source: &Arc<SimplicialComplex>,
    target: &Arc<SimplicialComplex>,
) -> Result<SimplicialMap, IoError> {
    let mut pairs = Vec::new();
    for (n, l) in content_lines(text) {
        let (a, b) = l.split_once("->").ok_or_else(|| parse_err(n, "expected `u -> v`"))?;
        pairs.push((label_of(a, n)?, label_of(b, n)?));
    }
    Ok(SimplicialMap::from_labels(source.clone(), target.clone(), pairs)?)
}

pub fn write_map(map: &SimplicialMap) -> String {
    map.labeled_pairs().iter().map(|(a, b)| format!("{} -> {}\n", render_label(a), render_label(b))).collect()
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::File { path: path.display().to_string(), source })
}

pub fn read_complex(path: impl AsRef<Path>) -> Result<SimplicialComplex, IoError> {
    parse_complex(&read(path.as_ref())?)
}

pub fn read_cover(path: impl AsRef<Path>, parent: &Arc<SimplicialComplex>) -> Result<Cover, IoError> {
    parse_cover(&read(path.as_ref())?, parent)
}

pub fn read_map(
    path: impl AsRef<Path>,
    source: &Arc<SimplicialComplex>,
    target: &Arc<SimplicialComplex>,
) -> Result<SimplicialMap, IoError> {
    parse_map(&read(path.as_ref())?, source, target)
}
