//! The line-oriented CCX text format.
//!
//! ```text
//! ccx 1
//! # a square with a pendant edge
//! cube a b c d
//! cube d e
//! ```

use super::CubeComplex;
use crate::error::{Error, Result};

pub const CCX_HEADER: &str = "ccx 1";

/// Parses a CCX document into the face-closure of its cubes.
pub fn parse_ccx(text: &str) -> Result<CubeComplex> {
    let mut header_seen = false;
    let mut records: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !header_seen {
            if content.split_whitespace().collect::<Vec<_>>() != ["ccx", "1"] {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `{CCX_HEADER}` header, found `{content}`"),
                });
            }
            header_seen = true;
            continue;
        }
        let mut words = content.split_whitespace();
        match words.next() {
            Some("cube") => {}
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown directive `{other}`"),
                })
            }
            None => unreachable!(),
        }
        let corners: Vec<String> = words.map(str::to_owned).collect();
        records.push((line, corners));
    }
    if !header_seen {
        return Err(Error::Parse {
            line: 1,
            message: format!("missing `{CCX_HEADER}` header"),
        });
    }
    // report errors against the physical line of the offending record
    for (line, rec) in &records {
        if let Err(e) = CubeComplex::from_cubes([rec]) {
            return Err(match e {
                Error::Parse { message, .. } => Error::Parse {
                    line: *line,
                    message,
                },
                Error::DuplicateCorner { token, .. } => {
                    Error::DuplicateCorner { line: *line, token }
                }
                other => other,
            });
        }
    }
    CubeComplex::from_cubes(records.iter().map(|(_, r)| r))
}

/// Canonical CCX text: maximal cubes only, sorted lexicographically by their
/// corner tokens.
pub fn emit_ccx(x: &CubeComplex) -> String {
    let mut lines: Vec<Vec<&str>> = x
        .maximal_cubes()
        .into_iter()
        .map(|id| x.cube_tokens(id))
        .collect();
    lines.sort();
    let mut out = String::from(CCX_HEADER);
    out.push('\n');
    for l in lines {
        out.push_str("cube ");
        out.push_str(&l.join(" "));
        out.push('\n');
    }
    out
}
