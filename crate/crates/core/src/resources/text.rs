//! Line-oriented reading shared by every resource format.

use std::fs;
use std::path::Path;

use crate::error::ResourceError;

pub(crate) fn read_file(path: &Path) -> Result<String, ResourceError> {
    fs::read_to_string(path).map_err(|source| ResourceError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Yields `(1-based line number, trimmed content)` for every line that is not
/// blank and not a `#` comment.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

/// Splits a TSV row into exactly `n` trimmed columns.
pub(crate) fn columns<'a>(
    source: &str,
    line_no: usize,
    line: &'a str,
    n: usize,
) -> Result<Vec<&'a str>, ResourceError> {
    let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
    if cols.len() != n {
        return Err(ResourceError::malformed(
            source,
            line_no,
            format!("expected {n} tab-separated columns, found {}", cols.len()),
        ));
    }
    Ok(cols)
}

pub(crate) fn is_alphabetic_word(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphabetic())
}
