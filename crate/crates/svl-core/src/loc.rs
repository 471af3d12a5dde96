//! Source locations, source units and diagnostics shared by every pass.

use std::fmt;
use std::sync::Arc;

/// A source position, 1-based line and column.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Loc {
    pub file: Arc<str>,
    pub line: u32,
    pub col: u32,
}

impl Loc {
    pub fn new(file: impl Into<Arc<str>>, line: u32, col: u32) -> Self {
        Loc { file: file.into(), line, col }
    }

    /// Placeholder location used by location-insensitive AST comparison.
    pub fn dummy() -> Self {
        Loc { file: Arc::from(""), line: 0, col: 0 }
    }
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.line, self.col)
    }
}

impl fmt::Debug for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One frontend or dimension message, ordered by (file, line, column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub loc: Loc,
    pub message: String,
}

impl Diagnostic {
    pub fn new(loc: Loc, message: impl Into<String>) -> Self {
        Diagnostic { loc, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.loc, self.message)
    }
}

/// Sort diagnostics into the stable reporting order.
pub fn sort_diagnostics(diags: &mut [Diagnostic]) {
    diags.sort_by(|a, b| a.loc.cmp(&b.loc).then_with(|| a.message.cmp(&b.message)));
}

/// One SVL source file plus its line-offset index.
#[derive(Clone, Debug)]
pub struct SourceUnit {
    pub path: Arc<str>,
    pub text: String,
    line_starts: Vec<usize>,
}

impl SourceUnit {
    pub fn new(path: impl Into<Arc<str>>, text: impl Into<String>) -> Self {
        let text = text.into();
        let mut line_starts = vec![0];
        for (i, b) in text.bytes().enumerate() {
            if b == b'\n' {
                line_starts.push(i + 1);
            }
        }
        SourceUnit { path: path.into(), text, line_starts }
    }

    /// Location of a byte offset; offsets at or past the end map to the
    /// final position so error messages never point outside the file.
    pub fn loc_at(&self, byte: usize) -> Loc {
        let byte = byte.min(self.text.len());
        let line = match self.line_starts.binary_search(&byte) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        Loc {
            file: self.path.clone(),
            line: (line + 1) as u32,
            col: (byte - self.line_starts[line] + 1) as u32,
        }
    }

    /// True when `loc` points inside this unit's text.
    pub fn contains(&self, loc: &Loc) -> bool {
        if loc.file != self.path || loc.line == 0 {
            return false;
        }
        let line = (loc.line - 1) as usize;
        if line >= self.line_starts.len() {
            return false;
        }
        let start = self.line_starts[line];
        let end = self
            .line_starts
            .get(line + 1)
            .copied()
            .unwrap_or(self.text.len() + 1);
        let width = end.saturating_sub(start).max(1);
        (loc.col as usize) >= 1 && (loc.col as usize) <= width
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_index_covers_every_byte() {
        let u = SourceUnit::new("t.svl", "ab\ncd\n\nx");
        assert_eq!(u.loc_at(0).line, 1);
        assert_eq!(u.loc_at(2).line, 1); // the newline itself
        assert_eq!(u.loc_at(3), Loc::new("t.svl", 2, 1));
        assert_eq!(u.loc_at(6), Loc::new("t.svl", 3, 1));
        assert_eq!(u.loc_at(7), Loc::new("t.svl", 4, 1));
        // past-the-end clamps
        assert_eq!(u.loc_at(999).line, 4);
    }

    #[test]
    fn contains_rejects_foreign_and_outside() {
        let u = SourceUnit::new("t.svl", "ab\ncd");
        assert!(u.contains(&Loc::new("t.svl", 1, 1)));
        assert!(u.contains(&Loc::new("t.svl", 2, 2)));
        assert!(!u.contains(&Loc::new("other.svl", 1, 1)));
        assert!(!u.contains(&Loc::new("t.svl", 9, 1)));
    }
}
