//! Reading OEIS b-files and comparing them with computed sequences.

use serde::Serialize;

use crate::error::{Error, Result};

/// A parsed b-file: `(n, a(n))` pairs in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub terms: Vec<(u64, u128)>,
}

impl BFile {
    /// Parses lines of the form `n a(n)`; blank lines and `#` comments are
    /// skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: &str| Error::BFile {
                line: lineno + 1,
                message: message.to_string(),
            };
            let mut fields = line.split_whitespace();
            let n = fields
                .next()
                .ok_or_else(|| bad("missing index"))?
                .parse::<u64>()
                .map_err(|_| bad("index is not a nonnegative integer"))?;
            let value = fields
                .next()
                .ok_or_else(|| bad("missing value"))?
                .parse::<u128>()
                .map_err(|_| bad("value is not a nonnegative integer"))?;
            if fields.next().is_some() {
                return Err(bad("trailing fields"));
            }
            terms.push((n, value));
        }
        Ok(BFile { terms })
    }

    /// Value at index `n`, if present.
    pub fn get(&self, n: u64) -> Option<u128> {
        self.terms.iter().find(|(i, _)| *i == n).map(|&(_, v)| v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub index: u64,
    pub expected: String,
    pub computed: String,
}

/// Outcome of comparing a computed sequence with a b-file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    /// Number of indices present in both.
    pub compared: usize,
    /// First index (in b-file order) where the values differ.
    pub first_divergence: Option<Divergence>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.first_divergence.is_none()
    }
}

/// Compares `computed[n - offset]` with each b-file term it covers.
pub fn compare(bfile: &BFile, offset: u64, computed: &[u128]) -> Comparison {
    let mut compared = 0;
    for &(n, expected) in &bfile.terms {
        let Some(i) = n.checked_sub(offset) else {
            continue;
        };
        let Some(&value) = computed.get(i as usize) else {
            continue;
        };
        compared += 1;
        if value != expected {
            return Comparison {
                compared,
                first_divergence: Some(Divergence {
                    index: n,
                    expected: expected.to_string(),
                    computed: value.to_string(),
                }),
            };
        }
    }
    Comparison {
        compared,
        first_divergence: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_compare() {
        let b = BFile::parse("# n_g\n0 1\n1 1\n\n2 2\n3 4\n").unwrap();
        assert_eq!(b.terms.len(), 4);
        assert_eq!(b.get(3), Some(4));
        let ok = compare(&b, 0, &[1, 1, 2]);
        assert!(ok.agrees());
        assert_eq!(ok.compared, 3);
        let bad = compare(&b, 0, &[1, 1, 3, 4]);
        assert_eq!(bad.first_divergence.unwrap().index, 2);
    }

    #[test]
    fn offset_skips_earlier_terms() {
        let b = BFile::parse("0 9\n1 5\n2 6").unwrap();
        let c = compare(&b, 1, &[5, 6]);
        assert!(c.agrees());
        assert_eq!(c.compared, 2);
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(
            BFile::parse("0 1\nx 2\n").unwrap_err(),
            Error::BFile { line: 2, message: "index is not a nonnegative integer".into() }
        );
        assert!(BFile::parse("0\n").is_err());
        assert!(BFile::parse("0 1 2\n").is_err());
    }
}
