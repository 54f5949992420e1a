//! Vendored reference sequences.
//!
//! One file per sequence, named `<id>.txt`, holding comma- or
//! whitespace-separated terms for `n = 1, 2, …`. Lines starting with `#`
//! are comments.

use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub const SEQUENCE_IDS: [&str; 5] = ["A111281", "A084509", "A025192", "A045925", "A214663"];

/// The directory shipped with the crate.
pub fn bundled_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join("oeis")
}

pub fn parse_sequence(text: &str) -> Result<Vec<BigUint>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.starts_with('#'))
        .flat_map(|l| l.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<BigUint>().map_err(|_| Error::Parse(format!("bad sequence term {t:?}"))))
        .collect()
}

pub fn load_sequence(dir: &Path, id: &str) -> Result<Vec<BigUint>> {
    let path = dir.join(format!("{id}.txt"));
    let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_sequence(&text)
}

/// The `n`-th term (1-based), if the file has that many.
pub fn term(seq: &[BigUint], n: usize) -> Option<&BigUint> {
    n.checked_sub(1).and_then(|i| seq.get(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_separators() {
        let s = parse_sequence("# header\n1, 2, 6,\n24 96\n").unwrap();
        let want: Vec<BigUint> = [1u32, 2, 6, 24, 96].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(s, want);
        assert!(parse_sequence("1, x").is_err());
    }

    #[test]
    fn bundled_files_load() {
        for id in SEQUENCE_IDS {
            let s = load_sequence(&bundled_dir(), id).unwrap();
            assert!(s.len() >= 12, "{id}");
            assert_eq!(term(&s, 1), Some(&BigUint::from(1u32)));
        }
        assert!(load_sequence(&bundled_dir(), "A000000").is_err());
    }
}
