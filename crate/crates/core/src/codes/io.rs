//! Plain-text matrix files: a `rows cols` header line followed by one line of
//! space-separated 0/1 entries per row. A code file holds `G` and, optionally,
//! `H` immediately after it. Blank lines and `#` comments are ignored.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

pub fn write_matrix<W: Write>(w: &mut W, m: &BitMatrix) -> std::io::Result<()> {
    writeln!(w, "{} {}", m.rows(), m.cols())?;
    let mut line = String::with_capacity(2 * m.cols());
    for r in 0..m.rows() {
        line.clear();
        for c in 0..m.cols() {
            if c > 0 {
                line.push(' ');
            }
            line.push(if m.get(r, c) { '1' } else { '0' });
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}

pub fn save_code(path: impl AsRef<Path>, code: &LinearCode) -> Result<()> {
    let mut buf = Vec::new();
    write_matrix(&mut buf, code.generator())?;
    write_matrix(&mut buf, code.parity_check())?;
    fs::write(path, buf)?;
    Ok(())
}

/// Parses all matrices in a file.
pub fn parse_matrices(path: &Path, text: &str) -> Result<Vec<BitMatrix>> {
    let err = |line: usize, msg: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut out = Vec::new();
    while let Some((ln, header)) = lines.next() {
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(ln, format!("expected `rows cols`, got `{header}`")))?;
        let [rows, cols] = dims[..] else {
            return Err(err(ln, format!("expected `rows cols`, got `{header}`")));
        };
        let mut m = BitMatrix::zeros(rows, cols);
        let mut last = ln;
        for r in 0..rows {
            let (ln, row) = lines
                .next()
                .ok_or_else(|| err(last, format!("matrix ends after {r} of {rows} rows")))?;
            last = ln;
            let entries: Vec<&str> = row.split_whitespace().collect();
            if entries.len() != cols {
                return Err(err(
                    ln,
                    format!("{} entries, expected {cols}", entries.len()),
                ));
            }
            for (c, e) in entries.iter().enumerate() {
                match *e {
                    "0" => {}
                    "1" => m.set(r, c, true),
                    other => return Err(err(ln, format!("entry `{other}` is not 0 or 1"))),
                }
            }
        }
        out.push(m);
    }
    Ok(out)
}

/// Loads a code file. `H` is derived from `G` when absent; when present, both
/// code invariants are checked and a violation is reported as a corrupt code.
pub fn load_code(path: impl AsRef<Path>) -> Result<LinearCode> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    let mut mats = parse_matrices(path, &text)?.into_iter();
    let name = path
        .file_stem()
        .map_or_else(|| "code".to_string(), |s| s.to_string_lossy().into_owned());
    let g = mats.next().ok_or_else(|| Error::Parse {
        path: path.to_path_buf(),
        line: 1,
        msg: "no generator matrix".into(),
    })?;
    let code = match mats.next() {
        Some(h) => LinearCode::from_generator_and_check(name, g, h),
        None => LinearCode::from_generator(name, g),
    };
    code.map_err(|e| match e {
        Error::Singular { .. } | Error::Shape(_) => Error::CorruptCode(e.to_string()),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors_carry_line_numbers() {
        let p = Path::new("x.txt");
        let e = parse_matrices(p, "2 3\n1 0 1\n0 2 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_matrices(p, "# c\n2 3\n1 0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse_matrices(p, "two 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn matrix_text_layout() {
        let m = BitMatrix::from_rows(&[[1u8, 0, 1], [0, 1, 1]]).unwrap();
        let mut buf = Vec::new();
        write_matrix(&mut buf, &m).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "2 3\n1 0 1\n0 1 1\n");
    }
}
