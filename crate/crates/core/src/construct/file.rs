//! Group files: a `degree <n>` line followed by one generator per line in
//! 1-based disjoint-cycle notation. `#` starts a comment.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

/// Parses the text of a group file into a degree and generator list.
pub fn parse_group_text(path: &Path, text: &str) -> Result<(usize, Vec<Permutation>)> {
    let err = |line: usize, message: String| Error::GroupFile {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut degree = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let n = line
                    .strip_prefix("degree")
                    .map(str::trim)
                    .and_then(|t| t.parse::<usize>().ok())
                    .filter(|&n| n > 0)
                    .ok_or_else(|| {
                        err(line_no, format!("expected `degree <n>`, found {line:?}"))
                    })?;
                degree = Some(n);
            }
            Some(n) => {
                let g = Permutation::parse_cycles(n, line)
                    .map_err(|e| err(line_no, e.to_string()))?;
                gens.push(g);
            }
        }
    }
    let last = text.lines().count().max(1);
    let degree = degree.ok_or_else(|| err(last, "missing `degree <n>` line".into()))?;
    if gens.is_empty() {
        return Err(err(last, "no generators given".into()));
    }
    Ok((degree, gens))
}

pub fn load_group(path: &Path, cap: usize) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path)?;
    let (degree, gens) = parse_group_text(path, &text)?;
    PermGroup::with_cap(degree, gens, cap)
}

pub fn group_text(g: &PermGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    if g.generators().is_empty() {
        out.push_str("()\n");
    }
    for gen in g.generators() {
        let _ = writeln!(out, "{gen}");
    }
    out
}

pub fn save_group(g: &PermGroup, path: &Path) -> Result<()> {
    std::fs::write(path, group_text(g))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::named::weyl_b;
    use crate::permcore::DEFAULT_MAX_ORDER as CAP;

    #[test]
    fn s3_from_text() {
        let (n, gens) = parse_group_text(Path::new("s3"), "degree 3\n(1,2,3)\n(1,2)\n").unwrap();
        let g = PermGroup::new(n, gens).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn comments_and_identity() {
        let text = "# S3\n\ndegree 3  # three points\n()\n(1,2,3) # rotation\n";
        let (n, gens) = parse_group_text(Path::new("x"), text).unwrap();
        assert_eq!(n, 3);
        assert_eq!(gens.len(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = parse_group_text(Path::new("f"), "degree 3\n").unwrap_err();
        assert!(e.to_string().contains("no generators"));
        match parse_group_text(Path::new("f"), "degree 3\n(1,2)\n(1,5)\n") {
            Err(Error::GroupFile { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_group_text(Path::new("f"), "deg 3\n(1,2)\n") {
            Err(Error::GroupFile { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn save_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("wb3.grp");
        let g = weyl_b(3, CAP).unwrap();
        save_group(&g, &path).unwrap();
        let h = load_group(&path, CAP).unwrap();
        let a: Vec<_> = g.elements().collect();
        let b: Vec<_> = h.elements().collect();
        assert_eq!(a, b);
    }
}
