//! CSV re-import of solver outputs: nodal fields (`s,u`) and profiles
//! (`y,H,...`).
//!
//! The `stability` front end accepts files produced by earlier `minimize` or
//! `profile` runs, so this parser must survive arbitrary bytes. Column
//! dispatch is by header name; extra columns are ignored.

use thiserror::Error;

/// Parse failure with 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("field csv parse error at line {line}: {message}")]
pub struct FieldParseError {
    pub line: usize,
    pub message: String,
}

/// Data recovered from a CSV dump.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldData {
    /// Nodal field `u(s)` on [0, 1] (from `minimize` dumps).
    Nodal { s: Vec<f64>, u: Vec<f64> },
    /// Inverse-stretch profile `H(y)` on [0, lambda] (from `profile` dumps).
    Profile { y: Vec<f64>, h: Vec<f64> },
}

/// Parse a CSV dump, dispatching on the header row.
pub fn parse_field_csv(text: &str) -> Result<FieldData, FieldParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or(FieldParseError { line: 1, message: "empty input".into() })?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    let find = |name: &str| columns.iter().position(|c| *c == name);

    let (xi, vi, kind) = if let (Some(si), Some(ui)) = (find("s"), find("u")) {
        (si, ui, 0)
    } else if let (Some(yi), Some(hi)) = (find("y"), find("H")) {
        (yi, hi, 1)
    } else {
        return Err(FieldParseError {
            line: 1,
            message: format!("unrecognized header `{header}`: need columns s,u or y,H"),
        });
    };

    let mut xs = Vec::new();
    let mut vs = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() <= xi.max(vi) {
            return Err(FieldParseError {
                line: line_no,
                message: format!("expected at least {} columns", xi.max(vi) + 1),
            });
        }
        let parse = |cell: &str| -> Result<f64, FieldParseError> {
            cell.parse::<f64>().map_err(|_| FieldParseError {
                line: line_no,
                message: format!("malformed number `{cell}`"),
            })
        };
        let x = parse(cells[xi])?;
        let v = parse(cells[vi])?;
        if !x.is_finite() || !v.is_finite() {
            return Err(FieldParseError { line: line_no, message: "non-finite value".into() });
        }
        xs.push(x);
        vs.push(v);
    }
    if xs.len() < 2 {
        return Err(FieldParseError { line: 1, message: "need at least two data rows".into() });
    }
    if !xs.windows(2).all(|w| w[1] > w[0]) {
        return Err(FieldParseError {
            line: 1,
            message: "abscissa column must be strictly increasing".into(),
        });
    }
    Ok(match kind {
        0 => FieldData::Nodal { s: xs, u: vs },
        _ => FieldData::Profile { y: xs, h: vs },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nodal_dump() {
        let data = parse_field_csv("s,u\n0,0.5\n0.5,-0.1\n1,0.2\n").unwrap();
        match data {
            FieldData::Nodal { s, u } => {
                assert_eq!(s, vec![0.0, 0.5, 1.0]);
                assert_eq!(u, vec![0.5, -0.1, 0.2]);
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn parses_profile_dump_ignoring_extra_columns() {
        let data = parse_field_csv("y,H,u,h\n0,0.9,0.1,0\n1,0.0,-1,0.5\n").unwrap();
        assert!(matches!(data, FieldData::Profile { .. }));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_field_csv("").is_err());
        assert!(parse_field_csv("a,b\n1,2\n").is_err());
        assert!(parse_field_csv("s,u\n0,x\n1,0\n").is_err());
        assert!(parse_field_csv("s,u\n0,1\n").is_err());
        assert!(parse_field_csv("s,u\n1,0\n0,1\n").is_err(), "non-monotone abscissa");
        assert!(parse_field_csv("s,u\n0,inf\n1,0\n").is_err(), "non-finite");
    }
}
