//! Text formats: grids, orthogonal arrays, isotopisms, paratopisms, and
//! classification catalogs. Everything is 1-based on disk.

use std::fmt;

use paratopy::{
    ClassKind, ConjugateTag, Error, Isotopism, LatinSquare, OrthogonalArray, Paratopism,
    Permutation,
};

/// Errors from reading the text formats. Lines are 1-based.
#[derive(Debug)]
pub enum FormatError {
    Parse { line: usize, message: String },
    Validation { line: usize, source: Error },
}

impl FormatError {
    fn parse(line: usize, message: impl Into<String>) -> Self {
        FormatError::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            FormatError::Parse { .. } => "parse-error",
            FormatError::Validation { .. } => "validation-error",
        }
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Parse { line, message } => {
                write!(f, "line {line}: {message}")
            }
            FormatError::Validation { line, source } => {
                write!(f, "line {line}: {source}")
            }
        }
    }
}

impl std::error::Error for FormatError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            FormatError::Validation { source, .. } => Some(source),
            _ => None,
        }
    }
}

fn non_empty_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

/// Parses the "grid" format: n lines of n space-separated symbols in 1..n.
/// 0-based grids are rejected, not shifted.
pub fn parse_grid(text: &str) -> Result<LatinSquare, FormatError> {
    let lines = non_empty_lines(text);
    if lines.is_empty() {
        return Err(FormatError::parse(1, "empty grid"));
    }
    let n = lines.len();
    if n > 255 {
        return Err(FormatError::parse(1, "order exceeds 255"));
    }
    let mut cells = Vec::with_capacity(n * n);
    for (row_idx, (line_no, line)) in lines.iter().enumerate() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != n {
            return Err(FormatError::parse(
                *line_no,
                format!("expected {n} entries, found {}", tokens.len()),
            ));
        }
        for (col_idx, token) in tokens.iter().enumerate() {
            let value: i64 = token
                .parse()
                .map_err(|_| FormatError::parse(*line_no, format!("bad integer {token:?}")))?;
            if value < 1 || value > n as i64 {
                return Err(FormatError::Validation {
                    line: *line_no,
                    source: Error::EntryOutOfRange {
                        row: row_idx + 1,
                        col: col_idx + 1,
                    },
                });
            }
            cells.push((value - 1) as u8);
        }
    }
    LatinSquare::try_new(n, cells).map_err(|source| {
        let line = match source {
            Error::RowDuplicate { row } => lines[row - 1].0,
            _ => lines[0].0,
        };
        FormatError::Validation { line, source }
    })
}

/// The grid format with a trailing newline, ready to write to disk.
pub fn format_grid(square: &LatinSquare) -> String {
    format!("{square}\n")
}

/// Parses the "oa" format: three lines of n² space-separated entries, the
/// rows of the 3×n² matrix.
pub fn parse_oa(text: &str) -> Result<OrthogonalArray, FormatError> {
    let lines = non_empty_lines(text);
    if lines.len() != 3 {
        return Err(FormatError::parse(
            lines.first().map(|(k, _)| *k).unwrap_or(1),
            format!("expected 3 rows, found {}", lines.len()),
        ));
    }
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(3);
    for (line_no, line) in &lines {
        let mut row = Vec::new();
        for token in line.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| FormatError::parse(*line_no, format!("bad integer {token:?}")))?;
            if !(1..=255).contains(&value) {
                return Err(FormatError::parse(*line_no, format!("entry {value} out of range")));
            }
            row.push((value - 1) as u8);
        }
        rows.push(row);
    }
    let m = rows[0].len();
    if rows[1].len() != m || rows[2].len() != m {
        return Err(FormatError::parse(lines[1].0, "rows differ in length"));
    }
    let n = (1..=255usize).find(|k| k * k == m).ok_or_else(|| {
        FormatError::parse(lines[0].0, format!("row length {m} is not a square"))
    })?;
    let triples = (0..m).map(|k| [rows[0][k], rows[1][k], rows[2][k]]).collect();
    OrthogonalArray::from_triples(n, triples)
        .map_err(|source| FormatError::Validation { line: lines[0].0, source })
}

pub fn format_oa(oa: &OrthogonalArray) -> String {
    let mut out = String::new();
    for comp in 0..3 {
        let row: Vec<String> = oa
            .triples()
            .iter()
            .map(|t| (t[comp] as usize + 1).to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses "α; β; γ" with permutations in one-row form.
pub fn parse_isotopism(text: &str) -> Result<Isotopism, FormatError> {
    let parts: Vec<&str> = text.split(';').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(FormatError::parse(
            1,
            format!("expected 3 fields separated by ';', found {}", parts.len()),
        ));
    }
    let mut perms = Vec::with_capacity(3);
    for part in &parts {
        perms.push(
            Permutation::parse_one_row(part)
                .map_err(|source| FormatError::Validation { line: 1, source })?,
        );
    }
    let sym = perms.pop().unwrap();
    let col = perms.pop().unwrap();
    let row = perms.pop().unwrap();
    Isotopism::new(row, col, sym).map_err(|source| FormatError::Validation { line: 1, source })
}

/// Parses "α; β; γ; η" with η in cycle or bracket form.
pub fn parse_paratopism(text: &str) -> Result<Paratopism, FormatError> {
    let parts: Vec<&str> = text.split(';').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(FormatError::parse(
            1,
            format!("expected 4 fields separated by ';', found {}", parts.len()),
        ));
    }
    let iso = parse_isotopism(&parts[..3].join("; "))?;
    let tag = ConjugateTag::parse(parts[3])
        .map_err(|_| FormatError::parse(1, format!("unknown conjugate tag {:?}", parts[3])))?;
    Ok(Paratopism::new(iso, tag))
}

/// One catalog line: a square plus its classification metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogRecord {
    pub square: LatinSquare,
    pub kind: ClassKind,
    pub class_index: usize,
    pub class_size: u64,
    pub stabilizer_order: u64,
}

/// The catalog format: per line, n² space-separated cells (row-major),
/// then tab-separated kind, class index, class size, stabilizer order.
/// Every reduced member of every class gets a line. Classes appear in
/// representative order and members ascend within a class.
pub fn format_catalog(records: &[CatalogRecord]) -> String {
    debug_assert!(records
        .windows(2)
        .all(|w| w[0].class_index < w[1].class_index
            || (w[0].class_index == w[1].class_index && w[0].square < w[1].square)));
    let mut out = String::new();
    for rec in records {
        let cells: Vec<String> = rec
            .square
            .cells()
            .iter()
            .map(|&v| (v as usize + 1).to_string())
            .collect();
        out.push_str(&cells.join(" "));
        out.push_str(&format!(
            "\t{}\t{}\t{}\t{}\n",
            rec.kind.name(),
            rec.class_index,
            rec.class_size,
            rec.stabilizer_order
        ));
    }
    out
}

/// Reads a catalog, validating every square.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogRecord>, FormatError> {
    let mut records = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(FormatError::parse(
                line_no,
                format!("expected 5 tab-separated fields, found {}", fields.len()),
            ));
        }
        let cell_tokens: Vec<&str> = fields[0].split_whitespace().collect();
        let m = cell_tokens.len();
        let n = (1..=255usize)
            .find(|k| k * k == m)
            .ok_or_else(|| FormatError::parse(line_no, format!("{m} cells is not a square")))?;
        let mut cells = Vec::with_capacity(m);
        for token in cell_tokens {
            let value: i64 = token
                .parse()
                .map_err(|_| FormatError::parse(line_no, format!("bad integer {token:?}")))?;
            if value < 1 || value > n as i64 {
                return Err(FormatError::Validation {
                    line: line_no,
                    source: Error::EntryOutOfRange {
                        row: (cells.len() / n) + 1,
                        col: (cells.len() % n) + 1,
                    },
                });
            }
            cells.push((value - 1) as u8);
        }
        let square = LatinSquare::try_new(n, cells)
            .map_err(|source| FormatError::Validation { line: line_no, source })?;
        let kind = ClassKind::parse(fields[1])
            .map_err(|_| FormatError::parse(line_no, format!("unknown kind {:?}", fields[1])))?;
        let class_index = fields[2]
            .parse()
            .map_err(|_| FormatError::parse(line_no, "bad class index"))?;
        let class_size = fields[3]
            .parse()
            .map_err(|_| FormatError::parse(line_no, "bad class size"))?;
        let stabilizer_order = fields[4]
            .parse()
            .map_err(|_| FormatError::parse(line_no, "bad stabilizer order"))?;
        records.push(CatalogRecord {
            square,
            kind,
            class_index,
            class_size,
            stabilizer_order,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_round_trip() {
        let text = "1 2 3\n2 3 1\n3 1 2\n";
        let sq = parse_grid(text).unwrap();
        assert_eq!(format_grid(&sq), text);
    }

    #[test]
    fn grid_rejects_zero_based_input() {
        let err = parse_grid("0 1\n1 0\n").unwrap_err();
        assert!(matches!(
            err,
            FormatError::Validation {
                source: Error::EntryOutOfRange { row: 1, col: 1 },
                ..
            }
        ));
    }

    #[test]
    fn grid_reports_duplicate_column() {
        let err = parse_grid("1 2\n1 2\n").unwrap_err();
        assert!(matches!(
            err,
            FormatError::Validation {
                source: Error::ColumnDuplicate { col: 1 },
                ..
            }
        ));
    }

    #[test]
    fn grid_reports_ragged_lines() {
        let err = parse_grid("1 2\n2\n").unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 2, .. }));
    }

    #[test]
    fn oa_round_trip() {
        let sq = parse_grid("1 2\n2 1\n").unwrap();
        let oa = OrthogonalArray::from_square(&sq);
        let text = format_oa(&oa);
        assert_eq!(text, "1 1 2 2\n1 2 1 2\n1 2 2 1\n");
        let back = parse_oa(&text).unwrap();
        assert_eq!(back, oa);
        assert_eq!(back.to_square().unwrap(), sq);
    }

    #[test]
    fn oa_rejects_wrong_row_count() {
        assert!(matches!(
            parse_oa("1 1\n1 2\n").unwrap_err(),
            FormatError::Parse { .. }
        ));
    }

    #[test]
    fn isotopism_and_paratopism_round_trip() {
        let iso = parse_isotopism("2 1 3; 1 3 2; 3 2 1").unwrap();
        assert_eq!(iso.to_string(), "2 1 3; 1 3 2; 3 2 1");
        let par = parse_paratopism("2 1 3; 1 3 2; 3 2 1; (2 3)").unwrap();
        assert_eq!(par.to_string(), "2 1 3; 1 3 2; 3 2 1; (2 3)");
        let par2 = parse_paratopism("2 1 3; 1 3 2; 3 2 1; rec").unwrap();
        assert_eq!(par, par2);
    }

    #[test]
    fn isotopism_rejects_mixed_degrees() {
        assert!(parse_isotopism("2 1; 1 3 2; 3 2 1").is_err());
    }

    #[test]
    fn catalog_round_trip() {
        let sq = parse_grid("1 2\n2 1\n").unwrap();
        let records = vec![CatalogRecord {
            square: sq,
            kind: ClassKind::MainClass,
            class_index: 1,
            class_size: 1,
            stabilizer_order: 24,
        }];
        let text = format_catalog(&records);
        assert_eq!(text, "1 2 2 1\tmain-class\t1\t1\t24\n");
        assert_eq!(parse_catalog(&text).unwrap(), records);
    }

    #[test]
    fn catalog_rejects_invalid_square() {
        let err = parse_catalog("1 2 2 2\tmain-class\t1\t1\t24\n").unwrap_err();
        assert!(matches!(
            err,
            FormatError::Validation { line: 1, .. }
        ));
        let err2 = parse_catalog("1 2 2 1\tspecies\t1\t1\t24\n").unwrap_err();
        assert!(matches!(err2, FormatError::Parse { line: 1, .. }));
    }
}
