//! Design files.
//!
//! JSON: `{ "n": 7, "blocks": [[0, 1, 3], ...], "labels": ["a", ...] }` with
//! 0-based point indices and optional labels.
//!
//! Plain text: one block per line, whitespace-separated point labels, `#`
//! starts a comment. Labels of the form `x1 … xn` map to points `0 … n-1`;
//! bare integers are taken as 0-based indices; anything else is numbered in
//! order of first appearance. A `#! points: …` line fixes the point order
//! and count explicitly.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CatalogError;
use crate::design::Design;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignFile {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&Design> for DesignFile {
    fn from(d: &Design) -> Self {
        Self {
            n: d.n_points(),
            blocks: d.blocks().to_vec(),
            labels: d.labels().map(<[String]>::to_vec),
        }
    }
}

impl TryFrom<DesignFile> for Design {
    type Error = CatalogError;

    fn try_from(f: DesignFile) -> Result<Self, CatalogError> {
        let d = Design::new(f.n, f.blocks)?;
        Ok(match f.labels {
            Some(labels) => d.with_labels(labels)?,
            None => d,
        })
    }
}

pub fn parse_design_json(text: &str) -> Result<Design, CatalogError> {
    let file: DesignFile = serde_json::from_str(text).map_err(|e| CatalogError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.try_into()
}

fn compact(value: &(impl Serialize + ?Sized)) -> String {
    serde_json::to_string(value).expect("design serializes")
}

/// Pretty JSON with one block per line.
pub fn to_json_string(design: &Design) -> String {
    let blocks: Vec<String> = design
        .blocks()
        .iter()
        .map(|b| format!("    {}", compact(b)))
        .collect();
    let mut s = format!(
        "{{\n  \"n\": {},\n  \"blocks\": [\n{}\n  ]",
        design.n_points(),
        blocks.join(",\n")
    );
    if let Some(labels) = design.labels() {
        s.push_str(&format!(",\n  \"labels\": {}", compact(labels)));
    }
    s.push_str("\n}\n");
    s
}

const POINTS_DIRECTIVE: &str = "#! points:";

pub fn parse_design_text(text: &str) -> Result<Design, CatalogError> {
    let mut declared: Option<Vec<String>> = None;
    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix(POINTS_DIRECTIVE) {
            declared = Some(rest.split_whitespace().map(str::to_owned).collect());
            continue;
        }
        let content = line.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            rows.push((i + 1, content.split_whitespace().collect()));
        }
    }
    if rows.is_empty() {
        return Err(CatalogError::Text {
            line: 1,
            message: "no blocks found".into(),
        });
    }

    if let Some(labels) = declared {
        let index: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut blocks = Vec::with_capacity(rows.len());
        for (line, tokens) in &rows {
            let block = tokens
                .iter()
                .map(|t| {
                    index.get(t).copied().ok_or_else(|| CatalogError::Text {
                        line: *line,
                        message: format!("label {t:?} is not in the points list"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            blocks.push(block);
        }
        return with_line(&rows, Design::new(labels.len(), blocks))?
            .with_labels(labels)
            .map_err(Into::into);
    }

    let all = || rows.iter().flat_map(|(_, t)| t.iter().copied());
    if all().all(|t| x_index(t).is_some()) {
        let blocks: Vec<Vec<usize>> = rows
            .iter()
            .map(|(_, t)| t.iter().map(|s| x_index(s).unwrap()).collect())
            .collect();
        let n = blocks.iter().flatten().max().map_or(0, |m| m + 1);
        return with_line(&rows, Design::new(n, blocks));
    }
    if all().all(|t| t.parse::<usize>().is_ok()) {
        let blocks: Vec<Vec<usize>> = rows
            .iter()
            .map(|(_, t)| t.iter().map(|s| s.parse().unwrap()).collect())
            .collect();
        let n = blocks.iter().flatten().max().map_or(0, |m| m + 1);
        return with_line(&rows, Design::new(n, blocks));
    }

    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    let blocks: Vec<Vec<usize>> = rows
        .iter()
        .map(|(_, tokens)| {
            tokens
                .iter()
                .map(|&t| {
                    *index.entry(t).or_insert_with(|| {
                        labels.push(t.to_owned());
                        labels.len() - 1
                    })
                })
                .collect()
        })
        .collect();
    with_line(&rows, Design::new(labels.len(), blocks))?
        .with_labels(labels)
        .map_err(Into::into)
}

/// `x7` -> 6. `x0` is not a valid label.
fn x_index(token: &str) -> Option<usize> {
    token
        .strip_prefix('x')
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&i| i >= 1)
        .map(|i| i - 1)
}

/// Attaches the source line to block-level structural errors.
fn with_line(
    rows: &[(usize, Vec<&str>)],
    result: Result<Design, crate::design::DesignError>,
) -> Result<Design, CatalogError> {
    use crate::design::DesignError as E;
    result.map_err(|e| match e {
        E::DuplicatePoint { block, .. }
        | E::PointOutOfRange { block, .. }
        | E::EmptyBlock { block } => CatalogError::Text {
            line: rows[block].0,
            message: e.to_string(),
        },
        other => other.into(),
    })
}

/// Plain-text form with a `#! points:` header, so that labels and point
/// order survive a round trip.
pub fn to_text(design: &Design) -> String {
    let labels: Vec<String> = (0..design.n_points())
        .map(|p| design.point_label(p))
        .collect();
    let mut out = format!("{POINTS_DIRECTIVE} {}\n", labels.join(" "));
    for block in design.blocks() {
        let row: Vec<&str> = block.iter().map(|&p| labels[p].as_str()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn is_json_path(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

/// Reads a design. `.json` files, and files whose first non-blank character
/// is `{`, are parsed as JSON; everything else as plain text.
pub fn load_design(path: impl AsRef<Path>) -> Result<Design, CatalogError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    if is_json_path(path) || text.trim_start().starts_with('{') {
        parse_design_json(&text)
    } else {
        parse_design_text(&text)
    }
}

/// Writes JSON for `.json` paths, plain text otherwise.
pub fn save_design(design: &Design, path: impl AsRef<Path>) -> Result<(), CatalogError> {
    let path = path.as_ref();
    let body = if is_json_path(path) {
        to_json_string(design)
    } else {
        to_text(design)
    };
    std::fs::write(path, body).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{verify_design, DesignError, DesignParams};

    #[test]
    fn plain_text_fig3() {
        let text = "# biplane on four points\nx1 x2 x3\nx1 x2 x4\nx1 x3 x4\nx2 x3 x4\n";
        let d = parse_design_text(text).unwrap();
        assert_eq!(
            verify_design(&d).unwrap().params,
            Some(DesignParams::symmetric(4, 3, 2))
        );
    }

    #[test]
    fn arbitrary_labels_keep_first_appearance_order() {
        let d = parse_design_text("a b\nb c\na c\n").unwrap();
        assert_eq!(d.labels().unwrap(), &["a", "b", "c"]);
        assert_eq!(d.blocks(), &[vec![0, 1], vec![1, 2], vec![0, 2]]);
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let err = parse_design_text("x1 x2\n\nx3 x3\n").unwrap_err();
        match err {
            CatalogError::Text { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("more than once"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_design_text("# nothing\n"),
            Err(CatalogError::Text { .. })
        ));
    }

    #[test]
    fn json_errors() {
        let err = parse_design_json("{\"n\": 3, \"blocks\": [[0, 1], [1, 1]]}").unwrap_err();
        assert!(matches!(
            err,
            CatalogError::Design(DesignError::DuplicatePoint { block: 1, point: 1 })
        ));
        let err = parse_design_json("{\"n\": 3, \"blocks\": [[0, 5]]}").unwrap_err();
        assert!(err.to_string().contains("point 5"));
        let err = parse_design_json("{\"n\": 3,\n \"blocks\": [[0, 1]").unwrap_err();
        assert!(matches!(err, CatalogError::Json { line: 2, .. }));
    }

    #[test]
    fn json_labels_must_match_point_count() {
        let err =
            parse_design_json(r#"{"n": 3, "blocks": [[0, 1]], "labels": ["a"]}"#).unwrap_err();
        assert!(matches!(
            err,
            CatalogError::Design(DesignError::LabelCount {
                expected: 3,
                got: 1
            })
        ));
    }
}
