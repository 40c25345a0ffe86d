//! Built-in designs, known symmetric-design parameters, and design files.
//!
//! The `fig*` entries are four small designs whose star graphs are the
//! standard first examples of bigeodetic blocks. Their block lists are kept
//! verbatim with `x_i` mapped to point `i - 1`.

mod io;

pub use io::{
    load_design, parse_design_json, parse_design_text, save_design, to_json_string, to_text,
    DesignFile,
};

use std::fmt;

use serde::Serialize;

use crate::design::{develop_difference_set, verify_design, Design, DesignParams};

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog design {name:?}; available: {}", .available.join(", "))]
    Unknown {
        name: String,
        available: Vec<&'static str>,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("JSON error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {message}")]
    Text { line: usize, message: String },
    #[error(transparent)]
    Design(#[from] crate::design::DesignError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    /// Block list stored verbatim.
    Transcribed,
    /// Cyclic development of a difference set.
    DifferenceSet {
        residues: Vec<usize>,
        modulus: usize,
    },
    /// Stored block list from a known construction.
    ExternalConstruction { note: &'static str },
    /// Generated by enumeration or complementation.
    Derived { note: &'static str },
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Transcribed => f.write_str("transcribed block list"),
            Self::DifferenceSet { residues, modulus } => {
                write!(f, "difference set {residues:?} mod {modulus}")
            }
            Self::ExternalConstruction { note } | Self::Derived { note } => f.write_str(note),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub design: Design,
    pub params: DesignParams,
    pub source: Source,
}

const NAMES: &[&str] = &[
    "fig1",
    "fig2",
    "fig3",
    "fig4",
    "fano",
    "biplane-11",
    "biplane-16",
    "triplane-5",
    "triplane-11",
];

// 1-based, as printed.
const FIG1: &[[usize; 3]] = &[
    [1, 2, 4],
    [1, 2, 3],
    [3, 4, 5],
    [2, 4, 5],
    [2, 5, 6],
    [1, 5, 6],
    [2, 3, 6],
    [1, 3, 5],
    [1, 4, 6],
    [3, 4, 6],
];

const FIG2: &[[usize; 3]] = &[
    [1, 2, 4],
    [1, 2, 3],
    [3, 4, 6],
    [3, 4, 5],
    [2, 5, 6],
    [3, 6, 7],
    [1, 6, 7],
    [1, 4, 7],
    [2, 3, 7],
    [1, 3, 5],
    [2, 5, 7],
    [2, 4, 6],
    [1, 5, 6],
    [4, 5, 7],
];

const FIG3: &[[usize; 3]] = &[[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]];

const FIG4: &[[usize; 4]] = &[
    [1, 2, 3, 4],
    [1, 3, 5, 7],
    [1, 4, 5, 6],
    [1, 2, 6, 7],
    [2, 3, 5, 6],
    [2, 4, 5, 7],
    [3, 4, 6, 7],
];

// Translates of {0000, 0001, 0010, 0100, 1000, 1111} in (Z/2)^4, with the
// 4-bit vectors read as integers. There is no cyclic (16, 6, 2) difference set.
const BIPLANE_16: &[[usize; 6]] = &[
    [0, 1, 2, 4, 8, 15],
    [0, 1, 3, 5, 9, 14],
    [0, 2, 3, 6, 10, 13],
    [1, 2, 3, 7, 11, 12],
    [0, 4, 5, 6, 11, 12],
    [1, 4, 5, 7, 10, 13],
    [2, 4, 6, 7, 9, 14],
    [3, 5, 6, 7, 8, 15],
    [0, 7, 8, 9, 10, 12],
    [1, 6, 8, 9, 11, 13],
    [2, 5, 8, 10, 11, 14],
    [3, 4, 9, 10, 11, 15],
    [3, 4, 8, 12, 13, 14],
    [2, 5, 9, 12, 13, 15],
    [1, 6, 10, 12, 14, 15],
    [0, 7, 11, 13, 14, 15],
];

fn one_based<const K: usize>(n: usize, rows: &[[usize; K]]) -> Design {
    let blocks = rows
        .iter()
        .map(|b| b.iter().map(|&p| p - 1).collect())
        .collect();
    Design::new(n, blocks).expect("transcribed block list is well formed")
}

fn zero_based<const K: usize>(n: usize, rows: &[[usize; K]]) -> Design {
    let blocks = rows.iter().map(|b| b.to_vec()).collect();
    Design::new(n, blocks).expect("stored block list is well formed")
}

fn cyclic(residues: &[usize], modulus: usize) -> (Design, Source) {
    let design = develop_difference_set(residues, modulus).expect("valid difference set");
    let source = Source::DifferenceSet {
        residues: residues.to_vec(),
        modulus,
    };
    (design, source)
}

fn build(name: &str) -> Option<(Design, DesignParams, Source)> {
    let entry = match name {
        "fig1" => (
            one_based(6, FIG1),
            DesignParams::new(10, 6, 5, 3, 2),
            Source::Transcribed,
        ),
        "fig2" => (
            one_based(7, FIG2),
            DesignParams::new(14, 7, 6, 3, 2),
            Source::Transcribed,
        ),
        "fig3" => (
            one_based(4, FIG3),
            DesignParams::symmetric(4, 3, 2),
            Source::Transcribed,
        ),
        "fig4" => (
            one_based(7, FIG4),
            DesignParams::symmetric(7, 4, 2),
            Source::Transcribed,
        ),
        "fano" => {
            let (d, s) = cyclic(&[0, 1, 3], 7);
            (d, DesignParams::symmetric(7, 3, 1), s)
        }
        "biplane-11" => {
            let (d, s) = cyclic(&[1, 3, 4, 5, 9], 11);
            (d, DesignParams::symmetric(11, 5, 2), s)
        }
        "biplane-16" => (
            zero_based(16, BIPLANE_16),
            DesignParams::symmetric(16, 6, 2),
            Source::ExternalConstruction {
                note: "difference set {0000, 0001, 0010, 0100, 1000, 1111} in (Z/2)^4",
            },
        ),
        "triplane-5" => {
            let blocks = (0..5)
                .map(|skip| (0..5).filter(|&p| p != skip).collect())
                .collect();
            (
                Design::new(5, blocks).expect("4-subsets of a 5-set"),
                DesignParams::symmetric(5, 4, 3),
                Source::Derived {
                    note: "all 4-subsets of a 5-set",
                },
            )
        }
        "triplane-11" => {
            let (d, _) = cyclic(&[1, 3, 4, 5, 9], 11);
            (
                d.complement().expect("proper blocks"),
                DesignParams::symmetric(11, 6, 3),
                Source::Derived {
                    note: "complement of the (11, 5, 2) biplane",
                },
            )
        }
        _ => return None,
    };
    Some(entry)
}

pub fn names() -> &'static [&'static str] {
    NAMES
}

/// Looks up a built-in design. Each entry is re-verified on access.
pub fn get_design(name: &str) -> Result<CatalogEntry, CatalogError> {
    let key = NAMES
        .iter()
        .copied()
        .find(|&n| n == name)
        .ok_or_else(|| CatalogError::Unknown {
            name: name.to_owned(),
            available: NAMES.to_vec(),
        })?;
    let (design, params, source) = build(key).expect("every listed name builds");
    let report = verify_design(&design)?;
    assert_eq!(
        report.params,
        Some(params),
        "catalog entry {key} does not verify as {params}"
    );
    Ok(CatalogEntry {
        name: key,
        design,
        params,
        source,
    })
}

pub fn entries() -> Vec<CatalogEntry> {
    NAMES
        .iter()
        .map(|n| get_design(n).expect("catalog entries verify"))
        .collect()
}

/// Biplanes `(n, k, 2)` known to exist, ascending in `n`.
pub fn known_biplanes() -> Vec<(u64, u64, u64)> {
    vec![
        (4, 3, 2),
        (7, 4, 2),
        (11, 5, 2),
        (16, 6, 2),
        (37, 9, 2),
        (56, 11, 2),
        (79, 13, 2),
    ]
}

/// Triplanes `(n, k, 3)` known to exist, ascending in `n`.
pub fn known_triplanes() -> Vec<(u64, u64, u64)> {
    vec![
        (5, 4, 3),
        (11, 6, 3),
        (15, 7, 3),
        (25, 9, 3),
        (31, 10, 3),
        (45, 12, 3),
        (71, 15, 3),
    ]
}
