//! Block designs: representation, verification and parameter arithmetic.
//!
//! A [`Design`] is a point count plus a multiset of blocks. Blocks are stored
//! as strictly increasing lists of 0-based point indices. Verification is
//! exact: every unordered point pair is counted, nothing is sampled.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DesignError {
    #[error("design has no blocks")]
    NoBlocks,
    #[error("design has no points")]
    NoPoints,
    #[error("block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("block {block} contains point {point}, outside 0..{n_points}")]
    PointOutOfRange {
        block: usize,
        point: usize,
        n_points: usize,
    },
    #[error("block {block} contains point {point} more than once")]
    DuplicatePoint { block: usize, point: usize },
    #[error("expected {expected} labels for {expected} points, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("verification needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("intersection statistics need at least 2 blocks, got {0}")]
    TooFewBlocks(usize),
    #[error("difference set is empty")]
    EmptyDifferenceSet,
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("residue {residue} is outside 0..{modulus}")]
    ResidueOutOfRange { residue: usize, modulus: usize },
    #[error("residue {0} is repeated")]
    DuplicateResidue(usize),
}

/// A finite family of blocks over the points `0..n_points`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    n_points: usize,
    blocks: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Design {
    /// Builds a design, sorting every block. Blocks may repeat.
    pub fn new(n_points: usize, blocks: Vec<Vec<usize>>) -> Result<Self, DesignError> {
        if n_points == 0 {
            return Err(DesignError::NoPoints);
        }
        if blocks.is_empty() {
            return Err(DesignError::NoBlocks);
        }
        let mut sorted = Vec::with_capacity(blocks.len());
        for (i, mut block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(DesignError::EmptyBlock { block: i });
            }
            block.sort_unstable();
            if let Some(&p) = block.iter().find(|&&p| p >= n_points) {
                return Err(DesignError::PointOutOfRange {
                    block: i,
                    point: p,
                    n_points,
                });
            }
            if let Some(w) = block.windows(2).find(|w| w[0] == w[1]) {
                return Err(DesignError::DuplicatePoint {
                    block: i,
                    point: w[0],
                });
            }
            sorted.push(block);
        }
        Ok(Self {
            n_points,
            blocks: sorted,
            labels: None,
        })
    }

    /// Attaches display labels to the points, one per point.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, DesignError> {
        if labels.len() != self.n_points {
            return Err(DesignError::LabelCount {
                expected: self.n_points,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of point `p`: the attached label, or `x{p+1}`.
    pub fn point_label(&self, p: usize) -> String {
        match &self.labels {
            Some(labels) => labels[p].clone(),
            None => format!("x{}", p + 1),
        }
    }

    /// The design whose blocks are the complements `S \ B` of this one's.
    ///
    /// Fails if some block is the whole point set.
    pub fn complement(&self) -> Result<Self, DesignError> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                (0..self.n_points)
                    .filter(|p| b.binary_search(p).is_err())
                    .collect()
            })
            .collect();
        let mut d = Self::new(self.n_points, blocks)?;
        d.labels = self.labels.clone();
        Ok(d)
    }

    /// Applies the point bijection `p -> perm[p]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n_points`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n_points, "permutation length");
        let mut seen = vec![false; self.n_points];
        for &p in perm {
            assert!(p < self.n_points && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&p| perm[p]).collect())
            .collect();
        Self::new(self.n_points, blocks).expect("relabelling preserves structure")
    }

    /// Blocks sorted lexicographically, for order-insensitive comparison.
    pub fn sorted_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = self.blocks.clone();
        blocks.sort();
        blocks
    }
}

/// The parameter tuple `(b, n, r, k, λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DesignParams {
    pub b: usize,
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub lambda: usize,
}

impl DesignParams {
    pub const fn new(b: usize, n: usize, r: usize, k: usize, lambda: usize) -> Self {
        Self { b, n, r, k, lambda }
    }

    /// Symmetric parameters `(n, n, k, k, λ)`.
    pub const fn symmetric(n: usize, k: usize, lambda: usize) -> Self {
        Self::new(n, n, k, k, lambda)
    }

    pub fn is_symmetric(&self) -> bool {
        self.b == self.n
    }

    /// Tests `bk = nr` and `r(k-1) = λ(n-1)`.
    pub fn check_necessary_conditions(&self) -> ConditionCheck {
        let mut findings = Vec::new();
        let bk = self.b as u128 * self.k as u128;
        let nr = self.n as u128 * self.r as u128;
        if bk != nr {
            findings.push(ConditionFailure::BlockIncidence { bk, nr });
        }
        let lhs = self.r as u128 * (self.k as u128).saturating_sub(1);
        let rhs = self.lambda as u128 * (self.n as u128).saturating_sub(1);
        if lhs != rhs {
            findings.push(ConditionFailure::PairIncidence {
                r_k_minus_1: lhs,
                lambda_n_minus_1: rhs,
            });
        }
        ConditionCheck {
            holds: findings.is_empty(),
            findings,
        }
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {})",
            self.b, self.n, self.r, self.k, self.lambda
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub holds: bool,
    pub findings: Vec<ConditionFailure>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "identity", rename_all = "snake_case")]
pub enum ConditionFailure {
    /// `bk = nr` fails.
    BlockIncidence { bk: u128, nr: u128 },
    /// `r(k-1) = λ(n-1)` fails.
    PairIncidence {
        r_k_minus_1: u128,
        lambda_n_minus_1: u128,
    },
}

impl fmt::Display for ConditionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BlockIncidence { bk, nr } => write!(f, "bk = nr fails ({bk} != {nr})"),
            Self::PairIncidence {
                r_k_minus_1,
                lambda_n_minus_1,
            } => write!(
                f,
                "r(k-1) = lambda(n-1) fails ({r_k_minus_1} != {lambda_n_minus_1})"
            ),
        }
    }
}

/// One violated design condition, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    BlockTooSmall {
        block: usize,
        size: usize,
    },
    NonUniformBlockSize {
        block_a: usize,
        size_a: usize,
        block_b: usize,
        size_b: usize,
    },
    NonUniformReplication {
        point_a: usize,
        count_a: usize,
        point_b: usize,
        count_b: usize,
    },
    NonUniformPairCoverage {
        pair_a: (usize, usize),
        count_a: usize,
        pair_b: (usize, usize),
        count_b: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BlockTooSmall { block, size } => write!(
                f,
                "block {block} has size {size}; pair coverage needs blocks of size >= 2"
            ),
            Self::NonUniformBlockSize {
                block_a,
                size_a,
                block_b,
                size_b,
            } => write!(
                f,
                "block sizes differ: block {block_a} has {size_a} points, block {block_b} has {size_b}"
            ),
            Self::NonUniformReplication {
                point_a,
                count_a,
                point_b,
                count_b,
            } => write!(
                f,
                "replication differs: point {point_a} is in {count_a} blocks, point {point_b} in {count_b}"
            ),
            Self::NonUniformPairCoverage {
                pair_a,
                count_a,
                pair_b,
                count_b,
            } => write!(
                f,
                "pair coverage differs: {{{}, {}}} is in {count_a} blocks, {{{}, {}}} in {count_b}",
                pair_a.0, pair_a.1, pair_b.0, pair_b.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub params: Option<DesignParams>,
    pub violations: Vec<Violation>,
}

/// Checks uniform block size, replication and pair coverage.
///
/// Returns an invalid report (not an error) when the family is not a design.
/// Only a point set too small to have pairs is an error.
pub fn verify_design(design: &Design) -> Result<VerificationReport, DesignError> {
    let n = design.n_points();
    if n < 2 {
        return Err(DesignError::TooFewPoints(n));
    }
    let blocks = design.blocks();
    let mut violations = Vec::new();

    let k = blocks[0].len();
    if let Some((i, b)) = blocks.iter().enumerate().find(|(_, b)| b.len() != k) {
        violations.push(Violation::NonUniformBlockSize {
            block_a: 0,
            size_a: k,
            block_b: i,
            size_b: b.len(),
        });
    }
    if let Some((i, b)) = blocks.iter().enumerate().find(|(_, b)| b.len() < 2) {
        violations.push(Violation::BlockTooSmall {
            block: i,
            size: b.len(),
        });
    }

    let mut replication = vec![0usize; n];
    let mut coverage = vec![0usize; n * n];
    for block in blocks {
        for (i, &p) in block.iter().enumerate() {
            replication[p] += 1;
            for &q in &block[i + 1..] {
                coverage[p * n + q] += 1;
            }
        }
    }

    let r = replication[0];
    if let Some((p, &c)) = replication.iter().enumerate().find(|(_, &c)| c != r) {
        violations.push(Violation::NonUniformReplication {
            point_a: 0,
            count_a: r,
            point_b: p,
            count_b: c,
        });
    }

    let lambda = coverage[1];
    let odd_pair = (0..n)
        .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
        .find(|&(p, q)| coverage[p * n + q] != lambda);
    if let Some((p, q)) = odd_pair {
        violations.push(Violation::NonUniformPairCoverage {
            pair_a: (0, 1),
            count_a: lambda,
            pair_b: (p, q),
            count_b: coverage[p * n + q],
        });
    }

    let valid = violations.is_empty();
    Ok(VerificationReport {
        valid,
        params: valid.then(|| DesignParams::new(blocks.len(), n, r, k, lambda)),
        violations,
    })
}

/// Pairwise block-intersection statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntersectionProfile {
    pub max_intersection: usize,
    pub has_disjoint_pair: bool,
    /// `max(max_intersection, λ)`, the geodesic-count bound for the star graph.
    pub mu: usize,
}

/// Scans all `C(b, 2)` block pairs.
pub fn intersection_profile(
    design: &Design,
    lambda: usize,
) -> Result<IntersectionProfile, DesignError> {
    let blocks = design.blocks();
    if blocks.len() < 2 {
        return Err(DesignError::TooFewBlocks(blocks.len()));
    }
    let mut max_intersection = 0;
    let mut has_disjoint_pair = false;
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            let common = sorted_intersection_len(a, b);
            max_intersection = max_intersection.max(common);
            has_disjoint_pair |= common == 0;
        }
    }
    Ok(IntersectionProfile {
        max_intersection,
        has_disjoint_pair,
        mu: max_intersection.max(lambda),
    })
}

/// Size of the intersection of two sorted slices.
pub(crate) fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Develops a cyclic difference set: the blocks are the `modulus` translates
/// `{d + t mod m : d in residues}` for `t = 0..m`.
///
/// No check is made that `residues` really is a difference set; pass the
/// result through [`verify_design`].
pub fn develop_difference_set(residues: &[usize], modulus: usize) -> Result<Design, DesignError> {
    if modulus == 0 {
        return Err(DesignError::ZeroModulus);
    }
    if residues.is_empty() {
        return Err(DesignError::EmptyDifferenceSet);
    }
    let mut seen = vec![false; modulus];
    for &d in residues {
        if d >= modulus {
            return Err(DesignError::ResidueOutOfRange {
                residue: d,
                modulus,
            });
        }
        if std::mem::replace(&mut seen[d], true) {
            return Err(DesignError::DuplicateResidue(d));
        }
    }
    let blocks = (0..modulus)
        .map(|t| residues.iter().map(|&d| (d + t) % modulus).collect())
        .collect();
    Design::new(modulus, blocks)
}
