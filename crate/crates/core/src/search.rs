//! Exhaustive backtracking search for small block designs.
//!
//! Blocks are generated in lexicographically nondecreasing order and the
//! first block is fixed to `{0, …, k-1}`. Because every later block is
//! lexicographically at least as large as the current one, the first point
//! of the next block is forced (the smallest point still short of `r`
//! blocks), and so is its second point (the smallest partner still short of
//! `λ` joint blocks). The remaining points are branched on, pruning any pair
//! covered more than `λ` times, any point in more than `r` blocks, and any
//! point whose remaining replication cannot absorb its pair deficits.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::design::{ConditionFailure, Design, DesignParams};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("parameters {params} fail the necessary conditions: {}", .findings.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    NecessaryConditions {
        params: DesignParams,
        findings: Vec<ConditionFailure>,
    },
    #[error("parameters {0} are degenerate (need 2 <= k <= n and b, r, lambda >= 1)")]
    Degenerate(DesignParams),
    #[error("search budget must be positive")]
    EmptyBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_nodes: 100_000_000,
            time_limit: Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Design),
    ExhaustedNoDesign,
    BudgetExceeded,
}

/// Node accounting. Every generated candidate block is either explored
/// (placed and recursed into) or pruned.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub generated: u64,
    pub explored: u64,
    pub pruned: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
    pub elapsed: Duration,
}

pub fn search_design(
    params: DesignParams,
    budget: SearchBudget,
) -> Result<SearchReport, SearchError> {
    let DesignParams { b, n, r, k, lambda } = params;
    if budget.max_nodes == 0 || budget.time_limit.is_zero() {
        return Err(SearchError::EmptyBudget);
    }
    if k < 2 || k > n || b == 0 || r == 0 || lambda == 0 {
        return Err(SearchError::Degenerate(params));
    }
    let check = params.check_necessary_conditions();
    if !check.holds {
        return Err(SearchError::NecessaryConditions {
            params,
            findings: check.findings,
        });
    }

    let start = Instant::now();
    let mut state = State {
        params,
        budget,
        start,
        rep: vec![0; n],
        cov: vec![0; n * n],
        blocks: Vec::with_capacity(b),
        stats: SearchStats::default(),
        out_of_budget: false,
    };

    let first: Vec<usize> = (0..k).collect();
    state.stats.generated += 1;
    let found = if state.feasible_after(&first) {
        state.stats.explored += 1;
        state.place(&first);
        state.extend()
    } else {
        state.stats.pruned += 1;
        false
    };

    let outcome = if found {
        let design = Design::new(n, state.blocks.clone()).expect("search emits well-formed blocks");
        SearchOutcome::Found(design)
    } else if state.out_of_budget {
        SearchOutcome::BudgetExceeded
    } else {
        SearchOutcome::ExhaustedNoDesign
    };
    debug_assert_eq!(
        state.stats.generated,
        state.stats.explored + state.stats.pruned
    );
    Ok(SearchReport {
        outcome,
        stats: state.stats,
        elapsed: start.elapsed(),
    })
}

struct State {
    params: DesignParams,
    budget: SearchBudget,
    start: Instant,
    rep: Vec<usize>,
    cov: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    stats: SearchStats,
    out_of_budget: bool,
}

impl State {
    fn cov(&self, p: usize, q: usize) -> usize {
        self.cov[p * self.params.n + q]
    }

    fn place(&mut self, block: &[usize]) {
        let n = self.params.n;
        for (i, &p) in block.iter().enumerate() {
            self.rep[p] += 1;
            for &q in &block[i + 1..] {
                self.cov[p * n + q] += 1;
                self.cov[q * n + p] += 1;
            }
        }
        self.blocks.push(block.to_vec());
    }

    fn unplace(&mut self) {
        let n = self.params.n;
        let block = self.blocks.pop().expect("unplace after place");
        for (i, &p) in block.iter().enumerate() {
            self.rep[p] -= 1;
            for &q in &block[i + 1..] {
                self.cov[p * n + q] -= 1;
                self.cov[q * n + p] -= 1;
            }
        }
    }

    /// After adding `block`, every point in it must still have enough
    /// replication left to cover each of its pair deficits.
    fn feasible_after(&self, block: &[usize]) -> bool {
        let DesignParams { n, r, lambda, .. } = self.params;
        block.iter().all(|&p| {
            let left = r - self.rep[p] - 1;
            (0..n).filter(|&x| x != p).all(|x| {
                let joint = self.cov(p, x) + usize::from(block.binary_search(&x).is_ok());
                lambda - joint <= left
            })
        })
    }

    fn over_budget(&mut self) -> bool {
        if self.stats.explored >= self.budget.max_nodes
            || (self.stats.explored.is_multiple_of(1024)
                && self.start.elapsed() >= self.budget.time_limit)
        {
            self.out_of_budget = true;
        }
        self.out_of_budget
    }

    /// Returns true once a full design sits in `self.blocks`.
    fn extend(&mut self) -> bool {
        let DesignParams {
            b, n, r, lambda, ..
        } = self.params;
        if self.blocks.len() == b {
            // b·k = n·r and b·C(k,2) = λ·C(n,2) with every count capped, so
            // every count is exact here.
            return true;
        }
        let Some(first) = (0..n).find(|&p| self.rep[p] < r) else {
            return false;
        };
        let Some(second) = (first + 1..n).find(|&x| self.cov(first, x) < lambda) else {
            return false;
        };
        if self.rep[second] >= r {
            return false;
        }
        let prev = self
            .blocks
            .last()
            .expect("first block is placed up front")
            .clone();
        let mut block = vec![first, second];
        self.choose_rest(&mut block, &prev)
    }

    fn choose_rest(&mut self, block: &mut Vec<usize>, prev: &[usize]) -> bool {
        let DesignParams {
            n, r, k, lambda, ..
        } = self.params;
        if block.len() == k {
            if block.as_slice() < prev {
                return false;
            }
            self.stats.generated += 1;
            if !self.feasible_after(block) {
                self.stats.pruned += 1;
                return false;
            }
            self.stats.explored += 1;
            if self.over_budget() {
                // Counted as explored; the search stops here.
                return false;
            }
            let placed = block.clone();
            self.place(&placed);
            if self.extend() {
                return true;
            }
            self.unplace();
            return false;
        }
        let lo = block.last().unwrap() + 1;
        // Leave room for the points still to be chosen.
        let hi = n - (k - block.len()) + 1;
        for x in lo..hi {
            if self.out_of_budget {
                return false;
            }
            if self.rep[x] >= r || block.iter().any(|&p| self.cov(p, x) >= lambda) {
                continue;
            }
            // Prefix already below prev: no completion can reach prev.
            let depth = block.len();
            if block[..] == prev[..depth] && x < prev[depth] {
                continue;
            }
            block.push(x);
            let done = self.choose_rest(block, prev);
            block.pop();
            if done {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::verify_design;

    fn found(params: DesignParams) -> Design {
        let report = search_design(params, SearchBudget::default()).unwrap();
        assert_eq!(
            report.stats.generated,
            report.stats.explored + report.stats.pruned
        );
        match report.outcome {
            SearchOutcome::Found(d) => d,
            other => panic!("expected a design for {params}, got {other:?}"),
        }
    }

    #[test]
    fn biplane_on_four_points_is_all_triples() {
        let d = found(DesignParams::symmetric(4, 3, 2));
        assert_eq!(
            d.sorted_blocks(),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn two_fold_triple_systems() {
        for params in [
            DesignParams::new(10, 6, 5, 3, 2),
            DesignParams::new(10, 5, 6, 3, 3),
        ] {
            let d = found(params);
            assert_eq!(verify_design(&d).unwrap().params, Some(params));
        }
    }

    #[test]
    fn fano_plane() {
        let d = found(DesignParams::symmetric(7, 3, 1));
        assert_eq!(
            verify_design(&d).unwrap().params,
            Some(DesignParams::symmetric(7, 3, 1))
        );
    }

    #[test]
    fn arithmetic_failures_are_errors() {
        let err =
            search_design(DesignParams::symmetric(7, 3, 2), SearchBudget::default()).unwrap_err();
        assert!(matches!(err, SearchError::NecessaryConditions { .. }));
        assert!(err.to_string().contains("r(k-1) = lambda(n-1)"));
        let err =
            search_design(DesignParams::new(3, 3, 1, 1, 0), SearchBudget::default()).unwrap_err();
        assert!(matches!(err, SearchError::Degenerate(_)));
    }

    #[test]
    fn nonexistent_design_is_exhausted() {
        // b = 8 < n = 16 violates Fisher's inequality, though bk = nr and
        // r(k-1) = λ(n-1) both hold.
        let params = DesignParams::new(8, 16, 3, 6, 1);
        assert!(params.check_necessary_conditions().holds);
        let report = search_design(params, SearchBudget::default()).unwrap();
        assert_eq!(report.outcome, SearchOutcome::ExhaustedNoDesign);
        assert_eq!(
            report.stats.generated,
            report.stats.explored + report.stats.pruned
        );
    }

    #[test]
    fn tiny_budget_is_reported() {
        let report = search_design(
            DesignParams::new(10, 6, 5, 3, 2),
            SearchBudget {
                max_nodes: 3,
                time_limit: Duration::from_secs(60),
            },
        )
        .unwrap();
        assert_eq!(report.outcome, SearchOutcome::BudgetExceeded);
        assert_eq!(report.stats.explored, 3);
    }

    #[test]
    fn search_is_deterministic() {
        let params = DesignParams::new(14, 7, 6, 3, 2);
        let a = search_design(params, SearchBudget::default()).unwrap();
        let b = search_design(params, SearchBudget::default()).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.stats, b.stats);
    }
}
