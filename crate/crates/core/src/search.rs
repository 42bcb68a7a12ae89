//! Exhaustive minimum-cardinality searches.
//!
//! Every "minimal base" style question in this crate (π-weight of a poset,
//! weight of a contact algebra, weight and π-weight of a finite space) is a
//! minimum hitting-set problem: each requirement lists the candidates that
//! would satisfy it, and a solution must pick at least one candidate per
//! requirement.

use crate::error::{Error, Result};

/// Upper bound on the number of free candidates an exhaustive search may
/// range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchCap(pub usize);

impl Default for SearchCap {
    fn default() -> Self {
        SearchCap(32)
    }
}

/// Smallest set of candidate indices meeting every requirement.
///
/// Ties are broken lexicographically on sorted index sequences, so callers
/// that list candidates in canonical order get canonical answers. Returns
/// `Ok(None)` if some requirement has no candidates at all.
///
/// Candidates that are the sole option of some requirement are forced into
/// every solution and are taken first; this does not change which solution
/// is lexicographically least, since two equal-size solutions sharing the
/// forced part compare exactly as their remainders do.
pub fn min_hitting_set(
    candidates: usize,
    requirements: &[Vec<usize>],
    cap: SearchCap,
) -> Result<Option<Vec<usize>>> {
    if requirements.iter().any(|r| r.is_empty()) {
        return Ok(None);
    }
    let mut forced = vec![false; candidates];
    for r in requirements {
        if r.len() == 1 {
            forced[r[0]] = true;
        }
    }
    let open: Vec<&Vec<usize>> = requirements
        .iter()
        .filter(|r| !r.iter().any(|&c| forced[c]))
        .collect();
    let mut free: Vec<usize> = open.iter().flat_map(|r| r.iter().copied()).collect();
    free.sort_unstable();
    free.dedup();
    let limit = cap.0.min(63);
    if free.len() > limit {
        return Err(Error::Size {
            what: "free candidates in exhaustive search",
            got: free.len(),
            cap: limit,
        });
    }
    let mut pos = vec![usize::MAX; candidates];
    for (k, &c) in free.iter().enumerate() {
        pos[c] = k;
    }
    // Each open requirement as a bitmask over `free`.
    let masks: Vec<u64> = open
        .iter()
        .map(|r| r.iter().fold(0u64, |m, &c| m | 1 << pos[c]))
        .collect();
    let mut base: Vec<usize> = (0..candidates).filter(|&c| forced[c]).collect();
    for k in 0..=free.len() {
        if let Some(choice) = first_combination(free.len(), k, &masks) {
            base.extend(choice.into_iter().map(|i| free[i]));
            base.sort_unstable();
            return Ok(Some(base));
        }
    }
    unreachable!("choosing every free candidate meets every requirement")
}

fn first_combination(n: usize, k: usize, masks: &[u64]) -> Option<Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let chosen = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        if masks.iter().all(|&m| m & chosen != 0) {
            return Some(idx);
        }
        // advance to the next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Every subset of `0..n` as index vectors, by increasing size and then
/// lexicographically.
pub fn subsets_by_size(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=n).flat_map(move |k| Combinations::new(n, k))
}

/// Lexicographic k-subsets of `0..n`.
pub struct Combinations {
    n: usize,
    idx: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.idx.clone()?;
        let k = cur.len();
        let mut next = cur.clone();
        let mut i = k;
        self.idx = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                break Some(next);
            }
        };
        Some(cur)
    }
}
