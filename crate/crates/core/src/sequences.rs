//! Extended Skolem and Langford sequences.
//!
//! A `k`-extended Skolem sequence of order `n` is `(s_1, ..., s_n)` with
//! `{s_i, s_i + i}` over all `i` partitioning `{1, ..., 2n+1} \ {k}`. The Langford
//! variant with defect `d` uses gaps `i + d - 1` instead of `i`.
//!
//! Sequences are found by depth-first search with forward checking: every unplaced
//! gap and every free slot must keep at least one option. The search runs in
//! rounds with a doubling node cutoff. Round 0 branches on the lowest free slot
//! with gaps in decreasing order; later rounds shuffle candidates with a seeded RNG
//! and alternate between branching on the lowest slot and on the most constrained
//! gap or slot. A round that finishes under its cutoff is decisive, so results are
//! deterministic and "none" means the space was exhausted.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Node budget used when callers do not pass one.
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("excluded value k = {k} is outside [1, {max}]")]
    ExcludedOutOfRange { k: u32, max: u32 },
    #[error("defect must be at least 1")]
    ZeroDefect,
    #[error("search gave up after {nodes} nodes without deciding")]
    Exhausted { nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedSkolemSequence {
    pub n: u32,
    pub k: u32,
    pub entries: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedLangfordSequence {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub entries: Vec<u32>,
}

impl ExtendedSkolemSequence {
    pub fn is_valid(&self) -> bool {
        validate_extended_skolem(self)
    }

    /// `s_i` for `1 <= i <= n`.
    pub fn get(&self, i: u32) -> u32 {
        self.entries[(i - 1) as usize]
    }
}

impl ExtendedLangfordSequence {
    pub fn is_valid(&self) -> bool {
        validate_extended_langford(self)
    }

    /// `l_i` for `1 <= i <= n`.
    pub fn get(&self, i: u32) -> u32 {
        self.entries[(i - 1) as usize]
    }
}

fn check_excluded(n: u32, k: u32) -> Result<(), SequenceError> {
    let max = 2 * n + 1;
    if k == 0 || k > max {
        return Err(SequenceError::ExcludedOutOfRange { k, max });
    }
    Ok(())
}

/// Whether a `k`-extended Skolem sequence of order `n` exists.
pub fn skolem_exists(n: u32, k: u32) -> Result<bool, SequenceError> {
    check_excluded(n, k)?;
    let odd = k % 2 == 1;
    Ok(match n % 4 {
        0 | 1 => odd,
        _ => !odd,
    })
}

/// Parity obstruction shared by both families: the values `{1..2n+1} \ {k}` sum to
/// `2 * sum(entries) + sum(gaps)`, so that difference must be even.
fn parity_allows(n: u32, k: u32, gap_sum: u64) -> bool {
    let n = n as u64;
    let total = (2 * n + 1) * (n + 1) - k as u64;
    (total + gap_sum).is_multiple_of(2)
}

pub fn find_extended_skolem(
    n: u32,
    k: u32,
) -> Result<Option<ExtendedSkolemSequence>, SequenceError> {
    find_extended_skolem_with_limit(n, k, DEFAULT_NODE_LIMIT)
}

pub fn find_extended_skolem_with_limit(
    n: u32,
    k: u32,
    node_limit: u64,
) -> Result<Option<ExtendedSkolemSequence>, SequenceError> {
    if !skolem_exists(n, k)? {
        return Ok(None);
    }
    let gaps: Vec<u32> = (1..=n).collect();
    let entries = place_pairs(n, k, &gaps, node_limit)?;
    Ok(entries.map(|entries| ExtendedSkolemSequence { n, k, entries }))
}

/// Searches the whole space, skipping the parity shortcut. Exposed so tests can
/// confirm absence by exhaustion.
pub fn exhaustive_skolem_search(
    n: u32,
    k: u32,
    node_limit: u64,
) -> Result<Option<ExtendedSkolemSequence>, SequenceError> {
    check_excluded(n, k)?;
    let gaps: Vec<u32> = (1..=n).collect();
    let entries = place_pairs(n, k, &gaps, node_limit)?;
    Ok(entries.map(|entries| ExtendedSkolemSequence { n, k, entries }))
}

pub fn find_extended_langford(
    n: u32,
    d: u32,
    k: u32,
) -> Result<Option<ExtendedLangfordSequence>, SequenceError> {
    find_extended_langford_with_limit(n, d, k, DEFAULT_NODE_LIMIT)
}

pub fn find_extended_langford_with_limit(
    n: u32,
    d: u32,
    k: u32,
    node_limit: u64,
) -> Result<Option<ExtendedLangfordSequence>, SequenceError> {
    if d == 0 {
        return Err(SequenceError::ZeroDefect);
    }
    check_excluded(n, k)?;
    let gaps: Vec<u32> = (1..=n).map(|i| i + d - 1).collect();
    let gap_sum = gaps.iter().map(|&g| g as u64).sum();
    if !parity_allows(n, k, gap_sum) {
        return Ok(None);
    }
    let entries = place_pairs(n, k, &gaps, node_limit)?;
    Ok(entries.map(|entries| ExtendedLangfordSequence { n, d, k, entries }))
}

pub fn validate_extended_skolem(seq: &ExtendedSkolemSequence) -> bool {
    let gaps: Vec<u32> = (1..=seq.n).collect();
    covers_exactly(seq.n, seq.k, &gaps, &seq.entries)
}

pub fn validate_extended_langford(seq: &ExtendedLangfordSequence) -> bool {
    if seq.d == 0 {
        return false;
    }
    let gaps: Vec<u32> = (1..=seq.n).map(|i| i + seq.d - 1).collect();
    covers_exactly(seq.n, seq.k, &gaps, &seq.entries)
}

fn covers_exactly(n: u32, k: u32, gaps: &[u32], entries: &[u32]) -> bool {
    let top = 2 * n as u64 + 1;
    if entries.len() != n as usize || k == 0 || k as u64 > top {
        return false;
    }
    let mut used = vec![false; top as usize + 1];
    used[k as usize] = true;
    for (&s, &gap) in entries.iter().zip(gaps) {
        for value in [s as u64, s as u64 + gap as u64] {
            if value == 0 || value > top || used[value as usize] {
                return false;
            }
            used[value as usize] = true;
        }
    }
    used[1..].iter().all(|&u| u)
}

/// Places one pair `{p, p + gaps[i]}` per gap into slots `1..=2n+1` minus `k`.
/// Returns the left ends indexed like `gaps`.
///
/// The first run tries gaps largest first. Later runs shuffle the order at each
/// node with a fixed-seed generator and double their node cutoff, so the result is
/// reproducible. Every run is a complete search up to its cutoff, so a run that
/// ends below its cutoff without a solution proves that none exists.
fn place_pairs(
    n: u32,
    k: u32,
    gaps: &[u32],
    node_limit: u64,
) -> Result<Option<Vec<u32>>, SequenceError> {
    const FIRST_CUTOFF: u64 = 2_000;

    let top = 2 * n as usize + 1;
    let mut order: Vec<usize> = (0..gaps.len()).collect();
    order.sort_by(|&a, &b| gaps[b].cmp(&gaps[a]).then(a.cmp(&b)));
    let mut free = vec![true; top + 1];
    free[0] = false;
    free[k as usize] = false;

    let mut spent = 0u64;
    let mut cutoff = FIRST_CUTOFF;
    for run in 0u64.. {
        let budget = cutoff.min(node_limit - spent);
        let mut state = PairSearch {
            free: free.clone(),
            top,
            order: order.clone(),
            gaps: gaps.iter().map(|&g| g as usize).collect(),
            placed: vec![None; gaps.len()],
            nodes: 0,
            budget,
            rng: (run > 0).then(|| ChaCha8Rng::seed_from_u64(run)),
            branching: if run % 2 == 0 {
                Branching::LowestSlot
            } else {
                Branching::MostConstrained
            },
        };
        let outcome = state.solve(1);
        spent += state.nodes;
        match outcome {
            Some(true) => {
                return Ok(Some(
                    state
                        .placed
                        .into_iter()
                        .map(|p| p.expect("every gap placed") as u32)
                        .collect(),
                ))
            }
            Some(false) => return Ok(None),
            None if spent >= node_limit => break,
            None => cutoff = cutoff.saturating_mul(2),
        }
    }
    Err(SequenceError::Exhausted { nodes: node_limit })
}

struct PairSearch {
    free: Vec<bool>,
    top: usize,
    /// Gap indices, largest gap first; this fixes tie-breaking.
    order: Vec<usize>,
    gaps: Vec<usize>,
    placed: Vec<Option<usize>>,
    nodes: u64,
    budget: u64,
    rng: Option<ChaCha8Rng>,
    branching: Branching,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branching {
    LowestSlot,
    MostConstrained,
}

impl PairSearch {
    fn fits(&self, left: usize, gap: usize) -> bool {
        left >= 1 && left + gap <= self.top && self.free[left] && self.free[left + gap]
    }

    fn gap_options(&self, gi: usize) -> usize {
        let gap = self.gaps[gi];
        (1..=self.top.saturating_sub(gap))
            .filter(|&l| self.fits(l, gap))
            .count()
    }

    /// Placements covering `slot`, as `(gap index, left end)`.
    fn slot_options(&self, slot: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.order
            .iter()
            .filter(|&&gi| self.placed[gi].is_none())
            .flat_map(move |&gi| {
                let gap = self.gaps[gi];
                let as_left = Some(slot).filter(|&l| self.fits(l, gap));
                let as_right = slot.checked_sub(gap).filter(|&l| self.fits(l, gap));
                as_left.into_iter().chain(as_right).map(move |l| (gi, l))
            })
    }

    /// Whether every unplaced gap and every free slot still has an option.
    fn viable(&self) -> bool {
        self.order
            .iter()
            .all(|&gi| self.placed[gi].is_some() || self.gap_options(gi) > 0)
            && (1..=self.top).all(|s| !self.free[s] || self.slot_options(s).next().is_some())
    }

    /// Placements for the next branching item: the lowest free slot, or under
    /// [`Branching::MostConstrained`] whichever unplaced gap or free slot has the
    /// fewest options if that is fewer. `None` when everything is placed.
    fn next_options(&self, from: usize) -> Option<Vec<(usize, usize)>> {
        let slot = (from..=self.top).find(|&p| self.free[p])?;
        // Everything below `slot` is covered, so `slot` is the left end of its pair.
        let mut best: Vec<(usize, usize)> = self
            .order
            .iter()
            .copied()
            .filter(|&gi| self.placed[gi].is_none() && self.fits(slot, self.gaps[gi]))
            .map(|gi| (gi, slot))
            .collect();
        if self.branching == Branching::MostConstrained {
            for &gi in &self.order {
                if best.len() <= 1 {
                    break;
                }
                if self.placed[gi].is_some() {
                    continue;
                }
                let gap = self.gaps[gi];
                let opts: Vec<(usize, usize)> = (1..=self.top.saturating_sub(gap))
                    .filter(|&l| self.fits(l, gap))
                    .map(|l| (gi, l))
                    .collect();
                if opts.len() < best.len() {
                    best = opts;
                }
            }
            for s in slot + 1..=self.top {
                if best.len() <= 1 {
                    break;
                }
                if self.free[s] {
                    let opts: Vec<(usize, usize)> = self.slot_options(s).collect();
                    if opts.len() < best.len() {
                        best = opts;
                    }
                }
            }
        }
        Some(best)
    }

    /// `Some(found)` when the subtree was decided, `None` when the budget ran out.
    fn solve(&mut self, from: usize) -> Option<bool> {
        let Some(mut candidates) = self.next_options(from) else {
            return Some(true);
        };
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if !self.viable() {
            return Some(false);
        }
        if let Some(rng) = self.rng.as_mut() {
            candidates.shuffle(rng);
        }
        for (gi, left) in candidates {
            let right = left + self.gaps[gi];
            self.free[left] = false;
            self.free[right] = false;
            self.placed[gi] = Some(left);
            if self.solve(from)? {
                return Some(true);
            }
            self.placed[gi] = None;
            self.free[left] = true;
            self.free[right] = true;
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn existence_predicate() {
        assert!(skolem_exists(4, 9).unwrap());
        assert!(!skolem_exists(1, 2).unwrap());
        assert!(skolem_exists(2, 2).unwrap());
        assert_eq!(
            skolem_exists(2, 6),
            Err(SequenceError::ExcludedOutOfRange { k: 6, max: 5 })
        );
        assert!(skolem_exists(2, 0).is_err());
    }

    #[test]
    fn small_skolem_outputs() {
        let s = find_extended_skolem(1, 1).unwrap().unwrap();
        assert_eq!(s.entries, vec![2]);
        let s = find_extended_skolem(2, 2).unwrap().unwrap();
        assert_eq!(s.entries, vec![4, 1]);
        assert_eq!(find_extended_skolem(1, 2).unwrap(), None);
    }

    #[test]
    fn skolem_validation() {
        let ok = ExtendedSkolemSequence {
            n: 4,
            k: 9,
            entries: vec![1, 5, 3, 4],
        };
        assert!(ok.is_valid());
        let bad = ExtendedSkolemSequence {
            n: 1,
            k: 1,
            entries: vec![3],
        };
        assert!(!bad.is_valid());
        let ok = ExtendedSkolemSequence {
            n: 2,
            k: 2,
            entries: vec![4, 1],
        };
        assert!(ok.is_valid());
        let short = ExtendedSkolemSequence {
            n: 2,
            k: 2,
            entries: vec![4],
        };
        assert!(!short.is_valid());
    }

    #[test]
    fn langford_outputs() {
        let l = find_extended_langford(2, 1, 2).unwrap().unwrap();
        assert_eq!(l.entries, vec![4, 1]);
        let l = find_extended_langford(6, 2, 2).unwrap().unwrap();
        assert!(l.is_valid());
        let mut values: Vec<u32> = (1..=6u32)
            .flat_map(|i| [l.get(i), l.get(i) + i + 1])
            .collect();
        values.sort_unstable();
        let expected: Vec<u32> = (1..=13).filter(|&v| v != 2).collect();
        assert_eq!(values, expected);
    }

    #[test]
    fn langford_validation() {
        let repeated = ExtendedLangfordSequence {
            n: 2,
            d: 2,
            k: 1,
            entries: vec![1, 1],
        };
        assert!(!repeated.is_valid());
        let ok = ExtendedLangfordSequence {
            n: 2,
            d: 1,
            k: 2,
            entries: vec![4, 1],
        };
        assert!(ok.is_valid());
        assert_eq!(
            find_extended_langford(3, 0, 1),
            Err(SequenceError::ZeroDefect)
        );
    }

    #[test]
    fn budget_exhaustion_is_distinct_from_absence() {
        assert_eq!(
            find_extended_skolem_with_limit(20, 1, 3),
            Err(SequenceError::Exhausted { nodes: 3 })
        );
    }

    #[test]
    fn deterministic() {
        assert_eq!(find_extended_skolem(17, 9), find_extended_skolem(17, 9));
    }
}
