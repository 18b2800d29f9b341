//! Exhaustive search for difference families in small groups.
//!
//! Base blocks may be right-translated freely, so the block covering the smallest
//! uncovered difference `d` can be taken as `{1, d, c}`. The search branches on `c`
//! and backtracks, which makes it complete: running out of candidates proves that
//! no family exists.

use thiserror::Error;

use crate::difference::{DifferenceFamily, PartialSpread};
use crate::group::GroupSpec;

/// Largest group order the search accepts.
pub const MAX_SEARCH_ORDER: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("group order {0} exceeds the search limit of {MAX_SEARCH_ORDER}")]
    TooLarge(usize),
    #[error("search gave up after {nodes} nodes without deciding")]
    Exhausted { nodes: u64 },
    #[error("spread is over {spread} but the search group is {group}")]
    GroupMismatch { group: String, spread: String },
}

/// `Ok(None)` means the space was exhausted and no family exists.
pub fn df_search(
    group: &GroupSpec,
    spread: &PartialSpread,
    node_limit: u64,
) -> Result<Option<DifferenceFamily>, SearchError> {
    let n = group.order();
    if n > MAX_SEARCH_ORDER {
        return Err(SearchError::TooLarge(n));
    }
    if spread.group() != group {
        return Err(SearchError::GroupMismatch {
            group: group.to_string(),
            spread: spread.group().to_string(),
        });
    }
    // Elements the differences must hit once: everything outside the spread.
    let mut need = vec![true; n];
    need[0] = false;
    for m in spread.members() {
        for e in m.elements() {
            need[group.index_of(e).expect("spread elements are valid")] = false;
        }
    }
    let mut search = DfSearch {
        group,
        inverse: (0..n).map(|i| group.invert_index(i)).collect(),
        need,
        blocks: Vec::new(),
        nodes: 0,
        node_limit,
    };
    if !search.solve()? {
        return Ok(None);
    }
    let blocks = search
        .blocks
        .iter()
        .map(|&(d, c)| {
            [
                group.element_at(0),
                group.element_at(d),
                group.element_at(c),
            ]
        })
        .collect();
    Ok(Some(
        DifferenceFamily::new(group.clone(), blocks).expect("search blocks are distinct"),
    ))
}

struct DfSearch<'a> {
    group: &'a GroupSpec,
    inverse: Vec<usize>,
    need: Vec<bool>,
    blocks: Vec<(usize, usize)>,
    nodes: u64,
    node_limit: u64,
}

impl DfSearch<'_> {
    /// The six right differences of `{1, d, c}`.
    fn differences(&self, d: usize, c: usize) -> [usize; 6] {
        let g = self.group;
        [
            d,
            self.inverse[d],
            c,
            self.inverse[c],
            g.compose_index(c, self.inverse[d]),
            g.compose_index(d, self.inverse[c]),
        ]
    }

    fn solve(&mut self) -> Result<bool, SearchError> {
        let Some(d) = self.need.iter().position(|&x| x) else {
            return Ok(true);
        };
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(SearchError::Exhausted {
                nodes: self.node_limit,
            });
        }
        for c in 1..self.need.len() {
            if c == d {
                continue;
            }
            let diffs = self.differences(d, c);
            let distinct = (0..6).all(|i| (i + 1..6).all(|j| diffs[i] != diffs[j]));
            if !distinct || !diffs.iter().all(|&x| self.need[x]) {
                continue;
            }
            for &x in &diffs {
                self.need[x] = false;
            }
            self.blocks.push((d, c));
            if self.solve()? {
                return Ok(true);
            }
            self.blocks.pop();
            for &x in &diffs {
                self.need[x] = true;
            }
        }
        Ok(false)
    }
}
