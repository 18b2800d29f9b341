//! Relative difference families of triples and the partial spreads they avoid.
//!
//! A family `F` of base triples over `G` is a `(G, Σ, 3, 1)` difference family when
//! the right differences `x y^-1` taken over ordered pairs inside each triple hit
//! every element outside the union of the spread `Σ` exactly once and never land
//! inside it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{GroupElement, GroupError, GroupSpec, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DfError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("block {0:?} repeats an element")]
    RepeatedPoint([GroupElement; 3]),
    #[error("family is over {family} but the spread is over {spread}")]
    GroupMismatch { family: String, spread: String },
    #[error("spread member is not a subgroup")]
    NotSubgroup,
    #[error("spread members {0} and {1} meet outside the identity")]
    Overlap(usize, usize),
}

/// A base triple, kept with its elements in ascending order.
pub type Block = [GroupElement; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceFamily {
    group: GroupSpec,
    blocks: Vec<Block>,
}

impl DifferenceFamily {
    /// Normalizes each block to ascending element order and sorts the block list.
    pub fn new(group: GroupSpec, blocks: Vec<Block>) -> Result<Self, DfError> {
        let mut normalized = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            for e in &block {
                group.check(e)?;
            }
            block.sort();
            if block[0] == block[1] || block[1] == block[2] {
                return Err(DfError::RepeatedPoint(block));
            }
            normalized.push(block);
        }
        normalized.sort();
        Ok(DifferenceFamily {
            group,
            blocks: normalized,
        })
    }

    pub fn empty(group: GroupSpec) -> Self {
        DifferenceFamily {
            group,
            blocks: Vec::new(),
        }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The multiset of right differences, six per block, as a list.
    pub fn delta(&self) -> Vec<GroupElement> {
        let g = &self.group;
        let diff = |x: &GroupElement, y: &GroupElement| {
            g.right_difference(x, y)
                .expect("blocks are checked on construction")
        };
        self.blocks
            .iter()
            .flat_map(|[a, b, c]| {
                [
                    diff(b, a),
                    diff(a, b),
                    diff(c, a),
                    diff(a, c),
                    diff(c, b),
                    diff(b, c),
                ]
            })
            .collect()
    }

    /// Multiplicity of each element (by index) in the difference list.
    fn delta_counts(&self) -> Vec<u32> {
        let g = &self.group;
        let mut counts = vec![0u32; g.order()];
        for block in &self.blocks {
            let idx: Vec<usize> = block
                .iter()
                .map(|e| g.index_of(e).expect("blocks are checked on construction"))
                .collect();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        let d = g.compose_index(idx[i], g.invert_index(idx[j]));
                        counts[d] += 1;
                    }
                }
            }
        }
        counts
    }
}

/// A set of subgroups meeting pairwise only in the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSpread {
    group: GroupSpec,
    members: Vec<Subgroup>,
}

impl PartialSpread {
    pub fn new(group: GroupSpec, mut members: Vec<Subgroup>) -> Result<Self, DfError> {
        for m in &members {
            let checked = Subgroup::from_elements(&group, m.elements().cloned())
                .ok_or(DfError::NotSubgroup)?;
            debug_assert_eq!(&checked, m);
        }
        members.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        let id = group.identity();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if members[i]
                    .elements()
                    .any(|e| *e != id && members[j].contains(e))
                {
                    return Err(DfError::Overlap(i, j));
                }
            }
        }
        Ok(PartialSpread { group, members })
    }

    /// The spread with no members.
    pub fn trivial(group: GroupSpec) -> Self {
        PartialSpread {
            group,
            members: Vec::new(),
        }
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// Members sorted by order, then by element set.
    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    /// Member order to multiplicity, e.g. `{2: 3, 3: 1}` for type `{2^3, 3^1}`.
    pub fn type_multiset(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for m in &self.members {
            *out.entry(m.order()).or_insert(0) += 1;
        }
        out
    }

    pub fn count_of_order(&self, order: usize) -> usize {
        self.members.iter().filter(|m| m.order() == order).count()
    }

    pub fn covers(&self, g: &GroupElement) -> bool {
        self.members.iter().any(|m| m.contains(g))
    }

    /// Human-readable type such as `{2^3, 3^1}`.
    pub fn type_string(&self) -> String {
        let parts: Vec<String> = self
            .type_multiset()
            .iter()
            .map(|(o, c)| format!("{o}^{c}"))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// First reason a family fails to be a difference family relative to a spread.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DfDefect {
    Repeated(GroupElement),
    InSpread(GroupElement),
    Missing(GroupElement),
}

impl std::fmt::Display for DfDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DfDefect::Repeated(e) => write!(f, "difference {e} occurs more than once"),
            DfDefect::InSpread(e) => write!(f, "difference {e} lies in the spread"),
            DfDefect::Missing(e) => write!(f, "difference {e} is not covered"),
        }
    }
}

/// `None` when `family` is a `(G, Σ, 3, 1)` difference family.
pub fn diagnose_df(
    family: &DifferenceFamily,
    spread: &PartialSpread,
) -> Result<Option<DfDefect>, DfError> {
    if family.group != spread.group {
        return Err(DfError::GroupMismatch {
            family: family.group.to_string(),
            spread: spread.group.to_string(),
        });
    }
    let g = &family.group;
    let counts = family.delta_counts();
    let mut in_spread = vec![false; g.order()];
    in_spread[0] = true;
    for m in &spread.members {
        for e in m.elements() {
            in_spread[g.index_of(e)?] = true;
        }
    }
    for (i, &c) in counts.iter().enumerate() {
        let defect = match (in_spread[i], c) {
            (_, c) if c > 1 => Some(DfDefect::Repeated(g.element_at(i))),
            (true, 1) => Some(DfDefect::InSpread(g.element_at(i))),
            (false, 0) => Some(DfDefect::Missing(g.element_at(i))),
            _ => None,
        };
        if defect.is_some() {
            return Ok(defect);
        }
    }
    Ok(None)
}

pub fn validate_df(family: &DifferenceFamily, spread: &PartialSpread) -> Result<bool, DfError> {
    Ok(diagnose_df(family, spread)?.is_none())
}

/// Recovers the spread of type `{2^f, 3^e}` that `family` is relative to.
pub fn infer_spread(family: &DifferenceFamily) -> Option<PartialSpread> {
    infer_spread_with_orders(family, &[2, 3])
}

/// Recovers the spread whose members are cyclic subgroups with orders drawn from
/// `allowed`, such that their non-identity elements are exactly the elements the
/// difference list misses. `None` if the list has repeats or the missed set does
/// not split that way.
///
/// The split is unique: an element of order `o` can only sit in the cyclic
/// subgroup it generates, and elements are claimed in decreasing order so
/// that lower-order powers go with their generator.
pub fn infer_spread_with_orders(
    family: &DifferenceFamily,
    allowed: &[usize],
) -> Option<PartialSpread> {
    let g = &family.group;
    let counts = family.delta_counts();
    if counts.iter().any(|&c| c > 1) {
        return None;
    }
    let uncovered: Vec<usize> = (1..g.order()).filter(|&i| counts[i] == 0).collect();
    let order_of = |i: usize| {
        let (mut cur, mut k) = (i, 1);
        while cur != 0 {
            cur = g.compose_index(cur, i);
            k += 1;
        }
        k
    };
    let mut by_order: Vec<(usize, usize)> = uncovered.iter().map(|&i| (order_of(i), i)).collect();
    by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut claimed = vec![false; g.order()];
    let mut members = Vec::new();
    for (ord, i) in by_order {
        if claimed[i] {
            continue;
        }
        if !allowed.contains(&ord) {
            return None;
        }
        let mut powers = Vec::with_capacity(ord);
        let mut cur = i;
        while cur != 0 {
            if claimed[cur] || counts[cur] != 0 {
                return None;
            }
            powers.push(cur);
            cur = g.compose_index(cur, i);
        }
        for &p in &powers {
            claimed[p] = true;
        }
        let sub = g.cyclic_subgroup(&g.element_at(i)).ok()?;
        members.push(sub);
    }
    PartialSpread::new(g.clone(), members).ok()
}

/// The wire form shared by the CLI and file exchange.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfDocument {
    pub group: String,
    pub blocks: Vec<Block>,
    pub spread: Vec<Vec<GroupElement>>,
}

impl DfDocument {
    pub fn new(family: &DifferenceFamily, spread: &PartialSpread) -> Self {
        DfDocument {
            group: family.group.to_string(),
            blocks: family.blocks.clone(),
            spread: spread
                .members
                .iter()
                .map(|m| m.elements().cloned().collect())
                .collect(),
        }
    }

    /// Rebuilds and checks the family and spread.
    pub fn parse(&self) -> Result<(DifferenceFamily, PartialSpread), DfError> {
        let group: GroupSpec = self.group.parse()?;
        let family = DifferenceFamily::new(group.clone(), self.blocks.clone())?;
        let members = self
            .spread
            .iter()
            .map(|elems| {
                for e in elems {
                    group.check(e)?;
                }
                Subgroup::from_elements(&group, elems.iter().cloned()).ok_or(DfError::NotSubgroup)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let spread = PartialSpread::new(group, members)?;
        Ok((family, spread))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(g: &GroupSpec, v: &[i64]) -> GroupElement {
        g.residues(v).unwrap()
    }

    fn cyclic_family(m: u32, blocks: &[[i64; 3]]) -> DifferenceFamily {
        let g = GroupSpec::cyclic(m).unwrap();
        let blocks = blocks
            .iter()
            .map(|b| [z(&g, &[b[0]]), z(&g, &[b[1]]), z(&g, &[b[2]])])
            .collect();
        DifferenceFamily::new(g, blocks).unwrap()
    }

    fn subgroup(g: &GroupSpec, elems: &[&[i64]]) -> Subgroup {
        Subgroup::from_elements(g, elems.iter().map(|e| z(g, e))).unwrap()
    }

    #[test]
    fn delta_in_z24() {
        let f = cyclic_family(24, &[[0, 1, 5]]);
        let g = f.group().clone();
        let expected: Vec<_> = [1, 23, 5, 19, 4, 20].iter().map(|&v| z(&g, &[v])).collect();
        assert_eq!(f.delta(), expected);
    }

    #[test]
    fn delta_in_z4_z4() {
        let g: GroupSpec = "Z4xZ4".parse().unwrap();
        let f = DifferenceFamily::new(
            g.clone(),
            vec![[z(&g, &[0, 0]), z(&g, &[1, 0]), z(&g, &[1, 1])]],
        )
        .unwrap();
        let expected: Vec<_> = [[1, 0], [3, 0], [1, 1], [3, 3], [0, 1], [0, 3]]
            .iter()
            .map(|v| z(&g, v))
            .collect();
        assert_eq!(f.delta(), expected);
        assert!(DifferenceFamily::empty(g).delta().is_empty());
    }

    #[test]
    fn repeated_points_rejected() {
        let g = GroupSpec::cyclic(7).unwrap();
        let e = z(&g, &[1]);
        assert!(matches!(
            DifferenceFamily::new(g.clone(), vec![[e.clone(), e.clone(), z(&g, &[2])]]),
            Err(DfError::RepeatedPoint(_))
        ));
    }

    #[test]
    fn z3_z3_family() {
        let g: GroupSpec = "Z3xZ3".parse().unwrap();
        let f = DifferenceFamily::new(
            g.clone(),
            vec![[z(&g, &[0, 0]), z(&g, &[1, 1]), z(&g, &[1, 2])]],
        )
        .unwrap();
        let spread =
            PartialSpread::new(g.clone(), vec![subgroup(&g, &[&[0, 0], &[1, 0], &[2, 0]])])
                .unwrap();
        assert!(validate_df(&f, &spread).unwrap());
        assert_eq!(infer_spread(&f), Some(spread));
    }

    #[test]
    fn lemma_table_row_validates() {
        let f = cyclic_family(24, &[[0, 1, 5], [0, 2, 9], [0, 3, 13]]);
        let g = f.group().clone();
        let spread = PartialSpread::new(
            g.clone(),
            vec![
                subgroup(&g, &[&[0], &[8], &[16]]),
                subgroup(&g, &[&[0], &[6], &[12], &[18]]),
            ],
        )
        .unwrap();
        assert!(validate_df(&f, &spread).unwrap());
        assert_eq!(infer_spread(&f), None);
        let inferred = infer_spread_with_orders(&f, &[2, 3, 4]).unwrap();
        assert_eq!(inferred, spread);

        let broken = cyclic_family(24, &[[0, 1, 5], [0, 2, 9], [0, 3, 15]]);
        assert!(!validate_df(&broken, &spread).unwrap());
    }

    #[test]
    fn group_mismatch() {
        let f = cyclic_family(7, &[[0, 1, 3]]);
        let spread = PartialSpread::trivial(GroupSpec::cyclic(9).unwrap());
        assert!(matches!(
            validate_df(&f, &spread),
            Err(DfError::GroupMismatch { .. })
        ));
    }

    #[test]
    fn defects_are_reported() {
        let f = cyclic_family(7, &[[0, 1, 2]]);
        let spread = PartialSpread::trivial(f.group().clone());
        assert!(matches!(
            diagnose_df(&f, &spread).unwrap(),
            Some(DfDefect::Repeated(_))
        ));
        assert_eq!(infer_spread(&f), None);

        let f = cyclic_family(13, &[[0, 1, 4]]);
        let spread = PartialSpread::trivial(f.group().clone());
        assert!(matches!(
            diagnose_df(&f, &spread).unwrap(),
            Some(DfDefect::Missing(_))
        ));
    }

    #[test]
    fn overlapping_spread_rejected() {
        let g = GroupSpec::cyclic(12).unwrap();
        let a = subgroup(&g, &[&[0], &[6]]);
        let b = subgroup(&g, &[&[0], &[3], &[6], &[9]]);
        assert!(matches!(
            PartialSpread::new(g, vec![a, b]),
            Err(DfError::Overlap(0, 1))
        ));
    }

    #[test]
    fn document_round_trip() {
        let f = cyclic_family(24, &[[0, 1, 5], [0, 2, 9], [0, 3, 13]]);
        let spread = infer_spread_with_orders(&f, &[3, 4]).unwrap();
        let doc = DfDocument::new(&f, &spread);
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.starts_with(r#"{"group":"Z24","blocks":[[[0],[1],[5]]"#));
        let back: DfDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.parse().unwrap(), (f, spread));
    }
}
