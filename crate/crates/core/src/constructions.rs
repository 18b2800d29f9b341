//! Explicit difference families for every admissible residue class, plus the two
//! example families (projective and dihedral) and the cyclic families they use.
//!
//! Every constructor checks its own output before returning it: the spread is
//! recovered from the uncovered differences and compared with the expected type.
//! A failure names the block rows whose differences collide.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::difference::{infer_spread_with_orders, Block, DfError, DifferenceFamily};
use crate::group::{Coord, Factor, GroupElement, GroupError, GroupSpec};
use crate::search::{df_search, SearchError};
use crate::sequences::{self, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{construction} is not defined for {parameter} = {value}: {reason}")]
    Domain {
        construction: &'static str,
        parameter: &'static str,
        value: u64,
        reason: String,
    },
    #[error("no {kind} sequence found for {params}")]
    MissingSequence { kind: &'static str, params: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Family(#[from] DfError),
    #[error("{case}: {detail}")]
    Invalid { case: String, detail: String },
}

fn domain(
    construction: &'static str,
    parameter: &'static str,
    value: u64,
    reason: impl Into<String>,
) -> ConstructionError {
    ConstructionError::Domain {
        construction,
        parameter,
        value,
        reason: reason.into(),
    }
}

fn skolem(n: u32, k: u32) -> Result<sequences::ExtendedSkolemSequence, ConstructionError> {
    sequences::find_extended_skolem(n, k)?.ok_or_else(|| ConstructionError::MissingSequence {
        kind: "extended Skolem",
        params: format!("n = {n}, k = {k}"),
    })
}

fn langford(
    n: u32,
    d: u32,
    k: u32,
) -> Result<sequences::ExtendedLangfordSequence, ConstructionError> {
    sequences::find_extended_langford(n, d, k)?.ok_or_else(|| ConstructionError::MissingSequence {
        kind: "extended Langford",
        params: format!("n = {n}, d = {d}, k = {k}"),
    })
}

/// Blocks tagged with the row of the construction that produced them.
struct Rows {
    case: String,
    group: GroupSpec,
    blocks: Vec<(&'static str, Block)>,
}

impl Rows {
    fn new(case: impl Into<String>, group: GroupSpec) -> Self {
        Rows {
            case: case.into(),
            group,
            blocks: Vec::new(),
        }
    }

    fn push(&mut self, row: &'static str, block: Block) {
        self.blocks.push((row, block));
    }

    fn invalid(&self, detail: String) -> ConstructionError {
        ConstructionError::Invalid {
            case: self.case.clone(),
            detail,
        }
    }

    /// Builds the family and checks that its uncovered differences form a spread
    /// with orders in `allowed` and exactly the member counts in `expected`.
    fn finish(
        self,
        allowed: &[usize],
        expected: &[(usize, usize)],
    ) -> Result<DifferenceFamily, ConstructionError> {
        for (row, b) in &self.blocks {
            if b[0] == b[1] || b[0] == b[2] || b[1] == b[2] {
                return Err(self.invalid(format!("row {row} produced a degenerate block")));
            }
        }
        let family = DifferenceFamily::new(
            self.group.clone(),
            self.blocks.iter().map(|(_, b)| b.clone()).collect(),
        )?;
        let Some(spread) = infer_spread_with_orders(&family, allowed) else {
            return Err(self.invalid(self.explain()));
        };
        let found = spread.type_multiset();
        let want: BTreeMap<usize, usize> =
            expected.iter().copied().filter(|&(_, c)| c > 0).collect();
        if found != want {
            return Err(self.invalid(format!(
                "uncovered differences form a spread of type {}, expected {want:?}",
                spread.type_string()
            )));
        }
        Ok(family)
    }

    /// Names the rows whose differences repeat an element, if any do.
    fn explain(&self) -> String {
        let g = &self.group;
        let mut hits: BTreeMap<GroupElement, Vec<&'static str>> = BTreeMap::new();
        for (row, [a, b, c]) in &self.blocks {
            for (x, y) in [(a, b), (b, a), (a, c), (c, a), (b, c), (c, b)] {
                let d = g.right_difference(x, y).expect("block elements are valid");
                hits.entry(d).or_default().push(row);
            }
        }
        match hits.iter().find(|(_, rows)| rows.len() > 1) {
            Some((e, rows)) => format!("difference {e} is produced by rows {rows:?}"),
            None => "uncovered differences do not split into spread subgroups".to_string(),
        }
    }
}

fn cyclic_elem(m: u32, v: i64) -> Coord {
    Coord::Cyclic(v.rem_euclid(m as i64) as u32)
}

/// A `(Z_v, {1}, 3, 1)` family for `v = 6n + 1`, or a `(Z_v, {3}, 3, 1)` family for
/// `v = 6n + 3`.
///
/// The first comes from the blocks `{0, i, n + s_i + i}` of an extended Skolem
/// sequence; the second is found by exhaustive search.
pub fn cyclic_df(v: u32) -> Result<DifferenceFamily, ConstructionError> {
    const NAME: &str = "cyclic family";
    if v == 0 || !matches!(v % 6, 1 | 3) {
        return Err(domain(NAME, "v", v as u64, "needs v = 1 or 3 (mod 6)"));
    }
    if v == 9 {
        return Err(domain(
            NAME,
            "v",
            9,
            "no cyclic triple system of order 9 exists",
        ));
    }
    let g = GroupSpec::cyclic(v)?;
    if v % 6 == 3 {
        let third = GroupSpec::cyclic(v)?
            .subgroups_of_prime_order(3)
            .into_iter()
            .collect::<Vec<_>>();
        let spread = crate::difference::PartialSpread::new(g.clone(), third)?;
        let found = df_search(&g, &spread, sequences::DEFAULT_NODE_LIMIT)?;
        return found.ok_or_else(|| ConstructionError::Invalid {
            case: format!("cyclic v = {v}"),
            detail: "exhaustive search found no family".to_string(),
        });
    }
    let n = (v - 1) / 6;
    let mut rows = Rows::new(format!("cyclic v = {v}"), g.clone());
    if n > 0 {
        let k = if n % 4 <= 1 { 2 * n + 1 } else { 2 * n };
        let s = skolem(n, k)?;
        for i in 1..=n {
            let e = |x: i64| g.residues(&[x]).expect("cyclic group");
            rows.push(
                "{0, i, n + s_i + i}",
                [e(0), e(i as i64), e((n + s.get(i) + i) as i64)],
            );
        }
    }
    rows.finish(&[2, 3], &[])
}

/// Family over `Z_2 x Z_2 x H` for `v = 7` or `15 (mod 24)`.
///
/// `H` is `Z_{6n+1}` for `v = 24n + 7` and `Z_3 x Z_{2n+1}` for `v = 24n + 15`, with
/// trivial factors dropped. The blocks are the lifted `H`-family and one block
/// `{(0,1,0), (1,0,h), (1,1,-h)}` per representative `h` of the patterned starter.
pub fn df_v7_v15(v: u32) -> Result<DifferenceFamily, ConstructionError> {
    const NAME: &str = "Z2xZ2xH construction";
    let (h_group, h_family, e) = match v % 24 {
        7 => {
            let n = (v - 7) / 24;
            let m = 6 * n + 1;
            (GroupSpec::cyclic(m)?, cyclic_df(m)?, 0)
        }
        15 => {
            let n = (v - 15) / 24;
            let h = if n == 0 {
                GroupSpec::cyclic(3)?
            } else {
                GroupSpec::new(vec![Factor::Cyclic(3), Factor::Cyclic(2 * n + 1)])?
            };
            let mut blocks = Vec::new();
            for i in 1..=n as i64 {
                let e = |a: i64, b: i64| h.residues(&[a, b]).expect("abelian group");
                blocks.push([e(0, 0), e(1, i), e(1, -i)]);
            }
            let family = DifferenceFamily::new(h.clone(), blocks)?;
            (h, family, 1)
        }
        _ => return Err(domain(NAME, "v", v as u64, "needs v = 7 or 15 (mod 24)")),
    };

    // Drop a trivial H so that v = 7 lives on Z2xZ2 itself.
    let trivial_h = h_group.order() == 1;
    let g = if trivial_h {
        GroupSpec::new(vec![Factor::Cyclic(2), Factor::Cyclic(2)])?
    } else {
        GroupSpec::new(vec![Factor::Cyclic(2), Factor::Cyclic(2)])?.product(&h_group)
    };
    let lift = |a: u32, b: u32, h: &GroupElement| -> GroupElement {
        let prefix = GroupElement::from(vec![Coord::Cyclic(a), Coord::Cyclic(b)]);
        if trivial_h {
            prefix
        } else {
            prefix.concat(h)
        }
    };

    let mut rows = Rows::new(format!("v = {v} over {g}"), g.clone());
    for [a, b, c] in h_family.blocks() {
        rows.push("{(0,0)} x B", [lift(0, 0, a), lift(0, 0, b), lift(0, 0, c)]);
    }
    for h in h_group.patterned_starter()? {
        let neg = h_group.invert(&h)?;
        rows.push(
            "{(0,1,0), (1,0,h), (1,1,-h)}",
            [
                lift(0, 1, &h_group.identity()),
                lift(1, 0, &h),
                lift(1, 1, &neg),
            ],
        );
    }
    rows.finish(&[2, 3], &[(2, 3), (3, e)])
}

/// Family over `D_6 x Z_{4n+1}` for `v = 24n + 9`, `n >= 1`.
///
/// Rows are selected by `n` odd, `n = 0 (mod 4)` or `n = 2 (mod 4)`. In the last
/// column the index `(7n + 2) / 4` moves from the `(x, -i), (x^2, i)` row to the
/// `(x, i), (x^2, -i)` row, mirroring the `n / 4` exchange of the middle column.
pub fn df_v9(v: u32) -> Result<DifferenceFamily, ConstructionError> {
    const NAME: &str = "D6xZ(4n+1) construction";
    if v % 24 != 9 {
        return Err(domain(NAME, "v", v as u64, "needs v = 9 (mod 24)"));
    }
    if v == 9 {
        return Err(domain(
            NAME,
            "v",
            9,
            "v = 9 is the dihedral example over D6",
        ));
    }
    let n = ((v - 9) / 24) as i64;
    let m = (4 * n + 1) as u32;
    let g = GroupSpec::new(vec![Factor::Dihedral(3), Factor::Cyclic(m)])?;
    // (x^r y^j, c)
    let e = |r: u32, j: bool, c: i64| -> GroupElement {
        GroupElement::from(vec![Coord::Dihedral { r, reflect: j }, cyclic_elem(m, c)])
    };
    let one = |c| e(0, false, c);
    let x = |c| e(1, false, c);
    let x2 = |c| e(2, false, c);
    let y = |c| e(0, true, c);

    let odd = n % 2 == 1;
    let mut rows = Rows::new(format!("v = {v} over {g}"), g.clone());
    rows.push("{(1,0),(x,n),(x,2n)}", [one(0), x(n), x(2 * n)]);
    if odd {
        rows.push(
            "{(y,0),(1,-(n+1)/2),(1,(3n+1)/2)}",
            [y(0), one(-(n + 1) / 2), one((3 * n + 1) / 2)],
        );
    } else {
        rows.push(
            "{(1,0),(x,-n/2),(x,3n/2)}",
            [one(0), x(-n / 2), x(3 * n / 2)],
        );
    }
    for i in 1..=n {
        if odd && i == (n + 1) / 2 {
            continue;
        }
        rows.push(
            "{(y,0),(1,i),(1,2n+1-i)}",
            [y(0), one(i), one(2 * n + 1 - i)],
        );
    }

    let mut forward: Vec<i64> = (1..=n).collect();
    let mut backward: Vec<i64> = (n + 1..=2 * n).collect();
    match n % 4 {
        0 => {
            let swap = n / 4;
            forward.retain(|&i| i != swap);
            backward.push(swap);
        }
        2 => {
            let swap = (7 * n + 2) / 4;
            forward.push(swap);
            backward.retain(|&i| i != swap);
        }
        _ => {}
    }
    for i in forward {
        rows.push("{(y,0),(x,i),(x^2,-i)}", [y(0), x(i), x2(-i)]);
    }
    for i in backward {
        rows.push("{(y,0),(x,-i),(x^2,i)}", [y(0), x(-i), x2(i)]);
    }
    for i in 1..n {
        if !odd && i == n / 2 {
            continue;
        }
        rows.push("{(1,0),(x,i),(x,2n-i)}", [one(0), x(i), x(2 * n - i)]);
    }
    rows.finish(&[2, 3], &[(2, 3), (3, 1)])
}

/// The hand-checked `b_i` values for `B_i = {0, i, b_i}` over `Z_{12n}`.
pub fn lemma_table(n: u32) -> Option<&'static [u32]> {
    Some(match n {
        2 => &[5, 9, 13],
        4 => &[40, 37, 34, 30, 38, 29, 28],
        6 => &[13, 16, 20, 19, 26, 28, 30, 39, 34, 37, 40],
        8 => &[17, 20, 22, 25, 28, 33, 36, 34, 39, 47, 46, 52, 54, 45, 53],
        12 => &[
            66, 63, 37, 64, 38, 62, 39, 58, 40, 59, 41, 67, 42, 68, 43, 69, 44, 70, 45, 71, 46, 57,
            47,
        ],
        14 => &[
            76, 74, 43, 70, 44, 77, 45, 73, 46, 68, 47, 69, 48, 78, 49, 79, 50, 80, 51, 81, 52, 82,
            53, 83, 54, 67, 55,
        ],
        20 => &[
            110, 103, 61, 108, 62, 102, 63, 100, 64, 105, 65, 106, 66, 107, 67, 98, 68, 99, 69,
            111, 70, 112, 71, 113, 72, 114, 73, 115, 74, 116, 75, 117, 76, 118, 77, 119, 78, 97,
            79,
        ],
        _ => return None,
    })
}

fn check_lemma_n(n: u32) -> Result<(), ConstructionError> {
    if n < 2 || n % 2 == 1 {
        return Err(domain(
            "Z(12n) {3,4} construction",
            "n",
            n as u64,
            "needs an even n >= 2",
        ));
    }
    Ok(())
}

/// A `(Z_{12n}, {3, 4}, 3, 1)` family for even `n >= 2`: the tabulated blocks when
/// available, otherwise the Skolem plus Langford blocks.
pub fn df_lemma_z12n(n: u32) -> Result<DifferenceFamily, ConstructionError> {
    check_lemma_n(n)?;
    match lemma_table(n) {
        Some(_) => lemma_from_table(n),
        None => lemma_from_sequences(n),
    }
}

/// The tabulated family `{0, i, b_i}`; `None` outside the table.
pub fn lemma_from_table(n: u32) -> Result<DifferenceFamily, ConstructionError> {
    check_lemma_n(n)?;
    let table = lemma_table(n)
        .ok_or_else(|| domain("Z(12n) {3,4} table", "n", n as u64, "n is not tabulated"))?;
    let g = GroupSpec::cyclic(12 * n)?;
    let mut rows = Rows::new(format!("Z{} table", 12 * n), g.clone());
    for (i, &b) in table.iter().enumerate() {
        let e = |x: i64| g.residues(&[x]).expect("cyclic group");
        rows.push("{0, i, b_i}", [e(0), e(i as i64 + 1), e(b as i64)]);
    }
    rows.finish(&[3, 4], &[(3, 1), (4, 1)])
}

/// With `n = 2m`, `r = m mod 4` and `eps = r + (-1)^r`, the blocks
/// `{0, -i, s_i + 4m - 1}` from a `(2m+1)`-extended Skolem sequence of order `m + eps`
/// and `{0, -(m + eps + i), l_i + 6m + 2eps}` from a `(2m - 2eps)`-extended Langford
/// sequence of order `3m - eps - 1` and defect `m + eps + 1`.
pub fn lemma_from_sequences(n: u32) -> Result<DifferenceFamily, ConstructionError> {
    check_lemma_n(n)?;
    let m = (n / 2) as i64;
    let r = m % 4;
    let eps = r + if r % 2 == 0 { 1 } else { -1 };
    let skolem_order = (m + eps) as u32;
    let langford_order = 3 * m - eps - 1;
    if langford_order < 1 || 2 * m - 2 * eps < 1 {
        return Err(domain(
            "Z(12n) {3,4} sequence construction",
            "n",
            n as u64,
            "sequence parameters are out of range",
        ));
    }
    let s = skolem(skolem_order, (2 * m + 1) as u32)?;
    let l = langford(
        langford_order as u32,
        (m + eps + 1) as u32,
        (2 * m - 2 * eps) as u32,
    )?;
    let g = GroupSpec::cyclic(12 * n)?;
    let e = |x: i64| g.residues(&[x]).expect("cyclic group");
    let mut rows = Rows::new(format!("Z{} sequences", 12 * n), g.clone());
    for i in 1..=skolem_order {
        let s_i = s.get(i) as i64;
        rows.push(
            "{0, -i, s_i + 4m - 1}",
            [e(0), e(-(i as i64)), e(s_i + 4 * m - 1)],
        );
    }
    for i in 1..=langford_order as u32 {
        let l_i = l.get(i) as i64;
        rows.push(
            "{0, -(m + eps + i), l_i + 6m + 2eps}",
            [e(0), e(-(m + eps + i as i64)), e(l_i + 6 * m + 2 * eps)],
        );
    }
    rows.finish(&[3, 4], &[(3, 1), (4, 1)])
}

/// Family over `Z_4 x Z_{12n}` for `v = 48n + 3`, `n >= 1`.
pub fn df_v3mod48(v: u32) -> Result<DifferenceFamily, ConstructionError> {
    const NAME: &str = "Z4xZ12n construction";
    if v % 48 != 3 || v < 51 {
        return Err(domain(NAME, "v", v as u64, "needs v = 48n + 3 with n >= 1"));
    }
    let n = (v - 3) / 48;
    let modulus = 12 * n;
    let g = GroupSpec::new(vec![Factor::Cyclic(4), Factor::Cyclic(modulus)])?;
    let e = |a: i64, b: i64| g.residues(&[a, b]).expect("abelian group");
    let mut rows = Rows::new(format!("v = {v} over {g}"), g.clone());
    let n = n as i64;

    if n % 2 == 1 {
        let t = (n - 1) / 2;
        let s = skolem((2 * n - 1) as u32, (2 * n + 1) as u32)?;
        rows.push(
            "{(0,0),(1,0),(3,6t+3)}",
            [e(0, 0), e(1, 0), e(3, 6 * t + 3)],
        );
        rows.push(
            "{(0,0),(1,3t+2),(1,-9t-5)}",
            [e(0, 0), e(1, 3 * t + 2), e(1, -9 * t - 5)],
        );
        for i in 1..=6 * t + 3 {
            if i == 3 * t + 2 {
                continue;
            }
            rows.push(
                "{(0,0),(1,i),(3,12t+7-i)}",
                [e(0, 0), e(1, i), e(3, 12 * t + 7 - i)],
            );
        }
        for i in 1..=6 * t + 2 {
            rows.push(
                "{(0,0),(1,6t+3+i),(3,6t+3-i)}",
                [e(0, 0), e(1, 6 * t + 3 + i), e(3, 6 * t + 3 - i)],
            );
        }
        for i in 1..=4 * t + 1 {
            let s_i = s.get(i as u32) as i64;
            rows.push(
                "{(0,0),(0,i),(0,-s_i-4t-1)}",
                [e(0, 0), e(0, i), e(0, -s_i - 4 * t - 1)],
            );
        }
    } else {
        let lemma = df_lemma_z12n(n as u32)?;
        let zero = GroupElement::from(vec![Coord::Cyclic(0)]);
        rows.push("{(0,0),(1,0),(1,9n)}", [e(0, 0), e(1, 0), e(1, 9 * n)]);
        for b in lemma.blocks() {
            rows.push("{0} x B", b.clone().map(|x| zero.concat(&x)));
        }
        for i in 1..=3 * n {
            rows.push(
                "{(0,0),(1,i),(3,6n+1-i)}",
                [e(0, 0), e(1, i), e(3, 6 * n + 1 - i)],
            );
        }
        for i in 3 * n + 1..=6 * n - 1 {
            rows.push(
                "{(0,0),(1,i),(3,6n-i)}",
                [e(0, 0), e(1, i), e(3, 6 * n - i)],
            );
        }
    }
    rows.finish(&[2, 3], &[(2, 3), (3, 1)])
}

/// Family over `Z_4 x Z_{12n+4}` for `v = 48n + 19`; no order-3 spread member.
pub fn df_v19mod48(v: u32) -> Result<DifferenceFamily, ConstructionError> {
    const NAME: &str = "Z4xZ(12n+4) construction";
    if v % 48 != 19 {
        return Err(domain(NAME, "v", v as u64, "needs v = 19 (mod 48)"));
    }
    let n = (v - 19) / 48;
    let g = GroupSpec::new(vec![Factor::Cyclic(4), Factor::Cyclic(12 * n + 4)])?;
    let s = skolem(2 * n, n + 1)?;
    let e = |a: i64, b: i64| g.residues(&[a, b]).expect("abelian group");
    let mut rows = Rows::new(format!("v = {v} over {g}"), g.clone());
    let n = n as i64;
    rows.push(
        "{(0,0),(1,0),(1,3n+1)}",
        [e(0, 0), e(1, 0), e(1, 3 * n + 1)],
    );
    for i in 1..=2 * n {
        let s_i = s.get(i as u32) as i64;
        rows.push(
            "{(0,0),(0,i),(0,-s_i-2n)}",
            [e(0, 0), e(0, i), e(0, -s_i - 2 * n)],
        );
    }
    for i in 1..=3 * n {
        rows.push(
            "{(0,0),(1,i),(3,6n+2-i)}",
            [e(0, 0), e(1, i), e(3, 6 * n + 2 - i)],
        );
    }
    for i in 1..=3 * n + 1 {
        rows.push(
            "{(0,0),(1,6n+3-i),(3,i)}",
            [e(0, 0), e(1, 6 * n + 3 - i), e(3, i)],
        );
    }
    rows.finish(&[2, 3], &[(2, 3)])
}

/// The empty family over `Z_2^n`; every non-zero element is an involution.
pub fn df_projective(n: u32) -> Result<DifferenceFamily, ConstructionError> {
    if n == 0 || n > 20 {
        return Err(domain(
            "projective family",
            "n",
            n as u64,
            "needs 1 <= n <= 20",
        ));
    }
    let g = GroupSpec::new(vec![Factor::Cyclic(2); n as usize])?;
    Rows::new(format!("projective n = {n}"), g).finish(&[2], &[(2, (1 << n) - 1)])
}

/// Image of [`cyclic_df`]`(f)` under `i -> x^i` in `D_{2f}`.
pub fn df_dihedral(f: u32) -> Result<DifferenceFamily, ConstructionError> {
    const NAME: &str = "dihedral family";
    if f == 0 || !matches!(f % 6, 1 | 3) {
        return Err(domain(NAME, "f", f as u64, "needs f = 1 or 3 (mod 6)"));
    }
    if f == 9 {
        return Err(domain(
            NAME,
            "f",
            9,
            "no cyclic triple system of order 9 exists",
        ));
    }
    let cyclic = cyclic_df(f)?;
    let g = GroupSpec::dihedral(f)?;
    let phi = |a: &GroupElement| match a.coords() {
        [Coord::Cyclic(i)] => GroupElement::from(vec![Coord::Dihedral {
            r: *i,
            reflect: false,
        }]),
        _ => unreachable!("cyclic family elements have one coordinate"),
    };
    let mut rows = Rows::new(format!("dihedral f = {f}"), g);
    for b in cyclic.blocks() {
        rows.push("phi(B)", b.clone().map(|a| phi(&a)));
    }
    let e = usize::from(f % 6 == 3);
    rows.finish(&[2, 3], &[(2, f as usize), (3, e)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::difference::{infer_spread, validate_df};

    fn int_blocks(f: &DifferenceFamily) -> Vec<Vec<Vec<i64>>> {
        f.blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| {
                        e.coords()
                            .iter()
                            .map(|c| match c {
                                Coord::Cyclic(r) => *r as i64,
                                Coord::Dihedral { .. } => panic!("abelian expected"),
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn cyclic_small_cases() {
        let f7 = cyclic_df(7).unwrap();
        assert_eq!(int_blocks(&f7), vec![vec![vec![0], vec![1], vec![3]]]);
        let f13 = cyclic_df(13).unwrap();
        assert_eq!(f13.len(), 2);
        assert!(validate_df(&f13, &infer_spread(&f13).unwrap()).unwrap());
        assert!(matches!(
            cyclic_df(9),
            Err(ConstructionError::Domain { .. })
        ));
        assert!(matches!(
            cyclic_df(11),
            Err(ConstructionError::Domain { .. })
        ));
        assert!(cyclic_df(1).unwrap().is_empty());
        assert!(cyclic_df(3).unwrap().is_empty());
    }

    #[test]
    fn v7_v15_counts() {
        let f = df_v7_v15(7).unwrap();
        assert!(f.is_empty());
        assert_eq!(f.group().to_string(), "Z2xZ2");
        let f = df_v7_v15(15).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(infer_spread(&f).unwrap().type_string(), "{2^3, 3^1}");
        let f = df_v7_v15(39).unwrap();
        assert_eq!(f.group().to_string(), "Z2xZ2xZ3xZ3");
        assert_eq!(f.len(), 5);
        let f = df_v7_v15(63).unwrap();
        assert_eq!(f.group().to_string(), "Z2xZ2xZ3xZ5");
        assert!(df_v7_v15(9).is_err());
    }

    #[test]
    fn v9_block_counts() {
        for (v, blocks) in [(33, 4), (57, 8), (81, 12), (105, 16), (153, 24)] {
            let f = df_v9(v).unwrap();
            assert_eq!(f.len(), blocks, "v = {v}");
            let spread = infer_spread(&f).unwrap();
            let rotations: Vec<_> = spread.members().iter().filter(|m| m.order() == 3).collect();
            assert_eq!(rotations.len(), 1);
            for m in rotations[0].elements() {
                assert!(matches!(
                    m.coords(),
                    [Coord::Dihedral { reflect: false, .. }, Coord::Cyclic(0)]
                ));
            }
        }
        assert!(matches!(df_v9(9), Err(ConstructionError::Domain { .. })));
    }

    #[test]
    fn lemma_rows() {
        let f = df_lemma_z12n(2).unwrap();
        assert_eq!(
            int_blocks(&f),
            vec![
                vec![vec![0], vec![1], vec![5]],
                vec![vec![0], vec![2], vec![9]],
                vec![vec![0], vec![3], vec![13]],
            ]
        );
        let f = df_lemma_z12n(10).unwrap();
        assert_eq!(f.len(), 19);
        assert!(df_lemma_z12n(3).is_err());
        assert!(df_lemma_z12n(0).is_err());
    }

    #[test]
    fn v3_and_v19_instances() {
        let f = df_v3mod48(51).unwrap();
        assert_eq!(f.len(), 7);
        assert!(int_blocks(&f).contains(&vec![vec![0, 0], vec![0, 1], vec![0, 10]]));
        assert_eq!(df_v3mod48(99).unwrap().len(), 15);

        let f = df_v19mod48(19).unwrap();
        assert_eq!(
            int_blocks(&f),
            vec![
                vec![vec![0, 0], vec![1, 0], vec![1, 1]],
                vec![vec![0, 0], vec![1, 2], vec![3, 1]],
            ]
        );
        let spread = infer_spread(&f).unwrap();
        assert_eq!(spread.count_of_order(2), 3);
        assert_eq!(spread.count_of_order(3), 0);
        assert_eq!(df_v19mod48(67).unwrap().len(), 10);
        assert!(df_v3mod48(3).is_err());
        assert!(df_v19mod48(43).is_err());
    }

    #[test]
    fn example_families() {
        for (n, f) in [(1, 1), (2, 3), (3, 7)] {
            let fam = df_projective(n).unwrap();
            assert!(fam.is_empty());
            assert_eq!(infer_spread(&fam).unwrap().count_of_order(2), f);
        }
        let d3 = df_dihedral(3).unwrap();
        assert!(d3.is_empty());
        assert_eq!(infer_spread(&d3).unwrap().type_string(), "{2^3, 3^1}");
        let d7 = df_dihedral(7).unwrap();
        assert_eq!(d7.len(), 1);
        assert!(matches!(
            df_dihedral(9),
            Err(ConstructionError::Domain { .. })
        ));
    }
}
