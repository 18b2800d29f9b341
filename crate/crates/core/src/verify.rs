//! Independent checks on a finished triple system. Nothing here uses the
//! constructors or the difference-family code; only group arithmetic is shared.

use std::collections::HashSet;

use serde::Serialize;

use crate::group::GroupSpec;
use crate::system::{PointLabel, TripleSystem};

/// The first thing found wrong with a system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    UncoveredPair {
        pair: [String; 2],
    },
    RepeatedPair {
        pair: [String; 2],
    },
    FixedCount {
        expected: usize,
        found: usize,
    },
    GroupOrder {
        group: usize,
        moved_points: usize,
    },
    /// An element label that is not a group element, or a group element with no point.
    PointSet {
        point: String,
    },
    NotABlock {
        translation: String,
        block: [String; 3],
    },
    FixedPoint {
        translation: String,
        point: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StsReport {
    pub passed: bool,
    pub v: usize,
    pub blocks: usize,
    pub expected_blocks: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidalReport {
    pub passed: bool,
    pub f: usize,
    pub counterexample: Option<Counterexample>,
}

fn pair(t: &TripleSystem, a: usize, b: usize) -> [String; 2] {
    [t.points()[a].to_string(), t.points()[b].to_string()]
}

/// Checks that every pair of distinct points lies in exactly one block.
pub fn verify_sts(t: &TripleSystem) -> StsReport {
    let v = t.v();
    let mut seen = vec![false; v * v];
    let mut counterexample = None;
    'blocks: for b in t.blocks() {
        let [x, y, z] = b.map(|p| p as usize);
        for (p, q) in [(x, y), (x, z), (y, z)] {
            let (p, q) = (p.min(q), p.max(q));
            if std::mem::replace(&mut seen[p * v + q], true) {
                counterexample = Some(Counterexample::RepeatedPair {
                    pair: pair(t, p, q),
                });
                break 'blocks;
            }
        }
    }
    if counterexample.is_none() {
        counterexample = (0..v)
            .flat_map(|p| (p + 1..v).map(move |q| (p, q)))
            .find(|&(p, q)| !seen[p * v + q])
            .map(|(p, q)| Counterexample::UncoveredPair {
                pair: pair(t, p, q),
            });
    }
    StsReport {
        passed: counterexample.is_none(),
        v,
        blocks: t.blocks().len(),
        expected_blocks: v * v.saturating_sub(1) / 6,
        counterexample,
    }
}

/// Checks that `g` acts on `t` by right translation, fixing exactly the `f`
/// infinity points and acting regularly on the rest.
pub fn verify_pyramidal(t: &TripleSystem, g: &GroupSpec, f: usize) -> PyramidalReport {
    let fail = |c| PyramidalReport {
        passed: false,
        f,
        counterexample: Some(c),
    };
    if t.f() != f {
        return fail(Counterexample::FixedCount {
            expected: f,
            found: t.f(),
        });
    }
    let n = g.order();
    if n != t.v() - f {
        return fail(Counterexample::GroupOrder {
            group: n,
            moved_points: t.v() - f,
        });
    }

    // point_of[j]: the point carrying group element j; elem_of[p]: the reverse.
    let mut point_of = vec![u32::MAX; n];
    let mut elem_of = vec![usize::MAX; t.v()];
    for (p, label) in t.points().iter().enumerate() {
        if let PointLabel::Element(e) = label {
            match g.index_of(e) {
                Ok(j) => {
                    point_of[j] = p as u32;
                    elem_of[p] = j;
                }
                Err(_) => {
                    return fail(Counterexample::PointSet {
                        point: label.to_string(),
                    })
                }
            }
        }
    }
    if let Some(j) = point_of.iter().position(|&p| p == u32::MAX) {
        return fail(Counterexample::PointSet {
            point: g.element_at(j).to_string(),
        });
    }

    let lookup = BlockLookup::new(t);
    let mut image = vec![0u32; t.v()];
    for s in 0..n {
        for (p, slot) in image.iter_mut().enumerate() {
            *slot = match elem_of[p] {
                usize::MAX => p as u32,
                j => point_of[g.compose_index(j, s)],
            };
            if s != 0 && *slot == p as u32 && elem_of[p] != usize::MAX {
                return fail(Counterexample::FixedPoint {
                    translation: g.element_at(s).to_string(),
                    point: t.points()[p].to_string(),
                });
            }
        }
        for b in t.blocks() {
            let moved = b.map(|p| image[p as usize]);
            if !lookup.contains(moved) {
                return fail(Counterexample::NotABlock {
                    translation: g.element_at(s).to_string(),
                    block: b.map(|p| t.points()[p as usize].to_string()),
                });
            }
        }
    }
    PyramidalReport {
        passed: true,
        f,
        counterexample: None,
    }
}

/// Block membership: a pair-to-third-point table when no pair repeats, otherwise a
/// hash set.
enum BlockLookup {
    Third { v: usize, third: Vec<u16> },
    Set(HashSet<[u32; 3]>),
}

impl BlockLookup {
    fn new(t: &TripleSystem) -> Self {
        let v = t.v();
        if v >= u16::MAX as usize {
            return BlockLookup::Set(t.blocks().iter().copied().collect());
        }
        let mut third = vec![u16::MAX; v * v];
        for &[a, b, c] in t.blocks() {
            for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                let (x, y) = (x.min(y) as usize, x.max(y) as usize);
                if third[x * v + y] != u16::MAX {
                    return BlockLookup::Set(t.blocks().iter().copied().collect());
                }
                third[x * v + y] = z as u16;
            }
        }
        BlockLookup::Third { v, third }
    }

    fn contains(&self, mut b: [u32; 3]) -> bool {
        match self {
            BlockLookup::Third { v, third } => {
                let (x, y) = (b[0].min(b[1]) as usize, b[0].max(b[1]) as usize);
                third[x * v + y] as u32 == b[2]
            }
            BlockLookup::Set(set) => {
                b.sort_unstable();
                set.contains(&b)
            }
        }
    }
}

/// Number of elements of order 2.
pub fn involution_census(g: &GroupSpec) -> usize {
    let one = g.identity();
    g.elements()
        .filter(|x| *x != one && g.compose(x, x).expect("own elements") == one)
        .count()
}

/// The combined report written by the command-line verifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub steiner: bool,
    /// `None` when the system carries no group.
    pub pyramidal: Option<bool>,
    pub f: usize,
    pub counterexample: Option<Counterexample>,
}

impl Report {
    /// Runs [`verify_sts`], and [`verify_pyramidal`] with the system's own group and
    /// infinity count when a group is attached.
    pub fn check(t: &TripleSystem) -> Report {
        let sts = verify_sts(t);
        let pyr = t.group().map(|g| verify_pyramidal(t, g, t.f()));
        let counterexample = sts
            .counterexample
            .clone()
            .or_else(|| pyr.as_ref().and_then(|r| r.counterexample.clone()));
        Report {
            steiner: sts.passed,
            pyramidal: pyr.map(|r| r.passed),
            f: t.f(),
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.steiner && self.pyramidal != Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Coord, GroupElement};

    fn d6(r: u32, j: bool) -> PointLabel {
        PointLabel::Element(GroupElement::from(vec![Coord::Dihedral { r, reflect: j }]))
    }

    /// The 12 blocks of the STS(9) over D6, written out by hand.
    fn sts9() -> TripleSystem {
        let mut points: Vec<PointLabel> = (1..=3).map(PointLabel::Infinity).collect();
        for r in 0..3 {
            points.push(d6(r, false));
            points.push(d6(r, true));
        }
        let idx = |p: &PointLabel| points.iter().position(|q| q == p).unwrap() as u32;
        let (one, x, x2) = (d6(0, false), d6(1, false), d6(2, false));
        let (y, xy, x2y) = (d6(0, true), d6(1, true), d6(2, true));
        let i = PointLabel::Infinity;
        let list = [
            [i(1), i(2), i(3)],
            [one.clone(), x.clone(), x2.clone()],
            [y.clone(), xy.clone(), x2y.clone()],
            [i(1), one.clone(), y.clone()],
            [i(1), x.clone(), x2y.clone()],
            [i(1), x2.clone(), xy.clone()],
            [i(2), one.clone(), xy.clone()],
            [i(2), x.clone(), y.clone()],
            [i(2), x2.clone(), x2y.clone()],
            [i(3), one.clone(), x2y.clone()],
            [i(3), x.clone(), xy.clone()],
            [i(3), x2.clone(), y.clone()],
        ];
        let blocks = list.iter().map(|b| b.each_ref().map(idx)).collect();
        TripleSystem::new(points, blocks, Some("D6".parse().unwrap()), "hand").unwrap()
    }

    #[test]
    fn sts9_passes_both() {
        let t = sts9();
        let r = verify_sts(&t);
        assert!(r.passed);
        assert_eq!((r.blocks, r.expected_blocks), (12, 12));
        let g = t.group().unwrap().clone();
        assert!(verify_pyramidal(&t, &g, 3).passed);
        assert_eq!(
            verify_pyramidal(&t, &g, 1).counterexample,
            Some(Counterexample::FixedCount {
                expected: 1,
                found: 3
            })
        );
    }

    #[test]
    fn removed_block_reports_pair() {
        let t = sts9();
        let one = t.points().iter().position(|p| *p == d6(0, false)).unwrap() as u32;
        let y = t.points().iter().position(|p| *p == d6(0, true)).unwrap() as u32;
        let mut target = [0, one, y];
        target.sort_unstable();
        let blocks = t
            .blocks()
            .iter()
            .copied()
            .filter(|b| *b != target)
            .collect();
        let broken =
            TripleSystem::new(t.points().to_vec(), blocks, t.group().cloned(), "").unwrap();
        let r = verify_sts(&broken);
        assert!(!r.passed);
        assert_eq!(
            r.counterexample,
            Some(Counterexample::UncoveredPair {
                pair: ["inf1".into(), "(1)".into()]
            })
        );
    }

    #[test]
    fn relabeled_block_breaks_the_action() {
        let t = sts9();
        let mut blocks = t.blocks().to_vec();
        // Swap two points inside one block's orbit: still 12 blocks, no longer invariant.
        let pos = blocks.iter().position(|b| b[0] == 0 && b[1] != 1).unwrap();
        let other = (3..9).find(|p| !blocks[pos].contains(p)).unwrap();
        blocks[pos][2] = other;
        let broken =
            TripleSystem::new(t.points().to_vec(), blocks, t.group().cloned(), "").unwrap();
        let g = t.group().unwrap();
        assert!(!verify_pyramidal(&broken, g, 3).passed);
        assert!(!verify_sts(&broken).passed);
    }

    #[test]
    fn census() {
        for (d, k) in [
            ("Z10", 1),
            ("D10", 5),
            ("Z4xZ12", 3),
            ("Z2xZ2xZ7", 3),
            ("D6", 3),
        ] {
            assert_eq!(involution_census(&d.parse().unwrap()), k, "{d}");
        }
    }
}
