//! Development of a difference family and spread into a pyramidal triple system,
//! and the per-residue dispatch for 3-pyramidal systems.

use thiserror::Error;

use crate::constructions::{self, ConstructionError};
use crate::difference::{infer_spread, DifferenceFamily, PartialSpread};
use crate::system::{PointLabel, SystemError, TripleSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("v = {v} ≡ {residue} (mod {modulus}): no 3-pyramidal STS exists")]
    NonExistence { v: u32, modulus: u32, residue: u32 },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("spread is over {spread} but the family is over {family}")]
    GroupMismatch { family: String, spread: String },
    #[error("spread member of order {0} cannot be developed; only orders 2 and 3 are")]
    SpreadOrder(usize),
    #[error("uncovered differences of the family do not form a spread of orders 2 and 3")]
    NoSpread,
    #[error("an STS({f}) on the infinity points is required")]
    MissingInfinitySystem { f: usize },
    #[error("the infinity system has {found} points, expected {f}")]
    InfinitySystemSize { f: usize, found: usize },
    #[error("orbit of {orbit} has length {found}, expected {expected}")]
    OrbitLength {
        orbit: String,
        expected: usize,
        found: usize,
    },
    #[error("orbit of {orbit} covers the pair {pair} a second time")]
    PairConflict { orbit: String, pair: String },
    #[error("developed {found} distinct blocks, expected {expected}")]
    BlockCount { expected: usize, found: usize },
    #[error(transparent)]
    System(#[from] SystemError),
}

/// True iff `v = 7, 9, 15 (mod 24)` or `v = 3, 19 (mod 48)`.
pub fn admissible_3pyramidal(v: u32) -> bool {
    matches!(v % 24, 7 | 9 | 15) || matches!(v % 48, 3 | 19)
}

/// The group [`build_3pyramidal`] uses for `v`, or `None` when `v` is not
/// admissible or is the trivial `v = 3`.
pub fn planned_group(v: u32) -> Option<String> {
    if !admissible_3pyramidal(v) || v == 3 {
        return None;
    }
    let with = |prefix: &str, m: u32| {
        if m == 1 {
            prefix.to_string()
        } else {
            format!("{prefix}xZ{m}")
        }
    };
    Some(match v % 24 {
        7 => with("Z2xZ2", (v - 7) / 4 + 1),
        15 => with("Z2xZ2xZ3", (v - 15) / 12 + 1),
        9 => with("D6", (v - 9) / 6 + 1),
        _ if v % 48 == 3 => format!("Z4xZ{}", (v - 3) / 4),
        _ => format!("Z4xZ{}", (v - 19) / 4 + 4),
    })
}

/// Develops `family` with spread `spread` under right translation.
///
/// Point `i < f` is `inf{i+1}`, attached to the order-2 spread members in the order of
/// their involutions; point `f + j` is the group element with index `j`. For `f > 3`
/// an STS(f) on the infinity points must be supplied; its point `i` becomes `inf{i+1}`.
pub fn develop(
    family: &DifferenceFamily,
    spread: &PartialSpread,
    infinity: Option<&TripleSystem>,
    case: &str,
) -> Result<TripleSystem, BuildError> {
    let g = family.group();
    if spread.group() != g {
        return Err(BuildError::GroupMismatch {
            family: g.to_string(),
            spread: spread.group().to_string(),
        });
    }
    let n = g.order();
    let mut involutions = Vec::new();
    let mut rotations = Vec::new();
    for m in spread.members() {
        let idx: Vec<usize> = m
            .elements()
            .map(|e| g.index_of(e).expect("spread elements are valid"))
            .filter(|&i| i != 0)
            .collect();
        match m.order() {
            2 => involutions.push(idx[0]),
            3 => rotations.push([idx[0], idx[1]]),
            other => return Err(BuildError::SpreadOrder(other)),
        }
    }
    involutions.sort_unstable();
    let f = involutions.len();
    let e = rotations.len();
    let v = n + f;
    let expected = v * (v - 1) / 6;
    let predicted = f * f.saturating_sub(1) / 6 + f * n / 2 + e * n / 3 + family.len() * n;
    if predicted != expected {
        return Err(BuildError::BlockCount {
            expected,
            found: predicted,
        });
    }

    let el = |i: usize| (f + i) as u32;
    let label = |p: u32| -> String {
        if (p as usize) < f {
            format!("inf{}", p + 1)
        } else {
            g.element_at(p as usize - f).to_string()
        }
    };
    let mut blocks: Vec<[u32; 3]> = Vec::with_capacity(expected);
    let mut covered = vec![false; v * v];
    let mut cover = |name: &str, b: &[u32; 3]| -> Result<(), BuildError> {
        for (x, y) in [(b[0], b[1]), (b[0], b[2]), (b[1], b[2])] {
            let slot = &mut covered[x as usize * v + y as usize];
            if *slot {
                return Err(BuildError::PairConflict {
                    orbit: name.to_string(),
                    pair: format!("{{{}, {}}}", label(x), label(y)),
                });
            }
            *slot = true;
        }
        Ok(())
    };
    let mut orbit = |name: String, expected_len: usize, rep: &dyn Fn(usize) -> [u32; 3]| {
        let mut translates: Vec<[u32; 3]> = (0..n)
            .map(|t| {
                let mut b = rep(t);
                b.sort_unstable();
                b
            })
            .collect();
        translates.sort_unstable();
        translates.dedup();
        if translates.len() != expected_len {
            return Err(BuildError::OrbitLength {
                orbit: name,
                expected: expected_len,
                found: translates.len(),
            });
        }
        for b in &translates {
            cover(&name, b)?;
        }
        blocks.extend(translates);
        Ok(())
    };

    for (i, &s) in involutions.iter().enumerate() {
        orbit(
            format!("{{inf{}, 1, {}}}", i + 1, g.element_at(s)),
            n / 2,
            &|t| [i as u32, el(t), el(g.compose_index(s, t))],
        )?;
    }
    for &[a, b] in &rotations {
        orbit(
            format!("subgroup {{1, {}, {}}}", g.element_at(a), g.element_at(b)),
            n / 3,
            &|t| [el(t), el(g.compose_index(a, t)), el(g.compose_index(b, t))],
        )?;
    }
    for block in family.blocks() {
        let [a, b, c] = block
            .clone()
            .map(|x| g.index_of(&x).expect("family elements are valid"));
        orbit(
            format!("{{{}, {}, {}}}", block[0], block[1], block[2]),
            n,
            &|t| {
                [
                    el(g.compose_index(a, t)),
                    el(g.compose_index(b, t)),
                    el(g.compose_index(c, t)),
                ]
            },
        )?;
    }

    match (f, infinity) {
        (0 | 1, _) => {}
        (3, None) => {
            cover("{inf1, inf2, inf3}", &[0, 1, 2])?;
            blocks.push([0, 1, 2]);
        }
        (_, None) => return Err(BuildError::MissingInfinitySystem { f }),
        (_, Some(inf)) => {
            if inf.v() != f {
                return Err(BuildError::InfinitySystemSize { f, found: inf.v() });
            }
            for b in inf.blocks() {
                cover("the infinity system", b)?;
            }
            blocks.extend_from_slice(inf.blocks());
        }
    }

    blocks.sort_unstable();
    blocks.dedup();
    if blocks.len() != expected {
        return Err(BuildError::BlockCount {
            expected,
            found: blocks.len(),
        });
    }
    let points = (1..=f as u32)
        .map(PointLabel::Infinity)
        .chain(g.elements().map(PointLabel::Element))
        .collect();
    Ok(TripleSystem::new(points, blocks, Some(g.clone()), case)?)
}

/// Develops `family` against the spread inferred from its uncovered differences.
pub fn develop_family(
    family: &DifferenceFamily,
    infinity: Option<&TripleSystem>,
    case: &str,
) -> Result<TripleSystem, BuildError> {
    let spread = infer_spread(family).ok_or(BuildError::NoSpread)?;
    develop(family, &spread, infinity, case)
}

/// Builds a 3-pyramidal STS(v) for admissible `v`.
///
/// `v = 3` is the single block on three fixed points; there is no group acting on
/// the empty affine part, so no group is attached.
pub fn build_3pyramidal(v: u32) -> Result<TripleSystem, BuildError> {
    if !admissible_3pyramidal(v) {
        let (modulus, residue) = if matches!(v % 24, 3 | 19) {
            (48, v % 48)
        } else {
            (24, v % 24)
        };
        return Err(BuildError::NonExistence {
            v,
            modulus,
            residue,
        });
    }
    if v == 3 {
        let points = (1..=3).map(PointLabel::Infinity).collect();
        return Ok(TripleSystem::new(points, vec![[0, 1, 2]], None, "trivial")?);
    }
    let (family, case) = match v % 24 {
        7 => (constructions::df_v7_v15(v)?, "24n+7"),
        15 => (constructions::df_v7_v15(v)?, "24n+15"),
        9 if v == 9 => (constructions::df_dihedral(3)?, "dihedral f=3"),
        9 => (constructions::df_v9(v)?, "24n+9"),
        _ if v % 48 == 3 => (constructions::df_v3mod48(v)?, "48n+3"),
        _ => (constructions::df_v19mod48(v)?, "48n+19"),
    };
    develop_family(&family, None, case)
}

/// The two example families of pyramidal systems with many fixed points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleKind {
    /// `(2^n - 1)`-pyramidal STS(2^(n+1) - 1) over `Z_2^n`.
    Projective(u32),
    /// `f`-pyramidal STS(3f) over the dihedral group of order `2f`.
    Dihedral(u32),
}

pub fn build_f_pyramidal_examples(kind: ExampleKind) -> Result<TripleSystem, BuildError> {
    match kind {
        ExampleKind::Projective(n) => {
            let family = constructions::df_projective(n)?;
            let infinity = if n >= 3 {
                Some(build_f_pyramidal_examples(ExampleKind::Projective(n - 1))?)
            } else {
                None
            };
            develop_family(&family, infinity.as_ref(), &format!("projective n={n}"))
        }
        ExampleKind::Dihedral(f) => {
            let family = constructions::df_dihedral(f)?;
            let infinity = if f > 3 { Some(cyclic_sts(f)?) } else { None };
            develop_family(&family, infinity.as_ref(), &format!("dihedral f={f}"))
        }
    }
}

/// The cyclic STS(v) developed from [`constructions::cyclic_df`] over `Z_v`.
pub fn cyclic_sts(v: u32) -> Result<TripleSystem, BuildError> {
    let family = constructions::cyclic_df(v)?;
    develop_family(&family, None, &format!("cyclic v={v}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn admissibility_examples() {
        assert!(admissible_3pyramidal(51));
        assert!(!admissible_3pyramidal(27));
        assert!(!admissible_3pyramidal(13));
        assert!(admissible_3pyramidal(9));
        assert!(admissible_3pyramidal(19));
        assert!(!admissible_3pyramidal(43));
    }

    #[test]
    fn planned_groups_match_builds() {
        for v in [7, 9, 15, 19, 33, 51, 63, 67, 99] {
            let built = build_3pyramidal(v).unwrap().group().unwrap().to_string();
            assert_eq!(planned_group(v), Some(built));
        }
        assert_eq!(planned_group(3), None);
        assert_eq!(planned_group(13), None);
    }

    #[test]
    fn non_existence_cites_residue() {
        assert_eq!(
            build_3pyramidal(21),
            Err(BuildError::NonExistence {
                v: 21,
                modulus: 24,
                residue: 21
            })
        );
        let err = build_3pyramidal(27).unwrap_err();
        assert_eq!(
            err.to_string(),
            "v = 27 ≡ 27 (mod 48): no 3-pyramidal STS exists"
        );
    }

    #[test]
    fn small_systems_have_the_right_shape() {
        for (v, group, blocks) in [
            (7, "Z2xZ2", 7),
            (9, "D6", 12),
            (19, "Z4xZ4", 57),
            (63, "Z2xZ2xZ3xZ5", 651),
        ] {
            let t = build_3pyramidal(v).unwrap();
            assert_eq!(t.v(), v as usize);
            assert_eq!(t.f(), 3);
            assert_eq!(t.group().unwrap().to_string(), group);
            assert_eq!(t.blocks().len(), blocks);
        }
        let t = build_3pyramidal(3).unwrap();
        assert_eq!((t.v(), t.blocks().len(), t.group()), (3, 1, None));
    }

    #[test]
    fn orbit_audit_catches_a_bad_representative() {
        let g = GroupSpec::cyclic(7).unwrap();
        let bad = DifferenceFamily::new(
            g.clone(),
            vec![[0, 1, 2].map(|x| g.residues(&[x]).unwrap())],
        )
        .unwrap();
        let err = develop(&bad, &PartialSpread::trivial(g), None, "bad").unwrap_err();
        assert_eq!(
            err.to_string(),
            "orbit of {(0), (1), (2)} covers the pair {(0), (1)} a second time"
        );
    }

    #[test]
    fn examples() {
        let t = build_f_pyramidal_examples(ExampleKind::Projective(3)).unwrap();
        assert_eq!((t.v(), t.f(), t.blocks().len()), (15, 7, 35));
        let t = build_f_pyramidal_examples(ExampleKind::Dihedral(7)).unwrap();
        assert_eq!((t.v(), t.f(), t.blocks().len()), (21, 7, 70));
        assert!(build_f_pyramidal_examples(ExampleKind::Dihedral(9)).is_err());
        assert_eq!(cyclic_sts(7).unwrap().blocks().len(), 7);
    }
}
