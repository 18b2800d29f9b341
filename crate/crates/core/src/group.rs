//! Finite groups presented as direct products of cyclic and dihedral factors.
//!
//! A dihedral factor `D_{2m}` has elements written `x^r y^j` with `r` in `[0, m)`
//! and `j` in `{0, 1}`, multiplied by the rule
//! `x^a y^i * x^b y^j = x^(a + (-1)^i b) y^(i xor j)`, which encodes `yx = x^-1 y`.
//!
//! Every element also has a dense index in `[0, |G|)`. Indices are mixed-radix with
//! the first factor most significant and the dihedral coordinate `(r, j)` encoded as
//! `2r + j`, so index order agrees with the derived `Ord` on [`GroupElement`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("element has {found} coordinates but the group has {expected} factors")]
    Arity { expected: usize, found: usize },
    #[error("coordinate {position} does not fit factor {factor}")]
    Coordinate { position: usize, factor: Factor },
    #[error("a group needs at least one factor, each with parameter at least 1")]
    EmptyFactor,
    #[error("cannot parse group descriptor {0:?}")]
    Descriptor(String),
    #[error("patterned starter needs a group of odd order, got order {0}")]
    EvenOrder(usize),
}

/// One factor of a direct product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// `Z_m`.
    Cyclic(u32),
    /// `D_{2m}`, holding the half-order `m`.
    Dihedral(u32),
}

impl Factor {
    pub fn order(self) -> usize {
        match self {
            Factor::Cyclic(m) => m as usize,
            Factor::Dihedral(m) => 2 * m as usize,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Cyclic(m) => write!(f, "Z{m}"),
            Factor::Dihedral(m) => write!(f, "D{}", 2 * m),
        }
    }
}

/// A single coordinate of a [`GroupElement`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    Cyclic(u32),
    /// `x^r y^j`, with `reflect` standing for `j = 1`.
    Dihedral {
        r: u32,
        reflect: bool,
    },
}

impl Coord {
    fn fits(self, factor: Factor) -> bool {
        match (self, factor) {
            (Coord::Cyclic(r), Factor::Cyclic(m)) => r < m,
            (Coord::Dihedral { r, .. }, Factor::Dihedral(m)) => r < m,
            _ => false,
        }
    }

    fn local_index(self) -> usize {
        match self {
            Coord::Cyclic(r) => r as usize,
            Coord::Dihedral { r, reflect } => 2 * r as usize + reflect as usize,
        }
    }
}

/// An element of a [`GroupSpec`], one coordinate per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<Coord>);

impl GroupElement {
    pub fn coords(&self) -> &[Coord] {
        &self.0
    }

    /// Appends the coordinates of `other`, giving an element of the product group.
    pub fn concat(&self, other: &GroupElement) -> GroupElement {
        let mut coords = self.0.clone();
        coords.extend_from_slice(&other.0);
        GroupElement(coords)
    }
}

impl From<Vec<Coord>> for GroupElement {
    fn from(coords: Vec<Coord>) -> Self {
        GroupElement(coords)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match c {
                Coord::Cyclic(r) => write!(f, "{r}")?,
                Coord::Dihedral { r, reflect } => {
                    match (r, reflect) {
                        (0, false) => f.write_str("1")?,
                        (0, true) => f.write_str("y")?,
                        (1, false) => f.write_str("x")?,
                        (1, true) => f.write_str("xy")?,
                        (r, false) => write!(f, "x^{r}")?,
                        (r, true) => write!(f, "x^{r}y")?,
                    };
                }
            }
        }
        f.write_str(")")
    }
}

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match *self {
            Coord::Cyclic(r) => serializer.serialize_u32(r),
            Coord::Dihedral { r, reflect } => {
                let mut t = serializer.serialize_tuple(2)?;
                t.serialize_element(&r)?;
                t.serialize_element(&(reflect as u32))?;
                t.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoordVisitor;

        impl<'de> Visitor<'de> for CoordVisitor {
            type Value = Coord;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a residue or an [r, j] pair")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Coord, E> {
                u32::try_from(v)
                    .map(Coord::Cyclic)
                    .map_err(|_| E::custom("residue out of range"))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Coord, E> {
                u32::try_from(v)
                    .map(Coord::Cyclic)
                    .map_err(|_| E::custom("residue out of range"))
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Coord, A::Error> {
                let r: u32 = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let j: u32 = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                if j > 1 {
                    return Err(de::Error::custom("reflection bit must be 0 or 1"));
                }
                Ok(Coord::Dihedral { r, reflect: j == 1 })
            }
        }

        deserializer.deserialize_any(CoordVisitor)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<Coord>::deserialize(deserializer).map(GroupElement)
    }
}

/// A finite group given as an ordered direct product of cyclic and dihedral factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<Factor>,
    /// Mixed-radix place value of each factor.
    strides: Vec<usize>,
    order: usize,
}

impl GroupSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self, GroupError> {
        if factors.is_empty()
            || factors
                .iter()
                .any(|f| matches!(f, Factor::Cyclic(0) | Factor::Dihedral(0)))
        {
            return Err(GroupError::EmptyFactor);
        }
        let mut strides = vec![1; factors.len()];
        let mut order = 1usize;
        for (i, f) in factors.iter().enumerate().rev() {
            strides[i] = order;
            order *= f.order();
        }
        Ok(GroupSpec {
            factors,
            strides,
            order,
        })
    }

    pub fn cyclic(m: u32) -> Result<Self, GroupError> {
        Self::new(vec![Factor::Cyclic(m)])
    }

    pub fn dihedral(half_order: u32) -> Result<Self, GroupError> {
        Self::new(vec![Factor::Dihedral(half_order)])
    }

    /// Direct product `self x other`.
    pub fn product(&self, other: &GroupSpec) -> GroupSpec {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GroupSpec::new(factors).expect("factors of valid groups are valid")
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(
            self.factors
                .iter()
                .map(|f| match f {
                    Factor::Cyclic(_) => Coord::Cyclic(0),
                    Factor::Dihedral(_) => Coord::Dihedral {
                        r: 0,
                        reflect: false,
                    },
                })
                .collect(),
        )
    }

    /// Checks that `a` is a well-formed element of this group.
    pub fn check(&self, a: &GroupElement) -> Result<(), GroupError> {
        if a.0.len() != self.factors.len() {
            return Err(GroupError::Arity {
                expected: self.factors.len(),
                found: a.0.len(),
            });
        }
        for (position, (&c, &factor)) in a.0.iter().zip(&self.factors).enumerate() {
            if !c.fits(factor) {
                return Err(GroupError::Coordinate { position, factor });
            }
        }
        Ok(())
    }

    /// Builds an element from coordinates, checking it against the factors.
    pub fn element(&self, coords: Vec<Coord>) -> Result<GroupElement, GroupError> {
        let e = GroupElement(coords);
        self.check(&e)?;
        Ok(e)
    }

    /// Builds an element of an abelian group from integer residues, reducing each
    /// into its canonical range. Dihedral factors are rejected.
    pub fn residues(&self, values: &[i64]) -> Result<GroupElement, GroupError> {
        if values.len() != self.factors.len() {
            return Err(GroupError::Arity {
                expected: self.factors.len(),
                found: values.len(),
            });
        }
        values
            .iter()
            .zip(&self.factors)
            .enumerate()
            .map(|(position, (&v, &factor))| match factor {
                Factor::Cyclic(m) => Ok(Coord::Cyclic(v.rem_euclid(m as i64) as u32)),
                Factor::Dihedral(_) => Err(GroupError::Coordinate { position, factor }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(GroupElement)
    }

    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.compose_unchecked(a, b))
    }

    fn compose_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            self.factors
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .map(|(&f, (&x, &y))| compose_coord(f, x, y))
                .collect(),
        )
    }

    pub fn invert(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(a)?;
        Ok(self.invert_unchecked(a))
    }

    fn invert_unchecked(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            self.factors
                .iter()
                .zip(&a.0)
                .map(|(&f, &x)| invert_coord(f, x))
                .collect(),
        )
    }

    /// `x y^-1`, the difference that is invariant under right translation.
    pub fn right_difference(
        &self,
        x: &GroupElement,
        y: &GroupElement,
    ) -> Result<GroupElement, GroupError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.compose_unchecked(x, &self.invert_unchecked(y)))
    }

    /// Dense index of `a` in `[0, |G|)`.
    pub fn index_of(&self, a: &GroupElement) -> Result<usize, GroupError> {
        self.check(a)?;
        Ok(a.0
            .iter()
            .zip(&self.strides)
            .map(|(c, s)| c.local_index() * s)
            .sum())
    }

    /// Inverse of [`GroupSpec::index_of`].
    ///
    /// # Panics
    ///
    /// Panics if `index >= self.order()`.
    pub fn element_at(&self, index: usize) -> GroupElement {
        assert!(
            index < self.order,
            "index {index} out of range for order {}",
            self.order
        );
        GroupElement(
            self.factors
                .iter()
                .zip(&self.strides)
                .map(|(&f, &s)| {
                    let local = (index / s) % f.order();
                    match f {
                        Factor::Cyclic(_) => Coord::Cyclic(local as u32),
                        Factor::Dihedral(_) => Coord::Dihedral {
                            r: (local / 2) as u32,
                            reflect: local % 2 == 1,
                        },
                    }
                })
                .collect(),
        )
    }

    /// Composition on dense indices, without allocating.
    pub fn compose_index(&self, a: usize, b: usize) -> usize {
        let mut out = 0;
        for (&f, &s) in self.factors.iter().zip(&self.strides) {
            let n = f.order();
            let (x, y) = ((a / s) % n, (b / s) % n);
            let z = match f {
                Factor::Cyclic(_) => (x + y) % n,
                Factor::Dihedral(m) => {
                    let m = m as usize;
                    let (r1, j1) = (x / 2, x % 2);
                    let (r2, j2) = (y / 2, y % 2);
                    let r = if j1 == 0 {
                        (r1 + r2) % m
                    } else {
                        (r1 + m - r2) % m
                    };
                    2 * r + (j1 ^ j2)
                }
            };
            out += z * s;
        }
        out
    }

    /// Inversion on dense indices.
    pub fn invert_index(&self, a: usize) -> usize {
        let mut out = 0;
        for (&f, &s) in self.factors.iter().zip(&self.strides) {
            let n = f.order();
            let x = (a / s) % n;
            let z = match f {
                Factor::Cyclic(_) => (n - x) % n,
                Factor::Dihedral(m) => {
                    let m = m as usize;
                    if x % 2 == 1 {
                        x
                    } else {
                        2 * ((m - x / 2) % m)
                    }
                }
            };
            out += z * s;
        }
        out
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    /// Order of the element `a`.
    pub fn element_order(&self, a: &GroupElement) -> Result<usize, GroupError> {
        let start = self.index_of(a)?;
        let mut cur = start;
        let mut k = 1;
        while cur != 0 {
            cur = self.compose_index(cur, start);
            k += 1;
        }
        Ok(k)
    }

    /// Every non-identity `g` with `g g = 1`, in index order.
    pub fn involutions(&self) -> Vec<GroupElement> {
        (1..self.order)
            .filter(|&i| self.compose_index(i, i) == 0)
            .map(|i| self.element_at(i))
            .collect()
    }

    /// The cyclic subgroup generated by `a`.
    pub fn cyclic_subgroup(&self, a: &GroupElement) -> Result<Subgroup, GroupError> {
        let start = self.index_of(a)?;
        let mut elements = BTreeSet::from([self.identity()]);
        let mut cur = start;
        while cur != 0 {
            elements.insert(self.element_at(cur));
            cur = self.compose_index(cur, start);
        }
        Ok(Subgroup { elements })
    }

    /// Every subgroup of prime order `p`, ordered by smallest generator.
    ///
    /// Subgroups of prime order are cyclic, so each is generated by any of its
    /// non-identity elements.
    pub fn subgroups_of_prime_order(&self, p: usize) -> Vec<Subgroup> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for g in 1..self.order {
            if seen[g] {
                continue;
            }
            let mut cur = g;
            let mut members = vec![0];
            while cur != 0 && members.len() <= p {
                members.push(cur);
                cur = self.compose_index(cur, g);
            }
            if cur == 0 && members.len() == p {
                for &m in &members {
                    seen[m] = true;
                }
                out.push(Subgroup {
                    elements: members.into_iter().map(|i| self.element_at(i)).collect(),
                });
            }
        }
        out
    }

    /// One representative of each pair `{h, h^-1}` with `h` not the identity.
    ///
    /// The representative is the member with the smaller index.
    pub fn patterned_starter(&self) -> Result<Vec<GroupElement>, GroupError> {
        if self.order.is_multiple_of(2) {
            return Err(GroupError::EvenOrder(self.order));
        }
        Ok((1..self.order)
            .filter(|&i| i < self.invert_index(i))
            .map(|i| self.element_at(i))
            .collect())
    }
}

fn compose_coord(f: Factor, a: Coord, b: Coord) -> Coord {
    match (f, a, b) {
        (Factor::Cyclic(m), Coord::Cyclic(x), Coord::Cyclic(y)) => {
            Coord::Cyclic(((x as u64 + y as u64) % m as u64) as u32)
        }
        (
            Factor::Dihedral(m),
            Coord::Dihedral { r: r1, reflect: j1 },
            Coord::Dihedral { r: r2, reflect: j2 },
        ) => {
            let r = if j1 { (r1 + m - r2) % m } else { (r1 + r2) % m };
            Coord::Dihedral {
                r,
                reflect: j1 ^ j2,
            }
        }
        _ => unreachable!("coordinates are checked against factors"),
    }
}

fn invert_coord(f: Factor, a: Coord) -> Coord {
    match (f, a) {
        (Factor::Cyclic(m), Coord::Cyclic(x)) => Coord::Cyclic((m - x) % m),
        (Factor::Dihedral(_), d @ Coord::Dihedral { reflect: true, .. }) => d,
        (Factor::Dihedral(m), Coord::Dihedral { r, reflect: false }) => Coord::Dihedral {
            r: (m - r) % m,
            reflect: false,
        },
        _ => unreachable!("coordinates are checked against factors"),
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Parses descriptors such as `Z4xZ12`, `D6xZ9` or `Z2xZ2xZ7`.
impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::Descriptor(s.to_string());
        let factors = s
            .trim()
            .split('x')
            .map(|part| {
                let mut chars = part.chars();
                let kind = chars.next();
                let n: u32 = chars.as_str().parse().map_err(|_| bad())?;
                match kind {
                    Some('Z') => Ok(Factor::Cyclic(n)),
                    Some('D') if n >= 2 && n.is_multiple_of(2) => Ok(Factor::Dihedral(n / 2)),
                    _ => Err(bad()),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        GroupSpec::new(factors).map_err(|_| bad())
    }
}

/// A subgroup, stored as its element set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: BTreeSet<GroupElement>,
}

impl Subgroup {
    /// Wraps `elements` after checking that they form a subgroup of `group`.
    pub fn from_elements(
        group: &GroupSpec,
        elements: impl IntoIterator<Item = GroupElement>,
    ) -> Option<Subgroup> {
        let elements: BTreeSet<GroupElement> = elements.into_iter().collect();
        for e in &elements {
            group.check(e).ok()?;
        }
        if !elements.contains(&group.identity()) {
            return None;
        }
        for a in &elements {
            if !elements.contains(&group.invert_unchecked(a)) {
                return None;
            }
            for b in &elements {
                if !elements.contains(&group.compose_unchecked(a, b)) {
                    return None;
                }
            }
        }
        Some(Subgroup { elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.contains(g)
    }

    pub fn elements(&self) -> impl Iterator<Item = &GroupElement> {
        self.elements.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(r: u32, j: u32) -> Coord {
        Coord::Dihedral { r, reflect: j == 1 }
    }

    fn c(r: u32) -> Coord {
        Coord::Cyclic(r)
    }

    #[test]
    fn dihedral_composition() {
        let g = GroupSpec::dihedral(3).unwrap();
        let x = g.element(vec![d(1, 0)]).unwrap();
        let y = g.element(vec![d(0, 1)]).unwrap();
        assert_eq!(
            g.compose(&x, &x).unwrap(),
            g.element(vec![d(2, 0)]).unwrap()
        );
        // yx = x^-1 y = x^2 y
        assert_eq!(
            g.compose(&y, &x).unwrap(),
            g.element(vec![d(2, 1)]).unwrap()
        );
    }

    #[test]
    fn abelian_composition() {
        let g: GroupSpec = "Z4xZ12".parse().unwrap();
        let a = g.residues(&[3, 10]).unwrap();
        let b = g.residues(&[2, 5]).unwrap();
        assert_eq!(g.compose(&a, &b).unwrap(), g.residues(&[1, 3]).unwrap());
    }

    #[test]
    fn inverses() {
        let z7 = GroupSpec::cyclic(7).unwrap();
        assert_eq!(
            z7.invert(&z7.residues(&[3]).unwrap()).unwrap(),
            z7.residues(&[4]).unwrap()
        );

        let d6 = GroupSpec::dihedral(3).unwrap();
        let xy = d6.element(vec![d(1, 1)]).unwrap();
        assert_eq!(d6.invert(&xy).unwrap(), xy);

        let g: GroupSpec = "Z4xZ12".parse().unwrap();
        assert_eq!(
            g.invert(&g.residues(&[1, 5]).unwrap()).unwrap(),
            g.residues(&[3, 7]).unwrap()
        );
    }

    #[test]
    fn right_differences() {
        let z24 = GroupSpec::cyclic(24).unwrap();
        let diff = z24
            .right_difference(&z24.residues(&[1]).unwrap(), &z24.residues(&[5]).unwrap())
            .unwrap();
        assert_eq!(diff, z24.residues(&[20]).unwrap());

        let d6 = GroupSpec::dihedral(3).unwrap();
        let x = d6.element(vec![d(1, 0)]).unwrap();
        let y = d6.element(vec![d(0, 1)]).unwrap();
        assert_eq!(
            d6.right_difference(&x, &y).unwrap(),
            d6.element(vec![d(1, 1)]).unwrap()
        );
        assert_eq!(d6.right_difference(&x, &x).unwrap(), d6.identity());
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let g: GroupSpec = "Z4xZ12".parse().unwrap();
        let z7 = GroupSpec::cyclic(7).unwrap();
        let a = z7.identity();
        assert_eq!(
            g.compose(&a, &a),
            Err(GroupError::Arity {
                expected: 2,
                found: 1
            })
        );
        assert!(g.element(vec![c(4), c(0)]).is_err());
        assert!(g.element(vec![d(0, 0), c(0)]).is_err());
    }

    #[test]
    fn involution_sets() {
        let d6 = GroupSpec::dihedral(3).unwrap();
        let inv = d6.involutions();
        assert_eq!(
            inv,
            vec![
                d6.element(vec![d(0, 1)]).unwrap(),
                d6.element(vec![d(1, 1)]).unwrap(),
                d6.element(vec![d(2, 1)]).unwrap(),
            ]
        );

        let g: GroupSpec = "Z4xZ12".parse().unwrap();
        let expected: Vec<_> = [[0, 6], [2, 0], [2, 6]]
            .iter()
            .map(|v| g.residues(v).unwrap())
            .collect();
        assert_eq!(g.involutions(), expected);

        let z2cubed: GroupSpec = "Z2xZ2xZ2".parse().unwrap();
        assert_eq!(z2cubed.involutions().len(), 7);
    }

    #[test]
    fn prime_order_subgroups() {
        let g: GroupSpec = "Z4xZ12".parse().unwrap();
        let twos = g.subgroups_of_prime_order(2);
        assert_eq!(twos.len(), 3);
        assert!(twos.iter().all(|s| s.order() == 2));

        let g: GroupSpec = "D6xZ9".parse().unwrap();
        let threes = g.subgroups_of_prime_order(3);
        let rotations =
            Subgroup::from_elements(&g, (0..3).map(|r| g.element(vec![d(r, 0), c(0)]).unwrap()))
                .unwrap();
        assert!(threes.contains(&rotations));

        assert!(GroupSpec::cyclic(7)
            .unwrap()
            .subgroups_of_prime_order(3)
            .is_empty());
    }

    #[test]
    fn starters() {
        let z5 = GroupSpec::cyclic(5).unwrap();
        assert_eq!(
            z5.patterned_starter().unwrap(),
            vec![z5.residues(&[1]).unwrap(), z5.residues(&[2]).unwrap()]
        );
        let z3z3: GroupSpec = "Z3xZ3".parse().unwrap();
        assert_eq!(z3z3.patterned_starter().unwrap().len(), 4);
        assert!(GroupSpec::cyclic(1)
            .unwrap()
            .patterned_starter()
            .unwrap()
            .is_empty());
        assert_eq!(
            GroupSpec::cyclic(8).unwrap().patterned_starter(),
            Err(GroupError::EvenOrder(8))
        );
    }

    #[test]
    fn descriptors_round_trip() {
        for s in ["Z4xZ12", "D6xZ9", "Z2xZ2xZ7", "D14"] {
            let g: GroupSpec = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert_eq!("D6xZ9".parse::<GroupSpec>().unwrap().order(), 54);
        for bad in ["", "Z0", "D7", "Q8", "Z4*Z2", "Zx"] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn element_json_shape() {
        let g: GroupSpec = "D6xZ9".parse().unwrap();
        let e = g.element(vec![d(2, 1), c(5)]).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, "[[2,1],5]");
        let back: GroupElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn index_round_trip_matches_order() {
        let g: GroupSpec = "Z2xD10xZ3".parse().unwrap();
        let all: Vec<_> = g.elements().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (i, e) in all.iter().enumerate() {
            assert_eq!(g.index_of(e).unwrap(), i);
        }
    }
}
