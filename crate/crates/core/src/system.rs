//! Triple systems as data, with their JSON and plain-text encodings.

use std::collections::HashMap;
use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::group::{GroupElement, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointLabel {
    /// `inf1`, `inf2`, ... (1-based).
    Infinity(u32),
    Element(GroupElement),
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Infinity(i) => write!(f, "inf{i}"),
            PointLabel::Element(e) => write!(f, "{e}"),
        }
    }
}

impl Serialize for PointLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            PointLabel::Infinity(i) => serializer.serialize_str(&format!("inf{i}")),
            PointLabel::Element(e) => e.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for PointLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Name(String),
            Element(GroupElement),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Element(e) => Ok(PointLabel::Element(e)),
            Raw::Name(s) => s
                .strip_prefix("inf")
                .and_then(|i| i.parse::<u32>().ok())
                .filter(|&i| i >= 1)
                .map(PointLabel::Infinity)
                .ok_or_else(|| de::Error::custom(format!("bad point name {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("point {0} is listed twice")]
    DuplicatePoint(String),
    #[error("infinity index {index} is outside 1..={f}")]
    InfinityRange { index: u32, f: usize },
    #[error("block {0} uses a point that is not in the point list")]
    UnknownPoint(usize),
    #[error("block {0} repeats a point")]
    DegenerateBlock(usize),
    #[error("declared v = {declared} but {actual} points are listed")]
    PointCount { declared: usize, actual: usize },
    #[error("declared f = {declared} but {actual} infinity points are listed")]
    FixedCount { declared: usize, actual: usize },
    #[error("bad group descriptor: {0}")]
    Group(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// A set of points with 3-element blocks. Blocks hold indices into `points`, sorted
/// within each block and across the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSystem {
    f: usize,
    points: Vec<PointLabel>,
    blocks: Vec<[u32; 3]>,
    group: Option<GroupSpec>,
    case: String,
}

impl TripleSystem {
    pub fn new(
        points: Vec<PointLabel>,
        blocks: Vec<[u32; 3]>,
        group: Option<GroupSpec>,
        case: impl Into<String>,
    ) -> Result<Self, SystemError> {
        let mut seen = HashMap::with_capacity(points.len());
        for p in &points {
            if seen.insert(p, ()).is_some() {
                return Err(SystemError::DuplicatePoint(p.to_string()));
            }
        }
        let f = points
            .iter()
            .filter(|p| matches!(p, PointLabel::Infinity(_)))
            .count();
        for p in &points {
            if let PointLabel::Infinity(i) = *p {
                if i as usize > f {
                    return Err(SystemError::InfinityRange { index: i, f });
                }
            }
        }
        let mut normalized = Vec::with_capacity(blocks.len());
        for (n, mut b) in blocks.into_iter().enumerate() {
            if b.iter().any(|&p| p as usize >= points.len()) {
                return Err(SystemError::UnknownPoint(n));
            }
            b.sort_unstable();
            if b[0] == b[1] || b[1] == b[2] {
                return Err(SystemError::DegenerateBlock(n));
            }
            normalized.push(b);
        }
        normalized.sort_unstable();
        Ok(TripleSystem {
            f,
            points,
            blocks: normalized,
            group,
            case: case.into(),
        })
    }

    pub fn v(&self) -> usize {
        self.points.len()
    }

    /// Number of infinity points.
    pub fn f(&self) -> usize {
        self.f
    }

    pub fn points(&self) -> &[PointLabel] {
        &self.points
    }

    pub fn blocks(&self) -> &[[u32; 3]] {
        &self.blocks
    }

    pub fn group(&self) -> Option<&GroupSpec> {
        self.group.as_ref()
    }

    pub fn case(&self) -> &str {
        &self.case
    }

    pub fn label(&self, p: u32) -> &PointLabel {
        &self.points[p as usize]
    }

    /// Blocks as point labels, in block order.
    pub fn labeled_blocks(&self) -> impl Iterator<Item = [&PointLabel; 3]> + '_ {
        self.blocks.iter().map(|b| b.map(|p| self.label(p)))
    }

    pub fn to_document(&self) -> SystemDocument {
        SystemDocument {
            v: self.v(),
            f: self.f,
            group: self.group.as_ref().map(|g| g.to_string()),
            case: self.case.clone(),
            points: self.points.clone(),
            blocks: self
                .labeled_blocks()
                .map(|b| b.map(|p| p.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, SystemError> {
        let doc: SystemDocument =
            serde_json::from_str(s).map_err(|e| SystemError::Json(e.to_string()))?;
        doc.into_system()
    }

    /// One block per line, points separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for [a, b, c] in self.labeled_blocks() {
            out.push_str(&format!(
                "{} {} {}\n",
                text_point(a),
                text_point(b),
                text_point(c)
            ));
        }
        out
    }
}

/// Points in the text format: `inf1`, or coordinates joined by `,` with dihedral
/// coordinates written `r:j`.
fn text_point(p: &PointLabel) -> String {
    match p {
        PointLabel::Infinity(i) => format!("inf{i}"),
        PointLabel::Element(e) => e
            .coords()
            .iter()
            .map(|c| match c {
                crate::group::Coord::Cyclic(r) => r.to_string(),
                crate::group::Coord::Dihedral { r, reflect } => format!("{r}:{}", *reflect as u8),
            })
            .collect::<Vec<_>>()
            .join(","),
    }
}

/// The on-disk JSON shape of a [`TripleSystem`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    pub v: usize,
    pub f: usize,
    #[serde(default)]
    pub group: Option<String>,
    #[serde(default)]
    pub case: String,
    pub points: Vec<PointLabel>,
    pub blocks: Vec<[PointLabel; 3]>,
}

impl SystemDocument {
    pub fn into_system(self) -> Result<TripleSystem, SystemError> {
        if self.v != self.points.len() {
            return Err(SystemError::PointCount {
                declared: self.v,
                actual: self.points.len(),
            });
        }
        let group = self
            .group
            .map(|d| {
                d.parse::<GroupSpec>()
                    .map_err(|e| SystemError::Group(e.to_string()))
            })
            .transpose()?;
        let index: HashMap<&PointLabel, u32> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u32))
            .collect();
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (n, b) in self.blocks.iter().enumerate() {
            let mut idx = [0u32; 3];
            for (slot, p) in idx.iter_mut().zip(b) {
                *slot = *index.get(p).ok_or(SystemError::UnknownPoint(n))?;
            }
            blocks.push(idx);
        }
        let system = TripleSystem::new(self.points.clone(), blocks, group, self.case)?;
        if system.f() != self.f {
            return Err(SystemError::FixedCount {
                declared: self.f,
                actual: system.f(),
            });
        }
        Ok(system)
    }
}
