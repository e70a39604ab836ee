//! Vertex partitions and their plain-text format.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::vertex_set::VertexSet;

/// An ordered list of vertex classes.
///
/// Construction does not enforce the partition invariants; use
/// [`Partition::structural_violation`] to check them against an order `n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    classes: Vec<VertexSet>,
}

/// Why a list of classes is not a partition of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructuralViolation {
    #[error("class {class} is empty")]
    EmptyClass { class: usize },
    #[error("class {class} contains vertex {vertex}, out of range for order {order}")]
    OutOfRange { class: usize, vertex: usize, order: usize },
    #[error("vertex {vertex} appears in classes {first} and {second}")]
    Overlap { vertex: usize, first: usize, second: usize },
    #[error("vertex {vertex} is not covered by any class")]
    Uncovered { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionParseError {
    #[error("line {line}: invalid vertex id {token:?}")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: vertex id {vertex} exceeds the 64-vertex limit")]
    VertexTooLarge { line: usize, vertex: usize },
}

impl Partition {
    pub fn new(classes: Vec<VertexSet>) -> Self {
        Partition { classes }
    }

    /// Partition from class-label assignments: vertex `v` goes to class `labels[v]`.
    /// Labels must be dense `0..k`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![VertexSet::EMPTY; k];
        for (v, &c) in labels.iter().enumerate() {
            classes[c].insert(v);
        }
        Partition { classes }
    }

    pub fn from_vecs<I, J>(classes: I) -> Self
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = usize>,
    {
        Partition {
            classes: classes.into_iter().map(|c| c.into_iter().collect()).collect(),
        }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            classes: (0..n).map(VertexSet::singleton).collect(),
        }
    }

    #[inline]
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn push(&mut self, class: VertexSet) {
        self.classes.push(class);
    }

    pub fn into_classes(self) -> Vec<VertexSet> {
        self.classes
    }

    /// First structural defect with respect to vertex set `0..n`, if any.
    pub fn structural_violation(&self, n: usize) -> Option<StructuralViolation> {
        let all = VertexSet::full(n);
        let mut owner = [usize::MAX; 64];
        for (i, &c) in self.classes.iter().enumerate() {
            if c.is_empty() {
                return Some(StructuralViolation::EmptyClass { class: i });
            }
            if let Some(v) = c.difference(all).first() {
                return Some(StructuralViolation::OutOfRange {
                    class: i,
                    vertex: v,
                    order: n,
                });
            }
            for v in c {
                if owner[v] != usize::MAX {
                    return Some(StructuralViolation::Overlap {
                        vertex: v,
                        first: owner[v],
                        second: i,
                    });
                }
                owner[v] = i;
            }
        }
        (0..n)
            .find(|&v| owner[v] == usize::MAX)
            .map(|vertex| StructuralViolation::Uncovered { vertex })
    }

    /// Applies a vertex relabeling (old `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Partition {
        Partition {
            classes: self
                .classes
                .iter()
                .map(|c| c.iter().map(|v| perm[v]).collect())
                .collect(),
        }
    }

    /// One class per line, space-separated ids.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.classes {
            let line: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Reads one class per line; blank lines and `#` comments are ignored.
pub fn parse_partition(text: &str) -> Result<Partition, PartitionParseError> {
    let mut classes = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut class = VertexSet::EMPTY;
        for token in line.split_whitespace() {
            let v: usize = token.parse().map_err(|_| PartitionParseError::InvalidToken {
                line: i + 1,
                token: token.to_string(),
            })?;
            if v >= 64 {
                return Err(PartitionParseError::VertexTooLarge { line: i + 1, vertex: v });
            }
            class.insert(v);
        }
        classes.push(class);
    }
    Ok(Partition { classes })
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.classes.iter()).finish()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let lists: Vec<Vec<usize>> = self.classes.iter().map(|c| c.to_vec()).collect();
        lists.serialize(serializer)
    }
}
