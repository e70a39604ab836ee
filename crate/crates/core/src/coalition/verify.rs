use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::fair_domination::{fd_status, is_fd, FdStatus};
use crate::graph::Graph;
use crate::partition::{Partition, StructuralViolation};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoalitionInputError {
    #[error("coalition sides must be nonempty")]
    EmptySide,
    #[error("coalition sides overlap")]
    Overlap,
}

/// Result of checking a candidate fair coalition `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum CoalitionCheck {
    Coalition { union: FdStatus },
    FirstIsFd { status: FdStatus },
    SecondIsFd { status: FdStatus },
    UnionNotFd { status: FdStatus },
}

impl CoalitionCheck {
    pub fn is_coalition(self) -> bool {
        matches!(self, CoalitionCheck::Coalition { .. })
    }
}

/// Checks that neither `a` nor `b` is fair dominating while `a ∪ b` is.
pub fn is_fair_coalition(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
) -> Result<CoalitionCheck, CoalitionInputError> {
    if a.is_empty() || b.is_empty() {
        return Err(CoalitionInputError::EmptySide);
    }
    if !a.is_disjoint(b) {
        return Err(CoalitionInputError::Overlap);
    }
    let sa = fd_status(g, a);
    if sa.is_fd() {
        return Ok(CoalitionCheck::FirstIsFd { status: sa });
    }
    let sb = fd_status(g, b);
    if sb.is_fd() {
        return Ok(CoalitionCheck::SecondIsFd { status: sb });
    }
    let su = fd_status(g, a.union(b));
    if su.is_fd() {
        Ok(CoalitionCheck::Coalition { union: su })
    } else {
        Ok(CoalitionCheck::UnionNotFd { status: su })
    }
}

/// The fairness constant of a coalition's union.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionFairness {
    K(usize),
    Vacuous,
}

impl Serialize for UnionFairness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            UnionFairness::K(k) => s.serialize_u64(*k as u64),
            UnionFairness::Vacuous => s.serialize_str("vacuous"),
        }
    }
}

/// Why one class of an fc-partition is acceptable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    /// The class is a single full vertex.
    SingletonFd,
    /// The class is not fair dominating and forms a fair coalition with
    /// class `partner`.
    Partner { partner: usize, k: UnionFairness },
}

impl std::fmt::Display for Justification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Justification::SingletonFd => f.write_str("singleton fair dominating set"),
            Justification::Partner {
                partner,
                k: UnionFairness::K(k),
            } => write!(f, "partner {partner}, union is {k}-fair"),
            Justification::Partner {
                partner,
                k: UnionFairness::Vacuous,
            } => write!(f, "partner {partner}, union is the whole vertex set"),
        }
    }
}

/// One justification per class, in class order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FcCertificate {
    pub entries: Vec<Justification>,
}

impl FcCertificate {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for FcCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Entry {
            Singleton {
                class: usize,
                justification: &'static str,
            },
            Partner {
                class: usize,
                partner: usize,
                k: UnionFairness,
            },
        }
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (class, j) in self.entries.iter().enumerate() {
            let e = match *j {
                Justification::SingletonFd => Entry::Singleton {
                    class,
                    justification: "singleton_fd",
                },
                Justification::Partner { partner, k } => Entry::Partner { class, partner, k },
            };
            seq.serialize_element(&e)?;
        }
        seq.end()
    }
}

/// The first reason a partition fails to be an fc-partition.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    #[error("not a partition: {0}")]
    Structural(StructuralViolation),
    #[error("class {class} is not a singleton but is {status}")]
    NonSingletonFd { class: usize, status: FdStatus },
    #[error("class {class} has no coalition partner ({status})")]
    NoPartner { class: usize, status: FdStatus },
}

/// Checks every class and returns a certificate, or the first violation.
/// Partners are chosen as the smallest valid class index.
pub fn verify_fc_partition(g: &Graph, p: &Partition) -> Result<FcCertificate, Violation> {
    if let Some(v) = p.structural_violation(g.order()) {
        return Err(Violation::Structural(v));
    }
    let classes = p.classes();
    let fd: Vec<bool> = classes.iter().map(|&c| is_fd(g, c)).collect();
    let mut entries = Vec::with_capacity(classes.len());
    for (i, &c) in classes.iter().enumerate() {
        if fd[i] {
            if c.len() == 1 {
                entries.push(Justification::SingletonFd);
                continue;
            }
            return Err(Violation::NonSingletonFd {
                class: i,
                status: fd_status(g, c),
            });
        }
        let partner = (0..classes.len())
            .filter(|&j| j != i && !fd[j])
            .find_map(|j| match fd_status(g, c.union(classes[j])) {
                FdStatus::Fair { k } => Some((j, UnionFairness::K(k))),
                FdStatus::FairVacuous => Some((j, UnionFairness::Vacuous)),
                _ => None,
            });
        match partner {
            Some((partner, k)) => entries.push(Justification::Partner { partner, k }),
            None => {
                return Err(Violation::NoPartner {
                    class: i,
                    status: fd_status(g, c),
                })
            }
        }
    }
    Ok(FcCertificate { entries })
}

/// Fast boolean form of [`verify_fc_partition`] for classes known to form a
/// partition of `V`.
pub(crate) fn is_fc_partition(g: &Graph, classes: &[VertexSet]) -> bool {
    let mut fd = [false; 64];
    for (i, &c) in classes.iter().enumerate() {
        fd[i] = is_fd(g, c);
        if fd[i] && c.len() > 1 {
            return false;
        }
    }
    (0..classes.len()).all(|i| {
        fd[i]
            || (0..classes.len())
                .any(|j| j != i && !fd[j] && is_fd(g, classes[i].union(classes[j])))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_cycle, gen_path, Graph};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn coalition_on_p8() {
        let p8 = gen_path(8).unwrap();
        let r = is_fair_coalition(&p8, set(&[0, 4]), set(&[3, 7])).unwrap();
        assert_eq!(
            r,
            CoalitionCheck::Coalition {
                union: FdStatus::Fair { k: 1 }
            }
        );
    }

    #[test]
    fn full_vertex_is_never_a_coalition_side() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = is_fair_coalition(&star, set(&[0]), set(&[1])).unwrap();
        assert!(matches!(r, CoalitionCheck::FirstIsFd { .. }));
        assert!(!r.is_coalition());
    }

    #[test]
    fn unfair_union_on_p5() {
        let p5 = gen_path(5).unwrap();
        let r = is_fair_coalition(&p5, set(&[0]), set(&[2])).unwrap();
        assert_eq!(
            r,
            CoalitionCheck::UnionNotFd {
                status: FdStatus::NotFair {
                    first: 1,
                    first_count: 2,
                    second: 3,
                    second_count: 1
                }
            }
        );
    }

    #[test]
    fn coalition_input_errors() {
        let p5 = gen_path(5).unwrap();
        assert_eq!(
            is_fair_coalition(&p5, VertexSet::EMPTY, set(&[1])),
            Err(CoalitionInputError::EmptySide)
        );
        assert_eq!(
            is_fair_coalition(&p5, set(&[0, 1]), set(&[1])),
            Err(CoalitionInputError::Overlap)
        );
    }

    #[test]
    fn c5_certificate() {
        let c5 = gen_cycle(5).unwrap();
        let p = Partition::from_vecs([vec![0, 1], vec![2], vec![3], vec![4]]);
        let cert = verify_fc_partition(&c5, &p).unwrap();
        use Justification::Partner;
        use UnionFairness::K;
        assert_eq!(
            cert.entries,
            vec![
                Partner { partner: 1, k: K(1) },
                Partner { partner: 0, k: K(1) },
                Partner { partner: 0, k: K(2) },
                Partner { partner: 0, k: K(1) },
            ]
        );
    }

    #[test]
    fn p3_certificate() {
        let p3 = gen_path(3).unwrap();
        let p = Partition::from_vecs([vec![1], vec![0], vec![2]]);
        let cert = verify_fc_partition(&p3, &p).unwrap();
        assert_eq!(
            cert.entries,
            vec![
                Justification::SingletonFd,
                Justification::Partner {
                    partner: 2,
                    k: UnionFairness::K(2)
                },
                Justification::Partner {
                    partner: 1,
                    k: UnionFairness::K(2)
                },
            ]
        );
    }

    #[test]
    fn c4_rejects_non_singleton_fd_class() {
        let c4 = gen_cycle(4).unwrap();
        let p = Partition::from_vecs([vec![0, 2], vec![1, 3]]);
        assert_eq!(
            verify_fc_partition(&c4, &p),
            Err(Violation::NonSingletonFd {
                class: 0,
                status: FdStatus::Fair { k: 2 }
            })
        );
    }

    #[test]
    fn vacuous_union_and_json() {
        // {A, V \ A} with both sides non-FD verifies through the vacuous union
        let g = Graph::empty(3).unwrap();
        let p = Partition::from_vecs([vec![0], vec![1, 2]]);
        let cert = verify_fc_partition(&g, &p).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            json,
            r#"[{"class":0,"partner":1,"k":"vacuous"},{"class":1,"partner":0,"k":"vacuous"}]"#
        );
        let p3 = gen_path(3).unwrap();
        let cert = verify_fc_partition(&p3, &Partition::from_vecs([vec![1], vec![0], vec![2]])).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        assert!(json.starts_with(r#"[{"class":0,"justification":"singleton_fd"},{"class":1,"partner":2,"k":2}"#));
    }

    #[test]
    fn structural_violations_are_reported() {
        let p4 = gen_path(4).unwrap();
        let p = Partition::from_vecs([vec![0, 1], vec![1, 2, 3]]);
        assert!(matches!(
            verify_fc_partition(&p4, &p),
            Err(Violation::Structural(StructuralViolation::Overlap { vertex: 1, .. }))
        ));
    }

    #[test]
    fn no_partner() {
        let p4 = gen_path(4).unwrap();
        // the only other class {1,2,3} is FD and cannot partner {0}
        let p = Partition::from_vecs([vec![0], vec![1, 2, 3]]);
        assert_eq!(
            verify_fc_partition(&p4, &p),
            Err(Violation::NoPartner {
                class: 0,
                status: FdStatus::NotDominating { vertex: 2 }
            })
        );
        let p = Partition::from_vecs([vec![0, 1], vec![2], vec![3]]);
        assert!(verify_fc_partition(&p4, &p).is_ok());
    }
}
