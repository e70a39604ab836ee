//! Embedded catalog of all cubic graphs of order 6, 8 and 10.
//!
//! Entries are listed in a fixed order: connected graphs first, then
//! disconnected ones. Indices are 1-based. The table is checked once on
//! first use (3-regularity, counts, pairwise non-isomorphism).

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::io::parse_graph6;
use crate::iso::is_isomorphic;

const ORDER_6: &[&str] = &["E{Sw", "Es\\o"];

const ORDER_8: &[&str] = &["G}GOW[", "G{S_g[", "G{O_ww", "GsXP_[", "GsXPGs", "G~?GW["];

const ORDER_10: &[&str] = &[
    "I}KGGGB?w",
    "I}GWOGB?w",
    "I}GOWOD?w",
    "I}GOOSE@W",
    "I}GOOOF@o",
    "I{S_gOD?w",
    "I{S__SE@W",
    "I{S__OF@o",
    "I{O_ooE@W",
    "I{O_w_H@W",
    "I{O_ogK?w",
    "I{O_ogI@W",
    "I{O_ogH@g",
    "IsX___J@o",
    "IsXP?cI@W",
    "IsXP?cH@g",
    "IsXP?_J@o",
    "IsX@?oU@o",
    "IsP@PGXD_",
    "I{Sw?CB?w",
    "Is\\o?CB?w",
];

/// Catalog index of the Petersen graph among the order-10 entries.
pub const PETERSEN_INDEX: usize = 19;

/// The orders the catalog covers.
pub const CATALOG_ORDERS: [usize; 3] = [6, 8, 10];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no cubic catalog for order {0}; supported orders are 6, 8 and 10")]
    UnsupportedOrder(usize),
    #[error("order {order} has entries 1..={count}, not {index}")]
    IndexOutOfRange {
        order: usize,
        index: usize,
        count: usize,
    },
    #[error("order {order} entry {index} is invalid: {reason}")]
    Corrupt {
        order: usize,
        index: usize,
        reason: String,
    },
    #[error("order {order} entries {first} and {second} are isomorphic")]
    Duplicate {
        order: usize,
        first: usize,
        second: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub order: usize,
    /// 1-based position within the order.
    pub index: usize,
    pub graph6: &'static str,
    pub connected: bool,
    /// Known fair coalition number for entries that can be identified
    /// without figure labels (only the Petersen graph).
    pub expected_cf: Option<usize>,
    #[serde(skip)]
    graph: Graph,
}

impl CatalogEntry {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

fn strings(order: usize) -> Result<&'static [&'static str], CatalogError> {
    match order {
        6 => Ok(ORDER_6),
        8 => Ok(ORDER_8),
        10 => Ok(ORDER_10),
        _ => Err(CatalogError::UnsupportedOrder(order)),
    }
}

fn load(order: usize) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut entries = Vec::new();
    for (i, &text) in strings(order)?.iter().enumerate() {
        let index = i + 1;
        let corrupt = |reason: String| CatalogError::Corrupt {
            order,
            index,
            reason,
        };
        let graph = parse_graph6(text).map_err(|e| corrupt(e.to_string()))?;
        if graph.order() != order {
            return Err(corrupt(format!("decodes to order {}", graph.order())));
        }
        if !graph.is_regular(3) {
            return Err(corrupt("not 3-regular".into()));
        }
        let expected_cf = (order == 10 && index == PETERSEN_INDEX).then_some(4);
        entries.push(CatalogEntry {
            order,
            index,
            graph6: text,
            connected: graph.is_connected(),
            expected_cf,
            graph,
        });
    }
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if is_isomorphic(&a.graph, &b.graph) {
                return Err(CatalogError::Duplicate {
                    order,
                    first: a.index,
                    second: b.index,
                });
            }
        }
    }
    Ok(entries)
}

/// All cubic graphs of the given order, in catalog order.
pub fn cubic_catalog(order: usize) -> Result<&'static [CatalogEntry], CatalogError> {
    static CACHE: [OnceLock<Result<Vec<CatalogEntry>, CatalogError>>; 3] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = match order {
        6 => 0,
        8 => 1,
        10 => 2,
        _ => return Err(CatalogError::UnsupportedOrder(order)),
    };
    CACHE[slot]
        .get_or_init(|| load(order))
        .as_ref()
        .map(Vec::as_slice)
        .map_err(Clone::clone)
}

/// One catalog entry by 1-based index.
pub fn cubic_entry(order: usize, index: usize) -> Result<&'static CatalogEntry, CatalogError> {
    let entries = cubic_catalog(order)?;
    index
        .checked_sub(1)
        .and_then(|i| entries.get(i))
        .ok_or(CatalogError::IndexOutOfRange {
            order,
            index,
            count: entries.len(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::cubic_graphs;
    use crate::graph::{gen_complete, gen_complete_bipartite, gen_petersen};
    use crate::io::to_graph6;

    #[test]
    fn counts() {
        assert_eq!(cubic_catalog(6).unwrap().len(), 2);
        assert_eq!(cubic_catalog(8).unwrap().len(), 6);
        assert_eq!(cubic_catalog(10).unwrap().len(), 21);
    }

    #[test]
    fn unsupported_orders() {
        for order in [0, 4, 7, 12] {
            assert_eq!(cubic_catalog(order).unwrap_err(), CatalogError::UnsupportedOrder(order));
        }
    }

    #[test]
    fn matches_enumeration_up_to_isomorphism() {
        for order in CATALOG_ORDERS {
            let catalog = cubic_catalog(order).unwrap();
            let generated = cubic_graphs(order);
            assert_eq!(catalog.len(), generated.len());
            for g in &generated {
                let hits = catalog.iter().filter(|e| is_isomorphic(e.graph(), g)).count();
                assert_eq!(hits, 1, "order {order}");
            }
        }
    }

    #[test]
    fn order_six_is_k33_and_prism() {
        let k33 = gen_complete_bipartite(3, 3).unwrap();
        let c = cubic_catalog(6).unwrap();
        assert!(c.iter().any(|e| is_isomorphic(e.graph(), &k33)));
        assert!(c.iter().all(|e| e.connected));
    }

    #[test]
    fn disconnected_entries() {
        let two_k4 = gen_complete(4).unwrap().disjoint_union(&gen_complete(4).unwrap()).unwrap();
        let c8: Vec<_> = cubic_catalog(8).unwrap().iter().filter(|e| !e.connected).collect();
        assert_eq!(c8.len(), 1);
        assert!(is_isomorphic(c8[0].graph(), &two_k4));
        let c10 = cubic_catalog(10).unwrap().iter().filter(|e| !e.connected).count();
        assert_eq!(c10, 2);
    }

    #[test]
    fn petersen_is_pinned() {
        let c = cubic_catalog(10).unwrap();
        let hits: Vec<_> = c.iter().filter(|e| is_isomorphic(e.graph(), &gen_petersen())).collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].index, PETERSEN_INDEX);
        assert_eq!(hits[0].expected_cf, Some(4));
        assert_eq!(c.iter().filter(|e| e.expected_cf.is_some()).count(), 1);
    }

    #[test]
    fn graph6_roundtrip() {
        for order in CATALOG_ORDERS {
            for e in cubic_catalog(order).unwrap() {
                assert_eq!(to_graph6(e.graph()).unwrap(), e.graph6);
            }
        }
    }

    #[test]
    fn entry_lookup() {
        assert_eq!(cubic_entry(10, 19).unwrap().graph6, "IsP@PGXD_");
        assert!(cubic_entry(10, 0).is_err());
        assert!(cubic_entry(8, 7).is_err());
    }
}
