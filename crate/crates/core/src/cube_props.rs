//! Partial-cube and median-graph verification.
//!
//! A labeled hypercube subgraph is a partial cube under the natural
//! embedding exactly when graph distance equals Hamming distance for all
//! vertex pairs. Medianicity is decided by the distance oracle (count the
//! vertices lying on shortest paths between all three pairs of a triple);
//! the coordinatewise majority rule is the fast path, valid as a criterion
//! only on isometric subgraphs.

use serde::Serialize;

use crate::bitstring::{hamming, BitString};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::distances_from;

/// Triple-enumeration checks scan |V|^3 triples; larger graphs are
/// rejected rather than ground through.
const MEDIAN_ORDER_CAP: usize = 128;

#[derive(Clone, Debug, Serialize)]
pub struct IsometryReport {
    pub n: u32,
    pub isometric: bool,
    pub witness: Option<IsometryWitness>,
}

/// A pair with graph distance strictly above Hamming distance, minimal in
/// Hamming distance (ties broken in canonical pair order).
#[derive(Clone, Debug, Serialize)]
pub struct IsometryWitness {
    pub u: String,
    pub v: String,
    pub hamming: u32,
    pub graph_distance: u32,
}

/// Checks d(u, v) == H(u, v) for every pair.
pub fn is_isometric_subgraph(g: &Graph) -> Result<IsometryReport> {
    let mut witness: Option<IsometryWitness> = None;
    for u in 0..g.order() {
        let dist = distances_from(g, u)?;
        let su = g.bitstring(u);
        for v in (u + 1)..g.order() {
            let h = hamming(&su, &g.bitstring(v)).expect("equal lengths");
            debug_assert!(dist[v] >= h);
            if dist[v] > h && witness.as_ref().is_none_or(|w| h < w.hamming) {
                witness = Some(IsometryWitness {
                    u: g.label(u),
                    v: g.label(v),
                    hamming: h,
                    graph_distance: dist[v],
                });
            }
        }
    }
    Ok(IsometryReport {
        n: g.n(),
        isometric: witness.is_none(),
        witness,
    })
}

/// Coordinatewise two-out-of-three vote.
pub fn majority(u: &BitString, v: &BitString, w: &BitString) -> Result<BitString> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    if u.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: w.len(),
        });
    }
    let bits = (0..u.len())
        .map(|i| u8::from(u.bit(i) + v.bit(i) + w.bit(i) >= 2))
        .collect();
    Ok(BitString::from_bits(bits).expect("bits are 0/1"))
}

#[derive(Clone, Debug, Serialize)]
pub struct MedianReport {
    pub n: u32,
    /// Every triple's majority string is a vertex. None when not checked.
    pub is_median_closed: Option<bool>,
    /// Every triple has exactly one median by the distance oracle.
    pub is_median_graph: Option<bool>,
    /// Set when the closure result comes from a non-isometric graph,
    /// where majority closure is not a valid median criterion.
    pub advisory_only: bool,
    pub witness: Option<MedianWitness>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum MedianWitness {
    /// A triple whose majority string is not a vertex.
    MajorityNotVertex {
        u: String,
        v: String,
        w: String,
        majority: String,
    },
    /// A triple with zero or several medians.
    MedianCount {
        u: String,
        v: String,
        w: String,
        count: usize,
    },
}

fn check_order_cap(g: &Graph, what: &'static str) -> Result<()> {
    if g.order() > MEDIAN_ORDER_CAP {
        return Err(Error::GraphTooLarge {
            order: g.order(),
            cap: MEDIAN_ORDER_CAP,
            what,
        });
    }
    Ok(())
}

/// Majority-rule closure: true iff the majority string of every vertex
/// triple is itself a vertex. The first failing triple in canonical order
/// is the witness. When the graph is not an isometric subgraph the result
/// is flagged advisory-only.
pub fn is_median_closed(g: &Graph) -> Result<MedianReport> {
    check_order_cap(g, "median closure check")?;
    let advisory_only = !is_isometric_subgraph(g)?.isometric;
    let strings: Vec<BitString> = (0..g.order()).map(|v| g.bitstring(v)).collect();
    let mut witness = None;
    'outer: for i in 0..g.order() {
        for j in (i + 1)..g.order() {
            for k in (j + 1)..g.order() {
                let m = majority(&strings[i], &strings[j], &strings[k]).expect("equal lengths");
                let code = m.to_code().expect("n <= 32");
                if g.index_of_code(code).is_none() {
                    witness = Some(MedianWitness::MajorityNotVertex {
                        u: strings[i].to_string(),
                        v: strings[j].to_string(),
                        w: strings[k].to_string(),
                        majority: m.to_string(),
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(MedianReport {
        n: g.n(),
        is_median_closed: Some(witness.is_none()),
        is_median_graph: None,
        advisory_only,
        witness,
    })
}

/// Distance-oracle median check: every triple must have exactly one
/// vertex lying on shortest paths between all three pairs.
pub fn is_median_graph(g: &Graph) -> Result<MedianReport> {
    check_order_cap(g, "median oracle")?;
    let order = g.order();
    let mut dist: Vec<Vec<u32>> = Vec::with_capacity(order);
    for v in 0..order {
        dist.push(distances_from(g, v)?);
    }
    let mut witness = None;
    'outer: for i in 0..order {
        for j in (i + 1)..order {
            for k in (j + 1)..order {
                let mut count = 0usize;
                for m in 0..order {
                    if dist[i][m] + dist[m][j] == dist[i][j]
                        && dist[i][m] + dist[m][k] == dist[i][k]
                        && dist[j][m] + dist[m][k] == dist[j][k]
                    {
                        count += 1;
                    }
                }
                if count != 1 {
                    witness = Some(MedianWitness::MedianCount {
                        u: g.label(i),
                        v: g.label(j),
                        w: g.label(k),
                        count,
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(MedianReport {
        n: g.n(),
        is_median_closed: None,
        is_median_graph: Some(witness.is_none()),
        advisory_only: false,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::Family;
    use crate::graph::build_graph;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn m_graph(n: u32) -> Graph {
        build_graph(Family::CircularRunConstrained, n).unwrap()
    }

    #[test]
    fn isometric_boundary() {
        for n in 3..=10u32 {
            let report = is_isometric_subgraph(&m_graph(n)).unwrap();
            assert_eq!(report.isometric, n <= 8, "n={n}");
            assert_eq!(report.witness.is_some(), n > 8);
        }
    }

    #[test]
    fn isometric_witness_at_nine() {
        let g = m_graph(9);
        let report = is_isometric_subgraph(&g).unwrap();
        let witness = report.witness.unwrap();
        assert_eq!(witness.hamming, 2);
        assert!(witness.graph_distance > 2);
        // the paper's pair: H = 2 but both midpoints are non-vertices
        let u = g.index_of(&bs("111100000")).unwrap();
        let v = g.index_of(&bs("100100000")).unwrap();
        let dist = distances_from(&g, u).unwrap();
        assert_eq!(
            hamming(&g.bitstring(u), &g.bitstring(v)).unwrap(),
            2
        );
        assert!(dist[v] > 2);
        assert!(g.index_of(&bs("101100000")).is_none());
        assert!(g.index_of(&bs("110100000")).is_none());
    }

    #[test]
    fn majority_examples() {
        assert_eq!(
            majority(&bs("1110000"), &bs("1000000"), &bs("0010000")).unwrap(),
            bs("1010000")
        );
        let u = bs("01101");
        assert_eq!(majority(&u, &u, &bs("10010")).unwrap(), u);
        assert_eq!(majority(&bs("000"), &bs("011"), &bs("101")).unwrap(), bs("001"));
        assert!(majority(&bs("01"), &bs("011"), &bs("010")).is_err());
    }

    #[test]
    fn median_boundary_and_proof_triple() {
        // closure fails at n = 7 on the proof's triple: majority 1010000
        // is not a vertex
        let g7 = m_graph(7);
        let closed = is_median_closed(&g7).unwrap();
        assert_eq!(closed.is_median_closed, Some(false));
        assert!(!closed.advisory_only);
        let eta = majority(&bs("1110000"), &bs("1000000"), &bs("0010000")).unwrap();
        assert!(!Family::CircularRunConstrained.is_member(&eta));

        assert_eq!(is_median_closed(&m_graph(5)).unwrap().is_median_closed, Some(true));
        assert_eq!(is_median_closed(&m_graph(4)).unwrap().is_median_closed, Some(true));

        for n in 3..=8u32 {
            let oracle = is_median_graph(&m_graph(n)).unwrap();
            assert_eq!(oracle.is_median_graph, Some(n <= 6), "n={n}");
        }
    }

    #[test]
    fn oracle_and_closure_agree_when_isometric() {
        for n in 3..=9u32 {
            let g = m_graph(n);
            let closed = is_median_closed(&g).unwrap();
            let oracle = is_median_graph(&g).unwrap();
            if !closed.advisory_only {
                assert_eq!(closed.is_median_closed, oracle.is_median_graph, "n={n}");
            }
        }
    }

    #[test]
    fn hypercubes_are_median() {
        for n in 1..=5u32 {
            let q = build_graph(Family::Hypercube, n).unwrap();
            assert_eq!(is_median_graph(&q).unwrap().is_median_graph, Some(true), "n={n}");
            assert_eq!(is_median_closed(&q).unwrap().is_median_closed, Some(true), "n={n}");
        }
    }

    #[test]
    fn median_cap_is_enforced() {
        let g = m_graph(11); // 199 vertices
        assert!(matches!(
            is_median_graph(&g),
            Err(Error::GraphTooLarge { .. })
        ));
    }

    #[cfg(test)]
    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_triple(len: usize) -> impl Strategy<Value = (BitString, BitString, BitString)> {
            let one = move || {
                proptest::collection::vec(0u8..=1, len)
                    .prop_map(|bits| BitString::from_bits(bits).unwrap())
            };
            (one(), one(), one())
        }

        proptest! {
            #[test]
            fn majority_is_symmetric_and_idempotent((u, v, w) in arb_triple(16)) {
                let m = majority(&u, &v, &w).unwrap();
                prop_assert_eq!(&m, &majority(&v, &u, &w).unwrap());
                prop_assert_eq!(&m, &majority(&w, &v, &u).unwrap());
                prop_assert_eq!(&m, &majority(&u, &w, &v).unwrap());
                prop_assert_eq!(majority(&u, &u, &w).unwrap(), u);
            }
        }
    }
}
