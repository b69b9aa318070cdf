//! Hypercube subgraphs induced by the family vertex sets, with edge counts
//! computed three ways (brute force, the block recursions, the closed
//! form) and the cross-block neighbor structure of the decomposition.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitstring::{BitString, Family};
use crate::error::{Error, Result};
use crate::families::{self, VertexSet};

/// An induced subgraph of the hypercube: vertices adjacent iff their
/// Hamming distance is 1. Vertices are indexed in canonical (ascending
/// code) order; adjacency lists hold sorted vertex indices.
#[derive(Clone, Debug)]
pub struct Graph {
    vertices: VertexSet,
    adjacency: Vec<Vec<u32>>,
}

/// Builds the graph by flipping each bit of each vertex and probing a
/// hash map, one O(|V| n) pass, never the O(|V|^2) pairwise scan.
pub fn build_graph(family: Family, n: u32) -> Result<Graph> {
    let vertices = families::enumerate(family, n)?;
    Ok(graph_from_vertices(vertices))
}

pub(crate) fn graph_from_vertices(vertices: VertexSet) -> Graph {
    let n = vertices.n();
    let index: HashMap<u32, u32> = vertices
        .codes()
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i as u32))
        .collect();
    let adjacency = vertices
        .codes()
        .iter()
        .map(|&code| {
            let mut neighbors: Vec<u32> = (0..n)
                .filter_map(|b| index.get(&(code ^ (1 << b))).copied())
                .collect();
            neighbors.sort_unstable();
            neighbors
        })
        .collect();
    Graph {
        vertices,
        adjacency,
    }
}

impl Graph {
    pub fn family(&self) -> Family {
        self.vertices.family()
    }

    pub fn n(&self) -> u32 {
        self.vertices.n()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// |E|, as half the degree sum.
    pub fn edge_count(&self) -> u64 {
        self.adjacency.iter().map(|a| a.len() as u64).sum::<u64>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn code(&self, v: usize) -> u32 {
        self.vertices.codes()[v]
    }

    pub fn label(&self, v: usize) -> String {
        BitString::from_code(self.n(), self.code(v)).to_string()
    }

    pub fn bitstring(&self, v: usize) -> BitString {
        BitString::from_code(self.n(), self.code(v))
    }

    pub fn index_of_code(&self, code: u32) -> Option<usize> {
        self.vertices.codes().binary_search(&code).ok()
    }

    pub fn index_of(&self, s: &BitString) -> Option<usize> {
        if s.len() != self.n() as usize {
            return None;
        }
        s.to_code().and_then(|c| self.index_of_code(c))
    }

    /// Degree multiset, sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(|a| a.len()).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    /// Edges as index pairs (u, v) with u < v, in canonical order. Index
    /// order and code order coincide.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count() as usize);
        for (u, neighbors) in self.adjacency.iter().enumerate() {
            for &v in neighbors {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// Undirected DOT text, byte-deterministic: nodes then edges, both in
    /// canonical order, lexicographically smaller endpoint first.
    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {}_{} {{", self.family().tag(), self.n());
        for v in 0..self.order() {
            let _ = writeln!(out, "  \"{}\";", self.label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.label(u as usize),
                self.label(v as usize)
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<[String; 2]> = self
            .edges()
            .into_iter()
            .map(|(u, v)| [self.label(u as usize), self.label(v as usize)])
            .collect();
        serde_json::json!({
            "family": self.family().tag(),
            "n": self.n(),
            "order": self.order(),
            "size": self.edge_count(),
            "edges": edges,
        })
    }
}

/// Fibonacci numbers in 64-bit, for the graph-side counting formulas.
pub(crate) fn fib_u64(n: u32) -> u64 {
    assert!(n <= 92, "F({n}) overflows u64");
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}

/// |R_m| with the convention |R_0| = 1.
fn r_size(m: u32) -> u64 {
    if m == 0 {
        1
    } else {
        fib_u64(m)
    }
}

/// |E(R_n)| by the block recursion
/// sum_i |E(R_(n-2i-1))| + |R_(n-3)| + 2 sum_(i>=2) |R_(n-2i-1)|,
/// with the base edge counts |E(R_0..R_4)| = 0, 0, 0, 1, 2.
pub fn edge_count_r_recursive(n: u32) -> u64 {
    let mut table: Vec<u64> = vec![0, 0, 0, 1, 2];
    for m in 5..=n {
        let mut total = 0u64;
        for i in 0..m.div_ceil(2) {
            let rest = m - 2 * i - 1;
            total += table[rest as usize];
            if i >= 2 {
                total += 2 * r_size(rest);
            }
        }
        total += r_size(m - 3);
        table.push(total);
    }
    table[n as usize]
}

/// |E(R_n)| = (3n-2) F(n-8) + (5n-4) F(n-7), valid for n >= 8.
pub fn edge_count_r_closed(n: u32) -> Result<u64> {
    if n < 8 {
        return Err(Error::IndexOutOfRange {
            n,
            min: 8,
            what: "edge_count_r_closed",
        });
    }
    Ok((3 * n as u64 - 2) * fib_u64(n - 8) + (5 * n as u64 - 4) * fib_u64(n - 7))
}

/// |E(M_n)| by the rotation-block recursion
/// sum_i (2i+1)|E(R_(n-2i-1))| + 3|R_(n-3)| + 2 sum_(i>=2) (2i+1)|R_(n-2i-1)|,
/// with the small cases |E(M_0..M_4)| = 0, 0, 0, 3, 4.
pub fn edge_count_m_recursive(n: u32) -> u64 {
    if n <= 4 {
        return [0, 0, 0, 3, 4][n as usize];
    }
    let mut total = 3 * r_size(n - 3);
    for i in 0..n.div_ceil(2) {
        let rest = n - 2 * i - 1;
        total += (2 * i as u64 + 1) * edge_count_r_recursive(rest);
        if i >= 2 {
            total += 2 * (2 * i as u64 + 1) * r_size(rest);
        }
    }
    total
}

/// Outcome of checking the decomposition's cross-block neighbor counts
/// and closures.
#[derive(Clone, Debug, Serialize)]
pub struct ClassNeighborReport {
    pub n: u32,
    pub pass: bool,
    /// Vertices whose count of neighbors in lower-indexed blocks is off.
    pub violations: Vec<ClassNeighborViolation>,
    /// Strings from the one-bit-lowered anchor closures that fail
    /// membership (there should be none).
    pub closure_failures: Vec<String>,
    /// Vertices having at least one neighbor in a higher-indexed block;
    /// such edges fall outside the "two neighbors" reading.
    pub higher_block_vertices: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassNeighborViolation {
    pub vertex: String,
    pub block: usize,
    pub lower_neighbors: usize,
    pub expected: usize,
}

/// For every vertex of block i >= 1 of the M_n decomposition, counts its
/// neighbors in blocks j < i: exactly 1 for i = 1 and exactly 2 for
/// i > 1. Also confirms that the rotation closures of the anchors with
/// the first (respectively i-th) 1 lowered stay inside M_n.
pub fn verify_class_neighbors(n: u32) -> Result<ClassNeighborReport> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            n,
            min: 3,
            what: "verify_class_neighbors",
        });
    }
    let blocks = families::m_decomposition_blocks(n)?;
    let mut block_of: HashMap<u32, usize> = HashMap::new();
    for block in &blocks {
        for &code in &block.codes {
            block_of.insert(code, block.i as usize);
        }
    }

    let mut closure_failures = Vec::new();
    for i in 1..n.div_ceil(2) {
        let rest = n - 2 * i - 1;
        let inner: Vec<BitString> = families::enumerate(Family::RunConstrained, rest)?
            .bitstrings()
            .collect();
        // 1^(i-1) 0 0^(i+1) and 0 1^(i-1) 0^(i+1): the anchor with its
        // first (resp. i-th) 1 changed to 0
        let mut lowered_first = vec![1u8; (i - 1) as usize];
        lowered_first.extend(std::iter::repeat_n(0u8, (i + 2) as usize));
        let mut lowered_ith = vec![0u8];
        lowered_ith.extend(std::iter::repeat_n(1u8, (i - 1) as usize));
        lowered_ith.extend(std::iter::repeat_n(0u8, (i + 1) as usize));
        for anchor_bits in [lowered_first, lowered_ith] {
            let anchor = BitString::from_bits(anchor_bits).expect("bits are 0/1");
            for s in families::rotation_closure(&anchor, &inner)? {
                if !Family::CircularRunConstrained.is_member(&s) {
                    closure_failures.push(s.to_string());
                }
            }
        }
    }

    let mut violations = Vec::new();
    let mut higher_block_vertices = 0usize;
    for block in blocks.iter().skip(1) {
        let i = block.i as usize;
        let expected = if i == 1 { 1 } else { 2 };
        for &code in &block.codes {
            let mut lower = 0usize;
            let mut higher = 0usize;
            for b in 0..n {
                if let Some(&j) = block_of.get(&(code ^ (1 << b))) {
                    if j < i {
                        lower += 1;
                    } else if j > i {
                        higher += 1;
                    }
                }
            }
            if lower != expected {
                violations.push(ClassNeighborViolation {
                    vertex: BitString::from_code(n, code).to_string(),
                    block: i,
                    lower_neighbors: lower,
                    expected,
                });
            }
            if higher > 0 {
                higher_block_vertices += 1;
            }
        }
    }
    closure_failures.sort();
    closure_failures.dedup();
    Ok(ClassNeighborReport {
        n,
        pass: violations.is_empty() && closure_failures.is_empty(),
        violations,
        closure_failures,
        higher_block_vertices,
    })
}
