//! Experiment harnesses: cube polynomials, Hamiltonian path/cycle search,
//! and degree distributions. These emit data rather than verify theorems;
//! the searches are exhaustive within an explicit step budget and report
//! indeterminate results honestly instead of coercing them to "no".

use std::collections::BTreeMap;
use std::collections::VecDeque;

use serde::Serialize;

use crate::bitstring::Family;
use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

/// Default backtracking budget for the Hamiltonicity searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000_000;

/// Counting polynomial of induced subcubes: coefficient k is the number
/// of induced subgraphs isomorphic to Q_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubePolynomial {
    /// c_0, c_1, ... with a nonzero trailing coefficient.
    pub coefficients: Vec<u64>,
}

impl CubePolynomial {
    pub fn eval(&self, x: i64) -> i64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0i64, |acc, &c| acc * x + c as i64)
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }
}

/// Counts induced subcubes dimension by dimension.
///
/// Inside a hypercube an induced Q_k is exactly a coordinate subcube
/// (a base vertex with zeros on a k-set of coordinates, plus all its
/// combinations), so counting enumerates (corner, coordinate-set) pairs
/// whose spanned vertices all lie in the graph: a (k+1)-cube is two
/// parallel k-cubes glued along a fresh top coordinate.
pub fn cube_polynomial(g: &Graph) -> CubePolynomial {
    let n = g.n();
    let mut coefficients = vec![g.order() as u64];
    // (corner, mask) pairs, sorted; level k holds the k-dimensional cubes
    let mut level: Vec<(u32, u32)> = g.vertices().codes().iter().map(|&c| (c, 0u32)).collect();
    level.sort_unstable();
    while !level.is_empty() {
        let mut next = Vec::new();
        for &(corner, mask) in &level {
            let low = if mask == 0 { 0 } else { 32 - mask.leading_zeros() };
            for j in low..n {
                let bit = 1u32 << j;
                if corner & bit != 0 {
                    continue;
                }
                if level.binary_search(&(corner | bit, mask)).is_ok() {
                    next.push((corner, mask | bit));
                }
            }
        }
        next.sort_unstable();
        debug_assert!(next.windows(2).all(|w| w[0] != w[1]));
        if next.is_empty() {
            break;
        }
        coefficients.push(next.len() as u64);
        level = next;
    }
    CubePolynomial { coefficients }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HamTarget {
    Path,
    Cycle,
}

#[derive(Clone, Debug, Serialize)]
pub struct HamiltonicityResult {
    pub family: Family,
    pub n: u32,
    pub target: HamTarget,
    /// None when the budget ran out before the search completed.
    pub found: Option<bool>,
    pub witness: Option<Vec<String>>,
    /// True when the search finished (by witness, exhaustion or a
    /// degree/parity certificate); false only on budget exhaustion.
    pub exhausted: bool,
    pub steps: u64,
}

struct HamSearch<'a> {
    g: &'a Graph,
    cycle: bool,
    budget: u64,
    steps: u64,
    visited: Vec<bool>,
    path: Vec<u32>,
    /// Vertex parity class (weight mod 2) and unvisited count per class.
    class: Vec<u8>,
    remaining: [i64; 2],
}

enum SearchOutcome {
    Found,
    NotFound,
    BudgetHit,
}

impl<'a> HamSearch<'a> {
    fn new(g: &'a Graph, cycle: bool, budget: u64) -> Self {
        let class: Vec<u8> = (0..g.order())
            .map(|v| (g.code(v).count_ones() % 2) as u8)
            .collect();
        let mut remaining = [0i64; 2];
        for &c in &class {
            remaining[c as usize] += 1;
        }
        HamSearch {
            g,
            cycle,
            budget,
            steps: 0,
            visited: vec![false; g.order()],
            path: Vec::with_capacity(g.order()),
            class,
            remaining,
        }
    }

    fn remaining_degree(&self, v: u32) -> usize {
        self.g
            .neighbors(v as usize)
            .iter()
            .filter(|&&w| !self.visited[w as usize])
            .count()
    }

    /// All unvisited vertices reachable from `cur` through unvisited ones.
    fn unvisited_connected(&self, cur: u32) -> bool {
        let remaining = self.g.order() - self.path.len();
        if remaining == 0 {
            return true;
        }
        let mut seen = vec![false; self.g.order()];
        let mut queue = VecDeque::new();
        let mut reached = 0usize;
        for &w in self.g.neighbors(cur as usize) {
            if !self.visited[w as usize] && !seen[w as usize] {
                seen[w as usize] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in self.g.neighbors(u as usize) {
                if !self.visited[w as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == remaining
    }

    fn prune(&self, cur: u32) -> bool {
        // bipartite feasibility: the rest of the walk alternates classes
        let opposite = self.remaining[1 - self.class[cur as usize] as usize];
        let same = self.remaining[self.class[cur as usize] as usize];
        if !(opposite == same || opposite == same + 1) {
            return true;
        }
        // a stranded vertex (no unvisited neighbors) must be the final
        // vertex, adjacent to cur, and for cycles adjacent to the start
        let mut stranded = 0usize;
        for v in 0..self.g.order() as u32 {
            if self.visited[v as usize] || self.remaining_degree(v) > 0 {
                continue;
            }
            stranded += 1;
            if stranded > 1
                || self.path.len() + 1 != self.g.order()
                || !self.g.neighbors(cur as usize).contains(&v)
                || (self.cycle && !self.g.neighbors(v as usize).contains(&self.path[0]))
            {
                return true;
            }
        }
        !self.unvisited_connected(cur)
    }

    fn extend(&mut self, cur: u32) -> SearchOutcome {
        self.steps += 1;
        if self.steps > self.budget {
            return SearchOutcome::BudgetHit;
        }
        self.path.push(cur);
        self.visited[cur as usize] = true;
        self.remaining[self.class[cur as usize] as usize] -= 1;

        let outcome = if self.path.len() == self.g.order() {
            let closes = !self.cycle || self.g.neighbors(cur as usize).contains(&self.path[0]);
            if closes {
                SearchOutcome::Found
            } else {
                SearchOutcome::NotFound
            }
        } else if self.prune(cur) {
            SearchOutcome::NotFound
        } else {
            let mut candidates: Vec<(usize, u32)> = self
                .g
                .neighbors(cur as usize)
                .iter()
                .filter(|&&v| !self.visited[v as usize])
                .map(|&v| (self.remaining_degree(v), v))
                .collect();
            candidates.sort_unstable();
            let mut result = SearchOutcome::NotFound;
            for (_, v) in candidates {
                match self.extend(v) {
                    SearchOutcome::Found => {
                        result = SearchOutcome::Found;
                        break;
                    }
                    SearchOutcome::BudgetHit => {
                        result = SearchOutcome::BudgetHit;
                        break;
                    }
                    SearchOutcome::NotFound => {}
                }
            }
            result
        };

        if !matches!(outcome, SearchOutcome::Found) {
            self.path.pop();
            self.visited[cur as usize] = false;
            self.remaining[self.class[cur as usize] as usize] += 1;
        }
        outcome
    }
}

fn class_imbalance(search: &HamSearch) -> i64 {
    (search.remaining[0] - search.remaining[1]).abs()
}

fn finished(
    g: &Graph,
    target: HamTarget,
    found: Option<bool>,
    witness: Option<Vec<u32>>,
    exhausted: bool,
    steps: u64,
) -> HamiltonicityResult {
    let witness = witness.map(|path| {
        validate_witness(g, target, &path);
        path.iter().map(|&v| g.label(v as usize)).collect()
    });
    HamiltonicityResult {
        family: g.family(),
        n: g.n(),
        target,
        found,
        witness,
        exhausted,
        steps,
    }
}

/// Independent re-validation of a returned witness: a permutation of the
/// vertices with consecutive pairs at Hamming distance 1 and adjacent in
/// the graph, closing up for cycles.
fn validate_witness(g: &Graph, target: HamTarget, path: &[u32]) {
    assert_eq!(path.len(), g.order(), "witness covers every vertex once");
    let mut seen = vec![false; g.order()];
    for &v in path {
        assert!(!seen[v as usize], "vertex repeated in witness");
        seen[v as usize] = true;
    }
    let adjacent = |u: u32, v: u32| {
        let h = (g.code(u as usize) ^ g.code(v as usize)).count_ones();
        h == 1 && g.neighbors(u as usize).contains(&v)
    };
    for pair in path.windows(2) {
        assert!(adjacent(pair[0], pair[1]), "witness steps along edges");
    }
    if target == HamTarget::Cycle && path.len() > 1 {
        assert!(
            adjacent(path[path.len() - 1], path[0]),
            "cycle witness closes"
        );
    }
}

/// Backtracking Hamiltonian path search with degree, parity and
/// connectivity pruning. Exhaustive unless the budget runs out.
pub fn hamiltonian_path(g: &Graph, budget: u64) -> Result<HamiltonicityResult> {
    if g.order() == 0 {
        return Err(Error::IndexOutOfRange {
            n: 0,
            min: 1,
            what: "hamiltonian_path (empty graph)",
        });
    }
    if g.order() == 1 {
        return Ok(finished(g, HamTarget::Path, Some(true), Some(vec![0]), true, 0));
    }
    let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let leaves: Vec<u32> = (0..g.order() as u32)
        .filter(|&v| degrees[v as usize] == 1)
        .collect();
    let mut search = HamSearch::new(g, false, budget);
    // certificates: isolated vertices, three leaves, or a bipartite
    // imbalance above 1 rule a path out without searching
    if degrees.iter().any(|&d| d == 0) || leaves.len() > 2 || class_imbalance(&search) > 1 {
        return Ok(finished(g, HamTarget::Path, Some(false), None, true, 0));
    }
    // endpoints: leaves must be endpoints; with an imbalance of 1 both
    // endpoints are in the larger class; balanced paths have one endpoint
    // in each class, so class-0 starts are exhaustive
    let starts: Vec<u32> = if !leaves.is_empty() {
        vec![leaves[0]]
    } else if class_imbalance(&search) == 1 {
        let major = u8::from(search.remaining[1] > search.remaining[0]);
        (0..g.order() as u32)
            .filter(|&v| search.class[v as usize] == major)
            .collect()
    } else {
        (0..g.order() as u32)
            .filter(|&v| search.class[v as usize] == 0)
            .collect()
    };
    for start in starts {
        match search.extend(start) {
            SearchOutcome::Found => {
                let path = search.path.clone();
                let steps = search.steps;
                return Ok(finished(g, HamTarget::Path, Some(true), Some(path), true, steps));
            }
            SearchOutcome::BudgetHit => {
                let steps = search.steps;
                return Ok(finished(g, HamTarget::Path, None, None, false, steps));
            }
            SearchOutcome::NotFound => {}
        }
    }
    let steps = search.steps;
    Ok(finished(g, HamTarget::Path, Some(false), None, true, steps))
}

/// Backtracking Hamiltonian cycle search; needs at least 3 vertices.
pub fn hamiltonian_cycle(g: &Graph, budget: u64) -> Result<HamiltonicityResult> {
    if g.order() < 3 {
        return Err(Error::TooFewVertices(g.order()));
    }
    let mut search = HamSearch::new(g, true, budget);
    // certificates: a vertex of degree < 2 or any bipartite imbalance
    // (odd order included) rules a cycle out
    let min_degree = (0..g.order()).map(|v| g.degree(v)).min().expect("nonempty");
    if min_degree < 2 || class_imbalance(&search) != 0 {
        return Ok(finished(g, HamTarget::Cycle, Some(false), None, true, 0));
    }
    match search.extend(0) {
        SearchOutcome::Found => {
            let path = search.path.clone();
            let steps = search.steps;
            Ok(finished(g, HamTarget::Cycle, Some(true), Some(path), true, steps))
        }
        SearchOutcome::BudgetHit => {
            let steps = search.steps;
            Ok(finished(g, HamTarget::Cycle, None, None, false, steps))
        }
        SearchOutcome::NotFound => {
            let steps = search.steps;
            Ok(finished(g, HamTarget::Cycle, Some(false), None, true, steps))
        }
    }
}

/// One row of the degree table: how many vertices of each degree.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeRow {
    pub n: u32,
    pub family: Family,
    pub counts: BTreeMap<usize, usize>,
}

pub fn degree_distribution(family: Family, lo: u32, hi: u32) -> Result<Vec<DegreeRow>> {
    let mut rows = Vec::new();
    for n in lo..=hi {
        let g = build_graph(family, n)?;
        let mut counts = BTreeMap::new();
        for v in 0..g.order() {
            *counts.entry(g.degree(v)).or_insert(0) += 1;
        }
        rows.push(DegreeRow { n, family, counts });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::Family;

    fn m_graph(n: u32) -> Graph {
        build_graph(Family::CircularRunConstrained, n).unwrap()
    }

    fn r_graph(n: u32) -> Graph {
        build_graph(Family::RunConstrained, n).unwrap()
    }

    #[test]
    fn cube_polynomial_examples() {
        assert_eq!(cube_polynomial(&m_graph(3)).coefficients, vec![4, 3]);
        assert_eq!(cube_polynomial(&m_graph(2)).coefficients, vec![1]);
        let c5 = cube_polynomial(&m_graph(5));
        assert!(c5.coefficients[2] >= 1); // {00000,10000,00001,10001} spans a square
        assert_eq!(c5.coefficients, vec![11, 15, 5]);
    }

    #[test]
    fn cube_polynomial_known_values() {
        assert_eq!(cube_polynomial(&m_graph(7)).coefficients, vec![29, 49, 21]);
        assert_eq!(cube_polynomial(&m_graph(8)).coefficients, vec![45, 88, 52, 8]);
        assert_eq!(
            cube_polynomial(&m_graph(10)).coefficients,
            vec![121, 290, 235, 70, 5]
        );
        // a full hypercube: c_k = C(n, k) 2^(n-k)
        let q4 = build_graph(Family::Hypercube, 4).unwrap();
        assert_eq!(cube_polynomial(&q4).coefficients, vec![16, 32, 24, 8, 1]);
    }

    #[test]
    fn cube_polynomial_identities() {
        for n in 1..=10u32 {
            let g = m_graph(n);
            let poly = cube_polynomial(&g);
            assert_eq!(poly.coefficients[0], g.order() as u64, "c0 n={n}");
            if g.edge_count() > 0 {
                assert_eq!(poly.coefficients[1], g.edge_count(), "c1 n={n}");
            }
            assert_ne!(*poly.coefficients.last().unwrap(), 0);
            assert_eq!(poly.eval(0), g.order() as i64);
        }
    }

    /// Generic induced-C4 count, independent of the subcube shortcut: in
    /// a triangle-free graph every 4-cycle is induced and is counted once
    /// per diagonal pair of non-adjacent vertices.
    fn induced_c4_count(g: &Graph) -> u64 {
        let mut total = 0u64;
        for u in 0..g.order() {
            for v in (u + 1)..g.order() {
                if g.neighbors(u).contains(&(v as u32)) {
                    continue;
                }
                let mut common = 0u64;
                let (a, b) = (g.neighbors(u), g.neighbors(v));
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    match a[i].cmp(&b[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => {
                            common += 1;
                            i += 1;
                            j += 1;
                        }
                    }
                }
                total += common * common.saturating_sub(1) / 2;
            }
        }
        total / 2
    }

    #[test]
    fn subcube_count_matches_generic_c4_count() {
        for n in 1..=8u32 {
            let g = m_graph(n);
            let poly = cube_polynomial(&g);
            let c2 = poly.coefficients.get(2).copied().unwrap_or(0);
            assert_eq!(c2, induced_c4_count(&g), "n={n}");
        }
    }

    #[test]
    fn r4_path_example() {
        let result = hamiltonian_path(&r_graph(4), 1000).unwrap();
        assert_eq!(result.found, Some(true));
        let witness = result.witness.unwrap();
        // the only Hamiltonian path up to reversal
        let forward = vec!["1000", "0000", "0100"];
        let backward: Vec<&str> = forward.iter().rev().copied().collect();
        assert!(witness == forward || witness == backward, "{witness:?}");
    }

    #[test]
    fn m4_star_has_no_path() {
        let result = hamiltonian_path(&m_graph(4), 1000).unwrap();
        assert_eq!(result.found, Some(false));
        assert!(result.exhausted);
    }

    #[test]
    fn single_vertex_path() {
        let result = hamiltonian_path(&r_graph(2), 1000).unwrap();
        assert_eq!(result.found, Some(true));
        assert_eq!(result.witness.unwrap(), vec!["00"]);
    }

    #[test]
    fn r_paths_exist_up_to_13() {
        for n in 2..=13u32 {
            let result = hamiltonian_path(&r_graph(n), DEFAULT_SEARCH_BUDGET).unwrap();
            assert_eq!(result.found, Some(true), "n={n}");
            assert!(result.exhausted);
        }
    }

    #[test]
    fn r_cycles_match_reindexed_parity() {
        // cycles exist exactly at n = 6, 9, 12 in this range; parity
        // certificates dispose of the other lengths instantly
        for n in 4..=13u32 {
            let result = hamiltonian_cycle(&r_graph(n), DEFAULT_SEARCH_BUDGET).unwrap();
            assert!(result.exhausted, "n={n}");
            assert_eq!(result.found, Some(n % 3 == 0 && n >= 6), "n={n}");
        }
    }

    #[test]
    fn m5_cycle_and_path() {
        let cycle = hamiltonian_cycle(&m_graph(5), DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(cycle.found, Some(false)); // 11 vertices, odd order
        assert!(cycle.exhausted);
        let path = hamiltonian_path(&m_graph(5), DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(path.found, Some(true));
    }

    #[test]
    fn cycle_needs_three_vertices() {
        assert!(matches!(
            hamiltonian_cycle(&r_graph(3), 1000),
            Err(Error::TooFewVertices(2))
        ));
    }

    #[test]
    fn budget_exhaustion_is_indeterminate() {
        let result = hamiltonian_path(&r_graph(11), 10).unwrap();
        assert_eq!(result.found, None);
        assert!(!result.exhausted);
        assert!(result.witness.is_none());
    }

    #[test]
    fn degree_rows_examples() {
        let rows = degree_distribution(Family::CircularRunConstrained, 3, 4).unwrap();
        assert_eq!(rows[0].counts, BTreeMap::from([(3, 1), (1, 3)]));
        assert_eq!(rows[1].counts, BTreeMap::from([(4, 1), (1, 4)]));
        let row2 = &degree_distribution(Family::CircularRunConstrained, 2, 2).unwrap()[0];
        assert_eq!(row2.counts, BTreeMap::from([(0, 1)]));
        // row sums and degree sums
        for n in 2..=10 {
            let g = m_graph(n);
            let row = &degree_distribution(Family::CircularRunConstrained, n, n).unwrap()[0];
            let vertices: usize = row.counts.values().sum();
            let degree_sum: usize = row.counts.iter().map(|(d, c)| d * c).sum();
            assert_eq!(vertices, g.order());
            assert_eq!(degree_sum as u64, 2 * g.edge_count());
        }
    }
}
