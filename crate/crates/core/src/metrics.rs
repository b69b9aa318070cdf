//! Exact distances on the induced subgraphs: eccentricities, radius,
//! center, diameter and periphery, plus the constructive witnesses behind
//! the associated Mersenne metric results — a far vertex meeting the
//! eccentricity lower bound `w + ceil((n-w)/2) - 1`, the weight-monotone
//! walk through 0^n, and the predicted center/periphery sets.

use std::collections::VecDeque;

use crate::bitstring::{runs, BitString, Family};
use crate::error::{Error, Result};
use crate::families::rotation_closure;
use crate::graph::Graph;

/// Breadth-first distances from vertex index `v`. Errors if some vertex
/// is unreachable.
pub fn distances_from(g: &Graph, v: usize) -> Result<Vec<u32>> {
    let mut dist = vec![u32::MAX; g.order()];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[u] + 1;
                queue.push_back(w as usize);
            }
        }
    }
    if let Some(first) = dist.iter().position(|&d| d == u32::MAX) {
        return Err(Error::Disconnected(g.label(first)));
    }
    Ok(dist)
}

/// Eccentricities, radius, diameter, center and periphery of one graph.
#[derive(Clone, Debug)]
pub struct MetricSummary {
    pub n: u32,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<String>,
    pub periphery: Vec<String>,
    /// Per-vertex eccentricity in canonical vertex order.
    pub eccentricities: Vec<(String, u32)>,
}

impl MetricSummary {
    pub fn histogram(&self) -> std::collections::BTreeMap<u32, usize> {
        let mut map = std::collections::BTreeMap::new();
        for (_, e) in &self.eccentricities {
            *map.entry(*e).or_insert(0) += 1;
        }
        map
    }

    /// JSON per the summary schema; the full per-vertex map only appears
    /// with `verbose`.
    pub fn to_json(&self, verbose: bool) -> serde_json::Value {
        let histogram: std::collections::BTreeMap<String, usize> = self
            .histogram()
            .into_iter()
            .map(|(e, c)| (e.to_string(), c))
            .collect();
        let mut value = serde_json::json!({
            "n": self.n,
            "radius": self.radius,
            "diameter": self.diameter,
            "center": self.center,
            "periphery": self.periphery,
            "eccentricity_histogram": histogram,
        });
        if verbose {
            let map: serde_json::Map<String, serde_json::Value> = self
                .eccentricities
                .iter()
                .map(|(label, e)| (label.clone(), serde_json::json!(e)))
                .collect();
            value["eccentricity"] = serde_json::Value::Object(map);
        }
        value
    }
}

/// All-source breadth-first summary. One traversal per vertex; no
/// distance matrix is materialized.
pub fn metric_summary(g: &Graph) -> Result<MetricSummary> {
    if g.order() == 0 {
        return Err(Error::Disconnected("empty graph".into()));
    }
    let mut eccentricities = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let dist = distances_from(g, v)?;
        let ecc = *dist.iter().max().expect("nonempty");
        eccentricities.push((g.label(v), ecc));
    }
    let radius = eccentricities.iter().map(|&(_, e)| e).min().expect("nonempty");
    let diameter = eccentricities.iter().map(|&(_, e)| e).max().expect("nonempty");
    let center = eccentricities
        .iter()
        .filter(|&&(_, e)| e == radius)
        .map(|(l, _)| l.clone())
        .collect();
    let periphery = eccentricities
        .iter()
        .filter(|&&(_, e)| e == diameter)
        .map(|(l, _)| l.clone())
        .collect();
    Ok(MetricSummary {
        n: g.n(),
        radius,
        diameter,
        center,
        periphery,
        eccentricities,
    })
}

fn require_member(s: &BitString) -> Result<()> {
    if !Family::CircularRunConstrained.is_member(s) {
        return Err(Error::NotMember {
            family: Family::CircularRunConstrained,
            string: s.to_string(),
        });
    }
    Ok(())
}

/// ceil(n/2) - 1, the radius of M_n for n >= 3.
fn half_up_minus_one(n: u32) -> u32 {
    n.div_ceil(2) - 1
}

/// A vertex far from `nu`, witnessing e(nu) >= w + ceil((n-w)/2) - 1.
///
/// The vertex is rotated so a 1-run leads, its maximal runs are read as
/// pairs (1-run, following 0-run), and each pair is rewritten by parity
/// of the 0-run: even 0-runs become `0^r 1^(s/2) 0^(s/2)`; odd 0-runs are
/// paired up left to right, the opening run of a pair becomes
/// `0^r 1^((s+1)/2) 0^((s-1)/2)`, the closing run `0^(r+1) 1^((s-1)/2)
/// 0^((s-1)/2)` and the even runs between them absorb the shift as
/// `0^(r+1) 1^(s/2) 0^(s/2-1)`; a leftover unpaired odd run becomes
/// `0^r 1^((s-1)/2) 0^((s+1)/2)`. The all-zeros vertex gets the maximal
/// weight witness `1^(ceil(n/2)-1) 0^(ceil(n/2))`.
pub fn far_vertex(nu: &BitString) -> Result<BitString> {
    let n = nu.len();
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            n: n as u32,
            min: 3,
            what: "far_vertex",
        });
    }
    require_member(nu)?;
    if nu.weight() == 0 {
        let k = half_up_minus_one(n as u32) as usize;
        let mut bits = vec![1u8; k];
        bits.resize(n, 0);
        return Ok(BitString::from_bits(bits).expect("bits are 0/1"));
    }
    let offset = (0..n)
        .find(|&i| nu.bit(i) == 1 && nu.bit((i + n - 1) % n) == 0)
        .expect("positive weight");
    let rotated = nu.rotated_left(offset);
    let run_list = runs(&rotated).expect("nonempty");
    debug_assert!(run_list.len() % 2 == 0, "1-run leads, 0-run closes");
    let pairs: Vec<(usize, usize)> = run_list
        .chunks(2)
        .map(|pair| (pair[0].len, pair[1].len))
        .collect();
    let odd_indices: Vec<usize> = pairs
        .iter()
        .enumerate()
        .filter(|(_, &(_, s))| s % 2 == 1)
        .map(|(j, _)| j)
        .collect();

    #[derive(Clone, Copy, PartialEq)]
    enum Role {
        Even,
        Opening,
        Inside,
        Closing,
        Unpaired,
    }
    let mut roles = vec![Role::Even; pairs.len()];
    let mut q = 0;
    while q + 1 < odd_indices.len() {
        let (a, b) = (odd_indices[q], odd_indices[q + 1]);
        roles[a] = Role::Opening;
        roles[b] = Role::Closing;
        for item in roles.iter_mut().take(b).skip(a + 1) {
            *item = Role::Inside;
        }
        q += 2;
    }
    if odd_indices.len() % 2 == 1 {
        roles[*odd_indices.last().expect("odd count")] = Role::Unpaired;
    }

    let mut bits: Vec<u8> = Vec::with_capacity(n);
    let mut emit = |zeros_a: usize, ones: usize, zeros_b: usize| {
        bits.extend(std::iter::repeat_n(0, zeros_a));
        bits.extend(std::iter::repeat_n(1, ones));
        bits.extend(std::iter::repeat_n(0, zeros_b));
    };
    for (j, &(r, s)) in pairs.iter().enumerate() {
        match roles[j] {
            Role::Even => emit(r, s / 2, s / 2),
            Role::Opening => emit(r, (s + 1) / 2, (s - 1) / 2),
            Role::Closing => emit(r + 1, (s - 1) / 2, (s - 1) / 2),
            Role::Inside => emit(r + 1, s / 2, s / 2 - 1),
            Role::Unpaired => emit(r, (s - 1) / 2, (s + 1) / 2),
        }
    }
    let result = BitString::from_bits(bits)
        .expect("bits are 0/1")
        .rotated_right(offset);
    debug_assert!(Family::CircularRunConstrained.is_member(&result));
    Ok(result)
}

/// 1-bit positions of `s` in cyclic order starting from the first 1-run
/// start. Zeroing bits in this order keeps every intermediate string in
/// the family (leftmost-first order does not when the leading 1-run wraps
/// the boundary).
fn cyclic_one_positions(s: &BitString) -> Vec<usize> {
    let n = s.len();
    if s.weight() == 0 {
        return Vec::new();
    }
    let start = (0..n)
        .find(|&i| s.bit(i) == 1 && s.bit((i + n - 1) % n) == 0)
        .expect("positive weight");
    (0..n)
        .map(|k| (start + k) % n)
        .filter(|&i| s.bit(i) == 1)
        .collect()
}

/// A walk from `alpha` to `beta` of length w(alpha) + w(beta) through
/// 0^n: zero the 1-bits of alpha in cyclic run order, then set the
/// 1-bits of beta in the reverse of its own zeroing order. Every
/// intermediate string is a vertex.
pub fn monotone_path(alpha: &BitString, beta: &BitString) -> Result<Vec<BitString>> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch {
            left: alpha.len(),
            right: beta.len(),
        });
    }
    require_member(alpha)?;
    require_member(beta)?;
    let mut walk = vec![alpha.clone()];
    let mut current = alpha.clone();
    for i in cyclic_one_positions(alpha) {
        current = current.with_bit(i, 0);
        walk.push(current.clone());
    }
    for i in cyclic_one_positions(beta).into_iter().rev() {
        current = current.with_bit(i, 1);
        walk.push(current.clone());
    }
    Ok(walk)
}

/// Predicted center of M_n: radius ceil(n/2) - 1 attained only at 0^n.
pub fn predicted_center(n: u32) -> Result<(u32, Vec<BitString>)> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            n,
            min: 3,
            what: "predicted_center",
        });
    }
    Ok((half_up_minus_one(n), vec![BitString::zeros(n as usize)]))
}

fn block_string(segments: &[(u8, u32)]) -> BitString {
    let mut bits = Vec::new();
    for &(symbol, count) in segments {
        bits.extend(std::iter::repeat_n(symbol, count as usize));
    }
    BitString::from_bits(bits).expect("bits are 0/1")
}

fn rotations(s: &BitString) -> Vec<BitString> {
    rotation_closure(s, &[BitString::zeros(0)]).expect("nonempty anchor")
}

/// Predicted periphery of M_n: diameter 2(ceil(n/2) - 1), attained on
/// the rotation classes below (deduplicated union).
///
/// Odd n: rotations of 1^k 0^(k+1) with k = ceil(n/2) - 1. For n = 4t:
/// rotations of 1 0^2 1^(2t-2) 0^(2t-1), of 1^(t-1) 0^t 1^t 0^(t+1) and
/// of 1^(2t-1) 0^(2t+1). For n = 4t+2: rotations of 1 0^2 1^(2t-1) 0^(2t),
/// of 1^(t-1) 0^t 1^(t+1) 0^(t+2), of 1^t 0^(t+1) 1^t 0^(t+1) and of
/// 1^(2t) 0^(2t+2).
pub fn predicted_periphery(n: u32) -> Result<(u32, Vec<BitString>)> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            n,
            min: 3,
            what: "predicted_periphery",
        });
    }
    let k = half_up_minus_one(n);
    let diameter = 2 * k;
    let classes: Vec<BitString> = if n % 2 == 1 {
        vec![block_string(&[(1, k), (0, k + 1)])]
    } else if n % 4 == 0 {
        let t = n / 4;
        vec![
            block_string(&[(1, 1), (0, 2), (1, 2 * t - 2), (0, 2 * t - 1)]),
            block_string(&[(1, t - 1), (0, t), (1, t), (0, t + 1)]),
            block_string(&[(1, 2 * t - 1), (0, 2 * t + 1)]),
        ]
    } else {
        let t = (n - 2) / 4;
        vec![
            block_string(&[(1, 1), (0, 2), (1, 2 * t - 1), (0, 2 * t)]),
            block_string(&[(1, t - 1), (0, t), (1, t + 1), (0, t + 2)]),
            block_string(&[(1, t), (0, t + 1), (1, t), (0, t + 1)]),
            block_string(&[(1, 2 * t), (0, 2 * t + 2)]),
        ]
    };
    let mut out: Vec<BitString> = classes.iter().flat_map(|c| rotations(c)).collect();
    out.sort();
    out.dedup();
    Ok((diameter, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::hamming;
    use crate::graph::build_graph;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn m_graph(n: u32) -> Graph {
        build_graph(Family::CircularRunConstrained, n).unwrap()
    }

    #[test]
    fn distances_examples() {
        let g = m_graph(3);
        let center = g.index_of(&bs("000")).unwrap();
        let dist = distances_from(&g, center).unwrap();
        for v in 0..g.order() {
            assert_eq!(dist[v], u32::from(v != center));
        }

        let g5 = m_graph(5);
        let from = g5.index_of(&bs("11000")).unwrap();
        let to = g5.index_of(&bs("00011")).unwrap();
        let dist = distances_from(&g5, from).unwrap();
        assert_eq!(dist[to], 4);
        assert_eq!(dist[from], 0);
    }

    #[test]
    fn summary_examples() {
        let s6 = metric_summary(&m_graph(6)).unwrap();
        assert_eq!((s6.radius, s6.diameter), (2, 4));
        assert_eq!(s6.center, vec!["000000"]);

        let s5 = metric_summary(&m_graph(5)).unwrap();
        assert_eq!((s5.radius, s5.diameter), (2, 4));
        let mut periphery = s5.periphery.clone();
        periphery.sort();
        let mut expected = vec!["11000", "01100", "00110", "00011", "10001"];
        expected.sort_unstable();
        assert_eq!(periphery, expected);

        let s3 = metric_summary(&m_graph(3)).unwrap();
        assert_eq!((s3.radius, s3.diameter), (1, 2));
    }

    #[test]
    fn far_vertex_worked_examples() {
        assert_eq!(
            far_vertex(&bs("1001100001110000")).unwrap(),
            bs("0100011000001100")
        );
        assert_eq!(
            far_vertex(&bs("10011000011100000")).unwrap(),
            bs("01000110000011000")
        );
        assert_eq!(
            far_vertex(&bs("1100010011000011100000")).unwrap(),
            bs("0011000100011000001100")
        );
        assert!(matches!(
            far_vertex(&bs("0110")),
            Err(Error::NotMember { .. })
        ));
    }

    #[test]
    fn far_vertex_general_compositions() {
        // the longer compositions: membership plus the exact distance value
        let nu = bs("100110001001000100111000011000100100110001110000");
        let mu = far_vertex(&nu).unwrap();
        let (n, w) = (nu.len() as u32, nu.weight());
        assert!(Family::CircularRunConstrained.is_member(&mu));
        assert_eq!(hamming(&nu, &mu).unwrap(), w + (n - w).div_ceil(2));

        let nu = bs("10011000100100010011100001100010010011000111000011000100");
        let mu = far_vertex(&nu).unwrap();
        let (n, w) = (nu.len() as u32, nu.weight());
        assert!(Family::CircularRunConstrained.is_member(&mu));
        assert_eq!(hamming(&nu, &mu).unwrap(), w + (n - w).div_ceil(2) - 1);
    }

    #[test]
    fn far_vertex_all_zero_witness() {
        assert_eq!(far_vertex(&bs("00000")).unwrap(), bs("11000"));
        assert_eq!(far_vertex(&bs("000000")).unwrap(), bs("110000"));
    }

    #[test]
    fn far_vertex_meets_bound_exhaustively() {
        use crate::families::enumerate;
        for n in 3..=11u32 {
            for nu in enumerate(Family::CircularRunConstrained, n).unwrap().bitstrings() {
                let mu = far_vertex(&nu).unwrap();
                assert_eq!(mu.len(), n as usize);
                assert!(Family::CircularRunConstrained.is_member(&mu), "n={n} nu={nu}");
                let w = nu.weight();
                assert!(
                    hamming(&nu, &mu).unwrap() >= w + (n - w).div_ceil(2) - 1,
                    "n={n} nu={nu} mu={mu}"
                );
            }
        }
    }

    #[test]
    fn monotone_path_examples() {
        let path = monotone_path(&bs("11000"), &bs("00011")).unwrap();
        let expected = ["11000", "01000", "00000", "00001", "00011"];
        assert_eq!(path, expected.map(bs).to_vec());

        assert_eq!(monotone_path(&bs("00000"), &bs("00000")).unwrap(), vec![bs("00000")]);
        assert_eq!(
            monotone_path(&bs("100"), &bs("001")).unwrap(),
            vec![bs("100"), bs("000"), bs("001")]
        );
    }

    #[test]
    fn monotone_path_handles_wrapped_runs() {
        // 1100001's leading run wraps; leftmost-first zeroing would leave
        // the non-member 0100001
        let path = monotone_path(&bs("1100001"), &bs("0000000")).unwrap();
        for step in &path {
            assert!(Family::CircularRunConstrained.is_member(step), "{step}");
        }
        assert_eq!(path.len(), 4);
    }

    #[test]
    fn monotone_path_is_valid_for_all_pairs_small() {
        use crate::families::enumerate;
        for n in 3..=8u32 {
            let members: Vec<BitString> = enumerate(Family::CircularRunConstrained, n)
                .unwrap()
                .bitstrings()
                .collect();
            for a in &members {
                for b in &members {
                    let walk = monotone_path(a, b).unwrap();
                    assert_eq!(walk.len() as u32, a.weight() + b.weight() + 1);
                    for pair in walk.windows(2) {
                        assert_eq!(hamming(&pair[0], &pair[1]).unwrap(), 1);
                    }
                    for step in &walk {
                        assert!(Family::CircularRunConstrained.is_member(step));
                    }
                }
            }
        }
    }

    #[test]
    fn predicted_center_examples() {
        assert_eq!(predicted_center(5).unwrap(), (2, vec![bs("00000")]));
        assert_eq!(predicted_center(6).unwrap(), (2, vec![bs("000000")]));
        assert_eq!(predicted_center(3).unwrap(), (1, vec![bs("000")]));
    }

    #[test]
    fn predicted_periphery_examples() {
        let (d, p) = predicted_periphery(5).unwrap();
        assert_eq!(d, 4);
        let mut expected = ["11000", "01100", "00110", "00011", "10001"].map(bs).to_vec();
        expected.sort();
        assert_eq!(p, expected);

        let (d, p) = predicted_periphery(3).unwrap();
        assert_eq!(d, 2);
        assert_eq!(p, vec![bs("001"), bs("010"), bs("100")]);

        // n = 8 = 4t with t = 2: two of the three classes coincide
        let (d, p) = predicted_periphery(8).unwrap();
        assert_eq!(d, 6);
        let mut expected: Vec<BitString> = rotations(&bs("10011000"));
        expected.extend(rotations(&bs("11100000")));
        expected.sort();
        expected.dedup();
        assert_eq!(p, expected);
    }

    #[test]
    fn summaries_match_predictions() {
        for n in 3..=12u32 {
            let summary = metric_summary(&m_graph(n)).unwrap();
            let (radius, center) = predicted_center(n).unwrap();
            let (diameter, periphery) = predicted_periphery(n).unwrap();
            assert_eq!(summary.radius, radius, "n={n}");
            assert_eq!(summary.diameter, diameter, "n={n}");
            assert_eq!(
                summary.center,
                center.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "n={n}"
            );
            let mut got = summary.periphery.clone();
            got.sort();
            let want: Vec<String> = periphery.iter().map(|s| s.to_string()).collect();
            assert_eq!(got, want, "n={n}");
        }
    }

    #[test]
    fn eccentricity_laws_small() {
        for n in 3..=10u32 {
            let g = m_graph(n);
            let summary = metric_summary(&g).unwrap();
            for (v, (label, e)) in summary.eccentricities.iter().enumerate() {
                let w = g.bitstring(v).weight();
                let bound = w + (n - w).div_ceil(2) - 1;
                assert!(*e >= bound, "n={n} {label}");
                if w == 0 {
                    assert_eq!(*e, n.div_ceil(2) - 1);
                }
                if w == 1 {
                    assert_eq!(*e, n.div_ceil(2), "n={n} {label}");
                }
            }
        }
    }
}
