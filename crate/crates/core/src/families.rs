//! Vertex sets of the four families, built two ways: brute-force
//! enumeration by definition, and the recursive decompositions
//!
//! ```text
//! R_n = U_{i=0..ceil(n/2)-1}  1^i 0^(i+1) R_(n-2i-1)
//! M_n = U_{i=0..ceil(n/2)-1}  ->1^i 0^(i+1) R_(n-2i-1)->   (rotation closure)
//! ```
//!
//! plus the bijection `phi` between run-constrained-circularly strings and
//! Lucas strings: circularly factor a vertex into blocks `1^i 0^(i+1)` and
//! replace each block by `(10)^i 0`. For even n the two alternating Lucas
//! strings have no preimage; `lucas_restricted` is the exact image.
//!
//! Members are stored as packed codes (numeric value of b1..bn) in
//! ascending order, which is also lexicographic order of the rendered
//! strings.

use std::collections::HashMap;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::bitstring::{BitString, Family};
use crate::error::{Error, Result};

/// An ordered family vertex set at one length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    family: Family,
    n: u32,
    members: Vec<u32>,
}

impl VertexSet {
    fn from_sorted(family: Family, n: u32, members: Vec<u32>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { family, n, members }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member codes in canonical (ascending numeric) order.
    pub fn codes(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, code: u32) -> bool {
        self.members.binary_search(&code).is_ok()
    }

    pub fn bitstrings(&self) -> impl Iterator<Item = BitString> + '_ {
        self.members.iter().map(|&c| BitString::from_code(self.n, c))
    }

    pub fn labels(&self) -> Vec<String> {
        self.bitstrings().map(|s| s.to_string()).collect()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("VertexSet", 3)?;
        st.serialize_field("family", self.family.tag())?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("members", &self.labels())?;
        st.end()
    }
}

fn check_cap(family: Family, n: u32) -> Result<()> {
    let cap = family.enumeration_cap();
    if n > cap {
        return Err(Error::CapExceeded {
            n,
            cap,
            what: family.tag(),
        });
    }
    Ok(())
}

/// All members of the family at length `n`, by filtering the 2^n strings.
///
/// At n = 0 every family yields the null string, except the
/// run-constrained-circularly family which yields the empty set so that
/// the graph M_0 has M(0) = 0 vertices. (The string-set convention
/// M_0 = {null} conflicts with that count; the graph layer wins here.)
pub fn enumerate(family: Family, n: u32) -> Result<VertexSet> {
    check_cap(family, n)?;
    if n == 0 {
        let members = match family {
            Family::CircularRunConstrained => vec![],
            _ => vec![0],
        };
        return Ok(VertexSet::from_sorted(family, 0, members));
    }
    let mut members = Vec::new();
    for code in 0..(1u64 << n) {
        let code = code as u32;
        if family.is_member_code(n, code) {
            members.push(code);
        }
    }
    Ok(VertexSet::from_sorted(family, n, members))
}

/// The rotation closure ->alpha S-> = { a_i..a_t S a_1..a_(i-1) : i in 1..t }.
///
/// With S = {null string} this is the set of rotations of `alpha`. All
/// strings of `s` must share one length; duplicates collapse.
pub fn rotation_closure(alpha: &BitString, s: &[BitString]) -> Result<Vec<BitString>> {
    if alpha.is_empty() {
        return Err(Error::EmptyAnchor);
    }
    if let Some(first) = s.first() {
        if s.iter().any(|x| x.len() != first.len()) {
            return Err(Error::MixedLengths);
        }
    }
    let t = alpha.len();
    let mut out = Vec::with_capacity(t * s.len());
    for i in 0..t {
        for member in s {
            let mut bits = Vec::with_capacity(t + member.len());
            bits.extend_from_slice(&alpha.bits()[i..]);
            bits.extend_from_slice(member.bits());
            bits.extend_from_slice(&alpha.bits()[..i]);
            out.push(BitString::from_bits(bits).expect("bits are 0/1"));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Code-level rotation closure of the anchor `1^i 0^(i+1)` around every
/// member of `inner` (strings of length `m`). Within one block the t
/// placements never collide, which is asserted by the callers via the
/// (2i+1)|R_(n-2i-1)| size check.
fn anchor_rotation_codes(i: u32, inner: &[u32], m: u32) -> Vec<u32> {
    let t = 2 * i + 1;
    // anchor = 1^i 0^(i+1), as bits
    let anchor: Vec<u32> = (0..t).map(|j| if j < i { 1 } else { 0 }).collect();
    let mut out = Vec::with_capacity(t as usize * inner.len());
    for shift in 0..t {
        // suffix a_(shift+1)..a_t, then inner, then prefix a_1..a_shift
        let mut suffix_code = 0u32;
        for &b in &anchor[shift as usize..] {
            suffix_code = (suffix_code << 1) | b;
        }
        let mut prefix_code = 0u32;
        for &b in &anchor[..shift as usize] {
            prefix_code = (prefix_code << 1) | b;
        }
        for &w in inner {
            let code = (suffix_code << (m + shift)) | (w << shift) | prefix_code;
            out.push(code);
        }
    }
    out.sort_unstable();
    out
}

/// R_n via the partition R_n = U_i 1^i 0^(i+1) R_(n-2i-1), with
/// R_0 = {null} and R_1 = {0}.
pub fn build_r_recursive(n: u32) -> Result<VertexSet> {
    check_cap(Family::RunConstrained, n)?;
    let mut sets = r_sets_up_to(n);
    Ok(VertexSet::from_sorted(
        Family::RunConstrained,
        n,
        sets.pop().expect("nonempty"),
    ))
}

/// Sorted code sets R_0 .. R_n, built bottom-up.
fn r_sets_up_to(n: u32) -> Vec<Vec<u32>> {
    let mut sets: Vec<Vec<u32>> = Vec::with_capacity(n as usize + 1);
    sets.push(vec![0]); // R_0 = {null string}, coded 0 at length 0
    for m in 1..=n {
        let mut members = Vec::new();
        for i in 0..m.div_ceil(2) {
            let rest = m - 2 * i - 1;
            // prefix 1^i 0^(i+1) has code (2^i - 1) << (i+1) at length 2i+1
            let prefix = (((1u64 << i) - 1) as u32) << (i + 1);
            for &w in &sets[rest as usize] {
                members.push((prefix << rest) | w);
            }
        }
        members.sort_unstable();
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        sets.push(members);
    }
    sets
}

/// One decomposition block ->1^i 0^(i+1) R_(n-2i-1)-> of M_n.
#[derive(Clone, Debug)]
pub struct DecompositionBlock {
    pub i: u32,
    pub codes: Vec<u32>,
}

/// The Theorem-3.2-style rotation blocks of M_n, i = 0 .. ceil(n/2)-1.
///
/// Each block is checked against its predicted size (2i+1)|R_(n-2i-1)|.
pub fn m_decomposition_blocks(n: u32) -> Result<Vec<DecompositionBlock>> {
    check_cap(Family::CircularRunConstrained, n)?;
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            n,
            min: 1,
            what: "m_decomposition_blocks",
        });
    }
    let r_sets = r_sets_up_to(n);
    let mut blocks = Vec::new();
    for i in 0..n.div_ceil(2) {
        let rest = n - 2 * i - 1;
        let inner = &r_sets[rest as usize];
        let codes = anchor_rotation_codes(i, inner, rest);
        let expected = (2 * i + 1) as usize * inner.len();
        if codes.len() != expected || codes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BlockSize {
                n,
                i: i as usize,
                got: codes.len(),
                expected,
            });
        }
        blocks.push(DecompositionBlock { i, codes });
    }
    Ok(blocks)
}

/// M_n as the union of the rotation blocks. Blocks are verified to be
/// pairwise disjoint; an overlap is reported as an error, not absorbed.
pub fn build_m_recursive(n: u32) -> Result<VertexSet> {
    let blocks = m_decomposition_blocks(n)?;
    let mut seen: HashMap<u32, usize> = HashMap::new();
    for block in &blocks {
        for &code in &block.codes {
            if let Some(&other) = seen.get(&code) {
                return Err(Error::BlockOverlap {
                    n,
                    label: BitString::from_code(n, code).to_string(),
                    i: other,
                    j: block.i as usize,
                });
            }
            seen.insert(code, block.i as usize);
        }
    }
    let mut members: Vec<u32> = seen.into_keys().collect();
    members.sort_unstable();
    Ok(VertexSet::from_sorted(
        Family::CircularRunConstrained,
        n,
        members,
    ))
}

/// Offset of the first position that starts a 1-run, reading cyclically.
fn first_one_run_start(s: &BitString) -> Option<usize> {
    let n = s.len();
    (0..n).find(|&i| s.bit(i) == 1 && s.bit((i + n - 1) % n) == 0)
}

/// The bijection from run-constrained-circularly strings to Lucas strings:
/// each circular factor `1^i 0^(i+1)` becomes `(10)^i 0`.
pub fn phi(s: &BitString) -> Result<BitString> {
    if !Family::CircularRunConstrained.is_member(s) {
        return Err(Error::NotMember {
            family: Family::CircularRunConstrained,
            string: s.to_string(),
        });
    }
    if s.weight() == 0 {
        return Ok(s.clone());
    }
    let n = s.len();
    let offset = first_one_run_start(s).expect("positive weight");
    let t = s.rotated_left(offset);
    let mut out: Vec<u8> = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        if t.bit(i) == 1 {
            let mut r = 0;
            while i < n && t.bit(i) == 1 {
                r += 1;
                i += 1;
            }
            // membership guarantees the factor's r+1 zeros are present
            debug_assert!((0..=r).all(|k| t.bit(i + k) == 0));
            for _ in 0..r {
                out.push(1);
                out.push(0);
            }
            out.push(0);
            i += r + 1;
        } else {
            out.push(0);
            i += 1;
        }
    }
    Ok(BitString::from_bits(out)
        .expect("bits are 0/1")
        .rotated_right(offset))
}

fn is_even_alternating(s: &BitString) -> bool {
    let n = s.len();
    if n == 0 || n % 2 == 1 {
        return false;
    }
    (0..n).all(|i| s.bit(i) == (i % 2) as u8) || (0..n).all(|i| s.bit(i) == ((i + 1) % 2) as u8)
}

/// Inverse of [`phi`]: each circular factor `(10)^i 0` of a Lucas string
/// becomes `1^i 0^(i+1)`.
///
/// For even n the two alternating strings `1010..` / `0101..` admit no
/// such factorization and are rejected with a dedicated error.
pub fn phi_inverse(s: &BitString) -> Result<BitString> {
    if !Family::Lucas.is_member(s) {
        return Err(Error::NotMember {
            family: Family::Lucas,
            string: s.to_string(),
        });
    }
    if s.weight() == 0 {
        return Ok(s.clone());
    }
    if is_even_alternating(s) {
        return Err(Error::ExcludedAlternating(s.to_string()));
    }
    let n = s.len();
    // a factor-start 1 is preceded cyclically by 00; one exists for every
    // non-alternating Lucas string of positive weight
    let offset = (0..n)
        .find(|&i| {
            s.bit(i) == 1 && s.bit((i + n - 1) % n) == 0 && s.bit((i + n - 2) % n) == 0
        })
        .expect("non-alternating Lucas string has a 00-preceded 1");
    let t = s.rotated_left(offset);
    let mut out: Vec<u8> = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        if t.bit(i) == 1 {
            // read maximal (10)+ then the closing 0
            let mut r = 0;
            while i < n && t.bit(i) == 1 {
                debug_assert!(i + 1 < n && t.bit(i + 1) == 0, "no 11 and no trailing 1");
                r += 1;
                i += 2;
            }
            debug_assert!(i < n && t.bit(i) == 0, "factor closes with a 0");
            for _ in 0..r {
                out.push(1);
            }
            for _ in 0..=r {
                out.push(0);
            }
            i += 1;
        } else {
            out.push(0);
            i += 1;
        }
    }
    Ok(BitString::from_bits(out)
        .expect("bits are 0/1")
        .rotated_right(offset))
}

/// The image of phi: all Lucas strings for odd n, all but the two
/// alternating strings for even n. Its size is the associated Mersenne
/// number M(n).
pub fn lucas_restricted(n: u32) -> Result<VertexSet> {
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            n,
            min: 1,
            what: "lucas_restricted",
        });
    }
    let lucas = enumerate(Family::Lucas, n)?;
    let members = if n % 2 == 1 {
        lucas.members
    } else {
        let half = n / 2;
        let alternating_10 = {
            let mut code = 0u32;
            for _ in 0..half {
                code = (code << 2) | 0b10;
            }
            code
        };
        let alternating_01 = alternating_10 >> 1;
        lucas
            .members
            .into_iter()
            .filter(|&c| c != alternating_10 && c != alternating_01)
            .collect()
    };
    Ok(VertexSet::from_sorted(Family::Lucas, n, members))
}
