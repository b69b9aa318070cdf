//! Fixed-length binary words, the Hamming metric, run decompositions and
//! the membership predicates for the string families.
//!
//! A [`BitString`] renders with b1 leftmost; the length-0 string is the
//! null string. Membership predicates accept any length; only the
//! enumeration paths in [`crate::families`] are capped.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A binary word of fixed (possibly zero) length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    bits: Vec<u8>,
}

impl BitString {
    /// The all-zeros string of length `n`.
    pub fn zeros(n: usize) -> Self {
        BitString { bits: vec![0; n] }
    }

    /// Build from the numeric value of b1..bn read as a binary numeral
    /// (b1 is the most significant bit). Requires `n <= 32`.
    pub fn from_code(n: u32, code: u32) -> Self {
        assert!(n <= 32, "codes only cover lengths up to 32");
        let bits = (0..n).map(|j| ((code >> (n - 1 - j)) & 1) as u8).collect();
        BitString { bits }
    }

    /// Numeric value of b1..bn, when the string fits in 32 bits.
    pub fn to_code(&self) -> Option<u32> {
        if self.bits.len() > 32 {
            return None;
        }
        Some(self.bits.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32))
    }

    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidBit((b'0' + bad) as char));
        }
        Ok(BitString { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at 0-based offset from the left, so `bit(0)` is b1.
    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of 1-bits.
    pub fn weight(&self) -> u32 {
        self.bits.iter().map(|&b| b as u32).sum()
    }

    /// Cyclic left shift by `k`: b1..bn -> b(k+1)..bn b1..bk.
    pub fn rotated_left(&self, k: usize) -> Self {
        if self.bits.is_empty() {
            return self.clone();
        }
        let k = k % self.bits.len();
        let mut bits = Vec::with_capacity(self.bits.len());
        bits.extend_from_slice(&self.bits[k..]);
        bits.extend_from_slice(&self.bits[..k]);
        BitString { bits }
    }

    pub fn rotated_right(&self, k: usize) -> Self {
        if self.bits.is_empty() {
            return self.clone();
        }
        let n = self.bits.len();
        self.rotated_left(n - k % n)
    }

    /// Copy with the bit at offset `i` set to `b`.
    pub fn with_bit(&self, i: usize, b: u8) -> Self {
        let mut bits = self.bits.clone();
        bits[i] = b;
        BitString { bits }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(Error::InvalidBit(other)),
            }
        }
        Ok(BitString { bits })
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A maximal block of equal bits.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Run {
    pub symbol: u8,
    pub len: usize,
}

/// Number of positions where `a` and `b` differ.
pub fn hamming(a: &BitString, b: &BitString) -> Result<u32> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.bits()
        .iter()
        .zip(b.bits())
        .filter(|(x, y)| x != y)
        .count() as u32)
}

/// Maximal alternating blocks, left to right. The null string has no run
/// decomposition.
pub fn runs(s: &BitString) -> Result<Vec<Run>> {
    if s.is_empty() {
        return Err(Error::NullString);
    }
    let mut out = Vec::new();
    let bits = s.bits();
    let mut i = 0;
    while i < bits.len() {
        let symbol = bits[i];
        let start = i;
        while i < bits.len() && bits[i] == symbol {
            i += 1;
        }
        out.push(Run {
            symbol,
            len: i - start,
        });
    }
    Ok(out)
}

/// Maximal blocks of the cyclic word. The block spanning the n/1 boundary
/// is reported once, merged; the decomposition starts at the first block
/// boundary at or after position 1. A constant string is one run of
/// length n.
pub fn circular_runs(s: &BitString) -> Result<Vec<Run>> {
    if s.is_empty() {
        return Err(Error::NullString);
    }
    let n = s.len();
    let bits = s.bits();
    let start = (0..n).find(|&i| bits[i] != bits[(i + n - 1) % n]);
    match start {
        None => Ok(vec![Run {
            symbol: bits[0],
            len: n,
        }]),
        Some(p) => runs(&s.rotated_left(p)),
    }
}

/// Selector for the five vertex-set families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Hypercube,
    Fibonacci,
    Lucas,
    RunConstrained,
    CircularRunConstrained,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Hypercube,
        Family::Fibonacci,
        Family::Lucas,
        Family::RunConstrained,
        Family::CircularRunConstrained,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::Fibonacci => "fibonacci",
            Family::Lucas => "lucas",
            Family::RunConstrained => "run_constrained",
            Family::CircularRunConstrained => "circular_run_constrained",
        }
    }

    /// One-letter code used by the CLI: Q, F, L, R or M.
    pub fn letter(self) -> char {
        match self {
            Family::Hypercube => 'Q',
            Family::Fibonacci => 'F',
            Family::Lucas => 'L',
            Family::RunConstrained => 'R',
            Family::CircularRunConstrained => 'M',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'Q' => Some(Family::Hypercube),
            'F' => Some(Family::Fibonacci),
            'L' => Some(Family::Lucas),
            'R' => Some(Family::RunConstrained),
            'M' => Some(Family::CircularRunConstrained),
            _ => None,
        }
    }

    /// Largest n the enumeration paths accept for this family.
    pub fn enumeration_cap(self) -> u32 {
        match self {
            Family::Hypercube => 24,
            _ => 32,
        }
    }

    /// Membership predicate; accepts strings of any length. The null
    /// string belongs to every family (vacuously).
    pub fn is_member(self, s: &BitString) -> bool {
        match self {
            Family::Hypercube => true,
            Family::Fibonacci => is_fibonacci(s),
            Family::Lucas => {
                is_fibonacci(s) && !(!s.is_empty() && s.bit(0) == 1 && s.bit(s.len() - 1) == 1)
            }
            Family::RunConstrained => is_run_constrained(s),
            Family::CircularRunConstrained => is_run_constrained_circularly(s),
        }
    }

    /// Membership on the packed code of a length-`n` string. Agrees with
    /// [`Family::is_member`] and avoids the allocation.
    pub fn is_member_code(self, n: u32, code: u32) -> bool {
        debug_assert!(n <= 32 && (n == 32 || code < (1u64 << n) as u32));
        let bit = |j: u32| -> u32 { (code >> (n - 1 - j)) & 1 };
        match self {
            Family::Hypercube => true,
            Family::Fibonacci => code & (code >> 1) == 0,
            Family::Lucas => {
                code & (code >> 1) == 0 && !(n >= 1 && bit(0) == 1 && bit(n - 1) == 1)
            }
            Family::RunConstrained => {
                let mut j = 0;
                while j < n {
                    if bit(j) == 1 {
                        let ones_start = j;
                        while j < n && bit(j) == 1 {
                            j += 1;
                        }
                        let ones = j - ones_start;
                        let zeros_start = j;
                        while j < n && bit(j) == 0 {
                            j += 1;
                        }
                        if j - zeros_start <= ones {
                            return false;
                        }
                    } else {
                        j += 1;
                    }
                }
                true
            }
            Family::CircularRunConstrained => {
                if code == 0 {
                    return true;
                }
                if n == 32 && code == u32::MAX {
                    return false;
                }
                if n < 32 && code == (1u32 << n) - 1 {
                    return false;
                }
                // start of some 1-run; exists since the string is mixed
                let start = (0..n)
                    .find(|&j| bit(j) == 1 && bit((j + n - 1) % n) == 0)
                    .expect("mixed string has a 1-run boundary");
                let mut j = start;
                let mut consumed = 0;
                while consumed < n {
                    let mut ones = 0;
                    while bit(j) == 1 {
                        ones += 1;
                        j = (j + 1) % n;
                    }
                    let mut zeros = 0;
                    while consumed + ones + zeros < n && bit(j) == 0 {
                        zeros += 1;
                        j = (j + 1) % n;
                    }
                    if zeros <= ones {
                        return false;
                    }
                    consumed += ones + zeros;
                }
                true
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn is_fibonacci(s: &BitString) -> bool {
    s.bits().windows(2).all(|w| w[0] & w[1] == 0)
}

fn is_run_constrained(s: &BitString) -> bool {
    if s.is_empty() {
        return true;
    }
    let rs = runs(s).expect("nonempty");
    for (idx, run) in rs.iter().enumerate() {
        if run.symbol == 1 {
            match rs.get(idx + 1) {
                Some(next) if next.len > run.len => {}
                _ => return false,
            }
        }
    }
    true
}

fn is_run_constrained_circularly(s: &BitString) -> bool {
    if s.is_empty() {
        return true;
    }
    let rs = circular_runs(s).expect("nonempty");
    if rs.len() == 1 {
        return rs[0].symbol == 0;
    }
    for (idx, run) in rs.iter().enumerate() {
        if run.symbol == 1 {
            let next = rs[(idx + 1) % rs.len()];
            debug_assert_eq!(next.symbol, 0);
            if next.len <= run.len {
                return false;
            }
        }
    }
    true
}
