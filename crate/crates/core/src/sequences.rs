//! Fibonacci, Lucas and associated Mersenne numbers, identities between
//! them, and the exact power-series expansion of the edge-count generating
//! function of the associated Mersenne graphs.
//!
//! Everything here is arbitrary precision: the identities are exercised at
//! indices where the values no longer fit in 64 bits. All functions are
//! pure; there is no cached state.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};

/// F(0)=0, F(1)=1, F(n)=F(n-1)+F(n-2).
pub fn fib(n: u32) -> BigUint {
    let (mut a, mut b) = (BigUint::ZERO, BigUint::from(1u32));
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// L(0)=2, L(1)=1, L(n)=L(n-1)+L(n-2).
pub fn lucas(n: u32) -> BigUint {
    let (mut a, mut b) = (BigUint::from(2u32), BigUint::from(1u32));
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Associated Mersenne numbers: M(0)=0, M(1)=1,
/// M(n) = M(n-1) + M(n-2) + 1 - (-1)^n.
pub fn assoc_mersenne(n: u32) -> BigUint {
    let (mut a, mut b) = (BigUint::ZERO, BigUint::from(1u32));
    for i in 2..=n {
        // 1 - (-1)^i is 0 for even i and 2 for odd i
        let bump = if i % 2 == 0 { 0u32 } else { 2u32 };
        let next = &a + &b + BigUint::from(bump);
        a = b;
        b = next;
    }
    if n == 0 {
        BigUint::ZERO
    } else {
        b
    }
}

/// Lucas numbers out of Fibonacci numbers:
/// L(n) = (F(n-k) + F(n+k)) / F(k) for odd k, (F(n+k) - F(n-k)) / F(k) for
/// even k. Requires 1 <= k <= n; the division is exact.
pub fn lucas_from_fib(n: u32, k: u32) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::ZeroIndex);
    }
    if n < k {
        return Err(Error::IndexOutOfRange {
            n,
            min: k,
            what: "lucas_from_fib (needs n >= k)",
        });
    }
    let numerator = if k % 2 == 1 {
        fib(n - k) + fib(n + k)
    } else {
        fib(n + k) - fib(n - k)
    };
    let fk = fib(k);
    debug_assert!((&numerator % &fk).is_zero(), "F(k) must divide exactly");
    Ok(numerator / fk)
}

/// |E(M_n)|: 0 for n <= 2, 3 for n = 3, and n * L(n-3) for n >= 4.
///
/// The closed form only covers n >= 4; the small cases are pinned from the
/// known edge counts |E(M_0..M_4)| = 0, 0, 0, 3, 4.
pub fn edge_count_m_closed(n: u32) -> BigUint {
    match n {
        0..=2 => BigUint::ZERO,
        3 => BigUint::from(3u32),
        _ => BigUint::from(n) * lucas(n - 3),
    }
}

/// Coefficients of x^3 .. x^max_n of
/// (3 - 2x + 4x^2 - 4x^3 - 3x^4) * x^3 / (1 - x - x^2)^2,
/// the generating function of |E(M_n)|, by exact integer long division of
/// the coefficient vectors.
pub fn edge_gf_coefficients(max_n: u32) -> Result<Vec<BigUint>> {
    if max_n < 3 {
        return Err(Error::IndexOutOfRange {
            n: max_n,
            min: 3,
            what: "edge_gf_coefficients",
        });
    }
    // numerator (3 - 2x + 4x^2 - 4x^3 - 3x^4) * x^3
    let numerator: [i64; 8] = [0, 0, 0, 3, -2, 4, -4, -3];
    // denominator (1 - x - x^2)^2 = 1 - 2x - x^2 + 2x^3 + x^4
    let denominator: [i64; 5] = [1, -2, -1, 2, 1];
    let mut series: Vec<BigInt> = Vec::with_capacity(max_n as usize + 1);
    for i in 0..=max_n as usize {
        let mut c = BigInt::from(*numerator.get(i).unwrap_or(&0));
        for (j, d) in denominator.iter().enumerate().skip(1) {
            if j > i {
                break;
            }
            c -= d * &series[i - j];
        }
        series.push(c);
    }
    Ok(series
        .into_iter()
        .skip(3)
        .map(|c| {
            c.to_biguint()
                .expect("edge-count coefficients are nonnegative")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn fib_initial_values_and_list() {
        assert_eq!(fib(0), big(0));
        assert_eq!(fib(1), big(1));
        assert_eq!(fib(7), big(13));
        let expected: Vec<u64> = vec![
            0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987, 1597, 2584,
        ];
        for (n, v) in expected.iter().enumerate() {
            assert_eq!(fib(n as u32), big(*v));
        }
    }

    #[test]
    fn lucas_initial_values_and_list() {
        assert_eq!(lucas(0), big(2));
        assert_eq!(lucas(4), big(7));
        assert_eq!(lucas(16), big(2207));
        let expected: Vec<u64> = vec![
            2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322, 521, 843, 1364, 2207,
        ];
        for (n, v) in expected.iter().enumerate() {
            assert_eq!(lucas(n as u32), big(*v));
        }
    }

    #[test]
    fn assoc_mersenne_list() {
        let expected: Vec<u64> = vec![
            0, 1, 1, 4, 5, 11, 16, 29, 45, 76, 121, 199, 320, 521, 841, 1364, 2205,
        ];
        for (n, v) in expected.iter().enumerate() {
            assert_eq!(assoc_mersenne(n as u32), big(*v), "n={n}");
        }
        assert_eq!(assoc_mersenne(5), big(11));
        assert_eq!(assoc_mersenne(16), big(2205));
        assert_eq!(assoc_mersenne(0), big(0));
    }

    #[test]
    fn assoc_mersenne_equals_lucas_shift() {
        // M(n) = L(n) - 1 - (-1)^n for all n
        for n in 0..=64u32 {
            let adjust = if n % 2 == 0 { 2u32 } else { 0u32 };
            assert_eq!(assoc_mersenne(n) + adjust, lucas(n), "n={n}");
        }
    }

    #[test]
    fn lucas_from_fib_examples() {
        assert_eq!(lucas_from_fib(5, 1).unwrap(), big(11));
        assert_eq!(lucas_from_fib(5, 2).unwrap(), big(11));
        assert_eq!(lucas_from_fib(1, 1).unwrap(), big(1));
    }

    #[test]
    fn lucas_from_fib_matches_lucas_for_all_k() {
        for n in 2..=40u32 {
            for k in 1..=n {
                assert_eq!(lucas_from_fib(n, k).unwrap(), lucas(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn lucas_from_fib_rejects_zero_k() {
        assert!(matches!(lucas_from_fib(5, 0), Err(Error::ZeroIndex)));
        assert!(lucas_from_fib(3, 5).is_err());
    }

    #[test]
    fn edge_count_closed_examples() {
        assert_eq!(edge_count_m_closed(7), big(49));
        assert_eq!(edge_count_m_closed(6), big(24));
        assert_eq!(edge_count_m_closed(2), big(0));
        assert_eq!(edge_count_m_closed(3), big(3));
        assert_eq!(edge_count_m_closed(4), big(4));
        assert_eq!(edge_count_m_closed(5), big(15));
        assert_eq!(edge_count_m_closed(12), big(912));
    }

    #[test]
    fn gf_coefficients_examples() {
        assert_eq!(edge_gf_coefficients(3).unwrap(), vec![big(3)]);
        assert_eq!(edge_gf_coefficients(5).unwrap(), vec![big(3), big(4), big(15)]);
        let coeffs = edge_gf_coefficients(7).unwrap();
        assert_eq!(coeffs.last().unwrap(), &big(49));
        assert!(edge_gf_coefficients(2).is_err());
    }

    #[test]
    fn gf_coefficients_match_closed_form() {
        let coeffs = edge_gf_coefficients(40).unwrap();
        for n in 3..=40u32 {
            assert_eq!(coeffs[(n - 3) as usize], edge_count_m_closed(n), "n={n}");
        }
    }

    #[test]
    fn values_exceed_u64_without_overflow() {
        // L(100) = 792070839848372253127; u64 tops out around 1.8e19
        assert_eq!(lucas(100).to_string(), "792070839848372253127");
        assert_eq!(lucas_from_fib(100, 99).unwrap(), lucas(100));
    }
}
