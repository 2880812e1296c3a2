//! Ordered Bell numbers and the pattern-counting comparison.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combin::binom;
use crate::error::{Error, Result};
use crate::rational::Rational;

fn binom_big(n: u32, k: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of total preorders on `m` labelled elements, by the recurrence
/// `H_m = Σ_{i=1..m} C(m,i) H_{m-i}`.
pub fn ordered_bell(m: u32) -> BigUint {
    let mut h: Vec<BigUint> = Vec::with_capacity(m as usize + 1);
    h.push(BigUint::one());
    for j in 1..=m {
        let mut acc = BigUint::zero();
        for i in 1..=j {
            acc += binom_big(j, i) * &h[(j - i) as usize];
        }
        h.push(acc);
    }
    h.pop().expect("non-empty")
}

/// [`ordered_bell`] cross-checked against enumeration of the preorders for
/// `m <= 7`, and against `H_m <= m^m`.
pub fn ordered_bell_verified(m: u32) -> Result<BigUint> {
    let value = ordered_bell(m);
    if m <= 7 {
        let enumerated = crate::oracles::enumerate_preorders(m as usize)?.len();
        if BigUint::from(enumerated) != value {
            return Err(Error::Unverified(alloc::format!(
                "H_{m}: recurrence {value} but enumeration {enumerated}"
            )));
        }
    }
    if m >= 1 && value > BigUint::from(m).pow(m) {
        return Err(Error::Unverified(alloc::format!("H_{m} exceeds {m}^{m}")));
    }
    Ok(value)
}

/// The two counts compared in the non-occurrence argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub h: u32,
    pub k: u32,
    /// `H_{h-1} · 2^C(h-1,k)`: patterns on `h` ordered vertices that can occur.
    pub a: BigUint,
    /// `(h-1)^(h-1) · 2^C(h-1,k)`, using `H_{h-1} <= (h-1)^(h-1)`.
    pub a_relaxed: BigUint,
    /// `2^C(h,k+1) / h!`: lower bound on pattern classes up to relabelling.
    pub b: Rational,
    pub a_below_b: bool,
    pub a_relaxed_below_b: bool,
    /// `h!(h-1)^(h-1) < 2^((h-k-1)/(k+1) · C(h-1,k))`, the closed form of
    /// `A'/B < 1`, evaluated independently of the two sides.
    pub closed_form_below_one: bool,
    /// `k >= 3` and `h >= k + 5`, where the comparison is claimed to hold.
    pub claimed: bool,
}

/// Exact comparison of the counts for `h` vertices and base uniformity `k`.
pub fn count_bound_check(h: u32, k: u32) -> Result<BoundCheck> {
    if k < 2 || h < k + 1 {
        return Err(Error::Param(alloc::format!("need k >= 2 and h > k, got h = {h}, k = {k}")));
    }
    let low = binom(h as u64 - 1, k as u64);
    let top = binom(h as u64, k as u64 + 1);
    let fact: BigUint = (1..=h).map(BigUint::from).product();
    let a = ordered_bell(h - 1) << low as usize;
    let a_relaxed = BigUint::from(h - 1).pow(h - 1) << low as usize;
    let two_top = BigUint::one() << top as usize;
    // A < 2^top / h!  <=>  A · h! < 2^top
    let a_below_b = &a * &fact < two_top;
    let a_relaxed_below_b = &a_relaxed * &fact < two_top;
    // (h!(h-1)^(h-1))^(k+1) < 2^((h-k-1) C(h-1,k))
    let lhs = (&fact * BigUint::from(h - 1).pow(h - 1)).pow(k + 1);
    let closed_form_below_one = lhs < BigUint::one() << (low * (h - k - 1) as u64) as usize;
    Ok(BoundCheck {
        h,
        k,
        b: Rational::new(two_top.into(), fact.into()),
        a,
        a_relaxed,
        a_below_b,
        a_relaxed_below_b,
        closed_form_below_one,
        claimed: k >= 3 && h >= k + 5,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordered_bell_values() {
        let v: Vec<u64> = (0..=7).map(|m| ordered_bell(m).try_into().unwrap()).collect();
        assert_eq!(v, [1, 1, 3, 13, 75, 541, 4683, 47293]);
        for m in 0..=7 {
            ordered_bell_verified(m).unwrap();
        }
        for m in 1..=12 {
            assert!(ordered_bell(m) <= BigUint::from(m).pow(m));
        }
    }

    #[test]
    fn bound_examples() {
        let c = count_bound_check(8, 3).unwrap();
        assert_eq!(c.a, BigUint::from(47293u32) << 35usize);
        assert!(c.a_below_b && c.claimed);
        let c = count_bound_check(9, 4).unwrap();
        assert!(c.a_relaxed_below_b && c.closed_form_below_one);
        let c = count_bound_check(4, 3).unwrap();
        assert!(!c.claimed && !c.closed_form_below_one);
        assert!(count_bound_check(3, 3).is_err());
        for (h, k) in [(8, 2), (8, 3), (9, 4), (10, 5), (12, 6)] {
            let c = count_bound_check(h, k).unwrap();
            assert!(c.a_below_b && c.a_relaxed_below_b, "h={h} k={k}");
            assert_eq!(c.a_relaxed_below_b, c.closed_form_below_one, "h={h} k={k}");
        }
    }
}
