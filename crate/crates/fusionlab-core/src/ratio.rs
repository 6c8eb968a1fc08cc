//! Exact nonnegative rationals.
//!
//! All commuting degrees are carried as reduced fractions; nothing in a
//! verdict path ever rounds through floating point. Decimal rendering is
//! provided for display only.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A reduced fraction of nonnegative integers with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactRatio {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl ExactRatio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "denominator must be positive");
        if num == 0 {
            return ExactRatio { num: 0, den: 1 };
        }
        let g = gcd(num, den);
        ExactRatio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Self {
        ExactRatio { num: 1, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn mul(&self, other: &ExactRatio) -> ExactRatio {
        // reduce cross-wise first so u64 stays comfortable
        let g1 = gcd(self.num, other.den);
        let g2 = gcd(other.num, self.den);
        ExactRatio::new(
            (self.num / g1) * (other.num / g2),
            (self.den / g2) * (other.den / g1),
        )
    }

    /// Decimal approximation, for labeled display only.
    pub fn approx(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let r = ExactRatio::new(6, 8);
        assert_eq!((r.numerator(), r.denominator()), (3, 4));
        assert_eq!(ExactRatio::new(0, 7), ExactRatio::new(0, 1));
    }

    #[test]
    fn ordering_is_exact() {
        let a = ExactRatio::new(1, 3);
        let b = ExactRatio::new(333_333_333, 1_000_000_000);
        assert!(b < a);
        assert!(ExactRatio::new(1, 2) < ExactRatio::new(5, 8));
        assert_eq!(ExactRatio::new(2, 4), ExactRatio::new(1, 2));
    }

    #[test]
    fn multiplication_reduces() {
        let a = ExactRatio::new(2, 3);
        let b = ExactRatio::new(3, 4);
        assert_eq!(a.mul(&b), ExactRatio::new(1, 2));
    }

    #[test]
    fn display_renders_num_slash_den() {
        assert_eq!(ExactRatio::new(5, 8).to_string(), "5/8");
    }
}
