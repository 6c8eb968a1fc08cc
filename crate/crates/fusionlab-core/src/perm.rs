//! Permutations on `{0 .. n-1}` stored as image arrays.
//!
//! Composition is fixed globally as "left acts first":
//! `(p * q)(i) = q[p[i]]`, i.e. apply `p`, then `q`. Points are 0-indexed.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `{0 .. n-1}`, the atom of all computation here.
///
/// Ordering is lexicographic on the image array, which is the canonical
/// element order used for deterministic representatives everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from its image array, validating bijectivity.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img as usize >= n {
                return Err(Error::PointOutOfRange {
                    degree: n,
                    value: img,
                });
            }
            if seen[img as usize] {
                return Err(Error::NotABijection { len: n, point: img });
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation of the given degree from disjoint-cycle data.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt as usize >= degree {
                    return Err(Error::PointOutOfRange {
                        degree,
                        value: pt,
                    });
                }
                images[pt as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`; degrees must match.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = self
            .images
            .iter()
            .map(|&i| other.images[i as usize])
            .collect();
        Permutation { images }
    }

    /// Degree-checked composition, `self` then `other`.
    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                got: other.degree(),
            });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Conjugate `self^by = by^-1 * self * by`.
    pub fn conjugate(&self, by: &Permutation) -> Permutation {
        by.inverse().compose(self).compose(by)
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
        a.inverse().compose(&b.inverse()).compose(a).compose(b)
    }

    pub fn pow(&self, mut exp: i64) -> Permutation {
        let mut base = if exp < 0 {
            exp = -exp;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            exp >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least 2, each starting at its least
    /// point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start as u32 {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start as u32;
            while !seen[p as usize] {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut ord: u64 = 1;
        for cycle in self.cycles() {
            let len = cycle.len() as u64;
            ord = ord / gcd_u64(ord, len) * len;
        }
        ord
    }

    /// True when the order is a power of `p` (the identity counts).
    pub fn is_p_element(&self, p: u32) -> bool {
        let mut ord = self.order();
        while ord % p as u64 == 0 {
            ord /= p as u64;
        }
        ord == 1
    }

    /// True when every prime factor of the order lies in `pi`.
    pub fn is_pi_element(&self, pi: &[u32]) -> bool {
        let mut ord = self.order();
        for &p in pi {
            while ord % p as u64 == 0 {
                ord /= p as u64;
            }
        }
        ord == 1
    }

    /// The pi-part of the element: the power of `self` whose order is the
    /// pi-part of the order of `self`.
    pub fn pi_part(&self, pi: &[u32]) -> Permutation {
        let (pi_ord, rest) = self.order_split(pi);
        // exponent k with k = 0 mod rest, k = 1 mod pi_ord
        if pi_ord == 1 {
            return Permutation::identity(self.degree());
        }
        let mut k: u64 = 0;
        while k % pi_ord != 1 {
            k += rest;
        }
        self.pow(k as i64)
    }

    /// The pi'-part: the power of `self` whose order is coprime to `pi`.
    pub fn pi_part_complement(&self, pi: &[u32]) -> Permutation {
        let (pi_ord, rest) = self.order_split(pi);
        if rest == 1 {
            return Permutation::identity(self.degree());
        }
        let mut k: u64 = 0;
        while k % rest != 1 {
            k += pi_ord;
        }
        self.pow(k as i64)
    }

    /// Splits the order as (pi-part, pi'-part).
    fn order_split(&self, pi: &[u32]) -> (u64, u64) {
        let mut pi_ord: u64 = 1;
        let mut rest = self.order();
        for &p in pi {
            while rest % p as u64 == 0 {
                rest /= p as u64;
                pi_ord *= p as u64;
            }
        }
        (pi_ord, rest)
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[u32]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn rejects_duplicate_image() {
        let err = Permutation::new(vec![0, 0, 1]).unwrap_err();
        assert_eq!(err, Error::NotABijection { len: 3, point: 0 });
    }

    #[test]
    fn involution_squared_is_identity() {
        let t = p(&[1, 0]);
        assert!(t.compose(&t).is_identity());
    }

    #[test]
    fn identity_law() {
        let g = p(&[2, 0, 1, 4, 3]);
        let id = Permutation::identity(5);
        assert_eq!(id.compose(&g), g);
        assert_eq!(g.compose(&id), g);
    }

    #[test]
    fn left_then_right_composition() {
        // (0 1) then (1 2): trace points directly.
        // 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1, so the product is (0 2 1).
        let a = p(&[1, 0, 2]);
        let b = p(&[0, 2, 1]);
        assert_eq!(a.compose(&b), p(&[2, 0, 1]));
        assert_eq!(
            a.compose(&b),
            Permutation::from_cycles(3, &[&[0, 2, 1]]).unwrap()
        );
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let a = p(&[1, 0]);
        let b = p(&[0, 2, 1]);
        assert!(matches!(
            a.try_compose(&b),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn inverse_and_order() {
        let c = Permutation::from_cycles(6, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(c.order(), 6);
        assert!(c.compose(&c.inverse()).is_identity());
        assert_eq!(c.pow(7), c);
        assert_eq!(c.pow(-1), c.inverse());
    }

    #[test]
    fn p_element_and_pi_part() {
        let c = Permutation::from_cycles(6, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert!(!c.is_p_element(2));
        assert!(!c.is_p_element(3));
        assert!(c.is_pi_element(&[2, 3]));
        let two_part = c.pi_part(&[2]);
        assert_eq!(two_part.order(), 2);
        let three_part = c.pi_part(&[3]);
        assert_eq!(three_part.order(), 3);
        assert_eq!(two_part.compose(&three_part), c);
    }

    #[test]
    fn cycle_display() {
        let c = Permutation::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(c.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }
}
