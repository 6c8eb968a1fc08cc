//! Small finite fields GF(p^k) with table-backed arithmetic.
//!
//! Extension fields are built from the hardcoded irreducible polynomials
//! below (ascending coefficients, monic):
//!
//! | field   | polynomial        |
//! |---------|-------------------|
//! | GF(4)   | x^2 + x + 1       |
//! | GF(8)   | x^3 + x + 1       |
//! | GF(9)   | x^2 + 2x + 2      |
//! | GF(16)  | x^4 + x + 1       |
//! | GF(25)  | x^2 + 4x + 2      |
//! | GF(27)  | x^3 + 2x + 1      |
//!
//! Elements are indexed `0..q` by their base-p digit expansion, so index
//! `p` is the generator `x` of the extension.

use crate::error::{Error, Result};

const IRREDUCIBLES: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (3, 3, &[1, 2, 0, 1]),
];

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes `q` as `p^k` for a prime `p`, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut n = q;
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            return if n == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// GF(p^k) for the configured (p, k) pairs; k = 1 needs no polynomial.
#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl Field {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) || k == 0 {
            return Err(Error::InvalidParameter(format!(
                "GF({p}^{k}) is not a prime-power field"
            )));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= 4096)
            .ok_or_else(|| Error::InvalidParameter(format!("field GF({p}^{k}) too large")))?;
        let poly: Vec<u32> = if k == 1 {
            vec![0, 1]
        } else {
            IRREDUCIBLES
                .iter()
                .find(|&&(ip, ik, _)| ip == p && ik == k)
                .map(|&(_, _, c)| c.to_vec())
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "no irreducible polynomial configured for GF({p}^{k})"
                    ))
                })?
        };

        let digits = |mut n: u32| -> Vec<u32> {
            let mut d = vec![0u32; k as usize];
            for slot in d.iter_mut() {
                *slot = n % p;
                n /= p;
            }
            d
        };
        let undigits = |d: &[u32]| -> u32 {
            d.iter().rev().fold(0, |acc, &c| acc * p + c)
        };

        let mut add = vec![0u32; (q * q) as usize];
        let mut mul = vec![0u32; (q * q) as usize];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum);

                // polynomial product reduced modulo the irreducible
                let mut prod = vec![0u32; 2 * k as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for i in (k as usize..prod.len()).rev() {
                    let coeff = prod[i];
                    if coeff == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for (j, &pc) in poly.iter().enumerate().take(k as usize) {
                        let idx = i - k as usize + j;
                        prod[idx] = (prod[idx] + coeff * (p - pc) % p) % p;
                    }
                }
                mul[(a * q + b) as usize] = undigits(&prod[..k as usize]);
            }
        }
        Ok(Field { p, q, add, mul })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        (1..self.q).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> u32 {
        assert!(a != 0);
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(29), Some((29, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn gf4_is_a_field() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.q(), 4);
        for a in 1..4 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        // x^2 = x + 1 under x^2 + x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mult_order(2), 3);
    }

    #[test]
    fn gf9_multiplicative_group_is_cyclic_of_order_8() {
        let f = Field::new(3, 2).unwrap();
        let max = (1..9).map(|a| f.mult_order(a)).max().unwrap();
        assert_eq!(max, 8);
        for a in 1..9 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn prime_field_is_mod_arithmetic() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), 5);
    }

    #[test]
    fn unconfigured_extension_refused() {
        assert!(Field::new(7, 3).is_err());
        assert!(Field::new(6, 1).is_err());
    }
}
