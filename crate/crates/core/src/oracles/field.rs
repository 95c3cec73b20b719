//! Arithmetic and linear algebra over `Z/p`.

use crate::error::{Error, Result};

/// 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let f = PrimeField { p: n };
    'witness: for &a in &BASES {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = f.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, x: i128) -> u64 {
        x.rem_euclid(self.p as i128) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p <= 1 << 62 {
            return (a % self.p + b % self.p) % self.p;
        }
        ((a as u128 + b as u128) % self.p as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.p - b % self.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.p <= 1 << 32 {
            return (a % self.p) * (b % self.p) % self.p;
        }
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    /// Determinant by Gaussian elimination with row pivoting. The empty matrix has determinant 1.
    pub fn det(&self, matrix: &[Vec<u64>]) -> u64 {
        let n = matrix.len();
        assert!(matrix.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
        let mut m: Vec<Vec<u64>> =
            matrix.iter().map(|r| r.iter().map(|&x| x % self.p).collect()).collect();
        let mut det = 1 % self.p;
        for k in 0..n {
            let Some(piv) = (k..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            if piv != k {
                m.swap(piv, k);
                det = self.neg(det);
            }
            det = self.mul(det, m[k][k]);
            let inv = self.inv(m[k][k]);
            let (top, bottom) = m.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                if row[k] == 0 {
                    continue;
                }
                let factor = self.mul(row[k], inv);
                if self.p <= 1 << 32 {
                    // products fit in u64; one reduction per entry
                    let p = self.p;
                    for (x, &y) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                        let v = *x + p - factor * y % p;
                        *x = if v >= p { v - p } else { v };
                    }
                } else {
                    for c in k..n {
                        row[c] = self.sub(row[c], self.mul(factor, pivot_row[c]));
                    }
                }
            }
        }
        det
    }
}

/// Determinant over `Z/p`.
pub fn ff_det(matrix: &[Vec<u64>], p: u64) -> Result<u64> {
    let f = PrimeField::new(p)?;
    if matrix.iter().any(|r| r.len() != matrix.len()) {
        return Err(Error::BadShape("determinant of a non-square matrix".into()));
    }
    Ok(f.det(matrix))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes = [2u64, 3, 7, 65_537, DEFAULT_PRIME, 4_294_967_291, 18_446_744_073_709_551_557];
        assert!(primes.iter().all(|&p| is_prime(p)));
        let composites = [0u64, 1, 4, 561, 1_105, 4_294_967_297, 3_215_031_751];
        assert!(composites.iter().all(|&c| !is_prime(c)));
    }

    #[test]
    fn small_determinants() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(ff_det(&id, DEFAULT_PRIME), Ok(1));
        assert_eq!(ff_det(&[vec![1, 2], vec![3, 4]], 7), Ok(5));
        let rep = vec![vec![3, 1, 4], vec![1, 5, 9], vec![3, 1, 4]];
        assert_eq!(ff_det(&rep, DEFAULT_PRIME), Ok(0));
        assert_eq!(ff_det(&[], 7), Ok(1));
        assert_eq!(ff_det(&[vec![1]], 8), Err(Error::NotPrime(8)));
    }

    #[test]
    fn pivoting_tracks_sign() {
        // det [[0,1],[1,0]] = -1
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.det(&[vec![0, 1], vec![1, 0]]), 100);
    }
}
