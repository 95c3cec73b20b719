//! Classical Sylvester resultant of two univariate polynomials.
//!
//! Coefficient vectors are in ascending order (`c[k]` multiplies `x^k`) and
//! their lengths fix the formal degrees, so a zero leading coefficient is
//! allowed.

use crate::error::Result;
use crate::oracles::field::PrimeField;

/// The `(m + n) x (m + n)` Sylvester matrix, descending powers, rows of `f` first.
pub fn sylvester_matrix(f: &[i64], g: &[i64]) -> Vec<Vec<i64>> {
    assert!(!f.is_empty() && !g.is_empty(), "formal degree must be at least 0");
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut s = vec![vec![0; size]; size];
    for r in 0..n {
        for (k, &c) in f.iter().enumerate() {
            s[r][r + m - k] = c;
        }
    }
    for r in 0..m {
        for (k, &c) in g.iter().enumerate() {
            s[n + r][r + n - k] = c;
        }
    }
    s
}

/// `Res(f, g)` over `Z/p`, by the Euclidean algorithm (no determinant involved).
pub fn sylvester_resultant(f: &[u64], g: &[u64], p: u64) -> Result<u64> {
    let field = PrimeField::new(p)?;
    let f: Vec<u64> = f.iter().map(|&c| c % p).collect();
    let g: Vec<u64> = g.iter().map(|&c| c % p).collect();
    Ok(resultant(&field, f, g))
}

fn sign(field: &PrimeField, odd: bool, x: u64) -> u64 {
    if odd {
        field.neg(x)
    } else {
        x
    }
}

fn resultant(field: &PrimeField, f: Vec<u64>, g: Vec<u64>) -> u64 {
    assert!(!f.is_empty() && !g.is_empty(), "formal degree must be at least 0");
    let (m, n) = (f.len() - 1, g.len() - 1);
    if m == 0 {
        return field.pow(f[0], n as u64);
    }
    if n == 0 {
        return field.pow(g[0], m as u64);
    }
    if f[m] == 0 {
        // expand along the column where only g's leading coefficient survives
        let rest = resultant(field, f[..m].to_vec(), g.clone());
        return sign(field, n % 2 == 1, field.mul(g[n], rest));
    }
    if g[n] == 0 || m > n {
        return sign(field, m * n % 2 == 1, resultant(field, g, f));
    }
    // m <= n, both leading coefficients nonzero: replace g by g mod f
    let mut r = g;
    let lead_inv = field.inv(f[m]);
    for top in (m..=n).rev() {
        let q = field.mul(r[top], lead_inv);
        if q != 0 {
            for k in 0..=m {
                r[top - m + k] = field.sub(r[top - m + k], field.mul(q, f[k]));
            }
        }
    }
    r.truncate(m);
    let scale = field.pow(f[m], (n + 1 - m) as u64);
    field.mul(scale, resultant(field, f, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::field::{ff_det, DEFAULT_PRIME};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const P: u64 = DEFAULT_PRIME;

    fn det_of(f: &[u64], g: &[u64]) -> u64 {
        let fi: Vec<i64> = f.iter().map(|&c| c as i64).collect();
        let gi: Vec<i64> = g.iter().map(|&c| c as i64).collect();
        let s: Vec<Vec<u64>> = sylvester_matrix(&fi, &gi)
            .into_iter()
            .map(|r| r.into_iter().map(|c| c as u64).collect())
            .collect();
        ff_det(&s, P).unwrap()
    }

    #[test]
    fn common_root_gives_zero() {
        // x - 1 twice
        let f = [P - 1, 1];
        assert_eq!(sylvester_resultant(&f, &f, P), Ok(0));
    }

    #[test]
    fn linear_pair() {
        // f = u00 + u01 x, g = u10 + u11 x: Res = u01 u10 - u00 u11
        let (u00, u01, u10, u11) = (3, 5, 7, 11);
        let expected = (u01 * u10 + P - u00 * u11) % P;
        assert_eq!(sylvester_resultant(&[u00, u01], &[u10, u11], P), Ok(expected));
        assert_eq!(det_of(&[u00, u01], &[u10, u11]), expected);
    }

    #[test]
    fn matrix_layout() {
        let s = sylvester_matrix(&[1, 2, 3], &[4, 5]);
        assert_eq!(s, vec![vec![3, 2, 1], vec![5, 4, 0], vec![0, 5, 4]]);
    }

    #[test]
    fn euclid_matches_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let m = rng.gen_range(0..5);
            let n = rng.gen_range(0..5);
            let mut f: Vec<u64> = (0..=m).map(|_| rng.gen_range(0..P)).collect();
            let mut g: Vec<u64> = (0..=n).map(|_| rng.gen_range(0..P)).collect();
            // exercise vanishing leading coefficients too
            if rng.gen_bool(0.3) {
                f[m] = 0;
            }
            if rng.gen_bool(0.3) {
                g[n] = 0;
            }
            assert_eq!(sylvester_resultant(&f, &g, P).unwrap(), det_of(&f, &g), "{f:?} {g:?}");
        }
    }

    #[test]
    fn small_prime_exhaustive() {
        let p = 5;
        for code in 0..5u64.pow(5) {
            let d: Vec<u64> = (0..5).map(|k| code / 5u64.pow(k) % 5).collect();
            let (f, g) = (&d[..2], &d[2..]);
            let fi: Vec<i64> = f.iter().map(|&c| c as i64).collect();
            let gi: Vec<i64> = g.iter().map(|&c| c as i64).collect();
            let s: Vec<Vec<u64>> = sylvester_matrix(&fi, &gi)
                .into_iter()
                .map(|r| r.into_iter().map(|c| c as u64).collect())
                .collect();
            assert_eq!(sylvester_resultant(f, g, p).unwrap(), ff_det(&s, p).unwrap());
        }
    }
}
