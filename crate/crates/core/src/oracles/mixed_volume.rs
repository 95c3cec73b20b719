//! Mixed volumes of boxes and of products of simplices.
//!
//! For boxes `P_k = prod_j [0, a[k][j]]` the volume of `sum_k lambda_k P_k`
//! is `prod_j (sum_k lambda_k a[k][j])`, so the mixed volume is the
//! coefficient of `lambda_1 ... lambda_n` in that product. It is computed
//! here by literally expanding the product, and separately as a matrix
//! permanent (Ryser's formula).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::MultiHomoSystem;

/// Coefficient of `x^target` in `prod_f (sum_v forms[f][v] x_v)`, by full expansion.
fn expand_coefficient(forms: &[Vec<i64>], target: &[u32]) -> i128 {
    let vars = target.len();
    let mut poly: HashMap<Vec<u32>, i128> = HashMap::from([(vec![0; vars], 1)]);
    for form in forms {
        let mut next: HashMap<Vec<u32>, i128> = HashMap::with_capacity(poly.len() * vars);
        for (mono, coeff) in &poly {
            for (v, &c) in form.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let mut m = mono.clone();
                m[v] += 1;
                *next.entry(m).or_insert(0) += coeff * c as i128;
            }
        }
        poly = next;
    }
    poly.get(target).copied().unwrap_or(0)
}

fn check_shape(bounds: &[Vec<i64>], excluded_row: usize) -> Result<usize> {
    if bounds.len() < 2 {
        return Err(Error::BadShape("need at least two rows of bounds".into()));
    }
    let n = bounds.len() - 1;
    if bounds.iter().any(|r| r.len() != n) {
        return Err(Error::BadShape(format!("bounds must be {} x {n}", n + 1)));
    }
    if excluded_row > n {
        return Err(Error::BadShape(format!("excluded row {excluded_row} out of 0..={n}")));
    }
    Ok(n)
}

/// Mixed volume of all boxes except `excluded_row`, by polynomial expansion.
pub fn mixed_volume(bounds: &[Vec<i64>], excluded_row: usize) -> Result<u128> {
    let n = check_shape(bounds, excluded_row)?;
    let rows: Vec<&Vec<i64>> =
        bounds.iter().enumerate().filter(|(k, _)| *k != excluded_row).map(|(_, r)| r).collect();
    let forms: Vec<Vec<i64>> = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    Ok(expand_coefficient(&forms, &vec![1; n]) as u128)
}

/// Same quantity as [`mixed_volume`], as the permanent of the remaining rows.
pub fn mixed_volume_permanent(bounds: &[Vec<i64>], excluded_row: usize) -> Result<u128> {
    check_shape(bounds, excluded_row)?;
    let rows: Vec<Vec<i64>> = bounds
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != excluded_row)
        .map(|(_, r)| r.clone())
        .collect();
    Ok(permanent(&rows) as u128)
}

/// Ryser's inclusion-exclusion formula.
pub fn permanent(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total: i128 = 0;
    for subset in 1u64..(1 << n) {
        let prod: i128 = m
            .iter()
            .map(|row| {
                (0..n).filter(|&j| subset >> j & 1 == 1).map(|j| row[j] as i128).sum::<i128>()
            })
            .product();
        let sign = if (n - subset.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
        total += sign * prod;
    }
    total
}

/// Degree of the multihomogeneous resultant in the coefficients of polynomial `excluded`:
/// the coefficient of `prod_l z_l^{n_l}` in `prod_{k != excluded} (sum_l d[k][l] z_l)`.
pub fn multihomo_mixed_volume(sys: &MultiHomoSystem, excluded: usize) -> Result<u128> {
    if excluded > sys.n() {
        return Err(Error::BadShape(format!("excluded row {excluded} out of 0..={}", sys.n())));
    }
    let forms: Vec<Vec<i64>> = sys
        .degrees()
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != excluded)
        .map(|(_, r)| r.clone())
        .collect();
    let target: Vec<u32> = sys.group_sizes().iter().map(|&s| s as u32).collect();
    Ok(expand_coefficient(&forms, &target) as u128)
}

/// Degree column of the published size table for unit boxes, `n = 2..=5`.
/// Kept only so reports can flag where it departs from the computed degree.
pub const REFERENCE_UNIT_BOX_DEGREES: [(usize, u128); 4] = [(2, 6), (3, 24), (4, 360), (5, 3720)];

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeAudit {
    pub n: usize,
    /// Sum of the mixed volumes over all excluded rows.
    pub computed: u128,
    pub reference: u128,
}

impl DegreeAudit {
    pub fn agrees(&self) -> bool {
        self.computed == self.reference
    }
}

/// Compares the total degree of a unit-box system with the reference table, if listed.
pub fn degree_audit(bounds: &[Vec<i64>]) -> Option<DegreeAudit> {
    let n = bounds.len().checked_sub(1)?;
    if !bounds.iter().flatten().all(|&a| a == 1) {
        return None;
    }
    let &(_, reference) = REFERENCE_UNIT_BOX_DEGREES.iter().find(|(m, _)| *m == n)?;
    let computed = (0..=n).map(|i| mixed_volume(bounds, i).ok()).sum::<Option<u128>>()?;
    Some(DegreeAudit { n, computed, reference })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_boxes() {
        for i in 0..3 {
            assert_eq!(mixed_volume(&vec![vec![1, 1]; 3], i), Ok(2));
        }
        for i in 0..4 {
            assert_eq!(mixed_volume(&vec![vec![1; 3]; 4], i), Ok(6));
        }
    }

    #[test]
    fn two_by_two_expansion() {
        // (l0 + 2 l1)(2 l0 + 3 l1): coefficient of l0 l1 is 1*3 + 2*2
        let bounds = vec![vec![1, 2], vec![2, 3], vec![5, 5]];
        assert_eq!(mixed_volume(&bounds, 2), Ok(7));
        assert_eq!(mixed_volume_permanent(&bounds, 2), Ok(7));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(mixed_volume(&[vec![1, 1], vec![1, 1]], 0), Err(Error::BadShape(_))));
        assert!(matches!(mixed_volume(&vec![vec![1, 1]; 3], 3), Err(Error::BadShape(_))));
    }

    #[test]
    fn multihomogeneous_degrees() {
        let ex = MultiHomoSystem::new(vec![2], vec![vec![2], vec![2], vec![1]]).unwrap();
        let mv: Vec<u128> = (0..3).map(|i| multihomo_mixed_volume(&ex, i).unwrap()).collect();
        assert_eq!(mv, vec![2, 2, 4]);
        let bil = MultiHomoSystem::new(vec![1, 1], vec![vec![1, 1]; 3]).unwrap();
        assert_eq!(multihomo_mixed_volume(&bil, 0), Ok(2));
    }

    #[test]
    fn degree_table_audit() {
        let a = degree_audit(&vec![vec![1; 2]; 3]).unwrap();
        assert!(a.agrees());
        let a = degree_audit(&vec![vec![1; 4]; 5]).unwrap();
        assert_eq!((a.computed, a.reference), (120, 360));
        assert!(!a.agrees());
        let a = degree_audit(&vec![vec![1; 5]; 6]).unwrap();
        assert_eq!((a.computed, a.reference), (720, 3720));
        assert!(degree_audit(&[vec![2, 2], vec![2, 2], vec![1, 1]]).is_none());
    }
}
