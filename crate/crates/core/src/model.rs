//! Supports, lattice points and the combinatorial labels attached to them.
//!
//! A box system has `n + 1` supports in `Z^n`,
//! `A_i = { b : 0 <= b_j <= a[i][j] }`, all anchored at the origin. The
//! bounds of rows `0..n-1` must be nondecreasing in every column; the last
//! row is free.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of `Z^n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    /// `self - minus + plus`, coordinatewise.
    pub fn shifted(&self, minus: &LatticePoint, plus: &LatticePoint) -> LatticePoint {
        LatticePoint(
            self.0
                .iter()
                .zip(minus.iter())
                .zip(plus.iter())
                .map(|((b, m), p)| b - m + p)
                .collect(),
        )
    }
}

impl Deref for LatticePoint {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(v: [i64; N]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The bounds `a[i][j]` of a box system, validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonotopeSystem {
    bounds: Vec<Vec<i64>>,
    /// `cuts[j][k] = a[0][j] + ... + a[k-1][j]`, for `k = 0..=n+1`.
    cuts: Vec<Vec<i64>>,
}

impl ZonotopeSystem {
    pub fn new(bounds: Vec<Vec<i64>>) -> Result<Self> {
        validate_zonotope(bounds)
    }

    fn from_bounds(bounds: Vec<Vec<i64>>) -> Self {
        let n = bounds.len() - 1;
        let cuts = (0..n)
            .map(|j| {
                let mut acc = 0;
                let mut c = Vec::with_capacity(n + 2);
                c.push(0);
                for row in &bounds {
                    acc += row[j];
                    c.push(acc);
                }
                c
            })
            .collect();
        Self { bounds, cuts }
    }

    /// Rank of the lattice.
    pub fn n(&self) -> usize {
        self.bounds.len() - 1
    }

    pub fn bounds(&self) -> &[Vec<i64>] {
        &self.bounds
    }

    pub fn bound(&self, i: usize, j: usize) -> i64 {
        self.bounds[i][j]
    }

    /// `a[0][j] + ... + a[k-1][j]`.
    pub fn cut(&self, j: usize, k: usize) -> i64 {
        self.cuts[j][k]
    }

    /// Column sum `a[0][j] + ... + a[n][j]`, the width of the point window in coordinate `j`.
    pub fn width(&self, j: usize) -> i64 {
        self.cuts[j][self.n() + 1]
    }

    /// Number of lattice points in the translated Minkowski sum.
    pub fn num_points(&self) -> u128 {
        (0..self.n()).map(|j| self.width(j) as u128).product()
    }

    pub fn contains(&self, b: &[i64]) -> bool {
        b.len() == self.n() && b.iter().enumerate().all(|(j, &x)| 0 <= x && x < self.width(j))
    }

    /// The vertex of `A_i` equal to `a[i][j]` on the coordinates in `upper` and 0 elsewhere.
    pub fn vertex(&self, i: usize, upper: impl Fn(usize) -> bool) -> LatticePoint {
        LatticePoint((0..self.n()).map(|j| if upper(j) { self.bounds[i][j] } else { 0 }).collect())
    }

    /// All points of the box support `A_i`, lexicographically.
    pub fn support_points(&self, i: usize) -> Vec<LatticePoint> {
        box_points(&self.bounds[i].iter().map(|&a| a + 1).collect::<Vec<_>>())
    }

    /// The same system with the last support collapsed to the origin.
    ///
    /// This breaks the positivity invariant on purpose: the resulting system
    /// has a resultant equal to a pure power of the constant coefficient of
    /// the last polynomial, which makes it a closed-form test case.
    pub fn degenerate_last_support(&self) -> Self {
        let mut bounds = self.bounds.clone();
        let n = self.n();
        bounds[n].iter_mut().for_each(|a| *a = 0);
        Self::from_bounds(bounds)
    }
}

/// Lexicographic enumeration of `{ b : 0 <= b_j < widths[j] }`.
pub(crate) fn box_points(widths: &[i64]) -> Vec<LatticePoint> {
    let total: usize = widths.iter().map(|&w| w.max(0) as usize).product();
    let mut out = Vec::with_capacity(total);
    if total == 0 {
        return out;
    }
    let mut cur = vec![0i64; widths.len()];
    loop {
        out.push(LatticePoint(cur.clone()));
        let mut k = widths.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < widths[k] {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Checks the standing assumptions on box bounds: `(n+1) x n` shape,
/// positive entries, and rows `0..n-1` nondecreasing in each column.
pub fn validate_zonotope(bounds: Vec<Vec<i64>>) -> Result<ZonotopeSystem> {
    if bounds.len() < 2 {
        return Err(Error::BadShape(format!(
            "need n + 1 >= 2 rows of bounds, got {}",
            bounds.len()
        )));
    }
    let n = bounds.len() - 1;
    if let Some((i, row)) = bounds.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::BadShape(format!(
            "row {i} has {} entries, expected n = {n}",
            row.len()
        )));
    }
    for (i, row) in bounds.iter().enumerate() {
        for (j, &value) in row.iter().enumerate() {
            if value < 1 {
                return Err(Error::NonPositiveBound { row: i, col: j, value });
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        for j in 0..n {
            if bounds[i][j] > bounds[i + 1][j] {
                return Err(Error::OrderingViolated {
                    row: i,
                    col: j,
                    above: bounds[i][j],
                    below: bounds[i + 1][j],
                });
            }
        }
    }
    Ok(ZonotopeSystem::from_bounds(bounds))
}

/// Generators `v_1..v_n` of the zonotope segments, stored as columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    columns: Vec<Vec<i64>>,
}

impl GeneratorMatrix {
    pub fn from_columns(columns: Vec<Vec<i64>>) -> Result<Self> {
        let n = columns.len();
        if n == 0 || columns.iter().any(|c| c.len() != n) {
            return Err(Error::BadShape("generator matrix must be square and nonempty".into()));
        }
        Ok(Self { columns })
    }

    pub fn identity(n: usize) -> Self {
        let columns = (0..n)
            .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
            .collect();
        Self { columns }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// Entry in row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j][i]
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &GeneratorMatrix) -> Result<GeneratorMatrix> {
        let n = self.dim();
        if other.dim() != n {
            return Err(Error::BadShape("generator dimensions differ".into()));
        }
        let columns = (0..n)
            .map(|j| (0..n).map(|i| (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum()).collect())
            .collect();
        Ok(Self { columns })
    }

    /// Exact integer determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        let n = self.dim();
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j) as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&r| m[r][k] != 0) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }
}

/// Reduces a system whose segments are multiples of the columns of `gen`
/// to the standard box system with the same bounds.
///
/// The resultant of the original supports is the box resultant raised to
/// the returned exponent `|det V|`.
pub fn normalize_zonotope(
    gen: &GeneratorMatrix,
    bounds: Vec<Vec<i64>>,
) -> Result<(ZonotopeSystem, u64)> {
    let sys = validate_zonotope(bounds)?;
    if gen.dim() != sys.n() {
        return Err(Error::BadShape(format!(
            "generator matrix is {0}x{0} but the system has rank {1}",
            gen.dim(),
            sys.n()
        )));
    }
    let det = gen.determinant();
    if det == 0 {
        return Err(Error::SingularGenerators);
    }
    let exponent = u64::try_from(det.unsigned_abs())
        .map_err(|_| Error::BadShape("generator determinant overflows u64".into()))?;
    Ok((sys, exponent))
}

/// Group sizes `n_1..n_s` and multidegrees `d[i][l]` of `n + 1` multihomogeneous polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiHomoSystem {
    group_sizes: Vec<usize>,
    degrees: Vec<Vec<i64>>,
}

impl MultiHomoSystem {
    pub fn new(group_sizes: Vec<usize>, degrees: Vec<Vec<i64>>) -> Result<Self> {
        if group_sizes.is_empty() || group_sizes.contains(&0) {
            return Err(Error::BadShape("group sizes must be positive and nonempty".into()));
        }
        let n: usize = group_sizes.iter().sum();
        let s = group_sizes.len();
        if degrees.len() != n + 1 {
            return Err(Error::BadShape(format!(
                "expected n + 1 = {} rows of multidegrees, got {}",
                n + 1,
                degrees.len()
            )));
        }
        if let Some((i, row)) = degrees.iter().enumerate().find(|(_, r)| r.len() != s) {
            return Err(Error::BadShape(format!(
                "multidegree row {i} has {} entries, expected s = {s}",
                row.len()
            )));
        }
        for (i, row) in degrees.iter().enumerate() {
            for (l, &value) in row.iter().enumerate() {
                if value < 1 {
                    return Err(Error::NonPositiveBound { row: i, col: l, value });
                }
            }
        }
        for i in 0..n - 1 {
            for l in 0..s {
                if degrees[i][l] > degrees[i + 1][l] {
                    return Err(Error::OrderingViolated {
                        row: i,
                        col: l,
                        above: degrees[i][l],
                        below: degrees[i + 1][l],
                    });
                }
            }
        }
        Ok(Self { group_sizes, degrees })
    }

    pub fn n(&self) -> usize {
        self.group_sizes.iter().sum()
    }

    pub fn num_groups(&self) -> usize {
        self.group_sizes.len()
    }

    pub fn group_sizes(&self) -> &[usize] {
        &self.group_sizes
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn degree(&self, i: usize, l: usize) -> i64 {
        self.degrees[i][l]
    }

    /// Total degree `d[0][l] + ... + d[n][l]` of group `l`.
    pub fn total_degree(&self, l: usize) -> i64 {
        self.degrees.iter().map(|r| r[l]).sum()
    }
}

/// `phi : {1..n} -> {0..n}`, stored zero-based on the domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TypeFunction(pub Vec<usize>);

impl TypeFunction {
    pub fn values(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for TypeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// `t_i = |phi^{-1}(i)|` for `i = 0..=n`; always sums to `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TypeVector(pub Vec<usize>);

impl TypeVector {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Exactly one zero entry.
    pub fn is_mixed(&self) -> bool {
        self.0.iter().filter(|&&t| t == 0).count() == 1
    }

    /// Prefix sums bounded by `t_0 + ... + t_I <= I + 1` for all `I < n`.
    pub fn is_greedy(&self) -> bool {
        let n = self.0.len() - 1;
        let mut acc = 0;
        self.0[..n].iter().enumerate().all(|(i, &t)| {
            acc += t;
            acc <= i + 1
        })
    }

    /// Largest index with a zero entry.
    pub fn last_zero(&self) -> Option<usize> {
        self.0.iter().rposition(|&t| t == 0)
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        TypeFunction(self.0.clone()).fmt(f)
    }
}

pub fn type_vector_of(phi: &TypeFunction, n: usize) -> TypeVector {
    let mut t = vec![0; n + 1];
    for &v in phi.values() {
        t[v] += 1;
    }
    TypeVector(t)
}

/// The pair `(i(b), a(b))`: which polynomial fills row `b`, and the vertex
/// of its support that sits on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowContent {
    pub poly: usize,
    pub vertex: LatticePoint,
}

/// Symbolic coefficient `u[i][a]` of the monomial `x^a` in polynomial `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoeffRef {
    pub poly: usize,
    pub support: LatticePoint,
}

impl fmt::Display for CoeffRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u[{}][{}]", self.poly, self.support)
    }
}
