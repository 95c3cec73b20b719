//! Multihomogeneous systems as restrictions of box systems.
//!
//! Variables come in groups of sizes `n_1..n_s`; polynomial `i` has degree
//! `d[i][l]` in group `l`. Writing a point `b` in the basis `W` given by the
//! columns `e_1, e_2 - e_1, ..., e_{n_l} - e_{n_l - 1}` of each group turns
//! its coordinates into suffix sums `lambda_j = b_j + ... + b_{n_l}`. In
//! those coordinates each simplex support `{ b >= 0, sum b <= d }` is a
//! nonincreasing chain `d >= lambda_1 >= ... >= lambda_{n_l} >= 0` inside the
//! box `[0, d]^{n_l}`, so the box machinery (type functions, row content,
//! closure) applies verbatim once restricted to chains.
//!
//! The lattice points of the translated Minkowski sum are the *strict*
//! chains `D_l > lambda_1 > ... > lambda_{n_l} >= 0` with `D_l` the total
//! degree of group `l`. A cell with type function `phi` therefore holds
//! `prod_l prod_k binom(d[k][l], #{ j in group l : phi(j) = k })` points, and
//! only cells whose `phi` is nonincreasing inside every group are occupied.

use crate::error::Result;
use crate::greedy::enumerate_greedy_typefns;
use crate::model::{
    validate_zonotope, LatticePoint, MultiHomoSystem, TypeFunction,
    ZonotopeSystem,
};
use crate::subdivision::Subdivision;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    group_sizes: Vec<usize>,
    /// coordinate -> (group, position inside the group)
    layout: Vec<(usize, usize)>,
    /// total degree per group
    totals: Vec<i64>,
    w: Vec<Vec<i64>>,
    h: Vec<Vec<i64>>,
}

impl Embedding {
    fn new(group_sizes: &[usize], totals: Vec<i64>) -> Self {
        let n: usize = group_sizes.iter().sum();
        let mut layout = Vec::with_capacity(n);
        for (l, &size) in group_sizes.iter().enumerate() {
            layout.extend((0..size).map(|pos| (l, pos)));
        }
        let mut w = vec![vec![0; n]; n];
        let mut h = vec![vec![0; n]; n];
        for r in 0..n {
            for c in 0..n {
                let ((lr, pr), (lc, pc)) = (layout[r], layout[c]);
                if lr != lc {
                    continue;
                }
                w[r][c] = if pr == pc {
                    1
                } else if pc == pr + 1 {
                    -1
                } else {
                    0
                };
                h[r][c] = i64::from(pr >= pc);
            }
        }
        Self { group_sizes: group_sizes.to_vec(), layout, totals, w, h }
    }

    pub fn group_sizes(&self) -> &[usize] {
        &self.group_sizes
    }

    pub fn layout(&self) -> &[(usize, usize)] {
        &self.layout
    }

    /// Block upper-bidiagonal generator matrix; columns are the segment directions.
    pub fn w(&self) -> &[Vec<i64>] {
        &self.w
    }

    /// Block lower-triangular all-ones matrix; columns are the facet normals.
    pub fn h(&self) -> &[Vec<i64>] {
        &self.h
    }

    fn groups(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.group_sizes.iter().scan(0, |start, &size| {
            let r = *start..*start + size;
            *start += size;
            Some(r)
        })
    }

    /// Suffix sums inside each group: coordinates in the basis `W`.
    pub fn zono_coords(&self, b: &[i64]) -> LatticePoint {
        let mut out = vec![0; b.len()];
        for g in self.groups() {
            let mut acc = 0;
            for j in g.rev() {
                acc += b[j];
                out[j] = acc;
            }
        }
        LatticePoint::new(out)
    }

    /// Inverse of [`Embedding::zono_coords`], i.e. `W * lambda`.
    pub fn native_coords(&self, lambda: &[i64]) -> LatticePoint {
        let mut out = vec![0; lambda.len()];
        for g in self.groups() {
            let end = g.end;
            for j in g {
                out[j] = lambda[j] - if j + 1 < end { lambda[j + 1] } else { 0 };
            }
        }
        LatticePoint::new(out)
    }

    /// `lambda_1 >= ... >= lambda_{n_l} >= 0` in every group.
    pub(crate) fn is_support_chain(&self, lambda: &[i64]) -> bool {
        self.groups().all(|g| {
            let s = &lambda[g];
            s.windows(2).all(|w| w[0] >= w[1]) && s.last().is_none_or(|&x| x >= 0)
        })
    }

    /// `D_l > lambda_1 > ... > lambda_{n_l} >= 0` in every group.
    pub(crate) fn is_point_chain(&self, lambda: &[i64]) -> bool {
        self.groups().zip(&self.totals).all(|(g, &total)| {
            let s = &lambda[g];
            s.windows(2).all(|w| w[0] > w[1])
                && s.last().is_none_or(|&x| x >= 0)
                && s.first().is_none_or(|&x| x < total)
        })
    }

    pub(crate) fn num_points(&self) -> u128 {
        self.group_sizes
            .iter()
            .zip(&self.totals)
            .map(|(&size, &total)| binomial(total, size as i64))
            .product()
    }

    /// All strict chains, lexicographically.
    pub(crate) fn chain_points(&self) -> Vec<LatticePoint> {
        let per_group: Vec<Vec<Vec<i64>>> = self
            .group_sizes
            .iter()
            .zip(&self.totals)
            .map(|(&size, &total)| decreasing_sequences(size, total))
            .collect();
        let mut out = vec![Vec::new()];
        for seqs in &per_group {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    seqs.iter().map(move |s| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(s);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(LatticePoint::new).collect()
    }
}

/// Strictly decreasing sequences of `len` values in `[0, below)`, lexicographically.
fn decreasing_sequences(len: usize, below: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, below: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let remaining = (len - cur.len()) as i64;
        let hi = cur.last().copied().unwrap_or(below);
        for x in remaining - 1..hi {
            cur.push(x);
            go(len, below, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, below, &mut Vec::with_capacity(len), &mut out);
    out
}

pub(crate) fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The box system whose bounds repeat each group degree over the group's
/// coordinates, together with the change of basis.
pub fn embed(sys: &MultiHomoSystem) -> Result<(ZonotopeSystem, Embedding)> {
    let emb = Embedding::new(
        sys.group_sizes(),
        (0..sys.num_groups()).map(|l| sys.total_degree(l)).collect(),
    );
    let bounds = sys
        .degrees()
        .iter()
        .map(|row| emb.layout.iter().map(|&(l, _)| row[l]).collect())
        .collect();
    Ok((validate_zonotope(bounds)?, emb))
}

/// Subdivision of the multihomogeneous system, working in [`Embedding::zono_coords`].
pub fn multihomo_subdivision(sys: &MultiHomoSystem) -> Result<Subdivision> {
    let (zono, emb) = embed(sys)?;
    Ok(Subdivision::from_embedding(zono, emb))
}

pub fn zono_coords(b: &LatticePoint, emb: &Embedding) -> LatticePoint {
    emb.zono_coords(b)
}

/// Nonincreasing along positions inside every group.
pub fn is_valid_group_typefn(phi: &TypeFunction, emb: &Embedding) -> bool {
    emb.groups().all(|g| phi.values()[g].windows(2).all(|w| w[0] >= w[1]))
}

/// Points in the cell of `phi`, by the binomial product formula.
pub fn cell_count_multihomo(phi: &TypeFunction, sys: &MultiHomoSystem) -> u128 {
    let n = sys.n();
    let mut counts = vec![vec![0i64; n + 1]; sys.num_groups()];
    let mut j = 0;
    for (l, &size) in sys.group_sizes().iter().enumerate() {
        for _ in 0..size {
            counts[l][phi.values()[j]] += 1;
            j += 1;
        }
    }
    counts
        .iter()
        .enumerate()
        .map(|(l, row)| {
            row.iter()
                .enumerate()
                .map(|(k, &m)| binomial(sys.degree(k, l), m))
                .product::<u128>()
        })
        .product()
}

/// Greedy matrix size from the type-function count, without touching any point.
pub fn predicted_size_multihomo(sys: &MultiHomoSystem) -> u128 {
    let emb = Embedding::new(sys.group_sizes(), vec![0; sys.num_groups()]);
    enumerate_greedy_typefns(sys.n())
        .filter(|phi| is_valid_group_typefn(phi, &emb))
        .map(|phi| cell_count_multihomo(&phi, sys))
        .sum()
}

/// All type functions that are monotone in every group, lexicographically.
pub fn monotone_typefns(sys: &MultiHomoSystem) -> Vec<TypeFunction> {
    let emb = Embedding::new(sys.group_sizes(), vec![0; sys.num_groups()]);
    let n = sys.n();
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    loop {
        let phi = TypeFunction(cur.clone());
        if is_valid_group_typefn(&phi, &emb) {
            out.push(phi);
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] <= n {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Lattice points of the translated Minkowski sum, as monomial exponents.
pub fn enumerate_b_multi(sys: &MultiHomoSystem) -> Result<Vec<LatticePoint>> {
    let sub = multihomo_subdivision(sys)?;
    let mut pts: Vec<_> = sub.points().iter().map(|b| sub.native(b)).collect();
    pts.sort();
    Ok(pts)
}

/// Greedy type functions with their cell sizes, in lexicographic order.
pub fn greedy_cells_multihomo(sys: &MultiHomoSystem) -> Vec<(TypeFunction, u128)> {
    let emb = Embedding::new(sys.group_sizes(), vec![0; sys.num_groups()]);
    enumerate_greedy_typefns(sys.n())
        .filter(|phi| is_valid_group_typefn(phi, &emb))
        .map(|phi| {
            let c = cell_count_multihomo(&phi, sys);
            (phi, c)
        })
        .collect()
}
