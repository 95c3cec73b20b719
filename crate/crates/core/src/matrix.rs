//! Symbolic Canny-Emiris matrices.
//!
//! Rows and columns are indexed by the same ordered point list. Row `b`
//! holds the coefficients of `x^(b - a(b)) * F_{i(b)}`: the entry in column
//! `b'` is `u[i(b)][b' - b + a(b)]` whenever that exponent lies in the
//! support, and zero otherwise. Points are ordered greedy-mixed first, then
//! greedy non-mixed, then the rest, each group lexicographically, so the
//! block-triangular shape of a full matrix is visible directly.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{CoeffRef, LatticePoint};
use crate::subdivision::Subdivision;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    rank: usize,
    /// Monomial exponents, in matrix order.
    points: Vec<LatticePoint>,
    /// Per row: `(column, coefficient)` sorted by column.
    rows: Vec<Vec<(usize, CoeffRef)>>,
    mixed: Vec<bool>,
    greedy: Vec<bool>,
}

impl SymbolicMatrix {
    /// Dimension (number of rows = number of columns).
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Rank of the underlying lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn row(&self, r: usize) -> &[(usize, CoeffRef)] {
        &self.rows[r]
    }

    pub fn mixed_flags(&self) -> &[bool] {
        &self.mixed
    }

    pub fn greedy_flags(&self) -> &[bool] {
        &self.greedy
    }

    pub fn num_entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// All nonzero entries as `(row, column, coefficient)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &CoeffRef)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, u)| (r, *c, u)))
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&CoeffRef> {
        self.rows[r]
            .binary_search_by_key(&c, |(col, _)| *col)
            .ok()
            .map(|k| &self.rows[r][k].1)
    }

    pub fn diagonal(&self, k: usize) -> Option<&CoeffRef> {
        self.get(k, k)
    }

    /// Number of leading greedy points.
    pub fn greedy_count(&self) -> usize {
        self.greedy.iter().take_while(|&&g| g).count()
    }

    /// No entry `(b, b')` with `b` greedy and `b'` not.
    pub fn is_block_triangular(&self) -> bool {
        self.entries().all(|(r, c, _)| !self.greedy[r] || self.greedy[c])
    }

    /// Principal submatrix on the indices selected by `keep`, order preserved.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> SymbolicMatrix {
        let kept: Vec<usize> = (0..self.len()).filter(|&k| keep(k)).collect();
        let mut remap = vec![usize::MAX; self.len()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let rows = kept
            .iter()
            .map(|&r| {
                self.rows[r]
                    .iter()
                    .filter(|(c, _)| remap[*c] != usize::MAX)
                    .map(|(c, u)| (remap[*c], u.clone()))
                    .collect()
            })
            .collect();
        SymbolicMatrix {
            rank: self.rank,
            points: kept.iter().map(|&k| self.points[k].clone()).collect(),
            rows,
            mixed: kept.iter().map(|&k| self.mixed[k]).collect(),
            greedy: kept.iter().map(|&k| self.greedy[k]).collect(),
        }
    }

    /// Block on the greedy points.
    pub fn greedy_block(&self) -> SymbolicMatrix {
        self.restrict(|k| self.greedy[k])
    }

    /// Block on the non-greedy points.
    pub fn complement_block(&self) -> SymbolicMatrix {
        self.restrict(|k| !self.greedy[k])
    }
}

/// Assembles the matrix over `points` (working frame of `sub`).
pub fn build_matrix(points: &[LatticePoint], sub: &Subdivision) -> Result<SymbolicMatrix> {
    struct Row {
        point: LatticePoint,
        native: LatticePoint,
        mixed: bool,
        greedy: bool,
    }
    let mut rows_meta = Vec::with_capacity(points.len());
    for b in points {
        let t = sub.type_vector(b)?;
        rows_meta.push(Row {
            point: b.clone(),
            native: sub.native(b),
            mixed: t.is_mixed(),
            greedy: t.is_greedy(),
        });
    }
    let class = |r: &Row| match (r.greedy, r.mixed) {
        (true, true) => 0,
        (true, false) => 1,
        _ => 2,
    };
    rows_meta.sort_by(|x, y| (class(x), &x.native).cmp(&(class(y), &y.native)));
    rows_meta.dedup_by(|x, y| x.point == y.point);

    let index: HashMap<&LatticePoint, usize> =
        rows_meta.iter().enumerate().map(|(k, r)| (&r.point, k)).collect();

    let mut rows = Vec::with_capacity(rows_meta.len());
    for r in &rows_meta {
        let rc = sub.row_content(&r.point)?;
        let mut row = Vec::with_capacity(sub.support(rc.poly).len());
        for a in sub.support(rc.poly) {
            let col = r.point.shifted(&rc.vertex, a);
            let Some(&c) = index.get(&col) else {
                return Err(Error::NotClosed { row: r.native.clone(), column: sub.native(&col) });
            };
            row.push((c, CoeffRef { poly: rc.poly, support: sub.native_support(rc.poly, a) }));
        }
        row.sort_by_key(|(c, _)| *c);
        rows.push(row);
    }

    Ok(SymbolicMatrix {
        rank: sub.n(),
        mixed: rows_meta.iter().map(|r| r.mixed).collect(),
        greedy: rows_meta.iter().map(|r| r.greedy).collect(),
        points: rows_meta.into_iter().map(|r| r.native).collect(),
        rows,
    })
}

/// Restriction to the points of non-mixed cells.
pub fn principal_submatrix(m: &SymbolicMatrix) -> SymbolicMatrix {
    m.restrict(|k| !m.mixed[k])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    /// One `row ; column ; poly ; support` record per nonzero entry.
    Triplet,
    /// Full grid of `u[i][a]` / `0` tokens.
    Dense,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triplet" => Ok(Self::Triplet),
            "dense" => Ok(Self::Dense),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

pub fn export_matrix(m: &SymbolicMatrix, format: ExportFormat) -> Vec<u8> {
    let mut out = String::new();
    writeln!(out, "# n={}", m.rank).unwrap();
    writeln!(out, "# rows={}", m.len()).unwrap();
    writeln!(out, "# order=greedy-first-lex").unwrap();
    match format {
        ExportFormat::Triplet => {
            for (r, c, u) in m.entries() {
                writeln!(out, "{} ; {} ; {} ; {}", m.points[r], m.points[c], u.poly, u.support)
                    .unwrap();
            }
        }
        ExportFormat::Dense => {
            let pts: Vec<String> = m.points.iter().map(ToString::to_string).collect();
            writeln!(out, "# points={}", pts.join(" ")).unwrap();
            for row in &m.rows {
                let mut tokens = vec!["0".to_string(); m.len()];
                for (c, u) in row {
                    tokens[*c] = u.to_string();
                }
                writeln!(out, "{}", tokens.join(" ")).unwrap();
            }
        }
    }
    out.into_bytes()
}

/// [`export_matrix`] with the format given by name.
pub fn export_matrix_named(m: &SymbolicMatrix, format: &str) -> Result<Vec<u8>> {
    Ok(export_matrix(m, format.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greedy::greedy_closure;
    use crate::model::validate_zonotope;

    fn bilinear() -> Subdivision {
        Subdivision::canonical(validate_zonotope(vec![vec![1, 1]; 3]).unwrap())
    }

    fn p(c: &[i64]) -> LatticePoint {
        LatticePoint::new(c.to_vec())
    }

    fn u(i: usize, a: &[i64]) -> CoeffRef {
        CoeffRef { poly: i, support: p(a) }
    }

    #[test]
    fn greedy_bilinear_matrix() {
        let sub = bilinear();
        let m = build_matrix(&greedy_closure(&sub).point_set(), &sub).unwrap();
        assert_eq!(m.len(), 8);
        assert_eq!(m.num_entries(), 32);
        let r = m.points().iter().position(|b| *b == p(&[0, 1])).unwrap();
        let row: Vec<(LatticePoint, CoeffRef)> =
            m.row(r).iter().map(|(c, u)| (m.points()[*c].clone(), u.clone())).collect();
        let mut expected = vec![
            (p(&[0, 1]), u(2, &[0, 0])),
            (p(&[1, 1]), u(2, &[1, 0])),
            (p(&[0, 2]), u(2, &[0, 1])),
            (p(&[1, 2]), u(2, &[1, 1])),
        ];
        let mut row_sorted = row.clone();
        row_sorted.sort();
        expected.sort();
        assert_eq!(row_sorted, expected);
        // 6 mixed points first
        assert_eq!(m.mixed_flags(), &[true, true, true, true, true, true, false, false]);
    }

    #[test]
    fn full_bilinear_matrix() {
        let sub = bilinear();
        let m = build_matrix(&sub.points(), &sub).unwrap();
        assert_eq!(m.len(), 9);
        assert_eq!(m.greedy_count(), 8);
        assert_eq!(m.points()[8], p(&[0, 0]));
        assert!(m.is_block_triangular());
    }

    #[test]
    fn missing_mixed_point_is_not_closed() {
        let sub = bilinear();
        let mut pts = greedy_closure(&sub).point_set();
        pts.retain(|b| *b != p(&[0, 1]));
        assert!(matches!(build_matrix(&pts, &sub), Err(Error::NotClosed { .. })));
    }

    #[test]
    fn principal_submatrices() {
        let sub = bilinear();
        let m = build_matrix(&greedy_closure(&sub).point_set(), &sub).unwrap();
        let e = principal_submatrix(&m);
        assert_eq!(e.points(), &[p(&[1, 1]), p(&[2, 2])]);
        assert_eq!(e.diagonal(0), Some(&u(2, &[0, 0])));
        assert_eq!(e.diagonal(1), Some(&u(1, &[1, 1])));
        assert_eq!(principal_submatrix(&e), e);

        let seg = Subdivision::canonical(validate_zonotope(vec![vec![2], vec![3]]).unwrap());
        let m = build_matrix(&greedy_closure(&seg).point_set(), &seg).unwrap();
        assert!(principal_submatrix(&m).is_empty());

        let cube = Subdivision::canonical(validate_zonotope(vec![vec![1; 3]; 4]).unwrap());
        let m = build_matrix(&greedy_closure(&cube).point_set(), &cube).unwrap();
        assert_eq!(principal_submatrix(&m).len(), 26);
    }

    #[test]
    fn exports() {
        let sub = bilinear();
        let m = build_matrix(&greedy_closure(&sub).point_set(), &sub).unwrap();
        let text = String::from_utf8(export_matrix(&m, ExportFormat::Triplet)).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(&lines[..3], &["# n=2", "# rows=8", "# order=greedy-first-lex"]);
        assert_eq!(lines.iter().filter(|l| !l.starts_with('#')).count(), 32);
        assert!(lines.contains(&"0,1 ; 0,1 ; 2 ; 0,0"));

        let e = principal_submatrix(&m);
        let dense = String::from_utf8(export_matrix(&e, ExportFormat::Dense)).unwrap();
        let grid: Vec<&str> = dense.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(grid.len(), 2);
        assert_eq!(grid[0].split(' ').next(), Some("u[2][0,0]"));
        assert_eq!(grid[1].split(' ').nth(1), Some("u[1][1,1]"));

        let empty = m.restrict(|_| false);
        let text = String::from_utf8(export_matrix(&empty, ExportFormat::Triplet)).unwrap();
        assert_eq!(text, "# n=2\n# rows=0\n# order=greedy-first-lex\n");

        assert_eq!(
            export_matrix_named(&m, "mtx"),
            Err(Error::UnsupportedFormat("mtx".into()))
        );
    }
}
