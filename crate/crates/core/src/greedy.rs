//! Greedy row selection: start from the points of mixed cells and keep
//! adding every column touched by a row already present.
//!
//! For the subdivisions built here the closure is exactly the set of points
//! whose type vector has bounded prefix sums, so its size can also be read
//! off the type functions alone.

use std::collections::{HashSet, VecDeque};

use crate::model::{type_vector_of, LatticePoint, RowContent, TypeFunction, TypeVector, ZonotopeSystem};
use crate::subdivision::Subdivision;

/// `t_0 + ... + t_I <= I + 1` for every `I < n`.
pub fn is_greedy(t: &TypeVector) -> bool {
    t.is_greedy()
}

/// Every `phi : {1..n} -> {0..n}` with `|phi^{-1}({0..I})| <= I + 1` for
/// all `I < n`, lexicographically.
pub fn enumerate_greedy_typefns(n: usize) -> impl Iterator<Item = TypeFunction> {
    fn go(n: usize, cur: &mut Vec<usize>, counts: &mut [usize], out: &mut Vec<TypeFunction>) {
        if cur.len() == n {
            out.push(TypeFunction(cur.clone()));
            return;
        }
        for v in 0..=n {
            // adding v raises |phi^{-1}({0..I})| for every I >= v
            let ok = (v..n).all(|i| counts[i] < i + 1);
            if !ok {
                continue;
            }
            (v..n).for_each(|i| counts[i] += 1);
            cur.push(v);
            go(n, cur, counts, out);
            cur.pop();
            (v..n).for_each(|i| counts[i] -= 1);
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), &mut vec![0; n], &mut out);
    out.into_iter()
}

/// `sum over greedy phi of prod_j a[phi(j)][j]`.
pub fn predicted_size_zonotope(sys: &ZonotopeSystem) -> u128 {
    enumerate_greedy_typefns(sys.n())
        .map(|phi| {
            phi.values()
                .iter()
                .enumerate()
                .map(|(j, &k)| sys.bound(k, j) as u128)
                .product::<u128>()
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosurePoint {
    pub point: LatticePoint,
    pub row_content: RowContent,
    pub mixed: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Closure {
    /// Reached points, sorted lexicographically (working frame).
    pub points: Vec<ClosurePoint>,
    /// Column points that fell outside the point set; never expanded.
    pub escaped: Vec<LatticePoint>,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point_set(&self) -> Vec<LatticePoint> {
        self.points.iter().map(|c| c.point.clone()).collect()
    }
}

/// Least superset of the mixed points closed under [`Subdivision::column_support`].
pub fn greedy_closure(sub: &Subdivision) -> Closure {
    let mut seen: HashSet<LatticePoint> = HashSet::new();
    let mut queue = VecDeque::new();
    for b in sub.points() {
        let mixed = sub.type_vector(&b).map(|t| t.is_mixed()).unwrap_or(false);
        if mixed && seen.insert(b.clone()) {
            queue.push_back(b);
        }
    }
    let mut points = Vec::new();
    let mut escaped = HashSet::new();
    while let Some(b) = queue.pop_front() {
        let phi = sub.type_function(&b).expect("queued points lie in the window");
        let row_content = sub.row_content(&b).expect("queued points lie in the window");
        for col in sub.column_support(&b).expect("queued points lie in the window") {
            if !sub.contains(&col) {
                escaped.insert(col);
            } else if seen.insert(col.clone()) {
                queue.push_back(col);
            }
        }
        let mixed = type_vector_of(&phi, sub.n()).is_mixed();
        points.push(ClosurePoint { point: b, row_content, mixed });
    }
    points.sort_by(|a, b| a.point.cmp(&b.point));
    let mut escaped: Vec<_> = escaped.into_iter().collect();
    escaped.sort();
    Closure { points, escaped }
}

/// Points whose type vector satisfies [`is_greedy`], lexicographically.
pub fn greedy_predicate_set(sub: &Subdivision) -> Vec<LatticePoint> {
    sub.points()
        .into_iter()
        .filter(|b| sub.type_vector(b).map(|t| t.is_greedy()).unwrap_or(false))
        .collect()
}

/// No column of a greedy row is a non-greedy point (checked exhaustively).
pub fn check_no_escape(sub: &Subdivision) -> bool {
    let greedy: HashSet<LatticePoint> = greedy_predicate_set(sub).into_iter().collect();
    greedy.iter().all(|b| {
        sub.column_support(b)
            .map(|cols| cols.iter().all(|c| greedy.contains(c)))
            .unwrap_or(false)
    })
}
