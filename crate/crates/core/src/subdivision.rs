//! The mixed subdivision induced by a linear lifting, in closed form.
//!
//! Coordinate `j` of the window `[0, a[0][j] + ... + a[n][j])` is cut into
//! consecutive half-open intervals of lengths `a[0][j], ..., a[n][j]`. The
//! interval index of `b_j` is the type function value `phi_b(j)`, and that
//! single piece of data determines the cell, the type vector, the row
//! content and the column support of `b`. No lifting values or polyhedra are
//! ever materialized.

use crate::error::{Error, Result};
use crate::model::{
    box_points, type_vector_of, LatticePoint, RowContent, TypeFunction, TypeVector,
    ZonotopeSystem,
};
use crate::multihomo::Embedding;

/// Every point of the translated Minkowski sum, lexicographically.
pub fn enumerate_b(sys: &ZonotopeSystem) -> impl Iterator<Item = LatticePoint> {
    let widths: Vec<i64> = (0..sys.n()).map(|j| sys.width(j)).collect();
    box_points(&widths).into_iter()
}

pub fn type_function_of(b: &LatticePoint, sys: &ZonotopeSystem) -> Result<TypeFunction> {
    if !sys.contains(b) {
        return Err(Error::PointOutOfRange(b.clone()));
    }
    Ok(type_function_unchecked(b, sys))
}

fn type_function_unchecked(b: &[i64], sys: &ZonotopeSystem) -> TypeFunction {
    let n = sys.n();
    TypeFunction(
        b.iter()
            .enumerate()
            .map(|(j, &x)| (0..=n).find(|&k| x < sys.cut(j, k + 1)).expect("b_j inside window"))
            .collect(),
    )
}

pub fn row_content_of(b: &LatticePoint, sys: &ZonotopeSystem) -> Result<RowContent> {
    let phi = type_function_of(b, sys)?;
    Ok(row_content_from(b, &phi, sys))
}

fn row_content_from(b: &[i64], phi: &TypeFunction, sys: &ZonotopeSystem) -> RowContent {
    let t = type_vector_of(phi, sys.n());
    // n + 1 entries summing to n: some entry is zero
    let i = t.last_zero().expect("tight subdivision has a zero component");
    let vertex = sys.vertex(i, |j| {
        if b[j] < sys.cut(j, i) {
            false
        } else {
            assert!(b[j] >= sys.cut(j, i + 1), "coordinate {j} inside interval {i} but t_{i} = 0");
            true
        }
    });
    RowContent { poly: i, vertex }
}

/// Exactly one zero in the type vector.
pub fn is_mixed(t: &TypeVector) -> bool {
    t.is_mixed()
}

/// All points of the cell labelled by `phi`, lexicographically.
pub fn cell_points(phi: &TypeFunction, sys: &ZonotopeSystem) -> Vec<LatticePoint> {
    let lo: Vec<i64> = phi.values().iter().enumerate().map(|(j, &k)| sys.cut(j, k)).collect();
    let widths: Vec<i64> =
        phi.values().iter().enumerate().map(|(j, &k)| sys.bound(k, j)).collect();
    box_points(&widths)
        .into_iter()
        .map(|off| LatticePoint::new(off.iter().zip(&lo).map(|(o, l)| o + l).collect()))
        .collect()
}

/// `b - a(b) + A_{i(b)}`: the columns touched by row `b`.
pub fn column_support(b: &LatticePoint, sys: &ZonotopeSystem) -> Result<Vec<LatticePoint>> {
    let rc = row_content_of(b, sys)?;
    Ok(sys
        .support_points(rc.poly)
        .iter()
        .map(|a| b.shifted(&rc.vertex, a))
        .collect())
}

/// `b_j -> width_j - 1 - b_j` on the coordinates selected by `mask`.
///
/// Reflecting a coordinate swaps the sign of the lifting direction in it.
pub fn reflect(b: &LatticePoint, sys: &ZonotopeSystem, mask: &[bool]) -> LatticePoint {
    LatticePoint::new(
        b.iter()
            .enumerate()
            .map(|(j, &x)| if mask[j] { sys.width(j) - 1 - x } else { x })
            .collect(),
    )
}

#[derive(Clone, Debug)]
enum Frame {
    Box { reflected: Vec<bool> },
    MultiHomogeneous(Embedding),
}

/// A system together with the subdivision used to build its matrices.
///
/// All points handled by this type live in the *working frame*: box
/// coordinates of the embedded zonotope (after any orientation reflection).
/// [`Subdivision::native`] and [`Subdivision::native_support`] translate back
/// to the monomial exponents of the actual polynomials.
#[derive(Clone, Debug)]
pub struct Subdivision {
    system: ZonotopeSystem,
    frame: Frame,
    supports: Vec<Vec<LatticePoint>>,
}

impl Subdivision {
    /// The canonical orientation (lifting direction negative in every coordinate).
    pub fn canonical(system: ZonotopeSystem) -> Self {
        let n = system.n();
        Self::with_reflection(system, vec![false; n]).expect("mask has length n")
    }

    /// Box system with the lifting direction flipped on the masked coordinates.
    pub fn with_reflection(system: ZonotopeSystem, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != system.n() {
            return Err(Error::BadShape(format!(
                "reflection mask has {} entries, expected {}",
                mask.len(),
                system.n()
            )));
        }
        let supports = (0..=system.n()).map(|i| system.support_points(i)).collect();
        Ok(Self { system, frame: Frame::Box { reflected: mask }, supports })
    }

    pub(crate) fn from_embedding(system: ZonotopeSystem, embedding: Embedding) -> Self {
        let supports = (0..=system.n())
            .map(|i| {
                system
                    .support_points(i)
                    .into_iter()
                    .filter(|a| embedding.is_support_chain(a))
                    .collect()
            })
            .collect();
        Self { system, frame: Frame::MultiHomogeneous(embedding), supports }
    }

    /// The (embedded) box system driving the subdivision.
    pub fn system(&self) -> &ZonotopeSystem {
        &self.system
    }

    pub fn n(&self) -> usize {
        self.system.n()
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        match &self.frame {
            Frame::MultiHomogeneous(e) => Some(e),
            Frame::Box { .. } => None,
        }
    }

    pub fn reflection(&self) -> Option<&[bool]> {
        match &self.frame {
            Frame::Box { reflected } => Some(reflected),
            Frame::MultiHomogeneous(_) => None,
        }
    }

    pub fn contains(&self, b: &[i64]) -> bool {
        self.system.contains(b)
            && match &self.frame {
                Frame::Box { .. } => true,
                Frame::MultiHomogeneous(e) => e.is_point_chain(b),
            }
    }

    /// Number of points, computed without enumerating.
    pub fn num_points(&self) -> u128 {
        match &self.frame {
            Frame::Box { .. } => self.system.num_points(),
            Frame::MultiHomogeneous(e) => e.num_points(),
        }
    }

    /// All points, lexicographically in the working frame.
    pub fn points(&self) -> Vec<LatticePoint> {
        match &self.frame {
            Frame::Box { .. } => enumerate_b(&self.system).collect(),
            Frame::MultiHomogeneous(e) => e.chain_points(),
        }
    }

    fn check(&self, b: &LatticePoint) -> Result<()> {
        if self.contains(b) {
            Ok(())
        } else {
            Err(Error::PointOutOfRange(b.clone()))
        }
    }

    pub fn type_function(&self, b: &LatticePoint) -> Result<TypeFunction> {
        self.check(b)?;
        Ok(type_function_unchecked(b, &self.system))
    }

    pub fn type_vector(&self, b: &LatticePoint) -> Result<TypeVector> {
        Ok(type_vector_of(&self.type_function(b)?, self.n()))
    }

    /// Row content in the working frame.
    pub fn row_content(&self, b: &LatticePoint) -> Result<RowContent> {
        let phi = self.type_function(b)?;
        Ok(row_content_from(b, &phi, &self.system))
    }

    /// Support `A_i` in the working frame, lexicographically.
    pub fn support(&self, i: usize) -> &[LatticePoint] {
        &self.supports[i]
    }

    pub fn column_support(&self, b: &LatticePoint) -> Result<Vec<LatticePoint>> {
        let rc = self.row_content(b)?;
        Ok(self.supports[rc.poly].iter().map(|a| b.shifted(&rc.vertex, a)).collect())
    }

    /// Points of the cell labelled by `phi`; empty when the cell holds none.
    pub fn cell_points(&self, phi: &TypeFunction) -> Vec<LatticePoint> {
        let pts = cell_points(phi, &self.system);
        match &self.frame {
            Frame::Box { .. } => pts,
            Frame::MultiHomogeneous(e) => pts.into_iter().filter(|b| e.is_point_chain(b)).collect(),
        }
    }

    /// Monomial exponent of a working-frame point.
    pub fn native(&self, b: &LatticePoint) -> LatticePoint {
        match &self.frame {
            Frame::Box { reflected } => reflect(b, &self.system, reflected),
            Frame::MultiHomogeneous(e) => e.native_coords(b),
        }
    }

    /// Exponent of the monomial of polynomial `i` labelled `a` in the working frame.
    pub fn native_support(&self, i: usize, a: &LatticePoint) -> LatticePoint {
        match &self.frame {
            Frame::Box { reflected } => LatticePoint::new(
                a.iter()
                    .enumerate()
                    .map(|(j, &x)| if reflected[j] { self.system.bound(i, j) - x } else { x })
                    .collect(),
            ),
            Frame::MultiHomogeneous(e) => e.native_coords(a),
        }
    }
}
