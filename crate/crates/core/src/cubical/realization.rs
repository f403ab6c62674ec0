//! Canonical points of the geometric realization and the retraction `R_1`.

use num_traits::{One, Zero};

use super::{CubeId, CubicalSet, FaceRef, Subcomplex};
use crate::error::{Error, Result};
use crate::rational::{self, frac, Rational};

/// A point of `|K|` in canonical form: a nondegenerate cube and coordinates
/// strictly inside `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealizationPoint {
    pub cube: CubeId,
    pub coords: Vec<Rational>,
}

impl RealizationPoint {
    pub fn vertex(v: CubeId) -> Self {
        RealizationPoint { cube: v, coords: Vec::new() }
    }
}

/// The coordinate retraction `r : I -> I`: `[0, 1/3] -> 0`, `[2/3, 1] -> 1`,
/// affine `3(s - 1/2) + 1/2` in between.
pub fn r(s: &Rational) -> Rational {
    if *s <= frac(1, 3) {
        Rational::zero()
    } else if *s >= frac(2, 3) {
        Rational::one()
    } else {
        (s - rational::half()) * rational::int(3) + rational::half()
    }
}

impl CubicalSet {
    /// Pushes a point of `cube x [0,1]^n` through faces and degeneracies until
    /// no coordinate is 0 or 1.
    pub fn normalize_point(&self, cube: CubeId, coords: &[Rational]) -> Result<RealizationPoint> {
        self.normalize_point_by(cube, coords, |_| 0)
    }

    /// As [`CubicalSet::normalize_point`], with `choose` picking which boundary
    /// coordinate (index into the candidate list) is stripped next. For a
    /// valid complex the result does not depend on the choices.
    pub fn normalize_point_by(
        &self,
        cube: CubeId,
        coords: &[Rational],
        choose: impl FnMut(&[usize]) -> usize,
    ) -> Result<RealizationPoint> {
        if coords.len() != self.dim(cube) {
            return Err(Error::pre(
                "normalize_point",
                format!("cube {:?} has dim {}, got {} coordinates", self.name(cube), self.dim(cube), coords.len()),
            ));
        }
        if let Some(c) = coords.iter().find(|c| !rational::in_unit_interval(c)) {
            return Err(Error::pre("normalize_point", format!("coordinate {c} outside [0,1]")));
        }
        let (cube, mut v) = self.normalize_cell(FaceRef::cube(cube), vec![coords.to_vec()], choose);
        Ok(RealizationPoint { cube, coords: v.pop().unwrap() })
    }

    /// Canonical form of a family of coordinate vectors on one cell, moving
    /// through faces along coordinates that are 0 or 1 in every vector and
    /// discarding dummy coordinates of degenerate cells. Used for points
    /// (one vector) and affine tracks (the two endpoint vectors).
    pub(crate) fn normalize_cell(
        &self,
        mut cell: FaceRef,
        mut vecs: Vec<Vec<Rational>>,
        mut choose: impl FnMut(&[usize]) -> usize,
    ) -> (CubeId, Vec<Vec<Rational>>) {
        loop {
            if !cell.degens.is_empty() {
                for v in vecs.iter_mut() {
                    for &d in &cell.degens {
                        // decreasing, so earlier removals do not shift later ones
                        v.remove(d - 1);
                    }
                }
                cell = FaceRef::cube(cell.base);
            }
            let boundary: Vec<usize> = (0..self.dim(cell.base))
                .filter(|&k| {
                    let c = &vecs[0][k];
                    (c.is_zero() || c.is_one()) && vecs.iter().all(|v| &v[k] == c)
                })
                .collect();
            if boundary.is_empty() {
                return (cell.base, vecs);
            }
            let k = boundary[choose(&boundary).min(boundary.len() - 1)];
            let eps = if vecs[0][k].is_zero() { 0 } else { 1 };
            for v in vecs.iter_mut() {
                v.remove(k);
            }
            cell = self.face(cell.base, k + 1, eps).clone();
        }
    }

    pub fn basepoint_point(&self) -> RealizationPoint {
        RealizationPoint::vertex(self.basepoint())
    }

    pub fn is_basepoint(&self, p: &RealizationPoint) -> bool {
        p.cube == self.basepoint()
    }

    /// `R_1`: apply [`r`] to every coordinate and renormalize.
    pub fn r_collapse(&self, p: &RealizationPoint) -> RealizationPoint {
        let coords: Vec<Rational> = p.coords.iter().map(r).collect();
        self.normalize_point(p.cube, &coords).expect("r preserves [0,1]")
    }

    /// Membership in `A = R_1^{-1}(|L|)`, a neighbourhood of `|L|`.
    pub fn in_a(&self, p: &RealizationPoint, l: &Subcomplex) -> bool {
        l.contains(self.r_collapse(p).cube)
    }
}
