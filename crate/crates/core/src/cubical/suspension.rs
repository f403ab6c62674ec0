//! Cubical model of the directed suspension: `E ⊗ B` with `E ⊗ {b0}` and
//! `{v-, v+} ⊗ B` collapsed to one vertex.

use num_traits::{One, Signed, Zero};

use super::quotient::collapse;
use super::tensor::{pair_id, tensor_product};
use super::{CubeId, CubicalSet, RealizationPoint, Subcomplex};
use crate::rational::Rational;

/// The interval `[-1, 1]` as two directed edges `e-: v- -> v0` and
/// `e+: v0 -> v+`.
pub(crate) fn interval_chain() -> CubicalSet {
    CubicalSet::builder("v0")
        .vertex("v-")
        .vertex("v0")
        .vertex("v+")
        .cube("e-", &[["v-", "v0"]])
        .cube("e+", &[["v0", "v+"]])
        .build()
        .expect("static presentation")
}

/// Cells of the interval chain that carry suspension points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalCell {
    /// `e-`, heights in `(-1, 0)`
    Lower,
    /// `v0`, height 0
    Middle,
    /// `e+`, heights in `(0, 1)`
    Upper,
}

#[derive(Clone, Debug)]
pub struct SuspensionModel {
    pub complex: CubicalSet,
    /// Image of `[-1, 0] x B`.
    pub minus: Subcomplex,
    /// Image of `[0, 1] x B`.
    pub plus: Subcomplex,
    pub star: CubeId,
    base_len: usize,
    image: Vec<Option<CubeId>>,
    chain: CubicalSet,
}

pub fn suspension_model(b: &CubicalSet) -> SuspensionModel {
    let e = interval_chain();
    let id = |n: &str| e.id(n).unwrap();
    let (vm, v0, vp, em, ep) = (id("v-"), id("v0"), id("v+"), id("e-"), id("e+"));

    let t = tensor_product(&e, b);
    let collapsed = e
        .ids()
        .map(|x| pair_id(b, x, b.basepoint()))
        .chain(b.ids().flat_map(|y| [pair_id(b, vm, y), pair_id(b, vp, y)]));
    let l = Subcomplex::new(collapsed);
    let c = collapse(&t, &l, "*").expect("E⊗{b0} ∪ {v-,v+}⊗B is face closed and nonempty");

    let side = |cells: [CubeId; 2]| {
        let ids = b.ids().flat_map(|y| cells.map(|x| c.image[pair_id(b, x, y).0])).flatten();
        Subcomplex::new(ids.chain([c.star]))
    };
    SuspensionModel {
        minus: side([v0, em]),
        plus: side([v0, ep]),
        star: c.star,
        complex: c.complex,
        base_len: b.len(),
        image: c.image,
        chain: e,
    }
}

impl SuspensionModel {
    /// Cube of the model over `cell x c`, `None` when it was collapsed.
    pub fn model_cube(&self, cell: IntervalCell, c: CubeId) -> Option<CubeId> {
        let name = match cell {
            IntervalCell::Lower => "e-",
            IntervalCell::Middle => "v0",
            IntervalCell::Upper => "e+",
        };
        let x = self.chain.id(name).unwrap();
        self.image[x.0 * self.base_len + c.0]
    }

    /// The point `[(h, x)]` of `|K|`. Heights outside `(-1, 1)` and the
    /// basepoint of `B` go to the collapsed vertex.
    pub fn lift(&self, h: &Rational, x: &RealizationPoint) -> RealizationPoint {
        let star = RealizationPoint::vertex(self.star);
        if h.abs() >= Rational::one() {
            return star;
        }
        let (cell, first) = if h.is_negative() {
            (IntervalCell::Lower, Some(h + Rational::one()))
        } else if h.is_zero() {
            (IntervalCell::Middle, None)
        } else {
            (IntervalCell::Upper, Some(h.clone()))
        };
        match self.model_cube(cell, x.cube) {
            Some(cube) => RealizationPoint { cube, coords: first.into_iter().chain(x.coords.iter().cloned()).collect() },
            None => star,
        }
    }
}
