//! Maps acting on the height coordinate only.

use num_traits::{One, Signed, Zero};

use super::{MoorePath, Segment, SegmentBody, Suspension, SuspensionPoint, Track, XStructure};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

impl Suspension {
    /// Replaces the height of each track by an affine function `g(t, h)` of
    /// time and height, sending everything at or beyond `±1` to `*`.
    ///
    /// `g` must be affine jointly in `(t, h)`; it is evaluated at the ends of
    /// each track and interpolated.
    pub(crate) fn map_heights(&self, path: &MoorePath, g: impl Fn(&Rational, &Rational) -> Rational) -> MoorePath {
        let mut out = Vec::new();
        for (t0, seg) in path.timed() {
            match &seg.body {
                SegmentBody::Star => out.push(seg.clone()),
                SegmentBody::Track(tr) => {
                    let g0 = g(&t0, &tr.h0);
                    let g1 = g(&(&t0 + &seg.duration), &tr.h1);
                    clip(&seg.duration, g0, g1, tr, &mut out);
                }
            }
        }
        // only consulted for paths of length zero
        let start = match path.start() {
            SuspensionPoint::Star => SuspensionPoint::Star,
            SuspensionPoint::Interior { h, x } => self.point(g(&Rational::zero(), h), x.clone()),
        };
        self.assemble(start, out)
    }

    /// `φ±_t ∘ α` with `φ±_t(h) = (t + 1) h ∓ t`, for `t` in `[0, 1]`.
    pub fn apply_phi(&self, path: &MoorePath, sign: Sign, t: &Rational) -> Result<MoorePath> {
        if !rational::in_unit_interval(t) {
            return Err(Error::pre("apply_phi", format!("t = {t} outside [0,1]")));
        }
        let shift = match sign {
            Sign::Minus => -t.clone(),
            Sign::Plus => t.clone(),
        };
        let scale = t + Rational::one();
        Ok(self.map_heights(path, |_, h| &scale * h + &shift))
    }

    /// `(h, x) -> (λ h + μ, x)`, which needs `λ > 0`, `-λ + μ <= -1` and
    /// `λ + μ >= 1` to be well defined on the suspension.
    pub fn translate(&self, path: &MoorePath, lambda: &Rational, mu: &Rational) -> Result<MoorePath> {
        let one = Rational::one();
        if !lambda.is_positive() || mu - lambda > -one.clone() || lambda + mu < one {
            return Err(Error::pre(
                "translate",
                format!("λ = {lambda}, μ = {mu} does not map [-1,1] over itself"),
            ));
        }
        Ok(self.map_heights(path, |_, h| lambda * h + mu))
    }

    /// `ψ_δ`: heights moved by `δ`.
    pub(crate) fn shift(&self, path: &MoorePath, delta: &Rational) -> MoorePath {
        self.map_heights(path, |_, h| h + delta)
    }

    /// A strictly increasing loop close to `α`: height `(h + ε t / t∞) / (1 - ε)`.
    pub fn make_increasing(&self, path: &MoorePath, eps: &Rational) -> Result<MoorePath> {
        if !rational::in_open_unit_interval(eps) {
            return Err(Error::pre("make_increasing", format!("ε = {eps} outside (0,1)")));
        }
        if !self.is_loop(path) || !self.verify_directed(path, XStructure::Total) {
            return Err(Error::pre("make_increasing", "needs a loop at * with nondecreasing height"));
        }
        let total = path.duration();
        if total.is_zero() {
            return Ok(path.clone());
        }
        let denom = Rational::one() - eps;
        Ok(self.map_heights(path, |t, h| (h + eps * t / &total) / &denom))
    }

    /// Height strictly increasing wherever the loop is away from `*`.
    pub fn is_strictly_increasing(&self, path: &MoorePath) -> bool {
        path.segments().iter().filter_map(Segment::as_track).all(|t| t.h1 > t.h0)
    }
}

/// Pushes the track `tr` of duration `d` with new end heights `g0, g1` into
/// `out`, as star pieces where the height is outside `(-1, 1)`.
fn clip(d: &Rational, g0: Rational, g1: Rational, tr: &Track, out: &mut Vec<Segment>) {
    let one = Rational::one();
    if g0 == g1 {
        if g0.abs() >= one {
            out.push(Segment::star(d.clone()));
        } else {
            let mut t = tr.clone();
            t.h0 = g0;
            t.h1 = g1;
            out.push(Segment::track(d.clone(), t));
        }
        return;
    }
    // fractions of the way along at which the height is -1 and 1
    let slope = &g1 - &g0;
    let at = |v: Rational| (v - &g0) / &slope;
    let (a, b) = (at(-one.clone()), at(one.clone()));
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let lo = lo.max(Rational::zero());
    let hi = hi.min(one.clone());
    if lo >= hi {
        out.push(Segment::star(d.clone()));
        return;
    }
    if lo.is_positive() {
        out.push(Segment::star(d * &lo));
    }
    let mut piece = tr.sub(&lo, &hi);
    piece.h0 = rational::lerp(&g0, &g1, &lo);
    piece.h1 = rational::lerp(&g0, &g1, &hi);
    out.push(Segment::track(d * (&hi - &lo), piece));
    if hi < one {
        out.push(Segment::star(d * (one - &hi)));
    }
}
