//! Piecewise-linear directed Moore paths in the suspension `Σ|B|`.
//!
//! A point of the suspension away from the distinguished point `*` has a
//! height `h` in `(-1, 1)` and a point `x` of `|B|` other than the basepoint.
//! A path is a list of segments, each either parked at `*` or an affine
//! track in `[-1, 1] x cube` for a single cube of `B`. Paths are kept in a
//! canonical form so that structural equality is equality of paths:
//!
//! * zero-duration segments are dropped,
//! * tracks live in the cube carrying their interior (no coordinate is
//!   constantly 0 or 1),
//! * tracks whose interior is `*` become star segments,
//! * adjacent star segments and adjacent collinear tracks with the same
//!   velocity are merged.

mod excursion;
mod height;
mod moore;

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::cubical::{suspension_model, CubeId, CubicalSet, FaceRef, RealizationPoint, SuspensionModel};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use excursion::{Crossing, Excursion, Neighborhood};
pub use height::Sign;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SuspensionPoint {
    Star,
    Interior { h: Rational, x: RealizationPoint },
}

impl SuspensionPoint {
    pub fn is_star(&self) -> bool {
        matches!(self, SuspensionPoint::Star)
    }

    pub fn height(&self) -> Option<&Rational> {
        match self {
            SuspensionPoint::Star => None,
            SuspensionPoint::Interior { h, .. } => Some(h),
        }
    }
}

/// Affine track: height and cube coordinates interpolate linearly in time.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Track {
    pub h0: Rational,
    pub h1: Rational,
    pub cube: CubeId,
    pub c0: Vec<Rational>,
    pub c1: Vec<Rational>,
}

impl Track {
    /// Track parked at one point.
    pub fn constant(h: Rational, x: &RealizationPoint) -> Self {
        Track { h0: h.clone(), h1: h, cube: x.cube, c0: x.coords.clone(), c1: x.coords.clone() }
    }

    /// Portion between the fractions `s0 <= s1` of the way along.
    pub fn sub(&self, s0: &Rational, s1: &Rational) -> Self {
        let at = |s: &Rational| {
            (
                rational::lerp(&self.h0, &self.h1, s),
                self.c0.iter().zip(&self.c1).map(|(a, b)| rational::lerp(a, b, s)).collect::<Vec<_>>(),
            )
        };
        let (h0, c0) = at(s0);
        let (h1, c1) = at(s1);
        Track { h0, h1, cube: self.cube, c0, c1 }
    }

    fn is_stationary(&self) -> bool {
        self.h0 == self.h1 && self.c0 == self.c1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SegmentBody {
    Star,
    Track(Track),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub duration: Rational,
    pub body: SegmentBody,
}

impl Segment {
    pub fn star(duration: Rational) -> Self {
        Segment { duration, body: SegmentBody::Star }
    }

    pub fn track(duration: Rational, track: Track) -> Self {
        Segment { duration, body: SegmentBody::Track(track) }
    }

    pub fn as_track(&self) -> Option<&Track> {
        match &self.body {
            SegmentBody::Star => None,
            SegmentBody::Track(t) => Some(t),
        }
    }
}

/// A Moore path `[0, t∞] -> Σ|B|` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoorePath {
    start: SuspensionPoint,
    segments: Vec<Segment>,
}

impl MoorePath {
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn start(&self) -> &SuspensionPoint {
        &self.start
    }

    /// `t∞`
    pub fn duration(&self) -> Rational {
        self.segments.iter().map(|s| &s.duration).sum()
    }

    /// Every point of the path is `*`.
    pub fn is_constant_star(&self) -> bool {
        self.start.is_star() && self.segments.iter().all(|s| s.body == SegmentBody::Star)
    }

    /// `(start time, segment)` pairs.
    pub fn timed(&self) -> impl Iterator<Item = (Rational, &Segment)> {
        let mut t = Rational::zero();
        self.segments.iter().map(move |s| {
            let t0 = t.clone();
            t += &s.duration;
            (t0, s)
        })
    }

    /// Times at which segments meet, including `0` and `t∞`.
    pub fn breakpoints(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero()];
        let mut t = Rational::zero();
        for s in &self.segments {
            t += &s.duration;
            out.push(t.clone());
        }
        out
    }
}

/// Constraint on the cube coordinates of directed tracks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XStructure {
    /// Coordinates nondecreasing along every track.
    Directed,
    /// Any coordinate motion.
    Total,
}

/// Where a path from `*` ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndpointClass {
    Star,
    /// Height `0`, so in both cones.
    Zero,
    Minus,
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endpoint {
    pub class: EndpointClass,
    pub in_minus: bool,
    pub in_plus: bool,
    pub end: SuspensionPoint,
}

/// Nondecreasing piecewise-linear surjection `[0, T'] -> [0, T]` given by its
/// knots `(u, f(u))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlMap {
    knots: Vec<(Rational, Rational)>,
}

impl PlMap {
    pub fn new(knots: Vec<(Rational, Rational)>) -> Result<Self> {
        let bad = |why: &str| Err(Error::pre("reparam", why.to_string()));
        match knots.first() {
            Some((u, v)) if u.is_zero() && v.is_zero() => {}
            _ => return bad("reparametrization must start at (0, 0)"),
        }
        if knots.windows(2).any(|w| w[1].0 <= w[0].0 || w[1].1 < w[0].1) {
            return bad("knot times must increase and values must not decrease");
        }
        Ok(PlMap { knots })
    }

    /// `u -> u * target / domain`
    pub fn linear(domain: Rational, target: Rational) -> Result<Self> {
        PlMap::new(vec![(Rational::zero(), Rational::zero()), (domain, target)])
    }

    pub fn knots(&self) -> &[(Rational, Rational)] {
        &self.knots
    }

    pub fn domain(&self) -> Rational {
        self.knots.last().unwrap().0.clone()
    }

    pub fn target(&self) -> Rational {
        self.knots.last().unwrap().1.clone()
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        for w in self.knots.windows(2) {
            let ((u0, v0), (u1, v1)) = (&w[0], &w[1]);
            if u <= u1 {
                return rational::lerp(v0, v1, &((u - u0) / (u1 - u0)));
            }
        }
        self.target()
    }
}

/// The suspension `Σ|B|` of a pointed cubical set, the space all paths live in.
#[derive(Clone, Debug)]
pub struct Suspension {
    base: Arc<CubicalSet>,
    model: Arc<SuspensionModel>,
}

impl Suspension {
    pub fn new(base: CubicalSet) -> Self {
        let model = suspension_model(&base);
        Suspension { base: Arc::new(base), model: Arc::new(model) }
    }

    pub fn base(&self) -> &CubicalSet {
        &self.base
    }

    pub fn model(&self) -> &SuspensionModel {
        &self.model
    }

    /// Checks that `x` is a canonical point of `|B|`.
    pub fn check_point(&self, x: &RealizationPoint) -> Result<()> {
        let b = &self.base;
        if x.cube.0 >= b.len() {
            return Err(Error::DanglingCube(format!("#{}", x.cube.0)));
        }
        if x.coords.len() != b.dim(x.cube) || !x.coords.iter().all(rational::in_open_unit_interval) {
            return Err(Error::pre(
                "point",
                format!("coordinates of a point of {:?} must be {} values in (0,1)", b.name(x.cube), b.dim(x.cube)),
            ));
        }
        Ok(())
    }

    /// `[(h, x)]`, which is `*` when `|h| >= 1` or `x` is the basepoint.
    pub fn point(&self, h: Rational, x: RealizationPoint) -> SuspensionPoint {
        if h.abs() >= Rational::one() || self.base.is_basepoint(&x) {
            SuspensionPoint::Star
        } else {
            SuspensionPoint::Interior { h, x }
        }
    }

    /// Point a fraction `s` of the way along a track.
    pub fn track_point(&self, t: &Track, s: &Rational) -> SuspensionPoint {
        let h = rational::lerp(&t.h0, &t.h1, s);
        let c: Vec<Rational> = t.c0.iter().zip(&t.c1).map(|(a, b)| rational::lerp(a, b, s)).collect();
        let x = self.base.normalize_point(t.cube, &c).expect("track coordinates lie in [0,1]");
        self.point(h, x)
    }

    fn seg_point(&self, seg: &Segment, s: &Rational) -> SuspensionPoint {
        match &seg.body {
            SegmentBody::Star => SuspensionPoint::Star,
            SegmentBody::Track(t) => self.track_point(t, s),
        }
    }

    pub fn end(&self, path: &MoorePath) -> SuspensionPoint {
        match path.segments.last() {
            Some(seg) => self.seg_point(seg, &Rational::one()),
            None => path.start.clone(),
        }
    }

    /// Segment parked at a point for `duration`.
    pub fn constant_segment(&self, p: &SuspensionPoint, duration: Rational) -> Segment {
        match p {
            SuspensionPoint::Star => Segment::star(duration),
            SuspensionPoint::Interior { h, x } => Segment::track(duration, Track::constant(h.clone(), x)),
        }
    }

    pub fn constant(&self, p: &SuspensionPoint, duration: Rational) -> MoorePath {
        self.assemble(p.clone(), vec![self.constant_segment(p, duration)])
    }

    /// Constant loop at `*`.
    pub fn star_loop(&self, duration: Rational) -> MoorePath {
        self.constant(&SuspensionPoint::Star, duration)
    }

    fn check_track(&self, t: &Track) -> Result<()> {
        let b = &self.base;
        if t.cube.0 >= b.len() {
            return Err(Error::DanglingCube(format!("#{}", t.cube.0)));
        }
        let dim = b.dim(t.cube);
        if t.c0.len() != dim || t.c1.len() != dim {
            return Err(Error::Malformed(format!(
                "track in {:?} needs {} coordinates at each end",
                b.name(t.cube),
                dim
            )));
        }
        if !t.c0.iter().chain(&t.c1).all(rational::in_unit_interval) {
            return Err(Error::Malformed("track coordinates must lie in [0,1]".into()));
        }
        let unit = Rational::one();
        if t.h0.abs() > unit || t.h1.abs() > unit {
            return Err(Error::Malformed("track heights must lie in [-1,1]".into()));
        }
        Ok(())
    }

    fn canonical_body(&self, body: SegmentBody) -> SegmentBody {
        let SegmentBody::Track(t) = body else {
            return SegmentBody::Star;
        };
        if t.h0 == t.h1 && t.h0.abs() >= Rational::one() {
            return SegmentBody::Star;
        }
        let (cube, mut v) = self.base.normalize_cell(FaceRef::cube(t.cube), vec![t.c0, t.c1], |_| 0);
        if cube == self.base.basepoint() {
            return SegmentBody::Star;
        }
        let c1 = v.pop().unwrap();
        let c0 = v.pop().unwrap();
        SegmentBody::Track(Track { h0: t.h0, h1: t.h1, cube, c0, c1 })
    }

    /// Builds a path from segments, checking well-formedness and continuity,
    /// and brings it to canonical form. `start` is only consulted when there
    /// are no segments of positive duration.
    pub fn path(&self, start: Option<SuspensionPoint>, segments: Vec<Segment>) -> Result<MoorePath> {
        let mut canon = Vec::with_capacity(segments.len());
        for seg in segments {
            if seg.duration.is_negative() {
                return Err(Error::Malformed(format!("negative segment duration {}", seg.duration)));
            }
            if let SegmentBody::Track(t) = &seg.body {
                self.check_track(t)?;
            }
            canon.push(Segment { duration: seg.duration, body: self.canonical_body(seg.body) });
        }
        for (k, seg) in canon.iter().enumerate() {
            if seg.duration.is_zero() && self.seg_point(seg, &Rational::zero()) != self.seg_point(seg, &Rational::one()) {
                return Err(Error::Malformed(format!("segment {k} has zero duration but moves")));
            }
        }
        for (k, w) in canon.windows(2).enumerate() {
            if self.seg_point(&w[0], &Rational::one()) != self.seg_point(&w[1], &Rational::zero()) {
                return Err(Error::Malformed(format!("segments {k} and {} do not meet", k + 1)));
            }
        }
        let first = canon.first().map(|s| self.seg_point(s, &Rational::zero()));
        let start = match (first, start) {
            (Some(p), _) => p,
            (None, Some(p)) => p,
            (None, None) => SuspensionPoint::Star,
        };
        Ok(self.assemble(start, canon))
    }

    /// Canonical form of segments already known to be continuous.
    fn assemble(&self, start: SuspensionPoint, segments: Vec<Segment>) -> MoorePath {
        let mut out: Vec<Segment> = Vec::with_capacity(segments.len());
        for seg in segments {
            if seg.duration.is_zero() {
                continue;
            }
            let seg = Segment { duration: seg.duration, body: self.canonical_body(seg.body) };
            match (out.last_mut(), &seg.body) {
                (Some(prev), SegmentBody::Star) if prev.body == SegmentBody::Star => {
                    prev.duration += seg.duration;
                }
                (Some(prev), SegmentBody::Track(b)) if mergeable(prev, &seg.duration, b) => {
                    let SegmentBody::Track(a) = &mut prev.body else { unreachable!() };
                    a.h1 = b.h1.clone();
                    a.c1 = b.c1.clone();
                    prev.duration += seg.duration;
                }
                _ => out.push(seg),
            }
        }
        let start = match out.first() {
            Some(s) => self.seg_point(s, &Rational::zero()),
            None => start,
        };
        MoorePath { start, segments: out }
    }

    /// `α(t)` for `0 <= t <= t∞`.
    pub fn evaluate(&self, path: &MoorePath, t: &Rational) -> Result<SuspensionPoint> {
        if t.is_negative() || *t > path.duration() {
            return Err(Error::pre("evaluate", format!("time {t} outside [0, {}]", path.duration())));
        }
        for (t0, seg) in path.timed() {
            if *t <= &t0 + &seg.duration {
                return Ok(self.seg_point(seg, &((t - t0) / &seg.duration)));
            }
        }
        Ok(path.start.clone())
    }

    /// `α * β`, defined when `α` ends where `β` starts.
    pub fn concat(&self, a: &MoorePath, b: &MoorePath) -> Result<MoorePath> {
        if self.end(a) != b.start {
            return Err(Error::pre("concat", "first path does not end where the second starts"));
        }
        Ok(self.concat_unchecked(a, b))
    }

    pub(crate) fn concat_unchecked(&self, a: &MoorePath, b: &MoorePath) -> MoorePath {
        debug_assert_eq!(self.end(a), b.start);
        let segs = a.segments.iter().chain(&b.segments).cloned().collect();
        self.assemble(a.start.clone(), segs)
    }

    pub(crate) fn concat_all<'a>(&self, parts: impl IntoIterator<Item = &'a MoorePath>) -> MoorePath {
        let mut it = parts.into_iter();
        let first = it.next().cloned().unwrap_or_else(|| self.star_loop(Rational::zero()));
        it.fold(first, |acc, p| self.concat_unchecked(&acc, p))
    }

    /// `α|[t0, t1]`, shifted to start at time 0.
    pub fn restrict(&self, path: &MoorePath, t0: &Rational, t1: &Rational) -> Result<MoorePath> {
        let total = path.duration();
        if t0.is_negative() || t0 > t1 || *t1 > total {
            return Err(Error::pre("restrict", format!("[{t0}, {t1}] is not inside [0, {total}]")));
        }
        if t0 == t1 {
            let p = self.evaluate(path, t0)?;
            return Ok(MoorePath { start: p, segments: Vec::new() });
        }
        let mut out = Vec::new();
        for (s0, seg) in path.timed() {
            let s1 = &s0 + &seg.duration;
            let lo = if *t0 > s0 { t0.clone() } else { s0.clone() };
            let hi = if *t1 < s1 { t1.clone() } else { s1.clone() };
            if lo >= hi {
                continue;
            }
            let body = match &seg.body {
                SegmentBody::Star => SegmentBody::Star,
                SegmentBody::Track(t) => {
                    SegmentBody::Track(t.sub(&((&lo - &s0) / &seg.duration), &((&hi - &s0) / &seg.duration)))
                }
            };
            out.push(Segment { duration: hi - lo, body });
        }
        Ok(self.assemble(SuspensionPoint::Star, out))
    }

    /// Same trace, all durations multiplied by `factor > 0`.
    pub fn rescale(&self, path: &MoorePath, factor: &Rational) -> MoorePath {
        debug_assert!(factor.is_positive());
        let segs = path
            .segments
            .iter()
            .map(|s| Segment { duration: &s.duration * factor, body: s.body.clone() })
            .collect();
        MoorePath { start: path.start.clone(), segments: segs }
    }

    /// Linear reparametrization to total duration `d > 0`.
    pub fn with_duration(&self, path: &MoorePath, d: &Rational) -> MoorePath {
        let total = path.duration();
        if total.is_zero() {
            return self.constant(&path.start, d.clone());
        }
        self.rescale(path, &(d / total))
    }

    /// `α ∘ f` for a nondecreasing surjection `f` onto `[0, t∞]`.
    pub fn reparam(&self, path: &MoorePath, f: &PlMap) -> Result<MoorePath> {
        if f.target() != path.duration() {
            return Err(Error::pre(
                "reparam",
                format!("reparametrization ends at {}, path has duration {}", f.target(), path.duration()),
            ));
        }
        let mut segs = Vec::new();
        for w in f.knots.windows(2) {
            let ((u0, v0), (u1, v1)) = (&w[0], &w[1]);
            let du = u1 - u0;
            if v0 == v1 {
                segs.push(self.constant_segment(&self.evaluate(path, v0)?, du));
            } else {
                let piece = self.restrict(path, v0, v1)?;
                let scaled = self.rescale(&piece, &(du / (v1 - v0)));
                segs.extend(scaled.segments);
            }
        }
        Ok(self.assemble(path.start.clone(), segs))
    }

    /// `β_x^{a,b}(t) = [(a + t, x)]` on `[0, b - a]`.
    pub fn make_beta(&self, x: &RealizationPoint, a: &Rational, b: &Rational) -> Result<MoorePath> {
        if a >= b {
            return Err(Error::pre("make_beta", format!("need a < b, got a = {a}, b = {b}")));
        }
        self.check_point(x)?;
        Ok(self.beta_between(x, a, b))
    }

    /// `β(x) = β_x^{-1,1}`
    pub fn beta_loop(&self, x: &RealizationPoint) -> Result<MoorePath> {
        self.make_beta(x, &rational::int(-1), &rational::one())
    }

    /// `β_x^{a,b}` allowing `a == b` (a path of length zero).
    pub(crate) fn beta_between(&self, x: &RealizationPoint, a: &Rational, b: &Rational) -> MoorePath {
        let (lo, hi) = (-Rational::one(), Rational::one());
        let start = self.point(a.clone(), x.clone());
        if a == b {
            return MoorePath { start, segments: Vec::new() };
        }
        let mut segs = Vec::new();
        let h0 = a.clone().max(lo.clone());
        let h1 = b.clone().min(hi.clone());
        if *a < lo {
            segs.push(Segment::star(b.clone().min(lo.clone()) - a));
        }
        if h0 < h1 {
            segs.push(Segment::track(
                &h1 - &h0,
                Track { h0: h0.clone(), h1: h1.clone(), cube: x.cube, c0: x.coords.clone(), c1: x.coords.clone() },
            ));
        }
        if *b > hi {
            segs.push(Segment::star(b - a.clone().max(hi)));
        }
        self.assemble(start, segs)
    }

    /// Heights nondecreasing along every track, coordinates too for
    /// [`XStructure::Directed`], and consecutive segments meeting.
    pub fn verify_directed(&self, path: &MoorePath, x: XStructure) -> bool {
        let monotone = path.segments.iter().filter_map(Segment::as_track).all(|t| {
            t.h0 <= t.h1 && (x == XStructure::Total || t.c0.iter().zip(&t.c1).all(|(a, b)| a <= b))
        });
        let joined = path
            .segments
            .windows(2)
            .all(|w| self.seg_point(&w[0], &Rational::one()) == self.seg_point(&w[1], &Rational::zero()));
        monotone && joined
    }

    /// Which cone the end of a path from `*` lies in.
    pub fn classify_endpoint(&self, path: &MoorePath) -> Result<Endpoint> {
        if !path.start.is_star() {
            return Err(Error::pre("classify_endpoint", "path does not start at *"));
        }
        let end = self.end(path);
        let (class, in_minus, in_plus) = match end.height() {
            None => (EndpointClass::Star, true, true),
            Some(h) if h.is_zero() => (EndpointClass::Zero, true, true),
            Some(h) if h.is_negative() => (EndpointClass::Minus, true, false),
            Some(_) => (EndpointClass::Plus, false, true),
        };
        Ok(Endpoint { class, in_minus, in_plus, end })
    }

    /// Loop at `*`: starts and ends at the distinguished point.
    pub fn is_loop(&self, path: &MoorePath) -> bool {
        path.start.is_star() && self.end(path).is_star()
    }
}

fn mergeable(prev: &Segment, dur: &Rational, b: &Track) -> bool {
    let SegmentBody::Track(a) = &prev.body else {
        return false;
    };
    if a.cube != b.cube || a.h1 != b.h0 || a.c1 != b.c0 {
        return false;
    }
    let da = &prev.duration;
    let same_rate = |x0: &Rational, x1: &Rational, y0: &Rational, y1: &Rational| (x1 - x0) * dur == (y1 - y0) * da;
    same_rate(&a.h0, &a.h1, &b.h0, &b.h1)
        && (0..a.c0.len()).all(|k| same_rate(&a.c0[k], &a.c1[k], &b.c0[k], &b.c1[k]))
}
