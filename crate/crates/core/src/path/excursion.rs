//! Excursions away from `*`, crossings of height 0, and comparison of paths
//! up to reparametrization.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::{MoorePath, Segment, SegmentBody, Suspension, SuspensionPoint, Track};
use crate::cubical::Subcomplex;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Maximal stretch of a loop spent away from `*`: segments `first..last`
/// over the times `[start, end]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Excursion {
    pub first: usize,
    pub last: usize,
    pub start: Rational,
    pub end: Rational,
}

/// A time at which a loop passes height 0, at the point `x` of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub time: Rational,
    pub x: crate::cubical::RealizationPoint,
}

/// Neighbourhood of `*` used to trim loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Neighborhood {
    /// Points with `|h| > 1 - δ`.
    Height(Rational),
    /// `R^{-1}` of the collapsed vertex in the cubical model of the suspension.
    Model,
}

impl Suspension {
    /// Maximal runs of track segments not passing through `*` in between.
    pub fn excursions(&self, path: &MoorePath) -> Vec<Excursion> {
        let mut out: Vec<Excursion> = Vec::new();
        let mut open = false;
        for (k, (t0, seg)) in path.timed().enumerate() {
            let t1 = &t0 + &seg.duration;
            if seg.body == SegmentBody::Star {
                open = false;
                continue;
            }
            let joins = open && !self.seg_point(&path.segments()[k - 1], &Rational::one()).is_star();
            match out.last_mut() {
                Some(e) if joins => {
                    e.last = k + 1;
                    e.end = t1;
                }
                _ => out.push(Excursion { first: k, last: k + 1, start: t0, end: t1 }),
            }
            open = !self.seg_point(seg, &Rational::one()).is_star();
        }
        out
    }

    /// Times at which a loop with nondecreasing height is at height 0.
    /// A stay of positive length at height 0 is an error.
    pub fn crossings(&self, op: &'static str, path: &MoorePath) -> Result<Vec<Crossing>> {
        self.crossings_in(op, path, 0, path.segments().len())
    }

    pub(crate) fn crossings_in(
        &self,
        op: &'static str,
        path: &MoorePath,
        first: usize,
        last: usize,
    ) -> Result<Vec<Crossing>> {
        let mut times: Vec<(Rational, &Segment, Rational)> = Vec::new();
        for (k, (t0, seg)) in path.timed().enumerate() {
            if k < first || k >= last {
                continue;
            }
            let Some(t) = seg.as_track() else { continue };
            if t.h0.is_zero() && t.h1.is_zero() {
                return Err(Error::HeightPlateau { op });
            }
            if t.h0 > t.h1 {
                return Err(Error::pre(op, "height decreases along the loop"));
            }
            if !t.h0.is_positive() && !t.h1.is_negative() {
                let s = -&t.h0 / (&t.h1 - &t.h0);
                let time = &t0 + &s * &seg.duration;
                if times.last().is_none_or(|(prev, _, _)| *prev != time) {
                    times.push((time, seg, s));
                }
            }
        }
        Ok(times
            .into_iter()
            .map(|(time, seg, s)| match self.seg_point(seg, &s) {
                SuspensionPoint::Interior { x, .. } => Crossing { time, x },
                SuspensionPoint::Star => Crossing { time, x: self.base().basepoint_point() },
            })
            .collect())
    }

    pub fn in_neighborhood(&self, p: &SuspensionPoint, n: &Neighborhood) -> bool {
        match (p, n) {
            (SuspensionPoint::Star, _) => true,
            (SuspensionPoint::Interior { h, .. }, Neighborhood::Height(delta)) => h.abs() > Rational::one() - delta,
            (SuspensionPoint::Interior { h, x }, Neighborhood::Model) => {
                let m = self.model();
                m.complex.in_a(&m.lift(h, x), &Subcomplex::new([m.star]))
            }
        }
    }

    /// Whether every point of the track lies in the neighbourhood. Exact: the
    /// predicate only changes where the height or a coordinate crosses one of
    /// finitely many thresholds, so it is checked there and in between.
    fn track_inside(&self, t: &Track, n: &Neighborhood) -> bool {
        let (heights, coords): (Vec<Rational>, Vec<Rational>) = match n {
            Neighborhood::Height(delta) => {
                let b = Rational::one() - delta;
                (vec![-b.clone(), b], vec![])
            }
            Neighborhood::Model => (
                [-2, -1, 0, 1, 2].iter().map(|&k| rational::frac(k, 3)).collect(),
                vec![rational::frac(1, 3), rational::frac(2, 3)],
            ),
        };
        let mut cuts: BTreeSet<Rational> = [Rational::zero(), Rational::one()].into();
        let mut add = |a: &Rational, b: &Rational, v: &Rational| {
            if a != b {
                let s = (v - a) / (b - a);
                if s.is_positive() && s < Rational::one() {
                    cuts.insert(s);
                }
            }
        };
        for v in &heights {
            add(&t.h0, &t.h1, v);
        }
        for v in &coords {
            for (a, b) in t.c0.iter().zip(&t.c1) {
                add(a, b, v);
            }
        }
        let cuts: Vec<Rational> = cuts.into_iter().collect();
        let mids = cuts.windows(2).map(|w| (&w[0] + &w[1]) / rational::int(2));
        cuts.iter().cloned().chain(mids).all(|s| self.in_neighborhood(&self.track_point(t, &s), n))
    }

    /// Replaces each excursion lying entirely in the neighbourhood by a pause
    /// at `*` of the same duration.
    pub fn truncate_near_basepoint(&self, path: &MoorePath, n: &Neighborhood) -> Result<MoorePath> {
        if let Neighborhood::Height(delta) = n {
            if !rational::in_open_unit_interval(delta) {
                return Err(Error::pre("truncate_near_basepoint", format!("δ = {delta} outside (0,1)")));
            }
        }
        let segs = path.segments();
        let mut out: Vec<Segment> = segs.to_vec();
        for e in self.excursions(path) {
            let closed = self.seg_point(&segs[e.first], &Rational::zero()).is_star()
                && self.seg_point(&segs[e.last - 1], &Rational::one()).is_star();
            let inside = segs[e.first..e.last]
                .iter()
                .all(|s| s.as_track().is_none_or(|t| self.track_inside(t, n)));
            if closed && inside {
                for s in &mut out[e.first..e.last] {
                    s.body = SegmentBody::Star;
                }
            }
        }
        Ok(self.assemble(path.start().clone(), out))
    }

    /// Normal form up to nondecreasing reparametrization: pauses removed,
    /// consecutive pieces moving in the same direction merged, unit durations.
    pub fn trace(&self, path: &MoorePath) -> Vec<Track> {
        let mut out: Vec<Track> = Vec::new();
        for t in path.segments().iter().filter_map(Segment::as_track) {
            if t.is_stationary() {
                continue;
            }
            if let Some(prev) = out.last_mut() {
                if prev.cube == t.cube && prev.h1 == t.h0 && prev.c1 == t.c0 && same_direction(prev, t) {
                    prev.h1 = t.h1.clone();
                    prev.c1 = t.c1.clone();
                    continue;
                }
            }
            out.push(t.clone());
        }
        out
    }

    /// Equal up to nondecreasing reparametrization.
    pub fn same_trace(&self, a: &MoorePath, b: &MoorePath) -> bool {
        let endpoints = |p: &MoorePath| (p.start().clone(), self.end(p));
        endpoints(a) == endpoints(b) && self.trace(a) == self.trace(b)
    }
}

/// Velocity vectors are positive multiples of each other.
fn same_direction(a: &Track, b: &Track) -> bool {
    let da: Vec<Rational> = std::iter::once(&a.h1 - &a.h0)
        .chain(a.c0.iter().zip(&a.c1).map(|(x, y)| y - x))
        .collect();
    let db: Vec<Rational> = std::iter::once(&b.h1 - &b.h0)
        .chain(b.c0.iter().zip(&b.c1).map(|(x, y)| y - x))
        .collect();
    let Some(k) = da.iter().position(|v| !v.is_zero()) else { return false };
    let ratio = &db[k] / &da[k];
    ratio.is_positive() && da.iter().zip(&db).all(|(x, y)| x * &ratio == *y)
}
