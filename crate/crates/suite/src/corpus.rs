//! Seeded random inputs. Every generator takes the RNG explicitly so a run
//! is reproducible from its seed.
//!
//! Loops are perturbed images of `J(β')`: for each letter `x` a pause at `*`,
//! a climb from height -1 to 0 at `x` in several pieces of random speed, then
//! a climb from 0 to 1 during which `x` drifts upward inside its cube.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use jamesloop_core::cubical::standard::{circle, torus, wedge_of_circles};
use jamesloop_core::cubical::{CubicalSet, RealizationPoint};
use jamesloop_core::james::{JamesWord, XPrimeLetter};
use jamesloop_core::path::{MoorePath, PlMap, Segment, Suspension, Track};
use jamesloop_core::rational::{frac, int, lerp};
use jamesloop_core::Rational;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The connected complexes words and loops are drawn over.
pub fn spaces() -> Vec<(&'static str, Suspension)> {
    vec![
        ("circle", Suspension::new(circle())),
        ("wedge", Suspension::new(wedge_of_circles())),
        ("torus", Suspension::new(torus())),
    ]
}

/// `k / q` strictly between 0 and 1.
pub fn unit(rng: &mut ChaCha8Rng) -> Rational {
    let q = rng.gen_range(2..=12);
    frac(rng.gen_range(1..q), q)
}

/// Positive duration in quarters.
fn duration(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(1..=8), 4)
}

/// A point of `|B|` away from the basepoint.
pub fn point(b: &CubicalSet, rng: &mut ChaCha8Rng) -> RealizationPoint {
    let cubes: Vec<_> = b.ids().filter(|&c| c != b.basepoint()).collect();
    let c = *cubes.choose(rng).expect("complex has more than a point");
    let coords: Vec<Rational> = (0..b.dim(c)).map(|_| unit(rng)).collect();
    b.normalize_point(c, &coords).unwrap()
}

pub fn word(b: &CubicalSet, rng: &mut ChaCha8Rng, max_len: usize) -> JamesWord {
    let n = rng.gen_range(0..=max_len);
    JamesWord::reduce(b, (0..n).map(|_| point(b, rng)))
}

/// Word in `X'`: points mixed with interval letters (including the ends).
pub fn xprime_word(b: &CubicalSet, rng: &mut ChaCha8Rng, max_len: usize) -> Vec<XPrimeLetter> {
    let n = rng.gen_range(0..=max_len);
    (0..n)
        .map(|_| match rng.gen_range(0..4) {
            0 => XPrimeLetter::Interval(frac(rng.gen_range(0..=4), 4)),
            _ => XPrimeLetter::Point(point(b, rng)),
        })
        .collect()
}

/// Random increasing cut points `0 = h_0 < .. < h_n = 1` of `[0, 1]`, mapped
/// affinely onto `[lo, hi]`.
fn climb(rng: &mut ChaCha8Rng, lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let n = rng.gen_range(1..=3);
    let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=4)).collect();
    let total: i64 = weights.iter().sum();
    let mut acc = 0;
    let mut out = vec![lo.clone()];
    for w in weights {
        acc += w;
        out.push(lerp(lo, hi, &frac(acc, total)));
    }
    out
}

/// Options for [`directed_loop`].
#[derive(Clone, Copy, Debug, Default)]
pub struct LoopShape {
    /// Insert pieces of constant height, some of them at height 0, so the
    /// loop is directed but not strictly increasing.
    pub plateaus: bool,
}

/// A directed loop whose height-0 crossings are the letters of `word`.
pub fn directed_loop(s: &Suspension, word: &JamesWord, rng: &mut ChaCha8Rng, shape: LoopShape) -> MoorePath {
    let mut segs = Vec::new();
    for x in word.letters() {
        if rng.gen_bool(0.7) {
            segs.push(Segment::star(duration(rng)));
        }
        let track = |h0: &Rational, h1: &Rational, c0: &[Rational], c1: &[Rational]| Track {
            h0: h0.clone(),
            h1: h1.clone(),
            cube: x.cube,
            c0: c0.to_vec(),
            c1: c1.to_vec(),
        };
        let hs = climb(rng, &int(-1), &int(0));
        for w in hs.windows(2) {
            segs.push(Segment::track(duration(rng), track(&w[0], &w[1], &x.coords, &x.coords)));
            if shape.plateaus && rng.gen_bool(0.4) {
                segs.push(Segment::track(duration(rng), track(&w[1], &w[1], &x.coords, &x.coords)));
            }
        }
        // drift towards a target strictly inside the cube
        let target: Vec<Rational> =
            x.coords.iter().map(|c| lerp(c, &int(1), &frac(rng.gen_range(0..=4), 8))).collect();
        let hs = climb(rng, &int(0), &int(1));
        let n = hs.len() - 1;
        let mut c = x.coords.clone();
        for (k, w) in hs.windows(2).enumerate() {
            let next: Vec<Rational> =
                x.coords.iter().zip(&target).map(|(a, b)| lerp(a, b, &frac(k as i64 + 1, n as i64))).collect();
            segs.push(Segment::track(duration(rng), track(&w[0], &w[1], &c, &next)));
            c = next;
        }
    }
    if rng.gen_bool(0.5) {
        segs.push(Segment::star(duration(rng)));
    }
    s.path(None, segs).expect("generated loops are continuous")
}

/// Nondecreasing piecewise-linear surjection onto `[0, t∞]` that may pause,
/// but never at one of the given times.
pub fn reparametrization(rng: &mut ChaCha8Rng, total: &Rational, avoid: &[Rational]) -> PlMap {
    let mut vs: Vec<Rational> = (0..rng.gen_range(1..=4)).map(|_| total * unit(rng)).collect();
    vs.sort();
    vs.dedup();
    vs.push(total.clone());
    let mut knots = vec![(int(0), int(0))];
    let mut u = int(0);
    for v in vs {
        let prev = knots.last().unwrap().1.clone();
        if prev != v {
            u += duration(rng);
            knots.push((u.clone(), v.clone()));
        }
        if rng.gen_bool(0.3) && !avoid.contains(&v) {
            u += duration(rng);
            knots.push((u.clone(), v));
        }
    }
    PlMap::new(knots).expect("knots increase")
}
