//! Reference computations that share no code with the library beyond its
//! data types: literal boundary matrices, word enumeration, and pointwise
//! formulas.

use num_traits::{One, Signed, Zero};

use jamesloop_core::path::{MoorePath, Sign, Suspension, SuspensionPoint};
use jamesloop_core::rational::{frac, int};
use jamesloop_core::Rational;

/// A chain complex written out by hand: `boundaries[k]` is `∂_{k+1}` as a
/// `dims[k] x dims[k+1]` matrix.
pub struct HandComplex {
    pub name: &'static str,
    pub dims: Vec<usize>,
    pub boundaries: Vec<Vec<Vec<i64>>>,
}

/// Circle, wedge of two circles, torus and the square, with the boundary
/// `∂ = Σ (-1)^i (d^0_i - d^1_i)` evaluated by hand.
pub fn hand_complexes() -> Vec<HandComplex> {
    vec![
        // v; e from v to v
        HandComplex { name: "circle", dims: vec![1, 1], boundaries: vec![vec![vec![0]]] },
        HandComplex { name: "wedge", dims: vec![1, 2], boundaries: vec![vec![vec![0, 0]]] },
        // the square's opposite sides are glued, each edge appears twice with opposite signs
        HandComplex {
            name: "torus",
            dims: vec![1, 2, 1],
            boundaries: vec![vec![vec![0, 0]], vec![vec![0], vec![0]]],
        },
        // vertices v00 v10 v01 v11; edges left(v00,v01) right(v10,v11) bottom(v00,v10) top(v01,v11)
        HandComplex {
            name: "square",
            dims: vec![4, 4, 1],
            boundaries: vec![
                vec![vec![-1, 0, -1, 0], vec![0, -1, 1, 0], vec![1, 0, 0, -1], vec![0, 1, 0, 1]],
                // -(d0_1 - d1_1) + (d0_2 - d1_2) = -left + right + bottom - top
                vec![vec![-1], vec![1], vec![1], vec![-1]],
            ],
        },
    ]
}

/// Rank over `Q` (`p = 0`) or `F_p`, by elimination on a copy of the matrix.
pub fn rank(m: &[Vec<i64>], p: i64) -> usize {
    if p == 0 {
        let mut a: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        eliminate(&mut a)
    } else {
        let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
        let inv = |x: &i64| (1..p).find(|y| (x * y) % p == 1).unwrap();
        let mut r = 0;
        let cols = a.first().map_or(0, Vec::len);
        for c in 0..cols {
            let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
            a.swap(r, piv);
            let s = inv(&a[r][c]);
            for x in a[r].iter_mut() {
                *x = (*x * s) % p;
            }
            for i in 0..a.len() {
                if i != r && a[i][c] != 0 {
                    let f = a[i][c];
                    for j in 0..cols {
                        a[i][j] = (a[i][j] - f * a[r][j]).rem_euclid(p);
                    }
                }
            }
            r += 1;
        }
        r
    }
}

fn eliminate(a: &mut [Vec<Rational>]) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, piv);
        let s = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &s;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Betti numbers of a hand complex.
pub fn hand_betti(h: &HandComplex, p: i64) -> Vec<usize> {
    let ranks: Vec<usize> = h.boundaries.iter().map(|m| rank(m, p)).collect();
    (0..h.dims.len())
        .map(|k| {
            let out = if k == 0 { 0 } else { ranks[k - 1] };
            let inc = ranks.get(k).copied().unwrap_or(0);
            h.dims[k] - out - inc
        })
        .collect()
}

/// Number of words of total degree `k` in generators with the given degrees
/// (`v[j]` generators in degree `j`), for `k = 0..=n`, by listing them.
pub fn count_words(v: &[usize], n: usize) -> Vec<u128> {
    let gens: Vec<usize> = v.iter().enumerate().flat_map(|(deg, &c)| std::iter::repeat_n(deg, c)).collect();
    assert!(!gens.contains(&0), "degree-0 generators give infinitely many words");
    let mut counts = vec![0u128; n + 1];
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((deg, word)) = stack.pop() {
        counts[deg] += 1;
        for (g, &d) in gens.iter().enumerate() {
            if deg + d <= n {
                let mut w = word.clone();
                w.push(g);
                stack.push((deg + d, w));
            }
        }
    }
    counts
}

/// The retraction of the unit interval onto its ends, from its three pieces.
pub fn r(s: &Rational) -> Rational {
    let (third, two_thirds) = (frac(1, 3), frac(2, 3));
    if *s <= third {
        int(0)
    } else if *s >= two_thirds {
        int(1)
    } else {
        int(3) * s - int(1)
    }
}

/// `φ±_t` on a single point.
pub fn phi_point(s: &Suspension, sign: Sign, t: &Rational, p: &SuspensionPoint) -> SuspensionPoint {
    match p {
        SuspensionPoint::Star => SuspensionPoint::Star,
        SuspensionPoint::Interior { h, x } => {
            let shift = if sign == Sign::Minus { -t.clone() } else { t.clone() };
            s.point((t + Rational::one()) * h + shift, x.clone())
        }
    }
}

/// `[(h, x)]` with heights at or beyond `±1` read as `*`.
pub fn at_height(s: &Suspension, h: Rational, x: &jamesloop_core::cubical::RealizationPoint) -> SuspensionPoint {
    if h.abs() >= Rational::one() {
        SuspensionPoint::Star
    } else {
        s.point(h, x.clone())
    }
}

/// `n` evenly spaced times covering `[0, total]`.
pub fn sample_times(total: &Rational, n: usize) -> Vec<Rational> {
    (0..n).map(|k| total * frac(k as i64, n as i64 - 1)).collect()
}

/// Compares a path with a pointwise formula at `n` times.
pub fn agrees_with(
    s: &Suspension,
    path: &MoorePath,
    total: &Rational,
    n: usize,
    formula: impl Fn(&Rational) -> SuspensionPoint,
) -> Result<(), String> {
    if path.duration() != *total {
        return Err(format!("duration {} != {}", path.duration(), total));
    }
    for t in sample_times(total, n) {
        let got = s.evaluate(path, &t).map_err(|e| e.to_string())?;
        let want = formula(&t);
        if got != want {
            return Err(format!("at time {t}: {got:?} != {want:?}"));
        }
    }
    Ok(())
}

/// The literal strict-increase condition: among times not separated by a
/// visit to `*`, later times have larger heights. Checked on the ends and
/// quarter points of every segment.
pub fn strictly_increasing(s: &Suspension, path: &MoorePath) -> bool {
    let mut times = Vec::new();
    for (t0, seg) in path.timed() {
        for q in 0..4 {
            times.push(&t0 + &seg.duration * frac(q, 4));
        }
    }
    times.push(path.duration());
    let pts: Vec<SuspensionPoint> = times.iter().map(|t| s.evaluate(path, t).unwrap()).collect();
    let mut run: Vec<&Rational> = Vec::new();
    for p in &pts {
        match p.height() {
            None => run.clear(),
            Some(h) => {
                if run.iter().any(|prev| *prev >= h) {
                    return false;
                }
                run.push(h);
            }
        }
    }
    true
}
