//! Deforming a directed loop to a concatenation of loops `β(x)`, and from
//! there to the constant loop.

use num_traits::{One, Signed, Zero};

use crate::cubical::RealizationPoint;
use crate::error::{Error, Result};
use crate::path::{MoorePath, PlMap, Suspension, XStructure};
use crate::rational::{self, Rational};

/// `const_0 * α_1 * const_1 * .. * α_n * const_n`, where the `const_i` are
/// pauses at `*` (possibly of length zero) and each `α_i` leaves `*` only at
/// its ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub consts: Vec<Rational>,
    pub parts: Vec<MoorePath>,
}

/// Output of [`Suspension::full_straighten`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Straightening {
    pub result: MoorePath,
    pub frames: Vec<MoorePath>,
}

/// How a single part ends up after `Ĥ_1`.
enum Shape {
    /// Crossing height 0 at `x` at time `b` of a part of length `a`.
    Crossing { x: RealizationPoint, b: Rational, a: Rational },
    /// Never at height 0; pushed off to `*`.
    Vanishing { a: Rational },
}

/// Default sample times for emitted homotopies.
pub fn default_samples() -> Vec<Rational> {
    (0..=4).map(|k| rational::frac(k, 4)).collect()
}

/// `n >= 2` evenly spaced times `k / (n - 1)`.
pub fn even_samples(n: usize) -> Result<Vec<Rational>> {
    if n < 2 {
        return Err(Error::pre("samples", "need at least 2 sample times"));
    }
    Ok((0..n).map(|k| rational::frac(k as i64, n as i64 - 1)).collect())
}

impl Suspension {
    fn check_directed_loop(&self, op: &'static str, path: &MoorePath) -> Result<()> {
        if !self.is_loop(path) {
            return Err(Error::pre(op, "expected a loop at *"));
        }
        if !self.verify_directed(path, XStructure::Total) {
            return Err(Error::pre(op, "height decreases along the loop"));
        }
        Ok(())
    }

    pub fn chain_split(&self, path: &MoorePath) -> Result<ChainDecomposition> {
        self.check_directed_loop("chain_split", path)?;
        let mut consts = Vec::new();
        let mut parts = Vec::new();
        let mut t = Rational::zero();
        for e in self.excursions(path) {
            consts.push(&e.start - &t);
            parts.push(self.restrict(path, &e.start, &e.end)?);
            t = e.end;
        }
        consts.push(path.duration() - t);
        Ok(ChainDecomposition { consts, parts })
    }

    pub fn assemble_chain(&self, consts: &[Rational], parts: &[MoorePath]) -> MoorePath {
        let pauses: Vec<MoorePath> = consts.iter().map(|d| self.star_loop(d.clone())).collect();
        let mut all = Vec::with_capacity(consts.len() + parts.len());
        for (k, p) in pauses.iter().enumerate() {
            all.push(p);
            if let Some(q) = parts.get(k) {
                all.push(q);
            }
        }
        self.concat_all(all)
    }

    fn shape(&self, part: &MoorePath) -> Result<Shape> {
        let a = part.duration();
        let ex = self.excursions(part);
        let single = ex.len() == 1 && ex[0].start.is_zero() && ex[0].end == a;
        if !self.is_loop(part) || !single {
            return Err(Error::pre("straighten_step", "part must leave * exactly on its open interior"));
        }
        let mut cross = self.crossings("straighten_step", part)?;
        match cross.len() {
            0 => Ok(Shape::Vanishing { a }),
            1 => {
                let c = cross.pop().unwrap();
                Ok(Shape::Crossing { x: c.x, b: c.time, a })
            }
            count => Err(Error::MultipleCrossings { op: "straighten_step", count }),
        }
    }

    /// `Ĥ_t` on a single part: the half below height 0 shifted down by `t`
    /// followed by `β_x^{-t,0}`, the half above preceded by `β_x^{0,t}` and
    /// shifted up, each rescaled to its original length.
    pub fn straighten_step(&self, part: &MoorePath, t: &Rational) -> Result<MoorePath> {
        if !rational::in_unit_interval(t) {
            return Err(Error::pre("straighten_step", format!("t = {t} outside [0,1]")));
        }
        match self.shape(part)? {
            Shape::Vanishing { .. } => {
                let below = part
                    .segments()
                    .iter()
                    .filter_map(|s| s.as_track())
                    .any(|tr| (&tr.h0 + &tr.h1).is_negative());
                Ok(self.shift(part, &if below { -t.clone() } else { t.clone() }))
            }
            Shape::Crossing { x, b, a } => {
                let shrink = (Rational::one() + t).recip();
                let lower = self.restrict(part, &Rational::zero(), &b)?;
                let upper = self.restrict(part, &b, &a)?;
                let down = self.rescale(&self.beta_between(&x, &-t.clone(), &Rational::zero()), &b);
                let h_minus = self.concat(&self.shift(&lower, &-t.clone()), &down)?;
                let up = self.rescale(&self.beta_between(&x, &Rational::zero(), t), &(&a - &b));
                let h_plus = self.concat(&up, &self.shift(&upper, t))?;
                self.concat(&self.rescale(&h_minus, &shrink), &self.rescale(&h_plus, &shrink))
            }
        }
    }

    /// Reparametrization of `β(x)` interpolating between `Ĥ_1` of a part
    /// (`u = 0`) and `β(x)` run at constant speed over `[0, a]` (`u = 1`).
    fn uniform_deformation(&self, x: &RealizationPoint, b: &Rational, a: &Rational, u: &Rational) -> Result<MoorePath> {
        let two = rational::int(2);
        let f0 = [
            (Rational::zero(), Rational::zero()),
            (b / &two, Rational::zero()),
            (b.clone(), Rational::one()),
            ((a + b) / &two, two.clone()),
            (a.clone(), two.clone()),
        ];
        let knots = f0
            .into_iter()
            .map(|(s, v)| {
                let target = &two * &s / a;
                (s, rational::lerp(&v, &target, u))
            })
            .collect();
        self.reparam(&self.beta_loop(x)?, &PlMap::new(knots)?)
    }

    /// Deforms a loop to `β(x_1) * .. * β(x_n)`, each factor run over the
    /// length of the part it came from, emitting the loops at the sample
    /// times of each stage: `Ĥ_t` on every part, the uniform deformation to
    /// constant speed, and shrinking the pauses at `*` to length zero.
    pub fn full_straighten(&self, path: &MoorePath, samples: &[Rational]) -> Result<Straightening> {
        if let Some(t) = samples.iter().find(|t| !rational::in_unit_interval(t)) {
            return Err(Error::pre("full_straighten", format!("sample {t} outside [0,1]")));
        }
        let chain = self.chain_split(path)?;
        let shapes = chain.parts.iter().map(|p| self.shape(p)).collect::<Result<Vec<_>>>()?;

        let mut frames = Vec::new();
        for t in samples {
            let parts = chain.parts.iter().map(|p| self.straighten_step(p, t)).collect::<Result<Vec<_>>>()?;
            frames.push(self.assemble_chain(&chain.consts, &parts));
        }
        let stage_two = |u: &Rational| -> Result<Vec<MoorePath>> {
            shapes
                .iter()
                .map(|s| match s {
                    Shape::Crossing { x, b, a } => self.uniform_deformation(x, b, a, u),
                    Shape::Vanishing { a } => Ok(self.star_loop(a.clone())),
                })
                .collect()
        };
        for u in samples {
            frames.push(self.assemble_chain(&chain.consts, &stage_two(u)?));
        }
        let straight = stage_two(&Rational::one())?;
        let shrink = |u: &Rational| {
            let keep = Rational::one() - u;
            let consts: Vec<Rational> = chain.consts.iter().map(|d| d * &keep).collect();
            let parts: Vec<MoorePath> = straight
                .iter()
                .zip(&shapes)
                .map(|(p, s)| match s {
                    Shape::Crossing { .. } => p.clone(),
                    Shape::Vanishing { a } => self.star_loop(a * &keep),
                })
                .collect();
            self.assemble_chain(&consts, &parts)
        };
        for u in samples {
            frames.push(shrink(u));
        }
        frames.dedup();
        Ok(Straightening { result: shrink(&Rational::one()), frames })
    }

    /// A discrete homotopy from `α` to the constant loop: straightening, then
    /// moving each letter to a vertex of its cube and along edges to the
    /// basepoint, where its `β` collapses to a pause at `*`.
    pub fn contract_to_constant(&self, path: &MoorePath, samples: &[Rational]) -> Result<Vec<MoorePath>> {
        let b = self.base();
        let (components, _) = b.components();
        if components != 1 {
            return Err(Error::Disconnected { op: "contract_to_constant", components });
        }
        if path.is_constant_star() {
            return Ok(vec![path.clone()]);
        }
        let st = self.full_straighten(path, samples)?;
        let mut trail = st.frames;
        let chain = self.chain_split(&st.result)?;
        let mut letters = Vec::with_capacity(chain.parts.len());
        for p in &chain.parts {
            let x = self.sec(p)?.letters()[0].clone();
            letters.push((Some(x), p.duration()));
        }
        let frame = |letters: &[(Option<RealizationPoint>, Rational)]| -> Result<MoorePath> {
            let parts = letters
                .iter()
                .map(|(x, a)| match x {
                    Some(x) => Ok(self.with_duration(&self.beta_loop(x)?, a)),
                    None => Ok(self.star_loop(a.clone())),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(self.concat_all(&parts))
        };
        for i in 0..letters.len() {
            let x = letters[i].0.clone().expect("letters are collapsed in order");
            let mut moves: Vec<RealizationPoint> = Vec::new();
            for u in samples {
                let keep = Rational::one() - u;
                let coords: Vec<Rational> = x.coords.iter().map(|c| c * &keep).collect();
                moves.push(b.normalize_point(x.cube, &coords)?);
            }
            let v = b.min_vertex(x.cube);
            moves.push(RealizationPoint::vertex(v));
            let route = b.edge_path_to_basepoint(v).ok_or(Error::Disconnected { op: "contract_to_constant", components })?;
            for (edge, forward) in route {
                for u in samples {
                    let c = if forward { u.clone() } else { Rational::one() - u };
                    moves.push(b.normalize_point(edge, &[c])?);
                }
            }
            for y in moves {
                letters[i].0 = (!b.is_basepoint(&y)).then_some(y);
                trail.push(frame(&letters)?);
            }
            letters[i].0 = None;
            trail.push(frame(&letters)?);
        }
        trail.dedup();
        if let Some(k) = trail.iter().position(MoorePath::is_constant_star) {
            trail.truncate(k + 1);
        }
        Ok(trail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::standard::{circle, two_components, wedge_of_circles};
    use crate::james::{JamesWord, XPrimeLetter};
    use crate::path::{Segment, Track};
    use crate::rational::{frac, int};

    fn on(s: &Suspension, edge: &str, c: Rational) -> RealizationPoint {
        s.base().normalize_point(s.base().id(edge).unwrap(), &[c]).unwrap()
    }

    /// Excursion rising to 0 at `x` in two pieces, then moving `x` up while
    /// rising to 1.
    fn bent(s: &Suspension, x: Rational, to: Rational) -> MoorePath {
        let e = s.base().id("e").unwrap();
        let tr = |h0: Rational, h1: Rational, c0: &Rational, c1: &Rational| Track {
            h0,
            h1,
            cube: e,
            c0: vec![c0.clone()],
            c1: vec![c1.clone()],
        };
        s.path(
            None,
            vec![
                Segment::track(int(1), tr(int(-1), frac(-1, 4), &x, &x)),
                Segment::track(int(2), tr(frac(-1, 4), int(0), &x, &x)),
                Segment::track(frac(1, 2), tr(int(0), int(1), &x, &to)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn split_examples() {
        let s = Suspension::new(circle());
        let x1 = on(&s, "e", frac(1, 3));
        let x2 = on(&s, "e", frac(2, 3));
        let l = s.j_beta_prime(&[XPrimeLetter::Point(x1.clone()), XPrimeLetter::Point(x2.clone())]).unwrap();
        let c = s.chain_split(&l).unwrap();
        assert_eq!(c.consts, vec![int(0); 3]);
        assert_eq!(c.parts, vec![s.beta_loop(&x1).unwrap(), s.beta_loop(&x2).unwrap()]);
        assert_eq!(s.assemble_chain(&c.consts, &c.parts), l);

        let k = s.chain_split(&s.star_loop(int(2))).unwrap();
        assert_eq!((k.consts, k.parts.len()), (vec![int(2)], 0));

        let paused = s
            .j_beta_prime(&[XPrimeLetter::Point(x1), XPrimeLetter::Interval(frac(1, 2)), XPrimeLetter::Point(x2)])
            .unwrap();
        let c = s.chain_split(&paused).unwrap();
        assert_eq!(c.consts, vec![int(0), int(1), int(0)]);
    }

    #[test]
    fn step_ends() {
        let s = Suspension::new(circle());
        let p = bent(&s, frac(1, 4), frac(3, 4));
        assert_eq!(s.straighten_step(&p, &int(0)).unwrap(), p);
        let x = on(&s, "e", frac(1, 4));
        let a = p.duration();
        let b = int(3);
        // Ĥ_1 rises linearly on [b/2, b] and on [b, (a + b)/2], at * elsewhere
        let h1 = s.straighten_step(&p, &int(1)).unwrap();
        let f0 = PlMap::new(vec![
            (int(0), int(0)),
            (&b / int(2), int(0)),
            (b.clone(), int(1)),
            ((&a + &b) / int(2), int(2)),
            (a.clone(), int(2)),
        ])
        .unwrap();
        assert_eq!(h1, s.reparam(&s.beta_loop(&x).unwrap(), &f0).unwrap());
        assert!(matches!(s.straighten_step(&s.concat(&p, &p).unwrap(), &int(1)), Err(Error::Precondition { .. })));
    }

    #[test]
    fn step_preserves_invariants() {
        let s = Suspension::new(circle());
        let p = bent(&s, frac(1, 4), frac(3, 4));
        let word = s.sec(&p).unwrap();
        for t in even_samples(9).unwrap() {
            let q = s.straighten_step(&p, &t).unwrap();
            assert!(s.is_loop(&q));
            assert_eq!(q.duration(), p.duration());
            assert!(s.verify_directed(&q, XStructure::Directed));
            assert_eq!(s.sec(&q).unwrap(), word);
            let c = s.crossings("sec", &q).unwrap();
            assert_eq!(c.len(), 1);
        }
    }

    #[test]
    fn beta_is_fixed() {
        let s = Suspension::new(circle());
        let x = on(&s, "e", frac(1, 2));
        let b = s.beta_loop(&x).unwrap();
        let st = s.full_straighten(&b, &default_samples()).unwrap();
        assert_eq!(st.result, b);
        assert!(st.frames.iter().all(|f| s.is_loop(f)));
        let pause = s.full_straighten(&s.star_loop(int(3)), &default_samples()).unwrap();
        assert_eq!(pause.result.duration(), int(0));
        assert!(pause.result.is_constant_star());
    }

    #[test]
    fn straightened_loop_is_the_word() {
        let s = Suspension::new(circle());
        let p1 = bent(&s, frac(1, 4), frac(3, 4));
        let p2 = bent(&s, frac(1, 2), frac(1, 2));
        let l = s.assemble_chain(&[int(1), frac(1, 2), int(2)], &[p1.clone(), p2.clone()]);
        let st = s.full_straighten(&l, &default_samples()).unwrap();
        let x1 = on(&s, "e", frac(1, 4));
        let x2 = on(&s, "e", frac(1, 2));
        let expect = s.concat(
            &s.with_duration(&s.beta_loop(&x1).unwrap(), &p1.duration()),
            &s.with_duration(&s.beta_loop(&x2).unwrap(), &p2.duration()),
        ).unwrap();
        assert_eq!(st.result, expect);
        assert_eq!(s.full_straighten(&st.result, &default_samples()).unwrap().result, st.result);
        let w = s.sec(&l).unwrap();
        assert_eq!(w, JamesWord::reduce(s.base(), [x1, x2]));
        for f in &st.frames {
            assert!(s.is_loop(f) && s.verify_directed(f, XStructure::Directed));
            assert_eq!(s.sec(f).unwrap(), w);
        }
        assert_eq!(st.frames.first().unwrap(), &l);
        assert_eq!(st.frames.last().unwrap(), &st.result);
    }

    #[test]
    fn vanishing_parts() {
        // x runs once round the circle below height 0 and never crosses it
        let s = Suspension::new(circle());
        let e = s.base().id("e").unwrap();
        let low = s
            .path(
                None,
                vec![Segment::track(
                    int(1),
                    Track { h0: frac(-1, 2), h1: frac(-1, 4), cube: e, c0: vec![int(0)], c1: vec![int(1)] },
                )],
            )
            .unwrap();
        assert!(s.sec(&low).unwrap().is_empty());
        let st = s.full_straighten(&low, &default_samples()).unwrap();
        assert!(st.result.is_constant_star());
        assert_eq!(st.result.duration(), int(0));
        assert!(st.frames.iter().all(|f| s.is_loop(f) && s.sec(f).unwrap().is_empty()));
    }

    #[test]
    fn contract_circle() {
        let s = Suspension::new(circle());
        let b = s.beta_loop(&on(&s, "e", frac(1, 2))).unwrap();
        let trail = s.contract_to_constant(&b, &default_samples()).unwrap();
        assert_eq!(trail.first().unwrap(), &b);
        assert!(trail.last().unwrap().is_constant_star());
        assert!(trail.iter().all(|f| s.is_loop(f) && s.verify_directed(f, XStructure::Directed)));
        let k = s.star_loop(int(1));
        assert_eq!(s.contract_to_constant(&k, &default_samples()).unwrap(), vec![k]);
    }

    #[test]
    fn contract_wedge_word_shrinks() {
        let s = Suspension::new(wedge_of_circles());
        let w = JamesWord::reduce(s.base(), [on(&s, "e", frac(1, 3)), on(&s, "f", frac(2, 3))]);
        let trail = s.contract_to_constant(&s.j_beta(&w).unwrap(), &default_samples()).unwrap();
        let lens: Vec<usize> = trail.iter().map(|f| s.sec(f).unwrap().len()).collect();
        assert!(lens.windows(2).all(|p| p[1] <= p[0]));
        assert_eq!((lens[0], *lens.last().unwrap()), (2, 0));
    }

    #[test]
    fn contract_walks_edges() {
        // a -ab-> b -bc-> c based at a; a letter on bc goes back along ab
        let b = crate::cubical::CubicalSet::builder("a")
            .vertex("a")
            .vertex("b")
            .vertex("c")
            .cube("ab", &[["a", "b"]])
            .cube("bc", &[["b", "c"]])
            .build()
            .unwrap();
        let s = Suspension::new(b);
        let x = on(&s, "bc", frac(1, 2));
        let trail = s.contract_to_constant(&s.beta_loop(&x).unwrap(), &even_samples(3).unwrap()).unwrap();
        let letters: Vec<JamesWord> = trail.iter().map(|f| s.sec(f).unwrap()).collect();
        let b = s.base();
        let through = |name: &str| letters.iter().any(|w| w.letters().iter().any(|y| y.cube == b.id(name).unwrap()));
        assert!(through("b") && through("ab"));
        assert!(trail.last().unwrap().is_constant_star());
        assert!(trail.iter().all(|f| s.is_loop(f) && s.verify_directed(f, XStructure::Directed)));
    }

    #[test]
    fn contract_needs_connected() {
        let s = Suspension::new(two_components());
        let x = on(&s, "e", frac(1, 2));
        assert!(matches!(
            s.contract_to_constant(&s.beta_loop(&x).unwrap(), &default_samples()),
            Err(Error::Disconnected { components: 2, .. })
        ));
    }

    #[test]
    fn samples() {
        assert_eq!(even_samples(3).unwrap(), vec![int(0), frac(1, 2), int(1)]);
        assert!(even_samples(1).is_err());
    }
}
