//! The acceptance criteria. Each check returns a short summary on success
//! and the first counterexample on failure.

use std::thread;

use rand_chacha::ChaCha8Rng;

use jamesloop_core::cubical::standard::{circle, square, torus, two_components, wedge_of_circles};
use jamesloop_core::cubical::{self, suspension_model, CubicalSet, RealizationPoint, Subcomplex};
use jamesloop_core::homology::{betti, FieldSpec, GradedDims};
use jamesloop_core::james::{j_retract, JamesWord};
use jamesloop_core::loop_algebra::{loop_space_homology, verify_tensor_characterization};
use jamesloop_core::path::{MoorePath, Sign, Suspension, SuspensionPoint, XStructure};
use jamesloop_core::rational::{frac, int};
use jamesloop_core::{Error, Rational};

use crate::config::RunConfig;
use crate::corpus::{self, LoopShape};
use crate::oracle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(&RunConfig) -> Result<String, String>;

const CRITERIA: [(&str, Check); 10] = [
    ("homology of standard complexes", homology),
    ("suspension isomorphism", suspension_iso),
    ("loop-space homology as a tensor algebra", loop_homology),
    ("sec inverts J(β')", sec_of_beta),
    ("sec is a reparametrization-invariant homomorphism", sec_homomorphism),
    ("make_increasing", make_increasing),
    ("straightening retraction", straightening),
    ("contraction to the constant loop", contraction),
    ("φ, F, G homotopy endpoints", homotopy_ends),
    ("retraction r and the neighbourhood A", retraction),
];

/// Runs every criterion, each on its own thread; results come back in
/// criterion order.
pub fn run_all(cfg: &RunConfig) -> Vec<CriterionResult> {
    thread::scope(|scope| {
        let handles: Vec<_> = CRITERIA.iter().map(|(_, check)| scope.spawn(move || check(cfg))).collect();
        handles
            .into_iter()
            .zip(CRITERIA.iter())
            .enumerate()
            .map(|(i, (h, (name, _)))| {
                let outcome = h.join().unwrap_or_else(|_| Err("check panicked".into()));
                let passed = outcome.is_ok();
                let detail = outcome.unwrap_or_else(|e| e);
                CriterionResult { id: i + 1, name, passed, detail }
            })
            .collect()
    })
}

/// Runs one criterion by number.
pub fn run_one(cfg: &RunConfig, id: usize) -> Option<CriterionResult> {
    let (name, check) = CRITERIA.get(id.checked_sub(1)?)?;
    let outcome = check(cfg);
    Some(CriterionResult { id, name, passed: outcome.is_ok(), detail: outcome.unwrap_or_else(|e| e) })
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: jamesloop_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn named(name: &str) -> CubicalSet {
    match name {
        "circle" => circle(),
        "wedge" => wedge_of_circles(),
        "torus" => torus(),
        "square" => square(),
        _ => unreachable!("no standard complex {name}"),
    }
}

fn padded(d: &GradedDims, n: usize) -> Vec<usize> {
    (0..n).map(|k| d.get(k)).collect()
}

fn field_of(p: i64) -> FieldSpec {
    if p == 0 {
        FieldSpec::Rationals
    } else {
        FieldSpec::Prime(p as u64)
    }
}

fn homology(_: &RunConfig) -> Result<String, String> {
    let mut seen = Vec::new();
    for h in oracle::hand_complexes() {
        let k = named(h.name);
        for p in [0, 2] {
            let want = oracle::hand_betti(&h, p);
            let got = padded(&betti(&k, field_of(p)), want.len() + 1);
            let mut want_padded = want.clone();
            want_padded.push(0);
            ensure(got == want_padded, || format!("{} over {:?}: {:?} != {:?}", h.name, field_of(p), got, want))?;
        }
        seen.push(format!("{} {:?}", h.name, oracle::hand_betti(&h, 0)));
    }
    Ok(seen.join(", "))
}

fn suspension_iso(_: &RunConfig) -> Result<String, String> {
    let hands = oracle::hand_complexes();
    for name in ["circle", "wedge", "torus"] {
        let b = named(name);
        let model = suspension_model(&b);
        let hand = hands.iter().find(|h| h.name == name).unwrap();
        for p in [0, 2] {
            let field = field_of(p);
            let sigma = betti(&model.complex, field).reduced();
            // reduced oracle homology of B
            let mut want = oracle::hand_betti(hand, p);
            want[0] -= 1;
            for k in 0..=want.len() {
                let w = want.get(k).copied().unwrap_or(0);
                ensure(sigma.get(k + 1) == w, || {
                    format!("{name} over {field:?}: H̃_{}(ΣB) = {} but H̃_{k}(B) = {w}", k + 1, sigma.get(k + 1))
                })?;
            }
            ensure(sigma.get(0) == 0, || format!("{name}: ΣB is not connected"))?;
        }
    }
    Ok("circle, wedge, torus over Q and F_2".into())
}

fn loop_homology(cfg: &RunConfig) -> Result<String, String> {
    let hands = oracle::hand_complexes();
    let cases: [(&str, usize, Option<Vec<u128>>); 3] = [
        ("circle", cfg.degree.max(10), None),
        ("wedge", cfg.degree.max(10), None),
        ("torus", cfg.degree.max(5), Some(vec![1, 2, 5, 12, 29, 70])),
    ];
    let mut fields = vec![FieldSpec::Rationals, FieldSpec::Prime(2)];
    if !fields.contains(&cfg.field) {
        fields.push(cfg.field);
    }
    for (name, n, prefix) in cases {
        let b = named(name);
        let hand = hands.iter().find(|h| h.name == name).unwrap();
        // the oracle complexes have no torsion, so every field agrees with Q
        let mut v = oracle::hand_betti(hand, 0);
        v[0] -= 1;
        let want = oracle::count_words(&v, n);
        let closed_form: Vec<u128> = match name {
            "circle" => vec![1; n + 1],
            "wedge" => (0..=n as u32).map(|k| 2u128.pow(k)).collect(),
            _ => want.clone(),
        };
        ensure(want == closed_form, || format!("{name}: word count {want:?} != {closed_form:?}"))?;
        if let Some(prefix) = &prefix {
            ensure(want.starts_with(prefix), || format!("{name}: word count {want:?} does not start {prefix:?}"))?;
        }
        for &field in &fields {
            let series = lib(loop_space_homology(&b, field, n))?;
            ensure(series.coefficients() == want.as_slice(), || {
                format!("{name} over {field:?}: {:?} != {want:?}", series.coefficients())
            })?;
            let reduced = betti(&b, field).reduced();
            ensure(verify_tensor_characterization(&reduced, &series), || {
                format!("{name} over {field:?}: tensor characterization fails")
            })?;
        }
    }
    Ok(format!("circle and wedge through degree {}, torus through {}", cfg.degree.max(10), cfg.degree.max(5)))
}

/// The three connected spaces in turn, `n` cases in all.
fn spread(n: usize) -> impl Iterator<Item = (usize, Suspension)> {
    let spaces = corpus::spaces();
    (0..n).map(move |i| (i, spaces[i % spaces.len()].1.clone()))
}

fn sec_of_beta(cfg: &RunConfig) -> Result<String, String> {
    let mut rng = corpus::rng(cfg.seed);
    let mut longest = 0;
    for (i, s) in spread(100) {
        let w = corpus::word(s.base(), &mut rng, 6);
        longest = longest.max(w.len());
        let got = lib(s.sec(&lib(s.j_beta(&w))?))?;
        ensure(got == w, || format!("case {i}: sec(J(β')({w:?})) = {got:?}"))?;
        let wp = corpus::xprime_word(s.base(), &mut rng, 6);
        let got = lib(s.sec(&lib(s.j_beta_prime(&wp))?))?;
        let want = j_retract(s.base(), &wp);
        ensure(got == want, || format!("case {i}: sec(J(β')({wp:?})) = {got:?}, J(r) gives {want:?}"))?;
    }
    Ok(format!("100 words over circle/wedge/torus, longest {longest}, and 100 words in X'"))
}

fn crossing_times(s: &Suspension, l: &MoorePath) -> Result<Vec<Rational>, String> {
    Ok(lib(s.crossings("crossings", l))?.into_iter().map(|c| c.time).collect())
}

fn sec_homomorphism(cfg: &RunConfig) -> Result<String, String> {
    let mut rng = corpus::rng(cfg.seed ^ 5);
    for (i, s) in spread(100) {
        let (w1, w2) = (corpus::word(s.base(), &mut rng, 4), corpus::word(s.base(), &mut rng, 4));
        let l1 = corpus::directed_loop(&s, &w1, &mut rng, LoopShape::default());
        let l2 = corpus::directed_loop(&s, &w2, &mut rng, LoopShape::default());
        let (s1, s2) = (lib(s.sec(&l1))?, lib(s.sec(&l2))?);
        let joined = lib(s.sec(&lib(s.concat(&l1, &l2))?))?;
        ensure(joined == s1.multiply(&s2), || format!("case {i}: sec(α*β) = {joined:?} != {:?}", s1.multiply(&s2)))?;
        ensure(s1 == w1 && s2 == w2, || format!("case {i}: sec disagrees with the construction word"))?;
        let unit = lib(s.sec(&s.star_loop(int(1))))?;
        ensure(unit == JamesWord::empty(), || format!("case {i}: sec of a constant loop is {unit:?}"))?;

        let f = corpus::reparametrization(&mut rng, &l1.duration(), &crossing_times(&s, &l1)?);
        let moved = lib(s.sec(&lib(s.reparam(&l1, &f))?))?;
        ensure(moved == s1, || format!("case {i}: sec(α∘f) = {moved:?} != {s1:?}"))?;
    }
    Ok("100 pairs: sec(α*β) = sec α · sec β and sec(α∘f) = sec α".into())
}

/// The `make_increasing` height formula, point by point.
fn increasing_formula(s: &Suspension, l: &MoorePath, eps: &Rational, t: &Rational) -> SuspensionPoint {
    let total = l.duration();
    match s.evaluate(l, t).unwrap() {
        SuspensionPoint::Star => SuspensionPoint::Star,
        SuspensionPoint::Interior { h, x } => {
            oracle::at_height(s, (h + eps * t / &total) / (int(1) - eps), &x)
        }
    }
}

fn make_increasing(cfg: &RunConfig) -> Result<String, String> {
    let mut rng = corpus::rng(cfg.seed ^ 6);
    let mut epsilons = vec![frac(1, 4), frac(1, 2)];
    if !epsilons.contains(&cfg.epsilon) {
        epsilons.push(cfg.epsilon.clone());
    }
    let mut flat = 0;
    for (i, s) in spread(100) {
        let w = corpus::word(s.base(), &mut rng, 5);
        let l = corpus::directed_loop(&s, &w, &mut rng, LoopShape { plateaus: true });
        if !s.is_strictly_increasing(&l) {
            flat += 1;
        }
        for eps in &epsilons {
            let m = lib(s.make_increasing(&l, eps))?;
            ensure(s.is_strictly_increasing(&m), || format!("case {i}, ε = {eps}: not strictly increasing"))?;
            ensure(oracle::strictly_increasing(&s, &m), || {
                format!("case {i}, ε = {eps}: heights fail to increase between sampled times")
            })?;
            oracle::agrees_with(&s, &m, &l.duration(), 20, |t| increasing_formula(&s, &l, eps, t))
                .map_err(|e| format!("case {i}, ε = {eps}: {e}"))?;
            let got = lib(s.sec(&m))?;
            ensure(got == w, || format!("case {i}, ε = {eps}: sec = {got:?} != {w:?}"))?;
        }
    }
    let shown: Vec<String> = epsilons.iter().map(ToString::to_string).collect();
    Ok(format!("100 loops ({flat} with height plateaus), ε in {{{}}}", shown.join(", ")))
}

/// Each part of a chain decomposition run over `[0, 2]`, pauses dropped.
fn normalized(s: &Suspension, l: &MoorePath) -> Result<MoorePath, String> {
    let chain = lib(s.chain_split(l))?;
    let mut out = s.star_loop(int(0));
    for p in &chain.parts {
        out = lib(s.concat(&out, &s.with_duration(p, &int(2))))?;
    }
    Ok(out)
}

/// `β(x_1) * .. * β(x_n)` evaluated from the definition `β(x)(t) = [(t - 1, x)]`.
fn beta_word_at(s: &Suspension, w: &JamesWord, t: &Rational) -> SuspensionPoint {
    let two = int(2);
    let k = (t / &two).floor().to_integer();
    let k = usize::try_from(k).unwrap_or(0).min(w.len().saturating_sub(1));
    let local = t - &two * Rational::from_integer(k.into());
    match w.letters().get(k) {
        None => SuspensionPoint::Star,
        Some(x) => oracle::at_height(s, local - int(1), x),
    }
}

fn straightening(cfg: &RunConfig) -> Result<String, String> {
    let mut rng = corpus::rng(cfg.seed ^ 7);
    let mut frames = 0;
    for (i, s) in spread(100) {
        let w = corpus::word(s.base(), &mut rng, 4);
        let beta = lib(s.j_beta(&w))?;
        let st = lib(s.full_straighten(&beta, &cfg.samples))?;
        ensure(st.result == beta, || format!("case {i}: J(β')({w:?}) moved by straightening"))?;

        let wp = corpus::xprime_word(s.base(), &mut rng, 4);
        let st = lib(s.full_straighten(&lib(s.j_beta_prime(&wp))?, &cfg.samples))?;
        let want = lib(s.j_beta(&j_retract(s.base(), &wp)))?;
        ensure(st.result == want, || format!("case {i}: J(β')({wp:?}) straightens to {:?}", st.result))?;

        let l = corpus::directed_loop(&s, &w, &mut rng, LoopShape::default());
        ensure(s.is_strictly_increasing(&l), || format!("case {i}: corpus loop not strictly increasing"))?;
        let word = lib(s.sec(&l))?;
        let st = lib(s.full_straighten(&l, &cfg.samples))?;
        let result = normalized(&s, &st.result)?;
        let want = lib(s.j_beta(&word))?;
        ensure(result == want, || format!("case {i}: straightened loop is not J(β')(sec α)"))?;
        oracle::agrees_with(&s, &result, &int(2 * word.len() as i64), 20, |t| beta_word_at(&s, &word, t))
            .map_err(|e| format!("case {i}: {e}"))?;
        for (k, f) in st.frames.iter().enumerate() {
            ensure(s.is_loop(f) && s.verify_directed(f, XStructure::Total), || {
                format!("case {i}: frame {k} is not a directed loop")
            })?;
            let fw = lib(s.sec(f))?;
            ensure(fw == word, || format!("case {i}: frame {k} has sec {fw:?} != {word:?}"))?;
        }
        frames += st.frames.len();
    }
    Ok(format!("100 β words fixed, 100 loops straightened, {frames} frames checked"))
}

fn contraction(cfg: &RunConfig) -> Result<String, String> {
    let mut rng = corpus::rng(cfg.seed ^ 8);
    let mut frames = 0;
    for (i, s) in spread(50) {
        let w = corpus::word(s.base(), &mut rng, 4);
        let l = corpus::directed_loop(&s, &w, &mut rng, LoopShape::default());
        let trail = lib(s.contract_to_constant(&l, &cfg.samples))?;
        ensure(trail.first() == Some(&l) || l.is_constant_star(), || format!("case {i}: trail does not start at α"))?;
        ensure(trail.last().is_some_and(MoorePath::is_constant_star), || {
            format!("case {i}: trail does not end at a constant loop")
        })?;
        for (k, f) in trail.iter().enumerate() {
            ensure(s.is_loop(f) && s.verify_directed(f, XStructure::Total), || {
                format!("case {i}: frame {k} is not a directed loop")
            })?;
        }
        frames += trail.len();
    }
    // the straightened stage also respects the cube coordinates when asked
    let s = &corpus::spaces()[0].1;
    let w = corpus::word(s.base(), &mut rng, 3);
    let l = corpus::directed_loop(s, &w, &mut rng, LoopShape::default());
    for f in lib(s.full_straighten(&l, &cfg.samples))?.frames {
        ensure(s.verify_directed(&f, cfg.x_structure), || format!("straightening frame leaves {:?}", cfg.x_structure))?;
    }

    let split = Suspension::new(two_components());
    let x = lib(split.base().normalize_point(split.base().lookup("e").unwrap(), &[frac(1, 2)]))?;
    let l = lib(split.beta_loop(&x))?;
    match split.contract_to_constant(&l, &cfg.samples) {
        Err(Error::Disconnected { components: 2, .. }) => {}
        other => return Err(format!("two components: expected a connectedness error, got {other:?}")),
    }
    Ok(format!("50 loops contracted through {frames} frames; two components rejected"))
}

/// `φ±_t` of a point of the suspension, read off its height.
fn phi(s: &Suspension, t: &Rational, p: SuspensionPoint) -> SuspensionPoint {
    oracle::phi_point(s, Sign::Minus, t, &p)
}

/// `φ⁻_t ∘ α` followed by `[(a + u, x)]`, the latter also pushed through
/// `φ⁻_t` when `phi_tail` is set.
fn followed_by_beta<'a>(
    s: &'a Suspension,
    alpha: &'a MoorePath,
    x: &RealizationPoint,
    a: Rational,
    t: &Rational,
    phi_tail: bool,
) -> impl Fn(&Rational) -> SuspensionPoint + 'a {
    let total = alpha.duration();
    let x = x.clone();
    let t = t.clone();
    move |tau: &Rational| {
        if *tau <= total {
            phi(s, &t, s.evaluate(alpha, tau).unwrap())
        } else {
            let h = &a + (tau - &total);
            let p = oracle::at_height(s, h, &x);
            if phi_tail {
                phi(s, &t, p)
            } else {
                p
            }
        }
    }
}

fn homotopy_ends(cfg: &RunConfig) -> Result<String, String> {
    let mut rng = corpus::rng(cfg.seed ^ 9);
    let one = int(1);
    let ts = [int(0), frac(1, 3), frac(1, 2), int(1)];
    let mut checked = 0;
    for (i, s) in spread(30) {
        let mut w = corpus::word(s.base(), &mut rng, 3);
        if w.is_empty() {
            w = JamesWord::reduce(s.base(), [corpus::point(s.base(), &mut rng)]);
        }
        let l = corpus::directed_loop(&s, &w, &mut rng, LoopShape::default());
        let cross = lib(s.crossings("crossings", &l))?;
        let c = &cross[rng_index(&mut rng, cross.len())];
        // a path in L_0: from * to height 0 at x
        let alpha = lib(s.restrict(&l, &int(0), &c.time))?;
        let x = c.x.clone();
        let total = alpha.duration();

        for t in &ts {
            // (x, φ⁻_t ∘ (α * β_x^{-1, (t-1)/(1+t)})) on a loop α
            let (y, gf) = lib(s.gf_homotopy(&x, &l, t))?;
            ensure(y == x, || format!("case {i}: GF homotopy moved x"))?;
            let len = &one + (t - &one) / (t + &one);
            oracle::agrees_with(&s, &gf, &(l.duration() + &len), 20, followed_by_beta(&s, &l, &x, -one.clone(), t, true))
                .map_err(|e| format!("case {i}: GF at t = {t}: {e}"))?;
            // (φ⁻_t ∘ α) * β_x^{-t, 0} on a path α in L_0 ending at (0, x)
            let fg = lib(s.fg_homotopy(&alpha, t))?;
            oracle::agrees_with(&s, &fg, &(&total + t), 20, followed_by_beta(&s, &alpha, &x, -t.clone(), t, false))
                .map_err(|e| format!("case {i}: FG at t = {t}: {e}"))?;
            checked += 2;
        }
        // the ends are the identity and the composites
        let (_, gf0) = lib(s.gf_homotopy(&x, &l, &int(0)))?;
        ensure(gf0 == l && lib(s.fg_homotopy(&alpha, &int(0)))? == alpha, || format!("case {i}: H_0 is not the identity"))?;
        let g_of_f = lib(s.g_map(&lib(s.f_map(&x, &l))?))?;
        ensure((x.clone(), lib(s.gf_homotopy(&x, &l, &one))?.1) == g_of_f, || format!("case {i}: GF_1 != G∘F"))?;
        let (gx, galpha) = lib(s.g_map(&alpha))?;
        let f_of_g = lib(s.f_map(&gx, &galpha))?;
        ensure(lib(s.fg_homotopy(&alpha, &one))? == f_of_g, || format!("case {i}: FG_1 != F∘G"))?;

        for sign in [Sign::Minus, Sign::Plus] {
            for t in &ts {
                let moved = lib(s.apply_phi(&l, sign, t))?;
                oracle::agrees_with(&s, &moved, &l.duration(), 20, |tau| {
                    oracle::phi_point(&s, sign, t, &s.evaluate(&l, tau).unwrap())
                })
                .map_err(|e| format!("case {i}: φ at t = {t}: {e}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("30 loops and 30 paths in L_0, {checked} homotopy stages at 20 times each"))
}

fn rng_index(rng: &mut ChaCha8Rng, n: usize) -> usize {
    use rand::Rng;
    rng.gen_range(0..n)
}

/// `p` with coordinate `i` moved to within `1/3` of a face lands in that face
/// under `R_1`, so it lies in `A` when the face is in `L`.
fn margin_membership(k: &CubicalSet, l: &Subcomplex, p: &RealizationPoint) -> bool {
    let near = |s: &Rational| -> Option<u8> {
        if *s <= frac(1, 3) {
            Some(0)
        } else if *s >= frac(2, 3) {
            Some(1)
        } else {
            None
        }
    };
    if l.contains(p.cube) {
        return true;
    }
    // walk through the faces the point is pushed into, one coordinate at a time
    let mut cell = jamesloop_core::cubical::FaceRef::cube(p.cube);
    let mut coords = p.coords.clone();
    let mut i = 0;
    while i < coords.len() {
        match near(&coords[i]) {
            Some(eps) => {
                cell = k.face_of(&cell, i + 1, eps);
                coords.remove(i);
            }
            None => i += 1,
        }
    }
    l.contains(cell.base)
}

fn retraction(_: &RunConfig) -> Result<String, String> {
    let grid: Vec<Rational> = (0..=12).map(|k| frac(k, 12)).collect();
    let named_points = [int(0), frac(1, 3), frac(1, 2), frac(2, 3), int(1)];
    for s in named_points.iter().chain(&grid) {
        ensure(cubical::r(s) == oracle::r(s), || format!("r({s}) = {} != {}", cubical::r(s), oracle::r(s)))?;
    }

    let c = circle();
    let e = c.lookup("e").unwrap();
    for s in grid.iter().filter(|s| **s > int(0) && **s < int(1)) {
        let p = lib(c.normalize_point(e, std::slice::from_ref(s)))?;
        let got = c.r_collapse(&p);
        let rs = oracle::r(s);
        let want = if rs == int(0) || rs == int(1) {
            RealizationPoint::vertex(c.basepoint())
        } else {
            RealizationPoint { cube: e, coords: vec![rs] }
        };
        ensure(got == want, || format!("R_1 on the circle at {s}: {got:?} != {want:?}"))?;
    }

    let fine: Vec<Rational> = (1..24).map(|k| frac(k, 24)).collect();
    let cases: [(&str, CubicalSet, &str); 3] =
        [("circle", circle(), "v"), ("wedge", wedge_of_circles(), "e"), ("torus", torus(), "")];
    let mut tested = 0;
    for (name, k, l_name) in cases {
        // in the torus L is the closure of the first edge
        let l_cube = if l_name.is_empty() { k.ids_of_dim(1).next().unwrap() } else { k.lookup(l_name).unwrap() };
        let l = Subcomplex::closure(&k, [l_cube]);
        for cube in k.ids().filter(|&c| k.dim(c) > 0) {
            let dim = k.dim(cube);
            let mut idx = vec![0usize; dim];
            loop {
                let coords: Vec<Rational> = idx.iter().map(|&j| fine[j].clone()).collect();
                let p = lib(k.normalize_point(cube, &coords))?;
                let want = margin_membership(&k, &l, &p);
                ensure(k.in_a(&p, &l) == want, || format!("{name}: in_A({p:?}) != {want}"))?;
                // points of a cube outside L lie in A only within 1/3 of a face
                if !l.contains(p.cube) && want {
                    ensure(p.coords.iter().any(|s| *s <= frac(1, 3) || *s >= frac(2, 3)), || {
                        format!("{name}: {p:?} is inside A too far from every face")
                    })?;
                }
                tested += 1;
                let Some(pos) = idx.iter().position(|&j| j + 1 < fine.len()) else { break };
                idx[pos] += 1;
                for j in &mut idx[..pos] {
                    *j = 0;
                }
            }
        }
    }
    Ok(format!("r on {} values, R_1 on the circle, in_A on {tested} points", named_points.len() + grid.len()))
}
