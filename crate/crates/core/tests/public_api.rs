use jamesloop_core::cubical::standard::{circle, torus, wedge_of_circles};
use jamesloop_core::cubical::{quotient_collapse, tensor_product, Subcomplex};
use jamesloop_core::homology::{betti, FieldSpec};
use jamesloop_core::io;
use jamesloop_core::james::JamesWord;
use jamesloop_core::path::{Segment, Suspension, Track, XStructure};
use jamesloop_core::rational::{frac, int};
use jamesloop_core::straighten::default_samples;
use proptest::prelude::*;

#[test]
fn complexes_round_trip_through_json() {
    for k in [circle(), wedge_of_circles(), torus(), tensor_product(&torus(), &circle())] {
        let text = io::complex_to_value(&k).to_string();
        let back = io::parse_complex(&text).unwrap();
        assert_eq!(back, k);
        assert_eq!(io::complex_to_value(&back).to_string(), text);
    }
}

#[test]
fn three_torus_betti() {
    let t3 = tensor_product(&torus(), &circle());
    assert_eq!(betti(&t3, FieldSpec::Rationals).to_vec(), vec![1, 3, 3, 1]);
    assert!(t3.validate().is_empty());
}

#[test]
fn collapsing_a_circle_in_the_wedge() {
    let w = wedge_of_circles();
    let l = Subcomplex::closure(&w, [w.lookup("e").unwrap()]);
    let q = quotient_collapse(&w, &l).unwrap();
    assert_eq!(betti(&q, FieldSpec::Prime(3)).to_vec(), vec![1, 1]);
}

#[test]
fn bent_loop_from_file_straightens_to_its_word() {
    let s = Suspension::new(torus());
    let text = r#"{"segments":[
        {"kind":"star","dur":"1"},
        {"kind":"track","dur":"1","h":["-1","0"],"cube":"e⊗e","c0":["1/3","1/5"],"c1":["1/3","1/5"]},
        {"kind":"track","dur":"3","h":["0","1"],"cube":"e⊗e","c0":["1/3","1/5"],"c1":["1/2","1/4"]}]}"#
        .replace("e⊗e", &name_of_square(&s));
    let l = io::parse_path(&s, &text).unwrap();
    assert!(s.verify_directed(&l, XStructure::Directed));
    let w = s.sec(&l).unwrap();
    assert_eq!(w.len(), 1);
    let st = s.full_straighten(&l, &default_samples()).unwrap();
    assert_eq!(st.result, s.with_duration(&s.j_beta(&w).unwrap(), &int(4)));
}

fn name_of_square(s: &Suspension) -> String {
    let b = s.base();
    b.name(b.ids_of_dim(2).next().unwrap()).to_string()
}

proptest! {
    #[test]
    fn beta_words_round_trip(letters in prop::collection::vec((0usize..2, 1i64..12), 0..5)) {
        let s = Suspension::new(wedge_of_circles());
        let b = s.base();
        let pts = letters.iter().map(|&(c, k)| {
            let cube = b.lookup(["e", "f"][c]).unwrap();
            b.normalize_point(cube, &[frac(k, 12)]).unwrap()
        });
        let w = JamesWord::reduce(b, pts);
        let l = s.j_beta(&w).unwrap();
        let text = io::path_to_value(&s, &l).to_string();
        let back = io::parse_path(&s, &text).unwrap();
        prop_assert_eq!(&back, &l);
        prop_assert_eq!(s.sec(&back).unwrap(), w);
    }

    #[test]
    fn tracks_evaluate_linearly(h0 in -4i64..0, k in 1i64..8, num in 0i64..=8) {
        let s = Suspension::new(circle());
        let x = s.base().normalize_point(s.base().lookup("e").unwrap(), &[frac(1, 2)]).unwrap();
        let tr = Track { h0: frac(h0, 4), h1: frac(h0, 4) + frac(k, 8), cube: x.cube, c0: x.coords.clone(), c1: x.coords.clone() };
        let p = s.path(None, vec![Segment::track(int(2), tr.clone())]).unwrap();
        let t = frac(num, 4);
        let got = s.evaluate(&p, &t).unwrap();
        prop_assert_eq!(got, s.point(frac(h0, 4) + frac(k, 8) * &t / int(2), x));
    }
}
