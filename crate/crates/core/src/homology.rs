//! Normalized cubical chains and homology over a field.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cubical::{CubeId, CubicalSet};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::pre("field", format!("{p} is not prime")))
        }
    }

    /// `q` or `zp:<p>`
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(FieldSpec::Rationals),
            _ => {
                let p = s
                    .strip_prefix("zp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Malformed(format!("field {s:?}: expected q or zp:<p>")))?;
                Self::prime(p)
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Integer matrix; rows index `C_{k-1}`, columns index `C_k`.
pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub field: FieldSpec,
    /// Nondegenerate cubes of each degree.
    pub basis: Vec<Vec<CubeId>>,
    /// `boundary[k]` represents `∂_k : C_k -> C_{k-1}`; `boundary[0]` is empty.
    pub boundary: Vec<IntMatrix>,
}

impl ChainComplex {
    /// `∂c = Σ_i (-1)^i (d^0_i c - d^1_i c)`, degenerate faces dropped.
    pub fn new(k: &CubicalSet, field: FieldSpec) -> Self {
        let top = k.top_dim();
        let basis: Vec<Vec<CubeId>> = (0..=top).map(|d| k.ids_of_dim(d).collect()).collect();
        let position: HashMap<CubeId, usize> =
            basis.iter().flat_map(|b| b.iter().enumerate().map(|(i, &c)| (c, i))).collect();
        let mut boundary = vec![Vec::new()];
        for d in 1..=top {
            let mut m = vec![vec![0i64; basis[d].len()]; basis[d - 1].len()];
            for (col, &c) in basis[d].iter().enumerate() {
                for i in 1..=d {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    for (eps, s) in [(0u8, sign), (1, -sign)] {
                        let f = k.face(c, i, eps);
                        if !f.is_degenerate() {
                            m[position[&f.base]][col] += s;
                        }
                    }
                }
            }
            boundary.push(m);
        }
        ChainComplex { field, basis, boundary }
    }

    pub fn rank(&self, dim: usize) -> usize {
        self.basis.get(dim).map_or(0, Vec::len)
    }

    /// Checks `∂_{k-1} ∂_k = 0` over the integers.
    pub fn is_complex(&self) -> bool {
        (2..self.boundary.len()).all(|k| {
            let (a, b) = (&self.boundary[k - 1], &self.boundary[k]);
            let inner = self.rank(k - 1);
            (0..self.rank(k - 2)).all(|r| {
                (0..self.rank(k)).all(|c| (0..inner).map(|j| a[r][j] * b[j][c]).sum::<i64>() == 0)
            })
        })
    }

    pub fn boundary_rank(&self, k: usize) -> usize {
        if k == 0 || k >= self.boundary.len() {
            return 0;
        }
        matrix_rank(&self.boundary[k], self.field)
    }

    pub fn betti(&self) -> GradedDims {
        let top = self.basis.len() - 1;
        let ranks: Vec<usize> = (0..=top + 1).map(|k| self.boundary_rank(k)).collect();
        let dims = (0..=top).map(|k| (k, self.rank(k) - ranks[k] - ranks[k + 1])).collect();
        GradedDims { dims, top }
    }
}

/// Graded dimensions in degrees `0..=top`; missing degrees are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    #[serde(with = "string_keys")]
    pub dims: BTreeMap<usize, usize>,
    #[serde(skip)]
    pub top: usize,
}

impl GradedDims {
    pub fn from_slice(v: &[usize]) -> Self {
        GradedDims { dims: v.iter().copied().enumerate().collect(), top: v.len().saturating_sub(1) }
    }

    pub fn get(&self, k: usize) -> usize {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        (0..=self.top).map(|k| self.get(k)).collect()
    }

    /// Reduced homology: one less in degree 0.
    pub fn reduced(&self) -> Self {
        let mut out = self.clone();
        let d0 = out.dims.entry(0).or_insert(0);
        *d0 = d0.saturating_sub(1);
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().map(|(&k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

mod string_keys {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::collections::BTreeMap;

    /// Keys are written in numeric order.
    pub fn serialize<S: Serializer>(m: &BTreeMap<usize, usize>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(m.iter().map(|(k, v)| (k.to_string(), *v)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, usize>, D::Error> {
        let raw = BTreeMap::<String, usize>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub fn chain_complex(k: &CubicalSet, field: FieldSpec) -> ChainComplex {
    ChainComplex::new(k, field)
}

pub fn betti(k: &CubicalSet, field: FieldSpec) -> GradedDims {
    ChainComplex::new(k, field).betti()
}

/// Rank by exact Gaussian elimination.
pub fn matrix_rank(m: &IntMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => {
            let rows = m.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
            eliminate(rows, |a: &Rational| a.is_zero(), |a, b| a / b, |a, f, b| a - f * b)
        }
        FieldSpec::Prime(p) => {
            let rows = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
            let mul = move |a: u64, b: u64| (a as u128 * b as u128 % p as u128) as u64;
            let div = move |a: &u64, b: &u64| mul(*a, pow_mod(*b, p - 2, p));
            eliminate(rows, |a: &u64| *a == 0, div, move |a: &u64, f: &u64, b: &u64| (a + p - mul(*f, *b)) % p)
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Row reduction over an abstract field given by its operations.
fn eliminate<T: Clone>(
    mut rows: Vec<Vec<T>>,
    is_zero: impl Fn(&T) -> bool,
    div: impl Fn(&T, &T) -> T,
    sub_mul: impl Fn(&T, &T, &T) -> T,
) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if is_zero(&rows[r][col]) {
                continue;
            }
            let f = div(&rows[r][col], &p);
            for c in col..ncols {
                rows[r][c] = sub_mul(&rows[r][c], &f, &rows[rank][c]);
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::standard::*;
    use crate::cubical::{suspension_model, tensor_product};

    const FIELDS: [FieldSpec; 3] = [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)];

    #[test]
    fn interval_boundary_sign() {
        let k = interval();
        let c = chain_complex(&k, FieldSpec::Rationals);
        let a = c.basis[0].iter().position(|&v| k.name(v) == "a").unwrap();
        let b = c.basis[0].iter().position(|&v| k.name(v) == "b").unwrap();
        assert_eq!(c.boundary[1][a][0], -1);
        assert_eq!(c.boundary[1][b][0], 1);
    }

    #[test]
    fn circle_and_torus() {
        for f in FIELDS {
            assert_eq!(betti(&circle(), f).to_vec(), vec![1, 1]);
            assert_eq!(betti(&wedge_of_circles(), f).to_vec(), vec![1, 2]);
            let t = torus();
            let c = chain_complex(&t, f);
            assert!(c.boundary[2].iter().flatten().all(|&x| x == 0));
            assert_eq!(c.betti().to_vec(), vec![1, 2, 1]);
        }
    }

    #[test]
    fn suspension_of_circle_is_a_sphere() {
        for f in FIELDS {
            assert_eq!(betti(&suspension_model(&circle()).complex, f).to_vec(), vec![1, 0, 1]);
        }
    }

    #[test]
    fn square_and_interval_are_contractible() {
        for f in FIELDS {
            assert_eq!(betti(&square(), f).to_vec(), vec![1, 0, 0]);
            assert_eq!(betti(&interval(), f).to_vec(), vec![1, 0]);
            assert_eq!(betti(&two_components(), f).to_vec(), vec![2, 1]);
        }
    }

    #[test]
    fn boundary_squares_to_zero_and_euler() {
        let mut corpus = vec![circle(), wedge_of_circles(), torus(), square(), tensor_product(&torus(), &circle())];
        let suspensions: Vec<_> = corpus.iter().map(|b| suspension_model(b).complex).collect();
        corpus.extend(suspensions);
        for k in &corpus {
            let c = chain_complex(k, FieldSpec::Rationals);
            assert!(c.is_complex());
            let chi: i64 = k.counts().iter().enumerate().map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
            assert_eq!(c.betti().euler_characteristic(), chi);
        }
    }

    #[test]
    fn suspension_isomorphism() {
        for b in [circle(), wedge_of_circles(), torus(), square()] {
            for f in FIELDS {
                let hb = betti(&b, f).reduced();
                let hs = betti(&suspension_model(&b).complex, f).reduced();
                assert_eq!(hs.get(0), 0);
                for k in 0..=b.top_dim() {
                    assert_eq!(hs.get(k + 1), hb.get(k), "degree {k}");
                }
            }
        }
    }

    #[test]
    fn three_torus() {
        let t3 = tensor_product(&torus(), &circle());
        assert_eq!(betti(&t3, FieldSpec::Prime(2)).to_vec(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn field_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("zp:7").unwrap(), FieldSpec::Prime(7));
        assert!(matches!(FieldSpec::parse("zp:6"), Err(Error::Precondition { .. })));
        assert!(matches!(FieldSpec::parse("zz"), Err(Error::Malformed(_))));
    }

    #[test]
    fn rank_mod_p_differs_from_rationals() {
        let m = vec![vec![2, 0], vec![0, 1]];
        assert_eq!(matrix_rank(&m, FieldSpec::Rationals), 2);
        assert_eq!(matrix_rank(&m, FieldSpec::Prime(2)), 1);
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&betti(&circle(), FieldSpec::Rationals)).unwrap();
        assert_eq!(s, r#"{"dims":{"0":1,"1":1}}"#);
    }
}
