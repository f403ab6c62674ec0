//! Graded dimensions of the tensor algebra `T(V)`, which is the homology of
//! the directed loop space of the suspension of a connected space with
//! `V` its reduced homology.

use serde::Serialize;

use crate::cubical::CubicalSet;
use crate::error::{Error, Result};
use crate::homology::{betti, FieldSpec, GradedDims};

/// Coefficients `a_0, .., a_N` of a graded algebra with `a_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    #[serde(rename = "series")]
    coefficients: Vec<u128>,
}

impl HilbertSeries {
    pub fn new(coefficients: Vec<u128>) -> Result<Self> {
        if coefficients.first() != Some(&1) {
            return Err(Error::pre("hilbert_series", "degree-0 coefficient must be 1"));
        }
        Ok(HilbertSeries { coefficients })
    }

    pub fn coefficients(&self) -> &[u128] {
        &self.coefficients
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }
}

/// `a_0 = 1`, `a_k = Σ_{j>=1} v_j a_{k-j}`: the coefficients of
/// `1 / (1 - Σ v_j t^j)` up to degree `n`.
pub fn tensor_algebra_dims(v: &GradedDims, n: usize) -> Result<HilbertSeries> {
    if v.get(0) != 0 {
        return Err(Error::pre(
            "tensor_algebra_dims",
            "V has a degree-0 part; the space must be connected",
        ));
    }
    let mut a: Vec<u128> = vec![1];
    for k in 1..=n {
        let mut acc: u128 = 0;
        for (&j, &vj) in v.dims.range(1..=k) {
            let term = (vj as u128).checked_mul(a[k - j]).ok_or(Error::Overflow("tensor_algebra_dims"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("tensor_algebra_dims"))?;
        }
        a.push(acc);
    }
    HilbertSeries::new(a)
}

/// Predicted Hilbert series of the directed loop space of `Σ|B|`, through
/// degree `n`.
pub fn loop_space_homology(b: &CubicalSet, field: FieldSpec, n: usize) -> Result<HilbertSeries> {
    let h = betti(b, field);
    if h.get(0) != 1 {
        return Err(Error::Disconnected { op: "loop_space_homology", components: h.get(0) });
    }
    tensor_algebra_dims(&h.reduced(), n)
}

/// Whether `V ⊗ A -> Ã` can be an isomorphism at the level of dimensions:
/// `a_k = Σ_j v_j a_{k-j}` for `1 <= k <= N`.
pub fn verify_tensor_characterization(v: &GradedDims, a: &HilbertSeries) -> bool {
    let a = a.coefficients();
    if a[0] != 1 || v.get(0) != 0 {
        return false;
    }
    (1..a.len()).all(|k| {
        let rhs = (1..=k).try_fold(0u128, |acc, j| {
            (v.get(j) as u128).checked_mul(a[k - j]).and_then(|t| acc.checked_add(t))
        });
        rhs == Some(a[k])
    })
}
