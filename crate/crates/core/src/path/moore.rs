//! The homotopy equivalence between `B x Ω` and the directed paths from `*`
//! ending at height 0.

use num_traits::{One, Zero};

use super::{MoorePath, Sign, Suspension, SuspensionPoint};
use crate::cubical::RealizationPoint;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

impl Suspension {
    /// `α|[0, s t∞]` for `s` in `[0, 1]`; contracts the space of paths from `*`.
    pub fn truncate_moore(&self, path: &MoorePath, s: &Rational) -> Result<MoorePath> {
        if !rational::in_unit_interval(s) {
            return Err(Error::pre("truncate_moore", format!("s = {s} outside [0,1]")));
        }
        self.restrict(path, &Rational::zero(), &(s * path.duration()))
    }

    fn check_loop(&self, op: &'static str, path: &MoorePath) -> Result<()> {
        if !self.is_loop(path) {
            return Err(Error::pre(op, "expected a loop at *"));
        }
        Ok(())
    }

    /// End point `x` of a path from `*` to height 0.
    pub fn height_zero_end(&self, op: &'static str, path: &MoorePath) -> Result<RealizationPoint> {
        if !path.start().is_star() {
            return Err(Error::pre(op, "path does not start at *"));
        }
        match self.end(path) {
            SuspensionPoint::Interior { h, x } if h.is_zero() => Ok(x),
            _ => Err(Error::pre(op, "path does not end at height 0")),
        }
    }

    /// `F(x, α) = α * β_x^{-1,0}`
    pub fn f_map(&self, x: &RealizationPoint, path: &MoorePath) -> Result<MoorePath> {
        self.check_point(x)?;
        self.check_loop("F", path)?;
        let beta = self.beta_between(x, &-Rational::one(), &Rational::zero());
        Ok(self.concat_unchecked(path, &beta))
    }

    /// `G(α) = (x, φ⁻ ∘ α)` where `α` ends at `(0, x)`.
    pub fn g_map(&self, path: &MoorePath) -> Result<(RealizationPoint, MoorePath)> {
        let x = self.height_zero_end("G", path)?;
        Ok((x, self.apply_phi(path, Sign::Minus, &Rational::one())?))
    }

    /// Homotopy from the identity (`t = 0`) to `G ∘ F` (`t = 1`):
    /// `(x, φ⁻_t ∘ (α * β_x^{-1, (t-1)/(1+t)}))`.
    pub fn gf_homotopy(
        &self,
        x: &RealizationPoint,
        path: &MoorePath,
        t: &Rational,
    ) -> Result<(RealizationPoint, MoorePath)> {
        self.check_point(x)?;
        self.check_loop("GF homotopy", path)?;
        if !rational::in_unit_interval(t) {
            return Err(Error::pre("GF homotopy", format!("t = {t} outside [0,1]")));
        }
        let one = Rational::one();
        let top = (t - &one) / (t + &one);
        let beta = self.beta_between(x, &-one, &top);
        let joined = self.concat_unchecked(path, &beta);
        Ok((x.clone(), self.apply_phi(&joined, Sign::Minus, t)?))
    }

    /// Homotopy from the identity (`t = 0`) to `F ∘ G` (`t = 1`):
    /// `(φ⁻_t ∘ α) * β_x^{-t, 0}`.
    pub fn fg_homotopy(&self, path: &MoorePath, t: &Rational) -> Result<MoorePath> {
        let x = self.height_zero_end("FG homotopy", path)?;
        if !rational::in_unit_interval(t) {
            return Err(Error::pre("FG homotopy", format!("t = {t} outside [0,1]")));
        }
        let moved = self.apply_phi(path, Sign::Minus, t)?;
        let beta = self.beta_between(&x, &-t.clone(), &Rational::zero());
        Ok(self.concat_unchecked(&moved, &beta))
    }
}
