//! The James construction: words in the points of `|B|` with the basepoint as
//! unit, the map `J(β')` to loops in the suspension, and its inverse `sec`.

use crate::cubical::{CubicalSet, RealizationPoint};
use crate::error::{Error, Result};
use crate::path::{MoorePath, Suspension, XStructure};
use crate::rational::{self, Rational};

/// Reduced word: no letter is the basepoint.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct JamesWord {
    letters: Vec<RealizationPoint>,
}

impl JamesWord {
    pub fn empty() -> Self {
        JamesWord::default()
    }

    /// Deletes basepoint letters.
    pub fn reduce(b: &CubicalSet, letters: impl IntoIterator<Item = RealizationPoint>) -> Self {
        JamesWord { letters: letters.into_iter().filter(|x| !b.is_basepoint(x)).collect() }
    }

    pub fn letters(&self) -> &[RealizationPoint] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &JamesWord) -> JamesWord {
        JamesWord { letters: self.letters.iter().chain(&other.letters).cloned().collect() }
    }
}

/// Letter of `X' = X ∨ [0,1]`, with `Interval(1)` glued to the basepoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum XPrimeLetter {
    Point(RealizationPoint),
    Interval(Rational),
}

/// `J(r)`: interval letters retract to the basepoint and disappear.
pub fn j_retract(b: &CubicalSet, word: &[XPrimeLetter]) -> JamesWord {
    JamesWord::reduce(
        b,
        word.iter().filter_map(|l| match l {
            XPrimeLetter::Point(x) => Some(x.clone()),
            XPrimeLetter::Interval(_) => None,
        }),
    )
}

impl Suspension {
    /// `J(β')`: `β(x)` for a point letter, a pause at `*` of length `2t` for
    /// `Interval(t)`, concatenated.
    pub fn j_beta_prime(&self, word: &[XPrimeLetter]) -> Result<MoorePath> {
        let mut parts = Vec::with_capacity(word.len());
        for l in word {
            parts.push(match l {
                XPrimeLetter::Point(x) => self.beta_loop(x)?,
                XPrimeLetter::Interval(t) => {
                    if !rational::in_unit_interval(t) {
                        return Err(Error::Malformed(format!("interval letter {t} outside [0,1]")));
                    }
                    self.star_loop(rational::int(2) * t)
                }
            });
        }
        Ok(self.concat_all(&parts))
    }

    /// `J(β')` on a word of points.
    pub fn j_beta(&self, word: &JamesWord) -> Result<MoorePath> {
        let letters: Vec<XPrimeLetter> = word.letters().iter().cloned().map(XPrimeLetter::Point).collect();
        self.j_beta_prime(&letters)
    }

    /// The points where a loop with nondecreasing height passes height 0,
    /// in order, basepoint letters deleted.
    pub fn sec(&self, path: &MoorePath) -> Result<JamesWord> {
        if !self.is_loop(path) {
            return Err(Error::pre("sec", "expected a loop at *"));
        }
        if !self.verify_directed(path, XStructure::Total) {
            return Err(Error::pre("sec", "height decreases along the loop"));
        }
        let crossings = self.crossings("sec", path)?;
        Ok(JamesWord::reduce(self.base(), crossings.into_iter().map(|c| c.x)))
    }
}
