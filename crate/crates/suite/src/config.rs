use jamesloop_core::homology::FieldSpec;
use jamesloop_core::path::XStructure;
use jamesloop_core::rational::{frac, in_open_unit_interval, in_unit_interval};
use jamesloop_core::straighten::default_samples;
use jamesloop_core::{Error, Rational, Result};

/// Settings shared by the acceptance suite and the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Extra field for the loop-space homology check, on top of `Q` and `F_2`.
    pub field: FieldSpec,
    /// Loop-space homology is checked through at least this degree.
    pub degree: usize,
    /// Extra `ε` for the `make_increasing` check, on top of `1/4` and `1/2`.
    pub epsilon: Rational,
    /// Sample times of emitted homotopies.
    pub samples: Vec<Rational>,
    /// Structure that contraction frames are checked against.
    pub x_structure: XStructure,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field: FieldSpec::Rationals,
            degree: 10,
            epsilon: frac(1, 4),
            samples: default_samples(),
            x_structure: XStructure::Directed,
            seed: 2024,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !in_open_unit_interval(&self.epsilon) {
            return Err(Error::Precondition { op: "config", reason: format!("ε = {} outside (0,1)", self.epsilon) });
        }
        if let Some(t) = self.samples.iter().find(|t| !in_unit_interval(t)) {
            return Err(Error::Precondition { op: "config", reason: format!("sample {t} outside [0,1]") });
        }
        if self.samples.is_empty() {
            return Err(Error::Precondition { op: "config", reason: "no sample times".into() });
        }
        Ok(())
    }
}
