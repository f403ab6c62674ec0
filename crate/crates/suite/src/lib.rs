//! Seeded corpora, independent oracles and the acceptance criteria that tie
//! the `jamesloop-core` modules together.

pub mod config;
pub mod corpus;
pub mod criteria;
pub mod oracle;

pub use config::RunConfig;
pub use criteria::{run_all, CriterionResult};
