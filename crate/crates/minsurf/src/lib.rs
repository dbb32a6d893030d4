//! Verification campaigns, mesh and figure export, and the `minsurf`
//! command-line tool built on [`minsurf_core`].

pub mod cli;
pub mod error;
pub mod export;
pub mod presets;
pub mod records;
pub mod verify;

pub use error::{Error, Result};
pub use verify::{injectivity_smoke, run_campaign, run_campaign_seeded, CheckResult, GridSpec, VerificationReport};
