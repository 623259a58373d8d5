//! Front end: run configuration, presets, emission and verification suites.

pub mod commands;
pub mod config;
pub mod output;
pub mod presets;
pub mod verify;

pub use commands::{all_figures, figure, interpolate, run, Artifact, Outcome};
pub use config::{parse_sweep, Command, Format, Grid, RunConfig, Suite};
pub use output::{Metadata, Row, RowKind};
pub use presets::{FigurePreset, PRESET_IDS};
pub use verify::{acceptance, run_suite, CriterionResult, Report};
