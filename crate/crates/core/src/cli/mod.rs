//! Space descriptions, the analysis pipeline, the fixture catalog, and the
//! hyperboloid polar demo.

pub mod analyze;
pub mod catalog;
pub mod format;
pub mod polar;

pub use analyze::{analyze, render_text, AnalysisReport, AnalyzeError, AnalyzeOptions};
pub use catalog::{CatalogResult, FieldDiff};
pub use format::{emit_space, parse_space, ParseError, SpaceDescription};
pub use polar::{hyperboloid_polar_demo, PolarSummary};
