//! Exact series engine for quasimap I-functions of Calabi-Yau fibrations.

pub mod asymptotics;
pub mod birkhoff;
pub mod cli;
pub mod cohomology;
pub mod cyclo;
pub mod error;
pub mod expr;
pub mod formulas;
pub mod generators;
pub mod geometry;
pub mod ifunction;
pub mod linalg;
pub mod picard_fuchs;
pub mod relations;
pub mod series;
pub mod zseries;

pub use cohomology::{ClassRing, CohomClass};
pub use cyclo::Cyclo;
pub use error::{Error, Result};
pub use geometry::{GeometrySpec, Preset};
pub use series::{Axis, BiSeries, UniSeries};
pub use zseries::ZSeries;
