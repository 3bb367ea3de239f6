//! Exact computations on the height-multiple subsystems `R(m)` of a reduced
//! irreducible root system: their bases, Dynkin types, Levi type, and the
//! constant `d_m`, together with the closed-form classification they are
//! checked against.

pub mod dm;
pub mod dynkin;
pub mod error;
pub mod linalg;
pub mod predictor;
pub mod report;
pub mod subsystem;
pub mod system;
pub mod tables;
pub mod weyl;

pub use dm::{compute_dm, dimension_oracle, DmReport};
pub use dynkin::{ComponentLabel, DynkinType};
pub use error::{Error, Result};
pub use predictor::{predict, Prediction, Source};
pub use report::{sweep, verify, CellReport, GridSpec, VerifyOptions, VerifyReport};
pub use subsystem::{r_of_m, rm_is_partial_base, HeightSubsystem};
pub use system::{Family, Root, RootSystem, SystemLabel};
pub use tables::{render as render_table, TableFormat, TableId};
pub use weyl::{weyl_orbit_levi_oracle, WeylGroup};
