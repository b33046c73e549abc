//! Integer partitions, partition bijections and exact truncated q-series,
//! with suites that check partition identities two independent ways.

pub mod bijection;
pub mod cli;
pub mod constraint;
pub mod enumeration;
pub mod error;
pub mod family;
pub mod glaisher;
pub mod partition;
pub mod qseries;
pub mod registry;
pub mod report;
pub mod symmetric;
pub mod verify;

pub use constraint::ConstraintSpec;
pub use error::{Error, Result};
pub use partition::{MultiplicityView, Partition};
pub use qseries::TruncatedSeries;
pub use report::VerificationReport;
pub use symmetric::SymmetricProfile;
