//! Session scripts for the frobgrann toolkit: parsing, checking, execution
//! and report serialization.

pub mod error;
pub mod exec;
pub mod golden;
pub mod session;
pub mod syntax;

pub use error::CliError;
pub use exec::{execute, mask_timings, CommandRecord, ExecOptions, ReportDocument};
pub use session::{parse_session, SessionScript};
