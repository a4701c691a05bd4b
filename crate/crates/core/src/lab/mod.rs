//! Desk-scale verification: exhaustive scans, family cross-checks and trace
//! identity audits.

pub mod crosscheck;
pub mod moments;
pub mod report;
pub mod scan;
pub mod verify;

pub use crosscheck::{family_cross_check, CrossCheckReport};
pub use moments::{moment_audit, MomentAudit};
pub use report::write_report;
pub use scan::{scan_graphs, scan_order, Claim, ScanReport, Source};
