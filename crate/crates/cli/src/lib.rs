//! Command-line front end for `seifert-core`: surface-spec parsing,
//! invariant reports and the builder-family table.

pub mod app;
pub mod report;
pub mod spec;
pub mod table;
