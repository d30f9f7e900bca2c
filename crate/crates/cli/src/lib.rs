//! Library surface of the command-line tool: instance format, JSON report
//! construction, and the bundled verification suite. The binary in
//! `main.rs` is a thin dispatcher over these.

pub mod format;
pub mod report;
pub mod verify;
