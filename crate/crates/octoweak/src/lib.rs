//! Expression language, verification report and command-line front end for
//! `octoweak-core`.

pub mod lang;
pub mod checks;
pub mod report;
pub mod terms;
