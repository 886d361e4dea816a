//! File formats, JSON reports, threaded drivers and the command-line front
//! end for [`hyperlag_core`].

pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;

pub use cli::run;
