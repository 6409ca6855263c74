//! IO, reports and the command-line harness around `lapbound-core`.
//!
//! * [`edgelist`]: the `n m` / `u v` text format.
//! * [`dsl`]: family strings such as `Kab:2:3` and ranges like `S:3..10`.
//! * [`report`]: CSV/JSON catalog rows.
//! * [`invariants`], [`fuzz`], [`sweep`]: the subcommand engines.
//! * [`cli`]: argument parsing and exit statuses.

pub mod cli;
pub mod dsl;
pub mod edgelist;
mod error;
pub mod fuzz;
pub mod invariants;
pub mod report;
pub mod sweep;

pub use error::{HarnessError, ParseError};
