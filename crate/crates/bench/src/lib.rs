//! Shared inputs for the benchmarks.

use dopekit::{input::parse_lambda, NodeTuple};

/// The node tuples of the standard count table.
pub fn table_tuples() -> Vec<(&'static str, NodeTuple)> {
    ["0,1,sqrt(2)", "0,1,2", "0,1,3", "0,1,pi", "0,1,4"]
        .into_iter()
        .map(|s| (s, parse_lambda(s).expect("fixed input parses")))
        .collect()
}
