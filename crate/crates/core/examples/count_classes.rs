//! Prints the number of connected graphs per order, with timings.

use std::time::Instant;

use cliquex_core::arith::binomial;
use cliquex_core::enumerate::{connected_graphs, EnumerationTask};

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    for n in 1..=n_max {
        let start = Instant::now();
        let top = binomial(n as u64, 2).unwrap() as usize;
        let total: usize = (n - 1..=top)
            .map(|m| connected_graphs(EnumerationTask::connected(n, m)).unwrap().count())
            .sum();
        println!("n={n} connected={total} ({:.2?})", start.elapsed());
    }
}
