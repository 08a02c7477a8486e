//! Which small even cliques admit a pairs construction.

use std::time::{Duration, Instant};

use oddcover::search::{pairs_search, PairsSearch};

fn main() -> oddcover::Result<()> {
    for n in (2..=18).step_by(2) {
        let start = Instant::now();
        let outcome = pairs_search(n, Some(Duration::from_secs(60)))?;
        let verdict = match &outcome {
            PairsSearch::Found(_) => "found",
            PairsSearch::Refuted => "none",
            PairsSearch::Timeout => "timeout",
        };
        println!("n = {n:2}: {verdict} [{:.1?}]", start.elapsed());
        if let (PairsSearch::Found(m), 8) = (&outcome, n) {
            for i in 0..m.size() {
                println!("    {:?}", m.row(i));
            }
        }
    }
    Ok(())
}
