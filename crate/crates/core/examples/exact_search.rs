//! Exact odd cover numbers by label search.
//!
//! Usage: `exact_search [edge-list file] [threads]`; without a file a few
//! named graphs are searched.

use std::time::{Duration, Instant};

use oddcover::search::{b2_exact, SearchOptions};
use oddcover::Graph;

fn report(name: &str, g: &Graph, opts: &SearchOptions) {
    let start = Instant::now();
    match b2_exact(g, opts) {
        Ok(ex) => {
            let labels: Vec<String> = ex.labels.iter().map(ToString::to_string).collect();
            println!(
                "{name}: b2 = {} [{:.1?}] labels {}",
                ex.value,
                start.elapsed(),
                labels.join(" ")
            );
        }
        Err(e) => println!("{name}: {e}"),
    }
}

fn main() -> oddcover::Result<()> {
    let mut args = std::env::args().skip(1);
    let file = args.next();
    let threads = args.next().and_then(|t| t.parse().ok()).unwrap_or(4);
    let opts = SearchOptions::with_budget(Duration::from_secs(120)).threads(threads);
    if let Some(path) = file {
        let text = std::fs::read_to_string(&path).expect("readable edge list");
        report(&path, &Graph::parse_edge_list(&text)?, &opts);
        return Ok(());
    }
    for n in 3..=8 {
        report(&format!("K{n}"), &Graph::complete(n)?, &opts);
    }
    for n in [5, 7, 9] {
        report(&format!("C{n}"), &Graph::cycle(n)?, &opts);
    }
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )?;
    report("Petersen", &petersen, &opts);
    Ok(())
}
