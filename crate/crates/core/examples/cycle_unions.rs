//! Covers of disjoint unions of cycles.
//!
//! Usage: `cycle_unions [odd-params] [even-params]`, e.g. `cycle_unions 1,3 2`
//! for C3 + C7 + C4.

use oddcover::constructions::{cycle_union_cover, cycle_union_graph};
use oddcover::lower_bound;

fn parse(arg: Option<String>) -> Vec<usize> {
    arg.map(|s| {
        s.split(',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().expect("integer"))
            .collect()
    })
    .unwrap_or_default()
}

fn main() -> oddcover::Result<()> {
    let mut args = std::env::args().skip(1);
    let mut odd = parse(args.next());
    let even = parse(args.next());
    if odd.is_empty() {
        odd = vec![1, 2];
    }
    let g = cycle_union_graph(&odd, &even)?;
    let c = cycle_union_cover(&odd, &even)?;
    let lengths: Vec<String> = odd
        .iter()
        .map(|n| format!("C{}", 2 * n + 1))
        .chain(even.iter().map(|m| format!("C{}", 2 * m)))
        .collect();
    println!(
        "{}: {} bicliques, valid {}, lower bound {}",
        lengths.join(" + "),
        c.len(),
        c.verify(&g)?.valid,
        lower_bound(&g).value
    );
    Ok(())
}
