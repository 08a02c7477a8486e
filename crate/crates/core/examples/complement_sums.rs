//! b₂(G) + b₂(Ḡ) for random small graphs, as raw data.

use std::time::Duration;

use oddcover::search::{b2_exact, SearchOptions};
use oddcover::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> oddcover::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = SearchOptions::with_budget(Duration::from_secs(30)).threads(4);
    println!("n  edges  b2(G)  b2(co-G)  sum");
    for _ in 0..12 {
        let n = rng.gen_range(4..=8);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::from_edges(n, &edges)?;
        let a = b2_exact(&g, &opts)?.value;
        let b = b2_exact(&g.complement(), &opts)?.value;
        println!("{n}  {:5}  {a:5}  {b:8}  {:3}", g.edge_count(), a + b);
    }
    Ok(())
}
