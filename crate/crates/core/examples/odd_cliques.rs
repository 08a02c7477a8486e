//! Covers of odd cliques and unions of odd cliques, certified and compared
//! with the lower bound.

use oddcover::constructions::{odd_clique_cover, odd_clique_union_cover};
use oddcover::{lower_bound, Graph};

fn main() -> oddcover::Result<()> {
    for k in 1..=6 {
        let g = Graph::complete(2 * k + 1)?;
        let c = odd_clique_cover(k)?;
        println!(
            "K{:<2} {} bicliques, valid {}, lower bound {}",
            2 * k + 1,
            c.len(),
            c.verify(&g)?.valid,
            lower_bound(&g).value
        );
    }

    let ms = [1, 2, 4];
    let parts = ms
        .iter()
        .map(|m| Graph::complete(2 * m + 1))
        .collect::<oddcover::Result<Vec<_>>>()?;
    let g = Graph::disjoint_union(&parts)?;
    let c = odd_clique_union_cover(&ms)?;
    println!(
        "K3 + K5 + K9: {} bicliques, valid {}, lower bound {}",
        c.len(),
        c.verify(&g)?.valid,
        lower_bound(&g).value
    );
    println!("{}", odd_clique_cover(2)?.to_json_pretty());
    Ok(())
}
