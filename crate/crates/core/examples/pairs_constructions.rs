//! Signed pairs matrices: perfect covers of K_n for n ≡ 18 (mod 24) and of
//! three disjoint cliques for n ≡ 6 (mod 24).

use oddcover::constructions::{pairs_18mod24, pairs_6mod24, pairs_to_cover, three_cliques};
use oddcover::Graph;

fn main() -> oddcover::Result<()> {
    let m = pairs_18mod24(42)?;
    println!("C block for n = 42:");
    for row in m.block(0, 7, 7) {
        let cells: Vec<String> = row.iter().map(|e| format!("{e:>2}")).collect();
        println!("  {}", cells.join(" "));
    }
    for n in [18, 42, 66] {
        let c = pairs_to_cover(&pairs_18mod24(n)?)?;
        println!(
            "K{n}: {} bicliques, perfect {}",
            c.len(),
            c.is_perfect(&Graph::complete(n)?)
        );
    }
    for n in [30, 54] {
        let c = pairs_to_cover(&pairs_6mod24(n)?)?;
        println!(
            "3K{}: {} bicliques, perfect {}",
            n / 3,
            c.len(),
            c.is_perfect(&three_cliques(n)?)
        );
    }
    Ok(())
}
