//! Structural checks on perfect covers of even cliques.

use oddcover::constructions::{pairs_18mod24, pairs_to_cover, tomon_cover};
use oddcover::properties::{even_clique_props, same_type_check, sdr_check, thm21_check};
use oddcover::{Graph, OddCover};

fn run(name: &str, c: &OddCover, seed: u64) -> oddcover::Result<()> {
    let n = c.n();
    let g = Graph::complete(n)?;
    let rows = thm21_check(&g, &c.incidence_matrix(), 500, seed)?;
    let sdr = sdr_check(&g, c, &(0..n).collect::<Vec<_>>())?;
    let pairing: Vec<(usize, usize)> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    println!(
        "{name}: row independence {} over {} subsets, distinct representatives {sdr}, same type {}",
        rows.passed,
        rows.subsets_checked,
        same_type_check(c, &pairing)?
    );
    for item in even_clique_props(c, n, 2000, seed)?.items {
        println!(
            "  item ({}): {} after {} checks",
            item.item, item.passed, item.checked
        );
    }
    Ok(())
}

fn main() -> oddcover::Result<()> {
    run("K8 from F3^2", &tomon_cover(2)?, 1)?;
    run("K18 pairs", &pairs_to_cover(&pairs_18mod24(18)?)?, 2)
}
