//! F₂ rank, even cores and the resulting lower bounds for a few small graphs.

use oddcover::{lower_bound, Graph};

fn main() -> oddcover::Result<()> {
    let graphs = [
        ("K3", Graph::complete(3)?),
        ("K4", Graph::complete(4)?),
        ("K9", Graph::complete(9)?),
        ("C5", Graph::cycle(5)?),
        ("C6", Graph::cycle(6)?),
        (
            "K3 + C4",
            Graph::disjoint_union(&[Graph::complete(3)?, Graph::cycle(4)?])?,
        ),
    ];
    for (name, g) in &graphs {
        let cores = g.even_cores(8);
        let lb = lower_bound(g);
        println!(
            "{name:8} rank {:2}  twins {:2}  kernel dim {}  lower bound {}",
            g.rank(),
            g.rank_via_twins(),
            cores.dimension,
            lb.value
        );
        for core in &cores.sets {
            println!(
                "         even core {:?} with {} edges",
                core.to_indices(),
                g.induced_edge_count(core)
            );
        }
        if lb.arf_obstruction {
            println!("         edge-parity form has Arf invariant 1");
        }
        if lb.diagonal_obstruction {
            println!("         A·D·A = A for a diagonal D");
        }
    }
    Ok(())
}
