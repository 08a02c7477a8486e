//! Graphs H where adding a disjoint clique does not raise b₂: H₁ + K₂ and
//! H₂ + K₃, built from their vertex labels.

use oddcover::search::{
    has_cover_of_size, label_graph, labeling_to_cover, parse_labels, SearchOptions,
};
use oddcover::Graph;

fn check(name: &str, h: &str, extra: &str, clique: usize) -> oddcover::Result<()> {
    let labels = parse_labels(h)?;
    let k = labels[0].k();
    let g = label_graph(&labels)?;
    let below = has_cover_of_size(&g, k - 1, &SearchOptions::default().threads(4))?;
    println!(
        "{name}: {} vertices, {} edges, cover of size {} exists: {below:?}",
        g.n(),
        g.edge_count(),
        k - 1
    );

    let mut all = labels.clone();
    all.extend(parse_labels(extra)?);
    let plus = Graph::disjoint_union(&[g, Graph::complete(clique)?])?;
    let c = labeling_to_cover(&all)?;
    println!(
        "{name} + K{clique}: labels induce it {}, {} bicliques valid {}",
        label_graph(&all)? == plus,
        c.len(),
        c.verify(&plus)?.valid
    );
    Ok(())
}

fn main() -> oddcover::Result<()> {
    check(
        "H1",
        "e00e e11e 1101 1011 e0ee 11e1 1e11 ee0e 0111 e110",
        "000e 1000",
        2,
    )?;
    check(
        "H2",
        "00eee 0e0ee 0e101 01e01 011e0 1e1ee 1e001 e1111 e00ee e11ee e0011 e0101 e1001",
        "00000 0001e 11111",
        3,
    )
}
