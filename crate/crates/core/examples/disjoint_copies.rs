//! Two disjoint copies of a graph covered with one biclique per vertex.

use oddcover::constructions::double_cover;
use oddcover::Graph;

fn main() -> oddcover::Result<()> {
    let h = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])?;
    let two = Graph::disjoint_union(&[h.clone(), h.clone()])?;
    let c = double_cover(&h)?;
    println!(
        "H + H on {} vertices, {} bicliques, valid {}",
        two.n(),
        c.len(),
        c.verify(&two)?.valid
    );
    for (i, b) in c.bicliques().iter().enumerate() {
        println!(
            "  B{i}: X = {:?}, Y = {:?}",
            b.x().to_indices(),
            b.y().to_indices()
        );
    }
    Ok(())
}
