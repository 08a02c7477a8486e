//! Hyperplane covers over F₃ and their lift to F₉.

use oddcover::constructions::{field_lift_cover, tomon_cover};
use oddcover::{GfContext, Graph};

fn main() -> oddcover::Result<()> {
    for k in 1..=4 {
        let c = tomon_cover(k)?;
        let n = c.n();
        println!(
            "F3^{k}: K{n} with {} bicliques, perfect {}",
            c.len(),
            c.is_perfect(&Graph::complete(n)?)
        );
    }

    let f9 = GfContext::shared(3, 2)?;
    println!("F9 modulus (constant term first): {:?}", f9.modulus());
    let base = tomon_cover(2)?;
    let lifted = field_lift_cover(&f9, 2, &base)?;
    println!(
        "lift to F9^2: K{} with {} bicliques, perfect {}",
        lifted.n(),
        lifted.len(),
        lifted.is_perfect(&Graph::complete(lifted.n())?)
    );
    Ok(())
}
