//! Traces as positive formulas: application, composition, canonical
//! forms, direct images and the fixed traces that turn one operation into
//! another.

use setsys::ops::{ew_disjoint, ew_product, ew_union, ew_intersect};
use setsys::trace::{discoloration_trace, intersection_trace};
use setsys::{Atom, SetSystem, Trace};

fn braces(atoms: &[Atom]) -> String {
    let parts: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn main() -> setsys::Result<()> {
    let n = Atom::num;
    // x0 <- y1; x1 <- y0; x2 <- (y0 and y1) or y2
    let r = Trace::new(
        Atom::range(3),
        Atom::range(3),
        vec![
            (n(0), vec![n(1)]),
            (n(1), vec![n(0)]),
            (n(2), vec![n(0), n(1)]),
            (n(2), vec![n(2)]),
        ],
    )?;
    println!(
        "branching {}, linear {}, sequential {}",
        r.branching_degree(),
        r.is_linear(),
        r.is_sequential()
    );
    println!("apply(r, {{0,1}}) = {}", braces(&r.apply(&[n(0), n(1)])?));

    let rr = r.compose(&r)?;
    println!("r;r has {} pairs, canonical {}", rr.len(), rr.canonicalize().len());
    for g in 0..8u64 {
        assert_eq!(rr.apply_mask(g), r.apply_mask(r.apply_mask(g)));
    }

    let l = SetSystem::new(Atom::range(2), vec![vec![n(0)], vec![n(0), n(1)]])?;
    let m = SetSystem::new(Atom::range(2), vec![vec![], vec![n(1)]])?;
    let recolored = discoloration_trace(2, Atom::range(2))?.direct_image(&ew_disjoint(&[&l, &m])?)?;
    println!("forgetting colors of L ⊎ M gives L ∪ M: {}", recolored.family() == ew_union(&l, &m)?.family());
    let met = intersection_trace(Atom::range(2), Atom::range(2))?.direct_image(&ew_product(&l, &m)?)?;
    println!("diagonal of L × M gives L ∩ M: {}", met.family() == ew_intersect(&l, &m)?.family());
    Ok(())
}
