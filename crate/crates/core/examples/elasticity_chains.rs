//! Lazy families over the naturals and the search for elasticity chains.

use setsys::lang::{canonical_family, elasticity_chain, family_transform, validate_chain, ChainBounds, Membership, Transform};

fn main() -> setsys::Result<()> {
    let bounds = ChainBounds {
        element_horizon: 64,
        family_horizon: 64,
    };
    for name in ["dcl", "cosingl", "singl", "arith_prog:3"] {
        let f = canonical_family(name)?;
        match elasticity_chain(&f, 6, bounds)? {
            Some(c) => println!("{name}: {:?} via {:?} (valid {})", c.elements, c.families, validate_chain(&f, &c)),
            None => println!("{name}: none within the horizons"),
        }
    }

    let singl = canonical_family("singl")?;
    let down = family_transform(Transform::DownClosure, &singl, Some(10))?;
    let answers: Vec<Membership> = (0..12).map(|n| down.member(5, n)).collect();
    println!("{}: member 5 -> {answers:?}", down.description());
    Ok(())
}
