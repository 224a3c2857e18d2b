//! Elementwise operations on set systems and how `dim` moves under them.

use setsys::ops::{bang, ew_disjoint, ew_intersect, ew_product, ew_union, perp, tagged_union};
use setsys::{dim, Atom, SetSystem};

fn braces(atoms: &[Atom]) -> String {
    let parts: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn show(name: &str, s: &SetSystem) {
    println!("{name:>12}: dim {}, {} members", dim(s), s.len());
}

fn main() -> setsys::Result<()> {
    let n = Atom::num;
    let l = SetSystem::new(Atom::range(3), vec![vec![], vec![n(0)], vec![n(0), n(1), n(2)]])?;
    let m = SetSystem::new(Atom::range(3), vec![vec![], vec![n(1)], vec![n(0), n(1), n(2)]])?;
    show("L", &l);
    show("M", &m);
    show("union", &ew_union(&l, &m)?);
    show("intersect", &ew_intersect(&l, &m)?);
    show("product", &ew_product(&l, &m)?);
    show("disjoint", &ew_disjoint(&[&l, &m])?);
    show("coproduct", &tagged_union(&[&l, &m])?);
    show("bang L", &bang(&l)?);
    show("perp perp L", &perp(&perp(&l)?)?);

    println!("\nintersection members:");
    for member in ew_intersect(&l, &m)?.members() {
        println!("  {}", braces(&member));
    }
    println!("JSON: {}", serde_json::to_string(&l).unwrap());
    Ok(())
}
