//! Simulations between quasi-orders, the functors Ss and Qo, linearizations,
//! and the product, coproduct and equalizer of set systems.

use setsys::trace::{coproduct, equalizer, product, qo_functor, ss_functor};
use setsys::{dim, linearizations, Atom, QuasiOrder, SetSystem, Simulation, Trace};

fn braces(atoms: &[Atom]) -> String {
    let parts: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn main() -> setsys::Result<()> {
    let x = QuasiOrder::chain(3);
    let y = QuasiOrder::antichain(2);
    let f = Simulation::new(
        x.clone(),
        y.clone(),
        vec![(Atom::num(0), Atom::num(0)), (Atom::num(1), Atom::num(0)), (Atom::num(2), Atom::num(0))],
    )?;
    println!("simulation: {}", f.is_simulation());
    let t = ss_functor(&f)?;
    let back = qo_functor(&t, &x.ss()?, &y.ss()?)?;
    println!("Qo(Ss(f)) = f: {}", back == f);

    let a = QuasiOrder::antichain(3);
    let lins = linearizations(&a)?;
    let longest = lins.iter().map(|(c, _)| c.otp()).max().unwrap_or(0);
    println!("{} linearizations of a 3-antichain, otp at most {longest} <= {}", lins.len(), a.otp());

    let n = Atom::num;
    let l = SetSystem::new(Atom::range(2), vec![vec![n(0)], vec![n(0), n(1)]])?;
    let m = SetSystem::new(Atom::range(1), vec![vec![], vec![n(0)]])?;
    let (sum, injections) = coproduct(&[&l, &m])?;
    println!("coproduct: dim {} with {} injections", dim(&sum), injections.len());
    let (prod, projections) = product(&[&l, &m])?;
    println!("product: dim {} with {} projections", dim(&prod), projections.len());

    let id = Trace::identity(Atom::range(2))?;
    let swap = Trace::singleton_lift(Atom::range(2), Atom::range(2), vec![(n(0), n(1)), (n(1), n(0))])?;
    for member in equalizer(&id, &swap, &l)?.members() {
        println!("fixed by the swap: {}", braces(&member));
    }
    Ok(())
}
