//! `dim` of a set system with a longest production sequence, `otp` of a
//! quasi-order, and the passage between the two through `ss` and `qo`.

use setsys::{dim, longest_production_sequence, qo_of, Atom, QuasiOrder, SetSystem};

fn braces(atoms: &[Atom]) -> String {
    let parts: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn main() -> setsys::Result<()> {
    let n = Atom::num;
    let stairs = SetSystem::new(
        Atom::range(3),
        vec![vec![], vec![n(0)], vec![n(0), n(1)], vec![n(0), n(1), n(2)]],
    )?;
    println!("dim = {}", dim(&stairs));
    for step in longest_production_sequence(&stairs).steps {
        println!("  show {} -> guess {}", step.example, braces(&step.hypothesis));
    }

    // a 3-chain next to an isolated point
    let q = QuasiOrder::new(
        vec![Atom::leaf("a"), Atom::leaf("b"), Atom::leaf("c"), Atom::leaf("z")],
        vec![(Atom::leaf("a"), Atom::leaf("b")), (Atom::leaf("b"), Atom::leaf("c"))],
    )?;
    let ss = q.ss()?;
    println!("otp = {}, dim ss = {}, |ss| = {}", q.otp(), dim(&ss), ss.len());
    println!("qo(ss) recovers the order: {}", qo_of(&ss) == q);

    // qo of a system can be far longer than the system itself
    let singletons = SetSystem::new(Atom::range(5), (0..5).map(|i| vec![n(i)]))?;
    println!("singletons: dim {} < otp {}", dim(&singletons), qo_of(&singletons).otp());
    Ok(())
}
