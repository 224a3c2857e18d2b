//! Distinct representatives for a list of blocks.

use setsys::{find_sdr, Atom, SdrProblem};

fn braces(atoms: &[Atom]) -> String {
    let parts: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn report(p: &SdrProblem) {
    match find_sdr(p) {
        Some(reps) => println!("representatives {}", braces(&reps)),
        None => println!("no representatives: Hall's condition fails"),
    }
}

fn main() {
    let a = |s: &str| Atom::leaf(s);
    let ok = SdrProblem::new(vec![vec![a("x"), a("y")], vec![a("y")], vec![a("y"), a("z")]]);
    report(&ok);
    let crowded = SdrProblem::new(vec![vec![a("x")], vec![a("x")], vec![a("x"), a("y"), a("z")]]);
    report(&crowded);
}
