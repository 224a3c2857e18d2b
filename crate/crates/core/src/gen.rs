//! Instance generators for the check suites: exhaustive enumerations at
//! small sizes and seeded random instances.

use crate::atom::Atom;
use crate::mask::{self, Mask};
use crate::order::{QuasiOrder, Simulation};
use crate::system::SetSystem;
use crate::trace::Trace;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::HashSet;

/// Every set system over `0..k`: one per family of subsets. There are
/// `2^(2^k)` of them, so `k ≤ 4`.
pub fn all_systems(k: usize) -> impl Iterator<Item = SetSystem> {
    assert!(k <= 4, "2^(2^k) systems");
    let subsets = 1u64 << k;
    (0..1u64 << subsets).map(move |fam| {
        SetSystem::from_masks(Atom::range(k), mask::ones(fam).map(|m| m as Mask))
            .expect("small universe")
    })
}

fn transitive(up: &[Mask]) -> bool {
    up.iter()
        .all(|&row| mask::ones(row).all(|j| mask::is_subset(up[j], row)))
}

/// Up-set rows of every quasi-order on `0..n`.
pub fn all_quasi_order_rows(n: usize) -> Vec<Vec<Mask>> {
    assert!(n <= 5, "2^(n^2-n) candidate relations");
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut up = vec![0; n];
    for rel in 0u64..1 << off.len() {
        for (i, row) in up.iter_mut().enumerate() {
            *row = mask::bit(i);
        }
        for b in mask::ones(rel) {
            let (i, j) = off[b];
            up[i] |= mask::bit(j);
        }
        if transitive(&up) {
            out.push(up.clone());
        }
    }
    out
}

/// Every quasi-order on `0..n`.
pub fn all_quasi_orders(n: usize) -> Vec<QuasiOrder> {
    all_quasi_order_rows(n)
        .into_iter()
        .map(|rows| QuasiOrder::from_up_masks(rows).expect("n <= 5"))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            acc.push(x);
            go(rest, acc, out);
            acc.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

fn encode(up: &[Mask], perm: &[usize]) -> u64 {
    let n = up.len();
    let mut rows = [0u64; 8];
    for i in 0..n {
        rows[perm[i]] = mask::ones(up[i]).fold(0, |acc, j| acc | mask::bit(perm[j]));
    }
    rows[..n].iter().enumerate().fold(0, |acc, (i, &r)| acc | r << (i * n))
}

/// One quasi-order on `0..n` per isomorphism class.
pub fn quasi_orders_up_to_iso(n: usize) -> Vec<QuasiOrder> {
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for up in all_quasi_order_rows(n) {
        let code = perms.iter().map(|p| encode(&up, p)).min().unwrap_or(0);
        if seen.insert(code) {
            out.push(QuasiOrder::from_up_masks(up).expect("n <= 5"));
        }
    }
    out
}

/// A random quasi-order on `0..n`: each ordered pair is related with a
/// random density, then closed.
pub fn random_quasi_order<R: Rng>(rng: &mut R, n: usize) -> QuasiOrder {
    let p: f64 = rng.gen_range(0.05..0.6);
    let up = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && rng.gen_bool(p))
                .fold(0, |acc, j| acc | mask::bit(j))
        })
        .collect();
    QuasiOrder::from_up_masks(up).expect("small carrier")
}

/// A random set system over `0..k` with a random number of distinct members.
pub fn random_system<R: Rng>(rng: &mut R, k: usize) -> SetSystem {
    let all: Vec<Mask> = (0..=mask::full(k)).collect();
    let count = rng.gen_range(0..=all.len().min(12));
    let members: Vec<Mask> = all.choose_multiple(rng, count).copied().collect();
    SetSystem::from_masks(Atom::range(k), members).expect("small universe")
}

/// A random trace from `0..src` to `0..tgt`. `sequential` allows at most one
/// pair per source element; `inhabited` forbids `v = ∅`.
pub fn random_trace<R: Rng>(rng: &mut R, src: usize, tgt: usize, sequential: bool, inhabited: bool) -> Trace {
    let lo = if inhabited { 1 } else { 0 };
    let mut pairs = Vec::new();
    for x in 0..src {
        let count = if sequential { rng.gen_range(0..=1) } else { rng.gen_range(0..=3) };
        for _ in 0..count {
            if lo > mask::full(tgt) {
                break;
            }
            let v = rng.gen_range(lo..=mask::full(tgt));
            pairs.push((x, v));
        }
    }
    Trace::new(
        Atom::range(src),
        Atom::range(tgt),
        pairs.iter().map(|&(x, v)| {
            (
                Atom::num(x),
                mask::ones(v).map(Atom::num).collect::<Vec<_>>(),
            )
        }),
    )
    .expect("fields in range")
}

/// Every relation between `x` and `y` that is a simulation.
pub fn all_simulations(x: &QuasiOrder, y: &QuasiOrder) -> Vec<Simulation> {
    let cells: Vec<(Atom, Atom)> = x
        .elements()
        .iter()
        .flat_map(|a| y.elements().iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    assert!(cells.len() <= 16, "2^|X×Y| relations");
    (0u32..1 << cells.len())
        .map(|rel| {
            let pairs = (0..cells.len())
                .filter(|&b| rel >> b & 1 == 1)
                .map(|b| cells[b].clone());
            Simulation::new(x.clone(), y.clone(), pairs.collect::<Vec<_>>()).expect("carrier atoms")
        })
        .filter(Simulation::is_simulation)
        .collect()
}

/// A random simulation from `x` to `y`: random pairs, then repaired by
/// adding pairs until the simulation law holds.
pub fn random_simulation<R: Rng>(rng: &mut R, x: &QuasiOrder, y: &QuasiOrder) -> Simulation {
    let (n, m) = (x.len(), y.len());
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    if m > 0 {
        for i in 0..n {
            if rng.gen_bool(0.5) {
                pairs.push((i, rng.gen_range(0..m)));
            }
        }
    }
    // R(x,y), x ≼ x' with no y' ⊒ y at x': add (x', y)
    loop {
        let missing = pairs.iter().find_map(|&(i, j)| {
            mask::ones(x.up_masks()[i]).find_map(|i2| {
                let ok = pairs.iter().any(|&(a, b)| a == i2 && y.le_idx(j, b));
                (!ok).then_some((i2, j))
            })
        });
        match missing {
            Some(p) => pairs.push(p),
            None => break,
        }
    }
    let atoms: Vec<(Atom, Atom)> = pairs
        .iter()
        .map(|&(i, j)| (x.elements()[i].clone(), y.elements()[j].clone()))
        .collect();
    Simulation::new(x.clone(), y.clone(), atoms).expect("carrier atoms")
}
