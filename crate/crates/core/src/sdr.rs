//! Systems of distinct representatives via augmenting-path matching.

use crate::atom::Atom;
use std::collections::{BTreeMap, BTreeSet};

/// A finite list of finite blocks to pick distinct representatives from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdrProblem {
    pub blocks: Vec<BTreeSet<Atom>>,
}

impl SdrProblem {
    pub fn new<I, B>(blocks: I) -> Self
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = Atom>,
    {
        SdrProblem {
            blocks: blocks.into_iter().map(|b| b.into_iter().collect()).collect(),
        }
    }
}

/// Returns one representative per block, pairwise distinct, or `None` when
/// Hall's condition fails.
pub fn find_sdr(p: &SdrProblem) -> Option<Vec<Atom>> {
    let mut ids: BTreeMap<&Atom, usize> = BTreeMap::new();
    for b in &p.blocks {
        for a in b {
            let next = ids.len();
            ids.entry(a).or_insert(next);
        }
    }
    let atoms: Vec<&Atom> = {
        let mut v = vec![None; ids.len()];
        for (a, &i) in &ids {
            v[i] = Some(*a);
        }
        v.into_iter().map(|a| a.expect("dense ids")).collect()
    };
    let adj: Vec<Vec<usize>> = p
        .blocks
        .iter()
        .map(|b| b.iter().map(|a| ids[a]).collect())
        .collect();

    // owner[atom] = block currently represented by that atom
    let mut owner: Vec<Option<usize>> = vec![None; atoms.len()];
    for block in 0..adj.len() {
        let mut seen = vec![false; atoms.len()];
        if !augment(block, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut reps = vec![None; adj.len()];
    for (a, o) in owner.iter().enumerate() {
        if let Some(b) = o {
            reps[*b] = Some(atoms[a].clone());
        }
    }
    reps.into_iter().collect()
}

fn augment(block: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &a in &adj[block] {
        if seen[a] {
            continue;
        }
        seen[a] = true;
        let free = match owner[a] {
            None => true,
            Some(other) => augment(other, adj, owner, seen),
        };
        if free {
            owner[a] = Some(block);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: usize) -> Atom {
        Atom::num(i)
    }

    fn check(p: &SdrProblem, reps: &[Atom]) {
        assert_eq!(reps.len(), p.blocks.len());
        let distinct: BTreeSet<&Atom> = reps.iter().collect();
        assert_eq!(distinct.len(), reps.len());
        for (r, b) in reps.iter().zip(&p.blocks) {
            assert!(b.contains(r));
        }
    }

    #[test]
    fn triangle_has_sdr() {
        let p = SdrProblem::new([vec![n(1), n(2)], vec![n(2), n(3)], vec![n(3), n(1)]]);
        let reps = find_sdr(&p).unwrap();
        check(&p, &reps);
    }

    #[test]
    fn disjoint_blocks() {
        let p = SdrProblem::new([vec![n(0), n(1)], vec![n(2)], vec![n(3), n(4)]]);
        check(&p, &find_sdr(&p).unwrap());
    }

    #[test]
    fn hall_violation() {
        let p = SdrProblem::new([vec![n(1)], vec![n(1)]]);
        assert_eq!(find_sdr(&p), None);
        let empty = SdrProblem::new([Vec::<Atom>::new()]);
        assert_eq!(find_sdr(&empty), None);
        assert_eq!(find_sdr(&SdrProblem::new(Vec::<Vec<Atom>>::new())), Some(vec![]));
    }

    #[test]
    fn needs_reassignment() {
        // greedy would give block 0 the atom 1 and strand block 1
        let p = SdrProblem::new([vec![n(1), n(2)], vec![n(1)]]);
        check(&p, &find_sdr(&p).unwrap());
    }
}
