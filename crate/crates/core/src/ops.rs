//! Elementwise and structural operations on set systems.
//!
//! Operations that create new kinds of elements (products, tagged unions,
//! bang, perp) build their universe from the operands' supports only.

use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::mask::{self, Mask};
use crate::system::{check_universe, compress, SetSystem};

fn merge_universes(a: &SetSystem, b: &SetSystem) -> Result<(Vec<Atom>, Vec<Mask>, Vec<Mask>)> {
    let mut u: Vec<Atom> = a.universe().iter().chain(b.universe()).cloned().collect();
    u.sort();
    u.dedup();
    check_universe(&u)?;
    let remap = |s: &SetSystem| -> Vec<Mask> {
        let pos: Vec<usize> = s
            .universe()
            .iter()
            .map(|x| u.binary_search(x).expect("merged universe"))
            .collect();
        s.masks()
            .iter()
            .map(|&m| mask::ones(m).fold(0, |acc, i| acc | mask::bit(pos[i])))
            .collect()
    };
    let (ma, mb) = (remap(a), remap(b));
    Ok((u, ma, mb))
}

fn pairwise(a: &SetSystem, b: &SetSystem, f: impl Fn(Mask, Mask) -> Mask) -> Result<SetSystem> {
    let (u, ma, mb) = merge_universes(a, b)?;
    let masks: Vec<Mask> = ma
        .iter()
        .flat_map(|&x| mb.iter().map(move |&y| (x, y)))
        .map(|(x, y)| f(x, y))
        .collect();
    Ok(SetSystem::from_sorted(u, masks))
}

/// `{ L ∪ M ; L ∈ 𝓛, M ∈ 𝓜 }` over the union of the universes.
pub fn ew_union(l: &SetSystem, m: &SetSystem) -> Result<SetSystem> {
    pairwise(l, m, |x, y| x | y)
}

/// `{ L ∩ M ; L ∈ 𝓛, M ∈ 𝓜 }` over the union of the universes.
pub fn ew_intersect(l: &SetSystem, m: &SetSystem) -> Result<SetSystem> {
    pairwise(l, m, |x, y| x & y)
}

/// `{ L × M }` over the pair atoms of the two supports.
pub fn ew_product(l: &SetSystem, m: &SetSystem) -> Result<SetSystem> {
    let (sl, sm) = (l.support_mask(), m.support_mask());
    let (kl, km) = (sl.count_ones() as usize, sm.count_ones() as usize);
    let left = l.atoms_of(sl);
    let right = m.atoms_of(sm);
    // nested loops over sorted supports already yield sorted pair atoms
    let universe: Vec<Atom> = left
        .iter()
        .flat_map(|x| right.iter().map(move |y| Atom::pair(x.clone(), y.clone())))
        .collect();
    check_universe(&universe)?;
    let mut masks = Vec::with_capacity(l.len() * m.len());
    for &a in l.masks() {
        let a = compress(a, sl);
        for &b in m.masks() {
            let b = compress(b, sm);
            let mut out = 0;
            for i in mask::ones(a) {
                out |= b << (i * km);
            }
            masks.push(out);
        }
    }
    debug_assert!(kl * km == universe.len());
    Ok(SetSystem::from_sorted(universe, masks))
}

/// Universe of tagged atoms `<x, j>` (tags from 1) for `x` in the support of
/// the j-th operand, with each operand's members as tagged masks.
fn tagged_parts(systems: &[&SetSystem]) -> Result<(Vec<Atom>, Vec<Vec<Mask>>)> {
    if systems.is_empty() {
        return Err(Error::EmptyOperandList);
    }
    let mut universe = Vec::new();
    let mut offsets = Vec::new();
    for (j, s) in systems.iter().enumerate() {
        offsets.push(universe.len());
        for a in s.support() {
            universe.push(Atom::tagged(a, j as u32 + 1));
        }
    }
    check_universe(&universe)?;
    let parts = systems
        .iter()
        .zip(&offsets)
        .map(|(s, &off)| {
            let sup = s.support_mask();
            s.masks().iter().map(|&m| compress(m, sup) << off).collect()
        })
        .collect();
    Ok((universe, parts))
}

/// Elementwise disjoint union: one member `L₁ ⊎ ⋯ ⊎ Lₙ` per choice of
/// `Lᵢ ∈ 𝓛ᵢ`.
pub fn ew_disjoint(systems: &[&SetSystem]) -> Result<SetSystem> {
    let (universe, parts) = tagged_parts(systems)?;
    let mut acc: Vec<Mask> = vec![0];
    for part in &parts {
        acc = acc
            .iter()
            .flat_map(|&a| part.iter().map(move |&b| a | b))
            .collect();
        acc.sort_unstable();
        acc.dedup();
    }
    SetSystem::from_masks(universe, acc)
}

/// Carrier of the coproduct: `{ L × {j} ; L ∈ 𝓛ⱼ }`.
pub fn tagged_union(systems: &[&SetSystem]) -> Result<SetSystem> {
    let (universe, parts) = tagged_parts(systems)?;
    SetSystem::from_masks(universe, parts.into_iter().flatten())
}

/// `!𝓜`: each member `M` becomes the family of its nonempty finite subsets,
/// each encoded as a finset atom.
pub fn bang(m: &SetSystem) -> Result<SetSystem> {
    let sup = m.support_mask();
    let k = sup.count_ones() as usize;
    let size = (1usize << k.min(63)) - 1;
    if k > 6 {
        return Err(Error::UniverseTooLarge {
            size,
            bound: crate::mask::MAX_UNIVERSE,
        });
    }
    let support = m.atoms_of(sup);
    // finset atom for each nonempty compressed submask v, indexed by v - 1
    let universe: Vec<Atom> = (1..=size as Mask)
        .map(|v| Atom::finset(mask::ones(v).map(|i| support[i].clone())))
        .collect();
    let masks = m.masks().iter().map(|&member| {
        let c = compress(member, sup);
        mask::submasks(c)
            .filter(|&v| v != 0)
            .fold(0, |acc, v| acc | mask::bit(v as usize - 1))
    });
    SetSystem::from_masks(universe, masks.collect::<Vec<_>>())
}

/// `𝓛⊥ = { 𝓛(x) ; x ∈ ⋃𝓛 }` with `𝓛(x)` the members containing `x`;
/// the universe is the nonempty members, each as a finset atom.
pub fn perp(l: &SetSystem) -> Result<SetSystem> {
    let nonempty: Vec<Mask> = l.masks().iter().copied().filter(|&m| m != 0).collect();
    let universe: Vec<Atom> = nonempty
        .iter()
        .map(|&m| Atom::finset(l.atoms_of(m)))
        .collect();
    let masks: Vec<Mask> = mask::ones(l.support_mask())
        .map(|x| {
            nonempty
                .iter()
                .enumerate()
                .filter(|&(_, &m)| m & mask::bit(x) != 0)
                .fold(0, |acc, (k, _)| acc | mask::bit(k))
        })
        .collect();
    SetSystem::from_masks(universe, masks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn n(i: usize) -> Atom {
        Atom::num(i)
    }

    fn sys(u: usize, members: &[&[usize]]) -> SetSystem {
        SetSystem::new(
            Atom::range(u),
            members.iter().map(|m| m.iter().map(|&i| n(i)).collect::<Vec<_>>()),
        )
        .unwrap()
    }

    fn fam(members: &[&[Atom]]) -> BTreeSet<Vec<Atom>> {
        members.iter().map(|m| m.to_vec()).collect()
    }

    fn fixture_pair() -> (SetSystem, SetSystem) {
        (
            sys(3, &[&[], &[0], &[0, 1, 2]]),
            sys(3, &[&[], &[1], &[0, 1, 2]]),
        )
    }

    #[test]
    fn union_examples() {
        let a = sys(2, &[&[], &[0]]);
        let b = sys(2, &[&[1]]);
        assert_eq!(ew_union(&a, &b).unwrap().family(), fam(&[&[n(1)], &[n(0), n(1)]]));
        let (l, m) = fixture_pair();
        let u = ew_union(&l, &m).unwrap();
        assert_eq!(u.to_string(), "{∅, {0}, {1}, {0,1}, {0,1,2}}");
        let e = sys(0, &[&[]]);
        assert_eq!(ew_union(&l, &e).unwrap().family(), l.family());
    }

    #[test]
    fn intersect_examples() {
        let (l, m) = fixture_pair();
        assert_eq!(ew_intersect(&l, &m).unwrap().to_string(), "{∅, {0}, {1}, {0,1,2}}");
        let chain = sys(3, &[&[0], &[0, 1], &[0, 1, 2]]);
        assert_eq!(ew_intersect(&chain, &chain).unwrap(), chain);
        let e = sys(0, &[&[]]);
        assert_eq!(ew_intersect(&l, &e).unwrap().family(), fam(&[&[]]));
    }

    #[test]
    fn product_examples() {
        let a = SetSystem::new(vec![n(0)], vec![vec![n(0)]]).unwrap();
        let b = SetSystem::new(vec![n(1)], vec![vec![n(1)]]).unwrap();
        let p = ew_product(&a, &b).unwrap();
        assert_eq!(p.family(), fam(&[&[Atom::pair(n(0), n(1))]]));
        let e = sys(0, &[&[]]);
        assert_eq!(ew_product(&e, &a).unwrap().family(), fam(&[&[]]));
    }

    #[test]
    fn product_counts_against_brute_force() {
        let l = sys(3, &[&[0], &[1, 2], &[0, 2]]);
        let m = sys(3, &[&[], &[2], &[0, 1]]);
        let p = ew_product(&l, &m).unwrap();
        let mut brute = BTreeSet::new();
        for a in l.members() {
            for b in m.members() {
                let mut s: Vec<Atom> = a
                    .iter()
                    .flat_map(|x| b.iter().map(move |y| Atom::pair(x.clone(), y.clone())))
                    .collect();
                s.sort();
                brute.insert(s);
            }
        }
        assert_eq!(p.family(), brute);
        assert!(p.len() <= l.len() * m.len());
    }

    #[test]
    fn disjoint_examples() {
        let a = SetSystem::new(vec![n(0)], vec![vec![n(0)]]).unwrap();
        let d = ew_disjoint(&[&a, &a]).unwrap();
        assert_eq!(
            d.family(),
            fam(&[&[Atom::tagged(n(0), 1), Atom::tagged(n(0), 2)]])
        );
        let l = sys(2, &[&[0], &[1], &[0, 1]]);
        let m = sys(2, &[&[], &[1]]);
        assert_eq!(ew_disjoint(&[&l, &m]).unwrap().len(), 6);
        let single = ew_disjoint(&[&l]).unwrap();
        assert_eq!(single.len(), l.len());
        assert_eq!(ew_disjoint(&[]), Err(Error::EmptyOperandList));
    }

    #[test]
    fn tagged_union_examples() {
        let a = SetSystem::new(vec![n(0)], vec![vec![n(0)]]).unwrap();
        let t = tagged_union(&[&a, &a]).unwrap();
        assert_eq!(
            t.family(),
            fam(&[&[Atom::tagged(n(0), 1)], &[Atom::tagged(n(0), 2)]])
        );
        let l = sys(3, &[&[0], &[1, 2]]);
        let one = tagged_union(&[&l]).unwrap();
        let back = one.relabel(|a| match a {
            Atom::Tagged(x, _) => (**x).clone(),
            other => other.clone(),
        });
        assert_eq!(back.unwrap().family(), l.family());
        assert_eq!(tagged_union(&[]), Err(Error::EmptyOperandList));
    }

    #[test]
    fn bang_examples() {
        let a = SetSystem::new(vec![n(0)], vec![vec![n(0)]]).unwrap();
        let b = bang(&a).unwrap();
        assert_eq!(b.family(), fam(&[&[Atom::finset([n(0)])]]));
        let m = sys(3, &[&[0, 1, 2], &[1]]);
        let b = bang(&m).unwrap();
        let sizes: BTreeSet<usize> = b.members().map(|x| x.len()).collect();
        assert_eq!(sizes, [1, 7].into_iter().collect());
        let big = sys(7, &[&[0, 1, 2, 3, 4, 5, 6]]);
        assert!(matches!(bang(&big), Err(Error::UniverseTooLarge { .. })));
    }

    #[test]
    fn perp_examples() {
        let s = sys(2, &[&[0], &[1]]);
        assert_eq!(
            perp(&s).unwrap().family(),
            fam(&[&[Atom::finset([n(0)])], &[Atom::finset([n(1)])]])
        );
        let (l, _) = fixture_pair();
        let f0 = Atom::finset([n(0)]);
        let f012 = Atom::finset([n(0), n(1), n(2)]);
        assert_eq!(
            perp(&l).unwrap().family(),
            fam(&[&[f0, f012.clone()], &[f012]])
        );
    }
}
