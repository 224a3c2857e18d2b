//! Cross-checks against deliberately naive reimplementations.

use setsys::check::all_sequential_traces;
use setsys::gen;
use setsys::ramsey::{ram_verify, EdgeColoring};
use setsys::{dim, find_sdr, is_production_sequence, longest_production_sequence, Atom, QuasiOrder, SdrProblem, SetSystem};
use std::collections::BTreeSet;

type Set = BTreeSet<Atom>;

/// Longest production sequence by walking the whole tree.
fn naive_dim(l: &SetSystem) -> usize {
    let members: Vec<Set> = l.members().map(|m| m.into_iter().collect()).collect();
    let support: Set = members.iter().flatten().cloned().collect();
    fn walk(members: &[Set], support: &Set, seen: &Set, last: Option<&Set>) -> usize {
        let mut best = 0;
        for t in support {
            if seen.contains(t) || last.is_some_and(|h| h.contains(t)) {
                continue;
            }
            let mut next = seen.clone();
            next.insert(t.clone());
            for h in members {
                if next.is_subset(h) {
                    best = best.max(1 + walk(members, support, &next, Some(h)));
                }
            }
        }
        best
    }
    walk(&members, &support, &Set::new(), None)
}

/// Height of the tree of bad sequences.
fn naive_otp(q: &QuasiOrder) -> usize {
    fn walk(q: &QuasiOrder, seq: &mut Vec<usize>) -> usize {
        let mut best = 0;
        for x in 0..q.len() {
            if seq.iter().any(|&s| q.le_idx(s, x)) {
                continue;
            }
            seq.push(x);
            best = best.max(1 + walk(q, seq));
            seq.pop();
        }
        best
    }
    walk(q, &mut Vec::new())
}

#[test]
fn dim_matches_tree_walk_on_all_small_systems() {
    for l in gen::all_systems(3) {
        assert_eq!(dim(&l), naive_dim(&l), "{l:?}");
    }
}

#[test]
fn dim_matches_tree_walk_on_random_systems() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for k in [4, 5] {
        for _ in 0..150 {
            let l = gen::random_system(&mut rng, k);
            assert_eq!(dim(&l), naive_dim(&l), "{l:?}");
        }
    }
}

#[test]
fn witnesses_have_length_dim_on_universes_up_to_four() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    let systems = gen::all_systems(3).chain((0..400).map(|_| gen::random_system(&mut rng, 4)));
    for l in systems {
        let w = longest_production_sequence(&l);
        assert!(is_production_sequence(&l, &w).unwrap());
        assert_eq!(w.len(), dim(&l));
    }
}

#[test]
fn named_dims() {
    let s = |sets: &[&[usize]]| {
        SetSystem::new(
            Atom::range(3),
            sets.iter().map(|m| m.iter().map(|&i| Atom::num(i)).collect::<Vec<_>>()),
        )
        .unwrap()
    };
    let staircase = s(&[&[], &[0], &[0, 1], &[0, 1, 2]]);
    assert_eq!(naive_dim(&staircase), 3);
    assert_eq!(dim(&staircase), 3);
    assert_eq!(dim(&s(&[])), 0);
    assert_eq!(dim(&s(&[&[]])), 0);
}

#[test]
fn otp_matches_bad_sequence_tree() {
    for n in 0..=4 {
        for q in gen::all_quasi_orders(n) {
            assert_eq!(q.otp(), naive_otp(&q));
        }
    }
}

#[test]
fn ss_matches_filter_of_powerset() {
    for n in 0..=4 {
        for q in gen::quasi_orders_up_to_iso(n) {
            let ss = q.ss().unwrap();
            let want: Vec<u64> = (0..1u64 << n)
                .filter(|&m| (0..n).all(|i| m >> i & 1 == 0 || (0..n).all(|j| !q.le_idx(i, j) || m >> j & 1 == 1)))
                .collect();
            let mut got = ss.masks().to_vec();
            got.sort();
            assert_eq!(got, want);
        }
    }
}

fn mono(c: &EdgeColoring, n: usize, size: usize, color: u8) -> bool {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == size).any(|s| {
        (0..n).all(|i| {
            (i + 1..n).all(|j| s >> i & 1 == 0 || s >> j & 1 == 0 || c.color(i, j) == Some(color))
        })
    })
}

/// Does every 2-coloring of K_n contain the cliques? All 2^(n choose 2)
/// colorings, no pruning.
fn brute_ramsey(l1: usize, l2: usize, n: usize) -> bool {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u32..1 << pairs.len()).all(|code| {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(b, &(i, j))| (i, j, if code >> b & 1 == 1 { 2 } else { 1 }))
            .collect();
        let c = EdgeColoring { vertices: n, edges };
        mono(&c, n, l1, 1) || mono(&c, n, l2, 2)
    })
}

#[test]
fn ramsey_search_matches_brute_force() {
    for (l1, l2) in [(3, 3), (2, 3), (3, 2), (2, 4), (3, 4), (4, 3)] {
        for n in 1..=6 {
            let fast = ram_verify(l1, l2, n).unwrap();
            assert_eq!(fast.holds_at_n, brute_ramsey(l1, l2, n), "({l1},{l2}) at {n}");
            if let Some(w) = fast.witness {
                assert!(!mono(&w, n, l1, 1) && !mono(&w, n, l2, 2));
            }
        }
    }
}

#[test]
fn sdr_agrees_with_hall() {
    // Hall: an SDR exists iff every subfamily of blocks covers at least as
    // many atoms as it has blocks.
    let universe = Atom::range(3);
    let blocks: Vec<Set> = (0u32..8)
        .map(|m| (0..3).filter(|i| m >> i & 1 == 1).map(Atom::num).collect())
        .collect();
    for a in 0..8 {
        for b in 0..8 {
            for c in 0..8 {
                let fam = [&blocks[a], &blocks[b], &blocks[c]];
                let hall = (1u32..8).all(|sub| {
                    let chosen: Vec<&&Set> = (0..3).filter(|i| sub >> i & 1 == 1).map(|i| &fam[i]).collect();
                    let union: Set = chosen.iter().flat_map(|s| s.iter().cloned()).collect();
                    union.len() >= chosen.len()
                });
                let p = SdrProblem::new(fam.iter().map(|s| s.iter().cloned().collect::<Vec<_>>()));
                let sdr = find_sdr(&p);
                assert_eq!(sdr.is_some(), hall, "{fam:?}");
                if let Some(reps) = sdr {
                    let distinct: Set = reps.iter().cloned().collect();
                    assert_eq!(distinct.len(), 3);
                    assert!(reps.iter().zip(fam).all(|(r, b)| b.contains(r) && universe.contains(r)));
                }
            }
        }
    }
}

#[test]
fn sequential_traces_preserve_dim_bound() {
    // direct image by a sequential trace with inhabited v
    for t in all_sequential_traces(3, 2, true) {
        for m in gen::all_systems(2) {
            let img = t.direct_image(&m).unwrap();
            assert!(naive_dim(&img) <= naive_dim(&m));
        }
    }
}
