//! Finite quasi-orders, bad sequences, `otp`, and the `ss` / `qo_of`
//! representation pair.

use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::mask::{self, Mask};
use crate::system::{sorted_universe, SetSystem};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Default carrier bound for [`QuasiOrder::ss`]; the enumeration scans all
/// `2^|X|` subsets.
pub const SS_BOUND: usize = 20;

/// A reflexive, transitive relation on a finite carrier.
///
/// `up[i]` is the mask of all `j` with `elements[i] ≼ elements[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "OrderRepr", into = "OrderRepr")]
pub struct QuasiOrder {
    elements: Vec<Atom>,
    up: Vec<Mask>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderRepr {
    elements: Vec<Atom>,
    le: Vec<(Atom, Atom)>,
}

impl TryFrom<OrderRepr> for QuasiOrder {
    type Error = Error;
    fn try_from(r: OrderRepr) -> Result<Self> {
        QuasiOrder::new(r.elements, r.le)
    }
}

impl From<QuasiOrder> for OrderRepr {
    fn from(q: QuasiOrder) -> Self {
        OrderRepr {
            le: q.pairs(),
            elements: q.elements,
        }
    }
}

fn close(up: &mut [Mask]) {
    for (i, row) in up.iter_mut().enumerate() {
        *row |= mask::bit(i);
    }
    // Warshall on bit rows
    for k in 0..up.len() {
        let row_k = up[k];
        for row in up.iter_mut() {
            if *row & mask::bit(k) != 0 {
                *row |= row_k;
            }
        }
    }
}

impl QuasiOrder {
    /// The reflexive-transitive closure of `pairs` on `elements`.
    pub fn new(
        elements: impl IntoIterator<Item = Atom>,
        pairs: impl IntoIterator<Item = (Atom, Atom)>,
    ) -> Result<Self> {
        let (elements, up) = Self::raw(elements, pairs)?;
        let mut up = up;
        close(&mut up);
        Ok(QuasiOrder { elements, up })
    }

    /// Like [`QuasiOrder::new`] but rejects input that is not already
    /// reflexive and transitive.
    pub fn new_strict(
        elements: impl IntoIterator<Item = Atom>,
        pairs: impl IntoIterator<Item = (Atom, Atom)>,
    ) -> Result<Self> {
        let (elements, raw) = Self::raw(elements, pairs)?;
        let mut closed = raw.clone();
        close(&mut closed);
        for (i, (&r, &c)) in raw.iter().zip(&closed).enumerate() {
            if let Some(j) = mask::ones(c & !r).next() {
                return Err(Error::NotClosed(elements[i].clone(), elements[j].clone()));
            }
        }
        Ok(QuasiOrder { elements, up: raw })
    }

    fn raw(
        elements: impl IntoIterator<Item = Atom>,
        pairs: impl IntoIterator<Item = (Atom, Atom)>,
    ) -> Result<(Vec<Atom>, Vec<Mask>)> {
        let elements = sorted_universe(elements.into_iter().collect())?;
        let mut up = vec![0; elements.len()];
        for (a, b) in pairs {
            let i = elements
                .binary_search(&a)
                .map_err(|_| Error::UnknownElement(a.clone()))?;
            let j = elements
                .binary_search(&b)
                .map_err(|_| Error::UnknownElement(b.clone()))?;
            up[i] |= mask::bit(j);
        }
        Ok((elements, up))
    }

    /// From up-set rows over `Atom::range(n)`; the rows are closed.
    pub fn from_up_masks(up: Vec<Mask>) -> Result<Self> {
        let elements = Atom::range(up.len());
        crate::system::check_universe(&elements)?;
        let mut up = up;
        let extra = !mask::full(up.len());
        for row in up.iter_mut() {
            *row &= !extra;
        }
        close(&mut up);
        Ok(QuasiOrder { elements, up })
    }

    /// The n-element antichain on `0..n`.
    pub fn antichain(n: usize) -> Self {
        Self::from_up_masks(vec![0; n]).expect("n <= 64")
    }

    /// The chain `0 ≼ 1 ≼ ⋯ ≼ n−1`.
    pub fn chain(n: usize) -> Self {
        Self::from_up_masks((0..n).map(|i| mask::full(n) & !mask::full(i)).collect())
            .expect("n <= 64")
    }

    pub fn elements(&self) -> &[Atom] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn up_masks(&self) -> &[Mask] {
        &self.up
    }

    pub fn index_of(&self, a: &Atom) -> Result<usize> {
        self.elements
            .binary_search(a)
            .map_err(|_| Error::UnknownElement(a.clone()))
    }

    pub fn le_idx(&self, i: usize, j: usize) -> bool {
        self.up[i] & mask::bit(j) != 0
    }

    pub fn le(&self, a: &Atom, b: &Atom) -> Result<bool> {
        Ok(self.le_idx(self.index_of(a)?, self.index_of(b)?))
    }

    /// All related pairs `(x, y)` with `x ≼ y`.
    pub fn pairs(&self) -> Vec<(Atom, Atom)> {
        (0..self.len())
            .flat_map(|i| mask::ones(self.up[i]).map(move |j| (i, j)))
            .map(|(i, j)| (self.elements[i].clone(), self.elements[j].clone()))
            .collect()
    }

    pub fn mask_of<'a>(&self, atoms: impl IntoIterator<Item = &'a Atom>) -> Result<Mask> {
        atoms
            .into_iter()
            .try_fold(0, |acc, a| Ok(acc | mask::bit(self.index_of(a)?)))
    }

    /// True iff `aᵢ ⋠ aⱼ` for all `i < j`.
    pub fn is_bad_sequence(&self, seq: &[Atom]) -> Result<bool> {
        let idx: Vec<usize> = seq.iter().map(|a| self.index_of(a)).collect::<Result<_>>()?;
        Ok(idx
            .iter()
            .enumerate()
            .all(|(i, &a)| idx[i + 1..].iter().all(|&b| !self.le_idx(a, b))))
    }

    pub fn upset_mask(&self, a: Mask) -> Mask {
        mask::ones(a).fold(0, |acc, i| acc | self.up[i])
    }

    /// `A↑𝒳 = { x ; ∃a ∈ A. a ≼ x }`.
    pub fn upset(&self, a: &[Atom]) -> Result<Vec<Atom>> {
        let m = self.upset_mask(self.mask_of(a)?);
        Ok(self.atoms_of(m))
    }

    pub fn atoms_of(&self, m: Mask) -> Vec<Atom> {
        mask::ones(m).map(|i| self.elements[i].clone()).collect()
    }

    pub fn is_upper_closed(&self, m: Mask) -> bool {
        self.upset_mask(m) == m
    }

    /// Elements of `a` with nothing strictly below them inside `a`; for
    /// equivalent elements the first in carrier order is kept.
    pub fn minimal_elements(&self, a: Mask) -> Mask {
        mask::ones(a)
            .filter(|&x| {
                !mask::ones(a).any(|y| {
                    y != x && self.le_idx(y, x) && (!self.le_idx(x, y) || y < x)
                })
            })
            .fold(0, |acc, x| acc | mask::bit(x))
    }

    /// Rank of the tree of bad sequences.
    ///
    /// A node is summarized by the up-set `F` generated by its entries: the
    /// next entry must lie outside `F`.
    pub fn otp(&self) -> usize {
        fn rank(q: &QuasiOrder, forbidden: Mask, memo: &mut HashMap<Mask, u32>) -> u32 {
            if let Some(&r) = memo.get(&forbidden) {
                return r;
            }
            let free = mask::full(q.len()) & !forbidden;
            let r = mask::ones(free)
                .map(|a| 1 + rank(q, forbidden | q.up[a], memo))
                .max()
                .unwrap_or(0);
            memo.insert(forbidden, r);
            r
        }
        rank(self, 0, &mut HashMap::new()) as usize
    }

    /// All upper-closed subsets, as a set system over the carrier.
    pub fn ss(&self) -> Result<SetSystem> {
        self.ss_bounded(SS_BOUND)
    }

    pub fn ss_bounded(&self, bound: usize) -> Result<SetSystem> {
        if self.len() > bound {
            return Err(Error::UniverseTooLarge {
                size: self.len(),
                bound,
            });
        }
        let masks = (0..=mask::full(self.len())).filter(|&m| self.is_upper_closed(m));
        Ok(SetSystem::from_sorted(self.elements.clone(), masks.collect::<Vec<_>>()))
    }

    /// Pointwise conjunction of two orders on the same carrier.
    pub fn intersect(&self, other: &QuasiOrder) -> Result<QuasiOrder> {
        if self.elements != other.elements {
            return Err(Error::CarrierMismatch);
        }
        Ok(QuasiOrder {
            elements: self.elements.clone(),
            up: self.up.iter().zip(&other.up).map(|(a, b)| a & b).collect(),
        })
    }

    /// The reversed order.
    pub fn dual(&self) -> QuasiOrder {
        let n = self.len();
        let up = (0..n)
            .map(|j| (0..n).filter(|&i| self.le_idx(i, j)).fold(0, |acc, i| acc | mask::bit(i)))
            .collect();
        QuasiOrder {
            elements: self.elements.clone(),
            up,
        }
    }

    /// Relabels the carrier positions by `perm` (`perm[i]` is the new index
    /// of old index `i`) over `Atom::range(n)`.
    pub fn permuted(&self, perm: &[usize]) -> QuasiOrder {
        let n = self.len();
        let mut up = vec![0; n];
        for i in 0..n {
            up[perm[i]] = mask::ones(self.up[i]).fold(0, |acc, j| acc | mask::bit(perm[j]));
        }
        QuasiOrder {
            elements: Atom::range(n),
            up,
        }
    }
}

/// A relation between the carriers of two quasi-orders. The simulation law
/// is checked by [`Simulation::is_simulation`], not on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SimulationRepr", into = "SimulationRepr")]
pub struct Simulation {
    source: QuasiOrder,
    target: QuasiOrder,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SimulationRepr {
    source: QuasiOrder,
    target: QuasiOrder,
    pairs: Vec<(Atom, Atom)>,
}

impl TryFrom<SimulationRepr> for Simulation {
    type Error = Error;
    fn try_from(r: SimulationRepr) -> Result<Self> {
        Simulation::new(r.source, r.target, r.pairs)
    }
}

impl From<Simulation> for SimulationRepr {
    fn from(s: Simulation) -> Self {
        SimulationRepr {
            pairs: s.pairs(),
            source: s.source,
            target: s.target,
        }
    }
}

impl Simulation {
    pub fn new(
        source: QuasiOrder,
        target: QuasiOrder,
        pairs: impl IntoIterator<Item = (Atom, Atom)>,
    ) -> Result<Self> {
        let idx = pairs
            .into_iter()
            .map(|(x, y)| Ok((source.index_of(&x)?, target.index_of(&y)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_indices(source, target, idx))
    }

    pub(crate) fn from_indices(
        source: QuasiOrder,
        target: QuasiOrder,
        mut pairs: Vec<(usize, usize)>,
    ) -> Self {
        pairs.sort_unstable();
        pairs.dedup();
        Simulation {
            source,
            target,
            pairs,
        }
    }

    /// The diagonal on `q`.
    pub fn identity(q: &QuasiOrder) -> Self {
        Self::from_indices(q.clone(), q.clone(), (0..q.len()).map(|i| (i, i)).collect())
    }

    /// `R_f = { (x, f(x)) }`.
    pub fn graph(
        source: QuasiOrder,
        target: QuasiOrder,
        f: impl Fn(&Atom) -> Atom,
    ) -> Result<Self> {
        let pairs: Vec<(Atom, Atom)> = source.elements.iter().map(|x| (x.clone(), f(x))).collect();
        Self::new(source, target, pairs)
    }

    pub fn source(&self) -> &QuasiOrder {
        &self.source
    }

    pub fn target(&self) -> &QuasiOrder {
        &self.target
    }

    pub fn index_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pairs(&self) -> Vec<(Atom, Atom)> {
        self.pairs
            .iter()
            .map(|&(x, y)| (self.source.elements[x].clone(), self.target.elements[y].clone()))
            .collect()
    }

    /// `R(x,y) ∧ x ≼ x′ ⇒ ∃y′ ⊒ y. R(x′,y′)`.
    pub fn is_simulation(&self) -> bool {
        let mut image = vec![0 as Mask; self.source.len()];
        for &(x, y) in &self.pairs {
            image[x] |= mask::bit(y);
        }
        self.pairs.iter().all(|&(x, y)| {
            mask::ones(self.source.up[x]).all(|x2| image[x2] & self.target.up[y] != 0)
        })
    }

    /// `R⁻¹[M] = { x ; ∃y ∈ M. R(x,y) }` on carrier masks.
    pub fn preimage_mask(&self, m: Mask) -> Mask {
        self.pairs
            .iter()
            .filter(|&&(_, y)| m & mask::bit(y) != 0)
            .fold(0, |acc, &(x, _)| acc | mask::bit(x))
    }

    /// Relational composite: `(S∘R)(x,z)` iff `R(x,y)` and `S(y,z)` for some `y`.
    pub fn then(&self, s: &Simulation) -> Result<Simulation> {
        if self.target != s.source {
            return Err(Error::CarrierMismatch);
        }
        let pairs = self
            .pairs
            .iter()
            .flat_map(|&(x, y)| s.pairs.iter().filter(move |p| p.0 == y).map(move |p| (x, p.1)))
            .collect();
        Ok(Self::from_indices(self.source.clone(), s.target.clone(), pairs))
    }
}

/// Largest carrier accepted by [`linearizations`].
pub const LINEARIZATION_BOUND: usize = 8;

/// Every surjective order-homomorphism from `q` onto a finite chain, as the
/// chain on `0..k` together with the graph of the map.
pub fn linearizations(q: &QuasiOrder) -> Result<Vec<(QuasiOrder, Simulation)>> {
    if q.len() > LINEARIZATION_BOUND {
        return Err(Error::UniverseTooLarge {
            size: q.len(),
            bound: LINEARIZATION_BOUND,
        });
    }
    // a monotone f onto 0..k is a split of X into nonempty levels whose
    // suffixes {f ≥ i} are all up-sets
    fn levels(q: &QuasiOrder, rest: Mask, acc: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for block in mask::submasks(rest) {
            if block != 0 && q.is_upper_closed(rest & !block) {
                acc.push(block);
                levels(q, rest & !block, acc, out);
                acc.pop();
            }
        }
    }
    let mut splits = Vec::new();
    levels(q, mask::full(q.len()), &mut Vec::new(), &mut splits);
    splits.sort();
    Ok(splits
        .into_iter()
        .map(|split| {
            let chain = QuasiOrder::chain(split.len());
            let pairs = split
                .iter()
                .enumerate()
                .flat_map(|(level, &b)| mask::ones(b).map(move |x| (x, level)))
                .collect();
            let sim = Simulation::from_indices(q.clone(), chain.clone(), pairs);
            (chain, sim)
        })
        .collect())
}

/// `x ≼ y` iff every member containing `x` contains `y`, on the universe of
/// `l`.
pub fn qo_of(l: &SetSystem) -> QuasiOrder {
    let n = l.universe().len();
    let up = (0..n)
        .map(|x| {
            l.masks()
                .iter()
                .filter(|&&m| m & mask::bit(x) != 0)
                .fold(mask::full(n), |acc, &m| acc & m)
        })
        .collect();
    QuasiOrder {
        elements: l.universe().to_vec(),
        up,
    }
}

/// Is `l` (closed under union and intersection) coatomic: does every
/// non-top member lie below some coatom?
///
/// A coatom is a non-top `C` such that every non-top `c` satisfies
/// `c ∪ C = top` or `c ⊆ C`.
pub fn is_coatomic_lattice(l: &SetSystem) -> Result<bool> {
    let ms = l.masks();
    if ms.is_empty() {
        return Err(Error::NotALattice);
    }
    for &a in ms {
        for &b in ms {
            if !l.masks().contains(&(a | b)) || !l.masks().contains(&(a & b)) {
                return Err(Error::NotALattice);
            }
        }
    }
    let top = l.support_mask();
    let nontop: Vec<Mask> = ms.iter().copied().filter(|&m| m != top).collect();
    let coatoms: Vec<Mask> = nontop
        .iter()
        .copied()
        .filter(|&c| nontop.iter().all(|&d| d | c == top || mask::is_subset(d, c)))
        .collect();
    Ok(nontop
        .iter()
        .all(|&c0| coatoms.iter().any(|&c| mask::is_subset(c0, c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn n(i: usize) -> Atom {
        Atom::num(i)
    }

    /// `≤ᵢ` on {0,1,2}: the two elements other than `i` are equivalent and
    /// strictly below `i`.
    fn peak(i: usize) -> QuasiOrder {
        let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
        let mut pairs = vec![(n(others[0]), n(others[1])), (n(others[1]), n(others[0]))];
        pairs.extend(others.iter().map(|&j| (n(j), n(i))));
        QuasiOrder::new(Atom::range(3), pairs).unwrap()
    }

    fn fam(members: &[&[usize]]) -> BTreeSet<Vec<Atom>> {
        members
            .iter()
            .map(|m| m.iter().map(|&i| n(i)).collect())
            .collect()
    }

    #[test]
    fn closure_on_construction() {
        let q = QuasiOrder::new(Atom::range(2), [(n(0), n(1))]).unwrap();
        assert_eq!(q.pairs(), vec![(n(0), n(0)), (n(0), n(1)), (n(1), n(1))]);
        let q = QuasiOrder::new(Atom::range(2), [(n(0), n(1)), (n(1), n(0))]).unwrap();
        assert!(q.le(&n(1), &n(0)).unwrap() && q.le(&n(0), &n(1)).unwrap());
        let q = QuasiOrder::new(Atom::range(3), [(n(0), n(1)), (n(1), n(2))]).unwrap();
        assert!(q.le(&n(0), &n(2)).unwrap());
        assert_eq!(
            QuasiOrder::new(Atom::range(1), [(n(0), n(4))]),
            Err(Error::UnknownElement(n(4)))
        );
    }

    #[test]
    fn strict_mode_rejects_open_input() {
        assert!(matches!(
            QuasiOrder::new_strict(Atom::range(2), [(n(0), n(1))]),
            Err(Error::NotClosed(..))
        ));
        let closed = QuasiOrder::chain(3);
        assert_eq!(
            QuasiOrder::new_strict(Atom::range(3), closed.pairs()).unwrap(),
            closed
        );
    }

    #[test]
    fn bad_sequences() {
        let c = QuasiOrder::chain(2);
        assert!(c.is_bad_sequence(&[n(1), n(0)]).unwrap());
        assert!(!c.is_bad_sequence(&[n(0), n(0)]).unwrap());
        assert!(QuasiOrder::antichain(3).is_bad_sequence(&[n(0), n(1), n(2)]).unwrap());
        assert!(c.is_bad_sequence(&[n(9)]).is_err());
    }

    #[test]
    fn otp_small_cases() {
        assert_eq!(QuasiOrder::antichain(0).otp(), 0);
        for k in 1..=5 {
            assert_eq!(QuasiOrder::antichain(k).otp(), k);
            assert_eq!(QuasiOrder::chain(k).otp(), k);
        }
        assert_eq!(peak(0).otp(), 2);
    }

    #[test]
    fn ss_examples() {
        assert_eq!(QuasiOrder::chain(2).ss().unwrap().family(), fam(&[&[], &[1], &[0, 1]]));
        assert_eq!(QuasiOrder::antichain(2).ss().unwrap().len(), 4);
        let meet = peak(0).intersect(&peak(1)).unwrap();
        assert_eq!(
            meet.ss().unwrap().family(),
            fam(&[&[], &[0], &[1], &[0, 1], &[0, 1, 2]])
        );
        assert!(matches!(
            QuasiOrder::antichain(21).ss(),
            Err(Error::UniverseTooLarge { size: 21, bound: 20 })
        ));
    }

    #[test]
    fn qo_of_examples() {
        let singl = SetSystem::new(Atom::range(4), (0..4).map(|i| vec![n(i)])).unwrap();
        assert_eq!(qo_of(&singl), QuasiOrder::antichain(4));
        let vacuous = SetSystem::new(Atom::range(3), vec![Vec::<Atom>::new()]).unwrap();
        let q = qo_of(&vacuous);
        assert_eq!(q.pairs().len(), 9);
        let p = peak(2);
        assert_eq!(qo_of(&p.ss().unwrap()), p);
    }

    #[test]
    fn upsets() {
        let c = QuasiOrder::chain(4);
        assert!(c.upset(&[]).unwrap().is_empty());
        assert_eq!(c.upset(&[n(0)]).unwrap(), Atom::range(4));
        assert_eq!(c.upset(&[n(2)]).unwrap(), vec![n(2), n(3)]);
        assert!(c.upset(&[n(7)]).is_err());
    }

    #[test]
    fn intersections() {
        let p = peak(1);
        assert_eq!(p.intersect(&p).unwrap(), p);
        let meet = peak(0).intersect(&peak(1)).unwrap();
        assert!(!meet.le(&n(0), &n(1)).unwrap() && !meet.le(&n(1), &n(0)).unwrap());
        assert!(meet.le(&n(2), &n(0)).unwrap() && !meet.le(&n(0), &n(2)).unwrap());
        assert!(meet.le(&n(2), &n(1)).unwrap() && !meet.le(&n(1), &n(2)).unwrap());
        let c = QuasiOrder::chain(4);
        assert_eq!(c.intersect(&c.dual()).unwrap(), QuasiOrder::antichain(4));
        assert_eq!(c.intersect(&QuasiOrder::chain(3)), Err(Error::CarrierMismatch));
    }

    #[test]
    fn coatomic_examples() {
        let two = SetSystem::new(Atom::range(3), vec![vec![], Atom::range(3)]).unwrap();
        assert!(is_coatomic_lattice(&two).unwrap());
        let pow = SetSystem::new(
            Atom::range(2),
            vec![vec![], vec![n(0)], vec![n(1)], vec![n(0), n(1)]],
        )
        .unwrap();
        assert!(is_coatomic_lattice(&pow).unwrap());
        assert!(is_coatomic_lattice(&peak(0).ss().unwrap()).unwrap());
        let not = SetSystem::new(Atom::range(2), vec![vec![n(0)], vec![n(1)]]).unwrap();
        assert_eq!(is_coatomic_lattice(&not), Err(Error::NotALattice));
    }

    #[test]
    fn simulations() {
        let c2 = QuasiOrder::chain(2);
        let hom = Simulation::graph(c2.clone(), QuasiOrder::chain(3), |x| {
            Atom::num(x.as_num().unwrap() + 1)
        })
        .unwrap();
        assert!(hom.is_simulation());
        assert!(Simulation::new(c2.clone(), c2.clone(), []).unwrap().is_simulation());
        let stuck = Simulation::new(c2.clone(), c2.clone(), [(n(0), n(1))]).unwrap();
        assert!(!stuck.is_simulation());
        let id = Simulation::identity(&c2);
        assert_eq!(id.then(&id).unwrap(), id);
        assert_eq!(id.then(&hom).unwrap(), hom);
        assert_eq!(hom.then(&id), Err(Error::CarrierMismatch));
    }

    #[test]
    fn simulation_preimages_are_upsets() {
        let src = peak(0).intersect(&peak(1)).unwrap();
        for (_, f) in linearizations(&src).unwrap() {
            assert!(f.is_simulation());
            for &m in f.target().ss().unwrap().masks() {
                assert!(src.is_upper_closed(f.preimage_mask(m)));
            }
        }
    }

    #[test]
    fn linearization_examples() {
        let a3 = linearizations(&QuasiOrder::antichain(3)).unwrap();
        // ordered set partitions of a 3-set
        assert_eq!(a3.len(), 13);
        assert!(a3.iter().any(|(y, _)| y.len() == 3));
        let c3 = linearizations(&QuasiOrder::chain(3)).unwrap();
        // compositions of 3
        assert_eq!(c3.len(), 4);
        assert!(c3.iter().any(|(y, f)| y.len() == 3 && *f == Simulation::identity(&QuasiOrder::chain(3))));
        for (y, _) in a3.iter().chain(&c3) {
            assert!(y.otp() <= 3);
        }
        assert!(linearizations(&QuasiOrder::antichain(9)).is_err());
    }

    #[test]
    fn finite_basis() {
        let q = peak(0).intersect(&peak(1)).unwrap();
        for u in q.ss().unwrap().masks() {
            let basis = q.minimal_elements(*u);
            assert_eq!(q.upset_mask(basis), *u);
        }
    }
}
