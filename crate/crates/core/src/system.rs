//! Finite set systems: a universe of atoms and a deduplicated family of
//! subsets of it.

use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::mask::{self, Mask, MAX_UNIVERSE};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A family of subsets of a finite universe.
///
/// The universe is kept sorted; members are bit masks over universe indices,
/// deduplicated and ordered by (cardinality, mask). Two systems built from
/// the same universe and the same family compare equal and serialize to the
/// same bytes regardless of input order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SystemRepr", into = "SystemRepr")]
pub struct SetSystem {
    universe: Vec<Atom>,
    members: Vec<Mask>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemRepr {
    universe: Vec<Atom>,
    sets: Vec<Vec<Atom>>,
}

impl TryFrom<SystemRepr> for SetSystem {
    type Error = Error;
    fn try_from(r: SystemRepr) -> Result<Self> {
        SetSystem::new(r.universe, r.sets)
    }
}

impl From<SetSystem> for SystemRepr {
    fn from(s: SetSystem) -> Self {
        SystemRepr {
            sets: s.members().collect(),
            universe: s.universe,
        }
    }
}

fn member_key(m: Mask) -> (u32, Mask) {
    (m.count_ones(), m)
}

pub(crate) fn check_universe(universe: &[Atom]) -> Result<()> {
    if universe.len() > MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge {
            size: universe.len(),
            bound: MAX_UNIVERSE,
        });
    }
    Ok(())
}

/// Sorts a universe, rejecting duplicates.
pub(crate) fn sorted_universe(universe: Vec<Atom>) -> Result<Vec<Atom>> {
    let mut u = universe;
    u.sort();
    if let Some(w) = u.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateUniverseElement(w[0].clone()));
    }
    check_universe(&u)?;
    Ok(u)
}

impl SetSystem {
    /// Builds a canonical set system. Every member element must occur in the
    /// universe and the universe must not repeat an atom.
    pub fn new<U, M, S>(universe: U, members: M) -> Result<Self>
    where
        U: IntoIterator<Item = Atom>,
        M: IntoIterator<Item = S>,
        S: IntoIterator<Item = Atom>,
    {
        let universe = sorted_universe(universe.into_iter().collect())?;
        let mut masks = Vec::new();
        for m in members {
            let mut mask = 0;
            for a in m {
                let i = universe
                    .binary_search(&a)
                    .map_err(|_| Error::ElementOutsideUniverse(a.clone()))?;
                mask |= mask::bit(i);
            }
            masks.push(mask);
        }
        Ok(Self::from_sorted(universe, masks))
    }

    /// The system with no members over the empty universe.
    pub fn empty() -> Self {
        SetSystem {
            universe: Vec::new(),
            members: Vec::new(),
        }
    }

    /// Members given as masks over `universe` in the order listed. The
    /// universe is sorted and the masks remapped accordingly.
    pub fn from_masks(universe: Vec<Atom>, masks: impl IntoIterator<Item = Mask>) -> Result<Self> {
        check_universe(&universe)?;
        let mut order: Vec<usize> = (0..universe.len()).collect();
        order.sort_by(|&a, &b| universe[a].cmp(&universe[b]));
        if let Some(w) = order.windows(2).find(|w| universe[w[0]] == universe[w[1]]) {
            return Err(Error::DuplicateUniverseElement(universe[w[0]].clone()));
        }
        let mut new_pos = vec![0; universe.len()];
        for (new, &old) in order.iter().enumerate() {
            new_pos[old] = new;
        }
        let extra = !mask::full(universe.len());
        let mut remapped = Vec::new();
        for m in masks {
            if m & extra != 0 {
                return Err(Error::UniverseTooLarge {
                    size: 64 - m.leading_zeros() as usize,
                    bound: universe.len(),
                });
            }
            remapped.push(mask::ones(m).fold(0, |acc, i| acc | mask::bit(new_pos[i])));
        }
        let sorted = order.iter().map(|&i| universe[i].clone()).collect();
        Ok(Self::from_sorted(sorted, remapped))
    }

    /// `universe` must already be sorted and duplicate-free.
    pub(crate) fn from_sorted(universe: Vec<Atom>, masks: impl IntoIterator<Item = Mask>) -> Self {
        let mut members: Vec<Mask> = masks.into_iter().collect();
        members.sort_by_key(|&m| member_key(m));
        members.dedup();
        SetSystem { universe, members }
    }

    pub fn universe(&self) -> &[Atom] {
        &self.universe
    }

    pub fn masks(&self) -> &[Mask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, a: &Atom) -> Option<usize> {
        self.universe.binary_search(a).ok()
    }

    pub fn mask_of<'a>(&self, atoms: impl IntoIterator<Item = &'a Atom>) -> Result<Mask> {
        atoms.into_iter().try_fold(0, |acc, a| {
            self.index_of(a)
                .map(|i| acc | mask::bit(i))
                .ok_or_else(|| Error::ElementOutsideUniverse(a.clone()))
        })
    }

    pub fn atoms_of(&self, m: Mask) -> Vec<Atom> {
        mask::ones(m).map(|i| self.universe[i].clone()).collect()
    }

    /// Members as sorted atom lists, in canonical member order.
    pub fn members(&self) -> impl Iterator<Item = Vec<Atom>> + '_ {
        self.members.iter().map(|&m| self.atoms_of(m))
    }

    /// The family as a set of sorted atom lists; independent of the universe.
    pub fn family(&self) -> BTreeSet<Vec<Atom>> {
        self.members().collect()
    }

    pub fn contains_member(&self, atoms: &[Atom]) -> bool {
        match self.mask_of(atoms) {
            Ok(m) => self.members.binary_search_by_key(&member_key(m), |&x| member_key(x)).is_ok(),
            Err(_) => false,
        }
    }

    pub fn support_mask(&self) -> Mask {
        self.members.iter().fold(0, |acc, &m| acc | m)
    }

    /// Union of all members.
    pub fn support(&self) -> Vec<Atom> {
        self.atoms_of(self.support_mask())
    }

    /// Same family over the universe shrunk to its support.
    pub fn restrict_to_support(&self) -> SetSystem {
        let support = self.support_mask();
        let universe: Vec<Atom> = self.atoms_of(support);
        let masks = self.members.iter().map(|&m| compress(m, support));
        Self::from_sorted(universe, masks)
    }

    /// Same family over a different universe, which must contain the support.
    pub fn with_universe(&self, universe: Vec<Atom>) -> Result<SetSystem> {
        let universe = sorted_universe(universe)?;
        let remap: Vec<usize> = self
            .universe
            .iter()
            .map(|a| universe.binary_search(a).unwrap_or(usize::MAX))
            .collect();
        let mut masks = Vec::with_capacity(self.members.len());
        for &m in &self.members {
            let mut out = 0;
            for i in mask::ones(m) {
                if remap[i] == usize::MAX {
                    return Err(Error::ElementOutsideUniverse(self.universe[i].clone()));
                }
                out |= mask::bit(remap[i]);
            }
            masks.push(out);
        }
        Ok(Self::from_sorted(universe, masks))
    }

    /// Applies an injective relabeling to every atom.
    pub fn relabel(&self, f: impl Fn(&Atom) -> Atom) -> Result<SetSystem> {
        let universe: Vec<Atom> = self.universe.iter().map(f).collect();
        Self::from_masks(universe, self.members.iter().copied())
    }

    pub fn is_subfamily_of(&self, other: &SetSystem) -> bool {
        self.members().all(|m| other.contains_member(&m))
    }

    /// Adds members (as masks over this universe).
    pub fn with_members(&self, extra: impl IntoIterator<Item = Mask>) -> SetSystem {
        Self::from_sorted(
            self.universe.clone(),
            self.members.iter().copied().chain(extra),
        )
    }
}

/// Packs the bits of `m` selected by `support` into the low bits.
pub(crate) fn compress(m: Mask, support: Mask) -> Mask {
    mask::ones(support)
        .enumerate()
        .filter(|&(_, i)| m & mask::bit(i) != 0)
        .fold(0, |acc, (k, _)| acc | mask::bit(k))
}

pub(crate) fn fmt_set(f: &mut fmt::Formatter<'_>, atoms: &[Atom]) -> fmt::Result {
    if atoms.is_empty() {
        return write!(f, "∅");
    }
    write!(f, "{{")?;
    for (i, a) in atoms.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{a}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            fmt_set(f, &m)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: usize) -> Atom {
        Atom::num(i)
    }

    #[test]
    fn duplicates_are_removed() {
        let s = SetSystem::new(Atom::range(2), vec![vec![n(0)], vec![n(0)]]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.members().next().unwrap(), vec![n(0)]);
    }

    #[test]
    fn best_possible_example_builds() {
        let s = SetSystem::new(
            Atom::range(3),
            vec![vec![], vec![n(0)], vec![n(0), n(1), n(2)]],
        )
        .unwrap();
        assert_eq!(s.to_string(), "{∅, {0}, {0,1,2}}");
    }

    #[test]
    fn empty_system() {
        let s = SetSystem::new(Vec::new(), Vec::<Vec<Atom>>::new()).unwrap();
        assert!(s.is_empty());
        assert_eq!(s, SetSystem::empty());
    }

    #[test]
    fn errors() {
        assert_eq!(
            SetSystem::new(Atom::range(1), vec![vec![n(3)]]),
            Err(Error::ElementOutsideUniverse(n(3)))
        );
        assert_eq!(
            SetSystem::new(vec![n(0), n(0)], Vec::<Vec<Atom>>::new()),
            Err(Error::DuplicateUniverseElement(n(0)))
        );
        assert!(matches!(
            SetSystem::new(Atom::range(65), Vec::<Vec<Atom>>::new()),
            Err(Error::UniverseTooLarge { .. })
        ));
    }

    #[test]
    fn permuted_inputs_serialize_identically() {
        let a = SetSystem::new(
            vec![n(2), n(0), n(1)],
            vec![vec![n(2), n(0)], vec![n(1)], vec![]],
        )
        .unwrap();
        let b = SetSystem::new(
            vec![n(1), n(2), n(0)],
            vec![vec![], vec![n(0), n(2)], vec![n(1)], vec![n(1)]],
        )
        .unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn json_schema() {
        let s: SetSystem =
            serde_json::from_str(r#"{"universe":[0,1,2],"sets":[[],["0"],[0,1,2]]}"#).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"universe":["0","1","2"],"sets":[[],["0"],["0","1","2"]]}"#
        );
        let bad = serde_json::from_str::<SetSystem>(r#"{"universe":[0],"sets":[[5]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn from_masks_remaps() {
        let s = SetSystem::from_masks(vec![n(1), n(0)], [0b01, 0b11]).unwrap();
        assert_eq!(s.family(), [vec![n(1)], vec![n(0), n(1)]].into_iter().collect());
    }

    #[test]
    fn restrict_to_support_drops_unused() {
        let s = SetSystem::new(Atom::range(4), vec![vec![n(1)], vec![n(3)]]).unwrap();
        let r = s.restrict_to_support();
        assert_eq!(r.universe(), &[n(1), n(3)]);
        assert_eq!(r.family(), s.family());
    }
}
