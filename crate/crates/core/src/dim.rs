//! The order type `dim` of a finite set system: the rank of its tree of
//! production sequences.
//!
//! A production sequence `⟨(t₀,L₁),…,(t_{m−1},L_m)⟩` presents examples one at
//! a time; each hypothesis `Lᵢ` covers every example so far and the next
//! example is fresh (`tᵢ ∉ Lᵢ`).
//!
//! Whether a node can be extended, and by what, depends only on the set `S`
//! of examples presented so far and the latest hypothesis. Maximizing over
//! the hypothesis first, a node's rank only depends on `S`:
//!
//! ```text
//! g(S) = 1 + max { g(S ∪ {t}) : t ∉ ⋂{L ∈ 𝓛 : S ⊆ L}, S ∪ {t} ⊆ some L ∈ 𝓛 }
//! dim 𝓛 = max { g({t}) : t in some member }
//! ```
//!
//! so the search memoizes on a bit mask of `S`.

use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::mask::{self, Mask};
use crate::system::{compress, SetSystem};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductionStep {
    pub example: Atom,
    pub hypothesis: Vec<Atom>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProductionSequence {
    pub steps: Vec<ProductionStep>,
}

impl ProductionSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Checks both defining conditions. Every hypothesis must be a member of `l`.
pub fn is_production_sequence(l: &SetSystem, seq: &ProductionSequence) -> Result<bool> {
    let mut seen: Vec<&Atom> = Vec::new();
    for (i, step) in seq.steps.iter().enumerate() {
        if !l.contains_member(&step.hypothesis) {
            return Err(Error::HypothesisNotInSystem(step.hypothesis.clone()));
        }
        if seen.contains(&&step.example) {
            return Ok(false);
        }
        seen.push(&step.example);
        if !seen.iter().all(|t| step.hypothesis.contains(t)) {
            return Ok(false);
        }
        if let Some(next) = seq.steps.get(i + 1) {
            if step.hypothesis.contains(&next.example) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Search {
    members: Vec<Mask>,
    width: usize,
    memo: HashMap<Mask, u32>,
}

impl Search {
    fn new(l: &SetSystem) -> Self {
        let sup = l.support_mask();
        let members = l
            .masks()
            .iter()
            .filter(|&&m| m != 0)
            .map(|&m| compress(m, sup))
            .collect();
        Search {
            members,
            width: sup.count_ones() as usize,
            memo: HashMap::new(),
        }
    }

    /// Intersection of the members containing `s`, if any.
    fn closure(&self, s: Mask) -> Option<Mask> {
        self.members
            .iter()
            .filter(|&&m| mask::is_subset(s, m))
            .fold(None, |acc: Option<Mask>, &m| Some(acc.map_or(m, |a| a & m)))
    }

    fn moves(&self, s: Mask) -> Vec<Mask> {
        let Some(c) = self.closure(s) else {
            return Vec::new();
        };
        mask::ones(mask::full(self.width) & !c)
            .map(|t| s | mask::bit(t))
            .filter(|&next| self.closure(next).is_some())
            .collect()
    }

    fn rank(&mut self, s: Mask) -> u32 {
        if let Some(&r) = self.memo.get(&s) {
            return r;
        }
        let best = self
            .moves(s)
            .into_iter()
            .map(|next| self.rank(next))
            .max()
            .unwrap_or(0);
        self.memo.insert(s, best + 1);
        best + 1
    }

    fn starts(&self) -> impl Iterator<Item = Mask> + '_ {
        (0..self.width)
            .map(mask::bit)
            .filter(|&t| self.closure(t).is_some())
    }

    fn dim(&mut self) -> u32 {
        let starts: Vec<Mask> = self.starts().collect();
        starts.into_iter().map(|t| self.rank(t)).max().unwrap_or(0)
    }
}

/// `dim 𝓛`. Members equal to `∅` never take part; a system without a
/// nonempty member has dimension 0.
pub fn dim(l: &SetSystem) -> usize {
    Search::new(l).dim() as usize
}

/// A production sequence of length `dim 𝓛`.
pub fn longest_production_sequence(l: &SetSystem) -> ProductionSequence {
    let mut search = Search::new(l);
    let target = search.dim();
    if target == 0 {
        return ProductionSequence::default();
    }
    let sup = l.support_mask();
    let support = l.atoms_of(sup);
    let expand = |m: Mask| -> Vec<Atom> { mask::ones(m).map(|i| support[i].clone()).collect() };

    let starts: Vec<Mask> = search.starts().collect();
    let mut s = starts
        .into_iter()
        .find(|&t| search.rank(t) == target)
        .expect("a start attains dim");
    let mut examples = vec![s.trailing_zeros() as usize];
    let mut hypotheses: Vec<Mask> = Vec::new();
    loop {
        let r = search.rank(s);
        let next = search
            .moves(s)
            .into_iter()
            .find(|&n| search.rank(n) + 1 == r);
        match next {
            Some(n) => {
                let t = (n & !s).trailing_zeros() as usize;
                let hyp = *search
                    .members
                    .iter()
                    .find(|&&m| mask::is_subset(s, m) && m & mask::bit(t) == 0)
                    .expect("a hypothesis excludes the next example");
                hypotheses.push(hyp);
                examples.push(t);
                s = n;
            }
            None => {
                let hyp = *search
                    .members
                    .iter()
                    .find(|&&m| mask::is_subset(s, m))
                    .expect("covered");
                hypotheses.push(hyp);
                break;
            }
        }
    }
    ProductionSequence {
        steps: examples
            .iter()
            .zip(&hypotheses)
            .map(|(&t, &h)| ProductionStep {
                example: support[t].clone(),
                hypothesis: expand(h),
            })
            .collect(),
    }
}
